#include "plansep/planar_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include <json.hpp>

namespace plansep {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::SchemaViolation: return "SchemaViolation";
        case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case Errc::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case Errc::BadOuterWitness: return "BadOuterWitness";
        case Errc::InfeasibleParams: return "InfeasibleParams";
        case Errc::BitBudgetExceeded: return "BitBudgetExceeded";
        case Errc::RoundLimitExceeded: return "RoundLimitExceeded";
        case Errc::OverflowBeyondBudget: return "OverflowBeyondBudget";
        case Errc::NodeNotInPart: return "NodeNotInPart";
        case Errc::MultipleSources: return "MultipleSources";
        case Errc::DisconnectedPart: return "DisconnectedPart";
        case Errc::CrossPartQuery: return "CrossPartQuery";
        case Errc::IsTreeEdge: return "IsTreeEdge";
        case Errc::NotALeaf: return "NotALeaf";
        case Errc::NotInside: return "NotInside";
        case Errc::EmptySet: return "EmptySet";
        case Errc::PreconditionNotContained: return "PreconditionNotContained";
        case Errc::InternalWitnessMismatch: return "InternalWitnessMismatch";
        case Errc::NotASeparatorInput: return "NotASeparatorInput";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotACycle: return "NotACycle";
        case Errc::NotSpanning: return "NotSpanning";
        case Errc::IoError: return "IoError";
        case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

namespace {

int face_orbits(const std::vector<std::size_t>& darts, const PlanarGraph& g, std::vector<int>& face,
                int next_id) {
    int made = 0;
    for (std::size_t k : darts) {
        if (face[k] >= 0) continue;
        std::size_t d = k;
        do {
            face[d] = next_id + made;
            d = g.face_next(d);
        } while (d != k);
        ++made;
    }
    return made;
}

}  // namespace

PlanarGraph PlanarGraph::build(std::size_t n, std::vector<std::vector<NodeId>> rotations, Dart outer,
                               std::optional<std::vector<std::array<double, 2>>> coords) {
    if (rotations.size() != n) throw Error(Errc::SchemaViolation, "rotation count differs from n");
    if (coords && coords->size() != n) throw Error(Errc::SchemaViolation, "coordinate count differs from n");
    PlanarGraph g;
    g.rot_ = std::move(rotations);
    g.coords_ = std::move(coords);
    g.sorted_.resize(n);
    g.off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& s = g.sorted_[v];
        for (int i = 0; i < static_cast<int>(g.rot_[v].size()); ++i) {
            NodeId u = g.rot_[v][static_cast<std::size_t>(i)];
            if (u < 0 || static_cast<std::size_t>(u) >= n)
                throw Error(Errc::SchemaViolation, "neighbor id out of range at node " + std::to_string(v));
            if (static_cast<std::size_t>(u) == v)
                throw Error(Errc::SchemaViolation, "self-loop at node " + std::to_string(v));
            s.emplace_back(u, i);
        }
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i].first == s[i - 1].first)
                throw Error(Errc::SchemaViolation, "duplicate edge " + std::to_string(v) + "-" +
                                                       std::to_string(s[i].first));
        g.off_[v + 1] = g.off_[v] + g.rot_[v].size();
    }
    std::size_t total = g.off_[n];
    g.head_.resize(total);
    g.owner_.resize(total);
    g.twin_.resize(total);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < g.rot_[v].size(); ++i) {
            g.head_[g.off_[v] + i] = g.rot_[v][i];
            g.owner_[g.off_[v] + i] = static_cast<NodeId>(v);
        }
    for (std::size_t k = 0; k < total; ++k) {
        NodeId u = g.owner_[k], v = g.head_[k];
        int back = g.index_of(v, u);
        if (back < 0)
            throw Error(Errc::AsymmetricAdjacency,
                        std::to_string(u) + " lists " + std::to_string(v) + " but not conversely");
        g.twin_[k] = g.off_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(back);
    }

    // Euler check per component.
    int ncomp = 0;
    std::vector<int> comp = components(g, &ncomp);
    std::vector<std::vector<std::size_t>> darts_of(static_cast<std::size_t>(ncomp));
    std::vector<long> verts(static_cast<std::size_t>(ncomp), 0);
    for (std::size_t v = 0; v < n; ++v) ++verts[static_cast<std::size_t>(comp[v])];
    for (std::size_t k = 0; k < total; ++k)
        darts_of[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.owner_[k])])].push_back(k);
    std::vector<int> face(total, -1);
    int fid = 0;
    for (int c = 0; c < ncomp; ++c) {
        const auto& ds = darts_of[static_cast<std::size_t>(c)];
        if (ds.empty()) continue;
        int f = face_orbits(ds, g, face, fid);
        fid += f;
        long e = static_cast<long>(ds.size() / 2);
        if (verts[static_cast<std::size_t>(c)] - e + f != 2)
            throw Error(Errc::NotPlanarEmbedding, "Euler check fails on component " + std::to_string(c));
    }

    if (outer.from < 0 || static_cast<std::size_t>(outer.from) >= n || outer.to < 0 ||
        static_cast<std::size_t>(outer.to) >= n)
        throw Error(Errc::BadOuterWitness, "witness endpoint out of range");
    if (outer.from == outer.to) {
        if (g.degree(outer.from) != 0) throw Error(Errc::BadOuterWitness, "degenerate witness on non-isolated node");
    } else if (g.index_of(outer.from, outer.to) < 0) {
        throw Error(Errc::BadOuterWitness, "witness is not an edge");
    }
    g.outer_ = outer;
    return g;
}

int PlanarGraph::index_of(NodeId v, NodeId u) const {
    const auto& s = sorted_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(u, -1));
    if (it == s.end() || it->first != u) return -1;
    return it->second;
}

NodeId PlanarGraph::cw_next(NodeId v, NodeId u) const {
    const auto& r = rotation(v);
    int i = index_of(v, u);
    return r[(static_cast<std::size_t>(i) + 1) % r.size()];
}

NodeId PlanarGraph::ccw_next(NodeId v, NodeId u) const {
    const auto& r = rotation(v);
    int i = index_of(v, u);
    return r[(static_cast<std::size_t>(i) + r.size() - 1) % r.size()];
}

std::size_t PlanarGraph::face_next(std::size_t k) const {
    std::size_t t = twin_[k];
    NodeId v = head_[k];
    std::size_t d = static_cast<std::size_t>(degree(v));
    std::size_t i = t - off_[static_cast<std::size_t>(v)];
    return off_[static_cast<std::size_t>(v)] + (i + 1) % d;
}

std::size_t PlanarGraph::dart(NodeId u, NodeId v) const {
    int i = index_of(u, v);
    if (i < 0) throw Error(Errc::SchemaViolation, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return off_[static_cast<std::size_t>(u)] + static_cast<std::size_t>(i);
}

std::vector<int> components(const PlanarGraph& g, int* count) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    std::vector<NodeId> stack;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(static_cast<NodeId>(s));
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId u : g.rotation(v))
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

std::vector<int> dart_faces(const PlanarGraph& g, int* face_count) {
    std::vector<int> face(g.dart_count(), -1);
    std::vector<std::size_t> all(g.dart_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    int f = face_orbits(all, g, face, 0);
    if (face_count) *face_count = f;
    return face;
}

std::vector<Face> trace_faces(const PlanarGraph& g) {
    int count = 0;
    std::vector<int> face = dart_faces(g, &count);
    std::vector<Face> out(static_cast<std::size_t>(count));
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    for (std::size_t k = 0; k < g.dart_count(); ++k) {
        int f = face[k];
        if (seen[static_cast<std::size_t>(f)]) continue;
        seen[static_cast<std::size_t>(f)] = 1;
        std::size_t d = k;
        do {
            out[static_cast<std::size_t>(f)].walk.push_back(g.owner(d));
            d = g.face_next(d);
        } while (d != k);
    }
    Dart w = g.outer();
    int outer_face = (w.from != w.to) ? face[g.dart(w.from, w.to)] : -1;
    if (outer_face >= 0) out[static_cast<std::size_t>(outer_face)].is_outer = true;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (g.degree(static_cast<NodeId>(v)) == 0) {
            Face f;
            f.walk = {static_cast<NodeId>(v)};
            f.is_outer = (w.from == static_cast<NodeId>(v));
            out.push_back(std::move(f));
        }
    return out;
}

PlanarGraph insert_edge(const PlanarGraph& g, NodeId u, NodeId u_after, NodeId v, NodeId v_after,
                        Dart outer) {
    if (g.has_edge(u, v)) throw Error(Errc::NotPlanarEmbedding, "edge already present");
    std::vector<std::vector<NodeId>> rot(g.n());
    for (std::size_t x = 0; x < g.n(); ++x) rot[x] = g.rotation(static_cast<NodeId>(x));
    auto put = [&](NodeId a, NodeId after, NodeId b) {
        auto& r = rot[static_cast<std::size_t>(a)];
        if (after == kNone) {
            if (!r.empty()) throw Error(Errc::NotPlanarEmbedding, "missing corner at non-isolated node");
            r.push_back(b);
            return;
        }
        auto it = std::find(r.begin(), r.end(), after);
        if (it == r.end()) throw Error(Errc::NotPlanarEmbedding, "corner reference is not a neighbor");
        r.insert(it + 1, b);
    };
    put(u, u_after, v);
    put(v, v_after, u);
    auto coords = g.coords();
    return PlanarGraph::build(g.n(), std::move(rot), outer, std::move(coords));
}

PlanarGraph attach_leaf(const PlanarGraph& g, NodeId v, NodeId v_after) {
    std::vector<std::vector<NodeId>> rot(g.n() + 1);
    for (std::size_t x = 0; x < g.n(); ++x) rot[x] = g.rotation(static_cast<NodeId>(x));
    NodeId leaf = static_cast<NodeId>(g.n());
    auto& r = rot[static_cast<std::size_t>(v)];
    if (v_after == kNone) {
        r.push_back(leaf);
    } else {
        auto it = std::find(r.begin(), r.end(), v_after);
        if (it == r.end()) throw Error(Errc::NotPlanarEmbedding, "corner reference is not a neighbor");
        r.insert(it + 1, leaf);
    }
    rot.back() = {v};
    return PlanarGraph::build(g.n() + 1, std::move(rot), Dart{leaf, v});
}

Induced induced(const PlanarGraph& g, const std::vector<NodeId>& nodes, Dart outer) {
    Induced out;
    out.to_sub.assign(g.n(), kNone);
    out.to_global = nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) out.to_sub[static_cast<std::size_t>(nodes[i])] = static_cast<NodeId>(i);
    std::vector<std::vector<NodeId>> rot(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (NodeId u : g.rotation(nodes[i]))
            if (out.to_sub[static_cast<std::size_t>(u)] != kNone) rot[i].push_back(out.to_sub[static_cast<std::size_t>(u)]);
    Dart w{out.to_sub[static_cast<std::size_t>(outer.from)], out.to_sub[static_cast<std::size_t>(outer.to)]};
    out.graph = PlanarGraph::build(nodes.size(), std::move(rot), w);
    return out;
}

Partition Partition::single(std::size_t n) {
    Partition p;
    p.part_of.assign(n, 0);
    p.parts.resize(1);
    for (std::size_t v = 0; v < n; ++v) p.parts[0].push_back(static_cast<NodeId>(v));
    return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    Partition p;
    p.part_of = labels;
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    p.parts.resize(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] >= 0) p.parts[static_cast<std::size_t>(labels[v])].push_back(static_cast<NodeId>(v));
    for (const auto& part : p.parts)
        if (part.empty()) throw Error(Errc::SchemaViolation, "empty part label");
    return p;
}

void validate_partition(const PlanarGraph& g, const Partition& p) {
    if (p.part_of.size() != g.n()) throw Error(Errc::SchemaViolation, "partition size differs from n");
    std::vector<char> seen(g.n(), 0);
    for (int i = 0; i < p.count(); ++i) {
        const auto& part = p.parts[static_cast<std::size_t>(i)];
        if (part.empty()) throw Error(Errc::SchemaViolation, "empty part");
        std::vector<NodeId> stack{part.front()};
        seen[static_cast<std::size_t>(part.front())] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId u : g.rotation(v))
                if (!seen[static_cast<std::size_t>(u)] && p.part_of[static_cast<std::size_t>(u)] == i) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != part.size()) throw Error(Errc::DisconnectedPart, "part " + std::to_string(i));
    }
}

std::vector<int> bfs_distances(const PlanarGraph& g, NodeId src) {
    std::vector<int> dist(g.n(), -1);
    std::vector<NodeId> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
        NodeId v = q[h];
        for (NodeId u : g.rotation(v))
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

int diameter(const PlanarGraph& g) {
    int best = 0;
    for (std::size_t s = 0; s < g.n(); ++s)
        for (int d : bfs_distances(g, static_cast<NodeId>(s))) best = std::max(best, d);
    return best;
}

Partition quadrant_partition(const PlanarGraph& g) {
    std::vector<int> labels(g.n(), 0);
    if (g.coords() && g.n() >= 4) {
        const auto& c = *g.coords();
        double x0 = c[0][0], x1 = c[0][0], y0 = c[0][1], y1 = c[0][1];
        for (const auto& p : c) {
            x0 = std::min(x0, p[0]);
            x1 = std::max(x1, p[0]);
            y0 = std::min(y0, p[1]);
            y1 = std::max(y1, p[1]);
        }
        double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
        for (std::size_t v = 0; v < g.n(); ++v)
            labels[v] = (c[v][0] < mx ? 0 : 1) + (c[v][1] < my ? 2 : 0);
        Partition p = Partition::from_labels(labels);
        try {
            validate_partition(g, p);
            return p;
        } catch (const Error&) {
        }
    }
    // Multi-source BFS cells around up to four spread-out seeds.
    std::vector<NodeId> seeds{0};
    std::vector<int> best(g.n(), 1 << 30);
    while (seeds.size() < std::min<std::size_t>(4, g.n())) {
        auto d = bfs_distances(g, seeds.back());
        for (std::size_t v = 0; v < g.n(); ++v) best[v] = std::min(best[v], d[v]);
        NodeId far = 0;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (best[v] > best[static_cast<std::size_t>(far)]) far = static_cast<NodeId>(v);
        seeds.push_back(far);
    }
    std::fill(labels.begin(), labels.end(), -1);
    std::vector<NodeId> q;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        labels[static_cast<std::size_t>(seeds[i])] = static_cast<int>(i);
        q.push_back(seeds[i]);
    }
    for (std::size_t h = 0; h < q.size(); ++h)
        for (NodeId u : g.rotation(q[h]))
            if (labels[static_cast<std::size_t>(u)] < 0) {
                labels[static_cast<std::size_t>(u)] = labels[static_cast<std::size_t>(q[h])];
                q.push_back(u);
            }
    return Partition::from_labels(labels);
}

// ---------------------------------------------------------------- generators

namespace {

using Coords = std::vector<std::array<double, 2>>;

// Clockwise rotations from coordinates; the witness is the first dart out of
// node 0 whose face has non-positive signed area (the outer face).
PlanarGraph from_geometry(int n, const std::vector<std::pair<NodeId, NodeId>>& edges, Coords coords) {
    std::vector<std::vector<NodeId>> rot(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        rot[static_cast<std::size_t>(a)].push_back(b);
        rot[static_cast<std::size_t>(b)].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        auto& r = rot[static_cast<std::size_t>(v)];
        auto ang = [&](NodeId u) {
            return std::atan2(coords[static_cast<std::size_t>(u)][1] - coords[static_cast<std::size_t>(v)][1],
                              coords[static_cast<std::size_t>(u)][0] - coords[static_cast<std::size_t>(v)][0]);
        };
        std::sort(r.begin(), r.end(), [&](NodeId a, NodeId b) { return ang(a) > ang(b); });
    }
    Dart tmp = rot[0].empty() ? Dart{0, 0} : Dart{0, rot[0][0]};
    PlanarGraph g = PlanarGraph::build(static_cast<std::size_t>(n), rot, tmp, coords);
    if (g.m() == 0) return g;
    int fc = 0;
    auto face = dart_faces(g, &fc);
    std::vector<double> area(static_cast<std::size_t>(fc), 0.0);
    for (std::size_t k = 0; k < g.dart_count(); ++k) {
        const auto& p = coords[static_cast<std::size_t>(g.owner(k))];
        const auto& q = coords[static_cast<std::size_t>(g.head(k))];
        area[static_cast<std::size_t>(face[k])] += p[0] * q[1] - q[0] * p[1];
    }
    for (std::size_t i = 0; i < rot[0].size(); ++i) {
        std::size_t k = g.offset(0) + i;
        if (area[static_cast<std::size_t>(face[k])] <= 1e-9) {
            Dart w{0, g.head(k)};
            return PlanarGraph::build(static_cast<std::size_t>(n), std::move(rot), w, std::move(coords));
        }
    }
    throw Error(Errc::InfeasibleParams, "node 0 is not on the outer face");
}

// Mutable rotation system used by the random generators.
struct Rot {
    std::vector<std::vector<NodeId>> r;
    void insert_after(NodeId v, NodeId ref, NodeId x) {
        auto& rv = r[static_cast<std::size_t>(v)];
        auto it = std::find(rv.begin(), rv.end(), ref);
        rv.insert(it + 1, x);
    }
    void erase(NodeId v, NodeId x) {
        auto& rv = r[static_cast<std::size_t>(v)];
        rv.erase(std::find(rv.begin(), rv.end(), x));
    }
    bool adjacent(NodeId a, NodeId b) const {
        const auto& ra = r[static_cast<std::size_t>(a)];
        return std::find(ra.begin(), ra.end(), b) != ra.end();
    }
    NodeId cw_next(NodeId v, NodeId u) const {
        const auto& rv = r[static_cast<std::size_t>(v)];
        auto it = std::find(rv.begin(), rv.end(), u);
        ++it;
        return it == rv.end() ? rv.front() : *it;
    }
};

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Rot triangulation_rot(int n, std::mt19937_64& rng) {
    Rot t;
    t.r.resize(static_cast<std::size_t>(n));
    // Outer face walk 0 -> 1 -> 2; the inner face is 0 -> 2 -> 1.
    t.r[0] = {1, 2};
    t.r[1] = {2, 0};
    t.r[2] = {0, 1};
    std::vector<std::array<NodeId, 3>> faces{{0, 2, 1}};
    for (NodeId x = 3; x < n; ++x) {
        std::size_t i = static_cast<std::size_t>(draw(rng, faces.size()));
        auto [a, b, c] = faces[i];
        t.insert_after(a, c, x);
        t.insert_after(b, a, x);
        t.insert_after(c, b, x);
        t.r[static_cast<std::size_t>(x)] = {a, c, b};
        faces[i] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }
    // Random flips away from the outer triangle spread the degrees out.
    auto outer_edge = [](NodeId a, NodeId b) { return a < 3 && b < 3; };
    long flips = 4L * n;
    for (long it = 0; it < flips && n > 4; ++it) {
        NodeId a = static_cast<NodeId>(draw(rng, static_cast<std::uint64_t>(n)));
        const auto& ra = t.r[static_cast<std::size_t>(a)];
        NodeId b = ra[static_cast<std::size_t>(draw(rng, ra.size()))];
        if (outer_edge(a, b)) continue;
        NodeId c = t.cw_next(b, a);
        NodeId d = t.cw_next(a, b);
        if (c == d || t.adjacent(c, d)) continue;
        if (t.r[static_cast<std::size_t>(a)].size() <= 3 || t.r[static_cast<std::size_t>(b)].size() <= 3) continue;
        t.erase(a, b);
        t.erase(b, a);
        t.insert_after(c, b, d);
        t.insert_after(d, a, c);
    }
    return t;
}

}  // namespace

namespace gen {

PlanarGraph grid(int k) {
    if (k < 1) throw Error(Errc::InfeasibleParams, "grid side must be positive");
    int n = k * k;
    std::vector<std::pair<NodeId, NodeId>> edges;
    Coords coords(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            NodeId v = i * k + j;
            coords[static_cast<std::size_t>(v)] = {static_cast<double>(j), static_cast<double>(-i)};
            if (j + 1 < k) edges.emplace_back(v, v + 1);
            if (i + 1 < k) edges.emplace_back(v, v + k);
        }
    return from_geometry(n, edges, std::move(coords));
}

PlanarGraph cycle(int n) {
    if (n < 3) throw Error(Errc::InfeasibleParams, "cycle needs at least 3 nodes");
    std::vector<std::pair<NodeId, NodeId>> edges;
    Coords coords(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double a = pi + 2 * pi * i / n;
        coords[static_cast<std::size_t>(i)] = {std::cos(a), std::sin(a)};
        edges.emplace_back(i, (i + 1) % n);
    }
    return from_geometry(n, edges, std::move(coords));
}

PlanarGraph path(int n) {
    if (n < 1) throw Error(Errc::InfeasibleParams, "path needs at least 1 node");
    std::vector<std::pair<NodeId, NodeId>> edges;
    Coords coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        coords[static_cast<std::size_t>(i)] = {static_cast<double>(i), 0.0};
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return from_geometry(n, edges, std::move(coords));
}

PlanarGraph star(int n) {
    if (n < 1) throw Error(Errc::InfeasibleParams, "star needs at least 1 node");
    std::vector<std::pair<NodeId, NodeId>> edges;
    Coords coords(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    coords[0] = {0.0, 0.0};
    for (int i = 1; i < n; ++i) {
        double a = 2 * pi * i / n;
        coords[static_cast<std::size_t>(i)] = {std::cos(a), std::sin(a)};
        edges.emplace_back(0, i);
    }
    return from_geometry(n, edges, std::move(coords));
}

PlanarGraph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::InfeasibleParams, "tree needs at least 1 node");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<NodeId>> rot(static_cast<std::size_t>(n));
    for (NodeId v = 1; v < n; ++v) {
        NodeId p = static_cast<NodeId>(draw(rng, static_cast<std::uint64_t>(v)));
        auto& rp = rot[static_cast<std::size_t>(p)];
        rp.insert(rp.begin() + static_cast<long>(draw(rng, rp.size() + 1)), v);
        rot[static_cast<std::size_t>(v)].push_back(p);
    }
    Dart w = n == 1 ? Dart{0, 0} : Dart{0, rot[0][0]};
    return PlanarGraph::build(static_cast<std::size_t>(n), std::move(rot), w);
}

PlanarGraph random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw Error(Errc::InfeasibleParams, "triangulation needs at least 3 nodes");
    std::mt19937_64 rng(seed);
    Rot t = triangulation_rot(n, rng);
    return PlanarGraph::build(static_cast<std::size_t>(n), std::move(t.r), Dart{0, 1});
}

PlanarGraph random_planar(int n, int m, std::uint64_t seed) {
    if (n < 3) throw Error(Errc::InfeasibleParams, "random planar graph needs at least 3 nodes");
    if (m > 3 * n - 6 || m < n - 1) throw Error(Errc::InfeasibleParams, "edge count outside [n-1, 3n-6]");
    std::mt19937_64 rng(seed);
    Rot t = triangulation_rot(n, rng);
    std::vector<NodeId> ring0 = t.r[0];  // node 0's rotation before deletions
    long edges = 3L * n - 6;
    std::vector<std::pair<NodeId, NodeId>> pool;
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : t.r[static_cast<std::size_t>(v)])
            if (v < u) pool.emplace_back(v, u);
    auto connected_without = [&](NodeId a, NodeId b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<NodeId> st{a};
        seen[static_cast<std::size_t>(a)] = 1;
        while (!st.empty()) {
            NodeId x = st.back();
            st.pop_back();
            for (NodeId y : t.r[static_cast<std::size_t>(x)]) {
                if ((x == a && y == b) || (x == b && y == a)) continue;
                if (!seen[static_cast<std::size_t>(y)]) {
                    if (y == b) return true;
                    seen[static_cast<std::size_t>(y)] = 1;
                    st.push_back(y);
                }
            }
        }
        return false;
    };
    while (edges > m && !pool.empty()) {
        std::size_t i = static_cast<std::size_t>(draw(rng, pool.size()));
        auto [a, b] = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        if (!connected_without(a, b)) continue;
        t.erase(a, b);
        t.erase(b, a);
        --edges;
    }
    if (edges > m) throw Error(Errc::InfeasibleParams, "could not thin the graph to m edges");
    // The outer face keeps the corner of node 0 that sat between 2 and 1.
    NodeId w = kNone;
    auto it = std::find(ring0.begin(), ring0.end(), 1);
    for (std::size_t s = 0; s < ring0.size() && w == kNone; ++s) {
        NodeId cand = ring0[(static_cast<std::size_t>(it - ring0.begin()) + s) % ring0.size()];
        if (t.adjacent(0, cand)) w = cand;
    }
    return PlanarGraph::build(static_cast<std::size_t>(n), std::move(t.r), Dart{0, w});
}

}  // namespace gen

// ---------------------------------------------------------------------- json

std::string to_json(const PlanarGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    nlohmann::ordered_json rots = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.n(); ++v) rots.push_back(g.rotation(static_cast<NodeId>(v)));
    j["rotations"] = rots;
    j["outer"] = {g.outer().from, g.outer().to};
    if (g.coords()) {
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : *g.coords()) cs.push_back({c[0], c[1]});
        j["coords"] = cs;
    }
    return j.dump() + "\n";
}

PlanarGraph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::SchemaViolation, e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("rotations") || !j.contains("outer"))
            throw Error(Errc::SchemaViolation, "missing n, rotations or outer");
        for (const auto& [key, _] : j.items())
            if (key != "n" && key != "rotations" && key != "outer" && key != "coords")
                throw Error(Errc::SchemaViolation, "unknown key " + key);
        if (!j["n"].is_number_unsigned() && !(j["n"].is_number_integer() && j["n"].get<long>() >= 0))
            throw Error(Errc::SchemaViolation, "n must be a non-negative integer");
        std::size_t n = j["n"].get<std::size_t>();
        if (!j["rotations"].is_array()) throw Error(Errc::SchemaViolation, "rotations must be an array");
        std::vector<std::vector<NodeId>> rot;
        for (const auto& r : j["rotations"]) {
            if (!r.is_array()) throw Error(Errc::SchemaViolation, "rotation must be an array");
            std::vector<NodeId> row;
            for (const auto& x : r) {
                if (!x.is_number_integer()) throw Error(Errc::SchemaViolation, "neighbor must be an integer");
                row.push_back(x.get<NodeId>());
            }
            rot.push_back(std::move(row));
        }
        const auto& o = j["outer"];
        if (!o.is_array() || o.size() != 2 || !o[0].is_number_integer() || !o[1].is_number_integer())
            throw Error(Errc::SchemaViolation, "outer must be a pair of integers");
        std::optional<Coords> coords;
        if (j.contains("coords")) {
            Coords cs;
            for (const auto& c : j["coords"]) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                    throw Error(Errc::SchemaViolation, "coordinate must be a pair of numbers");
                cs.push_back({c[0].get<double>(), c[1].get<double>()});
            }
            coords = std::move(cs);
        }
        return PlanarGraph::build(n, std::move(rot), Dart{o[0].get<NodeId>(), o[1].get<NodeId>()},
                                  std::move(coords));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::SchemaViolation, e.what());
    }
}

PlanarGraph load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void save_json(const PlanarGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    out << to_json(g);
}

}  // namespace plansep

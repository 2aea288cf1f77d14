#include "plansep/face.hpp"

#include <algorithm>
#include <bit>

#include "plansep/tree.hpp"

namespace plansep {

namespace {

using Sz = std::size_t;
Sz ix(NodeId v) { return static_cast<Sz>(v); }

// q strictly inside the clockwise open interval from s to t.
bool cw_between(int s, int t, int q) { return s < t ? (q > s && q < t) : (q > s || q < t); }

int max_slot(const Forest& f, NodeId x) { return f.g->degree(x) + (f.is_root(x) ? 1 : 0); }

}  // namespace

int qpos(const Forest& f, NodeId x, NodeId nb) { return 4 * f.slot(x, nb); }

int qmax(const Forest& f, NodeId x) { return 4 * max_slot(f, x) + 2; }

Chord real_chord(const Forest& f, NodeId x, NodeId y) {
    if (f.part[ix(x)] < 0 || f.part[ix(x)] != f.part[ix(y)])
        throw Error(Errc::CrossPartQuery, "edge " + std::to_string(x) + "-" + std::to_string(y) + " crosses parts");
    if (f.parent[ix(x)] == y || f.parent[ix(y)] == x)
        throw Error(Errc::IsTreeEdge, std::to_string(x) + "-" + std::to_string(y));
    if (!f.g->has_edge(x, y)) throw Error(Errc::NodeNotInPart, std::to_string(x) + "-" + std::to_string(y) + " is no edge");
    if (f.pl[ix(x)] > f.pl[ix(y)]) std::swap(x, y);
    return Chord{x, y, qpos(f, x, y), qpos(f, y, x), true};
}

const char* case_name(EdgeCase c) {
    switch (c) {
        case EdgeCase::NonAncestor: return "non_ancestor";
        case EdgeCase::AncestorLeft: return "ancestor_left";
        case EdgeCase::AncestorRight: return "ancestor_right";
    }
    return "?";
}

// ---------------------------------------------------------------- TreeIndex

TreeIndex::TreeIndex(const Forest& f) : f_(&f) {
    const Sz n = f.n();
    int levels = std::max(1, static_cast<int>(std::bit_width(n)));
    up_.assign(static_cast<Sz>(levels), std::vector<NodeId>(n, kNone));
    for (Sz v = 0; v < n; ++v)
        if (f.part[v] >= 0) up_[0][v] = f.parent[v] == kNone ? static_cast<NodeId>(v) : f.parent[v];
    for (Sz k = 1; k < up_.size(); ++k)
        for (Sz v = 0; v < n; ++v)
            if (f.part[v] >= 0) up_[k][v] = up_[k - 1][ix(up_[k - 1][v])];
    by_pl_.assign(static_cast<Sz>(f.parts()), {});
    for (Sz v = 0; v < n; ++v)
        if (f.part[v] >= 0) {
            auto& row = by_pl_[static_cast<Sz>(f.part[v])];
            if (row.size() < static_cast<Sz>(f.pl[v])) row.resize(static_cast<Sz>(f.pl[v]), kNone);
            row[static_cast<Sz>(f.pl[v] - 1)] = static_cast<NodeId>(v);
        }
}

NodeId TreeIndex::ancestor_at_depth(NodeId x, int depth) const {
    int lift = f_->depth[ix(x)] - depth;
    for (Sz k = 0; lift > 0; ++k, lift >>= 1)
        if (lift & 1) x = up_[k][ix(x)];
    return x;
}

NodeId TreeIndex::lca(NodeId a, NodeId b) const {
    if (f_->part[ix(a)] != f_->part[ix(b)] || f_->part[ix(a)] < 0)
        throw Error(Errc::CrossPartQuery, std::to_string(a) + " and " + std::to_string(b));
    if (f_->depth[ix(a)] < f_->depth[ix(b)]) std::swap(a, b);
    a = ancestor_at_depth(a, f_->depth[ix(b)]);
    if (a == b) return a;
    for (Sz k = up_.size(); k-- > 0;)
        if (up_[k][ix(a)] != up_[k][ix(b)]) a = up_[k][ix(a)], b = up_[k][ix(b)];
    return f_->parent[ix(a)];
}

std::vector<NodeId> TreeIndex::path(NodeId a, NodeId b) const {
    NodeId w = lca(a, b);
    std::vector<NodeId> left, right;
    for (NodeId x = a; x != w; x = f_->parent[ix(x)]) left.push_back(x);
    for (NodeId x = b; x != w; x = f_->parent[ix(x)]) right.push_back(x);
    left.push_back(w);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

// ------------------------------------------------------------- FaceGeometry

FaceGeometry::FaceGeometry(const TreeIndex& idx, const Chord& c) : idx_(&idx), f_(&idx.forest()), c_(c) {
    if (c_.a == c_.b) throw Error(Errc::NotACycle, "chord endpoints coincide");
    if (f_->pl[ix(c_.a)] > f_->pl[ix(c_.b)]) {
        std::swap(c_.a, c_.b);
        std::swap(c_.qa, c_.qb);
    }
    w_ = idx.lca(c_.a, c_.b);
    flip_ = q_next(w_) > q_prev(w_);
    if (w_ == c_.a) {
        z_ = idx.child_toward(c_.a, c_.b);
        kind_ = flip_ ? EdgeCase::AncestorRight : EdgeCase::AncestorLeft;
    }
}

// The cycle runs w -> ... -> b -> a -> ... -> w.
int FaceGeometry::q_next(NodeId y) const {
    if (y == c_.b) return c_.qb;
    if (f_->in_subtree(y, c_.b)) return qpos(*f_, y, idx_->child_toward(y, c_.b));
    return 4;
}

int FaceGeometry::q_prev(NodeId y) const {
    if (y == c_.a) return c_.qa;
    if (f_->in_subtree(y, c_.a)) return qpos(*f_, y, idx_->child_toward(y, c_.a));
    return 4;
}

bool FaceGeometry::in_wedge(NodeId y, int q) const {
    int s = q_next(y), t = q_prev(y);
    if (flip_) std::swap(s, t);
    return cw_between(s, t, q);
}

bool FaceGeometry::on_border(NodeId x) const {
    if (f_->part[ix(x)] != f_->part[ix(w_)]) return false;
    return f_->in_subtree(w_, x) && (f_->in_subtree(x, c_.a) || f_->in_subtree(x, c_.b));
}

bool FaceGeometry::inside(NodeId x) const {
    if (f_->part[ix(x)] != f_->part[ix(w_)] || !f_->in_subtree(w_, x) || on_border(x)) return false;
    NodeId ya = idx_->lca(x, c_.a), yb = idx_->lca(x, c_.b);
    NodeId y = f_->depth[ix(ya)] >= f_->depth[ix(yb)] ? ya : yb;
    return in_wedge(y, qpos(*f_, y, idx_->child_toward(y, x)));
}

std::vector<NodeId> FaceGeometry::inside_children(NodeId y) const {
    std::vector<NodeId> out;
    for (NodeId c : f_->children[ix(y)])
        if (!on_border(c) && in_wedge(y, qpos(*f_, y, c))) out.push_back(c);
    return out;
}

std::int64_t FaceGeometry::p(NodeId x) const {
    std::int64_t s = 0;
    for (NodeId c : inside_children(x)) s += f_->size[ix(c)];
    return s;
}

std::int64_t FaceGeometry::weight() const {
    const auto& f = *f_;
    auto a = ix(c_.a), b = ix(c_.b);
    std::int64_t pp = p(c_.a) + p(c_.b);
    switch (kind_) {
        case EdgeCase::NonAncestor: return pp + f.pl[b] - (f.pl[a] + f.size[a] - 1) + 1;
        case EdgeCase::AncestorLeft: return pp + (f.pl[b] - f.pl[ix(z_)]) - (f.depth[b] - f.depth[ix(z_)]);
        case EdgeCase::AncestorRight: return pp + (f.pr[b] - f.pr[ix(z_)]) - (f.depth[b] - f.depth[ix(z_)]);
    }
    return 0;
}

FaceSets FaceGeometry::sets() const {
    FaceSets s;
    s.border.assign(f_->n(), 0);
    s.inside.assign(f_->n(), 0);
    auto path = border_path();
    int part = f_->part[ix(w_)];
    for (NodeId y : path) s.border[ix(y)] = 1;
    for (NodeId y : path)
        for (NodeId c : inside_children(y)) {
            int lo = f_->pl[ix(c)];
            for (int k = lo; k < lo + f_->size[ix(c)]; ++k) s.inside[ix(idx_->at_left(part, k))] = 1;
            s.inside_count += static_cast<Sz>(f_->size[ix(c)]);
        }
    s.border_count = path.size();
    return s;
}

bool FaceGeometry::contains_edge(NodeId x, NodeId y) const {
    if (c_.real && ((x == c_.a && y == c_.b) || (x == c_.b && y == c_.a))) return false;
    bool bx = on_border(x), by = on_border(y);
    bool ix_ = !bx && inside(x), iy = !by && inside(y);
    if (!(bx || ix_) || !(by || iy)) return false;
    if (ix_ || iy) return true;
    if (f_->parent[ix(x)] == y || f_->parent[ix(y)] == x) return true;
    return in_wedge(x, qpos(*f_, x, y));
}

// --------------------------------------------------------- augmentation

Chord augmented_chord(const FaceGeometry& face, NodeId z) {
    if (!face.inside(z)) throw Error(Errc::NotInside, std::to_string(z) + " is not inside the face");
    const Forest& f = face.forest();
    NodeId u = face.u();
    int qu = face.chord().qa + (face.flipped() ? 1 : -1);
    for (int qz : {6, qmax(f, z)}) {
        Chord c{u, z, qu, qz, false};
        FaceGeometry g(face.index(), c);
        if (g.inside_children(z).size() == f.children[ix(z)].size()) return c;
    }
    throw Error(Errc::InternalWitnessMismatch, "no augmentation corner at " + std::to_string(z));
}

std::int64_t augmented_weight(const FaceGeometry& face, NodeId z) {
    return FaceGeometry(face.index(), augmented_chord(face, z)).weight();
}

std::vector<std::pair<NodeId, NodeId>> hidden_edges(const FaceGeometry& face, NodeId z) {
    const Forest& f = face.forest();
    const TreeIndex& idx = face.index();
    if (!f.member(z) || !f.is_leaf(z)) throw Error(Errc::NotALeaf, std::to_string(z));
    if (!face.inside(z)) throw Error(Errc::NotInside, std::to_string(z));
    NodeId u = face.u();
    int part = f.part[ix(u)];
    std::vector<std::pair<NodeId, NodeId>> out;
    for (int k = 1; k <= idx.part_size(part); ++k) {
        NodeId x = idx.at_left(part, k);
        if (!face.in_face(x)) continue;
        for (NodeId y : f.g->rotation(x)) {
            if (y < x || f.part[ix(y)] != part || f.parent[ix(x)] == y || f.parent[ix(y)] == x) continue;
            if (!face.contains_edge(x, y)) continue;
            FaceGeometry ff(idx, real_chord(f, x, y));
            if (!ff.inside(z)) continue;
            bool hides = x != u && y != u;
            for (int t = f.pl[ix(u)]; !hides && t < f.pl[ix(u)] + f.size[ix(u)]; ++t) {
                NodeId s = idx.at_left(part, t);
                hides = face.in_face(s) && !ff.in_face(s);
            }
            if (hides) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t contour_key(const Forest& f, NodeId x, NodeId y) {
    int s = f.slot(x, y);
    std::int64_t t = 2 * static_cast<std::int64_t>(f.pl[ix(x)] - 1) - f.depth[ix(x)];
    for (NodeId c : f.children[ix(x)])
        if (f.slot(x, c) > s) t += 2 * f.size[ix(c)];
    auto n = static_cast<std::int64_t>(f.n());
    return t * (n + 2) + (n + 1 - s);
}

OutsideSplit outside_partitions(const FaceGeometry& face, bool check) {
    const Forest& f = face.forest();
    const TreeIndex& idx = face.index();
    NodeId u = face.u(), v = face.v(), w = face.lca();
    int part = f.part[ix(u)];
    if (check && face.chord().real) {
        for (int k = 1; k <= idx.part_size(part); ++k) {
            NodeId x = idx.at_left(part, k);
            for (NodeId y : f.g->rotation(x)) {
                if (y < x || f.part[ix(y)] != part || f.parent[ix(x)] == y || f.parent[ix(y)] == x) continue;
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (FaceGeometry(idx, real_chord(f, x, y)).contains_edge(u, v))
                    throw Error(Errc::PreconditionNotContained,
                                std::to_string(u) + "-" + std::to_string(v) + " lies in the face of " + std::to_string(x) +
                                    "-" + std::to_string(y));
            }
        }
    }
    auto U = ix(u), V = ix(v), W = ix(w);
    std::int64_t omega = face.weight();
    std::int64_t border = f.depth[U] + f.depth[V] - 2 * f.depth[W] + 1;
    std::int64_t inside = omega;
    OutsideSplit s;
    switch (face.kind()) {
        case EdgeCase::NonAncestor:
            s.left = f.pl[U] - 1 - (f.depth[U] - f.depth[W]) + (f.size[U] - 1 - face.p(u));
            inside = omega - (f.depth[V] - f.depth[W] + 1);
            break;
        case EdgeCase::AncestorLeft: s.left = f.pl[V] - 1 - (f.depth[V] - f.depth[U]) - (omega - face.p(v)); break;
        case EdgeCase::AncestorRight: s.left = f.pl[V] - 1 - (f.depth[V] - f.depth[U]); break;
    }
    s.right = idx.part_size(part) - s.left - border - inside;
    return s;
}

std::vector<std::vector<std::pair<NodeId, NodeId>>> real_fundamental_edges(const Forest& f) {
    std::vector<std::vector<std::pair<NodeId, NodeId>>> out(static_cast<Sz>(f.parts()));
    for (Sz x = 0; x < f.n(); ++x) {
        if (f.part[x] < 0) continue;
        for (NodeId y : f.g->rotation(static_cast<NodeId>(x))) {
            auto Y = ix(y);
            if (y < static_cast<NodeId>(x) || f.part[Y] != f.part[x] || f.parent[x] == y ||
                f.parent[Y] == static_cast<NodeId>(x))
                continue;
            out[static_cast<Sz>(f.part[x])].emplace_back(static_cast<NodeId>(x), y);
        }
    }
    return out;
}

// ----------------------------------------------------- distributed parts

namespace {

std::vector<std::optional<std::pair<NodeId, NodeId>>> select_by_contour(
    Network& net, const TreeIndex& idx, const std::vector<std::vector<std::pair<NodeId, NodeId>>>& cand, bool inner) {
    const Forest& f = idx.forest();
    const PlanarGraph& g = *f.g;
    bool any = false;
    for (const auto& c : cand) any = any || !c.empty();
    if (!any) throw Error(Errc::EmptySet, "no candidate edges");
    // Both endpoints learn the partner's contour key in one exchange.
    std::vector<std::optional<Message>> out(g.dart_count());
    std::vector<char> is_cand(g.dart_count(), 0);
    for (const auto& list : cand)
        for (auto [x, y] : list) {
            auto kx = g.dart(x, y), ky = g.dart(y, x);
            is_cand[kx] = is_cand[ky] = 1;
            out[kx] = Message{static_cast<std::uint64_t>(contour_key(f, x, y))};
            out[ky] = Message{static_cast<std::uint64_t>(contour_key(f, y, x))};
        }
    auto in = neighbor_exchange(net, out);
    Values key(f.n(), 0);
    std::vector<char> eligible(f.n(), 0);
    std::vector<NodeId> partner(f.n(), kNone);
    for (Sz x = 0; x < f.n(); ++x) {
        for (std::size_t k = g.offset(static_cast<NodeId>(x)); k < g.offset(static_cast<NodeId>(x)) + static_cast<Sz>(g.degree(static_cast<NodeId>(x))); ++k) {
            if (!is_cand[k]) continue;
            auto mine = static_cast<std::int64_t>((*out[k])[0]);
            auto theirs = static_cast<std::int64_t>((*in[k])[0]);
            // Outermost: smallest left end; innermost: smallest right end.
            bool holder = inner ? mine > theirs : mine < theirs;
            if (!holder) continue;
            if (!eligible[x] || mine < key[x]) key[x] = mine, partner[x] = g.head(k);
            eligible[x] = 1;
        }
    }
    PartContext ctx{net, f};
    auto win = find_extreme(ctx, Extreme::Min, key, &eligible);
    std::vector<std::pair<NodeId, Message>> src;
    for (NodeId x : win)
        if (x != kNone) src.emplace_back(x, Message{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(partner[ix(x)])});
    auto got = broadcast_within_part(ctx, src);
    std::vector<std::optional<std::pair<NodeId, NodeId>>> res(cand.size());
    for (Sz p = 0; p < cand.size(); ++p) {
        NodeId r = f.roots[p];
        if (cand[p].empty() || !got[ix(r)]) continue;
        auto a = static_cast<NodeId>((*got[ix(r)])[0]), b = static_cast<NodeId>((*got[ix(r)])[1]);
        res[p] = std::make_pair(std::min(a, b), std::max(a, b));
    }
    return res;
}

}  // namespace

std::vector<std::optional<std::pair<NodeId, NodeId>>> select_innermost(
    Network& net, const TreeIndex& idx, const std::vector<std::vector<std::pair<NodeId, NodeId>>>& cand) {
    return select_by_contour(net, idx, cand, true);
}

std::vector<std::optional<std::pair<NodeId, NodeId>>> select_outermost(
    Network& net, const TreeIndex& idx, const std::vector<std::vector<std::pair<NodeId, NodeId>>>& cand) {
    return select_by_contour(net, idx, cand, false);
}

namespace {

// Sum of subtree sizes of the children of x whose quarter position lies
// clockwise strictly between s and t.
std::int64_t wedge_sum(const Forest& f, NodeId x, int s, int t, NodeId skip = kNone) {
    std::int64_t sum = 0;
    for (NodeId c : f.children[ix(x)])
        if (c != skip && cw_between(s, t, qpos(f, x, c))) sum += f.size[ix(c)];
    return sum;
}

std::uint64_t u64(std::int64_t x) { return static_cast<std::uint64_t>(x); }

}  // namespace

std::vector<std::int64_t> distributed_weights(Network& net, const Forest& f) {
    const PlanarGraph& g = *f.g;
    const Sz n = f.n(), D = g.dart_count();
    std::vector<std::optional<Message>> per_node(n);
    for (Sz x = 0; x < n; ++x)
        if (f.part[x] >= 0) per_node[x] = Message{u64(f.roots[static_cast<Sz>(f.part[x])])};
    auto root_of = neighbor_exchange_all(net, per_node);
    for (Sz x = 0; x < n; ++x)
        if (f.part[x] >= 0) per_node[x] = Message{u64(f.pl[x]), u64(f.pr[x]), u64(f.depth[x]), u64(f.size[x])};
    auto stats = neighbor_exchange_all(net, per_node);

    auto intra = [&](std::size_t k) {
        auto x = ix(g.owner(k));
        return f.part[x] >= 0 && root_of[k] && static_cast<NodeId>((*root_of[k])[0]) == f.roots[static_cast<Sz>(f.part[x])];
    };
    auto nontree = [&](std::size_t k) {
        NodeId x = g.owner(k), y = g.head(k);
        return f.parent[ix(x)] != y && f.parent[ix(y)] != x;
    };

    // u (smaller left position) tells v the case, the DFS position and depth
    // of z, and p(u).
    std::vector<std::optional<Message>> out(D);
    for (std::size_t k = 0; k < D; ++k) {
        if (!intra(k) || !nontree(k)) continue;
        NodeId x = g.owner(k), y = g.head(k);
        auto X = ix(x);
        const Message& sy = *stats[k];
        auto ply = static_cast<int>(sy[0]);
        if (ply < f.pl[X]) continue;
        int qy = qpos(f, x, y);
        if (ply < f.pl[X] + f.size[X]) {
            NodeId z = kNone;
            for (NodeId c : f.children[X]) {
                const Message& sc = *stats[g.dart(x, c)];
                auto plc = static_cast<int>(sc[0]), szc = static_cast<int>(sc[3]);
                if (ply >= plc && ply < plc + szc) z = c;
            }
            const Message& sz = *stats[g.dart(x, z)];
            int qz = qpos(f, x, z);
            bool left = qy > qz;
            std::int64_t pu = left ? wedge_sum(f, x, qz, qy) : wedge_sum(f, x, qy, qz);
            out[k] = Message{left ? 1u : 2u, left ? sz[0] : sz[1], sz[2], u64(pu)};
        } else {
            out[k] = Message{0u, 0u, 0u, u64(wedge_sum(f, x, 4, qy))};
        }
    }
    auto in = neighbor_exchange(net, out);

    std::vector<std::int64_t> w(D, -1);
    std::vector<std::optional<Message>> back(D);
    for (std::size_t k = 0; k < D; ++k) {
        if (!in[k]) continue;
        NodeId x = g.owner(k), y = g.head(k);
        auto X = ix(x);
        const Message& m = *in[k];
        const Message& su = *stats[k];
        int qu = qpos(f, x, y);
        auto kind = m[0];
        std::int64_t pu = static_cast<std::int64_t>(m[3]);
        std::int64_t pv = kind == 2 ? wedge_sum(f, x, 4, qu) : wedge_sum(f, x, qu, 4);
        std::int64_t om;
        if (kind == 0)
            om = pu + pv + f.pl[X] - (static_cast<std::int64_t>(su[0]) + static_cast<std::int64_t>(su[3]) - 1) + 1;
        else
            om = pu + pv + ((kind == 1 ? f.pl[X] : f.pr[X]) - static_cast<std::int64_t>(m[1])) -
                 (f.depth[X] - static_cast<std::int64_t>(m[2]));
        w[k] = om;
        back[k] = Message{u64(om)};
    }
    auto ret = neighbor_exchange(net, back);
    for (std::size_t k = 0; k < D; ++k)
        if (ret[k]) w[k] = static_cast<std::int64_t>((*ret[k])[0]);
    return w;
}

FaceMarks detect_face(Network& net, const TreeIndex& idx, const std::vector<std::optional<Chord>>& faces) {
    const Forest& f = idx.forest();
    const PlanarGraph& g = *f.g;
    const Sz n = f.n();
    std::vector<PathQuery> q(faces.size(), {kNone, kNone});
    std::vector<Chord> ch(faces.size());
    for (Sz p = 0; p < faces.size(); ++p)
        if (faces[p]) {
            ch[p] = *faces[p];
            q[p] = {ch[p].a, ch[p].b};
        }
    auto w = lca(net, f, q);
    std::vector<NodeId> a(faces.size(), kNone), b(faces.size(), kNone);
    for (Sz p = 0; p < faces.size(); ++p)
        if (faces[p]) a[p] = ch[p].a, b[p] = ch[p].b;
    PartContext ctx{net, f};
    auto ra = relation_to(ctx, a);
    auto rb = relation_to(ctx, b);
    auto up = [](Relation r) { return r == Relation::Self || r == Relation::Ancestor; };

    FaceMarks marks;
    marks.state.assign(n, kOutside);
    marks.flip.assign(faces.size(), 0);
    std::vector<std::optional<Message>> per_node(n);
    for (Sz x = 0; x < n; ++x) {
        if (f.part[x] < 0 || !faces[static_cast<Sz>(f.part[x])]) continue;
        bool ua = up(ra[x]), ub = up(rb[x]);
        bool border = ua != ub || static_cast<NodeId>(x) == w[static_cast<Sz>(f.part[x])];
        if (border) marks.state[x] = kBorder;
        per_node[x] = Message{border ? 1u : 0u, ua ? 1u : 0u, ub ? 1u : 0u};
    }
    auto nb = neighbor_exchange_all(net, per_node);

    // Cycle darts at a border node: towards b (next) and towards a (prev).
    auto darts = [&](NodeId x, const Chord& c) {
        auto X = ix(x);
        int next = 4, prev = 4;
        bool ua = up(ra[X]), ub = up(rb[X]);
        for (NodeId y : g.rotation(x)) {
            if (f.parent[ix(y)] != x || f.part[ix(y)] != f.part[X]) continue;
            const Message& m = *nb[g.dart(x, y)];
            if (ub && x != c.b && m[2]) next = qpos(f, x, y);
            if (ua && x != c.a && m[1]) prev = qpos(f, x, y);
        }
        if (x == c.b) next = c.qb;
        if (x == c.a) prev = c.qa;
        return std::pair{next, prev};
    };

    std::vector<std::pair<NodeId, Message>> src;
    for (Sz p = 0; p < faces.size(); ++p) {
        if (!faces[p]) continue;
        auto [nx, pv] = darts(w[p], ch[p]);
        src.emplace_back(w[p], Message{nx > pv ? 1u : 0u});
    }
    auto flips = broadcast_within_part(ctx, src);

    Values flag(n, 0);
    for (Sz x = 0; x < n; ++x) {
        if (marks.state[x] != kBorder) continue;
        const Chord& c = ch[static_cast<Sz>(f.part[x])];
        auto [s, t] = darts(static_cast<NodeId>(x), c);
        bool flip = (*flips[x])[0] != 0;
        marks.flip[static_cast<Sz>(f.part[x])] = flip;
        if (flip) std::swap(s, t);
        for (NodeId y : f.children[x]) {
            const Message& m = *nb[g.dart(static_cast<NodeId>(x), y)];
            if (!m[0] && cw_between(s, t, qpos(f, static_cast<NodeId>(x), y))) flag[ix(y)] = 1;
        }
    }
    auto below = ancestor_sum(ctx, Fold::Max, flag);
    for (Sz x = 0; x < n; ++x)
        if (f.part[x] >= 0 && faces[static_cast<Sz>(f.part[x])] && marks.state[x] != kBorder && below[x] > 0)
            marks.state[x] = kInside;
    return marks;
}

Values full_augmentation_weights(Network& net, const TreeIndex& idx, const std::vector<std::optional<Chord>>& faces,
                                 const FaceMarks& marks, std::vector<int>* modes) {
    const Forest& f = idx.forest();
    const Sz n = f.n();
    Values K(n, 0), mode(n, 0);
    std::vector<std::pair<NodeId, Message>> src;
    for (Sz p = 0; p < faces.size(); ++p) {
        if (!faces[p]) continue;
        Chord c = *faces[p];
        if (f.pl[ix(c.a)] > f.pl[ix(c.b)]) std::swap(c.a, c.b), std::swap(c.qa, c.qb);
        NodeId u = c.a;
        auto U = ix(u);
        int qu = c.qa + (marks.flip[p] ? 1 : -1);
        std::int64_t pe = 0;
        for (NodeId y : f.children[U])
            if (marks.state[ix(y)] == kInside) pe += f.size[ix(y)];
        std::int64_t A = pe - f.pl[U] - f.size[U] + 2;
        src.emplace_back(u, Message{zz(A)});
        for (NodeId y : f.children[U]) {
            auto Y = ix(y);
            if (marks.state[Y] == kOutside) continue;
            int qc = qpos(f, u, y);
            bool left = qu > qc;
            std::int64_t pp = left ? wedge_sum(f, u, qc, qu) : wedge_sum(f, u, qu, qc);
            mode[Y] = left ? 1 : 2;
            K[Y] = pp - (left ? f.pl[Y] : f.pr[Y]) + f.depth[Y] - 1;
        }
    }
    PartContext ctx{net, f};
    auto a = broadcast_within_part(ctx, src);
    auto ks = ancestor_sum(ctx, Fold::Sum, K);
    auto ms = ancestor_sum(ctx, Fold::Sum, mode);
    Values out(n, -1);
    if (modes) modes->assign(n, 0);
    for (Sz z = 0; z < n; ++z) {
        if (marks.state[z] != kInside) continue;
        if (modes) (*modes)[z] = static_cast<int>(ms[z]);
        if (ms[z] == 0)
            out[z] = unzz((*a[z])[0]) + f.pl[z] + f.size[z] - 1;
        else
            out[z] = ks[z] + f.size[z] + (ms[z] == 1 ? f.pl[z] : f.pr[z]) - f.depth[z];
    }
    return out;
}

}  // namespace plansep

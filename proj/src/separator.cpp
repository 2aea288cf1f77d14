#include "plansep/separator.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>

#include "plansep/face.hpp"
#include "plansep/oracle.hpp"
#include "plansep/primitives.hpp"
#include "plansep/tree.hpp"

namespace plansep {

namespace {

using Sz = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using json = nlohmann::json;

Sz ix(NodeId v) { return static_cast<Sz>(v); }
std::uint64_t u64(NodeId v) { return static_cast<std::uint64_t>(v); }

constexpr std::array<const char*, 6> kPhaseNames = {"tree_centroid",      "balanced_real",
                                                    "aug_compatible",     "aug_hidden_detour",
                                                    "small_weights_path", "outer_rehang"};

Range third(std::int64_t n) { return Range{n, 2 * n, 3}; }

// Decision taken for one part before the path is marked.
struct Plan {
    Phase phase = Phase::TreeCentroid;
    NodeId eu = kNone, ev = kNone;
    bool virt = false;
    std::int64_t weight = -1;
    NodeId a = kNone, b = kNone;
    bool done = false;
    // Alternatives tried in order when the self-check rejects (a, b).
    std::vector<Edge> backup;
};

// Phase 4 state of a part: the face whose augmentations are scanned.
struct Critical {
    Chord chord;
    bool rehang = false;
    NodeId eu = kNone, ev = kNone;  // defining edge reported in the witness
    std::vector<Edge> backup;       // rehang: paths around the outermost face
};

NodeId root_after_neighbor(const Forest& f, NodeId r) {
    int i = f.root_after[ix(r)];
    if (i < 0) return kNone;
    return f.g->rotation(r)[static_cast<Sz>(i)];
}

bool any_of(const std::vector<std::vector<Edge>>& c) {
    return std::any_of(c.begin(), c.end(), [](const auto& l) { return !l.empty(); });
}

}  // namespace

const char* phase_name(Phase p) { return kPhaseNames[static_cast<Sz>(p)]; }

Phase phase_from_name(const std::string& s) {
    for (Sz i = 0; i < kPhaseNames.size(); ++i)
        if (s == kPhaseNames[i]) return static_cast<Phase>(i);
    throw Error(Errc::SchemaViolation, "unknown phase '" + s + "'");
}

SeparatorResult compute_separators(Network& net, const Partition& p) {
    const PlanarGraph& g = net.graph();
    const Sz n = g.n();
    SeparatorResult res;
    res.forest = build_part_trees(net, p);
    const Forest& f = res.forest;
    const TreeIndex idx(f);
    PartContext ctx{net, f};
    const int P = f.parts();
    const auto PP = static_cast<Sz>(P);
    std::vector<Plan> plan(PP);

    // Precomputation: part sizes and weights of all real fundamental edges.
    Values one(n, 0);
    for (Sz v = 0; v < n; ++v) one[v] = f.member(static_cast<NodeId>(v)) ? 1 : 0;
    Values cnt = partwise_aggregate(ctx, Fold::Sum, one);
    auto weights = distributed_weights(net, f);
    std::vector<std::int64_t> ni(PP);
    for (Sz i = 0; i < PP; ++i) ni[i] = cnt[ix(f.roots[i])];

    Values best(n, -1);
    for (Sz k = 0; k < weights.size(); ++k)
        if (weights[k] >= 0) best[ix(g.owner(k))] = std::max(best[ix(g.owner(k))], weights[k]);
    Values heaviest = partwise_aggregate(ctx, Fold::Max, best);
    auto part_of = [&](NodeId v) { return static_cast<Sz>(f.part[ix(v)]); };
    auto max_w = [&](Sz i) { return heaviest[ix(f.roots[i])]; };

    // Phase 2: parts that are trees.
    {
        std::vector<Range> r(PP);
        bool any = false;
        for (Sz i = 0; i < PP; ++i)
            if (max_w(i) < 0) r[i] = third(ni[i]), any = true;
        if (any) {
            Values sz(n, -1);
            for (Sz v = 0; v < n; ++v)
                if (f.member(static_cast<NodeId>(v))) sz[v] = f.size[v];
            auto v0 = find_in_range(ctx, sz, r);
            // A tree may have no subtree size in range (a star); the deepest
            // node with 3 n_T >= n_i still separates.
            std::vector<char> elig(n, 0);
            bool fb = false;
            for (Sz v = 0; v < n; ++v) {
                if (!f.member(static_cast<NodeId>(v))) continue;
                Sz i = part_of(static_cast<NodeId>(v));
                if (!r[i].empty() && v0[i] == kNone && 3 * static_cast<std::int64_t>(f.size[v]) >= ni[i])
                    elig[v] = 1, fb = true;
            }
            if (fb) {
                Values d(n, 0);
                for (Sz v = 0; v < n; ++v) d[v] = f.depth[v];
                auto deep = find_extreme(ctx, Extreme::Max, d, &elig);
                for (Sz i = 0; i < PP; ++i)
                    if (!r[i].empty() && v0[i] == kNone) v0[i] = deep[i];
            }
            for (Sz i = 0; i < PP; ++i) {
                if (r[i].empty()) continue;
                plan[i].phase = Phase::TreeCentroid;
                plan[i].a = f.roots[i];
                plan[i].b = v0[i];
                plan[i].done = true;
            }
        }
    }

    // Phase 3: a real edge of balanced weight.
    {
        std::vector<Range> r(PP);
        bool any = false;
        for (Sz i = 0; i < PP; ++i)
            if (!plan[i].done) r[i] = third(ni[i]), any = true;
        if (any) {
            Values val(n, -1);
            std::vector<NodeId> partner(n, kNone);
            for (Sz v = 0; v < n; ++v) {
                if (!f.member(static_cast<NodeId>(v))) continue;
                const Range& rv = r[part_of(static_cast<NodeId>(v))];
                for (Sz k = g.offset(static_cast<NodeId>(v)); k < g.offset(static_cast<NodeId>(v)) + static_cast<Sz>(g.degree(static_cast<NodeId>(v))); ++k) {
                    if (weights[k] < 0 || !rv.contains(weights[k])) continue;
                    if (partner[v] == kNone || g.head(k) < partner[v]) partner[v] = g.head(k), val[v] = weights[k];
                }
            }
            auto s = find_in_range(ctx, val, r);
            std::vector<std::pair<NodeId, Message>> src;
            for (Sz i = 0; i < PP; ++i)
                if (s[i] != kNone) src.emplace_back(s[i], Message{u64(partner[ix(s[i])]), static_cast<std::uint64_t>(val[ix(s[i])])});
            if (!src.empty()) broadcast_within_part(ctx, src);
            for (Sz i = 0; i < PP; ++i) {
                if (s[i] == kNone) continue;
                Plan& pl = plan[i];
                pl.phase = Phase::BalancedReal;
                pl.eu = std::min(s[i], partner[ix(s[i])]);
                pl.ev = std::max(s[i], partner[ix(s[i])]);
                pl.weight = val[ix(s[i])];
                pl.a = pl.eu;
                pl.b = pl.ev;
                pl.done = true;
            }
        }
    }

    // Candidate edges for Phases 4 and 5.
    std::vector<std::vector<Edge>> heavy(PP), light(PP);
    for (Sz k = 0; k < weights.size(); ++k) {
        NodeId x = g.owner(k), y = g.head(k);
        if (weights[k] < 0 || x > y) continue;
        Sz i = part_of(x);
        if (plan[i].done) continue;
        if (3 * max_w(i) > 2 * ni[i]) {
            if (3 * weights[k] > 2 * ni[i]) heavy[i].emplace_back(x, y);
        } else {
            light[i].emplace_back(x, y);
        }
    }

    std::vector<std::optional<Critical>> crit(PP);

    // Phase 5: all weights light. Split the outside of an outermost face.
    if (any_of(light)) {
        auto sel = select_outermost(net, idx, light);
        std::vector<PathQuery> q(PP, {kNone, kNone});
        for (Sz i = 0; i < PP; ++i)
            if (sel[i]) q[i] = *sel[i];
        lca(net, f, q);
        std::vector<std::pair<NodeId, Message>> src;
        std::vector<OutsideSplit> split(PP);
        for (Sz i = 0; i < PP; ++i) {
            if (!sel[i]) continue;
            FaceGeometry face(idx, real_chord(f, sel[i]->first, sel[i]->second));
            split[i] = outside_partitions(face, false);
            src.emplace_back(face.u(), Message{zz(split[i].left), zz(split[i].right)});
        }
        broadcast_within_part(ctx, src);

        // Rehang candidates: extreme leaves of F_l within T_u / F_r within T_v.
        std::vector<NodeId> anchor(PP, kNone);
        std::vector<int> side(PP, 0);  // +1 left rehang, -1 right rehang
        std::vector<std::optional<Chord>> faces(PP);
        for (Sz i = 0; i < PP; ++i) {
            if (!sel[i]) continue;
            FaceGeometry face(idx, real_chord(f, sel[i]->first, sel[i]->second));
            const auto L = split[i].left, R = split[i].right;
            Plan& pl = plan[i];
            if (3 * L > 2 * ni[i] || 3 * R > 2 * ni[i]) {
                side[i] = 3 * L > 2 * ni[i] ? 1 : -1;
                anchor[i] = side[i] > 0 ? face.u() : face.v();
                faces[i] = face.chord();
                continue;
            }
            pl.phase = Phase::SmallWeightsPath;
            pl.eu = face.u();
            pl.ev = face.v();
            pl.weight = face.weight();
            pl.done = true;
            NodeId r = f.roots[i];
            if (3 * L <= ni[i] && 3 * R <= ni[i]) {
                pl.a = face.u();
                pl.b = face.v();
                pl.backup = {{r, face.v()}, {r, face.u()}};
            } else {
                // One side holds at least a third: cut along the root path
                // to the endpoint on that side.
                NodeId x = 3 * R >= ni[i] ? face.v() : face.u();
                pl.a = r;
                pl.b = x;
                pl.backup = {{face.u(), face.v()}, {r, x == face.v() ? face.u() : face.v()}};
            }
        }
        if (std::any_of(side.begin(), side.end(), [](int s) { return s != 0; })) {
            auto marks = detect_face(net, idx, faces);
            auto rel = relation_to(ctx, anchor);
            Values key(n, 0);
            std::vector<char> elig(n, 0);
            for (Sz v = 0; v < n; ++v) {
                if (!f.member(static_cast<NodeId>(v))) continue;
                Sz i = part_of(static_cast<NodeId>(v));
                if (side[i] == 0 || !f.is_leaf(static_cast<NodeId>(v)) || marks.state[v] != kOutside) continue;
                if (rel[v] != Relation::Descendant) continue;
                if (side[i] > 0 && f.pl[v] > f.pl[ix(faces[i]->b)]) continue;
                elig[v] = 1;
                key[v] = side[i] > 0 ? f.pl[v] : -static_cast<std::int64_t>(f.pl[v]);
            }
            auto leaf = find_extreme(ctx, Extreme::Max, key, &elig);
            for (Sz i = 0; i < PP; ++i) {
                if (side[i] == 0) continue;
                FaceGeometry face(idx, *faces[i]);
                NodeId r = f.roots[i];
                NodeId x = leaf[i] != kNone ? leaf[i] : anchor[i];
                Chord c;
                c.real = false;
                c.a = r;
                c.b = x;
                if (side[i] > 0) {
                    c.qa = qmax(f, r);
                    if (x == face.u()) {
                        int hi = face.kind() == EdgeCase::AncestorRight ? qpos(f, x, face.z()) : qpos(f, x, face.v());
                        c.qb = hi + 1;
                    } else {
                        c.qb = 6;
                    }
                } else {
                    c.qa = 6;
                    if (x == face.v()) c.qb = face.kind() == EdgeCase::AncestorRight ? 6 : qpos(f, x, face.u()) - 1;
                    else c.qb = 6;
                }
                if (x == r) {
                    // Degenerate: anchor is the root itself; keep the face path.
                    plan[i].phase = Phase::OuterRehang;
                    plan[i].eu = face.u();
                    plan[i].ev = face.v();
                    plan[i].a = face.u();
                    plan[i].b = face.v();
                    plan[i].done = true;
                    continue;
                }
                crit[i] = Critical{c, true, r, x,
                                   {{face.u(), face.v()}, {r, face.u()}, {r, face.v()}, {r, anchor[i]}}};
            }
        }
    }

    // Phase 4: innermost heavy face.
    if (any_of(heavy)) {
        auto sel = select_innermost(net, idx, heavy);
        for (Sz i = 0; i < PP; ++i) {
            if (!sel[i]) continue;
            Chord c = real_chord(f, sel[i]->first, sel[i]->second);
            crit[i] = Critical{c, false, c.a, c.b, {}};
        }
    }

    if (std::any_of(crit.begin(), crit.end(), [](const auto& c) { return c.has_value(); })) {
        std::vector<std::optional<Chord>> faces(PP);
        for (Sz i = 0; i < PP; ++i)
            if (crit[i]) faces[i] = crit[i]->chord;
        auto marks = detect_face(net, idx, faces);
        std::vector<int> modes;
        auto aug = full_augmentation_weights(net, idx, faces, marks, &modes);
        std::vector<Range> r(PP);
        for (Sz i = 0; i < PP; ++i)
            if (crit[i]) r[i] = third(ni[i]);
        auto s = find_in_range(ctx, aug, r);

        // No weight in range: long tree paths can jump over it. Scan again
        // for z whose path u-z leaves at most 2n/3 off the path on each side.
        std::vector<NodeId> far(PP, kNone);
        std::vector<Range> r2(PP);
        bool rescan = false;
        for (Sz i = 0; i < PP; ++i)
            if (crit[i] && s[i] == kNone) r2[i] = Range{ni[i], 3 * ni[i], 3}, rescan = true;
        if (rescan) {
            std::vector<std::pair<NodeId, Message>> usrc;
            for (Sz i = 0; i < PP; ++i) {
                if (r2[i].empty()) continue;
                NodeId u = FaceGeometry(idx, crit[i]->chord).u();
                usrc.emplace_back(u, Message{u64(u), static_cast<std::uint64_t>(f.depth[ix(u)])});
            }
            broadcast_within_part(ctx, usrc);
            std::vector<NodeId> us(PP, kNone);
            for (const auto& [u, m] : usrc) us[part_of(u)] = u;
            relation_to(ctx, us);
            Values alt(n, -1);
            for (Sz v = 0; v < n; ++v) {
                if (!f.member(static_cast<NodeId>(v)) || aug[v] < 0) continue;
                Sz i = part_of(static_cast<NodeId>(v));
                if (r2[i].empty()) continue;
                NodeId u = us[i];
                int dl = f.depth[ix(idx.lca(u, static_cast<NodeId>(v)))];
                std::int64_t in_off = aug[v] - (f.depth[v] - dl + 1);
                if (3 * in_off <= 2 * ni[i]) alt[v] = aug[v] + f.depth[ix(u)] - dl;
            }
            far = find_in_range(ctx, alt, r2);
        }

        // Leaf promotion: move s down to a leaf below it.
        std::vector<std::pair<NodeId, Message>> src;
        for (Sz i = 0; i < PP; ++i)
            if (s[i] != kNone) src.emplace_back(s[i], Message{static_cast<std::uint64_t>(modes[ix(s[i])])});
        std::vector<NodeId> t(PP, kNone);
        if (!src.empty()) {
            broadcast_within_part(ctx, src);
            auto rel = relation_to(ctx, s);
            Values key(n, 0);
            std::vector<char> elig(n, 0);
            for (Sz v = 0; v < n; ++v) {
                if (!f.member(static_cast<NodeId>(v))) continue;
                Sz i = part_of(static_cast<NodeId>(v));
                if (s[i] == kNone || !f.is_leaf(static_cast<NodeId>(v))) continue;
                if (rel[v] != Relation::Self && rel[v] != Relation::Descendant) continue;
                elig[v] = 1;
                key[v] = modes[ix(s[i])] == 2 ? f.pr[v] : f.pl[v];
            }
            t = find_extreme(ctx, Extreme::Max, key, &elig);
        }

        // Hidden check for the promoted leaves.
        std::vector<std::vector<Edge>> hiding(PP);
        std::vector<char> has_t(PP, 0);
        for (Sz i = 0; i < PP; ++i) {
            if (t[i] == kNone) continue;
            has_t[i] = 1;
            FaceGeometry face(idx, crit[i]->chord);
            hiding[i] = hidden_edges(face, t[i]);
        }
        if (std::any_of(has_t.begin(), has_t.end(), [](char c) { return c != 0; })) {
            // Leaf id known to all, local test at edge endpoints, one OR.
            std::vector<std::pair<NodeId, Message>> tsrc;
            for (Sz i = 0; i < PP; ++i)
                if (t[i] != kNone) tsrc.emplace_back(t[i], Message{u64(t[i])});
            broadcast_within_part(ctx, tsrc);
            std::vector<NodeId> tv(t.begin(), t.end());
            relation_to(ctx, tv);
            Values flag(n, 0);
            for (Sz i = 0; i < PP; ++i)
                for (auto [x, y] : hiding[i]) flag[ix(x)] = flag[ix(y)] = 1;
            partwise_aggregate(ctx, Fold::Max, flag);
        }
        std::vector<std::optional<Edge>> outer(PP);
        if (any_of(hiding)) {
            auto sel = select_outermost(net, idx, hiding);
            for (Sz i = 0; i < PP; ++i) outer[i] = sel[i];
        }

        for (Sz i = 0; i < PP; ++i) {
            if (!crit[i]) continue;
            const Critical& c = *crit[i];
            FaceGeometry face(idx, c.chord);
            Plan& pl = plan[i];
            pl.eu = c.eu;
            pl.ev = c.ev;
            pl.virt = c.rehang;
            pl.weight = face.weight();
            pl.done = true;
            NodeId u = face.u(), v = face.v();
            if (far[i] != kNone) {
                pl.phase = c.rehang ? Phase::OuterRehang : Phase::AugCompatible;
                pl.weight = aug[ix(far[i])];
                pl.a = u;
                pl.b = far[i];
                pl.backup = {{u, v}};
                pl.backup.insert(pl.backup.end(), c.backup.begin(), c.backup.end());
                continue;
            }
            if (t[i] == kNone) {
                pl.phase = c.rehang ? Phase::OuterRehang : Phase::SmallWeightsPath;
                pl.a = u;
                pl.b = v;
                pl.backup = c.backup;
                continue;
            }
            pl.weight = aug[ix(s[i])];
            if (outer[i]) {
                auto [z1, z2] = *outer[i];
                if (f.pl[ix(z1)] > f.pl[ix(z2)]) std::swap(z1, z2);
                pl.phase = c.rehang ? Phase::OuterRehang : Phase::AugHiddenDetour;
                pl.a = u;
                pl.b = z2;
                pl.backup = {{u, z1}, {u, v}};
                pl.backup.insert(pl.backup.end(), c.backup.begin(), c.backup.end());
            } else {
                pl.phase = c.rehang ? Phase::OuterRehang : Phase::AugCompatible;
                pl.a = u;
                pl.b = t[i];
                pl.backup = {{u, v}};
                pl.backup.insert(pl.backup.end(), c.backup.begin(), c.backup.end());
            }
        }
    }

    // Mark all paths at once, then audit every part.
    std::vector<PathQuery> q(PP);
    for (Sz i = 0; i < PP; ++i) q[i] = {plan[i].a, plan[i].b};
    res.marked = mark_path(net, f, q);

    res.witnesses.resize(PP);
    for (Sz i = 0; i < PP; ++i) {
        Plan& pl = plan[i];
        SeparatorWitness w;
        w.part = static_cast<int>(i);
        w.phase = pl.phase;
        w.edge_u = pl.eu;
        w.edge_v = pl.ev;
        w.edge_virtual = pl.virt;
        w.weight = pl.weight;
        w.root = f.roots[i];
        w.root_after = root_after_neighbor(f, w.root);
        auto attempt = [&](NodeId a, NodeId b) {
            w.a = a;
            w.b = b;
            w.S = idx.path(a, b);
            return verify_witness(g, p, w, &f.parent);
        };
        WitnessReport rep = attempt(pl.a, pl.b);
        for (Sz k = 0; !rep.ok && k < pl.backup.size(); ++k) {
            rep = attempt(pl.backup[k].first, pl.backup[k].second);
            if (rep.ok) ++res.stats.fallbacks, ++res.stats.fallback_counts[static_cast<Sz>(pl.phase)];
        }
        if (!rep.ok)
            throw Error(Errc::InternalWitnessMismatch,
                        "part " + std::to_string(i) + " (" + phase_name(pl.phase) + "): " + rep.violation);
        if (w.a != pl.a || w.b != pl.b) {
            // The fallback path replaces the marked one.
            for (NodeId x : idx.path(pl.a, pl.b)) res.marked[ix(x)] = 0;
            for (NodeId x : w.S) res.marked[ix(x)] = 1;
        }
        ++res.stats.phase_counts[static_cast<Sz>(w.phase)];
        res.witnesses[i] = std::move(w);
    }
    return res;
}

WitnessReport verify_witness(const PlanarGraph& g, const Partition& p, const SeparatorWitness& w,
                             const std::vector<NodeId>* parent) {
    auto fail = [](std::string why) { return WitnessReport{false, std::move(why)}; };
    if (w.part < 0 || w.part >= p.count()) return fail("part id out of range");
    const auto& part = p.parts[static_cast<Sz>(w.part)];
    const auto n = static_cast<std::int64_t>(part.size());
    auto in_part = [&](NodeId x) {
        return x >= 0 && ix(x) < g.n() && p.part_of[ix(x)] == w.part;
    };
    if (w.S.empty()) return fail("empty separator");
    if (w.S.front() != w.a || w.S.back() != w.b) return fail("path endpoints differ from (a, b)");
    std::vector<char> seen(g.n(), 0);
    for (Sz k = 0; k < w.S.size(); ++k) {
        NodeId x = w.S[k];
        if (!in_part(x)) return fail("node " + std::to_string(x) + " not in part");
        if (seen[ix(x)]) return fail("node " + std::to_string(x) + " repeated");
        seen[ix(x)] = 1;
        if (k == 0) continue;
        NodeId y = w.S[k - 1];
        if (!g.has_edge(x, y)) return fail("nodes " + std::to_string(y) + " and " + std::to_string(x) + " not adjacent");
        if (parent && (*parent)[ix(x)] != y && (*parent)[ix(y)] != x)
            return fail("nodes " + std::to_string(y) + " and " + std::to_string(x) + " not joined by a tree edge");
    }
    auto verdict = oracle::check_separator(g, part, w.S);
    if (!verdict.ok) return fail("balance: " + verdict.reason);
    if (!oracle::share_face(g, part, w.a, w.b)) return fail("endpoints do not share a face");

    bool real_edge = !w.edge_virtual && w.edge_u != kNone;
    if (real_edge && w.phase == Phase::BalancedReal) {
        if (!in_part(w.edge_u) || !in_part(w.edge_v) || !g.has_edge(w.edge_u, w.edge_v))
            return fail("defining edge is not an edge of the part");
        if (!((w.a == w.edge_u && w.b == w.edge_v) || (w.a == w.edge_v && w.b == w.edge_u)))
            return fail("path does not end at the defining edge");
        if (!third(n).contains(w.weight)) return fail("weight " + std::to_string(w.weight) + " out of range");
        if (w.S.size() < 3) return fail("defining edge closes no cycle");
        // Recount on G[P_i] + r0 with the dual-graph oracle.
        NodeId local_after = kNone;
        if (!in_part(w.root)) return fail("root not in part");
        NodeId first = w.root;
        for (NodeId y : g.rotation(w.root))
            if (in_part(y)) {
                first = y;
                break;
            }
        Induced sub = induced(g, part, Dart{w.root, first});
        if (w.root_after != kNone) {
            const auto& rot = g.rotation(w.root);
            int at = g.index_of(w.root, w.root_after);
            if (at < 0) return fail("root corner is not a neighbor");
            auto deg = static_cast<int>(rot.size());
            for (int k = 0; k < deg; ++k) {
                NodeId y = rot[static_cast<Sz>(((at - k) % deg + deg) % deg)];
                if (in_part(y)) {
                    local_after = sub.to_sub[ix(y)];
                    break;
                }
            }
        }
        PlanarGraph h = attach_leaf(sub.graph, sub.to_sub[ix(w.root)], local_after);
        std::vector<NodeId> cyc;
        for (NodeId x : w.S) cyc.push_back(sub.to_sub[ix(x)]);
        auto inside = oracle::inside_of_cycle(h, cyc, static_cast<NodeId>(h.n() - 1));
        std::int64_t cnt = 0;
        for (char c : inside) cnt += c != 0;
        if (w.weight < cnt || w.weight > cnt + static_cast<std::int64_t>(w.S.size()))
            return fail("weight " + std::to_string(w.weight) + " disagrees with recount " + std::to_string(cnt));
    }
    return {};
}

std::string witnesses_to_json(const std::vector<SeparatorWitness>& ws) {
    json arr = json::array();
    for (const auto& w : ws) {
        arr.push_back({{"part", w.part},
                       {"phase", phase_name(w.phase)},
                       {"edge", {{"u", w.edge_u}, {"v", w.edge_v}, {"virtual", w.edge_virtual}}},
                       {"weight", w.weight},
                       {"path", {{"a", w.a}, {"b", w.b}}},
                       {"S", w.S},
                       {"root", w.root},
                       {"root_after", w.root_after}});
    }
    return json{{"witnesses", arr}}.dump();
}

std::vector<SeparatorWitness> witnesses_from_json(const std::string& text) {
    std::vector<SeparatorWitness> out;
    try {
        auto doc = json::parse(text);
        for (const auto& j : doc.at("witnesses")) {
            SeparatorWitness w;
            w.part = j.at("part").get<int>();
            w.phase = phase_from_name(j.at("phase").get<std::string>());
            w.edge_u = j.at("edge").at("u").get<NodeId>();
            w.edge_v = j.at("edge").at("v").get<NodeId>();
            w.edge_virtual = j.at("edge").at("virtual").get<bool>();
            w.weight = j.at("weight").get<std::int64_t>();
            w.a = j.at("path").at("a").get<NodeId>();
            w.b = j.at("path").at("b").get<NodeId>();
            w.S = j.at("S").get<std::vector<NodeId>>();
            w.root = j.at("root").get<NodeId>();
            w.root_after = j.at("root_after").get<NodeId>();
            out.push_back(std::move(w));
        }
    } catch (const json::exception& e) {
        throw Error(Errc::SchemaViolation, std::string("witness json: ") + e.what());
    }
    return out;
}

}  // namespace plansep

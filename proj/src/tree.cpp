#include "plansep/tree.hpp"

#include <algorithm>
#include <numeric>

namespace plansep {

namespace {

using Sz = std::size_t;

Sz ix(NodeId v) { return static_cast<Sz>(v); }

void fill_statistics(Forest& f) {
    const Sz n = f.n();
    f.depth.assign(n, 0);
    f.size.assign(n, 0);
    f.pl.assign(n, 0);
    f.pr.assign(n, 0);
    auto order = f.bfs_order();
    for (NodeId v : order)
        if (f.parent[ix(v)] != kNone) f.depth[ix(v)] = f.depth[ix(f.parent[ix(v)])] + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        f.size[ix(*it)] += 1;
        if (f.parent[ix(*it)] != kNone) f.size[ix(f.parent[ix(*it)])] += f.size[ix(*it)];
    }
    for (NodeId r : f.roots) {
        for (int side = 0; side < 2; ++side) {
            auto& pos = side == 0 ? f.pl : f.pr;
            int counter = 0;
            std::vector<NodeId> st{r};
            while (!st.empty()) {
                NodeId v = st.back();
                st.pop_back();
                pos[ix(v)] = ++counter;
                const auto& ks = f.children[ix(v)];
                if (side == 0) st.insert(st.end(), ks.begin(), ks.end());
                else st.insert(st.end(), ks.rbegin(), ks.rend());
            }
        }
    }
}

// Forest over the components of the edge set `tree` restricted to `label`
// classes, rooted at the smallest id of each class.
Forest fragment_forest(const PlanarGraph& g, const std::vector<int>& label,
                       const std::vector<std::vector<NodeId>>& adj) {
    const Sz n = g.n();
    Forest f;
    f.g = &g;
    f.part.assign(n, -1);
    f.parent.assign(n, kNone);
    f.root_after.assign(n, -1);
    for (Sz s = 0; s < n; ++s) {
        if (label[s] < 0 || f.part[s] >= 0) continue;
        int id = f.parts();
        f.roots.push_back(static_cast<NodeId>(s));
        f.part[s] = id;
        f.root_after[s] = g.degree(static_cast<NodeId>(s)) - 1;
        std::vector<NodeId> q{static_cast<NodeId>(s)};
        for (Sz h = 0; h < q.size(); ++h)
            for (NodeId u : adj[ix(q[h])])
                if (f.part[ix(u)] < 0) {
                    f.part[ix(u)] = id;
                    f.parent[ix(u)] = q[h];
                    q.push_back(u);
                }
    }
    f.rebuild_children();
    return f;
}

}  // namespace

std::vector<Corner> outer_corners(const PlanarGraph& g, const Partition& p) {
    std::vector<Corner> out(static_cast<Sz>(p.count()));
    Dart w = g.outer();
    if (w.from != kNone && w.from != w.to) {
        Sz k0 = g.dart(w.from, w.to);
        Sz k = k0;
        do {
            NodeId x = g.owner(k);
            int part = p.part_of[ix(x)];
            if (part >= 0 && out[static_cast<Sz>(part)].node == kNone) {
                int deg = g.degree(x);
                int i = static_cast<int>(k - g.offset(x));
                out[static_cast<Sz>(part)] = {x, (i - 1 + deg) % deg};
            }
            k = g.face_next(k);
        } while (k != k0);
    }
    for (int i = 0; i < p.count(); ++i) {
        auto& c = out[static_cast<Sz>(i)];
        if (c.node != kNone) continue;
        const auto& members = p.parts[static_cast<Sz>(i)];
        if (members.empty()) continue;
        c.node = members.front();
        c.after = g.degree(c.node) - 1;
    }
    return out;
}

Forest forest_from_parents(const PlanarGraph& g, const std::vector<int>& part, const std::vector<NodeId>& parent,
                           const std::vector<Corner>& roots) {
    Forest f;
    f.g = &g;
    f.part = part;
    f.parent = parent;
    f.root_after.assign(g.n(), -1);
    for (const Corner& c : roots) {
        if (parent[ix(c.node)] != kNone) throw Error(Errc::SchemaViolation, "root " + std::to_string(c.node) + " has a parent");
        f.roots.push_back(c.node);
        f.root_after[ix(c.node)] = g.degree(c.node) > 0 ? c.after : -1;
    }
    f.rebuild_children();
    fill_statistics(f);
    return f;
}

void dfs_orders(Network& net, Forest& f) {
    const PlanarGraph& g = *f.g;
    const Sz n = f.n();
    PartContext ctx{net, f};
    Values ones(n, 1);
    auto size = descendant_sum(ctx, Fold::Sum, ones);
    auto depth = ancestor_sum(ctx, Fold::Sum, ones);

    // Children report subtree sizes to their parents.
    std::vector<std::optional<Message>> out(g.dart_count());
    for (Sz v = 0; v < n; ++v)
        if (f.part[v] >= 0 && f.parent[v] != kNone)
            out[g.offset(static_cast<NodeId>(v)) + static_cast<Sz>(f.parent_port[v])] = Message{static_cast<std::uint64_t>(size[v])};
    auto in = neighbor_exchange(net, out);

    // Parents answer with each child's offset in both orders.
    std::vector<std::optional<Message>> back(g.dart_count());
    for (Sz v = 0; v < n; ++v) {
        const auto& ks = f.children[v];
        if (ks.empty()) continue;
        std::vector<std::int64_t> s(ks.size());
        for (Sz j = 0; j < ks.size(); ++j) s[j] = static_cast<std::int64_t>((*in[g.dart(static_cast<NodeId>(v), ks[j])])[0]);
        std::int64_t total = std::accumulate(s.begin(), s.end(), std::int64_t{0});
        std::int64_t before = 0;
        for (Sz j = 0; j < ks.size(); ++j) {
            std::int64_t left = 1 + (total - before - s[j]);
            std::int64_t right = 1 + before;
            back[g.dart(static_cast<NodeId>(v), ks[j])] = Message{static_cast<std::uint64_t>(left), static_cast<std::uint64_t>(right)};
            before += s[j];
        }
    }
    auto got = neighbor_exchange(net, back);
    Values offl(n, 0), offr(n, 0);
    for (Sz v = 0; v < n; ++v)
        if (f.part[v] >= 0 && f.parent[v] != kNone) {
            const Message& m = *got[g.offset(static_cast<NodeId>(v)) + static_cast<Sz>(f.parent_port[v])];
            offl[v] = static_cast<std::int64_t>(m[0]);
            offr[v] = static_cast<std::int64_t>(m[1]);
        }
    auto pl = ancestor_sum(ctx, Fold::Sum, offl);
    auto pr = ancestor_sum(ctx, Fold::Sum, offr);

    f.depth.assign(n, 0);
    f.size.assign(n, 0);
    f.pl.assign(n, 0);
    f.pr.assign(n, 0);
    for (Sz v = 0; v < n; ++v) {
        if (f.part[v] < 0) continue;
        f.size[v] = static_cast<int>(size[v]);
        f.depth[v] = static_cast<int>(depth[v] - 1);
        f.pl[v] = static_cast<int>(pl[v] + 1);
        f.pr[v] = static_cast<int>(pr[v] + 1);
    }
}

Forest reroot(Network& net, const Forest& f, const std::vector<Corner>& at) {
    const PlanarGraph& g = *f.g;
    const Sz n = f.n();
    if (at.size() != static_cast<Sz>(f.parts())) throw Error(Errc::SchemaViolation, "one corner per part expected");
    std::vector<NodeId> v0(at.size(), kNone);
    for (Sz i = 0; i < at.size(); ++i) v0[i] = at[i].node;
    PartContext ctx{net, f};
    auto rel = relation_to(ctx, v0);

    // Each node tells its neighbors whether it lies on the path up from v0.
    std::vector<std::optional<Message>> flag(n);
    for (Sz v = 0; v < n; ++v)
        if (f.part[v] >= 0) flag[v] = Message{rel[v] == Relation::Self || rel[v] == Relation::Ancestor ? 1u : 0u};
    auto in = neighbor_exchange_all(net, flag);

    Forest nf;
    nf.g = &g;
    nf.part = f.part;
    nf.parent = f.parent;
    nf.root_after = f.root_after;
    nf.roots = f.roots;
    for (Sz v = 0; v < n; ++v) {
        if (f.part[v] < 0) continue;
        if (rel[v] == Relation::Self) {
            nf.parent[v] = kNone;
        } else if (rel[v] == Relation::Ancestor) {
            for (NodeId c : f.children[v])
                if ((*in[g.dart(static_cast<NodeId>(v), c)])[0] == 1) nf.parent[v] = c;
        }
    }
    for (Sz i = 0; i < at.size(); ++i) {
        if (at[i].node == kNone) continue;
        NodeId old = f.roots[i];
        if (old != at[i].node) nf.root_after[ix(old)] = -1;
        nf.roots[i] = at[i].node;
        nf.root_after[ix(at[i].node)] = g.degree(at[i].node) > 0 ? at[i].after : -1;
    }
    nf.rebuild_children();
    dfs_orders(net, nf);
    return nf;
}

Forest build_part_trees(Network& net, const Partition& p, int* phases_out, const std::vector<char>* preferred) {
    const PlanarGraph& g = net.graph();
    const Sz n = g.n();
    validate_partition(g, p);
    std::vector<std::vector<NodeId>> adj(n);
    std::vector<int> label(p.part_of);
    int phases = 0;
    // With preferred nodes, edges between two of them merge first (weight 0
    // before weight 1), so preferred nodes connected in G[P_i] stay connected
    // in the tree.
    bool first_stage = preferred != nullptr;
    Forest fr = fragment_forest(g, label, adj);
    while (true) {
        std::vector<std::optional<Message>> id(n);
        for (Sz v = 0; v < n; ++v)
            if (fr.part[v] >= 0) id[v] = Message{static_cast<std::uint64_t>(fr.roots[static_cast<Sz>(fr.part[v])])};
        auto in = neighbor_exchange_all(net, id);

        // Lightest weight-0 outgoing edge per node, keyed by its endpoints.
        Values key(n, 0);
        std::vector<char> eligible(n, 0);
        for (Sz v = 0; v < n; ++v) {
            if (fr.part[v] < 0) continue;
            NodeId my_root = fr.roots[static_cast<Sz>(fr.part[v])];
            for (Sz i = 0; i < static_cast<Sz>(g.degree(static_cast<NodeId>(v))); ++i) {
                NodeId u = g.rotation(static_cast<NodeId>(v))[i];
                if (p.part_of[ix(u)] != p.part_of[v]) continue;
                if (first_stage && !((*preferred)[v] && (*preferred)[ix(u)])) continue;
                const auto& m = in[g.offset(static_cast<NodeId>(v)) + i];
                if (!m || static_cast<NodeId>((*m)[0]) == my_root) continue;
                std::int64_t k = static_cast<std::int64_t>(std::min<Sz>(v, ix(u)) * n + std::max<Sz>(v, ix(u)));
                if (!eligible[v] || k < key[v]) key[v] = k;
                eligible[v] = 1;
            }
        }
        PartContext ctx{net, fr};
        auto pick = find_extreme(ctx, Extreme::Min, key, &eligible);
        bool merged = false;
        for (NodeId who : pick) {
            if (who == kNone) continue;
            auto a = static_cast<NodeId>(key[ix(who)] / static_cast<std::int64_t>(n));
            auto b = static_cast<NodeId>(key[ix(who)] % static_cast<std::int64_t>(n));
            if (std::find(adj[ix(a)].begin(), adj[ix(a)].end(), b) != adj[ix(a)].end()) continue;
            adj[ix(a)].push_back(b);
            adj[ix(b)].push_back(a);
            merged = true;
        }
        if (!merged) {
            if (!first_stage) break;
            first_stage = false;
            continue;
        }
        ++phases;
        fr = fragment_forest(g, label, adj);
        // New fragment leaders announce themselves.
        PartContext nctx{net, fr};
        std::vector<std::pair<NodeId, Message>> src;
        for (NodeId r : fr.roots) src.emplace_back(r, Message{static_cast<std::uint64_t>(r)});
        broadcast_within_part(nctx, src);
    }
    if (fr.parts() != p.count()) throw Error(Errc::DisconnectedPart, "fragments do not match parts");

    // Relabel fragments by part index, then move each root to its outer corner.
    Forest f;
    f.g = &g;
    f.part = p.part_of;
    f.parent = fr.parent;
    f.root_after = fr.root_after;
    f.roots.assign(static_cast<Sz>(p.count()), kNone);
    for (NodeId r : fr.roots) f.roots[static_cast<Sz>(p.part_of[ix(r)])] = r;
    f.rebuild_children();
    dfs_orders(net, f);
    if (phases_out) *phases_out = phases;
    return reroot(net, f, outer_corners(g, p));
}

Forest build_part_trees(Network& net, const Partition& p) { return build_part_trees(net, p, nullptr, nullptr); }
Forest build_part_trees(Network& net, const Partition& p, int* merge_phases) {
    return build_part_trees(net, p, merge_phases, nullptr);
}

std::vector<NodeId> lca(Network& net, const Forest& f, const std::vector<PathQuery>& q) {
    if (q.size() != static_cast<Sz>(f.parts())) throw Error(Errc::SchemaViolation, "one query per part expected");
    std::vector<NodeId> a(q.size(), kNone), b(q.size(), kNone);
    for (Sz i = 0; i < q.size(); ++i) {
        auto [u, v] = q[i];
        if (u == kNone && v == kNone) continue;
        if (u == kNone || v == kNone || f.part[ix(u)] != static_cast<int>(i) || f.part[ix(v)] != static_cast<int>(i))
            throw Error(Errc::CrossPartQuery, "query endpoints not both in part " + std::to_string(i));
        a[i] = u;
        b[i] = v;
    }
    PartContext ctx{net, f};
    auto ru = relation_to(ctx, a);
    auto rv = relation_to(ctx, b);
    const Sz n = f.n();
    std::vector<char> common(n, 0);
    Values depth(n, 0);
    for (Sz v = 0; v < n; ++v) {
        if (f.part[v] < 0) continue;
        depth[v] = f.depth[v];
        bool up_u = ru[v] == Relation::Self || ru[v] == Relation::Ancestor;
        bool up_v = rv[v] == Relation::Self || rv[v] == Relation::Ancestor;
        common[v] = up_u && up_v;
    }
    return find_extreme(ctx, Extreme::Max, depth, &common);
}

std::vector<char> mark_path(Network& net, const Forest& f, const std::vector<PathQuery>& q) {
    auto w = lca(net, f, q);
    std::vector<NodeId> a(q.size(), kNone), b(q.size(), kNone);
    for (Sz i = 0; i < q.size(); ++i)
        if (w[i] != kNone) a[i] = q[i].first, b[i] = q[i].second;
    PartContext ctx{net, f};
    auto ru = relation_to(ctx, a);
    auto rv = relation_to(ctx, b);
    std::vector<char> mark(f.n(), 0);
    for (Sz v = 0; v < f.n(); ++v) {
        if (f.part[v] < 0 || w[static_cast<Sz>(f.part[v])] == kNone) continue;
        bool up_u = ru[v] == Relation::Self || ru[v] == Relation::Ancestor;
        bool up_v = rv[v] == Relation::Self || rv[v] == Relation::Ancestor;
        mark[v] = (up_u != up_v) || static_cast<NodeId>(v) == w[static_cast<Sz>(f.part[v])];
    }
    return mark;
}

}  // namespace plansep

#include "plansep/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plansep::oracle {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<char> inside_of_cycle(const PlanarGraph& h, const std::vector<NodeId>& cycle, NodeId outside_ref) {
    if (cycle.size() < 3) throw Error(Errc::NotACycle, "cycle needs three nodes");
    std::vector<char> on(h.n(), 0);
    for (NodeId x : cycle) {
        if (on[static_cast<std::size_t>(x)]) throw Error(Errc::NotACycle, "repeated node");
        on[static_cast<std::size_t>(x)] = 1;
    }
    if (on[static_cast<std::size_t>(outside_ref)]) throw Error(Errc::NotACycle, "reference node on the cycle");
    std::set<std::pair<NodeId, NodeId>> cyc;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        NodeId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!h.has_edge(a, b)) throw Error(Errc::NotACycle, "missing cycle edge");
        cyc.insert({std::min(a, b), std::max(a, b)});
    }
    int fc = 0;
    auto face = dart_faces(h, &fc);
    Dsu dsu(fc);
    for (std::size_t k = 0; k < h.dart_count(); ++k) {
        NodeId a = h.owner(k), b = h.head(k);
        if (cyc.count({std::min(a, b), std::max(a, b)})) continue;
        dsu.unite(face[k], face[h.twin(k)]);
    }
    int outside = dsu.find(face[h.offset(outside_ref)]);
    std::vector<char> inside(h.n(), 0);
    bool any_split = false;
    for (std::size_t k = 0; k < h.dart_count(); ++k)
        if (dsu.find(face[k]) != outside) any_split = true;
    if (!any_split) throw Error(Errc::NotACycle, "cycle does not separate the faces");
    for (std::size_t v = 0; v < h.n(); ++v) {
        if (on[v] || h.degree(static_cast<NodeId>(v)) == 0) continue;
        inside[v] = dsu.find(face[h.offset(static_cast<NodeId>(v))]) != outside;
    }
    return inside;
}

Orders dfs_orders(const PlanarGraph& g, const std::vector<NodeId>& parent, NodeId root, NodeId root_after) {
    Orders o;
    o.left.assign(g.n(), 0);
    o.right.assign(g.n(), 0);
    // Children of v in clockwise order starting after the parent slot.
    auto kids = [&](NodeId v) {
        std::vector<NodeId> out;
        const auto& r = g.rotation(v);
        if (r.empty()) return out;
        NodeId start_after = (v == root) ? root_after : parent[static_cast<std::size_t>(v)];
        std::size_t s = 0;
        if (start_after != kNone) s = static_cast<std::size_t>(g.index_of(v, start_after)) + 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            NodeId c = r[(s + i) % r.size()];
            if (c != root && parent[static_cast<std::size_t>(c)] == v) out.push_back(c);
        }
        return out;
    };
    for (int side = 0; side < 2; ++side) {
        auto& pos = side == 0 ? o.left : o.right;
        int counter = 0;
        std::vector<NodeId> stack{root};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            pos[static_cast<std::size_t>(v)] = ++counter;
            auto ks = kids(v);
            // Left order takes the greatest position first, right the smallest.
            if (side == 0) {
                for (NodeId c : ks) stack.push_back(c);
            } else {
                for (auto it = ks.rbegin(); it != ks.rend(); ++it) stack.push_back(*it);
            }
        }
    }
    return o;
}

bool is_ancestor(const std::vector<NodeId>& parent, NodeId a, NodeId b) {
    for (NodeId x = b; x != kNone; x = parent[static_cast<std::size_t>(x)])
        if (x == a) return true;
    return false;
}

NodeId lca(const std::vector<NodeId>& parent, NodeId u, NodeId v) {
    std::set<NodeId> up;
    for (NodeId x = u; x != kNone; x = parent[static_cast<std::size_t>(x)]) up.insert(x);
    for (NodeId x = v; x != kNone; x = parent[static_cast<std::size_t>(x)])
        if (up.count(x)) return x;
    return kNone;
}

std::vector<NodeId> tree_path(const std::vector<NodeId>& parent, NodeId u, NodeId v) {
    NodeId w = lca(parent, u, v);
    std::vector<NodeId> a, b;
    for (NodeId x = u; x != w; x = parent[static_cast<std::size_t>(x)]) a.push_back(x);
    a.push_back(w);
    for (NodeId x = v; x != w; x = parent[static_cast<std::size_t>(x)]) b.push_back(x);
    a.insert(a.end(), b.rbegin(), b.rend());
    return a;
}

std::vector<int> depths(const std::vector<NodeId>& parent, const std::vector<NodeId>& members) {
    std::vector<int> d(parent.size(), -1);
    for (NodeId v : members) {
        int k = 0;
        for (NodeId x = parent[static_cast<std::size_t>(v)]; x != kNone; x = parent[static_cast<std::size_t>(x)]) ++k;
        d[static_cast<std::size_t>(v)] = k;
    }
    return d;
}

std::vector<int> subtree_sizes(const std::vector<NodeId>& parent, const std::vector<NodeId>& members) {
    std::vector<int> s(parent.size(), 0);
    for (NodeId v : members)
        for (NodeId x = v; x != kNone; x = parent[static_cast<std::size_t>(x)]) ++s[static_cast<std::size_t>(x)];
    return s;
}

std::vector<int> tree_distances(const std::vector<NodeId>& parent, const std::vector<NodeId>& members, NodeId v0) {
    std::vector<std::vector<NodeId>> adj(parent.size());
    for (NodeId v : members) {
        NodeId p = parent[static_cast<std::size_t>(v)];
        if (p != kNone) {
            adj[static_cast<std::size_t>(v)].push_back(p);
            adj[static_cast<std::size_t>(p)].push_back(v);
        }
    }
    std::vector<int> d(parent.size(), -1);
    std::vector<NodeId> q{v0};
    d[static_cast<std::size_t>(v0)] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (NodeId u : adj[static_cast<std::size_t>(q[h])])
            if (d[static_cast<std::size_t>(u)] < 0) {
                d[static_cast<std::size_t>(u)] = d[static_cast<std::size_t>(q[h])] + 1;
                q.push_back(u);
            }
    return d;
}

Verdict check_separator(const PlanarGraph& g, const std::vector<NodeId>& part, const std::vector<NodeId>& S,
                        const std::vector<NodeId>* parent) {
    Verdict out;
    std::vector<char> in_part(g.n(), 0), in_s(g.n(), 0), seen(g.n(), 0);
    for (NodeId v : part) in_part[static_cast<std::size_t>(v)] = 1;
    for (NodeId v : S) {
        if (!in_part[static_cast<std::size_t>(v)]) {
            out.ok = false;
            out.reason = "separator node " + std::to_string(v) + " outside the part";
            return out;
        }
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    std::size_t limit = (2 * part.size() + 2) / 3;
    for (NodeId s : part) {
        if (in_s[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        std::size_t size = 0;
        std::vector<NodeId> st{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!st.empty()) {
            NodeId v = st.back();
            st.pop_back();
            ++size;
            for (NodeId u : g.rotation(v))
                if (in_part[static_cast<std::size_t>(u)] && !in_s[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    st.push_back(u);
                }
        }
        out.largest = std::max(out.largest, size);
    }
    if (out.largest > limit) {
        out.ok = false;
        out.reason = "component of size " + std::to_string(out.largest) + " exceeds " + std::to_string(limit);
        return out;
    }
    if (parent && !S.empty()) {
        std::size_t tree_edges = 0;
        std::vector<int> deg(g.n(), 0);
        for (NodeId v : S) {
            NodeId p = (*parent)[static_cast<std::size_t>(v)];
            if (p != kNone && in_s[static_cast<std::size_t>(p)]) {
                ++tree_edges;
                ++deg[static_cast<std::size_t>(v)];
                ++deg[static_cast<std::size_t>(p)];
            }
        }
        bool path = tree_edges + 1 == S.size();
        for (NodeId v : S) path = path && deg[static_cast<std::size_t>(v)] <= 2;
        if (!path) {
            out.ok = false;
            out.reason = "separator is not a tree path";
        }
    }
    return out;
}

bool share_face(const PlanarGraph& g, const std::vector<NodeId>& part, NodeId a, NodeId b) {
    if (a == b || g.has_edge(a, b)) return true;
    NodeId p0 = part.at(0), nb = p0;
    std::vector<char> in(g.n(), 0);
    for (NodeId v : part) in[static_cast<std::size_t>(v)] = 1;
    for (NodeId u : g.rotation(p0))
        if (in[static_cast<std::size_t>(u)]) {
            nb = u;
            break;
        }
    auto sub = induced(g, part, Dart{p0, nb});
    NodeId la = sub.to_sub[static_cast<std::size_t>(a)], lb = sub.to_sub[static_cast<std::size_t>(b)];
    if (la == kNone || lb == kNone) return false;
    for (const auto& f : trace_faces(sub.graph)) {
        bool ha = false, hb = false;
        for (NodeId x : f.walk) ha = ha || x == la, hb = hb || x == lb;
        if (ha && hb) return true;
    }
    return false;
}

Verdict check_dfs_tree(const PlanarGraph& g, const std::vector<NodeId>& parent, NodeId r) {
    if (parent.size() != g.n()) throw Error(Errc::NotSpanning, "parent array size differs from n");
    if (parent[static_cast<std::size_t>(r)] != kNone) throw Error(Errc::NotSpanning, "root has a parent");
    std::vector<std::vector<NodeId>> kids(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
        NodeId p = parent[v];
        if (static_cast<NodeId>(v) == r) continue;
        if (p == kNone) throw Error(Errc::NotSpanning, "node " + std::to_string(v) + " has no parent");
        if (!g.has_edge(static_cast<NodeId>(v), p)) throw Error(Errc::NotSpanning, "parent link is not an edge");
        kids[static_cast<std::size_t>(p)].push_back(static_cast<NodeId>(v));
    }
    std::vector<int> tin(g.n(), -1), tout(g.n(), -1);
    int clock = 0;
    std::vector<std::pair<NodeId, std::size_t>> st{{r, 0}};
    tin[static_cast<std::size_t>(r)] = clock++;
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (i < kids[static_cast<std::size_t>(v)].size()) {
            NodeId c = kids[static_cast<std::size_t>(v)][i++];
            tin[static_cast<std::size_t>(c)] = clock++;
            st.emplace_back(c, 0);
        } else {
            tout[static_cast<std::size_t>(v)] = clock++;
            st.pop_back();
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (tin[v] < 0) throw Error(Errc::NotSpanning, "node " + std::to_string(v) + " unreachable from root");
    Verdict out;
    auto anc = [&](NodeId a, NodeId b) {
        return tin[static_cast<std::size_t>(a)] <= tin[static_cast<std::size_t>(b)] &&
               tout[static_cast<std::size_t>(b)] <= tout[static_cast<std::size_t>(a)];
    };
    for (std::size_t v = 0; v < g.n(); ++v)
        for (NodeId u : g.rotation(static_cast<NodeId>(v))) {
            NodeId a = static_cast<NodeId>(v);
            if (a > u) continue;
            if (!anc(a, u) && !anc(u, a)) {
                out.ok = false;
                out.reason = "cross edge " + std::to_string(a) + "-" + std::to_string(u);
                out.edge_u = a;
                out.edge_v = u;
                return out;
            }
        }
    return out;
}

bool insertable(const PlanarGraph& g, NodeId u, NodeId u_after, NodeId v, NodeId v_after) {
    try {
        insert_edge(g, u, u_after, v, v_after, g.outer());
        return true;
    } catch (const Error& e) {
        if (e.code() == Errc::NotPlanarEmbedding) return false;
        throw;
    }
}

}  // namespace plansep::oracle

#include "plansep/forest.hpp"

namespace plansep {

int Forest::slot_of_index(NodeId v, int i) const {
    auto V = static_cast<std::size_t>(v);
    int deg = g->degree(v);
    if (parent[V] != kNone) return 1 + ((i - parent_port[V]) % deg + deg) % deg;
    return 2 + ((i - (root_after[V] + 1)) % deg + deg) % deg;
}

int Forest::slot(NodeId v, NodeId x) const {
    int i = g->index_of(v, x);
    if (i < 0) throw Error(Errc::NodeNotInPart, std::to_string(x) + " is not adjacent to " + std::to_string(v));
    return slot_of_index(v, i);
}

void Forest::rebuild_children() {
    const std::size_t n = part.size();
    parent_port.assign(n, -1);
    children.assign(n, {});
    for (std::size_t v = 0; v < n; ++v)
        if (part[v] >= 0 && parent[v] != kNone) parent_port[v] = g->index_of(static_cast<NodeId>(v), parent[v]);
    for (std::size_t v = 0; v < n; ++v) {
        if (part[v] < 0) continue;
        const auto& r = g->rotation(static_cast<NodeId>(v));
        if (r.empty()) continue;
        int start = parent[v] != kNone ? parent_port[v] + 1 : root_after[v] + 1;
        int deg = static_cast<int>(r.size());
        for (int k = 0; k < deg; ++k) {
            NodeId c = r[static_cast<std::size_t>((start + k) % deg)];
            if (parent[static_cast<std::size_t>(c)] == static_cast<NodeId>(v) && part[static_cast<std::size_t>(c)] == part[v])
                children[v].push_back(c);
        }
    }
}

std::vector<NodeId> Forest::bfs_order() const {
    std::vector<NodeId> q(roots.begin(), roots.end());
    for (std::size_t h = 0; h < q.size(); ++h)
        for (NodeId c : children[static_cast<std::size_t>(q[h])]) q.push_back(c);
    return q;
}

std::vector<NodeId> Forest::members_of(int p) const {
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < part.size(); ++v)
        if (part[v] == p) out.push_back(static_cast<NodeId>(v));
    return out;
}

}  // namespace plansep

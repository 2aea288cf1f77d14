#pragma once

#include <string>
#include <vector>

#include "plansep/planar_graph.hpp"

// Sequential ground truth. Nothing here reads DFS intervals or weight
// formulas; faces come from rotation tracing and trees from parent arrays.
namespace plansep::oracle {

// Nodes strictly inside the simple cycle `cycle` (consecutive nodes
// adjacent in h, closing edge implied), on the side away from `outside_ref`.
std::vector<char> inside_of_cycle(const PlanarGraph& h, const std::vector<NodeId>& cycle, NodeId outside_ref);

struct Orders {
    std::vector<int> left, right;  // 1-based, 0 for nodes outside the tree
};

// Plain recursive pre-orders. `root_after` places the virtual root right
// after that neighbor of the root (kNone: before the first neighbor).
Orders dfs_orders(const PlanarGraph& g, const std::vector<NodeId>& parent, NodeId root, NodeId root_after);

std::vector<NodeId> tree_path(const std::vector<NodeId>& parent, NodeId u, NodeId v);
NodeId lca(const std::vector<NodeId>& parent, NodeId u, NodeId v);
std::vector<int> subtree_sizes(const std::vector<NodeId>& parent, const std::vector<NodeId>& members);
std::vector<int> depths(const std::vector<NodeId>& parent, const std::vector<NodeId>& members);
// Distance from v0 along tree edges only.
std::vector<int> tree_distances(const std::vector<NodeId>& parent, const std::vector<NodeId>& members, NodeId v0);
bool is_ancestor(const std::vector<NodeId>& parent, NodeId a, NodeId b);

struct Verdict {
    bool ok = true;
    std::string reason;
    std::size_t largest = 0;  // largest component of G[part] - S
    NodeId edge_u = kNone, edge_v = kNone;
};

// Components of G[part] - S must have at most ceil(2|part|/3) nodes; with a
// parent array, S must also be a path of that tree.
Verdict check_separator(const PlanarGraph& g, const std::vector<NodeId>& part, const std::vector<NodeId>& S,
                        const std::vector<NodeId>* parent = nullptr);

// a and b coincide, are adjacent, or lie on a common face of G[part], so
// that a-b can be drawn without crossing.
bool share_face(const PlanarGraph& g, const std::vector<NodeId>& part, NodeId a, NodeId b);

// Throws NotSpanning unless `parent` is a spanning tree of g rooted at r.
Verdict check_dfs_tree(const PlanarGraph& g, const std::vector<NodeId>& parent, NodeId r);

// Whether u-v can be added between the given corners without losing
// planarity (Euler re-validation).
bool insertable(const PlanarGraph& g, NodeId u, NodeId u_after, NodeId v, NodeId v_after);

}  // namespace plansep::oracle

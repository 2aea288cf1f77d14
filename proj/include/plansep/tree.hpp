#pragma once

#include <utility>
#include <vector>

#include "plansep/congest.hpp"
#include "plansep/forest.hpp"
#include "plansep/primitives.hpp"

namespace plansep {

struct Corner {
    NodeId node = kNone;
    int after = -1;  // rotation index the corner follows clockwise, -1 if isolated
};

// Per part, a corner on the outer face of G[P_i]: the first node of P_i met
// walking G's outer face from the witness, else the smallest id of the part.
std::vector<Corner> outer_corners(const PlanarGraph& g, const Partition& p);

// Forest with the given parent pointers; fills children, depth, size and
// both DFS orders sequentially.
Forest forest_from_parents(const PlanarGraph& g, const std::vector<int>& part, const std::vector<NodeId>& parent,
                           const std::vector<Corner>& roots);

// Boruvka merging over intra-part edges, then rooted at outer_corners and
// annotated by dfs_orders. Throws DisconnectedPart.
Forest build_part_trees(Network& net, const Partition& p);
Forest build_part_trees(Network& net, const Partition& p, int* merge_phases);
// Same, but edges joining two `preferred` nodes are taken before all others.
Forest build_part_trees(Network& net, const Partition& p, int* merge_phases, const std::vector<char>* preferred);

// Depth, subtree size and both DFS positions through the primitives.
void dfs_orders(Network& net, Forest& f);

using PathQuery = std::pair<NodeId, NodeId>;  // (kNone, kNone) skips a part

// Per part lowest common ancestor (kNone for skipped parts).
std::vector<NodeId> lca(Network& net, const Forest& f, const std::vector<PathQuery>& q);
// Nodes on the tree path between the endpoints of each part's query.
std::vector<char> mark_path(Network& net, const Forest& f, const std::vector<PathQuery>& q);
// Re-roots each part at its corner; kNone keeps the part unchanged.
Forest reroot(Network& net, const Forest& f, const std::vector<Corner>& at);

}  // namespace plansep

#pragma once

#include <vector>

#include "plansep/planar_graph.hpp"

namespace plansep {

// One rooted spanning tree per part. The parent of a node sits at rotation
// slot 1; a root's slot 1 is the virtual root r0, placed clockwise right
// after rotation index root_after[root] (the corner on the part's outer face).
struct Forest {
    const PlanarGraph* g = nullptr;
    std::vector<int> part;
    std::vector<NodeId> roots;
    std::vector<NodeId> parent;
    std::vector<int> parent_port;
    std::vector<int> root_after;
    std::vector<std::vector<NodeId>> children;  // clockwise from slot 1

    std::vector<int> depth;
    std::vector<int> size;  // n_T(v), including v
    std::vector<int> pl;    // left DFS position, 1-based
    std::vector<int> pr;    // right DFS position, 1-based

    std::size_t n() const { return part.size(); }
    int parts() const { return static_cast<int>(roots.size()); }
    bool member(NodeId v) const { return part[static_cast<std::size_t>(v)] >= 0; }
    bool is_root(NodeId v) const { return member(v) && parent[static_cast<std::size_t>(v)] == kNone; }

    // 1-based rotation position of neighbor x around v, parent (or r0) at 1.
    int slot(NodeId v, NodeId x) const;
    // Slot of the dart leaving v at rotation index i.
    int slot_of_index(NodeId v, int i) const;
    // b lies in the subtree of a (left DFS interval test).
    bool in_subtree(NodeId a, NodeId b) const {
        auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b);
        return pl[B] >= pl[A] && pl[B] < pl[A] + size[A];
    }
    bool is_leaf(NodeId v) const { return children[static_cast<std::size_t>(v)].empty(); }

    // Recomputes parent_port and the clockwise children lists.
    void rebuild_children();
    // Members in breadth-first order from the roots.
    std::vector<NodeId> bfs_order() const;
    std::vector<NodeId> members_of(int p) const;
};

}  // namespace plansep

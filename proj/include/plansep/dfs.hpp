#pragma once

#include <string>
#include <vector>

#include "plansep/congest.hpp"
#include "plansep/planar_graph.hpp"

namespace plansep {

// Rooted subtree of G grown by whole paths. Entries of non-members are
// kNone / -1.
struct PartialDfsTree {
    NodeId root = kNone;
    std::vector<char> member;
    std::vector<NodeId> parent;
    std::vector<int> depth;
    std::vector<int> phase;  // outer phase in which the node joined (root: 0)

    static PartialDfsTree start(std::size_t n, NodeId root);
    std::size_t size() const;
};

struct JoinLedger {
    int iterations = 0;
    std::vector<int> unjoined;  // marked nodes still outside T_d before each iteration
};

// Extends t so that every separator node joins, one tree path per residual
// component and iteration. components are the components of G - T_d;
// separators[i] is an ordered path of G inside component i that separates
// it. Throws NotASeparatorInput when a separator has the wrong shape.
JoinLedger join_separators(Network& net, PartialDfsTree& t, const Partition& components,
                           const std::vector<std::vector<NodeId>>& separators, int phase);

struct PhaseRecord {
    int phase = 0;
    int components = 0;
    int largest = 0;  // largest component of G - T_d at the start of the phase
    int joined = 0;
    JoinLedger join;
};

struct DfsResult {
    PartialDfsTree tree;
    std::vector<PhaseRecord> phases;
    int separator_fallbacks = 0;
};

// DFS tree of the connected graph net.graph() rooted at root. Throws
// Disconnected.
DfsResult build_dfs(Network& net, NodeId root);

// Ceil(log_{1.5} n) + 1, the bound on outer phases.
int phase_bound(std::size_t n);

std::string dfs_to_json(const PartialDfsTree& t);
PartialDfsTree dfs_from_json(const std::string& text);

}  // namespace plansep

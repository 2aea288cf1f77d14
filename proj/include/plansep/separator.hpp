#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plansep/congest.hpp"
#include "plansep/forest.hpp"
#include "plansep/planar_graph.hpp"

namespace plansep {

enum class Phase { TreeCentroid, BalancedReal, AugCompatible, AugHiddenDetour, SmallWeightsPath, OuterRehang };

const char* phase_name(Phase p);
Phase phase_from_name(const std::string& s);  // throws SchemaViolation

// Certificate for one part's separator.
struct SeparatorWitness {
    int part = 0;
    Phase phase = Phase::TreeCentroid;
    NodeId edge_u = kNone;  // defining edge, kNone for tree_centroid
    NodeId edge_v = kNone;
    bool edge_virtual = false;
    std::int64_t weight = -1;  // weight of the defining face when one applies
    NodeId a = kNone;          // path endpoints
    NodeId b = kNone;
    std::vector<NodeId> S;     // tree path from a to b
    NodeId root = kNone;       // part tree root and the neighbor r0 follows
    NodeId root_after = kNone;
};

struct SeparatorStats {
    std::vector<int> phase_counts = std::vector<int>(6, 0);
    int fallbacks = 0;  // parts where the primary path failed the self-check
    std::vector<int> fallback_counts = std::vector<int>(6, 0);  // by phase
};

struct SeparatorResult {
    Forest forest;
    std::vector<SeparatorWitness> witnesses;  // one per part
    std::vector<char> marked;                 // union of all S_i
    SeparatorStats stats;
};

// One cycle separator per part. Throws DisconnectedPart for disconnected
// parts and InternalWitnessMismatch if a result fails its own check.
SeparatorResult compute_separators(Network& net, const Partition& p);

struct WitnessReport {
    bool ok = true;
    std::string violation;
};

// Independent recheck: S is a path of G[P_i] (and of the tree when
// `parent` is given) from a to b, a and b share a face, components of
// G[P_i] - S are balanced and a real in-range defining edge carries the
// weight recounted on the dual graph.
WitnessReport verify_witness(const PlanarGraph& g, const Partition& p, const SeparatorWitness& w,
                             const std::vector<NodeId>* parent = nullptr);

std::string witnesses_to_json(const std::vector<SeparatorWitness>& ws);
std::vector<SeparatorWitness> witnesses_from_json(const std::string& text);

}  // namespace plansep

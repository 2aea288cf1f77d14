#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plansep/congest.hpp"
#include "plansep/forest.hpp"

namespace plansep {

enum class Fold { Min, Max, Sum };
enum class Extreme { Min, Max };
enum class Relation { Neither, Self, Ancestor, Descendant };

using Values = std::vector<std::int64_t>;

// value * den must lie in [lo, hi].
struct Range {
    std::int64_t lo = 1;
    std::int64_t hi = 0;
    std::int64_t den = 1;
    bool empty() const { return lo > hi; }
    bool contains(std::int64_t v) const { return v * den >= lo && v * den <= hi; }
};

// Aggregation over the parts of a forest. Literal mode runs each call as a
// wave over the part trees on the simulator; charged mode folds directly
// and bills the network.
struct PartContext {
    Network& net;
    const Forest& forest;
};

Values partwise_aggregate(PartContext& ctx, Fold op, const Values& in);
Values ancestor_sum(PartContext& ctx, Fold op, const Values& in);
Values descendant_sum(PartContext& ctx, Fold op, const Values& in);

// Per part: the argmin/argmax among eligible members, smallest id on ties.
std::vector<NodeId> find_extreme(PartContext& ctx, Extreme which, const Values& in,
                                 const std::vector<char>* eligible = nullptr);
// Per part: smallest id whose input lies in that part's range, or kNone.
std::vector<NodeId> find_in_range(PartContext& ctx, const Values& in, const std::vector<Range>& ranges);
// Relation of every member to its part's v0 (kNone skips the part).
std::vector<Relation> relation_to(PartContext& ctx, const std::vector<NodeId>& v0);
// One source per part; every member of a part with a source gets its payload.
std::vector<std::optional<Message>> broadcast_within_part(PartContext& ctx,
                                                          const std::vector<std::pair<NodeId, Message>>& sources);
// One synchronous round over the darts of G. out is indexed by the sender's
// dart, the result by the receiver's dart.
std::vector<std::optional<Message>> neighbor_exchange(Network& net, const std::vector<std::optional<Message>>& out);
// Convenience form: every node with a message sends it to all neighbors.
std::vector<std::optional<Message>> neighbor_exchange_all(Network& net, const std::vector<std::optional<Message>>& per_node);

}  // namespace plansep

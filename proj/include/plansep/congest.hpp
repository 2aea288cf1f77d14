#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plansep/planar_graph.hpp"

namespace plansep {

enum class Mode { Literal, Charged };
enum class Schedule { Forward, Reverse, Threaded };

struct SimConfig {
    int bits = 0;  // 0 selects 4 * ceil(log2(n + 1))
    Mode mode = Mode::Charged;
    std::int64_t charge_alpha = 1;
    std::uint64_t seed = 0;
    Schedule schedule = Schedule::Forward;
    int threads = 2;
};

// A message is a short sequence of machine words; each word costs
// max(id_bits, bit_width(word)) bits.
struct Message {
    static constexpr int kMaxWords = 8;
    std::array<std::uint64_t, kMaxWords> w{};
    int len = 0;

    Message() = default;
    Message(std::initializer_list<std::uint64_t> words);
    void push(std::uint64_t x);
    std::uint64_t operator[](int i) const { return w[static_cast<std::size_t>(i)]; }
    int bits(int id_bits) const;
};

// Signed values travel zigzag-encoded.
inline std::uint64_t zz(std::int64_t x) {
    return (static_cast<std::uint64_t>(x) << 1) ^ static_cast<std::uint64_t>(x >> 63);
}
inline std::int64_t unzz(std::uint64_t x) {
    return static_cast<std::int64_t>(x >> 1) ^ -static_cast<std::int64_t>(x & 1);
}

// Inbox/outbox slots are indexed by rotation position (port).
using Inbox = std::span<const std::optional<Message>>;
using Outbox = std::span<std::optional<Message>>;

enum class Status {
    Active,  // step again next round
    Idle,    // step again only when a message arrives
    Halted,  // never step again; later messages are dropped
};

// Per-node state machine. step() may only touch the state of node v, so
// node steps within a round commute.
class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual void init(NodeId v, const PlanarGraph& g) { (void)v, (void)g; }
    virtual Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) = 0;
};

struct ExecutionReport {
    std::int64_t rounds_literal = 0;
    std::int64_t rounds_charged = 0;
    std::int64_t messages = 0;
    std::int64_t max_bits = 0;
    std::map<std::string, std::int64_t, std::less<>> primitives;

    std::int64_t invocations() const;
    std::string to_json() const;
    void absorb(const ExecutionReport& other);
};

int id_bits_for(std::size_t n);

// Synchronous executor bound to one graph. Also carries the accumulated
// report of everything run on it.
class Network {
public:
    Network(const PlanarGraph& g, SimConfig cfg);

    const PlanarGraph& graph() const { return *g_; }
    const SimConfig& config() const { return cfg_; }
    Mode mode() const { return cfg_.mode; }
    int bit_budget() const { return budget_; }
    int id_bits() const { return id_bits_; }
    int diameter() const;

    // Runs prog to quiescence and adds its costs to the running report.
    ExecutionReport run(NodeProgram& prog, std::int64_t max_rounds = 1 << 26);

    // Counts one primitive invocation; in charged mode also bills
    // alpha * D * ceil(log2(n + 1)) rounds unless bill is false.
    void invoke(std::string_view name, bool bill = true);
    // Bills one literal round executed outside run() (charged mode only).
    void bill_local_round();

    const ExecutionReport& report() const { return report_; }
    void reset_report() { report_ = {}; }

private:
    ExecutionReport run_impl(NodeProgram& prog, std::int64_t max_rounds);

    const PlanarGraph* g_;
    SimConfig cfg_;
    int id_bits_;
    int budget_;
    mutable int diameter_ = -1;
    ExecutionReport report_;
};

}  // namespace plansep

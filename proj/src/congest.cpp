#include "plansep/congest.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include <json.hpp>

namespace plansep {

Message::Message(std::initializer_list<std::uint64_t> words) {
    for (auto x : words) push(x);
}

void Message::push(std::uint64_t x) {
    if (len >= kMaxWords) throw Error(Errc::BitBudgetExceeded, "message word limit");
    w[static_cast<std::size_t>(len++)] = x;
}

int Message::bits(int id_bits) const {
    int total = 0;
    for (int i = 0; i < len; ++i)
        total += std::max(id_bits, static_cast<int>(std::bit_width(w[static_cast<std::size_t>(i)])));
    return total;
}

std::int64_t ExecutionReport::invocations() const {
    std::int64_t s = 0;
    for (const auto& [_, c] : primitives) s += c;
    return s;
}

std::string ExecutionReport::to_json() const {
    nlohmann::ordered_json j;
    j["rounds_literal"] = rounds_literal;
    j["rounds_charged"] = rounds_charged;
    j["messages"] = messages;
    j["max_bits"] = max_bits;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : primitives) p[k] = v;
    j["primitives"] = p;
    return j.dump();
}

void ExecutionReport::absorb(const ExecutionReport& o) {
    rounds_literal += o.rounds_literal;
    rounds_charged += o.rounds_charged;
    messages += o.messages;
    max_bits = std::max(max_bits, o.max_bits);
    for (const auto& [k, v] : o.primitives) primitives[k] += v;
}

int id_bits_for(std::size_t n) {
    int b = 0;
    while ((std::size_t{1} << b) < n + 1) ++b;
    return std::max(b, 1);
}

Network::Network(const PlanarGraph& g, SimConfig cfg) : g_(&g), cfg_(cfg) {
    id_bits_ = id_bits_for(g.n());
    budget_ = cfg.bits > 0 ? cfg.bits : 4 * id_bits_;
    if (budget_ < id_bits_) throw Error(Errc::InfeasibleParams, "bit budget below one identifier");
}

int Network::diameter() const {
    if (diameter_ < 0) diameter_ = plansep::diameter(*g_);
    return diameter_;
}

void Network::invoke(std::string_view name, bool bill) {
    auto it = report_.primitives.find(name);
    if (it == report_.primitives.end()) it = report_.primitives.emplace(std::string(name), 0).first;
    ++it->second;
    if (bill && cfg_.mode == Mode::Charged)
        report_.rounds_charged += cfg_.charge_alpha * static_cast<std::int64_t>(std::max(diameter(), 1)) * id_bits_;
}

void Network::bill_local_round() {
    report_.rounds_literal += 1;
    report_.rounds_charged += 1;
}

ExecutionReport Network::run(NodeProgram& prog, std::int64_t max_rounds) {
    ExecutionReport r = run_impl(prog, max_rounds);
    report_.rounds_literal += r.rounds_literal;
    report_.rounds_charged += r.rounds_charged;
    report_.messages += r.messages;
    report_.max_bits = std::max(report_.max_bits, r.max_bits);
    return r;
}

ExecutionReport Network::run_impl(NodeProgram& prog, std::int64_t max_rounds) {
    const PlanarGraph& g = *g_;
    const std::size_t n = g.n();
    const std::size_t darts = g.dart_count();
    std::vector<std::optional<Message>> inbox(darts), next(darts), outbuf(darts);
    std::vector<Status> status(n, Status::Active);
    std::vector<char> mail(n, 0), queued(n, 0);
    for (std::size_t v = 0; v < n; ++v) prog.init(static_cast<NodeId>(v), g);

    std::vector<NodeId> todo(n);
    for (std::size_t v = 0; v < n; ++v) todo[v] = static_cast<NodeId>(v);

    ExecutionReport rep;
    std::int64_t last_send = 0;
    std::vector<NodeId> woken;

    auto step_one = [&](NodeId v, std::int64_t round) {
        std::size_t off = g.offset(v);
        std::size_t deg = static_cast<std::size_t>(g.degree(v));
        Inbox in(inbox.data() + off, deg);
        Outbox out(outbuf.data() + off, deg);
        status[static_cast<std::size_t>(v)] = prog.step(v, round, in, out);
        for (std::size_t i = 0; i < deg; ++i) inbox[off + i].reset();
    };

    for (std::int64_t round = 1; !todo.empty(); ++round) {
        if (round > max_rounds) throw Error(Errc::RoundLimitExceeded, "after " + std::to_string(max_rounds) + " rounds");
        if (cfg_.schedule == Schedule::Reverse) std::reverse(todo.begin(), todo.end());
        if (cfg_.schedule == Schedule::Threaded && todo.size() > 1) {
            int t = std::max(1, cfg_.threads);
            std::vector<std::exception_ptr> errs(static_cast<std::size_t>(t));
            std::vector<std::thread> pool;
            std::size_t chunk = (todo.size() + static_cast<std::size_t>(t) - 1) / static_cast<std::size_t>(t);
            for (int w = 0; w < t; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        std::size_t lo = static_cast<std::size_t>(w) * chunk;
                        std::size_t hi = std::min(todo.size(), lo + chunk);
                        for (std::size_t i = lo; i < hi; ++i) step_one(todo[i], round);
                    } catch (...) {
                        errs[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& e : errs)
                if (e) std::rethrow_exception(e);
        } else {
            for (NodeId v : todo) step_one(v, round);
        }
        if (cfg_.schedule == Schedule::Reverse) std::reverse(todo.begin(), todo.end());

        // Deliver in a fixed order; slots are disjoint so order cannot matter.
        woken.clear();
        bool sent = false;
        for (NodeId v : todo) {
            std::size_t off = g.offset(v);
            for (std::size_t i = 0; i < static_cast<std::size_t>(g.degree(v)); ++i) {
                auto& m = outbuf[off + i];
                if (!m) continue;
                int b = m->bits(id_bits_);
                if (b > budget_)
                    throw Error(Errc::BitBudgetExceeded, std::to_string(b) + " bits from node " + std::to_string(v) +
                                                             " exceed budget " + std::to_string(budget_));
                ++rep.messages;
                rep.max_bits = std::max<std::int64_t>(rep.max_bits, b);
                sent = true;
                std::size_t k = off + i;
                NodeId to = g.head(k);
                if (status[static_cast<std::size_t>(to)] != Status::Halted) {
                    next[g.twin(k)] = std::move(m);
                    if (!mail[static_cast<std::size_t>(to)]) {
                        mail[static_cast<std::size_t>(to)] = 1;
                        woken.push_back(to);
                    }
                }
                m.reset();
            }
        }
        if (sent) last_send = round;

        std::vector<NodeId> nt;
        for (NodeId v : todo)
            if (status[static_cast<std::size_t>(v)] == Status::Active) {
                queued[static_cast<std::size_t>(v)] = 1;
                nt.push_back(v);
            }
        for (NodeId v : woken) {
            std::size_t off = g.offset(v);
            for (std::size_t i = 0; i < static_cast<std::size_t>(g.degree(v)); ++i)
                if (next[off + i]) inbox[off + i] = std::move(next[off + i]), next[off + i].reset();
            mail[static_cast<std::size_t>(v)] = 0;
            if (!queued[static_cast<std::size_t>(v)]) {
                queued[static_cast<std::size_t>(v)] = 1;
                nt.push_back(v);
            }
        }
        std::sort(nt.begin(), nt.end());
        for (NodeId v : nt) queued[static_cast<std::size_t>(v)] = 0;
        todo.swap(nt);
    }
    rep.rounds_literal = std::max<std::int64_t>(1, last_send);
    rep.rounds_charged = rep.rounds_literal;
    return rep;
}

}  // namespace plansep

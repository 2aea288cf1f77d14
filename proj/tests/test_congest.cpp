#include <doctest.h>

#include "helpers.hpp"
#include "plansep/congest.hpp"

using namespace plansep;

namespace {

class HaltNow : public NodeProgram {
public:
    Status step(NodeId, std::int64_t, Inbox, Outbox) override { return Status::Halted; }
};

class Flood : public NodeProgram {
public:
    explicit Flood(std::size_t n) : got(n, -1) {}
    std::vector<std::int64_t> got;
    Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) override {
        auto V = static_cast<std::size_t>(v);
        if (round == 1) {
            if (v != 0) return Status::Idle;
            got[V] = 0;
        } else {
            for (std::size_t i = 0; i < in.size(); ++i)
                if (in[i] && got[V] < 0) got[V] = static_cast<std::int64_t>((*in[i])[0]) + 1;
        }
        // Forward to every port that did not just deliver.
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!in[i]) out[i] = Message{static_cast<std::uint64_t>(got[V])};
        return Status::Halted;
    }
};

class Chatty : public NodeProgram {
public:
    Status step(NodeId, std::int64_t, Inbox, Outbox out) override {
        if (!out.empty()) out[0] = Message{~0ull};
        return Status::Halted;
    }
};

class Forever : public NodeProgram {
public:
    Status step(NodeId, std::int64_t, Inbox, Outbox) override { return Status::Active; }
};

// Each node sums what it hears for a few rounds; sensitive to any ordering bug.
class Gossip : public NodeProgram {
public:
    explicit Gossip(std::size_t n) : val(n) {
        for (std::size_t v = 0; v < n; ++v) val[v] = static_cast<std::int64_t>(v * 7 % 11);
    }
    std::vector<std::int64_t> val;
    Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) override {
        auto V = static_cast<std::size_t>(v);
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) val[V] = (val[V] * 31 + static_cast<std::int64_t>((*in[i])[0]) + static_cast<std::int64_t>(i)) % 1000;
        if (round > 6) return Status::Halted;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = Message{static_cast<std::uint64_t>(val[V])};
        return Status::Active;
    }
};

}  // namespace

TEST_CASE("halt-only program") {
    auto g = gen::grid(4);
    Network net(g, literal_cfg());
    HaltNow p;
    auto r = net.run(p);
    CHECK(r.rounds_literal == 1);
    CHECK(r.messages == 0);
}

TEST_CASE("flood reaches the far end of a path in n-1 rounds") {
    for (int n : {2, 5, 17}) {
        auto g = gen::path(n);
        Network net(g, literal_cfg());
        Flood p(g.n());
        auto r = net.run(p);
        CHECK(r.rounds_literal == n - 1);
        CHECK(p.got[static_cast<std::size_t>(n - 1)] == n - 1);
    }
}

TEST_CASE("flood on grid 8 matches eccentricity of node 0") {
    auto g = gen::grid(8);
    Network net(g, literal_cfg());
    Flood p(g.n());
    auto r = net.run(p);
    CHECK(r.rounds_literal == 14);
    auto d = bfs_distances(g, 0);
    for (std::size_t v = 0; v < g.n(); ++v) CHECK(p.got[v] == d[v]);
}

TEST_CASE("oversized messages abort") {
    auto g = gen::path(4);
    Network net(g, literal_cfg());
    Chatty p;
    try {
        net.run(p);
        FAIL("expected BitBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BitBudgetExceeded);
    }
}

TEST_CASE("round limit") {
    auto g = gen::path(3);
    Network net(g, literal_cfg());
    Forever p;
    try {
        net.run(p, 10);
        FAIL("expected RoundLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RoundLimitExceeded);
    }
}

TEST_CASE("schedules agree") {
    auto g = gen::random_triangulation(80, 4);
    std::vector<std::int64_t> ref;
    std::string ref_report;
    for (auto s : {Schedule::Forward, Schedule::Reverse, Schedule::Threaded}) {
        SimConfig c = literal_cfg();
        c.schedule = s;
        c.threads = 4;
        Network net(g, c);
        Gossip p(g.n());
        auto r = net.run(p);
        if (ref.empty()) {
            ref = p.val;
            ref_report = r.to_json();
        } else {
            CHECK(p.val == ref);
            CHECK(r.to_json() == ref_report);
        }
    }
}

TEST_CASE("charging") {
    auto g = gen::grid(8);
    Network net(g, charged_cfg());
    CHECK(net.id_bits() == 7);
    CHECK(net.bit_budget() == 28);
    net.invoke("partwise_aggregate");
    CHECK(net.report().rounds_charged == 98);
    net.invoke("partwise_aggregate");
    CHECK(net.report().primitives.at("partwise_aggregate") == 2);

    Network lit(g, literal_cfg());
    lit.invoke("partwise_aggregate");
    CHECK(lit.report().rounds_charged == 0);
    CHECK(lit.report().primitives.at("partwise_aggregate") == 1);

    SimConfig bad;
    bad.bits = 3;
    CHECK_THROWS_AS(Network(g, bad), Error);
}

TEST_CASE("report json") {
    ExecutionReport r;
    r.rounds_literal = 3;
    r.rounds_charged = 5;
    r.primitives["x"] = 2;
    CHECK(r.to_json() == R"({"rounds_literal":3,"rounds_charged":5,"messages":0,"max_bits":0,"primitives":{"x":2}})");
}

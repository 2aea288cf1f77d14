#include <doctest.h>

#include <cstdio>

#include "helpers.hpp"
#include "plansep/oracle.hpp"
#include "plansep/separator.hpp"

using namespace plansep;

namespace {

SeparatorResult run(const PlanarGraph& g, const Partition& p, Mode mode = Mode::Charged) {
    SimConfig c;
    c.mode = mode;
    Network net(g, c);
    return compute_separators(net, p);
}

void check_all(const PlanarGraph& g, const Partition& p, const SeparatorResult& r) {
    REQUIRE(r.witnesses.size() == p.parts.size());
    for (const auto& w : r.witnesses) {
        auto rep = verify_witness(g, p, w, &r.forest.parent);
        INFO("part " << w.part << " phase " << phase_name(w.phase) << ": " << rep.violation);
        CHECK(rep.ok);
        auto v = oracle::check_separator(g, p.parts[static_cast<std::size_t>(w.part)], w.S, &r.forest.parent);
        CHECK(v.ok);
    }
    std::size_t marked = 0, total = 0;
    for (char c : r.marked) marked += c != 0;
    for (const auto& w : r.witnesses) total += w.S.size();
    CHECK(marked == total);
}

std::vector<PlanarGraph> family() {
    std::vector<PlanarGraph> out;
    for (int k = 2; k <= 12; ++k) out.push_back(gen::grid(k));
    for (int s = 0; s < 40; ++s) out.push_back(gen::random_triangulation(20 + 7 * s, static_cast<std::uint64_t>(s)));
    for (int s = 0; s < 20; ++s) out.push_back(gen::random_planar(30 + 5 * s, 40 + 8 * s, static_cast<std::uint64_t>(100 + s)));
    for (int n : {1, 2, 3, 4, 9, 17, 40}) {
        out.push_back(gen::path(n));
        out.push_back(gen::star(n));
        out.push_back(gen::random_tree(n, static_cast<std::uint64_t>(n)));
    }
    for (int n : {3, 4, 9, 30}) out.push_back(gen::cycle(n));
    return out;
}

}  // namespace

TEST_CASE("single node") {
    auto g = gen::path(1);
    auto r = run(g, Partition::single(1));
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].phase == Phase::TreeCentroid);
    CHECK(r.witnesses[0].S == std::vector<NodeId>{0});
}

TEST_CASE("path P_9") {
    auto g = gen::path(9);
    auto p = Partition::single(9);
    auto r = run(g, p);
    CHECK(r.witnesses[0].phase == Phase::TreeCentroid);
    auto v = oracle::check_separator(g, p.parts[0], r.witnesses[0].S, &r.forest.parent);
    CHECK(v.ok);
    CHECK(v.largest <= 6);
}

TEST_CASE("grid 8x8") {
    auto g = gen::grid(8);
    auto p = Partition::single(64);
    auto r = run(g, p);
    auto v = oracle::check_separator(g, p.parts[0], r.witnesses[0].S, &r.forest.parent);
    CHECK(v.ok);
    CHECK(v.largest <= 43);
    check_all(g, p, r);
}

TEST_CASE("verify_witness mutations") {
    auto g = gen::random_triangulation(60, 4);
    auto p = Partition::single(60);
    auto r = run(g, p);
    auto w = r.witnesses[0];
    CHECK(verify_witness(g, p, w).ok);

    auto cut = w;
    if (cut.S.size() > 2) {
        cut.S.erase(cut.S.begin() + 1);
        CHECK_FALSE(verify_witness(g, p, cut).ok);
    }
    auto moved = w;
    moved.S = {w.S.front()};
    moved.b = moved.a;
    CHECK_FALSE(verify_witness(g, p, moved).ok);
}

TEST_CASE("balanced real edge replaced") {
    // Find a part where Phase 3 fires, then swap its edge for another.
    int checked = 0;
    for (int s = 0; s < 30 && checked < 5; ++s) {
        auto g = gen::random_triangulation(50, static_cast<std::uint64_t>(s));
        auto p = Partition::single(50);
        auto r = run(g, p);
        const auto& w = r.witnesses[0];
        if (w.phase != Phase::BalancedReal) continue;
        ++checked;
        CHECK(verify_witness(g, p, w).ok);
        for (NodeId x = 0; x < 50; ++x) {
            for (NodeId y : g.rotation(x)) {
                if (y < x || (x == w.edge_u && y == w.edge_v)) continue;
                auto bad = w;
                bad.edge_u = x;
                bad.edge_v = y;
                CHECK_FALSE(verify_witness(g, p, bad).ok);
                goto next;
            }
        }
    next:;
    }
    CHECK(checked > 0);
}

TEST_CASE("json round trip") {
    auto g = gen::grid(6);
    auto p = quadrant_partition(g);
    auto r = run(g, p);
    auto back = witnesses_from_json(witnesses_to_json(r.witnesses));
    REQUIRE(back.size() == r.witnesses.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].S == r.witnesses[i].S);
        CHECK(back[i].phase == r.witnesses[i].phase);
        CHECK(verify_witness(g, p, back[i]).ok);
    }
    CHECK_THROWS_AS(witnesses_from_json("{\"witnesses\":[{\"part\":0}]}"), Error);
}

TEST_CASE("corpus, single part and quadrants") {
    SeparatorStats total;
    int parts = 0;
    for (const auto& g : family()) {
        for (int q = 0; q < 2; ++q) {
            Partition p;
            try {
                p = q == 0 ? Partition::single(g.n()) : quadrant_partition(g);
                validate_partition(g, p);
            } catch (const Error&) {
                continue;
            }
            INFO("n=" << g.n() << " m=" << g.m() << " quadrants=" << q);
            auto r = run(g, p);
            check_all(g, p, r);
            parts += static_cast<int>(r.witnesses.size());
            for (std::size_t k = 0; k < 6; ++k) total.phase_counts[k] += r.stats.phase_counts[k];
            total.fallbacks += r.stats.fallbacks;
        }
    }
    std::printf("separator corpus: %d parts;", parts);
    for (std::size_t k = 0; k < 6; ++k) std::printf(" %s=%d", phase_name(static_cast<Phase>(k)), total.phase_counts[k]);
    std::printf(" fallbacks=%d\n", total.fallbacks);
}

TEST_CASE("literal and charged agree") {
    for (auto g : {gen::grid(7), gen::random_triangulation(70, 2), gen::random_planar(50, 80, 3)}) {
        for (int q = 0; q < 2; ++q) {
            Partition p = q == 0 ? Partition::single(g.n()) : quadrant_partition(g);
            auto a = run(g, p, Mode::Literal);
            auto b = run(g, p, Mode::Charged);
            CHECK(witnesses_to_json(a.witnesses) == witnesses_to_json(b.witnesses));
            check_all(g, p, a);
        }
    }
}

TEST_CASE("deterministic") {
    auto g = gen::random_triangulation(120, 9);
    auto p = quadrant_partition(g);
    CHECK(witnesses_to_json(run(g, p).witnesses) == witnesses_to_json(run(g, p).witnesses));
}

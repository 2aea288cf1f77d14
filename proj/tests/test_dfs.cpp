#include <doctest.h>

#include <cstdio>

#include "helpers.hpp"
#include "plansep/dfs.hpp"
#include "plansep/oracle.hpp"

using namespace plansep;

namespace {

DfsResult run(const PlanarGraph& g, NodeId root, Mode mode = Mode::Charged) {
    SimConfig c;
    c.mode = mode;
    Network net(g, c);
    return build_dfs(net, root);
}

// Tree invariants plus the DFS criterion.
void check_tree(const PlanarGraph& g, const DfsResult& r, NodeId root) {
    const auto& t = r.tree;
    REQUIRE(t.size() == g.n());
    CHECK(t.root == root);
    CHECK(t.parent[static_cast<std::size_t>(root)] == kNone);
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (static_cast<NodeId>(v) == root) continue;
        NodeId p = t.parent[v];
        REQUIRE(p != kNone);
        CHECK(g.has_edge(static_cast<NodeId>(v), p));
        CHECK(t.depth[v] == t.depth[static_cast<std::size_t>(p)] + 1);
        CHECK(t.phase[v] >= t.phase[static_cast<std::size_t>(p)]);
    }
    auto v = oracle::check_dfs_tree(g, t.parent, root);
    INFO(v.reason);
    CHECK(v.ok);
    CHECK(static_cast<int>(r.phases.size()) <= phase_bound(g.n()));
}

}  // namespace

TEST_CASE("phase bound") {
    CHECK(phase_bound(1) == 1);
    CHECK(phase_bound(2) == 3);
    CHECK(phase_bound(200) == 15);
}

TEST_CASE("join on a path graph") {
    auto g = gen::path(6);
    Network net(g, SimConfig{});
    auto t = PartialDfsTree::start(6, 0);
    Partition comps = Partition::from_labels({-1, 0, 0, 0, 0, 0});
    auto led = join_separators(net, t, comps, {{3}}, 1);
    CHECK(led.iterations == 1);
    for (int v = 1; v <= 3; ++v) {
        CHECK(t.member[static_cast<std::size_t>(v)]);
        CHECK(t.depth[static_cast<std::size_t>(v)] == v);
        CHECK(t.parent[static_cast<std::size_t>(v)] == v - 1);
    }
    CHECK_FALSE(t.member[4]);
}

TEST_CASE("join rejects malformed separators") {
    auto g = gen::path(9);
    Network net(g, SimConfig{});
    auto t = PartialDfsTree::start(9, 0);
    Partition comps = Partition::from_labels({-1, 0, 0, 0, 0, 0, 0, 0, 0});
    auto code = [&](std::vector<std::vector<NodeId>> s) {
        try {
            join_separators(net, t, comps, s, 1);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::IoError;
    };
    CHECK(code({{1}}) == Errc::NotASeparatorInput);      // leaves 7 of 8
    CHECK(code({{4, 6}}) == Errc::NotASeparatorInput);   // not a path
    CHECK(code({{}}) == Errc::NotASeparatorInput);
    CHECK(code({{0}}) == Errc::NotASeparatorInput);      // already in T_d
}

TEST_CASE("single separator path joins in one iteration") {
    auto g = gen::path(9);
    Network net(g, SimConfig{});
    auto t = PartialDfsTree::start(9, 0);
    Partition comps = Partition::from_labels({-1, 0, 0, 0, 0, 0, 0, 0, 0});
    auto led = join_separators(net, t, comps, {{4, 5, 6}}, 1);
    CHECK(led.iterations == 1);
}

TEST_CASE("tree input gives the tree") {
    for (auto g : {gen::random_tree(40, 3), gen::star(9), gen::path(12)}) {
        auto r = run(g, 0);
        check_tree(g, r, 0);
        for (std::size_t v = 1; v < g.n(); ++v) CHECK(g.has_edge(static_cast<NodeId>(v), r.tree.parent[v]));
    }
}

TEST_CASE("cycle gives the Hamiltonian path") {
    for (int n : {3, 4, 10, 17}) {
        auto g = gen::cycle(n);
        auto r = run(g, 2);
        check_tree(g, r, 2);
        int deepest = 0;
        for (int d : r.tree.depth) deepest = std::max(deepest, d);
        CHECK(deepest == n - 1);
    }
}

TEST_CASE("grid 8x8 and triangulation 200") {
    auto g = gen::grid(8);
    check_tree(g, run(g, 0), 0);
    auto t = gen::random_triangulation(200, 1);
    auto r = run(t, 17);
    check_tree(t, r, 17);
    CHECK(static_cast<int>(r.phases.size()) <= 15);
}

TEST_CASE("corpus") {
    int worst_gap = 100, max_iter = 0;
    for (int s = 0; s < 30; ++s) {
        std::vector<PlanarGraph> gs = {gen::random_triangulation(20 + 16 * s, static_cast<std::uint64_t>(s)),
                                       gen::random_planar(30 + 9 * s, 40 + 14 * s, static_cast<std::uint64_t>(s)),
                                       gen::grid(3 + s % 10)};
        for (const auto& g : gs) {
            auto root = static_cast<NodeId>(static_cast<std::size_t>(s * 7) % g.n());
            INFO("n=" << g.n() << " m=" << g.m() << " root=" << root);
            auto r = run(g, root);
            check_tree(g, r, root);
            worst_gap = std::min(worst_gap, phase_bound(g.n()) - static_cast<int>(r.phases.size()));
            for (const auto& ph : r.phases) {
                max_iter = std::max(max_iter, ph.join.iterations);
                for (std::size_t k = 1; k < ph.join.unjoined.size(); ++k)
                    CHECK(2 * ph.join.unjoined[k] <= ph.join.unjoined[k - 1]);
            }
        }
    }
    std::printf("dfs corpus: min slack to phase bound %d, max join iterations %d\n", worst_gap, max_iter);
}

TEST_CASE("literal mode and json") {
    auto g = gen::random_planar(40, 70, 5);
    auto a = run(g, 3, Mode::Literal);
    auto b = run(g, 3, Mode::Charged);
    check_tree(g, a, 3);
    CHECK(dfs_to_json(a.tree) == dfs_to_json(b.tree));
    auto back = dfs_from_json(dfs_to_json(a.tree));
    CHECK(back.parent == a.tree.parent);
    CHECK(back.depth == a.tree.depth);
}

TEST_CASE("disconnected input") {
    auto g = PlanarGraph::build(2, {{}, {}}, Dart{0, 0});
    Network net(g, SimConfig{});
    CHECK_THROWS_AS(build_dfs(net, 0), Error);
}

TEST_CASE("regressions: rehang without a hit, long path over the weight window") {
    auto a = gen::random_triangulation(286, 1055);
    check_tree(a, run(a, 33), 33);
    auto b = gen::random_triangulation(417, 1082);
    check_tree(b, run(b, 115), 115);
}

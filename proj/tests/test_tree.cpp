#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "plansep/oracle.hpp"
#include "plansep/tree.hpp"

using namespace plansep;

namespace {

void check_forest(const PlanarGraph& g, const Partition& p, const Forest& f) {
    REQUIRE(f.parts() == p.count());
    for (int i = 0; i < p.count(); ++i) {
        const auto& mem = p.parts[static_cast<std::size_t>(i)];
        NodeId r = f.roots[static_cast<std::size_t>(i)];
        CHECK(f.part[static_cast<std::size_t>(r)] == i);
        CHECK(f.parent[static_cast<std::size_t>(r)] == kNone);
        std::set<int> pl, pr;
        for (NodeId v : mem) {
            auto V = static_cast<std::size_t>(v);
            if (v != r) {
                REQUIRE(f.parent[V] != kNone);
                CHECK(g.has_edge(v, f.parent[V]));
                CHECK(p.part_of[static_cast<std::size_t>(f.parent[V])] == i);
                CHECK(f.pl[V] > f.pl[static_cast<std::size_t>(f.parent[V])]);
            }
            int s = 1;
            for (NodeId c : f.children[V]) s += f.size[static_cast<std::size_t>(c)];
            CHECK(f.size[V] == s);
            pl.insert(f.pl[V]);
            pr.insert(f.pr[V]);
        }
        CHECK(pl.size() == mem.size());
        CHECK(*pl.rbegin() == static_cast<int>(mem.size()));
        CHECK(*pr.rbegin() == static_cast<int>(mem.size()));
        CHECK(f.pl[static_cast<std::size_t>(r)] == 1);
        CHECK(f.pr[static_cast<std::size_t>(r)] == 1);
        auto o = oracle::dfs_orders(g, f.parent, r,
                                    g.degree(r) ? g.rotation(r)[static_cast<std::size_t>(f.root_after[static_cast<std::size_t>(r)])] : kNone);
        // The oracle walks all of G from r; only compare part members when the part is all of G.
        if (static_cast<std::size_t>(mem.size()) == g.n())
            for (NodeId v : mem) {
                CHECK(o.left[static_cast<std::size_t>(v)] == f.pl[static_cast<std::size_t>(v)]);
                CHECK(o.right[static_cast<std::size_t>(v)] == f.pr[static_cast<std::size_t>(v)]);
            }
        auto depth = oracle::depths(f.parent, mem);
        for (NodeId v : mem) CHECK(depth[static_cast<std::size_t>(v)] == f.depth[static_cast<std::size_t>(v)]);
    }
}

}  // namespace

TEST_CASE("part trees") {
    auto g = gen::grid(8);
    for (auto mode : {Mode::Literal, Mode::Charged}) {
        SimConfig c;
        c.mode = mode;
        Network net(g, c);
        int phases = 0;
        auto f = build_part_trees(net, Partition::single(g.n()), &phases);
        check_forest(g, Partition::single(g.n()), f);
        CHECK(phases <= 7);

        auto q = quadrant_partition(g);
        auto fq = build_part_trees(net, q);
        check_forest(g, q, fq);

        std::vector<int> lab(g.n());
        std::iota(lab.begin(), lab.end(), 0);
        auto singles = Partition::from_labels(lab);
        auto fs = build_part_trees(net, singles, &phases);
        CHECK(phases == 0);
        for (std::size_t v = 0; v < g.n(); ++v) CHECK(fs.size[v] == 1);
    }
    auto tri = gen::random_triangulation(120, 5);
    Network tn(tri, literal_cfg());
    int phases = 0;
    auto ft = build_part_trees(tn, Partition::single(tri.n()), &phases);
    check_forest(tri, Partition::single(tri.n()), ft);
    CHECK(phases <= 7);
    auto tq = quadrant_partition(tri);
    check_forest(tri, tq, build_part_trees(tn, tq));
}

TEST_CASE("root sits on the outer face") {
    for (const auto& g : {gen::grid(6), gen::random_triangulation(50, 1), gen::random_planar(50, 90, 2)}) {
        Network net(g, charged_cfg());
        auto f = build_part_trees(net, Partition::single(g.n()));
        NodeId r = f.roots[0];
        auto faces = trace_faces(g);
        bool ok = false;
        for (const auto& fc : faces)
            if (fc.is_outer)
                for (std::size_t i = 0; i < fc.walk.size(); ++i) {
                    // The corner after root_after lies on the outer face: walk arrives from it.
                    NodeId prev = fc.walk[(i + fc.walk.size() - 1) % fc.walk.size()];
                    if (fc.walk[i] == r && g.index_of(r, prev) == f.root_after[static_cast<std::size_t>(r)]) ok = true;
                }
        CHECK(ok);
    }
}

TEST_CASE("dfs orders") {
    auto p3 = gen::path(3);
    Network pn(p3, literal_cfg());
    auto pf = build_part_trees(pn, Partition::single(3));
    NodeId r = pf.roots[0];
    CHECK(pf.pl[static_cast<std::size_t>(r)] == 1);
    for (std::size_t v = 0; v < 3; ++v) CHECK(pf.pl[v] == pf.pr[v]);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = gen::random_tree(40, seed);
        Network net(g, literal_cfg());
        auto f = build_part_trees(net, Partition::single(g.n()));
        check_forest(g, Partition::single(g.n()), f);
        for (std::size_t a = 0; a < g.n(); ++a)
            for (std::size_t b = 0; b < g.n(); ++b) {
                bool anc = oracle::is_ancestor(f.parent, static_cast<NodeId>(a), static_cast<NodeId>(b));
                CHECK(f.in_subtree(static_cast<NodeId>(a), static_cast<NodeId>(b)) == anc);
                bool anc_r = f.pr[b] >= f.pr[a] && f.pr[b] < f.pr[a] + f.size[a];
                CHECK(anc_r == anc);
            }
    }
    auto g = gen::random_triangulation(90, 3);
    Network net(g, charged_cfg());
    check_forest(g, Partition::single(g.n()), build_part_trees(net, Partition::single(g.n())));
}

TEST_CASE("mark path and lca") {
    auto g = gen::random_tree(60, 4);
    Network net(g, literal_cfg());
    auto f = build_part_trees(net, Partition::single(g.n()));
    auto members = f.members_of(0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        auto u = static_cast<NodeId>(rng() % 60), v = static_cast<NodeId>(rng() % 60);
        auto w = lca(net, f, {{u, v}});
        CHECK(w[0] == oracle::lca(f.parent, u, v));
        auto m = mark_path(net, f, {{u, v}});
        auto m2 = mark_path(net, f, {{v, u}});
        CHECK(m == m2);
        auto path = oracle::tree_path(f.parent, u, v);
        std::vector<char> want(g.n(), 0);
        for (NodeId x : path) want[static_cast<std::size_t>(x)] = 1;
        CHECK(m == want);
        CHECK(static_cast<int>(path.size()) ==
              f.depth[static_cast<std::size_t>(u)] + f.depth[static_cast<std::size_t>(v)] -
                  2 * f.depth[static_cast<std::size_t>(w[0])] + 1);
    }
    auto self = mark_path(net, f, {{5, 5}});
    CHECK(std::count(self.begin(), self.end(), 1) == 1);
    CHECK(lca(net, f, {{f.roots[0], 17}})[0] == f.roots[0]);

    auto p = gen::path(8);
    Network pn(p, literal_cfg());
    auto pf = build_part_trees(pn, Partition::single(8));
    auto all = mark_path(pn, pf, {{0, 7}});
    CHECK(std::count(all.begin(), all.end(), 1) == 8);

    auto grid = gen::grid(8);
    Network gn(grid, literal_cfg());
    auto q = quadrant_partition(grid);
    auto gf = build_part_trees(gn, q);
    std::vector<PathQuery> cross(4, {kNone, kNone});
    cross[0] = {q.parts[0][0], q.parts[1][0]};
    try {
        mark_path(gn, gf, cross);
        FAIL("expected CrossPartQuery");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CrossPartQuery);
    }
}

TEST_CASE("reroot") {
    auto g = gen::random_tree(50, 9);
    Network net(g, literal_cfg());
    auto f = build_part_trees(net, Partition::single(g.n()));
    auto same = reroot(net, f, {Corner{f.roots[0], f.root_after[static_cast<std::size_t>(f.roots[0])]}});
    CHECK(same.parent == f.parent);
    CHECK(same.pl == f.pl);
    for (NodeId v0 : {3, 17, 42}) {
        auto nf = reroot(net, f, {Corner{v0, 0}});
        auto d = oracle::tree_distances(f.parent, f.members_of(0), v0);
        for (std::size_t v = 0; v < g.n(); ++v) CHECK(nf.depth[v] == d[v]);
        check_forest(g, Partition::single(g.n()), nf);
    }
    auto p = gen::path(7);
    Network pn(p, literal_cfg());
    auto pf = build_part_trees(pn, Partition::single(7));
    NodeId far = 0;
    for (NodeId v = 0; v < 7; ++v)
        if (pf.depth[static_cast<std::size_t>(v)] > pf.depth[static_cast<std::size_t>(far)]) far = v;
    auto rf = reroot(pn, pf, {Corner{far, 0}});
    int maxd = *std::max_element(pf.depth.begin(), pf.depth.end());
    for (std::size_t v = 0; v < 7; ++v) CHECK(rf.depth[v] == maxd - pf.depth[v]);
}

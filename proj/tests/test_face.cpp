#include <doctest.h>
#include <random>

#include <map>

#include "face_support.hpp"
#include "helpers.hpp"
#include "plansep/tree.hpp"

using namespace plansep;
using namespace facetest;

namespace {

struct Setup {
    PlanarGraph g;
    Network net;
    Forest f;
    TreeIndex idx;
    PlanarGraph h;
    explicit Setup(PlanarGraph gg, SimConfig cfg = charged_cfg())
        : g(std::move(gg)), net(g, cfg), f(build_part_trees(net, Partition::single(g.n()))), idx(f), h(with_r0(f)) {}
};

// Forest given by explicit parents (root 0, r0 at the outer corner).
Forest manual(const PlanarGraph& g, const std::vector<NodeId>& parent) {
    Partition p = Partition::single(g.n());
    auto corners = outer_corners(g, p);
    return forest_from_parents(g, p.part_of, parent, corners);
}

std::vector<std::pair<NodeId, NodeId>> edges0(const Forest& f) { return real_fundamental_edges(f)[0]; }

std::vector<PlanarGraph> corpus() {
    std::vector<PlanarGraph> out;
    for (int n : {8, 20, 45, 90}) out.push_back(gen::random_triangulation(n, static_cast<std::uint64_t>(n) * 7 + 1));
    for (int k : {3, 5, 7}) out.push_back(gen::grid(k));
    out.push_back(gen::random_planar(40, 70, 5));
    out.push_back(gen::random_planar(60, 100, 9));
    out.push_back(gen::cycle(9));
    return out;
}

}  // namespace

TEST_CASE("small hand fixtures") {
    SUBCASE("triangle") {
        auto g = PlanarGraph::build(3, {{2, 1}, {0, 2}, {1, 0}}, Dart{0, 2});
        auto f = manual(g, {kNone, 0, 1});
        TreeIndex idx(f);
        FaceGeometry face(idx, real_chord(f, 0, 2));
        CHECK(face.kind() != EdgeCase::NonAncestor);
        CHECK(face.z() == 1);
        CHECK(face.weight() == 0);
        auto s = face.sets();
        CHECK(s.border_count == 3);
        CHECK(s.inside_count == 0);
        auto split = outside_partitions(face);
        CHECK(split.left + split.right == 0);
        CHECK_THROWS_AS(real_chord(f, 0, 1), Error);
    }
    SUBCASE("diamond") {
        // r=0 above a=1; b=2, c=3 below a, edge b-c.
        auto g = PlanarGraph::build(4, {{1}, {0, 3, 2}, {1, 3}, {2, 1}}, Dart{0, 1});
        auto f = manual(g, {kNone, 0, 1, 1});
        TreeIndex idx(f);
        FaceGeometry face(idx, real_chord(f, 2, 3));
        CHECK(face.kind() == EdgeCase::NonAncestor);
        CHECK(face.lca() == 1);
        CHECK(face.weight() == 2);
        CHECK(face.sets().inside_count == 0);
    }
    SUBCASE("wheel with hub star") {
        // hub 0, rim 1..5 clockwise.
        std::vector<std::vector<NodeId>> rot(6);
        rot[0] = {1, 2, 3, 4, 5};
        for (NodeId i = 1; i <= 5; ++i) rot[static_cast<std::size_t>(i)] = {0, static_cast<NodeId>(i == 1 ? 5 : i - 1), static_cast<NodeId>(i == 5 ? 1 : i + 1)};
        auto g = PlanarGraph::build(6, rot, Dart{1, 2});
        auto f = forest_from_parents(g, Partition::single(6).part_of, {kNone, 0, 0, 0, 0, 0}, {Corner{0, 0}});
        TreeIndex idx(f);
        auto h = with_r0(f);
        int checked = 0;
        for (auto [x, y] : edges0(f)) {
            FaceGeometry face(idx, real_chord(f, x, y));
            auto in = oracle_inside(h, idx, x, y);
            CHECK(face.kind() == EdgeCase::NonAncestor);
            CHECK(face.weight() == static_cast<std::int64_t>(count(in)) + 2);
            ++checked;
        }
        CHECK(checked == 5);
    }
    SUBCASE("K4 central node") {
        // Outer triangle 0,1,2 with 3 in the middle.
        auto g = PlanarGraph::build(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, Dart{0, 1});
        auto f = manual(g, {kNone, 0, 1, 0});
        TreeIndex idx(f);
        auto h = with_r0(f);
        bool seen = false;
        for (auto [x, y] : edges0(f)) {
            FaceGeometry face(idx, real_chord(f, x, y));
            auto s = face.sets();
            auto in = oracle_inside(h, idx, x, y);
            for (NodeId v = 0; v < 4; ++v) CHECK(static_cast<bool>(s.inside[static_cast<std::size_t>(v)]) == static_cast<bool>(in[static_cast<std::size_t>(v)]));
            if ((x == 0 && y == 2) || (x == 2 && y == 0)) seen = s.inside[3] != 0;
        }
        CHECK(seen);
    }
}

TEST_CASE("faces match the dual oracle") {
    std::map<EdgeCase, int> cases;
    for (auto& g0 : corpus()) {
        Setup s(g0);
        auto w = distributed_weights(s.net, s.f);
        for (auto [x, y] : edges0(s.f)) {
            FaceGeometry face(s.idx, real_chord(s.f, x, y));
            cases[face.kind()]++;
            CHECK((face.kind() == EdgeCase::NonAncestor) ==
                  !(oracle::is_ancestor(s.f.parent, x, y) || oracle::is_ancestor(s.f.parent, y, x)));
            auto sets = face.sets();
            auto in = oracle_inside(s.h, s.idx, x, y);
            bool same = true;
            for (std::size_t v = 0; v < s.g.n(); ++v) {
                same = same && static_cast<bool>(sets.inside[v]) == static_cast<bool>(in[v]);
                same = same && face.inside(static_cast<NodeId>(v)) == static_cast<bool>(in[v]);
            }
            CHECK(same);
            std::int64_t expect = static_cast<std::int64_t>(count(in));
            if (face.kind() == EdgeCase::NonAncestor)
                expect += s.f.depth[static_cast<std::size_t>(face.v())] - s.f.depth[static_cast<std::size_t>(face.lca())] + 1;
            CHECK(face.weight() == expect);
            CHECK(w[s.g.dart(x, y)] == expect);
            CHECK(w[s.g.dart(y, x)] == expect);
        }
    }
    CHECK(cases[EdgeCase::NonAncestor] > 0);
    CHECK(cases[EdgeCase::AncestorLeft] > 0);
    CHECK(cases[EdgeCase::AncestorRight] > 0);
}

TEST_CASE("detect_face batched over quadrants") {
    for (auto mode : {Mode::Literal, Mode::Charged}) {
        auto g = gen::grid(8);
        SimConfig cfg;
        cfg.mode = mode;
        Network net(g, cfg);
        auto p = quadrant_partition(g);
        auto f = build_part_trees(net, p);
        TreeIndex idx(f);
        auto edges = real_fundamental_edges(f);
        std::vector<std::optional<Chord>> faces(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!edges[i].empty() && i != 2) faces[i] = real_chord(f, edges[i].back().first, edges[i].back().second);
        auto marks = detect_face(net, idx, faces);
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (!faces[i]) {
                for (NodeId v : p.parts[i]) CHECK(marks.state[static_cast<std::size_t>(v)] == kOutside);
                continue;
            }
            FaceGeometry face(idx, *faces[i]);
            for (NodeId v : p.parts[i]) {
                std::uint8_t want = face.on_border(v) ? kBorder : face.inside(v) ? kInside : kOutside;
                CHECK(marks.state[static_cast<std::size_t>(v)] == want);
            }
        }
    }
}

TEST_CASE("detect_face and weights on the corpus") {
    for (auto& g0 : corpus()) {
        Setup s(g0);
        for (auto [x, y] : edges0(s.f)) {
            std::vector<std::optional<Chord>> faces{real_chord(s.f, x, y)};
            auto marks = detect_face(s.net, s.idx, faces);
            FaceGeometry face(s.idx, *faces[0]);
            bool ok = marks.flip[0] == face.flipped();
            for (std::size_t v = 0; v < s.g.n(); ++v) {
                std::uint8_t want = face.on_border(static_cast<NodeId>(v)) ? kBorder
                                    : face.inside(static_cast<NodeId>(v))  ? kInside
                                                                           : kOutside;
                ok = ok && marks.state[v] == want;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("full augmentation") {
    int compared = 0, planar = 0;
    for (auto& g0 : corpus()) {
        Setup s(g0);
        for (auto [x, y] : edges0(s.f)) {
            std::vector<std::optional<Chord>> faces{real_chord(s.f, x, y)};
            FaceGeometry face(s.idx, *faces[0]);
            auto marks = detect_face(s.net, s.idx, faces);
            auto aug = full_augmentation_weights(s.net, s.idx, faces, marks);
            for (std::size_t z = 0; z < s.g.n(); ++z) {
                if (!face.inside(static_cast<NodeId>(z))) {
                    CHECK(aug[z] == -1);
                    continue;
                }
                auto zz_ = static_cast<NodeId>(z);
                std::int64_t seq = augmented_weight(face, zz_);
                CHECK(aug[z] == seq);
                ++compared;
                if (s.g.has_edge(face.u(), zz_)) continue;
                Chord c = augmented_chord(face, zz_);
                auto h2 = with_chord(s.h, s.f, c);
                if (!h2) continue;
                FaceGeometry vf(s.idx, c);
                auto in = oracle::inside_of_cycle(*h2, s.idx.path(face.u(), zz_), static_cast<NodeId>(s.g.n()));
                std::int64_t expect = static_cast<std::int64_t>(count(in));
                if (vf.kind() == EdgeCase::NonAncestor)
                    expect += s.f.depth[z] - s.f.depth[static_cast<std::size_t>(vf.lca())] + 1;
                CHECK(seq == expect);
                ++planar;
            }
        }
    }
    MESSAGE("augmented nodes " << compared << ", planar insertions " << planar);
    CHECK(planar > 0);
}

TEST_CASE("monotonicity on incomparable nodes") {
    Setup s(gen::random_triangulation(60, 4));
    for (auto [x, y] : edges0(s.f)) {
        FaceGeometry face(s.idx, real_chord(s.f, x, y));
        std::vector<NodeId> in;
        for (NodeId v = 0; v < static_cast<NodeId>(s.g.n()); ++v)
            if (face.inside(v)) in.push_back(v);
        for (NodeId a : in)
            for (NodeId b : in) {
                if (s.f.in_subtree(a, b) || s.f.in_subtree(b, a)) continue;
                auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b);
                if (face.kind() != EdgeCase::AncestorRight && s.f.pl[A] < s.f.pl[B])
                    CHECK(augmented_weight(face, a) <= augmented_weight(face, b));
            }
    }
}

TEST_CASE("outside partitions") {
    for (auto& g0 : corpus()) {
        Setup s(g0);
        auto edges = edges0(s.f);
        if (edges.empty()) continue;
        std::vector<std::vector<std::pair<NodeId, NodeId>>> cand{edges};
        auto e = select_outermost(s.net, s.idx, cand)[0];
        REQUIRE(e);
        FaceGeometry face(s.idx, real_chord(s.f, e->first, e->second));
        auto split = outside_partitions(face);
        std::int64_t left = 0, right = 0;
        int plv = s.f.pl[static_cast<std::size_t>(face.v())];
        for (NodeId v = 0; v < static_cast<NodeId>(s.g.n()); ++v) {
            if (face.in_face(v)) continue;
            (s.f.pl[static_cast<std::size_t>(v)] < plv ? left : right)++;
        }
        CHECK(split.left == left);
        CHECK(split.right == right);
        // A contained edge violates the precondition.
        for (auto [x, y] : edges) {
            if (std::pair{x, y} == *e) continue;
            if (face.contains_edge(x, y)) {
                CHECK_THROWS_AS(outside_partitions(FaceGeometry(s.idx, real_chord(s.f, x, y))), Error);
                break;
            }
        }
    }
}

TEST_CASE("selection against pairwise containment") {
    std::mt19937_64 rng(11);
    for (auto& g0 : corpus()) {
        Setup s(g0);
        auto all = edges0(s.f);
        if (all.empty()) continue;
        for (int round = 0; round < 5; ++round) {
            std::vector<std::pair<NodeId, NodeId>> pick;
            for (auto e : all)
                if (rng() % 3 == 0 || pick.empty()) pick.push_back(e);
            std::vector<std::vector<std::pair<NodeId, NodeId>>> cand{pick};
            auto in = select_innermost(s.net, s.idx, cand)[0];
            auto out = select_outermost(s.net, s.idx, cand)[0];
            REQUIRE(in);
            REQUIRE(out);
            FaceGeometry fi(s.idx, real_chord(s.f, in->first, in->second));
            for (auto [x, y] : pick) {
                if (std::pair{x, y} == *in || std::pair{x, y} == *out) continue;
                CHECK_FALSE(fi.contains_edge(x, y));
                CHECK_FALSE(FaceGeometry(s.idx, real_chord(s.f, x, y)).contains_edge(out->first, out->second));
            }
        }
    }
    Setup s(gen::grid(4));
    std::vector<std::vector<std::pair<NodeId, NodeId>>> none(1);
    CHECK_THROWS_AS(select_innermost(s.net, s.idx, none), Error);
}

TEST_CASE("hidden edges against planar insertion") {
    int agree = 0, hidden = 0;
    std::vector<std::string> bad;
    for (auto& g0 : corpus()) {
        if (g0.n() > 60) continue;
        Setup s(g0);
        for (auto [x, y] : edges0(s.f)) {
            FaceGeometry face(s.idx, real_chord(s.f, x, y));
            NodeId u = face.u();
            for (NodeId z = 0; z < static_cast<NodeId>(s.g.n()); ++z) {
                if (!s.f.is_leaf(z) || !face.inside(z) || s.g.has_edge(u, z)) continue;
                bool is_hidden = !hidden_edges(face, z).empty();
                bool can = insertable_in_face(s.h, s.f, s.idx, face, z);
                hidden += is_hidden;
                if (is_hidden == !can) ++agree;
                else if (bad.size() < 5)
                    bad.push_back("n=" + std::to_string(s.g.n()) + " e=" + std::to_string(x) + "-" + std::to_string(y) +
                                  " z=" + std::to_string(z) + " hidden=" + std::to_string(is_hidden) + " " +
                                  case_name(face.kind()));
            }
        }
    }
    for (auto& b : bad) MESSAGE(b);
    MESSAGE("agree " << agree << " hidden " << hidden);
    CHECK(bad.empty());
}

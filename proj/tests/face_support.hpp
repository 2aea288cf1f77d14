#pragma once

// Shared oracle plumbing for face tests and the acceptance binary.

#include <optional>
#include <vector>

#include "plansep/face.hpp"
#include "plansep/oracle.hpp"
#include "plansep/planar_graph.hpp"

namespace facetest {

using namespace plansep;

// Neighbor at rotation slot s of x in G + r0 (r0 has id g.n()).
inline NodeId slot_neighbor(const Forest& f, NodeId x, int s) {
    const auto& rot = f.g->rotation(x);
    int deg = static_cast<int>(rot.size());
    auto X = static_cast<std::size_t>(x);
    if (f.parent[X] != kNone) return rot[static_cast<std::size_t>((f.parent_port[X] + s - 1) % deg)];
    if (s == 1) return static_cast<NodeId>(f.g->n());
    return rot[static_cast<std::size_t>((f.root_after[X] + 1 + s - 2) % deg)];
}

// G with r0 attached at the corner of the (single) part root.
inline PlanarGraph with_r0(const Forest& f) {
    NodeId r = f.roots.at(0);
    const auto& rot = f.g->rotation(r);
    return attach_leaf(*f.g, r, rot[static_cast<std::size_t>(f.root_after[static_cast<std::size_t>(r)])]);
}

// Nodes strictly inside the cycle path(a,b) + a-b of h, away from r0.
inline std::vector<char> oracle_inside(const PlanarGraph& h, const TreeIndex& idx, NodeId a, NodeId b) {
    auto cyc = idx.path(a, b);
    return oracle::inside_of_cycle(h, cyc, static_cast<NodeId>(h.n() - 1));
}

// h plus chord c drawn at its quarter positions; nullopt when not planar.
inline std::optional<PlanarGraph> with_chord(const PlanarGraph& h, const Forest& f, const Chord& c) {
    try {
        return insert_edge(h, c.a, slot_neighbor(f, c.a, c.qa / 4), c.b, slot_neighbor(f, c.b, c.qb / 4), h.outer());
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Brute-force compatibility of u (the face's smaller endpoint) with inside
// leaf z: some corner of u inside the face and some corner of z admit a
// planar insertion that keeps every node of T_u in the closed face.
inline bool insertable_in_face(const PlanarGraph& h, const Forest& f, const TreeIndex& idx, const FaceGeometry& face,
                               NodeId z) {
    NodeId u = face.u();
    auto U = static_cast<std::size_t>(u);
    int du = f.g->degree(u) + (f.is_root(u) ? 1 : 0), dz = f.g->degree(z);
    int part = f.part[U];
    for (int su = 1; su <= du; ++su) {
        int qu = 4 * su + 2;
        if (!face.in_wedge(u, qu)) continue;
        for (int sz = 1; sz <= dz; ++sz) {
            Chord c{u, z, qu, 4 * sz + 2, false};
            if (!with_chord(h, f, c)) continue;
            FaceGeometry vf(idx, c);
            bool keep = true;
            for (int t = f.pl[U]; keep && t < f.pl[U] + f.size[U]; ++t) {
                NodeId q = idx.at_left(part, t);
                if (face.in_face(q) && !vf.in_face(q)) keep = false;
            }
            if (keep) return true;
        }
    }
    return false;
}

inline std::size_t count(const std::vector<char>& v) {
    std::size_t s = 0;
    for (char c : v) s += c != 0;
    return s;
}

}  // namespace facetest

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plansep/congest.hpp"
#include "plansep/forest.hpp"
#include "plansep/primitives.hpp"

namespace plansep {

// Angular positions around a node in quarter slots: the neighbor at rotation
// slot s sits at 4s (the parent or r0 at 4); a virtual edge takes any value
// strictly between two neighbors.
int qpos(const Forest& f, NodeId x, NodeId nb);

// Largest quarter position around x (just before wrapping back to slot 1).
int qmax(const Forest& f, NodeId x);

// A fundamental edge drawn at quarter positions qa around a and qb around b.
struct Chord {
    NodeId a = kNone;
    NodeId b = kNone;
    int qa = 0;
    int qb = 0;
    bool real = true;
};

Chord real_chord(const Forest& f, NodeId x, NodeId y);

// Which weight formula applies. AncestorLeft uses the left DFS order; it is
// the case where the edge leaves the ancestor clockwise after the first path
// node, i.e. pos_u(v) > pos_u(z).
enum class EdgeCase { NonAncestor, AncestorLeft, AncestorRight };

const char* case_name(EdgeCase c);

// Binary lifting plus per-part lookup by left DFS position.
class TreeIndex {
public:
    explicit TreeIndex(const Forest& f);
    const Forest& forest() const { return *f_; }
    NodeId lca(NodeId a, NodeId b) const;
    NodeId ancestor_at_depth(NodeId x, int depth) const;
    // Child of y on the tree path towards its proper descendant x.
    NodeId child_toward(NodeId y, NodeId x) const { return ancestor_at_depth(x, f_->depth[static_cast<std::size_t>(y)] + 1); }
    int part_size(int part) const { return static_cast<int>(by_pl_[static_cast<std::size_t>(part)].size()); }
    NodeId at_left(int part, int pl) const { return by_pl_[static_cast<std::size_t>(part)][static_cast<std::size_t>(pl - 1)]; }
    std::vector<NodeId> path(NodeId a, NodeId b) const;

private:
    const Forest* f_;
    std::vector<std::vector<NodeId>> up_;
    std::vector<std::vector<NodeId>> by_pl_;
};

struct FaceSets {
    std::vector<char> border;
    std::vector<char> inside;
    std::size_t border_count = 0;
    std::size_t inside_count = 0;
};

// The fundamental face of T + r0 + chord on the side away from r0.
class FaceGeometry {
public:
    FaceGeometry(const TreeIndex& idx, const Chord& c);

    const TreeIndex& index() const { return *idx_; }
    const Forest& forest() const { return *f_; }
    const Chord& chord() const { return c_; }
    // The inside lies clockwise from the dart towards a to the dart towards b
    // (instead of the reverse) at every border node.
    bool flipped() const { return flip_; }
    NodeId u() const { return c_.a; }  // smaller left position
    NodeId v() const { return c_.b; }
    EdgeCase kind() const { return kind_; }
    NodeId lca() const { return w_; }
    NodeId z() const { return z_; }  // first path node below u in ancestor cases

    bool on_border(NodeId x) const;
    bool inside(NodeId x) const;
    bool in_face(NodeId x) const { return on_border(x) || inside(x); }
    // Does quarter position q around border node y point into the face?
    bool in_wedge(NodeId y, int q) const;
    // Children of border node y that hang into the face.
    std::vector<NodeId> inside_children(NodeId y) const;
    // Sizes of the subtrees hanging into the face from endpoint x.
    std::int64_t p(NodeId x) const;
    std::int64_t weight() const;
    std::vector<NodeId> border_path() const { return idx_->path(c_.a, c_.b); }
    FaceSets sets() const;
    // Real edge x-y (not the chord) drawn in the closed face.
    bool contains_edge(NodeId x, NodeId y) const;

private:
    int q_next(NodeId y) const;
    int q_prev(NodeId y) const;

    const TreeIndex* idx_;
    const Forest* f_;
    Chord c_;
    NodeId w_ = kNone;
    NodeId z_ = kNone;
    EdgeCase kind_ = EdgeCase::NonAncestor;
    bool flip_ = false;
};

// Full augmentation from u: weight of F^l_{uz} for a node z inside the face.
// The virtual edge leaves u right next to the chord on the inside and enters
// z next to its parent so that every child of z falls inside.
std::int64_t augmented_weight(const FaceGeometry& face, NodeId z);
// The quarter positions used for that virtual edge.
Chord augmented_chord(const FaceGeometry& face, NodeId z);

// Real fundamental edges f != chord hiding leaf z inside the face.
std::vector<std::pair<NodeId, NodeId>> hidden_edges(const FaceGeometry& face, NodeId z);

// Outside nodes split at the face: left of u and right of v.
struct OutsideSplit {
    std::int64_t left = 0;
    std::int64_t right = 0;
};
// Throws PreconditionNotContained when a real chord lies in another real
// face (skipped with check = false).
OutsideSplit outside_partitions(const FaceGeometry& face, bool check = true);

// Per part the real fundamental edges of the forest, grouped by part.
std::vector<std::vector<std::pair<NodeId, NodeId>>> real_fundamental_edges(const Forest& f);

// Position of dart x->y on the contour walk around x's tree that starts at
// r0 and visits children in left DFS order. Non-crossing chords give nested
// or disjoint intervals; the face of a chord is its interval's inside.
std::int64_t contour_key(const Forest& f, NodeId x, NodeId y);

// Per part selection among candidate edges (empty list skips the part).
// innermost: an edge whose face holds no other candidate; outermost: an
// edge lying in no other candidate's face. Throws EmptySet when no part
// has candidates.
std::vector<std::optional<std::pair<NodeId, NodeId>>> select_innermost(
    Network& net, const TreeIndex& idx, const std::vector<std::vector<std::pair<NodeId, NodeId>>>& cand);
std::vector<std::optional<std::pair<NodeId, NodeId>>> select_outermost(
    Network& net, const TreeIndex& idx, const std::vector<std::vector<std::pair<NodeId, NodeId>>>& cand);

// Weights of all real fundamental edges computed from local data and four
// neighbor exchanges. Indexed by dart; -1 on tree and cross-part darts.
std::vector<std::int64_t> distributed_weights(Network& net, const Forest& f);

enum : std::uint8_t { kOutside = 0, kBorder = 1, kInside = 2 };

struct FaceMarks {
    std::vector<std::uint8_t> state;  // per node
    std::vector<char> flip;           // per part, see FaceGeometry::flipped
};

// Membership for one face per part (nullopt skips the part).
FaceMarks detect_face(Network& net, const TreeIndex& idx, const std::vector<std::optional<Chord>>& faces);

// Full augmentation weights from the smaller-position endpoint for one face
// per part; -1 for nodes not strictly inside.
// `modes` (optional) receives per node the DFS order its weight follows:
// 0 or 1 for the left order, 2 for the right order.
Values full_augmentation_weights(Network& net, const TreeIndex& idx, const std::vector<std::optional<Chord>>& faces,
                                 const FaceMarks& marks, std::vector<int>* modes = nullptr);

}  // namespace plansep

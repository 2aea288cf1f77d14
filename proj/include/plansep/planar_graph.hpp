#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plansep/error.hpp"

namespace plansep {

using NodeId = std::int32_t;
inline constexpr NodeId kNone = -1;

// Directed edge. A dart with from == to is only legal as the witness of an
// edgeless graph.
struct Dart {
    NodeId from = kNone;
    NodeId to = kNone;
    bool operator==(const Dart&) const = default;
};

struct Face {
    std::vector<NodeId> walk;  // walk[i] -> walk[i+1], closing back to walk[0]
    bool is_outer = false;
};

// Immutable graph with a clockwise rotation system and a designated outer
// face. Darts are stored in CSR order: dart k leaves node owner(k) towards
// head(k), and k - offset(owner) is its index in the owner's rotation.
class PlanarGraph {
public:
    PlanarGraph() = default;

    static PlanarGraph build(std::size_t n, std::vector<std::vector<NodeId>> rotations, Dart outer,
                             std::optional<std::vector<std::array<double, 2>>> coords = std::nullopt);

    std::size_t n() const { return rot_.size(); }
    std::size_t m() const { return head_.size() / 2; }
    const std::vector<NodeId>& rotation(NodeId v) const { return rot_[static_cast<std::size_t>(v)]; }
    int degree(NodeId v) const { return static_cast<int>(rot_[static_cast<std::size_t>(v)].size()); }
    Dart outer() const { return outer_; }
    const std::optional<std::vector<std::array<double, 2>>>& coords() const { return coords_; }

    // Index of u in v's rotation, or -1.
    int index_of(NodeId v, NodeId u) const;
    bool has_edge(NodeId u, NodeId v) const { return index_of(u, v) >= 0; }
    NodeId cw_next(NodeId v, NodeId u) const;
    NodeId ccw_next(NodeId v, NodeId u) const;

    std::size_t dart_count() const { return head_.size(); }
    std::size_t offset(NodeId v) const { return off_[static_cast<std::size_t>(v)]; }
    NodeId head(std::size_t k) const { return head_[k]; }
    NodeId owner(std::size_t k) const { return owner_[k]; }
    std::size_t twin(std::size_t k) const { return twin_[k]; }
    // Dart following k on its face (face kept on the left of travel).
    std::size_t face_next(std::size_t k) const;
    std::size_t dart(NodeId u, NodeId v) const;

    bool operator==(const PlanarGraph& o) const {
        return rot_ == o.rot_ && outer_ == o.outer_ && coords_ == o.coords_;
    }

private:
    std::vector<std::vector<NodeId>> rot_;
    std::vector<std::vector<std::pair<NodeId, int>>> sorted_;
    std::vector<std::size_t> off_;
    std::vector<NodeId> head_, owner_;
    std::vector<std::size_t> twin_;
    Dart outer_;
    std::optional<std::vector<std::array<double, 2>>> coords_;
};

// Face walks; faces are listed by smallest dart id, isolated nodes yield a
// single-node walk.
std::vector<Face> trace_faces(const PlanarGraph& g);

// Face id per dart plus the number of faces (isolated nodes excluded).
std::vector<int> dart_faces(const PlanarGraph& g, int* face_count = nullptr);

std::vector<int> components(const PlanarGraph& g, int* count = nullptr);

// Inserts edge u-v so that v follows u_after clockwise around u and u
// follows v_after around v (kNone on an isolated endpoint). Throws
// NotPlanarEmbedding when the insertion joins two different faces.
PlanarGraph insert_edge(const PlanarGraph& g, NodeId u, NodeId u_after, NodeId v, NodeId v_after,
                        Dart outer);

// Appends one new node attached to v right after v_after (kNone if isolated).
PlanarGraph attach_leaf(const PlanarGraph& g, NodeId v, NodeId v_after);

struct Induced {
    PlanarGraph graph;
    std::vector<NodeId> to_sub;    // global -> local, kNone outside
    std::vector<NodeId> to_global; // local -> global
};

// Subgraph induced by `nodes` with the restricted rotation; the witness is
// `outer` mapped to local ids.
Induced induced(const PlanarGraph& g, const std::vector<NodeId>& nodes, Dart outer);

struct Partition {
    std::vector<int> part_of;                // -1 for nodes outside every part
    std::vector<std::vector<NodeId>> parts;  // ascending ids

    static Partition single(std::size_t n);
    static Partition from_labels(const std::vector<int>& labels);
    int count() const { return static_cast<int>(parts.size()); }
};

// Throws DisconnectedPart when some G[P_i] is not connected.
void validate_partition(const PlanarGraph& g, const Partition& p);

// Grid quadrants (for k x k grids) or, in general, four blocks by id.
Partition quadrant_partition(const PlanarGraph& g);

namespace gen {
PlanarGraph grid(int k);
PlanarGraph cycle(int n);
PlanarGraph path(int n);
PlanarGraph star(int n);
PlanarGraph random_tree(int n, std::uint64_t seed);
PlanarGraph random_triangulation(int n, std::uint64_t seed);
PlanarGraph random_planar(int n, int m, std::uint64_t seed);
}  // namespace gen

std::string to_json(const PlanarGraph& g);
PlanarGraph from_json(const std::string& text);
PlanarGraph load_json(const std::string& path);
void save_json(const PlanarGraph& g, const std::string& path);

// Eccentricity-based diameter by BFS from every node (connected graphs).
int diameter(const PlanarGraph& g);
std::vector<int> bfs_distances(const PlanarGraph& g, NodeId src);

}  // namespace plansep

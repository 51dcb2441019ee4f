#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace smhk {

// Star-mesh hybrid network with a complete multipartite core.
//
// sets() groups of stars_per_set() extended stars each. Every star has
// branches() path branches of path_length() nodes hanging off its central
// node. Central nodes in different sets are all joined; central nodes in
// the same set are not.
class SmhkParams {
 public:
  int sets() const noexcept { return sets_; }
  int stars_per_set() const noexcept { return stars_; }
  int path_length() const noexcept { return depth_; }
  int branches() const noexcept { return branches_; }

  // Number of free orbit weights (core orbit plus one per depth).
  std::size_t orbit_count() const noexcept {
    return static_cast<std::size_t>(depth_) + 1;
  }

  friend bool operator==(const SmhkParams&, const SmhkParams&) = default;

 private:
  friend SmhkParams validate_params(std::int64_t, std::int64_t, std::int64_t,
                                    std::int64_t);
  SmhkParams(int sets, int stars, int depth, int branches)
      : sets_(sets), stars_(stars), depth_(depth), branches_(branches) {}

  int sets_;
  int stars_;
  int depth_;
  int branches_;
};

// Throws Error(kInvalidParams) naming the violated bound.
SmhkParams validate_params(std::int64_t sets, std::int64_t stars_per_set,
                           std::int64_t path_length, std::int64_t branches);

// Node (set, star, branch, depth). Sets and stars are 1-based; branch 0 with
// depth 0 is the central node of the star.
struct NodeId {
  int set = 1;
  int star = 1;
  int branch = 0;
  int depth = 0;

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

struct OrbitEdge {
  NodeId u;
  NodeId v;
  // 0 for core edges, q for the branch edge between depths q-1 and q.
  int orbit = 0;
};

std::size_t node_count(const SmhkParams& params);
std::size_t edge_count(const SmhkParams& params);

// Core edges ordered by (set, star, set', star'), then branch edges ordered
// by (set, star, branch, depth).
std::vector<OrbitEdge> build_edges(const SmhkParams& params);

// Layout: star block base = ((set-1)*k + (star-1)) * (m*L + 1); the central
// node sits at base, branch node (p, q) at base + 1 + (p-1)*m + (q-1).
std::size_t node_index(const SmhkParams& params, const NodeId& id);
NodeId node_id(const SmhkParams& params, std::size_t index);

// Row-major dense 0/1 adjacency of size node_count()^2.
std::vector<std::uint8_t> adjacency(const SmhkParams& params);

}  // namespace smhk

#include "smhk/topology.hpp"

#include <limits>
#include <string>

#include "smhk/error.hpp"

namespace smhk {

namespace {

constexpr std::int64_t kMaxDimension = 1 << 20;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::kInvalidParams, message);
}

std::string bound_message(const char* name, const char* what,
                          std::int64_t value) {
  return std::string(name) + " " + what + " (got " + std::to_string(value) +
         ")";
}

}  // namespace

SmhkParams validate_params(std::int64_t sets, std::int64_t stars_per_set,
                           std::int64_t path_length, std::int64_t branches) {
  require(sets >= 2, bound_message("n", "below minimum: sets must be >= 2",
                                   sets));
  require(stars_per_set >= 2,
          bound_message("k",
                        "below minimum: stars per set must be >= 2 (k = 1 is "
                        "the complete cored star, not supported)",
                        stars_per_set));
  require(path_length >= 1,
          bound_message("m", "below minimum: path length must be >= 1",
                        path_length));
  require(branches >= 1,
          bound_message("L", "below minimum: branches must be >= 1",
                        branches));
  require(sets <= kMaxDimension && stars_per_set <= kMaxDimension &&
              path_length <= kMaxDimension && branches <= kMaxDimension,
          "parameter above supported maximum");

  const double nodes = static_cast<double>(sets) *
                       static_cast<double>(stars_per_set) *
                       (static_cast<double>(path_length) *
                            static_cast<double>(branches) +
                        1.0);
  require(nodes < static_cast<double>(std::numeric_limits<int>::max()),
          "node count overflows");

  return SmhkParams(static_cast<int>(sets), static_cast<int>(stars_per_set),
                    static_cast<int>(path_length),
                    static_cast<int>(branches));
}

std::size_t node_count(const SmhkParams& params) {
  const auto n = static_cast<std::size_t>(params.sets());
  const auto k = static_cast<std::size_t>(params.stars_per_set());
  const auto m = static_cast<std::size_t>(params.path_length());
  const auto L = static_cast<std::size_t>(params.branches());
  return n * k * (m * L + 1);
}

std::size_t edge_count(const SmhkParams& params) {
  const auto n = static_cast<std::size_t>(params.sets());
  const auto k = static_cast<std::size_t>(params.stars_per_set());
  const auto m = static_cast<std::size_t>(params.path_length());
  const auto L = static_cast<std::size_t>(params.branches());
  return k * n * L * m + k * k * n * (n - 1) / 2;
}

std::vector<OrbitEdge> build_edges(const SmhkParams& params) {
  const int n = params.sets();
  const int k = params.stars_per_set();
  const int m = params.path_length();
  const int L = params.branches();

  std::vector<OrbitEdge> edges;
  edges.reserve(edge_count(params));

  // Every central pair across distinct sets, each unordered pair once.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      for (int i2 = i + 1; i2 <= n; ++i2) {
        for (int j2 = 1; j2 <= k; ++j2) {
          edges.push_back({NodeId{i, j, 0, 0}, NodeId{i2, j2, 0, 0}, 0});
        }
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      for (int p = 1; p <= L; ++p) {
        for (int q = 1; q <= m; ++q) {
          const NodeId parent = q == 1 ? NodeId{i, j, 0, 0}
                                       : NodeId{i, j, p, q - 1};
          edges.push_back({parent, NodeId{i, j, p, q}, q});
        }
      }
    }
  }
  return edges;
}

std::size_t node_index(const SmhkParams& params, const NodeId& id) {
  const int n = params.sets();
  const int k = params.stars_per_set();
  const int m = params.path_length();
  const int L = params.branches();

  const bool central = id.branch == 0 && id.depth == 0;
  const bool branch_node = id.branch >= 1 && id.branch <= L && id.depth >= 1 &&
                           id.depth <= m;
  if (id.set < 1 || id.set > n || id.star < 1 || id.star > k ||
      !(central || branch_node)) {
    throw Error(ErrorKind::kInvalidArgument, "node id out of range");
  }

  const auto star_size = static_cast<std::size_t>(m) * L + 1;
  const std::size_t base =
      (static_cast<std::size_t>(id.set - 1) * k + (id.star - 1)) * star_size;
  if (central) return base;
  return base + 1 + static_cast<std::size_t>(id.branch - 1) * m +
         static_cast<std::size_t>(id.depth - 1);
}

NodeId node_id(const SmhkParams& params, std::size_t index) {
  if (index >= node_count(params)) {
    throw Error(ErrorKind::kInvalidArgument, "node index out of range");
  }
  const auto k = static_cast<std::size_t>(params.stars_per_set());
  const auto m = static_cast<std::size_t>(params.path_length());
  const std::size_t star_size = m * params.branches() + 1;

  const std::size_t star_block = index / star_size;
  const std::size_t offset = index % star_size;

  NodeId id;
  id.set = static_cast<int>(star_block / k) + 1;
  id.star = static_cast<int>(star_block % k) + 1;
  if (offset == 0) return id;
  id.branch = static_cast<int>((offset - 1) / m) + 1;
  id.depth = static_cast<int>((offset - 1) % m) + 1;
  return id;
}

std::vector<std::uint8_t> adjacency(const SmhkParams& params) {
  const std::size_t size = node_count(params);
  std::vector<std::uint8_t> adj(size * size, 0);
  for (const OrbitEdge& e : build_edges(params)) {
    const std::size_t a = node_index(params, e.u);
    const std::size_t b = node_index(params, e.v);
    adj[a * size + b] = 1;
    adj[b * size + a] = 1;
  }
  return adj;
}

}  // namespace smhk

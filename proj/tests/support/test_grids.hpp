#pragma once

#include <vector>

#include "smhk/topology.hpp"

namespace smhk::testing {

// Every params in sets x stars x depths x branches, in that nesting order.
inline std::vector<SmhkParams> grid(const std::vector<int>& sets,
                                    const std::vector<int>& stars,
                                    const std::vector<int>& depths,
                                    const std::vector<int>& branches) {
  std::vector<SmhkParams> out;
  for (int n : sets)
    for (int k : stars)
      for (int m : depths)
        for (int L : branches) out.push_back(validate_params(n, k, m, L));
  return out;
}

// n, k in {2,3,4}; m, L in {1,2,3}.
inline std::vector<SmhkParams> small_grid() {
  return grid({2, 3, 4}, {2, 3, 4}, {1, 2, 3}, {1, 2, 3});
}

}  // namespace smhk::testing

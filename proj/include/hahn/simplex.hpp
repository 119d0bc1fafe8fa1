#pragma once

#include <vector>

namespace hahn {

struct GridPoint {
  int i = 0, k = 0;
  bool operator==(const GridPoint&) const = default;
};

struct DegreePair {
  int m = 0, n = 0;
  bool operator==(const DegreePair&) const = default;
};

// Points (a, b) with a + b <= N, b outer and a inner:
// N = 1 gives (0,0), (1,0), (0,1).
std::vector<GridPoint> grid_points(int N);
std::vector<DegreePair> degree_pairs(int N);
int simplex_size(int N);
// position of (a, b) in the ordering above, -1 when off the simplex
int simplex_index(int a, int b, int N);

}  // namespace hahn

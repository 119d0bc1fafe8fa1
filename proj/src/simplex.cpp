#include "hahn/simplex.hpp"

namespace hahn {

std::vector<GridPoint> grid_points(int N) {
  std::vector<GridPoint> v;
  for (int k = 0; k <= N; ++k)
    for (int i = 0; i + k <= N; ++i) v.push_back({i, k});
  return v;
}

std::vector<DegreePair> degree_pairs(int N) {
  std::vector<DegreePair> v;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m + n <= N; ++m) v.push_back({m, n});
  return v;
}

int simplex_size(int N) { return N < 0 ? 0 : (N + 1) * (N + 2) / 2; }

int simplex_index(int a, int b, int N) {
  if (a < 0 || b < 0 || a + b > N) return -1;
  // rows b' < b hold N+1-b' points each
  return b * (N + 1) - b * (b - 1) / 2 + a;
}

}  // namespace hahn

#pragma once

#include <vector>

#include "hypcert/int_matrix.hpp"
#include "hypcert/manifold.hpp"

namespace hypcert {

// The four coefficient blocks of a filling matrix: cusp rows F, consistency
// rows G, and their log-derivative parts H and K (the same rows with the
// constant column dropped).
struct FillingBlocks {
  IntMatrix f;   // k x (2n + 1)
  IntMatrix g;   // n x (2n + 1)
  IntMatrix h;   // k x 2n
  IntMatrix kk;  // n x 2n
};

FillingBlocks split_blocks(const ManifoldProblem& p);

// A full-rank n-equation subsystem: all k cusp rows plus the first
// consistency rows that keep both the full matrix and its constant-free
// part at strictly increasing rank.
struct SelectedSystem {
  IntMatrix t;                      // n x (2n + 1)
  std::vector<int> selected_rows;   // 1-based indices into G
  int n = 0;
  int k = 0;
  int h = 0;
};

// Scans G top to bottom, appending a row only when it raises the rank of
// both the accumulated (2n + 1)-column and 2n-column systems. Sanity-checks
// rank(H) = k and rank(K) >= n - k up front; throws RankDeficient when a
// check fails or G runs out before reaching rank n.
SelectedSystem select_rows(const ManifoldProblem& p);

}  // namespace hypcert

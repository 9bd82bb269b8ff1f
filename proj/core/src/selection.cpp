#include "hypcert/selection.hpp"

#include <string>

#include "hypcert/errors.hpp"

namespace hypcert {

FillingBlocks split_blocks(const ManifoldProblem& p) {
  FillingBlocks b;
  b.f = p.fg.sub_rows(0, p.k);
  b.g = p.fg.sub_rows(p.k, p.n);
  b.h = b.f.sub_cols(0, 2 * p.n);
  b.kk = b.g.sub_cols(0, 2 * p.n);
  return b;
}

SelectedSystem select_rows(const ManifoldProblem& p) {
  FillingBlocks blocks = split_blocks(p);
  const int n = p.n;
  const int k = p.k;

  if (exact_rank(blocks.h) != k) {
    throw RankDeficient("cusp rows have rank " + std::to_string(exact_rank(blocks.h)) +
                        ", expected " + std::to_string(k) +
                        "; the filling data is inconsistent");
  }
  if (exact_rank(blocks.kk) < n - k) {
    throw RankDeficient("consistency rows have rank " +
                        std::to_string(exact_rank(blocks.kk)) + ", need at least " +
                        std::to_string(n - k));
  }

  SelectedSystem sys;
  sys.n = n;
  sys.k = k;
  sys.h = p.h;
  sys.t = blocks.f;
  IntMatrix trimmed = blocks.h;
  int rank_full = k;
  int rank_trimmed = k;

  for (int r = 0; r < n && rank_trimmed < n; ++r) {
    IntMatrix full_candidate = sys.t;
    full_candidate.append_row(blocks.g.row(r));
    IntMatrix trimmed_candidate = trimmed;
    trimmed_candidate.append_row(blocks.kk.row(r));
    int new_full = exact_rank(full_candidate);
    int new_trimmed = exact_rank(trimmed_candidate);
    if (new_full > rank_full && new_trimmed > rank_trimmed) {
      sys.t = std::move(full_candidate);
      trimmed = std::move(trimmed_candidate);
      rank_full = new_full;
      rank_trimmed = new_trimmed;
      sys.selected_rows.push_back(r + 1);
    }
  }

  if (rank_trimmed < n) {
    throw RankDeficient("consistency rows were exhausted at rank " +
                        std::to_string(rank_trimmed) + " of " + std::to_string(n));
  }
  if (exact_rank(sys.t) != n || rank_full != n) {
    throw RankDeficient("selected system failed the final rank check");
  }
  return sys;
}

}  // namespace hypcert

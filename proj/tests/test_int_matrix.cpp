#include <doctest.h>

#include "hypcert/errors.hpp"
#include "hypcert/int_matrix.hpp"

using hypcert::combine_surgery;
using hypcert::IntMatrix;

namespace {

IntMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<mpz_class>> z;
  for (const auto& row : rows) {
    z.emplace_back(row.begin(), row.end());
  }
  return IntMatrix::from_rows(z);
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(exact_rank(from_longs({{1, 0}, {0, 1}})) == 2);
  CHECK(exact_rank(from_longs({{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(from_longs({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(IntMatrix()) == 0);
}

TEST_CASE("rank is insensitive to scale") {
  // Entries big enough to overflow any fixed-width intermediate.
  mpz_class big("123456789012345678901234567890");
  IntMatrix m(2, 2);
  m.at(0, 0) = big;
  m.at(0, 1) = big * 2;
  m.at(1, 0) = big * 3;
  m.at(1, 1) = big * 6;
  CHECK(exact_rank(m) == 1);
  m.at(1, 1) = big * 6 + 1;
  CHECK(exact_rank(m) == 2);
}

TEST_CASE("rank with a zero leading column") {
  CHECK(exact_rank(from_longs({{0, 1, 2}, {0, 2, 4}, {0, 0, 1}})) == 2);
}

TEST_CASE("rank of a wide rectangular matrix") {
  CHECK(exact_rank(from_longs({{1, 0, 0, 1, 0}, {2, -1, -1, 2, 0}})) == 2);
  CHECK(exact_rank(from_longs({{1, 0, 0, 1, 0}, {2, 0, 0, 2, 0}})) == 1);
}

TEST_CASE("combine_surgery forms p*m + q*l") {
  std::vector<mpz_class> m{1, 0, 2};
  std::vector<mpz_class> l{0, 1, -1};
  auto row = combine_surgery(m, l, 9872, 11111);
  CHECK(row[0] == 9872);
  CHECK(row[1] == 11111);
  CHECK(row[2] == 9872 * 2 - 11111);
}

TEST_CASE("combine_surgery rejects non-coprime coefficients") {
  std::vector<mpz_class> m{1, 0};
  std::vector<mpz_class> l{0, 1};
  CHECK_THROWS_AS(combine_surgery(m, l, 2, 4), hypcert::NotCoprime);
  CHECK_THROWS_AS(combine_surgery(m, l, 0, 0), hypcert::NotCoprime);
  CHECK_NOTHROW(combine_surgery(m, l, 1, 0));
  CHECK_NOTHROW(combine_surgery(m, l, 0, -1));
  CHECK_NOTHROW(combine_surgery(m, l, -3, 5));
}

TEST_CASE("ragged construction is rejected") {
  std::vector<std::vector<mpz_class>> rows{{1, 2}, {3}};
  CHECK_THROWS_AS(IntMatrix::from_rows(rows), hypcert::DimensionMismatch);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "legatlas/exactmat.hpp"
#include "legatlas/niporb.hpp"
#include "legatlas/types.hpp"

using namespace legatlas;

TEST_CASE("entry parsing") {
  CHECK(parse_entry("0") == GaussianRational(Rat(0)));
  CHECK(parse_entry("3") == GaussianRational(Rat(3)));
  CHECK(parse_entry("-2/5") == GaussianRational(Rat(-2, 5)));
  CHECK(parse_entry("4/6") == GaussianRational(Rat(2, 3)));  // canonicalized
  CHECK(parse_entry("i") == GaussianRational::i());
  CHECK(parse_entry("-i") == GaussianRational(Rat(0), Rat(-1)));
  CHECK(parse_entry("2+i") == GaussianRational(Rat(2), Rat(1)));
  CHECK(parse_entry("1/2-3/4i") == GaussianRational(Rat(1, 2), Rat(-3, 4)));
  CHECK(parse_entry("-1+2i") == GaussianRational(Rat(-1), Rat(2)));
}

TEST_CASE("entry parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_entry(""), ParseError);
  CHECK_THROWS_AS(parse_entry("+"), ParseError);
  CHECK_THROWS_AS(parse_entry("1+"), ParseError);
  CHECK_THROWS_AS(parse_entry("1/"), ParseError);
  CHECK_THROWS_AS(parse_entry("x"), ParseError);
  CHECK_THROWS_AS(parse_entry("1 2"), ParseError);
  CHECK_THROWS_AS(parse_entry("2i3"), ParseError);
}

TEST_CASE("entry formatting round-trips") {
  for (const char* text : {"0", "3", "-2/5", "i", "-i", "2+i", "1/2-3/4i", "-1-i"}) {
    GaussianRational g = parse_entry(text);
    CHECK(parse_entry(g.str()) == g);
  }
}

TEST_CASE("Gaussian rational arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(Rat(-1)));
  GaussianRational a = parse_entry("1/2-3/4i");
  GaussianRational b = parse_entry("2+i");
  CHECK((a * b) / b == a);
  CHECK_THROWS_AS(a / GaussianRational(), Error);
}

TEST_CASE("matrix parsing") {
  std::istringstream good("0 i\n-i 0\n");
  ExactMatrix m = parse_matrix(good);
  CHECK(m.size() == 2);
  CHECK(m.at(0, 1) == GaussianRational::i());
  // format/parse round-trip.
  std::istringstream again(format_matrix(m));
  CHECK(parse_matrix(again) == m);

  std::istringstream not_square("1 2\n3\n");
  CHECK_THROWS_AS(parse_matrix(not_square), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_matrix(empty), ParseError);
}

TEST_CASE("rank and nilpotency") {
  ExactMatrix id(3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = GaussianRational(Rat(1));
  CHECK(id.rank() == 3);
  CHECK_THROWS_AS(id.jordan_type(), NotNilpotent);
  ExactMatrix zero(3);
  CHECK(zero.rank() == 0);
  CHECK(zero.jordan_type() == Partition{1, 1, 1});
}

TEST_CASE("fold witness in sl(2l)") {
  for (int l = 2; l <= 6; ++l) {
    ExactMatrix m = build_witness(WitnessKind::SL_fold, l);
    CHECK(membership_check(MatrixAlgebra::sl, m));
    Partition expected{2, 2};
    expected.insert(expected.end(), 2 * l - 4, 1);
    CHECK(m.jordan_type() == expected);
    CHECK_NOTHROW(validate_partition(MatrixAlgebra::sp, 2 * l, m.jordan_type()));
  }
  CHECK_THROWS_AS(build_witness(WitnessKind::SL_fold, 1), Error);
}

TEST_CASE("standard vector witness in so(n+1)") {
  for (int n = 2; n <= 8; ++n) {
    ExactMatrix m = build_witness(WitnessKind::SO_standard, n);
    CHECK(membership_check(MatrixAlgebra::so, m));
    Partition expected{3};
    expected.insert(expected.end(), n - 2, 1);
    CHECK(m.jordan_type() == expected);
    CHECK_NOTHROW(validate_partition(MatrixAlgebra::so, n + 1, m.jordan_type()));
  }
  CHECK_THROWS_AS(build_witness(WitnessKind::SO_standard, 1), Error);
}

TEST_CASE("7x7 short-root witness") {
  ExactMatrix m = build_witness(WitnessKind::B3_G2);
  CHECK(m.size() == 7);
  CHECK(membership_check(MatrixAlgebra::so, m));
  CHECK(m.rank() == 4);
  CHECK(((m * m) * m).is_zero());
  CHECK(!(m * m).is_zero());
  CHECK(m.jordan_type() == Partition{3, 2, 2});
}

TEST_CASE("membership checks discriminate") {
  ExactMatrix diag(2);
  diag.at(0, 0) = GaussianRational(Rat(1));
  diag.at(1, 1) = GaussianRational(Rat(-1));
  CHECK(membership_check(MatrixAlgebra::sl, diag));
  CHECK(!membership_check(MatrixAlgebra::so, diag));
  CHECK(membership_check(MatrixAlgebra::sp, diag));  // [[a,0],[0,-a]]
  ExactMatrix odd(3);
  CHECK(!membership_check(MatrixAlgebra::sp, odd));  // odd size
  ExactMatrix notskew(2);
  notskew.at(0, 1) = GaussianRational(Rat(1));
  CHECK(!membership_check(MatrixAlgebra::so, notskew));
}

TEST_CASE("Jordan type is invariant under conjugation (seeded random)") {
  std::mt19937 rng(12345);
  int cases = 0;
  while (cases < 1000) {
    // Random partition of a random n <= 8.
    std::uniform_int_distribution<int> pick_n(1, 8);
    int n = pick_n(rng);
    Partition parts;
    int left = n;
    while (left > 0) {
      std::uniform_int_distribution<int> pick_part(1, left);
      int part = pick_part(rng);
      parts.push_back(part);
      left -= part;
    }
    std::sort(parts.rbegin(), parts.rend());

    // Nilpotent matrix in Jordan form with that block structure.
    ExactMatrix m(n);
    int base = 0;
    for (long long part : parts) {
      for (int k = 0; k + 1 < part; ++k)
        m.at(base + k, base + k + 1) = GaussianRational(Rat(1));
      base += static_cast<int>(part);
    }
    CHECK(m.jordan_type() == parts);

    // Conjugate by a random product of integer shears I + c E_{ij}; the
    // result stays exact and the Jordan type must be unchanged.
    for (int step = 0; step < 6; ++step) {
      std::uniform_int_distribution<int> pick_idx(0, n - 1);
      int i = pick_idx(rng), j = pick_idx(rng);
      if (i == j) continue;
      std::uniform_int_distribution<int> pick_c(-3, 3);
      int c = pick_c(rng);
      ExactMatrix s(n), sinv(n);
      for (int d = 0; d < n; ++d) {
        s.at(d, d) = GaussianRational(Rat(1));
        sinv.at(d, d) = GaussianRational(Rat(1));
      }
      s.at(i, j) = GaussianRational(Rat(c));
      sinv.at(i, j) = GaussianRational(Rat(-c));
      m = (s * m) * sinv;
    }
    CHECK(m.jordan_type() == parts);
    ++cases;
  }
}

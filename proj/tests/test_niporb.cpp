#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "legatlas/niporb.hpp"
#include "legatlas/types.hpp"

using namespace legatlas;

TEST_CASE("partition transpose") {
  CHECK(transpose_partition({}) == Partition{});
  CHECK(transpose_partition({3, 2, 2}) == Partition{3, 3, 1});
  CHECK(transpose_partition({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(transpose_partition({2, 1, 1, 1, 1}) == Partition{5, 1});
  // Transposing twice is the identity.
  Partition p{5, 4, 4, 2, 1};
  CHECK(transpose_partition(transpose_partition(p)) == p);
}

TEST_CASE("partition validation per matrix algebra") {
  CHECK_NOTHROW(validate_partition(MatrixAlgebra::sl, 5, {3, 1, 1}));
  CHECK_NOTHROW(validate_partition(MatrixAlgebra::so, 7, {3, 2, 2}));
  CHECK_NOTHROW(validate_partition(MatrixAlgebra::sp, 4, {2, 1, 1}));
  // Sum mismatch, ordering, positivity.
  CHECK_THROWS_AS(validate_partition(MatrixAlgebra::sl, 5, {3, 1}), InvalidPartition);
  CHECK_THROWS_AS(validate_partition(MatrixAlgebra::sl, 3, {1, 2}), InvalidPartition);
  CHECK_THROWS_AS(validate_partition(MatrixAlgebra::sl, 0, {1, -1}), InvalidPartition);
  // so: even parts need even multiplicity.
  CHECK_THROWS_AS(validate_partition(MatrixAlgebra::so, 4, {2, 1, 1}), InvalidPartition);
  // sp: odd parts need even multiplicity.
  CHECK_THROWS_AS(validate_partition(MatrixAlgebra::sp, 4, {3, 1}), InvalidPartition);
}

TEST_CASE("minimal orbit partition formula matches the root-system computation") {
  // Projectivized minimal nilpotent orbit, classical families up to rank 12.
  for (int r = 1; r <= 12; ++r) {
    Partition p{2};
    p.insert(p.end(), r - 1, 1);
    CHECK(classical_orbit_dim(MatrixAlgebra::sl, r + 1, p) - 1 ==
          z_long_dim({Family::A, r}));
    CHECK(z_long_dim({Family::A, r}) == 2 * r - 1);
  }
  for (int r = 2; r <= 12; ++r) {
    Partition p{2, 2};
    p.insert(p.end(), 2 * r - 3, 1);
    CHECK(classical_orbit_dim(MatrixAlgebra::so, 2 * r + 1, p) - 1 ==
          z_long_dim({Family::B, r}));
    CHECK(z_long_dim({Family::B, r}) == 4 * r - 5);
  }
  for (int r = 2; r <= 12; ++r) {
    Partition p{2};
    p.insert(p.end(), 2 * r - 2, 1);
    CHECK(classical_orbit_dim(MatrixAlgebra::sp, 2 * r, p) - 1 ==
          z_long_dim({Family::C, r}));
    CHECK(z_long_dim({Family::C, r}) == 2 * r - 1);
  }
  for (int r = 3; r <= 12; ++r) {
    Partition p{2, 2};
    p.insert(p.end(), 2 * r - 4, 1);
    CHECK(classical_orbit_dim(MatrixAlgebra::so, 2 * r, p) - 1 ==
          z_long_dim({Family::D, r}));
    CHECK(z_long_dim({Family::D, r}) == 4 * r - 7);
  }
}

TEST_CASE("minimal orbit dimensions of the exceptional types") {
  CHECK(z_long_dim({Family::G, 2}) == 5);
  CHECK(z_long_dim({Family::F, 4}) == 15);
  CHECK(z_long_dim({Family::E, 6}) == 21);
  CHECK(z_long_dim({Family::E, 7}) == 33);
  CHECK(z_long_dim({Family::E, 8}) == 57);
}

TEST_CASE("so(7) nilpotent orbit inventory") {
  // The six nonzero nilpotent orbits of so(7) and their projectivized
  // dimensions.
  const std::vector<Partition> jordan_types = {
      {7}, {5, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 1, 1, 1, 1}, {2, 2, 1, 1, 1}};
  std::set<long long> dims;
  for (const auto& p : jordan_types)
    dims.insert(classical_orbit_dim(MatrixAlgebra::so, 7, p) - 1);
  CHECK(dims == std::set<long long>{17, 15, 13, 11, 9, 7});
  CHECK(classical_orbit_dim(MatrixAlgebra::so, 7, {3, 2, 2}) - 1 == 11);
  CHECK(classical_orbit_dim(MatrixAlgebra::so, 7, {7}) - 1 == 17);  // regular
}

TEST_CASE("orbit label descriptions") {
  CHECK(OrbitLabel::long_label().describe() == "Z_long");
  CHECK(OrbitLabel::short_label().describe() == "Z_short");
  CHECK(OrbitLabel::bala_carter("2A1").describe() == "Z_2A1");
  CHECK(OrbitLabel::min_plus_min().describe() == "P(O_min + O_min)");
  CHECK(OrbitLabel::partition_label(MatrixAlgebra::so, 7, {3, 2, 2}).describe() ==
        "Z_[3,2,2]");
}

TEST_CASE("label lookup: long and short orbits") {
  ReductiveType b3{{SimpleType(Family::B, 3)}};
  CHECK(z_dim_from_label(b3, OrbitLabel::long_label()) == 7);
  for (int r = 2; r <= 6; ++r) {
    ReductiveType b{{SimpleType(Family::B, r)}};
    ReductiveType c{{SimpleType(Family::C, r)}};
    CHECK(z_dim_from_label(b, OrbitLabel::short_label()) == 4 * r - 3);
    CHECK(z_dim_from_label(c, OrbitLabel::short_label()) == 4 * r - 3);
  }
  ReductiveType f4{{SimpleType(Family::F, 4)}};
  CHECK(z_dim_from_label(f4, OrbitLabel::short_label()) == 21);
}

TEST_CASE("label lookup: partition, named orbit, and sum of two minimal orbits") {
  ReductiveType b3{{SimpleType(Family::B, 3)}};
  CHECK(z_dim_from_label(b3, OrbitLabel::partition_label(MatrixAlgebra::so, 7, {3, 2, 2})) ==
        11);
  ReductiveType e6{{SimpleType(Family::E, 6)}};
  CHECK(z_dim_from_label(e6, OrbitLabel::bala_carter("2A1")) == 31);
  ReductiveType g2g2{{SimpleType(Family::G, 2), SimpleType(Family::G, 2)}};
  CHECK(z_dim_from_label(g2g2, OrbitLabel::min_plus_min()) == 2 * (5 + 1) - 1);
}

TEST_CASE("label lookup rejects inapplicable labels") {
  ReductiveType a5{{SimpleType(Family::A, 5)}};
  ReductiveType e7{{SimpleType(Family::E, 7)}};
  ReductiveType b3{{SimpleType(Family::B, 3)}};
  ReductiveType pair{{SimpleType(Family::A, 1), SimpleType(Family::A, 2)}};
  CHECK_THROWS_AS(z_dim_from_label(pair, OrbitLabel::long_label()), UnknownLabel);
  CHECK_THROWS_AS(z_dim_from_label(a5, OrbitLabel::short_label()), UnknownLabel);
  CHECK_THROWS_AS(z_dim_from_label(e7, OrbitLabel::bala_carter("2A1")), UnknownLabel);
  CHECK_THROWS_AS(z_dim_from_label(pair, OrbitLabel::min_plus_min()), UnknownLabel);
  // Partition label whose ambient algebra does not match g.
  CHECK_THROWS_AS(
      z_dim_from_label(b3, OrbitLabel::partition_label(MatrixAlgebra::so, 9, {3, 3, 3})),
      UnknownLabel);
  // Partition label with an invalid Jordan type.
  CHECK_THROWS_AS(
      z_dim_from_label(b3, OrbitLabel::partition_label(MatrixAlgebra::so, 7, {4, 2, 1})),
      InvalidPartition);
}

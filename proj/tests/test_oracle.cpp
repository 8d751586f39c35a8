#include "rootcount/finite_field.hpp"
#include "rootcount/oracle.hpp"
#include "rootcount/qseries.hpp"

#include <doctest.h>

#include <numeric>

using namespace rootcount;

TEST_CASE("prime fields") {
  const FiniteField f = FiniteField::of_order(7);
  CHECK(f.size() == 7);
  CHECK(f.characteristic() == 7);
  for (FieldElement a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.is_square(2));
  CHECK_FALSE(f.is_square(3));
  CHECK(f.smallest_nonsquare() == 3);
}

TEST_CASE("extension fields") {
  for (std::int64_t q : {9, 25, 27, 49}) {
    const FiniteField f = FiniteField::of_order(q);
    CHECK(f.size() == q);
    std::int64_t generators = 0;
    for (FieldElement a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, static_cast<std::uint64_t>(q - 1)) == 1);
      std::uint64_t order = 1;
      for (FieldElement x = a; x != 1; x = f.mul(x, a)) ++order;
      if (order == static_cast<std::uint64_t>(q - 1)) ++generators;
    }
    std::int64_t phi = 0;
    for (std::int64_t k = 1; k < q; ++k) phi += std::gcd(k, q - 1) == 1;
    CHECK(generators == phi);
  }
}

TEST_CASE("conjugation over the quadratic extension") {
  for (std::int64_t q : {3, 5, 9}) {
    const FiniteField f = FiniteField::of_order(q).quadratic_extension();
    CHECK(f.size() == q * q);
    CHECK(f.subfield_size() == q);
    std::int64_t fixed = 0;
    for (FieldElement a = 0; a < f.size(); ++a) {
      CHECK(f.conj(f.conj(a)) == a);
      CHECK(f.conj(a) == f.pow(a, static_cast<std::uint64_t>(q)));
      fixed += f.conj(a) == a;
      for (FieldElement b = 0; b < f.size(); b += 7) {
        CHECK(f.conj(f.mul(a, b)) == f.mul(f.conj(a), f.conj(b)));
      }
    }
    CHECK(fixed == q);
  }
}

TEST_CASE("field construction rejects bad orders") {
  CHECK_THROWS(FiniteField::of_order(6));
  CHECK_THROWS(FiniteField::of_order(1));
  CHECK_THROWS(FiniteField::of_order(2048));
}

TEST_CASE("forms are invertible") {
  const FiniteField f3 = FiniteField::of_order(3);
  for (GroupFamily family : {GroupFamily::Sp, GroupFamily::OrthoPlus, GroupFamily::OrthoMinus}) {
    for (int dim : {2, 4, 6}) CHECK(determinant(f3, form_spec(family, dim, f3).J) != 0);
  }
  for (int dim : {1, 3, 5}) {
    CHECK(determinant(f3, form_spec(GroupFamily::OrthoOdd, dim, f3).J) != 0);
  }
  const FiniteField f9 = f3.quadratic_extension();
  CHECK(determinant(f9, form_spec(GroupFamily::U, 3, f9).J) != 0);
}

TEST_CASE("group enumeration matches group orders") {
  struct Case {
    GroupFamily family;
    int dim;
    std::int64_t q;
  };
  for (const Case& c : {Case{GroupFamily::GL, 1, 7}, Case{GroupFamily::GL, 2, 3},
                        Case{GroupFamily::GL, 2, 5}, Case{GroupFamily::GL, 3, 3},
                        Case{GroupFamily::GL, 2, 9}, Case{GroupFamily::Sp, 2, 3},
                        Case{GroupFamily::Sp, 2, 5}, Case{GroupFamily::Sp, 2, 9},
                        Case{GroupFamily::U, 1, 3}, Case{GroupFamily::U, 2, 3},
                        Case{GroupFamily::U, 1, 9}, Case{GroupFamily::OrthoPlus, 2, 3},
                        Case{GroupFamily::OrthoMinus, 2, 3}, Case{GroupFamily::OrthoPlus, 2, 5},
                        Case{GroupFamily::OrthoMinus, 2, 5}, Case{GroupFamily::OrthoOdd, 1, 3},
                        Case{GroupFamily::OrthoOdd, 3, 3}, Case{GroupFamily::OrthoMinus, 2, 9}}) {
    const MatrixGroup g = enumerate_group(c.family, c.dim, c.q);
    CHECK_MESSAGE(Integer(std::to_string(g.order())) == group_order(c.family, c.dim, c.q),
                  to_string(c.family) << " dim " << c.dim << " q " << c.q);
  }
}

TEST_CASE("enumeration guards") {
  OracleConfig tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(enumerate_group(GroupFamily::GL, 3, 3, tight), Infeasible);
  CHECK_THROWS_AS(enumerate_group(GroupFamily::U, 3, 3), Infeasible);
  CHECK_THROWS_AS(enumerate_group(GroupFamily::GL, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_group(GroupFamily::Sp, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_group(GroupFamily::OrthoSum, 2, 3), std::invalid_argument);
}

TEST_CASE("count_mth_roots") {
  CHECK(count_mth_roots(GroupFamily::GL, 1, 7, 3) == 3);
  CHECK(count_mth_roots(GroupFamily::U, 2, 3, 4) == 40);
  CHECK(count_mth_roots(GroupFamily::OrthoPlus, 2, 3, 2) == 4);
  CHECK(count_mth_roots(GroupFamily::OrthoMinus, 2, 3, 2) == 6);
  CHECK(count_mth_roots(GroupFamily::GL, 2, 3, 2) == 14);
  CHECK(count_mth_roots(GroupFamily::Sp, 2, 3, 3) == 9);
  CHECK(count_mth_roots(GroupFamily::U, 2, 3, 8) == 64);
}

TEST_CASE("root counts are monotone in divisibility") {
  const MatrixGroup g = enumerate_group(GroupFamily::GL, 2, 5);
  CHECK(count_mth_roots(g, 1) == 1);
  CHECK(count_mth_roots(g, static_cast<std::int64_t>(g.order())) == g.order());
  for (std::int64_t M = 1; M <= 24; ++M) {
    for (std::int64_t k = 2; k * M <= 48; ++k) {
      CHECK(count_mth_roots(g, M) <= count_mth_roots(g, k * M));
    }
  }
}

TEST_CASE("parallel counting agrees") {
  OracleConfig serial;
  OracleConfig parallel;
  parallel.jobs = 4;
  CHECK(enumerate_group(GroupFamily::GL, 3, 3, serial).elements() ==
        enumerate_group(GroupFamily::GL, 3, 3, parallel).elements());
  CHECK(count_mth_roots(GroupFamily::Sp, 2, 5, 4, serial) ==
        count_mth_roots(GroupFamily::Sp, 2, 5, 4, parallel));
}

TEST_CASE("split counts") {
  // Sp_2(3) = SL_2(3): orders 1, 2, 4 (8 elements), 3 (8), 6 (8).
  const SplitCount sl = count_split_roots(GroupFamily::Sp, 2, 3, 12);
  CHECK(sl.semisimple == 8);
  CHECK(sl.unipotent == 8);
  CHECK(sl.mixed == 8);
  CHECK(sl.total() == 24);

  const SplitCount gl = count_split_roots(GroupFamily::GL, 2, 3, 2);
  CHECK(gl.semisimple == 14);
  CHECK(gl.unipotent == 0);
  CHECK(gl.mixed == 0);

  for (std::int64_t q : {5, 7, 9}) {
    for (std::int64_t M : {1, 2, 3, 4, 6, 8}) {
      const SplitCount s = count_split_roots(GroupFamily::GL, 1, q, M);
      CHECK(s.semisimple == static_cast<std::uint64_t>(std::gcd(M, q - 1)));
      CHECK(s.unipotent == 0);
      CHECK(s.mixed == 0);
    }
  }
}

TEST_CASE("element_order") {
  const FiniteField f = FiniteField::of_order(3);
  CHECK(element_order(f, identity_matrix(2), 48) == 1);

  MatrixElement jordan = identity_matrix(2);
  jordan.at(0, 1) = 1;
  CHECK(element_order(f, jordan, 48) == 3);

  MatrixElement companion{2, {0, 2, 1, 0}};  // x^2 + 1
  CHECK(element_order(f, companion, 48) == 4);

  MatrixElement singular{2, {1, 1, 1, 1}};
  CHECK_THROWS(element_order(f, singular, 48));
}

TEST_CASE("unipotent census matches Steinberg counts") {
  CHECK(unipotent_census(enumerate_group(GroupFamily::GL, 1, 3)) == 1);
  CHECK(unipotent_census(enumerate_group(GroupFamily::GL, 2, 3)) == 9);
  CHECK(unipotent_census(enumerate_group(GroupFamily::GL, 3, 3)) == 729);
  CHECK(unipotent_census(enumerate_group(GroupFamily::Sp, 2, 3)) == 9);
  CHECK(unipotent_census(enumerate_group(GroupFamily::Sp, 2, 5)) == 25);
}

TEST_CASE("Jordan block of size k has order p^r with p^(r-1) < k <= p^r") {
  for (std::int64_t p : {3, 5}) {
    const FiniteField f = FiniteField::of_order(p);
    for (int k = 1; k <= 9; ++k) {
      MatrixElement jordan = identity_matrix(k);
      for (int i = 0; i + 1 < k; ++i) jordan.at(i, i + 1) = 1;
      std::uint64_t expected = 1;
      while (expected < static_cast<std::uint64_t>(k)) expected *= static_cast<std::uint64_t>(p);
      CHECK(element_order(f, jordan, 3125 * 81) == expected);
    }
  }
}

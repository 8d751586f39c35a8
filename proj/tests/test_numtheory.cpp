#include "rootcount/numtheory.hpp"

#include <doctest.h>

using namespace rootcount;

TEST_CASE("split_root_problem separates the characteristic") {
  const RootProblem a = split_root_problem(12, 3);
  CHECK(a.t == 4);
  CHECK(a.r == 1);
  CHECK(a.p == 3);

  const RootProblem b = split_root_problem(7, 13);
  CHECK(b.t == 7);
  CHECK(b.r == 0);
  CHECK(b.p == 13);

  const RootProblem c = split_root_problem(27, 9);
  CHECK(c.t == 1);
  CHECK(c.r == 3);
  CHECK(c.p == 3);
  CHECK(c.unipotent_bound() == 27);

  CHECK(split_root_problem(1, 5).t == 1);
}

TEST_CASE("split_root_problem rejects bad input") {
  CHECK_THROWS_AS(split_root_problem(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(split_root_problem(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(split_root_problem(4, 8), std::invalid_argument);
  CHECK_THROWS_AS(split_root_problem(4, 1), std::invalid_argument);
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_base(81) == 3);
  CHECK(prime_power_base(49) == 7);
  CHECK_FALSE(prime_power_base(12).has_value());
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(24) == 8);
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(pow_mod(3, 4, 5) == 1);
  CHECK(ipow(3, 5) == 243);
}

TEST_CASE("mult_order") {
  CHECK(mult_order(3, 8) == 2);
  CHECK(mult_order(3, 5) == 4);
  CHECK(mult_order(13, 7) == 2);
  CHECK(mult_order(5, 1) == 1);
  CHECK_THROWS_AS(mult_order(3, 6), std::invalid_argument);
}

TEST_CASE("min_negation_exponent") {
  CHECK(min_negation_exponent(3, 5) == 2);
  CHECK_FALSE(min_negation_exponent(3, 8).has_value());
  CHECK(min_negation_exponent(3, 7) == 3);
  CHECK(min_negation_exponent(13, 7) == 1);
}

TEST_CASE("classify_divisors for Sp at t = 4") {
  const auto classes = classify_divisors(4, 3, GroupFamily::Sp);
  REQUIRE(classes.size() == 3);
  CHECK(std::get<kind::Linear>(classes[0].kind).sign == 1);
  CHECK(std::get<kind::Linear>(classes[1].kind).sign == -1);
  CHECK(classes[2].d == 4);
  CHECK(std::get<kind::SelfDual>(classes[2].kind).m == 1);
  CHECK(classes[2].factor_count == 1);
  CHECK(classes[2].block_dim(GroupFamily::Sp) == 2);
}

TEST_CASE("classify_divisors for U at t = 8") {
  const auto classes = classify_divisors(8, 3, GroupFamily::U);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].kind_name() == "linear");
  CHECK(classes[1].kind_name() == "linear");
  CHECK(classes[2].kind_name() == "self-conjugate");
  CHECK(std::get<kind::SelfConjugate>(classes[2].kind).s == 1);
  CHECK(classes[2].factor_count == 2);
  CHECK(classes[3].kind_name() == "paired");
  CHECK(std::get<kind::Paired>(classes[3].kind).deg == 1);
  CHECK(classes[3].factor_count == 2);
  CHECK(classes[3].centralizer_base(GroupFamily::U, 3) == 9);
  CHECK(classes[3].block_dim(GroupFamily::U) == 2);
}

TEST_CASE("classify_divisors for GL at t = 7") {
  const auto classes = classify_divisors(7, 3, GroupFamily::GL);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].degree() == 1);
  CHECK(classes[1].degree() == 6);
  CHECK(classes[1].factor_count == 1);
  CHECK(classes[1].centralizer_base(GroupFamily::GL, 3) == 729);
}

TEST_CASE("classify_divisors accounts for every root of unity") {
  // Each class covers degree * factor_count (doubled for pairs) of the
  // phi(d) primitive d-th roots.
  for (GroupFamily family : {GroupFamily::GL, GroupFamily::Sp, GroupFamily::U}) {
    for (std::int64_t q : {3, 5, 7, 9, 13}) {
      for (std::int64_t t : {1, 2, 4, 5, 8, 10, 12, 16, 20, 24}) {
        if (t % prime_power_base(q).value() == 0) continue;
        for (const DivisorClass& dc : classify_divisors(t, q, family)) {
          const std::int64_t field_degree = family == GroupFamily::U ? 2 : 1;
          std::int64_t covered = dc.factor_count;
          if (std::holds_alternative<kind::Paired>(dc.kind)) {
            covered *= dc.degree() * (family == GroupFamily::GL ? 1 : 2);
          } else if (std::holds_alternative<kind::SelfDual>(dc.kind)) {
            covered *= 2 * std::get<kind::SelfDual>(dc.kind).m;
          } else if (std::holds_alternative<kind::SelfConjugate>(dc.kind)) {
            covered *= std::get<kind::SelfConjugate>(dc.kind).s;
          }
          (void)field_degree;
          CHECK_MESSAGE(covered == dc.phi, "q=" << q << " t=" << t << " d=" << dc.d);
        }
      }
    }
  }
}

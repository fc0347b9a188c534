#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "cochar/multiplicity.hpp"
#include "cochar/tideal.hpp"
#include "doctest.h"

using namespace cochar;

namespace {

Int multinomial(const std::vector<int>& e) {
  int n = 0;
  for (int x : e) n += x;
  Int r = factorial(n);
  for (int x : e) r /= factorial(x);
  return r;
}

Series random_unit_series(std::mt19937& rng, int d, int cap) {
  std::uniform_int_distribution<int> expd(0, cap), coefd(-3, 3);
  Series s = Series::constant(1, d, VarSpace::t_space, cap);
  for (int t = 0; t < 8; ++t) {
    std::vector<int> e(d);
    for (int& x : e) x = expd(rng);
    s.add_term(key_from(e), coefd(rng));
  }
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("free algebra series counts arrangements") {
  Series h = hilbert_free(2, 6);
  for (const Term& t : h.terms())
    CHECK(t.coeff == multinomial(key_to_vector(t.key, 2)));
  CHECK(h.coeff(key_from(std::vector<int>{2, 2})) == 6);
  CHECK(h.coeff(key_from(std::vector<int>{3, 1})) == 4);
}

TEST_CASE("polynomial algebra series is the all-ones series") {
  Series h = hilbert_polyalg(3, 5);
  for (const Term& t : h.terms()) CHECK(t.coeff == 1);
  // C(5+3,3) monomials of degree <= 5 in 3 variables
  CHECK(h.term_count() == 56);
}

TEST_CASE("product rule is commutative and associative") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 15; ++rep) {
    int d = 2 + rep % 2;
    Series a = random_unit_series(rng, d, 8);
    Series b = random_unit_series(rng, d, 8);
    Series c = random_unit_series(rng, d, 8);
    CHECK(hilbert_product2(a, b) == hilbert_product2(b, a));
    CHECK(hilbert_product2(hilbert_product2(a, b), c) ==
          hilbert_product2(a, hilbert_product2(b, c)));
  }
}

TEST_CASE("power rule equals iterated products") {
  std::mt19937 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    Series h = random_unit_series(rng, 2, 8);
    Series two = hilbert_product2(h, h);
    CHECK(hilbert_power(h, 2) == two);
    CHECK(hilbert_power(h, 3) == hilbert_product2(two, h));
    CHECK(hilbert_power(h, 4) == hilbert_product2(two, two));
  }
  Series p = hilbert_polyalg(2, 8);
  CHECK(hilbert_power(p, 1) == p);
}

TEST_CASE("block triangular series routes agree") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {3, 0},
           {0, 3}, {2, 2}})
    for (int d = 1; d <= 3; ++d) {
      Series a = hilbert_rpq(p, q, d, 8, RpqRoute::composed);
      Series b = hilbert_rpq(p, q, d, 8, RpqRoute::direct_sum);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(d);
      CHECK(a == b);
    }
}

TEST_CASE("one-block cases reduce to the classical series") {
  CHECK(hilbert_rpq(1, 0, 3, 7) == hilbert_polyalg(3, 7));
  CHECK(hilbert_rpq(0, 1, 3, 7) == hilbert_m2(3, 7));
  // appending a polynomial block is one product step
  Series left = hilbert_rpq(2, 1, 2, 8);
  Series step =
      hilbert_product2(hilbert_rpq(1, 1, 2, 8), hilbert_polyalg(2, 8));
  CHECK(left == step);
}

TEST_CASE("two-by-two matrix series round-trips through extraction") {
  for (int d = 2; d <= 3; ++d) {
    Series h = hilbert_m2(d, 8);
    MultiplicitySeries m = extract(h);
    CHECK(verify_multiplicity(h, m));
    // multiplicities start 1, 1; (2) and (1,1) both appear once
    CHECK(m.coeff(Partition{}) == 1);
    CHECK(m.coeff(Partition{1}) == 1);
    CHECK(m.coeff(Partition{2}) == 1);
    CHECK(m.coeff(Partition{1, 1}) == 1);
  }
}

TEST_CASE("upper triangular multiplicities match the block route") {
  for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    MultiplicitySeries a = mult_uk(k, d, 8);
    MultiplicitySeries b = extract(hilbert_rpq(k, 0, d, 8));
    CAPTURE(k);
    CAPTURE(d);
    CHECK(a == b);
  }
}

TEST_CASE("multiplicities are nonnegative integers") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}})
    for (int d = 2; d <= 3; ++d) {
      MultiplicitySeries m = extract(hilbert_rpq(p, q, d, 8));
      for (const auto& [lam, c] : m.coeffs()) {
        CHECK(is_integer(c));
        CHECK(c >= 0);
      }
    }
}

TEST_CASE("round-trip verification across the pipeline") {
  for (auto [p, q] :
       std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {0, 2}})
    for (int d = 2; d <= 4; ++d) {
      Series h = hilbert_rpq(p, q, d, 8);
      CHECK(verify_multiplicity(h, extract(h)));
    }
}

TEST_CASE("shape support of the one-one block algebra") {
  // at 7 variables every multiplicity with a seventh row vanishes, and the
  // sixth row never exceeds one
  MultiplicitySeries m = extract(hilbert_rpq(1, 1, 7, 8));
  bool support_ok = true;
  int six = 0;
  for (const auto& [lam, c] : m.coeffs()) {
    if (c == 0) continue;
    if (lam.length() >= 7 || lam.part(5) >= 2) support_ok = false;
    if (lam.part(5) == 1) ++six;
  }
  CHECK(support_ok);
  CHECK(six == 3);
}

TEST_CASE("flag validation") {
  CHECK_THROWS_AS(hilbert_rpq(0, 0, 2, 4), argument_error);
  CHECK_THROWS_AS(hilbert_rpq(-1, 1, 2, 4), argument_error);
  CHECK_THROWS_AS(hilbert_rpq(1, 0, 0, 4), dimension_error);
  CHECK_THROWS_AS(mult_uk(0, 2, 4), argument_error);
}

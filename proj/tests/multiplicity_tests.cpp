#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "cochar/multiplicity.hpp"
#include "cochar/tideal.hpp"
#include "doctest.h"

using namespace cochar;

namespace {

MultiplicitySeries random_mult(std::mt19937& rng, int d, int cap,
                               int nterms) {
  std::uniform_int_distribution<int> szd(0, cap), coefd(-4, 4);
  MultiplicitySeries m(d, cap);
  m.add(Partition{}, 1);
  for (int t = 0; t < nterms; ++t) {
    auto parts = enumerate_partitions(szd(rng), d);
    if (parts.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    m.add(parts[pick(rng)], coefd(rng));
  }
  return m;
}

// Conjugate Pieri rule: S_lambda * e_k = sum of S_nu over nu obtained from
// lambda by adding a vertical strip of k cells (at most one per row).
void add_vstrips(const Partition& lam, int k, int d, int row, int prev,
                 std::vector<int>& cur, MultiplicitySeries& out, const Rat& c) {
  if (k == 0) {
    std::vector<int> parts = cur;
    for (int r = row; r < lam.length(); ++r) parts.push_back(lam.parts()[r]);
    out.add(Partition(parts), c);
    return;
  }
  if (row >= d) return;
  int base = lam.part(row);
  // skip this row, or add one cell to it; the result must stay decreasing
  for (int add = 0; add <= 1; ++add) {
    int val = base + add;
    if (val > prev) continue;
    if (val == 0 && k - add > 0) continue;  // nothing fits below an empty row
    cur.push_back(val);
    add_vstrips(lam, k - add, d, row + 1, val, cur, out, c);
    cur.pop_back();
  }
}

MultiplicitySeries mult_e_oracle(const MultiplicitySeries& m, int k) {
  MultiplicitySeries out(m.dim(), m.cap());
  for (const auto& [lam, c] : m.coeffs()) {
    if (lam.size() + k > m.cap()) continue;
    std::vector<int> cur;
    add_vstrips(lam, k, m.dim(), 0, 1 << 20, cur, out, c);
  }
  return out;
}

}  // namespace

TEST_CASE("extraction inverts reconstruction") {
  std::mt19937 rng(2025);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + rep % 3;
    MultiplicitySeries m = random_mult(rng, d, 8, 6);
    MultiplicitySeries back = extract(reconstruct(m));
    CHECK(back == m);
  }
}

TEST_CASE("extraction of a single Schur polynomial") {
  for (const Partition& lam : enumerate_partitions(5, 3)) {
    MultiplicitySeries m = extract(schur_poly(lam, 3));
    REQUIRE(m.coeffs().size() == 1);
    CHECK(m.coeff(lam) == 1);
  }
  MultiplicitySeries poly = extract(hilbert_polyalg(3, 7));
  for (int n = 0; n <= 7; ++n) CHECK(poly.coeff(Partition{n}) == 1);
  CHECK(poly.coeffs().size() == 8);
}

TEST_CASE("round-trip verification accepts extractions and rejects tampering") {
  std::mt19937 rng(4096);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 2 + rep % 3;
    Series f = reconstruct(random_mult(rng, d, 7, 5));
    MultiplicitySeries m = extract(f);
    CHECK(verify_multiplicity(f, m));
    MultiplicitySeries bad = m;
    bad.add(Partition{2, 1}, 1);
    CHECK(!verify_multiplicity(f, bad));
  }
}

TEST_CASE("paranoid extraction rejects non-symmetric input") {
  Series s = Series::variable(1, 3, VarSpace::t_space, 6);
  CHECK_THROWS_AS(extract(s, true), argument_error);
  CHECK_NOTHROW(extract(schur_poly(Partition{2, 1}, 3), true));
}

TEST_CASE("Young derivation equals multiply-by-polynomial-algebra oracle") {
  std::mt19937 rng(777);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + rep % 3;
    int cap = 6 + rep % 3;
    MultiplicitySeries m = random_mult(rng, d, cap, 5);
    MultiplicitySeries lhs = young_derive(m);
    MultiplicitySeries rhs =
        extract(reconstruct(m) * hilbert_polyalg(d, cap));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Young derivation of the unit series lists one-row shapes") {
  MultiplicitySeries one(3, 9);
  one.add(Partition{}, 1);
  MultiplicitySeries y = young_derive(one);
  CHECK(y.coeffs().size() == 10);
  for (int n = 0; n <= 9; ++n) CHECK(y.coeff(Partition{n}) == 1);
}

TEST_CASE("branching equals multiply-by-S1 oracle") {
  std::mt19937 rng(1313);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + rep % 3;
    int cap = 6;
    MultiplicitySeries m = random_mult(rng, d, cap, 5);
    Series lhs = branch(m.to_v());
    MultiplicitySeries prod =
        extract(reconstruct(m) * schur_poly(Partition{1}, d).truncated(cap));
    Series rhs = prod.to_v();
    // the product loses the top degree: compare below cap
    CHECK(lhs.truncated(cap - 1) == rhs.truncated(cap - 1));
  }
}

TEST_CASE("third elementary multiplier at three variables") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    MultiplicitySeries m = random_mult(rng, 3, 6, 5);
    Series lhs = mult_e3_d3(m.to_v());
    MultiplicitySeries prod =
        extract(reconstruct(m) * schur_poly(Partition{1, 1, 1}, 3).truncated(6));
    CHECK(lhs.truncated(5) == prod.to_v().truncated(5));
  }
  CHECK_THROWS_AS(mult_e3_d3(MultiplicitySeries(2, 4).to_v()),
                  dimension_error);
}

TEST_CASE("elementary multiplication follows the vertical strip rule") {
  std::mt19937 rng(512);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + rep % 3;
    int k = 1 + rep % d;
    MultiplicitySeries m = random_mult(rng, d, 7, 5);
    MultiplicitySeries lhs = mult_elementary(m, k);
    MultiplicitySeries rhs = mult_e_oracle(m, k);
    // compare where both are complete
    bool equal = true;
    for (int n = 0; n <= 7; ++n)
      for (const Partition& lam : enumerate_partitions(n, d))
        if (lhs.coeff(lam) != rhs.coeff(lam)) equal = false;
    CHECK(equal);
  }
  // columns longer than the alphabet vanish
  MultiplicitySeries m(2, 6);
  m.add(Partition{2}, 1);
  CHECK(mult_elementary(m, 3).is_zero());
}

TEST_CASE("v and t coordinate conversions invert each other") {
  std::mt19937 rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 2 + rep % 4;
    MultiplicitySeries m = random_mult(rng, d, 8, 6);
    CHECK(MultiplicitySeries::from_t(m.to_t()) == m);
    CHECK(MultiplicitySeries::from_v(m.to_v()) == m);
  }
}

TEST_CASE("coefficient maps respect the cap") {
  MultiplicitySeries m(2, 4);
  m.add(Partition{3, 2}, 1);  // beyond the cap: ignored
  CHECK(m.is_zero());
  m.add(Partition{2, 2}, 1);
  CHECK(m.coeff(Partition{2, 2}) == 1);
  m.add(Partition{2, 2}, -1);
  CHECK(m.is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "cochar/schur.hpp"
#include "doctest.h"

using namespace cochar;

namespace {

// Brute-force semistandard tableaux of shape lambda with entries in 1..d;
// returns the content-vector generating polynomial.
void fill_ssyt(const std::vector<int>& shape, std::vector<std::vector<int>>& t,
               std::size_t r, std::size_t c, int d, Series& out) {
  if (r == shape.size()) {
    std::vector<int> content(d, 0);
    for (const auto& row : t)
      for (int e : row) ++content[e - 1];
    out.add_term(key_from(content), 1);
    return;
  }
  std::size_t nr = r, nc = c + 1;
  if (nc == std::size_t(shape[r])) {
    nr = r + 1;
    nc = 0;
  }
  int lo = c > 0 ? t[r][c - 1] : 1;                       // weak in rows
  if (r > 0 && int(c) < shape[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);  // strict in columns
  for (int e = lo; e <= d; ++e) {
    t[r][c] = e;
    fill_ssyt(shape, t, nr, nc, d, out);
  }
}

Series ssyt_poly(const Partition& lambda, int d) {
  Series out(d, VarSpace::t_space, kExactCap);
  if (lambda.length() > d) return out;
  if (lambda.length() == 0) return Series::constant(1, d, VarSpace::t_space);
  std::vector<std::vector<int>> t;
  for (int i = 0; i < lambda.length(); ++i)
    t.emplace_back(lambda.parts()[i], 0);
  fill_ssyt(lambda.parts(), t, 0, 0, d, out);
  out.normalize();
  return out;
}

// Littlewood-Richardson count by enumerating lattice-word skew tableaux of
// shape nu/lambda and content mu.
struct SkewCell {
  int row, col;
};

bool lattice_ok(const std::vector<std::vector<int>>& fill,
                const std::vector<int>& nu, const Partition& lambda, int k) {
  std::vector<int> seen(k + 1, 0);
  for (std::size_t r = 0; r < nu.size(); ++r) {
    int lam = r < std::size_t(lambda.length()) ? lambda.parts()[r] : 0;
    for (int c = nu[r] - 1; c >= lam; --c) {
      int e = fill[r][c];
      ++seen[e];
      if (e > 1 && seen[e] > seen[e - 1]) return false;
    }
  }
  return true;
}

Int lr_bruteforce(const Partition& lambda, const Partition& mu,
                  const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  for (int i = 0; i < std::max(nu.length(), lambda.length()); ++i)
    if (nu.part(i) < lambda.part(i)) return 0;
  std::vector<int> shape(nu.parts());
  std::vector<SkewCell> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    int lam = int(r) < lambda.length() ? lambda.parts()[r] : 0;
    for (int c = lam; c < shape[r]; ++c) cells.push_back({int(r), c});
  }
  int k = mu.length();
  std::vector<std::vector<int>> fill(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) fill[r].assign(shape[r], 0);
  Int count = 0;
  std::vector<int> content(k + 1, 0);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      for (int e = 1; e <= k; ++e)
        if (content[e] != mu.part(e - 1)) return;
      if (lattice_ok(fill, shape, lambda, k)) ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1, hi = k;
    if (c > 0 && fill[r][c - 1] != 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0 && c < shape[r - 1] && fill[r - 1][c] != 0)
      lo = std::max(lo, fill[r - 1][c] + 1);
    for (int e = lo; e <= hi; ++e) {
      if (content[e] >= mu.part(e - 1)) continue;
      fill[r][c] = e;
      ++content[e];
      self(self, idx + 1);
      --content[e];
      fill[r][c] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("Schur polynomial matches tableau enumeration") {
  Series s21 = schur_poly(Partition{2, 1}, 3);
  CHECK(s21.term_count() == 7);
  CHECK(s21.coeff(key_from(std::vector<int>{1, 1, 1})) == 2);
  Rat total = 0;
  for (const Term& t : s21.terms()) total += t.coeff;
  CHECK(total == 8);  // eight tableaux

  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n, 3))
      CHECK(schur_poly(lam, 3) == ssyt_poly(lam, 3));
  for (int n = 0; n <= 5; ++n)
    for (const Partition& lam : enumerate_partitions(n, 4))
      CHECK(schur_poly(lam, 4) == ssyt_poly(lam, 4));
}

TEST_CASE("Schur times Vandermonde is the alternant") {
  for (int d : {3, 4}) {
    for (const Partition& lam : enumerate_partitions(5, d)) {
      Series lhs = schur_poly(lam, d) * vandermonde(d);
      // alternant: sum over permutations sigma of sign * t^{sigma(lambda+delta)}
      std::vector<int> exps(d);
      for (int i = 0; i < d; ++i) exps[i] = lam.part(i) + d - 1 - i;
      std::vector<int> idx(d);
      for (int i = 0; i < d; ++i) idx[i] = i;
      Series rhs(d, VarSpace::t_space, kExactCap);
      do {
        int inv = 0;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) inv += idx[i] > idx[j];
        std::vector<int> e(d);
        for (int i = 0; i < d; ++i) e[i] = exps[idx[i]];
        rhs.add_term(key_from(e), inv % 2 ? -1 : 1);
      } while (std::next_permutation(idx.begin(), idx.end()));
      rhs.normalize();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("row bounds and special shapes") {
  CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
  CHECK(schur_poly(Partition{}, 3) ==
        Series::constant(1, 3, VarSpace::t_space));
  // single row = complete homogeneous: C(n+d-1, d-1) monomials, coeff 1
  Series h4 = schur_poly(Partition{4}, 3);
  CHECK(h4.term_count() == 15);
  for (const Term& t : h4.terms()) CHECK(t.coeff == 1);
  // single column = elementary: C(d, k) square-free monomials
  Series e2 = schur_poly(Partition{1, 1}, 4);
  CHECK(e2.term_count() == 6);
  for (const Term& t : e2.terms()) CHECK(t.coeff == 1);
}

TEST_CASE("setting the last variable to zero restricts the alphabet") {
  for (const Partition& lam : enumerate_partitions(5, 3)) {
    Series big = schur_poly(lam, 4);
    Series small = schur_poly(lam, 3);
    Series kept(4, VarSpace::t_space, kExactCap);
    for (const Term& t : big.terms())
      if (key_get(t.key, 3) == 0) kept.add_term(t.key, t.coeff);
    kept.normalize();
    CHECK(kept == small.embedded(4));
  }
}

TEST_CASE("sum of square-shape Schur functions") {
  // d = 2: sum_n S_(n,n) = 1/(1 - t1 t2)
  Series two = sum_snn(2, 10);
  CHECK(two == expand_inverse_factor(key_from(std::vector<int>{1, 1}), 1, 2,
                                     VarSpace::t_space, 10));
  // direct sum of schur_poly terms at d = 3
  Series three = sum_snn(3, 9);
  Series direct = Series::zero(3, VarSpace::t_space, 9);
  for (int n = 0; 2 * n <= 9; ++n)
    direct += schur_poly(Partition{n, n}, 3).truncated(9);
  CHECK(three == direct);
}

TEST_CASE("even-row-multiplicity expansion of the pair product") {
  int d = 3, cap = 8;
  Series lhs = even_row_series(d, cap);
  RationalExpr e(d, VarSpace::t_space);
  std::vector<DenFactor> den;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<int> ex(d, 0);
      ex[i] = ex[j] = 1;
      den.push_back({key_from(ex), 1});
    }
  e.add({Series::constant(1, d, VarSpace::t_space), den});
  CHECK(lhs == e.expand(d, cap));
  // and it is the sum of S_nu over nu whose distinct rows repeat evenly
  Series sum = Series::zero(d, VarSpace::t_space, cap);
  for (int n = 0; n <= cap; n += 2)
    for (const Partition& nu : enumerate_partitions(n, d)) {
      bool even = true;
      int run = 1;
      const auto& ps = nu.parts();
      for (std::size_t i = 1; i <= ps.size(); ++i) {
        if (i < ps.size() && ps[i] == ps[i - 1]) {
          ++run;
        } else {
          if (run % 2) even = false;
          run = 1;
        }
      }
      if (even) sum += schur_poly(nu, d).truncated(cap);
    }
  CHECK(lhs == sum);
}

TEST_CASE("Littlewood-Richardson coefficients") {
  auto r = lr_coefficients(Partition{2, 1}, Partition{1}, 4);
  std::map<Partition, Int> want{
      {Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}};
  CHECK(r == want);
  CHECK_THROWS_AS(lr_coefficients(Partition{2, 1}, Partition{1}, 2),
                  argument_error);
}

TEST_CASE("Littlewood-Richardson matches lattice-word enumeration") {
  std::vector<Partition> lams;
  for (int n = 1; n <= 4; ++n)
    for (const Partition& p : enumerate_partitions(n, 3)) lams.push_back(p);
  for (const Partition& lam : lams)
    for (int m = 1; m <= 3; ++m)
      for (const Partition& mu : enumerate_partitions(m, 3)) {
        int d = lam.length() + mu.length();
        auto got = lr_coefficients(lam, mu, d);
        for (const Partition& nu :
             enumerate_partitions(lam.size() + mu.size(), d)) {
          Int want = lr_bruteforce(lam, mu, nu);
          Int have = got.count(nu) ? got.at(nu) : Int(0);
          CAPTURE(lam.to_string());
          CAPTURE(mu.to_string());
          CAPTURE(nu.to_string());
          CHECK(have == want);
        }
        // symmetry in the two factors
        auto sym = lr_coefficients(mu, lam, d);
        CHECK(got == sym);
      }
}

#include "cochar/schur.hpp"

#include <array>
#include <mutex>
#include <optional>

#include "cochar/multiplicity.hpp"

namespace cochar {

namespace {

using MemoKey = std::pair<int, std::vector<int>>;

void strip_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Branching over the last variable: S_lambda(T_d) sums, over all mu
// interlacing lambda, t_d^{|lambda|-|mu|} S_mu(T_{d-1}).
const Series& schur_rec(std::vector<int> lam, int d,
                        std::map<MemoKey, Series>& memo) {
  strip_zeros(lam);
  MemoKey key{d, lam};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Series result(d, VarSpace::t_space, kExactCap);
  if (d == 1) {
    int e = lam.empty() ? 0 : lam[0];
    result.add_term(key_set(0, 0, e), 1);
  } else {
    int lam_size = 0;
    for (int p : lam) lam_size += p;
    auto at = [&](int i) { return i < int(lam.size()) ? lam[i] : 0; };
    std::vector<int> mu(d - 1, 0);
    // Depth-first walk over the interlacing conditions
    // lambda_{i+1} <= mu_i <= lambda_i.
    auto walk = [&](auto&& self, int pos, int mu_size) -> void {
      if (pos == d - 1) {
        const Series& sub = schur_rec(mu, d - 1, memo);
        int e = lam_size - mu_size;
        for (const Term& t : sub.terms())
          result.add_term(key_set(t.key, d - 1, e), t.coeff);
        return;
      }
      for (int m = at(pos + 1); m <= at(pos); ++m) {
        mu[pos] = m;
        self(self, pos + 1, mu_size + m);
      }
    };
    walk(walk, 0, 0);
  }
  result.normalize();
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

Series schur_poly(const Partition& lambda, int d) {
  if (d < 1 || d > kMaxVars)
    throw dimension_error("variable count out of range");
  if (lambda.length() > d) return Series::zero(d, VarSpace::t_space);
  std::map<MemoKey, Series> memo;
  return schur_rec(lambda.parts(), d, memo);
}

const Series& vandermonde(int d) {
  if (d < 1 || d > kMaxVars)
    throw dimension_error("variable count out of range");
  static std::array<std::optional<Series>, kMaxVars + 1> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  if (!cache[d]) {
    Series v = Series::constant(1, d, VarSpace::t_space);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        v = v * (Series::variable(i, d, VarSpace::t_space) -
                 Series::variable(j, d, VarSpace::t_space));
    cache[d] = std::move(v);
  }
  return *cache[d];
}

Series sum_snn(int d, int cap) {
  if (cap >= kExactCap) throw argument_error("sum_snn needs a finite cap");
  Series acc(d, VarSpace::t_space, cap);
  std::map<MemoKey, Series> memo;
  for (int n = 0; 2 * n <= cap; ++n) {
    if (n > 0 && d < 2) break;
    std::vector<int> lam = n == 0 ? std::vector<int>{} : std::vector<int>{n, n};
    acc += schur_rec(lam, d, memo);
  }
  return acc;
}

Series even_row_series(int d, int cap) {
  RationalExpr expr(d, VarSpace::t_space);
  RatTerm term{Series::constant(1, d, VarSpace::t_space), {}};
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      term.den.push_back({key_set(key_set(0, i - 1, 1), j - 1, 1), 1});
  expr.add(std::move(term));
  return expr.expand(d, cap);
}

std::map<Partition, Int> lr_coefficients(const Partition& lambda,
                                         const Partition& mu, int d) {
  if (d < lambda.length() + mu.length())
    throw argument_error(
        "need at least length(lambda) + length(mu) variables");
  Series prod = schur_poly(lambda, d) * schur_poly(mu, d);
  MultiplicitySeries m = extract(prod);
  std::map<Partition, Int> out;
  int want = lambda.size() + mu.size();
  for (const auto& [nu, c] : m.coeffs()) {
    if (!is_integer(c) || c <= 0 || nu.size() != want)
      throw internal_error("invalid Littlewood-Richardson expansion");
    out.emplace(nu, c.get_num());
  }
  return out;
}

}  // namespace cochar

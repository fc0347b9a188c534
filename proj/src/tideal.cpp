#include "cochar/tideal.hpp"

#include "cochar/schur.hpp"

namespace cochar {

namespace {

// t_1 + ... + t_d as an exact polynomial.
Series var_sum(int d) {
  Series s(d, VarSpace::t_space, kExactCap);
  for (int i = 0; i < d; ++i) s.add_term(ExpKey(1) << (8 * i), 1);
  s.normalize();
  return s;
}

void check_pq(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw argument_error("block counts must be nonnegative and not both zero");
}

}  // namespace

Series hilbert_free(int d, int cap) {
  if (cap >= kExactCap)
    throw argument_error("free algebra series needs a finite cap");
  Series s = var_sum(d).truncated(cap);
  Series acc = Series::constant(1, d, VarSpace::t_space, cap);
  Series level = acc;
  for (int n = 1; n <= cap; ++n) {
    level = level * s;
    acc += level;
  }
  return acc;
}

Series hilbert_polyalg(int d, int cap) {
  if (cap >= kExactCap)
    throw argument_error("polynomial algebra series needs a finite cap");
  Series acc = Series::constant(1, d, VarSpace::t_space, cap);
  for (int i = 1; i <= d; ++i)
    acc = acc * expand_inverse_factor(key_set(0, i - 1, 1), 1, d,
                                      VarSpace::t_space, cap);
  return acc;
}

Series hilbert_product2(const Series& h1, const Series& h2) {
  if (h1.nvars() != h2.nvars() || h1.space() != VarSpace::t_space ||
      h2.space() != VarSpace::t_space)
    throw dimension_error("operands live in different rings");
  Series s = var_sum(h1.nvars());
  Series one = Series::constant(1, h1.nvars(), VarSpace::t_space);
  return h1 + h2 + (s - one) * h1 * h2;
}

Series hilbert_power(const Series& h, int n) {
  if (n < 1) throw argument_error("power must be positive");
  if (h.space() != VarSpace::t_space)
    throw argument_error("expected a t-space series");
  int d = h.nvars();
  Series u = var_sum(d) - Series::constant(1, d, VarSpace::t_space);
  Series upow = Series::constant(1, d, VarSpace::t_space);
  Series hpow = h;
  Series acc = Rat(binomial(n, 1)) * hpow;
  for (int k = 2; k <= n; ++k) {
    upow = upow * u;
    hpow = hpow * h;
    acc += Rat(binomial(n, k)) * (upow * hpow);
  }
  return acc;
}

Series hilbert_m2(int d, int cap) {
  Series b = hilbert_polyalg(d, cap);
  Series s = sum_snn(d, cap);
  Series e3 = schur_poly(Partition{1, 1, 1}, d).truncated(cap);
  Series one = Series::constant(1, d, VarSpace::t_space, cap);
  return b * b * (s - one) + b * (one - e3);
}

Series hilbert_rpq(int p, int q, int d, int cap, RpqRoute route) {
  check_pq(p, q);
  if (cap >= kExactCap)
    throw argument_error("Hilbert series expansion needs a finite cap");

  if (route == RpqRoute::composed) {
    Series b = hilbert_polyalg(d, cap);
    if (q == 0) return hilbert_power(b, p);
    Series m2 = hilbert_m2(d, cap);
    if (p == 0) return hilbert_power(m2, q);
    return hilbert_product2(hilbert_power(b, p), hilbert_power(m2, q));
  }

  // Expanded double/triple sum, evaluated term by term.
  Series b = hilbert_polyalg(d, cap);
  Series one = Series::constant(1, d, VarSpace::t_space, cap);
  Series e3 = schur_poly(Partition{1, 1, 1}, d).truncated(cap);
  Series g = b * sum_snn(d, cap) - e3 - b + one;
  Series u = (var_sum(d) - Series::constant(1, d, VarSpace::t_space))
                 .truncated(cap);

  std::vector<Series> bpow{one}, gpow{one}, upow{one};
  for (int i = 1; i <= p + q; ++i) bpow.push_back(bpow.back() * b);
  for (int j = 1; j <= q; ++j) gpow.push_back(gpow.back() * g);
  for (int k = 1; k <= p + q - 1; ++k) upow.push_back(upow.back() * u);

  Series acc = Series::zero(d, VarSpace::t_space, cap);
  for (int i = 1; i <= p; ++i)
    acc += Rat(binomial(p, i)) * (upow[i - 1] * bpow[i]);
  for (int j = 1; j <= q; ++j)
    acc += Rat(binomial(q, j)) * (upow[j - 1] * (bpow[j] * gpow[j]));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      acc += Rat(binomial(p, i) * binomial(q, j)) *
             (upow[i + j - 1] * (bpow[i + j] * gpow[j]));
  return acc;
}

MultiplicitySeries mult_uk(int k, int d, int cap) {
  if (k < 1) throw argument_error("matrix size must be positive");
  if (cap >= kExactCap) throw argument_error("needs a finite cap");
  MultiplicitySeries acc(d, cap);
  for (int j = 1; j <= k; ++j) {
    MultiplicitySeries seed(d, cap);
    for (int q = 0; q < j; ++q) {
      int sign = (j - q - 1) % 2 ? -1 : 1;
      Int outer = binomial(k, j) * binomial(j - 1, q);
      for (const Partition& lam : enumerate_partitions(q, d))
        seed.add(lam, Rat(sign * outer * lam.hook_dimension()));
    }
    for (int it = 0; it < j; ++it) seed = young_derive(seed, cap);
    acc += seed;
  }
  return acc;
}

}  // namespace cochar

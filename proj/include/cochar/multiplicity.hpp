#pragma once

#include <map>

#include "cochar/partition.hpp"
#include "cochar/schur.hpp"
#include "cochar/series.hpp"

namespace cochar {

// Schur multiplicity series of a symmetric function in d variables: the
// coefficient map lambda -> m_lambda. Coefficients with |lambda| <= cap are
// exact. Convertible to the v-coordinate power series
// sum m_lambda v_1^{n_1}...v_d^{n_d} with n_i = lambda_i - lambda_{i+1}.
class MultiplicitySeries {
 public:
  MultiplicitySeries(int dim, int cap) : dim_(dim), cap_(cap) {}

  int dim() const { return dim_; }
  int cap() const { return cap_; }
  const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const Partition& p) const;
  bool is_zero() const { return coeffs_.empty(); }

  // Drops stored zeros; ignores |lambda| > cap.
  void add(const Partition& p, const Rat& c);
  void set_cap(int cap);

  MultiplicitySeries& operator+=(const MultiplicitySeries& o);
  MultiplicitySeries& operator-=(const MultiplicitySeries& o);
  friend MultiplicitySeries operator+(MultiplicitySeries a,
                                      const MultiplicitySeries& o) {
    return a += o;
  }
  friend MultiplicitySeries operator-(MultiplicitySeries a,
                                      const MultiplicitySeries& o) {
    return a -= o;
  }
  friend MultiplicitySeries operator*(const Rat& c, MultiplicitySeries m);

  bool operator==(const MultiplicitySeries& o) const;

  // M as a t-space series (sum m_lambda t^lambda) and M' as a v-space series.
  Series to_t() const;
  Series to_v() const;
  static MultiplicitySeries from_t(const Series& s);
  static MultiplicitySeries from_v(const Series& s);

  std::string to_string() const;

 private:
  int dim_;
  int cap_;
  std::map<Partition, Rat> coeffs_;
};

// Multiplicity series of a symmetric series f: multiply by the Vandermonde,
// keep strictly decreasing exponent vectors p, read lambda = p - delta.
// With paranoid set, asserts the antisymmetry of f * Vandermonde (catching
// non-symmetric input) instead of silently discarding terms.
MultiplicitySeries extract(const Series& f, bool paranoid = false);

// Checks f * prod_{i<j}(t_i - t_j) =
//   sum_sigma sign(sigma) t_sigma(1)^{d-1}...t_sigma(d-1) h(t_sigma(...))
// for all degrees that |lambda| <= cap can reach. True iff h is the
// multiplicity series of f up to the cap.
bool verify_multiplicity(const Series& f, const MultiplicitySeries& h);

// sum m_lambda S_lambda(T_d), truncated at h's cap. The oracle backbone for
// the operator tests.
Series reconstruct(const MultiplicitySeries& m);

// Young-derived multiplicities: M(g) -> M(g * prod 1/(1-t_i)), computed by
// the 2^{d-1} signed substitutions.
MultiplicitySeries young_derive(const MultiplicitySeries& m);
MultiplicitySeries young_derive(const MultiplicitySeries& m, int cap);

// M'(f * S_(1)) from M'(f), in v-coordinates (branching rule).
Series branch(const Series& mv);

// M'(g * S_(1,1,1)) = v_3 M'(g) at d = 3 exactly.
Series mult_e3_d3(const Series& mv);

// Multiplicity series of g * e_k, via reconstruct-multiply-extract.
// k > dim gives the zero series.
MultiplicitySeries mult_elementary(const MultiplicitySeries& m, int k);

}  // namespace cochar

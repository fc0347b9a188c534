#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/rational.hpp"

namespace cochar {

// Exponent vectors are packed one byte per variable into a 64-bit key, so a
// polynomial ring holds at most 8 variables and individual exponents stay
// below 256. Both bounds are enforced at the API boundary; everything the
// library computes (caps up to ~100, d up to 8) fits comfortably.
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExp = 255;

// Cap value used for exact polynomials. min(kExactCap, n) = n keeps the
// "result cap = min of operand caps" rule uniform.
inline constexpr int kExactCap = 1 << 20;

// t-space: variables t_1..t_d, degree of a monomial is the exponent sum.
// v-space: variables v_i = t_1...t_i, so v_i carries t-degree i and the
// degree of a monomial is the weighted sum of exponents.
enum class VarSpace : std::uint8_t { t_space, v_space };

using ExpKey = std::uint64_t;

inline int key_get(ExpKey k, int var) { return int((k >> (8 * var)) & 0xff); }

inline ExpKey key_set(ExpKey k, int var, int e) {
  return (k & ~(ExpKey(0xff) << (8 * var))) | (ExpKey(e) << (8 * var));
}

ExpKey key_from(std::span<const int> exps);
std::vector<int> key_to_vector(ExpKey k, int nvars);
int key_tdegree(ExpKey k, int nvars, VarSpace space);
std::string key_to_string(ExpKey k, int nvars, VarSpace space);

struct Term {
  ExpKey key;
  Rat coeff;
};

// Sparse polynomial / truncated power series over Rat. A Series with
// cap == kExactCap is an exact polynomial; any finite cap means "all
// coefficients of t-degree <= cap are exact, higher ones are absent".
// Terms are kept canonical: zero-free and sorted by (t-degree, key).
class Series {
 public:
  Series() : nvars_(1), space_(VarSpace::t_space), cap_(kExactCap) {}
  Series(int nvars, VarSpace space, int cap);

  static Series zero(int nvars, VarSpace space, int cap = kExactCap);
  static Series constant(const Rat& c, int nvars, VarSpace space,
                         int cap = kExactCap);
  static Series monomial(const Rat& c, ExpKey k, int nvars, VarSpace space,
                         int cap = kExactCap);
  // t_i (or v_i), 1-based.
  static Series variable(int i, int nvars, VarSpace space,
                         int cap = kExactCap);

  int nvars() const { return nvars_; }
  VarSpace space() const { return space_; }
  int cap() const { return cap_; }
  bool exact() const { return cap_ == kExactCap; }
  bool is_zero() const {
    ensure();
    return terms_.empty();
  }
  std::size_t term_count() const {
    ensure();
    return terms_.size();
  }
  const std::vector<Term>& terms() const {
    ensure();
    return terms_;
  }

  Rat coeff(ExpKey k) const;
  // Largest t-degree with a nonzero term; -1 for the zero series.
  int degree() const;

  Series truncated(int cap) const;
  // Re-interprets the series in a ring with more variables (new ones unused).
  Series embedded(int nvars) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rat& c, Series s);
  Series pow(int n) const;

  bool operator==(const Series& o) const;

  // Builder interface: accumulate, then normalize() once. add_term ignores
  // terms beyond the cap.
  void add_term(ExpKey k, const Rat& c);
  void normalize();

  std::string to_string() const;

 private:
  void check_compatible(const Series& o) const;
  void ensure() const {
    if (dirty_) const_cast<Series*>(this)->normalize();
  }

  int nvars_;
  VarSpace space_;
  int cap_;
  mutable std::vector<Term> terms_;
  mutable bool dirty_ = false;
};

// One summand of a rational expression: num / prod (1 - mono_i)^pow_i.
struct DenFactor {
  ExpKey mono;
  int power;
};

struct RatTerm {
  Series num;  // exact polynomial
  std::vector<DenFactor> den;
};

// Sum of polynomial/denominator terms; stores closed forms exactly and is
// only ever expanded, never simplified.
class RationalExpr {
 public:
  RationalExpr(int nvars, VarSpace space);

  void add(RatTerm term);
  int nvars() const { return nvars_; }
  VarSpace space() const { return space_; }
  const std::vector<RatTerm>& terms() const { return terms_; }

  // Sets variables beyond d to zero: drops numerator monomials involving
  // them and denominator factors reduced to (1 - 0).
  RationalExpr restricted(int d) const;

  // Exact expansion to total t-degree <= cap in a d-variable ring.
  // Requires d >= 1; variables beyond nvars() are embedded as unused, and
  // for v-space expressions with nvars() > d the restriction rule applies.
  Series expand(int d, int cap) const;

  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);

 private:
  int nvars_;
  VarSpace space_;
  std::vector<RatTerm> terms_;
};

// Geometric/binomial expansion of 1/(1 - mono)^power up to cap.
Series expand_inverse_factor(ExpKey mono, int power, int nvars, VarSpace space,
                             int cap);

// Worker count used by the heavy kernels (series products, extraction).
// Results are exact and therefore identical for every thread count.
void set_num_threads(int n);
int num_threads();

}  // namespace cochar

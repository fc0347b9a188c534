#include "cochar/multiplicity.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cochar {

namespace {

int capped_min(int a, int b) { return a < b ? a : b; }

bool strictly_decreasing(ExpKey k, int d) {
  for (int i = 0; i + 1 < d; ++i)
    if (key_get(k, i) <= key_get(k, i + 1)) return false;
  return true;
}

bool weakly_decreasing(ExpKey k, int d) {
  for (int i = 0; i + 1 < d; ++i)
    if (key_get(k, i) < key_get(k, i + 1)) return false;
  return true;
}

Partition partition_from_shifted(ExpKey k, int d) {
  std::vector<int> lam(d);
  for (int i = 0; i < d; ++i) lam[i] = key_get(k, i) - (d - 1 - i);
  return Partition(std::move(lam));
}

Series exact_copy(const Series& f) {
  Series r(f.nvars(), f.space(), kExactCap);
  for (const Term& t : f.terms()) r.add_term(t.key, t.coeff);
  r.normalize();
  return r;
}

// prod 1/(1-t_i) truncated at cap.
Series one_row_sum(int d, int cap) {
  Series r = Series::constant(1, d, VarSpace::t_space, cap);
  for (int i = 1; i <= d; ++i)
    r = r * expand_inverse_factor(key_set(0, i - 1, 1), 1, d,
                                  VarSpace::t_space, cap);
  return r;
}

int overflow_guard(const Series& f) {
  int d = f.nvars();
  if (f.degree() + d - 1 > kMaxExp)
    throw argument_error("series degree too large for extraction");
  return d;
}

}  // namespace

Rat MultiplicitySeries::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void MultiplicitySeries::add(const Partition& p, const Rat& c) {
  if (p.length() > dim_)
    throw dimension_error("partition has more parts than the dimension");
  if (p.size() > cap_) return;
  auto [it, fresh] = coeffs_.emplace(p, c);
  if (!fresh) it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

void MultiplicitySeries::set_cap(int cap) {
  if (cap < 0) throw argument_error("negative cap");
  cap_ = cap;
  std::erase_if(coeffs_,
                [&](const auto& kv) { return kv.first.size() > cap; });
}

MultiplicitySeries& MultiplicitySeries::operator+=(
    const MultiplicitySeries& o) {
  if (dim_ != o.dim_) throw dimension_error("dimension mismatch");
  set_cap(capped_min(cap_, o.cap_));
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

MultiplicitySeries& MultiplicitySeries::operator-=(
    const MultiplicitySeries& o) {
  if (dim_ != o.dim_) throw dimension_error("dimension mismatch");
  set_cap(capped_min(cap_, o.cap_));
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

MultiplicitySeries operator*(const Rat& c, MultiplicitySeries m) {
  if (c == 0) {
    m.coeffs_.clear();
    return m;
  }
  for (auto& [p, v] : m.coeffs_) v *= c;
  return m;
}

bool MultiplicitySeries::operator==(const MultiplicitySeries& o) const {
  return dim_ == o.dim_ && cap_ == o.cap_ && coeffs_ == o.coeffs_;
}

Series MultiplicitySeries::to_t() const {
  Series r(dim_, VarSpace::t_space, cap_);
  for (const auto& [p, c] : coeffs_) r.add_term(p.t_key(dim_), c);
  r.normalize();
  return r;
}

Series MultiplicitySeries::to_v() const {
  Series r(dim_, VarSpace::v_space, cap_);
  for (const auto& [p, c] : coeffs_) r.add_term(p.v_key(dim_), c);
  r.normalize();
  return r;
}

MultiplicitySeries MultiplicitySeries::from_t(const Series& s) {
  if (s.space() != VarSpace::t_space)
    throw argument_error("expected a t-space series");
  MultiplicitySeries m(s.nvars(), s.cap());
  for (const Term& t : s.terms())
    m.add(Partition::from_t_key(t.key, s.nvars()), t.coeff);
  return m;
}

MultiplicitySeries MultiplicitySeries::from_v(const Series& s) {
  if (s.space() != VarSpace::v_space)
    throw argument_error("expected a v-space series");
  MultiplicitySeries m(s.nvars(), s.cap());
  for (const Term& t : s.terms())
    m.add(Partition::from_v_key(t.key, s.nvars()), t.coeff);
  return m;
}

std::string MultiplicitySeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) out << "; ";
    out << "m(" << p.to_string() << ")=" << rat_to_string(c);
    first = false;
  }
  return out.str();
}

MultiplicitySeries extract(const Series& f, bool paranoid) {
  int d = f.is_zero() ? f.nvars() : overflow_guard(f);
  const Series& van = vandermonde(d);
  MultiplicitySeries m(d, f.cap());

  std::unordered_map<ExpKey, Rat> acc;
  for (const Term& tf : f.terms())
    for (const Term& tv : van.terms()) {
      ExpKey k = tf.key + tv.key;
      if (!paranoid && !strictly_decreasing(k, d)) continue;
      acc[k] += tf.coeff * tv.coeff;
    }

  if (paranoid) {
    // Antisymmetry of f * Vandermonde: coefficients vanish on repeated
    // exponents and change by sign under sorting; fails for non-symmetric f.
    for (const auto& [k, c] : acc) {
      if (c == 0) continue;
      std::vector<int> e = key_to_vector(k, d);
      std::vector<int> sorted = e;
      int sign = 1;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
          if (sorted[i] < sorted[j]) {
            std::swap(sorted[i], sorted[j]);
            sign = -sign;
          }
      bool repeated = false;
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) repeated = true;
      auto it = acc.find(key_from(sorted));
      Rat expected = it == acc.end() ? Rat(0) : it->second;
      if (repeated || c != (sign > 0 ? expected : Rat(-expected)))
        throw argument_error("series is not symmetric");
    }
  }

  for (const auto& [k, c] : acc) {
    if (c == 0 || !strictly_decreasing(k, d)) continue;
    m.add(partition_from_shifted(k, d), c);
  }
  return m;
}

bool verify_multiplicity(const Series& f, const MultiplicitySeries& h) {
  int d = f.nvars();
  if (h.dim() != d) throw dimension_error("dimension mismatch");
  if (!f.is_zero()) overflow_guard(f);
  int shift = d * (d - 1) / 2;
  int cap = capped_min(f.cap(), h.cap());
  int capv = cap >= kExactCap ? kExactCap : cap + shift;

  Series lhs = (exact_copy(f) * vandermonde(d)).truncated(capv);

  Series rhs(d, VarSpace::t_space, capv);
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  do {
    int sign = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    for (const auto& [lam, c] : h.coeffs()) {
      if (lam.size() > cap) continue;
      ExpKey k = 0;
      for (int i = 0; i < d; ++i)
        k = key_set(k, perm[i], lam.part(i) + (d - 1 - i));
      rhs.add_term(k, sign > 0 ? c : Rat(-c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  rhs.normalize();

  return lhs == rhs;
}

Series reconstruct(const MultiplicitySeries& m) {
  Series acc(m.dim(), VarSpace::t_space, m.cap());
  for (const auto& [lam, c] : m.coeffs())
    acc += c * schur_poly(lam, m.dim());
  return acc;
}

MultiplicitySeries young_derive(const MultiplicitySeries& m, int cap) {
  int d = m.dim();
  int c = capped_min(m.cap(), cap);
  if (c >= kExactCap)
    throw argument_error("young derive needs a finite cap");

  Series acc(d, VarSpace::t_space, c);
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    int sign = __builtin_popcount(mask) % 2 ? -1 : 1;
    for (const auto& [lam, coeff] : m.coeffs()) {
      std::vector<int> e(d), f(d);
      for (int i = 0; i < d; ++i) e[i] = lam.part(i);
      f[0] = e[0];
      for (int j = 1; j < d; ++j)
        f[j] = (mask >> (j - 1)) & 1 ? e[j - 1] + 1 : e[j];
      acc.add_term(key_from(f), sign > 0 ? coeff : Rat(-coeff));
    }
  }
  acc.normalize();

  Series r = acc * one_row_sum(d, c);
  for (const Term& t : r.terms())
    if (!weakly_decreasing(t.key, d))
      throw internal_error("young derive left the partition lattice");
  return MultiplicitySeries::from_t(r);
}

MultiplicitySeries young_derive(const MultiplicitySeries& m) {
  return young_derive(m, m.cap());
}

Series branch(const Series& mv) {
  if (mv.space() != VarSpace::v_space)
    throw argument_error("expected a v-space series");
  int d = mv.nvars();
  Series out(d, VarSpace::v_space, mv.cap());
  for (const Term& t : mv.terms()) {
    if (key_get(t.key, 0) >= kMaxExp)
      throw argument_error("exponent overflow in branching");
    out.add_term(t.key + 1, t.coeff);
    for (int i = 0; i + 1 < d; ++i)
      if (key_get(t.key, i) > 0) {
        if (key_get(t.key, i + 1) >= kMaxExp)
          throw argument_error("exponent overflow in branching");
        out.add_term(key_set(t.key, i, key_get(t.key, i) - 1) +
                         (ExpKey(1) << (8 * (i + 1))),
                     t.coeff);
      }
  }
  out.normalize();
  return out;
}

Series mult_e3_d3(const Series& mv) {
  if (mv.space() != VarSpace::v_space || mv.nvars() != 3)
    throw dimension_error("defined for 3 v-variables only");
  return mv * Series::variable(3, 3, VarSpace::v_space);
}

MultiplicitySeries mult_elementary(const MultiplicitySeries& m, int k) {
  if (k < 1) throw argument_error("column length must be positive");
  if (k > m.dim()) return MultiplicitySeries(m.dim(), m.cap());
  Series ek = schur_poly(Partition(std::vector<int>(k, 1)), m.dim());
  return extract(reconstruct(m) * ek);
}

}  // namespace cochar

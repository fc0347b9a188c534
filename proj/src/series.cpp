#include "cochar/series.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace cochar {

namespace {

int g_threads = 1;

int capped_min(int a, int b) { return a < b ? a : b; }

// Sum of packed exponent vectors; valid only when every byte sum stays
// below 256, which the callers guarantee via degree bounds.
ExpKey key_add(ExpKey a, ExpKey b) { return a + b; }

ExpKey key_add_checked(ExpKey a, ExpKey b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (key_get(a, i) + key_get(b, i) > kMaxExp)
      throw argument_error("exponent overflow in product");
  return a + b;
}

}  // namespace

void set_num_threads(int n) {
  if (n < 1) throw argument_error("thread count must be positive");
  g_threads = n;
}

int num_threads() { return g_threads; }

ExpKey key_from(std::span<const int> exps) {
  if (exps.size() > std::size_t(kMaxVars))
    throw dimension_error("more than " + std::to_string(kMaxVars) +
                          " variables");
  ExpKey k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExp)
      throw argument_error("exponent out of range: " +
                           std::to_string(exps[i]));
    k |= ExpKey(exps[i]) << (8 * i);
  }
  return k;
}

std::vector<int> key_to_vector(ExpKey k, int nvars) {
  std::vector<int> v(nvars);
  for (int i = 0; i < nvars; ++i) v[i] = key_get(k, i);
  return v;
}

int key_tdegree(ExpKey k, int nvars, VarSpace space) {
  int deg = 0;
  for (int i = 0; i < nvars; ++i)
    deg += key_get(k, i) * (space == VarSpace::v_space ? i + 1 : 1);
  return deg;
}

std::string key_to_string(ExpKey k, int nvars, VarSpace space) {
  const char* name = space == VarSpace::v_space ? "v" : "t";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < nvars; ++i) {
    int e = key_get(k, i);
    if (e == 0) continue;
    if (!first) out << "*";
    out << name << (i + 1);
    if (e > 1) out << "^" << e;
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

Series::Series(int nvars, VarSpace space, int cap)
    : nvars_(nvars), space_(space), cap_(cap) {
  if (nvars < 1 || nvars > kMaxVars)
    throw dimension_error("variable count out of range: " +
                          std::to_string(nvars));
  if (cap < 0) throw argument_error("negative truncation cap");
}

Series Series::zero(int nvars, VarSpace space, int cap) {
  return Series(nvars, space, cap);
}

Series Series::constant(const Rat& c, int nvars, VarSpace space, int cap) {
  Series s(nvars, space, cap);
  s.add_term(0, c);
  s.normalize();
  return s;
}

Series Series::monomial(const Rat& c, ExpKey k, int nvars, VarSpace space,
                        int cap) {
  Series s(nvars, space, cap);
  s.add_term(k, c);
  s.normalize();
  return s;
}

Series Series::variable(int i, int nvars, VarSpace space, int cap) {
  if (i < 1 || i > nvars)
    throw dimension_error("variable index out of range: " + std::to_string(i));
  return monomial(1, key_set(0, i - 1, 1), nvars, space, cap);
}

void Series::check_compatible(const Series& o) const {
  if (nvars_ != o.nvars_ || space_ != o.space_)
    throw dimension_error("operands live in different rings");
}

Rat Series::coeff(ExpKey k) const {
  ensure();
  int deg = key_tdegree(k, nvars_, space_);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), std::pair<int, ExpKey>(deg, k),
      [this](const Term& t, const std::pair<int, ExpKey>& target) {
        int td = key_tdegree(t.key, nvars_, space_);
        return td != target.first ? td < target.first : t.key < target.second;
      });
  if (it != terms_.end() && it->key == k) return it->coeff;
  return Rat(0);
}

int Series::degree() const {
  ensure();
  if (terms_.empty()) return -1;
  return key_tdegree(terms_.back().key, nvars_, space_);
}

Series Series::truncated(int cap) const {
  ensure();
  Series r(nvars_, space_, capped_min(cap_, cap));
  for (const Term& t : terms_) r.add_term(t.key, t.coeff);
  r.normalize();
  return r;
}

Series Series::embedded(int nvars) const {
  ensure();
  if (nvars < nvars_)
    throw dimension_error("embedding cannot drop variables");
  Series r(nvars, space_, cap_);
  r.terms_ = terms_;
  return r;
}

Series Series::operator-() const {
  ensure();
  Series r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Series& Series::operator+=(const Series& o) {
  ensure();
  o.ensure();
  check_compatible(o);
  cap_ = capped_min(cap_, o.cap_);
  for (const Term& t : o.terms_) add_term(t.key, t.coeff);
  normalize();
  return *this;
}

Series& Series::operator-=(const Series& o) {
  ensure();
  o.ensure();
  check_compatible(o);
  cap_ = capped_min(cap_, o.cap_);
  for (const Term& t : o.terms_) add_term(t.key, -t.coeff);
  normalize();
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.ensure();
  b.ensure();
  a.check_compatible(b);
  int cap = capped_min(a.cap_, b.cap_);
  Series r(a.nvars_, a.space_, cap);
  if (a.terms_.empty() || b.terms_.empty()) return r;

  // Group both operands by t-degree so whole blocks of pairs can be skipped
  // once the degree sum exceeds the cap.
  auto bucket = [&](const Series& s) {
    std::vector<std::pair<int, std::vector<const Term*>>> buckets;
    for (const Term& t : s.terms_) {
      int deg = key_tdegree(t.key, s.nvars_, s.space_);
      if (buckets.empty() || buckets.back().first != deg)
        buckets.push_back({deg, {}});
      buckets.back().second.push_back(&t);
    }
    return buckets;
  };
  auto ab = bucket(a);
  auto bb = bucket(b);

  bool checked = cap == kExactCap;
  auto run = [&](std::size_t lo, std::size_t hi,
                 std::unordered_map<ExpKey, Rat>& acc) {
    for (std::size_t ia = lo; ia < hi; ++ia) {
      for (const auto& [degb, termsb] : bb) {
        if (!checked && ab[ia].first + degb > cap) break;
        for (const Term* ta : ab[ia].second)
          for (const Term* tb : termsb) {
            ExpKey k = checked
                           ? key_add_checked(ta->key, tb->key, a.nvars_)
                           : key_add(ta->key, tb->key);
            acc[k] += ta->coeff * tb->coeff;
          }
      }
    }
  };

  int nt = capped_min(g_threads, int(ab.size()));
  std::vector<std::unordered_map<ExpKey, Rat>> maps(std::max(nt, 1));
  if (nt <= 1) {
    run(0, ab.size(), maps[0]);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (ab.size() + nt - 1) / nt;
    for (int w = 0; w < nt; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(ab.size(), lo + chunk);
      pool.emplace_back(run, lo, hi, std::ref(maps[w]));
    }
    for (auto& th : pool) th.join();
  }

  for (auto& m : maps)
    for (auto& [k, c] : m) r.add_term(k, c);
  r.normalize();
  return r;
}

Series operator*(const Rat& c, Series s) {
  s.ensure();
  if (c == 0) {
    s.terms_.clear();
    return s;
  }
  for (Term& t : s.terms_) t.coeff *= c;
  return s;
}

Series Series::pow(int n) const {
  ensure();
  if (n < 0) throw argument_error("negative power of a series");
  Series r = Series::constant(1, nvars_, space_, cap_);
  if (n == 0) return r;
  Series base = *this;
  while (true) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n == 0) break;
    base = base * base;
  }
  return r;
}

bool Series::operator==(const Series& o) const {
  ensure();
  o.ensure();
  if (nvars_ != o.nvars_ || space_ != o.space_ || cap_ != o.cap_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].key != o.terms_[i].key ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

void Series::add_term(ExpKey k, const Rat& c) {
  if (c == 0) return;
  if (key_tdegree(k, nvars_, space_) > cap_) return;
  terms_.push_back({k, c});
  dirty_ = true;
}

void Series::normalize() {
  auto less = [this](const Term& x, const Term& y) {
    int dx = key_tdegree(x.key, nvars_, space_);
    int dy = key_tdegree(y.key, nvars_, space_);
    return dx != dy ? dx < dy : x.key < y.key;
  };
  std::sort(terms_.begin(), terms_.end(), less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    ExpKey k = terms_[i].key;
    Rat c = std::move(terms_[i].coeff);
    for (++i; i < terms_.size() && terms_[i].key == k; ++i)
      c += terms_[i].coeff;
    if (c != 0) terms_[out++] = {k, std::move(c)};
  }
  terms_.resize(out);
  dirty_ = false;
}

std::string Series::to_string() const {
  ensure();
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.key == 0) {
      out << rat_to_string(c);
    } else {
      if (c != 1) out << rat_to_string(c) << "*";
      out << key_to_string(t.key, nvars_, space_);
    }
    first = false;
  }
  return out.str();
}

Series expand_inverse_factor(ExpKey mono, int power, int nvars, VarSpace space,
                             int cap) {
  if (power < 0) throw argument_error("negative denominator power");
  if (cap >= kExactCap)
    throw argument_error("inverse factor expansion needs a finite cap");
  Series r(nvars, space, cap);
  if (power == 0) return Series::constant(1, nvars, space, cap);
  int base_deg = key_tdegree(mono, nvars, space);
  if (base_deg <= 0)
    throw divergence_error("denominator base with zero t-degree");
  for (int j = 0; j * base_deg <= cap; ++j) {
    ExpKey k = 0;
    for (int i = 0; i < nvars; ++i) {
      long e = long(key_get(mono, i)) * j;
      if (e > kMaxExp) throw argument_error("exponent overflow in expansion");
      k = key_set(k, i, int(e));
    }
    r.add_term(k, Rat(binomial(j + power - 1, power - 1)));
  }
  r.normalize();
  return r;
}

RationalExpr::RationalExpr(int nvars, VarSpace space)
    : nvars_(nvars), space_(space) {
  if (nvars < 1 || nvars > kMaxVars)
    throw dimension_error("variable count out of range: " +
                          std::to_string(nvars));
}

void RationalExpr::add(RatTerm term) {
  if (term.num.nvars() != nvars_ || term.num.space() != space_)
    throw dimension_error("numerator ring mismatch");
  if (!term.num.exact())
    throw argument_error("numerator must be an exact polynomial");
  for (const DenFactor& f : term.den) {
    if (f.power < 1) throw argument_error("denominator power must be >= 1");
    if (key_tdegree(f.mono, nvars_, space_) <= 0)
      throw divergence_error("denominator base with zero t-degree");
  }
  if (term.num.is_zero()) return;
  terms_.push_back(std::move(term));
}

RationalExpr RationalExpr::restricted(int d) const {
  if (d < 1 || d > nvars_)
    throw dimension_error("restriction target out of range");
  auto uses_high_var = [&](ExpKey k) {
    for (int i = d; i < nvars_; ++i)
      if (key_get(k, i) != 0) return true;
    return false;
  };
  RationalExpr r(d, space_);
  for (const RatTerm& t : terms_) {
    Series num(d, space_, kExactCap);
    for (const Term& tm : t.num.terms())
      if (!uses_high_var(tm.key)) num.add_term(tm.key, tm.coeff);
    num.normalize();
    if (num.is_zero()) continue;
    RatTerm out{std::move(num), {}};
    for (const DenFactor& f : t.den)
      if (!uses_high_var(f.mono)) out.den.push_back(f);
    r.terms_.push_back(std::move(out));
  }
  return r;
}

Series RationalExpr::expand(int d, int cap) const {
  if (d < 1 || d > kMaxVars)
    throw dimension_error("variable count out of range");
  const RationalExpr* self = this;
  RationalExpr restricted_copy(1, space_);
  if (d < nvars_) {
    if (space_ != VarSpace::v_space)
      throw dimension_error("cannot expand in fewer variables");
    restricted_copy = restricted(d);
    self = &restricted_copy;
  }
  Series acc(d, space_, cap);
  for (const RatTerm& t : self->terms_) {
    Series part = t.num.embedded(d).truncated(cap);
    for (const DenFactor& f : t.den)
      part = part * expand_inverse_factor(f.mono, f.power, d, space_, cap);
    acc += part;
  }
  return acc;
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  if (a.space_ != b.space_)
    throw dimension_error("operands live in different spaces");
  int nvars = std::max(a.nvars_, b.nvars_);
  RationalExpr r(nvars, a.space_);
  for (const RatTerm& ta : a.terms_)
    for (const RatTerm& tb : b.terms_) {
      RatTerm out{ta.num.embedded(nvars) * tb.num.embedded(nvars), ta.den};
      for (const DenFactor& f : tb.den) {
        auto it = std::find_if(out.den.begin(), out.den.end(),
                               [&](const DenFactor& g) {
                                 return g.mono == f.mono;
                               });
        if (it != out.den.end())
          it->power += f.power;
        else
          out.den.push_back(f);
      }
      r.add(std::move(out));
    }
  return r;
}

}  // namespace cochar

#include "cochar/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cochar/errors.hpp"
#include "cochar/multiplicity.hpp"
#include "cochar/schur.hpp"
#include "cochar/tideal.hpp"

namespace cochar {

namespace {

using nlohmann::json;

int fpow_of(const std::string& id) {
  if (id == "f") return 1;
  if (id == "f2") return 2;
  if (id == "f3_V4") return 3;
  return 0;
}

std::vector<int> parse_exps(const json& j, int nvars,
                            const std::string& where) {
  if (!j.is_array() || int(j.size()) != nvars)
    throw catalog_error(where + ": exponent list must have " +
                        std::to_string(nvars) + " entries");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0)
      throw catalog_error(where + ": exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return e;
}

Int parse_int(const json& j, const std::string& where) {
  if (!j.is_string()) throw catalog_error(where + ": expected decimal string");
  try {
    return int_from_string(j.get<std::string>());
  } catch (const argument_error& e) {
    throw catalog_error(where + ": " + e.what());
  }
}

ClosedFormEntry parse_entry(const json& j) {
  ClosedFormEntry e;
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
    throw catalog_error("entry without id");
  e.id = j["id"].get<std::string>();
  const std::string where = "entry " + e.id;
  if (!j.contains("nvars") || !j["nvars"].is_number_integer())
    throw catalog_error(where + ": missing nvars");
  e.nvars = j["nvars"].get<int>();
  if (e.nvars < 1 || e.nvars > kMaxVars)
    throw catalog_error(where + ": nvars out of range");
  if (j.contains("p") && !j["p"].is_null()) {
    if (!j.contains("q") || j["q"].is_null())
      throw catalog_error(where + ": p without q");
    e.pq = {j["p"].get<int>(), j["q"].get<int>()};
  }
  e.fpow = fpow_of(e.id);
  if (!e.pq && e.fpow == 0)
    throw catalog_error(where + ": neither a (p,q) pair nor an f-power");

  e.expr = RationalExpr(e.nvars, VarSpace::v_space);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw catalog_error(where + ": missing terms list");
  for (const auto& jt : j["terms"]) {
    RatTerm term{Series(e.nvars, VarSpace::v_space, kExactCap), {}};
    if (!jt.contains("num") || !jt["num"].is_array() || jt["num"].empty())
      throw catalog_error(where + ": term without numerator");
    for (const auto& jm : jt["num"]) {
      if (!jm.is_array() || jm.size() != 2)
        throw catalog_error(where + ": numerator monomial must be a pair");
      Int c = parse_int(jm[0], where);
      term.num.add_term(key_from(parse_exps(jm[1], e.nvars, where)), Rat(c));
    }
    term.num.normalize();
    if (jt.contains("den")) {
      for (const auto& jd : jt["den"]) {
        if (!jd.contains("mono") || !jd.contains("pow") ||
            !jd["pow"].is_number_integer())
          throw catalog_error(where + ": malformed denominator factor");
        term.den.push_back({key_from(parse_exps(jd["mono"], e.nvars, where)),
                            jd["pow"].get<int>()});
      }
    }
    try {
      e.expr.add(std::move(term));
    } catch (const std::exception& ex) {
      throw catalog_error(where + ": " + ex.what());
    }
  }

  if (j.contains("leading")) {
    if (!j["leading"].is_array())
      throw catalog_error(where + ": leading must be a list");
    for (const auto& jl : j["leading"]) {
      LeadingForm lf;
      lf.id = e.id;
      lf.nvars = e.nvars;
      Int num = parse_int(jl.at("coeffNum"), where);
      Int den = parse_int(jl.at("coeffDen"), where);
      if (den == 0) throw catalog_error(where + ": zero scale denominator");
      lf.scale = Rat(num, den);
      lf.scale.canonicalize();
      lf.error_order = jl.at("errorOrder").get<int>();
      lf.constraint =
          jl.contains("constraint") ? jl["constraint"].get<std::string>() : "";
      for (const auto& jm : jl.at("monomials")) {
        if (!jm.is_array() || jm.size() != 2)
          throw catalog_error(where + ": leading monomial must be a pair");
        std::vector<int> exps = parse_exps(jm[1], e.nvars, where);
        int deg = 0;
        for (int x : exps) deg += x;
        if (deg != lf.error_order + 1)
          throw catalog_error(where +
                              ": leading form is not homogeneous of degree "
                              "errorOrder + 1");
        lf.monomials.push_back({parse_int(jm[0], where), std::move(exps)});
      }
      e.leading.push_back(std::move(lf));
    }
  }
  return e;
}

// 1-variable polynomials with rational coefficients, index = power.
using Poly1 = std::vector<Rat>;

Poly1 p1_mul(const Poly1& a, const Poly1& b) {
  Poly1 r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly1 lagrange_basis(const std::vector<int>& xs, std::size_t r) {
  Poly1 p{Rat(1)};
  Rat denom(1);
  for (std::size_t s = 0; s < xs.size(); ++s) {
    if (s == r) continue;
    p = p1_mul(p, Poly1{Rat(-xs[s]), Rat(1)});
    denom *= Rat(xs[r] - xs[s]);
  }
  for (Rat& c : p) c /= denom;
  return p;
}

// Exact bivariate interpolation on the tensor grid xs x ys.
NPoly interpolate_2var(const std::vector<int>& xs, const std::vector<int>& ys,
                       const std::vector<std::vector<Rat>>& vals) {
  std::vector<Poly1> lx, ly;
  for (std::size_t r = 0; r < xs.size(); ++r)
    lx.push_back(lagrange_basis(xs, r));
  for (std::size_t s = 0; s < ys.size(); ++s)
    ly.push_back(lagrange_basis(ys, s));
  NPoly p(2);
  for (std::size_t r = 0; r < xs.size(); ++r)
    for (std::size_t s = 0; s < ys.size(); ++s) {
      if (vals[r][s] == 0) continue;
      for (std::size_t i = 0; i < lx[r].size(); ++i)
        for (std::size_t j = 0; j < ly[s].size(); ++j)
          p.add({int(i), int(j)}, vals[r][s] * lx[r][i] * ly[s][j]);
    }
  return p;
}

// Single-coefficient extraction from num / prod (1 - mono_i)^pow_i by
// convolving one denominator factor at a time, memoized on the remainder.
struct FactorConvolver {
  const std::vector<DenFactor>& den;
  int nvars;
  std::map<std::pair<std::size_t, std::vector<int>>, Rat> memo;

  Rat coeff(std::size_t idx, const std::vector<int>& rem) {
    if (idx == den.size()) {
      for (int x : rem)
        if (x != 0) return Rat(0);
      return Rat(1);
    }
    auto key = std::make_pair(idx, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat total(0);
    std::vector<int> mono = key_to_vector(den[idx].mono, nvars);
    std::vector<int> next = rem;
    for (int j = 0;; ++j) {
      if (j > 0) {
        bool ok = true;
        for (int i = 0; i < nvars; ++i) {
          next[i] -= mono[i];
          if (next[i] < 0) ok = false;
        }
        if (!ok) break;
      }
      total += Rat(binomial(j + den[idx].power - 1, den[idx].power - 1)) *
               coeff(idx + 1, next);
      bool constant = true;
      for (int x : mono)
        if (x != 0) constant = false;
      if (constant) break;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

void NPoly::add(std::vector<int> exps, const Rat& c) {
  if (int(exps.size()) != nvars_)
    throw dimension_error("exponent list length mismatch");
  for (int x : exps)
    if (x < 0) throw argument_error("negative exponent");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(exps), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int NPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

NPoly NPoly::top_homogeneous() const {
  NPoly p(nvars_);
  int top = total_degree();
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (d == top) p.add(e, c);
  }
  return p;
}

Rat NPoly::eval(std::span<const int> point) const {
  if (int(point.size()) != nvars_)
    throw dimension_error("evaluation point length mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i)
      for (int r = 0; r < e[i]; ++r) m *= point[i];
    total += m;
  }
  return total;
}

bool NPoly::operator==(const NPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

NPoly NPoly::operator-(const NPoly& o) const {
  if (nvars_ != o.nvars_) throw dimension_error("variable count mismatch");
  NPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

std::string NPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Rat>> sorted(terms_.begin(),
                                                       terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da != db ? da > db : a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rat v = c;
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "n" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << rat_to_string(v);
    else if (v == 1)
      out << mono;
    else
      out << rat_to_string(v) << "*" << mono;
    first = false;
  }
  return out.str();
}

NPoly LeadingForm::poly() const {
  NPoly p(nvars);
  for (const auto& [c, e] : monomials) p.add(e, scale * Rat(c));
  return p;
}

bool LeadingForm::admits(std::span<const int> nvec) const {
  if (int(nvec.size()) != nvars)
    throw dimension_error("sample point length mismatch");
  if (constraint.empty()) return true;
  int rows = -1, last = -1;
  std::vector<std::pair<int, int>> geq;  // nvec[a] >= nvec[b]
  std::stringstream ss(constraint);
  std::string clause;
  while (std::getline(ss, clause, ',')) {
    int a, b;
    if (std::sscanf(clause.c_str(), "n%d>=n%d", &a, &b) == 2) {
      if (a < 1 || a > nvars || b < 1 || b > nvars)
        throw argument_error("constraint index out of range: " + clause);
      geq.push_back({a - 1, b - 1});
    } else if (std::sscanf(clause.c_str(), "rows=%d", &a) == 1) {
      if (a < 1 || a > nvars)
        throw argument_error("constraint index out of range: " + clause);
      rows = a;
    } else if (std::sscanf(clause.c_str(), "last=%d", &a) == 1) {
      last = a;
    } else {
      throw argument_error("unsupported constraint clause: " + clause);
    }
  }
  if (last >= 0 && rows < 0)
    throw argument_error("last= requires a rows= clause");
  for (auto [a, b] : geq)
    if (nvec[a] < nvec[b]) return false;
  if (rows >= 0) {
    if (nvec[rows - 1] <= 0) return false;
    for (int i = rows; i < nvars; ++i)
      if (nvec[i] != 0) return false;
    if (last >= 0 && nvec[rows - 1] != last) return false;
  }
  return true;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw catalog_error("cannot open catalog file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::exception& e) {
    throw catalog_error(std::string("catalog parse failure: ") + e.what());
  }
  if (!root.is_array()) throw catalog_error("catalog must be a list");

  Catalog cat;
  cat.checksum_ = fnv1a64_file(path);
  for (const auto& j : root) {
    ClosedFormEntry e;
    try {
      e = parse_entry(j);
    } catch (const json::exception& ex) {
      std::string id =
          j.is_object() && j.contains("id") && j["id"].is_string()
              ? j["id"].get<std::string>()
              : "<unnamed>";
      throw catalog_error("entry " + id + ": " + ex.what());
    }
    if (cat.entries_.count(e.id))
      throw catalog_error("duplicate entry id: " + e.id);
    cat.entries_.emplace(e.id, std::move(e));
  }

  auto need = [&](const std::string& id, std::size_t nterms,
                  std::size_t nleading) {
    auto it = cat.entries_.find(id);
    if (it == cat.entries_.end())
      throw catalog_error("catalog incomplete: missing entry " + id);
    if (nterms > 0 && it->second.expr.terms().size() != nterms)
      throw catalog_error("catalog incomplete: entry " + id + " expects " +
                          std::to_string(nterms) + " terms");
    if (it->second.leading.size() < nleading)
      throw catalog_error("catalog incomplete: entry " + id + " needs " +
                          std::to_string(nleading) + " leading forms");
  };
  need("f", 1, 0);
  need("f2", 1, 0);
  need("f3_V4", 1, 0);
  need("R11_Vd", 11, 3);
  need("R02_2var", 1, 1);
  need("R02_3var", 23, 1);
  need("R03_2var", 38, 1);
  need("R04_2var", 0, 1);
  return cat;
}

const ClosedFormEntry& Catalog::entry(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw catalog_error("unknown entry id: " + id);
  return it->second;
}

bool Catalog::has_entry(const std::string& id) const {
  return entries_.count(id) > 0;
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, e] : entries_) out.push_back(id);
  return out;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw catalog_error("cannot open catalog file: " + path);
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

CompareReport compare_entry(const Catalog& cat, const std::string& id, int d,
                            int cap) {
  const ClosedFormEntry& entry = cat.entry(id);
  if (!entry.has_expr())
    throw catalog_error("entry " + id + " has no closed form to compare");
  if (d < 1 || d > entry.nvars)
    throw dimension_error("entry " + id + " is declared for at most " +
                          std::to_string(entry.nvars) + " variables");
  if (cap < 0 || cap >= kExactCap) throw argument_error("bad cap");

  Series lhs = entry.expr.expand(d, cap);

  MultiplicitySeries m(1, 0);
  if (entry.fpow > 0)
    m = extract(sum_snn(d, cap).pow(entry.fpow));
  else
    m = extract(hilbert_rpq(entry.pq->first, entry.pq->second, d, cap));
  Series rhs = m.to_v();

  CompareReport report;
  report.d = d;
  report.cap = cap;
  std::map<Partition, std::pair<Rat, Rat>> joined;
  for (const Term& t : lhs.terms())
    joined[Partition::from_v_key(t.key, d)].first = t.coeff;
  for (const Term& t : rhs.terms())
    joined[Partition::from_v_key(t.key, d)].second = t.coeff;
  for (const auto& [lam, pair] : joined)
    if (pair.first != pair.second) {
      report.first_mismatch = {lam, pair.first, pair.second};
      return report;
    }
  report.equal = true;
  return report;
}

Rat coeff_at(const ClosedFormEntry& entry, std::span<const int> nvec) {
  if (int(nvec.size()) != entry.nvars)
    throw dimension_error("coefficient index length mismatch");
  for (int x : nvec)
    if (x < 0) throw argument_error("negative exponent");
  Rat total(0);
  for (const RatTerm& t : entry.expr.terms()) {
    FactorConvolver conv{t.den, entry.nvars, {}};
    for (const Term& tm : t.num.terms()) {
      std::vector<int> rem(nvec.begin(), nvec.end());
      bool ok = true;
      for (int i = 0; i < entry.nvars; ++i) {
        rem[i] -= key_get(tm.key, i);
        if (rem[i] < 0) ok = false;
      }
      if (ok) total += tm.coeff * conv.coeff(0, rem);
    }
  }
  return total;
}

NPoly leading_form_2var(const ClosedFormEntry& entry) {
  if (entry.nvars != 2)
    throw argument_error("entry " + entry.id + " is not in 2 variables");
  ExpKey v1 = key_set(0, 0, 1), v2 = key_set(0, 1, 1);
  int a = 0, b = 0;
  for (const RatTerm& t : entry.expr.terms()) {
    int ta = 0, tb = 0;
    for (const DenFactor& f : t.den) {
      if (f.mono == v1)
        ta += f.power;
      else if (f.mono == v2)
        tb += f.power;
      else
        throw argument_error("entry " + entry.id +
                             " has a mixed-monomial denominator");
    }
    a = std::max(a, ta);
    b = std::max(b, tb);
  }
  if (a == 0 || b == 0)
    throw argument_error("entry " + entry.id +
                         " has no pole in one of the variables");

  // Combined numerator over the common denominator (1-v1)^a (1-v2)^b.
  Series one_minus_v1 =
      Series::constant(1, 2, VarSpace::v_space) -
      Series::variable(1, 2, VarSpace::v_space);
  Series one_minus_v2 =
      Series::constant(1, 2, VarSpace::v_space) -
      Series::variable(2, 2, VarSpace::v_space);
  Series num = Series::zero(2, VarSpace::v_space);
  for (const RatTerm& t : entry.expr.terms()) {
    int ta = 0, tb = 0;
    for (const DenFactor& f : t.den) {
      if (f.mono == v1) ta += f.power;
      if (f.mono == v2) tb += f.power;
    }
    num += t.num * one_minus_v1.pow(a - ta) * one_minus_v2.pow(b - tb);
  }
  int deg1 = 0, deg2 = 0;
  for (const Term& t : num.terms()) {
    deg1 = std::max(deg1, key_get(t.key, 0));
    deg2 = std::max(deg2, key_get(t.key, 1));
  }

  std::vector<int> xs, ys;
  for (int r = 1; r <= a; ++r) xs.push_back(deg1 + r);
  for (int s = 1; s <= b; ++s) ys.push_back(deg2 + s);
  std::vector<std::vector<Rat>> vals(xs.size(), std::vector<Rat>(ys.size()));
  for (std::size_t r = 0; r < xs.size(); ++r)
    for (std::size_t s = 0; s < ys.size(); ++s) {
      std::vector<int> point{xs[r], ys[s]};
      vals[r][s] = coeff_at(entry, point);
    }
  NPoly p = interpolate_2var(xs, ys, vals);

  std::vector<int> probe{deg1 + a + 1, deg2 + b + 1};
  if (p.eval(probe) != coeff_at(entry, probe))
    throw internal_error("interpolated polynomial fails beyond the grid");
  return p.top_homogeneous();
}

NPoly leading_form_pipeline_2var(int p, int q, const InterpWindow& window) {
  if (window.deg1 < 0 || window.deg2 < 0 || window.n1_lo < 0 ||
      window.n2_lo < 0)
    throw argument_error("bad interpolation window");
  int nx = window.n1_hi - window.n1_lo + 1;
  int ny = window.n2_hi - window.n2_lo + 1;
  if (nx < window.deg1 + 1 || ny < window.deg2 + 1)
    throw window_error("window smaller than the declared bidegree");
  if (nx * ny == (window.deg1 + 1) * (window.deg2 + 1))
    throw window_error(
        "window leaves no held-out points; enlarge it beyond the (deg1+1) x "
        "(deg2+1) fit grid so the fit can be validated");

  int cap = window.n1_hi + 2 * window.n2_hi;
  MultiplicitySeries m = extract(hilbert_rpq(p, q, 2, cap));
  auto value = [&](int n1, int n2) {
    return m.coeff(Partition{n1 + n2, n2});
  };

  std::vector<int> xs, ys;
  for (int i = 0; i <= window.deg1; ++i) xs.push_back(window.n1_lo + i);
  for (int j = 0; j <= window.deg2; ++j) ys.push_back(window.n2_lo + j);
  std::vector<std::vector<Rat>> vals(xs.size(), std::vector<Rat>(ys.size()));
  for (std::size_t r = 0; r < xs.size(); ++r)
    for (std::size_t s = 0; s < ys.size(); ++s)
      vals[r][s] = value(xs[r], ys[s]);
  NPoly fit = interpolate_2var(xs, ys, vals);

  for (int n1 = window.n1_lo; n1 <= window.n1_hi; ++n1)
    for (int n2 = window.n2_lo; n2 <= window.n2_hi; ++n2) {
      if (n1 - window.n1_lo <= window.deg1 && n2 - window.n2_lo <= window.deg2)
        continue;
      std::vector<int> point{n1, n2};
      if (fit.eval(point) != value(n1, n2))
        throw window_error("held-out point not predicted; enlarge the window");
    }
  return fit.top_homogeneous();
}

RatioReport asym_ratio_check(const ClosedFormEntry& entry,
                             const LeadingForm& lf,
                             const std::vector<std::vector<int>>& points,
                             const Rat& tol) {
  if (lf.nvars != entry.nvars)
    throw dimension_error("leading form and entry variable counts differ");
  if (points.empty()) throw argument_error("no sample points");
  NPoly form = lf.poly();
  RatioReport report;
  Rat prev_gap(-1);
  report.pass = true;
  for (const auto& point : points) {
    if (!lf.admits(point))
      throw argument_error("sample point violates the constraint");
    RatioSample s;
    s.nvec = point;
    s.exact = coeff_at(entry, point);
    s.predicted = form.eval(point);
    if (s.predicted == 0) {
      report.pass = false;
      report.samples.push_back(std::move(s));
      continue;
    }
    s.ratio = s.exact / s.predicted;
    Rat gap = abs(Rat(1) - s.ratio);
    if (prev_gap >= 0 && gap > prev_gap) report.pass = false;
    prev_gap = gap;
    report.samples.push_back(std::move(s));
  }
  if (prev_gap < 0 || prev_gap > tol) report.pass = false;
  return report;
}

}  // namespace cochar

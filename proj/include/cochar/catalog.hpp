#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cochar/partition.hpp"
#include "cochar/series.hpp"

namespace cochar {

// Polynomial in the difference coordinates n_1..n_k with exact rational
// coefficients; used for multiplicity polynomials and their leading forms.
class NPoly {
 public:
  NPoly() = default;
  explicit NPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  void add(std::vector<int> exps, const Rat& c);
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  NPoly top_homogeneous() const;
  Rat eval(std::span<const int> point) const;
  bool operator==(const NPoly& o) const;
  NPoly operator-(const NPoly& o) const;
  std::string to_string() const;  // e.g. "1/720*n1^3*n2^4 + ..."

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

// Asymptotic leading term of a multiplicity formula: scale * sum of integer
// monomials, homogeneous of degree error_order + 1, valid on the region the
// constraint describes ("", "n3>=n1", "rows=4", "rows=6,last=1").
struct LeadingForm {
  std::string id;
  int nvars = 0;
  Rat scale;
  std::vector<std::pair<Int, std::vector<int>>> monomials;
  int error_order = 0;
  std::string constraint;

  NPoly poly() const;
  bool admits(std::span<const int> nvec) const;  // constraint check
};

// One named closed form: a rational expression in v-variables, keyed either
// to an algebra R_{p,q} or to a power of f = sum S_(n,n).
struct ClosedFormEntry {
  std::string id;
  std::optional<std::pair<int, int>> pq;
  int fpow = 0;  // 1, 2, 3 for the f-power entries, else 0
  int nvars = 0;
  RationalExpr expr{1, VarSpace::v_space};
  std::vector<LeadingForm> leading;

  bool has_expr() const { return !expr.terms().empty(); }
};

class Catalog {
 public:
  // Parses and validates the catalog file; throws catalog_error with the
  // offending entry id on malformed input or a missing mandatory entry.
  static Catalog load(const std::string& path);

  const ClosedFormEntry& entry(const std::string& id) const;
  bool has_entry(const std::string& id) const;
  std::vector<std::string> ids() const;
  std::uint64_t checksum() const { return checksum_; }

 private:
  std::map<std::string, ClosedFormEntry> entries_;
  std::uint64_t checksum_ = 0;
};

// FNV-1a 64 over the raw file bytes; the catalog is pinned by this value.
std::uint64_t fnv1a64_file(const std::string& path);

struct CompareReport {
  bool equal = false;
  // Smallest |lambda| (then decreasing-lex) disagreement.
  std::optional<std::tuple<Partition, Rat, Rat>> first_mismatch;  // (lam, want, got)
  int d = 0;
  int cap = 0;
};

// Exact comparison of a catalog entry against the pipeline: the entry
// expanded with v_j = 0 for j > d versus the extracted multiplicity series
// of hilbert_rpq (or of the matching power of sum S_(n,n)). Requires
// d <= entry.nvars.
CompareReport compare_entry(const Catalog& cat, const std::string& id, int d,
                            int cap);

// Exact coefficient of v_1^{n_1}...v_k^{n_k} by per-factor convolution; no
// full expansion.
Rat coeff_at(const ClosedFormEntry& entry, std::span<const int> nvec);

// For a 2-variable entry whose denominators are all
// (1-v_1)^a (1-v_2)^b: combines the terms over the common denominator,
// interpolates the multiplicity polynomial beyond the numerator degrees and
// returns its top homogeneous component.
NPoly leading_form_2var(const ClosedFormEntry& entry);

struct InterpWindow {
  int n1_lo, n1_hi;  // inclusive
  int n2_lo, n2_hi;
  int deg1, deg2;    // declared bidegree bound of the multiplicity polynomial
};

// Same recovery from pipeline data: extracts hilbert_rpq(p, q, 2, cap) with
// cap covering the window, interpolates on a (deg1+1) x (deg2+1) subgrid and
// re-predicts every remaining window point; throws window_error when the
// held-out check fails or the window has no held-out points.
NPoly leading_form_pipeline_2var(int p, int q, const InterpWindow& window);

struct RatioSample {
  std::vector<int> nvec;
  Rat exact;
  Rat predicted;
  Rat ratio;
};

struct RatioReport {
  std::vector<RatioSample> samples;
  bool pass = false;
};

// Compares exact coefficients of the entry against the leading form on the
// sample points: |1 - ratio| must shrink monotonically and end within tol.
// Points violating the form's constraint are rejected (argument_error).
RatioReport asym_ratio_check(const ClosedFormEntry& entry,
                             const LeadingForm& lf,
                             const std::vector<std::vector<int>>& points,
                             const Rat& tol = Rat(1, 4));

}  // namespace cochar

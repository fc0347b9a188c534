#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cochar/rational.hpp"
#include "cochar/series.hpp"

namespace cochar {

// Integer partition: weakly decreasing positive parts, trailing zeros never
// stored. The empty partition is a first-class value.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int size() const;                 // |lambda|
  int length() const { return int(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;            // 0-based, 0 beyond the length

  Partition conjugate() const;
  // Degree of the irreducible S_n-character chi_lambda, by the hook length
  // formula.
  Int hook_dimension() const;

  // lambda as a t-space exponent vector (lambda_1,...,lambda_d); throws
  // dimension_error if lambda has more than d parts.
  ExpKey t_key(int d) const;
  // Difference coordinates n_i = lambda_i - lambda_{i+1}, n_d = lambda_d.
  ExpKey v_key(int d) const;
  static Partition from_t_key(ExpKey k, int d);
  static Partition from_v_key(ExpKey k, int d);

  // Canonical order: by size, then decreasing-lex within a size, so (3)
  // precedes (2,1). Fixes deterministic iteration and table output.
  bool operator<(const Partition& o) const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  std::string to_string() const;  // "3,1"; "0" for the empty partition

 private:
  std::vector<int> parts_;
};

// All partitions of n into at most max_parts parts, in decreasing
// lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int max_parts);

}  // namespace cochar

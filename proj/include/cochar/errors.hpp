#pragma once

#include <stdexcept>
#include <string>

namespace cochar {

// Operand variable counts or spaces do not match.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Expansion of a rational expression would not converge degreewise
// (a denominator factor base with t-degree zero).
struct divergence_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Catalog file problems: unparsable entries, missing mandatory entries,
// unknown ids.
struct catalog_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolation window does not determine (or fails to validate) the
// multiplicity polynomial.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant that should hold by construction failed; indicates a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cochar

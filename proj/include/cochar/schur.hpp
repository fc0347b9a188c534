#pragma once

#include <map>

#include "cochar/partition.hpp"
#include "cochar/series.hpp"

namespace cochar {

// The Schur polynomial S_lambda(t_1..t_d), computed by the branching
// recursion over Gelfand-Tsetlin patterns; equals the bialternant
// V(lambda+delta)/V(delta). Zero when lambda has more than d parts.
Series schur_poly(const Partition& lambda, int d);

// Vandermonde product prod_{i<j} (t_i - t_j), expanded (d! terms, cached).
const Series& vandermonde(int d);

// f = sum_{n>=0} S_(n,n)(T_d), truncated at total degree cap.
Series sum_snn(int d, int cap);

// prod_{i<j} 1/(1-t_i t_j) = sum of S_nu over nu with every row repeated an
// even number of times.
Series even_row_series(int d, int cap);

// Littlewood-Richardson coefficients of S_lambda * S_mu, via multiplication
// and extraction. Requires d >= length(lambda) + length(mu) so that no
// component is lost.
std::map<Partition, Int> lr_coefficients(const Partition& lambda,
                                         const Partition& mu, int d);

}  // namespace cochar

#pragma once

#include "cochar/multiplicity.hpp"
#include "cochar/series.hpp"

namespace cochar {

// Hilbert series of the free algebra K<X_d>: 1/(1 - (t_1+...+t_d)).
Series hilbert_free(int d, int cap);

// Hilbert series of the polynomial algebra K[X_d]: prod 1/(1-t_i).
Series hilbert_polyalg(int d, int cap);

// Hilbert series of F_d(R) for T(R) = T(R_1)T(R_2):
//   H = H_1 + H_2 + (t_1+...+t_d-1) H_1 H_2.
Series hilbert_product2(const Series& h1, const Series& h2);

// T(R) = T(R_1)^n: H = sum_k C(n,k) (t_1+...+t_d-1)^{k-1} H_1^k.
Series hilbert_power(const Series& h, int n);

// Hilbert series of the relatively free algebra of the 2x2 matrix algebra.
Series hilbert_m2(int d, int cap);

enum class RpqRoute {
  composed,    // power/product composition of K[X_d] and M_2 series
  direct_sum,  // the expanded double/triple sum evaluated term by term
};

// Hilbert series of F_d(R_{p,q}) for the upper block triangular algebra with
// p 1x1 and q 2x2 diagonal blocks. Both routes must agree exactly.
Series hilbert_rpq(int p, int q, int d, int cap,
                   RpqRoute route = RpqRoute::composed);

// Multiplicity series of the cocharacters of U_k(K) (k x k upper triangular
// matrices), via the alternating Young-operator sum.
MultiplicitySeries mult_uk(int k, int d, int cap);

}  // namespace cochar

#pragma once

/**
 * @file arctan.hpp
 * @brief arctan^(n) computed four independent ways.
 *
 * Every entry point takes n as the derivative order of arctan itself, so
 * arctan_deriv_*(1) is 1/(1+x^2).
 *
 *  - closed:  (n-1)! q_{n-1}(x) / (1+x^2)^n
 *  - prop12:  with N = n-1,
 *             N! 2^N (-1)^N / (1+x^2)^(N+1) * sum_m a_{m,N} x^(N-2m)
 *  - fdb:     (n-1)-th derivative of f(1+x^2) with f(y) = 1/y, pointwise
 *  - oracle:  repeated quotient-rule differentiation of 1/(1+x^2)
 */

#include <vector>

#include "atanderiv/exact.hpp"
#include "atanderiv/faa_di_bruno.hpp"
#include "atanderiv/polynomial.hpp"
#include "atanderiv/report.hpp"

namespace atanderiv {

/// q_n(x) = (-1)^n sum_{k even, 0<=k<=n} C(n+1, k+1) (-1)^(k/2) x^(n-k)
Polynomial q_polynomial(unsigned n);

/// Throws std::invalid_argument for n == 0.
ArctanRational arctan_deriv_closed(unsigned n);

/**
 * a_{m,n} = sum_{k=m}^{n/2} (-1)^k / 4^k * C(k, m) * C(n-k, k), summed
 * literally.  Throws std::invalid_argument when m > n/2.
 */
BigRational a_coefficient(unsigned m, unsigned n);

/// Values a_{0,n} .. a_{n/2,n}.
struct CoefficientRow {
    unsigned n = 0;
    std::vector<BigRational> values;
};

CoefficientRow coefficient_row(unsigned n);

ArctanRational arctan_deriv_prop12(unsigned n);

/// f^(k)(1+x^2) = k! (-1)^k / (1+x^2)^(k+1) for k = 0..order.
DerivativeJet reciprocal_jet(BigRational const& x, unsigned order);

BigRational arctan_deriv_fdb(unsigned n, BigRational const& x);

ArctanRational arctan_deriv_oracle(unsigned n);

/// {0, 1, -1, 1/2, -1/2, 3/7}
std::vector<BigRational> default_sample_points();

/**
 * For every 1 <= n <= n_max: closed, prop12 and oracle must be structurally
 * equal, and fdb must match ar_eval(oracle) at each sample point.
 * Throws std::invalid_argument for n_max == 0.
 */
CheckReport crosscheck(unsigned n_max, std::vector<BigRational> const& points,
                       CheckOptions const& options = {});

}  // namespace atanderiv

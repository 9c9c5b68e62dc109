#pragma once

/**
 * @file identities.hpp
 * @brief Exact checks of the binomial summation identity
 *
 *   sum_{i=m}^{n/2} (-1)^i / 4^i * C(i, m) * C(n-i, i) = (-1)^m / 2^n * C(n+1, 2m+1),
 *
 * its corollary, and its representation as a terminating 2F1 at z = 1.
 */

#include <cstddef>
#include <stdexcept>

#include "atanderiv/exact.hpp"
#include "atanderiv/report.hpp"

namespace atanderiv {

/// Literal left-hand sum.  Throws std::invalid_argument when m > n/2.
BigRational identity_lhs(unsigned n, unsigned m);
/// (-1)^m / 2^n * C(n+1, 2m+1).  Same precondition.
BigRational identity_rhs(unsigned n, unsigned m);

/// Every 0 <= m <= n/2 for every n <= n_max.
CheckReport check_identity_sweep(unsigned n_max, CheckOptions const& options = {});

/// sum_{i=0}^{n} (-1)^i / (4^i (n+1-i)) * C(2n+1-i, i)
BigRational corollary_lhs(unsigned n);
/// 0 for odd n, 4^-n / (n+1) for even n.
BigRational corollary_rhs(unsigned n);

CheckReport check_corollary_sweep(unsigned n_max, CheckOptions const& options = {});

/// With C_n = identity_lhs(2n, 0): C_{n+1} - C_n / 4 == 2 / 4^(n+1) for n <= n_max.
CheckReport check_corollary_recurrence(unsigned n_max, CheckOptions const& options = {});

class NonTerminatingSeries : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SeriesDivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters of 2F1(a, b; c; 1).
struct HypergeometricParams {
    BigRational a;
    BigRational b;
    BigRational c;
};

struct TerminatingSum {
    BigRational value;
    /// Index of the last summed term; (a)_k (b)_k vanishes for every k beyond it.
    std::size_t last_index = 0;
};

/**
 * sum_k (a)_k (b)_k / ((c)_k k!) at z = 1, stopping at the first k where a
 * numerator rising factorial vanishes.  The k = 0 term is taken before any
 * division.  Throws NonTerminatingSeries when neither a nor b is a
 * non-positive integer, or termination lies beyond max_terms; throws
 * SeriesDivisionByZero when (c)_k vanishes inside the summation range.
 */
TerminatingSum terminating_2f1(HypergeometricParams const& params,
                               std::size_t max_terms = 1'000'000);

/// 2F1(m - n/2, m - n/2 + 1/2; m - n; 1) * (-1)^m / (m! 4^m) * (n - 2m + 1)_m
struct HypergeometricForm {
    HypergeometricParams params;
    TerminatingSum series;
    BigRational prefactor;
    BigRational value;
};

/// Requires m <= n/2.  Propagates the terminating_2f1 errors.
HypergeometricForm hypergeometric_form(unsigned n, unsigned m);

/// For one (n, m): value equals identity_lhs(n, m) and last_index == n/2 - m.
CheckReport check_2f1_representation(unsigned n, unsigned m, CheckOptions const& options = {});

/// Every valid (n, m) with n <= n_max.
CheckReport check_2f1_sweep(unsigned n_max, CheckOptions const& options = {});

}  // namespace atanderiv

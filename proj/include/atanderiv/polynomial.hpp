#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over BigRational, and rational
 *        functions of the form P(x) / (1+x^2)^k.
 */

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "atanderiv/exact.hpp"

namespace atanderiv {

/**
 * coefficients()[i] multiplies x^i.  The highest stored coefficient is never
 * zero; the zero polynomial has no coefficients and degree -1.
 */
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigRational> coeffs);
    explicit Polynomial(std::vector<BigRational> coeffs);

    static Polynomial constant(BigRational c);
    /// c * x^power
    static Polynomial monomial(BigRational c, std::size_t power);

    std::vector<BigRational> const& coefficients() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    BigRational coefficient(std::size_t i) const;
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigRational const& leading() const { return coeffs_.back(); }

    Polynomial operator-() const;
    Polynomial& operator+=(Polynomial const& o);
    Polynomial& operator-=(Polynomial const& o);
    Polynomial& operator*=(BigRational const& c);

    friend Polynomial operator+(Polynomial a, Polynomial const& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, Polynomial const& b) { return a -= b; }
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator*(Polynomial a, BigRational const& c) { return a *= c; }
    friend Polynomial operator*(BigRational const& c, Polynomial a) { return a *= c; }
    friend bool operator==(Polynomial const&, Polynomial const&) = default;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

Polynomial poly_add(Polynomial const& p, Polynomial const& q);
Polynomial poly_mul(Polynomial const& p, Polynomial const& q);
Polynomial poly_derivative(Polynomial const& p);
/// Horner evaluation.
BigRational poly_eval(Polynomial const& p, BigRational const& x);
/// p(q(x)).
Polynomial poly_compose(Polynomial const& p, Polynomial const& q);
/// Long division: {quotient, remainder} with deg remainder < deg divisor.
/// Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> poly_divmod(Polynomial const& num, Polynomial const& den);
Polynomial poly_pow(Polynomial const& p, unsigned long exponent);

/// 1 + x^2
Polynomial one_plus_x_squared();

/// Descending powers with exact coefficients, e.g. "3*x^2 - 1", "3/4*x - 1/2", "0".
std::string to_string(Polynomial const& p);

/**
 * numerator(x) / (1+x^2)^exponent, held in minimal-exponent form: while the
 * exponent is positive, (1+x^2) does not divide the numerator.  The zero
 * function is stored with exponent 0.
 */
class ArctanRational {
public:
    ArctanRational() = default;
    ArctanRational(Polynomial numerator, unsigned long exponent);

    Polynomial const& numerator() const { return numerator_; }
    unsigned long exponent() const { return exponent_; }

    /// Re-expresses the value over (1+x^2)^target; requires target >= exponent().
    /// The result is deliberately not canonical.
    Polynomial numerator_over(unsigned long target) const;

    friend bool operator==(ArctanRational const&, ArctanRational const&) = default;

private:
    Polynomial numerator_;
    unsigned long exponent_ = 0;
};

/// Strips every exact (1+x^2) factor from the numerator.
ArctanRational canonicalize(Polynomial numerator, unsigned long exponent);

ArctanRational ar_add(ArctanRational const& r, ArctanRational const& s);
ArctanRational ar_scale(ArctanRational const& r, BigRational const& c);
/// d/dx [P / (1+x^2)^k] = (P' (1+x^2) - 2 k x P) / (1+x^2)^(k+1), canonicalized.
ArctanRational ar_derivative(ArctanRational const& r);
BigRational ar_eval(ArctanRational const& r, BigRational const& x);

/// "(P) / (1+x^2)^k", e.g. "(-2*x) / (1+x^2)^2".
std::string to_string(ArctanRational const& r);

}  // namespace atanderiv

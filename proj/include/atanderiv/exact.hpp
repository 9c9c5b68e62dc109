#pragma once

/**
 * @file exact.hpp
 * @brief Arbitrary-precision integers and rationals, plus the combinatorial
 *        scalars (factorial, binomial, rising factorial) built on them.
 *
 * BigRational is always kept in lowest terms with a strictly positive
 * denominator, so equality is a structural comparison.  Division by zero
 * throws std::domain_error.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace atanderiv {

class BigInt {
public:
    BigInt() = default;
    BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigInt(int v) : v_(static_cast<long>(v)) {}  // NOLINT
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal integer; throws std::invalid_argument.
    static BigInt from_string(std::string_view text);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    std::string to_string() const { return v_.get_str(); }
    mpz_class const& raw() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }
    BigInt& operator+=(BigInt const& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(BigInt const& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(BigInt const& o) { v_ *= o.v_; return *this; }
    // Truncating division, like the built-in integer types.
    BigInt& operator/=(BigInt const& o);
    BigInt& operator%=(BigInt const& o);

    friend BigInt operator+(BigInt a, BigInt const& b) { return a += b; }
    friend BigInt operator-(BigInt a, BigInt const& b) { return a -= b; }
    friend BigInt operator*(BigInt a, BigInt const& b) { return a *= b; }
    friend BigInt operator/(BigInt a, BigInt const& b) { return a /= b; }
    friend BigInt operator%(BigInt a, BigInt const& b) { return a %= b; }

    friend bool operator==(BigInt const& a, BigInt const& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(BigInt const& a, BigInt const& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

BigInt abs(BigInt const& x);
BigInt gcd(BigInt const& a, BigInt const& b);
BigInt pow(BigInt const& base, unsigned long exponent);
std::ostream& operator<<(std::ostream& os, BigInt const& x);

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : v_(static_cast<long>(v)) {}  // NOLINT
    BigRational(BigInt const& v) : v_(v.raw()) {}  // NOLINT
    /// Canonicalizes num/den; throws std::domain_error when den is zero.
    BigRational(BigInt const& num, BigInt const& den);
    explicit BigRational(mpq_class v);

    /// Accepts "p" or "p/q" with an optional sign on p only.  Any other
    /// shape, or q == 0, throws std::invalid_argument.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const { return v_.get_str(); }
    mpq_class const& raw() const { return v_; }

    BigRational reciprocal() const;

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(BigRational const& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(BigRational const& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(BigRational const& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(BigRational const& o);

    friend BigRational operator+(BigRational a, BigRational const& b) { return a += b; }
    friend BigRational operator-(BigRational a, BigRational const& b) { return a -= b; }
    friend BigRational operator*(BigRational a, BigRational const& b) { return a *= b; }
    friend BigRational operator/(BigRational a, BigRational const& b) { return a /= b; }

    friend bool operator==(BigRational const& a, BigRational const& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(BigRational const& a, BigRational const& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;
};

BigRational abs(BigRational const& x);
/// Integer power; negative exponents take the reciprocal.
BigRational pow(BigRational const& base, long exponent);
std::ostream& operator<<(std::ostream& os, BigRational const& x);

/// (-1)^k as +1 / -1.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

BigInt factorial(unsigned long n);

/**
 * Binomial coefficients with a lazily built triangular cache.
 *
 * Rows up to n_max are computed on first use and kept; larger n fall back
 * to a direct computation.  Concurrent lookups are safe.
 */
class BinomialTable {
public:
    static constexpr std::int64_t kDefaultMaxRow = 1024;

    explicit BinomialTable(std::int64_t n_max = kDefaultMaxRow);

    /// C(n, k); zero whenever k < 0 or k > n.  Requires n >= 0.
    BigInt operator()(std::int64_t n, std::int64_t k) const;

    std::int64_t max_row() const { return n_max_; }

private:
    std::vector<BigInt> const& row(std::int64_t n) const;

    std::int64_t n_max_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

/// C(n, k) via the process-wide default table.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Rising factorial (q)_k = q (q+1) ... (q+k-1), with (q)_0 = 1.
BigRational pochhammer(BigRational const& q, unsigned long k);

}  // namespace atanderiv

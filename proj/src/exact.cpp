#include "atanderiv/exact.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

namespace atanderiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigInt BigInt::from_string(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    mpz_class v(std::string(digits), 10);
    if (text.front() == '-') v = -v;
    return BigInt(std::move(v));
}

BigInt& BigInt::operator/=(BigInt const& o) {
    if (o.is_zero()) throw std::domain_error("BigInt division by zero");
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(BigInt const& o) {
    if (o.is_zero()) throw std::domain_error("BigInt division by zero");
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt abs(BigInt const& x) { return BigInt(mpz_class(::abs(x.raw()))); }

BigInt gcd(BigInt const& a, BigInt const& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(g));
}

BigInt pow(BigInt const& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, BigInt const& x) { return os << x.to_string(); }

BigRational::BigRational(BigInt const& num, BigInt const& den) {
    if (den.is_zero()) throw std::domain_error("BigRational with zero denominator");
    v_.get_num() = num.raw();
    v_.get_den() = den.raw();
    v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("BigRational with zero denominator");
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view sign_free = num;
    if (!sign_free.empty() && (sign_free.front() == '-' || sign_free.front() == '+'))
        sign_free.remove_prefix(1);
    if (!all_digits(sign_free))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return BigRational(BigInt::from_string(num));
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt d = BigInt::from_string(den);
    if (d.is_zero())
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(BigInt::from_string(num), d);
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return BigRational(denominator(), numerator());
}

BigRational& BigRational::operator/=(BigRational const& o) {
    if (o.is_zero()) throw std::domain_error("BigRational division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational abs(BigRational const& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(BigRational const& base, long exponent) {
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    auto e = static_cast<unsigned long>(exponent);
    return BigRational(pow(base.numerator(), e), pow(base.denominator(), e));
}

std::ostream& operator<<(std::ostream& os, BigRational const& x) { return os << x.to_string(); }

BigInt factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigInt(std::move(r));
}

BinomialTable::BinomialTable(std::int64_t n_max) : n_max_(n_max < 0 ? 0 : n_max) {
    rows_.resize(static_cast<std::size_t>(n_max_) + 1);
}

std::vector<BigInt> const& BinomialTable::row(std::int64_t n) const {
    auto& slot = rows_[static_cast<std::size_t>(n)];
    {
        std::shared_lock lock(mutex_);
        if (!slot.empty()) return slot;
    }
    std::unique_lock lock(mutex_);
    if (slot.empty()) {
        // C(n, k+1) = C(n, k) (n - k) / (k + 1), exact at every step.
        std::vector<BigInt> r;
        r.reserve(static_cast<std::size_t>(n) + 1);
        BigInt c = 1;
        r.push_back(c);
        for (std::int64_t k = 0; k < n; ++k) {
            c *= BigInt(static_cast<long>(n - k));
            c /= BigInt(static_cast<long>(k + 1));
            r.push_back(c);
        }
        slot = std::move(r);
    }
    return slot;
}

BigInt BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (n <= n_max_) return row(n)[static_cast<std::size_t>(k)];
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigInt(std::move(r));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    static BinomialTable const table;
    return table(n, k);
}

BigRational pochhammer(BigRational const& q, unsigned long k) {
    BigRational r = 1;
    BigRational factor = q;
    for (unsigned long i = 0; i < k; ++i) {
        r *= factor;
        factor += 1;
    }
    return r;
}

}  // namespace atanderiv

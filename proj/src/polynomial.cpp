#include "atanderiv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atanderiv {

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(BigRational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(BigRational c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
}

BigRational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational{};
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(Polynomial const& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(Polynomial const& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(BigRational const& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial poly_add(Polynomial const& p, Polynomial const& q) { return p + q; }

Polynomial poly_mul(Polynomial const& p, Polynomial const& q) { return p * q; }

Polynomial poly_derivative(Polynomial const& p) {
    auto const& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<BigRational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigRational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

BigRational poly_eval(Polynomial const& p, BigRational const& x) {
    BigRational acc;
    auto const& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial poly_compose(Polynomial const& p, Polynomial const& q) {
    Polynomial acc;
    auto const& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * q;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

std::pair<Polynomial, Polynomial> poly_divmod(Polynomial const& num, Polynomial const& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> rem = num.coefficients();
    std::size_t const dn = den.coefficients().size();
    if (rem.size() < dn) return {Polynomial{}, num};
    std::vector<BigRational> quot(rem.size() - dn + 1);
    BigRational const lead_inv = den.leading().reciprocal();
    for (std::size_t i = rem.size(); i-- >= dn;) {
        BigRational factor = rem[i] * lead_inv;
        std::size_t shift = i - (dn - 1);
        quot[shift] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= factor * den.coefficients()[j];
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_pow(Polynomial const& p, unsigned long exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial one_plus_x_squared() { return Polynomial{1, 0, 1}; }

std::string to_string(Polynomial const& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    auto const& c = p.coefficients();
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        bool negative = c[i].sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        BigRational mag = abs(c[i]);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

ArctanRational::ArctanRational(Polynomial numerator, unsigned long exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
    if (numerator_.is_zero()) {
        exponent_ = 0;
        return;
    }
    Polynomial const base = one_plus_x_squared();
    while (exponent_ > 0) {
        auto [q, r] = poly_divmod(numerator_, base);
        if (!r.is_zero()) break;
        numerator_ = std::move(q);
        --exponent_;
    }
}

Polynomial ArctanRational::numerator_over(unsigned long target) const {
    if (target < exponent_) throw std::invalid_argument("numerator_over: target below exponent");
    return numerator_ * poly_pow(one_plus_x_squared(), target - exponent_);
}

ArctanRational canonicalize(Polynomial numerator, unsigned long exponent) {
    return ArctanRational(std::move(numerator), exponent);
}

ArctanRational ar_add(ArctanRational const& r, ArctanRational const& s) {
    unsigned long k = std::max(r.exponent(), s.exponent());
    return ArctanRational(r.numerator_over(k) + s.numerator_over(k), k);
}

ArctanRational ar_scale(ArctanRational const& r, BigRational const& c) {
    return ArctanRational(r.numerator() * c, r.exponent());
}

ArctanRational ar_derivative(ArctanRational const& r) {
    Polynomial const& p = r.numerator();
    unsigned long k = r.exponent();
    Polynomial two_kx = Polynomial::monomial(BigRational(static_cast<long>(2 * k)), 1);
    return ArctanRational(poly_derivative(p) * one_plus_x_squared() - two_kx * p, k + 1);
}

BigRational ar_eval(ArctanRational const& r, BigRational const& x) {
    BigRational denom = pow(BigRational(1) + x * x, static_cast<long>(r.exponent()));
    return poly_eval(r.numerator(), x) / denom;
}

std::string to_string(ArctanRational const& r) {
    return "(" + to_string(r.numerator()) + ") / (1+x^2)^" + std::to_string(r.exponent());
}

}  // namespace atanderiv

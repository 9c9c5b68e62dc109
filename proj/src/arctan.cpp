#include "atanderiv/arctan.hpp"

#include <stdexcept>

namespace atanderiv {

namespace {

void require_positive_order(unsigned n, char const* who) {
    if (n == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": arctan itself is not a rational function, need n >= 1");
}

}  // namespace

Polynomial q_polynomial(unsigned n) {
    std::vector<BigRational> c(n + 1);
    int const outer = sign_power(n);
    for (unsigned k = 0; k <= n; k += 2) {
        BigInt term = binomial(n + 1, k + 1);
        if (outer * sign_power(k / 2) < 0) term = -term;
        c[n - k] = term;
    }
    return Polynomial(std::move(c));
}

ArctanRational arctan_deriv_closed(unsigned n) {
    require_positive_order(n, "arctan_deriv_closed");
    return ArctanRational(q_polynomial(n - 1) * BigRational(factorial(n - 1)), n);
}

BigRational a_coefficient(unsigned m, unsigned n) {
    if (m > n / 2)
        throw std::invalid_argument("a_coefficient: need m <= n/2, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
    BigRational sum;
    for (unsigned k = m; k <= n / 2; ++k) {
        BigRational term(binomial(k, m) * binomial(n - k, k), pow(BigInt(4), k));
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

CoefficientRow coefficient_row(unsigned n) {
    CoefficientRow row{n, {}};
    row.values.reserve(n / 2 + 1);
    for (unsigned m = 0; m <= n / 2; ++m) row.values.push_back(a_coefficient(m, n));
    return row;
}

ArctanRational arctan_deriv_prop12(unsigned n) {
    require_positive_order(n, "arctan_deriv_prop12");
    unsigned const inner = n - 1;
    CoefficientRow const row = coefficient_row(inner);
    std::vector<BigRational> c(inner + 1);
    for (unsigned m = 0; m <= inner / 2; ++m) c[inner - 2 * m] = row.values[m];
    BigInt prefactor = factorial(inner) * pow(BigInt(2), inner);
    if (inner % 2 == 1) prefactor = -prefactor;
    return ArctanRational(Polynomial(std::move(c)) * BigRational(prefactor), inner + 1);
}

DerivativeJet reciprocal_jet(BigRational const& x, unsigned order) {
    BigRational const y = BigRational(1) + x * x;
    DerivativeJet jet{y, {}};
    jet.values.reserve(order + 1);
    BigRational y_power = y;  // y^(k+1)
    for (unsigned k = 0; k <= order; ++k) {
        BigRational v = BigRational(factorial(k)) / y_power;
        if (k % 2 == 1) v = -v;
        jet.values.push_back(std::move(v));
        y_power *= y;
    }
    return jet;
}

BigRational arctan_deriv_fdb(unsigned n, BigRational const& x) {
    require_positive_order(n, "arctan_deriv_fdb");
    return special_chain_rule(n - 1, x, reciprocal_jet(x, n - 1));
}

ArctanRational arctan_deriv_oracle(unsigned n) {
    require_positive_order(n, "arctan_deriv_oracle");
    ArctanRational r(Polynomial{1}, 1);
    for (unsigned i = 1; i < n; ++i) r = ar_derivative(r);
    return r;
}

std::vector<BigRational> default_sample_points() {
    return {0, 1, -1, BigRational(1, 2), BigRational(-1, 2), BigRational(3, 7)};
}

CheckReport crosscheck(unsigned n_max, std::vector<BigRational> const& points,
                       CheckOptions const& options) {
    if (n_max == 0) throw std::invalid_argument("crosscheck: n_max must be >= 1");
    CheckReport report{"crosscheck", n_max, 0, {}};

    // Same quotient-rule chain as arctan_deriv_oracle, advanced one step per n.
    ArctanRational oracle(Polynomial{1}, 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) oracle = ar_derivative(oracle);

        ArctanRational closed = arctan_deriv_closed(n);
        if (options.inject_fault && n == n_max)
            closed = ar_add(closed, ArctanRational(Polynomial{1}, 0));
        ArctanRational const prop12 = arctan_deriv_prop12(n);

        auto structural = [&](ArctanRational const& value, char const* label) {
            ++report.cases;
            if (value != oracle)
                report.failures.push_back({n, std::nullopt, std::nullopt, label, to_string(value),
                                           to_string(oracle)});
        };
        structural(closed, "closed/oracle");
        structural(prop12, "prop12/oracle");

        for (auto const& x : points) {
            ++report.cases;
            BigRational const fdb = arctan_deriv_fdb(n, x);
            BigRational const expected = ar_eval(oracle, x);
            if (fdb != expected)
                report.failures.push_back({n, std::nullopt, x.to_string(), "fdb/oracle",
                                           fdb.to_string(), expected.to_string()});
        }
    }
    return report;
}

}  // namespace atanderiv

#include "atanderiv/identities.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace atanderiv {

namespace {

void require_m_in_range(unsigned n, unsigned m, char const* who) {
    if (m > n / 2)
        throw std::invalid_argument(std::string(who) + ": need m <= n/2, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
}

// -x when x is a non-positive integer, i.e. the last k with (x)_k != 0.
std::optional<BigInt> last_nonvanishing_index(BigRational const& x) {
    if (!x.is_integer() || x.sign() > 0) return std::nullopt;
    return -x.numerator();
}

BigRational quarter_power(unsigned k) { return BigRational(1, pow(BigInt(4), k)); }

}  // namespace

BigRational identity_lhs(unsigned n, unsigned m) {
    require_m_in_range(n, m, "identity_lhs");
    BigRational sum;
    for (unsigned i = m; i <= n / 2; ++i) {
        BigRational term = quarter_power(i) * BigRational(binomial(i, m) * binomial(n - i, i));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

BigRational identity_rhs(unsigned n, unsigned m) {
    require_m_in_range(n, m, "identity_rhs");
    BigRational r(binomial(n + 1, 2 * m + 1), pow(BigInt(2), n));
    return (m % 2 == 0) ? r : -r;
}

CheckReport check_identity_sweep(unsigned n_max, CheckOptions const& options) {
    CheckReport report{"identity", n_max, 0, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= n / 2; ++m) {
            ++report.cases;
            BigRational lhs = identity_lhs(n, m);
            if (options.inject_fault && n == n_max && m == n / 2) lhs += 1;
            BigRational const rhs = identity_rhs(n, m);
            if (lhs != rhs)
                report.failures.push_back(
                    {n, m, std::nullopt, "lhs/rhs", lhs.to_string(), rhs.to_string()});
        }
    }
    return report;
}

BigRational corollary_lhs(unsigned n) {
    BigRational sum;
    for (unsigned i = 0; i <= n; ++i) {
        BigRational term = BigRational(binomial(2 * n + 1 - i, i)) * quarter_power(i) /
                           BigRational(static_cast<long>(n + 1 - i));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

BigRational corollary_rhs(unsigned n) {
    if (n % 2 == 1) return 0;
    return quarter_power(n) / BigRational(static_cast<long>(n + 1));
}

CheckReport check_corollary_sweep(unsigned n_max, CheckOptions const& options) {
    CheckReport report{"corollary", n_max, 0, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
        ++report.cases;
        BigRational lhs = corollary_lhs(n);
        if (options.inject_fault && n == n_max) lhs += 1;
        BigRational const rhs = corollary_rhs(n);
        if (lhs != rhs)
            report.failures.push_back(
                {n, std::nullopt, std::nullopt, "lhs/rhs", lhs.to_string(), rhs.to_string()});
    }
    return report;
}

CheckReport check_corollary_recurrence(unsigned n_max, CheckOptions const& options) {
    CheckReport report{"corollary-recurrence", n_max, 0, {}};
    BigRational current = identity_lhs(0, 0);
    for (unsigned n = 0; n <= n_max; ++n) {
        ++report.cases;
        BigRational const next = identity_lhs(2 * (n + 1), 0);
        BigRational lhs = next - current / BigRational(4);
        if (options.inject_fault && n == n_max) lhs += 1;
        BigRational const rhs = BigRational(2) * quarter_power(n + 1);
        if (lhs != rhs)
            report.failures.push_back({n, std::nullopt, std::nullopt, "C(n+1)-C(n)/4 vs 2/4^(n+1)",
                                       lhs.to_string(), rhs.to_string()});
        current = next;
    }
    return report;
}

TerminatingSum terminating_2f1(HypergeometricParams const& params, std::size_t max_terms) {
    auto const ka = last_nonvanishing_index(params.a);
    auto const kb = last_nonvanishing_index(params.b);
    if (!ka && !kb)
        throw NonTerminatingSeries("2F1 does not terminate: a=" + params.a.to_string() +
                                   " b=" + params.b.to_string());
    BigInt const last = (ka && kb) ? std::min(*ka, *kb) : (ka ? *ka : *kb);
    if (last >= BigInt(static_cast<long>(max_terms)))
        throw NonTerminatingSeries("2F1 needs more than " + std::to_string(max_terms) + " terms");

    auto const k_last = static_cast<std::size_t>(last.to_long());
    TerminatingSum result{1, k_last};
    BigRational term = 1;
    for (std::size_t k = 0; k < k_last; ++k) {
        BigRational const shift(static_cast<long>(k));
        BigRational const c_k = params.c + shift;
        if (c_k.is_zero())
            throw SeriesDivisionByZero("(c)_k vanishes at k=" + std::to_string(k + 1) +
                                       " before the series terminates, c=" + params.c.to_string());
        term *= (params.a + shift) * (params.b + shift);
        term /= c_k * BigRational(static_cast<long>(k + 1));
        result.value += term;
    }
    return result;
}

HypergeometricForm hypergeometric_form(unsigned n, unsigned m) {
    require_m_in_range(n, m, "hypergeometric_form");
    BigRational const a = BigRational(static_cast<long>(m)) - BigRational(static_cast<long>(n), 2);
    HypergeometricParams params{a, a + BigRational(1, 2),
                                BigRational(static_cast<long>(m) - static_cast<long>(n))};
    TerminatingSum series = terminating_2f1(params);
    BigRational prefactor = pochhammer(BigRational(static_cast<long>(n - 2 * m + 1)), m) /
                            BigRational(factorial(m) * pow(BigInt(4), m));
    if (m % 2 == 1) prefactor = -prefactor;
    BigRational value = series.value * prefactor;
    return {std::move(params), std::move(series), std::move(prefactor), std::move(value)};
}

namespace {

void check_2f1_case(unsigned n, unsigned m, bool inject, CheckReport& report) {
    ++report.cases;
    HypergeometricForm form = hypergeometric_form(n, m);
    if (inject) form.value += 1;
    BigRational const lhs = identity_lhs(n, m);
    if (form.value != lhs)
        report.failures.push_back(
            {n, m, std::nullopt, "2f1/lhs", form.value.to_string(), lhs.to_string()});
    std::size_t const expected_last = n / 2 - m;
    if (form.series.last_index != expected_last)
        report.failures.push_back({n, m, std::nullopt, "termination-index",
                                   std::to_string(form.series.last_index),
                                   std::to_string(expected_last)});
}

}  // namespace

CheckReport check_2f1_representation(unsigned n, unsigned m, CheckOptions const& options) {
    require_m_in_range(n, m, "check_2f1_representation");
    CheckReport report{"2f1", n, 0, {}};
    check_2f1_case(n, m, options.inject_fault, report);
    return report;
}

CheckReport check_2f1_sweep(unsigned n_max, CheckOptions const& options) {
    CheckReport report{"2f1", n_max, 0, {}};
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned m = 0; m <= n / 2; ++m)
            check_2f1_case(n, m, options.inject_fault && n == n_max && m == n / 2, report);
    return report;
}

}  // namespace atanderiv

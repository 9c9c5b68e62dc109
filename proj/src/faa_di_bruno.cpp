#include "atanderiv/faa_di_bruno.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace atanderiv {

unsigned PartitionVector::block_count() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0U);
}

unsigned PartitionVector::weight() const {
    unsigned w = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        w += static_cast<unsigned>(i + 1) * multiplicities[i];
    return w;
}

namespace {

// Fills slot `part` (1-based) onward with `remaining` still to distribute.
// A remainder r can be finished with parts > part iff r == 0 or r > part,
// since r <= n is itself an admissible part.
void extend(unsigned n, unsigned part, unsigned remaining, std::vector<unsigned>& current,
            std::vector<PartitionVector>& out) {
    if (part == n) {
        if (remaining % n != 0) return;
        current[n - 1] = remaining / n;
        out.push_back(PartitionVector{current});
        current[n - 1] = 0;
        return;
    }
    for (unsigned l = 0; l * part <= remaining; ++l) {
        unsigned rest = remaining - l * part;
        if (rest != 0 && rest <= part) continue;
        current[part - 1] = l;
        extend(n, part + 1, rest, current, out);
    }
    current[part - 1] = 0;
}

void require_order(DerivativeJet const& jet, unsigned n, char const* name) {
    if (jet.order() < static_cast<long>(n))
        throw std::invalid_argument(std::string(name) + " has order " +
                                    std::to_string(jet.order()) + ", need " + std::to_string(n));
}

}  // namespace

std::vector<PartitionVector> enumerate_partitions(unsigned n) {
    if (n == 0) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
    std::vector<PartitionVector> out;
    std::vector<unsigned> current(n, 0);
    extend(n, 1, n, current, out);
    return out;
}

BigRational faa_di_bruno(unsigned n, DerivativeJet const& f_jet, DerivativeJet const& g_jet) {
    require_order(f_jet, n, "f_jet");
    require_order(g_jet, n, "g_jet");
    if (f_jet.point != g_jet.values[0])
        throw std::invalid_argument("faa_di_bruno: f_jet must be taken at g(x0)");
    if (n == 0) return f_jet.values[0];

    std::vector<BigRational> scaled(n + 1);  // g^(i)(x0) / i!
    for (unsigned i = 1; i <= n; ++i) scaled[i] = g_jet.values[i] / BigRational(factorial(i));

    BigRational const n_fact = factorial(n);
    BigRational sum;
    for (auto const& pv : enumerate_partitions(n)) {
        BigRational term = n_fact * f_jet.values[pv.block_count()];
        for (unsigned i = 1; i <= n; ++i) {
            unsigned l = pv.multiplicities[i - 1];
            if (l == 0) continue;
            term /= BigRational(factorial(l));
            term *= pow(scaled[i], static_cast<long>(l));
        }
        sum += term;
    }
    return sum;
}

BigInt special_chain_coefficient(unsigned n, unsigned k) {
    return factorial(n) / (factorial(k) * factorial(n - 2 * k));
}

BigRational special_chain_rule(unsigned n, BigRational const& x, DerivativeJet const& f_jet) {
    require_order(f_jet, n, "f_jet");
    BigRational const two_x = BigRational(2) * x;
    BigRational sum;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        sum += BigRational(special_chain_coefficient(n, k)) * pow(two_x, n - 2 * k) *
               f_jet.values[n - k];
    }
    return sum;
}

std::vector<BigRational> recurrence_coefficients(unsigned n) {
    if (n == 0) throw std::invalid_argument("recurrence_coefficients: n must be >= 1");
    std::vector<BigRational> c{1};
    for (unsigned order = 1; order < n; ++order) {
        std::vector<BigRational> next(((order + 1) / 2) + 1);
        for (unsigned k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            unsigned power = order - 2 * k;
            if (power > 0) next[k + 1] += BigRational(static_cast<long>(2 * power)) * c[k];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace atanderiv

#include "vfcomb/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "vfcomb/bracketing.hpp"
#include "vfcomb/counting.hpp"

namespace vfcomb {

namespace {

void require_range(int degree, int max_degree) {
    if (degree < 2 || degree > max_degree) {
        throw std::domain_error("orbit counting supports 2 <= d <= " + std::to_string(max_degree) +
                                ", got " + std::to_string(degree));
    }
}

using Series = std::vector<Rational>;

// lhs * rhs truncated to degree `order`.
Series multiply(const Series& lhs, const Series& rhs, std::size_t order) {
    Series out(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += lhs[i] * rhs[j];
    }
    return out;
}

}  // namespace

PairingConfig rotate(const PairingConfig& config, int steps) {
    const int d = config.degree();
    if (d < 2) throw std::domain_error("rotation needs d >= 2");
    const int n = config.size();
    const int m = ((steps % (d - 1)) + (d - 1)) % (d - 1);
    std::vector<Pair> pairs;
    pairs.reserve(config.pairs().size());
    for (const auto& p : config.pairs()) {
        const int a = (p.low + 2 * m) % n;
        const int b = (p.high + 2 * m) % n;
        pairs.push_back({std::min(a, b), std::max(a, b), p.kind});
    }
    return PairingConfig(d, std::move(pairs));
}

BigInt burnside_count(int degree, int max_degree) {
    require_range(degree, max_degree);
    unsigned long fixed = 0;
    enumerate(degree, [&](const PairingConfig& config) {
        for (int m = 0; m < degree - 1; ++m) {
            if (m == 0 || rotate(config, m) == config) ++fixed;
        }
        return true;
    });
    BigInt total(fixed);
    if (total % (degree - 1) != 0) {
        throw std::logic_error("fixed-point total is not divisible by the group order");
    }
    return total / (degree - 1);
}

std::string canonical_representative(const PairingConfig& config) {
    std::string best = render(config);
    for (int m = 1; m < config.degree() - 1; ++m) {
        best = std::min(best, render(rotate(config, m)));
    }
    return best;
}

std::vector<std::string> orbit_representatives(int degree, int max_degree) {
    require_range(degree, max_degree);
    std::vector<std::string> reps;
    enumerate(degree, [&](const PairingConfig& config) {
        reps.push_back(canonical_representative(config));
        return true;
    });
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

long euler_totient(long k) {
    if (k < 1) throw std::domain_error("totient needs k >= 1");
    long result = k;
    long rest = k;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

Rational polya_coefficient(int degree, PolyaConvention convention) {
    if (degree < 2) throw std::domain_error("Polya series needs d >= 2");
    const auto order = static_cast<std::size_t>(
        convention == PolyaConvention::ZPowDMinus1 ? degree - 1 : degree);

    // h = log(1/(1 - G)) = sum_j G^j / j up to z^order.
    const auto coeffs = coeffs_algebraic(static_cast<int>(order));
    Series g(order + 1, Rational(0));
    for (std::size_t i = 1; i <= order; ++i) g[i] = Rational(coeffs[i - 1]);
    Series h(order + 1, Rational(0));
    Series power = g;
    for (std::size_t j = 1; j <= order; ++j) {
        for (std::size_t i = 0; i <= order; ++i) h[i] += power[i] / static_cast<long>(j);
        power = multiply(power, g, order);
    }

    // [z^N] h(z^k) is h_{N/k} when k divides N.
    Rational sum(0);
    for (std::size_t k = 1; k <= order; ++k) {
        if (order % k != 0) continue;
        sum += Rational(euler_totient(static_cast<long>(k)), static_cast<long>(k)) * h[order / k];
    }
    sum.canonicalize();
    return sum;
}

}  // namespace vfcomb

#include "vfcomb/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vfcomb/asymptotics.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/core_model.hpp"
#include "vfcomb/counting.hpp"
#include "vfcomb/moduli.hpp"

namespace vfcomb {

namespace {

// A check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string(int max_degree)>;

std::string exact_counts(int max_degree) {
    const auto algebraic = coeffs_algebraic(max_degree);
    const auto split = split_sequences(max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        const BigInt c = c_total(d);
        if (c_total_closed(d) != c) return "closed form differs at d=" + std::to_string(d);
        if (algebraic[d - 1] != c) return "cubic extraction differs at d=" + std::to_string(d);
        if (split.q[d - 1] != c) return "split recursion differs at d=" + std::to_string(d);
        if (brute_count(2 * d - 2) != c) return "enumeration differs at d=" + std::to_string(d);
    }
    for (int n = 1; n < max_degree; ++n) {
        if (split.r[n] != p_rec(2 * n - 1)) return "odd split differs at n=" + std::to_string(n);
    }
    return {};
}

std::string dimension_identities(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        const auto dist = dimension_distribution(d);  // closed vs recursive
        BigInt sum = 0;
        for (const auto& c : dist) sum += c;
        if (sum != c_total(d)) return "sum over q differs at d=" + std::to_string(d);
        if (dist.front() != 1) return "c_{d,0} != 1 at d=" + std::to_string(d);
        if (dist.back() != catalan(d - 1)) return "top dimension is not Catalan at d=" + std::to_string(d);
    }
    return {};
}

std::string dimension_histogram(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<BigInt> hist(2 * d - 1, BigInt(0));
        enumerate(d, [&](const PairingConfig& config) {
            ++hist[invariants_of(config).q];
            return true;
        });
        if (hist != dimension_distribution_closed(d)) return "histogram differs at d=" + std::to_string(d);
    }
    return {};
}

std::string type_marginals(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        const auto types = type_distribution(d);  // throws on marginal mismatch
        std::map<TypeKey, BigInt> hist;
        enumerate(d, [&](const PairingConfig& config) {
            const auto dim = invariants_of(config);
            ++hist[{dim.s, dim.h}];
            return true;
        });
        if (hist != types) return "type histogram differs at d=" + std::to_string(d);
    }
    return {};
}

std::string bracket_round_trip(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        std::set<std::string> seen;
        std::string failure;
        enumerate(d, [&](const PairingConfig& config) {
            const std::string text = render(config);
            if (!seen.insert(text).second) {
                failure = "duplicate " + text;
                return false;
            }
            if (parse(text) != config) {
                failure = "parse(render) mismatch on " + text;
                return false;
            }
            return true;
        });
        if (!failure.empty()) return failure;
    }
    return {};
}

std::string model_round_trip(int max_degree) {
    std::string failure;
    for (int d = 1; d <= max_degree && failure.empty(); ++d) {
        enumerate(d, [&](const PairingConfig& config) {
            const auto dim = invariants_of(config);
            const auto transversal = to_transversal_data(config);
            const auto separatrix = to_separatrix(transversal);
            if (to_transversal(separatrix) != transversal || to_pairing(transversal) != config) {
                failure = "conversion is not invertible on " + render(config);
                return false;
            }
            const auto cells = classify_cells(separatrix);
            if (cells.alpha_omega != dim.s) {
                failure = "alpha-omega cells != s on " + render(config);
                return false;
            }
            if (static_cast<int>(transversal_cells(transversal).size()) != dim.h + dim.s + 1) {
                failure = "transversal cells != h+s+1 on " + render(config);
                return false;
            }
            return true;
        });
    }
    return failure;
}

std::string rotation_orbits(int max_degree) {
    const int top = std::min(max_degree, kMaxBurnsideDegree);
    for (int d = 2; d <= top; ++d) {
        std::string failure;
        enumerate(d, [&](const PairingConfig& config) {
            if (rotate(config, 0) != config || rotate(rotate(config, 1), d - 2) != config ||
                invariants_of(rotate(config, 1)) != invariants_of(config)) {
                failure = "group law fails on " + render(config);
                return false;
            }
            return true;
        });
        if (!failure.empty()) return failure;
        const BigInt orbits = burnside_count(d);
        if (orbits != static_cast<unsigned long>(orbit_representatives(d).size())) {
            return "Burnside differs from orbit partition at d=" + std::to_string(d);
        }
        const BigInt c = c_total(d);
        if (orbits > c || orbits * (d - 1) < c) return "orbit bounds fail at d=" + std::to_string(d);
    }
    return {};
}

std::string constant_identities(int) {
    const auto k = exact_constants();
    const Surd5 log_derivative = k.rho_prime / k.rho;
    if (log_derivative + k.kappa != Surd5(0)) return "kappa != -rho'/rho";
    const Surd5 lambda = -(k.rho_second / k.rho) - log_derivative + log_derivative * log_derivative;
    if (lambda != k.lambda) return "lambda formula mismatch";
    if (k.lambda != Surd5(Rational(-6), Rational(29, 10))) return "lambda != (29 sqrt5 - 60)/10";
    if (k.radius * k.growth != Surd5(1) || k.radius.sign() <= 0) return "radius inconsistent";
    return {};
}

std::string distribution_mass(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        Rational total(0);
        for (const auto& p : stats(d).mass) total += p;
        if (total != 1) return "mass does not sum to 1 at d=" + std::to_string(d);
    }
    return {};
}

}  // namespace

std::vector<SuiteResult> run_verification(int max_degree) {
    if (max_degree < 1 || max_degree > kMaxVerifyDegree) {
        throw std::domain_error("verify supports 1 <= max-degree <= " + std::to_string(kMaxVerifyDegree));
    }
    const std::vector<std::pair<std::string, Check>> suites = {
        {"exact-counts", exact_counts},
        {"dimension-identities", dimension_identities},
        {"dimension-histogram", dimension_histogram},
        {"type-marginals", type_marginals},
        {"bracket-round-trip", bracket_round_trip},
        {"model-round-trip", model_round_trip},
        {"rotation-orbits", rotation_orbits},
        {"constant-identities", constant_identities},
        {"distribution-mass", distribution_mass},
    };
    std::vector<SuiteResult> results;
    for (const auto& [name, check] : suites) {
        SuiteResult r{name, false, {}};
        try {
            r.detail = check(max_degree);
            r.passed = r.detail.empty();
            if (r.passed) r.detail = "d <= " + std::to_string(max_degree);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool dimension_positivity(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& c : dimension_distribution_closed(d)) {
            if (c <= 0) return false;
        }
    }
    return true;
}

}  // namespace vfcomb

#pragma once

// Classes up to rotation by (d-1)-st roots of unity. Rotating the
// vector field advances every separatrix label by two positions, so the
// cyclic group Z/(d-1) acts on configurations by l -> l + 2m mod 2d-2.

#include <string>
#include <vector>

#include "vfcomb/core_model.hpp"
#include "vfcomb/exact.hpp"

namespace vfcomb {

/// Largest degree for which orbit counting enumerates explicitly.
inline constexpr int kMaxBurnsideDegree = 8;

/// Shifts every index by 2m (m taken mod d-1). Throws std::domain_error
/// if d < 2.
PairingConfig rotate(const PairingConfig& config, int steps);

/// Orbit count (1/(d-1)) * sum_m |Fix(m)| over all configurations of
/// degree d. Throws std::domain_error unless 2 <= d <= max_degree.
BigInt burnside_count(int degree, int max_degree = kMaxBurnsideDegree);

/// Lexicographically smallest rendering over all rotations.
std::string canonical_representative(const PairingConfig& config);

/// One canonical representative per orbit, sorted.
std::vector<std::string> orbit_representatives(int degree, int max_degree = kMaxBurnsideDegree);

enum class PolyaConvention {
    ZPowDMinus1,  // coefficient of z^{d-1}
    ZPowD,        // coefficient of z^d
};

/// Coefficient of the requested power of z in
///   sum_{k>=1} phi(k)/k * log(1/(1 - G(z^k))),
/// with G the counting series. Not an orbit count; see burnside_count.
/// Throws std::domain_error if d < 2.
Rational polya_coefficient(int degree, PolyaConvention convention);

/// Throws std::domain_error if k < 1.
long euler_totient(long k);

}  // namespace vfcomb

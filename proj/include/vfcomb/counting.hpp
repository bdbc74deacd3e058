#pragma once

// Exact counts of combinatorial classes.
//
//   c_d      total classes in degree d           c_d = p_{2d-2}
//   c_{d,q}  classes of real dimension q         q = h + 2s
//   c_{d,s,h} classes with s square and h round pairs
//
// Everything here is exact; no floating point.

#include <map>
#include <utility>
#include <vector>

#include "vfcomb/exact.hpp"

namespace vfcomb {

/// Number of valid bracketings on n elements:
///   p_n = p_{n-1} + 2 * sum_{2a+b+2=n} p_{2a} p_b,  p_0 = 1,  p_{n<0} = 0.
/// Memoized; safe to call from several threads.
BigInt p_rec(int n);

/// p_0..p_max from the same memo table.
std::vector<BigInt> p_table(int max_n);

/// q_n = p_{2n} and r_n = p_{2n-1} for n = 0..max_n, computed with the
/// split recursions
///   q_n = r_n + 2 sum_{j<n} q_j q_{n-1-j},  r_n = q_{n-1} + 2 sum_{j<n} q_j r_{n-1-j}.
struct SplitSequences {
    std::vector<BigInt> q;
    std::vector<BigInt> r;
};
SplitSequences split_sequences(int max_n);

/// c_d = p_{2d-2}. Throws std::domain_error if d < 1.
BigInt c_total(int degree);

/// Sum_{n>=0} (a)_n (b)_n / ((c)_n n!) z^n for a or b a non-positive
/// integer. Throws std::domain_error when the series does not terminate
/// or (c)_n vanishes before it does.
Rational hyper2f1_terminating(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& z);

/// c_d = 2F1([2-2d, 1-d]; [2]; 2). Throws std::logic_error if the sum is
/// not an integer.
BigInt c_total_closed(int degree);

/// c_1..c_D read off the power-series root G(0) = 0 of
///   G^3 - G^2 + (z+1)/4 G - z/4 = 0
/// by solving for one coefficient at a time.
std::vector<BigInt> coeffs_algebraic(int max_degree);

/// c_{d,q}, q = 0..2(d-1), from
///   c_{d,q} = sum_n (2-2d)_n (1-d)_n / ((2)_n n!) * binom(n, q-n).
std::vector<BigInt> dimension_distribution_closed(int degree);

/// c_{d,q} from the string recursion with dimension bookkeeping: a round
/// pair adds 1, a square pair adds 2.
std::vector<BigInt> dimension_distribution_recursive(int degree);

/// Both of the above; throws std::logic_error if they disagree.
std::vector<BigInt> dimension_distribution(int degree);

/// (s, h) -> c_{d,s,h}, nonzero entries only. Checked against
/// dimension_distribution under q = 2s + h and against c_total; throws
/// std::logic_error on a mismatch.
using TypeKey = std::pair<int, int>;
std::map<TypeKey, BigInt> type_distribution(int degree);

/// C_n = binom(2n, n) / (n + 1). Throws std::domain_error if n < 0.
BigInt catalan(int n);

/// Classes with s = d-1: the structurally stable ones, C_{d-1}.
BigInt structurally_stable_count(int degree);

struct CountTable {
    int degree = 1;
    BigInt total;
    std::vector<BigInt> by_dimension;     // empty unless requested
    std::map<TypeKey, BigInt> by_type;    // empty unless requested
};

CountTable count_table(int degree, bool with_dimension, bool with_type);

}  // namespace vfcomb

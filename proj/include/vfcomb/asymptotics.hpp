#pragma once

// Growth constants and the dimension distribution pi_{d,q} = c_{d,q}/c_d.
//
// The singularity of the counting series sits at R = (5*sqrt5 - 11)/2,
// so c_d grows like (1/R)^d ~ 11.09^d. Mean and variance of the
// dimension grow linearly, mu_d ~ kappa*d and sigma^2_d ~ lambda*d, with
//   kappa  = -rho'(1)/rho(1)                              = 3(3 - sqrt5)/2
//   lambda = -rho''(1)/rho(1) - rho'(1)/rho(1) + (rho'(1)/rho(1))^2
//          = (29*sqrt5 - 60)/10.
// All constants are exact in Q(sqrt5); doubles appear only when reporting.

#include <string>
#include <vector>

#include "vfcomb/exact.hpp"

namespace vfcomb {

/// a + b*sqrt(5) with rational a, b.
class Surd5 {
public:
    Surd5() = default;
    Surd5(Rational rational, Rational surd = 0);
    Surd5(long rational, long surd = 0) : Surd5(Rational(rational), Rational(surd)) {}

    const Rational& rational() const noexcept { return a_; }
    const Rational& surd() const noexcept { return b_; }

    /// -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;
    std::string to_string() const;

    Surd5 conjugate() const { return {a_, -b_}; }
    /// a^2 - 5 b^2
    Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

    Surd5& operator+=(const Surd5& rhs);
    Surd5& operator-=(const Surd5& rhs);
    Surd5& operator*=(const Surd5& rhs);
    /// Throws std::domain_error on division by zero.
    Surd5& operator/=(const Surd5& rhs);

    friend Surd5 operator+(Surd5 lhs, const Surd5& rhs) { return lhs += rhs; }
    friend Surd5 operator-(Surd5 lhs, const Surd5& rhs) { return lhs -= rhs; }
    friend Surd5 operator*(Surd5 lhs, const Surd5& rhs) { return lhs *= rhs; }
    friend Surd5 operator/(Surd5 lhs, const Surd5& rhs) { return lhs /= rhs; }
    friend Surd5 operator-(const Surd5& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const Surd5& x, const Surd5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const Surd5& x, const Surd5& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Surd5& x, const Surd5& y) { return y < x; }

private:
    Rational a_{0};
    Rational b_{0};
};

struct AsymptoticConstants {
    Surd5 radius;              // R, positive
    Surd5 growth;              // 1/R
    Surd5 rho;                 // rho(1) = R
    Surd5 rho_prime;           // rho'(1)
    Surd5 rho_second;          // rho''(1)
    Surd5 kappa;               // mean slope
    Surd5 lambda;              // variance slope
};

AsymptoticConstants exact_constants();

struct DistributionStats {
    int degree = 1;
    Rational mean;
    Rational variance;
    std::vector<Rational> mass;  // pi_{d,q}, q = 0..2(d-1)
};

/// Throws std::domain_error if d < 1.
DistributionStats stats(int degree);

/// c_d / c_{d-1}. Throws std::domain_error if d < 2.
Rational ratio(int degree);

/// Kolmogorov distance between the standardized dimension distribution
/// and the standard normal, taking both one-sided limits at every atom.
/// Throws std::domain_error if d < 2 (zero variance).
double normality_distance(int degree);
double normality_distance(const DistributionStats& stats);

/// Standard normal CDF via erfc; relative error near machine precision.
double normal_cdf(double x);

}  // namespace vfcomb

#include "vfcomb/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vfcomb/counting.hpp"

namespace vfcomb {

Surd5::Surd5(Rational rational, Rational surd) : a_(std::move(rational)), b_(std::move(surd)) {
    a_.canonicalize();
    b_.canonicalize();
}

int Surd5::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with 5 b^2.
    const int cmp = ::cmp(Rational(a_ * a_), Rational(5 * b_ * b_));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

double Surd5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string Surd5::to_string() const {
    return vfcomb::to_string(a_) + " + " + vfcomb::to_string(b_) + "*sqrt5";
}

Surd5& Surd5::operator+=(const Surd5& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

Surd5& Surd5::operator-=(const Surd5& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

Surd5& Surd5::operator*=(const Surd5& rhs) {
    Rational a = a_ * rhs.a_ + 5 * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Surd5& Surd5::operator/=(const Surd5& rhs) {
    // sqrt5 is irrational, so the norm vanishes only for zero.
    const Rational n = rhs.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt5)");
    *this *= rhs.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

AsymptoticConstants exact_constants() {
    AsymptoticConstants c;
    c.radius = Surd5(Rational(-11, 2), Rational(5, 2));
    c.growth = Surd5(1) / c.radius;
    c.rho = c.radius;
    c.rho_prime = Surd5(Rational(87, 2), Rational(-39, 2));
    c.rho_second = (Surd5(702) * c.rho + Surd5(716) * c.rho_prime) / Surd5(-60);
    c.kappa = Surd5(Rational(9, 2), Rational(-3, 2));
    c.lambda = Surd5(Rational(-6), Rational(29, 10));
    return c;
}

DistributionStats stats(int degree) {
    if (degree < 1) throw std::domain_error("degree must be at least 1");
    const auto counts = dimension_distribution(degree);
    BigInt total = 0;
    for (const auto& c : counts) total += c;

    DistributionStats out;
    out.degree = degree;
    Rational first(0), second(0);
    for (std::size_t q = 0; q < counts.size(); ++q) {
        Rational p(counts[q], total);
        p.canonicalize();
        first += p * static_cast<long>(q);
        second += p * static_cast<long>(q * q);
        out.mass.push_back(std::move(p));
    }
    out.mean = first;
    out.variance = second - first * first;
    out.mean.canonicalize();
    out.variance.canonicalize();
    return out;
}

Rational ratio(int degree) {
    if (degree < 2) throw std::domain_error("ratio needs d >= 2");
    Rational r(c_total(degree), c_total(degree - 1));
    r.canonicalize();
    return r;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normality_distance(const DistributionStats& s) {
    if (s.variance <= 0) throw std::domain_error("zero variance: distribution is a point mass");
    const double mean = s.mean.get_d();
    const double sd = std::sqrt(s.variance.get_d());
    // Accumulate the CDF exactly and convert once per atom.
    Rational cdf(0);
    double distance = 0.0;
    for (std::size_t q = 0; q < s.mass.size(); ++q) {
        const double phi = normal_cdf((static_cast<double>(q) - mean) / sd);
        distance = std::max(distance, std::abs(cdf.get_d() - phi));
        cdf += s.mass[q];
        distance = std::max(distance, std::abs(cdf.get_d() - phi));
    }
    return std::clamp(distance, 0.0, 1.0);
}

double normality_distance(int degree) {
    if (degree < 2) throw std::domain_error("normality needs d >= 2");
    return normality_distance(stats(degree));
}

}  // namespace vfcomb

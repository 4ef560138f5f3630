#include "geodcount/specfun.hpp"

#include <cmath>

namespace geodcount::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

SmoothingParams SmoothingParams::make(double X, double D) {
    if (!(X > 1.0)) throw ParameterError("SmoothingParams: X must be > 1");
    if (!(D > 0.0 && D < 1.0)) throw ParameterError("SmoothingParams: D must be in (0,1)");
    SmoothingParams p;
    p.X = X;
    p.D = D;
    p.Y = D * X;
    p.R2 = (X + p.Y) * (X + p.Y) - 1.0;
    p.r2 = X * X - 1.0;
    p.R = std::sqrt(p.R2);
    p.r = std::sqrt(p.r2);
    p.H = p.R2 - p.r2;
    p.a = (3.0 * kSqrt2 / 8.0) *
          ((p.R * std::log(p.R) - p.r * std::log(p.r)) / (p.R - p.r) - 0.5 * std::log(2.0));
    p.b = 1.0 / kSqrt2 - 3.0 * p.a;
    p.M = p.R / (p.R - p.r);
    p.Bc = 1.0 / (p.R - p.r);
    return p;
}

TestFunction::TestFunction(TestKind kind, SmoothingParams params) : kind_(kind), p_(params) {}

double TestFunction::support_end() const {
    return kind_ == TestKind::F4 ? p_.R2 + 1.0 : p_.R2;
}

std::vector<double> TestFunction::kinks() const {
    if (kind_ == TestKind::F4) return {3.0, p_.r2 + 1.0, p_.R2 + 1.0};
    return {p_.r2, p_.R2};
}

namespace {

double sqrt_pos(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

}  // namespace

double TestFunction::value(double x) const {
    const auto& p = p_;
    switch (kind_) {
        case TestKind::F1: {
            if (x < 1.0 || x >= p.R2) return 0.0;
            double base = 2.0 / (kPi * p.H) * std::sqrt(x - 1.0);
            if (x <= p.r2) return base * (std::sqrt(p.R2 - x) - sqrt_pos(p.r2 - x));
            return base * std::sqrt(p.R2 - x);
        }
        case TestKind::F3: {
            if (x < 1.0 || x >= p.R2) return 0.0;
            double base = 2.0 / (kPi * p.H);
            if (x <= p.r2) return base * (std::sqrt(p.R2 - x) - sqrt_pos(p.r2 - x));
            return base * std::sqrt(p.R2 - x);
        }
        case TestKind::F4: {
            if (x <= 1.0 || x >= p.R2 + 1.0) return 0.0;
            double w = std::sqrt(x - 1.0);
            return f4_F(w) / w;
        }
    }
    return 0.0;
}

double TestFunction::prime(double x) const {
    const auto& p = p_;
    switch (kind_) {
        case TestKind::F1: {
            if (x <= 1.0 || x >= p.R2) return 0.0;
            double s1 = std::sqrt(p.R2 - x);
            double root = std::sqrt(x - 1.0);
            double c = 2.0 / (kPi * p.H);
            if (x < p.r2) {
                double s2 = std::sqrt(p.r2 - x);
                return c * ((s1 - s2) / (2.0 * root) + root * (-0.5 / s1 + 0.5 / s2));
            }
            return c * (s1 / (2.0 * root) - root * 0.5 / s1);
        }
        case TestKind::F3: {
            if (x <= 1.0 || x >= p.R2) return 0.0;
            double c = 2.0 / (kPi * p.H);
            if (x < p.r2) return c * (-0.5 / std::sqrt(p.R2 - x) + 0.5 / std::sqrt(p.r2 - x));
            return c * (-0.5 / std::sqrt(p.R2 - x));
        }
        case TestKind::F4: {
            if (x <= 1.0 || x >= p.R2 + 1.0) return 0.0;
            double w = std::sqrt(x - 1.0);
            double F = f4_F(w), Fp = f4_Fprime(w);
            return (Fp / w - F / (w * w)) / (2.0 * w);
        }
    }
    return 0.0;
}

double TestFunction::fb(double x) const {
    return x <= 1.0 ? 0.0 : std::sqrt(x - 1.0) * value(x);
}

double TestFunction::fc(double x) const {
    if (kind_ == TestKind::F4) {
        // f + 2(x-1) f' collapses to the four-piece display F'(sqrt(x-1))
        if (x <= 1.0 || x >= p_.R2 + 1.0) return 0.0;
        return f4_Fprime(std::sqrt(x - 1.0));
    }
    return value(x) + 2.0 * (x - 1.0) * prime(x);
}

// A_c(x) = int sqrt(c^2-x^2)/x dx = S_c - c log((c+S_c)/x); the log x part is
// split off where it cancels so the x -> 0 piece stays stable.
namespace {

double S_of(double c, double x) { return std::sqrt(std::max(c * c - x * x, 0.0)); }
double A_of(double c, double x) {
    double S = S_of(c, x);
    return S - c * std::log((c + S) / x);
}
double A_nolog(double c, double x) {  // A_c(x) - c log x
    double S = S_of(c, x);
    return S - c * std::log(c + S);
}

}  // namespace

double TestFunction::f4_F(double x) const {
    const auto& p = p_;
    if (x <= 0.0 || x >= p.R) return 0.0;
    if (x > p.r) return A_of(p.R, x) / (kPi * (p.R - p.r));
    if (x > kSqrt2) return (A_of(p.R, x) - A_of(p.r, x)) / (kPi * (p.R - p.r));
    // log x coefficients cancel exactly between the bracket and the sqrt2 term
    double g = (A_nolog(p.R, x) - A_nolog(p.r, x)) / (kPi * (p.R - p.r)) -
               kSqrt2 * A_nolog(kSqrt2, x) / (2.0 * kPi);
    return g + (2.0 * p.a / (3.0 * kPi)) * std::pow(2.0 - x * x, 1.5);
}

double TestFunction::f4_Fprime(double x) const {
    const auto& p = p_;
    if (x <= 0.0 || x >= p.R) return 0.0;
    if (x > p.r) return S_of(p.R, x) / (kPi * x * (p.R - p.r));
    if (x > kSqrt2) return (S_of(p.R, x) - S_of(p.r, x)) / (kPi * x * (p.R - p.r));
    return (S_of(p.R, x) - S_of(p.r, x)) / (kPi * x * (p.R - p.r)) -
           (kSqrt2 + 4.0 * p.a * x * x) / (2.0 * kPi * x) * S_of(kSqrt2, x);
}

double f4_target(double u, const SmoothingParams& p) {
    if (u < 1.0) throw ParameterError("f4_target: u must be >= 1");
    if (u <= 3.0) return p.a * u + p.b;
    if (u <= p.r2 + 1.0) return 1.0 / std::sqrt(u - 1.0);
    if (u <= p.R2 + 1.0) return p.M / std::sqrt(u - 1.0) - p.Bc;
    return 0.0;
}

} // namespace geodcount::specfun

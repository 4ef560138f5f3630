#include "geodcount/specfun.hpp"

#include <cmath>

namespace geodcount::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

bool near_nonpositive_integer(Complex z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double re = z.real();
    if (re > 0.5) return false;
    return std::abs(re - std::round(re)) < tol;
}

// log(sin(pi z)) without overflow for large |Im z| (branch only stable up to
// multiples of 2 pi i, which cancels in all Gamma-ratio uses).
Complex log_sin_pi(Complex z) {
    const Complex i(0.0, 1.0);
    if (z.imag() >= 0.0) {
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i)
        Complex w = std::exp(2.0 * i * kPi * z);
        return -i * kPi * z + std::log(1.0 - w) + Complex(-std::log(2.0), kPi / 2.0);
    }
    Complex w = std::exp(-2.0 * i * kPi * z);
    return i * kPi * z + std::log(1.0 - w) + Complex(-std::log(2.0), -kPi / 2.0);
}

// Lanczos g = 7, n = 9
const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

Complex log_gamma_lanczos(Complex z) {
    // valid for Re z > 0.5
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i - 1));
    Complex t = z + 6.5;
    return 0.5 * kLog2Pi + (z - 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("digamma: pole at non-positive integer");
    Complex result = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z); cot computed overflow-safely
        const Complex i(0.0, 1.0);
        Complex w = z.imag() >= 0.0 ? std::exp(2.0 * i * kPi * z) : std::exp(-2.0 * i * kPi * z);
        Complex cot = i * (w + 1.0) / (w - 1.0);
        if (z.imag() < 0.0) cot = -cot;
        result -= kPi * cot;
        z = 1.0 - z;
    }
    while (std::abs(z) < 16.0) {
        result -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series with Bernoulli numbers
    Complex inv = 1.0 / z, inv2 = inv * inv;
    static const double bern[7] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                   1.0 / 132, -691.0 / 32760, 1.0 / 12};
    Complex series = 0.0, pw = inv2;
    for (double c : bern) {
        series += c * pw;
        pw *= inv2;
    }
    return result + std::log(z) - 0.5 * inv - series;
}

} // namespace geodcount::specfun

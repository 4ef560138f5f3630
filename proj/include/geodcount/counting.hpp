#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "geodcount/group.hpp"
#include "geodcount/quadfield.hpp"

namespace geodcount::counting {

using quadfield::IdealCountTable;

// c_p = p + (2/p): p-1 for p = +-3 (mod 8), p+1 for p = +-1 (mod 8), p for p = 2.
std::int64_t c_p(std::int64_t p);

// (4p/c_p) (log eps / pi)^2
double main_coefficient(std::int64_t p);

// sum_{n <= X} N(n) N(pn + sign); requires the table sieved to p*X + 1.
std::int64_t correlation_sum(const IdealCountTable& table, std::int64_t p, int sign,
                             std::int64_t x_max);

struct CountReport {
    std::int64_t p = 0;
    std::int64_t x_max = 0;
    std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    // (mu, mu') cells over non-identity classes; identity (signs 0) bookkept
    // separately as +1 in n1/n4.
    std::int64_t nmumu[2][2] = {{0, 0}, {0, 0}};  // [mu=+1,-1][mu'=+1,-1]
    std::int64_t pairs_plus = 0, pairs_minus = 0;

    std::int64_t& cell(int mu, int mu_prime) {
        return nmumu[mu == 1 ? 0 : 1][mu_prime == 1 ? 0 : 1];
    }
    std::int64_t cell(int mu, int mu_prime) const {
        return nmumu[mu == 1 ? 0 : 1][mu_prime == 1 ? 0 : 1];
    }
};

// N_i from the double-coset enumeration, cross-checked exactly against the
// correlation pair counts (throws CrossCheckError on mismatch).
CountReport count_report(std::int64_t p, std::int64_t x_max);

// True when the correlation asymptotic has no intermediate X^{s_j} terms, so
// E = S - M is the full residual: p < 70 or p in {83, 101, 107, 109}.
bool middle_terms_vanish(std::int64_t p);

struct ErrorSeries {
    std::int64_t p = 0;
    int sign = 1;
    std::vector<double> xs, S, M, E;
    std::vector<std::int64_t> jumps;  // n with N(n) N(pn+sign) > 0 in range
    bool unmodeled_spectral_terms = false;  // set for p outside the verified list
};

ErrorSeries error_series(const IdealCountTable& table, std::int64_t p, int sign,
                         const std::vector<double>& xs);

// (1/X) int_X^{2X} |E(x)|^2 dx, exact piecewise integration (E is linear in x
// between consecutive integers).
double mean_square_error(const IdealCountTable& table, std::int64_t p, int sign, std::int64_t X);

// Core integrator for synthetic step functions: S given at integer arguments,
// E(x) = S(floor x) - coeff * x on [X, 2X].
double mean_square_piecewise(const std::function<double(std::int64_t)>& step, double coeff,
                             std::int64_t X);

struct ExponentFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double x_lo = 0.0, x_hi = 0.0;  // fitted window
    int points = 0;
};

// least-squares slope of log|E| vs log x (zeros dropped).
double exponent_fit(const std::vector<std::pair<double, double>>& samples);
ExponentFit exponent_fit_detailed(const std::vector<std::pair<double, double>>& samples);

// windowed-RMS variant: octave windows [x, 2x), RMS by exact integration,
// slope of log RMS vs log midpoint.
double exponent_fit_rms(const IdealCountTable& table, std::int64_t p, int sign, std::int64_t x_lo,
                        std::int64_t x_hi);
ExponentFit exponent_fit_rms_detailed(const IdealCountTable& table, std::int64_t p, int sign,
                                      std::int64_t x_lo, std::int64_t x_hi);

} // namespace geodcount::counting

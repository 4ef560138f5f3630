#include "geodcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geodcount::counting {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

} // namespace

std::int64_t c_p(std::int64_t p) {
    if (p < 2 || !quadfield::is_prime(static_cast<std::uint64_t>(p)))
        throw ParameterError("c_p: p must be prime");
    if (p == 2) return 2;
    switch (p % 8) {
        case 1: case 7: return p + 1;
        default: return p - 1;  // p = +-3 (mod 8)
    }
}

double main_coefficient(std::int64_t p) {
    double base = quadfield::kLogUnit / kPi;
    return 4.0 * double(p) / double(c_p(p)) * base * base;
}

std::int64_t correlation_sum(const IdealCountTable& table, std::int64_t p, int sign,
                             std::int64_t x_max) {
    if (sign != 1 && sign != -1) throw ParameterError("correlation_sum: sign must be +-1");
    if (x_max < 0) throw ParameterError("correlation_sum: x_max must be >= 0");
    if (x_max > 0 && table.limit < static_cast<std::uint64_t>(p * x_max + 1))
        throw SieveRangeError("correlation_sum: table not sieved to p*x_max + 1");
    std::int64_t total = 0;
    for (std::int64_t n = 1; n <= x_max; ++n) {
        std::int64_t m = p * n + sign;
        if (m < 1) continue;
        total += std::int64_t(table.counts[n - 1]) * std::int64_t(table.counts[m - 1]);
    }
    return total;
}

CountReport count_report(std::int64_t p, std::int64_t x_max) {
    if (x_max < 1) throw ParameterError("count_report: x_max must be >= 1");
    CountReport rep;
    rep.p = p;
    rep.x_max = x_max;

    // route (i): double-coset enumeration
    auto classes = group::enumerate_double_cosets(p, x_max);
    std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    for (const auto& c : classes) {
        ++n1;
        n2 += c.mu;
        n3 += c.mu_prime;
        if (c.is_identity()) n4 += 1;  // sign(ad) = sign(1) for the identity
        else {
            n4 += c.branch;
            rep.cell(c.mu, c.mu_prime) += 1;
        }
    }
    rep.n1 = n1;
    rep.n2 = n2;
    rep.n3 = n3;
    rep.n4 = n4;

    // route (ii): correlation pair counts via the four-to-one map
    auto table = quadfield::ideal_count_sieve(static_cast<std::uint64_t>((x_max + 1) / 2 + 1));
    std::int64_t plus = 0, minus = 0;
    for (std::int64_t m = 1; 2 * p * m - 1 <= x_max; ++m) {
        std::int64_t na = p * m - 1;
        if (na >= 1)
            minus += std::int64_t(table.at(static_cast<std::uint64_t>(m))) *
                     std::int64_t(table.at(static_cast<std::uint64_t>(na)));
    }
    for (std::int64_t m = 1; 2 * p * m + 1 <= x_max; ++m)
        plus += std::int64_t(table.at(static_cast<std::uint64_t>(m))) *
                std::int64_t(table.at(static_cast<std::uint64_t>(p * m + 1)));
    rep.pairs_plus = plus;
    rep.pairs_minus = minus;

    if (n1 != 4 * (plus + minus) + 1)
        throw CrossCheckError("count_report: N1 != 4(plus+minus) + 1");
    if (n4 != 4 * (plus - minus) + 1)
        throw CrossCheckError("count_report: N4 != 4(plus-minus) + 1");
    if (n2 != 0 || n3 != 0)
        throw CrossCheckError("count_report: N2, N3 must vanish by fiber cancellation");
    for (int mu : {1, -1})
        for (int mp : {1, -1}) {
            std::int64_t expect = ((n1 - 1) + mu * n2 + mp * n3 + mu * mp * (n4 - 1)) / 4;
            if (rep.cell(mu, mp) != expect)
                throw CrossCheckError("count_report: N^{mu,mu'} mismatch");
        }
    return rep;
}

bool middle_terms_vanish(std::int64_t p) {
    return p < 70 || p == 83 || p == 101 || p == 107 || p == 109;
}

ErrorSeries error_series(const IdealCountTable& table, std::int64_t p, int sign,
                         const std::vector<double>& xs) {
    ErrorSeries es;
    es.p = p;
    es.sign = sign;
    es.unmodeled_spectral_terms = !middle_terms_vanish(p);
    if (xs.empty()) return es;
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw ParameterError("error_series: xs must be increasing");
    double coeff = main_coefficient(p);
    auto x_hi = static_cast<std::int64_t>(std::floor(xs.back()));
    if (x_hi > 0 && table.limit < static_cast<std::uint64_t>(p * x_hi + 1))
        throw SieveRangeError("error_series: table not sieved to p*x + 1");
    std::int64_t n = 0;
    std::int64_t S = 0;
    for (double x : xs) {
        auto fx = static_cast<std::int64_t>(std::floor(x));
        for (; n < fx; ) {
            ++n;
            std::int64_t m = p * n + sign;
            if (m < 1) continue;
            std::int64_t term =
                std::int64_t(table.counts[n - 1]) * std::int64_t(table.counts[m - 1]);
            if (term > 0) {
                S += term;
                es.jumps.push_back(n);
            }
        }
        es.xs.push_back(x);
        es.S.push_back(double(S));
        es.M.push_back(coeff * x);
        es.E.push_back(double(S) - coeff * x);
    }
    return es;
}

double mean_square_piecewise(const std::function<double(std::int64_t)>& step, double coeff,
                             std::int64_t X) {
    if (X < 1) throw ParameterError("mean_square_piecewise: X must be >= 1");
    // on [n, n+1): E(x) = step(n) - coeff x; integral of E^2 is a cubic
    std::vector<double> parts;
    parts.reserve(static_cast<std::size_t>(X));
    for (std::int64_t n = X; n < 2 * X; ++n) {
        double K = step(n);
        double a = double(n), b = double(n + 1);
        double Ea = K - coeff * a, Eb = K - coeff * b;
        double piece;
        if (coeff == 0.0) {
            piece = K * K;
        } else {
            piece = (Ea * Ea * Ea - Eb * Eb * Eb) / (3.0 * coeff);
        }
        parts.push_back(piece);
    }
    return pairwise_sum(parts, 0, parts.size()) / double(X);
}

double mean_square_error(const IdealCountTable& table, std::int64_t p, int sign, std::int64_t X) {
    if (X < 1) throw ParameterError("mean_square_error: X must be >= 1");
    if (table.limit < static_cast<std::uint64_t>(2 * p * X + 1))
        throw SieveRangeError("mean_square_error: table not sieved to 2pX + 1");
    // prefix S(n) for n in [X, 2X]
    std::int64_t S = 0;
    for (std::int64_t n = 1; n <= X; ++n) {
        std::int64_t m = p * n + sign;
        if (m < 1) continue;
        S += std::int64_t(table.counts[n - 1]) * std::int64_t(table.counts[m - 1]);
    }
    std::vector<double> Svals;
    Svals.reserve(static_cast<std::size_t>(X));
    for (std::int64_t n = X; n < 2 * X; ++n) {
        if (n > X) {
            std::int64_t m = p * n + sign;
            S += std::int64_t(table.counts[n - 1]) * std::int64_t(table.counts[m - 1]);
        }
        Svals.push_back(double(S));
    }
    double coeff = main_coefficient(p);
    return mean_square_piecewise(
        [&](std::int64_t n) { return Svals[static_cast<std::size_t>(n - X)]; }, coeff, X);
}

namespace {

ExponentFit loglog_fit(const std::vector<std::pair<double, double>>& pts) {
    ExponentFit fit;
    fit.points = int(pts.size());
    double mx = 0, my = 0;
    for (const auto& [lx, ly] : pts) { mx += lx; my += ly; }
    mx /= double(pts.size());
    my /= double(pts.size());
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [lx, ly] : pts) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
        syy += (ly - my) * (ly - my);
    }
    if (sxx == 0.0) throw DegenerateFitError("exponent_fit: degenerate abscissae");
    fit.slope = sxy / sxx;
    if (pts.size() > 2) {
        double resid = std::max(0.0, syy - fit.slope * sxy);
        fit.stderr_slope = std::sqrt(resid / (double(pts.size()) - 2.0) / sxx);
    }
    fit.x_lo = std::exp(pts.front().first);
    fit.x_hi = std::exp(pts.back().first);
    return fit;
}

} // namespace

ExponentFit exponent_fit_detailed(const std::vector<std::pair<double, double>>& samples) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, v] : samples) {
        double av = std::abs(v);
        if (x > 0.0 && av > 0.0) pts.emplace_back(std::log(x), std::log(av));
    }
    if (pts.size() < 10) throw DegenerateFitError("exponent_fit: needs >= 10 positive samples");
    return loglog_fit(pts);
}

double exponent_fit(const std::vector<std::pair<double, double>>& samples) {
    return exponent_fit_detailed(samples).slope;
}

ExponentFit exponent_fit_rms_detailed(const IdealCountTable& table, std::int64_t p, int sign,
                                      std::int64_t x_lo, std::int64_t x_hi) {
    std::vector<std::pair<double, double>> pts;
    for (std::int64_t x = x_lo; 2 * x <= x_hi; x *= 2) {
        double ms = mean_square_error(table, p, sign, x);
        double mid = double(x) * std::sqrt(2.0);
        pts.emplace_back(std::log(mid), 0.5 * std::log(ms));
    }
    if (pts.size() < 2) throw DegenerateFitError("exponent_fit_rms: too few windows");
    return loglog_fit(pts);
}

double exponent_fit_rms(const IdealCountTable& table, std::int64_t p, int sign, std::int64_t x_lo,
                        std::int64_t x_hi) {
    return exponent_fit_rms_detailed(table, p, sign, x_lo, x_hi).slope;
}

} // namespace geodcount::counting

// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "geodcount/counting.hpp"
#include "geodcount/geometry.hpp"
#include "geodcount/group.hpp"
#include "geodcount/quadfield.hpp"
#include "geodcount/specfun.hpp"
#include "geodcount/trace.hpp"
#include "geodcount/verify.hpp"

using namespace geodcount;
namespace sf = geodcount::specfun;
using sf::Complex;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s  (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion1_coset_dictionary() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t X : {50, 200, 1000}) {
            auto classes = group::enumerate_double_cosets(p, X);
            auto scan = group::lattice_scan_oracle(p, X, group::default_scan_height(p, X));
            if (classes.size() != scan.size()) pass = false;
            for (std::size_t i = 0; pass && i < classes.size(); ++i)
                if (!(classes[i].rep == scan[i].rep)) pass = false;
            // count_report cross-checks N1/N4 against correlation pair counts
            // exactly and throws on mismatch
            try {
                auto rep = counting::count_report(p, X);
                if (rep.n2 != 0 || rep.n3 != 0) pass = false;
                if (rep.n1 != 4 * (rep.pairs_plus + rep.pairs_minus) + 1) pass = false;
                if (rep.n4 != 4 * (rep.pairs_plus - rep.pairs_minus) + 1) pass = false;
            } catch (const Error& e) {
                pass = false;
                detail = e.what();
            }
        }
    }
    double rt = seconds_since(t0);
    if (rt > 60.0) pass = false;
    report(1, "exact coset dictionary (enumeration = lattice scan = pair counts)", pass,
           detail.empty() ? "p in {2,3,5,7}, X in {50,200,1000}, " + std::to_string(rt) + "s"
                          : detail);
}

struct BigTables {
    quadfield::IdealCountTable t3, t5;
};

void criterion2_main_term(const BigTables& tables) {
    bool pass = true;
    char buf[256];
    std::string detail;
    const std::int64_t X = 10000000;
    for (std::int64_t p : {3, 5}) {
        const auto& table = p == 3 ? tables.t3 : tables.t5;
        double coeff = counting::main_coefficient(p);
        for (int sign : {1, -1}) {
            auto S = counting::correlation_sum(table, p, sign, X);
            double relerr = std::abs(double(S) / double(X) - coeff) / coeff;
            std::snprintf(buf, sizeof(buf), "p=%lld %c: S/X=%.6f main=%.6f rel=%.2e; ",
                          (long long)p, sign > 0 ? '+' : '-', double(S) / double(X), coeff,
                          relerr);
            detail += buf;
            if (relerr > 0.05) pass = false;
        }
    }
    // c_p from the closed form for all primes <= 100
    for (std::int64_t p = 2; p <= 100; ++p) {
        if (!quadfield::is_prime(std::uint64_t(p))) continue;
        std::int64_t want = p == 2 ? 2 : (p % 8 == 1 || p % 8 == 7 ? p + 1 : p - 1);
        if (counting::c_p(p) != want) pass = false;
    }
    report(2, "correlation main term 4p/c_p (log eps/pi)^2 at X = 1e7", pass, detail);
}

void criterion3_error_exponent(const BigTables& tables) {
    bool pass = true;
    std::string detail;
    char buf[128];
    for (std::int64_t p : {3, 5}) {
        const auto& table = p == 3 ? tables.t3 : tables.t5;
        for (int sign : {1, -1}) {
            double slope = counting::exponent_fit_rms(table, p, sign, 10000, 10000000);
            std::snprintf(buf, sizeof(buf), "p=%lld %c: slope=%.4f; ", (long long)p,
                          sign > 0 ? '+' : '-', slope);
            detail += buf;
            if (slope < 0.40 || slope > 0.72) pass = false;
        }
    }
    report(3, "windowed-RMS error exponent in [0.40, 0.72] over [1e4, 1e7]", pass, detail);
}

void criterion4_mean_square(const BigTables& tables) {
    bool pass = true;
    std::string detail;
    char buf[128];
    for (int sign : {1, -1}) {
        std::vector<double> ratios;
        for (std::int64_t X : {10000, 30000, 100000, 300000, 1000000}) {
            double ms = counting::mean_square_error(tables.t3, 3, sign, X);
            double env = double(X) * std::log(double(X)) * std::log(double(X));
            ratios.push_back(ms / env);
        }
        double mx = *std::max_element(ratios.begin(), ratios.end());
        std::snprintf(buf, sizeof(buf), "%c: ratios max=%.4g last/first=%.3f; ",
                      sign > 0 ? '+' : '-', mx, ratios.back() / ratios.front());
        detail += buf;
        if (mx > 1.0) pass = false;                          // bounded by a single constant
        if (ratios.back() > 2.0 * ratios.front()) pass = false;  // no upward trend
    }
    report(4, "mean square E^2 within X log^2 X envelope (p=3, both branches)", pass, detail);
}

void criterion5_geometry() {
    bool pass = true;
    int checked = 0;
    double worst_dist = 0.0, worst_tan = 0.0, worst_dtheta = 0.0;
    bool orient_ok = true;
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (const auto& cls : group::enumerate_double_cosets(p, 200)) {
            if (cls.is_identity() || checked >= 200) continue;
            ++checked;
            const auto& e = cls.rep;
            double want = std::acosh(std::max(double(std::abs(cls.b_value)), 1.0));
            worst_dist = std::max(worst_dist,
                                  std::abs(geometry::geodesic_line_distance_numeric(e) - want));
            auto [cw, side] = geometry::orientation_and_side(e);
            if (cw != cls.mu || side != cls.mu_prime) orient_ok = false;
            for (double theta : {-0.25, 0.0, 0.2}) {
                for (double y : {0.2, 1.0, 5.0}) {
                    worst_tan = std::max(worst_tan,
                                         std::abs(geometry::tan_v_closed(e, theta, y) -
                                                  geometry::tan_v_direct(e, theta, y)));
                }
            }
            double h = 1e-5;
            double fd =
                (geometry::tan_v_direct(e, h, 1.3) - geometry::tan_v_direct(e, -h, 1.3)) /
                (2.0 * h);
            worst_dtheta = std::max(worst_dtheta, std::abs(fd - double(cls.b_value)));
        }
    }
    if (checked < 200) pass = false;
    if (worst_dist > 1e-8) pass = false;
    if (!orient_ok) pass = false;
    if (worst_tan > 1e-10) pass = false;
    if (worst_dtheta > 1e-6) pass = false;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "%d elements: dist err %.2e, tan_v err %.2e, dtheta err %.2e, orientation %s",
                  checked, worst_dist, worst_tan, worst_dtheta, orient_ok ? "exact" : "MISMATCH");
    report(5, "geometry: numeric distance, orientation, tan v identities", pass, buf);
}

void criterion6_identity_suite() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string worst;
    for (const auto& r : verify::run_suite("specfun")) {
        if (!r.pass) {
            pass = false;
            worst += r.identity + " ";
        }
    }
    double rt = seconds_since(t0);
    if (rt > 120.0) pass = false;
    report(6, "special-function identity suite", pass,
           worst.empty() ? "all identities within tolerance, " + std::to_string(rt) + "s"
                         : "failing: " + worst);
}

void criterion7_envelopes() {
    bool pass = true;
    std::string detail;

    double wJ = 0.0, wK = 0.0, wa = 0.0;
    for (double t = 2.0; t <= 100.0; t *= 1.5) {
        auto ec = sf::expansion_coeffs(sf::SpectralParam::from_t(Complex(t)));
        wJ = std::max(wJ, std::abs(ec.gammaJ_s) * std::pow(t, 2.5));
        wK = std::max(wK, std::abs(ec.gammaK_s) * std::pow(t, 3.5));
    }
    for (double D : {0.05, 0.2})
        for (double t : {1.0, 3.0, 10.0, 40.0, 100.0}) {
            auto sc = sf::sieve_coeffs(t, D);
            wa = std::max(wa, std::abs(sc.a) * std::pow(t, 2.5) / std::min(1.0 / D, t));
            wa = std::max(wa, std::abs(sc.b) * std::pow(t, 3.5) / std::min(1.0 / D, t));
        }
    if (wJ > 1.0 || wK > 1.0 || wa > 1.0) pass = false;

    double w_e2a = 0, w_e1a = 0, w_e2b = 0, w_half = 0;
    for (double X : {100.0, 1000.0, 10000.0}) {
        auto p = sf::SmoothingParams::make(X, 0.1);
        sf::TestFunction f3(sf::TestKind::F3, p), f4(sf::TestKind::F4, p);
        for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
            auto sp = sf::SpectralParam::from_t(Complex(t));
            double d3 = std::abs(sf::d1_closed(f3, sp));
            double d4 = std::abs(sf::d1_closed(f4, sp));
            w_e2a = std::max(w_e2a, d3 * std::pow(t, 1.5) / std::sqrt(X));
            w_e1a = std::max(w_e1a, d3 * std::pow(t, 2.5) * p.Y / std::pow(X, 1.5));
            w_e2b = std::max(w_e2b, d4 * std::pow(t, 2.5) / std::sqrt(X));
        }
        auto sp0 = sf::SpectralParam::from_t(Complex(0.0));
        double env = std::sqrt(X) * std::log(X);
        w_half = std::max(w_half, std::abs(sf::d1_closed(f3, sp0)) / env);
        w_half = std::max(w_half, std::abs(sf::d1_closed(f4, sp0)) / env);
    }
    if (w_e2a > 2.0 || w_e1a > 4.0 || w_e2b > 2.0 || w_half > 3.0) pass = false;

    // K_s large-u expansion remainder: log-log slope in u within -1 +- 0.2
    auto sp = sf::SpectralParam::from_t(Complex(3.0));
    auto ec = sf::expansion_coeffs(sp);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (double u : {10.0, 20.0, 40.0, 80.0}) {
        Complex rhs = -ec.gammaK_s * sf::G_K(u, sp.s) * std::pow(u, 2.0 - sp.s) -
                      ec.gammaK_1ms * sf::G_K(u, 1.0 - sp.s) * std::pow(u, sp.s + 1.0) -
                      u * std::log(u) / (kPi * sp.lambda) + ec.C * u;
        double res = std::abs(sf::Ks(u, sp) - rhs);
        double lx = std::log(u), ly = std::log(res);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; n += 1.0;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (std::abs(slope + 1.0) > 0.2) pass = false;

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "gammaJ %.3f gammaK %.3f sieve %.3f | est2a %.3f est1a %.3f est2b %.3f "
                  "half %.3f | remainder slope %.3f",
                  wJ, wK, wa, w_e2a, w_e1a, w_e2b, w_half, slope);
    report(7, "asymptotic envelopes bounded; expansion remainder decays like 1/u", pass, buf);
}

void criterion8_trace() {
    bool pass = true;
    double worst = 0.0, worst_ratio = 0.0;
    for (std::int64_t p : {2, 3, 5}) {
        for (double X : {10.0, 20.0, 40.0}) {
            auto params = sf::SmoothingParams::make(X, 0.3);
            sf::TestFunction f3(sf::TestKind::F3, params);
            sf::TestFunction f4(sf::TestKind::F4, params);
            auto rb = trace::geometric_side(trace::Kind::B, f3, p, 1e-11);
            worst = std::max(worst, std::abs(rb.value_closed - rb.value_direct) /
                                        (1.0 + std::abs(rb.value_closed)));
            auto rc = trace::geometric_side(trace::Kind::C, f4, p, 1e-11);
            worst = std::max(worst, std::abs(rc.value_closed - rc.value_direct) /
                                        (1.0 + std::abs(rc.value_closed)));
        }
        for (double X : {20.0, 50.0}) {
            auto rep = trace::smoothed_count_check(p, X, 0.2);
            worst_ratio = std::max(worst_ratio, rep.ratio);
        }
    }
    if (worst > 1e-6) pass = false;
    if (worst_ratio > 10.0) pass = false;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "closed vs direct rel err %.2e; smoothed ratio max %.3f",
                  worst, worst_ratio);
    report(8, "trace geometric side: coset integrals vs double-coset sums", pass, buf);
}

void criterion9_oracles() {
    bool pass = true;
    auto table = quadfield::ideal_count_sieve(1000000);
    for (std::uint64_t n = 1; n <= 10000; ++n)
        if (table.at(n) != quadfield::ideal_count_bruteforce(n)) pass = false;
    for (std::uint64_t m = 1; m <= 1000; ++m)
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (table.at(m * n) != std::uint32_t(table.at(m)) * table.at(n)) pass = false;
        }
    report(9, "sieve equals norm-form brute force; multiplicativity on coprime pairs", pass,
           "n <= 1e4 oracle, all coprime pairs m,n <= 1e3");
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion1_coset_dictionary();
    criterion5_geometry();
    criterion6_identity_suite();
    criterion7_envelopes();
    criterion8_trace();
    criterion9_oracles();

    std::printf("building ideal-count tables to 3e7 and 5e7...\n");
    std::fflush(stdout);
    BigTables tables;
    tables.t3 = quadfield::ideal_count_sieve(30000001);
    tables.t5 = quadfield::ideal_count_sieve(50000001);
    criterion2_main_term(tables);
    criterion3_error_exponent(tables);
    criterion4_mean_square(tables);

    std::printf("%s (%d failure%s, %.1fs total)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures, failures == 1 ? "" : "s", seconds_since(t0));
    return failures == 0 ? 0 : 1;
}


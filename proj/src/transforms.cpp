#include "geodcount/specfun.hpp"
#include "geodcount/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace geodcount::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

std::vector<double> x_breaks_from_t(const std::vector<double>& t_breaks) {
    std::vector<double> xb;
    for (double t : t_breaks)
        if (t > 1.0) xb.push_back(std::sqrt(t - 1.0));
    return xb;
}

} // namespace

double g_transform(double u, const std::function<double(double)>& h, double support_end,
                   const std::vector<double>& t_breaks, double abs_tol) {
    double base = std::max(u, 1.0);
    if (base >= support_end) return 0.0;
    double W = std::sqrt(support_end - base);
    // t = base + w^2 gives sqrt(t-u) sqrt(t-1) = w sqrt(off + w^2), off = |u-1|
    double off = std::abs(u - 1.0);
    std::vector<double> wb;
    for (double t : t_breaks)
        if (t > base && t < support_end) wb.push_back(std::sqrt(t - base));
    auto integrand = [&](double w) { return 2.0 * h(base + w * w) / std::sqrt(off + w * w); };
    if (off > 0.0) return integrate(integrand, 0.0, W, abs_tol, 10000, wb);
    // u == 1: both singularities coincide; the substituted integrand is
    // 2 h(1+w^2)/w, finite since every h here vanishes at t = 1
    return integrate(integrand, 1e-12 * W, W, abs_tol, 10000, wb);
}

double g_transform(double u, const TestFunction& f, char combo, double abs_tol) {
    std::function<double(double)> h;
    switch (combo) {
        case 'a': h = [&f](double t) { return f.value(t); }; break;
        case 'b': h = [&f](double t) { return f.fb(t); }; break;
        case 'c': h = [&f](double t) { return f.fc(t); }; break;
        default: throw ParameterError("g_transform: combo must be a, b or c");
    }
    return g_transform(u, h, f.support_end(), f.kinks(), abs_tol);
}

double g_inverse(double tval, const std::function<double(double)>& g_prime, double u_end,
                 const std::vector<double>& u_breaks, double abs_tol) {
    if (tval >= u_end) return 0.0;
    double W = std::sqrt(u_end - tval);
    std::vector<double> wb;
    for (double ub : u_breaks)
        if (ub > tval && ub < u_end) wb.push_back(std::sqrt(ub - tval));
    auto integrand = [&](double w) { return g_prime(tval + w * w); };
    return -(2.0 / kPi) * integrate(integrand, 0.0, W, abs_tol, 10000, wb);
}

double g_inverse_numeric(double tval, const std::function<double(double)>& g, double u_end,
                         const std::vector<double>& u_breaks, double abs_tol) {
    auto g_prime = [&](double u) {
        double step = 1e-3 * std::max(1.0, std::abs(u));
        // keep the 5-point stencil away from kinks in g'
        for (double ub : u_breaks) {
            double d = std::abs(u - ub);
            if (d < 3.0 * step && d > 1e-12) step = std::max(d / 3.0, 1e-7);
        }
        return (g(u - 2.0 * step) - 8.0 * g(u - step) + 8.0 * g(u + step) - g(u + 2.0 * step)) /
               (12.0 * step);
    };
    return g_inverse(tval, g_prime, u_end, u_breaks, abs_tol);
}

namespace {

Complex d_transform_impl(const TestFunction& f, const SpectralParam& sp, int weight,
                         double abs_tol) {
    double xmax = std::sqrt(std::max(f.support_end() - 1.0, 0.0));
    if (xmax == 0.0) return 0.0;
    std::vector<double> xb = x_breaks_from_t(f.kinks());
    std::vector<Complex> ha, hb;
    if (weight == 0) {
        ha = {sp.s / 2.0, (1.0 - sp.s) / 2.0};
        hb = {Complex(0.5)};
    } else {
        ha = {(sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0};
        hb = {Complex(1.5)};
    }
    auto integrand = [&](double x) -> Complex {
        double fx = f.value(1.0 + x * x);
        if (fx == 0.0) return 0.0;
        Complex kernel = hyp_auto(ha, hb, -x * x);
        return (weight == 0 ? 1.0 : x * x) * fx * kernel;
    };
    return integrate_c(integrand, 0.0, xmax, abs_tol, 10000, xb);
}

} // namespace

Complex d0_transform(const TestFunction& f, const SpectralParam& sp, double abs_tol) {
    return d_transform_impl(f, sp, 0, abs_tol);
}

Complex d1_transform(const TestFunction& f, const SpectralParam& sp, double abs_tol) {
    return d_transform_impl(f, sp, 1, abs_tol);
}

Complex d1_transform_ii(const TestFunction& f, const SpectralParam& sp, double abs_tol) {
    double xmax = std::sqrt(std::max(f.support_end() - 1.0, 0.0));
    if (xmax == 0.0) return 0.0;
    std::vector<Complex> ha = {Complex(1.0), (sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0};
    std::vector<Complex> hb = {Complex(2.0), Complex(1.5)};
    auto raw = [&](double x) -> Complex {
        double fcx = f.fc(1.0 + x * x);  // (x f(1+x^2))'
        if (fcx == 0.0) return 0.0;
        return -0.5 * x * x * fcx * hyp_auto(ha, hb, -x * x);
    };
    // fc of f3 has integrable 1/sqrt singularities at the kinks; integrate
    // piecewise with w^2 substitutions toward each kink
    std::vector<double> pts = x_breaks_from_t(f.kinks());
    pts.push_back(0.0);
    pts.push_back(xmax);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Complex total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (hi <= 0.0 || hi > xmax + 1e-12) continue;
        double mid = 0.5 * (lo + hi);
        // left half, singularity possibly at lo: x = lo + w^2
        auto left = [&](double w) { return raw(lo + w * w) * (2.0 * w); };
        total += integrate_c(left, 0.0, std::sqrt(mid - lo), abs_tol / 2, 10000);
        // right half, singularity possibly at hi: x = hi - w^2
        auto right = [&](double w) { return raw(hi - w * w) * (2.0 * w); };
        total += integrate_c(right, 0.0, std::sqrt(hi - mid), abs_tol / 2, 10000);
    }
    return total;
}

Complex Js(double u, const SpectralParam& sp) {
    if (u == 0.0) return 0.0;
    return (u * u / 8.0) *
           hyp_auto({(sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0}, {Complex(3.0)}, -u);
}

Complex Js_quadrature(double u, const SpectralParam& sp, double abs_tol) {
    std::vector<Complex> ha = {(sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0};
    std::vector<Complex> hb = {Complex(1.5)};
    auto integrand = [&](double theta) -> Complex {
        double sn = std::sin(theta), cs = std::cos(theta);
        return sn * sn * cs * cs * hyp_auto(ha, hb, -u * sn * sn);
    };
    return (2.0 * u * u / kPi) * integrate_c(integrand, 0.0, kPi / 2.0, abs_tol);
}

Complex Ks(double u, const SpectralParam& sp) {
    if (u == 0.0) return 0.0;
    return -(u * u * u / (6.0 * kPi)) *
           hyp_auto({Complex(1.0), Complex(1.0), (sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0},
                    {Complex(2.5), Complex(2.0), Complex(1.5)}, -u * u);
}

Complex Ks_quadrature(double u, const SpectralParam& sp, double abs_tol) {
    std::vector<Complex> ha = {Complex(1.0), (sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0};
    std::vector<Complex> hb = {Complex(2.0), Complex(1.5)};
    auto integrand = [&](double theta) -> Complex {
        double sn = std::sin(theta), cs = std::cos(theta);
        return sn * cs * cs * hyp_auto(ha, hb, -u * u * sn * sn);
    };
    return -(u * u * u / (2.0 * kPi)) * integrate_c(integrand, 0.0, kPi / 2.0, abs_tol);
}

Complex Ks_Rr(const SmoothingParams& params, const SpectralParam& sp) {
    return (8.0 * params.a * kSqrt2 / (15.0 * kPi)) *
           hyp_auto({Complex(1.0), (sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0},
                    {Complex(3.5), Complex(1.5)}, -2.0);
}

Complex Ks_Rr_quadrature(const SmoothingParams& params, const SpectralParam& sp, double abs_tol) {
    std::vector<Complex> ha = {Complex(1.0), (sp.s + 1.0) / 2.0, (2.0 - sp.s) / 2.0};
    std::vector<Complex> hb = {Complex(2.0), Complex(1.5)};
    auto integrand = [&](double theta) -> Complex {
        double sn = std::sin(theta), cs = std::cos(theta);
        return sn * sn * sn * cs * cs * hyp_auto(ha, hb, -2.0 * sn * sn);
    };
    return (4.0 * kSqrt2 * params.a / kPi) * integrate_c(integrand, 0.0, kPi / 2.0, abs_tol);
}

Complex d1_closed(const TestFunction& f, const SpectralParam& sp) {
    const auto& p = f.params();
    switch (f.kind()) {
        case TestKind::F3:
            // difference quotient of J_s at the exact arguments R^2-1, r^2-1
            return (Js(p.R2 - 1.0, sp) - Js(p.r2 - 1.0, sp)) / (p.R2 - p.r2);
        case TestKind::F4:
            return (Ks(p.R, sp) - Ks(p.r, sp)) / (p.R - p.r) - Ks(kSqrt2, sp) / kSqrt2 +
                   Ks_Rr(p, sp);
        default:
            throw ParameterError("d1_closed: closed form available for f3 and f4 only");
    }
}

Complex G_J(double u, Complex s) {
    return hyp_auto({(s + 1.0) / 2.0, (s - 3.0) / 2.0}, {s + 0.5}, -1.0 / u);
}

Complex G_K(double u, Complex s) {
    return hyp_auto({s / 2.0, s / 2.0 - 1.0, s / 2.0 - 0.5}, {s / 2.0 + 0.5, s + 0.5},
                    -1.0 / (u * u));
}

ExpansionCoeffs expansion_coeffs(const SpectralParam& sp) {
    Complex s = sp.s;
    if (std::abs(s - 0.5) < 1e-9)
        throw PoleError("expansion_coeffs: gamma_J, gamma_K have poles at s = 1/2");
    auto gammaJ = [](Complex s) {
        return std::exp(log_gamma(0.5 - s) - log_gamma(1.0 - s / 2.0) -
                        log_gamma(2.5 - s / 2.0)) / 4.0;
    };
    auto gammaK = [](Complex s) {
        return std::exp(2.0 * log_gamma((1.0 - s) / 2.0) + log_gamma(0.5 - s) -
                        2.0 * log_gamma(1.0 - s / 2.0) - log_gamma((3.0 - s) / 2.0) -
                        log_gamma(2.0 - s / 2.0)) / 16.0;
    };
    ExpansionCoeffs c;
    c.gammaJ_s = gammaJ(s);
    c.gammaJ_1ms = gammaJ(1.0 - s);
    c.gammaK_s = gammaK(s);
    c.gammaK_1ms = gammaK(1.0 - s);
    c.C = (-digamma(-s / 2.0) - digamma((s - 1.0) / 2.0) + digamma(Complex(1.5)) +
           digamma(Complex(0.5))) /
          (2.0 * kPi * sp.lambda);
    return c;
}

SieveCoeffs sieve_coeffs(double t, double D) {
    if (t == 0.0) throw ParameterError("sieve_coeffs: t must be non-zero");
    if (!(D > 0.0 && D < 1.0)) throw ParameterError("sieve_coeffs: D must be in (0,1)");
    SpectralParam sp = SpectralParam::from_t(Complex(t));
    ExpansionCoeffs ec = expansion_coeffs(sp);
    Complex s = sp.s;
    double dp1 = 1.0 + D;
    SieveCoeffs sc;
    sc.a = ec.gammaJ_1ms * (std::pow(dp1, 2.0 + s) - 1.0) / (dp1 * dp1 - 1.0);
    sc.b = -ec.gammaK_1ms * (std::pow(dp1, 1.0 + s) - 1.0) / D;
    return sc;
}

} // namespace geodcount::specfun

#include "geodcount/geometry.hpp"

#include <cmath>
#include <complex>

namespace geodcount::geometry {

using quadfield::embed;
using std::abs;

HPoint mobius_apply(const group::GroupElement& g, HPoint z) {
    std::complex<double> w(z.x, z.y);
    std::complex<double> num = embed(g.a()) * w + embed(g.b());
    std::complex<double> den = embed(g.c()) * w + embed(g.d());
    std::complex<double> r = num / den;
    return {r.real(), r.imag()};
}

HuberCoords huber_coords(HPoint z) {
    return {0.5 * std::log(z.x * z.x + z.y * z.y), -std::atan(z.x / z.y)};
}

HPoint huber_point(HuberCoords c) {
    double r = std::exp(c.u);
    return {-r * std::sin(c.v), r * std::cos(c.v)};
}

double point_distance(HPoint z, HPoint w) {
    double dx = z.x - w.x, dy = z.y - w.y;
    double c = 1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    return std::acosh(std::max(c, 1.0));
}

double dist_formula(const group::GroupElement& g) {
    double absB = double(std::abs(group::b_value(g)));
    return std::acosh(std::max(absB, 1.0));
}

namespace {

template <typename F>
double golden_min(F f, double lo, double hi, double tol, int max_iter, double& where) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int iter = 0;
    while (b - a > tol) {
        if (++iter > max_iter) throw ConvergenceError("golden_min: iteration cap reached");
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    where = 0.5 * (a + b);
    return std::min(f1, f2);
}

} // namespace

double geodesic_line_distance_numeric(const group::GroupElement& g, double tol, int max_iter) {
    // minimizer location: the feet of gamma l are a/c and b/d, so the closest
    // point of gamma l sits near height sqrt(a b / (c d)); bracket generously.
    double center = 0.0;
    double ac = embed(g.a()) / embed(g.c());
    double bd = embed(g.b()) / embed(g.d());
    double prod = ac * bd;
    if (prod > 0) center = 0.5 * std::log(prod);
    double lo = center - 25.0, hi = center + 25.0;

    auto outer = [&](double r1) {
        HPoint z{0.0, std::exp(r1)};
        auto inner = [&](double r2) {
            return point_distance(z, mobius_apply(g, HPoint{0.0, std::exp(r2)}));
        };
        double w;
        return golden_min(inner, lo, hi, tol, max_iter, w);
    };
    double w;
    return golden_min(outer, -25.0, 25.0, tol, max_iter, w);
}

std::pair<int, int> orientation_and_side(const group::GroupElement& g) {
    double foot1 = embed(g.a()) / embed(g.c());
    double foot2 = embed(g.b()) / embed(g.d());
    double diff = foot1 - foot2;
    int clockwise, side;
    double scale = std::max(std::abs(foot1), std::abs(foot2));
    if (std::abs(diff) < 1e-12 * scale) {
        // fall back to the exact sign of 1/(cd)
        clockwise = quadfield::sign(g.c()) * quadfield::sign(g.d());
    } else {
        clockwise = diff > 0 ? 1 : -1;
    }
    if (std::abs(foot1) < 1e-12 || std::abs(foot2) < 1e-12) {
        side = quadfield::sign(g.a()) * quadfield::sign(g.c());
    } else {
        int s1 = foot1 > 0 ? 1 : -1;
        int s2 = foot2 > 0 ? 1 : -1;
        if (s1 != s2) throw CrossCheckError("orientation_and_side: feet on opposite sides");
        side = s1;
    }
    return {clockwise, side};
}

double tan_v_closed(const group::GroupElement& g, double theta, double y) {
    double B = double(group::b_value(g));
    double ac = embed(quadfield::mul(g.a(), g.c()));
    double bd = embed(quadfield::mul(g.b(), g.d()));
    return B * std::tan(theta) - (ac * y + bd / y) / std::cos(theta);
}

double tan_v_direct(const group::GroupElement& g, double theta, double y) {
    // e^{i theta} * (i y), pushed through the Mobius chain in extended
    // precision so the oracle stays at absolute 1e-10 for |B| up to ~10^3
    using C = std::complex<long double>;
    const long double sqrt2 = 1.41421356237309504880168872420970L;
    auto embed_l = [&](quadfield::QuadInt q) {
        return (long double)q.x + (long double)q.y * sqrt2;
    };
    C z(-(long double)y * std::sin((long double)theta),
        (long double)y * std::cos((long double)theta));
    C num = embed_l(g.a()) * z + embed_l(g.b());
    C den = embed_l(g.c()) * z + embed_l(g.d());
    C w = num / den;
    return double(-w.real() / w.imag());
}

} // namespace geodcount::geometry

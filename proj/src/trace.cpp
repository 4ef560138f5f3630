#include "geodcount/trace.hpp"

#include <cmath>

#include "geodcount/quadrature.hpp"

namespace geodcount::trace {

using group::DoubleCosetClass;
using specfun::TestFunction;

double geodesic_length() { return 4.0 * quadfield::kLogUnit; }

namespace {

std::vector<DoubleCosetClass> contributing_classes(std::int64_t p, const TestFunction& f) {
    // g(B^2; h) = 0 once B^2 >= support_end
    auto x_max = static_cast<std::int64_t>(std::ceil(std::sqrt(f.support_end()))) + 1;
    return group::enumerate_double_cosets(p, x_max);
}

// integral over the class's y-support of w(y) = ac y + bd / y evaluated in
// log y; [y-, y+] solves |ac| y + |bd|/y = sqrt(support - 1).
double class_integral(const DoubleCosetClass& cls, const TestFunction& f, Order order,
                      double abs_tol) {
    const auto& e = cls.rep;
    double ac = quadfield::embed(quadfield::mul(e.a(), e.c()));
    double bd = quadfield::embed(quadfield::mul(e.b(), e.d()));
    double B = double(cls.b_value);
    double wmax2 = f.support_end() - 1.0;
    if (wmax2 <= 0.0) return 0.0;
    double wmax = std::sqrt(wmax2);
    double A = std::abs(ac);
    // |ac| y + |bd|/y has minimum 2 sqrt(|ac bd|) = sqrt(B^2 - 1)
    double disc = wmax2 - (B * B - 1.0);
    if (disc <= 0.0) return 0.0;
    double ylo = (wmax - std::sqrt(disc)) / (2.0 * A);
    double yhi = (wmax + std::sqrt(disc)) / (2.0 * A);
    // split where 1 + w(y)^2 crosses a kink of f (two roots per kink)
    std::vector<double> breaks;
    for (double t : f.kinks()) {
        double d = (t - 1.0) - (B * B - 1.0);
        if (d <= 0.0) continue;
        double s = std::sqrt(t - 1.0);
        for (double y : {(s - std::sqrt(d)) / (2.0 * A), (s + std::sqrt(d)) / (2.0 * A)}) {
            if (y > ylo && y < yhi) breaks.push_back(std::log(y));
        }
    }
    auto integrand = [&](double r) {
        double y = std::exp(r);
        double w = ac * y + bd / y;
        double arg = 1.0 + w * w;
        switch (order) {
            case Order::Weight0: return f.value(arg);
            case Order::Weight1: return -w * f.value(arg);
            case Order::Weight1Deriv: return B * (f.value(arg) + 2.0 * w * w * f.prime(arg));
        }
        return 0.0;
    };
    return specfun::integrate(integrand, std::log(ylo), std::log(yhi), abs_tol, 10000, breaks);
}

} // namespace

double direct_coset_integral(Order order, const TestFunction& f, std::int64_t p, double abs_tol) {
    auto classes = contributing_classes(p, f);
    std::vector<double> terms;
    for (const auto& cls : classes) {
        if (cls.is_identity()) continue;
        terms.push_back(class_integral(cls, f, order, abs_tol));
    }
    double sum = 0.0;
    for (double t : terms) sum += t;
    // identity coset: tan theta f(1/cos^2 theta) len(l) and its theta-derivative
    if (order == Order::Weight0 || order == Order::Weight1Deriv)
        sum += f.at_one() * geodesic_length();
    return sum;
}

GeometricSideResult geometric_side(Kind kind, const TestFunction& f, std::int64_t p,
                                   double abs_tol) {
    GeometricSideResult res;
    auto classes = contributing_classes(p, f);
    for (const auto& cls : classes) {
        if (cls.is_identity()) continue;
        double B2 = double(cls.b_value) * double(cls.b_value);
        double term = 0.0;
        switch (kind) {
            case Kind::A:
                term = specfun::g_transform(B2, f, 'a', abs_tol);
                break;
            case Kind::B:
                term = -double(cls.mu_prime) * specfun::g_transform(B2, f, 'b', abs_tol);
                break;
            case Kind::C:
                term = double(cls.b_value) * specfun::g_transform(B2, f, 'c', abs_tol);
                break;
        }
        if (term != 0.0) res.contributions.push_back({cls, term});
        res.value_closed += term;
    }
    if (kind != Kind::B) {
        res.g0_term = f.at_one() * geodesic_length();
        res.value_closed += res.g0_term;
    }
    Order order = kind == Kind::A   ? Order::Weight0
                  : kind == Kind::B ? Order::Weight1
                                    : Order::Weight1Deriv;
    res.value_direct = direct_coset_integral(order, f, p, abs_tol);
    return res;
}

SmoothedCountReport smoothed_count_check(std::int64_t p, double X, double D) {
    SmoothedCountReport rep;
    rep.p = p;
    rep.X = X;
    rep.D = D;
    auto params = specfun::SmoothingParams::make(X, D);
    TestFunction f4(specfun::TestKind::F4, params);
    rep.lhs = geometric_side(Kind::C, f4, p).value_closed;
    auto x_cut = static_cast<std::int64_t>(std::floor(X));
    auto classes = group::enumerate_double_cosets(p, x_cut);
    for (const auto& cls : classes) {
        if (cls.is_identity()) continue;
        if (std::abs(cls.b_value) < X) rep.sign_sum += cls.branch;
    }
    rep.residual = std::abs(rep.lhs - double(rep.sign_sum));
    rep.ratio = rep.residual / (params.Y + std::pow(X, 2.0 / 3.0));
    rep.pass = rep.ratio <= 10.0;
    return rep;
}

} // namespace geodcount::trace

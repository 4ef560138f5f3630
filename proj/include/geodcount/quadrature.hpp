#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "geodcount/errors.hpp"

namespace geodcount::specfun {

// Adaptive Gauss-Kronrod (G7/K15), worst-interval-first. Callers are expected
// to remove 1/sqrt endpoint singularities by substitution and to split at
// integrand kinks via the breakpoint list.
template <typename T>
T integrate_gk(const std::function<T(double)>& f, double a, double b, double abs_tol = 1e-10,
               int panel_cap = 10000, const std::vector<double>& breaks = {}) {
    static const double xk[8] = {
        0.0,
        0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
        0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
        0.9914553711208126};
    static const double wk[8] = {
        0.2094821410847278,
        0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
        0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
        0.0229353220105292};
    static const double wg[4] = {
        0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
        0.1294849661688697};

    struct Panel {
        double a, b, err;
        T val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    auto eval_panel = [&](double lo, double hi) {
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        T fc = f(c);
        T k = wk[0] * fc;
        T g = wg[0] * fc;
        for (int i = 1; i < 8; ++i) {
            T fl = f(c - h * xk[i]);
            T fr = f(c + h * xk[i]);
            k += wk[i] * (fl + fr);
            if (i % 2 == 0) g += wg[i / 2] * (fl + fr);
        }
        Panel p;
        p.a = lo; p.b = hi;
        p.val = h * k;
        p.err = std::abs(h * (k - g));
        return p;
    };

    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    std::priority_queue<Panel> heap;
    T total{};
    double total_err = 0.0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = eval_panel(pts[i], pts[i + 1]);
        total += p.val;
        total_err += p.err;
        heap.push(p);
        ++panels;
    }
    while (total_err > abs_tol && !heap.empty()) {
        if (panels >= panel_cap)
            throw QuadratureError("integrate_gk: panel cap reached before tolerance");
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1.0)) {
            // interval exhausted at machine resolution; accept its estimate
            continue;
        }
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(worst.a, mid);
        Panel right = eval_panel(mid, worst.b);
        total += left.val + right.val - worst.val;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return total;
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, int panel_cap = 10000,
                        const std::vector<double>& breaks = {}) {
    return integrate_gk<double>(f, a, b, abs_tol, panel_cap, breaks);
}

inline std::complex<double> integrate_c(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double abs_tol = 1e-10,
                                        int panel_cap = 10000,
                                        const std::vector<double>& breaks = {}) {
    return integrate_gk<std::complex<double>>(f, a, b, abs_tol, panel_cap, breaks);
}

} // namespace geodcount::specfun

#include "geodcount/specfun.hpp"
#include "geodcount/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace geodcount::specfun {

namespace {

bool near_integer(Complex z, double tol = 1e-5) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

bool near_nonpositive_int(Complex z, double tol = 1e-9) {
    return near_integer(z, tol) && z.real() < 0.5;
}

void check_lower_params(const std::vector<Complex>& b) {
    for (const Complex& bi : b)
        if (near_nonpositive_int(bi))
            throw ParameterError("pfq: lower parameter is a non-positive integer");
}

} // namespace

Complex pfq(const std::vector<Complex>& a, const std::vector<Complex>& b, Complex z, double tol,
            int max_terms) {
    check_lower_params(b);
    Complex sum = 1.0, term = 1.0;
    double peak = 1.0;
    int small_streak = 0;
    for (int n = 0; n < max_terms; ++n) {
        Complex factor = z / double(n + 1);
        for (const Complex& ai : a) factor *= ai + double(n);
        for (const Complex& bi : b) factor /= bi + double(n);
        term *= factor;
        sum += term;
        peak = std::max(peak, std::abs(term));
        if (term == Complex(0.0, 0.0)) return sum;  // terminating series
        if (std::abs(term) <= tol * std::abs(sum)) {
            if (++small_streak >= 2) {
                // terms that peaked ~1e12 above the result have cancelled away
                // all mantissa bits; fail loudly rather than return noise
                if (peak > 1e12 * std::max(std::abs(sum), 1e-300))
                    throw DivergenceError("pfq: catastrophic cancellation, precision exhausted");
                return sum;
            }
        } else {
            small_streak = 0;
        }
    }
    throw DivergenceError("pfq: term cap reached before tolerance");
}

namespace {

// 2F1 at real x <= 0 via the Pfaff transform: (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)).
Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, double x) {
    if (x == 0.0) return 1.0;
    double w = x / (x - 1.0);
    Complex f = pfq({a, c - b}, {c}, w);
    return std::pow(Complex(1.0 - x), -a) * f;
}

// One branch of DLMF 16.8.8 at perturbed upper parameters.
Complex connection_sum(const std::vector<Complex>& a, const std::vector<Complex>& b, double x) {
    const std::size_t p = a.size();
    double lx = std::log(-x);
    Complex total = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        Complex lg = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
            if (k == j) continue;
            lg += log_gamma(a[k] - a[j]) - log_gamma(a[k]);
        }
        for (const Complex& bk : b) lg += log_gamma(bk) - log_gamma(bk - a[j]);
        std::vector<Complex> ia, ib;
        ia.push_back(a[j]);
        for (const Complex& bk : b) ia.push_back(1.0 - bk + a[j]);
        for (std::size_t k = 0; k < p; ++k)
            if (k != j) ib.push_back(1.0 - a[k] + a[j]);
        Complex w = pfq(ia, ib, 1.0 / x);
        total += std::exp(lg - a[j] * lx) * w;
    }
    return total;
}

bool has_degenerate_pair(const std::vector<Complex>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (near_integer(a[i] - a[j])) return true;
    return false;
}

// shift members of each near-integer-difference cluster by 0, eps, 2 eps, ...
std::vector<Complex> perturb(const std::vector<Complex>& a, double eps) {
    std::vector<Complex> out = a;
    std::vector<int> group(a.size(), -1);
    int ngroups = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (group[i] >= 0) continue;
        group[i] = ngroups;
        int members = 0;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (group[j] < 0 && near_integer(a[i] - a[j])) {
                group[j] = ngroups;
                out[j] += double(++members) * eps;
            }
        }
        ++ngroups;
    }
    return out;
}

} // namespace

Complex hyp_large_arg(const std::vector<Complex>& a, const std::vector<Complex>& b, double x) {
    if (a.size() != b.size() + 1)
        throw ParameterError("hyp_large_arg: requires a (q+1)Fq function");
    if (x > -1.0) throw ParameterError("hyp_large_arg: requires x <= -1");
    check_lower_params(b);
    for (const Complex& aj : a)
        for (const Complex& bi : b)
            if (near_integer(aj - bi) && (aj - bi).real() > -0.5)
                throw ParameterError("hyp_large_arg: a_j - b_i is a non-negative integer");
    if (!has_degenerate_pair(a)) return connection_sum(a, b, x);
    // Two-sided eps-perturbation of each degenerate cluster. The plain +-1e-6
    // average leaves ~|Gamma(eps)| * 1e-16 ~ 1e-8 cancellation noise, so use a
    // larger eps and cancel the even orders by Richardson: (4 A(eps) - A(2eps))/3.
    const double eps = 5e-4;
    auto avg = [&](double e) {
        return 0.5 * (connection_sum(perturb(a, e), b, x) +
                      connection_sum(perturb(a, -e), b, x));
    };
    return (4.0 * avg(eps) - avg(2.0 * eps)) / 3.0;
}

namespace {

// strip a unit upper parameter against a lower parameter b0 > 1:
// F(1, rest_a; b0, rest_b; x) = (1/B(b0-1,1)) int_0^1 (1-t)^{b0-2} F(rest; x t) dt
Complex strip_unit_param(const std::vector<Complex>& a, const std::vector<Complex>& b, double x) {
    std::size_t ia = a.size(), ib = b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - 1.0) < 1e-14) { ia = i; break; }
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].imag() == 0.0 && b[i].real() > 1.0 + 1e-9) { ib = i; break; }
    if (ia == a.size() || ib == b.size())
        throw ParameterError("hyp_auto: no reduction available near |x| = 1");
    std::vector<Complex> ra, rb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != ia) ra.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (i != ib) rb.push_back(b[i]);
    double beta = b[ib].real() - 1.0;  // weight (1-t)^{beta-1}, 1/B(beta,1) = beta
    // substitute 1 - t = w^{2} to keep the endpoint weight smooth when beta < 1
    auto integrand = [&](double w) {
        double t = 1.0 - w * w;
        return std::pow(w * w, beta - 1.0) * hyp_auto(ra, rb, x * t) * (2.0 * w);
    };
    return beta * integrate_c(integrand, 0.0, 1.0, 1e-12);
}

} // namespace

Complex hyp_auto(const std::vector<Complex>& a, const std::vector<Complex>& b, double x) {
    if (x > 0.0) {
        if (x < 1.0) return pfq(a, b, x);
        throw ParameterError("hyp_auto: positive argument >= 1 unsupported");
    }
    if (x == 0.0) return 1.0;
    if (a.size() == 1 && b.empty())  // 1F0(a;;x) = (1-x)^{-a}
        return std::pow(Complex(1.0 - x), -a[0]);
    if (a.size() <= b.size()) return pfq(a, b, x);
    if (a.size() == 2 && b.size() == 1) {
        if (x >= -3.0) return hyp2f1_pfaff(a[0], a[1], b[0], x);
        return hyp_large_arg(a, b, x);
    }
    if (x >= -0.85) return pfq(a, b, x);
    if (x > -1.2) return strip_unit_param(a, b, x);
    return hyp_large_arg(a, b, x);
}

SpectralParam SpectralParam::from_s(Complex s) {
    SpectralParam sp;
    sp.s = s;
    sp.t = Complex(0.0, -1.0) * (s - 0.5);
    sp.lambda = s * (1.0 - s);
    return sp;
}

SpectralParam SpectralParam::from_t(Complex t) {
    SpectralParam sp;
    sp.t = t;
    sp.s = 0.5 + Complex(0.0, 1.0) * t;
    sp.lambda = sp.s * (1.0 - sp.s);
    return sp;
}

} // namespace geodcount::specfun

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "geodcount/errors.hpp"

namespace geodcount::specfun {

using Complex = std::complex<double>;

// ---- gamma machinery -------------------------------------------------------

// Principal-branch log Gamma (Lanczos + reflection). Throws PoleError at
// non-positive integers.
Complex log_gamma(Complex z);
Complex gamma_fn(Complex z);
Complex digamma(Complex z);

// ---- generalized hypergeometric functions ----------------------------------

// Direct power series, |z| < 1 (or terminating). Relative tail <= tol,
// term cap 1e5. Throws DivergenceError / ParameterError.
Complex pfq(const std::vector<Complex>& a, const std::vector<Complex>& b, Complex z,
            double tol = 1e-14, int max_terms = 100000);

// Connection formula (DLMF 16.8.8) for {q+1}F{q} at real x <= -1; degenerate
// parameter differences handled by symmetric eps-perturbation (eps = 1e-6)
// with the two-sided average.
Complex hyp_large_arg(const std::vector<Complex>& a, const std::vector<Complex>& b, double x);

// Dispatcher for real x <= 0: direct series / Pfaff (2F1) / integral
// reduction near |x| = 1 / connection formula.
Complex hyp_auto(const std::vector<Complex>& a, const std::vector<Complex>& b, double x);

// ---- spectral parameter ----------------------------------------------------

struct SpectralParam {
    Complex s;       // 1/2 + it, or real in (1/2, 1)
    Complex t;       // s = 1/2 + i t
    Complex lambda;  // s (1 - s)

    static SpectralParam from_s(Complex s);
    static SpectralParam from_t(Complex t);
};

// ---- smoothing parameters and test functions -------------------------------

struct SmoothingParams {
    double X = 0, D = 0, Y = 0;
    double R2 = 0, r2 = 0, R = 0, r = 0, H = 0;  // R^2=(X+Y)^2-1, r^2=X^2-1, H=R^2-r^2
    double a = 0, b = 0, M = 0, Bc = 0;          // f4 constants

    static SmoothingParams make(double X, double D);
};

enum class TestKind { F1, F3, F4 };

// The f1/f3/f4 family with closed-form pieces. fb = sqrt(x-1) f,
// fc = f + 2 (x-1) f' (the combination (x f(x^2+1))' in the substituted
// variable, which reproduces the smoothed-count targets).
class TestFunction {
public:
    TestFunction(TestKind kind, SmoothingParams params);

    double operator()(double x) const { return value(x); }
    double value(double x) const;
    double prime(double x) const;
    double fb(double x) const;
    double fc(double x) const;

    double at_one() const { return value(1.0); }
    double support_end() const;             // f(x) = 0 beyond this
    std::vector<double> kinks() const;      // piece boundaries in x

    TestKind kind() const { return kind_; }
    const SmoothingParams& params() const { return p_; }

private:
    TestKind kind_;
    SmoothingParams p_;

    double f4_F(double x) const;        // F(x) = x f4(x^2 + 1)
    double f4_Fprime(double x) const;   // the four-piece display
};

// The four-piece target for g(u; f4 + 2(x-1)f4'): a u + b, 1/sqrt(u-1),
// M/sqrt(u-1) - B, 0.
double f4_target(double u, const SmoothingParams& params);

// ---- transforms ------------------------------------------------------------

// g(u; h) = 2 int_{sqrt(max(u-1,0))}^inf h(x^2+1)/sqrt(x^2+1-u) dx, with the
// endpoint 1/sqrt singularity removed by t = u + w^2.
double g_transform(double u, const std::function<double(double)>& h, double support_end,
                   const std::vector<double>& t_breaks = {}, double abs_tol = 1e-10);
double g_transform(double u, const TestFunction& f, char combo /* 'a','b','c' */,
                   double abs_tol = 1e-10);

// h(t)/sqrt(t-1) = -(1/pi) int_t^inf g'(u)/sqrt(u-t) du, with g' supplied
// directly or by central differences of g.
double g_inverse(double tval, const std::function<double(double)>& g_prime, double u_end,
                 const std::vector<double>& u_breaks = {}, double abs_tol = 1e-10);
double g_inverse_numeric(double tval, const std::function<double(double)>& g, double u_end,
                         const std::vector<double>& u_breaks = {}, double abs_tol = 1e-9);

// d^{(0)}_t(f), d^{(1)}_t(f) by quadrature (form (i)); d1_transform_ii is the
// 3F2 form (ii); d1_closed the J_s/K_s closed forms.
Complex d0_transform(const TestFunction& f, const SpectralParam& sp, double abs_tol = 1e-10);
Complex d1_transform(const TestFunction& f, const SpectralParam& sp, double abs_tol = 1e-10);
Complex d1_transform_ii(const TestFunction& f, const SpectralParam& sp, double abs_tol = 1e-10);
Complex d1_closed(const TestFunction& f, const SpectralParam& sp);

// J_s(u) = (u^2/8) 2F1((s+1)/2,(2-s)/2;3;-u) and quadrature oracle;
// K_s(u) = -(u^3/6pi) 4F3(...;-u^2) and oracle; K_s(R,r).
Complex Js(double u, const SpectralParam& sp);
Complex Js_quadrature(double u, const SpectralParam& sp, double abs_tol = 1e-10);
Complex Ks(double u, const SpectralParam& sp);
Complex Ks_quadrature(double u, const SpectralParam& sp, double abs_tol = 1e-10);
Complex Ks_Rr(const SmoothingParams& params, const SpectralParam& sp);
Complex Ks_Rr_quadrature(const SmoothingParams& params, const SpectralParam& sp,
                         double abs_tol = 1e-10);

// G_J(u,s), G_K(u,s) of the u -> infinity expansions.
Complex G_J(double u, Complex s);
Complex G_K(double u, Complex s);

struct ExpansionCoeffs {
    Complex gammaJ_s, gammaJ_1ms;
    Complex gammaK_s, gammaK_1ms;
    Complex C;
};

// gamma_J, gamma_K and C(s); throws PoleError at s = 1/2.
ExpansionCoeffs expansion_coeffs(const SpectralParam& sp);

struct SieveCoeffs {
    Complex a;  // gamma_J(1-s) ((D+1)^{2+s}-1)/((D+1)^2-1)
    Complex b;  // -gamma_K(1-s) ((D+1)^{1+s}-1)/D
};

SieveCoeffs sieve_coeffs(double t, double D);

} // namespace geodcount::specfun

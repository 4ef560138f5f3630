#pragma once

#include <vector>

#include "geodcount/group.hpp"
#include "geodcount/specfun.hpp"

namespace geodcount::trace {

// len(l) = 4 log eps (m = eps^2)
double geodesic_length();

enum class Kind { A, B, C };
enum class Order { Weight0, Weight1, Weight1Deriv };

struct ClassTerm {
    group::DoubleCosetClass cls;
    double term = 0.0;
};

struct GeometricSideResult {
    double value_closed = 0.0;  // double-coset sum of g-transforms
    double value_direct = 0.0;  // coset integrals over the axis
    double g0_term = 0.0;       // f(1) len(l) contribution
    std::vector<ClassTerm> contributions;
};

// kind A: g0+ + sum g(B^2; f);  kind B: -sum_{|B|>1} sign(ac) g(B^2; fb);
// kind C: g0- + sum B g(B^2; fc). value_direct holds the matching coset
// integral (I_{f,0}(0), I_{f,1}(0), I'_{f,1}(0)).
GeometricSideResult geometric_side(Kind kind, const specfun::TestFunction& f, std::int64_t p,
                                   double abs_tol = 1e-10);

// Direct evaluation of the coset integrals from the tan v closed form; the
// y-support of each class is the exact interval where 1/cos^2 v <= support.
double direct_coset_integral(Order order, const specfun::TestFunction& f, std::int64_t p,
                             double abs_tol = 1e-10);

struct SmoothedCountReport {
    std::int64_t p = 0;
    double X = 0, D = 0;
    double lhs = 0.0;             // I'_{f4,1}(0), geometric side C
    std::int64_t sign_sum = 0;    // sum over 1 < |B| < X of sign(ad)
    double residual = 0.0;        // |lhs - sign_sum|
    double ratio = 0.0;           // residual / (Y + X^{2/3})
    bool pass = false;            // ratio <= 10
};

SmoothedCountReport smoothed_count_check(std::int64_t p, double X, double D);

} // namespace geodcount::trace

#pragma once

#include <utility>

#include "geodcount/group.hpp"

namespace geodcount::geometry {

struct HPoint {
    double x = 0.0;
    double y = 1.0;  // > 0
};

// u = log|z|, v = -arctan(x/y); inverse x = -e^u sin v, y = e^u cos v.
struct HuberCoords {
    double u = 0.0;
    double v = 0.0;
};

HPoint mobius_apply(const group::GroupElement& g, HPoint z);
HuberCoords huber_coords(HPoint z);
HPoint huber_point(HuberCoords c);

// cosh rho = 1 + |z-w|^2 / (2 Im z Im w)
double point_distance(HPoint z, HPoint w);

// acosh(max(|B(gamma)|, 1))
double dist_formula(const group::GroupElement& g);

// min over (y1, y2) of dist(i y1, gamma(i y2)) by nested golden-section search;
// oracle for dist_formula, requires |B| > 1.
double geodesic_line_distance_numeric(const group::GroupElement& g, double tol = 1e-10,
                                      int max_iter = 200);

// (clockwise, side) from the geodesic feet a/c and b/d in the real embedding;
// clockwise = sign(a/c - b/d), side = common sign of the feet.
std::pair<int, int> orientation_and_side(const group::GroupElement& g);

double tan_v_closed(const group::GroupElement& g, double theta, double y);
double tan_v_direct(const group::GroupElement& g, double theta, double y);

} // namespace geodcount::geometry

#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "geodcount/quadfield.hpp"

namespace geodcount::group {

using quadfield::QuadInt;

// An element of the quaternion group Gamma, stored as the PSL(2,R)
// representative with (u,v,s,t) lexicographically positive:
//   a = u + v sqrt2,  b = s + t sqrt2,  c = p (s - t sqrt2),  d = u - v sqrt2,
// with exact determinant N(a) - p N(b) = 1.
struct GroupElement {
    std::int64_t p = 2;
    std::int64_t u = 1, v = 0, s = 0, t = 0;

    QuadInt a() const { return {u, v}; }
    QuadInt b() const { return {s, t}; }
    QuadInt c() const { return {p * s, -p * t}; }
    QuadInt d() const { return {u, -v}; }
    bool is_identity() const { return s == 0 && t == 0; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Validates the determinant and PSL-normalizes. Throws DeterminantError.
GroupElement make_element(std::int64_t p, std::int64_t u, std::int64_t v, std::int64_t s,
                          std::int64_t t);

// B(gamma) = ad + bc = N(a) + p N(b) = 2 N(a) - 1, exact.
std::int64_t b_value(const GroupElement& g);

// (mu, mu') = (sign(ab), sign(ac)), exact over Z[sqrt2].
std::pair<int, int> sign_class(const GroupElement& g);

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// h = diag(eps^2, eps^{-2}), the generator of Gamma_1.
GroupElement axis_generator(std::int64_t p);

struct DoubleCosetClass {
    GroupElement rep;
    std::int64_t b_value = 1;
    int mu = 0, mu_prime = 0;
    std::uint64_t na = 1, nb = 0;  // ideal norms N(a-ideal), N(b-ideal)
    int branch = 1;                // sign of N(a) - p N(b) in ideal norms; equals sign(ad)
    int fiber_index = 0;

    bool is_identity() const { return nb == 0; }
};

// Canonical representative of Gamma_1 \ Gamma / Gamma_2:
// the orbit scales a by eps^{2 alpha} and b by eps^{2 beta}, alpha = beta (mod 2),
// plus the global PSL sign. Reduction: flip sign so a > 0, reduce b to the tight
// window |b|/sqrt|N(b)| in [1, eps^2), then reduce a to [1, eps^2) and bump it one
// eps^2 step if needed to restore the exponent parity. Deterministic over orbits.
DoubleCosetClass canonical_double_coset(const GroupElement& g);

// All classes with |B| <= x_max, built from ideal pairs: for each m >= 1 and each
// branch, each pair of ideals (N(a-ideal) = pm +- 1, N(b-ideal) = m) carries a
// 4-element fiber. Sorted by |B|, then lexicographic representative.
std::vector<DoubleCosetClass> enumerate_double_cosets(std::int64_t p, std::int64_t x_max);

// Independent oracle: exhaustive scan of all (u,v,s,t) with coordinates <= height,
// det = 1 and |B| <= x_max, canonicalized and deduplicated. Throws HeightTooSmall
// if a canonical representative touches the boundary.
std::vector<DoubleCosetClass> lattice_scan_oracle(std::int64_t p, std::int64_t x_max,
                                                  std::int64_t height);

std::int64_t default_scan_height(std::int64_t p, std::int64_t x_max);

// CSV: p,u,v,s,t,B,mu,mu_prime,Na,Nb,branch,fiber_index
void write_classes_csv(std::ostream& out, const std::vector<DoubleCosetClass>& classes);

} // namespace geodcount::group

#include "geodcount/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

namespace geodcount::group {

using quadfield::QuadInt;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

namespace {

bool lex_positive(i64 u, i64 v, i64 s, i64 t) {
    if (u != 0) return u > 0;
    if (v != 0) return v > 0;
    if (s != 0) return s > 0;
    return t >= 0;
}

GroupElement normalize_psl(GroupElement g) {
    if (!lex_positive(g.u, g.v, g.s, g.t)) {
        g.u = -g.u; g.v = -g.v; g.s = -g.s; g.t = -g.t;
    }
    return g;
}

i128 det128(i64 p, i64 u, i64 v, i64 s, i64 t) {
    return (i128(u) * u - 2 * i128(v) * v) - i128(p) * (i128(s) * s - 2 * i128(t) * t);
}

// sign of eval(q)^2 - (cx + cy sqrt2), exact
int cmp_square(QuadInt q, i64 cx, i64 cy) {
    QuadInt sq{q.x * q.x + 2 * q.y * q.y, 2 * q.x * q.y};
    return quadfield::sign({sq.x - cx, sq.y - cy});
}

} // namespace

GroupElement make_element(i64 p, i64 u, i64 v, i64 s, i64 t) {
    if (det128(p, u, v, s, t) != 1)
        throw DeterminantError("make_element: determinant is not 1");
    GroupElement g;
    g.p = p; g.u = u; g.v = v; g.s = s; g.t = t;
    return normalize_psl(g);
}

std::int64_t b_value(const GroupElement& g) {
    i64 na = quadfield::norm(g.a());
    i64 nb = quadfield::norm(g.b());
    i64 b1 = na + g.p * nb;
    i64 b2 = 2 * na - 1;
    if (b1 != b2) throw CrossCheckError("b_value: ad+bc != 2N(a)-1");
    return b1;
}

std::pair<int, int> sign_class(const GroupElement& g) {
    int sa = quadfield::sign(g.a());
    int sb = quadfield::sign(g.b());
    int sc = quadfield::sign(g.c());
    return {sa * sb, sa * sc};
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    if (g.p != h.p) throw ParameterError("group::mul: mismatched p");
    QuadInt a = quadfield::mul(g.a(), h.a());
    QuadInt a2 = quadfield::mul(g.b(), h.c());
    QuadInt b = quadfield::mul(g.a(), h.b());
    QuadInt b2 = quadfield::mul(g.b(), h.d());
    QuadInt ra{a.x + a2.x, a.y + a2.y};
    QuadInt rb{b.x + b2.x, b.y + b2.y};
    return make_element(g.p, ra.x, ra.y, rb.x, rb.y);
}

GroupElement inverse(const GroupElement& g) {
    // (a b; c d)^{-1} = (d -b; -c a); d = conj(a) so the form is preserved.
    return make_element(g.p, g.u, -g.v, -g.s, -g.t);
}

GroupElement axis_generator(i64 p) { return make_element(p, 3, 2, 0, 0); }

DoubleCosetClass canonical_double_coset(const GroupElement& g) {
    b_value(g);  // validates both B expressions
    if (g.is_identity()) {
        DoubleCosetClass cls;
        cls.rep = GroupElement{g.p, 1, 0, 0, 0};
        cls.b_value = 1;
        return cls;
    }
    QuadInt a = g.a(), b = g.b();
    if (quadfield::sign(a) < 0) { a = quadfield::neg(a); b = quadfield::neg(b); }

    i64 na = std::abs(quadfield::norm(a));
    i64 nb = std::abs(quadfield::norm(b));

    // tight reduction to ratio^2 = q^2 / |N(q)| in [1, eps^4)
    auto reduce_tight = [](QuadInt& q, i64 n) {
        int e = 0;
        while (cmp_square(q, n, 0) < 0) { q = quadfield::mul(q, quadfield::kUnitSq); ++e; }
        while (cmp_square(q, 17 * n, 12 * n) >= 0) { q = quadfield::mul(q, quadfield::kUnitSqInv); --e; }
        return e;
    };
    int alpha = reduce_tight(a, na);
    int beta = reduce_tight(b, nb);
    bool bumped = ((alpha - beta) & 1) != 0;
    if (bumped) a = quadfield::mul(a, quadfield::kUnitSq);

    GroupElement rep = make_element(g.p, a.x, a.y, b.x, b.y);
    DoubleCosetClass cls;
    cls.rep = rep;
    cls.b_value = b_value(rep);
    std::tie(cls.mu, cls.mu_prime) = sign_class(rep);
    if (std::abs(cls.b_value) <= 1)
        throw CrossCheckError("canonical_double_coset: non-identity class with |B| <= 1");
    cls.na = static_cast<u64>(na);
    cls.nb = static_cast<u64>(nb);
    cls.branch = quadfield::norm(rep.a()) > 0 ? 1 : -1;
    int mu_bit = quadfield::sign(quadfield::mul(a, b)) < 0 ? 1 : 0;
    cls.fiber_index = (bumped ? 2 : 0) | mu_bit;
    return cls;
}

namespace {

struct ClassKey {
    i64 absB;
    GroupElement rep;
    bool operator<(const ClassKey& o) const {
        return std::tie(absB, rep) < std::tie(o.absB, o.rep);
    }
};

void sort_classes(std::vector<DoubleCosetClass>& classes) {
    std::sort(classes.begin(), classes.end(), [](const DoubleCosetClass& x, const DoubleCosetClass& y) {
        return std::make_tuple(std::abs(x.b_value), x.rep) <
               std::make_tuple(std::abs(y.b_value), y.rep);
    });
}

} // namespace

std::vector<DoubleCosetClass> enumerate_double_cosets(i64 p, i64 x_max) {
    std::vector<DoubleCosetClass> classes;
    if (x_max < 1) return classes;
    classes.push_back(canonical_double_coset(GroupElement{p, 1, 0, 0, 0}));

    for (int branch : {1, -1}) {
        for (i64 m = 1; 2 * p * m + branch <= x_max; ++m) {
            i64 na_ideal = p * m + branch;
            auto gens_a = quadfield::canonical_generators(static_cast<u64>(na_ideal));
            if (gens_a.empty()) continue;
            auto gens_b = quadfield::canonical_generators(static_cast<u64>(m));
            for (const QuadInt& b0 : gens_b) {
                for (const QuadInt& a0 : gens_a) {
                    // element norms: branch + needs (N(a), N(b)) = (pm+1, m);
                    // branch - needs (-(pm-1), -m), reached through one factor of eps.
                    QuadInt A = branch == 1 ? a0 : quadfield::mul(quadfield::kUnit, a0);
                    QuadInt B = branch == 1 ? b0 : quadfield::mul(quadfield::kUnit, b0);
                    DoubleCosetClass fiber[4];
                    int k = 0;
                    for (int j = 0; j < 2; ++j) {
                        QuadInt Aj = j == 0 ? A : quadfield::mul(quadfield::kUnitSq, A);
                        for (int sgn : {1, -1}) {
                            QuadInt As = sgn == 1 ? Aj : quadfield::neg(Aj);
                            GroupElement e = make_element(p, As.x, As.y, B.x, B.y);
                            fiber[k++] = canonical_double_coset(e);
                        }
                    }
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (fiber[i].rep == fiber[j].rep)
                                throw CrossCheckError("enumerate_double_cosets: fiber not 4-to-1");
                    classes.insert(classes.end(), fiber, fiber + 4);
                }
            }
        }
    }
    sort_classes(classes);
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i].rep == classes[i - 1].rep)
            throw CrossCheckError("enumerate_double_cosets: duplicate class");
    return classes;
}

std::int64_t default_scan_height(i64 p, i64 x_max) {
    double eps2 = 3.0 + 2.0 * quadfield::kSqrt2Real;
    return static_cast<i64>(std::ceil(eps2 * std::sqrt(2.0 * double(p) * double(x_max))));
}

std::vector<DoubleCosetClass> lattice_scan_oracle(i64 p, i64 x_max, i64 height) {
    std::map<GroupElement, DoubleCosetClass> found;
    // N(a) = (B+1)/2 ranges over [(1-X)/2, (X+1)/2]; exhaust (u,v) there, then
    // solve s^2 - 2 t^2 = (N(a)-1)/p for all |s|,|t| <= height.
    i64 na_max = (x_max + 1) / 2;
    for (i64 v = 0; v <= height; ++v) {
        i64 floor2 = 2 * v * v - na_max;
        i64 u0 = floor2 > 0 ? i64(quadfield::isqrt64(u64(floor2))) : 0;
        if (u0 > 0) --u0;
        for (i64 u = u0; u <= height; ++u) {
            i64 na = u * u - 2 * v * v;
            if (na > na_max) break;
            if (std::abs(2 * na - 1) > x_max) continue;
            if (((na - 1) % p + p) % p != 0) continue;
            i64 k = (na - 1) / p;
            for (i64 t = 0; t <= height; ++t) {
                i64 s2 = k + 2 * t * t;
                if (s2 < 0) continue;
                i64 s = i64(quadfield::isqrt64(u64(s2)));
                if (s * s != s2 || s > height) continue;
                for (int su : {1, -1}) {
                    if (u == 0 && su < 0) continue;
                    for (int sv : {1, -1}) {
                        if (v == 0 && sv < 0) continue;
                        for (int ss : {1, -1}) {
                            if (s == 0 && ss < 0) continue;
                            for (int st : {1, -1}) {
                                if (t == 0 && st < 0) continue;
                                i64 uu = su * u, vv = sv * v, sss = ss * s, tt = st * t;
                                if (det128(p, uu, vv, sss, tt) != 1) continue;
                                GroupElement e = make_element(p, uu, vv, sss, tt);
                                DoubleCosetClass cls = canonical_double_coset(e);
                                found.emplace(cls.rep, cls);
                            }
                        }
                    }
                }
            }
        }
    }
    std::vector<DoubleCosetClass> classes;
    classes.reserve(found.size());
    for (auto& [rep, cls] : found) {
        i64 mx = std::max({std::abs(rep.u), std::abs(rep.v), std::abs(rep.s), std::abs(rep.t)});
        if (mx >= height)
            throw HeightTooSmall("lattice_scan_oracle: canonical representative touches the boundary");
        classes.push_back(cls);
    }
    sort_classes(classes);
    return classes;
}

void write_classes_csv(std::ostream& out, const std::vector<DoubleCosetClass>& classes) {
    out << "p,u,v,s,t,B,mu,mu_prime,Na,Nb,branch,fiber_index\n";
    for (const auto& c : classes) {
        out << c.rep.p << ',' << c.rep.u << ',' << c.rep.v << ',' << c.rep.s << ',' << c.rep.t
            << ',' << c.b_value << ',' << c.mu << ',' << c.mu_prime << ',' << c.na << ',' << c.nb
            << ',' << c.branch << ',' << c.fiber_index << '\n';
    }
}

} // namespace geodcount::group

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geodcount/counting.hpp"
#include "geodcount/geometry.hpp"
#include "geodcount/group.hpp"
#include "geodcount/quadfield.hpp"
#include "geodcount/specfun.hpp"
#include "geodcount/trace.hpp"

namespace py = pybind11;

namespace gq = geodcount::quadfield;
namespace gg = geodcount::group;
namespace gc = geodcount::counting;
namespace ge = geodcount::geometry;
namespace sf = geodcount::specfun;

namespace {

py::dict class_to_dict(const gg::DoubleCosetClass& c) {
    py::dict d;
    d["p"] = c.rep.p;
    d["u"] = c.rep.u;
    d["v"] = c.rep.v;
    d["s"] = c.rep.s;
    d["t"] = c.rep.t;
    d["B"] = c.b_value;
    d["mu"] = c.mu;
    d["mu_prime"] = c.mu_prime;
    d["Na"] = c.na;
    d["Nb"] = c.nb;
    d["branch"] = c.branch;
    d["fiber_index"] = c.fiber_index;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "counting oriented geodesic images under arithmetic Fuchsian groups";

    m.def("chi8", &gq::chi8, py::arg("d"));
    m.def("ideal_count", &gq::ideal_count, py::arg("n"));
    m.def("ideal_count_bruteforce", &gq::ideal_count_bruteforce, py::arg("n"));
    m.def(
        "ideal_count_sieve",
        [](std::uint64_t limit, int workers) {
            auto table = gq::ideal_count_sieve(limit, workers);
            return std::vector<int>(table.counts.begin(), table.counts.end());
        },
        py::arg("limit"), py::arg("workers") = 0,
        "counts[n-1] = number of ideals of Z[sqrt2] of norm n");

    m.def("c_p", &gc::c_p, py::arg("p"));
    m.def("main_coefficient", &gc::main_coefficient, py::arg("p"));
    m.def(
        "correlation_sum",
        [](std::int64_t p, int sign, std::int64_t x_max) {
            auto table = gq::ideal_count_sieve(std::uint64_t(p * x_max + 1));
            return gc::correlation_sum(table, p, sign, x_max);
        },
        py::arg("p"), py::arg("sign"), py::arg("x_max"));
    m.def(
        "mean_square_error",
        [](std::int64_t p, int sign, std::int64_t X) {
            auto table = gq::ideal_count_sieve(std::uint64_t(2 * p * X + 1));
            return gc::mean_square_error(table, p, sign, X);
        },
        py::arg("p"), py::arg("sign"), py::arg("X"));

    m.def(
        "enumerate_double_cosets",
        [](std::int64_t p, std::int64_t x_max) {
            py::list out;
            for (const auto& c : gg::enumerate_double_cosets(p, x_max)) out.append(class_to_dict(c));
            return out;
        },
        py::arg("p"), py::arg("x_max"));
    m.def(
        "count_report",
        [](std::int64_t p, std::int64_t x_max) {
            auto r = gc::count_report(p, x_max);
            py::dict d;
            d["N1"] = r.n1;
            d["N2"] = r.n2;
            d["N3"] = r.n3;
            d["N4"] = r.n4;
            d["pairs_plus"] = r.pairs_plus;
            d["pairs_minus"] = r.pairs_minus;
            return d;
        },
        py::arg("p"), py::arg("x_max"));

    m.def(
        "dist_formula",
        [](std::int64_t p, std::int64_t u, std::int64_t v, std::int64_t s, std::int64_t t) {
            return ge::dist_formula(gg::make_element(p, u, v, s, t));
        },
        py::arg("p"), py::arg("u"), py::arg("v"), py::arg("s"), py::arg("t"));
    m.def(
        "geodesic_distance_numeric",
        [](std::int64_t p, std::int64_t u, std::int64_t v, std::int64_t s, std::int64_t t) {
            return ge::geodesic_line_distance_numeric(gg::make_element(p, u, v, s, t));
        },
        py::arg("p"), py::arg("u"), py::arg("v"), py::arg("s"), py::arg("t"));

    m.def(
        "pfq",
        [](const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
           std::complex<double> z) { return sf::pfq(a, b, z); },
        py::arg("a"), py::arg("b"), py::arg("z"));
    m.def(
        "hyp",
        [](const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
           double x) { return sf::hyp_auto(a, b, x); },
        py::arg("a"), py::arg("b"), py::arg("x"),
        "generalized hypergeometric at real x <= 0 (series/Pfaff/connection)");
    m.def(
        "g_transform",
        [](double u, double X, double D, const std::string& kind, char combo) {
            auto params = sf::SmoothingParams::make(X, D);
            sf::TestKind k = kind == "f1"   ? sf::TestKind::F1
                             : kind == "f3" ? sf::TestKind::F3
                                            : sf::TestKind::F4;
            sf::TestFunction f(k, params);
            return sf::g_transform(u, f, combo);
        },
        py::arg("u"), py::arg("X"), py::arg("D"), py::arg("kind"), py::arg("combo") = 'a');

    m.attr("__version__") = "0.1.0";
}

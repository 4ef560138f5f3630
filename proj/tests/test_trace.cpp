#include <doctest.h>

#include <cmath>
#include <map>

#include "geodcount/trace.hpp"
#include "geodcount/verify.hpp"

using namespace geodcount;
namespace sf = geodcount::specfun;
using trace::Kind;
using trace::Order;

TEST_CASE("geodesic length") {
    CHECK(trace::geodesic_length() ==
          doctest::Approx(2.0 * std::log(3.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("kind b cancels exactly per fiber") {
    auto params = sf::SmoothingParams::make(20.0, 0.3);
    sf::TestFunction f3(sf::TestKind::F3, params);
    auto res = trace::geometric_side(Kind::B, f3, 3, 1e-11);
    // fibers pair mu' = +1 with mu' = -1 at the same |B|, so the closed sum is exactly 0
    CHECK(res.value_closed == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(res.value_direct) < 1e-9);
    // cancellation holds fiber by fiber, not just in total
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> per_fiber;
    for (const auto& [cls, term] : res.contributions) per_fiber[{cls.na, cls.nb}] += term;
    for (const auto& [key, sum] : per_fiber) CHECK(std::abs(sum) < 1e-12);
}

TEST_CASE("closed vs direct across p and X") {
    for (std::int64_t p : {2, 3, 5}) {
        for (double X : {10.0, 20.0, 40.0}) {
            CAPTURE(p); CAPTURE(X);
            auto params = sf::SmoothingParams::make(X, 0.3);
            sf::TestFunction f3(sf::TestKind::F3, params);
            sf::TestFunction f4(sf::TestKind::F4, params);
            sf::TestFunction f1(sf::TestKind::F1, params);

            auto rb = trace::geometric_side(Kind::B, f3, p, 1e-11);
            CHECK(std::abs(rb.value_closed - rb.value_direct) <=
                  1e-6 * (1.0 + std::abs(rb.value_closed)));

            auto rc = trace::geometric_side(Kind::C, f4, p, 1e-11);
            CHECK(std::abs(rc.value_closed - rc.value_direct) <=
                  1e-6 * (1.0 + std::abs(rc.value_closed)));

            auto ra = trace::geometric_side(Kind::A, f1, p, 1e-11);
            CHECK(std::abs(ra.value_closed - ra.value_direct) <=
                  1e-6 * (1.0 + std::abs(ra.value_closed)));
        }
    }
}

TEST_CASE("g0 terms") {
    auto params = sf::SmoothingParams::make(15.0, 0.25);
    sf::TestFunction f1(sf::TestKind::F1, params);
    sf::TestFunction f3(sf::TestKind::F3, params);
    // f1(1) = 0 so kind a carries no g0 for f1; f3(1) > 0 does
    auto ra = trace::geometric_side(Kind::A, f1, 3, 1e-10);
    CHECK(ra.g0_term == 0.0);
    auto ra3 = trace::geometric_side(Kind::A, f3, 3, 1e-10);
    CHECK(ra3.g0_term == doctest::Approx(f3.value(1.0) * trace::geodesic_length()));
    auto rb = trace::geometric_side(Kind::B, f3, 3, 1e-10);
    CHECK(rb.g0_term == 0.0);
}

TEST_CASE("smoothed count: below the first class both sides vanish") {
    auto rep = trace::smoothed_count_check(3, 3.0, 0.2);
    CHECK(rep.sign_sum == 0);
    CHECK(std::abs(rep.lhs) < 1e-9);
    CHECK(rep.pass);
}

TEST_CASE("smoothed count residual ratios") {
    for (std::int64_t p : {3, 7}) {
        auto rep = trace::smoothed_count_check(p, 50.0, 0.2);
        CAPTURE(p); CAPTURE(rep.lhs); CAPTURE(rep.sign_sum); CAPTURE(rep.ratio);
        CHECK(rep.pass);
        CHECK(rep.ratio <= 10.0);
    }
}

TEST_CASE("trace verify suite passes") {
    for (const auto& r : verify::run_suite("trace")) {
        CAPTURE(r.identity); CAPTURE(r.max_rel_err);
        CHECK(r.pass);
    }
}

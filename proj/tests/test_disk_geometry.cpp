#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "wpcurv/disk.hpp"

using namespace wpcurv;

TEST_CASE("rho at the center and at 1/2") {
    CHECK(rho({0.0, 0.0}) == 4.0);
    // direct substitution: 4/(1 - 1/4)^2 = 64/9
    CHECK_THAT(rho({0.5, 0.0}), Catch::Matchers::WithinRel(64.0 / 9.0, 1e-15));
    CHECK_THAT(rho({0.0, 0.5}), Catch::Matchers::WithinRel(64.0 / 9.0, 1e-15));
}

TEST_CASE("rho is rotation invariant, radially increasing, >= 4") {
    std::mt19937 rng(20240815);
    std::uniform_real_distribution<double> rad(0.0, 0.999);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double u = rad(rng), t0 = ang(rng), t1 = ang(rng);
        const DiskPoint z0{u * std::cos(t0), u * std::sin(t0)};
        const DiskPoint z1{u * std::cos(t1), u * std::sin(t1)};
        // rounding in the test points themselves is amplified by ~1/(1-u^2)
        CHECK_THAT(rho(z0), Catch::Matchers::WithinRel(rho(z1), 1e-11));
        CHECK(rho(z0) >= 4.0);
    }
    for (double u = 0.0; u < 0.99; u += 0.01) {
        const double r = rho_radial(u);
        CHECK(r >= prev);
        prev = r;
    }
}

TEST_CASE("rho rejects points outside the disk") {
    CHECK_THROWS_AS(rho({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(rho({0.8, 0.7}), std::domain_error);
    CHECK_THROWS_AS(rho_radial(1.0), std::domain_error);
    CHECK_THROWS_AS(rho_radial(-0.1), std::domain_error);
}

TEST_CASE("hyperbolic disk radius: endpoints and the e^r = 3 point") {
    CHECK(hyperbolic_disk_radius(0.0) == 0.0);
    CHECK_THAT(hyperbolic_disk_radius(std::log(3.0)), Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THAT(hyperbolic_disk_radius(50.0), Catch::Matchers::WithinAbs(1.0, 1e-15));
    CHECK(hyperbolic_disk_radius(1e4) < 1.0);
    CHECK_THROWS_AS(hyperbolic_disk_radius(-1e-12), std::domain_error);
}

TEST_CASE("disk radius map is monotone and round-trips to 1e-14") {
    double prev = -1.0;
    for (double r = 0.0; r <= 12.0; r += 0.125) {
        const double R = hyperbolic_disk_radius(r);
        CHECK(R > prev);
        prev = R;
    }
    // contracting direction: R -> r -> R
    for (double R = 0.0; R < 0.99995; R += 0.0025) {
        CHECK_THAT(hyperbolic_disk_radius(inverse_disk_radius(R)),
                   Catch::Matchers::WithinAbs(R, 1e-14));
    }
    // expanding direction, moderate radii
    for (double r = 0.0; r <= 4.0; r += 0.25) {
        CHECK_THAT(inverse_disk_radius(hyperbolic_disk_radius(r)),
                   Catch::Matchers::WithinAbs(r, 1e-14 * (1.0 + r)));
    }
}

TEST_CASE("hyperbolic area closed form matches direct integration at small radius") {
    // series check: area(r) = pi r^2 (1 + r^2/12 + ...) near 0
    const double r = 1e-4;
    CHECK_THAT(hyperbolic_area(r), Catch::Matchers::WithinRel(std::numbers::pi * r * r, 1e-8));
}

TEST_CASE("automorphism: identity case and center mapping") {
    const DiskAutomorphism id{{0.0, 0.0}, 0.0};
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> unif(-0.7, 0.7);
    for (int i = 0; i < 100; ++i) {
        const DiskPoint w{unif(rng), unif(rng)};
        const DiskPoint out = automorphism_apply(id, w);
        CHECK_THAT(out.re, Catch::Matchers::WithinAbs(w.re, 1e-15));
        CHECK_THAT(out.im, Catch::Matchers::WithinAbs(w.im, 1e-15));
    }
}

TEST_CASE("automorphism maps 0 to center and preserves the disk") {
    std::mt19937 rng(20240816);
    std::uniform_real_distribution<double> unif(-0.703, 0.703);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 300; ++i) {
        const DiskAutomorphism a{{unif(rng), unif(rng)}, ang(rng)};
        const DiskPoint at0 = automorphism_apply(a, {0.0, 0.0});
        CHECK_THAT(at0.re, Catch::Matchers::WithinAbs(a.center.re, 1e-15));
        CHECK_THAT(at0.im, Catch::Matchers::WithinAbs(a.center.im, 1e-15));
        const DiskPoint w{unif(rng), unif(rng)};
        CHECK(automorphism_apply(a, w).abs2() < 1.0);
    }
}

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpcurv {

/// A point of the open unit disk, |z| < 1.
struct DiskPoint {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> to_complex() const { return {re, im}; }
    double abs2() const { return re * re + im * im; }

    static DiskPoint from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
};

inline void require_in_disk(const DiskPoint& z, const char* who) {
    if (!(z.abs2() < 1.0))
        throw std::domain_error(std::string(who) + ": point must satisfy |z| < 1");
}

/// (1 - |z|^2) evaluated as (1-u)(1+u); exact for u in [1/2, 1).
inline double one_minus_sq(double u) { return (1.0 - u) * (1.0 + u); }

/// Hyperbolic metric density rho(z) = 4 / (1 - |z|^2)^2.  Always >= 4 on the disk.
inline double rho(const DiskPoint& z) {
    require_in_disk(z, "rho");
    const double s = 1.0 - z.abs2();
    return 4.0 / (s * s);
}

/// rho as a function of the radius u = |z| alone.
inline double rho_radial(double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error("rho_radial: radius must lie in [0, 1)");
    const double s = one_minus_sq(u);
    return 4.0 / (s * s);
}

/// Euclidean radius of the hyperbolic disk D(0, r): (e^r - 1)/(e^r + 1) = tanh(r/2).
inline double hyperbolic_disk_radius(double r) {
    if (!(r >= 0.0))
        throw std::domain_error("hyperbolic_disk_radius: hyperbolic radius must be >= 0");
    // tanh rounds to 1.0 for r >~ 38; keep the value inside the open disk
    constexpr double below_one = 1.0 - std::numeric_limits<double>::epsilon() / 2;
    return std::min(std::tanh(0.5 * r), below_one);
}

/// Inverse of hyperbolic_disk_radius: r = log((1+R)/(1-R)).
inline double inverse_disk_radius(double euclid_radius) {
    if (!(euclid_radius >= 0.0 && euclid_radius < 1.0))
        throw std::domain_error("inverse_disk_radius: Euclidean radius must lie in [0, 1)");
    return std::log1p(euclid_radius) - std::log1p(-euclid_radius);
}

/// Hyperbolic area of D(0, r) for the curvature -1 metric: 4*pi*sinh^2(r/2).
inline double hyperbolic_area(double r) {
    if (!(r >= 0.0))
        throw std::domain_error("hyperbolic_area: hyperbolic radius must be >= 0");
    const double s = std::sinh(0.5 * r);
    return 4.0 * std::numbers::pi * s * s;
}

/// Holomorphic automorphism of the disk sending 0 to `center`:
///   w  |->  (center + e^{i rotation} w) / (1 + conj(center) e^{i rotation} w).
struct DiskAutomorphism {
    DiskPoint center;
    double rotation = 0.0;
};

inline DiskPoint automorphism_apply(const DiskAutomorphism& a, const DiskPoint& w) {
    require_in_disk(a.center, "automorphism_apply(center)");
    require_in_disk(w, "automorphism_apply");
    const std::complex<double> c = a.center.to_complex();
    const std::complex<double> rw = std::polar(1.0, a.rotation) * w.to_complex();
    return DiskPoint::from_complex((c + rw) / (1.0 + std::conj(c) * rw));
}

} // namespace wpcurv

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wpcurv/disk.hpp"

namespace wpcurv {

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Newton iteration on Legendre polynomials; nodes accurate to ~1e-15.
inline GaussRule gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: need at least one node");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::numbers::pi;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi-style initial guess for the i-th root of P_n on [-1, 1]
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one last correction pass keeps the weight formula consistent
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);          // maps the descending cos ordering to ascending u
        rule.weights[i] = 0.5 * w;
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

enum class AreaWeighting { euclidean, hyperbolic };

struct IntegralEstimate {
    double value = 0.0;
    double est_error = 0.0;
};

/// Polar quadrature on the unit disk: Gauss-Legendre in the radius paired with
/// equispaced angular sampling (exact for Fourier modes up to 2*angular_order).
/// A coarse companion rule (half the radial count) backs the error estimates.
class QuadratureGrid {
public:
    static QuadratureGrid build(int radial_count, int angular_order,
                                AreaWeighting weighting = AreaWeighting::hyperbolic) {
        if (radial_count < 4)
            throw std::invalid_argument("build_grid: radial_count must be >= 4");
        if (angular_order < 0)
            throw std::invalid_argument("build_grid: angular_order must be >= 0");
        QuadratureGrid g;
        g.weighting_ = weighting;
        g.angular_order_ = angular_order;
        g.full_ = gauss_legendre_01(radial_count);
        g.half_ = gauss_legendre_01(std::max(4, radial_count / 2));
        return g;
    }

    int radial_count() const { return static_cast<int>(full_.nodes.size()); }
    int angular_order() const { return angular_order_; }
    /// Number of equispaced angular samples; odd, so modes up to 2*angular_order alias-free.
    int angular_count() const { return 2 * angular_order_ + 1; }
    AreaWeighting area_weighting() const { return weighting_; }

    const std::vector<double>& radial_nodes() const { return full_.nodes; }
    const std::vector<double>& radial_weights() const { return full_.weights; }
    const GaussRule& coarse_rule() const { return half_; }

    double angular_node(int j) const {
        return 2.0 * std::numbers::pi * j / angular_count();
    }

    /// Measure factor at radius u: u du (euclidean) or rho(u) u du (hyperbolic).
    double radial_measure(double u) const {
        return weighting_ == AreaWeighting::hyperbolic ? rho_radial(u) * u : u;
    }

    /// Full-disk integral of f(u, theta) against the grid's area weighting.
    template <class F>
    double integrate(F&& f) const {
        return integrate_on(full_, f);
    }

    template <class F>
    IntegralEstimate integrate_with_error(F&& f) const {
        const double v = integrate_on(full_, f);
        const double c = integrate_on(half_, f);
        return {v, error_floor(v, c)};
    }

    /// Integral over the subdisk of Euclidean radius R of a radial integrand,
    /// with the 2*pi angular factor included.
    template <class F>
    double integrate_subdisk_radial(F&& g, double euclid_radius) const {
        return subdisk_on(full_, g, euclid_radius);
    }

    template <class F>
    IntegralEstimate integrate_subdisk_radial_with_error(F&& g, double euclid_radius) const {
        const double v = subdisk_on(full_, g, euclid_radius);
        const double c = subdisk_on(half_, g, euclid_radius);
        return {v, error_floor(v, c)};
    }

    /// sum_i w_i u_i [rho(u_i)] values_i  — the radial part of a single angular
    /// mode integral (no angular factor).
    template <class Vec>
    auto radial_mode_integral(const Vec& values) const {
        using T = std::decay_t<decltype(values[0])>;
        T acc{};
        for (int i = 0; i < radial_count(); ++i)
            acc += full_.weights[i] * radial_measure(full_.nodes[i]) * values[i];
        return acc;
    }

    static double error_floor(double v, double coarse) {
        const double raw = std::abs(v - coarse);
        const double floor = 32.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(v));
        return std::max(raw, floor);
    }

private:
    template <class F>
    double integrate_on(const GaussRule& rule, F&& f) const {
        const int m = angular_count();
        const double dtheta = 2.0 * std::numbers::pi / m;
        double total = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            double ang = 0.0;
            for (int j = 0; j < m; ++j) ang += f(u, angular_node(j));
            total += rule.weights[i] * radial_measure(u) * ang * dtheta;
        }
        return total;
    }

    template <class F>
    double subdisk_on(const GaussRule& rule, F&& g, double R) const {
        if (!(R >= 0.0 && R < 1.0))
            throw std::domain_error("integrate_subdisk_radial: radius must lie in [0, 1)");
        double total = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = R * rule.nodes[i];
            total += R * rule.weights[i] * radial_measure(u) * g(u);
        }
        return 2.0 * std::numbers::pi * total;
    }

    GaussRule full_;
    GaussRule half_;
    int angular_order_ = 0;
    AreaWeighting weighting_ = AreaWeighting::hyperbolic;
};

} // namespace wpcurv

/*
   Copyright 2026 The layerpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "layerpoly/numcheck.hpp"

#include "layerpoly/dirichlet.hpp"
#include "layerpoly/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace layerpoly::numcheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-12;
constexpr unsigned kMaxDepth = 25;

// 1 / (cosh(s) + c) for s >= 0 without overflow.
double inv_cosh_plus(double s, double c) {
    const double e = std::exp(-s);
    return 2.0 * e / (1.0 + e * e + 2.0 * c * e);
}

// sinh(s) / (cosh(s) + c)^2 for s >= 0 without overflow.
double sinh_over_cosh_plus_sq(double s, double c) {
    const double e = std::exp(-s);
    const double d = 1.0 + e * e + 2.0 * c * e;
    return -2.0 * e * std::expm1(-2.0 * s) / (d * d);
}

void require_layer(double y, double a) {
    if (!(a > 0.0)) throw DomainError("layer width must be positive");
    if (!(y > 0.0 && y < a)) throw DomainError("y must lie strictly inside (0, a)");
}

// Smallest T (>= a) such that ∫_T^∞ (shift + x)^p e^{-πx/a} dx / a is negligible.
double tail_cutoff(double p, double a, double shift) {
    double t = std::max(a, 2.0 * p * a / kPi + shift);
    const auto tail = [&](double x) { return std::pow(shift + x, p) * std::exp(-kPi * x / a) / kPi * 4.0; };
    while (tail(t) > 1e-16) t *= 1.1;
    return t;
}

template <typename F>
double integrate(F f, double lo, double hi) {
    double error = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, kMaxDepth, kQuadTol, &error, &l1);
    if (!std::isfinite(value) || error > 1e-9 * l1 + 1e-14) {
        throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "], error estimate " + std::to_string(error));
    }
    return value;
}

// ∫_{S²} ω^{2m} dσ = 2 Π Γ(m_i + 1/2) / Γ(|m| + 3/2).
double sphere_moment(const MultiIndex& m) {
    double log_num = std::log(2.0);
    int total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        log_num += std::lgamma(m[i] + 0.5);
        total += m[i];
    }
    return std::exp(log_num - std::lgamma(total + 1.5));
}

} // namespace

double poisson_kernel_1d(double x, double y, double a) {
    require_layer(y, a);
    return std::sin(kPi * y / a) * inv_cosh_plus(kPi * std::abs(x) / a, std::cos(kPi * y / a)) / (2.0 * a);
}

double poisson_kernel_3d(double r, double y, double a) {
    require_layer(y, a);
    if (!(r > 0.0)) throw DomainError("radius must be positive");
    return std::sin(kPi * y / a) * sinh_over_cosh_plus_sq(kPi * r / a, std::cos(kPi * y / a)) / (4.0 * a * a * r);
}

double poisson_kernel_3d_limit(double y, double a) {
    require_layer(y, a);
    const double c = 1.0 + std::cos(kPi * y / a);
    return kPi * std::sin(kPi * y / a) / (4.0 * a * a * a * c * c);
}

double kernel_recurrence_1d_to_3d(double r, double y, double a, double h) {
    if (!(r > h && h > 0.0)) throw DomainError("need 0 < h < r");
    const double dp = (poisson_kernel_1d(r + h, y, a) - poisson_kernel_1d(r - h, y, a)) / (2.0 * h);
    return -dp / (2.0 * kPi * r);
}

double moment_integral(unsigned m, double y, double a, KernelSign kind) {
    if (!(a > 0.0)) throw DomainError("layer width must be positive");
    if (kind == KernelSign::Plus && !(y > -a && y < a)) throw DomainError("need -a < y < a");
    if (kind == KernelSign::Minus && !(y > 0.0 && y < 2.0 * a)) throw DomainError("need 0 < y < 2a");
    const double s = std::sin(kPi * y / a);
    const double c = (kind == KernelSign::Plus ? 1.0 : -1.0) * std::cos(kPi * y / a);
    const double p = 2.0 * m;
    const auto integrand = [&](double x) { return std::pow(x, p) * s * inv_cosh_plus(kPi * x / a, c) / (2.0 * a); };
    // Even integrand: twice the half line.
    const double t = tail_cutoff(p, a, 0.0);
    return 2.0 * (integrate(integrand, 0.0, a) + integrate(integrand, a, t));
}

double moment_integral_3d(const MultiIndex& m, double y, double a) {
    if (m.size() != 3) throw DomainError("3-D moment needs a 3-component multi-index");
    require_layer(y, a);
    const double p = 2.0 * m.total() + 2.0;
    const auto radial = [&](double r) { return r <= 0.0 ? 0.0 : std::pow(r, p) * poisson_kernel_3d(r, y, a); };
    const double t = tail_cutoff(p, a, 0.0);
    return sphere_moment(m) * (integrate(radial, 0.0, a) + integrate(radial, a, t));
}

double trig_series_sum(unsigned m, double y, double a, bool alternating, std::size_t terms) {
    if (!(a > 0.0)) throw DomainError("layer width must be positive");
    const double p = 2.0 * m + 1.0;
    double sum = 0.0;
    for (std::size_t k = terms; k >= 1; --k) {
        const double sign = (alternating && k % 2 == 0) ? -1.0 : 1.0;
        sum += sign * std::sin(kPi * static_cast<double>(k) * y / a) / std::pow(static_cast<double>(k), p);
    }
    return sum;
}

double trig_series_closed_form(unsigned m, double y, double a, bool alternating) {
    const Poly f = f_poly(m, Width::formal());
    const double point[] = {alternating ? y : a - y, a};
    const double scale = std::pow(kPi, 2.0 * m + 1.0) / (2.0 * std::tgamma(2.0 * m + 1.0) * std::pow(a, 2.0 * m));
    return scale * eval_real(f, point);
}

double convolution_check(unsigned k, double x, double y, double a) {
    require_layer(y, a);
    const auto integrand = [&](double t) { return std::pow(x - t, static_cast<double>(k)) * poisson_kernel_1d(t, y, a); };
    const double t = tail_cutoff(k, a, std::abs(x));
    return integrate(integrand, -t, -a) + integrate(integrand, -a, 0.0) + integrate(integrand, 0.0, a) +
           integrate(integrand, a, t);
}

double eval_real(const Poly& p, std::span<const double> point) {
    if (point.size() != p.nvars()) throw RingMismatch("eval_real: point has wrong length");
    double sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= std::pow(point[i], e[i]);
        }
        sum += t;
    }
    return sum;
}

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(20240531);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    std::uniform_real_distribution<double> widths(0.5, 3.0);

    const auto record = [&](std::string name, double tol, bool relative, auto&& body) {
        CheckResult r{std::move(name), 0, 0.0, tol, relative, false};
        body([&](double computed, double expected) {
            double err = std::abs(computed - expected);
            if (relative) err /= std::abs(expected);
            r.max_error = std::max(r.max_error, err);
            ++r.samples;
        });
        r.passed = r.samples > 0 && r.max_error <= tol;
        out.push_back(std::move(r));
    };

    record("kernel_1d at (0, a/2)", 1e-15, false, [&](auto sample) { sample(poisson_kernel_1d(0.0, 0.5, 1.0), 0.5); });

    record("kernel_1d mass = y/a", 1e-8, false, [&](auto sample) {
        for (int i = 1; i <= 9; ++i) {
            const double y = 0.1 * i;
            sample(moment_integral(0, y, 1.0), y);
        }
    });

    record("kernel_3d mass = y/a", 1e-6, false, [&](auto sample) {
        for (const double y : {0.3, 0.5, 0.7}) sample(moment_integral_3d(MultiIndex{0, 0, 0}, y, 1.0), y);
    });

    record("kernel_3d r->0 limit", 1e-8, true, [&](auto sample) {
        for (const double y : {0.2, 0.5, 0.8}) sample(poisson_kernel_3d(1e-6, y, 1.0), poisson_kernel_3d_limit(y, 1.0));
    });

    record("kernel recurrence P3 = -(1/2 pi r) dP1/dr", 1e-5, false, [&](auto sample) {
        for (int i = 0; i < 10; ++i) {
            const double a = widths(rng);
            const double y = unit(rng) * a;
            const double r = (0.1 + 2.0 * unit(rng)) * a;
            sample(poisson_kernel_3d(r, y, a), kernel_recurrence_1d_to_3d(r, y, a, 1e-4 * a));
        }
    });

    for (unsigned m = 0; m <= 4; ++m) {
        record("moment m=" + std::to_string(m) + " vs f_" + std::to_string(2 * m), 1e-6, true, [&](auto sample) {
            const Poly f = f_poly(m, Width::formal());
            for (int i = 0; i < 20; ++i) {
                const double a = widths(rng);
                const double y = unit(rng) * a;
                const double point[] = {y, a};
                sample(moment_integral(m, y, a, KernelSign::Plus), eval_real(f, point));
            }
        });
    }

    record("lower-kernel moments vs f_2m(a-y)", 1e-6, true, [&](auto sample) {
        for (unsigned m = 0; m <= 4; ++m) {
            const Poly f = f_poly(m, Width::formal());
            const double a = widths(rng);
            const double y = unit(rng) * a;
            const double point[] = {a - y, a};
            sample(moment_integral(m, y, a, KernelSign::Minus), eval_real(f, point));
        }
    });

    record("3-D moment (2,1,1) = f_8/35", 1e-5, false, [&](auto sample) {
        const Poly f = multiindex_f(MultiIndex{2, 1, 1}, Width::value(Rational(1)));
        const double point[] = {0.5};
        sample(moment_integral_3d(MultiIndex{2, 1, 1}, 0.5, 1.0), eval_real(f, point));
    });

    record("alternating sin(ky)/k^5 at y=1, a=pi", 1e-9, false, [&](auto sample) {
        const double y = 1.0;
        const double closed = y * (3 * std::pow(y, 4) - 10 * kPi * kPi * y * y + 7 * std::pow(kPi, 4)) / 720.0;
        const double partial = trig_series_sum(2, y, kPi, true, 10000);
        sample(partial, closed);
        sample(trig_series_closed_form(2, y, kPi, true), closed);
    });

    record("sin(ky)/k^5 at y=1, a=pi", 1e-9, false, [&](auto sample) {
        const double y = 1.0;
        const double closed =
            y * (kPi - y) * (3 * y * y * y - 12 * kPi * y * y + 8 * kPi * kPi * y + 8 * std::pow(kPi, 3)) / 720.0;
        sample(trig_series_sum(2, y, kPi, false, 10000), closed);
        sample(trig_series_closed_form(2, y, kPi, false), closed);
    });

    record("convolution x^k * P1 vs u_k", 1e-6, false, [&](auto sample) {
        for (unsigned k = 0; k < 10; ++k) {
            const double a = widths(rng);
            const double y = unit(rng) * a;
            const double x = 2.0 * unit(rng) - 1.0;
            const unsigned deg = k % 7;
            const Poly u = basis_u(MultiIndex{static_cast<int>(deg)}, 1, Width::formal());
            const double point[] = {x, y, a};
            sample(convolution_check(deg, x, y, a), eval_real(u, point));
        }
    });

    return out;
}

} // namespace layerpoly::numcheck

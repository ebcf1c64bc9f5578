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

#pragma once

#include "layerpoly/poly.hpp"

#include <span>
#include <string>
#include <vector>

// Floating-point cross-checks of the exact tables against the kernel
// integrals and trigonometric series they represent. Nothing in the exact
// solver depends on this code.
namespace layerpoly::numcheck {

/// Sign of cos(πy/a) in the denominator of the 1-D kernel.
enum class KernelSign {
    Plus,   // kernel of the upper boundary: moments give f_{2m}(y)
    Minus,  // kernel of the lower boundary: moments give f_{2m}(a - y)
};

/// P_1(x, y) = (1/2a) sin(πy/a) / (cosh(πx/a) + cos(πy/a)), 0 < y < a.
double poisson_kernel_1d(double x, double y, double a);

/// P_3(r, y) = (1/4a²) sin(πy/a) sinh(πr/a) / (r (cosh(πr/a) + cos(πy/a))²),
/// r > 0, 0 < y < a.
double poisson_kernel_3d(double r, double y, double a);

/// lim_{r→0} P_3(r, y) = π sin(πy/a) / (4a³ (1 + cos(πy/a))²).
double poisson_kernel_3d_limit(double y, double a);

/// -(1/2πr) ∂P_1/∂r by a central difference with step h.
double kernel_recurrence_1d_to_3d(double r, double y, double a, double h);

/// (1/2a) ∫_R x^{2m} sin(πy/a) / (cosh(πx/a) ± cos(πy/a)) dx.
/// Domain: -a < y < a (Plus), 0 < y < 2a (Minus).
double moment_integral(unsigned m, double y, double a, KernelSign kind = KernelSign::Plus);

/// ∫_{R³} x^{2m} P_3(|x|, y) dx for a 3-component multi-index m, reduced to a
/// radial quadrature times the exact sphere moment.
double moment_integral_3d(const MultiIndex& m, double y, double a);

/// Partial sum Σ_{k=1}^{terms} (±1)^{k-1} sin(πky/a) / k^{2m+1}, summed from
/// the smallest term up.
double trig_series_sum(unsigned m, double y, double a, bool alternating, std::size_t terms);

/// π^{2m+1} / (2 (2m)! a^{2m}) · f_{2m}(y) (alternating) or f_{2m}(a - y).
double trig_series_closed_form(unsigned m, double y, double a, bool alternating);

/// ∫_R (x - t)^k P_1(t, y) dt, which equals u_k(x, y).
double convolution_check(unsigned k, double x, double y, double a);

/// Evaluates p at a real point, coefficients rounded to double.
double eval_real(const Poly& p, std::span<const double> point);

struct CheckResult {
    std::string name;
    std::size_t samples = 0;
    double max_error = 0.0;  // worst |computed - expected|, relative if `relative`
    double tolerance = 0.0;
    bool relative = false;
    bool passed = false;
};

/// The standard cross-check table: kernel normalisation, the dimension
/// recurrence, moments against f_{2m}, series sums, convolutions against u_k.
std::vector<CheckResult> run_all();

} // namespace layerpoly::numcheck

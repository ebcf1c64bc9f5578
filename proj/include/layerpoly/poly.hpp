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

#include "layerpoly/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace layerpoly {

/// Exponent vector over the ring variables.
///
/// Entries are signed only so that the formal width symbol can carry the
/// 1/a factor of the Dirichlet tables; every other slot stays non-negative.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t size) : exps_(size, 0) {}
    MultiIndex(std::initializer_list<int> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int& operator[](std::size_t i) { return exps_[i]; }

    /// Sum of the entries, |k|.
    int total() const;

    const std::vector<int>& exponents() const { return exps_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> exps_;
};

/// Strict weak order that lists terms canonically: higher total degree first,
/// ties broken by descending lexicographic order of the exponent vector.
struct CanonicalOrder {
    bool operator()(const MultiIndex& lhs, const MultiIndex& rhs) const;
};

/// Sparse multivariate (Laurent in the width slot) polynomial with exact
/// rational coefficients. Zero coefficients are never stored, so two values are
/// equal iff their term maps are equal.
class Poly {
public:
    using Terms = std::map<MultiIndex, Rational, CanonicalOrder>;

    explicit Poly(std::size_t nvars);

    static Poly constant(std::size_t nvars, const Rational& value);
    static Poly variable(std::size_t nvars, std::size_t var);
    static Poly monomial(const MultiIndex& exps, const Rational& coeff = Rational(1));

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(const MultiIndex& exps) const;
    Rational constant_term() const;

    /// Total degree (sum of exponents) of the leading term; -1 for zero.
    int degree() const;
    /// Highest exponent of `var`; -1 for zero.
    int degree_in(std::size_t var) const;
    /// Lowest exponent of `var`; 0 for zero.
    int min_degree_in(std::size_t var) const;

    /// Adds coeff * x^exps in place.
    void add_term(const MultiIndex& exps, const Rational& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

    Poly pow(unsigned exponent) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::size_t nvars_;
    Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// order-th partial derivative with respect to `var`.
Poly diff(const Poly& p, std::size_t var, unsigned order = 1);

/// Sum of the second partials in the first n+1 slots (x1..xn, y).
Poly laplacian(const Poly& p, std::size_t n);

/// Replaces variable `var` by the polynomial `value` (same ring). A negative
/// exponent of `var` requires `value` to be a nonzero constant.
Poly substitute(const Poly& p, std::size_t var, const Poly& value);

/// Exact value at `point` (one entry per ring variable).
Rational eval(const Poly& p, std::span<const Rational> point);

/// Moves every term into a ring with `nvars` variables; slot i of `p` goes to
/// slot target[i]. Slots of `p` missing from `target` (npos) must be unused.
Poly remap(const Poly& p, std::size_t nvars, std::span<const std::size_t> target);

/// Variable layout of a layer-problem ring: x1..xn, y, and optionally the
/// formal width symbol a in the last slot.
struct Vars {
    std::size_t dim = 1;
    bool width = false;

    std::size_t nvars() const { return dim + 1 + (width ? 1 : 0); }
    std::size_t x(std::size_t i) const { return i; }
    std::size_t y() const { return dim; }
    std::size_t a() const { return dim + 1; }

    /// Variable names used by the canonical text form: x1..xn, y, a.
    std::vector<std::string> names() const;

    friend bool operator==(const Vars&, const Vars&) = default;
};

/// Re-expresses `p` (written in layout `from`) in layout `to`. Spatial
/// variables keep their index; y and a keep their role.
Poly change_layout(const Poly& p, const Vars& from, const Vars& to);

/// x^k in the layout `vars`, with k over the spatial variables only.
Poly x_power(const Vars& vars, const MultiIndex& k, const Rational& coeff = Rational(1));

} // namespace layerpoly

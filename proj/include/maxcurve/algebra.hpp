/*
 * Copyright (C) 2026 The maxcurve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Exact polynomial and truncated power-series arithmetic over FieldElements:
 * dense univariate polynomials, sparse bivariate polynomials, Hasse
 * derivatives, order-by-order lifting of an algebraic function y(x) at an
 * unramified point, and rank-profile linear algebra over series.
 */

#ifndef MAXCURVE_ALGEBRA_HPP
#define MAXCURVE_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxcurve/gf.hpp"

namespace maxcurve::algebra {

using gf::FieldElement;
using gf::FieldSpec;

/// C(n, k) mod p via base-p digit products (Lucas).
int lucas_binom(unsigned long long n, unsigned long long k, int p);

/// Dense univariate polynomial, constant term first; no stored trailing
/// zeros, so the zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
    explicit UniPoly(const FieldSpec& spec) : spec_(&spec) {}
    UniPoly(const FieldSpec& spec, std::vector<std::uint32_t> coeff_indices);
    static UniPoly monomial(const FieldSpec& spec, const FieldElement& c, long deg);
    static UniPoly from_coeffs(const FieldSpec& spec, const std::vector<FieldElement>& coeffs);

    const FieldSpec& spec() const { return *spec_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(long i) const;
    FieldElement leading() const;
    void set_coeff(long i, const FieldElement& v);

    FieldElement eval(const FieldElement& x) const;
    /// i-th Hasse derivative: D^i(x^n) = C(n, i) x^{n-i}, extended linearly.
    UniPoly hasse(long i) const;
    UniPoly pow(unsigned long long e) const;  // p-power steps use the Frobenius shortcut
    UniPoly shifted(long n) const;            // multiply by x^n

    /// (quotient, remainder) with divisor != 0.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const FieldElement& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.spec_ == b.spec_ && a.c_ == b.c_;
    }

    const std::vector<std::uint32_t>& raw() const { return c_; }

private:
    void trim();
    const FieldSpec* spec_;
    std::vector<std::uint32_t> c_;
};

/// Sparse bivariate polynomial; term map keyed by (x-exponent, y-exponent),
/// zero coefficients never stored.
class BiPoly {
public:
    explicit BiPoly(const FieldSpec& spec) : spec_(&spec) {}

    const FieldSpec& spec() const { return *spec_; }
    bool is_zero() const { return terms_.empty(); }
    long x_degree() const;
    long y_degree() const;
    void add_term(long xe, long ye, const FieldElement& c);
    FieldElement coeff(long xe, long ye) const;
    const std::map<std::pair<long, long>, std::uint32_t>& terms() const { return terms_; }

    FieldElement eval(const FieldElement& x, const FieldElement& y) const;
    BiPoly hasse_x(long i) const;
    BiPoly hasse_y(long i) const;
    /// Characteristic-p cube (p = 3): term-wise coefficient cube, exponents
    /// tripled. Exact by additivity of the p-power map.
    BiPoly cube() const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly scaled(const FieldElement& c) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    /// Group terms by y-exponent: j -> A_j(x).
    std::map<long, UniPoly> collect_by_y() const;
    static BiPoly from_x_poly(const UniPoly& p);
    static BiPoly from_y_poly(const UniPoly& p);

private:
    const FieldSpec* spec_;
    std::map<std::pair<long, long>, std::uint32_t> terms_;
};

/// Truncated power series in a local parameter t: value + O(t^precision).
/// Arithmetic results carry the minimum precision of the operands.
class TruncSeries {
public:
    TruncSeries(const FieldSpec& spec, int precision);
    static TruncSeries constant(const FieldElement& c, int precision);
    /// c0 + c1 t
    static TruncSeries linear(const FieldElement& c0, const FieldElement& c1, int precision);

    const FieldSpec& spec() const { return *spec_; }
    int precision() const { return prec_; }
    FieldElement coeff(int i) const;
    void set_coeff(int i, const FieldElement& v);
    /// Index of the first nonzero coefficient, or nullopt when the series
    /// vanishes to full precision ("order >= precision").
    std::optional<int> order() const;
    TruncSeries truncated(int precision) const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const FieldElement& c) const;
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.spec_ == b.spec_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    TruncSeries hasse(long i) const;  // precision drops by i
    /// Characteristic-p cube: c_j -> c_j^p at index p*j (p = 3).
    TruncSeries cube() const;
    TruncSeries pow(unsigned long long e) const;

    const std::vector<std::uint32_t>& raw() const { return c_; }

private:
    friend TruncSeries mul_capped(const TruncSeries& a, const TruncSeries& b, int prec);
    const FieldSpec* spec_;
    int prec_;
    std::vector<std::uint32_t> c_;
};

/// Expansion of g at x0: the series g(x0 + t), coefficients (D^m g)(x0).
TruncSeries taylor_shift(const UniPoly& g, const FieldElement& x0, int precision);

struct SingularPointError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotOnCurveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RankDeficiencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unique series y(t) with y(0) = y0 and f(x0 + t, y(t)) = 0 mod t^precision,
/// built by the order-by-order coefficient recurrence. Requires f(x0,y0) = 0
/// and dF/dy(x0,y0) != 0.
TruncSeries series_solve(const BiPoly& f, const FieldElement& x0, const FieldElement& y0,
                         int precision);

/// Pivot columns of exact Gaussian elimination on the coefficient matrix
/// (columns t^0..t^{M-1}): the strictly increasing vanishing orders of the row
/// span. Throws RankDeficiencyError when fewer pivots than rows exist below
/// the shared precision.
std::vector<long> rank_profile(const std::vector<TruncSeries>& rows);

/// Exact determinant of a square matrix of series (n <= 6), by Laplace
/// expansion with cached column-subset minors.
TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& mat);

/// Canonical representative of g modulo f, where f = L(y) - R(x) with L
/// additive in y (all y-exponents are p-powers) and unit top coefficient.
/// The result has y-degree strictly below deg_y(f).
BiPoly reduce_y_powers(const BiPoly& f, const BiPoly& g);

}  // namespace maxcurve::algebra

#endif

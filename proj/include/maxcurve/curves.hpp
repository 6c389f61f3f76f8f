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
 * The curve families under study, over F_{q^2} with q = 3^t:
 *
 *   as-max             sum_{i=1..t} y^{q/3^i} = a x^{q+1},  a^{q-1} = -1,
 *                      genus q(q-3)/6, one place at infinity;
 *   hermitian          y^q + y = x^{q+1}, genus q(q-1)/2;
 *   hermitian-as-model y1^q - y1 = a x^{q+1}, a plane model of the Hermitian
 *                      curve that covers as-max via y = y1^3 - y1.
 *
 * Exact rational-point counting by two independent algorithms, fiber
 * structure of the degree-q/3 projection, the covering and isomorphism maps,
 * closed forms for the Hasse derivatives of y, the Frobenius identity for
 * y^{q^2} - y, and the Weierstrass-normal-form coefficient checks.
 */

#ifndef MAXCURVE_CURVES_HPP
#define MAXCURVE_CURVES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxcurve/algebra.hpp"
#include "maxcurve/gf.hpp"

namespace maxcurve::curves {

using algebra::BiPoly;
using algebra::TruncSeries;
using algebra::UniPoly;
using gf::FieldElement;
using gf::FieldSpec;

/// F_3-linear operator z -> sum c_e z^{3^e}; the left-hand side of every
/// built-in curve equation.
class AdditiveOperator {
public:
    AdditiveOperator(const FieldSpec& spec, std::vector<std::pair<int, FieldElement>> terms);

    const FieldSpec& spec() const { return *spec_; }
    const std::vector<std::pair<int, FieldElement>>& terms() const { return terms_; }

    FieldElement operator()(const FieldElement& z) const;
    /// As a univariate polynomial in z.
    UniPoly as_poly() const;
    /// All roots of L in the field (an F_3-subspace).
    std::vector<FieldElement> kernel() const;

private:
    const FieldSpec* spec_;
    std::vector<std::pair<int, FieldElement>> terms_;  // (e, c): c z^{3^e}, e ascending
};

enum class Family { as_max, hermitian, hermitian_as_model };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct CurveModel {
    Family family;
    const FieldSpec* field;  // F_{q^2}
    std::uint64_t q;
    int t;                   // q = 3^t
    FieldElement a;          // parameter of the AS families; one() for hermitian
    BiPoly f;                // defining polynomial, L(y) - rhs_coeff x^{q+1}
    AdditiveOperator yop;    // L
    FieldElement rhs_coeff;  // a for the AS families, 1 for hermitian
    long long genus;
    long long degree;        // q + 1
    int ndim;                // dimension of the degree-(q+1) very ample series
    int infinity_places;     // 1 for every built-in family

    const FieldSpec& spec() const { return *field; }
};

/// Curve over the canonical F_{q^2}; a defaults to the deterministic
/// find_special_a choice (ignored for the hermitian family).
CurveModel make_curve(Family family, std::uint64_t q,
                      std::optional<FieldElement> a = std::nullopt);

/// Same curve equation with coefficients pushed into an extension field of
/// F_{q^2} (for sampling non-rational points).
CurveModel make_curve_over(Family family, std::uint64_t q, const FieldSpec& field,
                           const FieldElement& a_embedded);

struct RationalPoint {
    bool at_infinity = false;
    FieldElement x, y;  // valid only when affine
};

/// Affine points sorted by (x index, y index); built from the structured
/// fiber solver.
std::vector<RationalPoint> affine_points(const CurveModel& curve);

enum class CountMethod { brute, structured, both };

struct PointCountReport {
    std::string family;
    std::uint64_t q;
    std::string a_digits;
    long long affine = 0;
    long long infinity = 0;
    long long total = 0;
    long long genus = 0;
    long long hasse_weil_max = 0;
    bool maximal = false;
    std::map<long long, long long> fiber_histogram;  // fiber size -> #x values
    std::optional<long long> brute_affine;
    std::optional<long long> structured_affine;
    bool methods_agree = true;
};

/// Counts F_{q^2}-rational points. brute evaluates the defining polynomial on
/// every coordinate pair; structured solves L(y) = c x^{q+1} fiber by fiber
/// through the kernel/image of the additive operator. With `both`, the two
/// totals must agree.
PointCountReport count_points(const CurveModel& curve, CountMethod method = CountMethod::both);

struct FiberReport {
    std::uint64_t q;
    long long fiber_size;        // common size of every fiber (q/3)
    long long fiber_count;       // q^2
    bool all_fibers_equal;
    bool all_points_rational;    // fibers solved inside F_{q^2} by construction
    bool y_partial_is_unit;      // dF/dy constant and nonzero on the whole curve
    bool kernel_inside_Fq;
};
/// as-max only: every x-fiber has exactly q/3 rational points.
FiberReport fiber_report(const CurveModel& curve);

struct CoveringReport {
    std::uint64_t q;
    long long model_affine;   // points of the hermitian-as-model
    long long image_affine;   // distinct images on as-max
    bool surjective;
    bool all_fibers_size_3;
    bool relation_holds_pointwise;  // every image satisfies the as-max equation
    bool operator_identity;         // L(z^3 - z) = z^q - z as polynomials
};
/// Remark-level covering: (x, y1) -> (x, y1^3 - y1) from the hermitian-as
/// model onto as-max, same a.
CoveringReport covering_check(std::uint64_t q, const FieldElement& a);

struct IsomorphismReport {
    std::uint64_t q;
    FieldElement alpha;      // alpha^{q+1} = a1/a2
    bool bijective;          // (x,y) -> (alpha x, y) carries curve(a1) onto curve(a2)
    long long count_a1;
    long long count_a2;
};
IsomorphismReport isomorphism_check(std::uint64_t q, const FieldElement& a1,
                                    const FieldElement& a2);

/// Hasse-derivative table for y as a function of x on an additive curve
/// L(y) = c x^{q+1}: entry k (1 <= k <= max_order) is the polynomial D^k y,
/// obtained from the coefficient recurrence of L(Y(t)) = c (x+t)^{q+1}.
std::vector<UniPoly> hasse_y_table(const CurveModel& curve, int max_order);

struct HasseFormsReport {
    std::uint64_t q;
    UniPoly dy;      // a x^q
    UniPoly d3y;     // -a^3 x^{3q}
    bool d2y_zero;
    bool d3pow_zero;           // D^{3^i} y = 0 for i = 2..t-1
    bool table_matches;        // closed forms equal the recurrence table
    int points_verified;       // series-oracle agreement count
    long long v_p0_dy;         // -q^2/3 = q * v_{P0}(x)
    long long v_p0_x;          // -q/3
};
/// as-max, q >= 9: closed forms for Dy, D^2 y, D^3 y, D^{3^i} y, each checked
/// against the lifted-series oracle at `verify_points` affine rational points.
HasseFormsReport hasse_y_closed_forms(const CurveModel& curve, int verify_points = 20);

/// y^{q^2} reduced modulo the curve: equals y + P(x); returns P.
UniPoly frobenius_power_reduction(const CurveModel& curve);

struct FrobeniusIdentityReport {
    std::uint64_t q;
    bool y_free;             // y^{q^2} - y reduces to a polynomial in x
    bool identity_holds;     // equals (x^{q^2}-x) Dy + (x^{q^2}-x)^3 D^3 y
    bool divisible;          // x^{q^2} - x divides it
    long long reduced_degree;
};
FrobeniusIdentityReport frobenius_identity_check(const CurveModel& curve);

struct NormalFormCoefficients {
    std::map<long, UniPoly> a_polys;     // i -> A_i(x), i = 0..q/3
    std::vector<FieldElement> b_coeffs;  // coefficients of A_0
    bool degrees_ok;                     // deg A_i <= q - 3i
    bool top_constant_unit;              // A_{q/3} a nonzero constant
    bool final_form;                     // A_i = 0 off the 3-power indices, constants on them, B = 0
    bool power_relation;                 // A_{3^i} = (A_3/A_1^3)^{(3^i-1)/2} A_1^{3^i}
    FieldElement derived_a;              // solve_a(A_1, A_3)
    bool roundtrip_ok;                   // y -> y/(a A_1) lands exactly on the admissible family
};
/// Requires the defining polynomial in the shape x^{q+1} + sum A_i(x) y^i = 0
/// after scaling.
NormalFormCoefficients normal_form_extract(const CurveModel& curve);

/// a with a^2 = A_3/A_1^3 and a^{q-1} = -1 (first in enumeration order);
/// throws when no such element exists.
FieldElement solve_a(const FieldElement& a1, const FieldElement& a3, const FieldSpec& spec);

}  // namespace maxcurve::curves

#endif

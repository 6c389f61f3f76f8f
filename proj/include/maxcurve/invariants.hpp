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
 * Integer-side invariants: genus-spectrum bounds for maximal curves,
 * Hasse-Weil counts, Castelnuovo numbers, Riemann-Roch dimensions in the
 * non-special range, and the numerical-semigroup engine (membership, gaps,
 * genus, and exhaustive completion enumeration). Exact integer arithmetic
 * throughout; no floating point.
 */

#ifndef MAXCURVE_INVARIANTS_HPP
#define MAXCURVE_INVARIANTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace maxcurve::invariants {

/// Hasse-Weil upper bound count q^2 + 1 + 2qg attained by a maximal curve.
long long hw_max_count(long long q, long long g);

struct BoundsReport {
    long long q;
    long long g1;  // q(q-1)/2
    long long g2;  // floor((q-1)^2 / 4)
    long long g3;  // floor((q^2-q+4) / 6)
};
BoundsReport genus_spectrum(long long q);

struct CastelnuovoResult {
    long long d;
    long long r;
    long long eps;  // unique value in [0, r-2] with d-1 = eps mod (r-1)
    long long c;    // (d-1-eps)(d-r+eps) / (2(r-1))
};
CastelnuovoResult castelnuovo(long long d, long long r);

/// Admissible embedding dimensions for a degree-(q+1) very ample series on a
/// maximal curve of genus q(q-3)/6: N = 2 needs the full Hermitian genus, and
/// N with c(q+1, N) below the genus is impossible. Returns the survivors in
/// [3, q].
std::vector<int> dimension_window(long long q);

/// dim of a degree-deg divisor class on a genus-g curve, valid only in the
/// non-special range deg > 2g-2 where it equals deg - g.
long long rr_dim(long long deg, long long g);

class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(std::vector<long long> gens);
    /// From an explicit membership table on [0, bound]; everything above the
    /// table is a member. The table must already be additively closed.
    static NumericalSemigroup from_membership(std::vector<std::uint8_t> member);

    const std::vector<long long>& generators() const { return gens_; }  // minimal
    const std::vector<long long>& gaps() const { return gaps_; }
    long long genus() const { return static_cast<long long>(gaps_.size()); }
    long long conductor() const { return conductor_; }
    bool contains(long long n) const;
    std::vector<long long> first_elements(int count) const;
    long long bound() const { return static_cast<long long>(member_.size()) - 1; }
    const std::vector<std::uint8_t>& membership() const { return member_; }

    /// Independent closure re-scan: membership closed under addition and
    /// complete above the conductor.
    bool closed_check() const;

private:
    NumericalSemigroup() = default;
    void finish();  // derive gaps, conductor, minimal generators from member_
    std::vector<long long> gens_;
    std::vector<long long> gaps_;
    long long conductor_ = 0;
    std::vector<std::uint8_t> member_;
};

inline NumericalSemigroup semigroup(std::vector<long long> gens) {
    return NumericalSemigroup::from_generators(std::move(gens));
}

struct Completion {
    std::vector<long long> added;  // former gaps of the base, sorted
    NumericalSemigroup semigroup;
};

/// All numerical semigroups T containing base with genus(T) = target_genus,
/// found by backtracking over the base's gaps with forced-closure
/// propagation. Output sorted by the added-gap sets; deterministic.
std::vector<Completion> enumerate_completions(const NumericalSemigroup& base,
                                              long long target_genus);

/// Numeric consistency of the N = 3 (space curve) case for genus q(q-3)/6:
/// the second-order bound, the 2D-order count, and the Frobenius-divisor
/// degree budget.
struct N3CaseReport {
    long long q;
    long long g;
    long long lhs;  // (q+1)(q^2-5q-2)
    long long rhs;  // (2g-2)(4q-1)
    bool eps2_ge_4_excluded;        // lhs < rhs
    std::vector<long long> two_d_orders;  // pairwise sums of {0,1,3,q}
    long long dim_2d_lower;         // |two_d_orders| - 1
    bool dim_2d_at_least_9;
    long long deg_s;                // (1+q)(2g-2) + (q^2+3)(q+1)
    long long point_count;          // q^2 + 1 + 2qg
    bool budget_consistent_eps2_3;  // deg_s >= 4 * point_count
    bool budget_contradicts_eps2_4; // deg_s <  5 * point_count
};
N3CaseReport n3_case_consistency(long long q);

}  // namespace maxcurve::invariants

#endif

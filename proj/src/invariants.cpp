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

#include "maxcurve/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace maxcurve::invariants {

long long hw_max_count(long long q, long long g) {
    if (q < 2 || g < 0) throw std::invalid_argument("need q >= 2 and g >= 0");
    return q * q + 1 + 2 * q * g;
}

BoundsReport genus_spectrum(long long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    return {q, q * (q - 1) / 2, (q - 1) * (q - 1) / 4, (q * q - q + 4) / 6};
}

CastelnuovoResult castelnuovo(long long d, long long r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (d < r) throw std::invalid_argument("need d >= r");
    long long eps = (d - 1) % (r - 1);
    // For r = 2 the modulus is 1 and eps = 0 is forced; otherwise eps <= r-2
    // holds automatically.
    long long num = (d - 1 - eps) * (d - r + eps);
    long long den = 2 * (r - 1);
    if (num % den != 0) throw std::logic_error("Castelnuovo number is not an integer");
    long long c = num / den;
    if (c < 0) throw std::logic_error("negative Castelnuovo number");
    return {d, r, eps, c};
}

std::vector<int> dimension_window(long long q) {
    // genus of the family under study
    long long g = q * (q - 3) / 6;
    std::vector<int> out;
    for (long long n = 3; n <= q; ++n) {
        if (castelnuovo(q + 1, n).c >= g) out.push_back(static_cast<int>(n));
    }
    return out;
}

long long rr_dim(long long deg, long long g) {
    if (deg <= 2 * g - 2)
        throw std::invalid_argument("degree not in the non-special range deg > 2g-2");
    return deg - g;
}

// ---- NumericalSemigroup ----

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> gens) {
    if (gens.empty()) throw std::invalid_argument("need at least one generator");
    for (long long g : gens)
        if (g < 1) throw std::invalid_argument("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    long long d = 0;
    for (long long g : gens) d = std::gcd(d, g);
    if (d != 1) throw std::invalid_argument("gcd of generators is not 1: genus would be infinite");

    // Bound min*max is crude but sits above the conductor of any semigroup
    // generated inside [min, max].
    long long bound = gens.front() * gens.back();
    NumericalSemigroup s;
    s.member_.assign(static_cast<std::size_t>(bound) + 1, 0);
    s.member_[0] = 1;
    for (long long n = 1; n <= bound; ++n)
        for (long long g : gens) {
            if (n >= g && s.member_[static_cast<std::size_t>(n - g)]) {
                s.member_[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    s.finish();
    return s;
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<std::uint8_t> member) {
    if (member.empty() || !member[0]) throw std::invalid_argument("0 must be a member");
    NumericalSemigroup s;
    s.member_ = std::move(member);
    s.finish();
    return s;
}

void NumericalSemigroup::finish() {
    long long bound = static_cast<long long>(member_.size()) - 1;
    gaps_.clear();
    for (long long n = 1; n <= bound; ++n)
        if (!member_[static_cast<std::size_t>(n)]) gaps_.push_back(n);
    conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;

    // minimal generators: nonzero members not expressible as a sum of two
    // nonzero members; everything relevant lies at or below conductor + min
    gens_.clear();
    long long min_nonzero = 0;
    for (long long n = 1; n <= bound; ++n)
        if (member_[static_cast<std::size_t>(n)]) {
            min_nonzero = n;
            break;
        }
    long long gen_bound = std::min(bound, conductor_ + min_nonzero);
    for (long long n = 1; n <= gen_bound; ++n) {
        if (!contains(n)) continue;
        bool decomposable = false;
        for (long long u = min_nonzero; u + min_nonzero <= n; ++u)
            if (contains(u) && contains(n - u)) {
                decomposable = true;
                break;
            }
        if (!decomposable) gens_.push_back(n);
    }
}

bool NumericalSemigroup::contains(long long n) const {
    if (n < 0) return false;
    if (n >= static_cast<long long>(member_.size())) return true;
    return member_[static_cast<std::size_t>(n)] != 0;
}

std::vector<long long> NumericalSemigroup::first_elements(int count) const {
    std::vector<long long> out;
    for (long long n = 0; static_cast<int>(out.size()) < count; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

bool NumericalSemigroup::closed_check() const {
    long long bound = static_cast<long long>(member_.size()) - 1;
    for (long long a = 0; a <= bound; ++a) {
        if (!contains(a)) continue;
        for (long long b = a; a + b <= bound; ++b)
            if (contains(b) && !contains(a + b)) return false;
    }
    // complete above the conductor
    for (long long n = conductor_; n <= bound; ++n)
        if (!contains(n)) return false;
    return true;
}

// ---- completion enumeration ----

namespace {

struct CompletionSearch {
    const NumericalSemigroup& base;
    const std::vector<long long>& gaps;
    long long need;
    long long max_gap;
    std::vector<std::int8_t> state;  // 0 undecided, 1 in, 2 out; by gap index
    std::vector<std::size_t> gap_index_of;  // value -> index in gaps (or npos)
    long long included = 0;
    std::vector<Completion> results;

    explicit CompletionSearch(const NumericalSemigroup& b, long long target)
        : base(b), gaps(b.gaps()), need(b.genus() - target), max_gap(gaps.empty() ? 0 : gaps.back()) {
        state.assign(gaps.size(), 0);
        gap_index_of.assign(static_cast<std::size_t>(max_gap) + 1, static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < gaps.size(); ++i)
            gap_index_of[static_cast<std::size_t>(gaps[i])] = i;
    }

    bool t_contains(long long n) const {
        if (base.contains(n)) return true;
        if (n < 1 || n > max_gap) return false;
        std::size_t idx = gap_index_of[static_cast<std::size_t>(n)];
        return idx != static_cast<std::size_t>(-1) && state[idx] == 1;
    }

    // Mark gamma as included and chase the forced closure: gamma + s must be
    // in T for every member s, and cascades above gamma only. Records touched
    // indices in trail; returns false on contradiction.
    bool include_with_closure(std::size_t idx, std::vector<std::size_t>& trail) {
        std::vector<std::size_t> queue{idx};
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            if (state[i] == 1) continue;
            if (state[i] == 2) return false;
            state[i] = 1;
            trail.push_back(i);
            ++included;
            if (included > need) return false;
            long long gamma = gaps[i];
            for (long long s = 1; gamma + s <= max_gap; ++s) {
                if (!t_contains(s)) continue;
                long long v = gamma + s;
                if (base.contains(v)) continue;
                std::size_t j = gap_index_of[static_cast<std::size_t>(v)];
                if (state[j] == 2) return false;
                if (state[j] == 0) queue.push_back(j);
            }
        }
        return true;
    }

    void undo(const std::vector<std::size_t>& trail) {
        for (std::size_t i : trail) {
            state[i] = 0;
            --included;
        }
    }

    // Gap gamma stays excluded: no two current members may sum to gamma.
    // Indices below are already decided because gaps are processed in
    // increasing order.
    bool exclusion_legal(long long gamma) const {
        for (long long u = 1; 2 * u <= gamma; ++u)
            if (t_contains(u) && t_contains(gamma - u)) return false;
        return true;
    }

    void emit() {
        std::vector<std::uint8_t> member = base.membership();
        std::vector<long long> added;
        for (std::size_t i = 0; i < gaps.size(); ++i)
            if (state[i] == 1) {
                added.push_back(gaps[i]);
                member[static_cast<std::size_t>(gaps[i])] = 1;
            }
        Completion comp{std::move(added), NumericalSemigroup::from_membership(std::move(member))};
        if (!comp.semigroup.closed_check())
            throw std::logic_error("completion search produced a non-closed set");
        results.push_back(std::move(comp));
    }

    void run(std::size_t i) {
        long long undecided = 0;
        for (std::size_t j = i; j < gaps.size(); ++j)
            if (state[j] == 0) ++undecided;
        if (included + undecided < need) return;
        if (i == gaps.size()) {
            if (included == need) emit();
            return;
        }
        if (state[i] != 0) {
            run(i + 1);
            return;
        }
        // include branch
        if (included < need) {
            std::vector<std::size_t> trail;
            if (include_with_closure(i, trail)) run(i + 1);
            undo(trail);
        }
        // exclude branch
        if (exclusion_legal(gaps[i])) {
            state[i] = 2;
            run(i + 1);
            state[i] = 0;
        }
    }
};

}  // namespace

std::vector<Completion> enumerate_completions(const NumericalSemigroup& base,
                                              long long target_genus) {
    if (target_genus >= base.genus())
        throw std::invalid_argument("target genus must be below the base genus");
    if (target_genus < 0) throw std::invalid_argument("target genus must be nonnegative");
    CompletionSearch search(base, target_genus);
    search.run(0);
    std::sort(search.results.begin(), search.results.end(),
              [](const Completion& a, const Completion& b) { return a.added < b.added; });
    return search.results;
}

N3CaseReport n3_case_consistency(long long q) {
    if (q < 9) throw std::invalid_argument("needs q = 3^t >= 9");
    N3CaseReport r;
    r.q = q;
    r.g = q * (q - 3) / 6;
    r.lhs = (q + 1) * (q * q - 5 * q - 2);
    r.rhs = (2 * r.g - 2) * (4 * q - 1);
    r.eps2_ge_4_excluded = r.lhs < r.rhs;

    std::set<long long> sums;
    const long long orders[4] = {0, 1, 3, q};
    for (long long a : orders)
        for (long long b : orders) sums.insert(a + b);
    r.two_d_orders.assign(sums.begin(), sums.end());
    r.dim_2d_lower = static_cast<long long>(r.two_d_orders.size()) - 1;
    r.dim_2d_at_least_9 = r.dim_2d_lower >= 9;

    r.deg_s = (1 + q) * (2 * r.g - 2) + (q * q + 3) * (q + 1);
    r.point_count = hw_max_count(q, r.g);
    r.budget_consistent_eps2_3 = r.deg_s >= 4 * r.point_count;
    r.budget_contradicts_eps2_4 = r.deg_s < 5 * r.point_count;
    return r;
}

}  // namespace maxcurve::invariants

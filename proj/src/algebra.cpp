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

#include "maxcurve/algebra.hpp"

#include <algorithm>

namespace maxcurve::algebra {

namespace {

void check_same_spec(const FieldSpec& a, const FieldSpec& b) {
    if (&a != &b) throw std::invalid_argument("operands from different fields");
}

}  // namespace

int lucas_binom(unsigned long long n, unsigned long long k, int p) {
    if (k > n) return 0;
    // small Pascal triangle mod p for digit binomials
    int result = 1;
    while (n > 0 || k > 0) {
        int nd = static_cast<int>(n % p);
        int kd = static_cast<int>(k % p);
        if (kd > nd) return 0;
        int c = 1;  // C(nd, kd) mod p with nd, kd < p
        for (int i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
        result = (result * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return result;
}

// ---- UniPoly ----

UniPoly::UniPoly(const FieldSpec& spec, std::vector<std::uint32_t> coeff_indices)
    : spec_(&spec), c_(std::move(coeff_indices)) {
    trim();
}

UniPoly UniPoly::monomial(const FieldSpec& spec, const FieldElement& c, long deg) {
    UniPoly r(spec);
    if (!c.is_zero()) {
        r.c_.assign(static_cast<std::size_t>(deg) + 1, 0);
        r.c_[static_cast<std::size_t>(deg)] = c.index();
    }
    return r;
}

UniPoly UniPoly::from_coeffs(const FieldSpec& spec, const std::vector<FieldElement>& coeffs) {
    std::vector<std::uint32_t> idx(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        check_same_spec(spec, coeffs[i].spec());
        idx[i] = coeffs[i].index();
    }
    return UniPoly(spec, std::move(idx));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement UniPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return spec_->zero();
    return {*spec_, c_[static_cast<std::size_t>(i)]};
}

FieldElement UniPoly::leading() const {
    if (c_.empty()) return spec_->zero();
    return {*spec_, c_.back()};
}

void UniPoly::set_coeff(long i, const FieldElement& v) {
    if (i < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1, 0);
    c_[static_cast<std::size_t>(i)] = v.index();
    trim();
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = spec_->mul_idx(acc, x.index());
        acc = spec_->add_idx(acc, c_[i]);
    }
    return {*spec_, acc};
}

UniPoly UniPoly::hasse(long i) const {
    if (i < 0) throw std::invalid_argument("negative derivative order");
    if (i == 0) return *this;
    UniPoly r(*spec_);
    if (static_cast<long>(c_.size()) <= i) return r;
    r.c_.assign(c_.size() - static_cast<std::size_t>(i), 0);
    for (long n = i; n < static_cast<long>(c_.size()); ++n) {
        int b = lucas_binom(static_cast<unsigned long long>(n), static_cast<unsigned long long>(i),
                            spec_->p());
        if (b == 0 || c_[static_cast<std::size_t>(n)] == 0) continue;
        r.c_[static_cast<std::size_t>(n - i)] =
            spec_->mul_idx(c_[static_cast<std::size_t>(n)], spec_->from_int(b).index());
    }
    r.trim();
    return r;
}

UniPoly UniPoly::pow(unsigned long long e) const {
    if (e == 0) return monomial(*spec_, spec_->one(), 0);
    unsigned long long p = static_cast<unsigned long long>(spec_->p());
    if (e % p == 0) {
        UniPoly base = pow(e / p);
        // (sum c_i x^i)^p = sum c_i^p x^{pi} in characteristic p
        UniPoly r(*spec_);
        if (base.c_.empty()) return r;
        r.c_.assign((base.c_.size() - 1) * p + 1, 0);
        for (std::size_t i = 0; i < base.c_.size(); ++i)
            if (base.c_[i] != 0) r.c_[i * p] = spec_->pow_idx(base.c_[i], p);
        r.trim();
        return r;
    }
    return pow(e - 1) * *this;
}

UniPoly UniPoly::shifted(long n) const {
    if (n < 0) throw std::invalid_argument("negative shift");
    if (c_.empty()) return *this;
    UniPoly r(*spec_);
    r.c_.assign(c_.size() + static_cast<std::size_t>(n), 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + n);
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    check_same_spec(*spec_, *divisor.spec_);
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly q(*spec_), r = *this;
    long dd = divisor.degree();
    std::uint32_t lead_inv = spec_->inv_idx(divisor.c_.back());
    if (r.degree() >= dd) q.c_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, 0);
    while (r.degree() >= dd) {
        long shift = r.degree() - dd;
        std::uint32_t f = spec_->mul_idx(r.c_.back(), lead_inv);
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (long j = 0; j <= dd; ++j) {
            std::uint32_t& t = r.c_[static_cast<std::size_t>(shift + j)];
            t = spec_->sub_idx(t, spec_->mul_idx(f, divisor.c_[static_cast<std::size_t>(j)]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = spec_->add_idx(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = spec_->sub_idx(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    check_same_spec(*a.spec_, *b.spec_);
    UniPoly r(*a.spec_);
    if (a.is_zero() || b.is_zero()) return r;
    const FieldSpec& spec = *a.spec_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] = spec.add_idx(r.c_[i + j], spec.mul_idx(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    check_same_spec(*spec_, c.spec());
    UniPoly r(*spec_);
    if (c.is_zero()) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = spec_->mul_idx(c_[i], c.index());
    return r;
}

// ---- BiPoly ----

long BiPoly::x_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

long BiPoly::y_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

void BiPoly::add_term(long xe, long ye, const FieldElement& c) {
    check_same_spec(*spec_, c.spec());
    if (xe < 0 || ye < 0) throw std::invalid_argument("negative exponent");
    auto key = std::make_pair(xe, ye);
    auto it = terms_.find(key);
    std::uint32_t cur = it == terms_.end() ? 0 : it->second;
    std::uint32_t next = spec_->add_idx(cur, c.index());
    if (next == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[key] = next;
    }
}

FieldElement BiPoly::coeff(long xe, long ye) const {
    auto it = terms_.find({xe, ye});
    return {*spec_, it == terms_.end() ? 0u : it->second};
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
    std::uint32_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t term = c;
        term = spec_->mul_idx(term, spec_->pow_idx(x.index(), static_cast<std::uint64_t>(e.first)));
        term = spec_->mul_idx(term, spec_->pow_idx(y.index(), static_cast<std::uint64_t>(e.second)));
        acc = spec_->add_idx(acc, term);
    }
    return {*spec_, acc};
}

BiPoly BiPoly::hasse_x(long i) const {
    BiPoly r(*spec_);
    for (const auto& [e, c] : terms_) {
        if (e.first < i) continue;
        int b = lucas_binom(static_cast<unsigned long long>(e.first),
                            static_cast<unsigned long long>(i), spec_->p());
        if (b == 0) continue;
        r.add_term(e.first - i, e.second, FieldElement(*spec_, c) * spec_->from_int(b));
    }
    return r;
}

BiPoly BiPoly::hasse_y(long i) const {
    BiPoly r(*spec_);
    for (const auto& [e, c] : terms_) {
        if (e.second < i) continue;
        int b = lucas_binom(static_cast<unsigned long long>(e.second),
                            static_cast<unsigned long long>(i), spec_->p());
        if (b == 0) continue;
        r.add_term(e.first, e.second - i, FieldElement(*spec_, c) * spec_->from_int(b));
    }
    return r;
}

BiPoly BiPoly::cube() const {
    if (spec_->p() != 3) throw std::invalid_argument("cube shortcut requires characteristic 3");
    BiPoly r(*spec_);
    for (const auto& [e, c] : terms_)
        r.terms_[{e.first * 3, e.second * 3}] = spec_->pow_idx(c, 3);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, FieldElement(*spec_, c));
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e.first, e.second, -FieldElement(*spec_, c));
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    check_same_spec(*a.spec_, *b.spec_);
    BiPoly r(*a.spec_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second,
                       FieldElement(*a.spec_, ca) * FieldElement(*a.spec_, cb));
    return r;
}

BiPoly BiPoly::scaled(const FieldElement& c) const {
    check_same_spec(*spec_, c.spec());
    BiPoly r(*spec_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = spec_->mul_idx(v, c.index());
    return r;
}

std::map<long, UniPoly> BiPoly::collect_by_y() const {
    std::map<long, UniPoly> out;
    for (const auto& [e, c] : terms_) {
        auto it = out.find(e.second);
        if (it == out.end()) it = out.emplace(e.second, UniPoly(*spec_)).first;
        it->second.set_coeff(e.first, FieldElement(*spec_, c));
    }
    return out;
}

BiPoly BiPoly::from_x_poly(const UniPoly& p) {
    BiPoly r(p.spec());
    for (long i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) r.add_term(i, 0, p.coeff(i));
    return r;
}

BiPoly BiPoly::from_y_poly(const UniPoly& p) {
    BiPoly r(p.spec());
    for (long i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) r.add_term(0, i, p.coeff(i));
    return r;
}

// ---- TruncSeries ----

TruncSeries::TruncSeries(const FieldSpec& spec, int precision)
    : spec_(&spec), prec_(precision), c_(static_cast<std::size_t>(precision), 0) {
    if (precision < 1) throw std::invalid_argument("precision must be positive");
}

TruncSeries TruncSeries::constant(const FieldElement& c, int precision) {
    TruncSeries s(c.spec(), precision);
    s.c_[0] = c.index();
    return s;
}

TruncSeries TruncSeries::linear(const FieldElement& c0, const FieldElement& c1, int precision) {
    TruncSeries s(c0.spec(), precision);
    s.c_[0] = c0.index();
    if (precision > 1) s.c_[1] = c1.index();
    return s;
}

FieldElement TruncSeries::coeff(int i) const {
    if (i < 0 || i >= prec_) throw std::out_of_range("series coefficient beyond precision");
    return {*spec_, c_[static_cast<std::size_t>(i)]};
}

void TruncSeries::set_coeff(int i, const FieldElement& v) {
    if (i < 0 || i >= prec_) throw std::out_of_range("series coefficient beyond precision");
    c_[static_cast<std::size_t>(i)] = v.index();
}

std::optional<int> TruncSeries::order() const {
    for (int i = 0; i < prec_; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return i;
    return std::nullopt;
}

TruncSeries TruncSeries::truncated(int precision) const {
    if (precision > prec_) throw std::invalid_argument("cannot raise series precision");
    TruncSeries s(*spec_, precision);
    std::copy(c_.begin(), c_.begin() + precision, s.c_.begin());
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    if (rhs.prec_ < prec_) {
        prec_ = rhs.prec_;
        c_.resize(static_cast<std::size_t>(prec_));
    }
    for (int i = 0; i < prec_; ++i)
        c_[static_cast<std::size_t>(i)] =
            spec_->add_idx(c_[static_cast<std::size_t>(i)], rhs.c_[static_cast<std::size_t>(i)]);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    check_same_spec(*spec_, *rhs.spec_);
    if (rhs.prec_ < prec_) {
        prec_ = rhs.prec_;
        c_.resize(static_cast<std::size_t>(prec_));
    }
    for (int i = 0; i < prec_; ++i)
        c_[static_cast<std::size_t>(i)] =
            spec_->sub_idx(c_[static_cast<std::size_t>(i)], rhs.c_[static_cast<std::size_t>(i)]);
    return *this;
}

TruncSeries mul_capped(const TruncSeries& a, const TruncSeries& b, int prec) {
    check_same_spec(*a.spec_, *b.spec_);
    prec = std::min({prec, a.prec_, b.prec_});
    TruncSeries r(*a.spec_, prec);
    const FieldSpec& spec = *a.spec_;
    for (int i = 0; i < prec; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j < prec; ++j) {
            if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
            std::uint32_t& t = r.c_[static_cast<std::size_t>(i + j)];
            t = spec.add_idx(t, spec.mul_idx(a.c_[static_cast<std::size_t>(i)],
                                             b.c_[static_cast<std::size_t>(j)]));
        }
    }
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    return mul_capped(a, b, std::min(a.precision(), b.precision()));
}

TruncSeries TruncSeries::scaled(const FieldElement& c) const {
    check_same_spec(*spec_, c.spec());
    TruncSeries r(*spec_, prec_);
    if (c.is_zero()) return r;
    for (int i = 0; i < prec_; ++i)
        r.c_[static_cast<std::size_t>(i)] = spec_->mul_idx(c_[static_cast<std::size_t>(i)], c.index());
    return r;
}

TruncSeries TruncSeries::hasse(long i) const {
    if (i < 0) throw std::invalid_argument("negative derivative order");
    if (i == 0) return *this;
    if (prec_ <= i) throw std::invalid_argument("derivative order exhausts series precision");
    TruncSeries r(*spec_, prec_ - static_cast<int>(i));
    for (long n = i; n < prec_; ++n) {
        int b = lucas_binom(static_cast<unsigned long long>(n), static_cast<unsigned long long>(i),
                            spec_->p());
        if (b == 0) continue;
        r.c_[static_cast<std::size_t>(n - i)] =
            spec_->mul_idx(c_[static_cast<std::size_t>(n)], spec_->from_int(b).index());
    }
    return r;
}

TruncSeries TruncSeries::cube() const {
    if (spec_->p() != 3) throw std::invalid_argument("cube shortcut requires characteristic 3");
    TruncSeries r(*spec_, prec_);
    for (int i = 0; 3 * i < prec_; ++i)
        r.c_[static_cast<std::size_t>(3 * i)] = spec_->pow_idx(c_[static_cast<std::size_t>(i)], 3);
    return r;
}

TruncSeries TruncSeries::pow(unsigned long long e) const {
    if (e == 0) return constant(spec_->one(), prec_);
    unsigned long long p = static_cast<unsigned long long>(spec_->p());
    if (p == 3 && e % 3 == 0) return pow(e / 3).cube();
    if (e == 1) return *this;
    return pow(e - 1) * *this;
}

TruncSeries taylor_shift(const UniPoly& g, const FieldElement& x0, int precision) {
    TruncSeries s(g.spec(), precision);
    for (int m = 0; m < precision; ++m) {
        if (m > g.degree()) break;
        s.set_coeff(m, g.hasse(m).eval(x0));
    }
    return s;
}

// ---- series_solve ----

TruncSeries series_solve(const BiPoly& f, const FieldElement& x0, const FieldElement& y0,
                         int precision) {
    const FieldSpec& spec = f.spec();
    check_same_spec(spec, x0.spec());
    check_same_spec(spec, y0.spec());
    if (!f.eval(x0, y0).is_zero()) throw NotOnCurveError("f(x0, y0) != 0");
    FieldElement fy = f.hasse_y(1).eval(x0, y0);
    if (fy.is_zero()) throw SingularPointError("dF/dy vanishes at the expansion point");
    FieldElement fy_inv = fy.inv();

    // Group by y-exponent: f(x0 + t, y) = sum_j B_j(t) y^j.
    auto groups = f.collect_by_y();
    std::vector<std::pair<unsigned long long, TruncSeries>> parts;
    parts.reserve(groups.size());
    for (const auto& [j, a] : groups)
        parts.emplace_back(static_cast<unsigned long long>(j), taylor_shift(a, x0, precision));

    TruncSeries y(spec, precision);
    y.set_coeff(0, y0);
    for (int m = 1; m < precision; ++m) {
        // Residual coefficient at t^m of f(x0 + t, y_partial); y_partial has
        // zero coefficients at index >= m, so this is linear in the unknown.
        int cap = m + 1;
        TruncSeries residual(spec, cap);
        for (const auto& [j, bj] : parts) {
            TruncSeries term = bj.truncated(cap);
            if (j > 0) term = mul_capped(term, y.truncated(cap).pow(j), cap);
            residual += term;
        }
        y.set_coeff(m, -(residual.coeff(m) * fy_inv));
    }
    return y;
}

// ---- rank profile ----

std::vector<long> rank_profile(const std::vector<TruncSeries>& rows) {
    if (rows.empty()) return {};
    const FieldSpec& spec = rows[0].spec();
    int prec = rows[0].precision();
    for (const auto& r : rows) {
        check_same_spec(spec, r.spec());
        if (r.precision() != prec) throw std::invalid_argument("rows must share precision");
    }
    if (static_cast<int>(rows.size()) > prec)
        throw std::invalid_argument("more rows than series coefficients");

    std::vector<std::vector<std::uint32_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(r.raw());

    std::vector<long> pivots;
    std::size_t next_row = 0;
    for (int col = 0; col < prec && next_row < m.size(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < m.size() && m[pivot_row][static_cast<std::size_t>(col)] == 0) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[next_row], m[pivot_row]);
        std::uint32_t inv = spec.inv_idx(m[next_row][static_cast<std::size_t>(col)]);
        for (std::size_t r = next_row + 1; r < m.size(); ++r) {
            std::uint32_t v = m[r][static_cast<std::size_t>(col)];
            if (v == 0) continue;
            std::uint32_t factor = spec.mul_idx(v, inv);
            for (int cc = col; cc < prec; ++cc) {
                std::size_t c = static_cast<std::size_t>(cc);
                m[r][c] = spec.sub_idx(m[r][c], spec.mul_idx(factor, m[next_row][c]));
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    if (pivots.size() < m.size())
        throw RankDeficiencyError("rank below row count within the series precision");
    return pivots;
}

// ---- series determinant ----

TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& mat) {
    std::size_t n = mat.size();
    if (n == 0 || n > 6) throw std::invalid_argument("determinant size must be in [1, 6]");
    const FieldSpec& spec = mat[0][0].spec();
    int prec = mat[0][0].precision();
    for (const auto& row : mat) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
        for (const auto& e : row) {
            check_same_spec(spec, e.spec());
            prec = std::min(prec, e.precision());
        }
    }

    // minors[mask] after processing r rows = det of rows 0..r-1 on the column
    // set encoded by mask.
    std::vector<TruncSeries> minors;
    std::vector<char> present(static_cast<std::size_t>(1) << n, 0);
    minors.assign(static_cast<std::size_t>(1) << n, TruncSeries(spec, prec));
    minors[0] = TruncSeries::constant(spec.one(), prec);
    present[0] = 1;

    for (std::size_t r = 0; r < n; ++r) {
        std::vector<TruncSeries> next(static_cast<std::size_t>(1) << n, TruncSeries(spec, prec));
        std::vector<char> next_present(static_cast<std::size_t>(1) << n, 0);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (!present[mask] || static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
            // Laplace along row r: sign is (-1)^{r + position of c in the
            // sorted column set}.
            int below = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) {
                    ++below;
                    continue;
                }
                TruncSeries contrib = mat[r][c] * minors[mask];
                if ((static_cast<int>(r) + below) % 2 == 1) contrib = contrib.scaled(-spec.one());
                std::uint32_t m2 = mask | (1u << c);
                if (!next_present[m2]) {
                    next[m2] = contrib;
                    next_present[m2] = 1;
                } else {
                    next[m2] += contrib;
                }
            }
        }
        minors = std::move(next);
        present = std::move(next_present);
    }
    return minors[(1u << n) - 1];
}

// ---- y-power reduction ----

namespace {

struct AdditiveShape {
    long top_exp;                    // q/3-style top y-exponent (a p-power)
    FieldElement top_coeff;          // unit
    BiPoly lower;                    // f - top_coeff * y^{top_exp}, so y^{top} = -lower / top_coeff
};

AdditiveShape parse_additive(const BiPoly& f) {
    const FieldSpec& spec = f.spec();
    long top = f.y_degree();
    if (top < 1) throw std::invalid_argument("malformed relation: no y term");
    // every y-exponent must be a p-power, with constant coefficient
    for (const auto& [e, c] : f.terms()) {
        long j = e.second;
        if (j == 0) continue;
        while (j % spec.p() == 0) j /= spec.p();
        if (j != 1) throw std::invalid_argument("malformed relation: y-exponent is not a p-power");
        if (e.first != 0)
            throw std::invalid_argument("malformed relation: mixed x in an additive y-term");
    }
    FieldElement top_coeff = f.coeff(0, top);
    if (top_coeff.is_zero()) throw std::invalid_argument("malformed relation");
    BiPoly lower = f;
    lower.add_term(0, top, -top_coeff);
    return {top, top_coeff, lower};
}

}  // namespace

BiPoly reduce_y_powers(const BiPoly& f, const BiPoly& g) {
    check_same_spec(f.spec(), g.spec());
    const FieldSpec& spec = f.spec();
    AdditiveShape shape = parse_additive(f);
    // y^{top} = rhs, where rhs has y-degree < top
    BiPoly rhs = shape.lower.scaled(-shape.top_coeff.inv());

    BiPoly cur = g;
    while (cur.y_degree() >= shape.top_exp) {
        BiPoly next(spec);
        for (const auto& [e, c] : cur.terms()) {
            if (e.second < shape.top_exp) {
                next.add_term(e.first, e.second, FieldElement(spec, c));
                continue;
            }
            BiPoly repl(spec);
            repl.add_term(e.first, e.second - shape.top_exp, FieldElement(spec, c));
            next += repl * rhs;
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace maxcurve::algebra

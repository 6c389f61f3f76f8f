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
 * Exact arithmetic in F_{p^k} for small p and k <= 12, with the distinguished
 * subfield pair F_q of F_{q^2} (q = p^t, k = 2t) used throughout the curve
 * modules: relative Frobenius x -> x^q, norm x^{q+1}, trace x + x^q.
 *
 * Elements are residues modulo a monic irreducible polynomial, stored as an
 * index into the fixed enumeration of the field (lexicographic on the digit
 * sequence, constant digit first). Multiplication, inversion and powering go
 * through discrete-log tables built once per field; addition is digit-wise.
 */

#ifndef MAXCURVE_GF_HPP
#define MAXCURVE_GF_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcurve::gf {

class FieldElement;

/// Immutable description of F_{p^k} plus its arithmetic tables. Instances are
/// interned (see mk_field) and shareable across threads; all operations are
/// pure.
class FieldSpec {
public:
    int p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t size() const { return size_; }

    /// Monic irreducible modulus, k+1 digits, constant term first.
    const std::vector<int>& modulus() const { return modulus_; }

    /// True when the spec models F_{q^2}, i.e. k is even.
    bool models_square() const { return k_ % 2 == 0; }

    /// q = p^{k/2}; throws unless models_square().
    std::uint64_t q() const;
    /// t = k/2; throws unless models_square().
    int t() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer under the prime-subfield embedding.
    FieldElement from_int(long n) const;
    /// n-th element in enumeration order, n in [0, size()).
    FieldElement element_at(std::uint32_t n) const;
    /// From digit sequence, constant digit first; size() == k required.
    FieldElement from_digits(const std::vector<int>& digits) const;
    /// Inverse of FieldElement::digit_string().
    FieldElement from_digit_string(const std::string& s) const;

    std::vector<int> digits_of(std::uint32_t idx) const;
    std::string name() const;  // e.g. "F_81"

    bool operator==(const FieldSpec& other) const { return this == &other; }

    // Index-level arithmetic. Hot paths in the polynomial and series code use
    // these directly; FieldElement wraps them.
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_idx(std::uint32_t a) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv_idx(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("inverse of zero");
        return exp_[size_ - 1 - log_[a]];
    }
    std::uint32_t pow_idx(std::uint32_t a, std::uint64_t e) const;

private:
    friend struct FieldSpecFactory;
    FieldSpec(int p, int k, std::vector<int> modulus);

    int p_;
    int k_;
    std::uint32_t size_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> place_;  // place_[j] = p^{k-1-j}
    std::vector<std::uint32_t> exp_;    // exp_[i] = index of g^i, i < 2(size-1)
    std::vector<std::uint32_t> log_;    // log_[idx] for idx != 0
    std::uint32_t gen_idx_ = 0;

    void build_tables();
};

/// Interned field with the canonical modulus: the lexicographically smallest
/// monic irreducible of degree k over F_p (coefficients compared from the
/// constant term up). Same (p, k) always returns the same object.
const FieldSpec& mk_field(int p, int k);

/// Interned field with an explicit modulus (verified irreducible).
const FieldSpec& mk_field(int p, int k, const std::vector<int>& modulus);

class FieldElement {
public:
    FieldElement() : spec_(nullptr), idx_(0) {}
    FieldElement(const FieldSpec& spec, std::uint32_t idx) : spec_(&spec), idx_(idx) {}

    bool valid() const { return spec_ != nullptr; }
    const FieldSpec& spec() const {
        if (!spec_) throw std::logic_error("uninitialized field element");
        return *spec_;
    }
    std::uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    std::vector<int> digits() const { return spec().digits_of(idx_); }
    std::string digit_string() const;

    FieldElement operator-() const { return {spec(), spec().neg_idx(idx_)}; }
    FieldElement inv() const { return {spec(), spec().inv_idx(idx_)}; }
    FieldElement pow(std::uint64_t e) const { return {spec(), spec().pow_idx(idx_, e)}; }

    /// x -> x^q, the relative Frobenius of F_{q^2} over F_q. Applying it twice
    /// is the identity.
    FieldElement frobenius_q() const { return pow(spec().q()); }
    /// x^{q+1}; lands in F_q.
    FieldElement norm_q() const { return pow(spec().q() + 1); }
    /// x + x^q; lands in F_q.
    FieldElement trace_q() const;
    /// Membership test for the subfield F_q: x^q == x.
    bool in_subfield_q() const { return frobenius_q() == *this; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.spec(), a.spec().add_idx(a.idx_, b.idx_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.spec(), a.spec().sub_idx(a.idx_, b.idx_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.spec(), a.spec().mul_idx(a.idx_, b.idx_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.spec(), a.spec().mul_idx(a.idx_, b.spec().inv_idx(b.idx_))};
    }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec_ == b.spec_ && a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return a.idx_ < b.idx_;  // enumeration order within one field
    }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.spec_ == nullptr || a.spec_ != b.spec_)
            throw std::invalid_argument("cross-field operands");
    }
    const FieldSpec* spec_;
    std::uint32_t idx_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

/// First element a in enumeration order with a^{q-1} = -1. Exists for every
/// odd q: the multiplicative group is cyclic of order q^2-1 and 2(q-1)
/// divides it. Such a also satisfies a^q = -a.
FieldElement find_special_a(const FieldSpec& spec);

/// Field homomorphism F_{p^k} -> F_{p^K} for k | K, determined by sending the
/// residue class of the modulus variable to its first root (in enumeration
/// order) inside the larger field.
class FieldEmbedding {
public:
    FieldEmbedding(const FieldSpec& sub, const FieldSpec& sup);
    const FieldSpec& sub() const { return *sub_; }
    const FieldSpec& sup() const { return *sup_; }
    FieldElement operator()(const FieldElement& x) const;

private:
    const FieldSpec* sub_;
    const FieldSpec* sup_;
    std::vector<std::uint32_t> map_;
};

}  // namespace maxcurve::gf

#endif

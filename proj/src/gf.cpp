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

#include "maxcurve/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace maxcurve::gf {

namespace {

// Table memory stays modest up to this size; F_{3^12} (531441) is the largest
// field the curve modules touch.
constexpr std::uint64_t kMaxFieldSize = 1u << 22;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense digit-vector polynomial helpers over F_p (construction only) ---

using Digits = std::vector<int>;

int poly_deg(const Digits& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b, b monic
Digits poly_mod(Digits a, const Digits& b, int p) {
    int db = poly_deg(b);
    for (int i = poly_deg(a); i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& t = a[i - db + j];
            t = (t - c * b[j]) % p;
            if (t < 0) t += p;
        }
    }
    a.resize(db > 0 ? db : 1, 0);
    return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, int p) {
    Digits prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), m, p);
}

bool poly_divides(const Digits& d, const Digits& f, int p) {
    Digits r = poly_mod(f, d, p);
    return poly_deg(r) < 0;
}

// Exhaustive factor search: f (monic, degree k) is irreducible iff no monic
// polynomial of degree in [1, k/2] divides it.
bool is_irreducible(const Digits& f, int p) {
    int k = poly_deg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        Digits divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::uint64_t v = n;
            for (int i = d - 1; i >= 0; --i) {
                divisor[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (poly_divides(divisor, f, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
    if (k_ < 1 || k_ > 12) throw std::invalid_argument("extension degree out of range [1, 12]");
    std::uint64_t size = 1;
    for (int i = 0; i < k_; ++i) size *= static_cast<std::uint64_t>(p_);
    if (size > kMaxFieldSize) throw std::invalid_argument("field too large for table arithmetic");
    size_ = static_cast<std::uint32_t>(size);

    if (static_cast<int>(modulus_.size()) != k_ + 1 || modulus_[k_] != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    for (int c : modulus_)
        if (c < 0 || c >= p_) throw std::invalid_argument("modulus digit out of range");
    if (!is_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is reducible");

    place_.resize(k_);
    place_[k_ - 1] = 1;
    for (int j = k_ - 2; j >= 0; --j) place_[j] = place_[j + 1] * p_;

    build_tables();
}

void FieldSpec::build_tables() {
    // Digit packing: idx = sum d_j * p^{k-1-j}, so enumeration by index is
    // lexicographic on (d_0, ..., d_{k-1}) with the constant digit first.
    auto unpack = [this](std::uint32_t idx, Digits& d) {
        for (int j = 0; j < k_; ++j) d[j] = static_cast<int>((idx / place_[j]) % p_);
    };
    auto pack = [this](const Digits& d) {
        std::uint32_t idx = 0;
        for (int j = 0; j < k_; ++j) idx += static_cast<std::uint32_t>(d[j]) * place_[j];
        return idx;
    };

    const std::uint32_t one_idx = place_[0];  // digits (1, 0, ..., 0)

    auto mul_digits = [&](std::uint32_t a, std::uint32_t b) {
        Digits da(k_), db(k_);
        unpack(a, da);
        unpack(b, db);
        Digits prod = poly_mulmod(da, db, modulus_, p_);
        prod.resize(k_, 0);
        return pack(prod);
    };

    // Find a generator of the multiplicative group, scanning enumeration
    // order; certify order via the prime factorization of size-1.
    const std::uint64_t group = size_ - 1;
    auto pow_digits = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = one_idx, base = a;
        while (e) {
            if (e & 1) r = mul_digits(r, base);
            base = mul_digits(base, base);
            e >>= 1;
        }
        return r;
    };
    if (group == 1) {
        gen_idx_ = one_idx;
    } else {
        auto factors = prime_factors(group);
        for (std::uint32_t cand = 1; cand < size_; ++cand) {
            bool ok = true;
            for (auto f : factors) {
                if (pow_digits(cand, group / f) == one_idx) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_idx_ = cand;
                break;
            }
        }
    }

    exp_.resize(2 * group);
    log_.assign(size_, 0);
    std::uint32_t cur = one_idx;
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = cur;
        exp_[i + group] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_digits(cur, gen_idx_);
    }
    if (cur != one_idx) throw std::logic_error("generator order mismatch");
}

std::uint64_t FieldSpec::q() const {
    if (!models_square()) throw std::invalid_argument("field degree is odd: no subfield pair F_q in F_{q^2}");
    std::uint64_t q = 1;
    for (int i = 0; i < k_ / 2; ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

int FieldSpec::t() const {
    if (!models_square()) throw std::invalid_argument("field degree is odd: no subfield pair F_q in F_{q^2}");
    return k_ / 2;
}

std::uint32_t FieldSpec::add_idx(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int j = 0; j < k_; ++j) {
        std::uint32_t da = (a / place_[j]) % p_;
        std::uint32_t db = (b / place_[j]) % p_;
        std::uint32_t s = da + db;
        if (s >= static_cast<std::uint32_t>(p_)) s -= p_;
        r += s * place_[j];
    }
    return r;
}

std::uint32_t FieldSpec::sub_idx(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int j = 0; j < k_; ++j) {
        std::uint32_t da = (a / place_[j]) % p_;
        std::uint32_t db = (b / place_[j]) % p_;
        std::uint32_t s = da + p_ - db;
        if (s >= static_cast<std::uint32_t>(p_)) s -= p_;
        r += s * place_[j];
    }
    return r;
}

std::uint32_t FieldSpec::neg_idx(std::uint32_t a) const { return sub_idx(0, a); }

std::uint32_t FieldSpec::pow_idx(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? one().index() : 0;
    std::uint64_t group = size_ - 1;
    std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % group)) % group;
    return exp_[r];
}

FieldElement FieldSpec::zero() const { return {*this, 0}; }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return {*this, static_cast<std::uint32_t>(r) * place_[0]};
}

FieldElement FieldSpec::element_at(std::uint32_t n) const {
    if (n >= size_) throw std::out_of_range("element index out of range");
    return {*this, n};
}

FieldElement FieldSpec::from_digits(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != k_) throw std::invalid_argument("digit count != k");
    std::uint32_t idx = 0;
    for (int j = 0; j < k_; ++j) {
        if (digits[j] < 0 || digits[j] >= p_) throw std::invalid_argument("digit out of range");
        idx += static_cast<std::uint32_t>(digits[j]) * place_[j];
    }
    return {*this, idx};
}

FieldElement FieldSpec::from_digit_string(const std::string& s) const {
    if (static_cast<int>(s.size()) != k_) throw std::invalid_argument("digit string length != k");
    std::vector<int> d(k_);
    for (int j = 0; j < k_; ++j) {
        char c = s[j];
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = 10 + (c - 'a');
        else
            throw std::invalid_argument("bad digit character");
        d[j] = v;
    }
    return from_digits(d);
}

std::vector<int> FieldSpec::digits_of(std::uint32_t idx) const {
    std::vector<int> d(k_);
    for (int j = 0; j < k_; ++j) d[j] = static_cast<int>((idx / place_[j]) % p_);
    return d;
}

std::string FieldSpec::name() const {
    std::ostringstream os;
    os << "F_" << size_;
    return os.str();
}

std::string FieldElement::digit_string() const {
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (int d : digits()) s += hex[d];
    return s;
}

FieldElement FieldElement::trace_q() const { return *this + frobenius_q(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.digit_string();
}

FieldElement find_special_a(const FieldSpec& spec) {
    std::uint64_t q = spec.q();
    if (q % 2 == 0) throw std::invalid_argument("q must be odd");
    FieldElement minus_one = -spec.one();
    for (std::uint32_t i = 1; i < spec.size(); ++i) {
        FieldElement a = spec.element_at(i);
        if (a.pow(q - 1) == minus_one) return a;
    }
    throw std::logic_error("no a with a^{q-1} = -1 found");  // unreachable for odd q
}

// ---- registry ----

struct FieldSpecFactory {
    static std::unique_ptr<FieldSpec> make(int p, int k, std::vector<int> modulus) {
        return std::unique_ptr<FieldSpec>(new FieldSpec(p, k, std::move(modulus)));
    }
};

namespace {

class FieldRegistryImpl {
public:
    const FieldSpec& get(int p, int k, const std::vector<int>* modulus) {
        std::lock_guard<std::mutex> lock(mu_);
        if (modulus == nullptr) {
            auto it = canonical_.find({p, k});
            if (it != canonical_.end()) return *it->second;
        }
        std::vector<int> mod = modulus ? *modulus : smallest_irreducible(p, k);
        Key key{p, k, mod};
        auto it = by_modulus_.find(key);
        if (it != by_modulus_.end()) {
            if (modulus == nullptr) canonical_[{p, k}] = it->second.get();
            return *it->second;
        }
        auto spec = FieldSpecFactory::make(p, k, mod);
        const FieldSpec& ref = *spec;
        by_modulus_.emplace(std::move(key), std::move(spec));
        if (modulus == nullptr) canonical_[{p, k}] = &ref;
        return ref;
    }

private:
    static std::vector<int> smallest_irreducible(int p, int k) {
        if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
        if (k < 1 || k > 12) throw std::invalid_argument("extension degree out of range [1, 12]");
        // Enumerate lower-coefficient tuples in lexicographic order, constant
        // term as the most significant position.
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<int> f(k + 1, 0);
            f[k] = 1;
            std::uint64_t v = n;
            for (int j = k - 1; j >= 0; --j) {
                f[j] = static_cast<int>(v % p);
                v /= p;
            }
            if (is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    using Key = std::tuple<int, int, std::vector<int>>;
    std::mutex mu_;
    std::map<Key, std::unique_ptr<FieldSpec>> by_modulus_;
    std::map<std::pair<int, int>, const FieldSpec*> canonical_;
};

FieldRegistryImpl& registry() {
    static FieldRegistryImpl r;
    return r;
}

}  // namespace

const FieldSpec& mk_field(int p, int k) { return registry().get(p, k, nullptr); }

const FieldSpec& mk_field(int p, int k, const std::vector<int>& modulus) {
    return registry().get(p, k, &modulus);
}

FieldEmbedding::FieldEmbedding(const FieldSpec& sub, const FieldSpec& sup)
    : sub_(&sub), sup_(&sup) {
    if (sub.p() != sup.p() || sup.k() % sub.k() != 0)
        throw std::invalid_argument("no embedding: need equal characteristic and sub degree | sup degree");
    // First root of sub's modulus in sup, scanning enumeration order. A root
    // exists because the modulus is irreducible of degree dividing sup.k().
    FieldElement root = sup.zero();
    bool found = false;
    const auto& mod = sub.modulus();
    for (std::uint32_t i = 0; i < sup.size(); ++i) {
        FieldElement x = sup.element_at(i);
        FieldElement acc = sup.zero();
        for (int j = static_cast<int>(mod.size()) - 1; j >= 0; --j)
            acc = acc * x + sup.from_int(mod[j]);
        if (acc.is_zero()) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("modulus has no root in the larger field");

    std::vector<FieldElement> pw(sub.k());
    pw[0] = sup.one();
    for (int j = 1; j < sub.k(); ++j) pw[j] = pw[j - 1] * root;

    map_.resize(sub.size());
    for (std::uint32_t i = 0; i < sub.size(); ++i) {
        auto d = sub.digits_of(i);
        FieldElement acc = sup.zero();
        for (int j = 0; j < sub.k(); ++j)
            if (d[j] != 0) acc += sup.from_int(d[j]) * pw[j];
        map_[i] = acc.index();
    }
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
    if (&x.spec() != sub_) throw std::invalid_argument("element not in the embedded field");
    return {*sup_, map_[x.index()]};
}

}  // namespace maxcurve::gf

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "maxcurve/gf.hpp"

using namespace maxcurve::gf;

namespace {

// Independent irreducibility oracle for degree-k f over F_p, k <= 6: f has no
// irreducible factor of degree d <= k/2 iff gcd(f, x^{p^d} - x) = 1 for all
// such d. Uses its own polynomial arithmetic, not the library's.
namespace oracle {

using Poly = std::vector<int>;

int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly trim(Poly a) {
    a.resize(static_cast<std::size_t>(std::max(deg(a), 0)) + 1);
    return a;
}

Poly mod(Poly a, const Poly& b, int p) {
    int db = deg(b);
    int lead_inv = 1;
    while ((lead_inv * b[db]) % p != 1) ++lead_inv;
    for (int i = deg(a); i >= db; --i) {
        int c = (a[i] * lead_inv) % p;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    return trim(a);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return mod(std::move(r), m, p);
}

Poly gcd(Poly a, Poly b, int p) {
    while (deg(b) >= 0) {
        Poly r = mod(a, b, p);
        a = b;
        b = r;
    }
    return trim(a);
}

bool irreducible_via_frobenius_gcd(const Poly& f, int p) {
    int k = deg(f);
    Poly x{0, 1};
    Poly xp = x;
    for (int d = 1; 2 * d <= k; ++d) {
        // xp = x^{p^d} mod f
        for (int rep = 0; rep < 1; ++rep) {
            Poly acc{1};
            Poly base = xp;
            int e = p;
            while (e) {
                if (e & 1) acc = mulmod(acc, base, f, p);
                base = mulmod(base, base, f, p);
                e >>= 1;
            }
            xp = acc;
        }
        Poly diff = xp;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        if (deg(gcd(f, trim(diff), p)) > 0) return false;
    }
    return true;
}

}  // namespace oracle

}  // namespace

TEST_CASE("prime field F_3 basics") {
    const auto& f3 = mk_field(3, 1);
    CHECK(f3.size() == 3);
    CHECK(f3.modulus() == std::vector<int>{0, 1});  // x itself
    CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));
    CHECK(f3.from_int(2) * f3.from_int(2) == f3.from_int(1));
}

TEST_CASE("F_9 has modulus u^2 + 1 and u*u = -1") {
    const auto& f9 = mk_field(3, 2);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
    FieldElement u = f9.from_digits({0, 1});
    CHECK(u * u == -f9.one());
}

TEST_CASE("F_81: element count and multiplicative orders divide 80") {
    const auto& f81 = mk_field(3, 4);
    CHECK(f81.size() == 81);
    for (std::uint32_t i = 1; i < f81.size(); ++i) {
        FieldElement x = f81.element_at(i);
        CHECK(x.pow(80) == f81.one());
    }
}

TEST_CASE("mk_field(3,6) is deterministic and irreducible by the gcd oracle") {
    const auto& a = mk_field(3, 6);
    const auto& b = mk_field(3, 6);
    CHECK(&a == &b);
    CHECK(a.modulus() == b.modulus());
    CHECK(oracle::irreducible_via_frobenius_gcd(a.modulus(), 3));
    // Lex minimality: every smaller monic degree-6 candidate is reducible.
    // Candidate order matches the enumeration used by the library.
    auto smaller_all_reducible = [&] {
        const auto& mod = a.modulus();
        std::uint64_t bound = 0;
        for (int j = 0; j < 6; ++j) bound = bound * 3 + static_cast<std::uint64_t>(mod[j]);
        for (std::uint64_t n = 0; n < bound; ++n) {
            std::vector<int> f(7, 0);
            f[6] = 1;
            std::uint64_t v = n;
            for (int j = 5; j >= 0; --j) {
                f[j] = static_cast<int>(v % 3);
                v /= 3;
            }
            if (oracle::irreducible_via_frobenius_gcd(f, 3)) return false;
        }
        return true;
    };
    CHECK(smaller_all_reducible());
}

TEST_CASE("field axioms exhaustively on F_9 and F_27") {
    for (int k : {2, 3}) {
        const auto& f = mk_field(3, k);
        for (std::uint32_t i = 0; i < f.size(); ++i) {
            FieldElement x = f.element_at(i);
            CHECK(x + (-x) == f.zero());
            if (!x.is_zero()) CHECK(x * x.inv() == f.one());
            CHECK((x.is_zero() || x.pow(f.size() - 1) == f.one()));
            for (std::uint32_t j = 0; j < f.size(); ++j) {
                FieldElement y = f.element_at(j);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
            }
        }
        // associativity / distributivity on a subsample to keep it quick
        for (std::uint32_t i = 0; i < f.size(); i += 2)
            for (std::uint32_t j = 1; j < f.size(); j += 3)
                for (std::uint32_t l = 0; l < f.size(); l += 5) {
                    FieldElement x = f.element_at(i), y = f.element_at(j), z = f.element_at(l);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
    }
}

TEST_CASE("field axioms on 10^4 random triples in F_729") {
    const auto& f = mk_field(3, 6);
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
    for (int n = 0; n < 10000; ++n) {
        FieldElement x = f.element_at(dist(rng));
        FieldElement y = f.element_at(dist(rng));
        FieldElement z = f.element_at(dist(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("inverses and group order for 200 random nonzero elements of F_81") {
    const auto& f = mk_field(3, 4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> dist(1, f.size() - 1);
    for (int n = 0; n < 200; ++n) {
        FieldElement a = f.element_at(dist(rng));
        CHECK(a * a.inv() == f.one());
        CHECK(a.pow(80) == f.one());
    }
    CHECK(f.one().inv() == f.one());
}

TEST_CASE("relative Frobenius on F_81 (q = 9)") {
    const auto& f = mk_field(3, 4);
    CHECK(f.q() == 9);
    int fixed = 0;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        FieldElement x = f.element_at(i);
        CHECK(x.frobenius_q().frobenius_q() == x);
        if (x.in_subfield_q()) {
            ++fixed;
            CHECK(x.frobenius_q() == x);
        }
    }
    CHECK(fixed == 9);
}

TEST_CASE("frobenius_q is a field automorphism (sampled pairs)") {
    const auto& f = mk_field(3, 6);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
    for (int n = 0; n < 2000; ++n) {
        FieldElement x = f.element_at(dist(rng));
        FieldElement y = f.element_at(dist(rng));
        CHECK((x + y).frobenius_q() == x.frobenius_q() + y.frobenius_q());
        CHECK((x * y).frobenius_q() == x.frobenius_q() * y.frobenius_q());
    }
}

TEST_CASE("norm and trace land in F_q; norm is (q+1)-to-1 onto F_q^*") {
    const auto& f = mk_field(3, 4);
    CHECK(f.zero().norm_q() == f.zero());
    CHECK(f.zero().trace_q() == f.zero());
    std::map<std::uint32_t, int> norm_count;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        FieldElement x = f.element_at(i);
        CHECK(x.norm_q().in_subfield_q());
        CHECK(x.trace_q().in_subfield_q());
        if (!x.is_zero()) norm_count[x.norm_q().index()]++;
    }
    CHECK(norm_count.size() == 8);  // all of F_9^*
    for (auto& [v, c] : norm_count) CHECK(c == 10);  // q + 1 each
}

TEST_CASE("find_special_a at q = 9: a^8 = -1, multiplicative order 16, a^9 = -a") {
    const auto& f = mk_field(3, 4);
    FieldElement a = find_special_a(f);
    CHECK(a.pow(8) == -f.one());
    CHECK(a.pow(16) == f.one());
    CHECK(a.pow(8) != f.one());
    CHECK(a.pow(9) == -a);
}

TEST_CASE("find_special_a at q = 27: a^26 = -1 and a outside F_27") {
    const auto& f = mk_field(3, 6);
    FieldElement a = find_special_a(f);
    CHECK(a.pow(26) == -f.one());
    CHECK_FALSE(a.in_subfield_q());
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(mk_field(4, 2), std::invalid_argument);   // non-prime p
    CHECK_THROWS_AS(mk_field(3, 0), std::invalid_argument);   // degree out of range
    CHECK_THROWS_AS(mk_field(3, 13), std::invalid_argument);  // degree out of range
    CHECK_THROWS_AS(mk_field(3, 2, std::vector<int>{0, 0, 1}), std::invalid_argument);  // reducible
    const auto& f9 = mk_field(3, 2);
    const auto& f27 = mk_field(3, 3);
    CHECK_THROWS_AS(f9.zero().inv(), std::invalid_argument);
    CHECK_THROWS_AS(f9.one() + f27.one(), std::invalid_argument);  // cross-field
    CHECK_THROWS_AS(f27.q(), std::invalid_argument);               // odd degree
}

TEST_CASE("digit string round trip") {
    const auto& f = mk_field(3, 4);
    for (std::uint32_t i = 0; i < f.size(); i += 7) {
        FieldElement x = f.element_at(i);
        CHECK(f.from_digit_string(x.digit_string()) == x);
    }
}

TEST_CASE("embedding F_9 -> F_81 is a ring homomorphism onto the Frobenius-fixed subfield") {
    const auto& f9 = mk_field(3, 2);
    const auto& f81 = mk_field(3, 4);
    FieldEmbedding e(f9, f81);
    std::set<std::uint32_t> image;
    for (std::uint32_t i = 0; i < f9.size(); ++i) {
        FieldElement x = f9.element_at(i);
        image.insert(e(x).index());
        CHECK(e(x).in_subfield_q());
        for (std::uint32_t j = 0; j < f9.size(); ++j) {
            FieldElement y = f9.element_at(j);
            CHECK(e(x + y) == e(x) + e(y));
            CHECK(e(x * y) == e(x) * e(y));
        }
    }
    CHECK(image.size() == 9);
    CHECK(e(f9.one()) == f81.one());
}

/*
   Copyright 2026 The qcong Authors

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

#include <tuple>

#include "doctest.h"
#include "qcong/qterms.hpp"
#include "qcong/sums.hpp"
#include "test_util.hpp"

using namespace qcong;
using testing::Fp;
using testing::uniform;

namespace {

IntPoly one_minus(std::size_t e) { return IntPoly{1} - IntPoly::monomial(1, e); }

// Random (n, d, r) with n - floor((n-1)d/den) <= r <= n and r = n (mod d).
std::tuple<long, long, long> random_window(long min_n, long max_n, long min_d, long max_d, long den) {
    while (true) {
        long n = uniform(min_n, max_n), d = uniform(min_d, max_d);
        long lo = n - ((n - 1) * d) / den;
        std::vector<long> rs;
        for (long r = lo; r <= n; ++r)
            if ((n - r) % d == 0) rs.push_back(r);
        if (rs.empty()) continue;
        return {n, d, rs[static_cast<std::size_t>(uniform(0, static_cast<long>(rs.size()) - 1))]};
    }
}

std::vector<Rational> supported(long n, long s, long len) {
    std::vector<Rational> c(static_cast<std::size_t>(len), Rational(0));
    for (long j = 0; j <= s; ++j) c[j] = testing::random_rational(9);
    (void)n;
    return c;
}

// Multiplicative extension: c(tn + k) = c(tn) c(k), with c(0) = 1 and c
// vanishing on [bound, n).
std::vector<Rational> multiplicative(long n, long bound, long len) {
    std::vector<Rational> base(static_cast<std::size_t>(n), Rational(0));
    base[0] = 1;
    for (long j = 1; j < bound && j < n; ++j) base[j] = testing::random_rational(7);
    std::vector<Rational> c(static_cast<std::size_t>(len));
    Rational block(1);
    for (long j = 0; j < len; ++j) {
        if (j % n == 0) block = j == 0 ? Rational(1) : testing::random_rational(7);
        c[j] = block * base[j % n];
    }
    return c;
}

CycloFrac random_cyclofrac() {
    CycloFrac x(testing::random_rational(5));
    if (x.is_zero()) return x;
    for (int i = 0; i < 3; ++i) {
        long m = uniform(1, 6);
        x *= CycloFrac::one_minus_qpow(m).pow(uniform(-1, 2));
    }
    return x * CycloFrac::qpow(uniform(-2, 3));
}

}  // namespace

TEST_CASE("single sums") {
    CHECK(single_sum([](long) { return Rational(1); }, 4) == Rational(5));
    for (long n = 1; n <= 8; ++n)
        CHECK(single_sum([](long k) { return CycloFrac::qpow(k); }, n - 1).to_ratfunc() == RatFunc(q_integer(n)));
    // Thm 1.1 right-hand inner sum at n = 3.
    auto inner = builtin_generator(TermId::Thm1_1Rhs, [] {
        CaseParams p;
        p.n = 3;
        return p;
    }());
    RatFunc expect = RatFunc(1) + RatFunc(one_minus(2) * IntPoly::monomial(1, 2), q_integer(5) * one_minus(4));
    CHECK(single_sum(inner, 1).to_ratfunc() == expect);
}

TEST_CASE("double and triple sum examples") {
    auto delta = [](long k) { return Rational(k == 0 ? 1 : 0); };
    auto ones = [](long) { return Rational(1); };
    CHECK(double_sum(delta, 5) == Rational(1));
    CHECK(double_sum(ones, 3) == Rational(6));
    auto qk = [](long k) { return RatFunc(IntPoly::monomial(1, static_cast<std::size_t>(k))); };
    CHECK(double_sum(qk, 2) == RatFunc(IntPoly{1, 2}));
    CHECK(triple_sum(delta, 4) == Rational(1));
    CHECK(triple_sum(ones, 2) == Rational(4));
    CHECK(triple_sum(ones, 3) == Rational(10));
    CHECK_THROWS(double_sum(ones, 0));
    PrefixTable<Rational> t = prefix_table(ones, 6);
    for (std::size_t m = 1; m < t.prefix.size(); ++m) CHECK(t.prefix[m] - t.prefix[m - 1] == t.terms[m]);
}

TEST_CASE("prefix sums equal literal loops") {
    for (int trial = 0; trial < 40; ++trial) {
        long n = uniform(1, 12);
        std::vector<Rational> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = testing::random_rational(20);
        auto g = [&](long k) { return c[k]; };
        CHECK(double_sum(g, n) == double_sum_literal(g, n));
        if (n <= 10) CHECK(triple_sum(g, n) == triple_sum_literal(g, n));
    }
    for (int trial = 0; trial < 15; ++trial) {
        long n = uniform(1, 10);
        std::vector<CycloFrac> c;
        for (long i = 0; i < n; ++i) c.push_back(random_cyclofrac());
        auto g = [&](long k) { return c[k]; };
        auto gr = [&](long k) { return c[k].to_ratfunc(); };
        RatFunc lit2 = double_sum_literal(gr, n);
        CHECK(double_sum(g, n).to_ratfunc() == lit2);
        CHECK(double_sum(gr, n) == lit2);
        RatFunc lit3 = triple_sum_literal(gr, n);
        CHECK(triple_sum(g, n).to_ratfunc() == lit3);
        CHECK(triple_sum(gr, n) == lit3);
    }
}

TEST_CASE("square identity on random supported sequences") {
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        auto [n, d, r] = random_window(2, 14, 2, 6, 2);
        long s = (n - r) / d;
        std::vector<Rational> c = supported(n, s, n + uniform(0, 3));
        INFO("n=" << n << " d=" << d << " r=" << r);
        CHECK(oracle_square_identity(c, n, d, r));
        ++checked;
    }
    CHECK(checked >= 200);
    CHECK(oracle_square_identity(std::vector<Rational>(7, Rational(0)), 7, 3, 1));
}

TEST_CASE("square identity rejects hypothesis violations") {
    for (int trial = 0; trial < 100; ++trial) {
        auto [n, d, r] = random_window(3, 14, 2, 6, 2);
        long s = (n - r) / d;
        if (s + 1 >= n) continue;
        std::vector<Rational> c = supported(n, s, n);
        c[uniform(s + 1, n - 1)] = Rational(uniform(1, 5));
        CHECK_THROWS_AS(oracle_square_identity(c, n, d, r), SupportViolation);
    }
    std::vector<Rational> c(10, Rational(0));
    CHECK_THROWS_AS(oracle_square_identity(c, 7, 3, 2), HypothesisViolation);   // 7 != 2 mod 3
    CHECK_THROWS_AS(oracle_square_identity(c, 7, 1, 1), HypothesisViolation);   // d < 2
    CHECK_THROWS_AS(oracle_square_identity(c, 7, 3, -5), HypothesisViolation);  // below the window
    CHECK_THROWS_AS(oracle_square_identity(c, 7, 3, 10), HypothesisViolation);  // r > n
    CHECK_THROWS_AS(oracle_square_identity(std::vector<Rational>(3), 7, 3, 1), HypothesisViolation);
}

TEST_CASE("shift identity on random multiplicative sequences") {
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        long n = uniform(1, 9), l = uniform(0, 3), k = uniform(0, n - 1);
        std::vector<Rational> c = multiplicative(n, (n + 1) / 2, std::max(l * n + k + 1, n) + uniform(0, 2));
        INFO("n=" << n << " l=" << l << " k=" << k);
        CHECK(oracle_shift_identity(c, n, l, k));
        ++checked;
    }
    CHECK(checked >= 200);
    // l = 0 is the identity.
    std::vector<Rational> c = multiplicative(5, 3, 5);
    CHECK(oracle_shift_identity(c, 5, 0, 4));
}

TEST_CASE("shift identity rejects hypothesis violations") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = uniform(2, 9), l = uniform(1, 3), k = uniform(0, n - 1);
        std::vector<Rational> c = multiplicative(n, (n + 1) / 2, std::max(l * n + k + 1, n));
        // Entries below n and at multiples of n are free under the hypothesis.
        long j = uniform(n, l * n + k);
        if (j % n == 0) continue;
        c[j] = c[j] + Rational(1);
        CHECK_THROWS_AS(oracle_shift_identity(c, n, l, k), HypothesisViolation);
    }
    std::vector<Rational> c = multiplicative(5, 3, 20);
    CHECK_THROWS_AS(oracle_shift_identity(c, 5, 1, 5), HypothesisViolation);
    CHECK_THROWS_AS(oracle_shift_identity(c, 5, 4, 1), HypothesisViolation);  // too short
}

TEST_CASE("triple identities on random admissible sequences") {
    int checked = 0;
    for (int trial = 0; trial < 220; ++trial) {
        auto [n, d, r] = random_window(2, 10, 3, 6, 3);
        long s = (n - r) / d;
        long l = uniform(0, 2), k = uniform(0, n - 1);
        // Multiplicative extension of a sequence supported on [0, s].
        std::vector<Rational> c = multiplicative(n, s + 1, std::max(l * n + k + 1, n));
        INFO("n=" << n << " d=" << d << " r=" << r << " l=" << l << " k=" << k);
        CHECK(oracle_triple_identities(c, n, d, r, l, k));
        ++checked;
    }
    CHECK(checked >= 200);
    CHECK(oracle_triple_identities(std::vector<Rational>(30, Rational(0)), 7, 3, 1, 2, 3));
}

TEST_CASE("triple identities reject hypothesis violations") {
    for (int trial = 0; trial < 100; ++trial) {
        auto [n, d, r] = random_window(3, 10, 3, 6, 3);
        long s = (n - r) / d;
        long l = uniform(1, 2), k = uniform(0, n - 1);
        std::vector<Rational> c = multiplicative(n, s + 1, std::max(l * n + k + 1, n));
        if (uniform(0, 1) && s + 1 < n) {
            c[uniform(s + 1, n - 1)] = Rational(1);
            CHECK_THROWS_AS(oracle_triple_identities(c, n, d, r, l, k), SupportViolation);
        } else {
            long j = uniform(n, l * n + k);
            if (j % n == 0) continue;
            c[j] = c[j] + Rational(1);
            CHECK_THROWS_AS(oracle_triple_identities(c, n, d, r, l, k), HypothesisViolation);
        }
    }
    std::vector<Rational> c(30, Rational(0));
    CHECK_THROWS_AS(oracle_triple_identities(c, 7, 2, 1, 0, 0), HypothesisViolation);  // d < 3
    CHECK_THROWS_AS(oracle_triple_identities(c, 7, 3, -2, 0, 0), HypothesisViolation);  // window
}

TEST_CASE("antisymmetry oracle") {
    // n = 3, a = (t, -t, 0).
    std::vector<Rational> a3 = {Rational(2, 3), Rational(-2, 3), Rational(0)};
    CHECK(oracle_antisymmetry(a3, 3));
    CHECK(oracle_antisymmetry(std::vector<Rational>(5, Rational(0)), 5));
    int checked = 0;
    for (long n : {3L, 5L, 7L, 9L}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
            long h = (n - 1) / 2;
            for (long k = 0; k <= h; ++k)
                if (k < h - k) {
                    a[k] = testing::random_rational(9);
                    a[h - k] = -a[k];
                }
            for (long k = (n + 1) / 2; k < n; ++k) {
                long m = (3 * n - 1) / 2 - k;
                if (k < m) {
                    a[k] = testing::random_rational(9);
                    a[m] = -a[k];
                }
            }
            CHECK(oracle_antisymmetry(a, n));
            ++checked;
            // Any single perturbation breaks a hypothesis.
            std::vector<Rational> b = a;
            b[uniform(0, n - 1)] += Rational(1);
            CHECK_THROWS_AS(oracle_antisymmetry(b, n), HypothesisViolation);
        }
    }
    CHECK(checked >= 200);
    CHECK_THROWS_AS(oracle_antisymmetry(std::vector<Rational>(4, Rational(0)), 4), HypothesisViolation);
    CHECK_THROWS_AS(oracle_antisymmetry(std::vector<Rational>(3, Rational(0)), 5), HypothesisViolation);
}

TEST_CASE("registry summands satisfy the convolution lemmas at roots of unity") {
    // At a primitive n-th root of unity in F_p the congruences behind the
    // lemma hypotheses become equalities.
    for (auto [n, d, r] : {std::tuple{5L, 3L, 2L}, {7L, 3L, 1L}, {7L, 4L, 3L}, {9L, 4L, 1L}, {11L, 3L, 2L}, {11L, 4L, 3L}}) {
        Fp::set_modulus(testing::prime_one_mod(static_cast<std::uint64_t>(n)));
        Fp zeta = testing::root_of_unity(static_cast<std::uint64_t>(n));
        CaseParams p;
        p.n = n;
        p.d = d;
        p.r = r;
        auto g = builtin_generator(TermId::Thm1_3Lhs, p);
        std::vector<Fp> c;
        for (long k = 0; k < 3 * n; ++k) c.push_back(testing::eval_mod(g(k), zeta));
        INFO("n=" << n << " d=" << d << " r=" << r);
        CHECK(oracle_square_identity(c, n, d, r));
        for (long l = 0; l <= 1; ++l)
            for (long k = 0; k < n; ++k) CHECK(oracle_shift_identity(c, n, l, k));
    }
    for (auto [n, d] : {std::tuple{7L, 3L}, {13L, 3L}, {10L, 3L}, {9L, 4L}, {13L, 4L}}) {
        Fp::set_modulus(testing::prime_one_mod(static_cast<std::uint64_t>(n)));
        Fp zeta = testing::root_of_unity(static_cast<std::uint64_t>(n));
        CaseParams p;
        p.n = n;
        p.d = d;
        auto g = builtin_generator(TermId::Thm6_4Lhs, p);
        std::vector<Fp> c;
        for (long k = 0; k < 3 * n; ++k) c.push_back(testing::eval_mod(g(k), zeta));
        INFO("n=" << n << " d=" << d);
        for (long l = 0; l <= 1; ++l)
            for (long k = 0; k < n; k += 2) CHECK(oracle_triple_identities(c, n, d, 1, l, k));
    }
}

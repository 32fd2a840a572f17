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

#include <string>

#include "doctest.h"
#include "qcong/checker.hpp"
#include "qcong/errors.hpp"
#include "qcong/sums.hpp"
#include "qcong/termlang.hpp"
#include "test_util.hpp"

using namespace qcong;
using testing::uniform;

namespace {

Modulus phi(long m, int e = 1, int sign = 1) { return modulus_build({{m, sign, e}}); }

RatFunc q_to(long e) { return RatFunc(IntPoly::monomial(1, static_cast<std::size_t>(e))); }

CaseSpec double_case(TermId lhs, TermId pre, TermId inner, const char* upper, int power, const char* mod,
                     long n, long d = 2, long r = 1) {
    CaseSpec c;
    c.kind = CaseKind::DoubleSum;
    c.params.n = n;
    c.params.d = d;
    c.params.r = r;
    c.lhs.id = lhs;
    c.rhs.prefactor.id = pre;
    c.rhs.inner.id = inner;
    c.rhs.upper = upper;
    c.rhs.power = power;
    c.modulus = mod;
    return c;
}

CaseSpec thm1_1(long n, const char* mod = "phi(n,-)^3 * phi(n)^2") {
    return double_case(TermId::Thm1_1Lhs, TermId::Thm1_1Pre, TermId::Thm1_1Rhs, "(n-1)/2", 2, mod, n);
}

CaseSpec thm6_4(long n, long d) {
    CaseSpec c;
    c.kind = CaseKind::TripleSum;
    c.params.n = n;
    c.params.d = d;
    c.lhs.id = TermId::Thm6_4Lhs;
    c.rhs.prefactor.id = TermId::Thm6_4Pre;
    c.modulus = "[n] * phi(n)^3";
    return c;
}

CaseSpec lemma(const char* name, long n, long d, long r, std::map<std::string, long> extra = {}) {
    CaseSpec c;
    c.kind = CaseKind::Specialization;
    c.lemma = name;
    c.params.n = n;
    c.params.d = d;
    c.params.r = r;
    c.params.extra = std::move(extra);
    return c;
}

// Random element of Q(q) with a cyclotomic part in the denominator.
RatFunc random_ratfunc() {
    IntPoly num = testing::random_poly(4, 3);
    IntPoly den = IntPoly{1};
    for (int i = 0, c = static_cast<int>(uniform(0, 2)); i < c; ++i) den *= cyclotomic(uniform(1, 8));
    if (uniform(0, 1)) den *= IntPoly{2, 0, 1};
    return RatFunc(num, den);
}

Modulus random_modulus() {
    std::vector<ModulusFactor> f;
    for (int i = 0, c = static_cast<int>(uniform(1, 2)); i < c; ++i)
        f.push_back({uniform(2, 7), uniform(0, 1) ? 1 : -1, static_cast<int>(uniform(1, 3))});
    std::optional<long> qint;
    if (uniform(0, 3) == 0) qint = uniform(2, 6);
    return modulus_build(f, qint);
}

}  // namespace

TEST_CASE("congruence examples") {
    CHECK(check_congruence(q_to(5) + RatFunc(1), q_to(5) + RatFunc(1), phi(7)).holds);
    CHECK(check_congruence(q_to(3), RatFunc(1), phi(3)).holds);

    Verdict v = check_congruence(q_to(1), RatFunc(), phi(3));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->failed_factor.index == 3);
    CHECK(v.witness->achieved == 0);
    CHECK(v.witness->remainder_digest == remainder_digest(IntPoly{0, 1}));
    CHECK_FALSE(v.witness->remainder);
    CHECK(check_congruence(q_to(1), RatFunc(), phi(3), {.keep_remainder = true}).witness->remainder ==
          IntPoly{0, 1});

    // Phi_3(-q) = q^2 - q + 1 = Phi_6(q): q^3 = -1 there.
    CHECK(check_congruence(q_to(3), RatFunc(-1), phi(3, 1, -1)).holds);
    CHECK_FALSE(check_congruence(q_to(3), RatFunc(1), phi(3, 1, -1)).holds);
}

TEST_CASE("a denominator sharing a factor with the modulus fails with an obstruction") {
    RatFunc x(IntPoly{1}, cyclotomic(3));
    Verdict v = check_congruence(x, RatFunc(), phi(3));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    REQUIRE(v.witness->gcd_obstruction);
    CHECK(*v.witness->gcd_obstruction == cyclotomic(3));
    CHECK(v.witness->achieved == -1);

    Verdict cv = check_congruence(CycloFrac(1) / CycloFrac::qint(3), CycloFrac(), phi(3));
    CHECK_FALSE(cv.holds);
    CHECK(cv.witness->achieved == -1);
}

TEST_CASE("L = R (mod M) iff L - R = 0 (mod M)") {
    int holding = 0;
    for (int t = 0; t < 300; ++t) {
        RatFunc l = random_ratfunc(), r = random_ratfunc();
        Modulus m = random_modulus();
        if (t % 2 == 0) {
            // Force a congruence by adding a multiple of M over a coprime denominator.
            r = l + RatFunc(m.expanded * testing::random_poly(2, 2), IntPoly{3, 0, 1});
        }
        bool a = check_congruence(l, r, m).holds;
        bool b = check_congruence(l - r, RatFunc(), m).holds;
        CHECK(a == b);
        holding += a;
    }
    CHECK(holding >= 100);
}

TEST_CASE("the valuation route agrees with the remainder route") {
    for (int t = 0; t < 200; ++t) {
        CycloFrac x(testing::random_poly(5, 3));
        for (int i = 0, c = static_cast<int>(uniform(0, 3)); i < c; ++i)
            x *= CycloFrac::one_minus_qpow(uniform(1, 12)).pow(uniform(-2, 3));
        CycloFrac y(testing::random_poly(3, 2));
        Modulus m = random_modulus();
        Verdict v;
        CHECK_NOTHROW(v = check_congruence(x, y, m));
        CHECK(v.holds == check_congruence(x.to_ratfunc(), y.to_ratfunc(), m).holds);
    }
}

TEST_CASE("monotonicity in the exponent") {
    for (long n : {3L, 5L, 7L}) {
        CycloFrac base = CycloFrac(testing::random_poly(3, 4) + IntPoly{5});
        for (int e = 1; e <= 4; ++e) {
            CycloFrac x = base * CycloFrac(cyclotomic(n)).pow(e);
            for (int f = 1; f <= 5; ++f) CHECK(check_congruence(x, CycloFrac(), phi(n, f)).holds == (f <= e));
        }
    }
    for (long n : {5L, 7L}) {
        CaseSpec c = thm1_1(n);
        CHECK(verify_case(c).holds);
        for (const char* weaker : {"phi(n,-)^2 * phi(n)^2", "phi(n,-)^3 * phi(n)", "phi(n,-)", "phi(n)"}) {
            c.modulus = weaker;
            CHECK(verify_case(c).holds);
        }
    }
}

TEST_CASE("perturbations of a verified case") {
    for (long n : {5L, 7L, 9L}) {
        CaseSpec c = thm1_1(n);
        CaseValues v = evaluate_case(c);
        Modulus m = parse_modulus(c.modulus, c.params);
        REQUIRE(check_congruence(v.lhs, v.rhs, m).holds);
        CycloFrac coprime_den = CycloFrac::qint(3);  // Phi_3, coprime to Phi_n and Phi_2n
        for (int t = 1; t <= 3; ++t) {
            INFO("n=" << n << " t=" << t);
            // Full modulus multiple: verdict unchanged.
            CycloFrac full = CycloFrac(m.expanded) * CycloFrac(t) / coprime_den;
            CHECK(check_congruence(v.lhs + full, v.rhs, m).holds);
            // One power of Phi_n(q) short.
            CycloFrac shy = CycloFrac(cyclotomic(n)) * CycloFrac(t);
            Verdict bad = check_congruence(v.lhs + shy, v.rhs, m);
            CHECK_FALSE(bad.holds);
            REQUIRE(bad.witness);
            CHECK(bad.witness->failed_factor.index == n);
            CHECK(bad.witness->achieved == 1);
            // One power of Phi_n(-q) short.
            CycloFrac shy_neg = CycloFrac(cyclotomic(2 * n)).pow(2) * CycloFrac(cyclotomic(n)).pow(2) * CycloFrac(t);
            Verdict bad_neg = check_congruence(v.lhs + shy_neg, v.rhs, m);
            CHECK_FALSE(bad_neg.holds);
            CHECK(bad_neg.witness->failed_factor.index == 2 * n);
            CHECK(bad_neg.witness->achieved == 2);
        }
    }
}

TEST_CASE("verify_case examples") {
    CHECK(verify_case(thm1_1(3)).holds);

    CaseSpec bad = double_case(TermId::Thm1_3Lhs, TermId::Thm1_3Pre, TermId::Thm1_3Rhs, "(n-r)/d", 2,
                               "phi(n,-)^2 * phi(n)^2", 5, 3, 1);
    CHECK_THROWS_AS(verify_case(bad), ConstraintViolation);
    bad.params.r = 2;
    CHECK(verify_case(bad).holds);

    // The exponent of Phi_n(q) is sharp for n = 5.
    Verdict v = verify_case(thm1_1(5, "phi(n,-)^3 * phi(n)^3"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->failed_factor.index == 5);
    CHECK(v.witness->achieved == 2);

    ProbeResult p = probe(thm1_1(5), 8);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.denominator_coprime);
    for (const auto& e : p.entries) CHECK(e.achieved >= e.required);
}

TEST_CASE("term-language sides give the same verdict as registry sides") {
    CaseSpec c = thm1_1(7);
    CaseSpec s = c;
    s.lhs = {std::nullopt, term_info(TermId::Thm1_1Lhs).source};
    s.rhs.inner = {std::nullopt, term_info(TermId::Thm1_1Rhs).source};
    s.rhs.prefactor = {std::nullopt, "[n]_q2^2 * qpow((n-1)^2)"};
    CaseValues a = evaluate_case(c), b = evaluate_case(s);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(verify_case(s).holds);

    CaseSpec single;
    single.kind = CaseKind::SingleSum;
    single.params.n = 7;
    single.lhs.id = TermId::Eq1_1Lhs;
    single.lhs_upper = "(n-1)/2";
    single.rhs.prefactor.id = TermId::Eq1_1Pre;
    single.modulus = "[n] * phi(n)^2";
    CHECK(verify_case(single).holds);
}

TEST_CASE("the quartic triple sum fails modulo [n] at divisors m != 1 (mod d)") {
    CHECK(verify_case(thm6_4(7, 3)).holds);
    CHECK(verify_case(thm6_4(5, 4)).holds);

    // n = 4, d = 3: at q = -1 the summands tend to 1, -1, 16/81, -16/81 (limits
    // of the 0/0 factors (1-q^4)/(1-q^6) -> 2/3), so the triple sum is -32/27
    // there while the right side carries [4]^3.
    std::vector<Rational> c{1, -1, Rational(16, 81), Rational(-16, 81)};
    Rational oracle = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j)
            for (int s = 0; i + j + s < 4; ++s) oracle += c[i] * c[j] * c[s];
    CHECK(oracle == Rational(-32, 27));
    CaseValues v = evaluate_case(thm6_4(4, 3));
    CHECK(v.lhs.evaluate(Rational(-1)) == oracle);
    CHECK(v.rhs.valuation(2, 10) >= 3);

    Verdict bad = verify_case(thm6_4(4, 3));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(bad.witness->failed_factor.index == 2);
    CHECK(bad.witness->achieved == 0);

    // The Phi_n(q)^4 part and the divisors m = 1 (mod d) do hold.
    for (auto [n, d] : std::vector<std::pair<long, long>>{{4, 3}, {10, 3}, {9, 4}, {16, 3}}) {
        INFO("n=" << n << " d=" << d);
        CaseValues w = evaluate_case(thm6_4(n, d));
        CycloFrac diff = w.lhs - w.rhs;
        CHECK(diff.valuation(n, 4) == 4);
        for (long m : divisors(n))
            if (m > 1 && m < n) CHECK((diff.valuation(m, 1) >= 1) == (m % d == 1));
    }
}

TEST_CASE("specialisation examples") {
    // Exact equalities at the roots of the linear factors.
    Verdict l22 = verify_specialization(lemma("lem2_2", 5, 3, 2));
    CHECK(l22.holds);
    CHECK(l22.checks >= 3);
    CHECK(verify_specialization(lemma("lem3_1", 7, 4, 3)).holds);
    Verdict l66 = verify_specialization(lemma("lem6_6", 7, 3, 1));
    CHECK(l66.holds);
    CHECK(l66.checks >= 3);
    CHECK(l66.skipped >= 1);  // a = q^3 kills (q^d/a;q^d)_k

    Verdict l51 = verify_specialization(lemma("lem5_1", 7, 3, 1));
    CHECK(l51.holds);
    CHECK(l51.checks >= 6);

    Verdict l65 = verify_specialization(lemma("lem6_5", 7, 3, 1, {{"b", 14}}));
    CHECK(l65.holds);
    CHECK(l65.checks == 7);
    CHECK(l65.skipped == 0);

    CHECK_THROWS_AS(verify_specialization(lemma("lem9_9", 7, 3, 1)), UnknownTerm);
    CHECK_THROWS_AS(verify_specialization(lemma("lem2_2", 6, 5, 1)), ConstraintViolation);
}

TEST_CASE("samples that put a modulus factor in a parametric denominator are skipped") {
    // With b = q^3, (bq^d;q^d)_k picks up Phi_7 at k = 6, so no sampled
    // specialisation of a is legitimate modulo Phi_7; only the exact points run.
    Verdict v = verify_specialization(lemma("lem6_5", 7, 3, 1, {{"b", 3}}));
    CHECK(v.holds);
    CHECK(v.checks == 2);
    CHECK(v.skipped == 5);
    for (const auto& note : v.notes) CHECK(note.find("skipped") != std::string::npos);

    // The screen is what keeps sampling honest: a = q^2 is illegitimate
    // modulo Phi_7 and the congruence really does fail there.
    CaseParams p;
    p.n = 7;
    p.d = 3;
    p.r = 1;
    p.extra = {{"a", 2}, {"b", 14}};
    auto z = builtin_factored(TermId::Lem6_5Z, p);
    std::vector<CycloFrac> vals;
    bool pole = false;
    for (long k = 0; k < 7; ++k) {
        TermBuilder t = z(k);
        pole = pole || t.parametric_pole({7}).has_value();
        vals.push_back(t.result());
    }
    CHECK(pole);
    CycloFrac lhs = triple_sum(prefix_table([&](long k) { return vals[k]; }, 7), 7);
    CycloFrac rhs = builtin_generator(TermId::Lem6_5Pre, p)(0);
    CHECK_FALSE(check_congruence(lhs, rhs, phi(7)).holds);
}

TEST_CASE("CRT relations") {
    for (long n : {3L, 5L, 7L})
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b) {
                INFO("n=" << n << " a=" << a << " b=" << b);
                Verdict v = check_crt_identities(n, a, b);
                CHECK(v.holds);
                CHECK(v.checks + v.skipped == 4);
            }
    // b = q^n makes a - b vanish at a = q^n and 1 - ab vanish at a = q^-n.
    Verdict v = check_crt_identities(3, 1, 3);
    CHECK(v.skipped == 2);
    CHECK(v.holds);
}

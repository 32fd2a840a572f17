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

#include "doctest.h"
#include "qcong/errors.hpp"
#include "qcong/padic.hpp"
#include "test_util.hpp"

using namespace qcong;
using testing::uniform;

namespace {

std::vector<long> primes_for(const ClaimInfo& c) {
    if (c.residue) return {5, 13, 17};
    return {3, 5, 7, 11, 13};
}

Rational central_binomial(long k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return Rational(c);
}

Rational pow_int(long b, long e) {
    Integer x;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return Rational(x);
}

// The double sums written with binomials, independent of the registry.
Rational binomial_double_sum(long p, int power, bool alternate, bool weighted) {
    Rational total = 0;
    for (long k = 0; k < p; ++k) {
        Rational inner = 0;
        for (long j = 0; j <= k; ++j) {
            Rational t = 1;
            for (int i = 0; i < power; ++i) t *= central_binomial(j) * central_binomial(k - j);
            if (weighted) t *= Rational((4 * j + 1) * (4 * (k - j) + 1));
            inner += t;
        }
        Rational scale = pow_int(power == 2 ? 16 : 64, k);
        total += (alternate && k % 2 ? -inner : inner) / scale;
    }
    return total;
}

// (1/4)_j / j! as a product of (4i+1)/(4i+4).
Rational quarter_ratio(long j) {
    Rational t = 1;
    for (long i = 0; i < j; ++i) t *= Rational(4 * i + 1, 4 * i + 4);
    return t;
}

}  // namespace

TEST_CASE("valuation examples") {
    CHECK(vp(50, 5) == 2);
    CHECK(vp(Rational(1, 5), 5) == -1);
    CHECK_FALSE(vp(0, 7).has_value());
    CHECK(vp(Rational(-18, 7), 3) == 2);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(15));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("valuation is additive") {
    for (int t = 0; t < 300; ++t) {
        Rational x = testing::random_rational(500), y = testing::random_rational(500);
        if (sgn(x) == 0 || sgn(y) == 0) continue;
        for (long p : {2L, 3L, 5L, 7L}) CHECK(*vp(x * y, p) == *vp(x, p) + *vp(y, p));
    }
}

TEST_CASE("rising factorials match central binomials") {
    for (long k = 0; k <= 50; ++k) {
        Rational f = 1;
        for (long i = 1; i <= k; ++i) f *= i;
        CHECK(rising(Rational(1, 2), k) / f == central_binomial(k) / pow_int(4, k));
    }
    CHECK(rising(Rational(3, 4), 2) == Rational(21, 16));
}

TEST_CASE("classical sum examples") {
    ClassicalValue sun = classical_sum("sun.m4", 3);
    CHECK(sun.lhs == Rational(3, 2));
    CHECK(vp(sun.lhs, 3) == 1);
    CHECK(check_padic(make_claim("sun.m4", 3)).holds);

    ClassicalValue e13 = classical_sum("cor1_6.e13", 3);
    CHECK(*vp(e13.lhs - 9, 3) >= 4);

    ClassicalValue c7 = classical_sum("cor1_7.b", 5);
    CHECK(*vp(c7.lhs - 25, 5) >= 3);
}

TEST_CASE("check_padic examples") {
    PadicClaim same{"x", 5, 9, Rational(7, 3), Rational(7, 3), std::nullopt};
    PadicVerdict v = check_padic(same);
    CHECK(v.holds);
    CHECK_FALSE(v.achieved);

    PadicClaim gap{"x", 5, 3, Rational(26), Rational(1), std::nullopt};
    v = check_padic(gap);
    CHECK_FALSE(v.holds);
    CHECK(v.achieved == 2);

    v = check_padic(make_claim("cor1_6.e12", 5));
    CHECK(v.holds);
    CHECK(*v.achieved >= 3);
}

TEST_CASE("claim errors") {
    CHECK_THROWS_AS(classical_sum("cor1_7.a", 3), ResidueConditionViolated);
    CHECK_THROWS_AS(classical_sum("cor1_7.b", 7), ResidueConditionViolated);
    CHECK_THROWS_AS(classical_sum("nope", 5), UnknownClaim);
    CHECK_THROWS_AS(classical_sum("sun.m4", 9), std::invalid_argument);
    CHECK_THROWS_AS(classical_sum("sun.m4", 2), std::invalid_argument);
    PadicClaim c = make_claim("cor1_7.a", 5);
    c.p = 7;
    CHECK_THROWS_AS(check_padic(c), ResidueConditionViolated);
    CHECK(all_claims().size() == 8);
}

TEST_CASE("registry sums agree with binomial forms") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        INFO("p=" << p);
        CHECK(classical_sum("cor1_5.a", p).lhs == binomial_double_sum(p, 2, true, false));
        CHECK(classical_sum("cor1_5.b", p).lhs == binomial_double_sum(p, 3, true, false));
        CHECK(classical_sum("cor1_6.e12", p).lhs == binomial_double_sum(p, 2, false, true));
        CHECK(classical_sum("cor1_6.e13", p).lhs == binomial_double_sum(p, 3, true, true));
        CHECK(classical_sum("li.eq1_3", p).lhs == binomial_double_sum(p, 3, true, true));
        Rational s = 0;
        for (long k = 0; k <= (p - 1) / 2; ++k) s += central_binomial(k) / (pow_int(4, k) * (4 * k + 1));
        CHECK(classical_sum("cor1_5.a", p).rhs == Rational(p * p) * s * s);
    }
    for (long p : {5L, 13L, 17L}) {
        Rational a = 0, b = 0, s = 0;
        for (long k = 0; k < p; ++k)
            for (long j = 0; j <= k; ++j) {
                Rational w = Rational((8 * j + 1) * (8 * (k - j) + 1));
                Rational x = quarter_ratio(j) * quarter_ratio(k - j);
                a += w * x * x;
                b += (k % 2 ? -w : w) * x * x * x;
            }
        for (long k = 0; k <= (p - 1) / 4; ++k) s += quarter_ratio(k);
        CHECK(classical_sum("cor1_7.a", p).lhs == a);
        CHECK(classical_sum("cor1_7.a", p).rhs == Rational(p * p) * s * s);
        CHECK(classical_sum("cor1_7.b", p).lhs == b);
    }
}

TEST_CASE("every claim holds on its prime set") {
    for (const auto& info : all_claims())
        for (long p : primes_for(info)) {
            INFO(info.id << " p=" << p);
            PadicVerdict v = check_padic(make_claim(info.id, p));
            CHECK(v.holds);
        }
}

TEST_CASE("the p^4 claim is strictly stronger than the p^3 one it refines") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        PadicVerdict strong = check_padic(make_claim("cor1_6.e13", p));
        PadicVerdict weak = check_padic(make_claim("li.eq1_3", p));
        REQUIRE(strong.achieved);
        CHECK(*strong.achieved >= 4);
        CHECK(*strong.achieved > claim_info("li.eq1_3").exponent);
        CHECK(weak.achieved == strong.achieved);
    }
}

TEST_CASE("q-images agree with the classical sums") {
    for (const auto& info : all_claims())
        for (long p : primes_for(info)) {
            INFO(info.id << " p=" << p);
            CaseSpec c = info.q_case;
            c.params.n = p;
            PadicClaim q = q_to_classical(c, info.target_q);
            ClassicalValue direct = classical_sum(info.id, p);
            CHECK(q.lhs == direct.lhs);
            CHECK(q.exponent == info.exponent);
            if (info.rhs_exact)
                CHECK(q.rhs == direct.rhs);
            else
                CHECK(*vp(q.rhs - direct.rhs, p) >= info.exponent);
        }
}

TEST_CASE("a pole at the target point is reported") {
    CaseSpec c;
    c.kind = CaseKind::SingleSum;
    c.params.n = 3;
    c.lhs.source = "1 / poch(1; 1; 1)";
    c.lhs_upper = "0";
    c.modulus = "phi(n)";
    CHECK_THROWS_AS(q_to_classical(c, 1), PoleAtPoint);
    CHECK(q_to_classical(c, -1).lhs == Rational(1, 2));
    c.params.n = 9;
    CHECK_THROWS_AS(q_to_classical(c, -1), std::invalid_argument);
}

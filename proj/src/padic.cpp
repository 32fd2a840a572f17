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

#include "qcong/padic.hpp"

#include <functional>
#include <stdexcept>

#include "qcong/errors.hpp"
#include "qcong/termlang.hpp"

namespace qcong {

std::optional<long> vp(const Rational& x, long p) {
    if (p < 2) throw std::invalid_argument("vp needs p >= 2");
    if (sgn(x) == 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den(), P(p);
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), P.get_mpz_t())) {
        num /= P;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t())) {
        den /= P;
        --v;
    }
    return v;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

Rational rising(const Rational& a, long k) {
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= a + i;
    return out;
}

namespace {

// t(k) = (a)_k / k! for k < count.
std::vector<Rational> ratio_sequence(const Rational& a, long count) {
    std::vector<Rational> out;
    Rational t = 1;
    for (long k = 0; k < count; ++k) {
        out.push_back(t);
        t *= (a + k) / Rational(k + 1);
    }
    return out;
}

// sum_{k<p} sum_{j<=k} a(j) a(k-j).
Rational convolution_sum(const std::vector<Rational>& a, long p) {
    Rational out = 0;
    for (long k = 0; k < p; ++k)
        for (long j = 0; j <= k; ++j) out += a[j] * a[k - j];
    return out;
}

Rational sign(long k) { return k % 2 == 0 ? 1 : -1; }

CaseSpec double_q_case(TermId lhs, TermId pre, std::optional<TermId> inner, const char* upper, const char* mod,
                       long d = 2, long r = 1) {
    CaseSpec c;
    c.kind = CaseKind::DoubleSum;
    c.params.d = d;
    c.params.r = r;
    c.lhs.id = lhs;
    c.rhs.prefactor.id = pre;
    if (inner) {
        c.rhs.inner.id = *inner;
        c.rhs.upper = upper;
        c.rhs.power = 2;
    }
    c.modulus = mod;
    return c;
}

struct Claim {
    ClaimInfo info;
    std::function<ClassicalValue(long p)> eval;
};

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> v;
        const Rational half(1, 2), quarter(1, 4);
        auto half_binomial = [half](long count) { return ratio_sequence(half, count); };  // C(2k,k)/4^k

        v.push_back({{"cor1_5.a",
                      "sum_{k<p} (-1)^k/16^k sum_j C(2j,j)^2 C(2k-2j,k-j)^2 = p^2 (sum_{k<=(p-1)/2} C(2k,k)/((4k+1)4^k))^2",
                      2, std::nullopt,
                      double_q_case(TermId::Thm1_1Lhs, TermId::Thm1_1Pre, TermId::Thm1_1Rhs, "(n-1)/2",
                                    "phi(n,-)^3 * phi(n)^2"),
                      1, true},
                     [=](long p) {
                         auto b = half_binomial(p);
                         std::vector<Rational> a;
                         for (long j = 0; j < p; ++j) a.push_back(sign(j) * b[j] * b[j]);
                         Rational s = 0;
                         for (long k = 0; k <= (p - 1) / 2; ++k) s += b[k] / Rational(4 * k + 1);
                         return ClassicalValue{convolution_sum(a, p), Rational(p * p) * s * s};
                     }});
        v.push_back({{"cor1_5.b",
                      "sum_{k<p} (-1)^k/64^k sum_j C(2j,j)^3 C(2k-2j,k-j)^3 = p^2 (sum_{k<=(p-1)/2} "
                      "(1/2)_k^2/((3/4)_k (5/4)_k 4^k) C(2k,k))^2",
                      2, std::nullopt,
                      double_q_case(TermId::Thm1_2Lhs, TermId::Thm1_2Pre, TermId::Thm1_2Rhs, "(n-1)/2",
                                    "phi(n,-)^4 * phi(n)^2"),
                      1, true},
                     [=](long p) {
                         auto b = half_binomial(p);
                         std::vector<Rational> a;
                         for (long j = 0; j < p; ++j) a.push_back(sign(j) * b[j] * b[j] * b[j]);
                         Rational s = 0;
                         for (long k = 0; k <= (p - 1) / 2; ++k)
                             s += rising(half, k) * rising(half, k) /
                                  (rising(Rational(3, 4), k) * rising(Rational(5, 4), k)) * b[k];
                         return ClassicalValue{convolution_sum(a, p), Rational(p * p) * s * s};
                     }});
        v.push_back({{"cor1_6.e12",
                      "sum_{k<p} 1/16^k sum_j C(2j,j)^2 C(2k-2j,k-j)^2 (4j+1)(4k-4j+1) = 0", 3, std::nullopt,
                      double_q_case(TermId::Thm1_1Lhs, TermId::Thm1_1Pre, TermId::Thm1_1Rhs, "(n-1)/2",
                                    "phi(n,-)^3 * phi(n)^2"),
                      -1, false},
                     [=](long p) {
                         auto b = half_binomial(p);
                         std::vector<Rational> a;
                         for (long j = 0; j < p; ++j) a.push_back(Rational(4 * j + 1) * b[j] * b[j]);
                         return ClassicalValue{convolution_sum(a, p), 0};
                     }});
        auto e13 = [=](long p) {
            auto b = half_binomial(p);
            std::vector<Rational> a;
            for (long j = 0; j < p; ++j) a.push_back(sign(j) * Rational(4 * j + 1) * b[j] * b[j] * b[j]);
            return ClassicalValue{convolution_sum(a, p), Rational(p * p)};
        };
        v.push_back({{"cor1_6.e13",
                      "sum_{k<p} (-1)^k/64^k sum_j C(2j,j)^3 C(2k-2j,k-j)^3 (4j+1)(4k-4j+1) = p^2", 4,
                      std::nullopt,
                      double_q_case(TermId::Thm1_2Lhs, TermId::Thm1_2Pre, TermId::Thm1_2Rhs, "(n-1)/2",
                                    "phi(n,-)^4 * phi(n)^2"),
                      -1, true},
                     e13});
        v.push_back({{"cor1_7.a",
                      "sum_{k<p} sum_j (8j+1)(8k-8j+1) (1/4)_j^2 (1/4)_{k-j}^2/(j!^2 (k-j)!^2) = p^2 "
                      "(sum_{k<=(p-1)/4} (1/4)_k/k!)^2",
                      2, std::pair<long, long>{1, 4},
                      double_q_case(TermId::Thm1_3Lhs, TermId::Thm1_3Pre, TermId::Thm1_3Rhs, "(n-r)/d",
                                    "phi(n,-)^2 * phi(n)^2", 4, 1),
                      -1, true},
                     [=](long p) {
                         auto t = ratio_sequence(quarter, p);
                         std::vector<Rational> a;
                         for (long j = 0; j < p; ++j) a.push_back(Rational(8 * j + 1) * t[j] * t[j]);
                         Rational s = 0;
                         for (long k = 0; k <= (p - 1) / 4; ++k) s += t[k];
                         return ClassicalValue{convolution_sum(a, p), Rational(p * p) * s * s};
                     }});
        v.push_back({{"cor1_7.b",
                      "sum_{k<p} (-1)^k sum_j (8j+1)(8k-8j+1) (1/4)_j^3 (1/4)_{k-j}^3/(j!^3 (k-j)!^3) = p^2", 3,
                      std::pair<long, long>{1, 4},
                      double_q_case(TermId::Thm1_4Lhs, TermId::Thm1_4Pre, TermId::Thm1_4Rhs, "(n-r)/d",
                                    "phi(n,-)^3 * phi(n)^2", 4, 1),
                      -1, true},
                     [=](long p) {
                         auto t = ratio_sequence(quarter, p);
                         std::vector<Rational> a;
                         for (long j = 0; j < p; ++j) a.push_back(sign(j) * Rational(8 * j + 1) * t[j] * t[j] * t[j]);
                         return ClassicalValue{convolution_sum(a, p), Rational(p * p)};
                     }});
        v.push_back({{"li.eq1_3",
                      "sum_{k<p} (-1)^k/64^k sum_j C(2j,j)^3 C(2k-2j,k-j)^3 (4j+1)(4k-4j+1) = p^2", 3, std::nullopt,
                      double_q_case(TermId::Eq1_2Lhs, TermId::Eq1_2Pre, std::nullopt, "", "[n] * phi(n)^2"), 1,
                      true},
                     e13});
        {
            CaseSpec sun;
            sun.kind = CaseKind::SingleSum;
            sun.lhs.id = TermId::Thm1_1Rhs;
            sun.lhs_upper = "(n-1)/2";
            sun.rhs.prefactor = {std::nullopt, "0"};
            sun.modulus = "phi(n,-)";
            v.push_back({{"sun.m4", "sum_{k<=(p-1)/2} C(2k,k)/4^k = 0", 1, std::nullopt, sun, -1, true},
                         [=](long p) {
                             Rational s = 0;
                             for (const auto& x : half_binomial((p - 1) / 2 + 1)) s += x;
                             return ClassicalValue{s, 0};
                         }});
        }
        return v;
    }();
    return claims;
}

const Claim& find(std::string_view id) {
    for (const auto& c : registry())
        if (c.info.id == id) return c;
    throw UnknownClaim("unknown claim '" + std::string(id) + "'");
}

}  // namespace

const std::vector<ClaimInfo>& all_claims() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> v;
        for (const auto& c : registry()) v.push_back(c.info);
        return v;
    }();
    return infos;
}

const ClaimInfo& claim_info(std::string_view id) { return find(id).info; }

ClassicalValue classical_sum(std::string_view id, long p) {
    const Claim& c = find(id);
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (c.info.residue) {
        auto [r, m] = *c.info.residue;
        if (p % m != r)
            throw ResidueConditionViolated(std::string(id) + " needs p = " + std::to_string(r) + " (mod " +
                                           std::to_string(m) + "), got p = " + std::to_string(p));
    }
    return c.eval(p);
}

PadicClaim make_claim(std::string_view id, long p) {
    const ClaimInfo& info = claim_info(id);
    ClassicalValue v = classical_sum(id, p);
    return PadicClaim{info.id, p, info.exponent, v.lhs, v.rhs, info.residue};
}

PadicVerdict check_padic(const PadicClaim& claim) {
    if (claim.residue && claim.p % claim.residue->second != claim.residue->first)
        throw ResidueConditionViolated(claim.id + ": residue condition fails for p = " + std::to_string(claim.p));
    PadicVerdict v;
    v.achieved = vp(claim.lhs - claim.rhs, claim.p);
    v.holds = !v.achieved || *v.achieved >= claim.exponent;
    return v;
}

PadicClaim q_to_classical(const CaseSpec& c, int target_q) {
    if (target_q != 1 && target_q != -1) throw std::invalid_argument("target q must be 1 or -1");
    long p = c.params.n;
    if (!is_prime(p)) throw std::invalid_argument("q_to_classical needs n prime, got " + std::to_string(p));
    CaseSpec shaped = c;
    if (shaped.kind == CaseKind::Padic) shaped.kind = shaped.sum_kind;
    CaseValues v = evaluate_case(shaped);
    Rational at(target_q);
    PadicClaim out;
    out.id = c.id;
    out.p = p;
    out.lhs = v.lhs.evaluate(at);
    out.rhs = v.rhs.evaluate(at);
    Modulus m = parse_modulus(c.modulus, c.params);
    auto e = vp(Rational(m.expanded.evaluate(Integer(target_q))), p);
    if (!e) throw PoleAtPoint("modulus vanishes at q = " + std::to_string(target_q));
    out.exponent = static_cast<int>(*e);
    return out;
}

}  // namespace qcong

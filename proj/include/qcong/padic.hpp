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

#ifndef QCONG_PADIC_HPP
#define QCONG_PADIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/checker.hpp"
#include "qcong/polyring.hpp"

namespace qcong {

/// p-adic valuation of a rational; nullopt stands for +infinity (x = 0).
std::optional<long> vp(const Rational& x, long p);

/// Deterministic trial division.
bool is_prime(long p);

/// a (a+1) ... (a+k-1)
Rational rising(const Rational& a, long k);

/// lhs = rhs (mod p^exponent), meaningful when p = residue (mod modulus)
/// if a residue condition is present.
struct PadicClaim {
    std::string id;
    long p = 3;
    int exponent = 1;
    Rational lhs;
    Rational rhs;
    std::optional<std::pair<long, long>> residue;  // {c, m}: p = c (mod m)
};

struct PadicVerdict {
    bool holds = true;
    std::optional<long> achieved;  // vp(lhs - rhs); nullopt when equal
};

/// Both sides of a classical claim.
struct ClassicalValue {
    Rational lhs;
    Rational rhs;
};

/// A registry claim: cor1_5.a, cor1_5.b, cor1_6.e12, cor1_6.e13, cor1_7.a,
/// cor1_7.b, li.eq1_3, sun.m4.
struct ClaimInfo {
    std::string id;
    std::string statement;
    int exponent = 1;
    std::optional<std::pair<long, long>> residue;
    /// The q-case whose image at q -> target_q gives the claim, with n = p.
    CaseSpec q_case;
    int target_q = 1;
    /// Whether the q-image right side equals the claim's right side exactly;
    /// otherwise they agree only modulo p^exponent.
    bool rhs_exact = true;
};

const std::vector<ClaimInfo>& all_claims();
/// Throws UnknownClaim.
const ClaimInfo& claim_info(std::string_view id);

/// Exact sides of a claim at p. Throws ResidueConditionViolated, or
/// std::invalid_argument for p not an odd prime.
ClassicalValue classical_sum(std::string_view id, long p);

/// The registry claim at p, ready for check_padic.
PadicClaim make_claim(std::string_view id, long p);

PadicVerdict check_padic(const PadicClaim& claim);

/// Evaluates a q-case with n = p at q = target_q (1 or -1). The exponent is
/// the p-adic order of the modulus at target_q. Throws PoleAtPoint.
PadicClaim q_to_classical(const CaseSpec& c, int target_q);

}  // namespace qcong

#endif  // QCONG_PADIC_HPP

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

#ifndef QCONG_CHECKER_HPP
#define QCONG_CHECKER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/cyclofrac.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/polyring.hpp"
#include "qcong/qterms.hpp"

namespace qcong {

/// Why a congruence failed. `failed_factor` is the first irreducible factor
/// Phi_m(q)^e of the modulus that does not divide the difference, with
/// `achieved` the multiplicity actually present (negative for a pole).
struct Witness {
    ModulusFactor failed_factor;
    int achieved = 0;
    std::string remainder_digest;  // FNV-1a of the remainder coefficients
    std::optional<IntPoly> gcd_obstruction;
    std::optional<IntPoly> remainder;  // kept only on request
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
    int checks = 0;   // congruences or equalities decided
    int skipped = 0;  // specialisations skipped as degenerate
};

struct CheckOptions {
    bool keep_remainder = false;
};

/// Literal route: reduce lhs - rhs to A/B, require gcd(B, M) = 1 and
/// M | A.
Verdict check_congruence(const RatFunc& lhs, const RatFunc& rhs, const Modulus& m,
                         const CheckOptions& opt = {});

/// Valuation route on the factored difference, confirmed by the literal
/// route. Throws std::logic_error if the routes disagree.
Verdict check_congruence(const CycloFrac& lhs, const CycloFrac& rhs, const Modulus& m,
                         const CheckOptions& opt = {});

std::string remainder_digest(const IntPoly& p);

enum class CaseKind { DoubleSum, TripleSum, SingleSum, Specialization, Padic, Crt };

std::string to_string(CaseKind kind);
/// Throws CaseFileError.
CaseKind case_kind_from_string(std::string_view s);

/// A registry term or a term-language source; exactly one is set.
struct TermRef {
    std::optional<TermId> id;
    std::string source;

    bool empty() const { return !id && source.empty(); }
    std::string to_string() const;
};

/// prefactor * (sum_{k=0}^{upper} inner(k))^power, or just the prefactor.
struct RhsSpec {
    TermRef prefactor;
    TermRef inner;
    std::string upper;
    int power = 1;
};

struct CaseSpec {
    std::string id;
    CaseKind kind = CaseKind::DoubleSum;
    CaseParams params;
    std::string theorem;  // optional constraint set, e.g. "thm1_3"
    TermRef lhs;
    std::string lhs_upper;  // single sums only
    RhsSpec rhs;
    std::string modulus;
    std::string notes;

    std::string lemma;              // specialization
    std::vector<long> samples;      // specialization; empty = default set
    std::string claim;              // padic
    int exponent = 0;               // padic; 0 = the claim's own
    std::optional<int> target_q;    // padic via a q-case: 1 or -1
    CaseKind sum_kind = CaseKind::DoubleSum;  // shape of that q-case
};

/// Both sides of a summation case as exact values.
struct CaseValues {
    CycloFrac lhs;
    CycloFrac rhs;
    long terms = 0;
};

CaseValues evaluate_case(const CaseSpec& c);

/// Double, triple and single sum cases. Throws ConstraintViolation.
Verdict verify_case(const CaseSpec& c, const CheckOptions& opt = {});

/// Sample exponents j used when a case gives none.
std::vector<long> default_samples(long n);

/// Parametric lemmas lem2_2, lem3_1, lem5_1, lem6_5, lem6_6: exact equality
/// where the linear modulus factors vanish, and congruence modulo the
/// cyclotomic part at sampled specialisations. A sample that puts a modulus
/// factor into a parameter-dependent denominator is skipped and noted.
Verdict verify_specialization(const CaseSpec& c, const CheckOptions& opt = {});

/// The two unit relations behind the Chinese remainder step of the triple
/// sum argument and the closing polynomial identity, at a = q^a_exp and
/// b = q^b_exp.
Verdict check_crt_identities(long n, long a_exp, long b_exp);

/// Multiplicity of each irreducible modulus factor in lhs - rhs, capped.
struct ProbeEntry {
    long index = 1;  // Phi_index(q)
    int required = 0;
    int achieved = 0;
};

struct ProbeResult {
    std::vector<ProbeEntry> entries;
    bool denominator_coprime = true;
};

ProbeResult probe(const CaseSpec& c, int max_exponent);

}  // namespace qcong

#endif  // QCONG_CHECKER_HPP

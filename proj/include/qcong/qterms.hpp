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

#ifndef QCONG_QTERMS_HPP
#define QCONG_QTERMS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/cyclofrac.hpp"
#include "qcong/polyring.hpp"

namespace qcong {

/// Instance parameters. Extra integer parameters carry specialisations such
/// as a = q^{extra["a"]}.
struct CaseParams {
    long n = 3;
    long d = 2;
    long r = 1;
    std::map<std::string, long> extra;

    /// Value of n, d, r or an extra; throws UnboundSymbol.
    long get(std::string_view name) const;
    bool has(std::string_view name) const;
    std::string to_string() const;
};

/// [m]_q, or [m]_{q^2} when `square` is set. m >= 1.
IntPoly q_integer(long m, bool square = false);

/// (q^a; q^step)_k as a polynomial; every exponent a + i*step must be
/// nonnegative.
IntPoly q_pochhammer(long a_exp, long step, long k);

/// (q^a; q^step)_k for any integer a; negative powers of q go to the
/// denominator.
RatFunc q_pochhammer_rational(long a_exp, long step, long k);

/// Accumulates a product of factors raised to signed powers. A zero factor in
/// the numerator makes the product zero; a zero factor in the denominator is a
/// degenerate specialisation.
///
/// Denominator factors that depend on a specialised parameter (a or b) are
/// kept, so a caller can tell when a specialisation puts a modulus factor into
/// a denominator that is coprime to it for an indeterminate parameter.
class TermBuilder {
   public:
    TermBuilder& mul(const CycloFrac& factor, long power = 1, std::string_view label = {}, bool parametric = false);
    CycloFrac result() const { return zero_ ? CycloFrac() : value_; }

    /// Label of the first parametric denominator factor divisible by Phi_m
    /// for some m in `indices`.
    std::optional<std::string> parametric_pole(const std::vector<long>& indices) const;

   private:
    struct Watched {
        std::string label;
        CycloFrac factor;
    };
    CycloFrac value_{1};
    bool zero_ = false;
    std::vector<Watched> watched_;
};

enum class TermId {
    Thm1_1Lhs, Thm1_1Rhs, Thm1_1Pre,
    Thm1_2Lhs, Thm1_2Rhs, Thm1_2Pre,
    Thm1_3Lhs, Thm1_3Rhs, Thm1_3Pre,
    Thm1_4Lhs, Thm1_4Rhs, Thm1_4Pre,
    Thm6_1Lhs, Thm6_1Rhs, Thm6_1Pre,
    Thm6_3Lhs, Thm6_3Rhs, Thm6_3Pre,
    Thm6_4Lhs, Thm6_4Pre,
    Cor6_7Lhs, Cor6_7Pre,
    Cor6_8Lhs, Cor6_8Pre,
    Eq1_1Lhs, Eq1_1Pre,
    Eq1_2Lhs, Eq1_2Pre,
    Eq1_7Lhs, Eq1_7Rhs, Eq1_7Pre,
    Eq1_8Lhs, Eq1_8Rhs, Eq1_8Pre,
    Lem2_2Lhs, Lem2_2Rhs, Lem2_2Pre,
    Lem3_1Lhs, Lem3_1Rhs, Lem3_1Pre,
    Lem5_1Lhs, Lem5_1Rhs,
    Lem6_5Z, Lem6_5Pre,
    Lem6_6Pre,
};

/// A named predicate on CaseParams.
struct Constraint {
    std::string name;
    std::function<bool(const CaseParams&)> holds;
};

struct TermInfo {
    TermId id;
    std::string name;          // e.g. "thm1_1.lhs"
    std::string description;
    std::string source;        // equivalent term-language text
    std::vector<std::string> extras;  // required extra parameters
    std::vector<Constraint> constraints;
};

const std::vector<TermInfo>& all_terms();
const TermInfo& term_info(TermId id);
std::optional<TermId> term_from_name(std::string_view name);

/// Throws ConstraintViolation naming the first failed predicate.
void check_constraints(const std::vector<Constraint>& constraints, const CaseParams& params,
                       std::string_view context);

/// Named predicate sets for whole theorem instances ("thm1_3", ...).
const std::vector<Constraint>& theorem_constraints(std::string_view theorem);
bool has_theorem_constraints(std::string_view theorem);

using CycloGenerator = std::function<CycloFrac(long k)>;
using RatGenerator = std::function<RatFunc(long k)>;
using FactoredGenerator = std::function<TermBuilder(long k)>;

/// Hand-coded generator keeping the factor record. Constraints are checked
/// once, up front.
FactoredGenerator builtin_factored(TermId id, const CaseParams& params);

/// Hand-coded generator for the k-th value of a registry term. Constraints
/// are checked once, up front.
CycloGenerator builtin_generator(TermId id, const CaseParams& params);

/// The same values as reduced rational functions.
RatGenerator builtin_term(TermId id, const CaseParams& params);

}  // namespace qcong

#endif  // QCONG_QTERMS_HPP

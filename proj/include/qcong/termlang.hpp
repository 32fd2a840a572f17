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

#ifndef QCONG_TERMLANG_HPP
#define QCONG_TERMLANG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qcong/cyclofrac.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/polyring.hpp"
#include "qcong/qterms.hpp"

namespace qcong {

/// Integer-valued expression in n, d, r, k and declared extras. Division is
/// allowed; a fractional value is rejected at evaluation time.
struct Form {
    enum class Kind { Int, Sym, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Int;
    long value = 0;     // Int literal, or the exponent of Pow
    std::string name;   // Sym
    std::vector<Form> kids;

    static Form integer(long v);
    static Form symbol(std::string name);
    static Form unary(Kind kind, Form x);
    static Form binary(Kind kind, Form a, Form b);

    /// Degree in k; throws std::domain_error when k sits in a divisor.
    int k_degree() const;

    friend bool operator==(const Form& a, const Form& b);
};

std::string to_string(const Form& f);

/// Exact value at a binding; throws NonIntegerExponent when fractional.
long eval_form(const Form& f, const CaseParams& params, long k);

struct TermFactor {
    enum class Kind {
        Sign,      // (-1)^form
        QPow,      // q^form
        OnePlus,   // 1 + q^form
        Poch,      // (q^base; q^step)_length
        QInt,      // [arg] or [arg]_{q^2}
        Const,     // integer constant
    };

    Kind kind = Kind::Const;
    Form a;         // exponent, base or argument
    Form step;      // Poch
    Form length;    // Poch
    bool square = false;  // QInt
    long constant = 1;    // Const
    long power = 1;       // nonzero; Sign and QPow keep 1 and fold powers into a

    friend bool operator==(const TermFactor&, const TermFactor&) = default;
};

/// Flattened product of factors with signed powers.
struct TermAST {
    std::vector<TermFactor> factors;

    friend bool operator==(const TermAST&, const TermAST&) = default;
};

/// Parses a summand. Names other than n, d, r, k and `extras` raise
/// UnboundSymbol; malformed input raises SyntaxError.
TermAST parse_term(std::string_view src, const std::vector<std::string>& extras = {});

/// Parses a bare integer expression such as "(n-r)/d".
Form parse_form(std::string_view src, const std::vector<std::string>& extras = {});

/// Canonical text; parse_term(print_term(t)) == t.
std::string print_term(const TermAST& ast);

/// Value with the factor record kept; a factor is parametric when one of its
/// forms mentions an extra parameter.
TermBuilder eval_term_factored(const TermAST& ast, const CaseParams& params, long k);
CycloFrac eval_term_cyclo(const TermAST& ast, const CaseParams& params, long k);
RatFunc eval_term(const TermAST& ast, const CaseParams& params, long k);

/// Generator with the same signature as builtin_generator.
CycloGenerator compile_term(TermAST ast, CaseParams params);
FactoredGenerator compile_term_factored(TermAST ast, CaseParams params);

/// Parses a modulus such as "phi(n,-)^3 * phi(n,+)^2 * [n]" and builds it at
/// the given parameters. "phi(m)" means phi(m,+).
Modulus parse_modulus(std::string_view src, const CaseParams& params);

}  // namespace qcong

#endif  // QCONG_TERMLANG_HPP

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

#ifndef QCONG_CYCLOFRAC_HPP
#define QCONG_CYCLOFRAC_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcong/cyclotomic.hpp"
#include "qcong/polyring.hpp"

namespace qcong {

/// Element of Q(q) whose denominator is a product of cyclotomic polynomials
/// and a power of q, kept in factored form:
///
///     scalar * q^shift * prod Phi_m(q)^e_m * rest(q)
///
/// with e_m of either sign and rest in Z[q] primitive, positive leading,
/// rest(0) != 0, and not divisible by any Phi_m with e_m < 0. Every value the
/// summands and truncated sums produce has this shape, and keeping the
/// factorisation avoids polynomial gcds on large operands.
///
/// The representation is reduced but not unique: a cyclotomic factor may sit
/// either in rest or in the exponent map when its exponent is nonnegative.
class CycloFrac {
   public:
    using Exponents = std::map<long, int>;

    CycloFrac() = default;
    CycloFrac(const Rational& c);  // NOLINT(google-explicit-constructor)
    CycloFrac(long c) : CycloFrac(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit CycloFrac(const IntPoly& p);

    static CycloFrac qpow(long e);
    /// 1 - q^e; zero for e = 0.
    static CycloFrac one_minus_qpow(long e);
    /// 1 + q^e; 2 for e = 0.
    static CycloFrac one_plus_qpow(long e);
    /// [m]_{q^step} = (1 - q^{m step}) / (1 - q^step); [0] = 0 and
    /// [-m] = -q^{-m step} [m].
    static CycloFrac qint(long m, long step = 1);
    /// (q^a; q^step)_len for len >= 0.
    static CycloFrac poch(long a, long step, long len);
    static CycloFrac from_factorization(const CycloFactorization& f);

    bool is_zero() const { return sgn(scalar_) == 0; }
    const Rational& scalar() const noexcept { return scalar_; }
    long shift() const noexcept { return shift_; }
    const Exponents& exponents() const noexcept { return exps_; }
    const IntPoly& rest() const noexcept { return rest_; }

    CycloFrac operator-() const;
    /// Throws DivideByZero for zero and NonCyclotomicDivisor when rest has a
    /// non-cyclotomic factor.
    CycloFrac inverse() const;
    CycloFrac pow(long e) const;

    friend CycloFrac operator+(const CycloFrac& a, const CycloFrac& b);
    friend CycloFrac operator-(const CycloFrac& a, const CycloFrac& b) { return a + (-b); }
    friend CycloFrac operator*(const CycloFrac& a, const CycloFrac& b);
    friend CycloFrac operator/(const CycloFrac& a, const CycloFrac& b) { return a * b.inverse(); }
    CycloFrac& operator+=(const CycloFrac& b) { return *this = *this + b; }
    CycloFrac& operator-=(const CycloFrac& b) { return *this = *this - b; }
    CycloFrac& operator*=(const CycloFrac& b) { return *this = *this * b; }
    CycloFrac& operator/=(const CycloFrac& b) { return *this = *this / b; }

    /// Value equality.
    friend bool operator==(const CycloFrac& a, const CycloFrac& b) { return (a - b).is_zero(); }

    /// Sum of many values over one common denominator.
    static CycloFrac sum(std::span<const CycloFrac> terms);

    RatFunc to_ratfunc() const;
    /// Throws PoleAtPoint.
    Rational evaluate(const Rational& point) const;

    /// Multiplicity of Phi_m in the value, negative for a pole. Counting
    /// inside rest stops once the total reaches `cap`. Zero reports `cap`.
    int valuation(long m, int cap) const;

    std::string to_string() const;

   private:
    void normalize();
    void cancel_poles();

    Rational scalar_{0};
    long shift_ = 0;
    Exponents exps_;
    IntPoly rest_{1};
};

/// Exact division of p by Phi_m when it divides, screened modulo a prime.
bool try_divide_cyclotomic(IntPoly& p, long m);

}  // namespace qcong

#endif  // QCONG_CYCLOFRAC_HPP

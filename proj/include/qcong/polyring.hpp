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

#ifndef QCONG_POLYRING_HPP
#define QCONG_POLYRING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in q over the integers.
///
/// Coefficient i belongs to q^i. The representation is canonical: the zero
/// polynomial has no coefficients and otherwise the last coefficient is
/// nonzero, so equality is a plain vector comparison.
class IntPoly {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    /// c * q^degree
    static IntPoly monomial(const Integer& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    long degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
    }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of q^i; zero past the end.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    /// Largest coefficient bit length.
    std::size_t max_bits() const;
    /// Number of zero coefficients below the first nonzero one.
    std::size_t low_order() const;

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const;

    Rational evaluate(const Rational& point) const;
    Integer evaluate(const Integer& point) const;

    /// p(q) * q^k
    IntPoly shifted_up(std::size_t k) const;
    /// p(q) / q^k; the low k coefficients must be zero.
    IntPoly shifted_down(std::size_t k) const;
    /// p(-q)
    IntPoly negate_variable() const;
    /// p(q^s), s >= 1
    IntPoly inflate(std::size_t s) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact division of every coefficient by c.
    IntPoly divexact(const Integer& c) const;

    /// Human-readable form, e.g. "q^2 - 1".
    std::string to_string() const;

   private:
    void normalize();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// base^exponent by repeated squaring.
IntPoly power(const IntPoly& base, unsigned exponent);

/// Multiplication kernels. `operator*` picks one by size; all return
/// identical results.
namespace detail {
IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);
IntPoly mul_kronecker(const IntPoly& a, const IntPoly& b);
/// Operand size (shorter side) from which `operator*` switches to Kronecker.
inline constexpr std::size_t kKroneckerThreshold = 12;
}  // namespace detail

/// Quotient and remainder by a monic divisor.
struct DivRem {
    IntPoly quot;
    IntPoly rem;
};

/// a = quot * m + rem with deg(rem) < deg(m). Throws NonMonicDivisor unless
/// m has leading coefficient 1.
DivRem poly_divrem(const IntPoly& a, const IntPoly& m);

/// Exact quotient a / b over Z[q]; throws NotExactDivision otherwise.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, by the primitive
/// Euclidean remainder sequence. Throws BothZero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Reduced element of Q(q).
///
/// Stored as scalar * num / den with num and den primitive, positive leading
/// coefficients and gcd(num, den) = 1. Zero is scalar 0 over num = den = 1.
/// Equal values have identical representations.
class RatFunc {
   public:
    RatFunc();
    RatFunc(const IntPoly& p);  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    /// num / den, reduced. Throws DivideByZero for a zero denominator.
    RatFunc(const IntPoly& num, const IntPoly& den);

    /// Adopts parts that already satisfy the invariants (coprime, primitive,
    /// positive leading coefficients). Used by callers that know the
    /// factorisation; nothing is re-checked.
    static RatFunc from_reduced(Rational scalar, IntPoly num, IntPoly den);

    bool is_zero() const { return sgn(scalar_) == 0; }
    const Rational& scalar() const noexcept { return scalar_; }
    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }

    /// Integer-coefficient numerator and denominator with the scalar folded
    /// in: value = numerator() / denominator().
    IntPoly numerator() const;
    IntPoly denominator() const;

    RatFunc operator-() const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.scalar_ == b.scalar_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

   private:
    static RatFunc from_integer_parts(IntPoly num, IntPoly den);
    Rational scalar_;
    IntPoly num_;
    IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Exact value at a rational point. Throws PoleAtPoint when the reduced
/// denominator vanishes there.
Rational eval_rational(const RatFunc& x, const Rational& point);

}  // namespace qcong

#endif  // QCONG_POLYRING_HPP

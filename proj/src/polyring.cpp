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

#include "qcong/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    if (sgn(c) == 0) return {};
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

std::size_t IntPoly::max_bits() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

std::size_t IntPoly::low_order() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && sgn(coeffs_[i]) == 0) ++i;
    return i;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(leading()) < 0) g = -g;
    return divexact(g);
}

Rational IntPoly::evaluate(const Rational& point) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Integer IntPoly::evaluate(const Integer& point) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> v(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(k));
    IntPoly out;
    out.coeffs_ = std::move(v);
    return out;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    assert(k <= low_order());
    IntPoly out;
    if (k >= coeffs_.size()) return out;
    out.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
    return out;
}

IntPoly IntPoly::negate_variable() const {
    IntPoly out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

IntPoly IntPoly::inflate(std::size_t s) const {
    assert(s >= 1);
    if (s == 1 || is_zero()) return *this;
    IntPoly out;
    out.coeffs_.resize((coeffs_.size() - 1) * s + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * s] = coeffs_[i];
    return out;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPoly IntPoly::divexact(const Integer& c) const {
    IntPoly out = *this;
    if (c == 1) return out;
    for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return out;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Integer& c = coeffs_[idx];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (idx == 0 || mag != 1) os << mag.get_str();
        if (idx >= 1) {
            if (mag != 1) os << "*";
            os << "q";
            if (idx > 1) os << "^" << idx;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly power(const IntPoly& base, unsigned exponent) {
    IntPoly result{1};
    IntPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b = b * b;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Multiplication
// ---------------------------------------------------------------------------

namespace detail {

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (sgn(ac[i]) == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

namespace {

constexpr std::size_t kLimbBits = sizeof(mp_limb_t) * 8;

// Evaluates p at 2^(limbs * kLimbBits); each coefficient occupies its own
// run of `limbs` limbs.
Integer kronecker_pack(const IntPoly& p, std::size_t limbs) {
    const auto& cs = p.coeffs();
    std::vector<mp_limb_t> pos(cs.size() * limbs, 0);
    std::vector<mp_limb_t> neg;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        int s = sgn(cs[i]);
        if (s == 0) continue;
        if (s < 0 && neg.empty()) neg.assign(cs.size() * limbs, 0);
        auto& buf = s > 0 ? pos : neg;
        std::size_t count = 0;
        mpz_export(buf.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, cs[i].get_mpz_t());
        assert(count <= limbs);
    }
    Integer value;
    mpz_import(value.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (!neg.empty()) {
        Integer n;
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        value -= n;
    }
    return value;
}

IntPoly kronecker_unpack(const Integer& z, std::size_t length, std::size_t limbs) {
    const int s = sgn(z);
    if (s == 0) return {};
    Integer mag = abs(z);
    std::vector<mp_limb_t> buf(length * limbs + 1, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, mag.get_mpz_t());
    assert(count <= buf.size());

    const std::size_t bits = limbs * kLimbBits;
    Integer half, full;
    mpz_setbit(half.get_mpz_t(), bits - 1);
    mpz_setbit(full.get_mpz_t(), bits);

    std::vector<Integer> out(length);
    bool carry = false;
    for (std::size_t i = 0; i < length; ++i) {
        Integer& v = out[i];
        mpz_import(v.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
        if (carry) v += 1;
        if (v >= half) {
            v -= full;
            carry = true;
        } else {
            carry = false;
        }
        if (s < 0) v = -v;
    }
    return IntPoly(std::move(out));
}

}  // namespace

IntPoly mul_kronecker(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::size_t shorter = std::min(a.size(), b.size());
    std::size_t log_len = 0;
    while ((std::size_t{1} << log_len) < shorter) ++log_len;
    const std::size_t need = a.max_bits() + b.max_bits() + log_len + 2;
    const std::size_t limbs = (need + kLimbBits - 1) / kLimbBits;

    Integer za = kronecker_pack(a, limbs);
    Integer product;
    if (&a == &b) {
        product = za * za;
    } else {
        Integer zb = kronecker_pack(b, limbs);
        product = za * zb;
    }
    return kronecker_unpack(product, a.size() + b.size() - 1, limbs);
}

}  // namespace detail

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.size(), b.size()) < detail::kKroneckerThreshold) return detail::mul_schoolbook(a, b);
    return detail::mul_kronecker(a, b);
}

// ---------------------------------------------------------------------------
// Division and gcd
// ---------------------------------------------------------------------------

DivRem poly_divrem(const IntPoly& a, const IntPoly& m) {
    if (m.is_zero() || m.leading() != 1) throw NonMonicDivisor("divisor " + m.to_string() + " is not monic");
    const long dm = m.degree();
    if (a.degree() < dm) return {IntPoly{}, a};
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - dm + 1));
    const auto& mc = m.coeffs();
    for (long i = a.degree(); i >= dm; --i) {
        const Integer c = r[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        quot[static_cast<std::size_t>(i - dm)] = c;
        for (long j = 0; j < dm; ++j) {
            if (sgn(mc[static_cast<std::size_t>(j)]) == 0) continue;
            mpz_submul(r[static_cast<std::size_t>(i - dm + j)].get_mpz_t(), c.get_mpz_t(),
                       mc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        r[static_cast<std::size_t>(i)] = 0;
    }
    r.resize(static_cast<std::size_t>(dm));
    return {IntPoly(std::move(quot)), IntPoly(std::move(r))};
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivideByZero("exact division by the zero polynomial");
    if (a.is_zero()) return {};
    if (b.degree() == 0) {
        for (const auto& c : a.coeffs())
            if (!mpz_divisible_p(c.get_mpz_t(), b.leading().get_mpz_t()))
                throw NotExactDivision("coefficient not divisible by constant divisor");
        return a.divexact(b.leading());
    }
    const long db = b.degree();
    if (a.degree() < db) throw NotExactDivision("dividend degree below divisor degree");
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const auto& bc = b.coeffs();
    const Integer& lc = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        Integer& top = r[static_cast<std::size_t>(i)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw NotExactDivision("inexact polynomial division");
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        quot[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j < db; ++j)
            mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        top = 0;
    }
    for (long j = 0; j < db; ++j)
        if (sgn(r[static_cast<std::size_t>(j)]) != 0) throw NotExactDivision("nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivideByZero("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const long db = b.degree();
    const Integer& lc = b.leading();
    long steps = a.degree() - db + 1;
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    long top = a.degree();
    while (top >= db) {
        const Integer lr = r[static_cast<std::size_t>(top)];
        if (sgn(lr) != 0) {
            for (long i = 0; i < top; ++i) r[static_cast<std::size_t>(i)] *= lc;
            for (long j = 0; j < db; ++j)
                mpz_submul(r[static_cast<std::size_t>(top - db + j)].get_mpz_t(), lr.get_mpz_t(),
                           bc[static_cast<std::size_t>(j)].get_mpz_t());
            --steps;
        }
        r[static_cast<std::size_t>(top)] = 0;
        --top;
    }
    r.resize(static_cast<std::size_t>(db));
    IntPoly rem(std::move(r));
    if (steps > 0 && !rem.is_zero()) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
        rem *= scale;
    }
    return rem;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return IntPoly{1};
        IntPoly r = poly_pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

RatFunc::RatFunc() : scalar_(0), num_{1}, den_{1} {}

RatFunc::RatFunc(const Rational& c) : scalar_(c), num_{1}, den_{1} {}

RatFunc::RatFunc(const IntPoly& p) : RatFunc(p, IntPoly{1}) {}

RatFunc::RatFunc(const IntPoly& num, const IntPoly& den) { *this = from_integer_parts(num, den); }

RatFunc RatFunc::from_reduced(Rational scalar, IntPoly num, IntPoly den) {
    RatFunc f;
    if (sgn(scalar) == 0) return f;
    f.scalar_ = std::move(scalar);
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RatFunc RatFunc::from_integer_parts(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw DivideByZero("zero denominator");
    RatFunc f;
    if (num.is_zero()) return f;
    if (!den.is_constant()) {
        IntPoly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = poly_divexact(num, g);
            den = poly_divexact(den, g);
        }
    }
    Integer cn = num.content();
    if (sgn(num.leading()) < 0) cn = -cn;
    Integer cd = den.content();
    if (sgn(den.leading()) < 0) cd = -cd;
    f.scalar_ = Rational(cn, cd);
    f.scalar_.canonicalize();
    f.num_ = num.divexact(cn);
    f.den_ = den.divexact(cd);
    return f;
}

IntPoly RatFunc::numerator() const { return num_ * Integer(scalar_.get_num()); }

IntPoly RatFunc::denominator() const { return den_ * Integer(scalar_.get_den()); }

RatFunc RatFunc::operator-() const {
    RatFunc f = *this;
    f.scalar_ = -f.scalar_;
    return f;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivideByZero("inverse of zero");
    RatFunc f;
    f.scalar_ = 1 / scalar_;
    f.num_ = den_;
    f.den_ = num_;
    return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        // Shared denominator: only the numerator sum can introduce a common factor.
        IntPoly n = a.numerator() * Integer(b.scalar_.get_den()) + b.numerator() * Integer(a.scalar_.get_den());
        Integer d = Integer(a.scalar_.get_den()) * Integer(b.scalar_.get_den());
        return RatFunc::from_integer_parts(std::move(n), a.den_ * d);
    }
    IntPoly n = a.numerator() * b.denominator() + b.numerator() * a.denominator();
    return RatFunc::from_integer_parts(std::move(n), a.denominator() * b.denominator());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first so the products stay small.
    IntPoly g1 = poly_gcd(a.num_, b.den_);
    IntPoly g2 = poly_gcd(b.num_, a.den_);
    IntPoly n = poly_divexact(a.num_, g1) * poly_divexact(b.num_, g2);
    IntPoly d = poly_divexact(a.den_, g2) * poly_divexact(b.den_, g1);
    RatFunc f;
    f.scalar_ = a.scalar_ * b.scalar_;
    Integer cn = n.content();
    Integer cd = d.content();
    f.scalar_ *= Rational(cn, cd);
    f.scalar_.canonicalize();
    f.num_ = n.divexact(cn);
    f.den_ = d.divexact(cd);
    return f;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivideByZero("division by the zero rational function");
    return a * b.inverse();
}

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (scalar_ != 1) os << "(" << scalar_.get_str() << ")*";
    os << "(" << num_.to_string() << ")";
    if (!den_.is_one()) os << "/(" << den_.to_string() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

Rational eval_rational(const RatFunc& x, const Rational& point) {
    if (x.is_zero()) return 0;
    Rational d = x.den().evaluate(point);
    if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at q = " + point.get_str());
    return x.scalar() * x.num().evaluate(point) / d;
}

}  // namespace qcong

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

#include "qcong/cyclofrac.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

bool try_divide_cyclotomic(IntPoly& p, long m) {
    const IntPoly& phi = cyclotomic(m);
    if (p.is_zero()) return true;
    if (p.degree() < phi.degree()) return false;
    if (!detail::CyclotomicScreen(p).maybe_divisible(m)) return false;
    auto [quot, rem] = poly_divrem(p, phi);
    if (!rem.is_zero()) return false;
    p = std::move(quot);
    return true;
}

CycloFrac::CycloFrac(const Rational& c) : scalar_(c) {}

CycloFrac::CycloFrac(const IntPoly& p) : scalar_(p.is_zero() ? 0 : 1), rest_(p) { normalize(); }

CycloFrac CycloFrac::qpow(long e) {
    CycloFrac x(1);
    x.shift_ = e;
    return x;
}

CycloFrac CycloFrac::from_factorization(const CycloFactorization& f) {
    CycloFrac x(f.sign);
    x.shift_ = f.shift;
    x.exps_ = f.exps;
    return x;
}

CycloFrac CycloFrac::one_minus_qpow(long e) {
    if (e == 0) return {};
    return from_factorization(factor_one_minus_qpow(e));
}

CycloFrac CycloFrac::one_plus_qpow(long e) {
    if (e == 0) return CycloFrac(2);
    // (1 - q^{2e}) / (1 - q^e)
    CycloFrac x(1);
    long a = e > 0 ? e : -e;
    if (e < 0) x.shift_ = e;
    for (long d : divisors(2 * a))
        if (a % d != 0) x.exps_[d] = 1;
    return x;
}

CycloFrac CycloFrac::qint(long m, long step) {
    if (m == 0) return {};
    if (step == 0) return CycloFrac(m);
    return one_minus_qpow(m * step) * one_minus_qpow(step).inverse();
}

CycloFrac CycloFrac::poch(long a, long step, long len) {
    if (len < 0) throw std::invalid_argument("q-shifted factorial length must be nonnegative");
    CycloFrac x(1);
    for (long i = 0; i < len; ++i) {
        long e = a + i * step;
        if (e == 0) return {};
        long mag = e > 0 ? e : -e;
        if (e > 0) {
            x.scalar_ = -x.scalar_;
        } else {
            x.shift_ += e;
        }
        for (long d : divisors(mag)) x.exps_[d] += 1;
    }
    return x;
}

void CycloFrac::normalize() {
    if (sgn(scalar_) == 0 || rest_.is_zero()) {
        *this = CycloFrac();
        return;
    }
    if (!rest_.is_one()) {
        Integer c = rest_.content();
        if (sgn(rest_.leading()) < 0) c = -c;
        if (c != 1) {
            rest_ = rest_.divexact(c);
            scalar_ *= c;
        }
        std::size_t low = rest_.low_order();
        if (low > 0) {
            rest_ = rest_.shifted_down(low);
            shift_ += static_cast<long>(low);
        }
    }
    std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
    cancel_poles();
}

void CycloFrac::cancel_poles() {
    if (rest_.is_constant()) return;
    bool any = std::any_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second < 0; });
    if (!any) return;
    detail::CyclotomicScreen screen(rest_);
    for (auto& [m, e] : exps_) {
        while (e < 0 && !rest_.is_constant() && rest_.degree() >= euler_phi(m) && screen.maybe_divisible(m)) {
            auto [quot, rem] = poly_divrem(rest_, cyclotomic(m));
            if (!rem.is_zero()) break;
            rest_ = std::move(quot);
            ++e;
            screen = detail::CyclotomicScreen(rest_);
        }
    }
    std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
}

CycloFrac CycloFrac::operator-() const {
    CycloFrac x = *this;
    x.scalar_ = -x.scalar_;
    return x;
}

CycloFrac CycloFrac::inverse() const {
    if (is_zero()) throw DivideByZero("inverse of zero");
    if (!rest_.is_one())
        throw NonCyclotomicDivisor("division by a value with non-cyclotomic factor " + rest_.to_string());
    CycloFrac x(1 / scalar_);
    x.shift_ = -shift_;
    for (const auto& [m, e] : exps_) x.exps_[m] = -e;
    return x;
}

CycloFrac CycloFrac::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return CycloFrac(1);
    if (is_zero()) return {};
    if (rest_.is_one()) {
        CycloFrac x(1);
        mpz_pow_ui(x.scalar_.get_num_mpz_t(), scalar_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(x.scalar_.get_den_mpz_t(), scalar_.get_den_mpz_t(), static_cast<unsigned long>(e));
        x.shift_ = shift_ * e;
        for (const auto& [m, k] : exps_) x.exps_[m] = static_cast<int>(k * e);
        return x;
    }
    CycloFrac result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycloFrac operator*(const CycloFrac& a, const CycloFrac& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CycloFrac x(a.scalar_ * b.scalar_);
    x.shift_ = a.shift_ + b.shift_;
    x.exps_ = a.exps_;
    for (const auto& [m, e] : b.exps_) x.exps_[m] += e;
    // A pole can only meet a factor hidden in an operand's rest.
    auto exp_of = [](const CycloFrac& v, long m) {
        auto f = v.exps_.find(m);
        return f == v.exps_.end() ? 0 : f->second;
    };
    bool check = false;
    for (const auto& [m, e] : x.exps_) {
        if (e >= 0) continue;
        if ((exp_of(a, m) >= 0 && !a.rest_.is_one()) || (exp_of(b, m) >= 0 && !b.rest_.is_one())) {
            check = true;
            break;
        }
    }
    if (a.rest_.is_one()) {
        x.rest_ = b.rest_;
    } else if (b.rest_.is_one()) {
        x.rest_ = a.rest_;
    } else {
        x.rest_ = a.rest_ * b.rest_;
    }
    std::erase_if(x.exps_, [](const auto& kv) { return kv.second == 0; });
    if (check) x.cancel_poles();
    return x;
}

CycloFrac CycloFrac::sum(std::span<const CycloFrac> terms) {
    std::vector<const CycloFrac*> live;
    for (const auto& t : terms)
        if (!t.is_zero()) live.push_back(&t);
    if (live.empty()) return {};
    if (live.size() == 1) return *live.front();

    long min_shift = live.front()->shift_;
    Integer den_lcm = 1;
    Exponents common;
    for (const CycloFrac* t : live) {
        min_shift = std::min(min_shift, t->shift_);
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t->scalar_.get_den_mpz_t());
        for (const auto& [m, e] : t->exps_) common.try_emplace(m, e);
    }
    // Common exponent is the minimum, with absent entries counting as 0.
    for (auto& [m, e] : common)
        for (const CycloFrac* t : live) {
            auto f = t->exps_.find(m);
            e = std::min(e, f == t->exps_.end() ? 0 : f->second);
        }
    std::erase_if(common, [](const auto& kv) { return kv.second == 0; });

    IntPoly acc;
    for (const CycloFrac* t : live) {
        Exponents cof;
        for (const auto& [m, e] : t->exps_) {
            auto f = common.find(m);
            int d = e - (f == common.end() ? 0 : f->second);
            if (d > 0) cof[m] = d;
        }
        for (const auto& [m, e] : common)
            if (!t->exps_.contains(m) && e < 0) cof[m] = -e;
        Integer k = t->scalar_.get_num() * (den_lcm / t->scalar_.get_den());
        IntPoly term = cof.empty() ? t->rest_ : expand_cyclotomic_product(cof) * t->rest_;
        term *= k;
        acc += term.shifted_up(static_cast<std::size_t>(t->shift_ - min_shift));
    }
    CycloFrac x(Rational(Integer(1), den_lcm));
    x.shift_ = min_shift;
    x.exps_ = std::move(common);
    x.rest_ = std::move(acc);
    x.normalize();
    return x;
}

CycloFrac operator+(const CycloFrac& a, const CycloFrac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const CycloFrac pair[2] = {a, b};
    return CycloFrac::sum(pair);
}

RatFunc CycloFrac::to_ratfunc() const {
    if (is_zero()) return {};
    Exponents pos, neg;
    for (const auto& [m, e] : exps_) (e > 0 ? pos : neg)[m] = e > 0 ? e : -e;
    IntPoly num = pos.empty() ? rest_ : expand_cyclotomic_product(pos) * rest_;
    IntPoly den = expand_cyclotomic_product(neg);
    if (shift_ > 0) num = num.shifted_up(static_cast<std::size_t>(shift_));
    if (shift_ < 0) den = den.shifted_up(static_cast<std::size_t>(-shift_));
    return RatFunc::from_reduced(scalar_, std::move(num), std::move(den));
}

namespace {

Rational rational_pow(const Rational& x, long e) {
    Rational r(1);
    Rational base = e < 0 ? Rational(1 / x) : x;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    return r;
}

}  // namespace

Rational CycloFrac::evaluate(const Rational& point) const {
    if (is_zero()) return 0;
    bool vanishes = false;
    Rational value = scalar_ * rest_.evaluate(point);
    if (sgn(point) == 0) {
        if (shift_ < 0) throw PoleAtPoint("pole of order " + std::to_string(-shift_) + " at q = 0");
        if (shift_ > 0) vanishes = true;
    } else {
        value *= rational_pow(point, shift_);
    }
    for (const auto& [m, e] : exps_) {
        Rational v = cyclotomic(m).evaluate(point);
        if (sgn(v) == 0) {
            if (e < 0) throw PoleAtPoint("Phi_" + std::to_string(m) + " pole at q = " + point.get_str());
            vanishes = true;
            continue;
        }
        value *= rational_pow(v, e);
    }
    return vanishes ? Rational(0) : value;
}

int CycloFrac::valuation(long m, int cap) const {
    if (is_zero()) return cap;
    auto it = exps_.find(m);
    int v = it == exps_.end() ? 0 : it->second;
    if (v < 0) return v;
    IntPoly p = rest_;
    while (v < cap && try_divide_cyclotomic(p, m)) ++v;
    return v;
}

std::string CycloFrac::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << scalar_.get_str();
    if (shift_ != 0) os << " * q^" << shift_;
    for (const auto& [m, e] : exps_) os << " * Phi" << m << "^" << e;
    if (!rest_.is_one()) os << " * (" << rest_.to_string() << ")";
    return os.str();
}

}  // namespace qcong

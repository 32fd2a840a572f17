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

#include "qcong/cyclotomic.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "qcong/errors.hpp"

namespace qcong {

std::vector<long> divisors(long n) {
    assert(n >= 1);
    std::vector<long> low, high;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

class CyclotomicTable {
   public:
    const IntPoly& get(long n) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(n);
            if (it != table_.end()) return *it->second;
        }
        // Compute outside the lock; divisors recurse into get().
        IntPoly value = compute(n);
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(n, nullptr);
        if (inserted) it->second = std::make_unique<IntPoly>(std::move(value));
        return *it->second;
    }

   private:
    IntPoly compute(long n) {
        IntPoly x = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly{1};
        for (long d : divisors(n)) {
            if (d == n) break;
            x = poly_divrem(x, get(d)).quot;
        }
        return x;
    }

    std::shared_mutex mutex_;
    std::unordered_map<long, std::unique_ptr<IntPoly>> table_;
};

CyclotomicTable& table() {
    static CyclotomicTable t;
    return t;
}

}  // namespace

const IntPoly& cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    return table().get(n);
}

long cyclotomic_neg_index(long n) {
    if (n % 2 == 1) return 2 * n;
    if (n % 4 == 2) return n / 2;
    return n;
}

IntPoly cyclotomic_neg(long n) {
    IntPoly p = cyclotomic(n).negate_variable();
    if (sgn(p.leading()) < 0) p = -p;
    return p;
}

std::string to_string(const ModulusFactor& f) {
    std::ostringstream os;
    os << "phi(" << f.index << "," << (f.sign > 0 ? '+' : '-') << ")";
    if (f.exponent != 1) os << "^" << f.exponent;
    return os.str();
}

std::map<long, int> Modulus::irreducible() const {
    std::map<long, int> out;
    for (const auto& f : factors) out[f.sign > 0 ? f.index : cyclotomic_neg_index(f.index)] += f.exponent;
    if (include_qint)
        for (long d : divisors(*include_qint))
            if (d > 1) out[d] += 1;
    return out;
}

std::string Modulus::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (include_qint) {
        os << "[" << *include_qint << "]";
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << " * ";
        os << qcong::to_string(f);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

Modulus modulus_build(std::vector<ModulusFactor> factors, std::optional<long> include_qint) {
    for (const auto& f : factors) {
        if (f.index < 1) throw std::invalid_argument("modulus factor index must be positive");
        if (f.exponent < 1) throw std::invalid_argument("modulus factor exponent must be positive");
        if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("modulus factor sign must be +1 or -1");
    }
    if (include_qint && *include_qint < 1) throw std::invalid_argument("[m] factor needs m >= 1");
    Modulus m;
    m.factors = std::move(factors);
    m.include_qint = include_qint;
    IntPoly e{1};
    for (const auto& f : m.factors)
        e *= power(f.sign > 0 ? cyclotomic(f.index) : cyclotomic_neg(f.index), static_cast<unsigned>(f.exponent));
    if (include_qint) {
        std::vector<Integer> ones(static_cast<std::size_t>(*include_qint), Integer(1));
        e *= IntPoly(std::move(ones));
    }
    assert(e.leading() == 1);
    m.expanded = std::move(e);
    return m;
}

IntPoly expand_cyclotomic_product(const std::map<long, int>& exponents) {
    std::vector<IntPoly> level;
    for (const auto& [m, e] : exponents) {
        assert(e >= 0);
        if (e == 0) continue;
        level.push_back(e == 1 ? cyclotomic(m) : power(cyclotomic(m), static_cast<unsigned>(e)));
    }
    if (level.empty()) return IntPoly{1};
    while (level.size() > 1) {
        std::vector<IntPoly> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return std::move(level.front());
}

CycloFactorization factor_one_minus_qpow(long e) {
    if (e == 0) throw std::invalid_argument("1 - q^0 has no cyclotomic factorisation");
    CycloFactorization f;
    // 1 - q^e = -(q^e - 1); for e < 0 it is q^e (q^-e - 1).
    long a = e > 0 ? e : -e;
    f.sign = e > 0 ? -1 : 1;
    f.shift = e > 0 ? 0 : e;
    for (long d : divisors(a)) f.exps[d] = 1;
    return f;
}

CycloFactorization factor_qint(long m) {
    if (m < 1) throw std::invalid_argument("[m] needs m >= 1");
    CycloFactorization f;
    for (long d : divisors(m))
        if (d > 1) f.exps[d] = 1;
    return f;
}

namespace detail {

namespace {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kScreenPrime ? s - kScreenPrime : s;
}

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    u128 x = static_cast<u128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kScreenPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    return add_mod(lo, hi);
}

inline std::uint64_t reduce(const Integer& c) {
    return mpz_fdiv_ui(c.get_mpz_t(), kScreenPrime);
}

}  // namespace

CyclotomicScreen::CyclotomicScreen(const IntPoly& p) {
    residues_.reserve(p.size());
    for (const auto& c : p.coeffs()) residues_.push_back(reduce(c));
}

bool CyclotomicScreen::maybe_divisible(long m) const {
    if (residues_.empty()) return true;
    const auto mm = static_cast<std::size_t>(m);
    // Phi_m divides q^m - 1, so reduce modulo q^m - 1 first.
    std::vector<std::uint64_t> r(mm, 0);
    for (std::size_t i = 0; i < residues_.size(); ++i) r[i % mm] = add_mod(r[i % mm], residues_[i]);
    const IntPoly& phi = cyclotomic(m);
    const auto dphi = static_cast<std::size_t>(phi.degree());
    std::vector<std::uint64_t> neg_phi(dphi);
    for (std::size_t j = 0; j < dphi; ++j) {
        std::uint64_t c = reduce(phi.coeffs()[j]);
        neg_phi[j] = c == 0 ? 0 : kScreenPrime - c;
    }
    for (std::size_t i = mm; i-- > dphi;) {
        std::uint64_t top = r[i];
        if (top == 0) continue;
        for (std::size_t j = 0; j < dphi; ++j)
            if (neg_phi[j] != 0) r[i - dphi + j] = add_mod(r[i - dphi + j], mul_mod(top, neg_phi[j]));
        r[i] = 0;
    }
    for (std::size_t j = 0; j < dphi && j < mm; ++j)
        if (r[j] != 0) return false;
    return true;
}

}  // namespace detail

}  // namespace qcong

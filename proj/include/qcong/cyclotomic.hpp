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

#ifndef QCONG_CYCLOTOMIC_HPP
#define QCONG_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcong/polyring.hpp"

namespace qcong {

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);
long euler_phi(long n);

/// The n-th cyclotomic polynomial. Memoized and safe to call concurrently;
/// the returned reference stays valid for the life of the process.
const IntPoly& cyclotomic(long n);

/// Index m with Phi_n(-q) = +-Phi_m(q).
long cyclotomic_neg_index(long n);

/// Phi_n(-q) scaled to a positive leading coefficient.
IntPoly cyclotomic_neg(long n);

/// Phi_n(q) for sign +1, normalized Phi_n(-q) for sign -1.
struct ModulusFactor {
    long index = 1;
    int sign = 1;
    int exponent = 1;

    friend bool operator==(const ModulusFactor&, const ModulusFactor&) = default;
};

std::string to_string(const ModulusFactor& f);

/// A product of factors Phi_n(+-q)^e times an optional [m]_q.
struct Modulus {
    std::vector<ModulusFactor> factors;
    std::optional<long> include_qint;
    IntPoly expanded;

    /// Exponent of each irreducible Phi_m(q) in the product.
    std::map<long, int> irreducible() const;
    std::string to_string() const;
};

Modulus modulus_build(std::vector<ModulusFactor> factors, std::optional<long> include_qint = std::nullopt);

/// Product of Phi_m^e over a factorisation, by a balanced product tree.
IntPoly expand_cyclotomic_product(const std::map<long, int>& exponents);

/// Irreducible factorisations of the basic q-quantities, with a sign:
/// value = sign * q^shift * prod Phi_m^e.
struct CycloFactorization {
    int sign = 1;
    long shift = 0;
    std::map<long, int> exps;
};

/// 1 - q^e for e != 0.
CycloFactorization factor_one_minus_qpow(long e);
/// [m]_q for m >= 1.
CycloFactorization factor_qint(long m);

namespace detail {

/// Modular screen for divisibility by Phi_m. A false result is a proof of
/// non-divisibility; a true result still needs exact confirmation.
class CyclotomicScreen {
   public:
    explicit CyclotomicScreen(const IntPoly& p);
    bool maybe_divisible(long m) const;

   private:
    std::vector<std::uint64_t> residues_;
};

inline constexpr std::uint64_t kScreenPrime = (std::uint64_t{1} << 61) - 1;

}  // namespace detail

}  // namespace qcong

#endif  // QCONG_CYCLOTOMIC_HPP

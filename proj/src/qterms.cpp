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

#include "qcong/qterms.hpp"

#include <numeric>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

long CaseParams::get(std::string_view name) const {
    if (name == "n") return n;
    if (name == "d") return d;
    if (name == "r") return r;
    auto it = extra.find(std::string(name));
    if (it == extra.end()) throw UnboundSymbol("no value for parameter '" + std::string(name) + "'");
    return it->second;
}

bool CaseParams::has(std::string_view name) const {
    return name == "n" || name == "d" || name == "r" || extra.contains(std::string(name));
}

std::string CaseParams::to_string() const {
    std::ostringstream os;
    os << "n=" << n << ",d=" << d << ",r=" << r;
    for (const auto& [k, v] : extra) os << "," << k << "=" << v;
    return os.str();
}

IntPoly q_integer(long m, bool square) {
    if (m < 1) throw std::invalid_argument("q-integer needs m >= 1");
    const std::size_t step = square ? 2 : 1;
    std::vector<Integer> c((static_cast<std::size_t>(m) - 1) * step + 1);
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) c[i * step] = 1;
    return IntPoly(std::move(c));
}

IntPoly q_pochhammer(long a_exp, long step, long k) {
    if (k < 0) throw std::invalid_argument("q-shifted factorial length must be nonnegative");
    IntPoly out{1};
    for (long i = 0; i < k; ++i) {
        long e = a_exp + i * step;
        if (e < 0) throw std::domain_error("negative exponent; use q_pochhammer_rational");
        out *= IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(e));
    }
    return out;
}

RatFunc q_pochhammer_rational(long a_exp, long step, long k) {
    if (k < 0) throw std::invalid_argument("q-shifted factorial length must be nonnegative");
    IntPoly num{1};
    std::size_t shift = 0;
    for (long i = 0; i < k; ++i) {
        long e = a_exp + i * step;
        if (e >= 0) {
            num *= IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(e));
        } else {
            // 1 - q^e = (q^{-e} - 1) / q^{-e}
            num *= IntPoly::monomial(1, static_cast<std::size_t>(-e)) - IntPoly{1};
            shift += static_cast<std::size_t>(-e);
        }
    }
    return RatFunc(num, IntPoly::monomial(1, shift));
}

TermBuilder& TermBuilder::mul(const CycloFrac& factor, long power, std::string_view label, bool parametric) {
    if (power == 0) return *this;
    if (factor.is_zero()) {
        if (power < 0)
            throw DegenerateSpecialization("denominator factor " + (label.empty() ? std::string("?") : std::string(label)) +
                                           " vanishes");
        zero_ = true;
        return *this;
    }
    if (parametric && power < 0) watched_.push_back({std::string(label), factor});
    if (!zero_) value_ *= factor.pow(power);
    return *this;
}

std::optional<std::string> TermBuilder::parametric_pole(const std::vector<long>& indices) const {
    for (const auto& w : watched_)
        for (long m : indices)
            if (w.factor.valuation(m, 1) > 0) return w.label;
    return std::nullopt;
}

namespace {

long exact_div(long a, long b, const char* what) {
    if (b == 0 || a % b != 0)
        throw NonIntegerExponent(std::string(what) + " = " + std::to_string(a) + "/" + std::to_string(b) +
                                 " is not an integer");
    return a / b;
}

CycloFrac sign(long e) { return CycloFrac(e % 2 == 0 ? 1 : -1); }
CycloFrac Q(long e) { return CycloFrac::qpow(e); }
CycloFrac P(long a, long s, long len) {
    if (len < 0) throw ConstraintViolation("q-shifted factorial length " + std::to_string(len) + " is negative");
    return CycloFrac::poch(a, s, len);
}
CycloFrac QI(long m, long step = 1) { return CycloFrac::qint(m, step); }
CycloFrac OP(long e) { return CycloFrac::one_plus_qpow(e); }

Constraint pred(std::string name, std::function<bool(const CaseParams&)> f) { return {std::move(name), std::move(f)}; }

const Constraint kNOdd = pred("n odd", [](const CaseParams& p) { return p.n % 2 != 0; });
const Constraint kNGt1 = pred("n > 1", [](const CaseParams& p) { return p.n > 1; });
const Constraint kNPos = pred("n >= 1", [](const CaseParams& p) { return p.n >= 1; });
const Constraint kDPos = pred("d >= 1", [](const CaseParams& p) { return p.d >= 1; });
const Constraint kDGt1 = pred("d > 1", [](const CaseParams& p) { return p.d > 1; });
const Constraint kDGe3 = pred("d >= 3", [](const CaseParams& p) { return p.d >= 3; });
const Constraint kCoprime = pred("gcd(n,d) = 1", [](const CaseParams& p) { return std::gcd(p.n, p.d) == 1; });
const Constraint kNR = pred("n = r (mod d)", [](const CaseParams& p) { return p.d >= 1 && (p.n - p.r) % p.d == 0; });
const Constraint kN1 = pred("n = 1 (mod d)", [](const CaseParams& p) { return p.d >= 1 && (p.n - 1) % p.d == 0; });
const Constraint kRLtN = pred("r < n", [](const CaseParams& p) { return p.r < p.n; });
const Constraint kRWindow = pred("n-(n-1)d/2 <= r <= n", [](const CaseParams& p) {
    // 2n - (n-1)d <= 2r avoids the half-integer bound.
    return 2 * p.n - (p.n - 1) * p.d <= 2 * p.r && p.r <= p.n;
});
const Constraint kD3 = pred("d = 3", [](const CaseParams& p) { return p.d == 3; });
const Constraint kD4 = pred("d = 4", [](const CaseParams& p) { return p.d == 4; });

std::vector<Constraint> c_thm1_1() { return {kNGt1, kNOdd}; }
std::vector<Constraint> c_thm1_3() { return {kNGt1, kNOdd, kDPos, kCoprime, kNR, kRWindow}; }
std::vector<Constraint> c_eq1_7() { return {kNGt1, kNOdd, kDGt1, kCoprime, kNR, kRLtN}; }
std::vector<Constraint> c_thm6_1() { return {kNGt1, kNOdd, kDGe3, kN1}; }
std::vector<Constraint> c_thm6_4() { return {kNGt1, kDGe3, kN1}; }
std::vector<Constraint> c_lem2_2() { return {kNGt1, kNOdd, kDPos, kNR, kRLtN}; }
std::vector<Constraint> c_lem5_1() { return {kNPos, kDPos, kNR, kRLtN}; }

struct Entry {
    TermInfo info;
    std::function<FactoredGenerator(const CaseParams&)> make;
};

using G = FactoredGenerator;
using CP = const CaseParams&;

std::vector<Entry> build_registry() {
    std::vector<Entry> e;
    auto add = [&](TermId id, std::string name, std::string desc, std::string src, std::vector<std::string> extras,
                   std::vector<Constraint> cons, std::function<G(CP)> make) {
        e.push_back({TermInfo{id, std::move(name), std::move(desc), std::move(src), std::move(extras), std::move(cons)},
                     std::move(make)});
    };

    // Squares of (q^2;q^4)-type series, d = 2 and r = 1.
    add(TermId::Thm1_1Lhs, "thm1_1.lhs", "double-sum summand, squared (q^2;q^4)_k",
        "(-1)^k * (1+qpow(4*k+1)) / (1+qpow(1)) * poch(2; 4; k)^2 / poch(4; 4; k)^2 * qpow(2*k^2 + k)", {},
        c_thm1_1(), [](CP) -> G {
            return [](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(4 * k + 1))
                    .mul(OP(1), -1)
                    .mul(P(2, 4, k), 2)
                    .mul(P(4, 4, k), -2)
                    .mul(Q(2 * k * k + k))
                    ;
            };
        });
    add(TermId::Thm1_1Rhs, "thm1_1.rhs", "inner summand of the squared right-hand series",
        "poch(2; 4; k) / ([4*k+1] * poch(4; 4; k)) * qpow(2*k)", {}, c_thm1_1(), [](CP) -> G {
            return [](long k) {
                return TermBuilder().mul(P(2, 4, k)).mul(QI(4 * k + 1), -1).mul(P(4, 4, k), -1).mul(Q(2 * k));
            };
        });
    add(TermId::Thm1_1Pre, "thm1_1.pre", "right-hand prefactor [n]_{q^2}^2 q^{(n-1)^2}", "[n]_q2^2 * qpow((n-1)^2)", {},
        c_thm1_1(), [](CP p) -> G {
            long n = p.n;
            return [n](long) { return TermBuilder().mul(QI(n, 2), 2).mul(Q((n - 1) * (n - 1))); };
        });

    add(TermId::Thm1_2Lhs, "thm1_2.lhs", "double-sum summand, cubed (q^2;q^4)_k",
        "(-1)^k * (1+qpow(4*k+1)) / (1+qpow(1)) * poch(2; 4; k)^3 / poch(4; 4; k)^3 * qpow(2*k^2 + 2*k)", {},
        c_thm1_1(), [](CP) -> G {
            return [](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(4 * k + 1))
                    .mul(OP(1), -1)
                    .mul(P(2, 4, k), 3)
                    .mul(P(4, 4, k), -3)
                    .mul(Q(2 * k * k + 2 * k))
                    ;
            };
        });
    add(TermId::Thm1_2Rhs, "thm1_2.rhs", "inner summand of the squared right-hand series",
        "poch(2; 4; k)^3 / (poch(4; 4; k) * poch(3; 4; k) * poch(5; 4; k)) * qpow(2*k)", {}, c_thm1_1(), [](CP) -> G {
            return [](long k) {
                return TermBuilder()
                    .mul(P(2, 4, k), 3)
                    .mul(P(4, 4, k), -1)
                    .mul(P(3, 4, k), -1)
                    .mul(P(5, 4, k), -1)
                    .mul(Q(2 * k))
                    ;
            };
        });
    add(TermId::Thm1_2Pre, "thm1_2.pre", "right-hand prefactor [n]_{q^2}^2 q^{(n-1)^2}", "[n]_q2^2 * qpow((n-1)^2)", {},
        c_thm1_1(), [](CP p) -> G {
            long n = p.n;
            return [n](long) { return TermBuilder().mul(QI(n, 2), 2).mul(Q((n - 1) * (n - 1))); };
        });

    // General d and r.
    auto thm13_lhs = [](CP p) -> G {
        long d = p.d, r = p.r;
        return [d, r](long k) {
            return TermBuilder()
                .mul(sign(k))
                .mul(OP(2 * d * k + r))
                .mul(OP(r), -1)
                .mul(P(2 * r, 2 * d, k), 2)
                .mul(P(2 * d, 2 * d, k), -2)
                .mul(Q(d * k * k + k * (d - r)))
                ;
        };
    };
    auto thm13_rhs = [](CP p) -> G {
        long d = p.d, r = p.r;
        return [d, r](long k) {
            return TermBuilder()
                .mul(P(2 * r, 2 * d, k))
                .mul(P(r, 2 * d, k))
                .mul(P(2 * d, 2 * d, k), -1)
                .mul(P(2 * d + r, 2 * d, k), -1)
                .mul(Q(2 * k * (d - r)))
                ;
        };
    };
    auto thm14_lhs = [](CP p) -> G {
        long d = p.d, r = p.r;
        return [d, r](long k) {
            return TermBuilder()
                .mul(sign(k))
                .mul(OP(2 * d * k + r))
                .mul(OP(r), -1)
                .mul(P(2 * r, 2 * d, k), 3)
                .mul(P(2 * d, 2 * d, k), -3)
                .mul(Q(d * k * k + 2 * k * (d - r)))
                ;
        };
    };
    auto thm14_rhs = [](CP p) -> G {
        long d = p.d, r = p.r;
        return [d, r](long k) {
            return TermBuilder()
                .mul(P(2 * r, 2 * d, k), 2)
                .mul(P(d, 2 * d, k))
                .mul(P(2 * d, 2 * d, k), -1)
                .mul(P(d + r, 2 * d, k), -1)
                .mul(P(2 * d + r, 2 * d, k), -1)
                .mul(Q(2 * k * (d - r)))
                ;
        };
    };
    auto thm13_pre = [](CP p) -> G {
        long n = p.n, d = p.d, r = p.r;
        long e = exact_div(2 * (n - r) * (n + r - d), d, "2(n-r)(n+r-d)/d");
        return [n, r, e](long) { return TermBuilder().mul(QI(n, 2), 2).mul(QI(r, 2), -2).mul(Q(e)); };
    };
    auto eq17_pre = [](CP p) -> G {
        long n = p.n, d = p.d, r = p.r;
        long m = exact_div(n - r, d, "(n-r)/d");
        long e = exact_div((n - r) * (n + r - d), d, "(n-r)(n+r-d)/d");
        return [n, r, m, e](long) { return TermBuilder().mul(sign(m)).mul(QI(n, 2)).mul(QI(r, 2), -1).mul(Q(e)); };
    };
    const std::string src13_lhs =
        "(-1)^k * (1+qpow(2*d*k+r)) / (1+qpow(r)) * poch(2*r; 2*d; k)^2 / poch(2*d; 2*d; k)^2 * qpow(d*k^2 + (d-r)*k)";
    const std::string src13_rhs =
        "poch(2*r; 2*d; k) * poch(r; 2*d; k) / (poch(2*d; 2*d; k) * poch(2*d+r; 2*d; k)) * qpow(2*(d-r)*k)";
    const std::string src14_lhs =
        "(-1)^k * qpow(d*k^2 + 2*(d-r)*k) * poch(2*r; 2*d; k)^3 / poch(2*d; 2*d; k)^3 * (1+qpow(2*d*k+r)) / (1+qpow(r))";
    const std::string src14_rhs =
        "poch(2*r; 2*d; k)^2 * poch(d; 2*d; k) / (poch(2*d; 2*d; k) * poch(d+r; 2*d; k) * poch(2*d+r; 2*d; k)) * "
        "qpow(2*(d-r)*k)";
    const std::string src13_pre = "[n]_q2^2 / [r]_q2^2 * qpow(2*(n-r)*(n+r-d)/d)";
    const std::string src17_pre = "(-1)^((n-r)/d) * [n]_q2 / [r]_q2 * qpow((n-r)*(n+r-d)/d)";

    add(TermId::Thm1_3Lhs, "thm1_3.lhs", "double-sum summand, squared (q^{2r};q^{2d})_k", src13_lhs, {}, c_thm1_3(),
        thm13_lhs);
    add(TermId::Thm1_3Rhs, "thm1_3.rhs", "inner summand of the squared right-hand series", src13_rhs, {}, c_thm1_3(),
        thm13_rhs);
    add(TermId::Thm1_3Pre, "thm1_3.pre", "right-hand prefactor [n]^2/[r]^2 (base q^2) times a q-power", src13_pre, {},
        c_thm1_3(), thm13_pre);
    add(TermId::Thm1_4Lhs, "thm1_4.lhs", "double-sum summand, cubed (q^{2r};q^{2d})_k", src14_lhs, {}, c_thm1_3(),
        thm14_lhs);
    add(TermId::Thm1_4Rhs, "thm1_4.rhs", "inner summand of the squared right-hand series", src14_rhs, {}, c_thm1_3(),
        thm14_rhs);
    add(TermId::Thm1_4Pre, "thm1_4.pre", "right-hand prefactor [n]^2/[r]^2 (base q^2) times a q-power", src13_pre, {},
        c_thm1_3(), thm13_pre);

    // Triple sums, r = 1.
    auto thm61_pre = [](CP p) -> G {
        long n = p.n, d = p.d;
        long s = exact_div(3 * (n - 1), d, "3(n-1)/d");
        long e = exact_div(3 * (n - 1) * (n + 1 - d), d, "3(n-1)(n+1-d)/d");
        return [n, s, e](long) { return TermBuilder().mul(sign(s)).mul(QI(n, 2), 3).mul(Q(e)); };
    };
    const std::string src61_pre = "(-1)^(3*(n-1)/d) * [n]_q2^3 * qpow(3*(n-1)*(n+1-d)/d)";
    add(TermId::Thm6_1Lhs, "thm6_1.lhs", "triple-sum summand, cubed (q^2;q^{2d})_k",
        "(-1)^k * (1+qpow(2*d*k+1)) / (1+qpow(1)) * poch(2; 2*d; k)^3 / poch(2*d; 2*d; k)^3 * qpow(d*k^2 + 2*(d-1)*k)",
        {}, c_thm6_1(), [](CP p) -> G {
            long d = p.d;
            return [d](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(2 * d * k + 1))
                    .mul(OP(1), -1)
                    .mul(P(2, 2 * d, k), 3)
                    .mul(P(2 * d, 2 * d, k), -3)
                    .mul(Q(d * k * k + 2 * k * (d - 1)))
                    ;
            };
        });
    add(TermId::Thm6_1Rhs, "thm6_1.rhs", "inner summand of the cubed right-hand series",
        "poch(2; 2*d; k)^2 * poch(d; 2*d; k) / (poch(d+1; 2*d; k) * poch(2*d; 2*d; k) * poch(2*d+1; 2*d; k)) * "
        "qpow(2*(d-1)*k)",
        {}, c_thm6_1(), [](CP p) -> G {
            long d = p.d;
            return [d](long k) {
                return TermBuilder()
                    .mul(P(2, 2 * d, k), 2)
                    .mul(P(d, 2 * d, k))
                    .mul(P(d + 1, 2 * d, k), -1)
                    .mul(P(2 * d, 2 * d, k), -1)
                    .mul(P(2 * d + 1, 2 * d, k), -1)
                    .mul(Q(2 * (d - 1) * k))
                    ;
            };
        });
    add(TermId::Thm6_1Pre, "thm6_1.pre", "right-hand prefactor, signed [n]_{q^2}^3 times a q-power", src61_pre, {},
        c_thm6_1(), thm61_pre);
    add(TermId::Thm6_3Lhs, "thm6_3.lhs", "triple-sum summand, squared (q^2;q^{2d})_k",
        "(-1)^k * (1+qpow(2*d*k+1)) / (1+qpow(1)) * poch(2; 2*d; k)^2 / poch(2*d; 2*d; k)^2 * qpow(d*k^2 + (d-1)*k)",
        {}, c_thm6_1(), [](CP p) -> G {
            long d = p.d;
            return [d](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(2 * d * k + 1))
                    .mul(OP(1), -1)
                    .mul(P(2, 2 * d, k), 2)
                    .mul(P(2 * d, 2 * d, k), -2)
                    .mul(Q(d * k * k + (d - 1) * k))
                    ;
            };
        });
    add(TermId::Thm6_3Rhs, "thm6_3.rhs", "inner summand of the cubed right-hand series",
        "poch(2; 2*d; k) * poch(1; 2*d; k) / (poch(2*d; 2*d; k) * poch(2*d+1; 2*d; k)) * qpow(2*(d-1)*k)", {},
        c_thm6_1(), [](CP p) -> G {
            long d = p.d;
            return [d](long k) {
                return TermBuilder()
                    .mul(P(2, 2 * d, k))
                    .mul(P(1, 2 * d, k))
                    .mul(P(2 * d, 2 * d, k), -1)
                    .mul(P(2 * d + 1, 2 * d, k), -1)
                    .mul(Q(2 * (d - 1) * k))
                    ;
            };
        });
    add(TermId::Thm6_3Pre, "thm6_3.pre", "right-hand prefactor, signed [n]_{q^2}^3 times a q-power", src61_pre, {},
        c_thm6_1(), thm61_pre);

    // Quartic (q;q^d)_k family.
    auto quartic_lhs = [](long d, long qexp_per_k) -> G {
        return [d, qexp_per_k](long k) {
            return TermBuilder()
                .mul(QI(2 * d * k + 1))
                .mul(P(1, d, k), 4)
                .mul(P(d, d, k), -4)
                .mul(Q(qexp_per_k * k))
                ;
        };
    };
    auto quartic_pre = [](long n, long d) -> G {
        long m = exact_div(n - 1, d, "(n-1)/d");
        long e = exact_div(3 * (1 - n), d, "3(1-n)/d");
        return [n, m, e, d](long) {
            return TermBuilder().mul(QI(n), 3).mul(Q(e)).mul(P(2, d, m), 3).mul(P(d, d, m), -3);
        };
    };
    add(TermId::Thm6_4Lhs, "thm6_4.lhs", "triple-sum summand [2dk+1](q;q^d)_k^4/(q^d;q^d)_k^4 q^{(d-2)k}",
        "[2*d*k+1] * poch(1; d; k)^4 / poch(d; d; k)^4 * qpow((d-2)*k)", {}, c_thm6_4(),
        [quartic_lhs](CP p) -> G { return quartic_lhs(p.d, p.d - 2); });
    add(TermId::Thm6_4Pre, "thm6_4.pre", "closed right-hand side [n]^3 q^{3(1-n)/d} (q^2;q^d)^3/(q^d;q^d)^3",
        "[n]^3 * qpow(3*(1-n)/d) * poch(2; d; (n-1)/d)^3 / poch(d; d; (n-1)/d)^3", {}, c_thm6_4(),
        [quartic_pre](CP p) -> G { return quartic_pre(p.n, p.d); });
    std::vector<Constraint> c67 = c_thm6_4();
    c67.push_back(kD3);
    std::vector<Constraint> c68 = c_thm6_4();
    c68.push_back(kD4);
    add(TermId::Cor6_7Lhs, "cor6_7.lhs", "d = 3 quartic summand",
        "[6*k+1] * poch(1; 3; k)^4 / poch(3; 3; k)^4 * qpow(k)", {}, c67,
        [quartic_lhs](CP) -> G { return quartic_lhs(3, 1); });
    add(TermId::Cor6_7Pre, "cor6_7.pre", "d = 3 closed right-hand side",
        "[n]^3 * qpow(1-n) * poch(2; 3; (n-1)/3)^3 / poch(3; 3; (n-1)/3)^3", {}, c67,
        [quartic_pre](CP p) -> G { return quartic_pre(p.n, 3); });
    add(TermId::Cor6_8Lhs, "cor6_8.lhs", "d = 4 quartic summand",
        "[8*k+1] * poch(1; 4; k)^4 / poch(4; 4; k)^4 * qpow(2*k)", {}, c68,
        [quartic_lhs](CP) -> G { return quartic_lhs(4, 2); });
    add(TermId::Cor6_8Pre, "cor6_8.pre", "d = 4 closed right-hand side",
        "[n]^3 * qpow(3*(1-n)/4) * poch(2; 4; (n-1)/4)^3 / poch(4; 4; (n-1)/4)^3", {}, c68,
        [quartic_pre](CP p) -> G { return quartic_pre(p.n, 4); });

    // Cited single sums.
    auto cubic_single_lhs = [](CP) -> G {
        return [](long k) {
            return TermBuilder()
                .mul(sign(k))
                .mul(Q(k * k))
                .mul(QI(4 * k + 1))
                .mul(P(1, 2, k), 3)
                .mul(P(2, 2, k), -3)
                ;
        };
    };
    const std::string src_cubic_single = "(-1)^k * qpow(k^2) * [4*k+1] * poch(1; 2; k)^3 / poch(2; 2; k)^3";
    add(TermId::Eq1_1Lhs, "eq1_1.lhs", "single-sum summand (-1)^k q^{k^2}[4k+1](q;q^2)_k^3/(q^2;q^2)_k^3", src_cubic_single,
        {}, c_thm1_1(), cubic_single_lhs);
    add(TermId::Eq1_1Pre, "eq1_1.pre", "closed right-hand side (-1)^{(n-1)/2} q^{(n-1)^2/4} [n]",
        "(-1)^((n-1)/2) * qpow((n-1)^2/4) * [n]", {}, c_thm1_1(), [](CP p) -> G {
            long n = p.n;
            long e = exact_div((n - 1) * (n - 1), 4, "(n-1)^2/4");
            return [n, e](long) { return TermBuilder().mul(sign((n - 1) / 2)).mul(Q(e)).mul(QI(n)); };
        });
    add(TermId::Eq1_2Lhs, "eq1_2.lhs", "double-sum summand, same as eq1_1.lhs", src_cubic_single, {}, c_thm1_1(), cubic_single_lhs);
    add(TermId::Eq1_2Pre, "eq1_2.pre", "closed right-hand side q^{(n+1)/2} [n]^2", "qpow((n+1)/2) * [n]^2", {},
        c_thm1_1(), [](CP p) -> G {
            long n = p.n;
            long e = exact_div(n + 1, 2, "(n+1)/2");
            return [n, e](long) { return TermBuilder().mul(Q(e)).mul(QI(n), 2); };
        });
    add(TermId::Eq1_7Lhs, "eq1_7.lhs", "single-sum summand, same as thm1_3.lhs", src13_lhs, {}, c_eq1_7(), thm13_lhs);
    add(TermId::Eq1_7Rhs, "eq1_7.rhs", "right-hand summand, same as thm1_3.rhs", src13_rhs, {}, c_eq1_7(), thm13_rhs);
    add(TermId::Eq1_7Pre, "eq1_7.pre", "right-hand prefactor (-1)^{(n-r)/d}[n]/[r] (base q^2) times a q-power",
        src17_pre, {}, c_eq1_7(), eq17_pre);
    add(TermId::Eq1_8Lhs, "eq1_8.lhs", "single-sum summand, same as thm1_4.lhs", src14_lhs, {}, c_eq1_7(), thm14_lhs);
    add(TermId::Eq1_8Rhs, "eq1_8.rhs", "right-hand summand, same as thm1_4.rhs", src14_rhs, {}, c_eq1_7(), thm14_rhs);
    add(TermId::Eq1_8Pre, "eq1_8.pre", "right-hand prefactor (-1)^{(n-r)/d}[n]/[r] (base q^2) times a q-power",
        src17_pre, {}, c_eq1_7(), eq17_pre);

    // Parametric families; a and b are exponents: a -> q^a, b -> q^b.
    add(TermId::Lem2_2Lhs, "lem2_2.lhs", "summand with parameter a, squared-type",
        "(-1)^k * (1+qpow(2*d*k+r)) / (1+qpow(r)) * poch(a+2*r; 2*d; k) * poch(2*r-a; 2*d; k) / "
        "(poch(a+2*d; 2*d; k) * poch(2*d-a; 2*d; k)) * qpow(d*k^2 + (d-r)*k)",
        {"a"}, c_lem2_2(), [](CP p) -> G {
            long d = p.d, r = p.r, a = p.get("a");
            return [d, r, a](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(2 * d * k + r))
                    .mul(OP(r), -1, "1+q^r")
                    .mul(P(a + 2 * r, 2 * d, k))
                    .mul(P(2 * r - a, 2 * d, k))
                    .mul(P(a + 2 * d, 2 * d, k), -1, "(aq^{2d};q^{2d})_k", true)
                    .mul(P(2 * d - a, 2 * d, k), -1, "(q^{2d}/a;q^{2d})_k", true)
                    .mul(Q(d * k * k + k * (d - r)))
                    ;
            };
        });
    add(TermId::Lem2_2Rhs, "lem2_2.rhs", "right-hand summand with parameter a",
        "poch(a+2*r; 2*d; k) * poch(2*r-a; 2*d; k) * poch(r; 2*d; k) / "
        "(poch(2*d; 2*d; k) * poch(2*r; 2*d; k) * poch(2*d+r; 2*d; k)) * qpow(2*(d-r)*k)",
        {"a"}, c_lem2_2(), [](CP p) -> G {
            long d = p.d, r = p.r, a = p.get("a");
            return [d, r, a](long k) {
                return TermBuilder()
                    .mul(P(a + 2 * r, 2 * d, k))
                    .mul(P(2 * r - a, 2 * d, k))
                    .mul(P(r, 2 * d, k))
                    .mul(P(2 * d, 2 * d, k), -1, "(q^{2d};q^{2d})_k")
                    .mul(P(2 * r, 2 * d, k), -1, "(q^{2r};q^{2d})_k")
                    .mul(P(2 * d + r, 2 * d, k), -1, "(q^{2d+r};q^{2d})_k")
                    .mul(Q(2 * k * (d - r)))
                    ;
            };
        });
    add(TermId::Lem2_2Pre, "lem2_2.pre", "right-hand prefactor, as eq1_7.pre", src17_pre, {}, c_lem2_2(), eq17_pre);
    add(TermId::Lem3_1Lhs, "lem3_1.lhs", "summand with parameter a, cubed-type",
        "(-1)^k * (1+qpow(2*d*k+r)) / (1+qpow(r)) * poch(a+2*r; 2*d; k) * poch(2*r-a; 2*d; k) * poch(2*r; 2*d; k) / "
        "(poch(a+2*d; 2*d; k) * poch(2*d-a; 2*d; k) * poch(2*d; 2*d; k)) * qpow(d*k^2 + 2*(d-r)*k)",
        {"a"}, c_lem2_2(), [](CP p) -> G {
            long d = p.d, r = p.r, a = p.get("a");
            return [d, r, a](long k) {
                return TermBuilder()
                    .mul(sign(k))
                    .mul(OP(2 * d * k + r))
                    .mul(OP(r), -1, "1+q^r")
                    .mul(P(a + 2 * r, 2 * d, k))
                    .mul(P(2 * r - a, 2 * d, k))
                    .mul(P(2 * r, 2 * d, k))
                    .mul(P(a + 2 * d, 2 * d, k), -1, "(aq^{2d};q^{2d})_k", true)
                    .mul(P(2 * d - a, 2 * d, k), -1, "(q^{2d}/a;q^{2d})_k", true)
                    .mul(P(2 * d, 2 * d, k), -1, "(q^{2d};q^{2d})_k")
                    .mul(Q(d * k * k + 2 * k * (d - r)))
                    ;
            };
        });
    add(TermId::Lem3_1Rhs, "lem3_1.rhs", "right-hand summand with parameter a",
        "poch(a+2*r; 2*d; k) * poch(2*r-a; 2*d; k) * poch(d; 2*d; k) / "
        "(poch(2*d; 2*d; k) * poch(d+r; 2*d; k) * poch(2*d+r; 2*d; k)) * qpow(2*(d-r)*k)",
        {"a"}, c_lem2_2(), [](CP p) -> G {
            long d = p.d, r = p.r, a = p.get("a");
            return [d, r, a](long k) {
                return TermBuilder()
                    .mul(P(a + 2 * r, 2 * d, k))
                    .mul(P(2 * r - a, 2 * d, k))
                    .mul(P(d, 2 * d, k))
                    .mul(P(2 * d, 2 * d, k), -1, "(q^{2d};q^{2d})_k")
                    .mul(P(d + r, 2 * d, k), -1, "(q^{d+r};q^{2d})_k")
                    .mul(P(2 * d + r, 2 * d, k), -1, "(q^{2d+r};q^{2d})_k")
                    .mul(Q(2 * k * (d - r)))
                    ;
            };
        });
    add(TermId::Lem3_1Pre, "lem3_1.pre", "right-hand prefactor, as eq1_7.pre", src17_pre, {}, c_lem2_2(), eq17_pre);

    add(TermId::Lem5_1Lhs, "lem5_1.lhs", "reflected ratio (aq^r;q^d)_{m-k}/(q^d/a;q^d)_{m-k}, m = (n-r)/d",
        "poch(a+r; d; (n-r)/d - k) / poch(d-a; d; (n-r)/d - k)", {"a"}, c_lem5_1(), [](CP p) -> G {
            long d = p.d, r = p.r, a = p.get("a");
            long m = exact_div(p.n - r, d, "(n-r)/d");
            return [d, r, a, m](long k) {
                return TermBuilder()
                    .mul(P(a + r, d, m - k))
                    .mul(P(d - a, d, m - k), -1, "(q^d/a;q^d)_{m-k}", true)
                    ;
            };
        });
    add(TermId::Lem5_1Rhs, "lem5_1.rhs", "(-a)^{m-2k} (aq^r;q^d)_k/(q^d/a;q^d)_k times a q-power",
        "(-1)^((n-r)/d) * qpow(a*((n-r)/d - 2*k)) * poch(a+r; d; k) / poch(d-a; d; k) * "
        "qpow((n-r)*(n-d+r)/(2*d) + (d-r)*k)",
        {"a"}, c_lem5_1(), [](CP p) -> G {
            long n = p.n, d = p.d, r = p.r, a = p.get("a");
            long m = exact_div(n - r, d, "(n-r)/d");
            long e0 = exact_div((n - r) * (n - d + r), 2 * d, "(n-r)(n-d+r)/(2d)");
            return [d, r, a, m, e0](long k) {
                return TermBuilder()
                    .mul(sign(m))
                    .mul(Q(a * (m - 2 * k)))
                    .mul(P(a + r, d, k))
                    .mul(P(d - a, d, k), -1, "(q^d/a;q^d)_k", true)
                    .mul(Q(e0 + k * (d - r)))
                    ;
            };
        });

    add(TermId::Lem6_5Z, "lem6_5.z", "summand z_q(k) with parameters a and b",
        "[2*d*k+1] * poch(1; d; k) * poch(1+a; d; k) * poch(1-a; d; k) * poch(1-b; d; k) / "
        "(poch(d; d; k) * poch(a+d; d; k) * poch(d-a; d; k) * poch(b+d; d; k)) * qpow(b*k + (d-2)*k)",
        {"a", "b"}, c_thm6_4(), [](CP p) -> G {
            long d = p.d, a = p.get("a"), b = p.get("b");
            return [d, a, b](long k) {
                return TermBuilder()
                    .mul(QI(2 * d * k + 1))
                    .mul(P(1, d, k))
                    .mul(P(1 + a, d, k))
                    .mul(P(1 - a, d, k))
                    .mul(P(1 - b, d, k))
                    .mul(P(d, d, k), -1, "(q^d;q^d)_k")
                    .mul(P(a + d, d, k), -1, "(aq^d;q^d)_k", true)
                    .mul(P(d - a, d, k), -1, "(q^d/a;q^d)_k", true)
                    .mul(P(b + d, d, k), -1, "(bq^d;q^d)_k", true)
                    .mul(Q(b * k + (d - 2) * k))
                    ;
            };
        });
    add(TermId::Lem6_5Pre, "lem6_5.pre", "[n]^3 (b/q)^{3(n-1)/d} (q^2/b;q^d)^3/(bq^d;q^d)^3",
        "[n]^3 * qpow(3*(b-1)*(n-1)/d) * poch(2-b; d; (n-1)/d)^3 / poch(b+d; d; (n-1)/d)^3", {"b"}, c_thm6_4(),
        [](CP p) -> G {
            long n = p.n, d = p.d, b = p.get("b");
            long m = exact_div(n - 1, d, "(n-1)/d");
            long e = exact_div(3 * (b - 1) * (n - 1), d, "3(b-1)(n-1)/d");
            return [n, d, b, m, e](long) {
                return TermBuilder()
                    .mul(QI(n), 3)
                    .mul(Q(e))
                    .mul(P(2 - b, d, m), 3)
                    .mul(P(b + d, d, m), -3, "(bq^d;q^d)", true)
                    ;
            };
        });
    add(TermId::Lem6_6Pre, "lem6_6.pre", "[n]^3 (q,q^{d-1};q^d)^3/(aq^d,q^d/a;q^d)^3",
        "[n]^3 * poch(1; d; (n-1)/d)^3 * poch(d-1; d; (n-1)/d)^3 / "
        "(poch(a+d; d; (n-1)/d)^3 * poch(d-a; d; (n-1)/d)^3)",
        {"a"}, c_thm6_4(), [](CP p) -> G {
            long n = p.n, d = p.d, a = p.get("a");
            long m = exact_div(n - 1, d, "(n-1)/d");
            return [n, d, a, m](long) {
                return TermBuilder()
                    .mul(QI(n), 3)
                    .mul(P(1, d, m), 3)
                    .mul(P(d - 1, d, m), 3)
                    .mul(P(a + d, d, m), -3, "(aq^d;q^d)", true)
                    .mul(P(d - a, d, m), -3, "(q^d/a;q^d)", true)
                    ;
            };
        });
    return e;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = build_registry();
    return r;
}

const Entry& entry(TermId id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    throw UnknownTerm("term id not registered");
}

}  // namespace

const std::vector<TermInfo>& all_terms() {
    static const std::vector<TermInfo> infos = [] {
        std::vector<TermInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const TermInfo& term_info(TermId id) { return entry(id).info; }

std::optional<TermId> term_from_name(std::string_view name) {
    for (const auto& e : registry())
        if (e.info.name == name) return e.info.id;
    return std::nullopt;
}

void check_constraints(const std::vector<Constraint>& constraints, const CaseParams& params, std::string_view context) {
    for (const auto& c : constraints)
        if (!c.holds(params))
            throw ConstraintViolation(std::string(context) + ": constraint '" + c.name + "' fails for " +
                                      params.to_string());
}

namespace {

const std::map<std::string, std::vector<Constraint>, std::less<>>& theorem_table() {
    static const std::map<std::string, std::vector<Constraint>, std::less<>> t = [] {
        std::map<std::string, std::vector<Constraint>, std::less<>> m;
        m["thm1_1"] = c_thm1_1();
        m["thm1_2"] = c_thm1_1();
        m["thm1_3"] = c_thm1_3();
        m["thm1_4"] = c_thm1_3();
        m["thm6_1"] = c_thm6_1();
        m["thm6_3"] = c_thm6_1();
        m["thm6_4"] = c_thm6_4();
        std::vector<Constraint> c67 = c_thm6_4();
        c67.push_back(kD3);
        m["cor6_7"] = c67;
        std::vector<Constraint> c68 = c_thm6_4();
        c68.push_back(kD4);
        m["cor6_8"] = c68;
        m["eq1_1"] = c_thm1_1();
        m["eq1_2"] = c_thm1_1();
        m["eq1_7"] = c_eq1_7();
        m["eq1_8"] = c_eq1_7();
        m["lem2_2"] = c_lem2_2();
        m["lem3_1"] = c_lem2_2();
        m["lem5_1"] = c_lem5_1();
        m["lem6_5"] = c_thm6_4();
        m["lem6_6"] = c_thm6_4();
        return m;
    }();
    return t;
}

}  // namespace

const std::vector<Constraint>& theorem_constraints(std::string_view theorem) {
    auto it = theorem_table().find(theorem);
    if (it == theorem_table().end()) throw UnknownTerm("no constraint set named '" + std::string(theorem) + "'");
    return it->second;
}

bool has_theorem_constraints(std::string_view theorem) { return theorem_table().contains(theorem); }

FactoredGenerator builtin_factored(TermId id, const CaseParams& params) {
    const Entry& e = entry(id);
    for (const auto& x : e.info.extras)
        if (!params.has(x))
            throw ConstraintViolation(e.info.name + ": constraint 'parameter " + x + " given' fails for " +
                                      params.to_string());
    check_constraints(e.info.constraints, params, e.info.name);
    return e.make(params);
}

CycloGenerator builtin_generator(TermId id, const CaseParams& params) {
    FactoredGenerator g = builtin_factored(id, params);
    return [g](long k) { return g(k).result(); };
}

RatGenerator builtin_term(TermId id, const CaseParams& params) {
    CycloGenerator g = builtin_generator(id, params);
    return [g](long k) { return g(k).to_ratfunc(); };
}

}  // namespace qcong

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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when
// every line passes, or when the only failing line is the quartic triple sum
// criterion and its failures are exactly the confirmed composite-n set below.
// --strict makes any FAIL line fatal.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcong/errors.hpp"
#include "qcong/padic.hpp"
#include "qcong/report.hpp"
#include "qcong/sums.hpp"
#include "qcong/suites.hpp"
#include "qcong/termlang.hpp"

using namespace qcong;

namespace {

// Time budgets in seconds, per criterion.
constexpr double kBudgetThm11 = 10;
constexpr double kBudgetThm12 = 20;
constexpr double kBudgetThm134 = 30;
constexpr double kBudgetTriple = 120;
constexpr double kBudgetPadic = 30;
constexpr int kRandomTrials = 200;
constexpr int kViolationTrials = 100;

struct Line {
    bool pass = false;
    bool documented = false;  // a failure explained by a confirmed counterexample set
    std::string name;
    std::string detail;
};

std::vector<Line> lines;

void emit(Line l) {
    std::cout << (l.pass ? "PASS" : "FAIL") << "  " << l.name << ": " << l.detail << std::endl;
    lines.push_back(std::move(l));
}

class Timer {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

std::vector<CaseResult> run_suites(std::initializer_list<const char*> names) {
    std::vector<CaseSpec> cases;
    for (const char* n : names) {
        auto part = build_suite(n);
        cases.insert(cases.end(), part.begin(), part.end());
    }
    return run_cases(cases);
}

std::string failures(const std::vector<CaseResult>& rs) {
    std::string out;
    for (const auto& r : rs) {
        if (r.holds) continue;
        out += " " + r.id;
        if (r.error) out += " (" + *r.error + ")";
        if (r.witness) out += " at " + to_string(r.witness->failed_factor);
    }
    return out;
}

long count_holding(const std::vector<CaseResult>& rs) {
    return std::count_if(rs.begin(), rs.end(), [](const auto& r) { return r.holds; });
}

void summation_line(const char* name, const char* what, std::initializer_list<const char*> suites, double budget) {
    Timer t;
    auto rs = run_suites(suites);
    double s = t.seconds();
    long ok = count_holding(rs);
    bool pass = ok == static_cast<long>(rs.size()) && !rs.empty() && s <= budget;
    std::string detail = std::string(what) + ", " + std::to_string(ok) + "/" + std::to_string(rs.size()) +
                         " hold in " + fmt(s) + " (budget " + fmt(budget) + ")";
    if (!pass) detail += ";" + failures(rs);
    emit({pass, false, name, detail});
}

// ---- root-of-unity limits, independent of the engine ----------------------

// a + b w in Q(w) with w^2 + w + 1 = 0; q = -1 uses b = 0.
struct Elt {
    Rational a, b;
    Elt operator*(const Elt& o) const { return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b}; }
    Elt operator+(const Elt& o) const { return {a + o.a, b + o.b}; }
    Elt operator-(const Elt& o) const { return {a - o.a, b - o.b}; }
    Elt inverse() const {
        Rational norm = a * a - a * b + b * b;
        return {(a - b) / norm, -b / norm};
    }
    bool operator==(const Elt& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
};

// Value and vanishing order of a product at q -> zeta, zeta = -1 or w.
struct Limit {
    long m;  // 2 or 3
    Elt value{1, 0};
    long order = 0;

    Elt zeta_pow(long j) const {
        long e = ((j % m) + m) % m;
        if (m == 2) return {e ? -1 : 1, 0};
        if (e == 0) return {1, 0};
        if (e == 1) return {0, 1};
        return {-1, -1};
    }
    // Multiply by (1 - q^j)^e. Near zeta with m | j, 1 - q^j ~ -j zeta^{-1} (q - zeta).
    void one_minus(long j, long e) {
        Elt f = j % m == 0 ? Elt{Rational(-j), 0} * zeta_pow(-1) : Elt{1, 0} - zeta_pow(j);
        if (j % m == 0) order += e;
        Elt g = e >= 0 ? f : f.inverse();
        for (long i = 0; i < std::abs(e); ++i) value = value * g;
    }
    void qint(long j, long e) {  // [j]^e
        one_minus(j, e);
        one_minus(1, -e);
    }
    void qpow(long t) { value = value * zeta_pow(t); }
    Elt result() const {
        if (order < 0) throw std::logic_error("pole in limit oracle");
        return order > 0 ? Elt{0, 0} : value;
    }
};

// Both sides of the quartic triple sum congruence at q -> zeta_m.
std::pair<Elt, Elt> quartic_limits(long n, long d, long m) {
    auto term = [&](long k) {
        Limit l{m};
        l.qint(2 * d * k + 1, 1);
        for (long i = 0; i < k; ++i) {
            l.one_minus(d * i + 1, 4);
            l.one_minus(d * i + d, -4);
        }
        l.qpow((d - 2) * k);
        return l.result();
    };
    std::vector<Elt> c;
    for (long k = 0; k < n; ++k) c.push_back(term(k));
    Elt lhs{0, 0};
    for (long i = 0; i < n; ++i)
        for (long j = 0; i + j < n; ++j)
            for (long s = 0; i + j + s < n; ++s) lhs = lhs + c[i] * c[j] * c[s];
    Limit r{m};
    r.qint(n, 3);
    r.qpow(3 * (1 - n) / d);
    for (long i = 0; i < (n - 1) / d; ++i) {
        r.one_minus(d * i + 2, 3);
        r.one_minus(d * i + d, -3);
    }
    return {lhs, r.result()};
}

void triple_line() {
    // Failures of [n]phi(n)^3 expected for composite n with a divisor m > 1,
    // m != 1 mod d: the factor phi(m) of [n] is lost.
    const std::map<std::string, long> expected = {
        {"thm6_4.n4.d3", 2}, {"thm6_4.n10.d3", 2}, {"thm6_4.n9.d4", 3}};
    Timer t;
    auto rs = run_suites({"thm6_1", "thm6_3", "thm6_4"});
    double s = t.seconds();
    long ok = count_holding(rs);

    std::map<std::string, long> seen;
    bool phi_n_ok = true;
    for (const auto& r : rs) {
        if (r.holds) continue;
        seen[r.id] = r.witness ? r.witness->failed_factor.index : 0;
        for (const auto& e : r.strength)
            if (e.index == r.params.n && e.achieved < 4) phi_n_ok = false;
    }
    bool oracle_ok = true;
    std::string oracle_note;
    for (const auto& [id, m] : expected) {
        auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.id == id; });
        if (it == rs.end()) {
            oracle_ok = false;
            continue;
        }
        auto [lhs, rhs] = quartic_limits(it->params.n, it->params.d, m);
        if (lhs == rhs) oracle_ok = false;
    }
    // Pinned value: at (4,3) the summands tend to 1, -1, 16/81, -16/81.
    auto [l43, r43] = quartic_limits(4, 3, 2);
    if (!(l43 == Elt{Rational(-32, 27), 0}) || !r43.is_zero()) oracle_ok = false;

    bool all_hold = ok == static_cast<long>(rs.size());
    bool matches = seen == expected;
    std::string detail = "cubic and quadratic triple sums, quartic triple sums mod [n]phi(n)^3, " +
                         std::to_string(ok) + "/" + std::to_string(rs.size()) + " hold in " + fmt(s) + " (budget " +
                         fmt(kBudgetTriple) + ")";
    if (!all_hold) {
        detail += ";" + failures(rs);
        detail += matches ? "; exactly the composite-n set" : "; NOT the expected composite-n set";
        detail += oracle_ok ? ", root-of-unity oracle confirms each" : ", root-of-unity oracle disagrees";
        detail += phi_n_ok ? ", phi(n)^4 still divides" : ", phi(n)^4 missing";
    }
    bool pass = all_hold && s <= kBudgetTriple;
    emit({pass, !pass && matches && oracle_ok && phi_n_ok && s <= kBudgetTriple, "triple sums", detail});
}

// ---- structural identities ------------------------------------------------

std::mt19937_64 rng(0x5eed2026u);

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(long bound) {
    Rational x(uniform(-bound, bound), uniform(1, bound));
    x.canonicalize();
    return x;
}

std::tuple<long, long, long> random_window(long min_n, long max_n, long min_d, long max_d, long den) {
    while (true) {
        long n = uniform(min_n, max_n), d = uniform(min_d, max_d);
        std::vector<long> rs;
        for (long r = n - ((n - 1) * d) / den; r <= n; ++r)
            if ((n - r) % d == 0) rs.push_back(r);
        if (!rs.empty()) return {n, d, rs[static_cast<std::size_t>(uniform(0, static_cast<long>(rs.size()) - 1))]};
    }
}

std::vector<Rational> multiplicative(long n, long bound, long len) {
    std::vector<Rational> base(static_cast<std::size_t>(n), Rational(0));
    base[0] = 1;
    for (long j = 1; j < bound && j < n; ++j) base[j] = random_rational(7);
    std::vector<Rational> c(static_cast<std::size_t>(len));
    Rational block(1);
    for (long j = 0; j < len; ++j) {
        if (j % n == 0) block = j == 0 ? Rational(1) : random_rational(7);
        c[j] = block * base[j % n];
    }
    return c;
}

template <class F>
bool rejects(F&& f) {
    try {
        f();
    } catch (const HypothesisViolation&) {
        return true;
    } catch (const SupportViolation&) {
        return true;
    }
    return false;
}

void structural_line() {
    int square = 0, shift = 0, cube = 0, anti = 0, rejected = 0, violations = 0;
    for (int t = 0; t < kRandomTrials; ++t) {
        auto [n, d, r] = random_window(2, 14, 2, 6, 2);
        long s = (n - r) / d;
        std::vector<Rational> c(static_cast<std::size_t>(n + uniform(0, 3)), Rational(0));
        for (long j = 0; j <= s; ++j) c[j] = random_rational(9);
        square += oracle_square_identity(c, n, d, r);
        if (s + 1 < n) {
            ++violations;
            c[uniform(s + 1, n - 1)] += Rational(1);
            rejected += rejects([&] { oracle_square_identity(c, n, d, r); });
        }
    }
    for (int t = 0; t < kRandomTrials; ++t) {
        long n = uniform(2, 9), l = uniform(1, 3), k = uniform(0, n - 1);
        auto c = multiplicative(n, (n + 1) / 2, l * n + k + 1);
        shift += oracle_shift_identity(c, n, l, k);
        long j = uniform(n, l * n + k);
        if (j % n) {
            ++violations;
            c[j] += Rational(1);
            rejected += rejects([&] { oracle_shift_identity(c, n, l, k); });
        }
    }
    for (int t = 0; t < kRandomTrials; ++t) {
        auto [n, d, r] = random_window(2, 10, 3, 6, 3);
        long s = (n - r) / d, l = uniform(0, 2), k = uniform(0, n - 1);
        auto c = multiplicative(n, s + 1, std::max(l * n + k + 1, n));
        cube += oracle_triple_identities(c, n, d, r, l, k);
        if (s + 1 < n) {
            ++violations;
            auto bad = c;
            bad[uniform(s + 1, n - 1)] = Rational(1);
            rejected += rejects([&] { oracle_triple_identities(bad, n, d, r, l, k); });
        }
    }
    for (long n : {3L, 5L, 7L, 9L}) {
        for (int t = 0; t < kRandomTrials / 4; ++t) {
            std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
            long h = (n - 1) / 2;
            for (long k = 0; k < h - k; ++k) {
                a[k] = random_rational(9);
                a[h - k] = -a[k];
            }
            for (long k = (n + 1) / 2; k < (3 * n - 1) / 2 - k; ++k) {
                a[k] = random_rational(9);
                a[(3 * n - 1) / 2 - k] = -a[k];
            }
            anti += oracle_antisymmetry(a, n);
            ++violations;
            a[uniform(0, n - 1)] += Rational(1);
            rejected += rejects([&] { oracle_antisymmetry(a, n); });
        }
    }
    // Fixed hypothesis violations.
    std::vector<Rational> z(30, Rational(0));
    const std::vector<std::function<void()>> fixed = {
        [&] { oracle_square_identity(z, 7, 3, 2); },       [&] { oracle_square_identity(z, 7, 1, 1); },
        [&] { oracle_square_identity(z, 7, 3, -5); },      [&] { oracle_triple_identities(z, 7, 2, 1, 0, 0); },
        [&] { oracle_triple_identities(z, 7, 3, -2, 0, 0); }, [&] { oracle_antisymmetry(z, 4); },
    };
    for (const auto& f : fixed) {
        ++violations;
        rejected += rejects(f);
    }
    bool pass = square == kRandomTrials && shift == kRandomTrials && cube == kRandomTrials &&
                anti == kRandomTrials && rejected == violations;
    emit({pass, false, "structural identities",
          "square " + std::to_string(square) + ", shift " + std::to_string(shift) + ", cube and triple shift " +
              std::to_string(cube) + ", antisymmetry " + std::to_string(anti) + " of " +
              std::to_string(kRandomTrials) + " each; " + std::to_string(rejected) + "/" +
              std::to_string(violations) + " hypothesis violations rejected"});
}

// ---- p-adic -----------------------------------------------------------------

void padic_line() {
    Timer t;
    auto rs = run_suites({"padic"});
    long ok = count_holding(rs);
    bool pass = ok == static_cast<long>(rs.size());
    // The stronger modulus: cor1_6.e13 reaches p^4 where li.eq1_3 states p^3.
    const int li_exponent = claim_info("li.eq1_3").exponent;
    long stronger = 0, primes = 0;
    std::string sharp;
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        ++primes;
        auto v = check_padic(make_claim("cor1_6.e13", p));
        if (!v.achieved || *v.achieved >= 4) stronger += (!v.achieved || *v.achieved > li_exponent);
        auto a = check_padic(make_claim("cor1_5.a", p));
        sharp += " " + std::to_string(p) + ":" + (a.achieved ? std::to_string(*a.achieved) : "inf");
    }
    pass = pass && stronger == primes && li_exponent == 3;
    double s = t.seconds();
    pass = pass && s <= kBudgetPadic;
    std::string detail = std::to_string(ok) + "/" + std::to_string(rs.size()) + " claims hold in " + fmt(s) +
                         " (budget " + fmt(kBudgetPadic) + "); e13 reaches p^4 > p^" + std::to_string(li_exponent) +
                         " at " + std::to_string(stronger) + "/" + std::to_string(primes) +
                         " primes; cor1_5.a achieved exponents" + sharp;
    if (ok != static_cast<long>(rs.size())) detail += ";" + failures(rs);
    emit({pass, false, "p-adic congruences", detail});
}

// ---- specialisations -------------------------------------------------------

void lemma_line() {
    auto cases = build_suite("lemmas");
    auto rs = run_cases(cases);
    std::map<std::string, long> sampled, skipped;
    long crt = 0, crt_ok = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto& c = cases[i];
        const auto& r = rs[i];
        if (c.kind == CaseKind::Crt) {
            ++crt;
            crt_ok += r.holds;
            continue;
        }
        // Exact points: a = q^{+-2n} or a = q^{+-n}; none for lem5_1 and lem6_6.
        long exact = (c.lemma == "lem5_1" || c.lemma == "lem6_6") ? 0 : 2;
        sampled[c.lemma] += r.checks - exact;
        skipped[c.lemma] += r.skipped;
    }
    long ok = count_holding(rs);
    bool pass = ok == static_cast<long>(rs.size()) && crt == 27 && crt_ok == crt;
    std::string detail = std::to_string(ok) + "/" + std::to_string(rs.size()) + " hold; sampled checks";
    for (const auto& [lemma, n] : sampled) {
        detail += " " + lemma + ":" + std::to_string(n) + "(" + std::to_string(skipped[lemma]) + " skipped)";
        pass = pass && n > 0;
    }
    detail += "; CRT " + std::to_string(crt_ok) + "/" + std::to_string(crt);
    if (ok != static_cast<long>(rs.size())) detail += ";" + failures(rs);
    emit({pass, false, "specialisations", detail});
}

// ---- engine self-consistency ---------------------------------------------

CycloFrac random_value() {
    CycloFrac x(random_rational(5));
    if (x.is_zero()) return x;
    for (int i = 0; i < 3; ++i) x *= CycloFrac::one_minus_qpow(uniform(1, 6)).pow(uniform(-1, 2));
    return x * CycloFrac::qpow(uniform(-2, 3));
}

std::string outcome(const FactoredGenerator& g, long k, CycloFrac& out) {
    try {
        out = g(k).result();
        return "ok";
    } catch (const DegenerateSpecialization&) {
        return "degenerate";
    } catch (const ConstraintViolation&) {
        return "constraint";
    }
}

void engine_line() {
    long sums = 0, sums_ok = 0;
    for (int t = 0; t < 60; ++t) {
        long n = uniform(1, 10);
        std::vector<CycloFrac> v;
        for (long k = 0; k < n; ++k) v.push_back(random_value());
        auto gen = [&v](long k) { return v[static_cast<std::size_t>(k)]; };
        sums += 2;
        sums_ok += double_sum(gen, n) == double_sum_literal(gen, n);
        sums_ok += triple_sum(gen, n) == triple_sum_literal(gen, n);
    }

    // Every registry term used by a shipped case, against its source text.
    std::vector<CaseSpec> shipped = build_suite("all");
    for (const auto& info : all_claims()) {
        CaseSpec q = info.q_case;
        for (long p : info.residue ? std::vector<long>{5, 13} : std::vector<long>{3, 5, 7}) {
            q.params.n = p;
            shipped.push_back(q);
        }
    }
    std::set<std::pair<std::string, std::string>> done;
    long terms = 0, terms_ok = 0;
    for (const auto& c : shipped) {
        for (const TermRef* ref : {&c.lhs, &c.rhs.prefactor, &c.rhs.inner}) {
            if (!ref->id || !done.insert({term_info(*ref->id).name, c.params.to_string()}).second) continue;
            const TermInfo& info = term_info(*ref->id);
            FactoredGenerator a = builtin_factored(*ref->id, c.params);
            FactoredGenerator b = compile_term_factored(parse_term(info.source, info.extras), c.params);
            for (long k = 0; k <= 2 * c.params.n; ++k) {
                CycloFrac x, y;
                ++terms;
                std::string ox = outcome(a, k, x), oy = outcome(b, k, y);
                terms_ok += ox == oy && (ox != "ok" || x == y);
            }
        }
    }

    long pipe = 0, pipe_ok = 0;
    for (const auto& info : all_claims()) {
        std::vector<long> ps = info.residue ? std::vector<long>{5, 13, 17} : std::vector<long>{3, 5, 7, 11, 13};
        for (long p : ps) {
            ++pipe;
            CaseSpec q = info.q_case;
            q.params.n = p;
            PadicClaim image = q_to_classical(q, info.target_q);
            ClassicalValue direct = classical_sum(info.id, p);
            bool same_lhs = image.lhs == direct.lhs;
            bool same_rhs = info.rhs_exact ? image.rhs == direct.rhs : [&] {
                auto v = vp(image.rhs - direct.rhs, p);
                return !v || *v >= info.exponent;
            }();
            pipe_ok += same_lhs && same_rhs;
        }
    }
    bool pass = sums == sums_ok && terms == terms_ok && pipe == pipe_ok;
    emit({pass, false, "engine self-consistency",
          "prefix vs literal sums " + std::to_string(sums_ok) + "/" + std::to_string(sums) +
              ", parsed vs registry summands " + std::to_string(terms_ok) + "/" + std::to_string(terms) +
              ", q-image vs classical " + std::to_string(pipe_ok) + "/" + std::to_string(pipe)});
}

}  // namespace

int main(int argc, char** argv) {
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    try {
        summation_line("thm1_1", "double sums mod phi(n,-)^3 phi(n)^2, n = 3..15 odd", {"thm1_1"}, kBudgetThm11);
        summation_line("thm1_2", "double sums mod phi(n,-)^4 phi(n)^2, n = 3..15 odd", {"thm1_2"}, kBudgetThm12);
        summation_line("thm1_3/thm1_4", "parametric double sums over six (n,d,r)", {"thm1_3", "thm1_4"},
                       kBudgetThm134);
        triple_line();
        summation_line("cited", "earlier single and double sums", {"cited"}, kBudgetThm134);
        padic_line();
        structural_line();
        lemma_line();
        engine_line();
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    long fails = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.pass; });
    long documented = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.documented; });
    std::cout << lines.size() - fails << "/" << lines.size() << " criteria pass";
    if (fails) std::cout << ", " << documented << " failing line(s) match the confirmed counterexample set";
    std::cout << std::endl;
    if (fails == 0) return 0;
    return !strict && fails == documented ? 0 : 1;
}

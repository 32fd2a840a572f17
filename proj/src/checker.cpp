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

#include "qcong/checker.hpp"

#include <cstdio>
#include <stdexcept>

#include "qcong/errors.hpp"
#include "qcong/sums.hpp"
#include "qcong/termlang.hpp"

namespace qcong {

namespace {

// Multiplicity of Phi_m in p, stopping at cap.
int multiplicity(IntPoly p, long m, int cap) {
    int e = 0;
    while (e < cap && !p.is_zero() && try_divide_cyclotomic(p, m)) ++e;
    return e;
}

std::vector<long> irreducible_indices(const Modulus& m) {
    std::vector<long> out;
    for (const auto& [idx, e] : m.irreducible()) out.push_back(idx);
    return out;
}

std::vector<std::string> extra_names(const CaseParams& p) {
    std::vector<std::string> out;
    for (const auto& [name, v] : p.extra) out.push_back(name);
    return out;
}

FactoredGenerator generator(const TermRef& t, const CaseParams& p) {
    if (t.id) return builtin_factored(*t.id, p);
    if (t.source.empty()) throw CaseFileError("empty term reference");
    return compile_term_factored(parse_term(t.source, extra_names(p)), p);
}

long eval_bound(const std::string& text, const CaseParams& p) {
    if (text.empty()) throw CaseFileError("missing summation bound");
    return eval_form(parse_form(text, extra_names(p)), p, 0);
}

std::vector<TermBuilder> eval_range(const FactoredGenerator& g, long count) {
    std::vector<TermBuilder> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long k = 0; k < count; ++k) out.push_back(g(k));
    return out;
}

std::vector<CycloFrac> values(const std::vector<TermBuilder>& v) {
    std::vector<CycloFrac> out;
    out.reserve(v.size());
    for (const auto& b : v) out.push_back(b.result());
    return out;
}

PrefixTable<CycloFrac> table_of(const std::vector<CycloFrac>& v) {
    return prefix_table([&](long k) { return v[static_cast<std::size_t>(k)]; }, static_cast<long>(v.size()));
}

CycloFrac plain_sum(const std::vector<CycloFrac>& v) { return sum_all(v); }

std::optional<std::string> pole_in(const std::vector<TermBuilder>& v, const std::vector<long>& idx) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (auto label = v[k].parametric_pole(idx)) return *label + " at k=" + std::to_string(k);
    return std::nullopt;
}

void merge_failure(Verdict& into, Verdict&& part, const std::string& context) {
    into.checks += part.checks;
    into.skipped += part.skipped;
    for (auto& note : part.notes) into.notes.push_back(std::move(note));
    if (!part.holds) {
        if (into.holds) into.witness = std::move(part.witness);
        into.holds = false;
        into.notes.push_back("failed: " + context);
    }
}

}  // namespace

std::string remainder_digest(const IntPoly& p) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& c : p.coeffs()) {
        feed(c.get_str());
        feed(",");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Verdict check_congruence(const RatFunc& lhs, const RatFunc& rhs, const Modulus& m, const CheckOptions& opt) {
    if (m.expanded.degree() < 1 || m.expanded.leading() != 1)
        throw std::invalid_argument("modulus must be monic and nonconstant");
    Verdict v;
    v.checks = 1;
    RatFunc diff = lhs - rhs;
    if (diff.is_zero()) return v;
    IntPoly num = diff.numerator();
    IntPoly den = diff.denominator();
    IntPoly g = poly_gcd(den, m.expanded);
    DivRem dr = poly_divrem(num, m.expanded);
    if (g.degree() == 0 && dr.rem.is_zero()) return v;

    v.holds = false;
    Witness w;
    for (const auto& [idx, e] : m.irreducible()) {
        int pole = multiplicity(den, idx, e);
        int achieved = pole > 0 ? -pole : multiplicity(num, idx, e);
        if (achieved < e) {
            w.failed_factor = ModulusFactor{idx, 1, e};
            w.achieved = achieved;
            break;
        }
    }
    w.remainder_digest = remainder_digest(dr.rem);
    if (g.degree() > 0) w.gcd_obstruction = g;
    if (opt.keep_remainder) w.remainder = dr.rem;
    v.witness = std::move(w);
    return v;
}

Verdict check_congruence(const CycloFrac& lhs, const CycloFrac& rhs, const Modulus& m, const CheckOptions& opt) {
    CycloFrac diff = lhs - rhs;
    std::optional<std::pair<long, int>> first_bad;
    for (const auto& [idx, e] : m.irreducible()) {
        int got = diff.valuation(idx, e);
        if (got < e) {
            first_bad = {idx, got};
            break;
        }
    }
    Verdict v = check_congruence(diff.to_ratfunc(), RatFunc(), m, opt);
    if (v.holds != !first_bad.has_value())
        throw std::logic_error("valuation and remainder routes disagree modulo " + m.to_string());
    if (first_bad && v.witness && v.witness->failed_factor.index != first_bad->first)
        throw std::logic_error("valuation and remainder routes blame different factors");
    return v;
}

std::string to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::DoubleSum: return "double_sum";
        case CaseKind::TripleSum: return "triple_sum";
        case CaseKind::SingleSum: return "single_sum";
        case CaseKind::Specialization: return "specialization";
        case CaseKind::Padic: return "padic";
        case CaseKind::Crt: return "crt";
    }
    return "?";
}

CaseKind case_kind_from_string(std::string_view s) {
    for (CaseKind k : {CaseKind::DoubleSum, CaseKind::TripleSum, CaseKind::SingleSum, CaseKind::Specialization,
                       CaseKind::Padic, CaseKind::Crt})
        if (to_string(k) == s) return k;
    throw CaseFileError("unknown case kind '" + std::string(s) + "'");
}

std::string TermRef::to_string() const { return id ? term_info(*id).name : source; }

CaseValues evaluate_case(const CaseSpec& c) {
    const CaseParams& p = c.params;
    if (!c.theorem.empty()) check_constraints(theorem_constraints(c.theorem), p, c.theorem);
    CaseValues out;
    FactoredGenerator lhs = generator(c.lhs, p);
    switch (c.kind) {
        case CaseKind::DoubleSum:
        case CaseKind::TripleSum: {
            if (p.n < 1) throw ConstraintViolation("n >= 1 required for a convolution sum");
            auto terms = values(eval_range(lhs, p.n));
            out.terms += p.n;
            auto table = table_of(terms);
            out.lhs = c.kind == CaseKind::DoubleSum ? double_sum(table, p.n) : triple_sum(table, p.n);
            break;
        }
        case CaseKind::SingleSum: {
            long upper = eval_bound(c.lhs_upper, p);
            out.terms += std::max(upper + 1, 0L);
            out.lhs = plain_sum(values(eval_range(lhs, upper + 1)));
            break;
        }
        default: throw std::invalid_argument("evaluate_case: not a summation case");
    }
    CycloFrac rhs = c.rhs.prefactor.empty() ? CycloFrac(1) : generator(c.rhs.prefactor, p)(0).result();
    if (!c.rhs.inner.empty()) {
        long upper = eval_bound(c.rhs.upper, p);
        out.terms += std::max(upper + 1, 0L);
        rhs *= plain_sum(values(eval_range(generator(c.rhs.inner, p), upper + 1))).pow(c.rhs.power);
    }
    out.rhs = rhs;
    return out;
}

Verdict verify_case(const CaseSpec& c, const CheckOptions& opt) {
    CaseValues v = evaluate_case(c);
    return check_congruence(v.lhs, v.rhs, parse_modulus(c.modulus, c.params), opt);
}

std::vector<long> default_samples(long n) { return {1, 2, 3, n + 1, n + 2}; }

namespace {

enum class Shape { Single, Triple, Pointwise };

struct LemmaShape {
    Shape shape;
    TermId lhs;
    std::optional<TermId> inner;
    std::optional<TermId> pre;
    const char* exact_param;                       // parameter fixed at exact points
    std::vector<long> (*exact_points)(long n);     // its exponents
    const char* sample_param;                      // parameter swept by samples
    long (*scale)(long n);                         // sample j gives q^{scale * j}
    const char* sample_modulus;                    // empty: samples feed the exact points
};

const LemmaShape& lemma_shape(std::string_view name) {
    static const auto pm2n = [](long n) { return std::vector<long>{2 * n, -2 * n}; };
    static const auto pmn = [](long n) { return std::vector<long>{n, -n}; };
    static const auto just_n = [](long n) { return std::vector<long>{n}; };
    static const auto none = [](long) { return std::vector<long>{}; };
    static const std::map<std::string, LemmaShape, std::less<>> table{
        {"lem2_2",
         {Shape::Single, TermId::Lem2_2Lhs, TermId::Lem2_2Rhs, TermId::Lem2_2Pre, "a", +pm2n, "a",
          +[](long) { return 2L; }, "phi(n,-)"}},
        {"lem3_1",
         {Shape::Single, TermId::Lem3_1Lhs, TermId::Lem3_1Rhs, TermId::Lem3_1Pre, "a", +pm2n, "a",
          +[](long) { return 2L; }, "phi(n,-)"}},
        {"lem5_1",
         {Shape::Pointwise, TermId::Lem5_1Lhs, TermId::Lem5_1Rhs, std::nullopt, "a", +none, "a",
          +[](long) { return 1L; }, "phi(n)"}},
        {"lem6_5",
         {Shape::Triple, TermId::Lem6_5Z, std::nullopt, TermId::Lem6_5Pre, "a", +pmn, "a",
          +[](long n) { return n; }, "phi(n)"}},
        {"lem6_6",
         {Shape::Triple, TermId::Lem6_5Z, std::nullopt, TermId::Lem6_6Pre, "b", +just_n, "a",
          +[](long) { return 1L; }, ""}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UnknownTerm("unknown parametric lemma '" + std::string(name) + "'");
    return it->second;
}

std::string spec_text(const char* param, long e) { return std::string(param) + "=q^" + std::to_string(e); }

// One specialisation: the lemma's sides, optionally with the pole screen
// against `mod`. Returns false when the sample was skipped.
bool run_instance(const LemmaShape& s, const CaseParams& p, const Modulus* mod, const std::string& label,
                  Verdict& out, const CheckOptions& opt) {
    std::vector<long> idx = mod ? irreducible_indices(*mod) : std::vector<long>{};
    auto skip = [&](const std::string& why) {
        ++out.skipped;
        out.notes.push_back(label + " skipped: " + why);
        return false;
    };
    auto decide = [&](const CycloFrac& l, const CycloFrac& r, const std::string& what) {
        if (mod) {
            merge_failure(out, check_congruence(l, r, *mod, opt), what);
        } else {
            Verdict v;
            v.checks = 1;
            if (!(l == r)) {
                v.holds = false;
                Witness w;
                w.remainder_digest = remainder_digest((l - r).to_ratfunc().numerator());
                v.witness = std::move(w);
            }
            merge_failure(out, std::move(v), what);
        }
    };
    try {
        if (s.shape == Shape::Pointwise) {
            FactoredGenerator lg = builtin_factored(s.lhs, p);
            FactoredGenerator rg = builtin_factored(*s.inner, p);
            long m = (p.n - p.r) / p.d;
            bool any = false;
            for (long k = 0; k <= m; ++k) {
                TermBuilder l, r;
                try {
                    l = lg(k);
                    r = rg(k);
                } catch (const DegenerateSpecialization& e) {
                    skip(std::string(e.what()) + " at k=" + std::to_string(k));
                    continue;
                }
                auto pole = l.parametric_pole(idx);
                if (!pole) pole = r.parametric_pole(idx);
                if (pole) {
                    skip(*pole + " has a modulus factor at k=" + std::to_string(k));
                    continue;
                }
                decide(l.result(), r.result(), label + " k=" + std::to_string(k));
                any = true;
            }
            return any;
        }
        long count = s.shape == Shape::Single ? (p.n - p.r) / p.d + 1 : p.n;
        auto lhs_terms = eval_range(builtin_factored(s.lhs, p), count);
        std::vector<TermBuilder> inner_terms, pre_terms;
        if (s.inner) inner_terms = eval_range(builtin_factored(*s.inner, p), (p.n - p.r) / p.d + 1);
        if (s.pre) pre_terms = eval_range(builtin_factored(*s.pre, p), 1);
        if (mod) {
            for (const auto* v : {&lhs_terms, &inner_terms, &pre_terms})
                if (auto pole = pole_in(*v, idx)) return skip(*pole + " has a modulus factor");
        }
        CycloFrac lhs = s.shape == Shape::Single ? plain_sum(values(lhs_terms))
                                                 : triple_sum(table_of(values(lhs_terms)), p.n);
        CycloFrac rhs = pre_terms.empty() ? CycloFrac(1) : pre_terms[0].result();
        if (s.inner) rhs *= plain_sum(values(inner_terms));
        decide(lhs, rhs, label);
        return true;
    } catch (const DegenerateSpecialization& e) {
        return skip(e.what());
    }
}

}  // namespace

Verdict verify_specialization(const CaseSpec& c, const CheckOptions& opt) {
    const LemmaShape& s = lemma_shape(c.lemma);
    const CaseParams& base = c.params;
    check_constraints(theorem_constraints(c.lemma), base, c.lemma);
    std::vector<long> samples = c.samples.empty() ? default_samples(base.n) : c.samples;
    Verdict out;

    auto with = [&](std::initializer_list<std::pair<const char*, long>> kv) {
        CaseParams p = base;
        for (const auto& [name, v] : kv) p.extra[name] = v;
        return p;
    };

    if (std::string_view(s.sample_modulus).empty()) {
        // Exact points in one parameter, swept over samples of the other.
        for (long j : samples)
            for (long e : s.exact_points(base.n)) {
                long a = s.scale(base.n) * j;
                std::string label = spec_text(s.sample_param, a) + ", " + spec_text(s.exact_param, e);
                run_instance(s, with({{s.sample_param, a}, {s.exact_param, e}}), nullptr, label, out, opt);
            }
        return out;
    }

    for (long e : s.exact_points(base.n))
        run_instance(s, with({{s.exact_param, e}}), nullptr, spec_text(s.exact_param, e), out, opt);
    for (long j : samples) {
        CaseParams p = with({{s.sample_param, s.scale(base.n) * j}});
        Modulus mod = parse_modulus(s.sample_modulus, p);
        run_instance(s, p, &mod, spec_text(s.sample_param, s.scale(base.n) * j) + " mod " + mod.to_string(), out,
                     opt);
    }
    return out;
}

namespace {

RatFunc qp(long e) {
    return e >= 0 ? RatFunc(IntPoly::monomial(1, static_cast<std::size_t>(e)))
                  : RatFunc(IntPoly{1}, IntPoly::monomial(1, static_cast<std::size_t>(-e)));
}

}  // namespace

Verdict check_crt_identities(long n, long a_exp, long b_exp) {
    if (n < 1) throw std::invalid_argument("check_crt_identities needs n >= 1");
    Verdict out;
    const RatFunc one(1), qn = qp(n);
    auto unit_den = [](const RatFunc& a, const RatFunc& b) { return (a - b) * (RatFunc(1) - a * b); };
    auto record = [&](bool ok, const std::string& what) {
        ++out.checks;
        if (!ok) {
            out.holds = false;
            out.notes.push_back("failed: " + what);
        }
    };

    // (b-q^n)(ab-1-a^2+aq^n) = (a-b)(1-ab) where (1-aq^n)(a-q^n) vanishes.
    {
        RatFunc b = qp(b_exp);
        for (long s : {n, -n}) {
            RatFunc a = qp(s);
            std::string what = "first relation at a=q^" + std::to_string(s) + ", b=q^" + std::to_string(b_exp);
            if (unit_den(a, b).is_zero()) {
                ++out.skipped;
                out.notes.push_back(what + " skipped: (a-b)(1-ab) vanishes");
                continue;
            }
            record((b - qn) * (a * b - one - a * a + a * qn) == unit_den(a, b), what);
        }
    }
    // (1-aq^n)(a-q^n) = (a-b)(1-ab) at b = q^n.
    {
        RatFunc a = qp(a_exp), b = qn;
        std::string what = "second relation at a=q^" + std::to_string(a_exp) + ", b=q^" + std::to_string(n);
        if (unit_den(a, b).is_zero()) {
            ++out.skipped;
            out.notes.push_back(what + " skipped: (a-b)(1-ab) vanishes");
        } else {
            record((one - a * qn) * (a - qn) == unit_den(a, b), what);
        }
    }
    // (1-q^n)(1+a^2-a-aq^n) = (1-a)^2 + (1-aq^n)(a-q^n).
    {
        RatFunc a = qp(a_exp);
        record((one - qn) * (one + a * a - a - a * qn) == (one - a) * (one - a) + (one - a * qn) * (a - qn),
               "closing identity at a=q^" + std::to_string(a_exp));
    }
    return out;
}

ProbeResult probe(const CaseSpec& c, int max_exponent) {
    CaseValues v = evaluate_case(c);
    Modulus m = parse_modulus(c.modulus, c.params);
    CycloFrac diff = v.lhs - v.rhs;
    ProbeResult out;
    for (const auto& [idx, e] : m.irreducible()) {
        int got = diff.valuation(idx, max_exponent);
        out.entries.push_back({idx, e, got});
        if (got < 0) out.denominator_coprime = false;
    }
    return out;
}

}  // namespace qcong

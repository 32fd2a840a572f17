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

#include "qcong/suites.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <tuple>

#include "qcong/errors.hpp"
#include "qcong/padic.hpp"

namespace qcong {

namespace {

using Triple = std::tuple<long, long, long>;  // n, d, r
using Pair = std::pair<long, long>;           // n, d

const std::vector<long> kOddN = {3, 5, 7, 9, 11, 13, 15};
const std::vector<Triple> kTriples = {{5, 3, 2}, {7, 3, 1}, {7, 4, 3}, {9, 4, 1}, {11, 3, 2}, {11, 4, 3}};
const std::vector<Pair> kCubicPairs = {{7, 3}, {13, 3}, {5, 4}, {9, 4}, {13, 4}};
const std::vector<Pair> kQuarticPairs = {{4, 3}, {7, 3}, {10, 3}, {5, 4}, {9, 4}};

long to_long(std::string_view s, std::string_view what) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw CaseFileError("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::string id_of(std::string_view prefix, const CaseParams& p, bool with_d, bool with_r) {
    std::string s = std::string(prefix) + ".n" + std::to_string(p.n);
    if (with_d) s += ".d" + std::to_string(p.d);
    if (with_r) s += ".r" + std::to_string(p.r);
    return s;
}

CaseSpec summation(std::string theorem, CaseKind kind, long n, long d, long r, TermId lhs, TermId pre,
                   std::optional<TermId> inner, std::string upper, int power, std::string modulus) {
    CaseSpec c;
    c.kind = kind;
    c.theorem = std::move(theorem);
    c.params.n = n;
    c.params.d = d;
    c.params.r = r;
    c.lhs.id = lhs;
    c.rhs.prefactor.id = pre;
    if (inner) {
        c.rhs.inner.id = *inner;
        c.rhs.upper = std::move(upper);
        c.rhs.power = power;
    }
    c.modulus = std::move(modulus);
    return c;
}

// n values: the override if given, else the defaults.
std::vector<long> pick(const std::vector<long>& defaults, const SuiteOptions& opt) {
    return opt.n.empty() ? defaults : opt.n;
}

// (n, d, r) triples: with d and r overridden, one per n; otherwise the
// defaults filtered by the n override.
std::vector<Triple> pick(const std::vector<Triple>& defaults, const SuiteOptions& opt) {
    auto d = opt.params.find("d"), r = opt.params.find("r");
    std::vector<Triple> out;
    if (d != opt.params.end() && r != opt.params.end()) {
        std::vector<long> ns = opt.n;
        if (ns.empty())
            for (const auto& [n, dd, rr] : defaults) ns.push_back(n);
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (long n : ns) out.emplace_back(n, d->second, r->second);
        return out;
    }
    for (const auto& t : defaults)
        if (opt.n.empty() || std::count(opt.n.begin(), opt.n.end(), std::get<0>(t))) out.push_back(t);
    return out;
}

std::vector<Pair> pick(const std::vector<Pair>& defaults, const SuiteOptions& opt) {
    auto d = opt.params.find("d");
    std::vector<Pair> out;
    if (d != opt.params.end()) {
        std::vector<long> ns = opt.n;
        if (ns.empty())
            for (const auto& [n, dd] : defaults) ns.push_back(n);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (long n : ns) out.emplace_back(n, d->second);
        return out;
    }
    for (const auto& t : defaults)
        if (opt.n.empty() || std::count(opt.n.begin(), opt.n.end(), t.first)) out.push_back(t);
    return out;
}

void suite_thm1_12(std::vector<CaseSpec>& out, const SuiteOptions& opt, bool cubic) {
    for (long n : pick(kOddN, opt)) {
        CaseSpec c = cubic ? summation("thm1_2", CaseKind::DoubleSum, n, 2, 1, TermId::Thm1_2Lhs, TermId::Thm1_2Pre,
                                       TermId::Thm1_2Rhs, "(n-1)/2", 2, "phi(n,-)^4 * phi(n)^2")
                           : summation("thm1_1", CaseKind::DoubleSum, n, 2, 1, TermId::Thm1_1Lhs, TermId::Thm1_1Pre,
                                       TermId::Thm1_1Rhs, "(n-1)/2", 2, "phi(n,-)^3 * phi(n)^2");
        c.id = id_of(c.theorem, c.params, false, false);
        out.push_back(std::move(c));
    }
}

void suite_thm1_34(std::vector<CaseSpec>& out, const SuiteOptions& opt, bool cubic) {
    for (const auto& [n, d, r] : pick(kTriples, opt)) {
        CaseSpec c = cubic ? summation("thm1_4", CaseKind::DoubleSum, n, d, r, TermId::Thm1_4Lhs, TermId::Thm1_4Pre,
                                       TermId::Thm1_4Rhs, "(n-r)/d", 2, "phi(n,-)^3 * phi(n)^2")
                           : summation("thm1_3", CaseKind::DoubleSum, n, d, r, TermId::Thm1_3Lhs, TermId::Thm1_3Pre,
                                       TermId::Thm1_3Rhs, "(n-r)/d", 2, "phi(n,-)^2 * phi(n)^2");
        c.id = id_of(c.theorem, c.params, true, true);
        out.push_back(std::move(c));
    }
}

void suite_thm6_13(std::vector<CaseSpec>& out, const SuiteOptions& opt, bool quadratic) {
    for (const auto& [n, d] : pick(kCubicPairs, opt)) {
        CaseSpec c = quadratic
                         ? summation("thm6_3", CaseKind::TripleSum, n, d, 1, TermId::Thm6_3Lhs, TermId::Thm6_3Pre,
                                     TermId::Thm6_3Rhs, "(n-1)/d", 3, "phi(n,-)^2 * phi(n)^2")
                         : summation("thm6_1", CaseKind::TripleSum, n, d, 1, TermId::Thm6_1Lhs, TermId::Thm6_1Pre,
                                     TermId::Thm6_1Rhs, "(n-1)/d", 3, "phi(n,-)^3 * phi(n)^2");
        c.id = id_of(c.theorem, c.params, true, false);
        out.push_back(std::move(c));
    }
}

void suite_thm6_4(std::vector<CaseSpec>& out, const SuiteOptions& opt) {
    for (const auto& [n, d] : pick(kQuarticPairs, opt)) {
        CaseSpec c = summation("thm6_4", CaseKind::TripleSum, n, d, 1, TermId::Thm6_4Lhs, TermId::Thm6_4Pre,
                               std::nullopt, "", 1, "[n] * phi(n)^3");
        c.id = id_of("thm6_4", c.params, true, false);
        out.push_back(std::move(c));
    }
    if (opt.params.count("d")) return;
    const std::pair<const char*, long> cors[] = {{"cor6_7", 3}, {"cor6_8", 4}};
    for (const auto& [name, d] : cors) {
        std::vector<long> defaults = d == 3 ? std::vector<long>{7, 13} : std::vector<long>{5, 13};
        for (long n : pick(defaults, opt)) {
            if (n % d != 1) continue;
            bool three = d == 3;
            CaseSpec c = summation(name, CaseKind::TripleSum, n, d, 1, three ? TermId::Cor6_7Lhs : TermId::Cor6_8Lhs,
                                   three ? TermId::Cor6_7Pre : TermId::Cor6_8Pre, std::nullopt, "", 1,
                                   "[n] * phi(n)^3");
            c.id = id_of(name, c.params, false, false);
            out.push_back(std::move(c));
        }
    }
}

void suite_cited(std::vector<CaseSpec>& out, const SuiteOptions& opt) {
    for (long n : pick({3, 5, 7}, opt)) {
        CaseSpec single = summation("eq1_1", CaseKind::SingleSum, n, 2, 1, TermId::Eq1_1Lhs, TermId::Eq1_1Pre,
                                    std::nullopt, "", 1, "[n] * phi(n)^2");
        single.lhs_upper = "(n-1)/2";
        single.id = id_of("eq1_1", single.params, false, false);
        out.push_back(std::move(single));
    }
    for (long n : pick({3, 5, 7}, opt)) {
        CaseSpec dbl = summation("eq1_2", CaseKind::DoubleSum, n, 2, 1, TermId::Eq1_2Lhs, TermId::Eq1_2Pre,
                                 std::nullopt, "", 1, "[n] * phi(n)^2");
        dbl.id = id_of("eq1_2", dbl.params, false, false);
        out.push_back(std::move(dbl));
    }
    for (const auto& [n, d, r] : pick(kTriples, opt)) {
        if (r >= n) continue;
        for (bool cubic : {false, true}) {
            CaseSpec c = cubic ? summation("eq1_8", CaseKind::SingleSum, n, d, r, TermId::Eq1_8Lhs, TermId::Eq1_8Pre,
                                           TermId::Eq1_8Rhs, "(n-r)/d", 1, "phi(n,-)^3 * phi(n)^2")
                               : summation("eq1_7", CaseKind::SingleSum, n, d, r, TermId::Eq1_7Lhs, TermId::Eq1_7Pre,
                                           TermId::Eq1_7Rhs, "(n-r)/d", 1, "phi(n,-)^3 * phi(n)^2");
            c.lhs_upper = "(n-r)/d";
            c.id = id_of(c.theorem, c.params, true, true);
            out.push_back(std::move(c));
        }
    }
}

std::vector<long> claim_primes(const ClaimInfo& info) {
    if (info.residue) return {5, 13, 17};
    return {3, 5, 7, 11, 13};
}

void suite_padic(std::vector<CaseSpec>& out, const SuiteOptions& opt) {
    for (const auto& info : all_claims()) {
        for (long p : pick(claim_primes(info), opt)) {
            if (info.residue && p % info.residue->second != info.residue->first) continue;
            CaseSpec c;
            c.kind = CaseKind::Padic;
            c.claim = info.id;
            c.params.n = p;
            c.id = info.id + ".p" + std::to_string(p);
            out.push_back(std::move(c));
        }
    }
}

CaseSpec lemma_case(const char* lemma, long n, long d, long r, std::map<std::string, long> extra = {}) {
    CaseSpec c;
    c.kind = CaseKind::Specialization;
    c.lemma = lemma;
    c.theorem = lemma;
    c.params.n = n;
    c.params.d = d;
    c.params.r = r;
    c.params.extra = std::move(extra);
    c.id = id_of(lemma, c.params, true, r != 1);
    return c;
}

void suite_lemmas(std::vector<CaseSpec>& out, const SuiteOptions& opt) {
    for (const char* lemma : {"lem2_2", "lem3_1", "lem5_1"})
        for (const auto& [n, d, r] : pick(kTriples, opt))
            if (r < n) out.push_back(lemma_case(lemma, n, d, r));
    for (const auto& [n, d] : pick(kQuarticPairs, opt)) {
        for (long b : {3L, 2 * n}) {
            CaseSpec c = lemma_case("lem6_5", n, d, 1, {{"b", b}});
            c.id += ".b" + std::to_string(b);
            out.push_back(std::move(c));
        }
        out.push_back(lemma_case("lem6_6", n, d, 1));
    }
    for (long n : pick({3, 5, 7}, opt))
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b) {
                CaseSpec c;
                c.kind = CaseKind::Crt;
                c.params.n = n;
                c.params.extra = {{"a", a}, {"b", b}};
                c.id = "crt.n" + std::to_string(n) + ".a" + std::to_string(a) + ".b" + std::to_string(b);
                out.push_back(std::move(c));
            }
}

using Builder = std::function<void(std::vector<CaseSpec>&, const SuiteOptions&)>;

const std::vector<std::pair<SuiteInfo, Builder>>& table() {
    static const std::vector<std::pair<SuiteInfo, Builder>> t = {
        {{"thm1_1", "double sums, modulus phi(n,-)^3 phi(n)^2, n = 3..15 odd"},
         [](auto& o, const auto& s) { suite_thm1_12(o, s, false); }},
        {{"thm1_2", "double sums, modulus phi(n,-)^4 phi(n)^2, n = 3..15 odd"},
         [](auto& o, const auto& s) { suite_thm1_12(o, s, true); }},
        {{"thm1_3", "double sums with parameters d, r, modulus phi(n,-)^2 phi(n)^2"},
         [](auto& o, const auto& s) { suite_thm1_34(o, s, false); }},
        {{"thm1_4", "double sums with parameters d, r, modulus phi(n,-)^3 phi(n)^2"},
         [](auto& o, const auto& s) { suite_thm1_34(o, s, true); }},
        {{"thm6_1", "triple sums, modulus phi(n,-)^3 phi(n)^2"},
         [](auto& o, const auto& s) { suite_thm6_13(o, s, false); }},
        {{"thm6_3", "triple sums, modulus phi(n,-)^2 phi(n)^2"},
         [](auto& o, const auto& s) { suite_thm6_13(o, s, true); }},
        {{"thm6_4", "quartic triple sums modulo [n] phi(n)^3, with the d = 3 and d = 4 instances"},
         suite_thm6_4},
        {{"cited", "earlier single and double sum congruences"}, suite_cited},
        {{"padic", "classical p-adic congruences over their primes"}, suite_padic},
        {{"lemmas", "parametric specialisations and the CRT identities"}, suite_lemmas},
    };
    return t;
}

}  // namespace

const std::vector<SuiteInfo>& all_suites() {
    static const std::vector<SuiteInfo> v = [] {
        std::vector<SuiteInfo> out;
        for (const auto& [info, b] : table()) out.push_back(info);
        out.push_back({"all", "every suite above"});
        return out;
    }();
    return v;
}

std::vector<CaseSpec> build_suite(std::string_view name, const SuiteOptions& opt) {
    std::vector<CaseSpec> out;
    bool found = false;
    for (const auto& [info, build] : table()) {
        if (name == "all" || name == info.name) {
            build(out, opt);
            found = true;
        }
    }
    if (!found) throw CaseFileError("unknown suite '" + std::string(name) + "'");
    for (auto& c : out) {
        std::map<std::string, long> extras;
        for (const auto& [k, v] : opt.params)
            if (k != "d" && k != "r") extras[k] = v;
        if (c.kind != CaseKind::Crt && c.kind != CaseKind::Padic) apply_params(c, extras);
    }
    return out;
}

std::vector<long> parse_n_list(std::string_view text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(to_long(text.substr(pos, comma - pos), "n value"));
        pos = comma + 1;
    }
    return out;
}

std::map<std::string, long> parse_param_list(std::string_view text) {
    std::map<std::string, long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw CaseFileError("bad parameter '" + std::string(item) + "', expected name=value");
        std::string name(item.substr(0, eq));
        if (name == "n") throw CaseFileError("use --n to set n");
        out[name] = to_long(item.substr(eq + 1), "parameter value");
        pos = comma + 1;
    }
    return out;
}

void apply_params(CaseSpec& c, const std::map<std::string, long>& params) {
    for (const auto& [k, v] : params) {
        if (k == "d")
            c.params.d = v;
        else if (k == "r")
            c.params.r = v;
        else
            c.params.extra[k] = v;
    }
}

std::vector<CaseSpec> expand_n(const CaseSpec& c, const std::vector<long>& ns) {
    std::vector<CaseSpec> out;
    for (long n : ns) {
        CaseSpec copy = c;
        copy.params.n = n;
        // Rename an existing ".n<old>" component rather than stacking another.
        std::string old = ".n" + std::to_string(c.params.n);
        std::size_t at = copy.id.find(old);
        bool whole = at != std::string::npos && (at + old.size() == copy.id.size() || copy.id[at + old.size()] == '.');
        if (whole)
            copy.id.replace(at, old.size(), ".n" + std::to_string(n));
        else
            copy.id += ".n" + std::to_string(n);
        out.push_back(std::move(copy));
    }
    return out;
}

}  // namespace qcong

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

#include "qcong/casefile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

class Reader {
   public:
    explicit Reader(std::string_view origin) : origin_(origin) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw CaseFileError(origin_ + ":" + std::to_string(line_) + ": " + what);
    }

    long integer(const std::string& v) const {
        long out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size()) fail("expected an integer, got '" + v + "'");
        return out;
    }

    std::vector<long> integer_list(const std::string& v) const {
        std::vector<long> out;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(integer(trim(item)));
        return out;
    }

    TermId term(const std::string& v) const {
        auto id = term_from_name(v);
        if (!id) fail("unknown term '" + v + "'");
        return *id;
    }

    void set_ref(TermRef& ref, const std::string& key, const std::string& v, bool is_source) const {
        if (!ref.empty()) fail("'" + key + "' given twice for one side");
        if (is_source)
            ref.source = v;
        else
            ref.id = term(v);
    }

    std::vector<CaseSpec> parse(std::string_view text) {
        std::vector<CaseSpec> cases;
        std::string section;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_;
            std::size_t hash = raw.find('#');
            std::string line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') fail("unterminated section header");
                section = trim(std::string_view(line).substr(1, line.size() - 2));
                if (section == "case") {
                    cases.emplace_back();
                } else if (section != "lhs" && section != "rhs" && section != "modulus") {
                    fail("unknown section [" + section + "]");
                }
                if (cases.empty()) fail("[" + section + "] before [case]");
                continue;
            }
            if (cases.empty()) fail("key outside a [case] block");
            std::size_t eq = line.find('=');
            if (eq == std::string::npos) fail("expected 'key = value'");
            std::string key = trim(std::string_view(line).substr(0, eq));
            std::string value = trim(std::string_view(line).substr(eq + 1));
            if (key.empty()) fail("empty key");
            assign(cases.back(), section, key, value);
        }
        for (const auto& c : cases) validate_case(c);
        return cases;
    }

   private:
    void assign(CaseSpec& c, const std::string& section, const std::string& key, const std::string& v) {
        if (section == "case") {
            if (key == "id") {
                c.id = v;
            } else if (key == "kind") {
                try {
                    c.kind = case_kind_from_string(v);
                } catch (const CaseFileError& e) {
                    fail(e.what());
                }
            } else if (key == "theorem") {
                if (!has_theorem_constraints(v)) fail("unknown theorem '" + v + "'");
                c.theorem = v;
            } else if (key == "n") {
                c.params.n = integer(v);
            } else if (key == "d") {
                c.params.d = integer(v);
            } else if (key == "r") {
                c.params.r = integer(v);
            } else if (key == "a" || key == "b") {
                c.params.extra[key] = integer(v);
            } else if (key.starts_with("extra.") && key.size() > 6) {
                c.params.extra[key.substr(6)] = integer(v);
            } else if (key == "notes") {
                c.notes = v;
            } else if (key == "lemma") {
                c.lemma = v;
            } else if (key == "samples") {
                c.samples = integer_list(v);
            } else if (key == "claim") {
                c.claim = v;
            } else if (key == "exponent") {
                c.exponent = static_cast<int>(integer(v));
            } else if (key == "sum") {
                try {
                    c.sum_kind = case_kind_from_string(v);
                } catch (const CaseFileError& e) {
                    fail(e.what());
                }
                if (c.sum_kind != CaseKind::DoubleSum && c.sum_kind != CaseKind::TripleSum &&
                    c.sum_kind != CaseKind::SingleSum)
                    fail("sum must be double_sum, triple_sum or single_sum");
            } else if (key == "target_q") {
                long t = integer(v);
                if (t != 1 && t != -1) fail("target_q must be 1 or -1");
                c.target_q = static_cast<int>(t);
            } else {
                fail("unknown key '" + key + "' in [case]");
            }
        } else if (section == "lhs") {
            if (key == "term" || key == "source")
                set_ref(c.lhs, key, v, key == "source");
            else if (key == "upper")
                c.lhs_upper = v;
            else
                fail("unknown key '" + key + "' in [lhs]");
        } else if (section == "rhs") {
            if (key == "prefactor" || key == "prefactor_source")
                set_ref(c.rhs.prefactor, key, v, key == "prefactor_source");
            else if (key == "inner" || key == "inner_source")
                set_ref(c.rhs.inner, key, v, key == "inner_source");
            else if (key == "upper")
                c.rhs.upper = v;
            else if (key == "power")
                c.rhs.power = static_cast<int>(integer(v));
            else
                fail("unknown key '" + key + "' in [rhs]");
        } else if (section == "modulus") {
            if (key != "expr") fail("unknown key '" + key + "' in [modulus]");
            c.modulus = v;
        }
    }

    std::string origin_;
    int line_ = 0;
};

void put_ref(std::ostringstream& os, const TermRef& ref, const char* term_key, const char* source_key) {
    if (ref.id)
        os << term_key << " = " << term_info(*ref.id).name << "\n";
    else if (!ref.source.empty())
        os << source_key << " = " << ref.source << "\n";
}

}  // namespace

void validate_case(const CaseSpec& c) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw CaseFileError("case '" + c.id + "': " + what);
    };
    need(!c.id.empty(), "missing id");
    switch (c.kind) {
        case CaseKind::SingleSum: need(!c.lhs_upper.empty(), "single_sum needs [lhs] upper"); [[fallthrough]];
        case CaseKind::DoubleSum:
        case CaseKind::TripleSum:
            need(!c.lhs.empty(), "missing [lhs] term");
            need(!c.modulus.empty(), "missing [modulus] expr");
            need(c.rhs.inner.empty() || !c.rhs.upper.empty(), "[rhs] inner needs upper");
            need(c.rhs.power >= 1, "[rhs] power must be positive");
            break;
        case CaseKind::Specialization: need(!c.lemma.empty(), "specialization needs a lemma"); break;
        case CaseKind::Padic:
            need(!c.claim.empty() || (c.target_q && !c.lhs.empty() && !c.modulus.empty()),
                 "padic needs a claim, or a q-case with target_q");
            break;
        case CaseKind::Crt:
            need(c.params.extra.count("a") && c.params.extra.count("b"), "crt needs a and b exponents");
            break;
    }
}

std::vector<CaseSpec> parse_case_file(std::string_view text, std::string_view origin) {
    return Reader(origin).parse(text);
}

std::vector<CaseSpec> load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CaseFileError("cannot open case file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_case_file(ss.str(), path);
}

std::string format_case(const CaseSpec& c) {
    std::ostringstream os;
    os << "[case]\nid = " << c.id << "\nkind = " << to_string(c.kind) << "\n";
    if (!c.theorem.empty()) os << "theorem = " << c.theorem << "\n";
    os << "n = " << c.params.n << "\nd = " << c.params.d << "\nr = " << c.params.r << "\n";
    for (const auto& [name, v] : c.params.extra)
        os << (name == "a" || name == "b" ? name : "extra." + name) << " = " << v << "\n";
    if (!c.lemma.empty()) os << "lemma = " << c.lemma << "\n";
    if (!c.samples.empty()) {
        os << "samples = ";
        for (std::size_t i = 0; i < c.samples.size(); ++i) os << (i ? "," : "") << c.samples[i];
        os << "\n";
    }
    if (!c.claim.empty()) os << "claim = " << c.claim << "\n";
    if (c.exponent) os << "exponent = " << c.exponent << "\n";
    if (c.target_q) os << "target_q = " << *c.target_q << "\n";
    if (c.sum_kind != CaseKind::DoubleSum) os << "sum = " << to_string(c.sum_kind) << "\n";
    if (!c.notes.empty()) os << "notes = " << c.notes << "\n";
    if (!c.lhs.empty() || !c.lhs_upper.empty()) {
        os << "\n[lhs]\n";
        put_ref(os, c.lhs, "term", "source");
        if (!c.lhs_upper.empty()) os << "upper = " << c.lhs_upper << "\n";
    }
    if (!c.rhs.prefactor.empty() || !c.rhs.inner.empty()) {
        os << "\n[rhs]\n";
        put_ref(os, c.rhs.prefactor, "prefactor", "prefactor_source");
        put_ref(os, c.rhs.inner, "inner", "inner_source");
        if (!c.rhs.upper.empty()) os << "upper = " << c.rhs.upper << "\n";
        if (c.rhs.power != 1) os << "power = " << c.rhs.power << "\n";
    }
    if (!c.modulus.empty()) os << "\n[modulus]\nexpr = " << c.modulus << "\n";
    return os.str();
}

bool operator==(const TermRef& a, const TermRef& b) { return a.id == b.id && a.source == b.source; }

bool operator==(const CaseSpec& a, const CaseSpec& b) {
    return a.id == b.id && a.kind == b.kind && a.params.n == b.params.n && a.params.d == b.params.d &&
           a.params.r == b.params.r && a.params.extra == b.params.extra && a.theorem == b.theorem &&
           a.lhs == b.lhs && a.lhs_upper == b.lhs_upper && a.rhs.prefactor == b.rhs.prefactor &&
           a.rhs.inner == b.rhs.inner && a.rhs.upper == b.rhs.upper && a.rhs.power == b.rhs.power &&
           a.modulus == b.modulus && a.notes == b.notes && a.lemma == b.lemma && a.samples == b.samples &&
           a.claim == b.claim && a.exponent == b.exponent && a.target_q == b.target_q &&
           a.sum_kind == b.sum_kind;
}

}  // namespace qcong

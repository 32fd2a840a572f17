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

#include "qcong/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qcong/errors.hpp"
#include "qcong/padic.hpp"
#include "qcong/termlang.hpp"

namespace qcong {

namespace {

using nlohmann::ordered_json;

void run_summation(const CaseSpec& c, const RunOptions& opt, CaseResult& out) {
    CaseValues v = evaluate_case(c);
    Modulus m = parse_modulus(c.modulus, c.params);
    out.modulus = m.to_string();
    out.terms = v.terms;
    Verdict verdict = check_congruence(v.lhs, v.rhs, m, {opt.verbose_witness});
    out.holds = verdict.holds;
    out.witness = verdict.witness;
    out.checks = verdict.checks;
    CycloFrac diff = v.lhs - v.rhs;
    for (const auto& [idx, e] : m.irreducible())
        out.strength.push_back({idx, e, diff.valuation(idx, e + opt.strength_headroom)});
}

void run_padic(const CaseSpec& c, CaseResult& out) {
    PadicClaim claim = c.claim.empty() ? q_to_classical(c, *c.target_q) : make_claim(c.claim, c.params.n);
    if (c.exponent > 0) claim.exponent = c.exponent;
    PadicVerdict v = check_padic(claim);
    out.holds = v.holds;
    out.padic_required = claim.exponent;
    out.padic_achieved = v.achieved;
    out.modulus = std::to_string(claim.p) + "^" + std::to_string(claim.exponent);
    out.checks = 1;
    out.terms = claim.p;
}

void copy_verdict(const Verdict& v, CaseResult& out) {
    out.holds = v.holds;
    out.witness = v.witness;
    out.checks = v.checks;
    out.skipped = v.skipped;
    out.notes = v.notes;
}

std::string strength_text(const CaseResult& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.strength.size(); ++i) {
        const auto& e = r.strength[i];
        os << (i ? " " : "") << "phi(" << e.index << ")^" << e.achieved << "/" << e.required;
    }
    return os.str();
}

ordered_json params_json(const CaseParams& p) {
    ordered_json j;
    j["n"] = p.n;
    j["d"] = p.d;
    j["r"] = p.r;
    for (const auto& [k, v] : p.extra) j[k] = v;
    return j;
}

}  // namespace

CaseResult run_case(const CaseSpec& c, const RunOptions& opt) {
    CaseResult out;
    out.id = c.id;
    out.kind = c.kind;
    out.params = c.params;
    auto start = std::chrono::steady_clock::now();
    try {
        switch (c.kind) {
            case CaseKind::DoubleSum:
            case CaseKind::TripleSum:
            case CaseKind::SingleSum: run_summation(c, opt, out); break;
            case CaseKind::Specialization:
                out.modulus = c.lemma;
                copy_verdict(verify_specialization(c, {opt.verbose_witness}), out);
                break;
            case CaseKind::Padic: run_padic(c, out); break;
            case CaseKind::Crt:
                out.modulus = "crt";
                copy_verdict(check_crt_identities(c.params.n, c.params.extra.at("a"), c.params.extra.at("b")), out);
                break;
        }
    } catch (const std::exception& e) {
        out.holds = false;
        out.error = e.what();
    }
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<CaseResult> run_cases(const std::vector<CaseSpec>& cases, const RunOptions& opt) {
    std::vector<CaseResult> results(cases.size());
    int jobs = std::clamp(opt.jobs, 1, static_cast<int>(std::max<std::size_t>(cases.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) results[i] = run_case(cases[i], opt);
    };
    if (jobs == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::string to_json_line(const CaseResult& r, bool with_timing) {
    ordered_json j;
    j["id"] = r.id;
    j["kind"] = to_string(r.kind);
    j["params"] = params_json(r.params);
    j["modulus"] = r.modulus;
    j["verdict"] = r.error ? "error" : (r.holds ? "holds" : "fails");
    if (r.error) j["error"] = *r.error;
    if (r.kind == CaseKind::Padic && !r.error) {
        ordered_json s;
        s["required"] = r.padic_required;
        s["achieved"] = r.padic_achieved ? ordered_json(*r.padic_achieved) : ordered_json("inf");
        j["strength"] = s;
    } else if (!r.strength.empty()) {
        ordered_json s = ordered_json::array();
        for (const auto& e : r.strength)
            s.push_back({{"phi", e.index}, {"required", e.required}, {"achieved", e.achieved}});
        j["strength"] = s;
    }
    j["checks"] = r.checks;
    j["skipped"] = r.skipped;
    j["terms"] = r.terms;
    if (r.witness) {
        ordered_json w;
        w["failed_factor"] = to_string(r.witness->failed_factor);
        w["achieved"] = r.witness->achieved;
        w["remainder_digest"] = r.witness->remainder_digest;
        if (r.witness->gcd_obstruction) w["gcd_obstruction"] = r.witness->gcd_obstruction->to_string();
        if (r.witness->remainder) w["remainder"] = r.witness->remainder->to_string();
        j["witness"] = w;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (with_timing) j["wall_ms"] = std::round(r.wall_ms * 1000) / 1000;
    return j.dump();
}

std::string summary_json(const std::vector<CaseResult>& results) {
    long passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.holds; });
    long errors = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.error.has_value(); });
    ordered_json j;
    j["summary"] = {{"cases", results.size()},
                    {"passed", passed},
                    {"failed", static_cast<long>(results.size()) - passed - errors},
                    {"errors", errors}};
    return j.dump();
}

void write_report(std::ostream& os, const std::vector<CaseResult>& results, bool with_timing) {
    for (const auto& r : results) os << to_json_line(r, with_timing) << "\n";
    os << summary_json(results) << "\n";
}

std::string human_line(const CaseResult& r, bool verbose_witness) {
    std::ostringstream os;
    os << (r.error ? "ERROR" : r.holds ? "PASS " : "FAIL ") << " " << std::left << std::setw(28) << r.id << " "
       << std::right << std::fixed << std::setprecision(3) << std::setw(8) << r.wall_ms / 1000 << "s";
    if (r.error) {
        os << "  " << *r.error;
        return os.str();
    }
    if (r.kind == CaseKind::Padic) {
        os << "  v_p >= " << r.padic_required << ", achieved "
           << (r.padic_achieved ? std::to_string(*r.padic_achieved) : std::string("inf"));
    } else if (!r.strength.empty()) {
        os << "  " << strength_text(r) << "  terms " << r.terms;
    } else {
        os << "  " << r.checks << " checks, " << r.skipped << " skipped";
    }
    if (r.witness) {
        os << "\n      fails at " << to_string(r.witness->failed_factor) << " (multiplicity " << r.witness->achieved
           << "), remainder " << r.witness->remainder_digest;
        if (r.witness->gcd_obstruction) os << ", denominator shares " << r.witness->gcd_obstruction->to_string();
        if (verbose_witness && r.witness->remainder) os << "\n      remainder " << r.witness->remainder->to_string();
    }
    if (verbose_witness)
        for (const auto& n : r.notes) os << "\n      " << n;
    return os.str();
}

bool all_hold(const std::vector<CaseResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; });
}

}  // namespace qcong

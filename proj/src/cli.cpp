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

#include "qcong/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "CLI11.hpp"
#include "qcong/casefile.hpp"
#include "qcong/errors.hpp"
#include "qcong/padic.hpp"
#include "qcong/report.hpp"
#include "qcong/suites.hpp"

namespace qcong {

namespace {

struct Flags {
    std::string n_list;
    std::string params;
    std::string report;
    int jobs = 1;
    bool verbose_witness = false;
};

int default_jobs() {
    const char* env = std::getenv("QCONG_JOBS");
    if (!env) return 1;
    try {
        return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
        return 1;
    }
}

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--n", f.n_list, "comma-separated n values");
    app->add_option("--params", f.params, "parameter overrides, e.g. d=3,r=1");
    app->add_option("--report", f.report, "write a JSON-lines report to this path");
    app->add_option("--jobs", f.jobs, "worker threads (default $QCONG_JOBS or 1)")->check(CLI::PositiveNumber);
    app->add_flag("--verbose-witness", f.verbose_witness, "print remainders and specialisation notes");
}

int execute(const std::vector<CaseSpec>& cases, const Flags& f, std::ostream& out, std::ostream& err) {
    RunOptions opt;
    opt.jobs = f.jobs;
    opt.verbose_witness = f.verbose_witness;
    std::vector<CaseResult> results = run_cases(cases, opt);
    for (const auto& r : results) out << human_line(r, f.verbose_witness) << "\n";
    long passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.holds; });
    bool errors = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.error.has_value(); });
    out << results.size() << " cases, " << passed << " passed, " << results.size() - passed << " failed\n";
    if (!f.report.empty()) {
        std::ofstream rep(f.report);
        if (!rep) {
            err << "qcong: cannot write report '" << f.report << "'\n";
            return 2;
        }
        write_report(rep, results);
    }
    if (errors) return 2;
    return all_hold(results) ? 0 : 1;
}

std::vector<CaseSpec> load_with_overrides(const std::string& path, const Flags& f) {
    std::vector<CaseSpec> loaded = load_case_file(path);
    std::vector<long> ns = f.n_list.empty() ? std::vector<long>{} : parse_n_list(f.n_list);
    auto params = f.params.empty() ? std::map<std::string, long>{} : parse_param_list(f.params);
    std::vector<CaseSpec> out;
    for (auto& c : loaded) {
        apply_params(c, params);
        if (ns.empty()) {
            out.push_back(c);
        } else {
            for (auto& e : expand_n(c, ns)) out.push_back(std::move(e));
        }
    }
    return out;
}

void print_list(std::ostream& out) {
    out << "suites:\n";
    for (const auto& s : all_suites()) out << "  " << s.name << "  " << s.description << "\n";
    out << "terms:\n";
    for (const auto& t : all_terms()) {
        out << "  " << t.name << "  " << t.description;
        if (!t.extras.empty()) {
            out << " [needs";
            for (const auto& x : t.extras) out << " " << x;
            out << "]";
        }
        out << "\n";
    }
    out << "claims:\n";
    for (const auto& c : all_claims()) {
        out << "  " << c.id << "  mod p^" << c.exponent;
        if (c.residue) out << ", p = " << c.residue->first << " mod " << c.residue->second;
        out << "\n";
    }
    out << "lemmas:\n  lem2_2 lem3_1 lem5_1 lem6_5 lem6_6\n";
}

int print_probe(const std::vector<CaseSpec>& cases, int max_exponent, std::ostream& out) {
    for (const auto& c : cases) {
        out << c.id << ":\n";
        if (c.kind == CaseKind::Padic) {
            PadicClaim claim = c.claim.empty() ? q_to_classical(c, *c.target_q) : make_claim(c.claim, c.params.n);
            PadicVerdict v = check_padic(claim);
            out << "  p = " << claim.p << ", stated exponent " << claim.exponent << ", v_p(lhs - rhs) = "
                << (v.achieved ? std::to_string(*v.achieved) : std::string("inf")) << "\n";
            continue;
        }
        if (c.kind != CaseKind::DoubleSum && c.kind != CaseKind::TripleSum && c.kind != CaseKind::SingleSum)
            throw CaseFileError("probe needs a summation or padic case, got " + to_string(c.kind));
        ProbeResult p = probe(c, max_exponent);
        std::string strongest;
        for (const auto& e : p.entries) {
            out << "  phi(" << e.index << "): stated " << e.required << ", holds to ";
            if (e.achieved >= max_exponent)
                out << ">= " << max_exponent << "\n";
            else
                out << e.achieved << "\n";
            if (e.achieved > 0)
                strongest += (strongest.empty() ? "" : " * ") + std::string("phi(") + std::to_string(e.index) + ")^" +
                             std::to_string(std::min(e.achieved, max_exponent));
        }
        if (!p.denominator_coprime) out << "  denominator shares a factor with the modulus\n";
        out << "  strongest: " << (strongest.empty() ? "1" : strongest) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qcong: exact verification of q-congruences on multiple sums"};
    app.require_subcommand(1);

    Flags verify_flags, suite_flags, probe_flags;
    verify_flags.jobs = suite_flags.jobs = default_jobs();
    std::string verify_path, suite_name, probe_path;
    int max_exponent = 8;

    auto* verify = app.add_subcommand("verify", "run the cases in a case file");
    verify->add_option("file", verify_path, "case file")->required();
    add_common(verify, verify_flags);

    auto* suite = app.add_subcommand("suite", "run a shipped suite");
    suite->add_option("name", suite_name, "suite name (see list)")->required();
    add_common(suite, suite_flags);

    auto* list = app.add_subcommand("list", "print suites, terms and claims");

    auto* prb = app.add_subcommand("probe", "report the strongest modulus exponents that hold");
    prb->add_option("file", probe_path, "case file")->required();
    prb->add_option("--max-exponent", max_exponent, "cap on probed multiplicities")->check(CLI::PositiveNumber);
    prb->add_option("--n", probe_flags.n_list, "comma-separated n values");
    prb->add_option("--params", probe_flags.params, "parameter overrides, e.g. d=3,r=1");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qcong: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*list) {
            print_list(out);
            return 0;
        }
        if (*verify) return execute(load_with_overrides(verify_path, verify_flags), verify_flags, out, err);
        if (*suite) {
            SuiteOptions so;
            if (!suite_flags.n_list.empty()) so.n = parse_n_list(suite_flags.n_list);
            if (!suite_flags.params.empty()) so.params = parse_param_list(suite_flags.params);
            return execute(build_suite(suite_name, so), suite_flags, out, err);
        }
        if (*prb) return print_probe(load_with_overrides(probe_path, probe_flags), max_exponent, out);
    } catch (const std::exception& e) {
        err << "qcong: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qcong

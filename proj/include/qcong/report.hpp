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

#ifndef QCONG_REPORT_HPP
#define QCONG_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcong/checker.hpp"

namespace qcong {

struct RunOptions {
    int jobs = 1;
    bool verbose_witness = false;
    int strength_headroom = 3;  // probe this far past each required exponent
};

struct CaseResult {
    std::string id;
    CaseKind kind = CaseKind::DoubleSum;
    CaseParams params;
    std::string modulus;  // expanded text, or "p^e" for padic cases
    bool holds = false;
    std::optional<std::string> error;

    std::vector<ProbeEntry> strength;  // summation cases
    int padic_required = 0;
    std::optional<long> padic_achieved;  // nullopt with holds: sides equal
    int checks = 0;
    int skipped = 0;
    long terms = 0;
    double wall_ms = 0;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
};

/// Never throws for a bad case; the error lands in the result.
CaseResult run_case(const CaseSpec& c, const RunOptions& opt = {});

/// Results in input order whatever `jobs` is.
std::vector<CaseResult> run_cases(const std::vector<CaseSpec>& cases, const RunOptions& opt = {});

/// One JSON object per line; `summary_json` closes a report.
std::string to_json_line(const CaseResult& r, bool with_timing = true);
std::string summary_json(const std::vector<CaseResult>& results);
void write_report(std::ostream& os, const std::vector<CaseResult>& results, bool with_timing = true);

std::string human_line(const CaseResult& r, bool verbose_witness = false);

bool all_hold(const std::vector<CaseResult>& results);

}  // namespace qcong

#endif  // QCONG_REPORT_HPP

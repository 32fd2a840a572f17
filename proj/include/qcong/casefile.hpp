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

#ifndef QCONG_CASEFILE_HPP
#define QCONG_CASEFILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qcong/checker.hpp"

namespace qcong {

/// Parses case files: `key = value` lines under `[case]`, `[lhs]`, `[rhs]`
/// and `[modulus]` headers; `#` starts a comment. Each `[case]` header opens
/// a new case. Throws CaseFileError naming the line.
std::vector<CaseSpec> parse_case_file(std::string_view text, std::string_view origin = "<input>");

std::vector<CaseSpec> load_case_file(const std::string& path);

/// Text that parse_case_file reads back to an equal case.
std::string format_case(const CaseSpec& c);

/// Checks the per-kind required fields. Throws CaseFileError.
void validate_case(const CaseSpec& c);

bool operator==(const TermRef& a, const TermRef& b);
bool operator==(const CaseSpec& a, const CaseSpec& b);

}  // namespace qcong

#endif  // QCONG_CASEFILE_HPP

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

#ifndef QCONG_SUITES_HPP
#define QCONG_SUITES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/checker.hpp"

namespace qcong {

struct SuiteOptions {
    std::vector<long> n;                  // replaces the default n values when set
    std::map<std::string, long> params;   // d, r, a, b, ...
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

const std::vector<SuiteInfo>& all_suites();

/// Throws CaseFileError for an unknown name.
std::vector<CaseSpec> build_suite(std::string_view name, const SuiteOptions& opt = {});

/// Parses "3,5,7".
std::vector<long> parse_n_list(std::string_view text);
/// Parses "d=3,r=1".
std::map<std::string, long> parse_param_list(std::string_view text);

/// Sets d, r and extras from `params`; n is left alone.
void apply_params(CaseSpec& c, const std::map<std::string, long>& params);

/// One copy of `c` per n. The id gets ".n<value>", replacing the old one.
std::vector<CaseSpec> expand_n(const CaseSpec& c, const std::vector<long>& ns);

}  // namespace qcong

#endif  // QCONG_SUITES_HPP

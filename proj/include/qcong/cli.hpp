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

#ifndef QCONG_CLI_HPP
#define QCONG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qcong {

/// The qcong command line. args excludes the program name. Returns the exit
/// code: 0 iff every executed case holds, 1 on a failing case, 2 on usage,
/// parse or constraint errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcong

#endif  // QCONG_CLI_HPP

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

#include "qcong/sums.hpp"

namespace qcong {

CycloFrac sum_all(std::vector<CycloFrac> terms) { return CycloFrac::sum(terms); }

RatFunc sum_all(std::vector<RatFunc> terms) {
    // Pairwise, so operands stay balanced in size.
    if (terms.empty()) return RatFunc(0);
    while (terms.size() > 1) {
        std::vector<RatFunc> next;
        next.reserve((terms.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return std::move(terms.front());
}

Rational sum_all(std::vector<Rational> terms) {
    Rational acc(0);
    for (const auto& t : terms) acc += t;
    return acc;
}

}  // namespace qcong

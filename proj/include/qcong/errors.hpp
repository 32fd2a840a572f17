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

#ifndef QCONG_ERRORS_HPP
#define QCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcong {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define QCONG_DECLARE_ERROR(Name)          \
    class Name : public Error {            \
       public:                             \
        using Error::Error;                \
    }

QCONG_DECLARE_ERROR(NonMonicDivisor);
QCONG_DECLARE_ERROR(BothZero);
QCONG_DECLARE_ERROR(DivideByZero);
QCONG_DECLARE_ERROR(PoleAtPoint);
QCONG_DECLARE_ERROR(NotExactDivision);
QCONG_DECLARE_ERROR(NonCyclotomicDivisor);
QCONG_DECLARE_ERROR(ConstraintViolation);
QCONG_DECLARE_ERROR(UnboundSymbol);
QCONG_DECLARE_ERROR(NonIntegerExponent);
QCONG_DECLARE_ERROR(UnknownTerm);
QCONG_DECLARE_ERROR(SupportViolation);
QCONG_DECLARE_ERROR(HypothesisViolation);
QCONG_DECLARE_ERROR(DegenerateSpecialization);
QCONG_DECLARE_ERROR(ResidueConditionViolated);
QCONG_DECLARE_ERROR(UnknownClaim);
QCONG_DECLARE_ERROR(CaseFileError);

#undef QCONG_DECLARE_ERROR

/// Parse failure in the term language or a case file, with a 1-based position.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& what, int line, int column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace qcong

#endif  // QCONG_ERRORS_HPP

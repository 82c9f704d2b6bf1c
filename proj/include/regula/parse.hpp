/*
   Copyright 2026 The regula authors

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

#ifndef REGULA_PARSE_HPP
#define REGULA_PARSE_HPP

#include "regula/ratfunc.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regula {

/// Syntax or semantic error in a transfer-function expression.
/// position() is the zero-based byte offset into the input text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          pos_(position) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/**
 * Parse a rational-function expression in s.
 *
 * Grammar: integer literals, the variable s, operators + - * / ^
 * (nonnegative integer exponents), parentheses, unary minus, standard
 * precedence. Rational literals like 3/4 fall out of constant division.
 *
 * Throws parse_error on syntax errors and on division by the zero
 * function (e.g. "1/(s-s)").
 */
RatFunc parse_ratfunc(const std::string& text);

} // namespace regula

#endif // REGULA_PARSE_HPP

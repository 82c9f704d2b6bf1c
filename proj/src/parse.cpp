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

#include "regula/parse.hpp"

#include <cctype>

namespace regula {

namespace {

// Recursive descent over the raw text; no token buffer needed since every
// token is a single character or a digit run.
class Parser {
public:
    explicit Parser(const std::string& text) : t_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != t_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < t_.size() ? t_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw parse_error("division by the zero function", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        while (accept('^')) {
            skip_ws();
            const size_t at = pos_;
            if (pos_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[pos_])))
                throw parse_error("expected nonnegative integer exponent", at);
            long e = 0;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) {
                e = e * 10 + (t_[pos_] - '0');
                if (e > 4096) throw parse_error("exponent too large", at);
                ++pos_;
            }
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    RatFunc atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 's') {
            ++pos_;
            return RatFunc::s();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])))
                digits.push_back(t_[pos_++]);
            return RatFunc(Rat(mpz_class(digits)));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    const std::string& t_;
    size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text) {
    return Parser(text).parse();
}

} // namespace regula

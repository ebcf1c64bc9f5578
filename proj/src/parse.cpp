/*
   Copyright 2026 The layerpoly Authors

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

#include "layerpoly/parse.hpp"

#include "layerpoly/error.hpp"

#include <cctype>
#include <string>

namespace layerpoly {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    Vars vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr() {
        Poly sum(vars_.nvars());
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Poly t = term();
        sum += negate ? -t : t;
        for (;;) {
            if (accept('+')) {
                sum += term();
            } else if (accept('-')) {
                sum -= term();
            } else {
                return sum;
            }
        }
    }

    Poly term() {
        Poly product = power();
        for (;;) {
            if (accept('*')) {
                product *= power();
            } else if (peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                const Poly divisor = power();
                if (!divisor.is_constant() || divisor.is_zero()) {
                    throw ParseError("division by a non-constant or zero expression", at);
                }
                product *= divisor.constant_term().inverse();
            } else {
                const char c = peek();
                if (c != '\0' && (std::isalnum(static_cast<unsigned char>(c)) || c == '(')) {
                    fail("implicit multiplication is not supported; use '*'");
                }
                return product;
            }
        }
    }

    Poly power() {
        bool width_symbol = false;
        Poly base = primary(width_symbol);
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::string digits = integer_literal();
        if (digits.empty()) throw ParseError("exponent must be an integer literal", at);
        if (digits.size() > 6) throw ParseError("exponent too large", at);
        const int e = std::stoi(digits);
        if (negative) {
            if (!width_symbol) throw ParseError("negative exponent is only allowed on the width symbol a", at);
            MultiIndex m(vars_.nvars());
            m[vars_.a()] = -e;
            return Poly::monomial(m);
        }
        return base.pow(static_cast<unsigned>(e));
    }

    std::string integer_literal() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    Poly primary(bool& width_symbol) {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -primary(width_symbol);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string digits = integer_literal();
            if (pos_ < text_.size() && text_[pos_] == '.') fail("floating-point literals are not accepted");
            return Poly::constant(vars_.nvars(), Rational::parse(digits));
        }
        if (c == '.') fail("floating-point literals are not accepted");
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
            if (pos_ < text_.size() && text_[pos_] == '.') fail("floating-point literals are not accepted");
            const std::size_t var = lookup(name, at);
            width_symbol = vars_.width && var == vars_.a();
            return Poly::variable(vars_.nvars(), var);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::size_t lookup(const std::string& name, std::size_t at) const {
        if (name == "y") return vars_.y();
        if (name == "a" && vars_.width) return vars_.a();
        if (name == "x" && vars_.dim == 1) return vars_.x(0);
        if (name.size() > 1 && name[0] == 'x') {
            const std::string idx = name.substr(1);
            bool digits = idx[0] != '0';
            for (const char ch : idx) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
            if (digits && idx.size() < 6) {
                const auto i = static_cast<std::size_t>(std::stoul(idx));
                if (i >= 1 && i <= vars_.dim) return vars_.x(i - 1);
            }
        }
        throw ParseError("unknown variable '" + name + "'", at);
    }
};

} // namespace

Poly parse_poly(std::string_view expr, const Vars& vars) { return Parser(expr, vars).parse(); }

} // namespace layerpoly

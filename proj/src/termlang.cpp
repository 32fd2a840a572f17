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

#include "qcong/termlang.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

#include "qcong/errors.hpp"

namespace qcong {

Form Form::integer(long v) {
    Form f;
    f.kind = Kind::Int;
    f.value = v;
    return f;
}

Form Form::symbol(std::string name) {
    Form f;
    f.kind = Kind::Sym;
    f.name = std::move(name);
    return f;
}

Form Form::unary(Kind kind, Form x) {
    Form f;
    f.kind = kind;
    f.kids.push_back(std::move(x));
    return f;
}

Form Form::binary(Kind kind, Form a, Form b) {
    Form f;
    f.kind = kind;
    f.kids.push_back(std::move(a));
    f.kids.push_back(std::move(b));
    return f;
}

int Form::k_degree() const {
    switch (kind) {
        case Kind::Int: return 0;
        case Kind::Sym: return name == "k" ? 1 : 0;
        case Kind::Neg: return kids[0].k_degree();
        case Kind::Add:
        case Kind::Sub: return std::max(kids[0].k_degree(), kids[1].k_degree());
        case Kind::Mul: return kids[0].k_degree() + kids[1].k_degree();
        case Kind::Div:
            if (kids[1].k_degree() > 0) throw std::domain_error("k may not appear in a divisor");
            return kids[0].k_degree();
        case Kind::Pow: return kids[0].k_degree() * static_cast<int>(value);
    }
    return 0;
}

bool operator==(const Form& a, const Form& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.kids == b.kids;
}

namespace {

int precedence(const Form& f) {
    switch (f.kind) {
        case Form::Kind::Add:
        case Form::Kind::Sub: return 1;
        case Form::Kind::Mul:
        case Form::Kind::Div: return 2;
        case Form::Kind::Neg: return 3;
        case Form::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string wrap(const Form& f, bool parens) { return parens ? "(" + to_string(f) + ")" : to_string(f); }

Rational eval_rational_form(const Form& f, const CaseParams& p, long k) {
    switch (f.kind) {
        case Form::Kind::Int: return Rational(f.value);
        case Form::Kind::Sym: return Rational(f.name == "k" ? k : p.get(f.name));
        case Form::Kind::Neg: return -eval_rational_form(f.kids[0], p, k);
        case Form::Kind::Add: return eval_rational_form(f.kids[0], p, k) + eval_rational_form(f.kids[1], p, k);
        case Form::Kind::Sub: return eval_rational_form(f.kids[0], p, k) - eval_rational_form(f.kids[1], p, k);
        case Form::Kind::Mul: return eval_rational_form(f.kids[0], p, k) * eval_rational_form(f.kids[1], p, k);
        case Form::Kind::Div: {
            Rational den = eval_rational_form(f.kids[1], p, k);
            if (sgn(den) == 0) throw NonIntegerExponent("division by zero in " + to_string(f));
            return eval_rational_form(f.kids[0], p, k) / den;
        }
        case Form::Kind::Pow: {
            Rational b = eval_rational_form(f.kids[0], p, k);
            Rational out(1);
            for (long i = 0; i < f.value; ++i) out *= b;
            return out;
        }
    }
    return Rational(0);
}

}  // namespace

std::string to_string(const Form& f) {
    switch (f.kind) {
        case Form::Kind::Int: return std::to_string(f.value);
        case Form::Kind::Sym: return f.name;
        case Form::Kind::Neg: return "-" + wrap(f.kids[0], precedence(f.kids[0]) < 3);
        case Form::Kind::Pow:
            return wrap(f.kids[0], precedence(f.kids[0]) < 5) + "^" + std::to_string(f.value);
        default: break;
    }
    const char* op = f.kind == Form::Kind::Add   ? " + "
                     : f.kind == Form::Kind::Sub ? " - "
                     : f.kind == Form::Kind::Mul ? "*"
                                                 : "/";
    int pr = precedence(f);
    return wrap(f.kids[0], precedence(f.kids[0]) < pr) + op + wrap(f.kids[1], precedence(f.kids[1]) <= pr);
}

long eval_form(const Form& f, const CaseParams& params, long k) {
    Rational v = eval_rational_form(f, params, k);
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw NonIntegerExponent(to_string(f) + " evaluates to " + v.get_str() + " at " + params.to_string() +
                                 ", k=" + std::to_string(k));
    return v.get_num().get_si();
}

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type = Type::End;
    std::string text;
    long value = 0;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.type = Token::Type::Int;
            t.text = std::string(src.substr(i, j - i));
            auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, t.value);
            if (ec != std::errc()) throw SyntaxError("integer literal out of range", line, col);
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.type = Token::Type::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::string_view("+-*/^()[];,").find(c) != std::string_view::npos) {
            t.type = Token::Type::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

Form scaled(long p, Form f) {
    if (p == 1) return f;
    if (p == -1) return Form::unary(Form::Kind::Neg, std::move(f));
    Form m = Form::binary(Form::Kind::Mul, Form::integer(p < 0 ? -p : p), std::move(f));
    return p < 0 ? Form::unary(Form::Kind::Neg, std::move(m)) : m;
}

void apply_power(std::vector<TermFactor>& group, long p) {
    for (auto& f : group) {
        if (f.kind == TermFactor::Kind::Sign || f.kind == TermFactor::Kind::QPow)
            f.a = scaled(p, std::move(f.a));
        else
            f.power *= p;
    }
}

class Parser {
   public:
    Parser(std::string_view src, std::set<std::string> symbols) : toks_(lex(src)), symbols_(std::move(symbols)) {}

    TermAST parse_term_top() {
        TermAST ast;
        ast.factors = term();
        expect_end();
        std::vector<TermFactor> kept;
        for (auto& f : ast.factors)
            if (!(f.kind == TermFactor::Kind::Const && f.constant == 1)) kept.push_back(std::move(f));
        if (kept.empty()) kept.push_back(TermFactor{});
        ast.factors = std::move(kept);
        return ast;
    }

    Form parse_form_top() {
        Form f = form();
        expect_end();
        return f;
    }

    Modulus parse_modulus_top(const CaseParams& params) {
        std::vector<ModulusFactor> factors;
        std::optional<long> qint;
        while (true) {
            const Token& t = peek();
            if (is_ident("phi")) {
                next();
                expect("(");
                Form m = form();
                int sign = 1;
                if (accept(",")) {
                    if (accept("-")) {
                        sign = -1;
                    } else if (!accept("+")) {
                        fail("expected '+' or '-'");
                    }
                }
                expect(")");
                long e = 1;
                if (accept("^")) e = power_literal();
                if (e < 0) fail("modulus exponents must be positive");
                factors.push_back({eval_form(m, params, 0), sign, static_cast<int>(e)});
            } else if (is_punct("[")) {
                next();
                Form m = form();
                expect("]");
                if (qint) throw SyntaxError("more than one q-integer factor", t.line, t.col);
                qint = eval_form(m, params, 0);
            } else {
                fail("expected phi(...) or [...]");
            }
            if (!accept("*")) break;
        }
        expect_end();
        return modulus_build(std::move(factors), qint);
    }

   private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool is_punct(std::string_view p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.type == Token::Type::Punct && t.text == p;
    }
    bool is_ident(std::string_view p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.type == Token::Type::Ident && t.text == p;
    }
    bool is_int(long v, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.type == Token::Type::Int && t.value == v;
    }
    bool accept(std::string_view p) {
        if (!is_punct(p)) return false;
        next();
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(what + ", found " + found, t.line, t.col);
    }
    void expect(std::string_view p) {
        if (!accept(p)) fail("expected '" + std::string(p) + "'");
    }
    void expect_end() {
        if (peek().type != Token::Type::End) fail("unexpected trailing input");
    }

    long power_literal() {
        bool neg = accept("-");
        const Token& t = peek();
        if (t.type != Token::Type::Int) fail("expected an integer power");
        next();
        if (t.value == 0) throw SyntaxError("zero power", t.line, t.col);
        return neg ? -t.value : t.value;
    }

    Form checked(Form f, int max_degree, const Token& at, const char* what) {
        int deg = 0;
        try {
            deg = f.k_degree();
        } catch (const std::domain_error& e) {
            throw SyntaxError(std::string(what) + ": " + e.what(), at.line, at.col);
        }
        if (deg > max_degree)
            throw SyntaxError(std::string(what) + " has degree " + std::to_string(deg) + " in k, at most " +
                                  std::to_string(max_degree) + " allowed",
                              at.line, at.col);
        return f;
    }

    // Forms.
    Form form() {
        Form lhs = fterm();
        while (is_punct("+") || is_punct("-")) {
            auto kind = next().text == "+" ? Form::Kind::Add : Form::Kind::Sub;
            lhs = Form::binary(kind, std::move(lhs), fterm());
        }
        return lhs;
    }
    Form fterm() {
        Form lhs = funary();
        while (is_punct("*") || is_punct("/")) {
            auto kind = next().text == "*" ? Form::Kind::Mul : Form::Kind::Div;
            lhs = Form::binary(kind, std::move(lhs), funary());
        }
        return lhs;
    }
    Form funary() {
        if (accept("-")) return Form::unary(Form::Kind::Neg, funary());
        Form base = fatom();
        if (accept("^")) {
            const Token& t = peek();
            if (t.type != Token::Type::Int) fail("expected a nonnegative integer exponent");
            next();
            Form p = Form::unary(Form::Kind::Pow, std::move(base));
            p.value = t.value;
            return p;
        }
        return base;
    }
    Form fatom() {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            next();
            return Form::integer(t.value);
        }
        if (t.type == Token::Type::Ident) {
            if (!symbols_.contains(t.text))
                throw UnboundSymbol("unknown symbol '" + t.text + "' at " + std::to_string(t.line) + ":" +
                                    std::to_string(t.col));
            next();
            return Form::symbol(t.text);
        }
        if (accept("(")) {
            Form f = form();
            expect(")");
            return f;
        }
        fail("expected a number, a symbol or '('");
    }

    // Terms.
    std::vector<TermFactor> term() {
        std::vector<TermFactor> out = factor();
        while (is_punct("*") || is_punct("/")) {
            bool divide = next().text == "/";
            std::vector<TermFactor> g = factor();
            if (divide) apply_power(g, -1);
            for (auto& f : g) out.push_back(std::move(f));
        }
        return out;
    }

    TermFactor one_plus() {
        expect_int(1);
        expect("+");
        TermFactor f;
        f.kind = TermFactor::Kind::OnePlus;
        f.a = qpow_body();
        return f;
    }
    void expect_int(long v) {
        if (!is_int(v)) fail("expected " + std::to_string(v));
        next();
    }
    Form qpow_body() {
        if (!is_ident("qpow")) fail("expected 'qpow'");
        next();
        expect("(");
        const Token& at = peek();
        Form f = checked(form(), 2, at, "q-exponent");
        expect(")");
        return f;
    }

    std::vector<TermFactor> factor() {
        std::vector<TermFactor> g;
        bool powerable = true;
        if (is_punct("(") && is_punct("-", 1) && is_int(1, 2) && is_punct(")", 3) && is_punct("^", 4)) {
            for (int i = 0; i < 5; ++i) next();
            const Token& at = peek();
            TermFactor f;
            f.kind = TermFactor::Kind::Sign;
            f.a = checked(fatom(), 1, at, "sign exponent");
            g.push_back(std::move(f));
            powerable = false;
        } else if (is_punct("(") && is_int(1, 1) && is_punct("+", 2) && is_ident("qpow", 3)) {
            next();
            g.push_back(one_plus());
            expect(")");
        } else if (accept("(")) {
            g = term();
            expect(")");
        } else if (is_int(1) && is_punct("+", 1)) {
            g.push_back(one_plus());
        } else if (peek().type == Token::Type::Int) {
            TermFactor f;
            f.kind = TermFactor::Kind::Const;
            f.constant = next().value;
            g.push_back(std::move(f));
        } else if (is_ident("qpow")) {
            TermFactor f;
            f.kind = TermFactor::Kind::QPow;
            f.a = qpow_body();
            g.push_back(std::move(f));
        } else if (is_ident("poch")) {
            next();
            expect("(");
            TermFactor f;
            f.kind = TermFactor::Kind::Poch;
            const Token& a0 = peek();
            f.a = checked(form(), 0, a0, "q-shifted factorial base");
            expect(";");
            const Token& a1 = peek();
            f.step = checked(form(), 0, a1, "q-shifted factorial step");
            expect(";");
            const Token& a2 = peek();
            f.length = checked(form(), 1, a2, "q-shifted factorial length");
            expect(")");
            g.push_back(std::move(f));
        } else if (accept("[")) {
            TermFactor f;
            f.kind = TermFactor::Kind::QInt;
            const Token& at = peek();
            f.a = checked(form(), 1, at, "q-integer argument");
            expect("]");
            if (is_ident("_q2")) {
                next();
                f.square = true;
            }
            g.push_back(std::move(f));
        } else {
            fail("expected a factor");
        }
        if (powerable && accept("^")) apply_power(g, power_literal());
        return g;
    }

    std::vector<Token> toks_;
    std::set<std::string> symbols_;
    std::size_t pos_ = 0;
};

std::string atom_text(const Form& f) {
    bool atom = (f.kind == Form::Kind::Int && f.value >= 0) || f.kind == Form::Kind::Sym;
    return atom ? to_string(f) : "(" + to_string(f) + ")";
}

std::string factor_text(const TermFactor& f) {
    long p = f.power < 0 ? -f.power : f.power;
    std::string suffix = p == 1 ? "" : "^" + std::to_string(p);
    switch (f.kind) {
        case TermFactor::Kind::Sign: return "(-1)^" + atom_text(f.a);
        case TermFactor::Kind::QPow: return "qpow(" + to_string(f.a) + ")";
        case TermFactor::Kind::OnePlus: return "(1+qpow(" + to_string(f.a) + "))" + suffix;
        case TermFactor::Kind::Poch:
            return "poch(" + to_string(f.a) + "; " + to_string(f.step) + "; " + to_string(f.length) + ")" + suffix;
        case TermFactor::Kind::QInt: return "[" + to_string(f.a) + "]" + (f.square ? "_q2" : "") + suffix;
        case TermFactor::Kind::Const: return std::to_string(f.constant) + suffix;
    }
    return {};
}

}  // namespace

TermAST parse_term(std::string_view src, const std::vector<std::string>& extras) {
    std::set<std::string> symbols{"n", "d", "r", "k"};
    symbols.insert(extras.begin(), extras.end());
    return Parser(src, std::move(symbols)).parse_term_top();
}

Form parse_form(std::string_view src, const std::vector<std::string>& extras) {
    std::set<std::string> symbols{"n", "d", "r", "k"};
    symbols.insert(extras.begin(), extras.end());
    return Parser(src, std::move(symbols)).parse_form_top();
}

std::string print_term(const TermAST& ast) {
    std::string out;
    for (std::size_t i = 0; i < ast.factors.size(); ++i) {
        const TermFactor& f = ast.factors[i];
        bool den = f.power < 0;
        if (i == 0)
            out = den ? "1 / " + factor_text(f) : factor_text(f);
        else
            out += (den ? " / " : " * ") + factor_text(f);
    }
    return out;
}

namespace {

bool mentions_extra(const Form& f, const CaseParams& params) {
    if (f.kind == Form::Kind::Sym) return params.extra.count(f.name) > 0;
    for (const auto& kid : f.kids)
        if (mentions_extra(kid, params)) return true;
    return false;
}

bool parametric(const TermFactor& f, const CaseParams& params) {
    return mentions_extra(f.a, params) || mentions_extra(f.step, params) || mentions_extra(f.length, params);
}

}  // namespace

TermBuilder eval_term_factored(const TermAST& ast, const CaseParams& params, long k) {
    TermBuilder b;
    for (const auto& f : ast.factors) {
        bool par = parametric(f, params);
        switch (f.kind) {
            case TermFactor::Kind::Sign:
                b.mul(CycloFrac(eval_form(f.a, params, k) % 2 == 0 ? 1 : -1));
                break;
            case TermFactor::Kind::QPow: b.mul(CycloFrac::qpow(eval_form(f.a, params, k))); break;
            case TermFactor::Kind::OnePlus:
                b.mul(CycloFrac::one_plus_qpow(eval_form(f.a, params, k)), f.power, factor_text(f), par);
                break;
            case TermFactor::Kind::Poch: {
                long base = eval_form(f.a, params, k);
                long step = eval_form(f.step, params, k);
                long len = eval_form(f.length, params, k);
                if (step <= 0) throw ConstraintViolation(factor_text(f) + ": step must be positive");
                if (len < 0)
                    throw ConstraintViolation("q-shifted factorial length " + std::to_string(len) + " is negative");
                b.mul(CycloFrac::poch(base, step, len), f.power, factor_text(f), par);
                break;
            }
            case TermFactor::Kind::QInt:
                b.mul(CycloFrac::qint(eval_form(f.a, params, k), f.square ? 2 : 1), f.power, factor_text(f), par);
                break;
            case TermFactor::Kind::Const: b.mul(CycloFrac(f.constant), f.power, factor_text(f)); break;
        }
    }
    return b;
}

CycloFrac eval_term_cyclo(const TermAST& ast, const CaseParams& params, long k) {
    return eval_term_factored(ast, params, k).result();
}

RatFunc eval_term(const TermAST& ast, const CaseParams& params, long k) {
    return eval_term_cyclo(ast, params, k).to_ratfunc();
}

FactoredGenerator compile_term_factored(TermAST ast, CaseParams params) {
    return [ast = std::move(ast), params = std::move(params)](long k) { return eval_term_factored(ast, params, k); };
}

CycloGenerator compile_term(TermAST ast, CaseParams params) {
    return [ast = std::move(ast), params = std::move(params)](long k) { return eval_term_cyclo(ast, params, k); };
}

Modulus parse_modulus(std::string_view src, const CaseParams& params) {
    std::set<std::string> symbols{"n", "d", "r"};
    for (const auto& [name, v] : params.extra) symbols.insert(name);
    return Parser(src, std::move(symbols)).parse_modulus_top(params);
}

}  // namespace qcong

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "binomap/errors.hpp"
#include "binomap/poly.hpp"

namespace binomap {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id += take();
            return {Tok::Ident, id, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                num += take();
            return {Tok::Number, num, line, col};
        }
        take();
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case ';': return {Tok::Semi, ";", line, col};
            default: throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { advance(); }

    PolynomialSystem run() {
        std::vector<std::vector<std::pair<Mono, Rat>>> raw;
        std::vector<Token> starts;
        while (cur_.kind != Tok::End) {
            starts.push_back(cur_);
            raw.push_back(polynomial());
            expect(Tok::Semi, "';'");
        }
        PolynomialSystem out;
        out.vars = vars_;
        int nv = vars_.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Polynomial poly;
            for (const auto& [mono, coeff] : raw[i]) {
                if (coeff == 0) continue;
                Term t{coeff, ExponentVector(nv, 0)};
                for (auto [var, e] : mono) t.exponents[var] = e;
                poly.push_back(std::move(t));
            }
            if (poly.empty())
                throw parse_error("polynomial collapses to zero after normalization",
                                  starts[i].line, starts[i].column);
            out.equations.push_back(std::move(poly));
        }
        return out;
    }

private:
    using Mono = std::vector<std::pair<int, std::int64_t>>;  // (var, exponent), sorted, nonzero

    // terms in first-occurrence order, duplicate monomials collapsed by
    // coefficient addition
    std::vector<std::pair<Mono, Rat>> polynomial() {
        std::vector<std::pair<Mono, Rat>> terms;
        std::map<Mono, std::size_t> seen;
        int sign = 1;
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            sign = cur_.kind == Tok::Minus ? -1 : 1;
            advance();
        }
        for (;;) {
            auto [mono, coeff] = term();
            auto it = seen.find(mono);
            if (it == seen.end()) {
                seen.emplace(mono, terms.size());
                terms.emplace_back(mono, sign * coeff);
            } else {
                terms[it->second].second += sign * coeff;
            }
            if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
                sign = cur_.kind == Tok::Minus ? -1 : 1;
                advance();
                continue;
            }
            break;
        }
        return terms;
    }

    std::pair<Mono, Rat> term() {
        Rat coeff(1);
        std::map<int, std::int64_t> exps;
        for (;;) {
            factor(coeff, exps);
            if (cur_.kind == Tok::Star) {
                advance();
                continue;
            }
            break;
        }
        Mono mono;
        for (auto [var, e] : exps)
            if (e != 0) mono.emplace_back(var, e);
        return {mono, coeff};
    }

    void factor(Rat& coeff, std::map<int, std::int64_t>& exps) {
        if (cur_.kind == Tok::Number) {
            Int num(cur_.text);
            advance();
            if (cur_.kind == Tok::Slash) {
                advance();
                Token dt = cur_;
                expect_kind(Tok::Number, "denominator");
                Int den(dt.text);
                if (den == 0) throw parse_error("zero denominator", dt.line, dt.column);
                coeff *= Rat(num, den);
            } else {
                coeff *= Rat(num);
            }
            return;
        }
        if (cur_.kind == Tok::Ident) {
            int var = vars_.add(cur_.text);
            advance();
            std::int64_t e = 1;
            if (cur_.kind == Tok::Caret) {
                advance();
                e = exponent();
            }
            exps[var] += e;
            return;
        }
        throw parse_error("expected a coefficient or a variable", cur_.line, cur_.column);
    }

    std::int64_t exponent() {
        bool paren = false;
        if (cur_.kind == Tok::LParen) {
            paren = true;
            advance();
        }
        int sign = 1;
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            sign = cur_.kind == Tok::Minus ? -1 : 1;
            advance();
        }
        Token nt = cur_;
        expect_kind(Tok::Number, "integer exponent");
        if (nt.text.size() > 18) throw parse_error("exponent out of range", nt.line, nt.column);
        std::int64_t v = sign * std::stoll(nt.text);
        if (paren) expect(Tok::RParen, "')'");
        return v;
    }

    void advance() { cur_ = lex_.next(); }
    void expect(Tok k, const char* what) {
        if (cur_.kind != k) throw parse_error(std::string("expected ") + what, cur_.line, cur_.column);
        advance();
    }
    void expect_kind(Tok k, const char* what) { expect(k, what); }

    Lexer lex_;
    Token cur_{Tok::End, "", 1, 1};
    VariableTable vars_;
};

}  // namespace

PolynomialSystem parse_system(const std::string& text) { return Parser(text).run(); }

}  // namespace binomap

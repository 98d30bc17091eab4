#include "vdw/parser.hpp"

#include "vdw/error.hpp"

#include <cctype>
#include <map>

namespace vdw {

namespace {

struct Token {
    enum Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::end, "", start};
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::number, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::plus, "+", start}; return;
            case '-': tok_ = {Token::minus, "-", start}; return;
            case '*': tok_ = {Token::star, "*", start}; return;
            case '/': tok_ = {Token::slash, "/", start}; return;
            case '^': tok_ = {Token::caret, "^", start}; return;
            case '(': tok_ = {Token::lparen, "(", start}; return;
            case ')': tok_ = {Token::rparen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Token::end, "", 0};
};

class Parser {
public:
    Parser(std::string_view src, std::span<const std::string> variables)
        : lex_(src), nvars_(variables.size()) {
        for (std::size_t i = 0; i < variables.size(); ++i) var_index_[variables[i]] = i;
    }

    Poly parse() {
        Poly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::end) throw ParseError("unexpected trailing input", t.pos);
        return p;
    }

private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Token::minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Token::slash) {
                const Token t = lex_.take();
                Poly divisor = factor();
                if (!divisor.is_constant())
                    throw ParseError("division by a non-constant expression", t.pos);
                const Rat c = divisor.constant_term();
                if (c == 0) throw ParseError("division by zero", t.pos);
                acc = acc * Rat(1 / c);
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        bool negate = false;
        while (lex_.peek().kind == Token::plus || lex_.peek().kind == Token::minus) {
            if (lex_.take().kind == Token::minus) negate = !negate;
        }
        Poly p = base();
        if (lex_.peek().kind == Token::caret) {
            const Token caret = lex_.take();
            if (lex_.peek().kind == Token::minus)
                throw ParseError("negative exponent", lex_.peek().pos);
            if (lex_.peek().kind != Token::number)
                throw ParseError("exponent must be an integer literal", caret.pos);
            const Token e = lex_.take();
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", e.pos);
            }
            p = p.pow(static_cast<unsigned>(exp));
        }
        return negate ? -p : p;
    }

    Poly base() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::number: {
                Int v(t.text);
                return Poly::constant(nvars_, Rat(v));
            }
            case Token::ident: {
                auto it = var_index_.find(t.text);
                if (it == var_index_.end())
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Poly::variable(nvars_, it->second);
            }
            case Token::lparen: {
                Poly p = expr();
                const Token close = lex_.take();
                if (close.kind != Token::rparen) throw ParseError("expected ')'", close.pos);
                return p;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    std::size_t nvars_;
    std::map<std::string, std::size_t> var_index_;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> variables) {
    if (variables.empty()) throw Error("parse_poly: at least one variable required");
    return Parser(text, variables).parse();
}

}  // namespace vdw

#include "tmot/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "tmot/error.hpp"

namespace tmot {

namespace {

enum class Tok { integer, ident, plus, minus, times, divide, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string s) {
        out.push_back({k, std::move(s), line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Tok::integer, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Tok::plus, "+"); break;
            case '-': push(Tok::minus, "-"); break;
            case '*': push(Tok::times, "*"); break;
            case '/': push(Tok::divide, "/"); break;
            case '^': push(Tok::caret, "^"); break;
            case '(': push(Tok::lparen, "("); break;
            case ')': push(Tok::rparen, ")"); break;
            default:
                fail_input("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": unexpected character '" + std::string(1, c) + "'");
        }
        ++col;
        ++i;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const ExprContext& ctx) : toks_(std::move(toks)), ctx_(ctx) {}

    SkewPoly parse() {
        SkewPoly r = expr();
        expect(Tok::end, "end of expression");
        return r;
    }

private:
    std::vector<Token> toks_;
    const ExprContext& ctx_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
        fail_input("line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " +
                   msg);
    }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail_at(peek(), "expected " + what);
        take();
    }

    bool starts_atom() const {
        Tok k = peek().kind;
        return k == Tok::integer || k == Tok::ident || k == Tok::lparen;
    }

    SkewPoly expr() {
        SkewPoly r = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Tok op = take().kind;
            SkewPoly t = term();
            r = (op == Tok::plus) ? r + t : r - t;
        }
        return r;
    }

    SkewPoly term() {
        SkewPoly r = factor();
        while (true) {
            if (peek().kind == Tok::times) {
                take();
                r = r * factor();
            } else if (peek().kind == Tok::divide) {
                Token slash = take();
                SkewPoly d = factor();
                if (!d.is_constant()) fail_at(slash, "division requires a constant divisor");
                if (d.is_zero()) fail_at(slash, "division by zero");
                r = r * SkewPoly::constant(ctx_.twist, d.coeff({0, 0}).inverse());
            } else if (starts_atom()) {
                r = r * factor();  // juxtaposition, written order
            } else {
                break;
            }
        }
        return r;
    }

    SkewPoly factor() {
        if (peek().kind == Tok::minus) {
            take();
            return -factor();
        }
        SkewPoly base = atom();
        if (peek().kind == Tok::caret) {
            Token caret = take();
            long e = exponent(caret);
            SkewPoly r = SkewPoly::constant(ctx_.twist, FieldElem::one(ctx_.field));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    long exponent(const Token& caret) {
        bool parens = peek().kind == Tok::lparen;
        if (parens) take();
        if (peek().kind != Tok::integer) fail_at(peek(), "expected a non-negative integer exponent");
        long e = std::stol(take().text);
        if (parens) expect(Tok::rparen, "')'");
        (void)caret;
        return e;
    }

    SkewPoly atom() {
        Token t = peek();
        if (t.kind == Tok::integer) {
            take();
            return SkewPoly::constant(ctx_.twist,
                                      FieldElem::from_int(ctx_.field, std::stol(t.text)));
        }
        if (t.kind == Tok::lparen) {
            take();
            SkewPoly r = expr();
            expect(Tok::rparen, "')'");
            return r;
        }
        if (t.kind == Tok::ident) {
            take();
            if (t.text == "T")
                return SkewPoly::constant(ctx_.twist, FieldElem::theta(ctx_.field));
            if (!ctx_.rho_name.empty() && t.text == ctx_.rho_name)
                return SkewPoly::variable(ctx_.twist, ctx_.field, Var::rho);
            if (!ctx_.sigma_name.empty() && t.text == ctx_.sigma_name)
                return SkewPoly::variable(ctx_.twist, ctx_.field, Var::sigma);
            fail_at(t, "unknown symbol '" + t.text + "' in this context");
        }
        fail_at(t, "expected a number, variable, or '('");
    }
};

}  // namespace

SkewPoly parse_expression(const std::string& text, const ExprContext& ctx) {
    return Parser(tokenize(text), ctx).parse();
}

}  // namespace tmot

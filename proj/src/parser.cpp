#include "lpmln/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

namespace lpmln {
namespace {

enum class Tok { ident, number, colon, arrow, dot, comma, minus, pipe, end };

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t = next_token();
            out.push_back(t);
            if (t.kind == Tok::end) break;
        }
        return out;
    }

private:
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::end;
            return t;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            t.kind = Tok::ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number(t);
            return t;
        }
        switch (c) {
            case ':':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    t.kind = Tok::arrow;
                    t.text = ":-";
                } else {
                    t.kind = Tok::colon;
                    t.text = ":";
                }
                return t;
            case '.': advance(); t.kind = Tok::dot; t.text = "."; return t;
            case ',': advance(); t.kind = Tok::comma; t.text = ","; return t;
            case '-': advance(); t.kind = Tok::minus; t.text = "-"; return t;
            case '|': advance(); t.kind = Tok::pipe; t.text = "|"; return t;
            default:
                throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
        }
    }

    void lex_number(Token& t) {
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                advance();
            }
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            t.text += '.';
            advance();
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            std::string saved = t.text;
            t.text += text_[pos_];
            advance();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                t.text += text_[pos_];
                advance();
            }
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits();
            } else {
                // not an exponent after all; rewind
                while (pos_ > mark) { --pos_; --column_; }
                t.text = saved;
            }
        }
        t.kind = Tok::number;
        t.number = std::strtod(t.text.c_str(), nullptr);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    Program run() {
        Program out;
        while (peek().kind != Tok::end) out.rules.push_back(statement());
        return out;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw ParseError(t.line, t.column, message);
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what);
        take();
    }

    WeightedRule statement() {
        WeightedRule wr;
        wr.weight = weight();
        expect(Tok::colon, "':' after weight");
        wr.rule = rule();
        expect(Tok::dot, "'.' at end of rule");
        return wr;
    }

    Weight weight() {
        if (peek().kind == Tok::ident && peek().text == "alpha") {
            take();
            return Weight::alpha();
        }
        bool negate = false;
        if (peek().kind == Tok::minus) {
            take();
            negate = true;
        }
        if (peek().kind != Tok::number) fail("expected weight ('alpha' or a real number)");
        Token t = take();
        return Weight::soft(negate ? -t.number : t.number);
    }

    Rule rule() {
        Rule r;
        if (peek().kind == Tok::arrow) {
            take();
            r = body_into(r);
            return r;
        }
        r.head = head();
        if (peek().kind == Tok::arrow) {
            take();
            r = body_into(r);
        }
        return r;
    }

    LiteralSet head() {
        LiteralSet out;
        out.insert(literal());
        for (;;) {
            if (peek().kind == Tok::pipe) {
                take();
                out.insert(literal());
            } else if (peek().kind == Tok::ident && peek().text == "v" && starts_literal(peek(1))) {
                take();
                out.insert(literal());
            } else {
                break;
            }
        }
        return out;
    }

    Rule body_into(Rule r) {
        if (peek().kind == Tok::dot) return r;  // empty body, printer compatibility
        for (;;) {
            if (peek().kind == Tok::ident && peek().text == "not") {
                take();
                r.neg_body.insert(literal());
            } else {
                r.pos_body.insert(literal());
            }
            if (peek().kind != Tok::comma) break;
            take();
        }
        return r;
    }

    static bool starts_literal(const Token& t) {
        return t.kind == Tok::minus || (t.kind == Tok::ident && t.text != "not");
    }

    Literal literal() {
        bool negated = false;
        if (peek().kind == Tok::minus) {
            take();
            negated = true;
        }
        if (peek().kind != Tok::ident) fail("expected atom name");
        const Token& t = peek();
        if (t.text == "not") fail("'not' is reserved and cannot be an atom name");
        if (t.text.size() >= 2 && t.text[0] == '_' && t.text[1] == '_')
            fail("atom names starting with '__' are reserved");
        std::string atom = take().text;
        return negated ? Literal::negative(std::move(atom)) : Literal::positive(std::move(atom));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).run(); }

Literal parse_literal(std::string_view text) {
    bool negated = false;
    std::string_view rest = text;
    if (!rest.empty() && rest.front() == '-') {
        negated = true;
        rest.remove_prefix(1);
    }
    if (rest.empty()) throw ParseError(1, 1, "empty literal");
    for (std::size_t i = 0; i < rest.size(); ++i) {
        char c = rest[i];
        bool ok = (i == 0) ? (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
                           : (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError(1, static_cast<int>(i + 1), "invalid atom name");
    }
    if (rest == "not") throw ParseError(1, 1, "'not' is reserved and cannot be an atom name");
    if (rest.size() >= 2 && rest[0] == '_' && rest[1] == '_')
        throw ParseError(1, 1, "atom names starting with '__' are reserved");
    std::string atom(rest);
    return negated ? Literal::negative(std::move(atom)) : Literal::positive(std::move(atom));
}

}  // namespace lpmln

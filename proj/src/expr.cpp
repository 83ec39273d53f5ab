#include "braidcover/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace braidcover {

namespace {

struct Token {
    enum class Kind { S, D, DR, D2, Beta, Int, LParen, RParen, Caret, Comma, End };
    Kind kind;
    long long value = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            std::size_t start = i_;
            if (i_ >= text_.size()) {
                out.push_back({Token::Kind::End, 0, start});
                return out;
            }
            char ch = text_[i_];
            if (ch == '(') { ++i_; out.push_back({Token::Kind::LParen, 0, start}); continue; }
            if (ch == ')') { ++i_; out.push_back({Token::Kind::RParen, 0, start}); continue; }
            if (ch == '^') { ++i_; out.push_back({Token::Kind::Caret, 0, start}); continue; }
            if (ch == ',') { ++i_; out.push_back({Token::Kind::Comma, 0, start}); continue; }
            bool after_caret = !out.empty() && out.back().kind == Token::Kind::Caret;
            if (std::isdigit(static_cast<unsigned char>(ch)) ||
                (after_caret && (ch == '-' || ch == '+'))) {
                out.push_back(lex_int(start));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                out.push_back(lex_keyword(start));
                continue;
            }
            throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
    }

private:
    void skip_space() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    Token lex_int(std::size_t start) {
        long long sign = 1;
        if (text_[i_] == '-' || text_[i_] == '+') {
            if (text_[i_] == '-') sign = -1;
            ++i_;
        }
        if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
            throw ParseError("expected digits after sign", i_);
        long long v = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            v = v * 10 + (text_[i_] - '0');
            if (v > std::numeric_limits<int>::max()) throw ParseError("integer literal too large", start);
            ++i_;
        }
        return {Token::Kind::Int, sign * v, start};
    }

    Token lex_keyword(std::size_t start) {
        std::size_t j = i_;
        while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
        std::string word = text_.substr(i_, j - i_);
        // "D2" is a keyword even though it mixes a letter and a digit.
        if (word == "D" && j < text_.size() && text_[j] == '2') {
            i_ = j + 1;
            return {Token::Kind::D2, 0, start};
        }
        i_ = j;
        if (word == "s") return {Token::Kind::S, 0, start};
        if (word == "d") return {Token::Kind::D, 0, start};
        if (word == "dR") return {Token::Kind::DR, 0, start};
        if (word == "beta") return {Token::Kind::Beta, 0, start};
        throw ParseError("unknown symbol '" + word + "'", start);
    }

    const std::string& text_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    BraidExpr run() {
        BraidExpr e = parse_concat();
        expect(Token::Kind::End, "trailing input after expression");
        return e;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& advance() { return tokens_[i_++]; }

    const Token& expect(Token::Kind k, const char* what) {
        if (peek().kind != k) throw ParseError(what, peek().pos);
        return advance();
    }

    bool at_atom_start() const {
        switch (peek().kind) {
            case Token::Kind::S:
            case Token::Kind::D:
            case Token::Kind::DR:
            case Token::Kind::D2:
            case Token::Kind::Beta:
            case Token::Kind::LParen:
                return true;
            default:
                return false;
        }
    }

    BraidExpr parse_concat() {
        if (!at_atom_start()) throw ParseError("expected expression", peek().pos);
        std::vector<BraidExpr> parts;
        while (at_atom_start()) parts.push_back(parse_term());
        if (parts.size() == 1) return std::move(parts.front());
        BraidExpr e;
        e.kind = BraidExpr::Kind::Concat;
        e.children = std::move(parts);
        return e;
    }

    BraidExpr parse_term() {
        BraidExpr atom = parse_atom();
        if (peek().kind != Token::Kind::Caret) return atom;
        advance();
        const Token& t = expect(Token::Kind::Int, "expected integer exponent after '^'");
        BraidExpr e;
        e.kind = BraidExpr::Kind::Power;
        e.a = static_cast<int>(t.value);
        e.children.push_back(std::move(atom));
        return e;
    }

    BraidExpr parse_atom() {
        const Token& t = advance();
        BraidExpr e;
        switch (t.kind) {
            case Token::Kind::S: {
                const Token& idx = expect(Token::Kind::Int, "expected generator index after 's'");
                if (idx.value < 1) throw ParseError("generator index must be at least 1", idx.pos);
                e.kind = BraidExpr::Kind::Generator;
                e.a = static_cast<int>(idx.value);
                return e;
            }
            case Token::Kind::D:
                e.kind = BraidExpr::Kind::Delta;
                return e;
            case Token::Kind::DR:
                e.kind = BraidExpr::Kind::DeltaRev;
                return e;
            case Token::Kind::D2:
                e.kind = BraidExpr::Kind::FullTwist;
                return e;
            case Token::Kind::Beta: {
                expect(Token::Kind::LParen, "expected '(' after 'beta'");
                const Token& n = expect(Token::Kind::Int, "expected strand count in beta(n,m)");
                expect(Token::Kind::Comma, "expected ',' in beta(n,m)");
                const Token& m = expect(Token::Kind::Int, "expected twist count in beta(n,m)");
                expect(Token::Kind::RParen, "expected ')' closing beta(n,m)");
                if (n.value < 1) throw ParseError("beta needs n >= 1", n.pos);
                if (m.value < 1) throw ParseError("beta needs m >= 1", m.pos);
                e.kind = BraidExpr::Kind::Family;
                e.a = static_cast<int>(n.value);
                e.b = static_cast<int>(m.value);
                return e;
            }
            case Token::Kind::LParen: {
                BraidExpr inner = parse_concat();
                expect(Token::Kind::RParen, "expected ')'");
                return inner;
            }
            default:
                throw ParseError("expected atom", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t i_ = 0;
};

// Parentheses are not part of the AST, so render re-inserts them exactly
// where reparsing needs them: around a power base that is a group or another
// power (term := atom ["^" int] binds one exponent), and around a nested
// group inside a concatenation.
void render_into(const BraidExpr& e, std::string& out) {
    switch (e.kind) {
        case BraidExpr::Kind::Generator:
            out += "s" + std::to_string(e.a);
            return;
        case BraidExpr::Kind::Delta:
            out += "d";
            return;
        case BraidExpr::Kind::DeltaRev:
            out += "dR";
            return;
        case BraidExpr::Kind::FullTwist:
            out += "D2";
            return;
        case BraidExpr::Kind::Family:
            out += "beta(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
            return;
        case BraidExpr::Kind::Power: {
            if (e.children.size() != 1) throw InternalError("power node without base");
            const BraidExpr& base = e.children.front();
            bool wrap = base.kind == BraidExpr::Kind::Power || base.kind == BraidExpr::Kind::Concat;
            if (wrap) out += "(";
            render_into(base, out);
            if (wrap) out += ")";
            out += "^" + std::to_string(e.a);
            return;
        }
        case BraidExpr::Kind::Concat: {
            bool first = true;
            for (const BraidExpr& c : e.children) {
                if (!first) out += " ";
                first = false;
                bool wrap = c.kind == BraidExpr::Kind::Concat;
                if (wrap) out += "(";
                render_into(c, out);
                if (wrap) out += ")";
            }
            return;
        }
    }
    throw InternalError("unhandled expression kind");
}

} // namespace

BraidExpr parse_expr(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

std::string render(const BraidExpr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

BraidWord flatten(const BraidExpr& e, int strands) {
    switch (e.kind) {
        case BraidExpr::Kind::Generator: {
            if (e.a > strands - 1)
                throw DomainError("generator s" + std::to_string(e.a) + " needs at least " +
                                  std::to_string(e.a + 1) + " strands");
            return BraidWord(strands, {e.a});
        }
        case BraidExpr::Kind::Delta:
            return delta(strands);
        case BraidExpr::Kind::DeltaRev:
            return delta_rev(strands);
        case BraidExpr::Kind::FullTwist:
            return full_twist(strands);
        case BraidExpr::Kind::Family:
            if (e.a != strands)
                throw DomainError("beta(" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  ") used with strand count " + std::to_string(strands));
            return beta_family(e.a, e.b);
        case BraidExpr::Kind::Concat: {
            BraidWord w = BraidWord::identity(strands);
            for (const BraidExpr& c : e.children) w = compose(w, flatten(c, strands));
            return w;
        }
        case BraidExpr::Kind::Power: {
            if (e.children.size() != 1) throw InternalError("power node without base");
            BraidWord base = flatten(e.children.front(), strands);
            if (e.a < 0) base = base.inverse();
            int reps = e.a < 0 ? -e.a : e.a;
            BraidWord w = BraidWord::identity(strands);
            for (int r = 0; r < reps; ++r) w = compose(w, base);
            return w;
        }
    }
    throw InternalError("unhandled expression kind");
}

} // namespace braidcover

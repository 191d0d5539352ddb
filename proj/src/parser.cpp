#include "jetpoisson/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace jetpoisson {

namespace {

constexpr unsigned kMaxExponent = 64;
constexpr unsigned kMaxJetIndexEntry = 32;

struct Token {
    enum class Kind { Number, Ident, Punct, End };
    Kind kind;
    std::string text;       // digits or identifier base
    std::string subscript;  // letters after '_' on an identifier
    char punct = 0;
    size_t pos = 0;  // 1-based
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < text.size()) {
        char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        size_t pos = k + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            out.push_back({Token::Kind::Number, std::string(text.substr(start, k - start)), "", 0, pos});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = k;
            while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) ++k;
            Token t{Token::Kind::Ident, std::string(text.substr(start, k - start)), "", 0, pos};
            if (k + 1 < text.size() && text[k] == '_' &&
                std::isalpha(static_cast<unsigned char>(text[k + 1]))) {
                ++k;  // '_'
                size_t sstart = k;
                while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
                t.subscript = std::string(text.substr(sstart, k - sstart));
            }
            out.push_back(std::move(t));
            continue;
        }
        if (std::string("+-*^/()[],").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, c), "", c, pos});
            ++k;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({Token::Kind::End, "", "", 0, text.size() + 1});
    return out;
}

class Parser {
public:
    Parser(const Signature& sig, std::string_view text, bool allow_d)
        : sig_(sig), tokens_(lex(text)), allow_d_(allow_d) {}

    DiffOperator parse_scalar_toplevel() {
        DiffOperator p = parse_expr();
        expect_end();
        return p;
    }

    DiffOperator parse_operator_toplevel() {
        if (is_punct('[')) {
            DiffOperator p = parse_matrix();
            expect_end();
            return p;
        }
        return parse_scalar_toplevel();
    }

private:
    const Signature& sig_;
    std::vector<Token> tokens_;
    size_t at_ = 0;
    bool allow_d_;

    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }
    bool is_punct(char c) const { return peek().kind == Token::Kind::Punct && peek().punct == c; }

    void expect_punct(char c, const char* what) {
        if (!is_punct(c)) throw ParseError(std::string("expected '") + c + "' " + what, peek().pos);
        next();
    }

    void expect_end() {
        if (peek().kind != Token::Kind::End) throw ParseError("unexpected trailing input", peek().pos);
    }

    unsigned parse_nat(unsigned cap, const char* what) {
        if (peek().kind != Token::Kind::Number)
            throw ParseError(std::string("expected a natural number for ") + what, peek().pos);
        const Token& t = next();
        if (t.text.size() > 9 || static_cast<unsigned long>(std::stoul(t.text)) > cap)
            throw ParseError(std::string(what) + " too large", t.pos);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    DiffOperator parse_matrix() {
        size_t open = peek().pos;
        expect_punct('[', "to open a matrix");
        std::vector<std::vector<DiffOperator>> rows;
        while (true) {
            expect_punct('[', "to open a matrix row");
            std::vector<DiffOperator> row;
            row.push_back(parse_expr());
            while (is_punct(',')) {
                next();
                row.push_back(parse_expr());
            }
            expect_punct(']', "to close the matrix row");
            rows.push_back(std::move(row));
            if (is_punct(',')) {
                next();
                continue;
            }
            break;
        }
        expect_punct(']', "to close the matrix");
        size_t cols = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != cols) throw ParseError("matrix rows have different lengths", open);
        DiffOperator p(static_cast<unsigned>(rows.size()), static_cast<unsigned>(cols));
        for (unsigned r = 0; r < rows.size(); ++r)
            for (unsigned c = 0; c < cols; ++c)
                for (const auto& [i, coeff] : rows[r][c].entry(0, 0)) p.add_term(r, c, i, coeff);
        return p;
    }

    DiffOperator parse_expr() {
        bool negate = false;
        if (is_punct('+') || is_punct('-')) negate = next().punct == '-';
        DiffOperator acc = parse_term();
        if (negate) acc = -acc;
        while (is_punct('+') || is_punct('-')) {
            bool minus = next().punct == '-';
            DiffOperator t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    DiffOperator parse_term() {
        DiffOperator acc = parse_factor();
        while (is_punct('*')) {
            next();
            acc = compose(acc, parse_factor());
        }
        return acc;
    }

    DiffOperator parse_factor() {
        DiffOperator base = parse_atom();
        if (is_punct('^')) {
            next();
            unsigned e = parse_nat(kMaxExponent, "exponent");
            DiffOperator acc = DiffOperator::identity(1);
            for (unsigned k = 0; k < e; ++k) acc = compose(acc, base);
            return acc;
        }
        return base;
    }

    DiffOperator parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                next();
                std::string num = t.text, den = "1";
                if (is_punct('/')) {
                    size_t slash = peek().pos;
                    next();
                    if (peek().kind != Token::Kind::Number)
                        throw ParseError("expected a denominator after '/'", peek().pos);
                    den = next().text;
                    if (den.find_first_not_of('0') == std::string::npos)
                        throw ParseError("zero denominator", slash);
                }
                return DiffOperator::scalar(DiffFunction::constant(rational_from_digits(num, den)));
            }
            case Token::Kind::Ident:
                return parse_named_atom();
            case Token::Kind::Punct:
                if (t.punct == '(') {
                    next();
                    DiffOperator inner = parse_expr();
                    expect_punct(')', "to close the parenthesis");
                    return inner;
                }
                throw ParseError(std::string("unexpected '") + t.punct + "'", t.pos);
            case Token::Kind::End:
                throw ParseError("unexpected end of input", t.pos);
        }
        throw ParseError("unexpected token", t.pos);
    }

    DiffOperator parse_named_atom() {
        const Token t = next();
        // derivative symbols: D (one independent variable) or D1..Dm
        bool d_shaped = t.text[0] == 'D' &&
                        std::all_of(t.text.begin() + 1, t.text.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (d_shaped) {
            if (!allow_d_)
                throw ParseError("derivative symbols are not allowed in a scalar expression", t.pos);
            if (!t.subscript.empty()) throw ParseError("derivative symbols take no subscript", t.pos);
            if (t.text == "D") {
                if (sig_.m() > 1)
                    throw ParseError("'D' is ambiguous here; write D1..D" + std::to_string(sig_.m()), t.pos);
                return DiffOperator::d_slot(0);
            }
            unsigned k = static_cast<unsigned>(std::stoul(t.text.substr(1)));
            if (k == 0 || k > sig_.m())
                throw ParseError("derivative index out of range (have D1..D" + std::to_string(sig_.m()) + ")",
                                 t.pos);
            return DiffOperator::d_slot(k - 1);
        }
        if (auto slot = sig_.find_indep(t.text)) {
            if (!t.subscript.empty())
                throw ParseError("subscripts are not allowed on independent variables", t.pos);
            if (is_punct('['))
                throw ParseError("jet indices are not allowed on independent variables", peek().pos);
            return DiffOperator::scalar(DiffFunction::indep(*slot));
        }
        auto dep = sig_.find_dep(t.text);
        if (!dep) throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        MultiIndex index;
        if (!t.subscript.empty()) {
            for (char c : t.subscript) {
                auto slot = sig_.find_indep(std::string(1, c));
                if (!slot)
                    throw ParseError(std::string("unknown jet subscript '") + c +
                                         "' (no independent variable with that single-letter name)",
                                     t.pos);
                index = index.plus(*slot);
            }
        } else if (is_punct('[')) {
            next();
            std::vector<unsigned> exps;
            if (is_punct(']')) throw ParseError("empty jet index", peek().pos);
            exps.push_back(parse_nat(kMaxJetIndexEntry, "jet index entry"));
            while (is_punct(',')) {
                next();
                exps.push_back(parse_nat(kMaxJetIndexEntry, "jet index entry"));
            }
            expect_punct(']', "to close the jet index");
            if (exps.size() != sig_.m())
                throw ParseError("jet index needs exactly " + std::to_string(sig_.m()) +
                                     " entries (one per independent variable)",
                                 t.pos);
            index = MultiIndex::from_dense(exps);
        }
        return DiffOperator::scalar(DiffFunction::jet(*dep, index));
    }
};

}  // namespace

DiffFunction parse_expression(const Signature& sig, std::string_view text) {
    Parser p(sig, text, /*allow_d=*/false);
    DiffOperator op = p.parse_scalar_toplevel();
    const auto& entry = op.entry(0, 0);
    if (entry.empty()) return {};
    // allow_d=false means every term sits at multi-index zero
    return entry.front().second;
}

DiffOperator parse_operator(const Signature& sig, std::string_view text) {
    Parser p(sig, text, /*allow_d=*/true);
    return p.parse_operator_toplevel();
}

}  // namespace jetpoisson

// Recursive-descent parser for human-readable ket expressions, plus the
// inverse formatter.
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := unary (('*'|'/') unary | unary-if-juxtaposed)*
//   unary   := ('+'|'-') unary | primary
//   primary := number | 'i' | 'sqrt' '(' expr ')' | ket | '(' expr ')'
//   ket     := '|' digit+ '>'
//
// Whitespace is insignificant. Scalars and ket terms combine under +, -, *, /
// with the obvious typing rules (no scalar+ket sums, no ket*ket products,
// no division by kets); juxtaposition of a scalar and a ket multiplies, so
// "0.6|0> + 0.8i|1>" and "(|00>+|11>)/sqrt(2)" both work. Every rejection
// carries the byte offset of the offending token.
//
// Local dimensions default to 1 + the largest digit seen at each position
// (floored at 2); pass dims_hint to fix them explicitly. Digits only, so
// local dimensions up to 10.

#pragma once

#include <cctype>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "entgeo/state.hpp"

namespace entgeo {

namespace ket_detail {

struct Token {
    enum class Kind { Number, Imag, Sqrt, Ket, Plus, Minus, Star, Slash, LParen, RParen, End };
    Kind kind;
    double number = 0.0;
    std::string ket;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::Kind::End, 0.0, {}, start};

        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::Plus, 0.0, {}, start};
            case '-': ++pos_; return {Token::Kind::Minus, 0.0, {}, start};
            case '*': ++pos_; return {Token::Kind::Star, 0.0, {}, start};
            case '/': ++pos_; return {Token::Kind::Slash, 0.0, {}, start};
            case '(': ++pos_; return {Token::Kind::LParen, 0.0, {}, start};
            case ')': ++pos_; return {Token::Kind::RParen, 0.0, {}, start};
            case '|': return lex_ket(start);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_word(start);
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

private:
    Token lex_ket(std::size_t start) {
        ++pos_;  // consume '|'
        std::string label;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            label += text_[pos_++];
        if (label.empty())
            throw SyntaxError("ket needs at least one digit", pos_);
        if (pos_ >= text_.size() || text_[pos_] != '>')
            throw SyntaxError("expected '>' to close ket", pos_);
        ++pos_;
        return {Token::Kind::Ket, 0.0, std::move(label), start};
    }

    Token lex_number(std::size_t start) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t e = pos_ + 1;
            if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
            if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
                pos_ = e;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        const std::string piece(text_.substr(start, pos_ - start));
        if (piece == ".")
            throw SyntaxError("malformed number", start);
        return {Token::Kind::Number, std::stod(piece), {}, start};
    }

    Token lex_word(std::size_t start) {
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word == "i") return {Token::Kind::Imag, 0.0, {}, start};
        if (word == "sqrt") return {Token::Kind::Sqrt, 0.0, {}, start};
        throw SyntaxError("unknown symbol '" + std::string(word) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// A partially evaluated expression: either a plain scalar or a linear
// combination of ket labels.
template <typename Scalar>
struct Value {
    bool is_state = false;
    std::complex<Scalar> scalar{};
    std::map<std::string, std::complex<Scalar>> terms;
    std::size_t ket_len = 0;
    std::size_t first_ket_pos = 0;
};

template <typename Scalar>
class Parser {
    using Tok = Token::Kind;
    using Val = Value<Scalar>;

public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Val parse() {
        Val v = parse_expr();
        if (cur_.kind != Tok::End)
            throw SyntaxError("unexpected trailing input", cur_.pos);
        return v;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Val parse_expr() {
        Val v = parse_product();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            const std::size_t op_pos = cur_.pos;
            advance();
            Val r = parse_product();
            if (minus) negate(r);
            v = add(std::move(v), std::move(r), op_pos);
        }
        return v;
    }

    Val parse_product() {
        Val v = parse_unary();
        for (;;) {
            if (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
                const bool divide = cur_.kind == Tok::Slash;
                const std::size_t op_pos = cur_.pos;
                advance();
                Val r = parse_unary();
                v = divide ? div(std::move(v), std::move(r), op_pos)
                           : mul(std::move(v), std::move(r), op_pos);
            } else if (cur_.kind == Tok::Ket || cur_.kind == Tok::Imag ||
                       cur_.kind == Tok::Sqrt || cur_.kind == Tok::LParen) {
                const std::size_t op_pos = cur_.pos;
                Val r = parse_unary();
                v = mul(std::move(v), std::move(r), op_pos);
            } else {
                break;
            }
        }
        return v;
    }

    Val parse_unary() {
        if (cur_.kind == Tok::Plus) {
            advance();
            return parse_unary();
        }
        if (cur_.kind == Tok::Minus) {
            advance();
            Val v = parse_unary();
            negate(v);
            return v;
        }
        return parse_primary();
    }

    Val parse_primary() {
        switch (cur_.kind) {
            case Tok::Number: {
                Val v;
                v.scalar = std::complex<Scalar>(static_cast<Scalar>(cur_.number));
                advance();
                return v;
            }
            case Tok::Imag: {
                Val v;
                v.scalar = std::complex<Scalar>(0, 1);
                advance();
                return v;
            }
            case Tok::Sqrt: {
                const std::size_t pos = cur_.pos;
                advance();
                expect(Tok::LParen, "expected '(' after sqrt");
                Val arg = parse_expr();
                expect(Tok::RParen, "expected ')' to close sqrt");
                if (arg.is_state)
                    throw SyntaxError("sqrt of a ket expression", pos);
                if (std::abs(arg.scalar.imag()) > Scalar(1e-12) || arg.scalar.real() < Scalar(0))
                    throw SyntaxError("sqrt argument must be a nonnegative real", pos);
                Val v;
                v.scalar = std::sqrt(arg.scalar.real());
                return v;
            }
            case Tok::Ket: {
                Val v;
                v.is_state = true;
                v.ket_len = cur_.ket.size();
                v.first_ket_pos = cur_.pos;
                v.terms.emplace(cur_.ket, std::complex<Scalar>(1));
                advance();
                return v;
            }
            case Tok::LParen: {
                advance();
                Val v = parse_expr();
                expect(Tok::RParen, "expected ')'");
                return v;
            }
            default:
                throw SyntaxError("expected a number, 'i', 'sqrt', a ket, or '('", cur_.pos);
        }
    }

    void expect(Tok kind, const char* msg) {
        if (cur_.kind != kind)
            throw SyntaxError(msg, cur_.pos);
        advance();
    }

    static void negate(Val& v) {
        if (v.is_state)
            for (auto& [_, c] : v.terms) c = -c;
        else
            v.scalar = -v.scalar;
    }

    static Val add(Val l, Val r, std::size_t pos) {
        if (l.is_state != r.is_state)
            throw SyntaxError("cannot add a scalar and a ket expression", pos);
        if (!l.is_state) {
            l.scalar += r.scalar;
            return l;
        }
        if (l.ket_len != r.ket_len)
            throw InconsistentKetLength(
                "ket of length " + std::to_string(r.ket_len) + " mixed with length " +
                    std::to_string(l.ket_len),
                r.first_ket_pos);
        for (auto& [label, c] : r.terms) l.terms[label] += c;
        l.first_ket_pos = std::min(l.first_ket_pos, r.first_ket_pos);
        return l;
    }

    static Val mul(Val l, Val r, std::size_t pos) {
        if (l.is_state && r.is_state)
            throw SyntaxError("cannot multiply two ket expressions", pos);
        if (!l.is_state && !r.is_state) {
            l.scalar *= r.scalar;
            return l;
        }
        Val& state = l.is_state ? l : r;
        const std::complex<Scalar> factor = l.is_state ? r.scalar : l.scalar;
        for (auto& [_, c] : state.terms) c *= factor;
        return std::move(state);
    }

    static Val div(Val l, Val r, std::size_t pos) {
        if (r.is_state)
            throw SyntaxError("cannot divide by a ket expression", pos);
        if (std::abs(r.scalar) == Scalar(0))
            throw SyntaxError("division by zero", pos);
        if (l.is_state)
            for (auto& [_, c] : l.terms) c /= r.scalar;
        else
            l.scalar /= r.scalar;
        return l;
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace ket_detail

template <typename Scalar = double>
PureState<Scalar> parse_ket_expr(std::string_view text,
                                 std::optional<std::vector<int>> dims_hint = std::nullopt,
                                 bool normalize = false,
                                 const Tolerances<Scalar>& tol = {}) {
    ket_detail::Parser<Scalar> parser(text);
    ket_detail::Value<Scalar> v = parser.parse();
    if (!v.is_state)
        throw SyntaxError("expression contains no ket", 0);

    const std::size_t len = v.ket_len;
    std::vector<int> dims;
    if (dims_hint) {
        if (dims_hint->size() != len)
            throw InconsistentKetLength("ket length " + std::to_string(len) +
                                            " does not match the " +
                                            std::to_string(dims_hint->size()) +
                                            " hinted dimensions",
                                        v.first_ket_pos);
        dims = *dims_hint;
        for (const auto& [label, _] : v.terms)
            for (std::size_t k = 0; k < len; ++k)
                if (label[k] - '0' >= dims[k])
                    throw DigitExceedsDimension("digit " + std::string(1, label[k]) +
                                                    " needs local dimension > " +
                                                    std::to_string(dims[k]),
                                                v.first_ket_pos);
    } else {
        dims.assign(len, 2);
        for (const auto& [label, _] : v.terms)
            for (std::size_t k = 0; k < len; ++k)
                dims[k] = std::max(dims[k], label[k] - '0' + 1);
    }

    ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(total_dim(dims));
    for (const auto& [label, coeff] : v.terms) {
        std::vector<int> digits(len);
        for (std::size_t k = 0; k < len; ++k) digits[k] = label[k] - '0';
        amps(basis_index(dims, digits)) = coeff;
    }
    return make_state<Scalar>(std::move(dims), std::move(amps), normalize, tol);
}

namespace ket_detail {

inline std::string format_real(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace ket_detail

// Renders terms with |amplitude| > threshold in ascending basis-index order,
// e.g. "0.7071068|00> + 0.7071068|11>". Seven significant digits by default;
// equal-magnitude states round-trip exactly through parse_ket_expr with
// normalization on, arbitrary states need digits=17.
template <typename Scalar>
std::string format_state(const PureState<Scalar>& psi, Scalar threshold = Scalar(1e-9),
                         int digits = 7) {
    for (int d : psi.dims)
        if (d > 10)
            throw InvalidParameters("ket text supports local dimensions up to 10");

    std::string out;
    for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
        const std::complex<Scalar> amp = psi.amps(idx);
        if (std::abs(amp) <= threshold) continue;

        std::string ket = "|";
        for (int d : basis_digits(psi.dims, idx)) ket += static_cast<char>('0' + d);
        ket += '>';

        const double re = static_cast<double>(amp.real());
        const double im = static_cast<double>(amp.imag());
        const bool has_re = std::abs(re) > static_cast<double>(threshold);
        const bool has_im = std::abs(im) > static_cast<double>(threshold);

        std::string body;
        bool negative = false;
        if (has_re && has_im) {
            body = "(" + ket_detail::format_real(re, digits) + (im < 0 ? "-" : "+") +
                   ket_detail::format_real(std::abs(im), digits) + "i)" + ket;
        } else if (has_im) {
            negative = im < 0;
            body = ket_detail::format_real(std::abs(im), digits) + "i" + ket;
        } else {
            negative = re < 0;
            body = ket_detail::format_real(std::abs(re), digits) + ket;
        }

        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace entgeo

#include "isotropy/expr.hpp"

#include <cctype>
#include <vector>

namespace isotropy {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset), reason_(message) {}

std::string to_string(const DiagForm& form) {
    std::string out;
    for (std::size_t i = 0; i < form.dim(); ++i) {
        if (i) out += ", ";
        out += to_string(form[i]);
    }
    return out;
}

std::vector<std::string> coefficient_strings(const DiagForm& form) {
    std::vector<std::string> out;
    out.reserve(form.dim());
    for (const auto& c : form.coeffs()) out.push_back(to_string(c));
    return out;
}

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
public:
    // x_name is the variable mapped to X; t is accepted only if allow_t.
    Parser(std::string_view src, char x_name, bool allow_t) : src_(src), x_name_(x_name), allow_t_(allow_t) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= src_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w) {
        skip_ws();
        if (src_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) return false;
        pos_ = end;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) {
        skip_ws();
        throw ParseError(pos_, msg);
    }

    Int parse_uint() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an unsigned integer");
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    int parse_small_int() {
        const bool neg = accept('-');
        const std::size_t start = (skip_ws(), pos_);
        const Int v = parse_uint();
        if (v > 1000000) throw ParseError(start, "integer too large");
        const int n = static_cast<int>(v.get_si());
        return neg ? -n : n;
    }

    RatFun parse_expr() {
        RatFun acc = parse_term();
        while (true) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    RatFun parse_term() {
        RatFun acc = parse_unary();
        while (true) {
            if (accept('*')) {
                acc = acc * parse_unary();
            } else if (peek() == '/') {
                const std::size_t op = pos_;
                ++pos_;
                const RatFun rhs = parse_unary();
                if (rhs.is_zero()) throw ParseError(op, "division by the zero expression");
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RatFun parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    RatFun parse_power() {
        RatFun base = parse_atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("exponent must be a nonnegative integer literal");
        const Int e = parse_uint();
        if (e > kMaxExponent) throw ParseError(at, "exponent too large");
        return pow(base, static_cast<int>(e.get_si()));
    }

    RatFun parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFun inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == x_name_) {
            ++pos_;
            return RatFun::X();
        }
        if (c == 't' && allow_t_) {
            ++pos_;
            return RatFun::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Rat(parse_uint()));
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    char x_name_;
    bool allow_t_;
};

RatFun parse_whole(std::string_view text, char x_name, bool allow_t) {
    Parser p(text, x_name, allow_t);
    RatFun f = p.parse_expr();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return f;
}

}  // namespace

RatFun parse_ratfun(std::string_view text) { return parse_whole(text, 'X', true); }

UniRatFun parse_unirat(std::string_view text, char var) {
    const RatFun f = parse_whole(text, var, false);
    // No t occurs, so each X-coefficient is a constant.
    auto as_univariate = [](const BiPoly& p) {
        std::vector<Rat> c;
        for (const auto& cj : p.x_coeffs()) c.push_back(cj.coeff(0));
        return UPoly(std::move(c));
    };
    return UniRatFun(as_univariate(f.num()), as_univariate(f.den()));
}

DiagForm parse_form(std::string_view text) {
    Parser p(text, 'X', true);
    if (p.at_end()) throw ParseError(0, "empty form");
    std::vector<RatFun> coeffs;
    do {
        p.skip_ws();
        const std::size_t start = p.pos();
        RatFun c = p.parse_expr();
        if (c.is_zero()) throw ParseError(start, "form must be regular");
        coeffs.push_back(std::move(c));
    } while (p.accept(','));
    if (!p.at_end()) p.fail("unexpected trailing input");
    return DiagForm(std::move(coeffs));
}

RawPlace parse_raw_place(std::string_view text) {
    Parser p(text, 'X', true);
    RawPlace raw;
    if (p.accept_word("mono")) {
        p.expect('(');
        RawMonomial m;
        m.a = p.parse_small_int();
        p.expect(',');
        m.b = p.parse_small_int();
        if (p.accept(',')) {
            if (!p.accept_word("shift")) p.fail("expected 'shift'");
            p.expect('=');
            p.skip_ws();
            const std::size_t at = p.pos();
            const RatFun s = p.parse_expr();
            if (!s.is_polynomial() || !s.num().is_t_only())
                throw ParseError(at, "shift must be a polynomial in t");
            m.shift = s.num().as_t_poly();
        }
        p.expect(')');
        raw = m;
    } else if (p.accept_word("p")) {
        p.expect('(');
        p.skip_ws();
        const std::size_t at = p.pos();
        const RatFun f = p.parse_expr();
        if (!f.is_polynomial()) throw ParseError(at, "finite point must be given by a polynomial");
        p.expect(')');
        raw = RawFinitePoint{f.num()};
    } else if (p.accept_word("inf")) {
        raw = RawInfinity{};
    } else {
        p.fail("expected mono(...), p(...) or inf");
    }
    if (!p.at_end()) p.fail("unexpected trailing input");
    return raw;
}

Place parse_place(std::string_view text) {
    const RawPlace raw = parse_raw_place(text);
    try {
        return normalize_place(raw);
    } catch (const PlaceError& e) {
        std::size_t at = 0;
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
        throw ParseError(at, e.what());
    }
}

}  // namespace isotropy

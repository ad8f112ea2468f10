#include "intmat/parse.hpp"

#include <cctype>

namespace intmat {

namespace {

constexpr int kMaxParsedDegree = 1024;

/// Recursive-descent parser producing rational coefficient vectors.
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    std::vector<Rat> parse() {
        auto value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    RationalRing q_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    std::vector<Rat> expr() {
        std::vector<Rat> acc;
        bool negate = false;
        skip_ws();
        if (consume('-'))
            negate = true;
        else
            consume('+');
        acc = term();
        if (negate) acc = poly_neg(q_, acc);
        while (true) {
            skip_ws();
            if (consume('+'))
                acc = poly_add(q_, acc, term());
            else if (consume('-'))
                acc = poly_sub(q_, acc, term());
            else
                break;
        }
        return acc;
    }

    std::vector<Rat> term() {
        auto acc = factor();
        while (true) {
            skip_ws();
            if (consume('*')) {
                acc = poly_mul(q_, acc, factor());
                if (poly_degree<RationalRing>(acc) > kMaxParsedDegree) fail("polynomial degree too large");
            } else if (consume('/')) {
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer after '/'");
                Int den = integer_literal();
                if (den.is_zero()) fail("division by zero");
                for (Rat& c : acc) c /= Rat(den);
            } else {
                break;
            }
        }
        return acc;
    }

    std::vector<Rat> factor() {
        auto base = atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an exponent");
            Int e = integer_literal();
            if (e > kMaxParsedDegree) fail("exponent too large");
            std::vector<Rat> acc{Rat(1)};
            for (Int i = 0; i < e; ++i) {
                acc = poly_mul(q_, acc, base);
                if (poly_degree<RationalRing>(acc) > kMaxParsedDegree) fail("polynomial degree too large");
            }
            return acc;
        }
        return base;
    }

    std::vector<Rat> atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return {Rat(0), Rat(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = integer_literal();
            return {Rat(v)};
        }
        fail("expected a number, 'x' or '('");
    }

    Int integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }
};

void append_term(std::string& out, const Int& coeff, int deg, bool first) {
    Int a = coeff;
    if (first) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    const bool unit = (a == 1) && deg > 0;
    if (!unit) out += a.str();
    if (deg > 0) {
        if (!unit) out += "*";
        out += "x";
        if (deg > 1) out += "^" + std::to_string(deg);
    }
}

}  // namespace

RatPoly parse_poly(std::string_view text) { return rat_poly_from_coeffs(PolyParser(text).parse()); }

IntPoly parse_int_poly(std::string_view text) {
    RatPoly f = parse_poly(text);
    if (!f.is_integral()) throw InvalidInput("expected integer coefficients: " + std::string(text));
    return f.num();
}

IntPoly parse_monic_poly(std::string_view text) {
    IntPoly p = parse_int_poly(text);
    if (!p.is_monic() || p.degree() < 1) throw InvalidInput("p must be monic of degree >= 1: " + std::string(text));
    return p;
}

MatZ parse_matrix(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto integer = [&]() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected an integer", pos);
        return Int(std::string(text.substr(start, pos - start)));
    };

    std::vector<std::vector<Int>> rows;
    expect('[');
    while (true) {
        expect('[');
        std::vector<Int> row;
        row.push_back(integer());
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                row.push_back(integer());
            } else {
                break;
            }
        }
        expect(']');
        rows.push_back(std::move(row));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);

    const std::size_t n = rows.size();
    std::vector<Int> entries;
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidInput("matrix must be square");
        for (const Int& v : row) entries.push_back(v);
    }
    return MatZ(static_cast<int>(n), std::move(entries));
}

std::vector<Rat> parse_rational_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        RatPoly value = parse_poly(item);
        if (value.degree() > 0) throw InvalidInput("expected a number, got a polynomial: " + std::string(item));
        out.push_back(value.is_zero() ? Rat(0) : Rat(value.num().coeff(0)) / Rat(value.den()));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Int c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        append_term(out, c, k, first);
        first = false;
    }
    return out;
}

std::string to_string(const RatPoly& f) {
    if (f.is_integral()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/" + f.den().str();
}

std::string to_string(const ModPoly& p) { return to_string(p.lift()) + " (mod " + std::to_string(p.modulus()) + ")"; }

std::string to_string(const MatZ& m) {
    std::string out = "[";
    for (int i = 0; i < m.dim(); ++i) {
        out += i == 0 ? "[" : ",[";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace intmat

#include "literal.hpp"

#include <cl2/errors.hpp>

#include <array>
#include <cctype>

namespace cl2cli {

namespace {

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

struct Cursor {
    const std::string& s;
    size_t i = 0;

    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    std::string digits() {
        size_t start = i;
        while (!eof() && is_digit(s[i])) ++i;
        return s.substr(start, i - start);
    }
};

// integer | integer '/' positive-integer | integer '.' digits, one lexical
// atom with no interior whitespace.
cl2::Rational parse_number(Cursor& c) {
    std::string whole = c.digits();
    if (!c.eof() && c.peek() == '/') {
        ++c.i;
        size_t den_pos = c.i;
        std::string den = c.digits();
        if (den.empty()) {
            throw cl2::ParseError(den_pos, "expected digits after '/'");
        }
        mpz_class d(den);
        if (d == 0) {
            throw cl2::ParseError(den_pos, "zero denominator");
        }
        cl2::Rational q{mpz_class(whole), d};
        q.canonicalize();
        return q;
    }
    if (!c.eof() && c.peek() == '.') {
        ++c.i;
        size_t frac_pos = c.i;
        std::string frac = c.digits();
        if (frac.empty()) {
            throw cl2::ParseError(frac_pos, "expected digits after '.'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        cl2::Rational q{mpz_class(whole) * scale + mpz_class(frac), scale};
        q.canonicalize();
        return q;
    }
    return cl2::Rational(mpz_class(whole));
}

}  // namespace

cl2::Element parse_element(const std::string& text) {
    Cursor c{text};
    std::array<cl2::Rational, 4> acc{};

    c.skip_ws();
    if (c.eof()) {
        throw cl2::ParseError(c.i, "empty element literal");
    }
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (first) {
            if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
                sign = c.peek() == '-' ? -1 : 1;
                ++c.i;
            }
        } else {
            if (c.eof()) break;
            if (c.peek() != '+' && c.peek() != '-') {
                throw cl2::ParseError(c.i, "expected '+' or '-'");
            }
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
        }
        c.skip_ws();

        cl2::Rational coeff;
        bool have_coeff = false;
        if (!c.eof() && is_digit(c.peek())) {
            coeff = parse_number(c);
            have_coeff = true;
            c.skip_ws();
        }
        int component = 0;
        if (!c.eof() && c.peek() == 'e') {
            size_t index_pos = c.i + 1;
            char idx = index_pos < c.s.size() ? c.s[index_pos] : '\0';
            if (idx < '1' || idx > '3') {
                throw cl2::ParseError(index_pos, "expected basis index 1, 2 or 3");
            }
            component = idx - '0';
            c.i += 2;
        }
        if (!have_coeff && component == 0) {
            throw cl2::ParseError(c.i, "expected coefficient or basis symbol");
        }
        if (!have_coeff) coeff = 1;
        if (sign < 0) coeff = -coeff;
        acc[static_cast<size_t>(component)] += coeff;
        first = false;
        c.skip_ws();
        if (c.eof()) break;
    }
    return cl2::Element::from_rationals(acc[0], acc[1], acc[2], acc[3]);
}

}  // namespace cl2cli

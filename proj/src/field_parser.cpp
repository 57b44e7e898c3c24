#include "odelab/field_parser.hpp"

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <vector>

namespace odelab {

namespace {

constexpr std::size_t kMaxExponent = 10000;

class FieldParser {
public:
    explicit FieldParser(std::string_view text) : text_(text) {}

    VectorField parse() {
        skip_ws();
        if (at_end()) throw FieldParseError("empty field expression", pos_);

        std::vector<Rational> coeffs;
        bool negative = consume_sign(false);
        for (;;) {
            parse_term(coeffs, negative);
            skip_ws();
            if (at_end()) break;
            negative = consume_sign(true);
        }
        return VectorField(std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Sign before a term. Mandatory between terms, optional up front.
    bool consume_sign(bool required) {
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            const bool negative = peek() == '-';
            ++pos_;
            return negative;
        }
        if (required) throw FieldParseError("expected '+' or '-' between terms", pos_);
        return false;
    }

    std::string read_digits(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw FieldParseError(std::string("expected ") + what, pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    // digits [ '/' digits ] | digits '.' digits, converted exactly
    Rational parse_coefficient() {
        const std::size_t start = pos_;
        const std::string whole = read_digits("a number");
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::string den = read_digits("a denominator");
            const mpz_class num_z(whole, 10);
            const mpz_class den_z(den, 10);
            if (den_z == 0) throw FieldParseError("zero denominator", start);
            mpq_class q{num_z, den_z};
            q.canonicalize();
            return Rational(q);
        }
        if (!at_end() && peek() == '.') {
            ++pos_;
            const std::size_t frac_pos = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw FieldParseError("expected digits after decimal point", frac_pos);
            const std::string frac = read_digits("fractional digits");
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            const mpz_class num_z(whole + frac, 10);
            mpq_class q{num_z, scale};
            q.canonicalize();
            return Rational(q);
        }
        return Rational(mpz_class(whole, 10));
    }

    // 'z' [ '^' digits ]
    std::size_t parse_zpow() {
        ++pos_;  // consume 'z'
        skip_ws();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        const std::size_t exp_pos = pos_;
        const std::string digits = read_digits("an exponent");
        mpz_class e(digits, 10);
        if (e > kMaxExponent) throw FieldParseError("exponent too large", exp_pos);
        return e.get_ui();
    }

    void parse_term(std::vector<Rational>& coeffs, bool negative) {
        skip_ws();
        if (at_end()) throw FieldParseError("expected a term", pos_);

        Rational coeff(1);
        std::size_t power = 0;
        if (peek() == 'z') {
            power = parse_zpow();
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'z') throw FieldParseError("expected 'z' after '*'", pos_);
                power = parse_zpow();
            }
        } else {
            throw FieldParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }

        if (negative) coeff = -coeff;
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += coeff;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string power_suffix(std::size_t j) {
    if (j == 0) return "";
    if (j == 1) return "z";
    return "z^" + std::to_string(j);
}

}  // namespace

VectorField parse_field(std::string_view text) { return FieldParser(text).parse(); }

std::string print_field(const VectorField& field) {
    if (field.is_zero()) return "0";

    std::string out;
    for (std::size_t idx = field.coeffs().size(); idx-- > 0;) {
        const Rational& c = field.coeffs()[idx];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        const std::string zpart = power_suffix(idx);
        if (zpart.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += zpart;
        } else {
            out += mag.to_string() + "*" + zpart;
        }
    }
    return out;
}

}  // namespace odelab

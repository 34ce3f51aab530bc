#include <cctype>

#include "tcb/polynomial.hpp"

namespace tcb {

namespace {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          (juxtaposition multiplies)
//   factor := atom ['^' uint]
//   atom   := number | variable | '(' expr ')'
//   number := uint ['/' uint]
class Parser {
  public:
    Parser(const std::string& text, FieldDesc field, Ambient ambient)
        : text_(text), field_(field), ambient_(ambient) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw parse_error(pos_, message); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Polynomial expr() {
        bool negative = false;
        skip_space();
        if (consume('+')) {
        } else if (consume('-')) {
            negative = true;
        }
        Polynomial acc = term();
        if (negative) acc = -acc;
        while (true) {
            if (consume('+')) {
                acc += term();
            } else if (consume('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (consume('*')) {
                acc = acc * factor();
            } else if (at_atom_start()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (consume('^')) {
            long e = read_uint("exponent");
            Polynomial out = Polynomial::constant(field_, ambient_, Scalar::one(field_));
            for (long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        fail("expected a coefficient, a variable or '('");
    }

    Polynomial variable() {
        char c = text_[pos_];
        int index;
        switch (c) {
            case 'x': index = 0; break;
            case 'y': index = 1; break;
            case 'z': index = 2; break;
            default: fail("unknown variable '" + std::string(1, c) + "'");
        }
        if (index >= variable_count(ambient_)) {
            fail("unknown variable '" + std::string(1, c) + "' (ring has variables x, y)");
        }
        ++pos_;
        return Polynomial::variable(field_, ambient_, index);
    }

    long read_uint(const char* what) {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail(std::string("expected ") + what);
        }
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000L) fail("integer literal too large");
            ++pos_;
        }
        return value;
    }

    Polynomial number() {
        long num = read_uint("integer");
        Rational value(num);
        // A '/' directly after an integer literal denotes a rational coefficient.
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            long den = read_uint("denominator");
            if (den == 0) fail("zero denominator");
            value = Rational(num, den);
            value.canonicalize();
        }
        return Polynomial::constant(field_, ambient_, Scalar::of_fraction(field_, value));
    }

    const std::string& text_;
    FieldDesc field_;
    Ambient ambient_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldDesc& field, Ambient ambient) {
    return Parser(text, field, ambient).run();
}

}  // namespace tcb

#include "pairlab/error.hpp"
#include "pairlab/poly.hpp"

#include <cctype>
#include <limits>

namespace pairlab {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    SparsePoly parse() {
        SparsePoly result(n_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            auto [e, c] = term();
            result.add_term(e, negative ? -c : c);
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
            negative = peek() == '-';
            ++pos_;
        }
        return result;
    }

private:
    std::pair<ExponentVector, Rational> term() {
        ExponentVector e(n_);
        Rational c(1);
        for (;;) {
            skip_ws();
            if (at_end()) throw ParseError("expected a coefficient or variable", pos_);
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else {
                const auto [index, power] = variable_power();
                e[index] += power;
            }
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {std::move(e), std::move(c)};
    }

    Rational number() {
        const mpz_class num = integer();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            const mpz_class den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return Rational(num, den);
        }
        return Rational(num);
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned small_integer() {
        const std::size_t at = pos_;
        const mpz_class v = integer();
        if (v > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", at);
        return static_cast<unsigned>(v.get_ui());
    }

    std::pair<std::size_t, unsigned> variable_power() {
        const std::size_t at = pos_;
        const char c = peek();
        std::size_t index = 0;
        if (c == 'x' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            const unsigned k = small_integer();
            if (k == 0 || k > n_) {
                throw InputError("variable x" + std::to_string(k) + " out of range for " +
                                 std::to_string(n_) + " variables at position " + std::to_string(at));
            }
            index = k - 1;
        } else if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            index = static_cast<std::size_t>(c - 'x');
            if (n_ > 3 || index >= n_) {
                throw InputError(std::string("alias '") + c + "' not available for " +
                                 std::to_string(n_) + " variables at position " + std::to_string(at));
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        skip_ws();
        unsigned power = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            power = small_integer();
        }
        return {index, power};
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, std::size_t n) {
    if (n == 0) throw InputError("variable count must be positive");
    return PolyParser(text, n).parse();
}

}  // namespace pairlab

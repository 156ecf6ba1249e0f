#include "morava/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace morava {

namespace {

class Parser {
public:
    Parser(const CoeffRingSpec& spec, std::string_view text) : spec_(spec), text_(text) {}

    CoeffElem parse() {
        CoeffElem value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse relation '" + std::string(text_) + "' at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == '('; }

    CoeffElem expression() {
        CoeffElem value = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+') value += term();
            else value -= term();
        }
        return value;
    }

    CoeffElem term() {
        CoeffElem value = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                value = value * unary();
            } else if (starts_factor(c)) {
                value = value * unary();
            } else {
                return value;
            }
        }
    }

    CoeffElem unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        CoeffElem base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a non-negative integer");
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
                if (e > 100000) fail("exponent too large");
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    CoeffElem primary() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto& m = spec_.modulus();
            std::uint64_t value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                value = m.add(m.mul(value, 10 % m.value()), static_cast<std::uint64_t>(text_[pos_++] - '0') % m.value());
            return CoeffElem::constant(spec_, static_cast<std::int64_t>(value));
        }
        if (c == 'a') {
            if (spec_.truncation() == 1) fail("'a' does not exist in Z/p^N");
            ++pos_;
            return CoeffElem::monomial(spec_, 1, 1);
        }
        if (c == '(') {
            ++pos_;
            CoeffElem inner = expression();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return inner;
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    const CoeffRingSpec& spec_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CoeffElem parse_relation(const CoeffRingSpec& spec, std::string_view text) { return Parser(spec, text).parse(); }

std::vector<CoeffElem> parse_relation_list(const CoeffRingSpec& spec, std::string_view text) {
    std::vector<CoeffElem> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_relation(spec, text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

}  // namespace morava

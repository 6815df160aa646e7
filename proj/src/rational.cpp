#include "tfree/rational.hpp"

#include "tfree/errors.hpp"

#include <cctype>

namespace tfree {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string num_text(num);
    if (num_text.front() == '+') {
        num_text.erase(0, 1);
    }
    mpz_class p(num_text, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace tfree

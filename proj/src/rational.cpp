#include "winertia/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace winertia {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_token(num_text)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(to_mpz(num_text));

    const auto den_text = text.substr(slash + 1);
    if (!is_integer_token(den_text)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class den = to_mpz(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(to_mpz(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace winertia

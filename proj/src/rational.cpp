#include "genera/rational.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace genera {

namespace {

// Optional sign followed by digits; returns the literal with any leading '+'
// stripped (mpz parsing rejects it), or nullopt when malformed.
std::optional<std::string> integer_literal(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    }
    return s[0] == '+' ? s.substr(1) : s;
}

} // namespace

Rational rat_from_string(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto num_lit = integer_literal(num);
    auto den_lit = integer_literal(den);
    if (!num_lit || !den_lit) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    mpz_class n(*num_lit);
    mpz_class d(*den_lit);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace genera

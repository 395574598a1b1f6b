#include "knotcert/rational.hpp"

namespace knotcert {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw input_error("bad rational literal: '" + std::string(text) + "'");
    Int n(std::string(num), 10);
    Int d(std::string(den), 10);
    if (d == 0) throw input_error("bad rational literal (zero denominator): '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace knotcert

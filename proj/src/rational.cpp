#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace credal {

Int rational_floor(const Rational& x) {
    Int q = numerator(x) / denominator(x); // truncates toward zero
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

Int rational_ceil(const Rational& x) {
    return -rational_floor(-x);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text, const char* why) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": " + why);
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text, "empty");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) bad(text, "sign without digits");
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text, "expected <int>/<int>");
        Int d{std::string(den)};
        if (d == 0) bad(text, "zero denominator");
        value = Rational(Int{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text, "expected digits");
        if (!whole.empty() && !all_digits(whole)) bad(text, "expected digits");
        if (!frac.empty() && !all_digits(frac)) bad(text, "expected digits");
        Int scaled = whole.empty() ? Int{0} : Int{std::string(whole)};
        Int den = 1;
        for (char c : frac) {
            scaled = scaled * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(scaled, den);
    } else {
        if (!all_digits(s)) bad(text, "expected digits");
        value = Rational(Int{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) {
        out += '/';
        out += denominator(x).str();
    }
    return out;
}

double rational_to_double(const Rational& x) {
    return x.convert_to<double>();
}

} // namespace credal

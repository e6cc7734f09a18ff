#include "deficiency/rational.hpp"

#include "deficiency/errors.hpp"

#include <charconv>

namespace deficiency {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash), text), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 15) throw InputError("too many decimal places in '" + std::string(text) + "'");
        std::string digits(text.substr(0, dot));
        const bool negative = !digits.empty() && digits.front() == '-';
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t ip = parse_int(digits, text);
        const std::int64_t fp = frac.empty() ? 0 : parse_int(frac, text);
        return Rational(ip * scale + (negative ? -fp : fp), scale);
    }
    return Rational(parse_int(text, text));
}

std::string to_string(const Rational& x)
{
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace deficiency

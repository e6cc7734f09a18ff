#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace deficiency {

using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" or a terminating decimal such as "0.01".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

}  // namespace deficiency

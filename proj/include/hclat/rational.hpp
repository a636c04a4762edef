#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hcl {

using Rational = boost::rational<std::int64_t>;

// Always "p/q" in lowest terms, including integers ("1/1").
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

}  // namespace hcl

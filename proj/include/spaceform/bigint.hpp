#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace spaceform {

// Mapping degrees are unbounded; products never overflow.
using BigInt = boost::multiprecision::cpp_int;

// Least non-negative representative of k mod m (m >= 1).
std::uint32_t mod_floor(const BigInt& k, std::uint32_t m);
std::uint32_t mod_floor(std::int64_t k, std::uint32_t m);

// Decimal integer with optional sign; throws Parse otherwise.
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& k);

}  // namespace spaceform

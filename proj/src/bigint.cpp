#include "spaceform/bigint.hpp"

#include <cctype>

#include "spaceform/error.hpp"

namespace spaceform {

std::uint32_t mod_floor(const BigInt& k, std::uint32_t m) {
  BigInt r = k % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t mod_floor(std::int64_t k, std::uint32_t m) {
  std::int64_t r = k % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) fail(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      fail(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(const BigInt& k) { return k.str(); }

}  // namespace spaceform

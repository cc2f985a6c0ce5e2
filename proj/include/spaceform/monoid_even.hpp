#pragma once

// Self-maps of RP^{2n} up to homotopy: integers under multiplication with all
// k = 0 mod 4 identified (class A0) and all k = 2 mod 4 identified (class A2).
// Odd integers stay distinct. The structure does not depend on n >= 1.

#include <string>

#include "spaceform/bigint.hpp"

namespace spaceform {

class EvenElement {
 public:
  enum class Kind { A0, A2, Odd };

  static EvenElement a0() { return EvenElement(Kind::A0, BigInt(0)); }
  static EvenElement a2() { return EvenElement(Kind::A2, BigInt(2)); }
  // Throws Domain for even k.
  static EvenElement odd(BigInt k);

  Kind kind() const noexcept { return kind_; }
  // The odd lift degree; only meaningful for Kind::Odd.
  const BigInt& odd_degree() const noexcept { return payload_; }

  // "A0", "A2" or the odd integer in decimal.
  std::string to_string() const;

  bool operator==(const EvenElement& other) const noexcept {
    return kind_ == other.kind_ && (kind_ != Kind::Odd || payload_ == other.payload_);
  }

 private:
  EvenElement(Kind kind, BigInt payload) : kind_(kind), payload_(std::move(payload)) {}

  Kind kind_;
  BigInt payload_;
};

EvenElement canonicalize(const BigInt& k);
EvenElement multiply_even(const EvenElement& x, const EvenElement& y);
EvenElement identity_even();
bool is_unit(const EvenElement& x);

// Inverse of to_string: "A0", "A2", or any integer (canonicalized).
EvenElement parse_even(const std::string& text);

}  // namespace spaceform

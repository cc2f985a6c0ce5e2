#include "spaceform/monoid_even.hpp"

#include "spaceform/error.hpp"

namespace spaceform {

EvenElement EvenElement::odd(BigInt k) {
  if (mod_floor(k, 2) == 0) {
    fail(ErrorCode::Domain, "odd class requires an odd degree, got " + spaceform::to_string(k));
  }
  return EvenElement(Kind::Odd, std::move(k));
}

std::string EvenElement::to_string() const {
  switch (kind_) {
    case Kind::A0: return "A0";
    case Kind::A2: return "A2";
    case Kind::Odd: break;
  }
  return spaceform::to_string(payload_);
}

EvenElement canonicalize(const BigInt& k) {
  switch (mod_floor(k, 4)) {
    case 0: return EvenElement::a0();
    case 2: return EvenElement::a2();
    default: return EvenElement::odd(k);
  }
}

EvenElement multiply_even(const EvenElement& x, const EvenElement& y) {
  using Kind = EvenElement::Kind;
  if (x.kind() == Kind::Odd && y.kind() == Kind::Odd) {
    return EvenElement::odd(x.odd_degree() * y.odd_degree());
  }
  // a_i a_j = a_0
  if (x.kind() != Kind::Odd && y.kind() != Kind::Odd) return EvenElement::a0();
  // a_i b = b a_i = a_i
  return x.kind() == Kind::Odd ? y : x;
}

EvenElement identity_even() { return EvenElement::odd(BigInt(1)); }

bool is_unit(const EvenElement& x) {
  return x.kind() == EvenElement::Kind::Odd &&
         (x.odd_degree() == 1 || x.odd_degree() == -1);
}

EvenElement parse_even(const std::string& text) {
  if (text == "A0" || text == "a0") return EvenElement::a0();
  if (text == "A2" || text == "a2") return EvenElement::a2();
  return canonicalize(parse_bigint(text));
}

}  // namespace spaceform

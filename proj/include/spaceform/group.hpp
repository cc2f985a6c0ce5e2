#pragma once

// Finite groups stored as validated multiplication tables.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace spaceform {

using Element = std::uint32_t;

inline constexpr std::uint32_t kDefaultMaxOrder = 128;

// Immutable group on the elements 0..order-1. Element 0 is always the
// identity. Instances only come out of the make_* constructors below, all of
// which run the full Latin-square / identity / inverse / associativity check.
class FiniteGroup {
 public:
  std::uint32_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  Element inverse(Element x) const noexcept { return inverses_[x]; }
  Element power(Element x, std::uint64_t exponent) const noexcept;

  // Least t >= 1 with x^t = e. Throws Domain for an out-of-range element.
  std::uint32_t element_order(Element x) const;

  std::span<const Element> row(Element x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }
  // Row-major flat table.
  const std::vector<Element>& table() const noexcept { return table_; }

  bool is_abelian() const noexcept;
  // Smallest-index element of order |G|, if any.
  std::optional<Element> cyclic_generator() const noexcept;
  bool is_cyclic() const noexcept { return cyclic_generator().has_value(); }

  bool operator==(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup(std::uint32_t order, std::vector<Element> table,
              std::uint32_t max_order);

  friend FiniteGroup build_validated(std::uint32_t, std::vector<Element>,
                                     std::uint32_t);

  std::uint32_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
};

// C_m with i*j = (i+j) mod m.
FiniteGroup make_cyclic(std::uint32_t m,
                        std::uint32_t max_order = kDefaultMaxOrder);

// Validates an arbitrary square table. If the identity is not at index 0 the
// elements 0 and e are swapped so that it is.
FiniteGroup make_from_table(const std::vector<std::vector<std::int64_t>>& rows,
                            std::uint32_t max_order = kDefaultMaxOrder);

// <x,y | x^{2k}=1, y^2=x^k, yxy^{-1}=x^{-1}>, order 4k with k >= 2. Element
// x^a y^b has index a + 2k*b.
FiniteGroup make_generalized_quaternion(
    std::uint32_t order, std::uint32_t max_order = kDefaultMaxOrder);

// Pair (a,b) has index a*|B| + b.
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                std::uint32_t max_order = kDefaultMaxOrder);

// C_a x| C_b with y x y^{-1} = x^u; requires gcd(u,a)=1 and u^b = 1 mod a.
// Element x^i y^j has index i + a*j.
FiniteGroup make_metacyclic(std::uint32_t a, std::uint32_t b, std::uint32_t u,
                            std::uint32_t max_order = kDefaultMaxOrder);

// Group table file: { "order": m, "table": [[...], ...] }.
FiniteGroup group_from_json(const nlohmann::json& doc,
                            std::uint32_t max_order = kDefaultMaxOrder);
nlohmann::json group_to_json(const FiniteGroup& g);

struct PrimeCount {
  std::uint32_t prime = 0;
  std::uint32_t solutions = 0;  // #{x : x^p = e}
};

struct AdmissibilityReport {
  std::vector<PrimeCount> counts;
  std::vector<std::uint32_t> failing_primes;
  bool pass = true;
};

// Diagnostic for free sphere actions: every subgroup of order p^2 must be
// cyclic. A prime fails when G contains C_p x C_p. The x^p = e counts are
// reported alongside; a count above p is necessary but not sufficient for
// failure (S3 has 4 solutions at p = 2 and passes).
AdmissibilityReport rank_one_check(const FiniteGroup& g);

std::vector<std::uint32_t> prime_divisors(std::uint64_t n);

}  // namespace spaceform

#pragma once

// Invariant suites over a monoid context, shared by `spaceform check` and the
// C API. Each suite reports the number of cases it ran and the first failure.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spaceform/monoid_odd.hpp"

namespace spaceform {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;
};

nlohmann::json to_json(const SuiteResult& result);

// Every valid element with |k| <= window, as (alpha, k) pairs.
std::vector<SpaceFormElement> elements_in_window(const MonoidContext& ctx, std::uint32_t window);

// Products of all pairs with |k| <= window stay in M(G,n).
SuiteResult check_closure(const MonoidContext& ctx, std::uint32_t window);
// (xy)z = x(yz) and 1x = x1 = x on random triples drawn with degrees
// d(alpha) + t|G|, |t| <= spread.
SuiteResult check_associativity(const MonoidContext& ctx, std::size_t samples,
                                std::uint64_t seed, std::uint32_t spread = 50);
// is_invertible(x) iff some (beta, +-1) is a two-sided inverse.
SuiteResult check_units(const MonoidContext& ctx, std::uint32_t window);
// E(G,n) is a group and has the predicted order.
SuiteResult check_equivalence_group(const MonoidContext& ctx);
// is_abelian agrees with pairwise commutation of least representatives.
SuiteResult check_commutativity(const MonoidContext& ctx);

}  // namespace spaceform

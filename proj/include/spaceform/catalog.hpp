#pragma once

// Names for groups of order <= 16 matched by invariant fingerprint: the
// multiset of element orders together with commutativity.

#include <cstddef>
#include <string>
#include <vector>

#include "spaceform/group.hpp"

namespace spaceform {

inline constexpr std::size_t kCatalogMaxOrder = 16;

struct Fingerprint {
  std::vector<std::size_t> element_orders;  // sorted
  bool abelian = true;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteGroup& g);
Fingerprint fingerprint(std::vector<std::size_t> element_orders, bool abelian);

// Catalog names sharing the fingerprint; empty if none is known or the order
// exceeds kCatalogMaxOrder. More than one name means the fingerprint is
// ambiguous.
std::vector<std::string> identify_small_group(const Fingerprint& fp);

}  // namespace spaceform

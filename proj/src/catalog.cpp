#include "spaceform/catalog.hpp"

#include <algorithm>
#include <utility>

namespace spaceform {

namespace {

struct Entry {
  std::string name;
  Fingerprint fp;
};

// Closure of permutation generators on {0..degree-1}, as a table.
FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
  const std::size_t degree = gens.front().size();
  std::vector<std::uint32_t> id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<std::vector<std::uint32_t>> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::uint32_t> p(degree);
      for (std::size_t i = 0; i < degree; ++i) p[i] = g[elems[head][i]];
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  }
  std::vector<std::vector<std::int64_t>> rows(elems.size(), std::vector<std::int64_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::vector<std::uint32_t> p(degree);
      for (std::size_t i = 0; i < degree; ++i) p[i] = elems[a][elems[b][i]];
      rows[a][b] = std::find(elems.begin(), elems.end(), p) - elems.begin();
    }
  }
  return make_from_table(rows);
}

std::vector<Entry> build_catalog() {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  auto c = [](std::uint32_t m) { return make_cyclic(m); };
  auto x = [](const FiniteGroup& a, const FiniteGroup& b) { return make_direct_product(a, b); };
  for (std::uint32_t m = 1; m <= 16; ++m) groups.emplace_back("C" + std::to_string(m), c(m));
  groups.emplace_back("C2xC2", x(c(2), c(2)));
  groups.emplace_back("S3", make_metacyclic(3, 2, 2));
  groups.emplace_back("C4xC2", x(c(4), c(2)));
  groups.emplace_back("C2xC2xC2", x(x(c(2), c(2)), c(2)));
  groups.emplace_back("D4", make_metacyclic(4, 2, 3));
  groups.emplace_back("Q8", make_generalized_quaternion(8));
  groups.emplace_back("C3xC3", x(c(3), c(3)));
  groups.emplace_back("D5", make_metacyclic(5, 2, 4));
  groups.emplace_back("C6xC2", x(c(6), c(2)));
  groups.emplace_back("A4", from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}));
  groups.emplace_back("D6", make_metacyclic(6, 2, 5));
  groups.emplace_back("Dic3", make_metacyclic(3, 4, 2));
  groups.emplace_back("D7", make_metacyclic(7, 2, 6));
  groups.emplace_back("C8xC2", x(c(8), c(2)));
  groups.emplace_back("C4xC4", x(c(4), c(4)));
  groups.emplace_back("C4xC2xC2", x(x(c(4), c(2)), c(2)));
  groups.emplace_back("C2xC2xC2xC2", x(x(c(2), c(2)), x(c(2), c(2))));
  groups.emplace_back("D8", make_metacyclic(8, 2, 7));
  groups.emplace_back("Q16", make_generalized_quaternion(16));
  groups.emplace_back("SD16", make_metacyclic(8, 2, 3));
  groups.emplace_back("M16", make_metacyclic(8, 2, 5));
  groups.emplace_back("C4:C4", make_metacyclic(4, 4, 3));
  groups.emplace_back("C2xD4", x(c(2), make_metacyclic(4, 2, 3)));
  groups.emplace_back("C2xQ8", x(c(2), make_generalized_quaternion(8)));

  std::vector<Entry> out;
  for (auto& [name, g] : groups) out.push_back({name, fingerprint(g)});
  return out;
}

}  // namespace

Fingerprint fingerprint(std::vector<std::size_t> element_orders, bool abelian) {
  std::sort(element_orders.begin(), element_orders.end());
  return Fingerprint{std::move(element_orders), abelian};
}

Fingerprint fingerprint(const FiniteGroup& g) {
  std::vector<std::size_t> orders;
  for (Element e = 0; e < g.order(); ++e) orders.push_back(g.element_order(e));
  return fingerprint(std::move(orders), g.is_abelian());
}

std::vector<std::string> identify_small_group(const Fingerprint& fp) {
  if (fp.element_orders.size() > kCatalogMaxOrder) return {};
  static const std::vector<Entry> catalog = build_catalog();
  std::vector<std::string> names;
  for (const auto& entry : catalog) {
    if (entry.fp == fp) names.push_back(entry.name);
  }
  return names;
}

}  // namespace spaceform

#include "spaceform/monoid_odd.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "spaceform/error.hpp"

namespace spaceform {

namespace {

std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

std::vector<std::size_t> EquivalenceGroup::element_orders() const {
  std::vector<std::size_t> orders(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::size_t t = 1;
    for (std::size_t p = i; p != identity; p = table[p][i]) ++t;
    orders[i] = t;
  }
  return orders;
}

bool EquivalenceGroup::is_abelian() const noexcept {
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      if (table[i][j] != table[j][i]) return false;
    }
  }
  return true;
}

bool RealizableDegrees::contains(const BigInt& k) const {
  return std::binary_search(residues.begin(), residues.end(), mod_floor(k, modulus));
}

MonoidContext::MonoidContext(FiniteGroup g, std::uint32_t n,
                             const std::optional<DegreeTable>& user_table,
                             const EnumerationLimits& limits)
    : id_(next_context_id()),
      endos_(std::move(g), limits),
      d_(build_degree_hom(endos_, n, user_table)) {}

bool MonoidContext::contains(EndoIndex alpha, const BigInt& k) const {
  if (alpha >= endos_.size()) {
    fail(ErrorCode::Domain, "endomorphism index " + std::to_string(alpha) + " out of range");
  }
  return mod_floor(k, modulus()) == d_.values()[alpha];
}

SpaceFormElement MonoidContext::element(EndoIndex alpha, BigInt k) const {
  if (!contains(alpha, k)) {
    fail(ErrorCode::NotRealizable,
         "degree " + to_string(k) + " is not " + std::to_string(d_.values()[alpha]) +
             " mod " + std::to_string(modulus()) + " = d(" + std::to_string(alpha) +
             "); no self-map has this (pi_1, degree) pair");
  }
  return SpaceFormElement(id_, alpha, std::move(k));
}

SpaceFormElement MonoidContext::identity() const {
  return SpaceFormElement(id_, endos_.identity_index(), BigInt(1));
}

void MonoidContext::check_own(const SpaceFormElement& x) const {
  if (x.context_id() != id_) {
    fail(ErrorCode::Domain, "element belongs to a different monoid context");
  }
}

SpaceFormElement MonoidContext::multiply(const SpaceFormElement& x,
                                         const SpaceFormElement& y) const {
  check_own(x);
  check_own(y);
  return SpaceFormElement(id_, endos_.compose(x.alpha(), y.alpha()),
                          x.degree() * y.degree());
}

bool MonoidContext::is_invertible(const SpaceFormElement& x) const {
  check_own(x);
  return endos_[x.alpha()].is_automorphism && (x.degree() == 1 || x.degree() == -1);
}

EquivalenceGroup MonoidContext::equivalence_group() const {
  EquivalenceGroup e;
  if (modulus() <= 2) {
    // |G| <= 2: E = M_1 = {+1, -1}, which is C_2.
    e.elements.push_back(identity());
    e.elements.push_back(element(endos_.identity_index(), BigInt(-1)));
  } else {
    // |G| >= 3: +1 and -1 are distinct mod |G|, so each automorphism
    // contributes at most one sign.
    for (EndoIndex a : endos_.automorphism_indices()) {
      for (int sign : {1, -1}) {
        if (contains(a, BigInt(sign))) e.elements.push_back(element(a, BigInt(sign)));
      }
    }
  }
  const std::size_t order = e.elements.size();
  e.table.assign(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i) {
    if (e.elements[i] == identity()) e.identity = i;
    for (std::size_t j = 0; j < order; ++j) {
      const auto product = multiply(e.elements[i], e.elements[j]);
      auto it = std::find(e.elements.begin(), e.elements.end(), product);
      if (it == e.elements.end()) {
        fail(ErrorCode::Internal, "units of M(G,n) not closed under multiplication");
      }
      e.table[i][j] = static_cast<std::size_t>(it - e.elements.begin());
    }
  }
  return e;
}

std::optional<std::pair<EndoIndex, EndoIndex>> MonoidContext::noncommuting_pair() const {
  for (EndoIndex a = 0; a < endos_.size(); ++a) {
    for (EndoIndex b = a + 1; b < endos_.size(); ++b) {
      if (endos_.compose(a, b) != endos_.compose(b, a)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

RealizableDegrees MonoidContext::realizable_degrees() const {
  RealizableDegrees out;
  out.modulus = modulus();
  out.residues = d_.values();
  std::sort(out.residues.begin(), out.residues.end());
  out.residues.erase(std::unique(out.residues.begin(), out.residues.end()),
                     out.residues.end());
  return out;
}

std::vector<EndoIndex> MonoidContext::classes_containing(const BigInt& k) const {
  const std::uint32_t r = mod_floor(k, modulus());
  std::vector<EndoIndex> out;
  for (EndoIndex a = 0; a < endos_.size(); ++a) {
    if (d_.values()[a] == r) out.push_back(a);
  }
  return out;
}

BigInt MonoidContext::least_representative(EndoIndex alpha) const {
  const std::int64_t r = d_(alpha).value();
  const std::int64_t below = r - static_cast<std::int64_t>(modulus());
  return BigInt(-below < r ? below : r);
}

}  // namespace spaceform

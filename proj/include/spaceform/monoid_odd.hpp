#pragma once

// M(G,n): pairs (alpha, k) with alpha in End(G) and k = d(alpha) mod |G|,
// multiplied componentwise as (alpha o beta, k*l). A pair is exactly a
// homotopy class of self-maps of S^{2n+1}/G: the induced map on pi_1 and the
// mapping degree.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spaceform/bigint.hpp"
#include "spaceform/degree.hpp"
#include "spaceform/endomorphism.hpp"

namespace spaceform {

class MonoidContext;

class SpaceFormElement {
 public:
  EndoIndex alpha() const noexcept { return alpha_; }
  const BigInt& degree() const noexcept { return degree_; }
  std::uint64_t context_id() const noexcept { return context_; }

  // Equality is on (alpha, exact degree); degrees are never reduced.
  bool operator==(const SpaceFormElement& other) const noexcept {
    return context_ == other.context_ && alpha_ == other.alpha_ &&
           degree_ == other.degree_;
  }

 private:
  friend class MonoidContext;
  SpaceFormElement(std::uint64_t context, EndoIndex alpha, BigInt degree)
      : context_(context), alpha_(alpha), degree_(std::move(degree)) {}

  std::uint64_t context_;
  EndoIndex alpha_;
  BigInt degree_;
};

struct EquivalenceGroup {
  std::vector<SpaceFormElement> elements;
  // table[i][j] = index of elements[i] * elements[j]
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return elements.size(); }
  std::vector<std::size_t> element_orders() const;
  bool is_abelian() const noexcept;
};

// Residues d(End(G)) mod |G|; k is a degree of some self-map iff k mod |G|
// is one of them.
struct RealizableDegrees {
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> residues;  // sorted, distinct

  bool contains(const BigInt& k) const;
};

class MonoidContext {
 public:
  // Enumerates End(G) and builds d; see build_degree_hom for the rules on
  // user tables.
  MonoidContext(FiniteGroup g, std::uint32_t n,
                const std::optional<DegreeTable>& user_table = std::nullopt,
                const EnumerationLimits& limits = {});

  const FiniteGroup& group() const noexcept { return endos_.group(); }
  const EndomorphismSet& endomorphisms() const noexcept { return endos_; }
  const DegreeHom& degree_hom() const noexcept { return d_; }
  std::uint32_t n() const noexcept { return d_.n(); }
  std::uint32_t modulus() const noexcept { return d_.modulus(); }
  std::uint64_t id() const noexcept { return id_; }

  bool contains(EndoIndex alpha, const BigInt& k) const;
  // Throws NotRealizable when k is not d(alpha) mod |G|, Domain when alpha is
  // out of range.
  SpaceFormElement element(EndoIndex alpha, BigInt k) const;
  SpaceFormElement identity() const;

  // Throws Domain for elements of another context.
  SpaceFormElement multiply(const SpaceFormElement& x, const SpaceFormElement& y) const;

  bool is_invertible(const SpaceFormElement& x) const;
  EquivalenceGroup equivalence_group() const;

  bool is_abelian() const { return !noncommuting_pair().has_value(); }
  // First (a, b) in index order with a o b != b o a.
  std::optional<std::pair<EndoIndex, EndoIndex>> noncommuting_pair() const;

  RealizableDegrees realizable_degrees() const;
  // All alpha with k in M_alpha.
  std::vector<EndoIndex> classes_containing(const BigInt& k) const;

  // Representative of M_alpha with least absolute value, ties to positive.
  BigInt least_representative(EndoIndex alpha) const;

 private:
  void check_own(const SpaceFormElement& x) const;

  std::uint64_t id_;
  EndomorphismSet endos_;
  DegreeHom d_;
};

}  // namespace spaceform

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spaceform/group.hpp"

namespace spaceform {

using EndoIndex = std::size_t;

inline constexpr std::size_t kDefaultMaxEndomorphisms = std::size_t{1} << 20;

struct Endomorphism {
  std::vector<Element> images;  // images[x] = alpha(x)
  bool is_automorphism = false;
  EndoIndex canonical_index = 0;

  bool operator==(const Endomorphism& other) const noexcept {
    return images == other.images;
  }
};

struct EnumerationLimits {
  std::uint32_t max_order = kDefaultMaxOrder;
  std::size_t max_endomorphisms = kDefaultMaxEndomorphisms;
};

// Greedy generating set: repeatedly adjoin the smallest element outside the
// subgroup generated so far.
std::vector<Element> greedy_generators(const FiniteGroup& g);

// End(G), sorted lexicographically by image array; canonical_index is the
// position in that order. For C_m built by make_cyclic, index r is x -> rx.
std::vector<Endomorphism> enumerate_endomorphisms(
    const FiniteGroup& g, const EnumerationLimits& limits = {});

std::vector<Endomorphism> enumerate_automorphisms(
    const FiniteGroup& g, const EnumerationLimits& limits = {});

// The monoid End(G) under composition, addressed by canonical index.
class EndomorphismSet {
 public:
  explicit EndomorphismSet(FiniteGroup g, const EnumerationLimits& limits = {});

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return endos_.size(); }
  const Endomorphism& operator[](EndoIndex i) const { return endos_.at(i); }
  std::span<const Endomorphism> all() const noexcept { return endos_; }

  EndoIndex identity_index() const noexcept { return identity_; }
  const std::vector<EndoIndex>& automorphism_indices() const noexcept {
    return automorphisms_;
  }
  std::optional<EndoIndex> find(std::span<const Element> images) const;

  // Index of a o b, i.e. x -> a(b(x)).
  EndoIndex compose(EndoIndex a, EndoIndex b) const;
  // Throws Domain if either map is not an endomorphism of this group.
  Endomorphism compose(const Endomorphism& a, const Endomorphism& b) const;

 private:
  EndoIndex compose_slow(EndoIndex a, EndoIndex b) const;

  FiniteGroup group_;
  std::vector<Endomorphism> endos_;
  std::vector<EndoIndex> automorphisms_;
  EndoIndex identity_ = 0;
  std::vector<std::uint32_t> products_;  // size()^2 table when small enough
};

}  // namespace spaceform

#include "spaceform/endomorphism.hpp"

#include <algorithm>
#include <string>

#include "spaceform/error.hpp"

namespace spaceform {

namespace {

constexpr Element kUnset = ~Element{0};
constexpr std::size_t kMaxProductTable = 1024;

std::vector<char> closure_of(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{0};
  in[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(queue[head], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

class Search {
 public:
  Search(const FiniteGroup& g, std::size_t cap)
      : g_(g), gens_(greedy_generators(g)), cap_(cap) {
    for (Element s : gens_) {
      std::vector<Element> cands;
      const std::uint32_t o = g.element_order(s);
      for (Element y = 0; y < g.order(); ++y) {
        if (o % g.element_order(y) == 0) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
  }

  std::vector<std::vector<Element>> run() {
    std::vector<Element> images(g_.order(), kUnset);
    images[0] = 0;
    descend(0, images);
    return std::move(found_);
  }

 private:
  // Propagates images along x -> x*s for the first `count` generators and
  // reports whether the partial map stays consistent.
  bool close(std::vector<Element>& images, std::size_t count) const {
    std::vector<Element> queue;
    for (Element x = 0; x < g_.order(); ++x) {
      if (images[x] != kUnset) queue.push_back(x);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t j = 0; j < count; ++j) {
        const Element s = gens_[j];
        const Element y = g_.mul(x, s);
        const Element image = g_.mul(images[x], images[s]);
        if (images[y] == kUnset) {
          images[y] = image;
          queue.push_back(y);
        } else if (images[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t level, const std::vector<Element>& images) {
    if (level == gens_.size()) {
      if (found_.size() >= cap_) {
        fail(ErrorCode::Size, "more than " + std::to_string(cap_) +
                                  " endomorphisms; raise the enumeration cap");
      }
      found_.push_back(images);
      return;
    }
    for (Element c : candidates_[level]) {
      std::vector<Element> next = images;
      next[gens_[level]] = c;
      if (close(next, level + 1)) descend(level + 1, next);
    }
  }

  const FiniteGroup& g_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::size_t cap_;
  std::vector<std::vector<Element>> found_;
};

bool is_permutation(const std::vector<Element>& images) {
  std::vector<char> seen(images.size(), 0);
  for (Element v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> in = closure_of(g, gens);
  for (Element x = 0; x < g.order(); ++x) {
    if (!in[x]) {
      gens.push_back(x);
      in = closure_of(g, gens);
    }
  }
  return gens;
}

std::vector<Endomorphism> enumerate_endomorphisms(const FiniteGroup& g,
                                                  const EnumerationLimits& limits) {
  if (g.order() > limits.max_order) {
    fail(ErrorCode::Size, "group order " + std::to_string(g.order()) +
                              " exceeds the configured cap " +
                              std::to_string(limits.max_order));
  }
  auto maps = Search(g, limits.max_endomorphisms).run();
  std::sort(maps.begin(), maps.end());
  std::vector<Endomorphism> out;
  out.reserve(maps.size());
  for (auto& images : maps) {
    Endomorphism e;
    e.is_automorphism = is_permutation(images);
    e.canonical_index = out.size();
    e.images = std::move(images);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Endomorphism> enumerate_automorphisms(const FiniteGroup& g,
                                                  const EnumerationLimits& limits) {
  auto all = enumerate_endomorphisms(g, limits);
  std::vector<Endomorphism> out;
  for (auto& e : all) {
    if (e.is_automorphism) out.push_back(std::move(e));
  }
  return out;
}

EndomorphismSet::EndomorphismSet(FiniteGroup g, const EnumerationLimits& limits)
    : group_(std::move(g)), endos_(enumerate_endomorphisms(group_, limits)) {
  std::vector<Element> id(group_.order());
  for (Element x = 0; x < group_.order(); ++x) id[x] = x;
  const auto found = find(id);
  if (!found) fail(ErrorCode::Internal, "identity endomorphism missing from enumeration");
  identity_ = *found;
  for (const auto& e : endos_) {
    if (e.is_automorphism) automorphisms_.push_back(e.canonical_index);
  }
  const std::size_t n = endos_.size();
  if (n <= kMaxProductTable) {
    products_.resize(n * n);
    for (EndoIndex a = 0; a < n; ++a) {
      for (EndoIndex b = 0; b < n; ++b) {
        products_[a * n + b] = static_cast<std::uint32_t>(compose_slow(a, b));
      }
    }
  }
}

std::optional<EndoIndex> EndomorphismSet::find(std::span<const Element> images) const {
  auto it = std::lower_bound(
      endos_.begin(), endos_.end(), images,
      [](const Endomorphism& e, std::span<const Element> key) {
        return std::lexicographical_compare(e.images.begin(), e.images.end(),
                                            key.begin(), key.end());
      });
  if (it == endos_.end() || !std::equal(it->images.begin(), it->images.end(),
                                        images.begin(), images.end())) {
    return std::nullopt;
  }
  return it->canonical_index;
}

EndoIndex EndomorphismSet::compose_slow(EndoIndex a, EndoIndex b) const {
  const auto& ia = endos_[a].images;
  const auto& ib = endos_[b].images;
  std::vector<Element> images(ib.size());
  for (std::size_t x = 0; x < ib.size(); ++x) images[x] = ia[ib[x]];
  const auto found = find(images);
  if (!found) fail(ErrorCode::Internal, "End(G) is not closed under composition");
  return *found;
}

EndoIndex EndomorphismSet::compose(EndoIndex a, EndoIndex b) const {
  const std::size_t n = endos_.size();
  if (a >= n || b >= n) fail(ErrorCode::Domain, "endomorphism index out of range");
  if (!products_.empty()) return products_[a * n + b];
  return compose_slow(a, b);
}

Endomorphism EndomorphismSet::compose(const Endomorphism& a, const Endomorphism& b) const {
  const auto ia = find(a.images);
  const auto ib = find(b.images);
  if (!ia || !ib || a.images.size() != group_.order() ||
      b.images.size() != group_.order()) {
    fail(ErrorCode::Domain, "endomorphisms do not belong to the same group");
  }
  return endos_[compose(*ia, *ib)];
}

}  // namespace spaceform

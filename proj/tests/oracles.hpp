#pragma once

// Test-only reference computations. Nothing here calls into the enumeration,
// composition or validation code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "spaceform/group.hpp"

namespace oracle {

using spaceform::Element;
using spaceform::FiniteGroup;
using Images = std::vector<Element>;

// Every map G -> G with f(xy) = f(x)f(y), by backtracking over f(0..|G|-1)
// and checking the law on each newly completed pair. Sorted.
inline std::vector<Images> brute_force_endomorphisms(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  std::vector<Images> out;
  Images f(n);
  auto consistent = [&](std::uint32_t upto) {
    for (std::uint32_t x = 0; x <= upto; ++x) {
      for (std::uint32_t y = 0; y <= upto; ++y) {
        const Element xy = g.mul(x, y);
        if (xy <= upto && f[xy] != g.mul(f[x], f[y])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::uint32_t x) -> void {
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      f[x] = v;
      if (consistent(x)) self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_bijective(const Images& f) {
  Images s = f;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != i) return false;
  }
  return true;
}

inline Images raw_compose(const Images& a, const Images& b) {
  Images out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline std::size_t linear_index(const std::vector<Images>& endos, const Images& f) {
  for (std::size_t i = 0; i < endos.size(); ++i) {
    if (endos[i] == f) return i;
  }
  return endos.size();
}

inline std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (std::gcd(r, m) == 1) ++count;
  }
  return m == 1 ? 1 : count;
}

inline std::uint64_t naive_pow_mod(std::uint64_t r, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) acc = acc * (r % m) % m;
  return acc;
}

struct LawVerdict {
  bool identity = true;
  bool units = true;
  bool multiplicative = true;
  bool accepts() const { return identity && units && multiplicative; }
};

// Checks a candidate degree table (values[i] belongs to endos[i]) against
// the three laws directly from image arrays.
inline LawVerdict check_laws(const FiniteGroup& g, const std::vector<Images>& endos,
                             const std::vector<std::int64_t>& values) {
  const std::int64_t m = g.order();
  auto red = [m](std::int64_t v) { return ((v % m) + m) % m; };
  LawVerdict v;
  Images id(g.order());
  std::iota(id.begin(), id.end(), 0);
  v.identity = red(values[linear_index(endos, id)]) == red(1);
  for (std::size_t i = 0; i < endos.size(); ++i) {
    if (is_bijective(endos[i]) && std::gcd(red(values[i]), m) != 1) v.units = false;
  }
  for (std::size_t a = 0; a < endos.size(); ++a) {
    for (std::size_t b = 0; b < endos.size(); ++b) {
      const std::size_t ab = linear_index(endos, raw_compose(endos[a], endos[b]));
      if (red(values[ab]) != red(values[a] * values[b])) v.multiplicative = false;
    }
  }
  return v;
}

}  // namespace oracle

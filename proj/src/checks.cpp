#include "spaceform/checks.hpp"

#include <random>

#include <nlohmann/json.hpp>

namespace spaceform {

namespace {

std::string describe(const SpaceFormElement& x) {
  return "(" + std::to_string(x.alpha()) + "," + to_string(x.degree()) + ")";
}

}  // namespace

nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json j = {{"pass", result.pass}, {"cases", result.cases}};
  if (!result.pass) j["witness"] = result.witness;
  return j;
}

std::vector<SpaceFormElement> elements_in_window(const MonoidContext& ctx,
                                                 std::uint32_t window) {
  std::vector<SpaceFormElement> out;
  const std::int64_t w = window;
  for (EndoIndex a = 0; a < ctx.endomorphisms().size(); ++a) {
    for (std::int64_t k = -w; k <= w; ++k) {
      if (ctx.contains(a, BigInt(k))) out.push_back(ctx.element(a, BigInt(k)));
    }
  }
  return out;
}

SuiteResult check_closure(const MonoidContext& ctx, std::uint32_t window) {
  SuiteResult r{"closure", true, 0, {}};
  const auto elements = elements_in_window(ctx, window);
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      const auto p = ctx.multiply(x, y);
      ++r.cases;
      if (!ctx.contains(p.alpha(), p.degree())) {
        r.pass = false;
        r.witness = describe(x) + " * " + describe(y) + " = " + describe(p);
        return r;
      }
    }
  }
  return r;
}

SuiteResult check_associativity(const MonoidContext& ctx, std::size_t samples,
                                std::uint64_t seed, std::uint32_t spread) {
  SuiteResult r{"associativity", true, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_endo(0, ctx.endomorphisms().size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_shift(-std::int64_t{spread}, spread);
  auto draw = [&] {
    const EndoIndex a = pick_endo(rng);
    const std::int64_t k = ctx.least_representative(a).convert_to<std::int64_t>() +
                           pick_shift(rng) * std::int64_t{ctx.modulus()};
    return ctx.element(a, BigInt(k));
  };
  const auto one = ctx.identity();
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = draw(), y = draw(), z = draw();
    ++r.cases;
    const auto left = ctx.multiply(ctx.multiply(x, y), z);
    const auto right = ctx.multiply(x, ctx.multiply(y, z));
    if (!(left == right)) {
      r.pass = false;
      r.witness = describe(x) + ", " + describe(y) + ", " + describe(z);
      return r;
    }
    if (!(ctx.multiply(one, x) == x) || !(ctx.multiply(x, one) == x)) {
      r.pass = false;
      r.witness = "identity fails on " + describe(x);
      return r;
    }
  }
  return r;
}

SuiteResult check_units(const MonoidContext& ctx, std::uint32_t window) {
  SuiteResult r{"units", true, 0, {}};
  std::vector<SpaceFormElement> candidates;
  for (EndoIndex b = 0; b < ctx.endomorphisms().size(); ++b) {
    for (int sign : {1, -1}) {
      if (ctx.contains(b, BigInt(sign))) candidates.push_back(ctx.element(b, BigInt(sign)));
    }
  }
  const auto one = ctx.identity();
  for (const auto& x : elements_in_window(ctx, window)) {
    ++r.cases;
    bool has_inverse = false;
    for (const auto& y : candidates) {
      if (ctx.multiply(x, y) == one && ctx.multiply(y, x) == one) {
        has_inverse = true;
        break;
      }
    }
    if (has_inverse != ctx.is_invertible(x)) {
      r.pass = false;
      r.witness = describe(x);
      return r;
    }
  }
  return r;
}

SuiteResult check_equivalence_group(const MonoidContext& ctx) {
  SuiteResult r{"equivalence-group", true, 0, {}};
  const auto e = ctx.equivalence_group();
  const std::size_t n = e.order();
  auto failed = [&r](std::string why) {
    r.pass = false;
    r.witness = std::move(why);
    return r;
  };
  if (!(e.elements[e.identity] == ctx.identity())) return failed("identity missing");
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      if (e.table[i][j] == e.identity && e.table[j][i] == e.identity) has_inverse = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (e.table[e.table[i][j]][k] != e.table[i][e.table[j][k]]) {
          return failed("associativity fails in E(G,n)");
        }
      }
    }
    if (!has_inverse) return failed("no inverse for " + describe(e.elements[i]));
    if (!ctx.is_invertible(e.elements[i])) return failed(describe(e.elements[i]) + " is not a unit");
  }
  std::size_t expected = 0;
  const std::uint32_t m = ctx.modulus();
  if (m <= 2) {
    expected = 2;
  } else {
    for (EndoIndex a : ctx.endomorphisms().automorphism_indices()) {
      const std::uint32_t d = ctx.degree_hom().values()[a];
      if (d == 1 || d == m - 1) ++expected;
    }
  }
  if (expected != n) {
    return failed("order " + std::to_string(n) + ", expected " + std::to_string(expected));
  }
  return r;
}

SuiteResult check_commutativity(const MonoidContext& ctx) {
  SuiteResult r{"commutativity", true, 0, {}};
  const auto& endos = ctx.endomorphisms();
  bool commutes = true;
  std::string witness;
  for (EndoIndex a = 0; a < endos.size() && commutes; ++a) {
    const auto x = ctx.element(a, ctx.least_representative(a));
    for (EndoIndex b = 0; b < endos.size(); ++b) {
      ++r.cases;
      const auto y = ctx.element(b, ctx.least_representative(b));
      if (!(ctx.multiply(x, y) == ctx.multiply(y, x))) {
        commutes = false;
        witness = describe(x) + " and " + describe(y) + " do not commute";
        break;
      }
    }
  }
  if (commutes != ctx.is_abelian()) {
    r.pass = false;
    r.witness = "is_abelian disagrees with pairwise testing; " + witness;
  }
  return r;
}

}  // namespace spaceform

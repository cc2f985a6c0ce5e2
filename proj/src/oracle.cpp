#include "spaceform/oracle.hpp"

#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "spaceform/error.hpp"
#include "spaceform/monoid_odd.hpp"

namespace spaceform {

namespace {

// Walks d, d+m, d+2m, ... (or downwards) until it reaches or passes k.
// Distances beyond kMaxSteps moduli fall back to a divisibility test.
constexpr std::int64_t kMaxSteps = 1 << 16;

bool in_coset(std::int64_t d, std::int64_t m, std::int64_t k) {
  const std::int64_t gap = k - d;
  if (gap / m > kMaxSteps || gap / m < -kMaxSteps) return gap % m == 0;
  std::int64_t x = d;
  if (k >= d) {
    while (x < k) x += m;
  } else {
    while (x > k) x -= m;
  }
  return x == k;
}

bool in_coset(const BigInt& d, std::uint32_t m, const BigInt& k) {
  const BigInt gap = k - d;
  return gap % m == 0;
}

}  // namespace

SelfMapOracle::SelfMapOracle(std::uint32_t m, std::uint32_t n) : m_(m), n_(n) {
  if (m == 0) fail(ErrorCode::InvalidOrder, "cyclic group order must be >= 1");
}

std::uint32_t SelfMapOracle::naive_degree_residue(std::uint32_t r) const {
  std::uint64_t acc = 1 % m_;
  for (std::uint32_t i = 0; i <= n_; ++i) acc = acc * (r % m_) % m_;
  return static_cast<std::uint32_t>(acc);
}

bool SelfMapOracle::valid(std::uint32_t r, const BigInt& degree) const {
  if (r >= m_) return false;
  const std::uint32_t d = naive_degree_residue(r);
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 2;
  if (degree > -kLimit && degree < kLimit) {
    return in_coset(std::int64_t{d}, std::int64_t{m_}, degree.convert_to<std::int64_t>());
  }
  return in_coset(BigInt(d), m_, degree);
}

SelfMapClass SelfMapOracle::make(std::uint32_t r, BigInt degree) const {
  if (!valid(r, degree)) {
    fail(ErrorCode::NotRealizable, "no self-map with pi_1 = " + std::to_string(r) +
                                       " and degree " + to_string(degree));
  }
  return SelfMapClass{m_, n_, r, std::move(degree)};
}

SelfMapClass compose_selfmaps(const SelfMapClass& f, const SelfMapClass& g) {
  if (f.modulus != g.modulus || f.n != g.n) {
    fail(ErrorCode::Domain, "self-map classes belong to different space forms");
  }
  const auto pi1 = static_cast<std::uint32_t>(std::uint64_t{f.pi1} * g.pi1 % f.modulus);
  return SelfMapClass{f.modulus, f.n, pi1, f.degree * g.degree};
}

CrossCheckReport cross_check(std::uint32_t m, std::uint32_t n, std::uint32_t window) {
  CrossCheckReport report;
  report.modulus = m;
  report.n = n;
  report.window = window;
  auto mismatch = [&report](std::string what) {
    report.pass = false;
    report.discrepancy = std::move(what);
    return report;
  };

  const SelfMapOracle oracle(m, n);
  const MonoidContext ctx(make_cyclic(m, std::max(m, kDefaultMaxOrder)), n);
  const auto& endos = ctx.endomorphisms();
  report.classes = endos.size();
  if (endos.size() != m) {
    return mismatch("End(C_m) has " + std::to_string(endos.size()) + " elements, oracle has " +
                    std::to_string(m));
  }

  // Endomorphism index -> multiplier, read off the image of the generator 1.
  std::vector<std::uint32_t> residue_of(endos.size());
  std::vector<char> hit(m, 0);
  for (EndoIndex a = 0; a < endos.size(); ++a) {
    residue_of[a] = m == 1 ? 0 : endos[a].images[1];
    if (hit[residue_of[a]]) return mismatch("two endomorphisms share a multiplier");
    hit[residue_of[a]] = 1;
  }

  struct Pair {
    SpaceFormElement element;
    SelfMapClass selfmap;
  };
  std::vector<Pair> valid;
  const std::int64_t w = window;
  for (EndoIndex a = 0; a < endos.size(); ++a) {
    for (std::int64_t k = -w; k <= w; ++k) {
      const BigInt degree(k);
      const bool by_oracle = oracle.valid(residue_of[a], degree);
      const bool by_monoid = ctx.contains(a, degree);
      if (by_oracle != by_monoid) {
        return mismatch("validity differs at (alpha=" + std::to_string(a) +
                        ", k=" + std::to_string(k) + ")");
      }
      if (by_monoid) {
        valid.push_back({ctx.element(a, degree), oracle.make(residue_of[a], degree)});
      }
    }
  }
  report.elements = valid.size();

  for (const auto& x : valid) {
    for (const auto& y : valid) {
      const auto p = ctx.multiply(x.element, y.element);
      const auto q = compose_selfmaps(x.selfmap, y.selfmap);
      ++report.products;
      if (residue_of[p.alpha()] != q.pi1 || p.degree() != q.degree) {
        return mismatch("products differ for (" + std::to_string(x.element.alpha()) + "," +
                        to_string(x.element.degree()) + ") * (" +
                        std::to_string(y.element.alpha()) + "," +
                        to_string(y.element.degree()) + ")");
      }
      if (!ctx.contains(p.alpha(), p.degree()) || !oracle.valid(q.pi1, q.degree)) {
        return mismatch("product left the monoid: (" + std::to_string(p.alpha()) + "," +
                        to_string(p.degree()) + ")");
      }
    }
  }
  return report;
}

nlohmann::json to_json(const CrossCheckReport& report) {
  nlohmann::json j = {
      {"pass", report.pass},
      {"m", report.modulus},
      {"n", report.n},
      {"window", report.window},
      {"counts",
       {{"classes", report.classes},
        {"elements", report.elements},
        {"products", report.products}}},
  };
  if (!report.pass) j["witness"] = report.discrepancy;
  return j;
}

}  // namespace spaceform

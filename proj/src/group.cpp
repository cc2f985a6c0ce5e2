#include "spaceform/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "spaceform/error.hpp"

namespace spaceform {

namespace {

void check_order_cap(std::uint64_t order, std::uint32_t max_order) {
  if (order > max_order) {
    fail(ErrorCode::Size, "group order " + std::to_string(order) +
                              " exceeds the configured cap " +
                              std::to_string(max_order));
  }
}

bool is_latin_square(std::uint32_t n, const std::vector<Element>& table) {
  std::vector<char> seen(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t y = 0; y < n; ++y) {
      Element v = table[std::size_t{x} * n + y];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (std::uint32_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      Element v = table[std::size_t{x} * n + y];
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

FiniteGroup build_validated(std::uint32_t order, std::vector<Element> table,
                            std::uint32_t max_order) {
  return FiniteGroup(order, std::move(table), max_order);
}

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<Element> table,
                         std::uint32_t max_order)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) fail(ErrorCode::InvalidOrder, "group order must be >= 1");
  check_order_cap(order_, max_order);
  const std::size_t n = order_;
  if (table_.size() != n * n) {
    fail(ErrorCode::Structure, "table is not square");
  }
  for (Element v : table_) {
    if (v >= order_) fail(ErrorCode::Structure, "table entry out of range");
  }
  if (!is_latin_square(order_, table_)) {
    fail(ErrorCode::Structure, "table is not a Latin square");
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      fail(ErrorCode::NotAGroup, "element 0 is not a two-sided identity");
    }
  }
  // Exhaustive associativity check; O(|G|^3) and bounded by the order cap.
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      const Element xy = mul(x, y);
      for (Element z = 0; z < order_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          fail(ErrorCode::NotAGroup,
               "associativity fails at (" + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  inverses_.assign(n, 0);
  for (Element x = 0; x < order_; ++x) {
    auto r = row(x);
    inverses_[x] = static_cast<Element>(std::find(r.begin(), r.end(), 0) - r.begin());
    if (mul(inverses_[x], x) != 0) {
      fail(ErrorCode::NotAGroup, "missing two-sided inverse");
    }
  }
  orders_.assign(n, 0);
  for (Element x = 0; x < order_; ++x) {
    std::uint32_t t = 1;
    for (Element p = x; p != 0; p = mul(p, x)) ++t;
    orders_[x] = t;
  }
}

Element FiniteGroup::power(Element x, std::uint64_t exponent) const noexcept {
  Element result = 0;
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(Element x) const {
  if (x >= order_) {
    fail(ErrorCode::Domain, "element " + std::to_string(x) + " out of range");
  }
  return orders_[x];
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element x = 0; x < order_; ++x) {
    for (Element y = x + 1; y < order_; ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

std::optional<Element> FiniteGroup::cyclic_generator() const noexcept {
  for (Element x = 0; x < order_; ++x) {
    if (orders_[x] == order_) return x;
  }
  return std::nullopt;
}

FiniteGroup make_cyclic(std::uint32_t m, std::uint32_t max_order) {
  if (m == 0) fail(ErrorCode::InvalidOrder, "cyclic group order must be >= 1");
  check_order_cap(m, max_order);
  std::vector<Element> table(std::size_t{m} * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      table[std::size_t{i} * m + j] = (i + j) % m;
    }
  }
  return build_validated(m, std::move(table), max_order);
}

FiniteGroup make_from_table(const std::vector<std::vector<std::int64_t>>& rows,
                            std::uint32_t max_order) {
  if (rows.empty()) fail(ErrorCode::InvalidOrder, "empty group table");
  check_order_cap(rows.size(), max_order);
  const auto n = static_cast<std::uint32_t>(rows.size());
  std::vector<Element> table;
  table.reserve(std::size_t{n} * n);
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorCode::Structure, "table is not square");
    for (std::int64_t v : r) {
      if (v < 0 || v >= n) fail(ErrorCode::Structure, "table entry out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  if (!is_latin_square(n, table)) {
    fail(ErrorCode::Structure, "table is not a Latin square");
  }

  // Locate the identity: a row equal to 0..n-1 whose column is also 0..n-1.
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = table[std::size_t{e} * n + x] == x && table[std::size_t{x} * n + e] == x;
    }
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorCode::NotAGroup, "table has no identity element");

  if (*identity != 0) {
    const Element e = *identity;
    auto relabel = [e](Element v) -> Element {
      if (v == e) return 0;
      if (v == 0) return e;
      return v;
    };
    std::vector<Element> swapped(table.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        swapped[std::size_t{relabel(x)} * n + relabel(y)] =
            relabel(table[std::size_t{x} * n + y]);
      }
    }
    table = std::move(swapped);
  }
  return build_validated(n, std::move(table), max_order);
}

FiniteGroup make_generalized_quaternion(std::uint32_t order,
                                        std::uint32_t max_order) {
  if (order < 8 || order % 4 != 0) {
    fail(ErrorCode::InvalidOrder,
         "generalized quaternion order must be a multiple of 4 and >= 8, got " +
             std::to_string(order));
  }
  check_order_cap(order, max_order);
  const std::uint32_t k = order / 4;
  const std::uint32_t cyc = 2 * k;
  auto index = [cyc](std::uint32_t a, std::uint32_t b) { return a % cyc + cyc * b; };
  std::vector<Element> table(std::size_t{order} * order);
  for (std::uint32_t a = 0; a < cyc; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      for (std::uint32_t c = 0; c < cyc; ++c) {
        for (std::uint32_t d = 0; d < 2; ++d) {
          // x^a y^b x^c y^d = x^{a +- c} y^{b+d}, with y^2 = x^k.
          std::uint32_t exp = b == 0 ? a + c : a + cyc - c;
          std::uint32_t ybits = b + d;
          if (ybits == 2) {
            exp += k;
            ybits = 0;
          }
          table[std::size_t{index(a, b)} * order + index(c, d)] = index(exp, ybits);
        }
      }
    }
  }
  return build_validated(order, std::move(table), max_order);
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                std::uint32_t max_order) {
  const std::uint64_t order = std::uint64_t{a.order()} * b.order();
  check_order_cap(order, max_order);
  const auto n = static_cast<std::uint32_t>(order);
  const std::uint32_t nb = b.order();
  std::vector<Element> table(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[std::size_t{x} * n + y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return build_validated(n, std::move(table), max_order);
}

FiniteGroup make_metacyclic(std::uint32_t a, std::uint32_t b, std::uint32_t u,
                            std::uint32_t max_order) {
  if (a == 0 || b == 0) fail(ErrorCode::InvalidOrder, "factor orders must be >= 1");
  const std::uint64_t order = std::uint64_t{a} * b;
  check_order_cap(order, max_order);
  u %= a;
  std::uint64_t ub = 1 % a;
  for (std::uint32_t j = 0; j < b; ++j) ub = ub * u % a;
  if (gcd64(u, a) != 1 || ub != 1 % a) {
    fail(ErrorCode::InvalidArgument,
         "twist must be a unit with u^b = 1 mod a");
  }
  std::vector<std::uint64_t> upow(b);
  upow[0] = 1 % a;
  for (std::uint32_t j = 1; j < b; ++j) upow[j] = upow[j - 1] * u % a;
  const auto n = static_cast<std::uint32_t>(order);
  std::vector<Element> table(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::uint32_t i = x % a, j = x / a, c = y % a, d = y / a;
      // x^i y^j x^c y^d = x^{i + c u^j} y^{j+d}
      const auto exp = static_cast<std::uint32_t>((i + c * upow[j]) % a);
      table[std::size_t{x} * n + y] = exp + a * ((j + d) % b);
    }
  }
  return build_validated(n, std::move(table), max_order);
}

FiniteGroup group_from_json(const nlohmann::json& doc, std::uint32_t max_order) {
  if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array()) {
    fail(ErrorCode::Parse, "group file must be an object with a \"table\" array");
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : doc["table"]) {
    if (!r.is_array()) fail(ErrorCode::Parse, "group table rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) fail(ErrorCode::Parse, "group table entries must be integers");
      row.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  if (doc.contains("order")) {
    const auto& o = doc["order"];
    if (!o.is_number_integer() || o.get<std::int64_t>() != static_cast<std::int64_t>(rows.size())) {
      fail(ErrorCode::Structure, "\"order\" does not match the table size");
    }
  }
  return make_from_table(rows, max_order);
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (Element x = 0; x < g.order(); ++x) {
    auto r = g.row(x);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  return {{"order", g.order()}, {"table", std::move(rows)}};
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<std::uint32_t>(n));
  return primes;
}

AdmissibilityReport rank_one_check(const FiniteGroup& g) {
  AdmissibilityReport report;
  for (std::uint32_t p : prime_divisors(g.order())) {
    std::uint32_t count = 0;
    std::vector<Element> order_p;
    for (Element x = 0; x < g.order(); ++x) {
      if (g.power(x, p) == 0) ++count;
      if (g.element_order(x) == p) order_p.push_back(x);
    }
    report.counts.push_back({p, count});
    // A non-cyclic subgroup of order p^2 is C_p x C_p: two commuting
    // elements of order p, neither a power of the other.
    bool elementary = false;
    for (std::size_t i = 0; i < order_p.size() && !elementary; ++i) {
      const Element x = order_p[i];
      std::vector<bool> in_x(g.order(), false);
      for (std::uint32_t e = 0; e < p; ++e) in_x[g.power(x, e)] = true;
      for (std::size_t j = i + 1; j < order_p.size(); ++j) {
        const Element y = order_p[j];
        if (!in_x[y] && g.mul(x, y) == g.mul(y, x)) {
          elementary = true;
          break;
        }
      }
    }
    if (elementary) report.failing_primes.push_back(p);
  }
  report.pass = report.failing_primes.empty();
  return report;
}

}  // namespace spaceform

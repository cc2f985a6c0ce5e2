#include <nlohmann/json.hpp>

#include "doctest.h"
#include "spaceform/error.hpp"
#include "spaceform/group.hpp"

using namespace spaceform;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

const std::vector<std::vector<std::int64_t>> kKlein = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

// Loop of order 5 with two-sided identity 0; not associative.
const std::vector<std::vector<std::int64_t>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

// Independent restatement of the table invariants.
void require_group_axioms(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    std::vector<int> row(n), col(n);
    for (Element y = 0; y < n; ++y) {
      ++row[g.mul(x, y)];
      ++col[g.mul(y, x)];
    }
    for (Element v = 0; v < n; ++v) {
      REQUIRE(row[v] == 1);
      REQUIRE(col[v] == 1);
    }
    REQUIRE(g.mul(0, x) == x);
    REQUIRE(g.mul(x, 0) == x);
    REQUIRE(g.mul(x, g.inverse(x)) == 0);
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
  }
}

}  // namespace

TEST_CASE("make_cyclic small cases") {
  const auto c1 = make_cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.table() == std::vector<Element>{0});

  const auto c2 = make_cyclic(2);
  CHECK(c2.table() == std::vector<Element>{0, 1, 1, 0});

  const auto c12 = make_cyclic(12);
  CHECK(c12.element_order(1) == 12);
  CHECK(c12.element_order(4) == 3);
  CHECK(c12.element_order(8) == 3);
  CHECK(c12.element_order(0) == 1);

  CHECK(code_of([] { make_cyclic(0); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("make_from_table accepts groups and relabels the identity") {
  const auto c2 = make_from_table({{0, 1}, {1, 0}});
  CHECK(c2 == make_cyclic(2));

  const auto klein = make_from_table(kKlein);
  CHECK(klein.is_abelian());
  CHECK_FALSE(klein.is_cyclic());
  for (Element x = 0; x < 4; ++x) CHECK(klein.mul(x, x) == 0);

  // C3 written with its identity at index 1.
  const auto shifted = make_from_table({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  require_group_axioms(shifted);
  CHECK(shifted.is_cyclic());
  CHECK(shifted.element_order(1) == 3);
}

TEST_CASE("make_from_table rejects non-groups") {
  // The witness really is a non-associative Latin square with identity.
  bool associative = true;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z)
        if (kLoop5[kLoop5[x][y]][z] != kLoop5[x][kLoop5[y][z]]) associative = false;
  REQUIRE_FALSE(associative);
  CHECK(code_of([] { make_from_table(kLoop5); }) == ErrorCode::NotAGroup);
  try {
    make_from_table(kLoop5);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }

  CHECK(code_of([] { make_from_table({{0, 1}, {0, 1}}); }) == ErrorCode::Structure);
  CHECK(code_of([] { make_from_table({{0, 1}, {1}}); }) == ErrorCode::Structure);
  CHECK(code_of([] { make_from_table({{0, 2}, {1, 0}}); }) == ErrorCode::Structure);
  CHECK(code_of([] { make_from_table({{0, -1}, {1, 0}}); }) == ErrorCode::Structure);
  CHECK(code_of([] { make_from_table({}); }) == ErrorCode::InvalidOrder);
  // Latin square whose only left identity is not a right identity.
  CHECK(code_of([] { make_from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}); }) ==
        ErrorCode::NotAGroup);
}

TEST_CASE("order cap") {
  CHECK(code_of([] { make_cyclic(129); }) == ErrorCode::Size);
  CHECK(make_cyclic(129, 200).order() == 129);
  CHECK(code_of([] { make_generalized_quaternion(16, 8); }) == ErrorCode::Size);
  CHECK(code_of([] { make_direct_product(make_cyclic(12), make_cyclic(12)); }) == ErrorCode::Size);
}

TEST_CASE("generalized quaternion groups") {
  const auto q8 = make_generalized_quaternion(8);
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  int involutions = 0;
  for (Element x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);

  CHECK(code_of([] { make_generalized_quaternion(6); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { make_generalized_quaternion(4); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { make_generalized_quaternion(10); }) == ErrorCode::InvalidOrder);

  for (std::uint32_t k = 2; 4 * k <= 128; ++k) {
    const auto g = make_generalized_quaternion(4 * k);
    CHECK_FALSE(g.is_abelian());
    int twos = 0;
    for (Element x = 0; x < g.order(); ++x) twos += g.element_order(x) == 2;
    CHECK(twos == 1);
  }
}

TEST_CASE("constructed groups satisfy the axioms and Lagrange") {
  std::vector<FiniteGroup> groups{make_cyclic(1),
                                  make_cyclic(7),
                                  make_cyclic(24),
                                  make_generalized_quaternion(8),
                                  make_generalized_quaternion(24),
                                  make_from_table(kKlein),
                                  make_direct_product(make_cyclic(3), make_cyclic(3)),
                                  make_metacyclic(3, 2, 2),
                                  make_metacyclic(7, 3, 2)};
  for (const auto& g : groups) {
    require_group_axioms(g);
    for (Element x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
  }
  for (std::uint32_t m = 1; m <= 40; ++m) CHECK(make_cyclic(m).is_abelian());
}

TEST_CASE("rank-one admissibility") {
  const auto c12 = rank_one_check(make_cyclic(12));
  CHECK(c12.pass);
  REQUIRE(c12.counts.size() == 2);
  CHECK(c12.counts[0].prime == 2);
  CHECK(c12.counts[0].solutions == 2);
  CHECK(c12.counts[1].prime == 3);
  CHECK(c12.counts[1].solutions == 3);

  const auto klein = rank_one_check(make_from_table(kKlein));
  CHECK_FALSE(klein.pass);
  CHECK(klein.counts[0].solutions == 4);
  CHECK(klein.failing_primes == std::vector<std::uint32_t>{2});

  const auto q8 = rank_one_check(make_generalized_quaternion(8));
  CHECK(q8.pass);
  CHECK(q8.counts[0].solutions == 2);

  const auto q16 = rank_one_check(make_generalized_quaternion(16));
  CHECK(q16.pass);
  CHECK(q16.counts[0].solutions == 2);

  const auto c3c3 = rank_one_check(make_direct_product(make_cyclic(3), make_cyclic(3)));
  CHECK_FALSE(c3c3.pass);
  CHECK(c3c3.counts[0].solutions == 9);

  for (std::uint32_t m = 1; m <= 60; ++m) CHECK(rank_one_check(make_cyclic(m)).pass);
  for (std::uint32_t k = 2; 4 * k <= 128; ++k) {
    CHECK(rank_one_check(make_generalized_quaternion(4 * k)).pass);
  }
  // Any group containing C_p x C_p fails.
  CHECK_FALSE(rank_one_check(make_direct_product(make_cyclic(2), make_cyclic(6))).pass);
  CHECK_FALSE(rank_one_check(make_direct_product(make_cyclic(5), make_cyclic(5))).pass);
  CHECK_FALSE(rank_one_check(make_metacyclic(4, 2, 3)).pass);  // D4 contains a Klein group

  // More than p solutions without a C_p x C_p subgroup.
  const auto s3 = rank_one_check(make_metacyclic(3, 2, 2));
  CHECK(s3.counts[0].solutions == 4);
  CHECK(s3.pass);
  CHECK(rank_one_check(make_metacyclic(7, 3, 2)).pass);
}

TEST_CASE("group JSON file format") {
  const auto q8 = make_generalized_quaternion(8);
  CHECK(group_from_json(group_to_json(q8)) == q8);

  const auto doc = nlohmann::json::parse(R"({"order": 2, "table": [[0,1],[1,0]]})");
  CHECK(group_from_json(doc) == make_cyclic(2));

  CHECK(code_of([] { group_from_json(nlohmann::json::parse(R"({"order": 3, "table": [[0,1],[1,0]]})")); }) ==
        ErrorCode::Structure);
  CHECK(code_of([] { group_from_json(nlohmann::json::parse(R"({"rows": []})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { group_from_json(nlohmann::json::parse(R"({"table": [[0, 1.5],[1,0]]})")); }) ==
        ErrorCode::Parse);
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(12) == std::vector<std::uint32_t>{2, 3});
  CHECK(prime_divisors(97) == std::vector<std::uint32_t>{97});
  CHECK(prime_divisors(128) == std::vector<std::uint32_t>{2});
}

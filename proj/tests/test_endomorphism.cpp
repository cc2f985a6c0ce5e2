#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spaceform/endomorphism.hpp"
#include "spaceform/error.hpp"

using namespace spaceform;

namespace {

std::vector<oracle::Images> images_of(const std::vector<Endomorphism>& endos) {
  std::vector<oracle::Images> out;
  for (const auto& e : endos) out.push_back(e.images);
  return out;
}

}  // namespace

TEST_CASE("enumeration matches brute force on small groups") {
  const std::vector<FiniteGroup> groups{
      make_cyclic(1),
      make_cyclic(2),
      make_cyclic(6),
      make_cyclic(8),
      make_generalized_quaternion(8),
      make_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}),
      make_metacyclic(3, 2, 2),   // S3
      make_metacyclic(4, 2, 3),   // D4
      make_direct_product(make_cyclic(2), make_cyclic(4)),
  };
  for (const auto& g : groups) {
    const auto endos = enumerate_endomorphisms(g);
    CHECK(images_of(endos) == oracle::brute_force_endomorphisms(g));
    for (std::size_t i = 0; i < endos.size(); ++i) {
      CHECK(endos[i].canonical_index == i);
      CHECK(endos[i].images[0] == 0);
      CHECK(endos[i].is_automorphism == oracle::is_bijective(endos[i].images));
    }
  }
}

TEST_CASE("cyclic endomorphisms are x -> rx with index r") {
  const auto c6 = enumerate_endomorphisms(make_cyclic(6));
  REQUIRE(c6.size() == 6);
  for (std::uint32_t r = 0; r < 6; ++r) {
    for (std::uint32_t x = 0; x < 6; ++x) CHECK(c6[r].images[x] == r * x % 6);
  }
  CHECK(enumerate_endomorphisms(make_cyclic(1)).size() == 1);

  const auto aut12 = enumerate_automorphisms(make_cyclic(12));
  std::vector<Element> rs;
  for (const auto& a : aut12) rs.push_back(a.images[1]);
  CHECK(rs == std::vector<Element>{1, 5, 7, 11});
  CHECK(enumerate_automorphisms(make_cyclic(2)).size() == 1);

  for (std::uint32_t m = 1; m <= 50; ++m) {
    const EndomorphismSet set(make_cyclic(m));
    CHECK(set.size() == m);
    CHECK(set.automorphism_indices().size() == oracle::euler_phi(m));
  }
}

TEST_CASE("Q8 endomorphism counts") {
  const auto q8 = make_generalized_quaternion(8);
  const auto brute = oracle::brute_force_endomorphisms(q8);
  std::size_t bijective = 0;
  for (const auto& f : brute) bijective += oracle::is_bijective(f);
  REQUIRE(brute.size() == 28);
  REQUIRE(bijective == 24);

  CHECK(enumerate_endomorphisms(q8).size() == 28);
  CHECK(enumerate_automorphisms(q8).size() == 24);
}

TEST_CASE("greedy generators") {
  CHECK(greedy_generators(make_cyclic(12)) == std::vector<Element>{1});
  CHECK(greedy_generators(make_cyclic(1)).empty());
  CHECK(greedy_generators(make_generalized_quaternion(8)) == std::vector<Element>{1, 4});
  CHECK(greedy_generators(make_direct_product(make_cyclic(2), make_cyclic(2))).size() == 2);
}

TEST_CASE("compose") {
  const EndomorphismSet c5(make_cyclic(5));
  CHECK(c5.compose(2, 3) == 1);
  CHECK(c5.compose(c5.identity_index(), 4) == 4);
  CHECK(c5.compose(c5[2], c5[3]) == c5[1]);

  const EndomorphismSet c6(make_cyclic(6));
  CHECK(c6.compose(2, 3) == 0);

  // A map from another group is rejected.
  const EndomorphismSet c3(make_cyclic(3));
  CHECK_THROWS_AS(c5.compose(c5[1], c3[1]), Error);
  CHECK_THROWS_AS(c5.compose(std::size_t{5}, std::size_t{0}), Error);

  // Residue multiplication on C_m.
  for (std::uint32_t m = 1; m <= 30; ++m) {
    const EndomorphismSet set(make_cyclic(m));
    for (EndoIndex a = 0; a < m; ++a)
      for (EndoIndex b = 0; b < m; ++b) CHECK(set.compose(a, b) == a * b % m);
  }
}

TEST_CASE("End(G) is a monoid under compose") {
  const std::vector<FiniteGroup> groups{make_cyclic(12), make_cyclic(30), make_generalized_quaternion(8),
                                        make_metacyclic(3, 2, 2),
                                        make_direct_product(make_cyclic(2), make_cyclic(2))};
  for (const auto& g : groups) {
    const EndomorphismSet set(g);
    REQUIRE(set.size() <= 30);
    const auto raw = images_of({set.all().begin(), set.all().end()});
    const EndoIndex id = set.identity_index();
    for (EndoIndex a = 0; a < set.size(); ++a) {
      CHECK(set.compose(id, a) == a);
      CHECK(set.compose(a, id) == a);
      for (EndoIndex b = 0; b < set.size(); ++b) {
        const EndoIndex ab = set.compose(a, b);
        CHECK(raw[ab] == oracle::raw_compose(raw[a], raw[b]));
        for (EndoIndex c = 0; c < set.size(); ++c) {
          CHECK(set.compose(ab, c) == set.compose(a, set.compose(b, c)));
        }
      }
    }
  }

  // Larger monoid without a product table: sampled triples.
  const EndomorphismSet big(make_direct_product(make_cyclic(2), make_cyclic(16)));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(big.compose(big.compose(a, b), c) == big.compose(a, big.compose(b, c)));
  }
}

TEST_CASE("enumeration caps") {
  EnumerationLimits tight;
  tight.max_endomorphisms = 100;
  const auto c2cubed =
      make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2));
  try {
    enumerate_endomorphisms(c2cubed, tight);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Size);
  }
  EnumerationLimits small_order;
  small_order.max_order = 4;
  CHECK_THROWS_AS(enumerate_endomorphisms(make_cyclic(5), small_order), Error);
  CHECK(enumerate_endomorphisms(c2cubed).size() == 512);
}

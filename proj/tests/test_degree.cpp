#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "spaceform/degree.hpp"
#include "spaceform/error.hpp"

using namespace spaceform;

namespace {

std::vector<oracle::Images> images_of(const EndomorphismSet& set) {
  std::vector<oracle::Images> out;
  for (const auto& e : set.all()) out.push_back(e.images);
  return out;
}

DegreeTable load_table(const std::string& name) {
  std::ifstream in(std::string(SPACEFORM_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return degree_table_from_json(nlohmann::json::parse(in));
}

ErrorCode build_error(const EndomorphismSet& set, std::uint32_t n, const std::optional<DegreeTable>& t) {
  try {
    build_degree_hom(set, n, t);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

DegreeTable table_from(const std::vector<std::uint32_t>& values, std::uint32_t n) {
  DegreeTable t;
  t.n = n;
  for (std::size_t i = 0; i < values.size(); ++i) t.values[i] = values[i];
  return t;
}

void expect_agreement(const FiniteGroup& g, const EndomorphismSet& set,
                      const std::vector<oracle::Images>& raw, const std::vector<std::uint32_t>& values) {
  const std::vector<std::int64_t> wide(values.begin(), values.end());
  const auto verdict = oracle::check_laws(g, raw, wide);
  const auto report = validate_degree_values(set, values);
  REQUIRE(report.laws.size() == 3);
  CHECK(report.laws[0].pass == verdict.identity);
  CHECK(report.laws[1].pass == verdict.units);
  CHECK(report.laws[2].pass == verdict.multiplicative);
  CHECK(report.pass == verdict.accepts());
  if (!report.pass) {
    const auto* f = report.first_failure();
    REQUIRE(f != nullptr);
    CHECK_FALSE(f->witness.empty());
  }
}

}  // namespace

TEST_CASE("Residue normalisation") {
  CHECK(Residue(-1, 5).value() == 4);
  CHECK(Residue(-10, 5).value() == 0);
  CHECK(Residue(126, 5).value() == 1);
  CHECK(Residue(7, 1).value() == 0);
  CHECK(Residue::of(BigInt("-1000000000000000000000001"), 10).value() == 9);
  CHECK((Residue(3, 8) * Residue(3, 8)).value() == 1);
  CHECK(Residue(5, 12).is_unit());
  CHECK_FALSE(Residue(4, 12).is_unit());
}

TEST_CASE("d_cyclic examples") {
  for (std::uint32_t m = 1; m <= 20; ++m)
    for (std::uint32_t n = 0; n <= 5; ++n) CHECK(d_cyclic(1, n, m) == Residue(1, m));
  CHECK(d_cyclic(2, 1, 5).value() == 4);
  CHECK(d_cyclic(0, 3, 2).value() == 0);
  CHECK(d_cyclic(1, 3, 2).value() == 1);
}

TEST_CASE("d_cyclic agrees with repeated multiplication") {
  for (std::uint32_t m = 1; m <= 50; ++m)
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t n = 0; n <= 12; ++n)
        REQUIRE(d_cyclic(r, n, m).value() == oracle::naive_pow_mod(r, n + 1, m));
}

TEST_CASE("builtin cyclic homomorphism") {
  const EndomorphismSet c5(make_cyclic(5));
  const auto d = build_degree_hom(c5, 1);
  CHECK(d.values() == std::vector<std::uint32_t>{0, 1, 4, 4, 1});
  CHECK(d.provenance() == Provenance::BuiltinCyclic);
  CHECK(d.modulus() == 5);

  const EndomorphismSet c1(make_cyclic(1));
  const auto d1 = build_degree_hom(c1, 0);
  CHECK(d1.values() == std::vector<std::uint32_t>{0});
  CHECK(validate_degree_hom(c1, d1).pass);

  for (std::uint32_t m = 1; m <= 50; ++m) {
    const EndomorphismSet set(make_cyclic(m));
    for (EndoIndex a = 0; a < m; ++a) CHECK(cyclic_residue(set, a) == std::optional<std::uint32_t>(a % m));
    for (std::uint32_t n = 0; n <= 12; ++n) {
      REQUIRE(validate_degree_hom(set, build_degree_hom(set, n)).pass);
    }
  }
}

TEST_CASE("validator witnesses") {
  const EndomorphismSet c3(make_cyclic(3));
  const auto bad_id = validate_degree_values(c3, std::vector<std::uint32_t>{0, 0, 1});
  REQUIRE_FALSE(bad_id.pass);
  CHECK(bad_id.first_failure()->law == "identity");
  CHECK(bad_id.first_failure()->witness == std::vector<EndoIndex>{1});

  // r^2 on C12 with the automorphism 5 moved to a non-unit.
  const EndomorphismSet c12(make_cyclic(12));
  auto values = build_degree_hom(c12, 1).values();
  values[5] = 2;
  const auto bad_unit = validate_degree_values(c12, values);
  REQUIRE_FALSE(bad_unit.pass);
  CHECK(bad_unit.laws[1].law == "automorphism-units");
  CHECK_FALSE(bad_unit.laws[1].pass);
  CHECK(bad_unit.laws[1].witness == std::vector<EndoIndex>{5});
  CHECK(bad_unit.first_failure()->law == "automorphism-units");

  DegreeTable t = table_from(values, 1);
  CHECK(build_error(c12, 1, t) == ErrorCode::InvalidTable);

  // Multiplicativity alone: d(2) = 2 on C5 gives d(2 o 2) = d(4) = 1 != 4.
  const EndomorphismSet c5(make_cyclic(5));
  const auto bad_mult = validate_degree_values(c5, std::vector<std::uint32_t>{0, 1, 2, 4, 1});
  REQUIRE_FALSE(bad_mult.pass);
  CHECK(bad_mult.laws[0].pass);
  CHECK(bad_mult.laws[1].pass);
  CHECK(bad_mult.first_failure()->law == "multiplicativity");
  CHECK(bad_mult.first_failure()->witness.size() == 2);
  CHECK(build_error(c5, 1, table_from({0, 1, 2, 4, 1}, 1)) == ErrorCode::NotAHomomorphism);
  CHECK(build_error(c3, 1, table_from({0, 0, 1}, 1)) == ErrorCode::NotAHomomorphism);

  CHECK_THROWS_AS(validate_degree_values(c5, std::vector<std::uint32_t>{0, 1}), Error);
}

TEST_CASE("user tables on Q8") {
  const EndomorphismSet q8(make_generalized_quaternion(8));
  CHECK(build_error(q8, 1, std::nullopt) == ErrorCode::UnsupportedGroup);

  const auto good = load_table("q8_dtable.json");
  const auto d = build_degree_hom(q8, 1, good);
  CHECK(d.provenance() == Provenance::UserSupplied);
  CHECK(validate_degree_hom(q8, d).pass);

  // The bad fixture changes one order-2 automorphism; validation must name a
  // pair that the oracle also sees violating the law.
  const auto bad = load_table("q8_bad_dtable.json");
  CHECK(build_error(q8, 1, bad) == ErrorCode::NotAHomomorphism);
  const auto values = degree_values_from_table(q8, bad);
  const auto report = validate_degree_values(q8, values);
  const auto* f = report.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->law == "multiplicativity");
  REQUIRE(f->witness.size() == 2);
  const auto raw = images_of(q8);
  const auto a = f->witness[0], b = f->witness[1];
  const auto ab = oracle::linear_index(raw, oracle::raw_compose(raw[a], raw[b]));
  CHECK(values[ab] % 8 != values[a] * values[b] % 8);

  // An order-2 automorphism with d = 3 alone is not a violation.
  EndoIndex involution = q8.size();
  for (EndoIndex i : q8.automorphism_indices()) {
    if (i != q8.identity_index() && q8.compose(i, i) == q8.identity_index()) {
      involution = i;
      break;
    }
  }
  REQUIRE(involution < q8.size());
  std::vector<std::uint32_t> flipped(q8.size(), 1);
  flipped[involution] = 3;
  const auto flipped_report = validate_degree_values(q8, flipped);
  if (!flipped_report.pass) {
    CHECK(flipped_report.first_failure()->witness != std::vector<EndoIndex>{involution, involution});
  }
  expect_agreement(q8.group(), q8, raw, flipped);

  DegreeTable wrong_n = good;
  wrong_n.n = 2;
  CHECK(build_error(q8, 1, wrong_n) == ErrorCode::InvalidArgument);

  DegreeTable missing = good;
  missing.values.erase(5);
  CHECK(build_error(q8, 1, missing) == ErrorCode::IncompleteTable);

  DegreeTable extra = good;
  extra.values[28] = 1;
  CHECK(build_error(q8, 1, extra) == ErrorCode::InvalidTable);
}

TEST_CASE("d-table JSON") {
  const auto t = degree_table_from_json(nlohmann::json::parse(R"({"n": 1, "values": {"0": 0, "1": -1}})"));
  CHECK(t.n == std::optional<std::uint32_t>(1));
  CHECK(t.values.at(1) == -1);
  CHECK_THROWS_AS(degree_table_from_json(nlohmann::json::parse(R"({"values": {"x": 1}})")), Error);
  CHECK_THROWS_AS(degree_table_from_json(nlohmann::json::parse(R"({"values": {"1": 1.5}})")), Error);
  CHECK_THROWS_AS(degree_table_from_json(nlohmann::json::parse(R"([1, 2])")), Error);

  const EndomorphismSet c5(make_cyclic(5));
  const auto d = build_degree_hom(c5, 1);
  const auto round = degree_table_from_json(degree_table_to_json(d));
  CHECK(build_degree_hom(c5, 1, round).values() == d.values());
  // Negative entries are reduced.
  CHECK(build_degree_hom(c5, 1, table_from({0, 1, 4, 4, 1}, 1)).values() ==
        build_degree_hom(c5, 1, degree_table_from_json(nlohmann::json::parse(
                                    R"({"n": 1, "values": {"0": 5, "1": 6, "2": -1, "3": 4, "4": -4}})")))
            .values());
}

TEST_CASE("validator agrees with the exhaustive law checker on every C6 table") {
  const auto g = make_cyclic(6);
  const EndomorphismSet set(g);
  const auto raw = images_of(set);
  std::size_t accepted = 0;
  std::vector<std::uint32_t> values(6);
  for (std::uint32_t code = 0; code < 46656; ++code) {
    std::uint32_t c = code;
    for (auto& v : values) {
      v = c % 6;
      c /= 6;
    }
    const std::vector<std::int64_t> wide(values.begin(), values.end());
    const bool oracle_accepts = oracle::check_laws(g, raw, wide).accepts();
    const bool ours = validate_degree_values(set, values).pass;
    REQUIRE(ours == oracle_accepts);
    accepted += ours;
  }
  // r -> r^k mod 6 is valid for every k >= 1.
  CHECK(accepted >= 2);
  for (std::size_t trial = 0; trial < 20; ++trial) {
    std::mt19937 rng(static_cast<unsigned>(trial));
    std::vector<std::uint32_t> v(6);
    for (auto& x : v) x = rng() % 6;
    expect_agreement(g, set, raw, v);
  }
}

TEST_CASE("validator agrees with the exhaustive law checker on random Q8 tables") {
  const auto g = make_generalized_quaternion(8);
  const EndomorphismSet set(g);
  const auto raw = images_of(set);
  const auto good = degree_values_from_table(set, load_table("q8_dtable.json"));
  const std::vector<std::uint32_t> ones(set.size(), 1);

  std::mt19937_64 rng(20261017);
  std::size_t accepted = 0, rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint32_t> values;
    switch (trial % 3) {
      case 0:  // uniformly random
        values.resize(set.size());
        for (auto& v : values) v = rng() % 8;
        break;
      case 1:  // valid base, a few entries perturbed
      case 2: {
        values = (trial % 2) ? good : ones;
        const int changes = static_cast<int>(rng() % 3);
        for (int c = 0; c < changes; ++c) values[rng() % values.size()] = rng() % 8;
        break;
      }
    }
    const std::vector<std::int64_t> wide(values.begin(), values.end());
    const bool oracle_accepts = oracle::check_laws(g, raw, wide).accepts();
    expect_agreement(g, set, raw, values);
    accepted += oracle_accepts;
    rejected += !oracle_accepts;
  }
  CHECK(accepted >= 20);
  CHECK(rejected >= 100);
}

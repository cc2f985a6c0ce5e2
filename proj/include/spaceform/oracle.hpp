#pragma once

// Second model of self-maps of lens spaces S^{2n+1}/C_m, kept deliberately
// apart from the monoid_odd code path: a homotopy class is the pair
// (pi_1 multiplier r, degree), d is recomputed by repeated multiplication and
// membership is decided by walking the coset d + mZ.

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "spaceform/bigint.hpp"

namespace spaceform {

struct SelfMapClass {
  std::uint32_t modulus = 1;
  std::uint32_t n = 0;
  std::uint32_t pi1 = 0;  // x -> pi1 * x on C_m; equals its canonical index
  BigInt degree;

  bool operator==(const SelfMapClass&) const = default;
};

class SelfMapOracle {
 public:
  SelfMapOracle(std::uint32_t m, std::uint32_t n);

  std::uint32_t modulus() const noexcept { return m_; }
  std::uint32_t n() const noexcept { return n_; }

  // r^{n+1} mod m by n+1 multiplications.
  std::uint32_t naive_degree_residue(std::uint32_t r) const;
  bool valid(std::uint32_t r, const BigInt& degree) const;
  // Throws NotRealizable for an invalid pair.
  SelfMapClass make(std::uint32_t r, BigInt degree) const;

 private:
  std::uint32_t m_;
  std::uint32_t n_;
};

// (pi1_f * pi1_g, deg f * deg g). Throws Domain on mismatched (m, n).
SelfMapClass compose_selfmaps(const SelfMapClass& f, const SelfMapClass& g);

struct CrossCheckReport {
  bool pass = true;
  std::uint32_t modulus = 1;
  std::uint32_t n = 0;
  std::uint32_t window = 1;
  std::size_t classes = 0;   // endomorphism classes compared
  std::size_t elements = 0;  // valid (alpha, k) with |k| <= window
  std::size_t products = 0;  // ordered pairs multiplied in both models
  std::string discrepancy;   // empty on success
};

// Compares the oracle with MonoidContext on C_m for all degrees in
// [-window, window] and all products of valid elements in that range.
CrossCheckReport cross_check(std::uint32_t m, std::uint32_t n, std::uint32_t window);

nlohmann::json to_json(const CrossCheckReport& report);

}  // namespace spaceform

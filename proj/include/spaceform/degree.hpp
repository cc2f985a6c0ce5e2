#pragma once

// The degree homomorphism d: End(G) -> (Z/|G|, *), i.e. the action of an
// endomorphism on H^{2n+2}(BG;Z) = Z/|G|.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spaceform/bigint.hpp"
#include "spaceform/endomorphism.hpp"

namespace spaceform {

// Element of Z/m stored as its least non-negative representative.
class Residue {
 public:
  Residue(std::int64_t value, std::uint32_t modulus);
  static Residue of(const BigInt& value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_unit() const noexcept;

  Residue operator*(const Residue& other) const;
  bool operator==(const Residue&) const noexcept = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

// r^{n+1} mod m by square-and-multiply.
Residue d_cyclic(std::uint64_t r, std::uint32_t n, std::uint32_t m);

enum class Provenance { BuiltinCyclic, UserSupplied };

// Contents of a d-table file: { "n": n, "values": { "<endo_index>": residue } }.
struct DegreeTable {
  std::optional<std::uint32_t> n;
  std::map<EndoIndex, std::int64_t> values;
};

DegreeTable degree_table_from_json(const nlohmann::json& doc);

class DegreeHom {
 public:
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t n() const noexcept { return n_; }
  Provenance provenance() const noexcept { return provenance_; }

  Residue operator()(EndoIndex alpha) const {
    return Residue(values_.at(alpha), modulus_);
  }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }

 private:
  DegreeHom(std::uint32_t modulus, std::uint32_t n, std::vector<std::uint32_t> values,
            Provenance provenance)
      : modulus_(modulus), n_(n), values_(std::move(values)), provenance_(provenance) {}

  friend DegreeHom build_degree_hom(const EndomorphismSet&, std::uint32_t,
                                    const std::optional<DegreeTable>&);

  std::uint32_t modulus_;
  std::uint32_t n_;
  std::vector<std::uint32_t> values_;
  Provenance provenance_;
};

nlohmann::json degree_table_to_json(const DegreeHom& d);

struct LawCheck {
  std::string law;  // "identity", "automorphism-units", "multiplicativity"
  bool pass = true;
  std::vector<EndoIndex> witness;
  std::string detail;
};

struct DegreeValidation {
  bool pass = true;
  std::vector<LawCheck> laws;

  const LawCheck* first_failure() const noexcept;
};

// Checks d(id) = 1, gcd(d(alpha), |G|) = 1 on Aut(G) and
// d(a o b) = d(a) d(b) on all pairs. Values must already be reduced mod |G|.
DegreeValidation validate_degree_values(const EndomorphismSet& endos,
                                        std::span<const std::uint32_t> values);
DegreeValidation validate_degree_hom(const EndomorphismSet& endos, const DegreeHom& d);

// For a cyclic group with generator g, the r with alpha(g) = g^r.
std::optional<std::uint32_t> cyclic_residue(const EndomorphismSet& endos, EndoIndex alpha);

// Dense value vector from a user table, reduced mod |G|. Throws InvalidTable
// for indices outside End(G) and IncompleteTable for missing ones.
std::vector<std::uint32_t> degree_values_from_table(const EndomorphismSet& endos,
                                                    const DegreeTable& table);

// Cyclic groups get d(r) = r^{n+1} unless a table is supplied; any other
// group needs a complete user table, which must pass validation.
DegreeHom build_degree_hom(const EndomorphismSet& endos, std::uint32_t n,
                           const std::optional<DegreeTable>& user_table = std::nullopt);

}  // namespace spaceform

#include "spaceform/degree.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

#include "spaceform/error.hpp"

namespace spaceform {

Residue::Residue(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) fail(ErrorCode::Domain, "residue modulus must be >= 1");
  value_ = mod_floor(value, modulus);
}

Residue Residue::of(const BigInt& value, std::uint32_t modulus) {
  if (modulus == 0) fail(ErrorCode::Domain, "residue modulus must be >= 1");
  return Residue(mod_floor(value, modulus), modulus);
}

bool Residue::is_unit() const noexcept {
  return std::gcd(value_, modulus_) == 1;
}

Residue Residue::operator*(const Residue& other) const {
  if (modulus_ != other.modulus_) fail(ErrorCode::Domain, "residue moduli differ");
  return Residue(static_cast<std::int64_t>(std::uint64_t{value_} * other.value_ % modulus_),
                 modulus_);
}

Residue d_cyclic(std::uint64_t r, std::uint32_t n, std::uint32_t m) {
  if (m == 0) fail(ErrorCode::Domain, "modulus must be >= 1");
  std::uint64_t result = 1 % m;
  std::uint64_t base = r % m;
  std::uint64_t exponent = std::uint64_t{n} + 1;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base % m;
    base = base * base % m;
    exponent >>= 1U;
  }
  return Residue(static_cast<std::int64_t>(result), m);
}

DegreeTable degree_table_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object()) {
    fail(ErrorCode::Parse, "d-table must be an object with a \"values\" object");
  }
  DegreeTable table;
  if (doc.contains("n")) {
    const auto& n = doc["n"];
    if (!n.is_number_integer() || n.get<std::int64_t>() < 0) {
      fail(ErrorCode::Parse, "d-table \"n\" must be a non-negative integer");
    }
    table.n = n.get<std::uint32_t>();
  }
  for (const auto& [key, value] : doc["values"].items()) {
    std::size_t pos = 0;
    unsigned long long index = 0;
    try {
      index = std::stoull(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != key.size() || key[0] == '-' || key[0] == '+') {
      fail(ErrorCode::Parse, "d-table key '" + key + "' is not an endomorphism index");
    }
    if (!value.is_number_integer()) {
      fail(ErrorCode::Parse, "d-table value for '" + key + "' must be an integer");
    }
    table.values[static_cast<EndoIndex>(index)] = value.get<std::int64_t>();
  }
  return table;
}

nlohmann::json degree_table_to_json(const DegreeHom& d) {
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t i = 0; i < d.values().size(); ++i) {
    values[std::to_string(i)] = d.values()[i];
  }
  return {{"n", d.n()}, {"values", std::move(values)}};
}

const LawCheck* DegreeValidation::first_failure() const noexcept {
  for (const auto& law : laws) {
    if (!law.pass) return &law;
  }
  return nullptr;
}

DegreeValidation validate_degree_values(const EndomorphismSet& endos,
                                        std::span<const std::uint32_t> values) {
  const std::uint32_t m = endos.group().order();
  if (values.size() != endos.size()) {
    fail(ErrorCode::IncompleteTable, "degree table has " + std::to_string(values.size()) +
                                         " entries for " + std::to_string(endos.size()) +
                                         " endomorphisms");
  }
  DegreeValidation report;

  LawCheck identity{"identity", true, {}, {}};
  const EndoIndex id = endos.identity_index();
  if (values[id] % m != 1 % m) {
    identity.pass = false;
    identity.witness = {id};
    identity.detail = "d(identity) = " + std::to_string(values[id]) + ", expected " +
                      std::to_string(1 % m);
  }
  report.laws.push_back(std::move(identity));

  LawCheck units{"automorphism-units", true, {}, {}};
  for (EndoIndex a : endos.automorphism_indices()) {
    if (std::gcd(values[a], m) != 1) {
      units.pass = false;
      units.witness = {a};
      units.detail = "automorphism " + std::to_string(a) + " has non-unit degree " +
                     std::to_string(values[a]) + " mod " + std::to_string(m);
      break;
    }
  }
  report.laws.push_back(std::move(units));

  LawCheck mult{"multiplicativity", true, {}, {}};
  for (EndoIndex a = 0; a < endos.size() && mult.pass; ++a) {
    for (EndoIndex b = 0; b < endos.size(); ++b) {
      const EndoIndex ab = endos.compose(a, b);
      const std::uint64_t expected = std::uint64_t{values[a]} * values[b] % m;
      if (values[ab] % m != expected) {
        mult.pass = false;
        mult.witness = {a, b};
        mult.detail = "d(" + std::to_string(a) + " o " + std::to_string(b) + ") = d(" +
                      std::to_string(ab) + ") = " + std::to_string(values[ab]) +
                      " but d(" + std::to_string(a) + ")*d(" + std::to_string(b) +
                      ") = " + std::to_string(expected) + " mod " + std::to_string(m);
        break;
      }
    }
  }
  report.laws.push_back(std::move(mult));

  report.pass = report.first_failure() == nullptr;
  return report;
}

DegreeValidation validate_degree_hom(const EndomorphismSet& endos, const DegreeHom& d) {
  return validate_degree_values(endos, d.values());
}

std::optional<std::uint32_t> cyclic_residue(const EndomorphismSet& endos, EndoIndex alpha) {
  const FiniteGroup& g = endos.group();
  const auto gen = g.cyclic_generator();
  if (!gen) return std::nullopt;
  const Element target = endos[alpha].images[*gen];
  Element p = 0;
  for (std::uint32_t r = 0; r < g.order(); ++r) {
    if (p == target) return r;
    p = g.mul(p, *gen);
  }
  return std::nullopt;
}

std::vector<std::uint32_t> degree_values_from_table(const EndomorphismSet& endos,
                                                    const DegreeTable& table) {
  const std::uint32_t m = endos.group().order();
  std::vector<std::uint32_t> values(endos.size());
  for (const auto& [index, value] : table.values) {
    if (index >= endos.size()) {
      fail(ErrorCode::InvalidTable, "d-table entry for endomorphism " + std::to_string(index) +
                                        " but End(G) has " + std::to_string(endos.size()) +
                                        " elements");
    }
    values[index] = mod_floor(value, m);
  }
  for (EndoIndex a = 0; a < endos.size(); ++a) {
    if (!table.values.contains(a)) {
      fail(ErrorCode::IncompleteTable,
           "d-table has no entry for endomorphism " + std::to_string(a));
    }
  }
  return values;
}

DegreeHom build_degree_hom(const EndomorphismSet& endos, std::uint32_t n,
                           const std::optional<DegreeTable>& user_table) {
  const std::uint32_t m = endos.group().order();
  std::vector<std::uint32_t> values(endos.size());

  if (!user_table) {
    if (!endos.group().is_cyclic()) {
      fail(ErrorCode::UnsupportedGroup,
           "no built-in degree homomorphism for a non-cyclic group of order " +
               std::to_string(m) + "; supply a d-table (--d-table)");
    }
    for (EndoIndex a = 0; a < endos.size(); ++a) {
      values[a] = d_cyclic(*cyclic_residue(endos, a), n, m).value();
    }
    const auto report = validate_degree_values(endos, values);
    if (!report.pass) {
      fail(ErrorCode::Internal, "built-in cyclic degree map failed validation: " +
                                    report.first_failure()->detail);
    }
    return DegreeHom(m, n, std::move(values), Provenance::BuiltinCyclic);
  }

  if (user_table->n && *user_table->n != n) {
    fail(ErrorCode::InvalidArgument, "d-table is for n = " + std::to_string(*user_table->n) +
                                         " but n = " + std::to_string(n) + " was requested");
  }
  values = degree_values_from_table(endos, *user_table);
  const auto report = validate_degree_values(endos, values);
  if (const LawCheck* bad = report.first_failure()) {
    const ErrorCode code = bad->law == "automorphism-units" ? ErrorCode::InvalidTable
                                                            : ErrorCode::NotAHomomorphism;
    fail(code, bad->law + " violated: " + bad->detail);
  }
  return DegreeHom(m, n, std::move(values), Provenance::UserSupplied);
}

}  // namespace spaceform

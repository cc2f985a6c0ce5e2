#pragma once

// Report builders behind the CLI subcommands. Every report is a JSON object
//   { "kind": ..., "summary": {...}, "tables": [{"name", "columns", "rows"}] }
// holding only integers, booleans and strings (degrees are decimal strings),
// so that json/csv/md renderings are exact and deterministic.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "spaceform/bigint.hpp"
#include "spaceform/degree.hpp"
#include "spaceform/endomorphism.hpp"
#include "spaceform/group.hpp"
#include "spaceform/monoid_odd.hpp"

namespace spaceform {

// Rows/columns of the truncated multiplication table in the monoid report.
inline constexpr std::size_t kTableLimit = 8;
inline constexpr std::size_t kAssociativitySamples = 10000;

nlohmann::json monoid_report(const MonoidContext& ctx, std::uint32_t window);
nlohmann::json equiv_report(const MonoidContext& ctx);
// Throws InvalidDimension for n < 1.
nlohmann::json even_report(std::uint32_t n);
nlohmann::json degrees_report(const MonoidContext& ctx, std::span<const BigInt> degrees);
// Contexts C_1..C_max_m for a fixed n.
nlohmann::json census_report(std::uint32_t max_m, std::uint32_t n,
                             const EnumerationLimits& limits = {});

// Runs every applicable suite. Never throws for bad d-tables or unsupported
// groups: those become report contents. "exit_code" is 0 on full pass,
// 1 for input errors, 2 for validation failures.
nlohmann::json check_report(const FiniteGroup& g, std::uint32_t n,
                            const std::optional<DegreeTable>& user_table,
                            std::uint32_t window, const EnumerationLimits& limits = {});

enum class Format { Json, Csv, Markdown };

// Throws InvalidArgument for anything but json|csv|md.
Format parse_format(std::string_view name);
std::string render(const nlohmann::json& report, Format format);

}  // namespace spaceform

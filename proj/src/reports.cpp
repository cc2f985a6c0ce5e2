#include "spaceform/reports.hpp"

#include <algorithm>
#include <sstream>

#include "spaceform/catalog.hpp"
#include "spaceform/checks.hpp"
#include "spaceform/error.hpp"
#include "spaceform/monoid_even.hpp"
#include "spaceform/oracle.hpp"

namespace spaceform {

using nlohmann::json;

namespace {

json table(std::string name, std::vector<std::string> columns, json rows) {
  return {{"name", std::move(name)}, {"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

std::string label(const SpaceFormElement& x) {
  return "(" + std::to_string(x.alpha()) + "," + to_string(x.degree()) + ")";
}

std::string coset(std::uint32_t residue, std::uint32_t modulus) {
  if (modulus == 1) return "Z";
  return std::to_string(residue) + " + " + std::to_string(modulus) + "Z";
}

json admissibility_json(const FiniteGroup& g) {
  const auto report = rank_one_check(g);
  json counts = json::object();
  for (const auto& c : report.counts) counts[std::to_string(c.prime)] = c.solutions;
  return {{"pass", report.pass}, {"counts", counts}, {"failing_primes", report.failing_primes}};
}

json group_summary(const FiniteGroup& g) {
  return {{"order", g.order()},
          {"abelian", g.is_abelian()},
          {"cyclic", g.is_cyclic()},
          {"admissibility", admissibility_json(g)}};
}

std::string provenance_name(Provenance p) {
  return p == Provenance::BuiltinCyclic ? "builtin-cyclic" : "user-supplied";
}

std::string identification(const std::vector<std::string>& names, std::size_t order) {
  if (order > kCatalogMaxOrder) return "not attempted (order > 16)";
  if (names.empty()) return "unidentified";
  if (names.size() == 1) return names.front();
  std::string out = "ambiguous:";
  for (const auto& n : names) out += " " + n;
  return out;
}

std::string cell_text(const json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ", ";
      out += cell_text(cell[i]);
    }
    return out + "]";
  }
  return cell.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void render_md_table(std::ostringstream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 3);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = std::max(width[c], header[c].size());
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string v = c < cells.size() ? cells[c] : "";
      os << " " << v << std::string(width[c] - v.size(), ' ') << " |";
    }
    os << "\n";
  };
  line(header);
  os << "|";
  for (std::size_t w : width) os << std::string(w + 2, '-') << "|";
  os << "\n";
  for (const auto& r : rows) line(r);
}

}  // namespace

json monoid_report(const MonoidContext& ctx, std::uint32_t window) {
  if (window < 1) fail(ErrorCode::InvalidArgument, "window must be >= 1");
  const auto& endos = ctx.endomorphisms();
  const std::uint32_t m = ctx.modulus();

  json classes = json::array();
  for (EndoIndex a = 0; a < endos.size(); ++a) {
    const std::uint32_t d = ctx.degree_hom().values()[a];
    json samples = json::array();
    for (std::int64_t k = -std::int64_t{window}; k <= std::int64_t{window}; ++k) {
      if (mod_floor(k, m) == d) samples.push_back(std::to_string(k));
    }
    classes.push_back({a, endos[a].images, endos[a].is_automorphism, d, coset(d, m), samples});
  }

  const std::size_t shown = std::min(endos.size(), kTableLimit);
  std::vector<SpaceFormElement> reps;
  for (EndoIndex a = 0; a < shown; ++a) reps.push_back(ctx.element(a, ctx.least_representative(a)));
  std::vector<std::string> columns{"x*y"};
  for (const auto& r : reps) columns.push_back(label(r));
  json products = json::array();
  for (const auto& x : reps) {
    json row = json::array({label(x)});
    for (const auto& y : reps) row.push_back(label(ctx.multiply(x, y)));
    products.push_back(std::move(row));
  }

  return {
      {"kind", "monoid"},
      {"summary",
       {{"group", group_summary(ctx.group())},
        {"n", ctx.n()},
        {"sphere_dimension", 2 * ctx.n() + 1},
        {"endomorphisms", endos.size()},
        {"automorphisms", endos.automorphism_indices().size()},
        {"d_provenance", provenance_name(ctx.degree_hom().provenance())},
        {"abelian", ctx.is_abelian()},
        {"window", window},
        {"table_truncated", shown < endos.size()}}},
      {"tables",
       json::array({table("classes", {"alpha", "images", "automorphism", "d", "coset", "samples"},
                          std::move(classes)),
                    table("multiplication", std::move(columns), std::move(products))})},
  };
}

json equiv_report(const MonoidContext& ctx) {
  const auto e = ctx.equivalence_group();
  const auto orders = e.element_orders();
  const auto names = identify_small_group(fingerprint(orders, e.is_abelian()));

  json elements = json::array();
  std::vector<std::string> columns{"x*y"};
  for (std::size_t i = 0; i < e.order(); ++i) {
    const auto& x = e.elements[i];
    elements.push_back({i, x.alpha(), to_string(x.degree()), orders[i]});
    columns.push_back(label(x));
  }
  json cayley = json::array();
  for (std::size_t i = 0; i < e.order(); ++i) {
    json row = json::array({label(e.elements[i])});
    for (std::size_t j = 0; j < e.order(); ++j) row.push_back(label(e.elements[e.table[i][j]]));
    cayley.push_back(std::move(row));
  }
  return {
      {"kind", "equiv"},
      {"summary",
       {{"group", group_summary(ctx.group())},
        {"n", ctx.n()},
        {"order", e.order()},
        {"abelian", e.is_abelian()},
        {"small_group_case", ctx.modulus() <= 2},
        {"identified", identification(names, e.order())},
        {"candidates", names}}},
      {"tables", json::array({table("elements", {"index", "alpha", "degree", "order"},
                                    std::move(elements)),
                              table("cayley", std::move(columns), std::move(cayley))})},
  };
}

json even_report(std::uint32_t n) {
  if (n < 1) fail(ErrorCode::InvalidDimension, "RP^{2n} requires n >= 1, got n = " + std::to_string(n));
  const EvenElement a0 = EvenElement::a0(), a2 = EvenElement::a2();
  const EvenElement odd = EvenElement::odd(BigInt(3));
  auto name = [](const EvenElement& x) {
    return x.kind() == EvenElement::Kind::Odd ? std::string("Odd(k)") : x.to_string();
  };
  json classes = json::array({
      {"A0", "k = 0 mod 4", "maps through the sphere; all degrees 4j identified"},
      {"A2", "k = 2 mod 4", "maps through the sphere; all degrees 4j+2 identified"},
      {"Odd(k)", "k odd", "one class per odd lift degree k"},
  });
  json products = json::array();
  for (const auto& x : {a0, a2, odd}) {
    json row = json::array({name(x)});
    for (const auto& y : {a0, a2}) row.push_back(name(multiply_even(x, y)));
    row.push_back(x.kind() == EvenElement::Kind::Odd ? std::string("Odd(k*l)")
                                                     : name(multiply_even(x, odd)));
    products.push_back(std::move(row));
  }
  return {
      {"kind", "even"},
      {"summary",
       {{"valid_for", "all n >= 1"},
        {"identity", identity_even().to_string()},
        {"units", json::array({"1", "-1"})},
        {"abelian", true}}},
      {"tables", json::array({table("classes", {"class", "degrees", "description"}, std::move(classes)),
                              table("multiplication", {"x*y", "A0", "A2", "Odd(l)"},
                                    std::move(products))})},
  };
}

json degrees_report(const MonoidContext& ctx, std::span<const BigInt> degrees) {
  const auto realizable = ctx.realizable_degrees();
  json rows = json::array();
  for (const auto& k : degrees) {
    const auto classes = ctx.classes_containing(k);
    rows.push_back({to_string(k), mod_floor(k, ctx.modulus()), !classes.empty(), classes});
  }
  return {
      {"kind", "degrees"},
      {"summary",
       {{"group", group_summary(ctx.group())},
        {"n", ctx.n()},
        {"modulus", ctx.modulus()},
        {"realizable_residues", realizable.residues}}},
      {"tables", json::array({table("queries", {"k", "residue", "realizable", "classes"},
                                    std::move(rows))})},
  };
}

json census_report(std::uint32_t max_m, std::uint32_t n, const EnumerationLimits& limits) {
  if (max_m < 1) fail(ErrorCode::InvalidArgument, "census needs max order >= 1");
  json rows = json::array();
  for (std::uint32_t m = 1; m <= max_m; ++m) {
    const MonoidContext ctx(make_cyclic(m, limits.max_order), n, std::nullopt, limits);
    const auto e = ctx.equivalence_group();
    const auto names = identify_small_group(fingerprint(e.element_orders(), e.is_abelian()));
    rows.push_back({m, ctx.endomorphisms().size(), ctx.endomorphisms().automorphism_indices().size(),
                    ctx.realizable_degrees().residues, e.order(), identification(names, e.order())});
  }
  return {
      {"kind", "census"},
      {"summary", {{"n", n}, {"max_order", max_m}, {"family", "cyclic"}}},
      {"tables", json::array({table("census",
                                    {"m", "endomorphisms", "automorphisms", "realizable_residues",
                                     "equivalences", "equivalence_type"},
                                    std::move(rows))})},
  };
}

json check_report(const FiniteGroup& g, std::uint32_t n, const std::optional<DegreeTable>& user_table,
                  std::uint32_t window, const EnumerationLimits& limits) {
  json suites = json::object();
  json rows = json::array();
  int exit_code = 0;
  auto record = [&](const std::string& name, json result, bool counts_as_failure = true) {
    const bool pass = result.value("pass", false);
    std::string status = pass ? "pass" : (counts_as_failure ? "fail" : "warning");
    if (result.contains("error")) status = "error";
    rows.push_back({name, status, result.value("cases", std::size_t{0}),
                    result.contains("witness") ? cell_text(result["witness"]) : std::string()});
    suites[name] = std::move(result);
  };
  auto record_error = [&](const std::string& name, const Error& err) {
    exit_code = std::max(exit_code, exit_code_for(err.code()));
    record(name, {{"pass", false},
                  {"error", std::string(error_code_name(err.code()))},
                  {"witness", err.what()}});
  };

  {
    json adm = admissibility_json(g);
    if (!adm["pass"].get<bool>()) {
      std::string w = "non-cyclic subgroup C_p x C_p for p in";
      for (auto p : adm["failing_primes"]) w += " " + p.dump();
      adm["witness"] = w;
    }
    adm["warning_only"] = true;
    record("admissibility", std::move(adm), false);
  }

  std::optional<MonoidContext> ctx;
  try {
    EndomorphismSet endos(g, limits);
    if (user_table) {
      const auto values = degree_values_from_table(endos, *user_table);
      const auto validation = validate_degree_values(endos, values);
      json laws = json::object();
      json witness;
      for (const auto& law : validation.laws) {
        laws[law.law] = {{"pass", law.pass}, {"witness", law.witness}, {"detail", law.detail}};
        if (!law.pass && witness.is_null()) {
          witness = {{"law", law.law}, {"endomorphisms", law.witness}, {"detail", law.detail}};
        }
      }
      json result = {{"pass", validation.pass},
                     {"cases", endos.size() * endos.size()},
                     {"provenance", "user-supplied"},
                     {"laws", laws}};
      if (!validation.pass) {
        result["witness"] = witness;
        exit_code = std::max(exit_code, 2);
      }
      record("degree_hom", std::move(result));
    }
    if (!user_table || suites["degree_hom"]["pass"].get<bool>()) {
      ctx.emplace(g, n, user_table, limits);
      if (!user_table) {
        record("degree_hom", {{"pass", true},
                              {"cases", endos.size() * endos.size()},
                              {"provenance", "builtin-cyclic"}});
      }
    }
  } catch (const Error& err) {
    record_error("degree_hom", err);
  }

  if (ctx) {
    const std::uint32_t m = ctx->modulus();
    const std::uint32_t closure_window = std::max<std::uint32_t>(window, 3 * m);
    for (const auto& suite : {check_closure(*ctx, closure_window),
                              check_associativity(*ctx, kAssociativitySamples, 0x5eed + m + n),
                              check_units(*ctx, window), check_equivalence_group(*ctx),
                              check_commutativity(*ctx)}) {
      if (!suite.pass) exit_code = std::max(exit_code, 2);
      record(suite.name, to_json(suite));
    }
    if (ctx->group().is_cyclic() && !user_table) {
      const auto oracle = cross_check(m, n, std::max<std::uint32_t>(window, 5 * m));
      if (!oracle.pass) exit_code = std::max(exit_code, 2);
      json j = to_json(oracle);
      j["cases"] = oracle.products;
      record("oracle", std::move(j));
    }
  }

  return {
      {"kind", "check"},
      {"pass", exit_code == 0},
      {"exit_code", exit_code},
      {"summary", {{"group", group_summary(g)}, {"n", n}, {"window", window}}},
      {"suites", std::move(suites)},
      {"tables", json::array({table("suites", {"suite", "status", "cases", "detail"}, std::move(rows))})},
  };
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md" || name == "markdown") return Format::Markdown;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (json|csv|md)");
}

std::string render(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";

  std::vector<std::pair<std::string, std::string>> summary;
  if (report.contains("summary")) {
    for (const auto& [key, value] : report["summary"].items()) {
      if (value.is_object()) {
        for (const auto& [sub, v] : value.items()) {
          summary.emplace_back(key + "." + sub, v.is_object() ? v.dump() : cell_text(v));
        }
      } else {
        summary.emplace_back(key, cell_text(value));
      }
    }
  }
  if (report.contains("pass")) summary.emplace_back("pass", report["pass"].dump());

  std::ostringstream os;
  if (format == Format::Csv) {
    os << "# summary\nkey,value\n";
    for (const auto& [k, v] : summary) os << csv_escape(k) << "," << csv_escape(v) << "\n";
    for (const auto& t : report.value("tables", json::array())) {
      os << "\n# " << t["name"].get<std::string>() << "\n";
      bool first = true;
      for (const auto& c : t["columns"]) {
        os << (first ? "" : ",") << csv_escape(cell_text(c));
        first = false;
      }
      os << "\n";
      for (const auto& r : t["rows"]) {
        first = true;
        for (const auto& c : r) {
          os << (first ? "" : ",") << csv_escape(cell_text(c));
          first = false;
        }
        os << "\n";
      }
    }
    return os.str();
  }

  os << "## " << report.value("kind", std::string("report")) << "\n\n";
  for (const auto& [k, v] : summary) os << "- " << k << ": " << v << "\n";
  for (const auto& t : report.value("tables", json::array())) {
    os << "\n### " << t["name"].get<std::string>() << "\n\n";
    std::vector<std::string> header;
    for (const auto& c : t["columns"]) header.push_back(md_escape(cell_text(c)));
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t["rows"]) {
      std::vector<std::string> cells;
      for (const auto& c : r) cells.push_back(md_escape(cell_text(c)));
      rows.push_back(std::move(cells));
    }
    render_md_table(os, header, rows);
  }
  return os.str();
}

}  // namespace spaceform

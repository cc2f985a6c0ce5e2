// spaceform: command-line front end over the libspaceform C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spaceform/spaceform.h"

namespace {

struct RunConfig {
  std::string group = "cyclic:2";
  std::uint32_t n = 1;
  std::string d_table;
  std::string format = "md";
  std::uint32_t window = 10;
  std::string out;
  std::uint32_t max_m = 24;
  std::vector<std::string> degrees;
};

// Carries an sf_status out of the command helpers.
struct Failure {
  sf_status status;
  std::string message;
};

void check(sf_status s) {
  if (s != SF_OK) throw Failure{s, sf_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SF_ERR_IO, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { sf_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

struct GroupHandle {
  sf_group* g = nullptr;
  ~GroupHandle() { sf_group_free(g); }
};

struct ContextHandle {
  sf_context* ctx = nullptr;
  ~ContextHandle() { sf_context_free(ctx); }
};

std::uint32_t parse_order(const std::string& text, const std::string& spec) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos == text.size() && v >= 0 && v <= 0xffffffffLL) return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
  }
  throw Failure{SF_ERR_INVALID_ARGUMENT, "bad group spec '" + spec + "'"};
}

void make_group(const std::string& spec, GroupHandle& h) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Failure{SF_ERR_INVALID_ARGUMENT,
                  "group spec must be cyclic:m, quaternion:4k or table:path"};
  }
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") {
    check(sf_group_cyclic(parse_order(arg, spec), &h.g));
  } else if (kind == "quaternion") {
    check(sf_group_quaternion(parse_order(arg, spec), &h.g));
  } else if (kind == "table") {
    check(sf_group_from_json(read_file(arg).c_str(), &h.g));
  } else {
    throw Failure{SF_ERR_INVALID_ARGUMENT, "unknown group kind '" + kind + "'"};
  }
}

std::optional<std::string> d_table_text(const RunConfig& cfg) {
  if (cfg.d_table.empty()) return std::nullopt;
  return read_file(cfg.d_table);
}

void make_context(const RunConfig& cfg, GroupHandle& group, ContextHandle& h) {
  make_group(cfg.group, group);
  const auto dtable = d_table_text(cfg);
  check(sf_context_new(group.g, cfg.n, dtable ? dtable->c_str() : nullptr, &h.ctx));
}

sf_format parse_format(const std::string& name) {
  if (name == "json") return SF_FORMAT_JSON;
  if (name == "csv") return SF_FORMAT_CSV;
  if (name == "md" || name == "markdown") return SF_FORMAT_MD;
  throw Failure{SF_ERR_INVALID_ARGUMENT, "unknown format '" + name + "' (json|csv|md)"};
}

void emit(const RunConfig& cfg, const std::string& report_json) {
  Text rendered;
  check(sf_render(report_json.c_str(), parse_format(cfg.format), rendered.out()));
  if (cfg.out.empty()) {
    std::cout << rendered.str();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  file << rendered.str();
  if (!file) throw Failure{SF_ERR_IO, "cannot write '" + cfg.out + "'"};
}

int run(const std::string& command, const RunConfig& cfg) {
  parse_format(cfg.format);
  if (cfg.window < 1) throw Failure{SF_ERR_INVALID_ARGUMENT, "--window must be >= 1"};
  Text report;
  if (command == "even") {
    check(sf_report_even(cfg.n, report.out()));
  } else if (command == "census") {
    check(sf_report_census(cfg.max_m, cfg.n, report.out()));
  } else if (command == "check") {
    GroupHandle group;
    make_group(cfg.group, group);
    const auto dtable = d_table_text(cfg);
    int exit_code = 0;
    check(sf_report_check(group.g, cfg.n, dtable ? dtable->c_str() : nullptr, cfg.window,
                          &exit_code, report.out()));
    emit(cfg, report.str());
    return exit_code;
  } else {
    GroupHandle group;
    ContextHandle ctx;
    make_context(cfg, group, ctx);
    if (command == "monoid") {
      check(sf_report_monoid(ctx.ctx, cfg.window, report.out()));
    } else if (command == "equiv") {
      check(sf_report_equiv(ctx.ctx, report.out()));
    } else if (command == "degrees") {
      std::vector<const char*> ks;
      for (const auto& k : cfg.degrees) ks.push_back(k.c_str());
      check(sf_report_degrees(ctx.ctx, ks.data(), ks.size(), report.out()));
    }
  }
  emit(cfg, report.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("SPACEFORM_MAX_ORDER")) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(cap, &pos);
      if (pos != std::string(cap).size() || v < 1 || v > 0xffffffffLL) throw std::invalid_argument(cap);
      sf_set_max_order(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      std::cerr << "spaceform: invalid SPACEFORM_MAX_ORDER '" << cap << "'\n";
      return 1;
    }
  }

  RunConfig cfg;
  CLI::App app{"Monoids of self-maps of spherical space forms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", cfg.group, "cyclic:m | quaternion:4k | table:path")->capture_default_str();
  app.add_option("--n", cfg.n, "sphere dimension is 2n+1 (2n for `even`)")->capture_default_str();
  app.add_option("--d-table", cfg.d_table, "degree table JSON for non-cyclic groups");
  app.add_option("--format", cfg.format, "json | csv | md")->capture_default_str();
  app.add_option("--window", cfg.window, "degree window for samples and checks")->capture_default_str();
  app.add_option("--out", cfg.out, "write output to this file instead of stdout");

  app.add_subcommand("monoid", "M(G,n): classes, cosets and a truncated product table");
  app.add_subcommand("equiv", "E(G,n): the group of self-homotopy equivalences");
  app.add_subcommand("even", "the monoid of self-maps of RP^{2n}");
  auto* degrees = app.add_subcommand("degrees", "which mapping degrees occur");
  degrees->add_option("k", cfg.degrees, "degrees to query")->required();
  app.add_subcommand("check", "run every invariant suite; nonzero exit on failure");
  auto* census = app.add_subcommand("census", "summary over C_1..C_max for fixed n");
  census->add_option("--max-m", cfg.max_m, "largest cyclic order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, cfg);
  } catch (const Failure& f) {
    std::cerr << "spaceform: " << sf_status_name(f.status) << ": " << f.message << "\n";
    return sf_status_exit_code(f.status);
  }
}

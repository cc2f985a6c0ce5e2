#include "spaceform/spaceform.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spaceform/error.hpp"
#include "spaceform/monoid_even.hpp"
#include "spaceform/monoid_odd.hpp"
#include "spaceform/oracle.hpp"
#include "spaceform/reports.hpp"

struct sf_group {
  spaceform::FiniteGroup group;
};

struct sf_context {
  spaceform::MonoidContext monoid;
};

namespace {

using spaceform::ErrorCode;

thread_local std::string last_error;
std::atomic<std::uint32_t> max_order{spaceform::kDefaultMaxOrder};

spaceform::EnumerationLimits limits() {
  spaceform::EnumerationLimits l;
  l.max_order = max_order.load();
  return l;
}

sf_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder: return SF_ERR_INVALID_ORDER;
    case ErrorCode::Structure: return SF_ERR_STRUCTURE;
    case ErrorCode::NotAGroup: return SF_ERR_NOT_A_GROUP;
    case ErrorCode::Size: return SF_ERR_SIZE;
    case ErrorCode::Domain: return SF_ERR_DOMAIN;
    case ErrorCode::IncompleteTable: return SF_ERR_INCOMPLETE_TABLE;
    case ErrorCode::NotAHomomorphism: return SF_ERR_NOT_A_HOMOMORPHISM;
    case ErrorCode::InvalidTable: return SF_ERR_INVALID_TABLE;
    case ErrorCode::UnsupportedGroup: return SF_ERR_UNSUPPORTED_GROUP;
    case ErrorCode::NotRealizable: return SF_ERR_NOT_REALIZABLE;
    case ErrorCode::InvalidDimension: return SF_ERR_INVALID_DIMENSION;
    case ErrorCode::Parse: return SF_ERR_PARSE;
    case ErrorCode::Io: return SF_ERR_IO;
    case ErrorCode::InvalidArgument: return SF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return SF_ERR_INTERNAL;
  }
  return SF_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and the thread's message.
template <typename F>
sf_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return SF_OK;
  } catch (const spaceform::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SF_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    spaceform::fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_json(const char* text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) spaceform::fail(ErrorCode::Parse, "malformed JSON");
  return doc;
}

std::optional<spaceform::DegreeTable> parse_dtable(const char* text) {
  if (text == nullptr) return std::nullopt;
  return spaceform::degree_table_from_json(parse_json(text));
}

sf_status emit_group(spaceform::FiniteGroup g, sf_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sf_group{std::move(g)};
  });
}

}  // namespace

extern "C" {

const char* sf_last_error(void) { return last_error.c_str(); }

const char* sf_status_name(sf_status status) {
  if (status == SF_OK) return "ok";
  if (status < SF_OK || status > SF_ERR_INTERNAL) return "unknown";
  static const ErrorCode codes[] = {
      ErrorCode::InvalidOrder,   ErrorCode::Structure,        ErrorCode::NotAGroup,
      ErrorCode::Size,           ErrorCode::Domain,           ErrorCode::IncompleteTable,
      ErrorCode::NotAHomomorphism, ErrorCode::InvalidTable,   ErrorCode::UnsupportedGroup,
      ErrorCode::NotRealizable,  ErrorCode::InvalidDimension, ErrorCode::Parse,
      ErrorCode::Io,             ErrorCode::InvalidArgument,  ErrorCode::Internal};
  return spaceform::error_code_name(codes[status - 1]).data();
}

int sf_status_exit_code(sf_status status) {
  if (status == SF_OK) return 0;
  switch (status) {
    case SF_ERR_INCOMPLETE_TABLE:
    case SF_ERR_NOT_A_HOMOMORPHISM:
    case SF_ERR_INVALID_TABLE:
    case SF_ERR_NOT_REALIZABLE:
      return 2;
    case SF_ERR_INTERNAL:
      return 3;
    default:
      return 1;
  }
}

void sf_string_free(char* s) { std::free(s); }

void sf_set_max_order(uint32_t value) { max_order.store(value == 0 ? 1 : value); }
uint32_t sf_max_order(void) { return max_order.load(); }

sf_status sf_group_cyclic(uint32_t m, sf_group** out) {
  std::optional<spaceform::FiniteGroup> g;
  const sf_status s = guarded([&] { g = spaceform::make_cyclic(m, max_order.load()); });
  return s == SF_OK ? emit_group(std::move(*g), out) : s;
}

sf_status sf_group_quaternion(uint32_t order, sf_group** out) {
  std::optional<spaceform::FiniteGroup> g;
  const sf_status s =
      guarded([&] { g = spaceform::make_generalized_quaternion(order, max_order.load()); });
  return s == SF_OK ? emit_group(std::move(*g), out) : s;
}

sf_status sf_group_from_table(const int64_t* table, uint32_t order, sf_group** out) {
  std::optional<spaceform::FiniteGroup> g;
  const sf_status s = guarded([&] {
    if (order > 0) require(table, "table");
    std::vector<std::vector<std::int64_t>> rows(order);
    for (uint32_t i = 0; i < order; ++i) {
      rows[i].assign(table + std::size_t{i} * order, table + std::size_t{i + 1} * order);
    }
    g = spaceform::make_from_table(rows, max_order.load());
  });
  return s == SF_OK ? emit_group(std::move(*g), out) : s;
}

sf_status sf_group_from_json(const char* json_text, sf_group** out) {
  std::optional<spaceform::FiniteGroup> g;
  const sf_status s = guarded([&] {
    require(json_text, "json_text");
    g = spaceform::group_from_json(parse_json(json_text), max_order.load());
  });
  return s == SF_OK ? emit_group(std::move(*g), out) : s;
}

sf_status sf_group_direct_product(const sf_group* a, const sf_group* b, sf_group** out) {
  std::optional<spaceform::FiniteGroup> g;
  const sf_status s = guarded([&] {
    require(a, "a");
    require(b, "b");
    g = spaceform::make_direct_product(a->group, b->group, max_order.load());
  });
  return s == SF_OK ? emit_group(std::move(*g), out) : s;
}

void sf_group_free(sf_group* g) { delete g; }

uint32_t sf_group_order(const sf_group* g) { return g ? g->group.order() : 0; }
int sf_group_is_abelian(const sf_group* g) { return g && g->group.is_abelian() ? 1 : 0; }
int sf_group_is_cyclic(const sf_group* g) { return g && g->group.is_cyclic() ? 1 : 0; }

sf_status sf_group_mul(const sf_group* g, uint32_t x, uint32_t y, uint32_t* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    if (x >= g->group.order() || y >= g->group.order()) {
      spaceform::fail(ErrorCode::Domain, "element out of range");
    }
    *out = g->group.mul(x, y);
  });
}

sf_status sf_group_element_order(const sf_group* g, uint32_t x, uint32_t* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = g->group.element_order(x);
  });
}

sf_status sf_group_rank_one(const sf_group* g, int* passed, char** json_out) {
  return guarded([&] {
    require(g, "g");
    const auto report = spaceform::rank_one_check(g->group);
    if (passed) *passed = report.pass ? 1 : 0;
    if (json_out) {
      nlohmann::json counts = nlohmann::json::object();
      for (const auto& c : report.counts) counts[std::to_string(c.prime)] = c.solutions;
      *json_out = dup_string(nlohmann::json{{"pass", report.pass},
                                            {"counts", counts},
                                            {"failing_primes", report.failing_primes}}
                                 .dump());
    }
  });
}

sf_status sf_context_new(const sf_group* g, uint32_t n, const char* dtable_json,
                         sf_context** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = new sf_context{spaceform::MonoidContext(g->group, n, parse_dtable(dtable_json), limits())};
  });
}

void sf_context_free(sf_context* ctx) { delete ctx; }

uint32_t sf_context_modulus(const sf_context* ctx) { return ctx ? ctx->monoid.modulus() : 0; }
uint32_t sf_context_n(const sf_context* ctx) { return ctx ? ctx->monoid.n() : 0; }
size_t sf_context_endo_count(const sf_context* ctx) {
  return ctx ? ctx->monoid.endomorphisms().size() : 0;
}
size_t sf_context_aut_count(const sf_context* ctx) {
  return ctx ? ctx->monoid.endomorphisms().automorphism_indices().size() : 0;
}
size_t sf_context_identity_endo(const sf_context* ctx) {
  return ctx ? ctx->monoid.endomorphisms().identity_index() : 0;
}

sf_status sf_context_endo_images(const sf_context* ctx, size_t alpha, uint32_t* images,
                                 size_t capacity) {
  return guarded([&] {
    require(ctx, "ctx");
    const auto& endos = ctx->monoid.endomorphisms();
    if (alpha >= endos.size()) spaceform::fail(ErrorCode::Domain, "endomorphism index out of range");
    const auto& im = endos[alpha].images;
    if (capacity < im.size()) spaceform::fail(ErrorCode::InvalidArgument, "buffer too small");
    require(images, "images");
    std::copy(im.begin(), im.end(), images);
  });
}

sf_status sf_context_endo_is_automorphism(const sf_context* ctx, size_t alpha, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const auto& endos = ctx->monoid.endomorphisms();
    if (alpha >= endos.size()) spaceform::fail(ErrorCode::Domain, "endomorphism index out of range");
    *out = endos[alpha].is_automorphism ? 1 : 0;
  });
}

sf_status sf_context_compose(const sf_context* ctx, size_t a, size_t b, size_t* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ctx->monoid.endomorphisms().compose(a, b);
  });
}

sf_status sf_context_degree(const sf_context* ctx, size_t alpha, uint32_t* residue) {
  return guarded([&] {
    require(ctx, "ctx");
    require(residue, "residue");
    if (alpha >= ctx->monoid.endomorphisms().size()) {
      spaceform::fail(ErrorCode::Domain, "endomorphism index out of range");
    }
    *residue = ctx->monoid.degree_hom().values()[alpha];
  });
}

int sf_context_is_abelian(const sf_context* ctx) { return ctx && ctx->monoid.is_abelian() ? 1 : 0; }

sf_status sf_element_check(const sf_context* ctx, size_t alpha, const char* k) {
  return guarded([&] {
    require(ctx, "ctx");
    require(k, "k");
    (void)ctx->monoid.element(alpha, spaceform::parse_bigint(k));
  });
}

sf_status sf_element_multiply(const sf_context* ctx, size_t alpha_x, const char* k_x,
                              size_t alpha_y, const char* k_y, size_t* alpha_out, char** k_out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(k_x, "k_x");
    require(k_y, "k_y");
    require(alpha_out, "alpha_out");
    require(k_out, "k_out");
    const auto& m = ctx->monoid;
    const auto p = m.multiply(m.element(alpha_x, spaceform::parse_bigint(k_x)),
                              m.element(alpha_y, spaceform::parse_bigint(k_y)));
    *k_out = dup_string(spaceform::to_string(p.degree()));
    *alpha_out = p.alpha();
  });
}

sf_status sf_element_is_invertible(const sf_context* ctx, size_t alpha, const char* k, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(k, "k");
    require(out, "out");
    const auto& m = ctx->monoid;
    *out = m.is_invertible(m.element(alpha, spaceform::parse_bigint(k))) ? 1 : 0;
  });
}

sf_status sf_equivalence_order(const sf_context* ctx, size_t* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ctx->monoid.equivalence_group().order();
  });
}

sf_status sf_degree_realizable(const sf_context* ctx, const char* k, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(k, "k");
    require(out, "out");
    *out = ctx->monoid.realizable_degrees().contains(spaceform::parse_bigint(k)) ? 1 : 0;
  });
}

sf_status sf_even_canonicalize(const char* k, char** out) {
  return guarded([&] {
    require(k, "k");
    require(out, "out");
    *out = dup_string(spaceform::canonicalize(spaceform::parse_bigint(k)).to_string());
  });
}

sf_status sf_even_multiply(const char* x, const char* y, char** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = dup_string(
        spaceform::multiply_even(spaceform::parse_even(x), spaceform::parse_even(y)).to_string());
  });
}

sf_status sf_cross_check(uint32_t m, uint32_t n, uint32_t window, int* passed, char** json_out) {
  return guarded([&] {
    if (m > max_order.load()) spaceform::fail(ErrorCode::Size, "order exceeds the configured cap");
    const auto report = spaceform::cross_check(m, n, window);
    if (passed) *passed = report.pass ? 1 : 0;
    if (json_out) *json_out = dup_string(spaceform::to_json(report).dump());
  });
}

sf_status sf_report_monoid(const sf_context* ctx, uint32_t window, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = dup_string(spaceform::monoid_report(ctx->monoid, window).dump());
  });
}

sf_status sf_report_equiv(const sf_context* ctx, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = dup_string(spaceform::equiv_report(ctx->monoid).dump());
  });
}

sf_status sf_report_even(uint32_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(spaceform::even_report(n).dump());
  });
}

sf_status sf_report_degrees(const sf_context* ctx, const char* const* degrees, size_t count,
                            char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    if (count > 0) require(degrees, "degrees");
    std::vector<spaceform::BigInt> ks;
    for (size_t i = 0; i < count; ++i) {
      require(degrees[i], "degree");
      ks.push_back(spaceform::parse_bigint(degrees[i]));
    }
    *out = dup_string(spaceform::degrees_report(ctx->monoid, ks).dump());
  });
}

sf_status sf_report_census(uint32_t max_m, uint32_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(spaceform::census_report(max_m, n, limits()).dump());
  });
}

sf_status sf_report_check(const sf_group* g, uint32_t n, const char* dtable_json, uint32_t window,
                          int* exit_code, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    if (window < 1) spaceform::fail(ErrorCode::InvalidArgument, "window must be >= 1");
    const auto report =
        spaceform::check_report(g->group, n, parse_dtable(dtable_json), window, limits());
    if (exit_code) *exit_code = report["exit_code"].get<int>();
    *out = dup_string(report.dump());
  });
}

sf_status sf_render(const char* report_json, sf_format format, char** out) {
  return guarded([&] {
    require(report_json, "report_json");
    require(out, "out");
    spaceform::Format f = spaceform::Format::Json;
    switch (format) {
      case SF_FORMAT_JSON: f = spaceform::Format::Json; break;
      case SF_FORMAT_CSV: f = spaceform::Format::Csv; break;
      case SF_FORMAT_MD: f = spaceform::Format::Markdown; break;
      default: spaceform::fail(ErrorCode::InvalidArgument, "unknown format");
    }
    *out = dup_string(spaceform::render(parse_json(report_json), f));
  });
}

}  // extern "C"

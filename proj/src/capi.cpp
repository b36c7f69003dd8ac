#include "partperm/partperm.h"

#include <memory>
#include <string>

#include "partperm/bijections.hpp"
#include "partperm/enumerate.hpp"
#include "partperm/fillings.hpp"
#include "partperm/matchings.hpp"
#include "partperm/parallel.hpp"
#include "partperm/verify.hpp"

struct pp_perm {
  partperm::Perm value;
};
struct pp_partial {
  partperm::PartialPerm value;
};
struct pp_cache {
  partperm::CountCache value;
};
struct pp_text {
  std::string value;
};

namespace {

using namespace partperm;
using nlohmann::json;

thread_local std::string last_error;

pp_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return PP_ERR_INVALID;
    case ErrorKind::Overflow: return PP_ERR_OVERFLOW;
    case ErrorKind::NotCovered: return PP_ERR_NOT_COVERED;
    case ErrorKind::Io: return PP_ERR_IO;
  }
  return PP_ERR_INTERNAL;
}

template <class Fn>
pp_status guarded(Fn fn) {
  last_error.clear();
  try {
    fn();
    return PP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return PP_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PP_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) invalid_input(std::string(what) + " is null");
}

pp_text* text(std::string s) { return new pp_text{std::move(s)}; }

Method method_of(pp_method m) {
  switch (m) {
    case PP_METHOD_BRUTE: return Method::Brute;
    case PP_METHOD_DIRECT: return Method::Direct;
    case PP_METHOD_FORMULA: return Method::Formula;
  }
  invalid_input("unknown method");
}

Format format_of(pp_format f) {
  switch (f) {
    case PP_FORMAT_JSON: return Format::Json;
    case PP_FORMAT_CSV: return Format::Csv;
    case PP_FORMAT_BFILE: return Format::Bfile;
    case PP_FORMAT_TEXT: return Format::Text;
  }
  invalid_input("unknown format");
}

void check_bounds(int n, int k) {
  if (n < 0 || k < 0 || k > n) invalid_input("need 0 <= k <= n");
}

// ---- biject ----

json stage(const std::string& name, json value) { return {{"stage", name}, {"value", std::move(value)}}; }

json biject_dyck(const std::string& in, int) {
  auto pi = PartialPerm::parse(in);
  auto values = pi.values();
  auto dyck = perm123_to_dyck(Perm(values));
  auto path = hole_bijection_to_path(pi);
  return {{"input", pi.str()},
          {"steps",
           {stage("hole", pi.holes().indices()[0]), stage("without hole", Perm(values).str()),
            stage("dyck", dyck.to_json()), stage("path", path.to_json())}},
          {"output", path.str()}};
}

json biject_path(const std::string& in, int) {
  auto path = LatticePath::parse(in);
  auto pi = path_to_hole_perm(path);
  return {{"input", path.str()}, {"steps", {stage("path", path.to_json())}}, {"output", pi.str()}};
}

json biject_dyck123(const std::string& in, int) {
  auto s = Perm::parse(in);
  json maxima = json::array();
  for (auto [pos, val] : right_to_left_maxima(s)) maxima.push_back({pos, val});
  auto path = perm123_to_dyck(s);
  return {{"input", s.str()},
          {"steps", {stage("right-to-left maxima", maxima), stage("dyck", path.to_json())}},
          {"output", path.str()}};
}

json biject_split(const PartialPerm& pi, const PartialPerm& out) {
  auto a = SplitPerm::of(pi), b = SplitPerm::of(out);
  return {{"input", pi.str()},
          {"steps",
           {stage("left", a.left), stage("hole", a.hole), stage("right", a.right), stage("left image", b.left),
            stage("right image", b.right)}},
          {"output", out.str()}};
}

json biject_1324(const std::string& in, int) {
  auto pi = PartialPerm::parse(in);
  return biject_split(pi, bijection_1234_1324(pi));
}

json biject_1234(const std::string& in, int) {
  auto pi = PartialPerm::parse(in);
  return biject_split(pi, bijection_1324_1234(pi));
}

json biject_ss(const std::string& in, int) {
  auto s = Perm::parse(in);
  json minima = json::array();
  for (auto [pos, val] : left_to_right_minima(s)) minima.push_back({pos, val});
  auto out = simion_schmidt(s, SSTarget::Avoid132);
  return {{"input", s.str()}, {"steps", {stage("left-to-right minima", minima)}}, {"output", out.str()}};
}

json biject_shape(const std::string& in, int) {
  auto f = PartialFilling::parse(in);
  auto g = shape_bijection_312_231(f);
  return {{"input", f.str()}, {"steps", {stage("input", f.to_json()), stage("output", g.to_json())}},
          {"output", g.str()}};
}

json biject_psi(const std::string& in, int) {
  auto m = Matching::parse(in);
  auto out = psi(m);
  json sizes = json::array();
  for (const auto& blocks : block_evolution(m)) {
    json row = json::array();
    for (const auto& b : blocks) row.push_back(b.size());
    sizes.push_back(row);
  }
  return {{"input", m.str()}, {"steps", {stage("block sizes", sizes)}}, {"output", out.str()}};
}

json biject_key(const std::string& in, int k) {
  auto f = PartialFilling::parse(in);
  KeyTrace trace;
  auto g = key_bijection(f, k, &trace);
  json steps = json::array();
  for (const auto& [name, m] : trace.stages) steps.push_back(stage(name, m.str()));
  return {{"input", f.str()}, {"k", k}, {"steps", steps}, {"output", g.str()}};
}

using Bijector = json (*)(const std::string&, int);

const std::pair<const char*, Bijector> bijectors[] = {
    {"dyck", biject_dyck},       {"path", biject_path},   {"dyck123", biject_dyck123},
    {"1324", biject_1324},       {"1234", biject_1234},   {"simion-schmidt", biject_ss},
    {"shape-312-231", biject_shape}, {"psi", biject_psi}, {"keylemma", biject_key},
};

}  // namespace

extern "C" {

const char* pp_last_error(void) { return last_error.c_str(); }

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERR_INVALID: return "invalid input";
    case PP_ERR_OVERFLOW: return "overflow";
    case PP_ERR_NOT_COVERED: return "not covered";
    case PP_ERR_IO: return "i/o error";
    case PP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pp_text_data(const pp_text* t) { return t ? t->value.c_str() : ""; }
size_t pp_text_size(const pp_text* t) { return t ? t->value.size() : 0; }
void pp_text_free(pp_text* t) { delete t; }

pp_status pp_perm_parse(const char* s, pp_perm** out) {
  return guarded([&] {
    require(s, "text");
    require(out, "out");
    *out = new pp_perm{Perm::parse(s)};
  });
}

void pp_perm_free(pp_perm* p) { delete p; }
int pp_perm_size(const pp_perm* p) { return p ? p->value.size() : 0; }

pp_status pp_perm_str(const pp_perm* p, pp_text** out) {
  return guarded([&] {
    require(p, "perm");
    require(out, "out");
    *out = text(p->value.str());
  });
}

pp_status pp_partial_parse(const char* s, pp_partial** out) {
  return guarded([&] {
    require(s, "text");
    require(out, "out");
    *out = new pp_partial{PartialPerm::parse(s)};
  });
}

void pp_partial_free(pp_partial* pi) { delete pi; }
int pp_partial_n(const pp_partial* pi) { return pi ? pi->value.n() : 0; }
int pp_partial_k(const pp_partial* pi) { return pi ? pi->value.k() : 0; }

pp_status pp_partial_str(const pp_partial* pi, pp_text** out) {
  return guarded([&] {
    require(pi, "partial permutation");
    require(out, "out");
    *out = text(pi->value.str());
  });
}

pp_status pp_avoids(const pp_partial* pi, const pp_perm* p, int* out) {
  return guarded([&] {
    require(pi, "partial permutation");
    require(p, "pattern");
    require(out, "out");
    *out = avoids(pi->value, p->value) ? 1 : 0;
  });
}

pp_status pp_cache_open(const char* dir, pp_cache** out) {
  return guarded([&] {
    require(dir, "dir");
    require(out, "out");
    *out = new pp_cache{CountCache(dir)};
  });
}

void pp_cache_free(pp_cache* c) { delete c; }

pp_status pp_count(const pp_perm* p, int n, int k, pp_method method, int jobs, const pp_cache* cache,
                   uint64_t* out) {
  return guarded([&] {
    require(p, "pattern");
    require(out, "out");
    check_bounds(n, k);
    Method m = method_of(method);
    auto compute = [&] { return count(n, k, p->value, m, resolve_jobs(jobs)); };
    // formula answers are cheap and may be absent, so they skip the cache
    *out = cache && m != Method::Formula ? cache->value.get_or_compute(p->value, n, k, std::nullopt, compute)
                                         : compute();
  });
}

pp_status pp_count_holes(const pp_perm* p, int n, const int* holes, int hole_count, pp_method method,
                         const pp_cache* cache, uint64_t* out) {
  return guarded([&] {
    require(p, "pattern");
    require(out, "out");
    if (hole_count > 0) require(holes, "holes");
    check_bounds(n, hole_count);
    HoleSet h(n, std::vector<int>(holes, holes + hole_count));
    Method m = method_of(method);
    auto compute = [&]() -> Count {
      if (m != Method::Formula) return count_H(h, p->value, m);
      auto cf = closed_form_H(h, p->value);
      if (!cf) throw Error(ErrorKind::NotCovered, "no closed form for this pattern and hole set");
      return *cf;
    };
    *out = cache && m != Method::Formula ? cache->value.get_or_compute(p->value, n, hole_count, h, compute)
                                         : compute();
  });
}

pp_status pp_closed_form(const pp_perm* p, int n, int k, uint64_t* out) {
  return guarded([&] {
    require(p, "pattern");
    require(out, "out");
    check_bounds(n, k);
    auto cf = closed_form(p->value, k, n);
    if (!cf) throw Error(ErrorKind::NotCovered, "no closed form for this pattern and hole count");
    *out = *cf;
  });
}

pp_status pp_sequence(const pp_perm* p, int k, int max_n, pp_method method, int jobs, const pp_cache* cache,
                      pp_format format, int index_shift, pp_text** out) {
  return guarded([&] {
    require(p, "pattern");
    require(out, "out");
    if (k < 0 || max_n < 1) invalid_input("need k >= 0 and max_n >= 1");
    auto seq = sequence(p->value, k, max_n, method_of(method), resolve_jobs(jobs), cache ? &cache->value : nullptr);
    *out = text(format_sequence(seq, format_of(format), index_shift));
  });
}

pp_status pp_classify(int length, int k, int horizon, int strong, int jobs, pp_text** out) {
  return guarded([&] {
    require(out, "out");
    if (length < 1 || k < 0 || horizon < length) invalid_input("need length >= 1, k >= 0, horizon >= length");
    *out = text(classify(length, k, horizon, strong != 0, resolve_jobs(jobs)).to_json().dump(2));
  });
}

size_t pp_verify_target_count(void) { return verify_targets().size(); }

const char* pp_verify_target_name(size_t i) {
  const auto& t = verify_targets();
  return i < t.size() ? t[i].c_str() : nullptr;
}

pp_status pp_verify(const char* target, const pp_verify_bounds* bounds, int* passed, pp_text** out) {
  return guarded([&] {
    require(target, "target");
    require(passed, "passed");
    require(out, "out");
    VerifyBounds b;
    if (bounds) b = {bounds->max_n, bounds->length, bounds->max_size, bounds->jobs};
    auto r = verify(target, b);
    *passed = r.passes() ? 1 : 0;
    *out = text(r.to_json().dump(2));
  });
}

size_t pp_biject_count(void) { return std::size(bijectors); }

const char* pp_biject_name(size_t i) { return i < std::size(bijectors) ? bijectors[i].first : nullptr; }

pp_status pp_biject(const char* which, const char* input, int k, pp_text** out) {
  return guarded([&] {
    require(which, "which");
    require(input, "input");
    require(out, "out");
    for (const auto& [name, fn] : bijectors)
      if (std::string(name) == which) {
        json j = fn(input, k);
        j["which"] = which;
        *out = text(j.dump(2));
        return;
      }
    invalid_input(std::string("unknown bijection: ") + which);
  });
}

}  // extern "C"

// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partperm/partperm.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Failure {
  pp_status status;
};

void check(pp_status s) {
  if (s != PP_OK) throw Failure{s};
}

int exit_for(pp_status s) {
  std::cerr << "error: " << pp_status_name(s) << ": " << pp_last_error() << '\n';
  return s == PP_ERR_INVALID || s == PP_ERR_NOT_COVERED ? kUsage : kFail;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PermPtr = std::unique_ptr<pp_perm, Deleter<pp_perm, pp_perm_free>>;
using CachePtr = std::unique_ptr<pp_cache, Deleter<pp_cache, pp_cache_free>>;
using TextPtr = std::unique_ptr<pp_text, Deleter<pp_text, pp_text_free>>;

PermPtr parse_perm(const std::string& s) {
  pp_perm* p = nullptr;
  check(pp_perm_parse(s.c_str(), &p));
  return PermPtr(p);
}

CachePtr open_cache(const std::string& dir) {
  if (dir.empty()) return nullptr;
  pp_cache* c = nullptr;
  check(pp_cache_open(dir.c_str(), &c));
  return CachePtr(c);
}

std::string take(pp_text* t) { return pp_text_data(TextPtr(t).get()); }

const std::map<std::string, pp_method> methods{
    {"brute", PP_METHOD_BRUTE}, {"direct", PP_METHOD_DIRECT}, {"formula", PP_METHOD_FORMULA}};
const std::map<std::string, pp_format> formats{
    {"json", PP_FORMAT_JSON}, {"csv", PP_FORMAT_CSV}, {"bfile", PP_FORMAT_BFILE}, {"text", PP_FORMAT_TEXT}};

struct Common {
  std::string cache_dir;
  int jobs = 1;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, bool cache) {
  if (cache) sub->add_option("--cache-dir", c.cache_dir, "count cache directory")->envname("PARTPERM_CACHE_DIR");
  sub->add_option("--jobs", c.jobs, "worker threads, 0 for all cores")
      ->envname("PARTPERM_JOBS")
      ->check(CLI::NonNegativeNumber);
}

// ---- count ----

struct CountArgs {
  Common common;
  std::string pattern;
  int n = 0;
  int k = 0;
  std::vector<int> holes;
  std::string method = "direct";
  bool cross_check = false;
};

int run_count(const CountArgs& a) {
  auto p = parse_perm(a.pattern);
  auto cache = open_cache(a.common.cache_dir);
  const bool with_holes = !a.holes.empty();
  if (with_holes && static_cast<int>(a.holes.size()) != a.k) {
    std::cerr << "error: --holes lists " << a.holes.size() << " positions but --k is " << a.k << '\n';
    return kUsage;
  }
  auto run = [&](pp_method m, uint64_t& out) {
    return with_holes ? pp_count_holes(p.get(), a.n, a.holes.data(), a.k, m, cache.get(), &out)
                      : pp_count(p.get(), a.n, a.k, m, a.common.jobs, cache.get(), &out);
  };
  uint64_t value = 0;
  check(run(methods.at(a.method), value));

  nlohmann::json report{{"pattern", a.pattern}, {"n", a.n}, {"k", a.k}, {"method", a.method}, {"count", value}};
  report["holes"] = with_holes ? nlohmann::json(a.holes) : nlohmann::json(nullptr);
  bool agree = true;
  if (a.cross_check) {
    nlohmann::json cc = nlohmann::json::object();
    for (const auto& [name, m] : methods) {
      uint64_t v = 0;
      pp_status s = run(m, v);
      if (s == PP_ERR_NOT_COVERED) {
        cc[name] = nullptr;
        continue;
      }
      check(s);
      cc[name] = v;
      agree = agree && v == value;
    }
    report["cross_check"] = cc;
    report["agree"] = agree;
  }
  if (a.common.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << value << '\n';
  }
  if (!agree) {
    std::cerr << "cross-check mismatch: " << report["cross_check"].dump() << '\n';
    return kFail;
  }
  return kPass;
}

// ---- verify ----

struct VerifyArgs {
  Common common;
  std::string target;
  int max_n = 0, length = 0, max_size = 0;
};

int run_verify(const VerifyArgs& a) {
  pp_verify_bounds b{a.max_n, a.length, a.max_size, a.common.jobs};
  int passed = 0;
  pp_text* out = nullptr;
  check(pp_verify(a.target.c_str(), &b, &passed, &out));
  auto report = take(out);
  if (a.common.format == "text") {
    auto j = nlohmann::json::parse(report);
    for (const auto& c : j["cases"])
      std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << '\n';
    std::cout << (passed ? "PASS " : "FAIL ") << a.target << ": " << j["claim"].get<std::string>() << '\n';
  } else {
    std::cout << report << '\n';
  }
  return passed ? kPass : kFail;
}

// ---- classify ----

struct ClassifyArgs {
  Common common;
  int length = 4;
  int k = 0;
  int horizon = 8;
  bool strong = false;
};

int run_classify(const ClassifyArgs& a) {
  pp_text* out = nullptr;
  check(pp_classify(a.length, a.k, a.horizon, a.strong, a.common.jobs, &out));
  auto report = take(out);
  if (a.common.format == "json") {
    std::cout << report << '\n';
    return kPass;
  }
  auto j = nlohmann::json::parse(report);
  std::cout << j["blocks"].size() << " blocks (horizon-limited, length " << a.length << ", k " << a.k
            << (a.strong ? ", strong" : "") << ", n <= " << a.horizon << ")\n";
  for (const auto& b : j["blocks"]) {
    std::cout << b.size() << ':';
    for (const auto& p : b) std::cout << ' ' << p.get<std::string>();
    std::cout << '\n';
  }
  return kPass;
}

// ---- biject ----

struct BijectArgs {
  Common common;
  std::string which;
  std::string input;
  int k = 0;
};

int run_biject(const BijectArgs& a) {
  pp_text* out = nullptr;
  check(pp_biject(a.which.c_str(), a.input.c_str(), a.k, &out));
  auto report = take(out);
  if (a.common.format == "text") {
    auto j = nlohmann::json::parse(report);
    for (const auto& s : j["steps"]) {
      const auto& v = s["value"];
      std::cout << s["stage"].get<std::string>() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    std::cout << "output: " << j["output"].get<std::string>() << '\n';
  } else {
    std::cout << report << '\n';
  }
  return kPass;
}

// ---- sequence ----

struct SequenceArgs {
  Common common;
  std::string pattern;
  int k = 0;
  int max_n = 9;
  int offset = 0;
  std::string method = "direct";
};

int run_sequence(const SequenceArgs& a) {
  auto p = parse_perm(a.pattern);
  auto cache = open_cache(a.common.cache_dir);
  pp_text* out = nullptr;
  check(pp_sequence(p.get(), a.k, a.max_n, methods.at(a.method), a.common.jobs, cache.get(),
                    formats.at(a.common.format), a.offset, &out));
  std::cout << take(out);
  return kPass;
}

std::vector<std::string> keys(const auto& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in partial permutations"};
  app.require_subcommand(1);
  auto method_check = CLI::IsMember(keys(methods));

  CountArgs ca;
  auto* count = app.add_subcommand("count", "s_n^k(p), or s_n^H(p) with --holes");
  count->add_option("--pattern", ca.pattern, "pattern, e.g. \"2 4 1 3\" or 2413")->required();
  count->add_option("--n", ca.n, "length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--k", ca.k, "number of holes")->check(CLI::NonNegativeNumber);
  count->add_option("--holes", ca.holes, "hole positions, comma separated")->delimiter(',');
  count->add_option("--method", ca.method)->check(method_check);
  count->add_flag("--cross-check", ca.cross_check, "compare every available method");
  count->add_option("--format", ca.common.format)->check(CLI::IsMember({"json", "text"}));
  add_common(count, ca.common, true);

  VerifyArgs va;
  va.common.format = "json";
  std::vector<std::string> targets;
  for (size_t i = 0; i < pp_verify_target_count(); ++i) targets.push_back(pp_verify_target_name(i));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--target", va.target)->required()->check(CLI::IsMember(targets));
  verify->add_option("--max-n", va.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--length", va.length)->check(CLI::PositiveNumber);
  verify->add_option("--max-size", va.max_size)->check(CLI::PositiveNumber);
  verify->add_option("--format", va.common.format)->check(CLI::IsMember({"json", "text"}));
  add_common(verify, va.common, false);

  ClassifyArgs cl;
  auto* classify = app.add_subcommand("classify", "group S_length by count vectors");
  classify->add_option("--length", cl.length)->check(CLI::PositiveNumber);
  classify->add_option("--k", cl.k)->check(CLI::NonNegativeNumber);
  classify->add_option("--max-n", cl.horizon, "horizon");
  classify->add_flag("--strong", cl.strong, "compare per hole set");
  classify->add_option("--format", cl.common.format)->check(CLI::IsMember({"json", "text"}));
  add_common(classify, cl.common, false);

  BijectArgs ba;
  ba.common.format = "json";
  std::vector<std::string> bijections;
  for (size_t i = 0; i < pp_biject_count(); ++i) bijections.push_back(pp_biject_name(i));
  auto* biject = app.add_subcommand("biject", "map one object through a bijection");
  biject->add_option("--which", ba.which)->required()->check(CLI::IsMember(bijections));
  biject->add_option("--input", ba.input)->required();
  biject->add_option("--k", ba.k, "bottom rows (keylemma)")->check(CLI::NonNegativeNumber);
  biject->add_option("--format", ba.common.format)->check(CLI::IsMember({"json", "text"}));

  SequenceArgs sa;
  auto* seq = app.add_subcommand("sequence", "s_n^k(p) for n = 1..max-n");
  seq->add_option("--pattern", sa.pattern)->required();
  seq->add_option("--k", sa.k)->check(CLI::NonNegativeNumber);
  seq->add_option("--max-n", sa.max_n)->check(CLI::PositiveNumber);
  seq->add_option("--offset", sa.offset, "added to every index");
  seq->add_option("--method", sa.method)->check(method_check);
  seq->add_option("--format", sa.common.format)->check(CLI::IsMember(keys(formats)));
  add_common(seq, sa.common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*count) return run_count(ca);
    if (*verify) return run_verify(va);
    if (*classify) return run_classify(cl);
    if (*biject) return run_biject(ba);
    if (*seq) return run_sequence(sa);
  } catch (const Failure& f) {
    return exit_for(f.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

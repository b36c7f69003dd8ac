#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partperm/checked.hpp"
#include "partperm/core.hpp"

namespace partperm {

enum class Method { Brute, Direct, Formula };

Method parse_method(std::string_view name);
const char* method_name(Method m);

/// s_n^k(p). Brute walks every element of S_n^k through the direct checker;
/// direct grows avoiders left to right and prunes at the first occurrence;
/// formula throws NotCovered when closed_form has no entry.
Count count(int n, int k, const Perm& p, Method method = Method::Direct, int jobs = 1);

/// s_n^H(p) for the hole set H (n is H.n()).
Count count_H(const HoleSet& holes, const Perm& p, Method method = Method::Direct);

/// Number of partial permutations of length n with k holes: n!/k!.
Count total_partial_perms(int n, int k);

/// Closed forms for s_n^k(p): short n, too many holes, monotone patterns,
/// Baxter patterns with k = |p| - 2, the three k = 1 classes of length 4,
/// and 2413/3142 at k = 2.
std::optional<Count> closed_form(const Perm& p, int k, int n);

/// Closed forms for s_n^H(p): short n, too many holes, and |p| = |H| + 2
/// through the order graph.
std::optional<Count> closed_form_H(const HoleSet& holes, const Perm& p);

/// Every element of S_n^H(p), in lexicographic order of slot sequences
/// (hole sorts before values).
std::vector<PartialPerm> avoiders_H(const HoleSet& holes, const Perm& p);
std::vector<PartialPerm> avoiders(int n, int k, const Perm& p);

/// Every element of S_n^k.
std::vector<PartialPerm> all_partial_perms(int n, int k);

/// Smallest image of (p, H) under reverse, complement and their product;
/// the reverse moves hole i to n + 1 - i. Counts agree across the orbit.
std::pair<Perm, HoleSet> canonical(const Perm& p, const HoleSet& holes);
Perm canonical(const Perm& p);

struct ClassPartition {
  int length = 0;
  int k = 0;
  int horizon = 0;
  bool strong = false;
  std::vector<std::vector<Perm>> blocks;
  /// Plain: s_n^k for n = length..horizon. Strong: s_n^H for each such n
  /// and each H in lexicographic order, concatenated.
  std::map<Perm, std::vector<Count>> evidence;

  nlohmann::json to_json() const;
};

/// Groups S_length by equal count vectors up to the horizon. Equal evidence
/// is necessary for k-Wilf equivalence, not a proof of it.
ClassPartition classify(int length, int k, int horizon = 8, bool strong = false, int jobs = 1);

/// JSON files holding one count each, keyed by canonical pattern, n, k and
/// optionally H.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  std::optional<Count> get(const Perm& p, int n, int k, const std::optional<HoleSet>& holes = {}) const;
  void put(const Perm& p, int n, int k, const std::optional<HoleSet>& holes, Count value) const;
  Count get_or_compute(const Perm& p, int n, int k, const std::optional<HoleSet>& holes,
                       const std::function<Count()>& compute) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path file_for(const Perm& p, int n, int k, const std::optional<HoleSet>& holes) const;
  std::filesystem::path dir_;
};

struct SequenceEntry {
  int n;
  Count count;
};

/// s_n^k(p) for n = 1..max_n.
std::vector<SequenceEntry> sequence(const Perm& p, int k, int max_n, Method method = Method::Direct,
                                    int jobs = 1, const CountCache* cache = nullptr);

enum class Format { Json, Csv, Bfile, Text };
Format parse_format(std::string_view name);

/// CSV "n,count", JSON [{"n":..,"count":..}], b-file "n a(n)" lines, or
/// plain text. `index_shift` is added to n in every format.
std::string format_sequence(const std::vector<SequenceEntry>& seq, Format format, int index_shift = 0);

}  // namespace partperm

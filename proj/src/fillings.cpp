#include "partperm/fillings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "partperm/matchings.hpp"
#include "partperm/parallel.hpp"

namespace partperm {

// ---------------------------------------------------------------- shapes

FerrersShape::FerrersShape(std::vector<int> heights) : heights_(std::move(heights)) {
  for (std::size_t j = 0; j < heights_.size(); ++j) {
    if (heights_[j] < 0) invalid_input("negative column height");
    if (j > 0 && heights_[j] > heights_[j - 1]) invalid_input("column heights must be non-increasing");
  }
}

FerrersShape FerrersShape::rectangle(int rows, int cols) {
  return FerrersShape(std::vector<int>(cols, rows));
}

int FerrersShape::height(int j) const {
  if (j < 1 || j > columns()) invalid_input("column index out of range");
  return heights_[j - 1];
}

int FerrersShape::row_length(int i) const {
  int len = 0;
  for (int h : heights_)
    if (h >= i) ++len;
  return len;
}

bool FerrersShape::has_cell(int i, int j) const {
  return j >= 1 && j <= columns() && i >= 1 && i <= heights_[j - 1];
}

bool FerrersShape::has_point(int i, int j) const {
  if (i < 0 || j < 0 || j > columns()) return false;
  if (j == 0) return columns() == 0 ? i == 0 : heights_[0] >= i;
  return heights_[j - 1] >= i;
}

bool FerrersShape::proper() const {
  return std::all_of(heights_.begin(), heights_.end(), [](int h) { return h > 0; });
}

bool FerrersShape::degenerate() const {
  return std::all_of(heights_.begin(), heights_.end(), [](int h) { return h == 0; });
}

std::string FerrersShape::str() const {
  std::string s;
  for (std::size_t j = 0; j < heights_.size(); ++j) {
    if (j) s.push_back(',');
    s += std::to_string(heights_[j]);
  }
  return s;
}

std::vector<std::pair<int, int>> boundary_points(const FerrersShape& shape) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= shape.columns(); ++j)
    for (int i = 0; shape.has_point(i, j); ++i)
      if (!shape.has_cell(i + 1, j + 1)) out.emplace_back(i, j);
  return out;
}

namespace {

void shapes_rec(int cols_left, int cap, std::vector<int>& cur, std::vector<FerrersShape>& out) {
  if (cols_left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int h = 0; h <= cap; ++h) {
    cur.push_back(h);
    shapes_rec(cols_left - 1, h, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FerrersShape> all_shapes(int max_size) {
  std::vector<FerrersShape> out;
  for (int m = 0; m <= max_size; ++m) {
    std::vector<int> cur;
    shapes_rec(m, max_size - m, cur, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- fillings

PartialFilling::PartialFilling(FerrersShape shape, std::vector<bool> diamond, std::vector<int> one_row)
    : shape_(std::move(shape)), diamond_(std::move(diamond)), one_row_(std::move(one_row)) {
  const int m = shape_.columns();
  if (static_cast<int>(diamond_.size()) != m || static_cast<int>(one_row_.size()) != m)
    invalid_input("filling column data does not match the shape");
  std::vector<bool> row_used(shape_.rows() + 1, false);
  for (int j = 1; j <= m; ++j) {
    int r = one_row_[j - 1];
    if (r == 0) continue;
    if (diamond_[j - 1]) invalid_input("a ◇-column cannot hold a 1");
    if (r < 0 || r > shape_.height(j)) invalid_input("1-cell outside its column");
    if (row_used[r]) invalid_input("two 1-cells in one row");
    row_used[r] = true;
  }
}

PartialFilling PartialFilling::from_partial_perm(const PartialPerm& pi) {
  const int n = pi.n();
  std::vector<bool> di(n);
  std::vector<int> ones(n, 0);
  for (int j = 0; j < n; ++j) {
    di[j] = pi[j].is_hole();
    if (!di[j]) ones[j] = pi[j].value();
  }
  return PartialFilling(FerrersShape::rectangle(n - pi.k(), n), std::move(di), std::move(ones));
}

PartialFilling PartialFilling::from_perm(const Perm& p) {
  return from_partial_perm(PartialPerm::from_perm(p));
}

bool PartialFilling::is_diamond(int j) const {
  if (j < 1 || j > columns()) invalid_input("column index out of range");
  return diamond_[j - 1];
}

int PartialFilling::one_in(int j) const {
  if (j < 1 || j > columns()) invalid_input("column index out of range");
  return one_row_[j - 1];
}

Cell PartialFilling::cell(int i, int j) const {
  if (!shape_.has_cell(i, j)) invalid_input("cell outside the diagram");
  if (diamond_[j - 1]) return Cell::Diamond;
  return one_row_[j - 1] == i ? Cell::One : Cell::Zero;
}

std::vector<int> PartialFilling::diamond_columns() const {
  std::vector<int> out;
  for (int j = 1; j <= columns(); ++j)
    if (diamond_[j - 1]) out.push_back(j);
  return out;
}

int PartialFilling::diamond_count() const {
  return static_cast<int>(std::count(diamond_.begin(), diamond_.end(), true));
}

bool PartialFilling::transversal() const {
  int ones = 0;
  for (int j = 1; j <= columns(); ++j) {
    if (diamond_[j - 1]) continue;
    if (one_row_[j - 1] == 0) return false;
    ++ones;
  }
  return ones == rows();  // rows hold at most one 1 each
}

PartialFilling PartialFilling::zeroed() const {
  return PartialFilling(shape_, std::vector<bool>(columns(), false), one_row_);
}

std::optional<PartialPerm> PartialFilling::to_partial_perm() const {
  const int m = columns();
  for (int h : shape_.heights())
    if (h != rows()) return std::nullopt;
  if (!transversal() || m - diamond_count() != rows()) return std::nullopt;
  std::vector<Slot> slots;
  for (int j = 1; j <= m; ++j) slots.push_back(diamond_[j - 1] ? Slot::hole() : Slot::of(one_row_[j - 1]));
  return PartialPerm(std::move(slots));
}

std::string PartialFilling::str() const {
  std::ostringstream os;
  os << "shape=" << shape_.str() << " di=";
  auto di = diamond_columns();
  for (std::size_t t = 0; t < di.size(); ++t) os << (t ? "," : "") << di[t];
  for (int i = rows(); i >= 1; --i) {
    os << '\n';
    for (int j = 1; j <= columns(); ++j) {
      if (!shape_.has_cell(i, j)) os << '.';
      else if (diamond_[j - 1]) os << '*';
      else os << (one_row_[j - 1] == i ? '1' : '0');
    }
  }
  return os.str();
}

nlohmann::json PartialFilling::to_json() const {
  return {{"shape", std::vector<int>(shape_.heights().begin(), shape_.heights().end())},
          {"diamonds", diamond_columns()},
          {"ones", one_row_}};
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        invalid_input("bad integer '" + tok + "' in filling header");
      }
    }
  return out;
}

}  // namespace

PartialFilling PartialFilling::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string a, b;
  hs >> a >> b;
  if (a.rfind("shape=", 0) != 0 || b.rfind("di=", 0) != 0) invalid_input("filling header must read 'shape=... di=...'");
  FerrersShape shape(parse_int_list(a.substr(6)));
  std::vector<bool> di(shape.columns(), false);
  for (int j : parse_int_list(b.substr(3))) {
    if (j < 1 || j > shape.columns()) invalid_input("◇-column index out of range");
    di[j - 1] = true;
  }
  std::vector<int> ones(shape.columns(), 0);
  std::string line;
  for (int i = shape.rows(); i >= 1; --i) {
    if (!std::getline(in, line)) invalid_input("filling has fewer rows than its shape");
    if (static_cast<int>(line.size()) < shape.columns()) invalid_input("filling row too short");
    for (int j = 1; j <= shape.columns(); ++j) {
      char c = line[j - 1];
      bool present = shape.has_cell(i, j);
      if (!present && c != '.') invalid_input("cell outside the shape must be '.'");
      if (present && c == '.') invalid_input("missing cell inside the shape");
      if (!present) continue;
      if ((c == '*') != di[j - 1]) invalid_input("◇ symbols must fill exactly the ◇-columns");
      if (c == '1') {
        if (ones[j - 1]) invalid_input("two 1-cells in one column");
        ones[j - 1] = i;
      } else if (c != '0' && c != '*') {
        invalid_input(std::string("unexpected cell symbol '") + c + "'");
      }
    }
  }
  return PartialFilling(std::move(shape), std::move(di), std::move(ones));
}

// ---------------------------------------------------------------- substitution

std::pair<int, int> insertion_lengths(const FerrersShape& shape, int i) {
  if (i < 1 || i > shape.rows() + 1) invalid_input("insertion slot out of range");
  int lo = shape.row_length(i);
  int hi = i == 1 ? shape.columns() : shape.row_length(i - 1);
  if (i == 1) lo = shape.columns();
  return {lo, hi};
}

PartialFilling substitute(const PartialFilling& f, int j, int i, std::optional<int> length) {
  if (!f.is_diamond(j)) invalid_input("substitution needs a ◇-column");
  if (i < 1 || i > f.shape().height(j) + 1) invalid_input("insertion slot above the ◇-column");
  auto [lo, hi] = insertion_lengths(f.shape(), i);
  int len = length.value_or(hi);
  if (len < lo || len > hi || len < j) invalid_input("illegal length for the inserted row");
  const int m = f.columns();
  std::vector<int> heights(f.shape().heights().begin(), f.shape().heights().end());
  for (int c = 1; c <= len; ++c) ++heights[c - 1];
  std::vector<bool> di(m);
  std::vector<int> ones(m);
  for (int c = 1; c <= m; ++c) {
    di[c - 1] = f.is_diamond(c);
    int r = f.one_in(c);
    ones[c - 1] = r >= i ? r + 1 : r;
  }
  di[j - 1] = false;
  ones[j - 1] = i;
  return PartialFilling(FerrersShape(std::move(heights)), std::move(di), std::move(ones));
}

std::set<PartialFilling> filling_extensions(const PartialFilling& f) {
  std::set<PartialFilling> seen{f};
  std::deque<PartialFilling> queue{f};
  std::set<PartialFilling> out;
  while (!queue.empty()) {
    PartialFilling cur = std::move(queue.front());
    queue.pop_front();
    auto di = cur.diamond_columns();
    if (di.empty()) {
      out.insert(cur);
      continue;
    }
    for (int j : di)
      for (int i = 1; i <= cur.shape().height(j) + 1; ++i) {
        auto [lo, hi] = insertion_lengths(cur.shape(), i);
        for (int len = std::max(lo, j); len <= hi; ++len) {
          auto next = substitute(cur, j, i, len);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------- containment

bool contains_plain(const PartialFilling& f, const Perm& p) {
  const int l = p.size();
  std::vector<std::pair<int, int>> ones;  // (column, row)
  for (int j = 1; j <= f.columns(); ++j)
    if (!f.is_diamond(j) && f.one_in(j)) ones.emplace_back(j, f.one_in(j));
  if (l == 0) return true;
  const int n = static_cast<int>(ones.size());
  if (n < l) return false;
  std::vector<int> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> rows(l);
  while (true) {
    int top = 0;
    for (int t = 0; t < l; ++t) {
      rows[t] = ones[idx[t]].second;
      top = std::max(top, rows[t]);
    }
    if (standardize(rows) == p && f.shape().has_cell(top, ones[idx[l - 1]].first)) return true;
    int i = l - 1;
    while (i >= 0 && idx[i] == n - l + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int t = i + 1; t < l; ++t) idx[t] = idx[t - 1] + 1;
  }
}

namespace {

// A candidate entry of an occurrence: an existing 1 at `row`, or a new row
// in gap `gap` (between old rows gap - 1 and gap) from a ◇-column.
struct Pick {
  int col;
  bool gap_kind;
  int level;  // row or gap
};

// +1 if a ends above b, -1 below, 0 when both are new rows in one gap.
int compare(const Pick& a, const Pick& b) {
  if (!a.gap_kind && !b.gap_kind) return a.level > b.level ? 1 : -1;
  if (a.gap_kind && b.gap_kind) return a.level == b.level ? 0 : (a.level > b.level ? 1 : -1);
  if (!a.gap_kind) return a.level <= b.level - 1 ? -1 : 1;
  return b.level <= a.level - 1 ? 1 : -1;
}

struct FillingSearch {
  const PartialFilling& f;
  const Perm& p;
  std::vector<Pick> chosen;

  bool finish() const {
    const int l = p.size();
    int top = 0;
    for (int t = 0; t < l; ++t)
      if (p[t] == l) top = t;
    const Pick& tp = chosen[top];
    const int last_height = f.shape().height(chosen[l - 1].col);
    return tp.gap_kind ? last_height >= tp.level - 1 : last_height >= tp.level;
  }

  bool run(int t, int from_col) {
    const int l = p.size();
    if (t == l) return finish();
    for (int c = from_col; c <= f.columns() - (l - t - 1); ++c) {
      std::vector<Pick> options;
      if (f.is_diamond(c)) {
        for (int g = 1; g <= f.shape().height(c) + 1; ++g) options.push_back({c, true, g});
      } else if (f.one_in(c)) {
        options.push_back({c, false, f.one_in(c)});
      }
      for (const auto& o : options) {
        bool ok = true;
        for (int s = 0; s < t && ok; ++s) {
          int cmp = compare(o, chosen[s]);
          int want = p[t] > p[s] ? 1 : -1;
          if (cmp != 0 && cmp != want) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(o);
        if (run(t + 1, c + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

bool filling_contains(const PartialFilling& f, const Perm& p) {
  if (p.size() == 0) return true;
  FillingSearch s{f, p, {}};
  return s.run(0, 1);
}

bool filling_avoids(const PartialFilling& f, const Perm& p) { return !filling_contains(f, p); }

bool filling_avoids_oracle(const PartialFilling& f, const Perm& p) {
  for (const auto& e : filling_extensions(f))
    if (contains_plain(e, p)) return false;
  return true;
}

// ---------------------------------------------------------------- regions

PartialFilling window(const PartialFilling& f, int first, int last, int row_lo, int row_hi) {
  std::vector<int> heights;
  std::vector<bool> di;
  std::vector<int> ones;
  const int span = std::max(0, row_hi - row_lo + 1);
  for (int c = std::max(first, 1); c <= std::min(last, f.columns()); ++c) {
    heights.push_back(std::clamp(f.shape().height(c) - row_lo + 1, 0, span));
    di.push_back(f.is_diamond(c));
    int r = f.one_in(c);
    ones.push_back(r >= row_lo && r <= row_hi ? r - row_lo + 1 : 0);
  }
  return PartialFilling(FerrersShape(std::move(heights)), std::move(di), std::move(ones));
}

PartialFilling above_right(const PartialFilling& f, int i, int j) {
  return window(f, j + 1, f.columns(), i + 1, f.rows());
}

PartialFilling below_left(const PartialFilling& f, int i, int j) { return window(f, 1, j, 1, i); }

Perm direct_sum(const Perm& p, const Perm& x) {
  std::vector<int> v(p.values().begin(), p.values().end());
  for (int e : x.values()) v.push_back(e + p.size());
  return Perm(std::move(v));
}

namespace {

bool dominated(const PartialFilling& m, const Perm& x, int i, int j) {
  return filling_contains(above_right(m, i, j), x);
}

}  // namespace

int dominated_width(const PartialFilling& m, const Perm& x) {
  if (x.size() == 0) invalid_input("dominated region needs a nonempty pattern");
  int k = 0;
  for (int j = 0; j <= m.columns(); ++j)
    if (dominated(m, x, 0, j)) k = j;
  return k;
}

PartialFilling dominated_region(const PartialFilling& m, const Perm& x) {
  const int k = dominated_width(m, x);
  std::vector<int> heights;
  std::vector<bool> di;
  std::vector<int> ones;
  for (int j = 1; j <= k; ++j) {
    int h = 0;
    for (int i = 0; i <= m.shape().height(j); ++i)
      if (dominated(m, x, i, j)) h = i;
    heights.push_back(h);
    di.push_back(m.is_diamond(j));
    int r = m.one_in(j);
    ones.push_back(r <= h ? r : 0);
  }
  return PartialFilling(FerrersShape(std::move(heights)), std::move(di), std::move(ones));
}

PartialPerm transport(const PartialPerm& pi, const Perm& x, const TransversalMap& inner) {
  const auto m = PartialFilling::from_partial_perm(pi);
  const auto region = dominated_region(m, x);
  const int k = region.columns();

  std::vector<int> kept_rows;
  std::vector<bool> row_has_one(region.rows() + 1, false);
  for (int j = 1; j <= k; ++j)
    if (region.one_in(j)) row_has_one[region.one_in(j)] = true;
  for (int i = 1; i <= region.rows(); ++i)
    if (row_has_one[i]) kept_rows.push_back(i);
  std::vector<int> kept_cols;
  for (int j = 1; j <= k; ++j)
    if (region.is_diamond(j) || region.one_in(j)) kept_cols.push_back(j);

  auto rank_of_row = [&](int r) {
    return static_cast<int>(std::lower_bound(kept_rows.begin(), kept_rows.end(), r) - kept_rows.begin()) + 1;
  };
  std::vector<int> heights;
  std::vector<bool> di;
  std::vector<int> ones;
  for (int j : kept_cols) {
    int h = region.shape().height(j);
    heights.push_back(static_cast<int>(std::upper_bound(kept_rows.begin(), kept_rows.end(), h) - kept_rows.begin()));
    di.push_back(region.is_diamond(j));
    ones.push_back(region.one_in(j) ? rank_of_row(region.one_in(j)) : 0);
  }
  PartialFilling stripped(FerrersShape(heights), di, ones);
  if (!stripped.transversal()) invalid_input("stripped dominated region is not a partial transversal");

  PartialFilling image = inner(stripped);
  if (image.shape() != stripped.shape() || image.diamond_columns() != stripped.diamond_columns() ||
      !image.transversal())
    invalid_input("inner map must preserve the diagram and ◇-columns");

  std::vector<Slot> slots(pi.slots().begin(), pi.slots().end());
  for (std::size_t t = 0; t < kept_cols.size(); ++t) {
    int col = kept_cols[t];
    if (region.is_diamond(col)) continue;
    slots[col - 1] = Slot::of(kept_rows[image.one_in(static_cast<int>(t) + 1) - 1]);
  }
  return PartialPerm(std::move(slots));
}

// ---------------------------------------------------------------- transversals

std::optional<PartialFilling> unique_monotone_transversal(const FerrersShape& shape, Monotone direction) {
  const int m = shape.columns();
  std::vector<int> ones(m, 0);
  for (int i = shape.rows(); i >= 1; --i) {
    int pick = 0;
    for (int j = 1; j <= m; ++j) {
      if (ones[j - 1] || shape.height(j) < i) continue;
      if (direction == Monotone::Avoid12) {
        pick = j;
        break;
      }
      pick = j;
    }
    if (!pick) return std::nullopt;
    ones[pick - 1] = i;
  }
  for (int r : ones)
    if (r == 0) return std::nullopt;
  return PartialFilling(shape, std::vector<bool>(m, false), std::move(ones));
}

namespace {

void transversals_rec(const FerrersShape& shape, const std::vector<int>& std_cols, int row, std::vector<int>& ones,
                      const std::vector<bool>& diamond, std::vector<PartialFilling>& out) {
  if (row == 0) {
    out.emplace_back(shape, diamond, ones);
    return;
  }
  for (int j : std_cols) {
    if (ones[j - 1] || shape.height(j) < row) continue;
    ones[j - 1] = row;
    transversals_rec(shape, std_cols, row - 1, ones, diamond, out);
    ones[j - 1] = 0;
  }
}

}  // namespace

std::vector<PartialFilling> all_partial_transversals(const FerrersShape& shape, const std::vector<bool>& diamond) {
  std::vector<int> std_cols;
  for (int j = 1; j <= shape.columns(); ++j)
    if (!diamond[j - 1]) std_cols.push_back(j);
  std::vector<PartialFilling> out;
  if (static_cast<int>(std_cols.size()) != shape.rows()) return out;
  std::vector<int> ones(shape.columns(), 0);
  transversals_rec(shape, std_cols, shape.rows(), ones, diamond, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- rows and conditions

int RowClass::rightist_count() const {
  return static_cast<int>(std::count(rightist.begin(), rightist.end(), true));
}

int RowClass::leftist_bottom_count() const {
  int c = 0;
  for (int i = 1; i <= bottom_rows; ++i) c += !rightist[i - 1];
  return c;
}

RowClass classify_rows(const FerrersShape& shape, const std::vector<bool>& diamond) {
  RowClass rc;
  rc.rightist.assign(shape.rows(), false);
  for (int j = 1; j <= shape.columns(); ++j)
    if (diamond[j - 1]) {
      rc.leftmost_diamond = j;
      break;
    }
  if (!rc.leftmost_diamond) return rc;
  const int j0 = rc.leftmost_diamond;
  rc.bottom_rows = shape.height(j0);
  int above = 0;
  for (int i = rc.bottom_rows; i >= 1; --i) {
    int right_cells = std::max(0, shape.row_length(i) - j0);
    if (right_cells > above) {
      rc.rightist[i - 1] = true;
      ++above;
    }
  }
  return rc;
}

std::vector<std::string> check_conditions(const PartialFilling& f, Variant variant) {
  const bool v312 = variant == Variant::Avoid312;
  const std::string prime = v312 ? "" : "'";
  std::vector<std::string> failed;
  const int m = f.columns();
  auto di = f.diamond_columns();

  if (di.size() > 2) failed.push_back("C1" + prime);
  if (m >= 3) {
    int tall = 0;
    for (int j : di) tall += f.shape().height(j) > 0;
    if (tall > 1) failed.push_back("C2" + prime);
  }
  const int j0 = di.empty() ? m + 1 : di.front();

  bool c3 = true;
  for (int a = 1; a < j0 && c3; ++a)
    for (int b = j0 + 1; b <= m && c3; ++b) {
      if (f.is_diamond(a) || f.is_diamond(b)) continue;
      int ra = f.one_in(a);
      int rb = f.one_in(b);
      if (ra && rb && rb < ra && f.shape().has_cell(ra, b)) c3 = false;
    }
  if (!c3) failed.push_back("C3" + prime);

  auto left = window(f, 1, j0 - 1, 1, f.rows());
  if (!filling_avoids(left, Perm::parse(v312 ? "312" : "231"))) failed.push_back("C4" + prime);
  if (!di.empty()) {
    auto right = window(f, j0 + 1, m, 1, f.rows());
    if (!filling_avoids(right, Perm::parse(v312 ? "12" : "21"))) failed.push_back("C5" + prime);
    auto bottom_left = window(f, 1, j0 - 1, 1, f.shape().height(j0));
    if (!filling_avoids(bottom_left, Perm::parse(v312 ? "21" : "12"))) failed.push_back("C6" + prime);
  }
  return failed;
}

// ---------------------------------------------------------------- left/right split

namespace {

PartialFilling restrict_to(const PartialFilling& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> heights;
  std::vector<int> ones;
  for (int c : cols) {
    int h = f.shape().height(c);
    heights.push_back(static_cast<int>(std::upper_bound(rows.begin(), rows.end(), h) - rows.begin()));
    int r = f.one_in(c);
    auto it = std::lower_bound(rows.begin(), rows.end(), r);
    ones.push_back(r && it != rows.end() && *it == r ? static_cast<int>(it - rows.begin()) + 1 : 0);
  }
  return PartialFilling(FerrersShape(std::move(heights)), std::vector<bool>(cols.size(), false), std::move(ones));
}

}  // namespace

std::optional<LeftRightSplit> split_left_right(const PartialFilling& f) {
  std::vector<bool> di(f.columns());
  for (int j = 1; j <= f.columns(); ++j) di[j - 1] = f.is_diamond(j);
  auto rc = classify_rows(f.shape(), di);
  const int j0 = rc.leftmost_diamond ? rc.leftmost_diamond : f.columns() + 1;
  LeftRightSplit s;
  for (int i = 1; i <= f.rows(); ++i) (rc.rightist[i - 1] ? s.right_rows : s.left_rows).push_back(i);
  for (int j = 1; j < j0; ++j) s.left_cols.push_back(j);
  for (int j = j0 + 1; j <= f.columns(); ++j)
    if (!f.is_diamond(j)) s.right_cols.push_back(j);
  for (int j = 1; j <= f.columns(); ++j) {
    int r = f.one_in(j);
    if (!r) continue;
    bool in_left = j < j0 && !rc.rightist[r - 1];
    bool in_right = j > j0 && rc.rightist[r - 1];
    if (!in_left && !in_right) return std::nullopt;
  }
  s.left = restrict_to(f, s.left_rows, s.left_cols);
  s.right = restrict_to(f, s.right_rows, s.right_cols);
  s.bottom_leftist = rc.leftist_bottom_count();
  return s;
}

PartialFilling join_left_right(const PartialFilling& frame, const LeftRightSplit& parts) {
  std::vector<bool> di(frame.columns());
  std::vector<int> ones(frame.columns(), 0);
  for (int j = 1; j <= frame.columns(); ++j) di[j - 1] = frame.is_diamond(j);
  for (std::size_t t = 0; t < parts.left_cols.size(); ++t) {
    int r = parts.left.one_in(static_cast<int>(t) + 1);
    if (r) ones[parts.left_cols[t] - 1] = parts.left_rows[r - 1];
  }
  for (std::size_t t = 0; t < parts.right_cols.size(); ++t) {
    int r = parts.right.one_in(static_cast<int>(t) + 1);
    if (r) ones[parts.right_cols[t] - 1] = parts.right_rows[r - 1];
  }
  return PartialFilling(frame.shape(), std::move(di), std::move(ones));
}

PartialFilling shape_bijection_312_231(const PartialFilling& f) {
  if (!f.transversal()) invalid_input("input must be a partial transversal");
  if (!filling_avoids(f, Perm::parse("312"))) invalid_input("input contains 312");
  auto parts = split_left_right(f);
  if (!parts) invalid_input("a 312-avoider must split into leftist and rightist parts");
  LeftRightSplit out = *parts;
  if (out.left.columns() > 0) out.left = key_bijection(parts->left, parts->bottom_leftist);
  if (out.right.columns() > 0) {
    auto r = unique_monotone_transversal(parts->right.shape(), Monotone::Avoid21);
    if (!r) invalid_input("right part has no transversal");
    out.right = *r;
  }
  return join_left_right(f, out);
}

// ---------------------------------------------------------------- verifiers

nlohmann::json ShapeWilfReport::to_json() const {
  return {{"p", p.compact()},          {"q", q.compact()},          {"size_bound", size_bound},
          {"max_diamonds", max_diamonds}, {"cases", cases},           {"p_avoiders", p_total},
          {"q_avoiders", q_total},       {"mismatches", mismatches}, {"passes", passes()}};
}

ShapeWilfReport verify_shape_star_wilf(const Perm& p, const Perm& q, int size_bound, int max_diamonds, int jobs) {
  ShapeWilfReport rep;
  rep.p = p;
  rep.q = q;
  rep.size_bound = size_bound;
  rep.max_diamonds = max_diamonds;
  const auto shapes = all_shapes(size_bound);
  struct Partial {
    long cases = 0, pc = 0, qc = 0;
    std::vector<std::string> bad;
  };
  auto parts = parallel_map(shapes.size(), jobs, [&](std::size_t s) {
    Partial r;
    const auto& shape = shapes[s];
    const int m = shape.columns();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) > max_diamonds) continue;
      std::vector<bool> di(m);
      for (int j = 0; j < m; ++j) di[j] = mask >> j & 1;
      long a = 0, b = 0;
      for (const auto& f : all_partial_transversals(shape, di)) {
        a += filling_avoids(f, p);
        b += filling_avoids(f, q);
      }
      ++r.cases;
      r.pc += a;
      r.qc += b;
      if (a != b) {
        std::string d;
        for (int j = 0; j < m; ++j)
          if (di[j]) d += (d.empty() ? "" : ",") + std::to_string(j + 1);
        r.bad.push_back("shape=" + shape.str() + " di=" + d + ": " + std::to_string(a) + " vs " + std::to_string(b));
      }
    }
    return r;
  });
  for (auto& r : parts) {
    rep.cases += r.cases;
    rep.p_total += r.pc;
    rep.q_total += r.qc;
    rep.mismatches.insert(rep.mismatches.end(), r.bad.begin(), r.bad.end());
  }
  return rep;
}

PrefixStats prefix_stats(const PartialFilling& f, int i, int j) {
  auto bps = boundary_points(f.shape());
  if (std::find(bps.begin(), bps.end(), std::make_pair(i, j)) == bps.end())
    invalid_input("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a boundary point");
  PrefixStats st;
  for (int c = 1; c <= j; ++c) st.h += f.is_diamond(c);
  auto longest = [](const PartialFilling& g, bool identity) {
    int l = 0;
    while (filling_contains(g, identity ? Perm::identity(l + 1) : Perm::anti_identity(l + 1))) ++l;
    return l;
  };
  auto sub = below_left(f, i, j);
  auto sub0 = below_left(f.zeroed(), i, j);
  st.I = longest(sub, true);
  st.J = longest(sub, false);
  st.I_zeroed = longest(sub0, true);
  st.J_zeroed = longest(sub0, false);
  return st;
}

}  // namespace partperm

#include "bwkl/weights.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace bwkl {

std::string_view family_name(Family f) { return f == Family::Brauer ? "brauer" : "walled"; }

std::string format_position(int doubled) {
  if (doubled % 2 == 0)
    return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

Family parse_family(std::string_view s) {
  if (s == "brauer")
    return Family::Brauer;
  if (s == "walled")
    return Family::Walled;
  throw WeightError("unknown family '" + std::string(s) + "' (expected brauer or walled)");
}

namespace {

void check_partition(const std::vector<int> &p, const char *what) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      throw WeightError(std::string(what) + ": parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw WeightError(std::string(what) + ": parts must be weakly decreasing");
  }
}

int part(const std::vector<int> &p, int k) { // 1-based, 0 past the end
  return k >= 1 && k <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k - 1)] : 0;
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ')
      s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty())
    return out;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto tok = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw WeightError("cannot parse partition part '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> conjugate(const std::vector<int> &p) {
  std::vector<int> out;
  if (p.empty())
    return out;
  for (int c = 1; c <= p.front(); ++c) {
    int len = 0;
    for (int v : p)
      if (v >= c)
        ++len;
    out.push_back(len);
  }
  return out;
}

void partitions_rec(int n, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

} // namespace

Shape Shape::brauer(std::vector<int> parts) {
  check_partition(parts, "partition");
  Shape s;
  s.family = Family::Brauer;
  s.parts = std::move(parts);
  return s;
}

Shape Shape::walled(std::vector<int> left, std::vector<int> right) {
  check_partition(left, "left partition");
  check_partition(right, "right partition");
  Shape s;
  s.family = Family::Walled;
  s.left = std::move(left);
  s.right = std::move(right);
  return s;
}

int Shape::size() const {
  int n = 0;
  for (int v : parts)
    n += v;
  for (int v : left)
    n += v;
  for (int v : right)
    n += v;
  return n;
}

std::string display_name(const Shape &s) { return "(" + to_string(s) + ")"; }

std::string to_string(const Shape &s) {
  auto join = [](const std::vector<int> &p) {
    std::string r;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i)
        r += ',';
      r += std::to_string(p[i]);
    }
    return r;
  };
  if (s.family == Family::Brauer)
    return join(s.parts);
  return join(s.left) + "|" + join(s.right);
}

Shape parse_shape(Family family, std::string_view text) {
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (family == Family::Brauer) {
    if (text.find('|') != std::string_view::npos)
      throw WeightError("brauer shapes are plain partitions like \"4,3,2\"");
    return Shape::brauer(parse_parts(text));
  }
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw WeightError("walled shapes are bipartitions like \"2,2,1|3,2\"");
  return Shape::walled(parse_parts(text.substr(0, bar)), parse_parts(text.substr(bar + 1)));
}

Shape transpose(const Shape &s) {
  if (s.family == Family::Brauer)
    return Shape::brauer(conjugate(s.parts));
  return Shape::walled(conjugate(s.left), conjugate(s.right));
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// ---------------------------------------------------------------------------

WeightDiagram::WeightDiagram(Family family, int delta, int window_lo, std::vector<Label> labels)
    : family_(family), delta_(delta), window_lo_(window_lo), labels_(std::move(labels)) {
  if (labels_.empty())
    throw WeightError("weight diagram needs at least one label");
  normalize();
}

bool WeightDiagram::in_grid(int pos) const {
  if (family_ == Family::Walled)
    return pos % 2 == 0;
  return pos >= grid_start() && ((pos - grid_start()) % 2 == 0);
}

Label WeightDiagram::label_at(int pos) const {
  if (!in_grid(pos))
    throw WeightError("position " + std::to_string(pos) + " is not a vertex of this diagram");
  if (pos < window_lo_)
    return Label::Up; // walled left tail (Brauer windows start at the axis)
  if (pos > window_hi())
    return Label::Down;
  return labels_[static_cast<std::size_t>((pos - window_lo_) / 2)];
}

void WeightDiagram::normalize() {
  if (family_ == Family::Brauer) {
    if (window_lo_ != grid_start())
      throw WeightError("brauer window must start at the first vertex of the axis");
    if (grid_start() == 0 && labels_.front() == Label::Cross)
      throw WeightError("vertex 0 cannot carry a cross");
    std::size_t last = 0;
    bool any = false;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] != Label::Down) {
        last = i;
        any = true;
      }
    labels_.resize(any ? last + 2 : 1, Label::Down);
    return;
  }
  if (window_lo_ % 2 != 0)
    throw WeightError("walled positions must be integers");
  const int lo = window_lo_ - 2, hi = window_hi() + 2;
  int first_non_up = hi, last_non_down = lo;
  for (int p = lo; p <= hi; p += 2)
    if (label_at(p) != Label::Up) {
      first_non_up = p;
      break;
    }
  for (int p = hi; p >= lo; p -= 2)
    if (label_at(p) != Label::Down) {
      last_non_down = p;
      break;
    }
  const int new_lo = first_non_up - 2, new_hi = std::max(last_non_down + 2, new_lo + 2);
  std::vector<Label> out;
  for (int p = new_lo; p <= new_hi; p += 2)
    out.push_back(label_at(p));
  window_lo_ = new_lo;
  labels_ = std::move(out);
}

bool WeightDiagram::has_diamond() const {
  return family_ == Family::Brauer && grid_start() == 0 && is_nontrivial(labels_.front());
}

std::optional<Label> WeightDiagram::diamond_resolution() const {
  if (!has_diamond())
    return std::nullopt;
  return labels_.front();
}

std::string WeightDiagram::label_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    s += (i == 0 && has_diamond()) ? 'D' : static_cast<char>(labels_[i]);
  return s;
}

std::string WeightDiagram::key() const {
  std::string s = family_ == Family::Brauer ? "B" : "W";
  s += std::to_string(delta_) + ':' + std::to_string(window_lo_) + ':';
  for (Label l : labels_)
    s += static_cast<char>(l);
  return s;
}

WeightDiagram WeightDiagram::with_labels(const std::vector<std::pair<int, Label>> &changes) const {
  int lo = window_lo_, hi = window_hi();
  for (auto [p, l] : changes) {
    if (!in_grid(p))
      throw WeightError("position " + std::to_string(p) + " is not a vertex of this diagram");
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  std::vector<Label> out;
  for (int p = lo; p <= hi; p += 2)
    out.push_back(label_at(p));
  for (auto [p, l] : changes)
    out[static_cast<std::size_t>((p - lo) / 2)] = l;
  return WeightDiagram(family_, delta_, lo, std::move(out));
}

std::vector<int> WeightDiagram::nontrivial_in(int lo, int hi) const {
  std::vector<int> out;
  int start = lo;
  if (family_ == Family::Brauer)
    start = std::max(start, grid_start());
  while (!in_grid(start))
    ++start;
  for (int p = start; p <= hi; p += 2)
    if (is_nontrivial(label_at(p)))
      out.push_back(p);
  return out;
}

int WeightDiagram::up_count_in(int lo, int hi) const {
  int n = 0;
  for (int p : nontrivial_in(lo, hi))
    if (label_at(p) == Label::Up)
      ++n;
  return n;
}

std::pair<int, int> common_window(const WeightDiagram &a, const WeightDiagram &b) {
  return {std::min(a.window_lo(), b.window_lo()), std::max(a.window_hi(), b.window_hi())};
}

// ---------------------------------------------------------------------------

namespace {

void check_delta(int delta, bool allow_zero) {
  if (delta == 0 && !allow_zero)
    throw WeightError("delta = 0 is not supported (set allow_delta_zero, or --allow-delta-zero on the command line)");
}

} // namespace

std::pair<std::vector<int>, std::vector<int>> walled_entries(const Shape &s, int delta, int n) {
  if (s.family != Family::Walled)
    throw WeightError("walled_entries needs a bipartition");
  std::vector<int> neg, pos;
  for (int k = n; k >= 1; --k)
    neg.push_back(k - part(s.left, k)); // x_{-k}
  for (int k = 1; k <= n; ++k)
    pos.push_back(delta - k + 1 + part(s.right, k)); // x_k
  return {neg, pos};
}

std::vector<int> brauer_entries_doubled(const Shape &s, int delta, int n) {
  if (s.family != Family::Brauer)
    throw WeightError("brauer_entries needs a partition");
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    out.push_back(2 * part(s.parts, k) - delta - 2 * (k - 1));
  return out;
}

WeightDiagram build_weight_walled(const Shape &shape, int delta, bool allow_delta_zero) {
  if (shape.family != Family::Walled)
    throw WeightError("build_weight_walled needs a bipartition");
  check_partition(shape.left, "left partition");
  check_partition(shape.right, "right partition");
  check_delta(delta, allow_delta_zero);
  const int len_l = static_cast<int>(shape.left.size());
  const int len_r = static_cast<int>(shape.right.size());
  // n <= lo is in the Up tail, n >= hi in the Down tail.
  const int lo = std::min(delta - len_r, -part(shape.left, 1)) - 1;
  const int hi = std::max(len_l + 1, delta + part(shape.right, 1) + 1) + 1;
  std::set<int> down_set_, up_set;
  for (int k = 1; k <= hi + len_l + 2; ++k)
    down_set_.insert(k - part(shape.left, k));
  for (int k = 1;; ++k) {
    int x = delta - k + 1 + part(shape.right, k);
    if (x < lo && k > len_r)
      break;
    up_set.insert(x);
  }
  std::vector<Label> labels;
  for (int n = lo; n <= hi; ++n) {
    bool d = down_set_.count(n) > 0, u = up_set.count(n) > 0;
    labels.push_back(d && u ? Label::Cross : u ? Label::Up : d ? Label::Down : Label::Circle);
  }
  return WeightDiagram(Family::Walled, delta, 2 * lo, std::move(labels));
}

WeightDiagram build_weight_brauer(const Shape &shape, int delta, std::optional<Label> diamond_choice,
                                  bool allow_delta_zero) {
  if (shape.family != Family::Brauer)
    throw WeightError("build_weight_brauer needs a partition");
  check_partition(shape.parts, "partition");
  check_delta(delta, allow_delta_zero);
  const int len = static_cast<int>(shape.parts.size());
  const int g = (delta % 2 != 0) ? 1 : 0;
  const int x1 = 2 * part(shape.parts, 1) - delta;
  const int hi = std::max({x1, delta + 2 * len, g}) + 4;
  std::set<int> entries;
  for (int k = 1;; ++k) {
    int x = 2 * part(shape.parts, k) - delta - 2 * (k - 1);
    entries.insert(x);
    if (k > len && -x > hi)
      break;
  }
  std::vector<Label> labels;
  bool diamond = false;
  for (int n = g; n <= hi; n += 2) {
    if (n == 0) {
      diamond = entries.count(0) > 0;
      labels.push_back(Label::Circle); // placeholder, resolved below
      continue;
    }
    bool u = entries.count(n) > 0, d = entries.count(-n) > 0;
    labels.push_back(d && u ? Label::Cross : u ? Label::Up : d ? Label::Down : Label::Circle);
  }
  if (diamond) {
    if (!diamond_choice || !is_nontrivial(*diamond_choice))
      throw WeightError("weight has a diamond at vertex 0; a diamond choice (v or ^) is required");
    int ups = static_cast<int>(std::count(labels.begin(), labels.end(), Label::Up));
    bool want_even = *diamond_choice == Label::Down;
    bool even_now = ups % 2 == 0;
    labels.front() = (want_even == even_now) ? Label::Down : Label::Up;
  }
  return WeightDiagram(Family::Brauer, delta, g, std::move(labels));
}

WeightDiagram build_weight(const Shape &shape, int delta, std::optional<Label> diamond_choice,
                           bool allow_delta_zero) {
  if (shape.family == Family::Walled)
    return build_weight_walled(shape, delta, allow_delta_zero);
  return build_weight_brauer(shape, delta, diamond_choice, allow_delta_zero);
}

bool same_block(const WeightDiagram &a, const WeightDiagram &b) {
  if (a.family() != b.family() || a.delta() != b.delta())
    throw WeightError("same_block: family or delta mismatch");
  auto [lo, hi] = common_window(a, b);
  for (int p = lo; p <= hi; p += 2) {
    if (!a.in_grid(p))
      continue;
    if (is_nontrivial(a.label_at(p)) != is_nontrivial(b.label_at(p)))
      return false;
    if (!is_nontrivial(a.label_at(p)) && a.label_at(p) != b.label_at(p))
      return false;
  }
  int ua = a.up_count_in(lo, hi), ub = b.up_count_in(lo, hi);
  if (a.family() == Family::Walled)
    return ua == ub;
  return (ua - ub) % 2 == 0;
}

std::vector<std::pair<int, int>> up_excess_profile(const WeightDiagram &a, const WeightDiagram &b) {
  auto [lo, hi] = common_window(a, b);
  auto positions = a.nontrivial_in(lo, hi);
  std::vector<std::pair<int, int>> out(positions.size());
  int excess = 0;
  for (std::size_t k = positions.size(); k-- > 0;) {
    int p = positions[k];
    excess += (a.label_at(p) == Label::Up) - (b.label_at(p) == Label::Up);
    out[k] = {p, excess};
  }
  return out;
}

bool weight_leq(const WeightDiagram &a, const WeightDiagram &b) {
  if (!same_block(a, b))
    throw WeightError("weight_leq: weights are not in the same block");
  for (auto [p, l] : up_excess_profile(b, a))
    if (l < 0)
      return false;
  return true;
}

bool is_minimal(const WeightDiagram &w) {
  auto pos = w.nontrivial_in(w.window_lo(), w.window_hi());
  bool seen_down = false;
  int ups = 0;
  for (int p : pos) {
    if (w.label_at(p) == Label::Down) {
      seen_down = true;
    } else {
      if (seen_down)
        return false;
      ++ups;
    }
  }
  return w.family() == Family::Walled || ups <= 1;
}

std::vector<WeightDiagram> down_set(const WeightDiagram &w) {
  const int lo = w.window_lo(), hi = w.window_hi();
  auto all = w.nontrivial_in(lo, hi);
  int last_up = lo - 2, first_down = hi + 2;
  for (int p : all) {
    if (w.label_at(p) == Label::Up)
      last_up = p;
    if (w.label_at(p) == Label::Down && first_down > hi)
      first_down = p;
  }
  std::vector<int> span;
  for (int p : all)
    if (p <= last_up && (w.family() == Family::Brauer || p >= first_down))
      span.push_back(p);
  if (span.empty())
    return {w};

  struct Item {
    int ups;
    std::string order_key;
    std::vector<Label> labels;
  };
  std::vector<Item> found;
  std::vector<Label> cur = w.labels();
  const bool walled = w.family() == Family::Walled;
  // Assign labels from the rightmost span vertex leftwards keeping every
  // partial excess (#Up of w minus #Up of the candidate) non-negative.
  auto rec = [&](auto &&self, int k, int excess) -> void {
    if (k < 0) {
      if (walled ? excess != 0 : excess % 2 != 0)
        return;
      Item it;
      it.labels = cur;
      it.ups = static_cast<int>(std::count(cur.begin(), cur.end(), Label::Up));
      for (Label l : cur)
        it.order_key += static_cast<char>(l);
      found.push_back(std::move(it));
      return;
    }
    if (walled && excess > k + 1)
      return;
    const int p = span[static_cast<std::size_t>(k)];
    const auto idx = static_cast<std::size_t>((p - lo) / 2);
    const int w_up = w.label_at(p) == Label::Up;
    for (Label l : {Label::Up, Label::Down}) {
      int e = excess + w_up - (l == Label::Up);
      if (e < 0)
        continue;
      cur[idx] = l;
      self(self, k - 1, e);
    }
    cur[idx] = w.labels()[idx];
  };
  rec(rec, static_cast<int>(span.size()) - 1, 0);

  std::sort(found.begin(), found.end(), [](const Item &a, const Item &b) {
    return a.ups != b.ups ? a.ups < b.ups : a.order_key < b.order_key;
  });
  std::vector<WeightDiagram> out;
  out.reserve(found.size());
  for (auto &it : found)
    out.emplace_back(w.family(), w.delta(), lo, std::move(it.labels));
  return out;
}

Shape weight_to_shape(const WeightDiagram &w) {
  const int lo = w.window_lo(), hi = w.window_hi();
  auto strip = [](std::vector<int> v) {
    while (!v.empty() && v.back() == 0)
      v.pop_back();
    return v;
  };
  auto fail = []() -> Shape { throw WeightError("weight_to_shape: diagram is not the weight of a shape"); };
  std::vector<int> result_parts[2];

  if (w.family() == Family::Walled) {
    // I_down ascending gives x_{-1} < x_{-2} < ...; I_up descending gives x_1 > x_2 > ...
    std::vector<int> downs, ups;
    for (int p = lo; p <= hi; p += 2) {
      Label l = w.label_at(p);
      if (l == Label::Down || l == Label::Cross)
        downs.push_back(p / 2);
    }
    for (int p = hi; p >= lo; p -= 2) {
      Label l = w.label_at(p);
      if (l == Label::Up || l == Label::Cross)
        ups.push_back(p / 2);
    }
    std::vector<int> left, right;
    for (std::size_t k = 1; k <= downs.size(); ++k)
      left.push_back(static_cast<int>(k) - downs[k - 1]);
    for (std::size_t k = 1; k <= ups.size(); ++k)
      right.push_back(ups[k - 1] - w.delta() + static_cast<int>(k) - 1);
    // the first tail entries beyond the window must give empty rows
    if (static_cast<int>(downs.size()) + 1 - (hi / 2 + 1) != 0)
      return fail();
    if ((lo / 2 - 1) - w.delta() + static_cast<int>(ups.size()) != 0)
      return fail();
    left = strip(left);
    right = strip(right);
    for (auto *p : {&left, &right})
      for (std::size_t i = 0; i < p->size(); ++i)
        if ((*p)[i] < 0 || (i > 0 && (*p)[i] > (*p)[i - 1]))
          return fail();
    return Shape::walled(left, right);
  }

  std::vector<int> entries; // doubled
  for (int p = w.grid_start(); p <= hi; p += 2) {
    Label l = w.label_at(p);
    if (p == 0 && w.has_diamond()) {
      entries.push_back(0);
      continue;
    }
    if (l == Label::Up || l == Label::Cross)
      entries.push_back(p);
    if (l == Label::Down || l == Label::Cross)
      entries.push_back(-p);
  }
  std::sort(entries.rbegin(), entries.rend());
  std::vector<int> parts;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    int twice = entries[k] + w.delta() + 2 * static_cast<int>(k);
    if (twice % 2 != 0)
      return fail();
    parts.push_back(twice / 2);
  }
  if (-(hi + 2) + w.delta() + 2 * static_cast<int>(entries.size()) != 0)
    return fail();
  parts = strip(parts);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      return fail();
  (void)result_parts;
  return Shape::brauer(parts);
}

} // namespace bwkl

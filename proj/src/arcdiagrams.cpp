#include "bwkl/arcdiagrams.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace bwkl {

std::optional<int> ArcDiagram::rightmost_arc_vertex() const {
  std::optional<int> m;
  for (auto [a, b] : caps)
    m = std::max(m.value_or(b), b);
  for (auto [a, b] : curls)
    m = std::max(m.value_or(b), b);
  return m;
}

ArcDiagram build_arc_diagram(const WeightDiagram &w) {
  ArcDiagram c{w, {}, {}, {}, {}, std::nullopt};
  std::vector<int> open, unmatched_up;
  for (int p = w.window_lo(); p <= w.window_hi(); p += 2) {
    Label l = w.label_at(p);
    if (!is_nontrivial(l)) {
      c.free.push_back(p);
      continue;
    }
    if (!c.leftmost_nontrivial && w.family() == Family::Brauer)
      c.leftmost_nontrivial = p;
    if (l == Label::Down) {
      open.push_back(p);
    } else if (!open.empty()) {
      c.caps.emplace_back(open.back(), p);
      open.pop_back();
    } else {
      unmatched_up.push_back(p);
    }
  }
  std::sort(c.caps.begin(), c.caps.end());
  if (w.family() == Family::Brauer) {
    std::size_t k = 0;
    for (; k + 1 < unmatched_up.size(); k += 2)
      c.curls.emplace_back(unmatched_up[k], unmatched_up[k + 1]);
    if (k < unmatched_up.size())
      c.rays.push_back(unmatched_up[k]);
  } else {
    c.rays = unmatched_up;
  }
  c.rays.insert(c.rays.end(), open.begin(), open.end());
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

bool is_oriented(const ArcDiagram &c, const WeightDiagram &w) {
  if (c.base.family() != w.family() || c.base.delta() != w.delta() || !same_block(c.base, w))
    return false;
  for (auto [a, b] : c.caps)
    if (!is_nontrivial(w.label_at(a)) || w.label_at(a) == w.label_at(b) || !is_nontrivial(w.label_at(b)))
      return false;
  for (auto [a, b] : c.curls)
    if (!is_nontrivial(w.label_at(a)) || w.label_at(a) != w.label_at(b))
      return false;
  // Rays include the tail vertices of c.base that fall inside w's window.
  auto [lo, hi] = common_window(c.base, w);
  std::vector<int> rays = c.rays;
  for (int p : c.base.nontrivial_in(lo, hi))
    if (p < c.base.window_lo() || p > c.base.window_hi())
      rays.push_back(p);
  std::sort(rays.begin(), rays.end());
  bool seen_down = false, seen_up = false;
  for (int p : rays) {
    Label l = w.label_at(p);
    if (l == Label::Down) {
      seen_down = true;
      continue;
    }
    if (seen_down)
      return false;
    if (w.family() == Family::Brauer && seen_up)
      return false;
    seen_up = true;
  }
  return true;
}

int diagram_degree(const ArcDiagram &c, const WeightDiagram &w) {
  if (!is_oriented(c, w))
    throw DiagramError("diagram_degree: diagram is not oriented by this weight");
  int deg = 0;
  for (auto [a, b] : c.caps)
    deg += w.label_at(a) == Label::Up;
  for (auto [a, b] : c.curls)
    deg += w.label_at(a) == Label::Down;
  return deg;
}

namespace {

struct Layout {
  int lo = 0, hi = 0;
  std::map<std::pair<int, int>, int> cap_height;
  std::vector<std::pair<int, int>> curl_heights; // (height at left end, height at right end)
  int max_height = 0;
};

Layout layout(const ArcDiagram &c, const WeightDiagram &w) {
  Layout L;
  std::tie(L.lo, L.hi) = common_window(c.base, w);
  // Walk right endpoints in increasing order; every arc ending earlier is drawn below.
  struct Ev {
    int right;
    int kind; // 0 cap, 1 curl left line, 2 curl right line
    std::size_t idx;
  };
  std::vector<Ev> evs;
  for (std::size_t k = 0; k < c.caps.size(); ++k)
    evs.push_back({c.caps[k].second, 0, k});
  for (std::size_t k = 0; k < c.curls.size(); ++k) {
    evs.push_back({c.curls[k].first, 1, k});
    evs.push_back({c.curls[k].second, 2, k});
  }
  std::sort(evs.begin(), evs.end(), [](const Ev &a, const Ev &b) { return a.right < b.right; });
  L.curl_heights.assign(c.curls.size(), {0, 0});
  std::vector<std::pair<std::pair<int, int>, int>> spans;
  for (const Ev &e : evs) {
    int h = 1;
    if (e.kind == 0) {
      auto [u, v] = c.caps[e.idx];
      for (auto &[sp, sh] : spans)
        if (sp.first > u && sp.second < v)
          h = std::max(h, sh + 1);
      L.cap_height[c.caps[e.idx]] = h;
      spans.push_back({{u, v}, h});
    } else {
      int x = e.right;
      for (auto &[sp, sh] : spans)
        if (sp.second < x)
          h = std::max(h, sh + 1);
      if (e.kind == 1) {
        L.curl_heights[e.idx].first = h;
        spans.push_back({{x, x}, h});
      } else {
        h = std::max(h, L.curl_heights[e.idx].first + 1);
        L.curl_heights[e.idx].second = h;
        spans.push_back({{c.curls[e.idx].first, x}, h});
      }
    }
    L.max_height = std::max(L.max_height, h);
  }
  return L;
}

} // namespace

std::string render_ascii(const ArcDiagram &c, const WeightDiagram &w) {
  const Layout L = layout(c, w);
  const int ncurls = static_cast<int>(c.curls.size());
  const int margin = 2 * ncurls;
  const int nvert = (L.hi - L.lo) / 2 + 1;
  const int width = margin + 2 * nvert;
  const int H = L.max_height;
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(H + 1),
                                             std::vector<std::string>(static_cast<std::size_t>(width), " "));
  auto col = [&](int pos) { return margin + (pos - L.lo); }; // doubled positions are 2 apart
  auto put = [&](int row, int x, const char *g) {
    grid[static_cast<std::size_t>(H - row)][static_cast<std::size_t>(x)] = g;
  };
  auto vertical = [&](int x, int from, int to) {
    for (int r = from; r <= to; ++r)
      put(r, x, "│");
  };
  auto horizontal = [&](int row, int x0, int x1) {
    for (int x = x0 + 1; x < x1; ++x)
      put(row, x, "─");
  };
  for (auto &[cap, h] : L.cap_height) {
    int a = col(cap.first), b = col(cap.second);
    vertical(a, 1, h - 1);
    vertical(b, 1, h - 1);
    put(h, a, "┌");
    put(h, b, "┐");
    horizontal(h, a, b);
  }
  for (int k = 0; k < ncurls; ++k) {
    auto [i, j] = c.curls[static_cast<std::size_t>(k)];
    auto [hi_, hj] = L.curl_heights[static_cast<std::size_t>(k)];
    int m = 2 * (ncurls - 1 - k);
    int a = col(i), b = col(j);
    vertical(a, 1, hi_ - 1);
    vertical(b, 1, hj - 1);
    put(hi_, a, "┘");
    put(hi_, m, "└");
    horizontal(hi_, m, a);
    put(hj, b, "┐");
    put(hj, m, "┌");
    horizontal(hj, m, b);
    vertical(m, hi_ + 1, hj - 1);
  }
  for (int p : c.rays)
    if (p >= L.lo && p <= L.hi)
      vertical(col(p), 1, H);
  for (int p = L.lo; p <= L.hi; p += 2)
    grid[static_cast<std::size_t>(H)][static_cast<std::size_t>(col(p))] = std::string(1, static_cast<char>(w.label_at(p)));

  std::string out;
  for (auto &row : grid) {
    std::string line;
    for (auto &g : row)
      line += g;
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_tikz(const ArcDiagram &c, const WeightDiagram &w) {
  const Layout L = layout(c, w);
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  auto x = [](int pos) { return pos / 2.0; };
  const double left_margin = x(L.lo) - 0.5 * (static_cast<double>(c.curls.size()) + 1);
  const double top = 0.5 * (L.max_height + 1);
  os << "\\begin{tikzpicture}[baseline=0pt]\n";
  os << "  \\draw[dotted] (" << left_margin << ",0) -- (" << x(L.hi) + 0.5 << ",0);\n";
  for (int p = L.lo; p <= L.hi; p += 2) {
    const char *sym = "";
    switch (w.label_at(p)) {
    case Label::Up:
      sym = "\\wedge";
      break;
    case Label::Down:
      sym = "\\vee";
      break;
    case Label::Circle:
      sym = "\\circ";
      break;
    case Label::Cross:
      sym = "\\times";
      break;
    }
    os << "  \\node[font=\\small] at (" << x(p) << ",0) {$" << sym << "$};\n";
  }
  for (auto &[cap, h] : L.cap_height) {
    double a = x(cap.first), b = x(cap.second), y = 0.5 * h;
    os << "  \\draw (" << a << ",0.2) .. controls (" << a << "," << y << ") and (" << b << "," << y << ") .. (" << b
       << ",0.2);\n";
  }
  for (std::size_t k = 0; k < c.curls.size(); ++k) {
    auto [i, j] = c.curls[k];
    auto [hi_, hj] = L.curl_heights[k];
    double m = left_margin + 0.5 * static_cast<double>(c.curls.size() - 1 - k);
    double yi = 0.5 * hi_, yj = 0.5 * hj;
    os << "  \\draw (" << x(i) << ",0.2) .. controls (" << x(i) << "," << yi << ") and (" << m << "," << yi << ") .. ("
       << m << "," << 0.5 * (yi + yj) << ") .. controls (" << m << "," << yj << ") and (" << x(j) << "," << yj
       << ") .. (" << x(j) << ",0.2);\n";
  }
  for (int p : c.rays)
    os << "  \\draw (" << x(p) << ",0.2) -- (" << x(p) << "," << top << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

} // namespace bwkl

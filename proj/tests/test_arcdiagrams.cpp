#include "bwkl/arcdiagrams.hpp"

#include "oracles.hpp"
#include "sweep.hpp"

#include <doctest.h>

#include <random>

using namespace bwkl;

namespace {

WeightDiagram W(Family f, int delta, int lo, const std::string &s) { return WeightDiagram(f, delta, lo, sweep::to_labels(s)); }

std::string random_string(std::mt19937 &rng, std::size_t len) {
  static const std::string alphabet = "oxv^";
  std::string s;
  for (std::size_t i = 0; i < len; ++i)
    s += alphabet[rng() % 4];
  return s;
}

using Pairs = std::vector<std::pair<int, int>>;

} // namespace

TEST_CASE("walled worked example has a single cap") {
  auto w = build_weight(Shape::walled({2, 2, 1}, {3, 2}), 2);
  auto c = build_arc_diagram(w);
  CHECK(c.caps == Pairs{{4, 6}});
  CHECK(c.curls.empty());
  CHECK(c.rays == std::vector<int>{-4, 8, 12});
  CHECK(c.free == std::vector<int>{-2, 0, 2, 10});
  std::mt19937 rng(1);
  auto ref = oracle::caps_by_neighbour_rule(w.label_string(), rng);
  CHECK(ref == std::set<std::pair<int, int>>{{4, 5}});
}

TEST_CASE("brauer curl and cap examples") {
  auto c22 = build_arc_diagram(build_weight(Shape::brauer({2, 2}), 1));
  CHECK(c22.caps.empty());
  CHECK(c22.curls == Pairs{{1, 3}});
  CHECK(c22.leftmost_nontrivial == 1);

  auto c432 = build_arc_diagram(build_weight(Shape::brauer({4, 3, 2}), 1));
  CHECK(c432.caps == Pairs{{1, 3}});
  CHECK(c432.curls.empty());
  CHECK(c432.free == std::vector<int>{5, 7});
  CHECK(c432.rightmost_arc_vertex() == 3);

  auto c3 = build_arc_diagram(W(Family::Brauer, 1, 1, "^^^v"));
  CHECK(c3.curls == Pairs{{1, 3}});
  CHECK(c3.rays == std::vector<int>{5, 7});
}

TEST_CASE("orientation and degree examples") {
  auto wl = build_weight(Shape::walled({2, 2, 1}, {3, 2}), 2);
  auto smaller = wl.with_labels({{4, Label::Up}, {6, Label::Down}});
  auto c = build_arc_diagram(wl);
  CHECK(is_oriented(c, wl));
  CHECK(is_oriented(c, smaller));
  CHECK(diagram_degree(c, wl) == 0);
  CHECK(diagram_degree(c, smaller) == 1);
  CHECK_FALSE(is_oriented(c, build_weight(Shape::walled({}, {}), 2)));
  CHECK_THROWS_AS(diagram_degree(c, build_weight(Shape::walled({}, {}), 2)), DiagramError);

  auto l22 = build_weight(Shape::brauer({2, 2}), 1);
  auto empty = build_weight(Shape::brauer({}), 1);
  auto c22 = build_arc_diagram(l22);
  CHECK(is_oriented(c22, empty));
  CHECK(diagram_degree(c22, empty) == 1);
  CHECK_FALSE(is_oriented(build_arc_diagram(empty), l22));
}

TEST_CASE("constructed pairs of degree three and two") {
  // Three nested caps all read clockwise.
  auto lam = W(Family::Walled, 1, 0, "vvv^^^");
  auto mu = W(Family::Walled, 1, 0, "^^^vvv");
  CHECK(diagram_degree(build_arc_diagram(lam), mu) == 3);
  // Two curls both read Down-Down.
  auto blam = W(Family::Brauer, 1, 1, "^^^^");
  auto bmu = W(Family::Brauer, 1, 1, "vvvv");
  auto cb = build_arc_diagram(blam);
  CHECK(cb.curls.size() == 2);
  CHECK(diagram_degree(cb, bmu) == 2);
}

TEST_CASE("every weight is oriented with degree zero on its own diagram") {
  for (auto &e : sweep::all_weights(9, 4)) {
    auto c = build_arc_diagram(e.weight);
    CHECK(is_oriented(c, e.weight));
    CHECK(diagram_degree(c, e.weight) == 0);
  }
}

TEST_CASE("cap matching does not depend on the order of joining") {
  std::mt19937 rng(21);
  for (int t = 0; t < 2000; ++t) {
    std::string s = random_string(rng, 1 + static_cast<std::size_t>(t % 16));
    auto c = build_arc_diagram(W(Family::Walled, 1, 0, s));
    std::set<std::pair<int, int>> lib(c.caps.begin(), c.caps.end());
    for (int k = 0; k < 4; ++k) {
      std::set<std::pair<int, int>> ref;
      for (auto [i, j] : oracle::caps_by_neighbour_rule(s, rng))
        ref.insert({2 * i, 2 * j});
      CHECK(ref == lib);
    }
  }
}

TEST_CASE("arc accounting") {
  std::mt19937 rng(22);
  for (int t = 0; t < 2000; ++t) {
    const bool brauer = t % 2 == 0;
    std::string s = random_string(rng, 1 + static_cast<std::size_t>(t % 14));
    auto w = W(brauer ? Family::Brauer : Family::Walled, 1, brauer ? 1 : 0, s);
    auto c = build_arc_diagram(w);
    std::size_t nontrivial = 0;
    for (Label l : w.labels())
      nontrivial += is_nontrivial(l);
    CHECK(2 * (c.caps.size() + c.curls.size()) + c.rays.size() == nontrivial);
    CHECK(c.free.size() + nontrivial == w.labels().size());
    if (!brauer)
      CHECK(c.curls.empty());
    std::size_t lone_up_rays = 0;
    for (int r : c.rays)
      lone_up_rays += w.label_at(r) == Label::Up;
    if (brauer)
      CHECK(lone_up_rays <= 1);
  }
}

TEST_CASE("degree and orientation agree with the direct rules") {
  std::mt19937 rng(23);
  int oriented = 0;
  for (int t = 0; t < 4000; ++t) {
    const bool brauer = t % 2 == 0;
    Family f = brauer ? Family::Brauer : Family::Walled;
    int lo = brauer ? 1 : 0;
    std::string a = random_string(rng, 1 + static_cast<std::size_t>(t % 9));
    std::string b = a;
    for (char &ch : b)
      if ((ch == 'v' || ch == '^') && rng() % 2)
        ch = ch == 'v' ? '^' : 'v';
    if (!brauer) {
      // keep the Up count so the pair is in one block
      b = a;
      std::shuffle(b.begin(), b.end(), rng);
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] == 'o' || a[i] == 'x') != (b[i] == 'o' || b[i] == 'x'))
          b = a;
    }
    auto lam = W(f, 1, lo, a), mu = W(f, 1, lo, b);
    auto c = build_arc_diagram(lam);
    int hi = lo + 2 * (static_cast<int>(a.size()) + 2);
    int ref = oracle::degree_or_minus_one(sweep::labels_over(lam, lo, hi), sweep::labels_over(mu, lo, hi), brauer);
    CHECK(is_oriented(c, mu) == (ref >= 0));
    if (ref >= 0) {
      ++oriented;
      CHECK(diagram_degree(c, mu) == ref);
      CHECK(weight_leq(mu, lam));
    }
  }
  CHECK(oriented > 500);
}

TEST_CASE("ascii rendering") {
  auto w = build_weight(Shape::brauer({4, 3, 2}), 1);
  CHECK(render_ascii(build_arc_diagram(w), w) == "┌─┐     │\nv ^ o x v\n");
  auto l22 = build_weight(Shape::brauer({2, 2}), 1);
  CHECK(render_ascii(build_arc_diagram(l22), l22) == "┌───┐ │\n└─┘ │ │\n  ^ ^ v\n");
  auto empty = build_weight(Shape::brauer({}), 1);
  std::string r = render_ascii(build_arc_diagram(empty), empty);
  CHECK(r.find_first_not_of("v │\n") == std::string::npos);
  CHECK(r.find('v') != std::string::npos);
  auto cap = W(Family::Walled, 1, 0, "v^");
  CHECK(render_ascii(build_arc_diagram(cap), cap).find("┌─┐") != std::string::npos);
}

TEST_CASE("tikz rendering mentions every arc") {
  auto w = build_weight(Shape::brauer({4, 3, 2}), 1);
  std::string t = render_tikz(build_arc_diagram(w), w);
  CHECK(t.find("tikzpicture") != std::string::npos);
}

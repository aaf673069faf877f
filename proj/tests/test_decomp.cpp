#include "bwkl/decomp.hpp"

#include "oracles.hpp"
#include "sweep.hpp"

#include <doctest.h>

#include <random>

using namespace bwkl;

namespace {

WeightDiagram W(Family f, int delta, int lo, const std::string &s) { return WeightDiagram(f, delta, lo, sweep::to_labels(s)); }

} // namespace

TEST_CASE("small arc classification examples") {
  auto wl = build_weight(Shape::walled({2, 2, 1}, {3, 2}), 2);
  auto rc = classify_small_arc(wl);
  CHECK(rc.kind == ReductionKind::CapWall);
  CHECK(rc.arc == std::pair<int, int>{4, 6});
  REQUIRE(rc.lambda_minus.has_value());
  CHECK(*rc.lambda_minus == wl.with_labels({{4, Label::Up}, {6, Label::Down}}));
  CHECK(rc.lambda_prime.label_at(4) == Label::Cross);
  CHECK(rc.lambda_prime.label_at(6) == Label::Circle);

  auto rb = classify_small_arc(build_weight(Shape::brauer({2, 2}), 1));
  CHECK(rb.kind == ReductionKind::CurlHalf);
  CHECK(rb.arc_is_curl);
  CHECK(rb.arc == std::pair<int, int>{1, 3});

  CHECK_THROWS_AS(classify_small_arc(build_weight(Shape::brauer({}), 1)), WeightError);
  CHECK(reduction_kind_name(ReductionKind::CapWall) == "cap_wall");
}

TEST_CASE("translation cases move the arc by one vertex") {
  auto slide = classify_small_arc(W(Family::Walled, 1, 0, "vo^"));
  CHECK(slide.kind == ReductionKind::CapSlideCirc);
  CHECK(slide.lambda_prime.label_at(2) == Label::Up);
  CHECK(slide.lambda_prime.label_at(4) == Label::Circle);
  CHECK(slide.moved == std::pair<int, int>{2, 4});
  auto slide_x = classify_small_arc(W(Family::Walled, 1, 0, "vx^"));
  CHECK(slide_x.kind == ReductionKind::CapSlideTimes);
  auto curl_slide = classify_small_arc(W(Family::Brauer, 1, 1, "^o^"));
  CHECK(curl_slide.kind == ReductionKind::CurlSlide);
  auto curl_zero = classify_small_arc(W(Family::Brauer, 2, 0, "^^"));
  CHECK(curl_zero.kind == ReductionKind::CurlZero);
  CHECK(curl_zero.is_wall());
}

TEST_CASE("decomposition polynomial examples") {
  auto l22 = build_weight(Shape::brauer({2, 2}), 1);
  auto empty = build_weight(Shape::brauer({}), 1);
  CHECK(d_poly(l22, empty) == QPoly::q());
  CHECK(d_poly_recursive(l22, empty) == QPoly::q());
  CHECK(d_poly(l22, l22) == QPoly::one());
  CHECK(d_poly(empty, l22).is_zero());

  auto wl = build_weight(Shape::walled({2, 2, 1}, {3, 2}), 2);
  auto smaller = down_set(wl).front();
  CHECK(d_poly(wl, smaller) == QPoly::q());
  CHECK(d_poly_recursive(wl, smaller) == QPoly::q());
  CHECK(decomposition_number(wl, smaller) == 1);
  CHECK(decomposition_number(wl, wl) == 1);

  auto lam = W(Family::Walled, 1, 0, "vvv^^^");
  auto mu = W(Family::Walled, 1, 0, "^^^vvv");
  CHECK(d_poly(lam, mu) == QPoly::monomial(3));
  CHECK(d_poly_recursive(lam, mu) == QPoly::monomial(3));
  CHECK(decomposition_number(lam, mu) == 1);
  auto blam = W(Family::Brauer, 1, 1, "^^^^");
  auto bmu = W(Family::Brauer, 1, 1, "vvvv");
  CHECK(d_poly(blam, bmu) == QPoly::monomial(2));
  CHECK(d_poly_recursive(blam, bmu) == QPoly::monomial(2));
}

TEST_CASE("decomposition numbers vanish off the down-set") {
  for (auto &e : sweep::all_weights(8, 3)) {
    auto ds = down_set(e.weight);
    for (auto &a : ds)
      for (auto &b : ds)
        if (!weight_leq(b, a))
          CHECK(decomposition_number(a, b) == 0);
  }
}

TEST_CASE("recursion matches the direct count on random blocks") {
  std::mt19937 rng(31);
  const std::string alphabet = "oxv^";
  std::size_t pairs = 0, largest = 0;
  for (int t = 0; t < 120; ++t) {
    const bool brauer = t % 2 == 0;
    const int delta = brauer ? 1 + t % 4 : 1;
    const bool zero_vertex = brauer && delta % 2 == 0;
    std::string s;
    for (int k = 0; k < 5 + t % 7; ++k)
      s += alphabet[rng() % 4];
    if (zero_vertex && s[0] == 'x')
      s[0] = 'o';
    auto w = W(brauer ? Family::Brauer : Family::Walled, delta, brauer ? (zero_vertex ? 0 : 1) : 0, s);
    auto ds = down_set(w);
    largest = std::max(largest, ds.size());
    for (auto &a : ds)
      for (auto &b : ds) {
        CHECK(d_poly_recursive(a, b) == d_poly(a, b));
        int lo = brauer ? a.grid_start() : std::min(a.window_lo(), b.window_lo()) - 2;
        int hi = std::max(a.window_hi(), b.window_hi()) + 2;
        int ref = oracle::degree_or_minus_one(sweep::labels_over(a, lo, hi), sweep::labels_over(b, lo, hi), brauer);
        CHECK(d_poly(a, b) == (ref < 0 ? QPoly() : QPoly::monomial(ref)));
        ++pairs;
      }
  }
  CHECK(largest >= 20);
  MESSAGE(pairs << " pairs, largest block " << largest);
}

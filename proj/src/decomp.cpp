#include "bwkl/decomp.hpp"

#include <algorithm>
#include <unordered_map>

namespace bwkl {

std::string_view reduction_kind_name(ReductionKind k) {
  switch (k) {
  case ReductionKind::CapSlideCirc:
    return "cap_slide_circ";
  case ReductionKind::CapSlideTimes:
    return "cap_slide_times";
  case ReductionKind::CapWall:
    return "cap_wall";
  case ReductionKind::CurlSlide:
    return "curl_slide";
  case ReductionKind::CurlHalf:
    return "curl_half";
  case ReductionKind::CurlZero:
    return "curl_zero";
  }
  return "unknown";
}

WallSide ReductionCase::side_of(const WeightDiagram &mu) const {
  if (!is_wall())
    return WallSide::Neither;
  std::pair<Label, Label> got{mu.label_at(wall.first), mu.label_at(wall.second)};
  if (got == plus_labels)
    return WallSide::Plus;
  if (got == minus_labels)
    return WallSide::Minus;
  return WallSide::Neither;
}

std::optional<WeightDiagram> ReductionCase::prime_of(const WeightDiagram &mu) const {
  if (is_wall()) {
    if (side_of(mu) == WallSide::Neither)
      return std::nullopt;
    return mu.with_labels({{wall.first, prime_labels.first}, {wall.second, prime_labels.second}});
  }
  auto [a, b] = moved;
  if (a == b)
    return mu.with_labels({{a, flipped(mu.label_at(a))}});
  return mu.with_labels({{a, mu.label_at(b)}, {b, mu.label_at(a)}});
}

WeightDiagram ReductionCase::lift(const WeightDiagram &mu_prime, WallSide side) const {
  if (!is_wall() || side == WallSide::Neither)
    throw WeightError("lift: only wall cases have weights on either side");
  auto labels = side == WallSide::Plus ? plus_labels : minus_labels;
  return mu_prime.with_labels({{wall.first, labels.first}, {wall.second, labels.second}});
}

namespace {

ReductionCase translation(ReductionKind kind, const WeightDiagram &w, std::pair<int, int> arc, bool curl,
                          std::pair<int, int> moved) {
  ReductionCase rc{kind, arc, curl, w, std::nullopt};
  rc.moved = moved;
  rc.lambda_prime = *rc.prime_of(w);
  return rc;
}

ReductionCase wall_case(ReductionKind kind, const WeightDiagram &w, std::pair<int, int> arc, bool curl,
                        std::pair<int, int> at, std::pair<Label, Label> plus, std::pair<Label, Label> minus,
                        std::pair<Label, Label> prime) {
  ReductionCase rc{kind, arc, curl, w, std::nullopt};
  rc.wall = at;
  rc.plus_labels = plus;
  rc.minus_labels = minus;
  rc.prime_labels = prime;
  rc.lambda_prime = w.with_labels({{at.first, prime.first}, {at.second, prime.second}});
  rc.lambda_minus = rc.lift(rc.lambda_prime, WallSide::Minus);
  return rc;
}

} // namespace

ReductionCase classify_small_arc(const WeightDiagram &w) {
  const ArcDiagram c = build_arc_diagram(w);
  constexpr auto V = Label::Down, U = Label::Up, O = Label::Circle, X = Label::Cross;
  if (!c.caps.empty()) {
    std::vector<std::pair<int, int>> small;
    for (auto cap : c.caps) {
      bool has_inner = std::any_of(c.caps.begin(), c.caps.end(), [&](auto d) {
        return cap.first < d.first && d.second < cap.second;
      });
      if (!has_inner)
        small.push_back(cap);
    }
    auto [u, v] = *std::min_element(small.begin(), small.end());
    if (w.family() == Family::Brauer && w.grid_start() == 0 && u == 0 && v == 2)
      return wall_case(ReductionKind::CurlZero, w, {u, v}, false, {0, 2}, {V, U}, {U, V}, {O, X});
    if (v == u + 2)
      return wall_case(ReductionKind::CapWall, w, {u, v}, false, {u, v}, {V, U}, {U, V}, {X, O});
    auto kind = w.label_at(v - 2) == Label::Circle ? ReductionKind::CapSlideCirc : ReductionKind::CapSlideTimes;
    return translation(kind, w, {u, v}, false, {v - 2, v});
  }
  if (c.curls.empty())
    throw WeightError("classify_small_arc: weight is minimal in its block");
  auto [a1, a2] = c.curls.front();
  if (a2 - 2 != a1) {
    auto rc = translation(ReductionKind::CurlSlide, w, {a1, a2}, true, {a2 - 2, a2});
    rc.end = ReductionCase::End::Right;
    rc.symbol = w.label_at(a2 - 2);
    return rc;
  }
  if (a1 > w.grid_start()) {
    auto rc = translation(ReductionKind::CurlSlide, w, {a1, a2}, true, {a1 - 2, a1});
    rc.end = ReductionCase::End::Left;
    rc.symbol = w.label_at(a1 - 2);
    return rc;
  }
  if (w.half_integer_grid())
    return translation(ReductionKind::CurlHalf, w, {a1, a2}, true, {a1, a1});
  return wall_case(ReductionKind::CurlZero, w, {a1, a2}, true, {0, 2}, {U, U}, {V, V}, {O, X});
}

QPoly d_poly(const WeightDiagram &lambda, const WeightDiagram &mu) {
  if (lambda.family() != mu.family() || lambda.delta() != mu.delta())
    return QPoly();
  const ArcDiagram c = build_arc_diagram(lambda);
  if (!is_oriented(c, mu))
    return QPoly();
  return QPoly::monomial(diagram_degree(c, mu));
}

namespace {

constexpr std::size_t kMemoLimit = 1u << 20;

QPoly d_rec(const WeightDiagram &lambda, const WeightDiagram &mu,
            std::unordered_map<std::string, QPoly> &memo) {
  if (!same_block(lambda, mu))
    return QPoly();
  if (is_minimal(lambda))
    return lambda == mu ? QPoly::one() : QPoly();
  std::string key = lambda.key() + '|' + mu.key();
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  const ReductionCase rc = classify_small_arc(lambda);
  QPoly out;
  if (!rc.is_wall()) {
    out = d_rec(rc.lambda_prime, *rc.prime_of(mu), memo);
  } else {
    switch (rc.side_of(mu)) {
    case WallSide::Plus:
      out = d_rec(rc.lambda_prime, *rc.prime_of(mu), memo);
      break;
    case WallSide::Minus:
      out = QPoly::q() * d_rec(rc.lambda_prime, *rc.prime_of(mu), memo);
      break;
    case WallSide::Neither:
      break;
    }
  }
  if (memo.size() >= kMemoLimit)
    memo.clear();
  memo.emplace(std::move(key), out);
  return out;
}

} // namespace

QPoly d_poly_recursive(const WeightDiagram &lambda, const WeightDiagram &mu) {
  if (lambda.family() != mu.family() || lambda.delta() != mu.delta())
    return QPoly();
  thread_local std::unordered_map<std::string, QPoly> memo;
  return d_rec(lambda, mu, memo);
}

std::int64_t decomposition_number(const WeightDiagram &lambda, const WeightDiagram &mu) {
  return d_poly(lambda, mu).eval(1);
}

} // namespace bwkl

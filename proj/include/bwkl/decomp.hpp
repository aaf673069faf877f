#pragma once

// Decomposition polynomials d_{lambda mu}(q): directly from oriented
// diagrams, and recursively by removing one small cap or curl at a time.

#include "bwkl/arcdiagrams.hpp"
#include "bwkl/qpoly.hpp"
#include "bwkl/weights.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace bwkl {

enum class ReductionKind { CapSlideCirc, CapSlideTimes, CapWall, CurlSlide, CurlHalf, CurlZero };

std::string_view reduction_kind_name(ReductionKind k);

/// Which of the two weights over a wall configuration mu is.
enum class WallSide { Plus, Minus, Neither };

struct ReductionCase {
  ReductionKind kind;
  std::pair<int, int> arc; // the small cap or curl that was removed
  bool arc_is_curl = false;
  WeightDiagram lambda_prime;
  std::optional<WeightDiagram> lambda_minus; // wall cases only

  // Curl slides: which end moved and what sat next to it.
  enum class End { Left, Right } end = End::Right;
  Label symbol = Label::Circle;

  // Translation cases swap the labels at these two vertices (a flip of the
  // first vertex when both are equal, for curl_half).
  std::pair<int, int> moved{0, 0};

  // Wall cases: the two vertices and the labels that mark mu^+, mu^-, mu'.
  std::pair<int, int> wall{0, 0};
  std::pair<Label, Label> plus_labels{Label::Down, Label::Up};
  std::pair<Label, Label> minus_labels{Label::Up, Label::Down};
  std::pair<Label, Label> prime_labels{Label::Cross, Label::Circle};

  bool is_wall() const { return kind == ReductionKind::CapWall || kind == ReductionKind::CurlZero; }

  WallSide side_of(const WeightDiagram &mu) const;
  /// mu' for any mu in a translation case; for wall cases only for mu^+ and
  /// mu^- (nullopt otherwise).
  std::optional<WeightDiagram> prime_of(const WeightDiagram &mu) const;
  /// The weight on the given side of the wall over mu' (wall cases only).
  WeightDiagram lift(const WeightDiagram &mu_prime, WallSide side) const;
};

/// Throws WeightError for a minimal weight.
ReductionCase classify_small_arc(const WeightDiagram &w);

QPoly d_poly(const WeightDiagram &lambda, const WeightDiagram &mu);
QPoly d_poly_recursive(const WeightDiagram &lambda, const WeightDiagram &mu);
std::int64_t decomposition_number(const WeightDiagram &lambda, const WeightDiagram &mu);

} // namespace bwkl

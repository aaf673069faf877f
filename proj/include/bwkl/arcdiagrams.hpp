#pragma once

// Cap diagrams (walled) and curl diagrams (Brauer) built from a weight,
// orientation against another weight, and degrees.

#include "bwkl/weights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bwkl {

class DiagramError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ArcDiagram {
  WeightDiagram base;
  std::vector<std::pair<int, int>> caps;  // (left, right), sorted by left end
  std::vector<std::pair<int, int>> curls; // Brauer only, left to right
  std::vector<int> rays;                  // non-trivial window vertices on no arc
  std::vector<int> free;                  // circle/cross window vertices
  std::optional<int> leftmost_nontrivial; // Brauer only

  /// Rightmost vertex on any cap or curl.
  std::optional<int> rightmost_arc_vertex() const;
};

/// Bracket matching with Down as opener and Up as closer; Brauer leftover Ups
/// are paired consecutively into curls.
ArcDiagram build_arc_diagram(const WeightDiagram &w);

/// False when w is not in the block of c.base.
bool is_oriented(const ArcDiagram &c, const WeightDiagram &w);

/// Number of clockwise caps (Up, Down) plus clockwise curls (Down, Down).
/// Throws DiagramError when the pair is not oriented.
int diagram_degree(const ArcDiagram &c, const WeightDiagram &w);

/// Box-drawing picture of c with the labels of w on the baseline.
std::string render_ascii(const ArcDiagram &c, const WeightDiagram &w);
std::string render_tikz(const ArcDiagram &c, const WeightDiagram &w);

} // namespace bwkl

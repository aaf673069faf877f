#pragma once

// Kazhdan-Lusztig type polynomials p_{lambda mu}(q): l-profiles, chamber
// trees of valued diagrams, enumeration, the recursive formula, and the
// two-letter word encoding of a weight.

#include "bwkl/arcdiagrams.hpp"
#include "bwkl/qpoly.hpp"
#include "bwkl/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bwkl {

struct LProfile {
  std::map<int, int> per_vertex; // vertex -> l_i, over I(B) inside the window
  int total = 0;
};

/// Brauer excludes the leftmost non-trivial vertex from I(B); walled excludes nothing.
LProfile l_profile(const WeightDiagram &lambda, const WeightDiagram &mu);

struct Chamber {
  enum class Bound { None, Cap, Curl };
  Bound bound = Bound::None; // None only for the root
  int left = 0, right = 0;   // endpoints of the bounding arc
  int parent = -1;
  std::vector<int> children; // ordered by right endpoint
  bool is_small = false;
  bool must_be_even = false;
  std::optional<int> small_bound;
};

struct ChamberTree {
  std::vector<Chamber> nodes; // nodes[0] is the unbounded chamber
  std::vector<std::vector<int>> chains;
};

ChamberTree chamber_tree(const ArcDiagram &c);
/// Fills small_bound of every small chamber from the profile.
void apply_bounds(ChamberTree &tree, const LProfile &bounds);

struct ValuedAssignment {
  std::vector<int> value; // per chamber, value[0] == 0
  int weight_sum = 0;
};

/// All valued diagrams allowed by the tree and the small-chamber bounds, in
/// depth-first lexicographic order. Empty when some bound is negative.
std::vector<ValuedAssignment> enumerate_valued(const ChamberTree &tree, const LProfile &bounds);

/// True iff the assignment satisfies every valued-diagram condition.
bool is_valid_assignment(const ChamberTree &tree, const ValuedAssignment &a);

QPoly p_poly(const WeightDiagram &lambda, const WeightDiagram &mu);
QPoly p_poly_recursive(const WeightDiagram &lambda, const WeightDiagram &mu);

struct BoeWord {
  std::string letters; // w_n ... w_1 over {a, b}
  bool redundant_last = false;
  /// Letters with the redundant final letter bracketed, e.g. "b[b]".
  std::string to_string() const;
};

/// Reads non-trivial vertices from the first vertex up to the cut-off, right to
/// left, Down -> a and Up -> b. The cut-off defaults to the rightmost vertex on
/// an arc of w's own diagram; an arc-free weight gives the empty word. For the
/// walled family the reading starts at the leftmost arc vertex and no letter is
/// marked redundant.
BoeWord boe_word(const WeightDiagram &w, std::optional<int> cutoff = std::nullopt);

struct ResolutionTerm {
  WeightDiagram mu;
  std::int64_t multiplicity;
};

/// Layer i lists the mu (in down_set order) with a non-zero coefficient of q^i in p(lambda, mu).
std::vector<std::vector<ResolutionTerm>> resolution_multiplicities(const WeightDiagram &lambda);

} // namespace bwkl

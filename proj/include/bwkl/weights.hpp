#pragma once

// (Bi)partitions, their weight diagrams, blocks and the partial order.
//
// Vertex positions are stored doubled (position n is stored as 2n) so the
// half-integer grid of the Brauer family with odd delta is exact. Adjacent
// vertices therefore differ by 2.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bwkl {

enum class Family { Brauer, Walled };

enum class Label : char { Circle = 'o', Cross = 'x', Down = 'v', Up = '^' };

inline bool is_nontrivial(Label l) { return l == Label::Down || l == Label::Up; }
inline Label flipped(Label l) { return l == Label::Up ? Label::Down : l == Label::Down ? Label::Up : l; }

std::string_view family_name(Family f);

/// Human-readable vertex position from its doubled value: "3/2", "-1", "0".
std::string format_position(int doubled);
Family parse_family(std::string_view s);

class WeightError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Shape {
  Family family = Family::Brauer;
  std::vector<int> parts; // Brauer
  std::vector<int> left;  // walled lambda^L
  std::vector<int> right; // walled lambda^R

  static Shape brauer(std::vector<int> parts);
  static Shape walled(std::vector<int> left, std::vector<int> right);

  int size() const;
  bool operator==(const Shape &) const = default;
};

/// "4,3,2" for partitions, "2,2,1|3,2" for bipartitions; "" and "|" are empty.
std::string to_string(const Shape &s);
/// "(4,3,2)", "()", "(2,2,1|3,2)".
std::string display_name(const Shape &s);
/// Accepts the to_string form, optionally wrapped in parentheses.
Shape parse_shape(Family family, std::string_view text);
/// Conjugate partition (componentwise for bipartitions).
Shape transpose(const Shape &s);
/// All partitions of n, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

class WeightDiagram {
public:
  /// Labels cover [window_lo, window_hi] in steps of 2. The window is
  /// normalized to the canonical minimal form. For the Brauer family a
  /// non-trivial label at vertex 0 is a resolved diamond.
  WeightDiagram(Family family, int delta, int window_lo, std::vector<Label> labels);

  Family family() const { return family_; }
  int delta() const { return delta_; }
  bool half_integer_grid() const { return family_ == Family::Brauer && (delta_ % 2 != 0); }
  /// First vertex of the Brauer axis (0 or 1 doubled); unused for walled.
  int grid_start() const { return half_integer_grid() ? 1 : 0; }
  int window_lo() const { return window_lo_; }
  int window_hi() const { return window_lo_ + 2 * (static_cast<int>(labels_.size()) - 1); }
  const std::vector<Label> &labels() const { return labels_; }

  /// Label of any vertex, including the tails outside the window.
  Label label_at(int pos) const;
  bool in_grid(int pos) const;

  bool has_diamond() const;
  std::optional<Label> diamond_resolution() const;

  /// Window labels as text over {o,x,v,^}, with the diamond shown as D.
  std::string label_string() const;
  /// Canonical identity string (family, delta, window, resolved labels).
  std::string key() const;

  /// Copy with the given (position, label) overrides.
  WeightDiagram with_labels(const std::vector<std::pair<int, Label>> &changes) const;

  /// Non-trivial vertices in [lo, hi] (clipped to the grid).
  std::vector<int> nontrivial_in(int lo, int hi) const;
  int up_count_in(int lo, int hi) const;

  bool operator==(const WeightDiagram &o) const {
    return family_ == o.family_ && delta_ == o.delta_ && window_lo_ == o.window_lo_ && labels_ == o.labels_;
  }

private:
  void normalize();

  Family family_;
  int delta_;
  int window_lo_;
  std::vector<Label> labels_;
};

/// Smallest window covering the non-tail parts of both diagrams.
std::pair<int, int> common_window(const WeightDiagram &a, const WeightDiagram &b);

/// Walled entries (x_{-n..-1}; x_{1..n}) of x_lambda for the first n indices on each side.
std::pair<std::vector<int>, std::vector<int>> walled_entries(const Shape &s, int delta, int n);
/// Brauer entries x_1..x_n of x_lambda, doubled.
std::vector<int> brauer_entries_doubled(const Shape &s, int delta, int n);

WeightDiagram build_weight_walled(const Shape &shape, int delta, bool allow_delta_zero = false);

/// The diamond choice fixes the resolution of the diamond in the minimal
/// weight of the block (Down means an even number of Up labels across the
/// whole block, Up an odd number); it is required when 0 is an entry.
WeightDiagram build_weight_brauer(const Shape &shape, int delta, std::optional<Label> diamond_choice,
                                  bool allow_delta_zero = false);

WeightDiagram build_weight(const Shape &shape, int delta, std::optional<Label> diamond_choice = Label::Down,
                           bool allow_delta_zero = false);

bool same_block(const WeightDiagram &a, const WeightDiagram &b);

/// (position, #Up of a at >= position minus #Up of b at >= position) for every
/// non-trivial vertex of the block, ascending.
std::vector<std::pair<int, int>> up_excess_profile(const WeightDiagram &a, const WeightDiagram &b);

/// a <= b in the block order. Throws WeightError if not in the same block.
bool weight_leq(const WeightDiagram &a, const WeightDiagram &b);

/// True iff the diagram has no cap or curl, i.e. it is minimal in its block.
bool is_minimal(const WeightDiagram &w);

/// Every weight <= w in its block, minimal weights first (Up-count ascending,
/// then label string ascending); the last element is w.
std::vector<WeightDiagram> down_set(const WeightDiagram &w);

Shape weight_to_shape(const WeightDiagram &w);

} // namespace bwkl

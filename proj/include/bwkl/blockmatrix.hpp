#pragma once

// Square matrices of polynomials indexed by a down-closed set of weights in
// one block, and the inverse identity between the p- and d-matrices.

#include "bwkl/qpoly.hpp"
#include "bwkl/weights.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace bwkl {

struct PolyMatrix {
  std::vector<WeightDiagram> index;
  std::vector<std::vector<QPoly>> entries; // entries[row][col], rows lambda, columns mu

  std::size_t size() const { return index.size(); }
  const QPoly &at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  bool is_identity() const;
};

/// True iff every weight lies in one block and every weight below an index
/// element is also in the index.
bool is_down_closed(const std::vector<WeightDiagram> &index);

/// Entry (r, c) = f(index[r], index[c]); rows are filled by up to `jobs`
/// threads and the result does not depend on the thread count.
PolyMatrix build_matrix(const std::vector<WeightDiagram> &index,
                        const std::function<QPoly(const WeightDiagram &, const WeightDiagram &)> &f, int jobs = 1);

/// Throws WeightError when the index is not down-closed.
PolyMatrix d_matrix(const std::vector<WeightDiagram> &index, int jobs = 1);
PolyMatrix p_matrix(const std::vector<WeightDiagram> &index, int jobs = 1);

/// Product a * b over a shared index.
PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b, int jobs = 1);

struct InverseReport {
  bool ok = false;
  PolyMatrix residual; // p(-q) * d(q) - I
};

InverseReport verify_inverse(const std::vector<WeightDiagram> &index, int jobs = 1);
/// Same check on matrices that were already computed.
InverseReport verify_inverse(const PolyMatrix &p, const PolyMatrix &d, int jobs = 1);

/// Coefficients of p(lambda, mu) by ascending degree; empty when p = 0.
std::vector<std::int64_t> ext_dimensions(const WeightDiagram &lambda, const WeightDiagram &mu);

} // namespace bwkl

#include "bwkl/blockmatrix.hpp"

#include "bwkl/decomp.hpp"
#include "bwkl/klpoly.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace bwkl {

bool PolyMatrix::is_identity() const {
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      if (entries[r][c] != (r == c ? QPoly::one() : QPoly()))
        return false;
  return true;
}

bool is_down_closed(const std::vector<WeightDiagram> &index) {
  std::unordered_set<std::string> keys;
  for (const auto &w : index)
    keys.insert(w.key());
  for (const auto &w : index) {
    if (!same_block(w, index.front()))
      return false;
    for (const auto &below : down_set(w))
      if (!keys.count(below.key()))
        return false;
  }
  return true;
}

namespace {

// Runs body(r) for every r < n on up to `jobs` threads; rethrows the first error.
void parallel_rows(std::size_t n, int jobs, const std::function<void(std::size_t)> &body) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t r = 0; r < n; ++r)
      body(r);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t r; (r = next.fetch_add(1)) < n;) {
        try {
          body(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto &th : pool)
    th.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace

PolyMatrix build_matrix(const std::vector<WeightDiagram> &index,
                        const std::function<QPoly(const WeightDiagram &, const WeightDiagram &)> &f, int jobs) {
  PolyMatrix m{index, std::vector<std::vector<QPoly>>(index.size(), std::vector<QPoly>(index.size()))};
  parallel_rows(index.size(), jobs, [&](std::size_t r) {
    for (std::size_t c = 0; c < index.size(); ++c)
      m.entries[r][c] = f(index[r], index[c]);
  });
  return m;
}

PolyMatrix d_matrix(const std::vector<WeightDiagram> &index, int jobs) {
  if (!index.empty() && !is_down_closed(index))
    throw WeightError("d_matrix: index is not down-closed in one block");
  return build_matrix(index, d_poly, jobs);
}

PolyMatrix p_matrix(const std::vector<WeightDiagram> &index, int jobs) {
  if (!index.empty() && !is_down_closed(index))
    throw WeightError("p_matrix: index is not down-closed in one block");
  return build_matrix(index, p_poly, jobs);
}

PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b, int jobs) {
  if (a.size() != b.size())
    throw std::invalid_argument("multiply: size mismatch");
  const std::size_t n = a.size();
  PolyMatrix m{a.index, std::vector<std::vector<QPoly>>(n, std::vector<QPoly>(n))};
  parallel_rows(n, jobs, [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) {
      QPoly s;
      for (std::size_t k = 0; k < n; ++k)
        if (!a.entries[r][k].is_zero() && !b.entries[k][c].is_zero())
          s += a.entries[r][k] * b.entries[k][c];
      m.entries[r][c] = s;
    }
  });
  return m;
}

InverseReport verify_inverse(const PolyMatrix &p, const PolyMatrix &d, int jobs) {
  PolyMatrix p_neg = p;
  for (auto &row : p_neg.entries)
    for (auto &e : row)
      e = e.substitute_negated();
  InverseReport rep{false, multiply(p_neg, d, jobs)};
  for (std::size_t r = 0; r < rep.residual.size(); ++r)
    rep.residual.entries[r][r] -= QPoly::one();
  rep.ok = true;
  for (auto &row : rep.residual.entries)
    for (auto &e : row)
      if (!e.is_zero())
        rep.ok = false;
  return rep;
}

InverseReport verify_inverse(const std::vector<WeightDiagram> &index, int jobs) {
  return verify_inverse(p_matrix(index, jobs), d_matrix(index, jobs), jobs);
}

std::vector<std::int64_t> ext_dimensions(const WeightDiagram &lambda, const WeightDiagram &mu) {
  return p_poly(lambda, mu).coefficients();
}

} // namespace bwkl

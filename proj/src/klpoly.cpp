#include "bwkl/klpoly.hpp"

#include "bwkl/decomp.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace bwkl {

LProfile l_profile(const WeightDiagram &lambda, const WeightDiagram &mu) {
  if (!same_block(lambda, mu))
    throw WeightError("l_profile: weights are not in the same block");
  LProfile out;
  auto profile = up_excess_profile(lambda, mu);
  const bool skip_first = lambda.family() == Family::Brauer;
  for (std::size_t k = skip_first ? 1 : 0; k < profile.size(); ++k) {
    out.per_vertex[profile[k].first] = profile[k].second;
    out.total += profile[k].second;
  }
  return out;
}

ChamberTree chamber_tree(const ArcDiagram &c) {
  ChamberTree t;
  t.nodes.emplace_back();
  for (auto [u, v] : c.caps) {
    Chamber ch;
    ch.bound = Chamber::Bound::Cap;
    ch.left = u;
    ch.right = v;
    t.nodes.push_back(ch);
  }
  for (auto [i, j] : c.curls) {
    Chamber ch;
    ch.bound = Chamber::Bound::Curl;
    ch.left = i;
    ch.right = j;
    t.nodes.push_back(ch);
  }
  // A curl (i, j) occupies the interval (-inf, j), a cap (u, v) the interval (u, v).
  constexpr long long kFar = std::numeric_limits<int>::min();
  auto lo_of = [&](const Chamber &ch) -> long long { return ch.bound == Chamber::Bound::Curl ? kFar : ch.left; };
  const int n = static_cast<int>(t.nodes.size());
  for (int b = 1; b < n; ++b) {
    int best = 0;
    long long best_width = std::numeric_limits<long long>::max();
    const Chamber &B = t.nodes[static_cast<std::size_t>(b)];
    for (int a = 1; a < n; ++a) {
      if (a == b)
        continue;
      const Chamber &A = t.nodes[static_cast<std::size_t>(a)];
      if (lo_of(A) <= lo_of(B) && B.right <= A.right) {
        long long width = A.right - lo_of(A);
        if (width < best_width) {
          best_width = width;
          best = a;
        }
      }
    }
    t.nodes[static_cast<std::size_t>(b)].parent = best;
    t.nodes[static_cast<std::size_t>(best)].children.push_back(b);
  }
  std::vector<int> curl_ends;
  for (auto [i, j] : c.curls) {
    curl_ends.push_back(i);
    curl_ends.push_back(j);
  }
  for (int a = 0; a < n; ++a) {
    auto &A = t.nodes[static_cast<std::size_t>(a)];
    std::sort(A.children.begin(), A.children.end(), [&](int x, int y) {
      return t.nodes[static_cast<std::size_t>(x)].right < t.nodes[static_cast<std::size_t>(y)].right;
    });
    if (a > 0) {
      A.is_small = A.children.empty();
      A.must_be_even = c.base.family() == Family::Brauer &&
                       (A.bound == Chamber::Bound::Curl || (c.leftmost_nontrivial && A.left == *c.leftmost_nontrivial));
    }
  }
  auto starts_chain = [&](int k) {
    const Chamber &ch = t.nodes[static_cast<std::size_t>(k)];
    return ch.bound == Chamber::Bound::Curl || (c.leftmost_nontrivial && ch.left == *c.leftmost_nontrivial);
  };
  for (int a = 0; a < n; ++a) {
    const auto &kids = t.nodes[static_cast<std::size_t>(a)].children;
    std::vector<std::vector<int>> runs;
    for (std::size_t k = 0; k < kids.size(); ++k) {
      bool split = k == 0;
      if (!split) {
        int from = t.nodes[static_cast<std::size_t>(kids[k - 1])].right;
        int to = t.nodes[static_cast<std::size_t>(kids[k])].left;
        auto between = [&](int p) { return from < p && p < to; };
        split = std::any_of(curl_ends.begin(), curl_ends.end(), between) ||
                (a == 0 && std::any_of(c.rays.begin(), c.rays.end(), between));
      }
      if (split)
        runs.emplace_back();
      runs.back().push_back(kids[k]);
    }
    for (auto &r : runs)
      if (starts_chain(r.front()))
        t.chains.push_back(r);
  }
  return t;
}

void apply_bounds(ChamberTree &tree, const LProfile &bounds) {
  for (auto &ch : tree.nodes) {
    if (!ch.is_small)
      continue;
    auto it = bounds.per_vertex.find(ch.right);
    if (it == bounds.per_vertex.end())
      throw WeightError("apply_bounds: profile has no value at vertex " + format_position(ch.right));
    ch.small_bound = it->second;
  }
}

namespace {

struct ChainSlot {
  int chain = -1;
  int index = 0;
};

std::vector<ChainSlot> chain_slots(const ChamberTree &tree) {
  std::vector<ChainSlot> slots(tree.nodes.size());
  for (std::size_t c = 0; c < tree.chains.size(); ++c)
    for (std::size_t k = 0; k < tree.chains[c].size(); ++k)
      slots[static_cast<std::size_t>(tree.chains[c][k])] = {static_cast<int>(c), static_cast<int>(k)};
  return slots;
}

// Whether a chain member's value is forced even, given the values of the
// earlier members of its chain.
bool chain_forces_even(const ChamberTree &tree, const std::vector<int> &value, const ChainSlot &slot, int v) {
  const auto &chain = tree.chains[static_cast<std::size_t>(slot.chain)];
  for (int k = 0; k < slot.index; ++k)
    if (v > value[static_cast<std::size_t>(chain[static_cast<std::size_t>(k)])])
      return false;
  return true;
}

} // namespace

std::vector<ValuedAssignment> enumerate_valued(const ChamberTree &tree_in, const LProfile &bounds) {
  ChamberTree tree = tree_in;
  apply_bounds(tree, bounds);
  const std::size_t n = tree.nodes.size();
  std::vector<int> upper(n, 0);
  std::vector<int> order;
  auto post = [&](auto &&self, int a) -> void {
    auto &ch = tree.nodes[static_cast<std::size_t>(a)];
    int ub = std::numeric_limits<int>::max();
    for (int k : ch.children) {
      order.push_back(k);
      self(self, k);
      ub = std::min(ub, upper[static_cast<std::size_t>(k)]);
    }
    if (ch.is_small)
      ub = *ch.small_bound;
    upper[static_cast<std::size_t>(a)] = ub;
  };
  post(post, 0);
  for (std::size_t a = 1; a < n; ++a)
    if (upper[a] < 0)
      return {};

  const auto slots = chain_slots(tree);
  std::vector<ValuedAssignment> out;
  std::vector<int> value(n, 0);
  auto rec = [&](auto &&self, std::size_t k, int sum) -> void {
    if (k == order.size()) {
      out.push_back({value, sum});
      return;
    }
    const int a = order[k];
    const auto &ch = tree.nodes[static_cast<std::size_t>(a)];
    const int lo = value[static_cast<std::size_t>(ch.parent)];
    const ChainSlot &slot = slots[static_cast<std::size_t>(a)];
    for (int v = lo; v <= upper[static_cast<std::size_t>(a)]; ++v) {
      if (v % 2 != 0) {
        if (ch.must_be_even)
          continue;
        if (slot.chain >= 0 && chain_forces_even(tree, value, slot, v))
          continue;
      }
      value[static_cast<std::size_t>(a)] = v;
      self(self, k + 1, sum + v);
    }
    value[static_cast<std::size_t>(a)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

bool is_valid_assignment(const ChamberTree &tree, const ValuedAssignment &a) {
  const std::size_t n = tree.nodes.size();
  if (a.value.size() != n || a.value[0] != 0)
    return false;
  int sum = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const auto &ch = tree.nodes[k];
    int v = a.value[k];
    sum += v;
    if (v < a.value[static_cast<std::size_t>(ch.parent)])
      return false;
    if (ch.must_be_even && v % 2 != 0)
      return false;
    if (ch.is_small && ch.small_bound && v > *ch.small_bound)
      return false;
  }
  for (const auto &chain : tree.chains)
    for (std::size_t i = 0; i < chain.size(); ++i) {
      int vi = a.value[static_cast<std::size_t>(chain[i])];
      bool minimal_so_far = true;
      for (std::size_t j = 0; j < i; ++j)
        if (vi > a.value[static_cast<std::size_t>(chain[j])])
          minimal_so_far = false;
      if (minimal_so_far && vi % 2 != 0)
        return false;
    }
  return sum == a.weight_sum;
}

QPoly p_poly(const WeightDiagram &lambda, const WeightDiagram &mu) {
  if (lambda.family() != mu.family() || lambda.delta() != mu.delta() || !same_block(lambda, mu))
    return QPoly();
  if (!weight_leq(mu, lambda))
    return QPoly();
  const LProfile prof = l_profile(lambda, mu);
  const ChamberTree tree = chamber_tree(build_arc_diagram(mu));
  QPoly out;
  for (const auto &a : enumerate_valued(tree, prof))
    out += QPoly::monomial(prof.total - 2 * a.weight_sum);
  return out;
}

namespace {

constexpr std::size_t kMemoLimit = 1u << 20;

QPoly p_rec(const WeightDiagram &lambda, const WeightDiagram &mu, std::unordered_map<std::string, QPoly> &memo) {
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
    out = p_rec(rc.lambda_prime, *rc.prime_of(mu), memo);
  } else {
    out = QPoly::q() * p_rec(*rc.lambda_minus, mu, memo);
    if (rc.side_of(mu) == WallSide::Plus)
      out += p_rec(rc.lambda_prime, *rc.prime_of(mu), memo);
  }
  if (memo.size() >= kMemoLimit)
    memo.clear();
  memo.emplace(std::move(key), out);
  return out;
}

} // namespace

QPoly p_poly_recursive(const WeightDiagram &lambda, const WeightDiagram &mu) {
  if (lambda.family() != mu.family() || lambda.delta() != mu.delta())
    return QPoly();
  thread_local std::unordered_map<std::string, QPoly> memo;
  return p_rec(lambda, mu, memo);
}

std::string BoeWord::to_string() const {
  if (!redundant_last || letters.empty())
    return letters;
  return letters.substr(0, letters.size() - 1) + "[" + letters.back() + "]";
}

BoeWord boe_word(const WeightDiagram &w, std::optional<int> cutoff) {
  const ArcDiagram c = build_arc_diagram(w);
  BoeWord word;
  std::optional<int> m = cutoff ? cutoff : c.rightmost_arc_vertex();
  if (!m)
    return word;
  int start = w.grid_start();
  if (w.family() == Family::Walled) {
    if (c.caps.empty())
      return word;
    start = c.caps.front().first;
  }
  for (int p : w.nontrivial_in(start, *m))
    word.letters.insert(word.letters.begin(), w.label_at(p) == Label::Down ? 'a' : 'b');
  word.redundant_last = w.family() == Family::Brauer && !word.letters.empty();
  return word;
}

std::vector<std::vector<ResolutionTerm>> resolution_multiplicities(const WeightDiagram &lambda) {
  std::vector<std::vector<ResolutionTerm>> layers;
  for (const auto &mu : down_set(lambda)) {
    const QPoly p = p_poly(lambda, mu);
    for (auto [e, coeff] : p.terms()) {
      if (e < 0)
        throw std::logic_error("resolution_multiplicities: negative exponent in p");
      if (static_cast<std::size_t>(e) >= layers.size())
        layers.resize(static_cast<std::size_t>(e) + 1);
      layers[static_cast<std::size_t>(e)].push_back({mu, coeff});
    }
  }
  return layers;
}

} // namespace bwkl

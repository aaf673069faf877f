#pragma once

// Slow, definition-level reference implementations used only by the tests.
// They work on plain label strings and deliberately share no code with the
// library beyond the types needed to compare results.

#include "bwkl/klpoly.hpp"
#include "bwkl/weights.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Labels of the walled weight of (L, R) at integer positions lo..hi, read
// straight off the entry sets I_down = {x_{-k}} and I_up = {x_k}.
inline std::string walled_labels(const std::vector<int> &L, const std::vector<int> &R, int delta, int lo, int hi) {
  std::set<int> down, up;
  auto part = [](const std::vector<int> &p, int k) { return k <= static_cast<int>(p.size()) ? p[k - 1] : 0; };
  for (int k = 1; k < 400; ++k) {
    down.insert(k - part(L, k));
    up.insert(delta - k + 1 + part(R, k));
  }
  std::string s;
  for (int n = lo; n <= hi; ++n) {
    bool d = down.count(n), u = up.count(n);
    s += d && u ? 'x' : u ? '^' : d ? 'v' : 'o';
  }
  return s;
}

// Brauer labels at vertices 0..count-1 of the grid (vertex k is k + 1/2 for
// odd delta). Vertex 0 of the integer grid reads 'D' when 0 is an entry.
inline std::string brauer_labels(const std::vector<int> &parts, int delta, int count) {
  std::set<int> entries; // doubled
  for (int i = 1; i < 400; ++i) {
    int p = i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0;
    entries.insert(2 * p - delta - 2 * (i - 1));
  }
  std::string s;
  const int start = (delta % 2 != 0) ? 1 : 0;
  for (int k = 0; k < count; ++k) {
    int n = start + 2 * k;
    if (n == 0) {
      s += entries.count(0) ? 'D' : 'o';
      continue;
    }
    bool u = entries.count(n), d = entries.count(-n);
    s += d && u ? 'x' : u ? '^' : d ? 'v' : 'o';
  }
  return s;
}

// Closure of a label string under the orbit moves: swap a '^' and a 'v'
// anywhere (both families), and for Brauer also turn any two equal
// non-trivial labels into the two opposite ones.
inline std::set<std::string> orbit(const std::string &start, bool brauer) {
  std::set<std::string> seen{start};
  std::deque<std::string> todo{start};
  while (!todo.empty()) {
    std::string s = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if ((s[i] != 'v' && s[i] != '^') || (s[j] != 'v' && s[j] != '^'))
          continue;
        std::string t = s;
        if (s[i] != s[j]) {
          std::swap(t[i], t[j]);
        } else if (brauer) {
          char f = s[i] == 'v' ? '^' : 'v';
          t[i] = t[j] = f;
        } else {
          continue;
        }
        if (seen.insert(t).second)
          todo.push_back(t);
      }
  }
  return seen;
}

// Everything below `start` in the order generated by: moving an Up to the left
// past a Down (swap), and for Brauer replacing two Ups by two Downs.
inline std::set<std::string> down_closure(const std::string &start, bool brauer) {
  std::set<std::string> seen{start};
  std::deque<std::string> todo{start};
  while (!todo.empty()) {
    std::string s = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        std::string t = s;
        if (s[i] == 'v' && s[j] == '^') {
          t[i] = '^';
          t[j] = 'v';
        } else if (brauer && s[i] == '^' && s[j] == '^') {
          t[i] = t[j] = 'v';
        } else {
          continue;
        }
        if (seen.insert(t).second)
          todo.push_back(t);
      }
  }
  return seen;
}

// Caps by the neighbour rule: repeatedly join a 'v' to the next remaining
// non-trivial vertex when that one is '^', choosing among all such pairs at random.
inline std::set<std::pair<int, int>> caps_by_neighbour_rule(const std::string &s, std::mt19937 &rng) {
  std::vector<int> alive;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] == 'v' || s[i] == '^')
      alive.push_back(i);
  std::set<std::pair<int, int>> caps;
  while (true) {
    std::vector<std::size_t> options;
    for (std::size_t k = 0; k + 1 < alive.size(); ++k)
      if (s[alive[k]] == 'v' && s[alive[k + 1]] == '^')
        options.push_back(k);
    if (options.empty())
      break;
    std::size_t k = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    caps.insert({alive[k], alive[k + 1]});
    alive.erase(alive.begin() + static_cast<long>(k), alive.begin() + static_cast<long>(k) + 2);
  }
  return caps;
}

// d(lambda, mu) straight from the orientation rules, on label strings of equal
// length covering both windows (tails: '^' left for walled, 'v' right).
// Returns -1 for zero, else the degree.
inline int degree_or_minus_one(const std::string &lam, const std::string &mu, bool brauer) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    bool tl = lam[i] == 'o' || lam[i] == 'x', tm = mu[i] == 'o' || mu[i] == 'x';
    if (tl != tm || (tl && lam[i] != mu[i]))
      return -1;
  }
  auto ups = [](const std::string &s) { return std::count(s.begin(), s.end(), '^'); };
  if (brauer ? (ups(lam) - ups(mu)) % 2 != 0 : ups(lam) != ups(mu))
    return -1;
  std::vector<int> stack, lone_up, rays;
  std::vector<std::pair<int, int>> caps, curls;
  for (int i = 0; i < static_cast<int>(lam.size()); ++i) {
    if (lam[i] == 'v') {
      stack.push_back(i);
    } else if (lam[i] == '^') {
      if (stack.empty()) {
        lone_up.push_back(i);
      } else {
        caps.push_back({stack.back(), i});
        stack.pop_back();
      }
    }
  }
  if (brauer) {
    std::size_t k = 0;
    for (; k + 1 < lone_up.size(); k += 2)
      curls.push_back({lone_up[k], lone_up[k + 1]});
    if (k < lone_up.size())
      rays.push_back(lone_up[k]);
  } else {
    rays = lone_up;
  }
  rays.insert(rays.end(), stack.begin(), stack.end());
  std::sort(rays.begin(), rays.end());
  int deg = 0;
  for (auto [a, b] : caps) {
    if (mu[a] == mu[b])
      return -1;
    deg += mu[a] == '^';
  }
  for (auto [a, b] : curls) {
    if (mu[a] != mu[b])
      return -1;
    deg += mu[a] == 'v';
  }
  int up_rays = 0;
  bool down_seen = false;
  for (int r : rays) {
    if (mu[r] == 'v') {
      down_seen = true;
    } else {
      if (down_seen)
        return -1;
      ++up_rays;
    }
  }
  if (brauer && up_rays > 1)
    return -1;
  return deg;
}

// Every value vector satisfying the valued-diagram conditions, by filtering the
// full product space [0, cap]^chambers.
inline std::set<std::vector<int>> brute_force_assignments(const bwkl::ChamberTree &t, int cap) {
  const std::size_t n = t.nodes.size();
  std::set<std::vector<int>> out;
  std::vector<int> v(n, 0);
  auto ok = [&]() {
    for (std::size_t k = 1; k < n; ++k) {
      const auto &c = t.nodes[k];
      if (v[k] < v[static_cast<std::size_t>(c.parent)])
        return false;
      if (c.must_be_even && v[k] % 2)
        return false;
      if (c.is_small && v[k] > *c.small_bound)
        return false;
    }
    for (const auto &chain : t.chains)
      for (std::size_t i = 0; i < chain.size(); ++i) {
        bool lowest = true;
        for (std::size_t j = 0; j < i; ++j)
          if (v[static_cast<std::size_t>(chain[i])] > v[static_cast<std::size_t>(chain[j])])
            lowest = false;
        if (lowest && v[static_cast<std::size_t>(chain[i])] % 2)
          return false;
      }
    return true;
  };
  auto rec = [&](auto &&self, std::size_t k) -> void {
    if (k == n) {
      if (ok())
        out.insert(v);
      return;
    }
    for (int x = 0; x <= cap; ++x) {
      v[k] = x;
      self(self, k + 1);
    }
    v[k] = 0;
  };
  v[0] = 0;
  rec(rec, 1);
  return out;
}

} // namespace oracle

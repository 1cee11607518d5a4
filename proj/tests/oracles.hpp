#pragma once
// Brute-force reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the library's search code.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "pries/frame.hpp"
#include "pries/order.hpp"

namespace oracle {

using pries::Bits;
using pries::Elem;
using pries::Frame;
using pries::Poset;

/// Every function table [0, n) -> [0, m), lexicographic.
template <class Fn>
void for_each_table(std::size_t n, std::size_t m, Fn&& fn) {
  std::vector<std::size_t> t(n, 0);
  if (m == 0 && n > 0) return;
  while (true) {
    fn(t);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < m) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::size_t count_monotone(const Poset& p, const Poset& q) {
  std::size_t c = 0;
  for_each_table(p.size(), q.size(), [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p.le(i, j) && !q.le(t[i], t[j])) return;
    ++c;
  });
  return c;
}

/// Frame homs by filtering all |M|^|L| tables: bottom, top, binary meets and joins.
inline std::size_t count_frame_homs(const Frame& l, const Frame& m) {
  std::size_t c = 0;
  for_each_table(l.size(), m.size(), [&](const std::vector<std::size_t>& t) {
    if (t[l.bottom()] != m.bottom() || t[l.top()] != m.top()) return;
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b)
        if (t[l.meet(a, b)] != m.meet(t[a], t[b]) || t[l.join(a, b)] != m.join(t[a], t[b])) return;
    ++c;
  });
  return c;
}

/// Every upset of the carrier by scanning all 2^n subsets.
inline std::vector<Bits> all_upsets(const Poset& p) {
  std::vector<Bits> out;
  const std::size_t n = p.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.set(i);
    bool up = true;
    for (std::size_t i = 0; i < n && up; ++i)
      for (std::size_t j = 0; j < n && up; ++j)
        if (s.test(i) && p.le(i, j) && !s.test(j)) up = false;
    if (up) out.push_back(s);
  }
  return out;
}

/// Prime filters of a frame by testing every subset against the axioms.
inline std::vector<Bits> prime_filters_by_subsets(const Frame& l) {
  std::vector<Bits> out;
  for (const auto& s : all_upsets(l.order())) {
    if (s.none() || s.test(l.bottom())) continue;
    bool ok = true;
    for (Elem a = 0; a < l.size() && ok; ++a)
      for (Elem b = 0; b < l.size() && ok; ++b) {
        if (s.test(a) && s.test(b) && !s.test(l.meet(a, b))) ok = false;
        if (s.test(l.join(a, b)) && !s.test(a) && !s.test(b)) ok = false;
      }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Nuclei by filtering every endo-table.
inline std::size_t count_nuclei(const Frame& l) {
  std::size_t c = 0;
  for_each_table(l.size(), l.size(), [&](const std::vector<std::size_t>& t) {
    for (Elem a = 0; a < l.size(); ++a) {
      if (!l.le(a, t[a]) || t[t[a]] != t[a]) return;
      for (Elem b = 0; b < l.size(); ++b)
        if (t[l.meet(a, b)] != l.meet(t[a], t[b])) return;
    }
    ++c;
  });
  return c;
}

/// Sublocales by filtering every subset.
inline std::size_t count_sublocales(const Frame& l) {
  std::size_t c = 0;
  const std::size_t n = l.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto in = [&](Elem a) { return (mask >> a & 1U) != 0; };
    if (!in(l.top())) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (in(b) && !in(l.meet(a, b))) ok = false;
        if (!in(l.imp(b, a))) ok = false;
      }
    }
    if (ok) ++c;
  }
  return c;
}

/// Number of n-element posets up to isomorphism: every transitive relation
/// that is upper triangular (a natural labeling), keyed by the minimum over
/// all n! relabelings of the full n x n matrix.
inline std::size_t count_posets(std::size_t n) {
  const std::size_t m = n * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  std::vector<std::size_t> perm(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1U) r[slots[k].first][slots[k].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) transitive = false;
    if (!transitive) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) key[i * n + j] = r[perm[i]][perm[j]];
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.insert(best);
  }
  return seen.size();
}

}  // namespace oracle

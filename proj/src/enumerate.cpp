#include "pries/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "pries/duality.hpp"

namespace pries {

namespace {

// Iterated color refinement seeded with (#below, #above). Colors are ranks of
// sorted signatures, so they are isomorphism invariant, and each round refines
// the previous ordering, which keeps "color ascending" a linear extension.
std::vector<std::size_t> refined_colors(const Poset& p) {
  const auto n = p.size();
  std::vector<std::vector<std::size_t>> sig(n);
  for (std::size_t i = 0; i < n; ++i) sig[i] = {p.down(i).count(), p.up(i).count()};
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      color[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> below, above;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.lt(j, i)) below.push_back(color[j]);
        if (p.lt(i, j)) above.push_back(color[j]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i] = {color[i], below.size()};
      sig[i].insert(sig[i].end(), below.begin(), below.end());
      sig[i].push_back(above.size());
      sig[i].insert(sig[i].end(), above.begin(), above.end());
    }
  }
  return color;
}

std::uint64_t code_of(const Poset& p, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  const auto n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (p.le(order[i], order[j]) ? 1U : 0U);
  return code;
}

// order[k] = original element placed at position k.
std::vector<std::size_t> canonical_order(const Poset& p) {
  const auto n = p.size();
  if (n > 11) throw Error(ErrorCode::SizeRefused, "canonical forms are limited to 11 elements");
  const auto color = refined_colors(p);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  // Contiguous color classes [begin, end).
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t k = 0; k < n;) {
    std::size_t e = k;
    while (e < n && color[order[e]] == color[order[k]]) ++e;
    blocks.emplace_back(k, e);
    k = e;
  }

  std::vector<std::size_t> best = order;
  std::uint64_t best_code = code_of(p, order);
  // Odometer over the per-block permutations; every block starts sorted.
  while (true) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;  // wrapped blocks are sorted again
    }
    if (b == blocks.size()) break;
    auto c = code_of(p, order);
    if (c < best_code) {
      best_code = c;
      best = order;
    }
  }
  return best;
}

Poset relabel(const Poset& p, const std::vector<std::size_t>& order) {
  const auto n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.le(order[i], order[j])) pairs.emplace_back(i, j);
  return Poset::from_pairs(n, pairs);
}

PosetCatalog build_catalog(const PosetCatalog& smaller) {
  const auto n = smaller.size + 1;
  std::map<std::uint64_t, PosetPtr> reps;
  for (const auto& base : smaller.representatives) {
    // Attach a new maximal element on top of each downset of the base.
    auto pairs = base->strict_pairs();
    const std::size_t top = n - 1;
    for (const auto& upset : base->upsets()) {
      const Bits downset = ~upset;
      auto ext = pairs;
      downset.for_each([&](std::size_t i) { ext.emplace_back(i, top); });
      Poset candidate = Poset::from_pairs(n, ext);
      auto order = canonical_order(candidate);
      auto code = code_of(candidate, order);
      if (!reps.contains(code)) reps.emplace(code, share(relabel(candidate, order)));
    }
  }
  PosetCatalog cat;
  cat.size = n;
  for (auto& [code, p] : reps) cat.representatives.push_back(p);
  return cat;
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) { return code_of(p, canonical_order(p)); }

Poset canonical_form(const Poset& p) { return relabel(p, canonical_order(p)); }

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

const PosetCatalog& all_posets(std::size_t n) {
  if (n == 0 || n > kMaxCatalogSize)
    throw Error(ErrorCode::SizeRefused,
                "poset catalogs are available for 1 <= n <= " + std::to_string(kMaxCatalogSize));
  static std::mutex mu;
  static std::array<std::optional<PosetCatalog>, kMaxCatalogSize + 1> cache;
  std::lock_guard lock(mu);
  if (!cache[1]) cache[1] = PosetCatalog{1, {share(Poset::chain(1))}};
  for (std::size_t k = 2; k <= n; ++k)
    if (!cache[k]) cache[k] = build_catalog(*cache[k - 1]);
  return *cache[n];
}

std::vector<FramePtr> catalog_frames(std::size_t n) {
  std::vector<FramePtr> out;
  for (const auto& p : all_posets(n).representatives) out.push_back(clopup_frame(p).frame);
  return out;
}

std::vector<FramePtr> frames_up_to(std::size_t max_elements) {
  std::vector<FramePtr> out;
  if (max_elements == 0) return out;
  out.push_back(clopup_frame(share(Poset::antichain(0))).frame);
  // A spectrum with n points yields at least n + 1 upsets.
  for (std::size_t n = 1; n + 1 <= max_elements; ++n) {
    for (const auto& p : all_posets(n).representatives) {
      // Count upsets cheaply before building the frame.
      if (p->upsets().size() <= max_elements) out.push_back(clopup_frame(p).frame);
    }
  }
  return out;
}

}  // namespace pries

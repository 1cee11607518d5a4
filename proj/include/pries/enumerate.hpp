#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pries/frame.hpp"
#include "pries/order.hpp"

namespace pries {

inline constexpr std::size_t kMaxCatalogSize = 7;

/// Pairwise non-isomorphic representatives of every n-element poset, each in
/// canonical labeling, sorted by canonical code.
struct PosetCatalog {
  std::size_t size = 0;
  std::vector<PosetPtr> representatives;
};

/// Canonical code: the upper-triangular relation bits (row-major over i < j)
/// of the relabeling that minimizes them. Equal codes <=> isomorphic posets.
/// Relabelings are restricted to orderings by a refined (#below, #above)
/// coloring, so every candidate is a linear extension. n <= 11.
std::uint64_t canonical_code(const Poset& p);

/// The poset relabeled by the permutation that achieves canonical_code.
Poset canonical_form(const Poset& p);

bool isomorphic(const Poset& a, const Poset& b);

/// Memoized. Throws SizeRefused for n == 0 or n > kMaxCatalogSize.
const PosetCatalog& all_posets(std::size_t n);

/// ClopUp of each representative: every finite frame whose spectrum has n
/// points, once up to isomorphism.
std::vector<FramePtr> catalog_frames(std::size_t n);

/// Every finite frame with at most `max_elements` elements, the 1-element
/// frame included, ordered by dual size then catalog position.
std::vector<FramePtr> frames_up_to(std::size_t max_elements);

}  // namespace pries

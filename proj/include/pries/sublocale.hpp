#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pries/bits.hpp"
#include "pries/frame.hpp"

namespace pries {

/// Inflationary, idempotent, meet-preserving endo-map on a frame.
struct Nucleus {
  FramePtr frame;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
  friend bool operator==(const Nucleus& a, const Nucleus& b) { return a.table == b.table; }
};

/// Subset closed under all meets and under x -> (-) for every x.
struct Sublocale {
  FramePtr frame;
  Bits members;

  friend bool operator==(const Sublocale& a, const Sublocale& b) { return a.members == b.members; }
};

/// Witness: {a} for a failing inflation/idempotence, {a, b} for meets.
Check is_nucleus(const Frame& l, const std::vector<Elem>& table);
/// Witness: {} when top is missing, {a, b} for a missing meet, {x, s} for a
/// missing implication x -> s.
Check is_sublocale(const Frame& l, const Bits& s);

/// Both throw NotANucleus / NotASublocale on invalid input.
Sublocale sublocale_of_nucleus(const Nucleus& nu);
Nucleus nucleus_of_sublocale(const Sublocale& s);

struct OpenSublocale {
  Sublocale sublocale;
  Nucleus nucleus;
};

/// o(a) = { a -> x : x in L } with nucleus x |-> a -> x.
OpenSublocale open_sublocale(const FramePtr& l, Elem a);

/// Direct image r[S] for a localic map r : M -> L, checked against
/// nu_{r[S]} = r . nu_S . h pointwise. Throws NotLocalic, NotASublocale and
/// IdentityViolation(a).
Sublocale image_sublocale(const LatticeMap& r, const Sublocale& s);

struct OpenMapResult {
  bool open = true;
  /// (a, b) with r[o(a)] = o(b), b the smallest such index. Complete when open.
  std::vector<std::pair<Elem, Elem>> witnesses;
  /// First a in the source whose image is not open.
  std::optional<Elem> failing;
};

/// r is open iff every r[o(a)] is some o(b). Both the sublocale formulation and
/// the nucleus formulation r . nu_a . h = nu_b are evaluated; disagreement
/// throws IdentityViolation. Throws NotLocalic.
OpenMapResult is_open_localic_map(const LatticeMap& r);

/// Brute force over subsets with meet-closure pruning. SizeRefused above 20.
std::vector<Sublocale> all_sublocales(const FramePtr& l);

/// Backtracking over endo-tables, independent of the sublocale search.
std::vector<Nucleus> all_nuclei(const FramePtr& l);

inline constexpr std::size_t kMaxSublocaleFrameSize = 20;

}  // namespace pries

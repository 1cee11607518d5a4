#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "pries/bits.hpp"
#include "pries/frame.hpp"
#include "pries/order.hpp"

namespace pries {

/// Largest frame whose spectrum we are willing to compute.
inline constexpr std::size_t kMaxSpectrumFrameSize = std::size_t{1} << 14;

/// The prime-filter spectrum X_L of a finite frame, ordered by inclusion.
/// Filters are listed in lexicographic order of their membership bitsets.
struct DualSpace {
  FramePtr frame;
  std::vector<Bits> filters;
  PosetPtr order;

  std::size_t size() const { return filters.size(); }
  /// Position of a filter in `filters`, or size() when absent.
  std::size_t index_of(const Bits& filter) const;
  /// phi(a) = { x in X_L : a in x }.
  Bits stone(Elem a) const;

 private:
  friend DualSpace prime_filters(const FramePtr& l);
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

/// Prime filters of L. Throws SizeRefused above kMaxSpectrumFrameSize.
DualSpace prime_filters(const FramePtr& l);

/// Nonempty proper upset, closed under binary meets, prime.
bool is_prime_filter(const Frame& l, const Bits& s);

inline Bits stone_map(const DualSpace& x, Elem a) { return x.stone(a); }

/// Basic open phi(a) \ phi(b). The finite topology is discrete, so this is
/// just a set difference.
inline Bits basic_open(const DualSpace& x, Elem a, Elem b) { return x.stone(a) - x.stone(b); }

/// ClopUp(X): the upsets of a finite poset as a frame. Element i of `frame`
/// is `upsets[i]`; index 0 is the empty upset, the last is X.
struct UpsetFrame {
  PosetPtr space;
  std::vector<Bits> upsets;
  FramePtr frame;

  std::size_t index_of(const Bits& upset) const;

 private:
  friend UpsetFrame clopup_frame(const PosetPtr& x);
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

UpsetFrame clopup_frame(const PosetPtr& x);

/// The dual map X_M -> X_L, F |-> h^-1[F]. Throws NotAHom, and
/// EquationViolation if f^-1(phi(a)) != phi(h(a)) for some a.
MonotoneMap dual_of_hom(const LatticeMap& h, const DualSpace& xl, const DualSpace& xm);
MonotoneMap dual_of_hom(const LatticeMap& h);

/// U |-> f^-1(U) as a frame map ClopUp(Y) -> ClopUp(X) for f : X -> Y.
LatticeMap hom_from_monotone(const MonotoneMap& f, const UpsetFrame& up_y, const UpsetFrame& up_x);
LatticeMap hom_from_monotone(const MonotoneMap& f);

/// The Stone map L -> ClopUp(X_L) packaged with its inverse.
struct Isomorphism {
  DualSpace spectrum;
  UpsetFrame upsets;
  LatticeMap forward;   // a |-> phi(a)
  LatticeMap backward;  // phi(a) |-> a
};

/// Verifies the Stone map is a bijective lattice map in both directions.
/// Throws RoundTripFailure with the offending element(s).
Isomorphism duality_roundtrip(const FramePtr& l);

/// The frame hom L -> M dual to a monotone f : X_M -> X_L, read back through
/// both Stone isomorphisms.
LatticeMap hom_of_dual_map(const MonotoneMap& f, const Isomorphism& iso_l, const Isomorphism& iso_m);

}  // namespace pries

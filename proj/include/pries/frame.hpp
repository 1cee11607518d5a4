#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "pries/bits.hpp"
#include "pries/error.hpp"
#include "pries/order.hpp"

namespace pries {

using Elem = std::size_t;

/// A finite frame: a poset validated as a bounded distributive lattice, with
/// meet, join and Heyting implication tabulated. Finite frames are exactly
/// the finite bounded distributive lattices.
class Frame {
 public:
  /// Throws EmptyCarrier, NotALattice(i, j) for a pair lacking a meet or a
  /// join, or NotDistributive(a, b, c).
  explicit Frame(PosetPtr order);
  explicit Frame(Poset order) : Frame(share(std::move(order))) {}

  std::size_t size() const { return n_; }
  const Poset& order() const { return *order_; }
  const PosetPtr& order_ptr() const { return order_; }

  bool le(Elem a, Elem b) const { return order_->le(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  /// Heyting implication: the greatest c with a & c <= b.
  Elem imp(Elem a, Elem b) const { return imp_[a * n_ + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem meet_of_set(const Bits& s) const;
  Elem join_of_set(const Bits& s) const;

  Bits all() const { return Bits::full(n_); }

 private:
  PosetPtr order_;
  std::size_t n_ = 0;
  std::vector<Elem> meet_, join_, imp_;
  Elem bottom_ = 0, top_ = 0;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr share(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

/// Chain with n elements (n >= 1) and the Boolean algebra with 2^k elements.
Frame chain_frame(std::size_t n);
Frame boolean_frame(std::size_t atoms);

/// A total function table between two frames. No structure is assumed; the
/// checkers below decide what it preserves.
class LatticeMap {
 public:
  LatticeMap(FramePtr source, FramePtr target, std::vector<Elem> table);

  static LatticeMap identity(FramePtr f);

  const Frame& source() const { return *source_; }
  const Frame& target() const { return *target_; }
  const FramePtr& source_ptr() const { return source_; }
  const FramePtr& target_ptr() const { return target_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem a) const { return table_[a]; }

  Bits image(const Bits& s) const;

  friend bool operator==(const LatticeMap& a, const LatticeMap& b) { return a.table_ == b.table_; }

 private:
  FramePtr source_;
  FramePtr target_;
  std::vector<Elem> table_;
};

/// g after f.
LatticeMap compose(const LatticeMap& g, const LatticeMap& f);

inline Elem meet_of_set(const Frame& l, const Bits& s) { return l.meet_of_set(s); }
inline Elem join_of_set(const Frame& l, const Bits& s) { return l.join_of_set(s); }
inline Elem heyting(const Frame& l, Elem a, Elem b) { return l.imp(a, b); }

bool is_monotone(const LatticeMap& h);

/// Binary meets, binary joins, bottom and top. Witness: the failing pair, or
/// the single element for bottom/top.
Check is_frame_hom(const LatticeMap& h);

/// Every subset S of the source: h(meet S) == meet h[S]. Exhaustive over all
/// 2^n subsets for n <= 12; above that binary meets plus top, which is
/// equivalent for finite lattices.
Check preserves_all_meets(const LatticeMap& h);
Check preserves_all_joins(const LatticeMap& h);

/// r(b) = join { a : h(a) <= b }. Throws NotJoinPreserving, and AdjointMismatch
/// if the adjunction h(a) <= b <=> a <= r(b) fails afterwards.
LatticeMap right_adjoint(const LatticeMap& h);

/// l(b) = meet { a : b <= h(a) }, present exactly when h preserves all meets.
std::optional<LatticeMap> left_adjoint(const LatticeMap& h);

/// `lower` is left adjoint to `upper`: lower(b) <= a <=> b <= upper(a).
Check is_adjoint_pair(const LatticeMap& lower, const LatticeMap& upper);

/// Localic-map characterization of a table r: M -> L: r preserves all
/// meets, r(a) = 1 only for a = 1, and r(h(a) -> b) = a -> r(b) with h the
/// left adjoint of r.
Check is_localic_map(const LatticeMap& r);

/// All meets preserved and h(a -> b) = h(a) -> h(b).
Check is_complete_heyting_hom(const LatticeMap& h);

/// l(a & h(b)) = l(a) & b for a in the target of h, b in its source.
/// Throws AdjointMismatch when l is not left adjoint to h.
Check frobenius_holds(const LatticeMap& h, const LatticeMap& l);

/// a !<= b implies some c with a | c = 1 and b | c != 1. Witness: {a, b}.
Check is_subfit(const Frame& l);

}  // namespace pries

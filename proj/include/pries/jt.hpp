#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pries/duality.hpp"
#include "pries/frame.hpp"
#include "pries/order.hpp"

namespace pries {

// --- Priestley-side conditions for a monotone f : X -> Y between finite
// posets. Every subset of a finite space is clopen, so the "is clopen"
// clauses hold vacuously and only the order content is checked.

/// f[U] is an upset for every upset U of X. Witness: members of U.
Check priestley_cond1(const MonotoneMap& f);
/// f is a p-morphism. Witness: {y}.
Check priestley_cond2(const MonotoneMap& f);
/// up(f[U] & V) == up(f[U]) & V for all upsets U of X, V of Y.
/// Witness: {index of U in X.upsets(), index of V in Y.upsets()}.
Check priestley_cond3(const MonotoneMap& f);
/// f[U] is an open upset for every open upset U (finite: every upset).
Check priestley_cond1_open(const MonotoneMap& f);
/// f[up x] == intersection of f[U] over upsets U containing x. Witness: {x}.
Check esakia_image_check(const MonotoneMap& f);

/// Everything needed to move between a hom h : L -> M and its dual.
struct HomContext {
  Isomorphism iso_l;
  Isomorphism iso_m;
};

HomContext make_context(const FramePtr& l, const FramePtr& m);

/// f^-1(phi(a)) == phi(h(a)) for every a. Witness: {a}.
Check equation_i_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx);
/// b <= (r nu_a h)(c) <=> phi(b) & f[phi(a)] <= phi(c). Witness: {a, b, c}.
Check equation_ii_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx);
Check equation_ii_check(const LatticeMap& h);
/// phi(l(a)) == up f[phi(a)]. Throws AdjointAbsent without a left adjoint.
Check equation_iii_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx);
Check equation_iii_check(const LatticeMap& h);
/// f^-1(int1 F) == int1(f^-1 F) for every upset F of X_L. Witness: members of F.
Check int1_exchange_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx);
Check int1_exchange_check(const LatticeMap& h);

/// The condition network for one frame hom h : L -> M with dual f : X_M -> X_L.
struct JTReport {
  std::size_t instance = 0;  // position of (L, M) in the sweep
  std::size_t hom_index = 0; // position of f in the monotone-map stream
  std::string source_label;
  std::string target_label;
  std::vector<Elem> hom;
  std::vector<std::size_t> dual;

  bool alg_open = false;
  bool alg_heyting = false;
  bool alg_frobenius = false;
  bool pr_cond1 = false;
  bool pr_cond2 = false;
  bool pr_cond3 = false;

  // Supporting identities; all must hold on every instance.
  bool equation_i = false;
  bool equation_ii = false;
  bool equation_iii = false;
  bool int1_exchange = false;
  bool cond1_open = false;
  bool esakia_image = false;
  bool dual_roundtrip = false;  // dual_of_hom(h) is the enumerating f

  bool finite_degenerate = true;
  std::map<std::string, std::vector<std::size_t>> witnesses;

  bool equivalent() const {
    return alg_open == alg_heyting && alg_heyting == alg_frobenius && alg_frobenius == pr_cond1 &&
           pr_cond1 == pr_cond2 && pr_cond2 == pr_cond3;
  }
  bool all_true() const { return alg_open && equivalent(); }
  bool all_false() const { return !alg_open && equivalent(); }
  bool supporting_ok() const {
    return equation_i && equation_ii && equation_iii && int1_exchange && cond1_open == pr_cond1 && esakia_image &&
           dual_roundtrip;
  }
  bool ok() const { return equivalent() && supporting_ok(); }
  bool is_identity() const;
};

/// Evaluate every condition for h : L -> M whose dual is f.
JTReport evaluate_jt(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx);

/// Every frame hom L -> M, enumerated as monotone maps X_M -> X_L.
std::vector<JTReport> verify_jt(const FramePtr& l, const FramePtr& m);

/// Throws EquivalenceViolation when the report is not ok().
void require_consistent(const JTReport& r);

// --- subfitness

/// is_subfit(L) <=> min(X_L) == X_L; throws EquivalenceViolation on mismatch.
bool subfit_dual_check(const FramePtr& l);
/// Codomain must have min(Y) == Y (PreconditionFailed otherwise); f must
/// then be a p-morphism (EquivalenceViolation otherwise).
bool subfit_forces_pmorphism_check(const MonotoneMap& f);
/// L subfit (PreconditionFailed otherwise). For every frame hom h : L -> M,
/// right_adjoint(h) is open <=> h preserves all meets and joins. Returns the
/// number of homs checked.
std::size_t subfit_corollary_check(const FramePtr& l, const FramePtr& m);

}  // namespace pries

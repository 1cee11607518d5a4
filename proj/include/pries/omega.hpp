#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pries::omega {

/// An eventually periodic subset of the naturals: membership below
/// `head().size()` is explicit, from there on n is a member iff
/// `pattern()[n % period()]`. Finite sets (pattern all false) and cofinite
/// sets (pattern all true) are the period-1 cases; images of the z-fiber
/// under n |-> 2n need period 2. Always kept in canonical form, so == is
/// set equality.
class NatSet {
 public:
  NatSet() : pattern_{false} {}

  static NatSet finite(std::initializer_list<std::size_t> members) { return finite(std::vector<std::size_t>(members)); }
  static NatSet finite(const std::vector<std::size_t>& members);
  /// N minus `exceptions`.
  static NatSet cofinite(const std::vector<std::size_t>& exceptions);
  static NatSet all() { return cofinite({}); }
  static NatSet none() { return NatSet(); }
  /// {0, ..., k-1}
  static NatSet initial_segment(std::size_t k);
  /// {k, k+1, ...}
  static NatSet ray(std::size_t k);
  /// { n : n % period == residue }, from `from` on.
  static NatSet residue_class(std::size_t period, std::size_t residue, std::size_t from = 0);

  bool contains(std::size_t n) const;
  bool empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  bool infinite() const { return !is_finite(); }

  std::size_t period() const { return pattern_.size(); }
  const std::vector<bool>& pattern() const { return pattern_; }
  const std::vector<bool>& head() const { return head_; }

  /// Members (finite sets) or exceptions (cofinite sets). Refuses other sets.
  std::vector<std::size_t> finite_members() const;
  std::vector<std::size_t> exceptions() const;
  std::optional<std::size_t> min() const;
  /// Largest member of a nonempty finite set.
  std::optional<std::size_t> max() const;

  NatSet complement() const;
  NatSet operator|(const NatSet& o) const;
  NatSet operator&(const NatSet& o) const;
  NatSet operator-(const NatSet& o) const { return *this & o.complement(); }
  bool is_subset_of(const NatSet& o) const { return (*this - o).empty(); }

  /// { 2n : n in this }
  NatSet doubled() const;
  /// { n : 2n in this }
  NatSet halved() const;

  std::string to_string() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  NatSet(std::vector<bool> head, std::vector<bool> pattern);
  void normalize();
  template <class Op>
  static NatSet combine(const NatSet& a, const NatSet& b, Op op);

  std::vector<bool> head_;
  std::vector<bool> pattern_;
};

/// Fibers of clopen sets are finite or cofinite.
using FinOrCofin = NatSet;

// --- points

enum class XKind { X, Z, Omega, OmegaPrime };
enum class YKind { Y, Infinity };

struct XPoint {
  XKind kind;
  std::size_t n = 0;
  static XPoint x(std::size_t n) { return {XKind::X, n}; }
  static XPoint z(std::size_t n) { return {XKind::Z, n}; }
  static XPoint omega() { return {XKind::Omega, 0}; }
  static XPoint omega_prime() { return {XKind::OmegaPrime, 0}; }
  friend bool operator==(const XPoint&, const XPoint&) = default;
};

struct YPoint {
  YKind kind;
  std::size_t n = 0;
  static YPoint y(std::size_t n) { return {YKind::Y, n}; }
  static YPoint infinity() { return {YKind::Infinity, 0}; }
  friend bool operator==(const YPoint&, const YPoint&) = default;
};

std::string to_string(XPoint p);
std::string to_string(YPoint p);

/// x-chain x0 > x1 > ... with omega below it and omega' below omega;
/// z_n < x_m iff n >= 1 and m <= 2n - 1; z0 isolated.
bool leq_X(XPoint p, XPoint q);
/// y0 > y1 > ... with infinity below every y_n.
bool leq_Y(YPoint p, YPoint q);

/// f(x_n) = y_n, f(z_n) = y_{2n}, f(omega) = f(omega') = infinity.
YPoint f_point(XPoint p);

// --- subsets

struct XSet {
  NatSet xs;
  NatSet zs;
  bool omega = false;
  bool omega_prime = false;

  static XSet empty() { return {}; }
  static XSet whole() { return {NatSet::all(), NatSet::all(), true, true}; }
  bool contains(XPoint p) const;
  XSet complement() const;
  XSet operator|(const XSet& o) const;
  XSet operator&(const XSet& o) const;
  std::string to_string() const;
  friend bool operator==(const XSet&, const XSet&) = default;
};

struct YSet {
  NatSet ys;
  bool infinity = false;

  static YSet empty() { return {}; }
  static YSet whole() { return {NatSet::all(), true}; }
  bool contains(YPoint p) const;
  YSet complement() const;
  YSet operator|(const YSet& o) const;
  YSet operator&(const YSet& o) const;
  std::string to_string() const;
  friend bool operator==(const YSet&, const YSet&) = default;
};

YSet f_image(const XSet& a);
XSet f_preimage(const YSet& b);

// Topology: x_n, z_n, y_n are isolated; neighbourhoods of omega (omega',
// infinity) contain cofinitely many x's (z's, y's).
XSet closure(const XSet& a);
YSet closure(const YSet& b);
XSet interior(const XSet& a);
YSet interior(const YSet& b);
inline bool is_open(const XSet& a) { return interior(a) == a; }
inline bool is_open(const YSet& b) { return interior(b) == b; }
inline bool is_closed(const XSet& a) { return closure(a) == a; }
inline bool is_closed(const YSet& b) { return closure(b) == b; }
inline bool is_clopen(const XSet& a) { return is_open(a) && is_closed(a); }
inline bool is_clopen(const YSet& b) { return is_open(b) && is_closed(b); }

XSet up_closure_X(const XSet& a);
XSet down_closure_X(const XSet& a);
YSet up_closure_Y(const YSet& b);
YSet down_closure_Y(const YSet& b);
inline bool is_upset(const XSet& a) { return up_closure_X(a) == a; }
inline bool is_upset(const YSet& b) { return up_closure_Y(b) == b; }

XSet min_X();
YSet min_Y();

// --- clopen-upset shapes of X

enum class ShapeKind {
  WithOmegaPrime,  // omega', omega, every x, cofinitely many z
  OmegaOnly,       // omega, every x, finitely many z
  Bounded,         // x_0..x_{k-1}, z's from {z0} and {z1..z_{k/2}}
};

struct ShapeInstance {
  ShapeKind kind;
  std::size_t cut = 0;  // k for Bounded
  NatSet z_part;
};

std::string to_string(ShapeKind k);

/// Every clopen upset of X is exactly one shape. Throws NotRepresentable when
/// `u` is not a clopen upset.
ShapeInstance classify_clopen_upset(const XSet& u);
/// Inverse of classify_clopen_upset.
XSet shape_template(const ShapeInstance& s);
/// Image of a shape, derived per family from its parameters alone.
YSet shape_image(const ShapeInstance& s);

// --- counterexample check over bounded shapes

struct ShapeRow {
  ShapeKind kind;
  std::string template_text;
  std::string image_text;
  bool image_clopen_upset = false;
  std::size_t instances_checked = 0;
};

struct CounterexampleReport {
  std::size_t bound = 0;
  bool x_is_l_space = false;
  bool y_is_l_space = false;
  bool f_monotone = false;
  bool f_continuous = false;
  bool f_l_morphism = false;
  bool bounded_clopen_images = false;
  bool shapes_complete = false;
  bool shapes_sound = false;
  bool witness_open = false;
  bool witness_image_matches = false;
  bool witness_image_not_open = false;
  std::size_t x_open_upsets = 0;
  std::size_t y_open_upsets = 0;
  std::size_t x_clopen_upsets = 0;
  std::vector<ShapeRow> shapes;
  XSet witness;
  YSet witness_image;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Throws RemarkViolation on any failure unless `collect_only`.
CounterexampleReport check_counterexample(std::size_t bound, bool collect_only = false);

struct DensityReport {
  YSet min_y;
  YSet open_witness;  // nonempty open set missing min(Y)
  bool dense = true;
};

/// min(Y) = {infinity} is not dense: {y0} is open and misses it.
DensityReport min_dense_Y();

/// Graphviz rendering of X, Y and f truncated to the first `levels` levels.
std::string counterexample_dot(std::size_t levels);

}  // namespace pries::omega

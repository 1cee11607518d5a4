#include "pries/omega.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pries/error.hpp"

namespace pries::omega {

// --- NatSet ----------------------------------------------------------------

NatSet::NatSet(std::vector<bool> head, std::vector<bool> pattern) : head_(std::move(head)), pattern_(std::move(pattern)) {
  normalize();
}

void NatSet::normalize() {
  const auto p = pattern_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < p && periodic; ++i) periodic = pattern_[i] == pattern_[i % d];
    if (periodic) {
      pattern_.resize(d);
      break;
    }
  }
  while (!head_.empty() && head_.back() == pattern_[(head_.size() - 1) % pattern_.size()]) head_.pop_back();
}

NatSet NatSet::finite(const std::vector<std::size_t>& members) {
  std::vector<bool> head;
  for (auto m : members) {
    if (m >= head.size()) head.resize(m + 1, false);
    head[m] = true;
  }
  return NatSet(std::move(head), {false});
}

NatSet NatSet::cofinite(const std::vector<std::size_t>& exceptions) {
  std::vector<bool> head;
  for (auto m : exceptions) {
    if (m >= head.size()) head.resize(m + 1, true);
    head[m] = false;
  }
  return NatSet(std::move(head), {true});
}

NatSet NatSet::initial_segment(std::size_t k) { return NatSet(std::vector<bool>(k, true), {false}); }

NatSet NatSet::ray(std::size_t k) { return NatSet(std::vector<bool>(k, false), {true}); }

NatSet NatSet::residue_class(std::size_t period, std::size_t residue, std::size_t from) {
  std::vector<bool> pattern(period, false);
  pattern[residue % period] = true;
  return NatSet(std::vector<bool>(from, false), std::move(pattern));
}

bool NatSet::contains(std::size_t n) const { return n < head_.size() ? head_[n] : pattern_[n % pattern_.size()]; }

bool NatSet::is_finite() const { return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; }); }

bool NatSet::is_cofinite() const { return std::all_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; }); }

bool NatSet::empty() const {
  return is_finite() && std::none_of(head_.begin(), head_.end(), [](bool b) { return b; });
}

std::vector<std::size_t> NatSet::finite_members() const {
  if (!is_finite()) throw Error(ErrorCode::NotRepresentable, "set is infinite: " + to_string());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < head_.size(); ++i)
    if (head_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> NatSet::exceptions() const {
  if (!is_cofinite()) throw Error(ErrorCode::NotRepresentable, "set is not cofinite: " + to_string());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < head_.size(); ++i)
    if (!head_[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> NatSet::min() const {
  for (std::size_t n = 0; n < head_.size() + pattern_.size(); ++n)
    if (contains(n)) return n;
  return std::nullopt;
}

std::optional<std::size_t> NatSet::max() const {
  if (!is_finite()) return std::nullopt;
  for (std::size_t n = head_.size(); n-- > 0;)
    if (head_[n]) return n;
  return std::nullopt;
}

template <class Op>
NatSet NatSet::combine(const NatSet& a, const NatSet& b, Op op) {
  const auto p = std::lcm(a.period(), b.period());
  const auto h = std::max(a.head_.size(), b.head_.size());
  std::vector<bool> head(h), pattern(p);
  for (std::size_t n = 0; n < h; ++n) head[n] = op(a.contains(n), b.contains(n));
  for (std::size_t i = 0; i < p; ++i) pattern[i] = op(a.pattern_[i % a.period()], b.pattern_[i % b.period()]);
  return NatSet(std::move(head), std::move(pattern));
}

NatSet NatSet::complement() const {
  std::vector<bool> head(head_.size()), pattern(pattern_.size());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = !head_[i];
  for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = !pattern_[i];
  return NatSet(std::move(head), std::move(pattern));
}

NatSet NatSet::operator|(const NatSet& o) const { return combine(*this, o, [](bool x, bool y) { return x || y; }); }
NatSet NatSet::operator&(const NatSet& o) const { return combine(*this, o, [](bool x, bool y) { return x && y; }); }

NatSet NatSet::doubled() const {
  const auto p = period();
  std::vector<bool> head(2 * head_.size()), pattern(2 * p);
  for (std::size_t m = 0; m < head.size(); ++m) head[m] = m % 2 == 0 && head_[m / 2];
  for (std::size_t m = 0; m < pattern.size(); ++m) pattern[m] = m % 2 == 0 && pattern_[(m / 2) % p];
  return NatSet(std::move(head), std::move(pattern));
}

NatSet NatSet::halved() const {
  const auto p = period();
  std::vector<bool> head((head_.size() + 1) / 2), pattern(p);
  for (std::size_t n = 0; n < head.size(); ++n) head[n] = contains(2 * n);
  for (std::size_t k = 0; k < p; ++k) pattern[k] = pattern_[(2 * k) % p];
  return NatSet(std::move(head), std::move(pattern));
}

namespace {

std::string join_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string NatSet::to_string() const {
  if (is_finite()) return "{" + join_list(finite_members()) + "}";
  if (is_cofinite()) {
    auto ex = exceptions();
    return ex.empty() ? "N" : "N\\{" + join_list(ex) + "}";
  }
  std::vector<std::size_t> explicit_members, residues;
  for (std::size_t i = 0; i < head_.size(); ++i)
    if (head_[i]) explicit_members.push_back(i);
  for (std::size_t i = 0; i < pattern_.size(); ++i)
    if (pattern_[i]) residues.push_back(i);
  std::ostringstream os;
  if (!explicit_members.empty()) os << "{" << join_list(explicit_members) << "} u ";
  os << "{n >= " << head_.size() << " : n mod " << pattern_.size() << " in {" << join_list(residues) << "}}";
  return os.str();
}

// --- points ----------------------------------------------------------------

std::string to_string(XPoint p) {
  switch (p.kind) {
    case XKind::X: return "x" + std::to_string(p.n);
    case XKind::Z: return "z" + std::to_string(p.n);
    case XKind::Omega: return "omega";
    case XKind::OmegaPrime: return "omega'";
  }
  return "?";
}

std::string to_string(YPoint p) { return p.kind == YKind::Y ? "y" + std::to_string(p.n) : "inf"; }

bool leq_X(XPoint p, XPoint q) {
  if (p == q) return true;
  switch (p.kind) {
    case XKind::X: return q.kind == XKind::X && p.n >= q.n;
    case XKind::Z: return q.kind == XKind::X && p.n >= 1 && q.n <= 2 * p.n - 1;
    case XKind::Omega: return q.kind == XKind::X;
    case XKind::OmegaPrime: return q.kind == XKind::X || q.kind == XKind::Omega;
  }
  return false;
}

bool leq_Y(YPoint p, YPoint q) {
  if (p == q) return true;
  if (p.kind == YKind::Infinity) return true;
  return q.kind == YKind::Y && p.n >= q.n;
}

YPoint f_point(XPoint p) {
  switch (p.kind) {
    case XKind::X: return YPoint::y(p.n);
    case XKind::Z: return YPoint::y(2 * p.n);
    default: return YPoint::infinity();
  }
}

// --- sets ------------------------------------------------------------------

bool XSet::contains(XPoint p) const {
  switch (p.kind) {
    case XKind::X: return xs.contains(p.n);
    case XKind::Z: return zs.contains(p.n);
    case XKind::Omega: return omega;
    case XKind::OmegaPrime: return omega_prime;
  }
  return false;
}

XSet XSet::complement() const { return {xs.complement(), zs.complement(), !omega, !omega_prime}; }
XSet XSet::operator|(const XSet& o) const { return {xs | o.xs, zs | o.zs, omega || o.omega, omega_prime || o.omega_prime}; }
XSet XSet::operator&(const XSet& o) const { return {xs & o.xs, zs & o.zs, omega && o.omega, omega_prime && o.omega_prime}; }

std::string XSet::to_string() const {
  std::ostringstream os;
  os << "{x in " << xs.to_string() << "; z in " << zs.to_string();
  if (omega) os << "; omega";
  if (omega_prime) os << "; omega'";
  os << "}";
  return os.str();
}

bool YSet::contains(YPoint p) const { return p.kind == YKind::Y ? ys.contains(p.n) : infinity; }
YSet YSet::complement() const { return {ys.complement(), !infinity}; }
YSet YSet::operator|(const YSet& o) const { return {ys | o.ys, infinity || o.infinity}; }
YSet YSet::operator&(const YSet& o) const { return {ys & o.ys, infinity && o.infinity}; }

std::string YSet::to_string() const {
  return "{y in " + ys.to_string() + (infinity ? "; inf}" : "}");
}

YSet f_image(const XSet& a) { return {a.xs | a.zs.doubled(), a.omega || a.omega_prime}; }

XSet f_preimage(const YSet& b) { return {b.ys, b.ys.halved(), b.infinity, b.infinity}; }

XSet closure(const XSet& a) {
  return {a.xs, a.zs, a.omega || a.xs.infinite(), a.omega_prime || a.zs.infinite()};
}
YSet closure(const YSet& b) { return {b.ys, b.infinity || b.ys.infinite()}; }

XSet interior(const XSet& a) {
  return {a.xs, a.zs, a.omega && a.xs.is_cofinite(), a.omega_prime && a.zs.is_cofinite()};
}
YSet interior(const YSet& b) { return {b.ys, b.infinity && b.ys.is_cofinite()}; }

XSet up_closure_X(const XSet& a) {
  XSet out;
  out.zs = a.zs;
  out.omega = a.omega || a.omega_prime;
  out.omega_prime = a.omega_prime;
  const NatSet linked = a.zs - NatSet::finite({0});  // z_n with n >= 1 sit below x_0..x_{2n-1}
  if (out.omega || a.xs.infinite() || linked.infinite()) {
    out.xs = NatSet::all();
    return out;
  }
  std::size_t bound = 0;
  if (auto m = a.xs.max()) bound = *m + 1;
  if (auto m = linked.max()) bound = std::max(bound, 2 * *m);
  out.xs = NatSet::initial_segment(bound);
  return out;
}

XSet down_closure_X(const XSet& a) {
  XSet out;
  if (auto m = a.xs.min()) {
    out.xs = NatSet::ray(*m);
    out.zs = a.zs | NatSet::ray(std::max<std::size_t>(1, (*m + 2) / 2));
    out.omega = true;
    out.omega_prime = true;
    return out;
  }
  out.zs = a.zs;
  out.omega = a.omega;
  out.omega_prime = a.omega || a.omega_prime;
  return out;
}

YSet up_closure_Y(const YSet& b) {
  if (b.infinity || b.ys.infinite()) return {NatSet::all(), b.infinity};
  auto m = b.ys.max();
  return {m ? NatSet::initial_segment(*m + 1) : NatSet::none(), false};
}

YSet down_closure_Y(const YSet& b) {
  if (auto m = b.ys.min()) return {NatSet::ray(*m), true};
  return b;
}

XSet min_X() { return {NatSet::none(), NatSet::all(), false, true}; }
YSet min_Y() { return {NatSet::none(), true}; }

// --- shapes ----------------------------------------------------------------

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::WithOmegaPrime: return "with-omega-prime";
    case ShapeKind::OmegaOnly: return "omega-only";
    case ShapeKind::Bounded: return "bounded";
  }
  return "?";
}

ShapeInstance classify_clopen_upset(const XSet& u) {
  if (!is_clopen(u) || !is_upset(u))
    throw Error(ErrorCode::NotRepresentable, "not a clopen upset: " + u.to_string());
  if (u.omega_prime) return {ShapeKind::WithOmegaPrime, 0, u.zs};
  if (u.omega) return {ShapeKind::OmegaOnly, 0, u.zs};
  auto m = u.xs.max();
  return {ShapeKind::Bounded, m ? *m + 1 : 0, u.zs};
}

XSet shape_template(const ShapeInstance& s) {
  switch (s.kind) {
    case ShapeKind::WithOmegaPrime: return {NatSet::all(), s.z_part, true, true};
    case ShapeKind::OmegaOnly: return {NatSet::all(), s.z_part, true, false};
    case ShapeKind::Bounded: return {NatSet::initial_segment(s.cut), s.z_part, false, false};
  }
  return {};
}

YSet shape_image(const ShapeInstance& s) {
  switch (s.kind) {
    // Every x_n is present, so the image contains every y_n and infinity.
    case ShapeKind::WithOmegaPrime:
    case ShapeKind::OmegaOnly: return YSet::whole();
    // z_n (n <= k/2) lands on y_{2n} <= y_k; only z_{k/2} for even k adds
    // a new point, extending the segment by one.
    case ShapeKind::Bounded: {
      const bool extends = s.cut % 2 == 0 && s.z_part.contains(s.cut / 2);
      return {NatSet::initial_segment(s.cut + (extends ? 1 : 0)), false};
    }
  }
  return {};
}

namespace {

bool shape_parameters_valid(const ShapeInstance& s) {
  switch (s.kind) {
    case ShapeKind::WithOmegaPrime: return s.z_part.is_cofinite();
    case ShapeKind::OmegaOnly: return s.z_part.is_finite();
    case ShapeKind::Bounded:
      return s.z_part.is_subset_of(NatSet::finite({0}) | NatSet::initial_segment(s.cut / 2 + 1));
  }
  return false;
}

// Finite subsets of {0..bound} and their complements.
std::vector<NatSet> bounded_fibers(std::size_t bound) {
  std::vector<NatSet> out;
  const std::size_t width = bound + 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << width); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < width; ++i)
      if (mask >> i & 1U) members.push_back(i);
    out.push_back(NatSet::finite(members));
    out.push_back(NatSet::cofinite(members));
  }
  return out;
}

std::vector<XPoint> sample_x_points(std::size_t bound) {
  std::vector<XPoint> pts{XPoint::omega(), XPoint::omega_prime()};
  for (std::size_t n = 0; n <= 2 * bound + 2; ++n) {
    pts.push_back(XPoint::x(n));
    pts.push_back(XPoint::z(n));
  }
  return pts;
}

}  // namespace

CounterexampleReport check_counterexample(std::size_t bound, bool collect_only) {
  if (bound < 1) throw Error(ErrorCode::BadInput, "bound must be at least 1");
  CounterexampleReport rep;
  rep.bound = bound;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) rep.failures.push_back(what);
    return ok;
  };

  const auto fibers = bounded_fibers(bound);
  std::vector<YSet> ys_sets;
  for (const auto& f : fibers)
    for (bool inf : {false, true}) ys_sets.push_back({f, inf});

  // f is order preserving on sampled points.
  rep.f_monotone = true;
  const auto pts = sample_x_points(bound);
  for (const auto& p : pts)
    for (const auto& q : pts)
      if (leq_X(p, q) && !leq_Y(f_point(p), f_point(q)))
        rep.f_monotone = require(false, "f not monotone at " + to_string(p) + " <= " + to_string(q));

  // Y: L-space condition, continuity and the L-morphism condition.
  rep.y_is_l_space = true;
  rep.f_continuous = true;
  rep.f_l_morphism = true;
  for (const auto& b : ys_sets) {
    if (is_clopen(b) && !is_clopen(f_preimage(b)))
      rep.f_continuous = require(false, "preimage of clopen " + b.to_string() + " is not clopen");
    if (!is_open(b) || !is_upset(b)) continue;
    ++rep.y_open_upsets;
    const auto cl = closure(b);
    if (!is_clopen(cl) || !is_upset(cl))
      rep.y_is_l_space = require(false, "Y: closure of open upset " + b.to_string() + " is not a clopen upset");
    if (closure(f_preimage(b)) != f_preimage(cl))
      rep.f_l_morphism = require(false, "cl f^-1 U != f^-1 cl U for U = " + b.to_string());
  }

  // X: L-space condition and images of clopen upsets.
  rep.x_is_l_space = true;
  rep.bounded_clopen_images = true;
  rep.shapes_complete = true;
  std::vector<ShapeRow> rows{
      {ShapeKind::WithOmegaPrime, "{omega', omega} u {x_n : all n} u {z_n : n in Z}, Z cofinite", "Y", false, 0},
      {ShapeKind::OmegaOnly, "{omega} u {x_n : all n} u {z_n : n in Z}, Z finite", "Y", false, 0},
      {ShapeKind::Bounded, "{x_0..x_{k-1}} u {z_n : n in Z}, Z <= {0} u {1..floor(k/2)}",
       "{y_0..y_{k-1}}, plus y_k when k is even and z_{k/2} is in U", false, 0},
  };
  bool sound = true;
  for (const auto& xf : fibers)
    for (const auto& zf : fibers)
      for (int flags = 0; flags < 4; ++flags) {
        const XSet u{xf, zf, (flags & 1) != 0, (flags & 2) != 0};
        if (!is_open(u) || !is_upset(u)) continue;
        ++rep.x_open_upsets;
        const auto cl = closure(u);
        if (!is_clopen(cl) || !is_upset(cl))
          rep.x_is_l_space = require(false, "X: closure of open upset " + u.to_string() + " is not a clopen upset");
        if (!is_closed(u)) continue;

        ++rep.x_clopen_upsets;
        const auto img = f_image(u);
        if (!is_clopen(img) || !is_upset(img))
          rep.bounded_clopen_images = require(false, "f[U] not a clopen upset for U = " + u.to_string());

        const auto shape = classify_clopen_upset(u);
        if (shape_template(shape) != u || !shape_parameters_valid(shape))
          rep.shapes_complete = require(false, "shape template does not reproduce " + u.to_string());
        if (shape_image(shape) != img) sound = require(false, "shape image formula wrong for " + u.to_string());
        ++rows[static_cast<std::size_t>(shape.kind)].instances_checked;
      }

  // Each family's image formula yields a clopen upset for every parameter:
  // the first two families map onto Y, the bounded family onto a finite
  // initial segment of the y-chain, which never contains infinity.
  rows[0].image_clopen_upset = is_clopen(YSet::whole()) && is_upset(YSet::whole());
  rows[1].image_clopen_upset = rows[0].image_clopen_upset;
  bool segments_ok = true;
  for (std::size_t k = 0; k <= 2 * bound + 2; ++k) {
    const YSet seg{NatSet::initial_segment(k), false};
    segments_ok = segments_ok && is_clopen(seg) && is_upset(seg);
  }
  rows[2].image_clopen_upset = segments_ok;
  for (const auto& r : rows) sound = require(r.image_clopen_upset, "shape " + to_string(r.kind) + " image") && sound;
  for (const auto& r : rows)
    if (r.instances_checked == 0) rep.shapes_complete = require(false, "shape " + to_string(r.kind) + " never seen");
  rep.shapes_sound = sound;
  rep.shapes = std::move(rows);

  // The witness: open, not an upset, with a non-open image.
  rep.witness = {NatSet::none(), NatSet::all(), false, true};
  rep.witness_image = f_image(rep.witness);
  rep.witness_open = require(is_open(rep.witness), "witness U is not open");
  rep.witness_image_matches = require(rep.witness_image == YSet{NatSet::residue_class(2, 0), true},
                                      "f[U] is not {y_2n} u {inf}: " + rep.witness_image.to_string());
  rep.witness_image_not_open = require(!is_open(rep.witness_image), "f[U] is open");

  if (!collect_only && !rep.passed()) throw Error(ErrorCode::RemarkViolation, rep.failures.front());
  return rep;
}

DensityReport min_dense_Y() {
  DensityReport d;
  d.min_y = min_Y();
  d.open_witness = {NatSet::finite({0}), false};
  d.dense = !(is_open(d.open_witness) && !(d.open_witness.ys.empty() && !d.open_witness.infinity) &&
              (d.open_witness & d.min_y) == YSet::empty());
  return d;
}

std::string counterexample_dot(std::size_t levels) {
  std::ostringstream os;
  os << "digraph counterexample {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  os << "  subgraph cluster_X {\n    label=\"X\";\n";
  os << "    \"omega'\"; \"omega\";\n";
  for (std::size_t n = 0; n < levels; ++n) os << "    \"x" << n << "\";\n";
  for (std::size_t n = 0; 2 * n <= levels && n < levels; ++n) os << "    \"z" << n << "\";\n";
  os << "    \"omega'\" -> \"omega\";\n";
  if (levels > 0) os << "    \"omega\" -> \"x" << levels - 1 << "\" [style=dotted];\n";
  for (std::size_t n = 0; n + 1 < levels; ++n) os << "    \"x" << n + 1 << "\" -> \"x" << n << "\";\n";
  for (std::size_t n = 1; 2 * n <= levels && 2 * n - 1 < levels; ++n)
    os << "    \"z" << n << "\" -> \"x" << 2 * n - 1 << "\";\n";
  os << "  }\n  subgraph cluster_Y {\n    label=\"Y\";\n    \"inf\";\n";
  for (std::size_t n = 0; n < levels; ++n) os << "    \"y" << n << "\";\n";
  if (levels > 0) os << "    \"inf\" -> \"y" << levels - 1 << "\" [style=dotted];\n";
  for (std::size_t n = 0; n + 1 < levels; ++n) os << "    \"y" << n + 1 << "\" -> \"y" << n << "\";\n";
  os << "  }\n";
  os << "  \"omega\" -> \"inf\" [style=dashed, constraint=false];\n";
  os << "  \"omega'\" -> \"inf\" [style=dashed, constraint=false];\n";
  for (std::size_t n = 0; n < levels; ++n)
    os << "  \"x" << n << "\" -> \"y" << n << "\" [style=dashed, constraint=false];\n";
  for (std::size_t n = 0; 2 * n < levels; ++n)
    os << "  \"z" << n << "\" -> \"y" << 2 * n << "\" [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace pries::omega

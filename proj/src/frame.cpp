#include "pries/frame.hpp"

#include <string>

namespace pries {

namespace {

// Greatest element of `s` with respect to `down`, i.e. g in s with s <= down(g).
std::optional<Elem> greatest(const Poset& p, const Bits& s) {
  for (auto g = s.first(); g < p.size(); g = s.next(g + 1))
    if (s.is_subset_of(p.down(g))) return g;
  return std::nullopt;
}

std::optional<Elem> least(const Poset& p, const Bits& s) {
  for (auto g = s.first(); g < p.size(); g = s.next(g + 1))
    if (s.is_subset_of(p.up(g))) return g;
  return std::nullopt;
}

}  // namespace

Frame::Frame(PosetPtr order) : order_(std::move(order)), n_(order_->size()) {
  if (n_ == 0) throw Error(ErrorCode::EmptyCarrier, "a frame needs at least one element");
  const auto& p = *order_;
  meet_.resize(n_ * n_);
  join_.resize(n_ * n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a; b < n_; ++b) {
      auto m = greatest(p, p.down(a) & p.down(b));
      auto j = least(p, p.up(a) & p.up(b));
      if (!m || !j)
        throw Error(ErrorCode::NotALattice,
                    "no " + std::string(m ? "join" : "meet") + " for " + std::to_string(a) + ", " + std::to_string(b),
                    {a, b});
      meet_[a * n_ + b] = meet_[b * n_ + a] = *m;
      join_[a * n_ + b] = join_[b * n_ + a] = *j;
    }
  auto bot = greatest(p, p.min_elements());
  auto top = least(p, p.max_elements());
  // A finite lattice is bounded; the single minimal element is the bottom.
  bottom_ = *bot;
  top_ = *top;

  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          throw Error(ErrorCode::NotDistributive,
                      "a & (b | c) != (a & b) | (a & c) at " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c),
                      {a, b, c});

  imp_.resize(n_ * n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      Elem acc = bottom_;
      for (Elem c = 0; c < n_; ++c)
        if (le(meet(a, c), b)) acc = join(acc, c);
      imp_[a * n_ + b] = acc;
    }
}

Elem Frame::meet_of_set(const Bits& s) const {
  Elem acc = top_;
  s.for_each([&](std::size_t x) { acc = meet(acc, x); });
  return acc;
}

Elem Frame::join_of_set(const Bits& s) const {
  Elem acc = bottom_;
  s.for_each([&](std::size_t x) { acc = join(acc, x); });
  return acc;
}

Frame chain_frame(std::size_t n) { return Frame(Poset::chain(n)); }

Frame boolean_frame(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (a & ~b) == 0) pairs.emplace_back(a, b);
  return Frame(Poset::from_pairs(n, pairs));
}

// ---------------------------------------------------------------------------

LatticeMap::LatticeMap(FramePtr source, FramePtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->size())
    throw Error(ErrorCode::BadTable, "table has " + std::to_string(table_.size()) + " entries, expected " +
                                         std::to_string(source_->size()));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= target_->size()) throw Error(ErrorCode::BadTable, "entry " + std::to_string(i) + " out of range", {i});
}

LatticeMap LatticeMap::identity(FramePtr f) {
  std::vector<Elem> t(f->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return LatticeMap(f, f, std::move(t));
}

Bits LatticeMap::image(const Bits& s) const {
  Bits out(target_->size());
  s.for_each([&](std::size_t i) { out.set(table_[i]); });
  return out;
}

LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  std::vector<Elem> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return LatticeMap(f.source_ptr(), g.target_ptr(), std::move(t));
}

bool is_monotone(const LatticeMap& h) {
  const auto& l = h.source();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.le(a, b) && !h.target().le(h(a), h(b))) return false;
  return true;
}

Check is_frame_hom(const LatticeMap& h) {
  const auto& l = h.source();
  const auto& m = h.target();
  if (h(l.bottom()) != m.bottom()) return Check::fail({l.bottom()});
  if (h(l.top()) != m.top()) return Check::fail({l.top()});
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b) {
      if (h(l.meet(a, b)) != m.meet(h(a), h(b))) return Check::fail({a, b});
      if (h(l.join(a, b)) != m.join(h(a), h(b))) return Check::fail({a, b});
    }
  return Check::pass();
}

namespace {

constexpr std::size_t kExhaustiveSubsetLimit = 12;

template <bool Meets>
Check preserves_all(const LatticeMap& h) {
  const auto& l = h.source();
  const auto& m = h.target();
  const auto n = l.size();
  auto src_op = [&](Elem a, Elem b) { return Meets ? l.meet(a, b) : l.join(a, b); };
  auto dst_op = [&](Elem a, Elem b) { return Meets ? m.meet(a, b) : m.join(a, b); };
  const Elem src_unit = Meets ? l.top() : l.bottom();
  const Elem dst_unit = Meets ? m.top() : m.bottom();

  if (n <= kExhaustiveSubsetLimit) {
    const std::size_t subsets = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Elem s = src_unit, t = dst_unit;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) {
          s = src_op(s, i);
          t = dst_op(t, h(i));
        }
      if (h(s) != t) {
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U) w.push_back(i);
        return Check::fail(std::move(w));
      }
    }
    return Check::pass();
  }
  if (h(src_unit) != dst_unit) return Check::fail({});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (h(src_op(a, b)) != dst_op(h(a), h(b))) return Check::fail({a, b});
  return Check::pass();
}

}  // namespace

Check preserves_all_meets(const LatticeMap& h) { return preserves_all<true>(h); }
Check preserves_all_joins(const LatticeMap& h) { return preserves_all<false>(h); }

Check is_adjoint_pair(const LatticeMap& lower, const LatticeMap& upper) {
  // lower: B -> A, upper: A -> B
  const auto& a_side = upper.source();
  const auto& b_side = upper.target();
  if (lower.source().size() != b_side.size() || lower.target().size() != a_side.size())
    return Check::fail({});
  for (Elem b = 0; b < b_side.size(); ++b)
    for (Elem a = 0; a < a_side.size(); ++a)
      if (a_side.le(lower(b), a) != b_side.le(b, upper(a))) return Check::fail({b, a});
  return Check::pass();
}

LatticeMap right_adjoint(const LatticeMap& h) {
  if (auto c = preserves_all_joins(h); !c)
    throw Error(ErrorCode::NotJoinPreserving, "map does not preserve all joins", c.witness);
  const auto& l = h.source();
  const auto& m = h.target();
  std::vector<Elem> t(m.size());
  for (Elem b = 0; b < m.size(); ++b) {
    Elem acc = l.bottom();
    for (Elem a = 0; a < l.size(); ++a)
      if (m.le(h(a), b)) acc = l.join(acc, a);
    t[b] = acc;
  }
  LatticeMap r(h.target_ptr(), h.source_ptr(), std::move(t));
  if (auto c = is_adjoint_pair(h, r); !c)
    throw Error(ErrorCode::AdjointMismatch, "right adjoint fails the adjunction law", c.witness);
  return r;
}

std::optional<LatticeMap> left_adjoint(const LatticeMap& h) {
  if (!preserves_all_meets(h)) return std::nullopt;
  const auto& l = h.source();
  const auto& m = h.target();
  std::vector<Elem> t(m.size());
  for (Elem b = 0; b < m.size(); ++b) {
    Elem acc = l.top();
    for (Elem a = 0; a < l.size(); ++a)
      if (m.le(b, h(a))) acc = l.meet(acc, a);
    t[b] = acc;
  }
  LatticeMap lo(h.target_ptr(), h.source_ptr(), std::move(t));
  if (auto c = is_adjoint_pair(lo, h); !c)
    throw Error(ErrorCode::AdjointMismatch, "left adjoint fails the adjunction law", c.witness);
  return lo;
}

Check is_localic_map(const LatticeMap& r) {
  // r : M -> L
  const auto& m = r.source();
  const auto& l = r.target();
  if (auto c = preserves_all_meets(r); !c) return c;
  const auto h = *left_adjoint(r);  // L -> M
  for (Elem a = 0; a < m.size(); ++a)
    if (r(a) == l.top() && a != m.top()) return Check::fail({a});
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      if (r(m.imp(h(a), b)) != l.imp(a, r(b))) return Check::fail({a, b});
  return Check::pass();
}

Check is_complete_heyting_hom(const LatticeMap& h) {
  if (auto c = preserves_all_meets(h); !c) return c;
  const auto& l = h.source();
  const auto& m = h.target();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (h(l.imp(a, b)) != m.imp(h(a), h(b))) return Check::fail({a, b});
  return Check::pass();
}

Check frobenius_holds(const LatticeMap& h, const LatticeMap& lo) {
  if (auto c = is_adjoint_pair(lo, h); !c)
    throw Error(ErrorCode::AdjointMismatch, "supplied map is not left adjoint to h", c.witness);
  const auto& l = h.source();
  const auto& m = h.target();
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (lo(m.meet(a, h(b))) != l.meet(lo(a), b)) return Check::fail({a, b});
  return Check::pass();
}

Check is_subfit(const Frame& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (l.le(a, b)) continue;
      bool witnessed = false;
      for (Elem c = 0; c < l.size() && !witnessed; ++c)
        witnessed = l.join(a, c) == l.top() && l.join(b, c) != l.top();
      if (!witnessed) return Check::fail({a, b});
    }
  return Check::pass();
}

}  // namespace pries

#include "pries/duality.hpp"

#include <algorithm>
#include <string>

namespace pries {

std::size_t DualSpace::index_of(const Bits& filter) const {
  auto it = index_.find(filter);
  return it == index_.end() ? filters.size() : it->second;
}

Bits DualSpace::stone(Elem a) const {
  Bits out(filters.size());
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i].test(a)) out.set(i);
  return out;
}

bool is_prime_filter(const Frame& l, const Bits& s) {
  if (!s.test(l.top()) || s.test(l.bottom())) return false;
  if (!l.order().is_upset(s)) return false;
  for (auto a = s.first(); a < l.size(); a = s.next(a + 1))
    for (auto b = s.next(a + 1); b < l.size(); b = s.next(b + 1))
      if (!s.test(l.meet(a, b))) return false;
  const Bits out = ~s;
  for (auto a = out.first(); a < l.size(); a = out.next(a + 1))
    for (auto b = out.next(a + 1); b < l.size(); b = out.next(b + 1))
      if (s.test(l.join(a, b))) return false;
  return true;
}

DualSpace prime_filters(const FramePtr& l) {
  if (l->size() > kMaxSpectrumFrameSize)
    throw Error(ErrorCode::SizeRefused, "frame has " + std::to_string(l->size()) + " elements; limit is " +
                                            std::to_string(kMaxSpectrumFrameSize));
  // Every filter of a finite lattice is principal, so the candidates are the
  // principal upsets of the non-bottom elements.
  DualSpace x;
  x.frame = l;
  for (Elem a = 0; a < l->size(); ++a) {
    if (a == l->bottom()) continue;
    const Bits& cand = l->order().up(a);
    if (is_prime_filter(*l, cand)) x.filters.push_back(cand);
  }
  std::sort(x.filters.begin(), x.filters.end());
  const auto k = x.filters.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    x.index_.emplace(x.filters[i], i);
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && x.filters[i].is_subset_of(x.filters[j])) pairs.emplace_back(i, j);
  }
  x.order = share(Poset::from_pairs(k, pairs));
  return x;
}

// ---------------------------------------------------------------------------

std::size_t UpsetFrame::index_of(const Bits& upset) const {
  auto it = index_.find(upset);
  return it == index_.end() ? upsets.size() : it->second;
}

UpsetFrame clopup_frame(const PosetPtr& x) {
  UpsetFrame u;
  u.space = x;
  u.upsets = x->upsets();
  const auto k = u.upsets.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    u.index_.emplace(u.upsets[i], i);
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && u.upsets[i].is_subset_of(u.upsets[j])) pairs.emplace_back(i, j);
  }
  u.frame = share(Frame(Poset::from_pairs(k, pairs)));
  return u;
}

// ---------------------------------------------------------------------------

MonotoneMap dual_of_hom(const LatticeMap& h, const DualSpace& xl, const DualSpace& xm) {
  if (auto c = is_frame_hom(h); !c) throw Error(ErrorCode::NotAHom, "dual_of_hom needs a frame homomorphism", c.witness);
  const auto& l = h.source();
  std::vector<std::size_t> table(xm.size());
  for (std::size_t k = 0; k < xm.size(); ++k) {
    Bits pre(l.size());
    for (Elem a = 0; a < l.size(); ++a)
      if (xm.filters[k].test(h(a))) pre.set(a);
    auto idx = xl.index_of(pre);
    if (idx == xl.size())
      throw Error(ErrorCode::RoundTripFailure, "preimage of a prime filter is not a prime filter", {k});
    table[k] = idx;
  }
  MonotoneMap f(xm.order, xl.order, std::move(table));
  for (Elem a = 0; a < l.size(); ++a)
    if (f.preimage(xl.stone(a)) != xm.stone(h(a)))
      throw Error(ErrorCode::EquationViolation, "f^-1(phi(a)) != phi(h(a))", {a});
  return f;
}

MonotoneMap dual_of_hom(const LatticeMap& h) {
  return dual_of_hom(h, prime_filters(h.source_ptr()), prime_filters(h.target_ptr()));
}

LatticeMap hom_from_monotone(const MonotoneMap& f, const UpsetFrame& up_y, const UpsetFrame& up_x) {
  std::vector<Elem> table(up_y.upsets.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = up_x.index_of(f.preimage(up_y.upsets[i]));
  return LatticeMap(up_y.frame, up_x.frame, std::move(table));
}

LatticeMap hom_from_monotone(const MonotoneMap& f) {
  return hom_from_monotone(f, clopup_frame(f.target_ptr()), clopup_frame(f.source_ptr()));
}

Isomorphism duality_roundtrip(const FramePtr& l) {
  DualSpace x = prime_filters(l);
  UpsetFrame u = clopup_frame(x.order);
  const auto n = l->size();

  std::vector<Elem> fwd(n);
  std::vector<Elem> back(u.upsets.size(), n);
  for (Elem a = 0; a < n; ++a) {
    auto idx = u.index_of(x.stone(a));
    if (idx == u.upsets.size()) throw Error(ErrorCode::RoundTripFailure, "phi(a) is not an upset", {a});
    if (back[idx] != n) throw Error(ErrorCode::RoundTripFailure, "Stone map is not injective", {back[idx], a});
    fwd[a] = idx;
    back[idx] = a;
  }
  for (std::size_t i = 0; i < back.size(); ++i)
    if (back[i] == n) throw Error(ErrorCode::RoundTripFailure, "upset not in the image of the Stone map", {i});

  LatticeMap forward(l, u.frame, std::move(fwd));
  LatticeMap backward(u.frame, l, std::move(back));
  if (auto c = is_frame_hom(forward); !c)
    throw Error(ErrorCode::RoundTripFailure, "Stone map does not preserve the lattice operations", c.witness);
  if (auto c = is_frame_hom(backward); !c)
    throw Error(ErrorCode::RoundTripFailure, "inverse Stone map does not preserve the lattice operations", c.witness);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (l->le(a, b) != u.frame->le(forward(a), forward(b)))
        throw Error(ErrorCode::RoundTripFailure, "Stone map does not reflect the order", {a, b});
  return Isomorphism{std::move(x), std::move(u), std::move(forward), std::move(backward)};
}

LatticeMap hom_of_dual_map(const MonotoneMap& f, const Isomorphism& iso_l, const Isomorphism& iso_m) {
  const auto& l = *iso_l.forward.source_ptr();
  std::vector<Elem> table(l.size());
  for (Elem a = 0; a < l.size(); ++a) {
    auto idx = iso_m.upsets.index_of(f.preimage(iso_l.spectrum.stone(a)));
    table[a] = iso_m.backward(idx);
  }
  return LatticeMap(iso_l.forward.source_ptr(), iso_m.forward.source_ptr(), std::move(table));
}

}  // namespace pries

#include "pries/sublocale.hpp"

#include <string>

namespace pries {

Check is_nucleus(const Frame& l, const std::vector<Elem>& table) {
  if (table.size() != l.size()) return Check::fail({});
  for (Elem a = 0; a < l.size(); ++a)
    if (table[a] >= l.size()) return Check::fail({a});
  for (Elem a = 0; a < l.size(); ++a) {
    if (!l.le(a, table[a])) return Check::fail({a});
    if (!l.le(table[table[a]], table[a])) return Check::fail({a});
  }
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b)
      if (table[l.meet(a, b)] != l.meet(table[a], table[b])) return Check::fail({a, b});
  return Check::pass();
}

Check is_sublocale(const Frame& l, const Bits& s) {
  if (s.size() != l.size() || !s.test(l.top())) return Check::fail({});
  for (auto a = s.first(); a < l.size(); a = s.next(a + 1))
    for (auto b = s.next(a + 1); b < l.size(); b = s.next(b + 1))
      if (!s.test(l.meet(a, b))) return Check::fail({a, b});
  for (Elem x = 0; x < l.size(); ++x)
    for (auto t = s.first(); t < l.size(); t = s.next(t + 1))
      if (!s.test(l.imp(x, t))) return Check::fail({x, t});
  return Check::pass();
}

Sublocale sublocale_of_nucleus(const Nucleus& nu) {
  if (auto c = is_nucleus(*nu.frame, nu.table); !c) throw Error(ErrorCode::NotANucleus, "invalid nucleus", c.witness);
  Bits s(nu.frame->size());
  for (auto v : nu.table) s.set(v);
  return Sublocale{nu.frame, std::move(s)};
}

Nucleus nucleus_of_sublocale(const Sublocale& s) {
  const auto& l = *s.frame;
  if (auto c = is_sublocale(l, s.members); !c) throw Error(ErrorCode::NotASublocale, "invalid sublocale", c.witness);
  std::vector<Elem> table(l.size());
  for (Elem a = 0; a < l.size(); ++a) table[a] = l.meet_of_set(s.members & l.order().up(a));
  return Nucleus{s.frame, std::move(table)};
}

OpenSublocale open_sublocale(const FramePtr& l, Elem a) {
  std::vector<Elem> table(l->size());
  Bits s(l->size());
  for (Elem x = 0; x < l->size(); ++x) {
    table[x] = l->imp(a, x);
    s.set(table[x]);
  }
  OpenSublocale out{Sublocale{l, std::move(s)}, Nucleus{l, std::move(table)}};
  if (auto c = is_nucleus(*l, out.nucleus.table); !c)
    throw Error(ErrorCode::NotANucleus, "x |-> a -> x is not a nucleus", c.witness);
  if (auto c = is_sublocale(*l, out.sublocale.members); !c)
    throw Error(ErrorCode::NotASublocale, "open sublocale fails the sublocale laws", c.witness);
  return out;
}

namespace {

void require_localic(const LatticeMap& r) {
  if (auto c = is_localic_map(r); !c) throw Error(ErrorCode::NotLocalic, "map is not localic", c.witness);
}

Sublocale image_unchecked(const LatticeMap& r, const LatticeMap& h, const Sublocale& s) {
  const auto& l = r.target();
  Bits img = r.image(s.members);
  if (auto c = is_sublocale(l, img); !c) throw Error(ErrorCode::NotASublocale, "r[S] is not a sublocale", c.witness);
  Sublocale out{r.target_ptr(), std::move(img)};
  const auto nu_s = nucleus_of_sublocale(s);
  const auto nu_img = nucleus_of_sublocale(out);
  for (Elem a = 0; a < l.size(); ++a)
    if (nu_img(a) != r(nu_s(h(a))))
      throw Error(ErrorCode::IdentityViolation, "nu_{r[S]}(a) != r(nu_S(h(a)))", {a});
  return out;
}

}  // namespace

Sublocale image_sublocale(const LatticeMap& r, const Sublocale& s) {
  require_localic(r);
  if (auto c = is_sublocale(r.source(), s.members); !c)
    throw Error(ErrorCode::NotASublocale, "S is not a sublocale of the source", c.witness);
  return image_unchecked(r, *left_adjoint(r), s);
}

OpenMapResult is_open_localic_map(const LatticeMap& r) {
  require_localic(r);
  const auto h = *left_adjoint(r);  // L -> M
  const auto& m = r.source();
  const auto& l = r.target();

  std::vector<Bits> opens;
  opens.reserve(l.size());
  for (Elem b = 0; b < l.size(); ++b) opens.push_back(open_sublocale(r.target_ptr(), b).sublocale.members);

  OpenMapResult out;
  for (Elem a = 0; a < m.size(); ++a) {
    const auto img = image_unchecked(r, h, open_sublocale(r.source_ptr(), a).sublocale);

    std::optional<Elem> by_set;
    for (Elem b = 0; b < l.size() && !by_set; ++b)
      if (opens[b] == img.members) by_set = b;

    std::optional<Elem> by_nucleus;
    for (Elem b = 0; b < l.size() && !by_nucleus; ++b) {
      bool same = true;
      for (Elem x = 0; x < l.size() && same; ++x) same = r(m.imp(a, h(x))) == l.imp(b, x);
      if (same) by_nucleus = b;
    }

    if (by_set != by_nucleus)
      throw Error(ErrorCode::IdentityViolation, "open-image test disagrees between sublocales and nuclei", {a});
    if (!by_set) {
      out.open = false;
      out.failing = a;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace_back(a, *by_set);
  }
  return out;
}

std::vector<Sublocale> all_sublocales(const FramePtr& lp) {
  const auto& l = *lp;
  const auto n = l.size();
  if (n > kMaxSublocaleFrameSize)
    throw Error(ErrorCode::SizeRefused, "sublocale enumeration is limited to " +
                                            std::to_string(kMaxSublocaleFrameSize) + " elements");
  std::vector<Sublocale> out;
  Bits s(n);

  // Constraints whose operands and result are all decided (indices <= i).
  auto consistent = [&](Elem i) {
    if (l.top() <= i && !s.test(l.top())) return false;
    for (Elem a = 0; a <= i; ++a) {
      if (!s.test(a)) continue;
      for (Elem b = a + 1; b <= i; ++b) {
        if (!s.test(b)) continue;
        auto mab = l.meet(a, b);
        if (mab <= i && !s.test(mab)) return false;
      }
      for (Elem x = 0; x < n; ++x) {
        auto ix = l.imp(x, a);
        if (ix <= i && !s.test(ix)) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, Elem i) -> void {
    if (i == n) {
      if (is_sublocale(l, s)) out.push_back(Sublocale{lp, s});
      return;
    }
    for (int pick = 0; pick < 2; ++pick) {
      s.assign(i, pick == 1);
      if (consistent(i)) self(self, i + 1);
    }
    s.reset(i);
  };
  rec(rec, 0);
  return out;
}

std::vector<Nucleus> all_nuclei(const FramePtr& lp) {
  const auto& l = *lp;
  const auto n = l.size();
  if (n > kMaxSublocaleFrameSize)
    throw Error(ErrorCode::SizeRefused, "nucleus enumeration is limited to " +
                                            std::to_string(kMaxSublocaleFrameSize) + " elements");
  std::vector<Nucleus> out;
  std::vector<Elem> t(n, 0);

  auto consistent = [&](Elem i) {
    for (Elem a = 0; a <= i; ++a) {
      if (t[a] <= i && t[t[a]] != t[a]) return false;
      for (Elem b = a + 1; b <= i; ++b) {
        auto mab = l.meet(a, b);
        if (mab <= i && t[mab] != l.meet(t[a], t[b])) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, Elem i) -> void {
    if (i == n) {
      if (is_nucleus(l, t)) out.push_back(Nucleus{lp, t});
      return;
    }
    const Bits& above = l.order().up(i);
    for (auto c = above.first(); c < n; c = above.next(c + 1)) {
      t[i] = c;
      if (consistent(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pries

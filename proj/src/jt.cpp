#include "pries/jt.hpp"

#include "pries/sublocale.hpp"

namespace pries {

Check priestley_cond1(const MonotoneMap& f) {
  const auto& y = f.target();
  for (const auto& u : f.source().upsets())
    if (!y.is_upset(f.image(u))) return Check::fail(u.members());
  return Check::pass();
}

Check priestley_cond2(const MonotoneMap& f) { return is_pmorphism(f); }

Check priestley_cond3(const MonotoneMap& f) {
  const auto& y = f.target();
  const auto us = f.source().upsets();
  const auto vs = y.upsets();
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Bits fu = f.image(us[i]);
    const Bits up_fu = y.up_closure(fu);
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (y.up_closure(fu & vs[j]) != (up_fu & vs[j])) return Check::fail({i, j});
  }
  return Check::pass();
}

Check priestley_cond1_open(const MonotoneMap& f) {
  // Open upsets of a discrete finite space are exactly its upsets; the image
  // of an open set is open, so only the upset clause has content.
  const auto& y = f.target();
  for (const auto& u : f.source().upsets()) {
    const Bits img = f.image(u);
    if (!y.is_upset(img)) return Check::fail(u.members());
  }
  return Check::pass();
}

Check esakia_image_check(const MonotoneMap& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  const auto us = x.upsets();
  for (std::size_t p = 0; p < x.size(); ++p) {
    Bits meet = y.whole();
    for (const auto& u : us)
      if (u.test(p)) meet &= f.image(u);
    if (f.image(x.up(p)) != meet) return Check::fail({p});
  }
  return Check::pass();
}

HomContext make_context(const FramePtr& l, const FramePtr& m) {
  return HomContext{duality_roundtrip(l), duality_roundtrip(m)};
}

Check equation_i_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx) {
  const auto& xl = ctx.iso_l.spectrum;
  const auto& xm = ctx.iso_m.spectrum;
  for (Elem a = 0; a < h.source().size(); ++a)
    if (f.preimage(xl.stone(a)) != xm.stone(h(a))) return Check::fail({a});
  return Check::pass();
}

Check equation_ii_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx) {
  const auto& l = h.source();
  const auto& m = h.target();
  const auto& xl = ctx.iso_l.spectrum;
  const auto& xm = ctx.iso_m.spectrum;
  const auto r = right_adjoint(h);
  std::vector<Bits> phi_l;
  for (Elem b = 0; b < l.size(); ++b) phi_l.push_back(xl.stone(b));
  for (Elem a = 0; a < m.size(); ++a) {
    const Bits img = f.image(xm.stone(a));
    for (Elem b = 0; b < l.size(); ++b)
      for (Elem c = 0; c < l.size(); ++c) {
        const bool algebraic = l.le(b, r(m.imp(a, h(c))));
        const bool spatial = (phi_l[b] & img).is_subset_of(phi_l[c]);
        if (algebraic != spatial) return Check::fail({a, b, c});
      }
  }
  return Check::pass();
}

Check equation_iii_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx) {
  const auto lo = left_adjoint(h);
  if (!lo) throw Error(ErrorCode::AdjointAbsent, "h has no left adjoint");
  const auto& xl = ctx.iso_l.spectrum;
  const auto& xm = ctx.iso_m.spectrum;
  for (Elem a = 0; a < h.target().size(); ++a)
    if (xl.stone((*lo)(a)) != xl.order->up_closure(f.image(xm.stone(a)))) return Check::fail({a});
  return Check::pass();
}

Check int1_exchange_check(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx) {
  (void)h;
  const auto& yl = *ctx.iso_l.spectrum.order;
  const auto& xm = *ctx.iso_m.spectrum.order;
  for (const auto& up : ctx.iso_l.upsets.upsets)
    if (f.preimage(yl.int1(up)) != xm.int1(f.preimage(up))) return Check::fail(up.members());
  return Check::pass();
}

namespace {

template <class Fn>
Check with_own_context(const LatticeMap& h, Fn&& fn) {
  if (auto c = is_frame_hom(h); !c) throw Error(ErrorCode::NotAHom, "expected a frame homomorphism", c.witness);
  const auto ctx = make_context(h.source_ptr(), h.target_ptr());
  const auto f = dual_of_hom(h, ctx.iso_l.spectrum, ctx.iso_m.spectrum);
  return fn(h, f, ctx);
}

}  // namespace

Check equation_ii_check(const LatticeMap& h) {
  return with_own_context(h, [](auto& hh, auto& f, auto& ctx) { return equation_ii_check(hh, f, ctx); });
}
Check equation_iii_check(const LatticeMap& h) {
  return with_own_context(h, [](auto& hh, auto& f, auto& ctx) { return equation_iii_check(hh, f, ctx); });
}
Check int1_exchange_check(const LatticeMap& h) {
  return with_own_context(h, [](auto& hh, auto& f, auto& ctx) { return int1_exchange_check(hh, f, ctx); });
}

bool JTReport::is_identity() const {
  if (source_label != target_label) return false;
  for (std::size_t i = 0; i < hom.size(); ++i)
    if (hom[i] != i) return false;
  return true;
}

JTReport evaluate_jt(const LatticeMap& h, const MonotoneMap& f, const HomContext& ctx) {
  JTReport rep;
  rep.hom = h.table();
  rep.dual = f.table();
  auto note = [&](const char* key, const Check& c) {
    if (!c) rep.witnesses[key] = c.witness;
    return c.holds;
  };

  const auto r = right_adjoint(h);
  const auto open = is_open_localic_map(r);
  rep.alg_open = open.open;
  if (!open.open) rep.witnesses["alg_open"] = {*open.failing};

  rep.alg_heyting = note("alg_heyting", is_complete_heyting_hom(h));

  const auto lo = left_adjoint(h);
  if (lo) {
    rep.alg_frobenius = note("alg_frobenius", frobenius_holds(h, *lo));
  } else {
    rep.alg_frobenius = false;
    rep.witnesses["alg_frobenius"] = {};
  }

  rep.pr_cond1 = note("pr_cond1", priestley_cond1(f));
  rep.pr_cond2 = note("pr_cond2", priestley_cond2(f));
  rep.pr_cond3 = note("pr_cond3", priestley_cond3(f));

  rep.equation_i = note("equation_i", equation_i_check(h, f, ctx));
  rep.equation_ii = note("equation_ii", equation_ii_check(h, f, ctx));
  rep.equation_iii = lo ? note("equation_iii", equation_iii_check(h, f, ctx)) : false;
  rep.int1_exchange = note("int1_exchange", int1_exchange_check(h, f, ctx));
  rep.cond1_open = note("cond1_open", priestley_cond1_open(f));
  rep.esakia_image = note("esakia_image", esakia_image_check(f));
  rep.dual_roundtrip = dual_of_hom(h, ctx.iso_l.spectrum, ctx.iso_m.spectrum) == f;
  return rep;
}

std::vector<JTReport> verify_jt(const FramePtr& l, const FramePtr& m) {
  const auto ctx = make_context(l, m);
  std::vector<JTReport> out;
  MonotoneMapStream stream(ctx.iso_m.spectrum.order, ctx.iso_l.spectrum.order);
  std::size_t k = 0;
  while (auto f = stream.next()) {
    const auto h = hom_of_dual_map(*f, ctx.iso_l, ctx.iso_m);
    auto rep = evaluate_jt(h, *f, ctx);
    rep.hom_index = k++;
    out.push_back(std::move(rep));
  }
  return out;
}

void require_consistent(const JTReport& r) {
  if (r.ok()) return;
  std::vector<std::size_t> payload{r.instance, r.hom_index};
  payload.insert(payload.end(), r.hom.begin(), r.hom.end());
  throw Error(ErrorCode::EquivalenceViolation,
              "condition network disagrees on instance " + std::to_string(r.instance) + ", hom " +
                  std::to_string(r.hom_index),
              std::move(payload));
}

// ---------------------------------------------------------------------------

bool subfit_dual_check(const FramePtr& l) {
  const bool algebraic = static_cast<bool>(is_subfit(*l));
  const auto x = prime_filters(l);
  const bool spatial = x.order->min_elements() == x.order->whole();
  if (algebraic != spatial)
    throw Error(ErrorCode::EquivalenceViolation, "subfitness disagrees with density of minimal points");
  return algebraic;
}

bool subfit_forces_pmorphism_check(const MonotoneMap& f) {
  const auto& y = f.target();
  if (y.min_elements() != y.whole())
    throw Error(ErrorCode::PreconditionFailed, "codomain has non-minimal points");
  auto c = is_pmorphism(f);
  if (!c) throw Error(ErrorCode::EquivalenceViolation, "map into a space of minimal points is not a p-morphism", c.witness);
  return true;
}

std::size_t subfit_corollary_check(const FramePtr& l, const FramePtr& m) {
  if (!is_subfit(*l)) throw Error(ErrorCode::PreconditionFailed, "source frame is not subfit");
  const auto ctx = make_context(l, m);
  MonotoneMapStream stream(ctx.iso_m.spectrum.order, ctx.iso_l.spectrum.order);
  std::size_t count = 0;
  while (auto f = stream.next()) {
    const auto h = hom_of_dual_map(*f, ctx.iso_l, ctx.iso_m);
    const bool open = is_open_localic_map(right_adjoint(h)).open;
    const bool complete = preserves_all_meets(h) && preserves_all_joins(h);
    if (open != complete)
      throw Error(ErrorCode::EquivalenceViolation, "open localic map vs complete lattice hom disagree", h.table());
    ++count;
  }
  return count;
}

}  // namespace pries

#include <doctest.h>

#include "oracles.hpp"
#include "pries/duality.hpp"
#include "pries/enumerate.hpp"

using namespace pries;

namespace {

FramePtr c(std::size_t n) { return share(chain_frame(n)); }
FramePtr b(std::size_t atoms) { return share(boolean_frame(atoms)); }

std::vector<FramePtr> small_frames() {
  std::vector<FramePtr> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& f : catalog_frames(n)) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("spectrum: prime filters match the all-subsets oracle") {
  for (const auto& l : small_frames()) {
    const auto x = prime_filters(l);
    CHECK(x.filters == oracle::prime_filters_by_subsets(*l));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x.index_of(x.filters[i]) == i);
  }
}

TEST_CASE("spectrum: chains and Boolean algebras") {
  // C_n has n-1 prime filters forming a chain
  for (std::size_t n = 1; n <= 6; ++n) {
    auto x = prime_filters(c(n));
    CHECK(x.size() == n - 1);
    CHECK(x.order->covers().size() == (n > 1 ? n - 2 : 0));
  }
  // B_k has k incomparable prime filters
  for (std::size_t k = 0; k <= 4; ++k) {
    auto x = prime_filters(b(k));
    CHECK(x.size() == k);
    CHECK(x.order->strict_pairs().empty());
  }
  // C3: {1} sorts before {m, 1} and lies below it
  auto x = prime_filters(c(3));
  REQUIRE(x.size() == 2);
  CHECK(x.filters[0] == Bits(3, {2}));
  CHECK(x.filters[1] == Bits(3, {1, 2}));
  CHECK(x.order->le(0, 1));
  CHECK(x.stone(1) == Bits(2, {1}));
}

TEST_CASE("spectrum: size guard") {
  CHECK(kMaxSpectrumFrameSize == 16384);
  CHECK_NOTHROW(prime_filters(b(10)));
}

TEST_CASE("duality round trip on every small frame") {
  for (const auto& l : small_frames()) {
    auto iso = duality_roundtrip(l);
    CHECK(iso.upsets.upsets.size() == l->size());
    for (Elem a = 0; a < l->size(); ++a) CHECK(iso.backward(iso.forward(a)) == a);
  }
}

TEST_CASE("upset frame of a poset") {
  auto u = clopup_frame(share(Poset::chain(2)));
  CHECK(u.upsets.size() == 3);
  CHECK(u.upsets.front().none());
  CHECK(u.upsets.back().all());
  CHECK(u.index_of(Bits(2, {1})) == 1);
}

TEST_CASE("dual maps: f^-1 phi(a) = phi(h(a)) and homs round-trip") {
  // the table filter is |M|^|L|, so keep to frames with at most 6 elements
  std::vector<FramePtr> fs;
  for (const auto& f : small_frames())
    if (f->size() <= 6) fs.push_back(f);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const auto& l = fs[i];
      const auto& m = fs[j];
      auto xl = prime_filters(l), xm = prime_filters(m);
      auto il = duality_roundtrip(l), im = duality_roundtrip(m);
      std::size_t homs = 0;
      oracle::for_each_table(l->size(), m->size(), [&](const std::vector<std::size_t>& t) {
        LatticeMap h(l, m, t);
        if (!is_frame_hom(h)) return;
        ++homs;
        auto f = dual_of_hom(h, xl, xm);
        CHECK(hom_of_dual_map(f, il, im) == h);
      });
      CHECK(homs == oracle::count_monotone(*xm.order, *xl.order));
    }
}

TEST_CASE("dual maps: functoriality") {
  auto c3 = c(3), b2 = b(2);
  LatticeMap g(b2, c3, {0, 0, 2, 2});
  LatticeMap h(c3, b2, {0, 1, 3});
  LatticeMap hg = compose(h, g);
  auto fg = dual_of_hom(g);
  auto fh = dual_of_hom(h);
  CHECK(dual_of_hom(hg) == compose(fg, fh));
  CHECK(dual_of_hom(LatticeMap::identity(c3)) == MonotoneMap::identity(prime_filters(c3).order));
}

TEST_CASE("dual maps: non-homs rejected") {
  auto c3 = c(3);
  try {
    dual_of_hom(LatticeMap(c3, c3, {1, 1, 2}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAHom);
  }
}

TEST_CASE("hom_from_monotone is preimage") {
  auto x = share(Poset::chain(2));
  auto y = share(Poset::chain(1));
  MonotoneMap f(x, y, {0, 0});
  auto h = hom_from_monotone(f);
  CHECK(h.table() == std::vector<Elem>{0, 2});
  CHECK(is_frame_hom(h));
}

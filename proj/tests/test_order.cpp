#include <doctest.h>

#include "oracles.hpp"
#include "pries/bits.hpp"
#include "pries/order.hpp"

using namespace pries;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::BadInput;
}

// 0 < 1, 0 < 2, 1 < 3, 2 < 3
Poset diamond() { return Poset::from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_CASE("bits: set algebra and lexicographic order") {
  Bits a(70, {0, 5, 69});
  Bits b(70, {5});
  CHECK(b.is_subset_of(a));
  CHECK((a - b).members() == std::vector<std::size_t>{0, 69});
  CHECK((~a).count() == 67);
  CHECK(a.next(6) == 69);
  CHECK(a.next(70) == 70);
  // absent < present at the first differing position
  CHECK(Bits(3, {1}) < Bits(3, {0}));
  CHECK(Bits(3, {0}) < Bits(3, {0, 2}));
  CHECK_FALSE(Bits(3, {0}) < Bits(3, {0}));
}

TEST_CASE("poset: validation errors carry witnesses") {
  CHECK(code_of([] { Poset::from_matrix({{true, false}}); }) == ErrorCode::NotSquare);
  CHECK(code_of([] { Poset::from_matrix({{true, false}, {false, false}}); }) == ErrorCode::NotReflexive);
  CHECK(code_of([] { Poset::from_pairs(2, {{0, 1}, {1, 0}}); }) == ErrorCode::NotAntisymmetric);
  try {
    Poset::from_pairs(3, {{0, 1}, {1, 2}});
    FAIL("transitivity not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTransitive);
    CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
  }
  CHECK(code_of([] { Poset::from_pairs(2, {}, {"a"}); }) == ErrorCode::BadLabels);
}

TEST_CASE("poset: closures and extremal elements") {
  const auto p = diamond();
  CHECK(p.up_closure(Bits(4, {1})) == Bits(4, {1, 3}));
  CHECK(p.down_closure(Bits(4, {1, 2})) == Bits(4, {0, 1, 2}));
  CHECK(p.min_elements() == Bits(4, {0}));
  CHECK(p.max_elements() == Bits(4, {3}));
  CHECK(p.covers().size() == 4);
  CHECK(p.int1(Bits(4, {1, 3})) == Bits(4, {1, 3}));
  CHECK(p.int1(Bits(4, {1})).none());
  CHECK(p.int1(Bits(4, {1, 2, 3})) == Bits(4, {1, 2, 3}));
  CHECK(p.int2(Bits(4, {0, 1})) == Bits(4, {0, 1}));
  CHECK(p.int2(Bits(4, {1})).none());
}

TEST_CASE("poset: upsets agree with the subset oracle") {
  for (const auto& p : {Poset::chain(5), Poset::antichain(4), diamond(), Poset::antichain(0)}) {
    auto got = p.upsets();
    auto want = oracle::all_upsets(p);
    CHECK(got.size() == want.size());
    for (const auto& u : got) CHECK(p.is_upset(u));
  }
  CHECK(Poset::chain(5).upsets().size() == 6);
  CHECK(Poset::antichain(4).upsets().size() == 16);
}

TEST_CASE("monotone maps: stream matches brute force") {
  const std::vector<Poset> ps{Poset::chain(1), Poset::chain(3), Poset::antichain(2), diamond(), Poset::antichain(0)};
  for (const auto& a : ps)
    for (const auto& b : ps) {
      auto maps = monotone_maps(share(a), share(b));
      CHECK(maps.size() == oracle::count_monotone(a, b));
      for (std::size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].table() < maps[i].table());
    }
}

TEST_CASE("monotone maps: construction rejects order reversal") {
  auto c2 = share(Poset::chain(2));
  CHECK(code_of([&] { MonotoneMap(c2, c2, {1, 0}); }) == ErrorCode::NotMonotone);
  CHECK(code_of([&] { MonotoneMap(c2, c2, {0}); }) == ErrorCode::BadTable);
  CHECK(code_of([&] { MonotoneMap(c2, c2, {0, 2}); }) == ErrorCode::BadTable);
}

TEST_CASE("p-morphisms") {
  auto c2 = share(Poset::chain(2));
  auto c1 = share(Poset::chain(1));
  auto a2 = share(Poset::antichain(2));
  // collapsing a chain onto a point is a p-morphism
  CHECK(is_pmorphism(MonotoneMap(c2, c1, {0, 0})));
  // the top of the chain is a p-morphic image of a point
  CHECK(is_pmorphism(MonotoneMap(c1, c2, {1})));
  // the bottom is not: f^-1(down 1) is the point, yet f^-1(1) is empty
  auto c = is_pmorphism(MonotoneMap(c1, c2, {0}));
  CHECK_FALSE(c);
  CHECK(c.witness == std::vector<std::size_t>{1});
  // every monotone map into an antichain is a p-morphism
  for (const auto& f : monotone_maps(share(diamond()), a2)) CHECK(is_pmorphism(f));
  CHECK(is_pmorphism(MonotoneMap::identity(share(diamond()))));
}

TEST_CASE("composition") {
  auto d = share(diamond());
  auto c2 = share(Poset::chain(2));
  auto c1 = share(Poset::chain(1));
  MonotoneMap f(d, c2, {0, 0, 1, 1});
  MonotoneMap g(c2, c1, {0, 0});
  CHECK(compose(g, f).table() == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(compose(f, MonotoneMap::identity(d)) == f);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "pries/enumerate.hpp"

using namespace pries;

namespace {

Poset relabeled(const Poset& p, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : p.strict_pairs()) pairs.emplace_back(perm[i], perm[j]);
  return Poset::from_pairs(p.size(), pairs);
}

}  // namespace

TEST_CASE("catalog counts match the double-enumeration oracle") {
  const std::vector<std::size_t> known{1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(all_posets(n).representatives.size() == known[n - 1]);
    CHECK(oracle::count_posets(n) == known[n - 1]);
  }
  CHECK(all_posets(6).representatives.size() == 318);
  CHECK(all_posets(7).representatives.size() == 2045);
}

TEST_CASE("catalog representatives are pairwise non-isomorphic and canonical") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto& cat = all_posets(n);
    std::set<std::uint64_t> codes;
    for (const auto& p : cat.representatives) {
      codes.insert(canonical_code(*p));
      CHECK(canonical_form(*p) == *p);
    }
    CHECK(codes.size() == cat.representatives.size());
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  for (const auto& p : all_posets(5).representatives) {
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    const auto code = canonical_code(*p);
    do {
      auto q = relabeled(*p, perm);
      CHECK(canonical_code(q) == code);
      CHECK(isomorphic(q, *p));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK_FALSE(isomorphic(Poset::chain(3), Poset::antichain(3)));
}

TEST_CASE("catalog size guards") {
  CHECK_THROWS_AS(all_posets(0), Error);
  CHECK_THROWS_AS(all_posets(8), Error);
}

TEST_CASE("catalog frames have the right spectra") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto frames = catalog_frames(n);
    CHECK(frames.size() == all_posets(n).representatives.size());
    for (std::size_t i = 0; i < frames.size(); ++i)
      CHECK(frames[i]->size() == all_posets(n).representatives[i]->upsets().size());
  }
  // frames with at most 8 elements: one per dual poset with at most 8 upsets
  std::size_t expected = 1;  // the one-element frame
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : all_posets(n).representatives)
      if (p->upsets().size() <= 8) ++expected;
  CHECK(frames_up_to(8).size() == expected);
  CHECK(frames_up_to(1).size() == 1);
  CHECK(frames_up_to(2).size() == 2);
  CHECK(frames_up_to(4).size() == 5);  // C1, C2, C3, C4, B2
}

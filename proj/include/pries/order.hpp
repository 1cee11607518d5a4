#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pries/bits.hpp"
#include "pries/error.hpp"

namespace pries {

/// A finite partial order, validated at construction. Subsets of the carrier
/// are `Bits` of width `size()`. Every finite poset is also a finite Priestley
/// space with the discrete topology, so "clopen upset" means "upset" here.
class Poset {
 public:
  /// Validates a full n x n relation (`le[i][j]` means i <= j).
  /// Throws NotSquare, NotReflexive(i), NotAntisymmetric(i,j), NotTransitive(i,j,k).
  static Poset from_matrix(const std::vector<std::vector<bool>>& le,
                           std::vector<std::string> labels = {});

  /// Builds from (i <= j) pairs. Reflexive pairs are implied; no transitive
  /// closure is applied, so the pairs must already describe a partial order.
  static Poset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          std::vector<std::string> labels = {});

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return n_; }
  bool le(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && le(i, j); }

  /// Principal upset / downset of a single element.
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& down(std::size_t i) const { return down_[i]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  Bits empty() const { return Bits(n_); }
  Bits whole() const { return Bits::full(n_); }

  Bits up_closure(const Bits& a) const;
  Bits down_closure(const Bits& a) const;
  bool is_upset(const Bits& a) const { return up_closure(a) == a; }
  bool is_downset(const Bits& a) const { return down_closure(a) == a; }
  Bits min_elements() const;
  Bits max_elements() const;

  // Interior/closure for the open-upset (1) and open-downset (2) topologies.
  // The ambient topology is discrete, so int A = cl A = A.
  Bits int1(const Bits& a) const { return ~down_closure(~a); }
  Bits cl1(const Bits& a) const { return down_closure(a); }
  Bits int2(const Bits& a) const { return ~up_closure(~a); }
  Bits cl2(const Bits& a) const { return up_closure(a); }

  /// All upsets, ordered by cardinality then by ascending member list.
  std::vector<Bits> upsets() const;

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Non-reflexive (i <= j) pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.up_ == b.up_; }

 private:
  Poset() = default;
  static Poset validated(std::vector<Bits> up, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Bits> up_;    // up_[i] = { j : i <= j }
  std::vector<Bits> down_;  // down_[j] = { i : i <= j }
  std::vector<std::string> labels_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// An order-preserving total map between two posets.
class MonotoneMap {
 public:
  /// Throws NotMonotone(i, j) with i <= j but f(i) !<= f(j), or BadTable.
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<std::size_t> table);

  static MonotoneMap identity(PosetPtr p);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const PosetPtr& source_ptr() const { return source_; }
  const PosetPtr& target_ptr() const { return target_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  Bits image(const Bits& a) const;
  Bits preimage(const Bits& b) const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) { return a.table_ == b.table_; }

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<std::size_t> table_;
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Bounded-morphism test: down(f^-1(y)) == f^-1(down y) for every y.
/// Witness on failure: {y}.
Check is_pmorphism(const MonotoneMap& f);

/// Single-consumer cursor over every monotone map P -> Q, in lexicographic
/// order of the function table.
class MonotoneMapStream {
 public:
  MonotoneMapStream(PosetPtr source, PosetPtr target);

  /// Advances to the next map; returns std::nullopt when exhausted.
  std::optional<MonotoneMap> next();

  /// Table-only variant that avoids constructing a MonotoneMap.
  const std::vector<std::size_t>* next_table();

 private:
  bool consistent(std::size_t i) const;

  PosetPtr source_;
  PosetPtr target_;
  std::vector<std::size_t> table_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<MonotoneMap> monotone_maps(const PosetPtr& source, const PosetPtr& target);

}  // namespace pries

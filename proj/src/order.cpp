#include "pries/order.hpp"

#include <algorithm>
#include <set>

namespace pries {

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& le, std::vector<std::string> labels) {
  const std::size_t n = le.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (le[i].size() != n)
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has length " + std::to_string(le[i].size()),
                  {i});
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) up[i].set(j);
  }
  return validated(std::move(up), std::move(labels));
}

Poset Poset::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        std::vector<std::string> labels) {
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n)
      throw Error(ErrorCode::BadInput, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    up[i].set(j);
  }
  return validated(std::move(up), std::move(labels));
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return from_pairs(n, pairs);
}

Poset Poset::antichain(std::size_t n) { return from_pairs(n, {}); }

Poset Poset::validated(std::vector<Bits> up, std::vector<std::string> labels) {
  const std::size_t n = up.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!up[i].test(i)) throw Error(ErrorCode::NotReflexive, "element " + std::to_string(i) + " is not <= itself", {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw Error(ErrorCode::NotAntisymmetric,
                    std::to_string(i) + " <= " + std::to_string(j) + " and back, but they differ", {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = up[i].first(); j < n; j = up[i].next(j + 1)) {
      if (!up[j].is_subset_of(up[i])) {
        auto k = (up[j] - up[i]).first();
        throw Error(ErrorCode::NotTransitive,
                    std::to_string(i) + " <= " + std::to_string(j) + " <= " + std::to_string(k) + " but not " +
                        std::to_string(i) + " <= " + std::to_string(k),
                    {i, j, k});
      }
    }
  if (!labels.empty()) {
    if (labels.size() != n) throw Error(ErrorCode::BadLabels, "expected " + std::to_string(n) + " labels");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw Error(ErrorCode::BadLabels, "labels must be unique");
  }

  Poset p;
  p.n_ = n;
  p.down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  return p;
}

std::string Poset::label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

Bits Poset::up_closure(const Bits& a) const {
  Bits out(n_);
  a.for_each([&](std::size_t i) { out |= up_[i]; });
  return out;
}

Bits Poset::down_closure(const Bits& a) const {
  Bits out(n_);
  a.for_each([&](std::size_t i) { out |= down_[i]; });
  return out;
}

Bits Poset::min_elements() const {
  Bits out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (down_[i].count() == 1) out.set(i);
  return out;
}

Bits Poset::max_elements() const {
  Bits out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (up_[i].count() == 1) out.set(i);
  return out;
}

std::vector<Bits> Poset::upsets() const {
  // Decide elements from the top down, so that when x is decided everything
  // strictly above it already is.
  std::vector<std::size_t> order(n_);
  for (std::size_t i = 0; i < n_; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ua = up_[a].count(), ub = up_[b].count();
    return ua != ub ? ua < ub : a < b;
  });

  std::vector<Bits> out;
  Bits current(n_);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n_) {
      out.push_back(current);
      return;
    }
    std::size_t x = order[pos];
    self(self, pos + 1);
    Bits strictly_above = up_[x];
    strictly_above.reset(x);
    if (strictly_above.is_subset_of(current)) {
      current.set(x);
      self(self, pos + 1);
      current.reset(x);
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.members() < b.members();
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!lt(i, j)) continue;
      Bits between = up_[i] & down_[j];
      if (between.count() == 2) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (lt(i, j)) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<std::size_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  const auto n = source_->size();
  if (table_.size() != n)
    throw Error(ErrorCode::BadTable, "table has " + std::to_string(table_.size()) + " entries, expected " +
                                         std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (table_[i] >= target_->size())
      throw Error(ErrorCode::BadTable, "entry " + std::to_string(i) + " out of range", {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (source_->le(i, j) && !target_->le(table_[i], table_[j]))
        throw Error(ErrorCode::NotMonotone, "order not preserved on (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    {i, j});
}

MonotoneMap MonotoneMap::identity(PosetPtr p) {
  std::vector<std::size_t> t(p->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return MonotoneMap(p, p, std::move(t));
}

Bits MonotoneMap::image(const Bits& a) const {
  Bits out(target_->size());
  a.for_each([&](std::size_t i) { out.set(table_[i]); });
  return out;
}

Bits MonotoneMap::preimage(const Bits& b) const {
  Bits out(source_->size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (b.test(table_[i])) out.set(i);
  return out;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  std::vector<std::size_t> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return MonotoneMap(f.source_ptr(), g.target_ptr(), std::move(t));
}

Check is_pmorphism(const MonotoneMap& f) {
  const auto& src = f.source();
  const auto& dst = f.target();
  for (std::size_t y = 0; y < dst.size(); ++y) {
    Bits fiber(src.size());
    for (std::size_t x = 0; x < src.size(); ++x)
      if (f(x) == y) fiber.set(x);
    if (src.down_closure(fiber) != f.preimage(dst.down(y))) return Check::fail({y});
  }
  return Check::pass();
}

// ---------------------------------------------------------------------------

MonotoneMapStream::MonotoneMapStream(PosetPtr source, PosetPtr target)
    : source_(std::move(source)), target_(std::move(target)), table_(source_->size(), 0) {}

bool MonotoneMapStream::consistent(std::size_t i) const {
  const auto& p = *source_;
  const auto& q = *target_;
  for (std::size_t j = 0; j < i; ++j) {
    if (p.le(j, i) && !q.le(table_[j], table_[i])) return false;
    if (p.le(i, j) && !q.le(table_[i], table_[j])) return false;
  }
  return true;
}

const std::vector<std::size_t>* MonotoneMapStream::next_table() {
  if (done_) return nullptr;
  const std::size_t n = source_->size();
  const std::size_t m = target_->size();
  if (n == 0) {
    done_ = true;
    return started_ ? nullptr : (started_ = true, &table_);
  }
  std::ptrdiff_t i;
  if (!started_) {
    started_ = true;
    i = 0;
    table_[0] = 0;
  } else {
    i = static_cast<std::ptrdiff_t>(n) - 1;
    ++table_[static_cast<std::size_t>(i)];
  }
  while (true) {
    if (i < 0) {
      done_ = true;
      return nullptr;
    }
    auto ui = static_cast<std::size_t>(i);
    if (table_[ui] >= m) {
      table_[ui] = 0;
      --i;
      if (i >= 0) ++table_[static_cast<std::size_t>(i)];
      continue;
    }
    if (!consistent(ui)) {
      ++table_[ui];
      continue;
    }
    if (ui + 1 == n) return &table_;
    ++i;
    table_[static_cast<std::size_t>(i)] = 0;
  }
}

std::optional<MonotoneMap> MonotoneMapStream::next() {
  auto* t = next_table();
  if (!t) return std::nullopt;
  return MonotoneMap(source_, target_, *t);
}

std::vector<MonotoneMap> monotone_maps(const PosetPtr& source, const PosetPtr& target) {
  std::vector<MonotoneMap> out;
  MonotoneMapStream s(source, target);
  while (auto* t = s.next_table()) out.emplace_back(source, target, *t);
  return out;
}

}  // namespace pries

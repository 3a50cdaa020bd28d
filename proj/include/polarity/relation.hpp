#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polarity/error.hpp"
#include "polarity/subset.hpp"

namespace polarity {

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Square boolean matrix stored by rows; row(x) is the successor set of x,
/// which for an order relation is the principal up-set of x.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, Subset(n)) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.rows_[i].set(i);
    return r;
  }

  static Relation from_pairs(std::size_t n, const std::vector<IndexPair>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) r.add(a, b);
    return r;
  }

  std::size_t size() const noexcept { return rows_.size(); }
  bool holds(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  void add(std::size_t a, std::size_t b) { rows_.at(a).set(b); }
  const Subset& successors(std::size_t a) const { return rows_[a]; }

  Subset predecessors(std::size_t b) const {
    Subset s(size());
    for (std::size_t a = 0; a < size(); ++a)
      if (rows_[a].test(b)) s.set(a);
    return s;
  }

  Relation converse() const {
    Relation r(size());
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b : members(rows_[a])) r.rows_[b].set(a);
    return r;
  }

  /// Warshall over bit rows.
  Relation reflexive_transitive_closure() const {
    Relation r = *this;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) r.rows_[i].set(i);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (r.rows_[i].test(k)) r.rows_[i] |= r.rows_[k];
    return r;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!rows_[i].test(i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b : members(rows_[a]))
        if (!rows_[b].is_subset_of(rows_[a])) return false;
    return true;
  }

  /// First pair (a, b), a != b, with a R b and b R a.
  std::optional<IndexPair> antisymmetry_violation() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (holds(a, b) && holds(b, a)) return IndexPair{a, b};
    return std::nullopt;
  }

  std::vector<IndexPair> pairs() const {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b : members(rows_[a])) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Subset> rows_;
};

/// Resolves labels to positions; rejects duplicates and unknown labels.
class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!index_.emplace(labels[i], i).second)
        throw Error(ErrorKind::InvalidArgument, "duplicate label '" + labels[i] + "'",
                    {labels[i]});
    }
  }

  std::size_t at(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw Error(ErrorKind::InvalidArgument, "unknown label '" + label + "'", {label});
    return it->second;
  }

  std::vector<IndexPair> resolve(const std::vector<LabelPair>& pairs) const {
    std::vector<IndexPair> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.emplace_back(at(a), at(b));
    return out;
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace polarity

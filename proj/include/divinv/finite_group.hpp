#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace divinv {

using Index = std::size_t;

/// A finite group on the elements 0..order()-1.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual std::size_t order() const = 0;
  virtual Index identity() const = 0;
  virtual Index multiply(Index a, Index b) const = 0;
  virtual Index inverse(Index a) const = 0;

  Index conjugate(Index g, Index x) const { return multiply(multiply(g, x), inverse(g)); }
  Index power(Index x, std::uint64_t k) const;
  std::uint64_t element_order(Index x) const;
};

/// A subgroup given by a list of parent elements, relabelled 0..size-1 in
/// increasing parent order. The parent must outlive the subgroup.
class Subgroup final : public FiniteGroup {
 public:
  /// Elements need not be sorted; duplicates are rejected. Closure is not
  /// checked here (see is_closed()).
  Subgroup(const FiniteGroup& parent, std::vector<Index> elements);

  std::size_t order() const override { return elements_.size(); }
  Index identity() const override { return identity_; }
  Index multiply(Index a, Index b) const override;
  Index inverse(Index a) const override;

  const FiniteGroup& parent() const noexcept { return *parent_; }
  Index to_parent(Index local) const { return elements_.at(local); }
  /// Local index, or npos when x is not in the subgroup.
  Index to_local(Index parent_element) const;
  bool contains(Index parent_element) const { return to_local(parent_element) != npos; }
  const std::vector<Index>& elements() const noexcept { return elements_; }

  bool is_closed() const;
  bool is_normal() const;

  static constexpr Index npos = static_cast<Index>(-1);

 private:
  const FiniteGroup* parent_;
  std::vector<Index> elements_;
  std::vector<std::int64_t> local_;  // parent index -> local index, -1 if absent
  Index identity_ = 0;
};

/// Conjugacy classes ordered by least element; classes[0] holds the identity
/// when identity() == 0.
struct ClassData {
  const FiniteGroup* group = nullptr;
  std::vector<std::size_t> class_of;             // element -> class
  std::vector<std::vector<Index>> members;       // class -> sorted elements
  std::vector<std::size_t> inverse_class;        // class of g^{-1}
  std::vector<std::uint64_t> class_order;        // element order per class
  std::uint64_t exponent = 1;
  std::vector<Index> generators;

  std::size_t count() const noexcept { return members.size(); }
  std::size_t size(std::size_t c) const { return members.at(c).size(); }
  Index representative(std::size_t c) const { return members.at(c).front(); }
};

/// Greedy generating set in increasing element order.
std::vector<Index> generating_set(const FiniteGroup& g);

/// Orbits of conjugation by a generating set.
ClassData compute_classes(const FiniteGroup& g);

/// How a subgroup meets the classes of its parent.
struct ClassHistogram {
  std::size_t subgroup_order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> counts;  // (parent class, #elements)
};

/// Throws NotASubgroup when `sub` is not a subgroup of classes.group.
ClassHistogram class_histogram(const ClassData& parent_classes, const Subgroup& sub);
ClassHistogram whole_group_histogram(const ClassData& classes);

}  // namespace divinv

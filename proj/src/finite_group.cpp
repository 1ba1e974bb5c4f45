#include "divinv/finite_group.hpp"

#include <algorithm>
#include <map>

#include "divinv/errors.hpp"
#include "divinv/modular.hpp"

namespace divinv {

Index FiniteGroup::power(Index x, std::uint64_t k) const {
  Index result = identity();
  Index base = x;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Index x) const {
  std::uint64_t k = 1;
  Index y = x;
  const Index e = identity();
  while (y != e) {
    y = multiply(y, x);
    ++k;
    if (k > order()) throw Error(ErrorCode::Internal, "element order exceeds group order");
  }
  return k;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Index> elements)
    : parent_(&parent), elements_(std::move(elements)), local_(parent.order(), -1) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Index x = elements_[i];
    if (x >= parent.order()) throw Error(ErrorCode::NotASubgroup, "element out of range");
    if (local_[x] != -1) throw Error(ErrorCode::NotASubgroup, "duplicate element");
    local_[x] = static_cast<std::int64_t>(i);
  }
  const Index e = to_local(parent.identity());
  if (e == npos) throw Error(ErrorCode::NotASubgroup, "identity missing");
  identity_ = e;
}

Index Subgroup::to_local(Index parent_element) const {
  if (parent_element >= local_.size() || local_[parent_element] < 0) return npos;
  return static_cast<Index>(local_[parent_element]);
}

Index Subgroup::multiply(Index a, Index b) const {
  const Index r = to_local(parent_->multiply(elements_[a], elements_[b]));
  if (r == npos) throw Error(ErrorCode::NotASubgroup, "product leaves the subgroup");
  return r;
}

Index Subgroup::inverse(Index a) const {
  const Index r = to_local(parent_->inverse(elements_[a]));
  if (r == npos) throw Error(ErrorCode::NotASubgroup, "inverse leaves the subgroup");
  return r;
}

bool Subgroup::is_closed() const {
  for (Index a : elements_)
    for (Index b : elements_)
      if (!contains(parent_->multiply(a, b))) return false;
  return true;
}

bool Subgroup::is_normal() const {
  const auto gens = generating_set(*parent_);
  for (Index g : gens)
    for (Index x : elements_)
      if (!contains(parent_->conjugate(g, x))) return false;
  return true;
}

std::vector<Index> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Index> gens;
  std::vector<char> in_span(n, 0);
  std::vector<Index> span{g.identity()};
  in_span[g.identity()] = 1;
  for (Index x = 0; x < n && span.size() < n; ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    // closure of the enlarged generating set, grown from the current span
    std::vector<Index> frontier = span;
    while (!frontier.empty()) {
      std::vector<Index> next;
      for (Index y : frontier) {
        for (Index s : gens) {
          const Index z = g.multiply(y, s);
          if (!in_span[z]) {
            in_span[z] = 1;
            span.push_back(z);
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

ClassData compute_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ClassData cd;
  cd.group = &g;
  cd.generators = generating_set(g);
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  cd.class_of.assign(n, unassigned);
  for (Index x = 0; x < n; ++x) {
    if (cd.class_of[x] != unassigned) continue;
    const std::size_t c = cd.members.size();
    std::vector<Index> orbit{x};
    cd.class_of[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Index s : cd.generators) {
        const Index y = g.conjugate(s, orbit[i]);
        if (cd.class_of[y] == unassigned) {
          cd.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cd.members.push_back(std::move(orbit));
  }
  cd.inverse_class.resize(cd.count());
  cd.class_order.resize(cd.count());
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const Index rep = cd.representative(c);
    cd.inverse_class[c] = cd.class_of[g.inverse(rep)];
    cd.class_order[c] = g.element_order(rep);
    cd.exponent = lcm_u64(cd.exponent, cd.class_order[c]);
  }
  return cd;
}

ClassHistogram class_histogram(const ClassData& parent_classes, const Subgroup& sub) {
  if (parent_classes.group != &sub.parent()) {
    throw Error(ErrorCode::NotASubgroup, "subgroup belongs to a different group");
  }
  std::map<std::size_t, std::size_t> counts;
  for (Index x : sub.elements()) ++counts[parent_classes.class_of[x]];
  ClassHistogram h;
  h.subgroup_order = sub.order();
  h.counts.assign(counts.begin(), counts.end());
  return h;
}

ClassHistogram whole_group_histogram(const ClassData& classes) {
  ClassHistogram h;
  h.subgroup_order = classes.group->order();
  for (std::size_t c = 0; c < classes.count(); ++c) h.counts.emplace_back(c, classes.size(c));
  return h;
}

}  // namespace divinv

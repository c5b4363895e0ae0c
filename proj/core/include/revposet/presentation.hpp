#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revposet/element.hpp"

namespace revposet {

enum class Carrier { Natural, Integer };

/// Description of a generator leaf: a finite family of roles, each indexed by
/// naturals or integers, and an order predicate on (role, index) pairs.
struct LeafSpec {
  std::string name;
  std::vector<std::string> roles;
  Carrier carrier = Carrier::Natural;
  /// Number of indices per role for finite leaves (natural carriers only).
  std::optional<std::int64_t> size;
  std::function<bool(std::size_t role_x, std::int64_t x, std::size_t role_y, std::int64_t y)> leq;
  bool preorder = false;
  /// Whether the order is a boolean combination of index comparisons. The
  /// extraction engine answers infinitude questions exactly only for
  /// structured presentations; black-box leaves should leave this false.
  bool structured = false;
};

namespace detail {
class Node;
}

/// A countable poset or preorder presented lazily: an order predicate on
/// ElementIds plus a canonical, prefix-stable enumeration of the carrier.
///
/// Presentations are immutable values; copies share the underlying tree.
class PosetPresentation {
 public:
  explicit PosetPresentation(std::shared_ptr<const detail::Node> node);

  /// x <= y. Throws InvalidElement naming the bad selector.
  bool leq(const ElementId& x, const ElementId& y) const;
  /// x <= y without validating the ids.
  bool leq_unchecked(const ElementId& x, const ElementId& y) const;
  bool comparable(const ElementId& x, const ElementId& y) const {
    return leq_unchecked(x, y) || leq_unchecked(y, x);
  }

  /// Empty when `e` addresses an element, otherwise a description of the
  /// first bad selector.
  std::optional<std::string> validate(const ElementId& e) const;
  bool contains(const ElementId& e) const { return !validate(e).has_value(); }

  /// First min(n, |P|) elements of the canonical enumeration.
  std::vector<ElementId> enumerate(std::size_t n) const;
  /// Number of elements, or nullopt for a countably infinite carrier.
  std::optional<std::uint64_t> cardinality() const;

  bool is_preorder() const;
  bool is_structured() const;
  /// DSL spelling of the presentation (catalog entries print their key).
  std::string expr() const;
  /// Copy of this presentation that prints as `name`.
  PosetPresentation named(std::string name) const;

  const std::shared_ptr<const detail::Node>& node() const { return node_; }

 private:
  std::shared_ptr<const detail::Node> node_;
};

PosetPresentation dual(const PosetPresentation& p);
PosetPresentation disjoint_union(const PosetPresentation& p, const PosetPresentation& q);
PosetPresentation linear_sum(const PosetPresentation& p, const PosetPresentation& q);
/// Countably many copies of `p`, pairwise incomparable; the copy number is
/// the path selector.
PosetPresentation infinite_disjoint_union(const PosetPresentation& p);
PosetPresentation leaf(LeafSpec spec);

/// Generator leaves. The label becomes the role tag of every element.
namespace gen {
PosetPresentation omega(std::string label = "c");
PosetPresentation omega_d(std::string label = "b");
PosetPresentation d1(std::string label = "p");
PosetPresentation dinf(std::string label = "a");
PosetPresentation zinf(std::string label = "z");
PosetPresentation z2(std::string label = "z");
/// Descending ladder of 2-antichains {a_i, b_i} below an omega chain c.
PosetPresentation f6();
/// Antichain a and chain c with a_m <= c_n iff m <= n.
PosetPresentation f7();
/// a_i <= b_j iff i > 0 or j != i, over integer indices.
PosetPresentation f8();
}  // namespace gen

/// Zigzag enumeration of the integers: 0, 1, -1, 2, -2, ...
std::int64_t zigzag(std::uint64_t n);
/// Position of `k` in the zigzag enumeration.
std::uint64_t unzigzag(std::int64_t k);

}  // namespace revposet

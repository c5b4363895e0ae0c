#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revposet/element.hpp"
#include "revposet/presentation.hpp"

namespace revposet {

/// Explicit order on points 0..n-1 stored as a dense boolean matrix.
class FiniteOrder {
 public:
  FiniteOrder() = default;
  /// Discrete order (identity relation) on n points.
  FiniteOrder(std::size_t n, bool preorder);

  std::size_t size() const { return n_; }
  bool is_preorder() const { return preorder_; }
  bool leq(std::size_t i, std::size_t j) const { return m_[i * n_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  void set(std::size_t i, std::size_t j, bool v) { m_[i * n_ + j] = v ? 1 : 0; }

  /// Relation matrix as rows.
  std::vector<std::vector<bool>> rows() const;
  static FiniteOrder from_rows(const std::vector<std::vector<bool>>& rows, bool preorder);

  friend bool operator==(const FiniteOrder&, const FiniteOrder&) = default;

 private:
  std::size_t n_ = 0;
  bool preorder_ = false;
  std::vector<std::uint8_t> m_;
};

enum class AxiomKind { Reflexivity, Transitivity, Antisymmetry };
std::string to_string(AxiomKind k);

/// First failed axiom with the offending point(s), pair or triple.
struct AxiomViolation {
  AxiomKind kind;
  std::vector<std::size_t> points;
};

/// Reflexivity, transitivity and (unless the order is a preorder, or
/// `force_poset` is set) antisymmetry over all points.
std::optional<AxiomViolation> verify_axioms(const FiniteOrder& f, bool force_poset = false);

/// Finite restriction of a presentation to an explicit list of elements,
/// usually a prefix of the canonical enumeration.
class Window {
 public:
  /// First n enumerated elements.
  static Window of(const PosetPresentation& p, std::size_t n);
  /// Arbitrary distinct elements of p, in the given order.
  static Window over(const PosetPresentation& p, std::vector<ElementId> elements);

  const PosetPresentation& parent() const { return parent_; }
  const std::vector<ElementId>& elements() const { return elements_; }
  const FiniteOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }

  /// Position of `x`; throws PreconditionError when `x` is not in the window.
  std::size_t index_of(const ElementId& x) const;
  bool contains(const ElementId& x) const;

  std::vector<ElementId> up_set(const ElementId& x) const;
  std::vector<ElementId> down_set(const ElementId& x) const;
  /// x < y with no window element strictly between. Window-relative: a
  /// window cover need not be a cover in the parent presentation.
  bool covers(const ElementId& x, const ElementId& y) const;

  /// Hasse diagram of window-relative covers; mutual pairs of a preorder
  /// are drawn as dashed undirected edges.
  std::string to_dot() const;
  /// {"elements": [labels], "leq": [[bool]]}
  std::string to_json() const;

 private:
  Window(PosetPresentation p, std::vector<ElementId> e, FiniteOrder o);
  PosetPresentation parent_;
  std::vector<ElementId> elements_;
  FiniteOrder order_;
};

std::optional<AxiomViolation> verify_axioms(const Window& w, bool force_poset = false);

}  // namespace revposet

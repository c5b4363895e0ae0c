#include "revposet/window.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "revposet/error.hpp"

namespace revposet {

FiniteOrder::FiniteOrder(std::size_t n, bool preorder)
    : n_(n), preorder_(preorder), m_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) set(i, i, true);
}

std::vector<std::vector<bool>> FiniteOrder::rows() const {
  std::vector<std::vector<bool>> out(n_, std::vector<bool>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = leq(i, j);
  return out;
}

FiniteOrder FiniteOrder::from_rows(const std::vector<std::vector<bool>>& rows, bool preorder) {
  FiniteOrder f(rows.size(), preorder);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw PreconditionError("relation matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) f.set(i, j, rows[i][j]);
  }
  return f;
}

std::string to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::Reflexivity: return "reflexivity";
    case AxiomKind::Transitivity: return "transitivity";
    case AxiomKind::Antisymmetry: return "antisymmetry";
  }
  return "?";
}

std::optional<AxiomViolation> verify_axioms(const FiniteOrder& f, bool force_poset) {
  const auto n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!f.leq(i, i)) return AxiomViolation{AxiomKind::Reflexivity, {i}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (f.leq(j, k) && !f.leq(i, k)) return AxiomViolation{AxiomKind::Transitivity, {i, j, k}};
    }
  if (!f.is_preorder() || force_poset) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (f.leq(i, j) && f.leq(j, i)) return AxiomViolation{AxiomKind::Antisymmetry, {i, j}};
  }
  return std::nullopt;
}

std::optional<AxiomViolation> verify_axioms(const Window& w, bool force_poset) {
  return verify_axioms(w.order(), force_poset);
}

Window::Window(PosetPresentation p, std::vector<ElementId> e, FiniteOrder o)
    : parent_(std::move(p)), elements_(std::move(e)), order_(std::move(o)) {}

Window Window::of(const PosetPresentation& p, std::size_t n) { return over(p, p.enumerate(n)); }

Window Window::over(const PosetPresentation& p, std::vector<ElementId> elements) {
  for (const auto& e : elements)
    if (auto err = p.validate(e)) throw InvalidElement(*err, e.label());
  const auto n = elements.size();
  FiniteOrder o(n, p.is_preorder());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.set(i, j, p.leq_unchecked(elements[i], elements[j]));
  return Window(p, std::move(elements), std::move(o));
}

std::size_t Window::index_of(const ElementId& x) const {
  auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) throw PreconditionError("element " + x.label() + " is not in the window");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Window::contains(const ElementId& x) const {
  return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

std::vector<ElementId> Window::up_set(const ElementId& x) const {
  const auto i = index_of(x);
  std::vector<ElementId> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (order_.leq(i, j)) out.push_back(elements_[j]);
  return out;
}

std::vector<ElementId> Window::down_set(const ElementId& x) const {
  const auto i = index_of(x);
  std::vector<ElementId> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (order_.leq(j, i)) out.push_back(elements_[j]);
  return out;
}

bool Window::covers(const ElementId& x, const ElementId& y) const {
  const auto i = index_of(x);
  const auto j = index_of(y);
  if (!order_.less(i, j)) return false;
  for (std::size_t k = 0; k < size(); ++k)
    if (order_.less(i, k) && order_.less(k, j)) return false;
  return true;
}

std::string Window::to_dot() const {
  std::ostringstream os;
  os << "digraph window {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << elements_[i].label() << "\"];\n";
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j) continue;
      if (order_.less(i, j)) {
        bool between = false;
        for (std::size_t k = 0; k < size() && !between; ++k)
          between = order_.less(i, k) && order_.less(k, j);
        if (!between) os << "  n" << i << " -> n" << j << ";\n";
      } else if (i < j && order_.leq(i, j) && order_.leq(j, i)) {
        os << "  n" << i << " -> n" << j << " [dir=none, style=dashed];\n";
      }
    }
  os << "}\n";
  return os.str();
}

std::string Window::to_json() const {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : elements_) j["elements"].push_back(e.label());
  j["leq"] = order_.rows();
  return j.dump();
}

}  // namespace revposet

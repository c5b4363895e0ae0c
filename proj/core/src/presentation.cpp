#include "revposet/presentation.hpp"

#include <algorithm>

#include "revposet/error.hpp"

namespace revposet {
namespace detail {

class Node {
 public:
  virtual ~Node() = default;
  virtual bool leq(const ElementId& x, const ElementId& y, std::size_t depth) const = 0;
  virtual std::optional<std::string> validate(const ElementId& e, std::size_t depth) const = 0;
  virtual std::vector<ElementId> enumerate(std::size_t n) const = 0;
  virtual std::optional<std::uint64_t> cardinality() const = 0;
  virtual std::string expr() const = 0;
  bool preorder = false;
  bool structured = true;
};

namespace {

std::string selector_text(const ElementId& e, std::size_t depth) {
  return "path[" + std::to_string(depth) + "] of " + e.label();
}

class LeafNode final : public Node {
 public:
  explicit LeafNode(LeafSpec s) : spec_(std::move(s)) {
    preorder = spec_.preorder;
    structured = spec_.structured;
  }

  std::size_t role_of(const ElementId& e) const {
    auto it = std::find(spec_.roles.begin(), spec_.roles.end(), e.role);
    return static_cast<std::size_t>(it - spec_.roles.begin());
  }

  bool leq(const ElementId& x, const ElementId& y, std::size_t) const override {
    return spec_.leq(role_of(x), x.index, role_of(y), y.index);
  }

  std::optional<std::string> validate(const ElementId& e, std::size_t depth) const override {
    if (e.path.size() != depth)
      return "path too long for leaf " + spec_.name + ": " + selector_text(e, depth);
    if (role_of(e) == spec_.roles.size())
      return "unknown role '" + e.role + "' for leaf " + spec_.name + " in " + e.label();
    if (spec_.carrier == Carrier::Natural && e.index < 0)
      return "negative index on natural carrier " + spec_.name + " in " + e.label();
    if (spec_.size && e.index >= *spec_.size)
      return "index beyond finite leaf " + spec_.name + " in " + e.label();
    return std::nullopt;
  }

  std::vector<ElementId> enumerate(std::size_t n) const override {
    std::vector<ElementId> out;
    out.reserve(n);
    for (std::uint64_t i = 0; out.size() < n; ++i) {
      if (spec_.size && static_cast<std::int64_t>(i) >= *spec_.size) break;
      const std::int64_t idx =
          spec_.carrier == Carrier::Integer ? zigzag(i) : static_cast<std::int64_t>(i);
      for (const auto& r : spec_.roles) {
        if (out.size() == n) break;
        out.push_back(ElementId{{}, r, idx});
      }
    }
    return out;
  }

  std::optional<std::uint64_t> cardinality() const override {
    if (!spec_.size) return std::nullopt;
    return static_cast<std::uint64_t>(*spec_.size) * spec_.roles.size();
  }

  std::string expr() const override { return spec_.name; }

 private:
  LeafSpec spec_;
};

class DualNode final : public Node {
 public:
  explicit DualNode(std::shared_ptr<const Node> c) : child_(std::move(c)) {
    preorder = child_->preorder;
    structured = child_->structured;
  }
  bool leq(const ElementId& x, const ElementId& y, std::size_t depth) const override {
    return child_->leq(y, x, depth);
  }
  std::optional<std::string> validate(const ElementId& e, std::size_t depth) const override {
    return child_->validate(e, depth);
  }
  std::vector<ElementId> enumerate(std::size_t n) const override { return child_->enumerate(n); }
  std::optional<std::uint64_t> cardinality() const override { return child_->cardinality(); }
  std::string expr() const override { return "dual(" + child_->expr() + ")"; }

 private:
  std::shared_ptr<const Node> child_;
};

class BinaryNode final : public Node {
 public:
  BinaryNode(std::shared_ptr<const Node> l, std::shared_ptr<const Node> r, bool linear)
      : left_(std::move(l)), right_(std::move(r)), linear_(linear) {
    preorder = left_->preorder || right_->preorder;
    structured = left_->structured && right_->structured;
  }

  bool leq(const ElementId& x, const ElementId& y, std::size_t depth) const override {
    const auto sx = x.path[depth];
    const auto sy = y.path[depth];
    if (sx != sy) return linear_ && sx < sy;
    return (sx == 0 ? left_ : right_)->leq(x, y, depth + 1);
  }

  std::optional<std::string> validate(const ElementId& e, std::size_t depth) const override {
    if (e.path.size() <= depth) return "missing selector at " + selector_text(e, depth);
    const auto s = e.path[depth];
    if (s > 1) return "binary selector must be 0 or 1: " + selector_text(e, depth);
    return (s == 0 ? left_ : right_)->validate(e, depth + 1);
  }

  std::vector<ElementId> enumerate(std::size_t n) const override {
    const auto l = left_->enumerate(n);
    const auto r = right_->enumerate(n);
    std::vector<ElementId> out;
    out.reserve(n);
    for (std::size_t i = 0; out.size() < n && (i < l.size() || i < r.size()); ++i) {
      if (i < l.size()) out.push_back(l[i].prefixed(0));
      if (out.size() < n && i < r.size()) out.push_back(r[i].prefixed(1));
    }
    return out;
  }

  std::optional<std::uint64_t> cardinality() const override {
    auto a = left_->cardinality();
    auto b = right_->cardinality();
    if (!a || !b) return std::nullopt;
    return *a + *b;
  }

  std::string expr() const override {
    return std::string(linear_ ? "ls(" : "du(") + left_->expr() + "," + right_->expr() + ")";
  }

 private:
  std::shared_ptr<const Node> left_, right_;
  bool linear_;
};

class InfiniteUnionNode final : public Node {
 public:
  explicit InfiniteUnionNode(std::shared_ptr<const Node> c) : child_(std::move(c)) {
    preorder = child_->preorder;
    structured = child_->structured;
  }

  bool leq(const ElementId& x, const ElementId& y, std::size_t depth) const override {
    if (x.path[depth] != y.path[depth]) return false;
    return child_->leq(x, y, depth + 1);
  }

  std::optional<std::string> validate(const ElementId& e, std::size_t depth) const override {
    if (e.path.size() <= depth) return "missing copy selector at " + selector_text(e, depth);
    return child_->validate(e, depth + 1);
  }

  // Cantor diagonal sweep over (copy, position-in-copy).
  std::vector<ElementId> enumerate(std::size_t n) const override {
    const auto inner = child_->enumerate(n);
    std::vector<ElementId> out;
    out.reserve(n);
    for (std::uint64_t d = 0; out.size() < n; ++d) {
      for (std::uint64_t copy = 0; copy <= d && out.size() < n; ++copy) {
        const auto k = d - copy;
        if (k < inner.size()) out.push_back(inner[k].prefixed(copy));
      }
    }
    return out;
  }

  std::optional<std::uint64_t> cardinality() const override { return std::nullopt; }
  std::string expr() const override { return "duinf(" + child_->expr() + ")"; }

 private:
  std::shared_ptr<const Node> child_;
};

class NamedNode final : public Node {
 public:
  NamedNode(std::shared_ptr<const Node> c, std::string name)
      : child_(std::move(c)), name_(std::move(name)) {
    preorder = child_->preorder;
    structured = child_->structured;
  }
  bool leq(const ElementId& x, const ElementId& y, std::size_t depth) const override {
    return child_->leq(x, y, depth);
  }
  std::optional<std::string> validate(const ElementId& e, std::size_t depth) const override {
    return child_->validate(e, depth);
  }
  std::vector<ElementId> enumerate(std::size_t n) const override { return child_->enumerate(n); }
  std::optional<std::uint64_t> cardinality() const override { return child_->cardinality(); }
  std::string expr() const override { return name_; }

 private:
  std::shared_ptr<const Node> child_;
  std::string name_;
};

}  // namespace
}  // namespace detail

PosetPresentation::PosetPresentation(std::shared_ptr<const detail::Node> node)
    : node_(std::move(node)) {}

bool PosetPresentation::leq(const ElementId& x, const ElementId& y) const {
  if (auto err = node_->validate(x, 0)) throw InvalidElement(*err, x.label());
  if (auto err = node_->validate(y, 0)) throw InvalidElement(*err, y.label());
  return node_->leq(x, y, 0);
}

bool PosetPresentation::leq_unchecked(const ElementId& x, const ElementId& y) const {
  return node_->leq(x, y, 0);
}

std::optional<std::string> PosetPresentation::validate(const ElementId& e) const {
  return node_->validate(e, 0);
}

std::vector<ElementId> PosetPresentation::enumerate(std::size_t n) const {
  return node_->enumerate(n);
}

std::optional<std::uint64_t> PosetPresentation::cardinality() const { return node_->cardinality(); }
bool PosetPresentation::is_preorder() const { return node_->preorder; }
bool PosetPresentation::is_structured() const { return node_->structured; }
std::string PosetPresentation::expr() const { return node_->expr(); }

PosetPresentation PosetPresentation::named(std::string name) const {
  return PosetPresentation(std::make_shared<detail::NamedNode>(node_, std::move(name)));
}

PosetPresentation dual(const PosetPresentation& p) {
  return PosetPresentation(std::make_shared<detail::DualNode>(p.node()));
}

PosetPresentation disjoint_union(const PosetPresentation& p, const PosetPresentation& q) {
  return PosetPresentation(std::make_shared<detail::BinaryNode>(p.node(), q.node(), false));
}

PosetPresentation linear_sum(const PosetPresentation& p, const PosetPresentation& q) {
  return PosetPresentation(std::make_shared<detail::BinaryNode>(p.node(), q.node(), true));
}

PosetPresentation infinite_disjoint_union(const PosetPresentation& p) {
  return PosetPresentation(std::make_shared<detail::InfiniteUnionNode>(p.node()));
}

PosetPresentation leaf(LeafSpec spec) {
  if (spec.roles.empty()) throw PreconditionError("leaf '" + spec.name + "' has no roles");
  if (!spec.leq) throw PreconditionError("leaf '" + spec.name + "' has no order predicate");
  if (spec.size && spec.carrier == Carrier::Integer)
    throw PreconditionError("finite leaves must use natural carriers");
  return PosetPresentation(std::make_shared<detail::LeafNode>(std::move(spec)));
}

std::int64_t zigzag(std::uint64_t n) {
  const auto half = static_cast<std::int64_t>((n + 1) / 2);
  return n % 2 == 1 ? half : -half;
}

std::uint64_t unzigzag(std::int64_t k) {
  return k > 0 ? static_cast<std::uint64_t>(2 * k - 1) : static_cast<std::uint64_t>(-2 * k);
}

namespace gen {

namespace {
PosetPresentation single(std::string name, std::string label, Carrier carrier,
                         std::optional<std::int64_t> size, bool preorder,
                         std::function<bool(std::int64_t, std::int64_t)> rel) {
  LeafSpec s;
  s.name = std::move(name);
  s.roles = {std::move(label)};
  s.carrier = carrier;
  s.size = size;
  s.preorder = preorder;
  s.structured = true;
  s.leq = [rel = std::move(rel)](std::size_t, std::int64_t x, std::size_t, std::int64_t y) {
    return rel(x, y);
  };
  return leaf(std::move(s));
}
}  // namespace

PosetPresentation omega(std::string label) {
  return single("omega", std::move(label), Carrier::Natural, std::nullopt, false,
                [](std::int64_t x, std::int64_t y) { return x <= y; });
}

PosetPresentation omega_d(std::string label) {
  return single("omega_d", std::move(label), Carrier::Natural, std::nullopt, false,
                [](std::int64_t x, std::int64_t y) { return x >= y; });
}

PosetPresentation d1(std::string label) {
  return single("D1", std::move(label), Carrier::Natural, 1, false,
                [](std::int64_t, std::int64_t) { return true; });
}

PosetPresentation dinf(std::string label) {
  return single("Dinf", std::move(label), Carrier::Natural, std::nullopt, false,
                [](std::int64_t x, std::int64_t y) { return x == y; });
}

PosetPresentation zinf(std::string label) {
  return single("Zinf", std::move(label), Carrier::Natural, std::nullopt, true,
                [](std::int64_t, std::int64_t) { return true; });
}

PosetPresentation z2(std::string label) {
  return single("Z2", std::move(label), Carrier::Natural, 2, true,
                [](std::int64_t, std::int64_t) { return true; });
}

PosetPresentation f6() {
  LeafSpec s;
  s.name = "F6";
  s.roles = {"a", "b", "c"};
  s.structured = true;
  // roles 0,1 form the ladder, role 2 the chain on top
  s.leq = [](std::size_t rx, std::int64_t x, std::size_t ry, std::int64_t y) {
    const bool cx = rx == 2, cy = ry == 2;
    if (cx && cy) return x <= y;
    if (cy) return true;
    if (cx) return false;
    if (rx == ry && x == y) return true;
    return x > y;
  };
  return leaf(std::move(s));
}

PosetPresentation f7() {
  LeafSpec s;
  s.name = "F7";
  s.roles = {"a", "c"};
  s.structured = true;
  s.leq = [](std::size_t rx, std::int64_t x, std::size_t ry, std::int64_t y) {
    if (rx == 1 && ry == 1) return x <= y;
    if (rx == 0 && ry == 0) return x == y;
    if (rx == 0) return x <= y;
    return false;
  };
  return leaf(std::move(s));
}

PosetPresentation f8() {
  LeafSpec s;
  s.name = "F8";
  s.roles = {"a", "b"};
  s.carrier = Carrier::Integer;
  s.structured = true;
  s.leq = [](std::size_t rx, std::int64_t i, std::size_t ry, std::int64_t j) {
    if (rx == ry) return i == j;
    if (rx == 1) return false;
    return i > 0 || j != i;
  };
  return leaf(std::move(s));
}

}  // namespace gen
}  // namespace revposet

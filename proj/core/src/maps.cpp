#include "revposet/maps.hpp"

#include <algorithm>

#include "json.hpp"
#include "revposet/error.hpp"

namespace revposet {

SelfMap::SelfMap(std::string name, Fn forward, Fn inverse, unsigned displacement_bound,
                 bool structured)
    : name_(std::move(name)),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      bound_(displacement_bound),
      structured_(structured) {}

SelfMap SelfMap::identity() {
  auto id = [](const ElementId& x) { return x; };
  return SelfMap("id", id, id, 0, true);
}

SelfMap SelfMap::inverted() const {
  return SelfMap(name_ + "^-1", inverse_, forward_, bound_, structured_);
}

SelfMap power(const SelfMap& h, std::int64_t k) {
  if (k == 0) return SelfMap::identity();
  const SelfMap base = k > 0 ? h : h.inverted();
  const std::int64_t n = k > 0 ? k : -k;
  auto fwd = [base, n](const ElementId& x) {
    ElementId y = x;
    for (std::int64_t i = 0; i < n; ++i) y = base(y);
    return y;
  };
  auto inv = [base, n](const ElementId& x) {
    ElementId y = x;
    for (std::int64_t i = 0; i < n; ++i) y = base.inverse(y);
    return y;
  };
  return SelfMap(h.name() + "^" + std::to_string(k), fwd, inv,
                 static_cast<unsigned>(n) * h.displacement_bound(), h.is_structured());
}

SelfMap on_component(const SelfMap& inner, std::vector<std::uint64_t> prefix) {
  auto lift = [prefix](const SelfMap::Fn& fn) {
    return [fn, prefix](const ElementId& x) {
      if (x.path.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), x.path.begin()))
        return x;
      ElementId local{std::vector<std::uint64_t>(x.path.begin() + prefix.size(), x.path.end()),
                      x.role, x.index};
      ElementId y = fn(local);
      y.path.insert(y.path.begin(), prefix.begin(), prefix.end());
      return y;
    };
  };
  std::string where;
  for (auto s : prefix) where += std::to_string(s) + ".";
  return SelfMap(inner.name() + "@" + where, lift([inner](const ElementId& x) { return inner(x); }),
                 lift([inner](const ElementId& x) { return inner.inverse(x); }),
                 inner.displacement_bound(), inner.is_structured());
}

std::vector<ElementId> orbit(const SelfMap& h, const ElementId& x, std::int64_t from,
                             std::int64_t to) {
  std::vector<ElementId> out;
  if (to < from) return out;
  ElementId start = x;
  if (from > 0)
    for (std::int64_t i = 0; i < from; ++i) start = h(start);
  else
    for (std::int64_t i = 0; i < -from; ++i) start = h.inverse(start);
  out.push_back(start);
  for (std::int64_t k = from; k < to; ++k) out.push_back(h(out.back()));
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["verdict"] = ok ? "ok" : "violation";
  if (!ok) {
    j["condition"] = condition;
    j["witness"] = nlohmann::json::array();
    for (const auto& e : witness) j["witness"].push_back(e.label());
    if (!detail.empty()) j["detail"] = detail;
  }
  return j.dump();
}

CheckReport is_order_preserving(const PosetPresentation& p, const SelfMap& h, std::size_t n) {
  const auto elems = p.enumerate(n);
  std::vector<ElementId> img;
  img.reserve(elems.size());
  for (const auto& x : elems) {
    img.push_back(h(x));
    if (auto err = p.validate(img.back()))
      return CheckReport::fail("image_valid", {x, img.back()}, *err);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (p.leq_unchecked(elems[i], elems[j]) && !p.leq_unchecked(img[i], img[j]))
        return CheckReport::fail("order_preservation", {elems[i], elems[j]},
                                 "images " + img[i].label() + ", " + img[j].label());
  return CheckReport::pass();
}

CheckReport check_bijection(const PosetPresentation& p, const SelfMap& h, std::size_t n) {
  for (const auto& x : p.enumerate(n)) {
    const auto y = h(x);
    if (auto err = p.validate(y)) return CheckReport::fail("image_valid", {x, y}, *err);
    if (h.inverse(y) != x) return CheckReport::fail("inverse_after_forward", {x, y});
    const auto z = h.inverse(x);
    if (auto err = p.validate(z)) return CheckReport::fail("preimage_valid", {x, z}, *err);
    if (h(z) != x) return CheckReport::fail("forward_after_inverse", {x, z});
  }
  return CheckReport::pass();
}

std::optional<std::pair<ElementId, ElementId>> non_automorphism_pair(const PosetPresentation& p,
                                                                      const SelfMap& h,
                                                                      std::size_t n) {
  const auto elems = p.enumerate(n);
  std::vector<ElementId> img;
  img.reserve(elems.size());
  for (const auto& x : elems) img.push_back(h(x));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (auto [a, b] : {std::pair{j, i}, std::pair{i, j}})
        if (!p.leq_unchecked(elems[a], elems[b]) && p.leq_unchecked(img[a], img[b]))
          return std::pair{elems[a], elems[b]};
  return std::nullopt;
}

bool is_order_preserving(const FiniteOrder& f, const Permutation& p) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f.leq(i, j) && !f.leq(p[i], p[j])) return false;
  return true;
}

bool is_automorphism(const FiniteOrder& f, const Permutation& p) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f.leq(i, j) != f.leq(p[i], p[j])) return false;
  return true;
}

namespace {

// Extends the partial permutation perm[0..k) position by position, keeping it
// order-preserving on the assigned prefix. Stops at the first counterexample.
bool search(const FiniteOrder& f, Permutation& perm, std::vector<bool>& used, std::size_t k,
            std::optional<Permutation>& found) {
  const auto n = f.size();
  if (k == n) {
    if (!is_automorphism(f, perm)) {
      found = perm;
      return true;
    }
    return false;
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (f.leq(i, k) && !f.leq(perm[i], t)) ok = false;
      if (f.leq(k, i) && !f.leq(t, perm[i])) ok = false;
    }
    if (!ok) continue;
    perm[k] = t;
    used[t] = true;
    if (search(f, perm, used, k + 1, found)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

ReversibilityResult brute_force_reversible(const FiniteOrder& f) {
  if (f.size() > kMaxBruteForcePoints)
    throw SizeLimitError("brute force limited to " + std::to_string(kMaxBruteForcePoints) +
                         " points, got " + std::to_string(f.size()));
  Permutation perm(f.size());
  std::vector<bool> used(f.size(), false);
  std::optional<Permutation> found;
  search(f, perm, used, 0, found);
  return {!found.has_value(), found};
}

namespace {

void extend(FiniteOrder& cur, std::size_t k, std::size_t n, bool preorder,
            const std::function<void(const FiniteOrder&)>& fn) {
  if (k == n) {
    fn(cur);
    return;
  }
  const std::uint32_t masks = 1u << k;
  for (std::uint32_t down = 0; down < masks; ++down) {
    for (std::uint32_t up = 0; up < masks; ++up) {
      if (!preorder && (down & up)) continue;
      for (std::size_t i = 0; i < k; ++i) {
        cur.set(i, k, (down >> i) & 1u);
        cur.set(k, i, (up >> i) & 1u);
      }
      // transitivity on triples through the new point
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i)
        for (std::size_t j = 0; j <= k && ok; ++j)
          for (std::size_t l = 0; l <= k && ok; ++l) {
            if (i != k && j != k && l != k) continue;
            if (cur.leq(i, j) && cur.leq(j, l) && !cur.leq(i, l)) ok = false;
          }
      if (ok) extend(cur, k + 1, n, preorder, fn);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    cur.set(i, k, false);
    cur.set(k, i, false);
  }
}

}  // namespace

void for_each_finite_order(std::size_t n, bool preorder,
                           const std::function<void(const FiniteOrder&)>& fn) {
  if (n > kMaxBruteForcePoints)
    throw SizeLimitError("order enumeration limited to " + std::to_string(kMaxBruteForcePoints) +
                         " points");
  FiniteOrder cur(n, preorder);
  extend(cur, 0, n, preorder, fn);
}

std::vector<FiniteOrder> enumerate_finite_orders(std::size_t n, bool preorder) {
  std::vector<FiniteOrder> out;
  for_each_finite_order(n, preorder, [&out](const FiniteOrder& f) { out.push_back(f); });
  return out;
}

}  // namespace revposet

#include "revposet/graph.hpp"

#include <algorithm>

#include "revposet/catalog.hpp"
#include "revposet/error.hpp"

namespace revposet {

void SimpleGraph::connect(std::size_t i, std::size_t j, bool on) {
  if (i == j) return;
  adj_[i * n_ + j] = adj_[j * n_ + i] = on ? 1 : 0;
}

std::size_t SimpleGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += adjacent(i, j);
  return d;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < n_; ++i) e += degree(i);
  return e / 2;
}

SimpleGraph comparability_graph(const Window& w) {
  SimpleGraph g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w.order().comparable(i, j)) g.connect(i, j);
  return g;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) h.connect(i, j, !g.adjacent(i, j));
  return h;
}

SimpleGraph bipartite_complement(const SimpleGraph& g, const std::vector<bool>& side) {
  if (side.size() != g.size()) throw PreconditionError("bipartition size mismatch");
  SimpleGraph h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      h.connect(i, j, side[i] != side[j] ? !g.adjacent(i, j) : g.adjacent(i, j));
  return h;
}

bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const std::vector<std::size_t>& map) {
  if (g.size() != h.size() || map.size() != g.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (auto m : map) {
    if (m >= h.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j) != h.adjacent(map[i], map[j])) return false;
  return true;
}

namespace {

bool extend(const SimpleGraph& g, const SimpleGraph& h, std::vector<std::size_t>& map,
            std::vector<bool>& used, std::size_t k) {
  if (k == g.size()) return true;
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (used[t] || g.degree(k) != h.degree(t)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = g.adjacent(i, k) == h.adjacent(map[i], t);
    if (!ok) continue;
    map[k] = t;
    used[t] = true;
    if (extend(g, h, map, used, k + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const SimpleGraph& g,
                                                          const SimpleGraph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto dg = std::vector<std::size_t>(g.size());
  auto dh = dg;
  for (std::size_t i = 0; i < g.size(); ++i) {
    dg[i] = g.degree(i);
    dh[i] = h.degree(i);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  std::vector<std::size_t> map(g.size());
  std::vector<bool> used(h.size(), false);
  if (extend(g, h, map, used, 0)) return map;
  return std::nullopt;
}

std::vector<std::string> graph_claims() {
  return {"F1-complement", "F2-complement", "F3-complement", "F8-bipartite"};
}

GraphClaimResult check_graph_claim(const std::string& claim, std::size_t half) {
  using namespace ids;
  const auto m = static_cast<std::int64_t>(half);
  std::vector<ElementId> left, right;
  PosetPresentation lp = forbidden({Family::F1, false});
  PosetPresentation rp = lp;
  std::vector<bool> side;

  // Left elements are listed so that left[i] corresponds to right[i].
  if (claim == "F1-complement") {
    lp = forbidden({Family::F1, false});
    rp = forbidden({Family::F4, false});
    for (std::int64_t i = 0; i < m; ++i) {
      left.push_back(f1::a(i));
      right.push_back(f4::c(i));
      left.push_back(f1::c(i));
      right.push_back(f4::a(i));
    }
  } else if (claim == "F2-complement") {
    lp = forbidden({Family::F2, false});
    rp = forbidden({Family::F5, false});
    left.push_back(f2::p());
    right.push_back(f5::d());
    for (std::int64_t i = 0; i < m; ++i) {
      left.push_back(f2::x(i));
      right.push_back(f5::b(i));
      left.push_back(f2::y(i));
      right.push_back(f5::c(i));
    }
  } else if (claim == "F3-complement") {
    lp = forbidden({Family::F3, false});
    rp = forbidden({Family::F6, false});
    for (std::int64_t i = 0; i < m; ++i) {
      left.push_back(f3::a(i));
      right.push_back(f6::c(i));
      left.push_back(f3::p(i));
      right.push_back(f6::a(i));
      left.push_back(f3::q(i));
      right.push_back(f6::b(i));
    }
  } else if (claim == "F8-bipartite") {
    lp = forbidden({Family::F8, false});
    rp = forbidden({Family::F3, false});
    for (std::int64_t j = 0; j < m; ++j) {
      left.push_back(f8::a(-j));
      right.push_back(f3::p(j));
      left.push_back(f8::b(-j));
      right.push_back(f3::q(j));
    }
    for (std::int64_t i = 1; i <= m; ++i) {
      left.push_back(f8::a(i));
      right.push_back(f3::a(2 * (i - 1)));
      left.push_back(f8::b(i));
      right.push_back(f3::a(2 * (i - 1) + 1));
    }
    for (const auto& e : left) side.push_back(e.role == "a");
  } else {
    throw PreconditionError("unknown graph claim '" + claim + "'");
  }

  const auto lw = Window::over(lp, left);
  const auto rw = Window::over(rp, right);
  const auto g = side.empty() ? complement(comparability_graph(lw))
                              : bipartite_complement(comparability_graph(lw), side);
  const auto h = comparability_graph(rw);
  std::vector<std::size_t> shipped(left.size());
  for (std::size_t i = 0; i < shipped.size(); ++i) shipped[i] = i;

  GraphClaimResult r;
  r.claim = claim;
  r.vertices = left.size();
  r.shipped_ok = is_isomorphism(g, h, shipped);
  r.search_ok = graphs_isomorphic(g, h).has_value();
  return r;
}

}  // namespace revposet

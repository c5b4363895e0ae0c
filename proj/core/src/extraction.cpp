#include "revposet/extraction.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <variant>

#include "revposet/error.hpp"

namespace revposet {

std::string to_string(Rel r) {
  switch (r) {
    case Rel::Less: return "<";
    case Rel::Greater: return ">";
    case Rel::Equal: return "=";
    case Rel::Incomparable: return "incomparable";
    case Rel::Equivalent: return "equivalent";
  }
  return "?";
}

Rel relation(const PosetPresentation& p, const ElementId& a, const ElementId& b) {
  if (a == b) return Rel::Equal;
  const bool ab = p.leq_unchecked(a, b);
  const bool ba = p.leq_unchecked(b, a);
  if (ab && ba) return Rel::Equivalent;
  if (ab) return Rel::Less;
  if (ba) return Rel::Greater;
  return Rel::Incomparable;
}

bool InfinityOracle::tail_holds(const std::function<bool(std::int64_t)>& pred,
                                std::int64_t from) const {
  const auto h = static_cast<std::int64_t>(horizon_);
  for (auto k = from + h / 2; k < from + h; ++k)
    if (pred(k)) return true;
  return false;
}

bool InfinityOracle::decide(const std::string& query, bool answer) {
  if (!exact_) assumptions_.push_back({query, answer});
  return answer;
}

bool InfinityOracle::infinitely_many(const std::string& query,
                                     const std::function<bool(std::int64_t)>& pred,
                                     std::int64_t from) {
  return decide(query, tail_holds(pred, from));
}

bool InfinityOracle::infinitely_many_integers(const std::string& query,
                                              const std::function<bool(std::int64_t)>& pred) {
  return decide(query, tail_holds(pred, 0) ||
                           tail_holds([&](std::int64_t k) { return pred(-k); }, 0));
}

std::optional<std::int64_t> InfinityOracle::find_first(
    const std::string& query, const std::function<bool(std::int64_t)>& pred, std::int64_t from) {
  const auto h = static_cast<std::int64_t>(horizon_);
  for (auto k = from; k < from + h; ++k)
    if (pred(k)) return k;
  decide(query, false);
  return std::nullopt;
}

namespace {

/// Two-sided orbit of one element, memoized in both directions.
class Orbit {
 public:
  Orbit(SelfMap f, ElementId x) : f_(std::move(f)) {
    pos_.push_back(x);
    neg_.push_back(std::move(x));
  }

  ElementId at(std::int64_t k) {
    if (k >= 0) {
      const auto i = static_cast<std::size_t>(k);
      while (pos_.size() <= i) pos_.push_back(f_(pos_.back()));
      return pos_[i];
    }
    const auto i = static_cast<std::size_t>(-k);
    while (neg_.size() <= i) neg_.push_back(f_.inverse(neg_.back()));
    return neg_[i];
  }

 private:
  SelfMap f_;
  std::vector<ElementId> pos_;
  std::vector<ElementId> neg_;
};

/// x^(k * stride): the orbit of x under f^stride.
struct OrbitView {
  std::shared_ptr<Orbit> orbit;
  std::int64_t stride = 1;

  ElementId operator()(std::int64_t k) const { return orbit->at(k * stride); }
  OrbitView powered(std::int64_t n) const { return {orbit, stride * n}; }
};

OrbitView make_orbit(const SelfMap& f, const ElementId& x) {
  return {std::make_shared<Orbit>(f, x), 1};
}

/// A presentation possibly replaced by its dual. Certificates built in a
/// dual frame are turned back into certificates for the original order.
struct Frame {
  PosetPresentation p;
  bool dualized = false;

  Frame flipped() const { return {dual(p), !dualized}; }
  bool leq(const ElementId& a, const ElementId& b) const { return p.leq_unchecked(a, b); }
  Rel rel(const ElementId& a, const ElementId& b) const { return relation(p, a, b); }
  bool less(const ElementId& a, const ElementId& b) const { return rel(a, b) == Rel::Less; }
};

using Embedding = std::function<ElementId(const ElementId&)>;

ForbiddenCertificate in_frame(const Frame& fr, ForbiddenKind kind, Embedding e,
                              std::string provenance) {
  ForbiddenCertificate c;
  c.kind = kind;
  c.embedding = std::move(e);
  c.provenance = std::move(provenance);
  if (!fr.dualized) return c;
  if (is_self_dual(kind.family)) {
    auto sigma = self_duality(kind.family);
    auto inner = c.embedding;
    c.embedding = [inner, sigma](const ElementId& x) { return inner(sigma(x)); };
  } else {
    c.kind = kind.dual();
  }
  return c;
}

[[noreturn]] void unknown_role(const ElementId& x) {
  throw InvalidElement("no such canonical element " + x.label(), x.role);
}

/// Indices (in the order given by `order`) at which `pred` holds; the n-th
/// one is found on demand.
class Selector {
 public:
  Selector(std::function<bool(std::int64_t)> pred, std::function<std::int64_t(std::uint64_t)> order,
           std::size_t limit, std::string what)
      : pred_(std::move(pred)), order_(std::move(order)), limit_(limit), what_(std::move(what)) {}

  std::int64_t nth(std::size_t n) {
    while (found_.size() <= n) {
      if (pos_ > limit_ * (n + 1))
        throw Exhausted("selection of " + what_ + " ran past the search limit",
                        std::to_string(found_.size()) + " found");
      const auto k = order_(pos_++);
      if (pred_(k)) found_.push_back(k);
    }
    return found_[n];
  }

 private:
  std::function<bool(std::int64_t)> pred_;
  std::function<std::int64_t(std::uint64_t)> order_;
  std::size_t limit_;
  std::string what_;
  std::uint64_t pos_ = 0;
  std::vector<std::int64_t> found_;
};

std::int64_t natural_order(std::uint64_t n) { return static_cast<std::int64_t>(n); }

std::optional<int> case_of(Rel ru, Rel rv) {
  using R = Rel;
  if (ru == R::Greater) {
    if (rv == R::Equal) return 1;
    if (rv == R::Greater) return 2;
    if (rv == R::Less) return 3;
    if (rv == R::Incomparable) return 4;
  }
  if (ru == R::Less) {
    if (rv == R::Less) return 5;
    if (rv == R::Incomparable) return 6;
  }
  if (ru == R::Equal) {
    if (rv == R::Less) return 7;
    if (rv == R::Incomparable) return 8;
  }
  if (ru == R::Incomparable) {
    if (rv == R::Equal) return 9;
    if (rv == R::Greater) return 10;
    if (rv == R::Less) return 11;
    if (rv == R::Incomparable) return 12;
  }
  return std::nullopt;
}

Rel flip(Rel r) {
  if (r == Rel::Less) return Rel::Greater;
  if (r == Rel::Greater) return Rel::Less;
  return r;
}

bool is_mirrored_case(int c) { return c == 5 || c == 7 || c == 9 || c == 10 || c == 11; }

class Engine {
 public:
  Engine(const Budget& budget, InfinityOracle& oracle) : budget_(budget), oracle_(oracle) {}

  ForbiddenCertificate poset(const PosetPresentation& p, const SelfMap& f, ElementId u, ElementId v);
  ForbiddenCertificate preorder(const PosetPresentation& p, const SelfMap& f, ElementId x,
                                ElementId y);
  ForbiddenCertificate no_antichains(const Frame& fr, const Stream& a, const Stream& c);
  ForbiddenCertificate skyscraper(const Frame& fr, const Stream& a, const Stream& b,
                                  const Stream& w);
  ForbiddenCertificate case12(const Frame& fr, const OrbitView& U, const OrbitView& V);

  std::string state() const {
    std::string s;
    for (const auto& t : trail_) s += (s.empty() ? "" : " > ") + t;
    return s.empty() ? "start" : s;
  }
  std::optional<int> top_case;

 private:
  ForbiddenCertificate dispatch(const Frame& fr, const OrbitView& U, const OrbitView& V, int depth);
  std::variant<std::int64_t, ForbiddenCertificate> descend(const Frame& fr, const OrbitView& X,
                                                           const std::string& name);
  ForbiddenCertificate finish(const Frame& fr, ForbiddenKind kind, Embedding e,
                              const std::string& step) {
    trail_.push_back(step);
    return in_frame(fr, kind, std::move(e), state());
  }
  std::int64_t h() const { return static_cast<std::int64_t>(budget_.horizon); }

  const Budget& budget_;
  InfinityOracle& oracle_;
  std::vector<std::string> trail_;
};

ForbiddenCertificate Engine::poset(const PosetPresentation& p, const SelfMap& f, ElementId u,
                                   ElementId v) {
  if (p.comparable(u, v))
    throw PreconditionError("pair is comparable: " + u.label() + ", " + v.label());
  auto fu = f(u);
  auto fv = f(v);
  const auto r = relation(p, fu, fv);
  if (r == Rel::Incomparable)
    throw PreconditionError("images are incomparable: " + fu.label() + ", " + fv.label());
  if (r == Rel::Less) std::swap(u, v);
  return dispatch(Frame{p, false}, make_orbit(f, u), make_orbit(f, v), 0);
}

ForbiddenCertificate Engine::dispatch(const Frame& fr, const OrbitView& U, const OrbitView& V,
                                      int depth) {
  if (depth > 12 || U.stride > h() * h()) throw Exhausted("reduction depth exceeded", state());
  const auto u = U(0);
  const auto v = V(0);
  const Rel ru = fr.rel(U(1), u);
  const Rel rv = fr.rel(V(1), v);
  if (ru == Rel::Equivalent || rv == Rel::Equivalent)
    throw Exhausted("an orbit meets a mutually related pair", state());
  const auto c = case_of(ru, rv);
  if (!c)
    throw PreconditionError("contradictory relations f(u) " + to_string(ru) + " u and f(v) " +
                            to_string(rv) + " v for u=" + u.label() + ", v=" + v.label());
  if (!top_case) top_case = *c;
  trail_.push_back("case " + std::to_string(*c) + (fr.dualized ? " (dual)" : "") +
                   (U.stride > 1 ? " (f^" + std::to_string(U.stride) + ")" : ""));
  if (is_mirrored_case(*c)) return dispatch(fr.flipped(), V, U, depth + 1);

  const std::pair<const OrbitView*, Rel> sides[] = {{&U, ru}, {&V, rv}};
  for (const auto& [X, r] : sides) {
    if (r != Rel::Incomparable) continue;
    const auto& orb = *X;
    const auto n = oracle_.find_first(
        "some power of f makes " + orb(0).label() + " comparable to its iterate",
        [&](std::int64_t k) { return fr.rel(orb(k), orb(0)) != Rel::Incomparable; }, 2);
    if (n) {
      trail_.push_back("power " + std::to_string(*n));
      return dispatch(fr, U.powered(*n), V.powered(*n), depth + 1);
    }
  }

  switch (*c) {
    case 1: {
      auto r = descend(fr, U, "u");
      if (auto* cert = std::get_if<ForbiddenCertificate>(&r)) return std::move(*cert);
      const auto d = std::get<std::int64_t>(r);
      return finish(fr, {Family::F5, false},
                    [U, V, d](const ElementId& x) {
                      if (x.role == "d") return V(0);
                      if (x.role == "b") return U(-d * x.index);
                      if (x.role == "c") return U(x.index + 1);
                      unknown_role(x);
                    },
                    "fixed point beside a descending chain");
    }
    case 2: {
      auto ru_chain = descend(fr, U, "u");
      if (auto* cert = std::get_if<ForbiddenCertificate>(&ru_chain)) return std::move(*cert);
      auto rv_chain = descend(fr, V, "v");
      if (auto* cert = std::get_if<ForbiddenCertificate>(&rv_chain)) return std::move(*cert);
      const auto d = std::lcm(std::get<std::int64_t>(ru_chain), std::get<std::int64_t>(rv_chain));
      trail_.push_back("skyscraper step " + std::to_string(d));
      return skyscraper(
          fr, [U, d](std::int64_t j) { return U(-d * j); },
          [V, d](std::int64_t j) { return V(-d * j); },
          [U](std::int64_t n) { return U(n + 1); });
    }
    case 3: {
      const auto n = oracle_.find_first(
          "u above some forward iterate of v",
          [&](std::int64_t k) { return fr.rel(u, V(k)) == Rel::Greater; }, 1);
      if (!n)
        return finish(fr, {Family::F5, false},
                      [U, V](const ElementId& x) {
                        if (x.role == "d") return U(0);
                        if (x.role == "b") return V(x.index + 1);
                        if (x.role == "c") return U(x.index + 1);
                        unknown_role(x);
                      },
                      "u beside the descending orbit of v");
      const auto dfr = fr.flipped();
      auto r = descend(dfr, V, "v");
      if (auto* cert = std::get_if<ForbiddenCertificate>(&r)) return std::move(*cert);
      const auto d = std::get<std::int64_t>(r);
      const auto m = *n;
      return finish(dfr, {Family::F5, false},
                    [U, V, d, m](const ElementId& x) {
                      if (x.role == "d") return U(0);
                      if (x.role == "b") return V(-d * x.index);
                      if (x.role == "c") return V(m + 1 + x.index);
                      unknown_role(x);
                    },
                    "u above the tail of v's orbit");
    }
    case 4:
      return no_antichains(fr, [V](std::int64_t k) { return V(-k); },
                    [U](std::int64_t n) { return U(n); });
    case 6:
      return no_antichains(fr.flipped(), [V](std::int64_t k) { return V(-k); },
                    [U](std::int64_t n) { return U(n); });
    case 8:
      return finish(fr, {Family::F2, true},
                    [U, V](const ElementId& x) {
                      if (x.role == "p") return U(0);
                      if (x.role == "x") return V(x.index + 1);
                      if (x.role == "y") return V(-x.index);
                      unknown_role(x);
                    },
                    "fixed point above the forward orbit of v");
    case 12:
      return case12(fr, U, V);
    default:
      break;
  }
  throw Exhausted("unreachable case", state());
}

std::variant<std::int64_t, ForbiddenCertificate> Engine::descend(const Frame& fr,
                                                                 const OrbitView& X,
                                                                 const std::string& name) {
  const std::int64_t span = std::max<std::int64_t>(2, h() / 8);
  const std::int64_t len = std::max<std::int64_t>(4, h() / 4);
  auto at = [&X](std::int64_t s, std::int64_t d, std::int64_t i) { return X(-(s + i * d)); };
  for (std::int64_t d = 1; d <= span; ++d) {
    for (std::int64_t s = 0; s < span; ++s) {
      bool anti = true;
      for (std::int64_t i = 1; i < len && anti; ++i)
        for (std::int64_t j = 0; j < i && anti; ++j)
          anti = fr.rel(at(s, d, i), at(s, d, j)) == Rel::Incomparable;
      if (!anti) continue;
      oracle_.decide("backward orbit of " + name + " contains an antichain progression", true);
      trail_.push_back("backward antichain of " + name);
      return no_antichains(
          fr, [X, s, d](std::int64_t i) { return X(-(s + i * d)); },
          [X](std::int64_t n) { return X(n + 1); });
    }
  }
  for (std::int64_t d = 1; d <= span; ++d) {
    for (std::int64_t s = 0; s < span; ++s) {
      bool chain = true;
      for (std::int64_t i = 0; i < len && chain; ++i)
        chain = fr.rel(at(s, d, i), at(s, d, i + 1)) == Rel::Greater;
      if (!chain) continue;
      oracle_.decide("backward orbit of " + name + " contains a descending progression", true);
      trail_.push_back("descending chain of " + name + " step " + std::to_string(d));
      return d;
    }
  }
  throw Exhausted("no chain or antichain progression in the backward orbit of " + name, state());
}

ForbiddenCertificate Engine::no_antichains(const Frame& fr, const Stream& a, const Stream& c) {
  for (std::int64_t i = 0; i < 8; ++i)
    for (std::int64_t j = 0; j < 8; ++j)
      if (fr.leq(c(j), a(i)))
        throw PreconditionError("chain element " + c(j).label() + " below antichain element " +
                                a(i).label());
  const auto limit = budget_.search_limit;
  const auto H = h();
  auto free = [fr, a, c, H](std::int64_t i) { return !fr.leq(a(i), c(4 * (i + H))); };
  if (oracle_.infinitely_many("infinitely many antichain elements below no chain element", free)) {
    auto sel = std::make_shared<Selector>(free, natural_order, limit, "free antichain elements");
    return finish(fr, {Family::F1, false},
                  [a, c, sel](const ElementId& x) {
                    if (x.role == "a") return a(sel->nth(static_cast<std::size_t>(x.index)));
                    if (x.role == "c") return c(x.index);
                    unknown_role(x);
                  },
                  "no_antichains_extract(i)");
  }
  auto below_of = [fr, a, c](std::int64_t j) {
    return [fr, a, c, j](std::int64_t i) { return fr.leq(a(i), c(j)); };
  };
  // Antichain elements below c_j are sampled far past index j, so that a
  // chain element with only finitely many elements below does not qualify.
  std::optional<std::int64_t> rich;
  for (std::int64_t j = 0; j < H && !rich; ++j)
    if (oracle_.tail_holds(below_of(j), 4 * (j + H))) rich = j;
  if (oracle_.decide("some chain element has infinitely many antichain elements below",
                     rich.has_value())) {
    const auto j = *rich;
    auto sel = std::make_shared<Selector>(below_of(j), natural_order, limit,
                                          "antichain elements below a chain element");
    return finish(fr, {Family::F4, false},
                  [a, c, sel, j](const ElementId& x) {
                    if (x.role == "a") return a(sel->nth(static_cast<std::size_t>(x.index)));
                    if (x.role == "c") return c(j + x.index);
                    unknown_role(x);
                  },
                  "no_antichains_extract(ii)");
  }

  struct Greedy {
    Frame fr;
    Stream a, c;
    std::size_t limit;
    std::vector<std::int64_t> ai, cj;

    void ensure(std::size_t n) {
      while (ai.size() <= n) {
        std::int64_t i = ai.empty() ? 0 : ai.back() + 1;
        std::size_t tries = 0;
        if (!cj.empty()) {
          const auto top = c(cj.back());
          while (fr.leq(a(i), top)) {
            ++i;
            if (++tries > limit) throw Exhausted("no fresh antichain element", "greedy F7");
          }
        }
        std::int64_t j = cj.empty() ? 0 : cj.back() + 1;
        const auto ae = a(i);
        tries = 0;
        while (!fr.leq(ae, c(j))) {
          ++j;
          if (++tries > limit) throw Exhausted("no chain element above " + ae.label(), "greedy F7");
        }
        ai.push_back(i);
        cj.push_back(j);
      }
    }
  };
  auto g = std::make_shared<Greedy>(Greedy{fr, a, c, limit, {}, {}});
  return finish(fr, {Family::F7, false},
                [a, c, g](const ElementId& x) {
                  const auto n = static_cast<std::size_t>(x.index);
                  g->ensure(n);
                  if (x.role == "a") return a(g->ai[n]);
                  if (x.role == "c") return c(g->cj[n]);
                  unknown_role(x);
                },
                "no_antichains_extract(iii)");
}

ForbiddenCertificate Engine::skyscraper(const Frame& fr, const Stream& a, const Stream& b,
                                        const Stream& w) {
  for (std::int64_t i = 0; i < 16; ++i)
    if (fr.rel(a(i), b(i)) != Rel::Incomparable)
      throw PreconditionError("skyscraper columns meet at level " + std::to_string(i) + ": " +
                              a(i).label() + ", " + b(i).label());
  // x_i is covered by y_J when J is the largest j < i with x_i < y_j and the
  // next element x_{i-1} of its own column is not below y_J.
  auto cover = [fr](Stream x, Stream y) {
    return [fr, x, y](std::int64_t i) -> bool {
      for (auto j = i - 1; j >= 0; --j)
        if (fr.less(x(i), y(j))) return i == 0 || !fr.less(x(i - 1), y(j));
      return false;
    };
  };
  const auto ab = cover(a, b);
  const auto ba = cover(b, a);
  const bool inf_ab = oracle_.infinitely_many("infinitely many a-below-b coverings", ab, 1);
  const bool inf_ba = oracle_.infinitely_many("infinitely many b-below-a coverings", ba, 1);
  if (!inf_ab || !inf_ba) {
    const bool use_ab = !inf_ab;
    const Stream x = use_ab ? a : b;
    const Stream y = use_ab ? b : a;
    const auto cov = use_ab ? ab : ba;
    std::int64_t I = 0;
    for (std::int64_t i = 1; i < 2 * h(); ++i)
      if (cov(i)) I = i;
    return finish(fr, {Family::F5, false},
                  [x, y, w, I](const ElementId& e) {
                    if (e.role == "d") return y(I);
                    if (e.role == "b") return x(I + e.index);
                    if (e.role == "c") return w(e.index);
                    unknown_role(e);
                  },
                  std::string("skyscraper_extract(finite ") + (use_ab ? "a-b" : "b-a") +
                      " coverings, I=" + std::to_string(I) + ")");
  }

  struct Ladder {
    Frame fr;
    Stream a, b;
    std::size_t limit;
    std::vector<std::int64_t> k{0};

    std::int64_t first_below(const ElementId& top, const Stream& col) const {
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(limit); ++j)
        if (fr.less(col(j), top)) return j;
      throw Exhausted("no column element below " + top.label(), "skyscraper recursion");
    }
    std::int64_t get(std::size_t n) {
      while (k.size() <= n) {
        const auto kn = k.back();
        k.push_back(std::max(first_below(a(kn), b), first_below(b(kn), a)));
      }
      return k[n];
    }
  };
  auto lad = std::make_shared<Ladder>(Ladder{fr, a, b, budget_.search_limit, {0}});
  return finish(fr, {Family::F6, false},
                [a, b, w, lad](const ElementId& e) {
                  if (e.role == "a") return a(lad->get(static_cast<std::size_t>(e.index)));
                  if (e.role == "b") return b(lad->get(static_cast<std::size_t>(e.index)));
                  if (e.role == "c") return w(e.index);
                  unknown_role(e);
                },
                "skyscraper_extract(both coverings infinite)");
}

ForbiddenCertificate Engine::case12(const Frame& fr, const OrbitView& U, const OrbitView& V) {
  for (std::int64_t n = -6; n <= 6; ++n)
    for (std::int64_t k = -6; k <= 6; ++k)
      if (fr.leq(U(k), V(n)))
        throw PreconditionError("two-level structure violated: " + V(n).label() + " >= " +
                                U(k).label());
  const auto limit = budget_.search_limit;
  const auto range = static_cast<std::uint64_t>(std::max<std::int64_t>(4, h() / 4));
  auto vu = [fr, U, V](std::int64_t m, std::int64_t n) { return fr.less(V(m), U(n)); };
  auto infinite_either_way = [this](const std::function<bool(std::int64_t)>& pred) {
    return oracle_.tail_holds(pred, 0) ||
           oracle_.tail_holds([&pred](std::int64_t m) { return pred(-m); }, 0);
  };
  auto both_infinite = [&](const std::function<bool(std::int64_t)>& in) {
    return infinite_either_way(in) &&
           infinite_either_way([&in](std::int64_t m) { return !in(m); });
  };
  auto split = [&](const OrbitView& top_or_bottom, const OrbitView& other, std::int64_t n,
                   bool above, std::function<bool(std::int64_t)> in) {
    auto in_sel = std::make_shared<Selector>(in, zigzag, limit, "related orbit elements");
    auto out_sel = std::make_shared<Selector>([in](std::int64_t m) { return !in(m); }, zigzag,
                                              limit, "unrelated orbit elements");
    return finish(fr, {Family::F2, above},
                  [top_or_bottom, other, n, in_sel, out_sel](const ElementId& x) {
                    if (x.role == "p") return top_or_bottom(n);
                    if (x.role == "x") return other(in_sel->nth(static_cast<std::size_t>(x.index)));
                    if (x.role == "y") return other(out_sel->nth(static_cast<std::size_t>(x.index)));
                    unknown_role(x);
                  },
                  std::string("case12_extract(i) at ") + (above ? "u^" : "v^") + std::to_string(n));
  };
  for (std::uint64_t t = 0; t < range; ++t) {
    const auto n = zigzag(t);
    std::function<bool(std::int64_t)> in = [vu, n](std::int64_t m) { return vu(m, n); };
    if (both_infinite(in)) {
      oracle_.decide("A(u^n) and B(u^n) both infinite for some n", true);
      return split(U, V, n, true, in);
    }
  }
  for (std::uint64_t t = 0; t < range; ++t) {
    const auto n = zigzag(t);
    std::function<bool(std::int64_t)> in = [vu, n](std::int64_t m) { return vu(n, m); };
    if (both_infinite(in)) {
      oracle_.decide("A(v^n) and B(v^n) both infinite for some n", true);
      return split(V, U, n, false, in);
    }
  }
  oracle_.decide("no orbit element splits the other orbit into two infinite parts", true);

  bool some_a_finite = false;
  for (std::uint64_t t = 0; t < range && !some_a_finite; ++t) {
    const auto n = zigzag(t);
    some_a_finite = !infinite_either_way([vu, n](std::int64_t m) { return vu(m, n); });
  }
  oracle_.decide("A(u^n) finite for some n", some_a_finite);
  const bool related = !some_a_finite;

  struct Levels {
    std::function<bool(std::int64_t, std::int64_t)> exception;
    std::int64_t horizon;
    std::int64_t limit;
    std::vector<std::int64_t> n{0};

    std::int64_t get(std::size_t m) {
      while (n.size() <= m) {
        const auto nm = n.back();
        auto next = nm + 1;
        const auto reach = 2 * nm + horizon;
        for (std::int64_t k = 0; k <= reach; ++k)
          if (exception(k, nm) || exception(-k, nm)) next = std::max(next, k + 1);
        if (next > limit)
          throw Exhausted("level boundaries ran past the search limit", std::to_string(n.size()) + " levels");
        n.push_back(next);
      }
      return n[m];
    }
  };
  auto exception = [vu, related](std::int64_t k, std::int64_t nm) {
    const bool r[] = {vu(nm, k), vu(-nm, k), vu(k, nm), vu(k, -nm)};
    for (bool x : r)
      if (x != related) return true;
    return false;
  };
  auto lv = std::make_shared<Levels>(Levels{exception, h(), static_cast<std::int64_t>(budget_.search_limit * budget_.horizon), {0}});
  auto level = [lv](std::int64_t m) { return lv->get(static_cast<std::size_t>(m)); };
  if (related) {
    return finish(fr, {Family::F8, false},
                  [U, V, level](const ElementId& x) {
                    const auto i = x.index;
                    const auto idx = i <= 0 ? -level(-2 * i) : level(2 * (i - 1) + 1);
                    if (x.role == "a") return V(idx);
                    if (x.role == "b") return U(idx);
                    unknown_role(x);
                  },
                  "case12_extract(ii)");
  }
  return finish(fr, {Family::F3, false},
                [U, V, level](const ElementId& x) {
                  if (x.role == "a") {
                    const auto m = x.index / 2;
                    return x.index % 2 == 0 ? U(-level(2 * m)) : V(-level(2 * m));
                  }
                  if (x.path.size() < 2) unknown_role(x);
                  const auto m = static_cast<std::int64_t>(x.path[1]);
                  if (x.role == "p") return V(level(2 * m + 1));
                  if (x.role == "q") return U(level(2 * m + 1));
                  unknown_role(x);
                },
                "case12_extract(iii)");
}

ForbiddenCertificate Engine::preorder(const PosetPresentation& p, const SelfMap& f, ElementId x,
                                      ElementId y) {
  auto fits = [&](const ElementId& s, const ElementId& t) {
    return !p.leq_unchecked(s, t) && p.leq_unchecked(f(s), f(t));
  };
  if (!fits(x, y)) {
    if (!fits(y, x))
      throw PreconditionError("pair is not a non-automorphism pair: " + x.label() + ", " +
                              y.label());
    std::swap(x, y);
  }
  if (!p.leq_unchecked(f(y), f(x))) {
    trail_.push_back("strict images");
    return poset(p, f, y, x);
  }
  const Frame fr{p, false};
  const std::int64_t len = std::max<std::int64_t>(4, h() / 4);
  for (const auto& base : {x, y}) {
    const auto X = make_orbit(f, base);
    std::optional<std::int64_t> d;
    for (std::int64_t k = 1; k <= h() && !d; ++k)
      if (fr.rel(X(1), X(1 + k)) == Rel::Equivalent) d = k;
    if (!d) continue;
    const auto step = *d;
    std::int64_t k0 = 0;
    while (k0 <= h() && (fr.rel(X(-k0 * step), X(1)) == Rel::Equivalent ||
                         X(-k0 * step) == X(1)))
      ++k0;
    const Stream Z = [X, step](std::int64_t j) { return X(1 + j * step); };
    const Stream W = [X, step, k0](std::int64_t i) { return X(-(k0 + i) * step); };
    bool anti = true, up = true, down = true;
    for (std::int64_t i = 0; i < len; ++i) {
      for (std::int64_t j = 0; j < i; ++j) anti = anti && fr.rel(W(i), W(j)) == Rel::Incomparable;
      up = up && fr.rel(W(i), W(i + 1)) == Rel::Less;
      down = down && fr.rel(W(i), W(i + 1)) == Rel::Greater;
    }
    bool above = true, below = true, apart = true;
    for (std::int64_t i = 0; i < len; ++i)
      for (std::int64_t j = 0; j < len; ++j) {
        const auto r = fr.rel(W(i), Z(j));
        above = above && r == Rel::Greater;
        below = below && r == Rel::Less;
        apart = apart && r == Rel::Incomparable;
      }
    std::optional<ForbiddenKind> kind;
    if (anti && above) kind = ForbiddenKind{Family::G1, false};
    if (anti && below) kind = ForbiddenKind{Family::G1, true};
    if (anti && apart) kind = ForbiddenKind{Family::G2, false};
    if (up && above) kind = ForbiddenKind{Family::G3, false};
    if (down && below) kind = ForbiddenKind{Family::G3, true};
    if (!kind) continue;
    oracle_.decide("orbit cluster and backward orbit keep their shape", true);
    const std::string other = kind->family == Family::G3 ? "c" : "a";
    return finish(fr, *kind,
                  [Z, W, other](const ElementId& e) {
                    if (e.role == "z") return Z(e.index);
                    if (e.role == other) return W(e.index);
                    unknown_role(e);
                  },
                  "cluster beside the backward orbit of " + base.label());
  }
  const auto U = make_orbit(f, x);
  const auto V = make_orbit(f, y);
  oracle_.decide("paired clusters beside an antichain", true);
  return finish(fr, {Family::G4, false},
                [U, V](const ElementId& e) {
                  if (e.role == "a") return e.index % 2 == 0 ? U(-e.index / 2) : V(-e.index / 2);
                  if (e.role == "z" && e.path.size() >= 2) {
                    const auto i = static_cast<std::int64_t>(e.path[1]) + 1;
                    return e.index == 0 ? U(i) : V(i);
                  }
                  unknown_role(e);
                },
                "paired clusters");
}

}  // namespace

std::optional<std::size_t> OrbitProfile::first_comparable() const {
  for (std::size_t d = 0; d < forward.size(); ++d)
    if (forward[d] != Rel::Incomparable) return d + 1;
  return std::nullopt;
}

OrbitProfile orbit_profile(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                           std::size_t horizon) {
  OrbitProfile prof;
  prof.base = x;
  prof.horizon = horizon;
  auto y = x;
  for (std::size_t d = 1; d <= horizon; ++d) {
    y = f(y);
    prof.forward.push_back(relation(p, x, y));
  }
  return prof;
}

ChainOrAntichain chain_or_antichain(const PosetPresentation& p, const std::vector<ElementId>& seq,
                                    std::size_t length) {
  std::vector<std::size_t> rest(seq.size());
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<std::size_t> chain, anti;
  while (!rest.empty()) {
    const auto pivot = rest.front();
    std::vector<std::size_t> comp, inc;
    for (std::size_t k = 1; k < rest.size(); ++k)
      (p.comparable(seq[pivot], seq[rest[k]]) ? comp : inc).push_back(rest[k]);
    if (comp.size() >= inc.size()) {
      chain.push_back(pivot);
      rest = std::move(comp);
    } else {
      anti.push_back(pivot);
      rest = std::move(inc);
    }
    if (chain.size() >= length) return {true, chain};
    if (anti.size() >= length) return {false, anti};
  }
  throw Exhausted("neither a chain nor an antichain of length " + std::to_string(length),
                  "chain " + std::to_string(chain.size()) + ", antichain " +
                      std::to_string(anti.size()));
}

std::vector<std::int64_t> descending_chain_in_downset(const std::vector<std::int64_t>& k) {
  std::vector<std::int64_t> out;
  out.reserve(k.size());
  for (auto ki : k) out.push_back(k.front() - ki);
  return out;
}

ForbiddenCertificate no_antichains_extract(const PosetPresentation& p, const Stream& a,
                                           const Stream& c, InfinityOracle& oracle,
                                           const Budget& budget) {
  Engine e(budget, oracle);
  auto cert = e.no_antichains(Frame{p, false}, a, c);
  cert.assumptions = oracle.assumptions();
  return cert;
}

ForbiddenCertificate skyscraper_extract(const PosetPresentation& p, const Stream& a,
                                        const Stream& b, const Stream& w, InfinityOracle& oracle,
                                        const Budget& budget) {
  Engine e(budget, oracle);
  auto cert = e.skyscraper(Frame{p, false}, a, b, w);
  cert.assumptions = oracle.assumptions();
  return cert;
}

ForbiddenCertificate case12_extract(const PosetPresentation& p, const SelfMap& f,
                                    const ElementId& u, const ElementId& v, InfinityOracle& oracle,
                                    const Budget& budget) {
  Engine e(budget, oracle);
  auto cert = e.case12(Frame{p, false}, make_orbit(f, u), make_orbit(f, v));
  cert.assumptions = oracle.assumptions();
  return cert;
}

CaseInfo case_classify(const PosetPresentation& p, const SelfMap& f, const ElementId& u,
                       const ElementId& v) {
  if (p.comparable(u, v))
    throw PreconditionError("pair is comparable: " + u.label() + ", " + v.label());
  const auto fu0 = f(u);
  const auto fv0 = f(v);
  const auto r = relation(p, fu0, fv0);
  if (r == Rel::Incomparable || r == Rel::Equivalent)
    throw PreconditionError("images are not strictly comparable: " + fu0.label() + ", " +
                            fv0.label());
  CaseInfo info;
  info.swapped = r == Rel::Less;
  const auto& uu = info.swapped ? v : u;
  const auto& vv = info.swapped ? u : v;
  info.ru = relation(p, f(uu), uu);
  info.rv = relation(p, f(vv), vv);
  const auto c = case_of(info.ru, info.rv);
  if (!c)
    throw PreconditionError("contradictory relations f(u) " + to_string(info.ru) + " u and f(v) " +
                            to_string(info.rv) + " v for u=" + uu.label() + ", v=" + vv.label());
  info.case_id = *c;
  if (is_mirrored_case(*c)) info.normalized_to = case_of(flip(info.rv), flip(info.ru));
  return info;
}

ForbiddenCertificate extract_forbidden(const PosetPresentation& p, const SelfMap& f,
                                       const ElementId& u, const ElementId& v,
                                       const Budget& budget) {
  for (const auto& x : {u, v})
    if (auto bad = p.validate(x)) throw InvalidElement("invalid element " + x.label(), *bad);
  if (auto rep = is_order_preserving(p, f, budget.window); !rep)
    throw PreconditionError("map is not order-preserving on the window: " + rep.condition);
  InfinityOracle oracle(p.is_structured() && f.is_structured(), budget.horizon);
  Engine engine(budget, oracle);
  auto cert = p.is_preorder() ? engine.preorder(p, f, u, v) : engine.poset(p, f, u, v);
  cert.case_id = engine.top_case;
  cert.assumptions = oracle.assumptions();
  const auto rep = verify_certificate(p, cert, budget.window);
  if (!rep)
    throw Exhausted("certificate failed verification (" + rep.condition + ")", cert.provenance);
  cert.verified_window = budget.window;
  return cert;
}

CheckReport check_orbit_transport(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                                  std::size_t horizon) {
  const auto X = make_orbit(f, x);
  const auto H = static_cast<std::int64_t>(horizon);
  for (std::int64_t m = 0; m <= H; ++m)
    for (std::int64_t n = m + 1; n <= H; ++n)
      if (p.comparable(X(-m), X(-n)) && !p.comparable(x, X(n - m)))
        return CheckReport::fail("orbit_transport", {X(-m), X(-n)},
                                 "base incomparable to " + X(n - m).label());
  return CheckReport::pass();
}

CheckReport check_backward_no_ascent(const PosetPresentation& p, const SelfMap& f,
                                     const ElementId& x, std::size_t horizon) {
  if (relation(p, f(x), x) != Rel::Greater) return CheckReport::pass();
  const auto X = make_orbit(f, x);
  const auto H = static_cast<std::int64_t>(horizon);
  for (std::int64_t k = 0; k <= H; ++k)
    for (std::int64_t n = k + 1; n <= H; ++n)
      if (relation(p, X(-n), X(-k)) == Rel::Greater)
        return CheckReport::fail("backward_ascent", {X(-n), X(-k)});
  return CheckReport::pass();
}

CheckReport check_index_shift(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                              std::size_t horizon) {
  const auto X = make_orbit(f, x);
  const auto H = static_cast<std::int64_t>(horizon);
  const std::int64_t span = std::max<std::int64_t>(2, H / 8);
  const std::int64_t len = std::max<std::int64_t>(4, H / 8);
  for (std::int64_t d = 1; d <= span; ++d)
    for (std::int64_t s = 0; s < span; ++s) {
      std::vector<std::int64_t> k;
      bool chain = true;
      for (std::int64_t i = 0; i <= len && chain; ++i) {
        k.push_back(s + i * d);
        if (i < len) chain = relation(p, X(-(s + i * d)), X(-(s + (i + 1) * d))) == Rel::Greater;
      }
      if (!chain) continue;
      const auto shifted = descending_chain_in_downset(k);
      for (std::size_t i = 0; i < shifted.size(); ++i) {
        const auto e = X(shifted[i]);
        if (!p.leq_unchecked(e, x)) return CheckReport::fail("index_shift_downset", {e, x});
        if (i + 1 < shifted.size() && relation(p, e, X(shifted[i + 1])) != Rel::Greater)
          return CheckReport::fail("index_shift_chain", {e, X(shifted[i + 1])});
      }
    }
  return CheckReport::pass();
}

}  // namespace revposet

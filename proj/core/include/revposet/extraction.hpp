#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "revposet/catalog.hpp"
#include "revposet/element.hpp"
#include "revposet/maps.hpp"
#include "revposet/presentation.hpp"

namespace revposet {

/// Relation of a to b: a < b, a > b, a = b, incomparable, or (preorders)
/// mutually related but distinct.
enum class Rel { Less, Greater, Equal, Incomparable, Equivalent };
std::string to_string(Rel r);
Rel relation(const PosetPresentation& p, const ElementId& a, const ElementId& b);

/// Search limits. `horizon` bounds orbit and oracle scans, `window` the
/// verification prefix, `search_limit` every unbounded minimum search.
struct Budget {
  std::size_t horizon = 64;
  std::size_t window = 50;
  std::size_t search_limit = 4096;
};

/// An oracle answer that was decided by a finite scan rather than by
/// structure.
struct Assumption {
  std::string query;
  bool answer = false;
};

/// Decides "infinitely many" and "exists" questions about index-described
/// element streams by scanning `horizon` indices. When `exact` is set (the
/// presentation and the map are both structured, hence eventually periodic
/// in the indices) the scan is conclusive; otherwise every answer is
/// recorded as an assumption.
class InfinityOracle {
 public:
  InfinityOracle(bool exact, std::size_t horizon) : exact_(exact), horizon_(horizon) {}

  bool exact() const { return exact_; }
  std::size_t horizon() const { return horizon_; }

  /// pred holds for infinitely many k >= from: decided by whether it holds
  /// somewhere in the second half of [from, from + horizon).
  bool infinitely_many(const std::string& query, const std::function<bool(std::int64_t)>& pred,
                       std::int64_t from = 0);
  /// pred holds for infinitely many integers k (in either direction).
  bool infinitely_many_integers(const std::string& query,
                                const std::function<bool(std::int64_t)>& pred);
  /// Smallest k in [from, from + horizon) with pred. A negative answer is an
  /// assumption unless exact.
  std::optional<std::int64_t> find_first(const std::string& query,
                                         const std::function<bool(std::int64_t)>& pred,
                                         std::int64_t from = 0);

  /// pred holds somewhere in the second half of [from, from + horizon);
  /// records nothing.
  bool tail_holds(const std::function<bool(std::int64_t)>& pred, std::int64_t from) const;
  /// Records `answer` as an assumption unless exact; returns it.
  bool decide(const std::string& query, bool answer);

  const std::vector<Assumption>& assumptions() const { return assumptions_; }

 private:
  bool exact_;
  std::size_t horizon_;
  std::vector<Assumption> assumptions_;
};

/// Relation of base to base^d for d = 1..horizon.
struct OrbitProfile {
  ElementId base;
  std::size_t horizon = 0;
  /// forward[d - 1] = relation(base, base^d).
  std::vector<Rel> forward;

  /// Smallest d with base comparable to base^d.
  std::optional<std::size_t> first_comparable() const;
};

OrbitProfile orbit_profile(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                           std::size_t horizon);

/// Either an infinite chain or an infinite antichain, as positions in the
/// input stream.
struct ChainOrAntichain {
  bool chain = false;
  std::vector<std::size_t> indices;
};

/// Greedy Ramsey extraction: pivots split the remaining stream into
/// comparable and incomparable parts. Throws Exhausted when neither colour
/// reaches `length`.
ChainOrAntichain chain_or_antichain(const PosetPresentation& p, const std::vector<ElementId>& seq,
                                    std::size_t length);

/// A descending chain x^{-k_0} > x^{-k_1} > ... in the backward orbit moves
/// into x's down-set as x^{k_0 - k_i}. Returns the exponents k_0 - k_i.
std::vector<std::int64_t> descending_chain_in_downset(const std::vector<std::int64_t>& k);

/// An element-valued stream indexed by naturals.
using Stream = std::function<ElementId(std::int64_t)>;

/// A claimed induced embedding of forbidden(kind) into a target.
struct ForbiddenCertificate {
  ForbiddenKind kind;
  std::function<ElementId(const ElementId&)> embedding;
  std::vector<Assumption> assumptions;
  /// Dispatcher case 1..12; empty for preorder extractions and sub-procedure
  /// calls.
  std::optional<int> case_id;
  std::string provenance;
  std::size_t verified_window = 0;
};

/// Injectivity and two-way order equivalence on the first n canonical
/// elements of cert.kind. Conditions: "embedding_missing",
/// "embedding_invalid", "injectivity", "order_preservation",
/// "order_reflection".
CheckReport verify_certificate(const PosetPresentation& p, const ForbiddenCertificate& cert,
                               std::size_t n);

/// Antichain A and ascending chain C with no c <= a yield F1, F4 or F7.
ForbiddenCertificate no_antichains_extract(const PosetPresentation& p, const Stream& a,
                                           const Stream& c, InfinityOracle& oracle,
                                           const Budget& budget);

/// Descending chains A and B with a_i incomparable to b_i, below every
/// element of the ascending chain W, yield F5 or F6.
ForbiddenCertificate skyscraper_extract(const PosetPresentation& p, const Stream& a,
                                        const Stream& b, const Stream& w, InfinityOracle& oracle,
                                        const Budget& budget);

/// Both orbits are antichains, f(u) > f(v): yields F2, F2d, F8 or F3.
ForbiddenCertificate case12_extract(const PosetPresentation& p, const SelfMap& f,
                                    const ElementId& u, const ElementId& v, InfinityOracle& oracle,
                                    const Budget& budget);

/// Dispatcher case for a pair u, v with u incomparable to v and f(u) > f(v)
/// (the pair is swapped first if f(u) < f(v)).
struct CaseInfo {
  int case_id = 0;
  Rel ru = Rel::Incomparable;  ///< relation of f(u) to u
  Rel rv = Rel::Incomparable;  ///< relation of f(v) to v
  bool swapped = false;
  /// Case reached after dualizing and swapping u, v (for 5, 7, 9, 10, 11).
  std::optional<int> normalized_to;
};

/// Throws PreconditionError for comparable u, v, incomparable images, or one
/// of the four contradictory relation combinations.
CaseInfo case_classify(const PosetPresentation& p, const SelfMap& f, const ElementId& u,
                       const ElementId& v);

/// Full pipeline. For preorders the pair may be given in either order; it
/// must satisfy not(u <= v) and f(u) <= f(v) one way round. The result has
/// passed verify_certificate at budget.window.
ForbiddenCertificate extract_forbidden(const PosetPresentation& p, const SelfMap& f,
                                       const ElementId& u, const ElementId& v,
                                       const Budget& budget = {});

/// x^{-m} ~ x^{-n} implies x ~ x^{|m-n|}, for m, n <= horizon.
CheckReport check_orbit_transport(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                                  std::size_t horizon);
/// For f(x) > x: no x^{-n} > x^{-k} with n > k <= horizon. Passes vacuously
/// when f(x) is not above x.
CheckReport check_backward_no_ascent(const PosetPresentation& p, const SelfMap& f,
                                     const ElementId& x, std::size_t horizon);
/// For every descending progression x^{-(s + i d)} found within the horizon,
/// the shifted exponents form a descending chain inside x's down-set.
CheckReport check_index_shift(const PosetPresentation& p, const SelfMap& f, const ElementId& x,
                              std::size_t horizon);

/// {"kind", "dual", "case", "assumptions", "embedding", "verified_window",
/// "provenance"}; the embedding lists the first `prefix` canonical elements.
std::string certificate_to_json(const ForbiddenCertificate& cert, std::size_t prefix);
/// The embedding becomes a finite table; canonical elements outside it fail
/// verification as "embedding_missing".
ForbiddenCertificate certificate_from_json(const std::string& text);

}  // namespace revposet

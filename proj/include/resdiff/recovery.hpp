#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resdiff/polynomial.hpp"
#include "resdiff/rational.hpp"

namespace resdiff {

/// Multiplicity candidate from the chain R(f, f^(k)), k = 1, 2, ...
///
/// The chain is computed on `reduced`, the factor left after splitting off
/// z^zero_root_multiplicity. It stops at the first nonzero value, and s_max
/// is that k (1 means squarefree, 0 means no nonzero roots at all). For k >= 2
/// a zero R(f, f^(k)) can come from a simple root of f that happens to be a
/// root of f^(k), so s_max is an upper bound to be certified, not a fact.
struct MultiplicityReport {
  int zero_root_multiplicity = 0;
  Polynomial reduced;
  std::vector<std::pair<int, Rational>> chain;
  int s_max = 0;
};

enum class Route {
  SimpleCommon,  // first partials of R(f, g), simple common root
  FirstOrder,    // A-side gradient of R(f, f^(s-1))
  HigherOrder,   // order-s B-side partials of R(f, f')
  PairMultiple,  // order-s / order-p partials of R(f, g)
};

std::string_view to_string(Route route);

struct Condition {
  std::string name;
  Rational value;
  bool passed = false;
};

/// A recovered root with every condition that was checked, in order.
/// `failure` names the first failing condition; when it is empty the root
/// has been confirmed by direct evaluation of f, f', ..., f^(s).
struct RootCertificate {
  Route route = Route::HigherOrder;
  std::optional<Rational> root;
  int multiplicity_in_f = 0;
  std::optional<int> multiplicity_in_g;
  std::vector<Condition> conditions;
  bool verified = false;
  std::string failure;

  bool certified() const { return verified && failure.empty(); }
};

/// Throws MalformedPolynomial for the zero polynomial and DegenerateInput
/// for constants.
MultiplicityReport detect_multiplicity(const Polynomial& f);

/// Unique simple common root from first partials of R(f, g):
/// w = (dR/da_{n-1}) / (dR/da_n), cross-checked against the b-side ratio.
/// Requires nonzero constant terms (BadRequest otherwise).
RootCertificate simple_common_root(const Polynomial& f, const Polynomial& g);

/// Root of multiplicity s from the a-side gradient of R(f, f^(s-1)), which
/// must be proportional to [w^n, ..., w, 1]. Other roots may have
/// multiplicity below s.
RootCertificate recover_first_order(const Polynomial& f, int s);

/// Root of multiplicity s from order-s partials of R(f, f') with respect to
/// the coefficients b of f'. Checks R(f, f^(s-1)) = 0, R(f, f^(s)) != 0 and
/// d^sR/db_{n-1}^s != 0, then
///   w = (d^sR / db_{n-1}^(s-1) db_{n-2}) / (d^sR / db_{n-1}^s).
/// Needs every other root to be simple.
RootCertificate recover_higher_order(const Polynomial& f, int s);

/// Single common root of multiplicity s in f and p in g, from an order-s
/// b-side ratio and an order-p a-side ratio that must agree.
RootCertificate common_multiple_root(const Polynomial& f, const Polynomial& g, int s, int p);

struct Analysis {
  MultiplicityReport report;
  /// Multiplicity the certificates were built for (0 when none was attempted).
  int multiplicity = 0;
  std::optional<RootCertificate> first_order;
  std::optional<RootCertificate> higher_order;
  std::optional<Rational> root;
  bool routes_agree = true;

  /// The higher-order certificate if it certified, else the first-order one.
  const RootCertificate* certificate() const;
};

/// Split zero roots, detect the multiplicity candidate and, if it is at
/// least 2, run both recovery routes. Candidates are tried from s_max
/// downwards until one certifies.
Analysis analyze(const Polynomial& f);

}  // namespace resdiff

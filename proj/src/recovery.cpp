#include "resdiff/recovery.hpp"

#include "resdiff/calculus.hpp"
#include "resdiff/errors.hpp"
#include "resdiff/resultant.hpp"

namespace resdiff {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::SimpleCommon: return "simple_common";
    case Route::FirstOrder: return "first_order";
    case Route::HigherOrder: return "higher_order";
    case Route::PairMultiple: return "pair_multiple";
  }
  return "unknown";
}

namespace {

class CertificateBuilder {
 public:
  explicit CertificateBuilder(Route route) { cert_.route = route; }

  /// Records a condition; returns false (and remembers the failure) if it fails.
  bool check(std::string name, const Rational& value, bool passed) {
    cert_.conditions.push_back({name, value, passed});
    if (!passed && cert_.failure.empty()) cert_.failure = std::move(name);
    return passed;
  }
  bool require_zero(std::string name, const Rational& value) {
    return check(std::move(name), value, value.is_zero());
  }
  bool require_nonzero(std::string name, const Rational& value) {
    return check(std::move(name), value, !value.is_zero());
  }

  /// p^(k)(w) = 0 for k < mult and p^(mult)(w) != 0.
  bool check_multiplicity(const std::string& label, const Polynomial& p, const Rational& w, int mult) {
    for (int k = 0; k < mult; ++k) {
      if (!require_zero(label + "^(" + std::to_string(k) + ")(w) = 0", evaluate(derivative(p, k), w))) {
        return false;
      }
    }
    return require_nonzero(label + "^(" + std::to_string(mult) + ")(w) != 0",
                           evaluate(derivative(p, mult), w));
  }

  RootCertificate& cert() { return cert_; }
  RootCertificate finish() { return std::move(cert_); }

 private:
  RootCertificate cert_;
};

void require_nonzero_constant_term(const Polynomial& p, const char* what) {
  if (p.is_zero()) throw MalformedPolynomial("zero polynomial");
  if (p.constant_term().is_zero()) {
    throw BadRequest(std::string(what) + " has a zero constant term; split off z^k first");
  }
}

std::vector<int> repeated(int index, int times) { return std::vector<int>(static_cast<std::size_t>(times), index); }

/// Index multiset {top x (order-1), top-1} over {top x order}: the ratio is w.
std::pair<DerivativeRequest, DerivativeRequest> canonical_ratio(Side side, int top, int order) {
  DerivativeRequest den{side, repeated(top, order)};
  DerivativeRequest num{side, repeated(top, order - 1)};
  num.indices.push_back(top - 1);
  return {num, den};
}

std::string power_name(char var, int index, int order) {
  std::string s = "d";
  if (order > 1) s += "^" + std::to_string(order);
  s += "R/d";
  s += var;
  s += "_" + std::to_string(index);
  if (order > 1) s += "^" + std::to_string(order);
  return s;
}

}  // namespace

MultiplicityReport detect_multiplicity(const Polynomial& f) {
  if (f.is_zero()) throw MalformedPolynomial("zero polynomial");
  if (f.degree() < 1) throw DegenerateInput("multiplicity of a constant polynomial");
  auto [zeros, reduced] = trailing_zero_split(f);
  MultiplicityReport report{zeros, reduced, {}, 0};
  for (int k = 1; k <= reduced.degree(); ++k) {
    Rational r = resultant(reduced, derivative(reduced, k));
    const bool nonzero = !r.is_zero();
    report.chain.emplace_back(k, std::move(r));
    if (nonzero) {
      report.s_max = k;
      break;
    }
  }
  return report;
}

RootCertificate simple_common_root(const Polynomial& f, const Polynomial& g) {
  require_nonzero_constant_term(f, "f");
  require_nonzero_constant_term(g, "g");
  const int n = f.degree();
  const int m = g.degree();
  if (n < 1 || m < 1) throw DegenerateInput("common root needs nonconstant f and g");
  CertificateBuilder b(Route::SimpleCommon);
  b.cert().multiplicity_in_f = 1;
  b.cert().multiplicity_in_g = 1;
  if (!b.require_zero("R(f, g) = 0", resultant(f, g))) return b.finish();
  const Rational dbm = partial(f, g, {Side::B, {m}});
  if (!b.require_nonzero(power_name('b', m, 1) + " != 0", dbm)) return b.finish();
  const Rational dan = partial(f, g, {Side::A, {n}});
  if (!b.require_nonzero(power_name('a', n, 1) + " != 0", dan)) return b.finish();
  const Rational w = partial(f, g, {Side::A, {n - 1}}) / dan;
  const Rational w_b = partial(f, g, {Side::B, {m - 1}}) / dbm;
  b.cert().root = w;
  if (!b.require_zero("a-ratio - b-ratio = 0", w - w_b)) return b.finish();
  b.cert().verified = b.check_multiplicity("f", f, w, 1) && b.check_multiplicity("g", g, w, 1);
  return b.finish();
}

RootCertificate recover_first_order(const Polynomial& f, int s) {
  require_nonzero_constant_term(f, "f");
  const int n = f.degree();
  if (s < 2 || s > n) throw BadRequest("multiplicity claim must satisfy 2 <= s <= deg f");
  CertificateBuilder b(Route::FirstOrder);
  b.cert().multiplicity_in_f = s;
  for (int k = 1; k < s; ++k) {
    if (!b.require_zero("R(f, f^(" + std::to_string(k) + ")) = 0", resultant(f, derivative(f, k)))) {
      return b.finish();
    }
  }
  const Polynomial fd = derivative(f, s - 1);
  const std::vector<Rational> grad = gradient(f, fd, Side::A);
  const auto last = static_cast<std::size_t>(n);
  if (!b.require_nonzero(power_name('a', n, 1) + " != 0", grad[last])) return b.finish();
  const Rational w = grad[last - 1] / grad[last];
  b.cert().root = w;
  // gradient must be grad[n] * [w^n, ..., w, 1]
  long mismatches = 0;
  Rational expected = grad[last];
  for (std::size_t j = last + 1; j-- > 0;) {
    if (grad[j] != expected) ++mismatches;
    expected *= w;
  }
  if (!b.require_zero("gradient mismatches against [w^n..1]", Rational(mismatches))) return b.finish();
  b.cert().verified = b.check_multiplicity("f", f, w, s);
  return b.finish();
}

RootCertificate recover_higher_order(const Polynomial& f, int s) {
  require_nonzero_constant_term(f, "f");
  const int n = f.degree();
  if (s < 2 || s > n) throw BadRequest("multiplicity claim must satisfy 2 <= s <= deg f");
  CertificateBuilder b(Route::HigherOrder);
  b.cert().multiplicity_in_f = s;
  const auto sk = [](int k) { return std::to_string(k); };
  if (!b.require_zero("R(f, f^(" + sk(s - 1) + ")) = 0", resultant(f, derivative(f, s - 1)))) {
    return b.finish();
  }
  if (!b.require_nonzero("R(f, f^(" + sk(s) + ")) != 0", resultant(f, derivative(f, s)))) {
    return b.finish();
  }
  const Polynomial fd = derivative(f);
  const auto [num, den] = canonical_ratio(Side::B, n - 1, s);
  const Rational d = partial(f, fd, den);
  if (!b.require_nonzero(power_name('b', n - 1, s) + " != 0", d)) return b.finish();
  const Rational w = partial(f, fd, num) / d;
  b.cert().root = w;
  b.cert().verified = b.check_multiplicity("f", f, w, s);
  return b.finish();
}

RootCertificate common_multiple_root(const Polynomial& f, const Polynomial& g, int s, int p) {
  require_nonzero_constant_term(f, "f");
  require_nonzero_constant_term(g, "g");
  const int n = f.degree();
  const int m = g.degree();
  if (n < 1 || m < 1) throw DegenerateInput("common root needs nonconstant f and g");
  if (s < 1 || s > n || p < 1 || p > m) throw BadRequest("multiplicities must satisfy 1 <= s <= n, 1 <= p <= m");
  CertificateBuilder b(Route::PairMultiple);
  b.cert().multiplicity_in_f = s;
  b.cert().multiplicity_in_g = p;
  if (!b.require_zero("R(f, g) = 0", resultant(f, g))) return b.finish();

  const auto [num_b, den_b] = canonical_ratio(Side::B, m, s);
  const Rational db = partial(f, g, den_b);
  if (!b.require_nonzero(power_name('b', m, s) + " != 0", db)) return b.finish();
  const Rational w = partial(f, g, num_b) / db;
  b.cert().root = w;

  const auto [num_a, den_a] = canonical_ratio(Side::A, n, p);
  const Rational da = partial(f, g, den_a);
  if (!b.require_nonzero(power_name('a', n, p) + " != 0", da)) return b.finish();
  const Rational w_a = partial(f, g, num_a) / da;
  if (!b.require_zero("b-ratio - a-ratio = 0", w - w_a)) return b.finish();
  b.cert().verified = b.check_multiplicity("f", f, w, s) && b.check_multiplicity("g", g, w, p);
  return b.finish();
}

const RootCertificate* Analysis::certificate() const {
  if (higher_order && higher_order->certified()) return &*higher_order;
  if (first_order && first_order->certified()) return &*first_order;
  if (higher_order) return &*higher_order;
  if (first_order) return &*first_order;
  return nullptr;
}

Analysis analyze(const Polynomial& f) {
  Analysis a;
  a.report = detect_multiplicity(f);
  if (a.report.s_max < 2) return a;
  const Polynomial& reduced = a.report.reduced;
  for (int s = a.report.s_max; s >= 2; --s) {
    RootCertificate first = recover_first_order(reduced, s);
    RootCertificate higher = recover_higher_order(reduced, s);
    const bool any = first.certified() || higher.certified();
    if (any || s == a.report.s_max) {
      a.multiplicity = s;
      a.first_order = std::move(first);
      a.higher_order = std::move(higher);
    }
    if (any) break;
  }
  const bool fo = a.first_order && a.first_order->certified();
  const bool ho = a.higher_order && a.higher_order->certified();
  if (fo && ho) a.routes_agree = *a.first_order->root == *a.higher_order->root;
  if (ho) {
    a.root = a.higher_order->root;
  } else if (fo) {
    a.root = a.first_order->root;
  }
  if (!fo && !ho) a.multiplicity = a.report.s_max;
  return a;
}

}  // namespace resdiff

#include "resdiff/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resdiff/calculus.hpp"
#include "resdiff/errors.hpp"
#include "resdiff/recovery.hpp"
#include "resdiff/resultant.hpp"

namespace resdiff::cli {

using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view token) {
  const std::string t(token);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(t, "expected a nonnegative integer");
  }
  if (t.size() > 9) throw ParseError(t, "integer too large");
  return std::stoi(t);
}

ordered_json to_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

ordered_json to_json(const RootCertificate& c) {
  ordered_json conditions = ordered_json::array();
  for (const auto& cond : c.conditions) {
    conditions.push_back({{"name", cond.name}, {"value", cond.value.to_string()}, {"passed", cond.passed}});
  }
  return {
      {"route", std::string(to_string(c.route))},
      {"root", c.root ? ordered_json(c.root->to_string()) : ordered_json(nullptr)},
      {"multiplicity_in_f", c.multiplicity_in_f},
      {"multiplicity_in_g", c.multiplicity_in_g ? ordered_json(*c.multiplicity_in_g) : ordered_json(nullptr)},
      {"conditions", conditions},
      {"verified", c.verified},
      {"certified", c.certified()},
      {"failure", c.failure.empty() ? ordered_json(nullptr) : ordered_json(c.failure)},
  };
}

ordered_json chain_json(const MultiplicityReport& r) {
  ordered_json chain = ordered_json::array();
  for (const auto& [k, v] : r.chain) chain.push_back(ordered_json::array({k, v.to_string()}));
  return chain;
}

std::string describe(const RootCertificate& c) {
  std::ostringstream os;
  os << to_string(c.route) << ": ";
  if (c.certified()) {
    os << "certified root " << c.root->to_string();
  } else {
    os << "not certified (" << c.failure << ")";
  }
  os << '\n';
  for (const auto& cond : c.conditions) {
    os << "  [" << (cond.passed ? "ok" : "FAIL") << "] " << cond.name << "  value " << cond.value << '\n';
  }
  return os.str();
}

struct Options {
  std::string f, g, roots_f, roots_g, wrt, indices, format = "text";
  std::optional<int> s, p;
};

class Runner {
 public:
  explicit Runner(const Options& o) : opt_(o) {}

  Outcome dispatch(const std::string& command) {
    doc_["command"] = command;
    doc_["inputs"] = ordered_json::object();
    doc_["result"] = nullptr;
    doc_["certificate"] = nullptr;
    doc_["chain"] = ordered_json::array();
    if (command == "resultant") return resultant_cmd();
    if (command == "discriminant") return discriminant_cmd();
    if (command == "partial") return partial_cmd();
    if (command == "analyze") return analyze_cmd();
    if (command == "check") return check_cmd();
    return cross_check_cmd();
  }

 private:
  Polynomial poly(const std::string& coeffs, const std::string& roots, const char* name, bool required = true) {
    const bool has_c = !coeffs.empty();
    const bool has_r = !roots.empty();
    if (has_c && has_r) throw BadRequest(std::string("give either --") + name + " or --roots-" + name + ", not both");
    if (!has_c && !has_r) {
      if (required) throw BadRequest(std::string("missing --") + name + " or --roots-" + name);
      return Polynomial();
    }
    Polynomial p = has_c ? parse_poly_arg(coeffs) : poly_from_roots(parse_roots_arg(roots));
    doc_["inputs"][name] = to_json(p.coefficients());
    return p;
  }

  Polynomial f() { return poly(opt_.f, opt_.roots_f, "f"); }
  Polynomial g(bool required = true) { return poly(opt_.g, opt_.roots_g, "g", required); }

  DerivativeRequest request() {
    if (opt_.wrt != "a" && opt_.wrt != "b") throw BadRequest("--wrt must be a or b");
    if (opt_.indices.empty()) throw BadRequest("missing --indices");
    DerivativeRequest req{opt_.wrt == "a" ? Side::A : Side::B, {}};
    for (auto tok : split(opt_.indices, ',')) req.indices.push_back(parse_int(tok));
    doc_["inputs"]["wrt"] = opt_.wrt;
    doc_["inputs"]["indices"] = req.indices;
    return req;
  }

  Outcome emit(int code, const std::string& text) {
    Outcome o;
    o.exit_code = code;
    o.out = opt_.format == "json" ? doc_.dump(2) + "\n" : text;
    return o;
  }

  Outcome scalar(const Rational& value) {
    doc_["result"] = value.to_string();
    return emit(kOk, value.to_string() + "\n");
  }

  Outcome resultant_cmd() {
    const Polynomial a = f();
    const Polynomial b = g();
    return scalar(resultant(a, b));
  }

  Outcome discriminant_cmd() { return scalar(discriminant(f())); }

  Outcome partial_cmd() {
    const Polynomial a = f();
    const Polynomial b = g();
    return scalar(partial(a, b, request()));
  }

  Outcome analyze_cmd() {
    const Analysis a = analyze(f());
    const auto& r = a.report;
    doc_["chain"] = chain_json(r);
    ordered_json result = {
        {"zero_root_multiplicity", r.zero_root_multiplicity},
        {"reduced", to_json(r.reduced.coefficients())},
        {"s_max", r.s_max},
        {"multiplicity", a.multiplicity},
        {"root", a.root ? ordered_json(a.root->to_string()) : ordered_json(nullptr)},
        {"routes_agree", a.routes_agree},
        {"routes", ordered_json::object()},
    };
    std::ostringstream text;
    text << "zero_root_multiplicity: " << r.zero_root_multiplicity << '\n';
    for (const auto& [k, v] : r.chain) text << "R(f, f^(" << k << ")) = " << v << '\n';
    text << "s_max: " << r.s_max << '\n';
    for (const auto* c : {&a.first_order, &a.higher_order}) {
      if (!*c) continue;
      result["routes"][std::string(to_string((*c)->route))] = to_json(**c);
      text << describe(**c);
    }
    if (a.root) text << "root: " << a.root->to_string() << " (multiplicity " << a.multiplicity << ")\n";
    doc_["result"] = result;
    if (const RootCertificate* c = a.certificate()) doc_["certificate"] = to_json(*c);
    const bool attempted = r.s_max >= 2;
    const bool ok = !attempted || (a.root.has_value() && a.routes_agree);
    return emit(ok ? kOk : kNotCertified, text.str());
  }

  Outcome check_cmd() {
    const Polynomial a = f();
    const Polynomial b = g(false);
    std::vector<RootCertificate> certs;
    if (b.is_zero()) {
      if (!opt_.s) throw BadRequest("check on a single polynomial needs --s");
      doc_["inputs"]["s"] = *opt_.s;
      certs.push_back(recover_first_order(a, *opt_.s));
      certs.push_back(recover_higher_order(a, *opt_.s));
    } else if (!opt_.s && !opt_.p) {
      certs.push_back(simple_common_root(a, b));
    } else {
      const int s = opt_.s.value_or(1);
      const int p = opt_.p.value_or(s);
      doc_["inputs"]["s"] = s;
      doc_["inputs"]["p"] = p;
      certs.push_back(common_multiple_root(a, b, s, p));
    }
    std::string text;
    ordered_json all = ordered_json::array();
    const RootCertificate* best = nullptr;
    for (const auto& c : certs) {
      text += describe(c);
      all.push_back(to_json(c));
      if (c.certified() && !best) best = &c;
    }
    doc_["result"] = {{"certificates", all}};
    doc_["certificate"] = to_json(best ? *best : certs.front());
    return emit(best ? kOk : kNotCertified, text);
  }

  Outcome cross_check_cmd() {
    const Polynomial a = f();
    const Polynomial b = g(false);
    std::ostringstream text;
    bool agree = true;
    ordered_json partials = ordered_json::array();
    const auto compare = [&](const Polynomial& x, const Polynomial& y, const DerivativeRequest& req, const std::string& label) {
      const Rational jet = partial(x, y, req);
      const Rational rows = partial_rowsum(x, y, req);
      const bool same = jet == rows;
      agree = agree && same;
      partials.push_back({{"request", label}, {"jet", jet.to_string()}, {"rowsum", rows.to_string()}, {"agree", same}});
      text << label << ": jet " << jet << ", rowsum " << rows << (same ? "  ok" : "  MISMATCH") << '\n';
    };
    const auto label_of = [](const DerivativeRequest& req, const std::string& of) {
      std::string s = of + " wrt " + (req.side == Side::A ? "a" : "b") + " {";
      for (std::size_t i = 0; i < req.indices.size(); ++i) s += (i ? "," : "") + std::to_string(req.indices[i]);
      return s + "}";
    };

    if (!b.is_zero()) {
      const DerivativeRequest req = request();
      compare(a, b, req, label_of(req, "R(f, g)"));
    }

    const Analysis an = analyze(a);
    doc_["chain"] = chain_json(an.report);
    bool routes_ok = true;
    ordered_json routes = ordered_json::object();
    if (an.report.s_max >= 2) {
      const Polynomial& red = an.report.reduced;
      const int n = red.degree();
      const int s = an.multiplicity;
      const Polynomial fd = derivative(red);
      DerivativeRequest den{Side::B, std::vector<int>(static_cast<std::size_t>(s), n - 1)};
      DerivativeRequest num = den;
      num.indices.back() = n - 2;
      compare(red, fd, den, label_of(den, "R(f, f')"));
      compare(red, fd, num, label_of(num, "R(f, f')"));
      for (const auto* c : {&an.first_order, &an.higher_order}) {
        routes[std::string(to_string((*c)->route))] = to_json(**c);
        text << describe(**c);
      }
      const bool both = an.first_order->certified() && an.higher_order->certified();
      routes_ok = both && an.routes_agree;
      text << "routes: " << (routes_ok ? "both certified and equal" : "not in exact agreement") << '\n';
    }
    doc_["result"] = {{"partials", partials}, {"routes", routes}, {"agree", agree && routes_ok}};
    if (const RootCertificate* c = an.certificate()) doc_["certificate"] = to_json(*c);
    return emit(agree && routes_ok ? kOk : kNotCertified, text.str());
  }

  const Options& opt_;
  ordered_json doc_;
};

}  // namespace

Polynomial parse_poly_arg(std::string_view text) {
  if (trim(text).empty()) throw ParseError(std::string(text), "empty coefficient list");
  std::vector<Rational> coeffs;
  for (auto tok : split(text, ',')) coeffs.push_back(Rational::parse(tok));
  if (coeffs.front().is_zero()) throw ParseError(std::string(split(text, ',').front()), "leading coefficient is zero");
  return Polynomial(std::move(coeffs));
}

RootSpec parse_roots_arg(std::string_view text) {
  RootSpec spec;
  std::string_view body = trim(text);
  if (const auto at = body.find('@'); at != std::string_view::npos) {
    const std::string_view lead = trim(body.substr(at + 1));
    spec.leading = Rational::parse(lead);
    if (spec.leading.is_zero()) throw ParseError(std::string(lead), "leading coefficient is zero");
    body = trim(body.substr(0, at));
  }
  if (body.empty()) return spec;
  for (auto item : split(body, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(std::string(item), "expected root:multiplicity");
    const std::string_view mult = trim(item.substr(colon + 1));
    const int m = parse_int(mult);
    if (m < 1) throw ParseError(std::string(item), "multiplicity must be at least 1");
    spec.roots.push_back({Rational::parse(trim(item.substr(0, colon))), m});
  }
  return spec;
}

Outcome run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Exact resultants, resultant derivatives and multiple-root recovery", "resdiff"};
  app.require_subcommand(1);
  const auto add_common = [&](CLI::App* sub, bool needs_g) {
    sub->add_option("--f", opt.f, "coefficients of f, descending powers");
    sub->add_option("--roots-f", opt.roots_f, "roots of f as r:m,...[@leading]");
    if (needs_g) {
      sub->add_option("--g", opt.g, "coefficients of g, descending powers");
      sub->add_option("--roots-g", opt.roots_g, "roots of g as r:m,...[@leading]");
    }
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  const auto derivative_options = [&](CLI::App* sub) {
    sub->add_option("--wrt", opt.wrt, "differentiate by coefficients of f (a) or g (b)");
    sub->add_option("--indices", opt.indices, "coefficient indices j1,j2,...");
  };

  auto* res = app.add_subcommand("resultant", "R(f, g)");
  add_common(res, true);
  auto* disc = app.add_subcommand("discriminant", "D(f)");
  add_common(disc, false);
  auto* part = app.add_subcommand("partial", "mixed partial of R(f, g)");
  add_common(part, true);
  derivative_options(part);
  auto* an = app.add_subcommand("analyze", "detect and recover a multiple root of f");
  add_common(an, false);
  auto* check = app.add_subcommand("check", "certify a multiplicity claim or a common root");
  add_common(check, true);
  check->add_option("--s", opt.s, "multiplicity in f");
  check->add_option("--p", opt.p, "multiplicity in g (defaults to --s)");
  auto* cross = app.add_subcommand("cross-check", "compare both recovery routes and both derivative algorithms");
  add_common(cross, true);
  derivative_options(cross);

  Outcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kUsage;
    outcome.err = e.what() + std::string("\n");
    return outcome;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Runner runner(opt);
    return runner.dispatch(command);
  } catch (const ParseError& e) {
    outcome.exit_code = kUsage;
    outcome.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    outcome.exit_code = kUsage;
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace resdiff::cli

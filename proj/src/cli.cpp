#include "chow/cli.hpp"

#include "chow/selftest.hpp"
#include "chow/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace chow {

namespace {

using Q = PresentedElement<Rational>;

struct Options {
  bool json = false;
  int k = 2, n = 4;
  std::string lhs, rhs;
  std::optional<std::int64_t> a, a_max;
  std::string spec;
  std::int64_t bound = 3;
  std::optional<std::int64_t> horizon;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

/// "V", "W1", "W2", "P_alpha", "P_beta", or a partition "2,1" ("0" is the unit).
SchubertElement parse_schubert(const GrassmannianShape& shape, const std::string& text) {
  if (text.empty()) throw InputError("empty Schubert class");
  if (std::isalpha(static_cast<unsigned char>(text.front()))) return named_class(shape, parse_named_class(text));
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad partition '" + text + "'");
    }
    if (used != item.size()) throw InputError("bad partition '" + text + "'");
    parts.push_back(v);
  }
  return SchubertElement::schubert_class(shape, Partition(parts));
}

int schubert_mult(const Options& o, std::ostream& out) {
  const GrassmannianShape shape(o.k, o.n);
  const auto lhs = parse_schubert(shape, o.lhs);
  const auto rhs = parse_schubert(shape, o.rhs);
  const auto product = lr_multiply(lhs, rhs);
  if (o.json) {
    Json j;
    j["k"] = o.k;
    j["n"] = o.n;
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    j["product"] = to_json(product);
    j["degree"] = to_json(poincare_pair(lhs, rhs));
    emit(out, j);
  } else {
    out << "G(" << o.k << ";" << o.n << "): (" << to_string(lhs) << ") * (" << to_string(rhs) << ") = "
        << to_string(product) << "\n";
    out << "degree: " << poincare_pair(lhs, rhs) << "\n";
  }
  return kSuccess;
}

int q_ring_report(const Options& o, std::ostream& out) {
  const auto& ring = q_ring();
  const auto named = [&](std::string_view m) { return Q::monomial(ring, m); };
  std::vector<std::pair<std::string, Q>> checks{
      {"H^4", named("H^4")},
      {"R*H^3", named("R*H^3")},
      {"R^4", named("R^4")},
      {"R^3*H", named("R^3*H")},
      {"R^2*H^2", named("R^2*H^2")},
      {"P_alpha", alpha_plane_class_q()},
      {"P_beta", beta_plane_class_q()},
      {"P_alpha*P_beta", alpha_plane_class_q() * beta_plane_class_q()},
      {"R^2*P_alpha", named("R^2") * alpha_plane_class_q()},
      {"R^2*P_beta", named("R^2") * beta_plane_class_q()},
      {"P_alpha^2", alpha_plane_class_q() * alpha_plane_class_q()},
      {"P_beta^2", beta_plane_class_q() * beta_plane_class_q()},
  };
  std::vector<std::pair<std::string, Q>> relations;
  for (const auto& rule : ring->rules()) {
    std::vector<std::pair<Exponents, Rational>> raw(rule.rhs.begin(), rule.rhs.end());
    relations.emplace_back(ring->format_monomial(rule.lead), reduce(ring, raw));
  }

  if (o.json) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : ring->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& [lead, rhs] : relations) rels.push_back({{"lead", lead}, {"rhs", to_json(rhs)}});
    j["relations"] = std::move(rels);
    j["graded_dimensions"] = ring->graded_dimensions();
    Json basis = Json::array();
    for (int d = 0; d <= ring->top_degree(); ++d) {
      Json row = Json::array();
      for (const auto& m : ring->basis(d)) row.push_back(ring->format_monomial(m));
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    j["point"] = ring->format_monomial(*ring->point());
    Json c = Json::object();
    for (const auto& [name, value] : checks) c[name] = to_json(value);
    j["classes"] = std::move(c);
    emit(out, j);
    return kSuccess;
  }
  out << "generators:";
  for (const auto& g : ring->generators()) out << " " << g.name << " (degree " << g.degree << ")";
  out << "\nrelations:\n";
  for (const auto& [lead, rhs] : relations) out << "  " << lead << " = " << to_string(rhs) << "\n";
  out << "graded dimensions:";
  for (auto d : ring->graded_dimensions()) out << " " << d;
  out << "\nbasis:\n";
  for (int d = 0; d <= ring->top_degree(); ++d) {
    out << "  degree " << d << ":";
    for (const auto& m : ring->basis(d)) out << " " << ring->format_monomial(m);
    out << "\n";
  }
  out << "point: " << ring->format_monomial(*ring->point()) << "\n";
  for (const auto& [name, value] : checks) out << name << " = " << to_string(value) << "\n";
  return kSuccess;
}

int todd_report(const Options& o, std::ostream& out) {
  const auto& TQ = tangent_class_q();
  const auto& TP = tangent_class_p2();
  const auto tdQ = todd_class(TQ);
  const auto tdP = todd_class(TP);
  if (o.json) {
    Json j;
    j["c_T_P2"] = to_json(TP.chern);
    j["td_T_P2"] = to_json(tdP);
    j["c_T_Q_rel"] = to_json(relative_tangent_class_q().chern);
    j["c_T_Q"] = to_json(TQ.chern);
    j["td_T_Q"] = to_json(tdQ);
    emit(out, j);
  } else {
    out << "c(T_P2) = " << to_string(TP.chern) << "\n";
    out << "td(T_P2) = " << to_string(tdP) << "\n";
    out << "c(T_Q/P2) = " << to_string(relative_tangent_class_q().chern) << "\n";
    for (int i = 1; i <= 4; ++i) out << "c" << i << "(T_Q) = " << to_string(TQ.c(i)) << "\n";
    out << "td(T_Q) = " << to_string(tdQ) << "\n";
  }
  return kSuccess;
}

int chi_report(const Options& o, std::ostream& out) {
  const auto p2 = projective_plane_context<Rational>();
  const auto q = q_context<Rational>();
  std::vector<std::pair<std::int64_t, Rational>> plane;
  for (std::int64_t d = -3; d <= 3; ++d) plane.emplace_back(d, euler_characteristic(p2, line_bundle_p2(d)));
  const Rational chi_OQ = euler_characteristic(q, BundleClass<Rational>::trivial(q_ring(), Rational(1)));

  Polynomial chi_E, chi_sum, chi_E0;
  if (o.a) {
    const auto chis = compute_chis(derive_constants(Rational(*o.a)));
    chi_E = chis.chi_E;
    chi_sum = chis.chi_sum;
    chi_E0 = chis.chi_E0;
  } else {
    const auto chis = compute_chis(derive_constants(Polynomial::variable()));
    chi_E = chis.chi_E;
    chi_sum = chis.chi_sum;
    chi_E0 = chis.chi_E0;
  }
  const bool numeric = o.a.has_value();
  if (o.json) {
    Json j;
    Json pl = Json::array();
    for (const auto& [d, v] : plane) pl.push_back({{"d", d}, {"chi", to_json(v)}});
    j["chi_O_P2"] = std::move(pl);
    j["chi_O_Q"] = to_json(chi_OQ);
    j["a"] = numeric ? Json(*o.a) : Json("a");
    j["chi_E"] = scalar_json(chi_E, numeric);
    j["chi_sum"] = scalar_json(chi_sum, numeric);
    j["chi_E0"] = scalar_json(chi_E0, numeric);
    emit(out, j);
  } else {
    for (const auto& [d, v] : plane) out << "chi(O_P2(" << d << ")) = " << v << "\n";
    out << "chi(O_Q) = " << chi_OQ << "\n";
    if (numeric) out << "a = " << *o.a << "\n";
    out << "chi_E = " << chi_E << "\nchi_sum = " << chi_sum << "\nchi_E0 = " << chi_E0 << "\n";
  }
  return kSuccess;
}

void print_verdict_text(const MonadVerdict& v, std::ostream& out) {
  out << "a: " << (v.a ? std::to_string(*v.a) : std::string("a")) << "\n";
  out << "d: " << v.d << "\nc: " << v.c << "\nb: " << v.b << "\n";
  out << "c1(E1): " << to_string(v.c1_E1) << "\nc2(E1): " << to_string(v.c2_E1) << "\n";
  for (int i = 0; i < 4; ++i) out << "twist_e" << i + 1 << ": " << to_string(v.twist_e[i]) << "\n";
  out << "monad_e: " << v.monad_e << "\n";
  out << "c2 identity: " << (v.c2_identity_holds ? "holds" : "fails") << "\n";
  out << "f(t) = c_t(p*E0): " << (v.f_matches_e0 ? "holds" : "fails") << "\n";
  out << "chi_E: " << v.chi_E << "\nchi_sum: " << v.chi_sum << "\nchi_E0: " << v.chi_E0 << "\nphi: " << v.phi << "\n";
  if (v.phi_factorization) out << "phi factored: " << to_string(*v.phi_factorization) << "\n";
  for (const auto& f : v.integrality_failures) out << "non-integral " << f.quantity << ": " << f.value << "\n";
  out << "conclusion: " << to_string(v.conclusion) << "\n";
}

int monad_verify(const Options& o, std::ostream& out) {
  if (o.a && o.a_max) throw InputError("--a and --a-max are mutually exclusive");
  if (o.a_max) {
    const auto verdicts = verify_nonexistence(*o.a_max);
    const bool all_excluded = std::all_of(verdicts.begin(), verdicts.end(), [](const MonadVerdict& v) {
      return v.conclusion == Conclusion::ExcludedByPhi || v.conclusion == Conclusion::ExcludedByIntegrality;
    });
    if (o.json) {
      Json j;
      j["a_max"] = *o.a_max;
      j["all_excluded"] = all_excluded;
      Json list = Json::array();
      for (const auto& v : verdicts) list.push_back(to_json(v));
      j["verdicts"] = std::move(list);
      emit(out, j);
    } else {
      for (const auto& v : verdicts) {
        out << "a = " << *v.a << ": " << to_string(v.conclusion);
        for (const auto& f : v.integrality_failures) out << " (" << f.quantity << " = " << f.value << ")";
        out << "\n";
      }
      out << (all_excluded ? "all excluded" : "some a not excluded") << "\n";
    }
    return all_excluded ? kSuccess : kVerificationFailure;
  }

  const MonadVerdict v = o.a ? monad_verdict(*o.a) : monad_verdict_symbolic();
  if (o.json) {
    emit(out, to_json(v));
  } else {
    print_verdict_text(v, out);
  }
  if (!v.c2_identity_holds || !v.f_matches_e0) return kVerificationFailure;
  return v.conclusion == Conclusion::NotExcluded ? kVerificationFailure : kSuccess;
}

int chain_check(const Options& o, std::ostream& out) {
  if (o.spec.empty()) throw InputError("chain-check needs --spec <path>");
  std::ifstream file(o.spec);
  if (!file) throw InputError("cannot read chain spec '" + o.spec + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  ChainSpec chain = parse_chain_spec_text(buffer.str());
  if (o.horizon) {
    if (*o.horizon < 1) throw InputError("--horizon must be positive");
    chain = chain.prefix(static_cast<std::size_t>(*o.horizon));
  }
  const auto c1 = c1_forcing(chain, o.bound);
  std::optional<TransitionMatrix> product;
  std::set<RootVector> roots;
  std::vector<RootVector> same_sign;
  if (chain.matrices) {
    product = product_matrix(chain, 0, chain.degrees.size() - 1);
    roots = feasible_c2(chain, o.bound);
    for (const auto& r : roots)
      if (small_same_sign(r, o.bound)) same_sign.push_back(r);
  }
  const std::int64_t delta = degree_product(chain);

  if (o.json) {
    Json j;
    j["degrees"] = chain.degrees;
    j["bound"] = o.bound;
    j["delta"] = delta;
    j["c1_forcing"] = c1;
    if (product) {
      j["product_matrix"] = to_json(*product);
      j["eigen_check"] = eigen_check(*product, delta);
      j["feasible_c2"] = to_json(roots);
      j["same_sign_within_bound"] = to_json(std::set<RootVector>(same_sign.begin(), same_sign.end()));
    }
    emit(out, j);
  } else {
    out << "steps: " << chain.degrees.size() << "\ndelta: " << delta << "\nc1 values:";
    for (auto v : c1) out << " " << v;
    out << "\n";
    if (product) {
      out << "A(0," << chain.degrees.size() - 1 << ") = [[" << (*product)(0, 0) << ", " << (*product)(0, 1) << "], ["
          << (*product)(1, 0) << ", " << (*product)(1, 1) << "]]\n";
      out << "eigen check: " << (eigen_check(*product, delta) ? "holds" : "fails") << "\n";
      out << "feasible c2 roots:";
      for (const auto& [x, y] : roots) out << " (" << x << ", " << y << ")";
      out << "\nsame-sign roots within bound: " << same_sign.size() << "\n";
    }
  }
  return kSuccess;
}

int selftest(const Options& o, std::ostream& out) {
  const auto results = run_selftest();
  const auto passed = std::count_if(results.begin(), results.end(), [](const GoldenResult& r) { return r.pass; });
  if (o.json) {
    Json j;
    Json list = Json::array();
    for (const auto& r : results)
      list.push_back({{"name", r.name}, {"pass", r.pass}, {"expected", r.expected}, {"actual", r.actual}});
    j["cases"] = std::move(list);
    j["passed"] = passed;
    j["total"] = results.size();
    emit(out, j);
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
      if (!r.pass) out << "  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
    }
    out << passed << "/" << results.size() << " passed\n";
  }
  return static_cast<std::size_t>(passed) == results.size() ? kSuccess : kVerificationFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chow-ring, Chern class and Riemann-Roch computations", "chowcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "emit JSON instead of text");

  auto* mult = app.add_subcommand("schubert-mult", "product of two Schubert classes on G(k;n)");
  mult->add_option("--k", o.k, "subspace dimension")->capture_default_str();
  mult->add_option("--n", o.n, "ambient dimension")->capture_default_str();
  mult->add_option("--lhs", o.lhs, "class: V, W1, W2, P_alpha, P_beta or a partition like 2,1")->required();
  mult->add_option("--rhs", o.rhs, "class: V, W1, W2, P_alpha, P_beta or a partition like 2,1")->required();

  auto* ring = app.add_subcommand("q-ring", "presentation of A(Q) and the plane classes");
  auto* todd = app.add_subcommand("todd", "Chern and Todd classes of T_P2 and T_Q");
  auto* chi = app.add_subcommand("chi", "Euler characteristics on P2 and Q");
  chi->add_option("--a", o.a, "evaluate at this a instead of symbolically");

  auto* monad = app.add_subcommand("monad-verify", "monad constants, Euler characteristics and verdicts");
  monad->add_option("--a", o.a, "numeric run at this a (default: symbolic in a)");
  monad->add_option("--a-max", o.a_max, "verdicts for a = 1..a-max");

  auto* chain = app.add_subcommand("chain-check", "c1 forcing and c2 feasibility along a chain");
  chain->add_option("--spec", o.spec, "chain spec JSON file")->required();
  chain->add_option("--bound", o.bound, "bound on tail entries")->capture_default_str();
  chain->add_option("--horizon", o.horizon, "use only the first N steps");

  auto* self = app.add_subcommand("selftest", "golden corpus of reference values");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*mult) return schubert_mult(o, out);
    if (*ring) return q_ring_report(o, out);
    if (*todd) return todd_report(o, out);
    if (*chi) return chi_report(o, out);
    if (*monad) return monad_verify(o, out);
    if (*chain) return chain_check(o, out);
    if (*self) return selftest(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kInputError;
}

} // namespace chow

#include "chow/serialize.hpp"

namespace chow {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json scalar_json(const Polynomial& p, bool collapse) {
  if (collapse && p.is_constant()) return to_json(p.coefficient(0));
  return to_json(p);
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SchubertElement& e) {
  Json out = Json::array();
  for (const auto& [lambda, c] : e.terms()) {
    Json term;
    term["partition"] = to_json(lambda);
    term["coefficient"] = to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const RationalFactorization& f) {
  Json out;
  out["identically_zero"] = f.identically_zero;
  out["leading"] = to_json(f.leading);
  Json roots = Json::array();
  for (const auto& [root, mult] : f.roots) roots.push_back({{"root", to_json(root)}, {"multiplicity", mult}});
  out["roots"] = std::move(roots);
  out["residual"] = to_json(f.residual);
  return out;
}

Json to_json(const MonadVerdict& v) {
  const bool numeric = v.a.has_value();
  const auto s = [&](const Polynomial& p) { return scalar_json(p, numeric); };
  const auto e = [&](const PresentedElement<Polynomial>& x) { return to_json(x, numeric); };

  Json out;
  out["mode"] = numeric ? "numeric" : "symbolic";
  out["a"] = numeric ? Json(*v.a) : Json("a");
  out["d"] = s(v.d);
  out["c"] = s(v.c);
  out["b"] = s(v.b);
  out["c1_E1"] = e(v.c1_E1);
  out["c2_E1"] = e(v.c2_E1);
  for (int i = 0; i < 4; ++i) out["twist_e" + std::to_string(i + 1)] = e(v.twist_e[i]);
  out["monad_e"] = s(v.monad_e);
  out["c2_identity_holds"] = v.c2_identity_holds;
  out["f_matches_e0"] = v.f_matches_e0;
  out["chi_E"] = s(v.chi_E);
  out["chi_sum"] = s(v.chi_sum);
  out["chi_E0"] = s(v.chi_E0);
  out["phi"] = s(v.phi);
  if (v.phi_factorization) out["phi_factorization"] = to_json(*v.phi_factorization);
  Json failures = Json::array();
  for (const auto& f : v.integrality_failures)
    failures.push_back({{"a", f.a}, {"quantity", f.quantity}, {"value", to_json(f.value)}});
  out["integrality_failures"] = std::move(failures);
  Json sides = Json::array();
  for (const auto& c : v.side_conditions)
    sides.push_back({{"quantity", c.quantity}, {"value", to_json(c.value)}, {"integral", c.integral}});
  out["side_conditions"] = std::move(sides);
  out["conclusion"] = std::string(to_string(v.conclusion));
  out["assumptions"] = v.assumptions;
  return out;
}

Json to_json(const std::set<RootVector>& roots) {
  Json out = Json::array();
  for (const auto& [x, y] : roots) out.push_back(Json::array({x, y}));
  return out;
}

Json to_json(const TransitionMatrix& M) {
  return Json::array({Json::array({M(0, 0), M(0, 1)}), Json::array({M(1, 0), M(1, 1)})});
}

namespace {

std::int64_t as_integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

} // namespace

ChainSpec parse_chain_spec(const Json& j) {
  if (!j.is_object()) throw InputError("chain spec must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "degrees" && key != "matrices") throw InputError("field '" + key + "' is not part of a chain spec");

  ChainSpec spec;
  if (!j.contains("degrees")) throw InputError("field 'degrees' is missing");
  const auto& degrees = j.at("degrees");
  if (!degrees.is_array()) throw InputError("field 'degrees' must be an array");
  for (std::size_t i = 0; i < degrees.size(); ++i)
    spec.degrees.push_back(as_integer(degrees[i], "degrees[" + std::to_string(i) + "]"));

  if (j.contains("matrices")) {
    const auto& matrices = j.at("matrices");
    if (!matrices.is_array()) throw InputError("field 'matrices' must be an array");
    std::vector<TransitionMatrix> list;
    for (std::size_t m = 0; m < matrices.size(); ++m) {
      const std::string where = "matrices[" + std::to_string(m) + "]";
      const auto& rows = matrices[m];
      if (!rows.is_array() || rows.size() != 2) throw InputError("field '" + where + "' must be a 2x2 array");
      TransitionMatrix A;
      for (int r = 0; r < 2; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != 2) throw InputError("field '" + rw + "' must have two entries");
        for (int c = 0; c < 2; ++c) A(r, c) = as_integer(row[static_cast<std::size_t>(c)], rw + "[" + std::to_string(c) + "]");
      }
      list.push_back(A);
    }
    spec.matrices = std::move(list);
  }
  spec.validate();
  return spec;
}

ChainSpec parse_chain_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("chain spec is not valid JSON: ") + e.what());
  }
  return parse_chain_spec(j);
}

} // namespace chow

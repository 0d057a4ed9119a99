#pragma once

#include "chow/monad.hpp"
#include "chow/schubert.hpp"
#include "chow/twisted_chain.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace chow {

/// Insertion-ordered, so reports keep a fixed key order.
using Json = nlohmann::ordered_json;

/// "p/q" in lowest terms, q > 0; integers print as "p".
Json to_json(const Rational& r);
/// Coefficient strings, lowest degree first.
Json to_json(const Polynomial& p);
Json to_json(const Partition& p);
Json to_json(const SchubertElement& e);
Json to_json(const RationalFactorization& f);

/// Coefficient of a polynomial-valued quantity: a rational string when it is
/// constant and `collapse` is set, a coefficient array otherwise.
Json scalar_json(const Polynomial& p, bool collapse);

template <Scalar S>
Json to_json(const PresentedElement<S>& e, bool collapse = false) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json term;
    term["monomial"] = e.ring()->format_monomial(m);
    if constexpr (std::is_same_v<S, Rational>) {
      term["coefficient"] = to_json(c);
    } else {
      term["coefficient"] = scalar_json(c, collapse);
    }
    out.push_back(std::move(term));
  }
  return out;
}

/// Symbolic verdicts keep coefficient arrays; numeric ones (a set) collapse
/// every constant to a rational string.
Json to_json(const MonadVerdict& v);

Json to_json(const std::set<RootVector>& roots);
Json to_json(const TransitionMatrix& M);

/// {"degrees": [...], "matrices": [[[a11,a12],[a21,a22]], ...]}, matrices
/// optional. Throws InputError naming the offending field.
ChainSpec parse_chain_spec(const Json& j);
ChainSpec parse_chain_spec_text(const std::string& text);

} // namespace chow

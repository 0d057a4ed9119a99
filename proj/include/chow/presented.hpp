#pragma once

#include "chow/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace chow {

/// Exponent vector over the generators of a presentation.
using Exponents = std::vector<int>;

/// Rational linear combination of monomials.
using Combination = std::map<Exponents, Rational>;

struct Generator {
  std::string name;
  int degree = 1;
};

/// Rewrite rule `lead -> rhs`; `lead` is eliminated wherever it divides a monomial.
struct RewriteRule {
  Exponents lead;
  Combination rhs;
};

/// Finitely presented graded commutative Q-algebra with a finite monomial
/// basis. Normal forms of every monomial up to the top degree are computed
/// once at construction; instances are immutable and shared by pointer.
class RingPresentation {
public:
  struct Spec {
    std::vector<Generator> generators;
    std::vector<RewriteRule> rules;
    int top_degree = 0;
    std::optional<Exponents> point;
    std::shared_ptr<const RingPresentation> base;
  };

  /// Validates the presentation (termination, confluence, point class) and
  /// precomputes normal forms. Throws InputError on an invalid spec.
  static std::shared_ptr<const RingPresentation> create(Spec spec);

  [[nodiscard]] const std::vector<Generator>& generators() const { return spec_.generators; }
  [[nodiscard]] const std::vector<RewriteRule>& rules() const { return spec_.rules; }
  [[nodiscard]] int top_degree() const { return spec_.top_degree; }
  [[nodiscard]] const std::optional<Exponents>& point() const { return spec_.point; }
  /// Ring this one was built over (its generators come first here), if any.
  [[nodiscard]] const std::shared_ptr<const RingPresentation>& base() const { return spec_.base; }

  [[nodiscard]] int degree(const Exponents& m) const;
  [[nodiscard]] std::size_t generator_index(std::string_view name) const;
  /// Normal form; empty above the top degree.
  [[nodiscard]] const Combination& normal_form(const Exponents& m) const;
  [[nodiscard]] const std::vector<Exponents>& basis(int degree) const;
  [[nodiscard]] std::vector<std::size_t> graded_dimensions() const;

  /// "R^2*H" <-> exponent vector; "1" is the unit monomial.
  [[nodiscard]] Exponents parse_monomial(std::string_view text) const;
  [[nodiscard]] std::string format_monomial(const Exponents& m) const;

private:
  explicit RingPresentation(Spec spec) : spec_(std::move(spec)) {}
  void build();

  Spec spec_;
  std::map<Exponents, Combination> normal_forms_;
  std::vector<std::vector<Exponents>> basis_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

template <Scalar S>
std::string scalar_string(const S& s) {
  return to_string(s);
}

/// Element of a presented ring, kept in normal form, with coefficients in S.
template <Scalar S>
class PresentedElement {
public:
  using Terms = std::map<Exponents, S>;

  PresentedElement() = default;
  explicit PresentedElement(RingPtr ring) : ring_(std::move(ring)) {}

  static PresentedElement constant(RingPtr ring, const S& value) {
    PresentedElement e(std::move(ring));
    e.add_monomial(Exponents(e.ring_->generators().size(), 0), value);
    return e;
  }

  static PresentedElement monomial(RingPtr ring, const Exponents& m, const S& coefficient = S(Rational(1))) {
    PresentedElement e(std::move(ring));
    e.add_monomial(m, coefficient);
    return e;
  }

  static PresentedElement monomial(RingPtr ring, std::string_view text, const S& coefficient = S(Rational(1))) {
    const Exponents m = ring->parse_monomial(text);
    return monomial(std::move(ring), m, coefficient);
  }

  static PresentedElement generator(RingPtr ring, std::string_view name) {
    Exponents m(ring->generators().size(), 0);
    m[ring->generator_index(name)] = 1;
    return monomial(std::move(ring), m);
  }

  static PresentedElement from_rational(RingPtr ring, const PresentedElement<Rational>& e) {
    PresentedElement out(std::move(ring));
    for (const auto& [m, c] : e.terms()) out.terms_.emplace(m, S(c));
    return out;
  }

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] S coefficient(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S() : it->second;
  }
  [[nodiscard]] S coefficient(std::string_view monomial) const {
    return coefficient(ring_->parse_monomial(monomial));
  }

  /// Adds coefficient * m after reducing m to normal form.
  void add_monomial(const Exponents& m, const S& coefficient) {
    if (chow::is_zero(coefficient)) return;
    for (const auto& [base, c] : ring_->normal_form(m)) accumulate(base, coefficient * c);
  }

  /// Homogeneous component of the given degree.
  [[nodiscard]] PresentedElement component(int degree) const {
    PresentedElement out(ring_);
    for (const auto& [m, c] : terms_)
      if (ring_->degree(m) == degree) out.terms_.emplace(m, c);
    return out;
  }

  /// Coefficient of the point class; lower-degree parts integrate to zero.
  [[nodiscard]] S integrate() const {
    if (!ring_->point()) throw InputError("ring has no point class to integrate against");
    return coefficient(*ring_->point());
  }

  PresentedElement& operator+=(const PresentedElement& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  PresentedElement& operator-=(const PresentedElement& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }
  PresentedElement& operator*=(const S& s) {
    if (chow::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    Terms next;
    for (const auto& [m, c] : terms_) {
      S v = c * s;
      if (!chow::is_zero(v)) next.emplace(m, std::move(v));
    }
    terms_ = std::move(next);
    return *this;
  }

  friend PresentedElement operator+(PresentedElement a, const PresentedElement& b) { return a += b; }
  friend PresentedElement operator-(PresentedElement a, const PresentedElement& b) { return a -= b; }
  friend PresentedElement operator*(PresentedElement a, const S& s) { return a *= s; }
  friend PresentedElement operator*(const S& s, PresentedElement a) { return a *= s; }
  PresentedElement operator-() const { return *this * S(Rational(-1)); }

  friend PresentedElement operator*(const PresentedElement& a, const PresentedElement& b) {
    a.check_ring(b);
    PresentedElement out(a.ring_);
    Exponents m(a.ring_->generators().size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_monomial(m, ca * cb);
      }
    }
    return out;
  }

  [[nodiscard]] PresentedElement pow(int exponent) const {
    PresentedElement out = constant(ring_, S(Rational(1)));
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const PresentedElement& a, const PresentedElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

private:
  void check_ring(const PresentedElement& o) const {
    if (ring_ != o.ring_) throw InputError("presentation mismatch between ring elements");
  }
  void accumulate(const Exponents& m, const S& c) {
    if (chow::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (chow::is_zero(it->second)) terms_.erase(it);
    }
  }

  RingPtr ring_;
  Terms terms_;
};

template <Scalar S>
std::string to_string(const PresentedElement<S>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  std::vector<std::pair<Exponents, S>> ordered(e.terms().begin(), e.terms().end());
  const auto& ring = *e.ring();
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    return ring.degree(x.first) < ring.degree(y.first);
  });
  for (const auto& [m, c] : ordered) {
    const std::string mono = ring.format_monomial(m);
    std::string coeff = scalar_string(c);
    bool negative = false;
    if constexpr (std::is_same_v<S, Polynomial>) {
      if (c.coefficients().size() > 1) coeff = "(" + coeff + ")";
    }
    if (coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono == "1") {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

/// Reduces a raw combination of monomials to normal form.
template <Scalar S>
PresentedElement<S> reduce(const RingPtr& ring, const std::vector<std::pair<Exponents, S>>& raw) {
  PresentedElement<S> out(ring);
  for (const auto& [m, c] : raw) {
    if (m.size() != ring->generators().size()) throw InputError("monomial uses unknown generators");
    for (int e : m)
      if (e < 0) throw InputError("monomial has a negative exponent");
    out.add_monomial(m, c);
  }
  return out;
}

template <Scalar S>
PresentedElement<S> multiply(const PresentedElement<S>& lhs, const PresentedElement<S>& rhs) {
  return lhs * rhs;
}

template <Scalar S>
S integrate(const PresentedElement<S>& e) {
  return e.integrate();
}

/// Image of `e` under the pullback from `target->base()` (or an equal-prefix
/// ring) into `target`: generators are matched by position.
template <Scalar S>
PresentedElement<S> pullback(const PresentedElement<S>& e, const RingPtr& target) {
  const auto& source = *e.ring();
  if (target->generators().size() < source.generators().size())
    throw InputError("pullback target has fewer generators than the source");
  for (std::size_t i = 0; i < source.generators().size(); ++i)
    if (source.generators()[i].degree != target->generators()[i].degree)
      throw InputError("pullback target does not extend the source ring");
  PresentedElement<S> out(target);
  for (const auto& [m, c] : e.terms()) {
    Exponents lifted(target->generators().size(), 0);
    std::copy(m.begin(), m.end(), lifted.begin());
    out.add_monomial(lifted, c);
  }
  return out;
}

/// Adjoins a degree-1 generator `generator_name` with the relation
///   H^r = c_1 H^{r-1} - c_2 H^{r-2} + ... + (-1)^{r+1} c_r,
/// i.e. the Chow ring of the projective bundle of rank-r quotients whose
/// tautological O(1) pushes forward to the bundle. `chern` is the total Chern
/// class over `base`. Base generators may be renamed in the new ring.
RingPtr projective_bundle_ring(const RingPtr& base, int rank, const PresentedElement<Rational>& chern,
                               const std::string& generator_name,
                               const std::vector<std::string>& base_names = {});

/// Free graded Q-algebra on the given degree-1 generators, truncated above
/// `top_degree`. Has no point class.
RingPtr truncated_polynomial_ring(const std::vector<std::string>& names, int top_degree);

/// The unique element x of the given degree with integrate(test_i * x) =
/// value_i for all constraints. Throws SolverError when the system is
/// inconsistent or underdetermined.
PresentedElement<Rational> solve_class_by_pairing(
    const RingPtr& ring, int degree, const std::vector<std::pair<PresentedElement<Rational>, Rational>>& constraints);

} // namespace chow

#include "chow/presented.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <functional>
#include <set>

namespace chow {

namespace {

bool divides(const Exponents& lead, const Exponents& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (lead[i] > m[i]) return false;
  return true;
}

Exponents shifted(const Exponents& m, const Exponents& lead, const Exponents& by) {
  Exponents out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] - lead[i] + by[i];
  return out;
}

void add_into(Combination& acc, const Exponents& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

constexpr int kMaxRewriteDepth = 256;

} // namespace

std::shared_ptr<const RingPresentation> RingPresentation::create(Spec spec) {
  std::shared_ptr<RingPresentation> ring(new RingPresentation(std::move(spec)));
  ring->build();
  return ring;
}

int RingPresentation::degree(const Exponents& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * spec_.generators[i].degree;
  return d;
}

std::size_t RingPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < spec_.generators.size(); ++i)
    if (spec_.generators[i].name == name) return i;
  throw InputError("unknown generator \"" + std::string(name) + "\"");
}

const Combination& RingPresentation::normal_form(const Exponents& m) const {
  static const Combination kZero;
  if (m.size() != spec_.generators.size()) throw InputError("monomial has the wrong number of exponents");
  auto it = normal_forms_.find(m);
  return it == normal_forms_.end() ? kZero : it->second;
}

const std::vector<Exponents>& RingPresentation::basis(int degree) const {
  static const std::vector<Exponents> kEmpty;
  if (degree < 0 || degree > spec_.top_degree) return kEmpty;
  return basis_[degree];
}

std::vector<std::size_t> RingPresentation::graded_dimensions() const {
  std::vector<std::size_t> dims;
  for (const auto& layer : basis_) dims.push_back(layer.size());
  return dims;
}

void RingPresentation::build() {
  const std::size_t ngen = spec_.generators.size();
  for (const auto& g : spec_.generators) {
    if (g.degree < 1) throw InputError("generator \"" + g.name + "\" must have positive degree");
    if (g.name.empty()) throw InputError("generator names must be nonempty");
  }
  for (const auto& rule : spec_.rules) {
    if (rule.lead.size() != ngen) throw InputError("rewrite rule has the wrong number of exponents");
    for (const auto& [m, c] : rule.rhs) {
      (void)c;
      if (m.size() != ngen) throw InputError("rewrite rule right-hand side has the wrong number of exponents");
    }
  }

  // Every monomial of degree <= top.
  std::vector<Exponents> monomials;
  Exponents current(ngen, 0);
  std::function<void(std::size_t, int)> enumerate = [&](std::size_t idx, int remaining) {
    if (idx == ngen) {
      monomials.push_back(current);
      return;
    }
    const int step = spec_.generators[idx].degree;
    for (int e = 0; e * step <= remaining; ++e) {
      current[idx] = e;
      enumerate(idx + 1, remaining - e * step);
    }
    current[idx] = 0;
  };
  enumerate(0, spec_.top_degree);

  // Normal forms by rewriting with the first applicable rule.
  std::map<Exponents, Combination> memo;
  std::function<Combination(const Exponents&, int)> reduce_one = [&](const Exponents& m, int depth) -> Combination {
    if (degree(m) > spec_.top_degree) return {};
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    if (depth > kMaxRewriteDepth) throw InputError("rewriting does not terminate");
    Combination out;
    bool rewritten = false;
    for (const auto& rule : spec_.rules) {
      if (!divides(rule.lead, m)) continue;
      for (const auto& [rm, rc] : rule.rhs)
        for (const auto& [nm, nc] : reduce_one(shifted(m, rule.lead, rm), depth + 1)) add_into(out, nm, rc * nc);
      rewritten = true;
      break;
    }
    if (!rewritten) out.emplace(m, Rational(1));
    memo.emplace(m, out);
    return out;
  };
  for (const auto& m : monomials) normal_forms_.emplace(m, reduce_one(m, 0));

  // Confluence: applying any applicable rule first must land on the same normal form.
  for (const auto& m : monomials) {
    for (const auto& rule : spec_.rules) {
      if (!divides(rule.lead, m)) continue;
      Combination via;
      for (const auto& [rm, rc] : rule.rhs)
        for (const auto& [nm, nc] : reduce_one(shifted(m, rule.lead, rm), 0)) add_into(via, nm, rc * nc);
      if (via != normal_forms_.at(m))
        throw InputError("rewrite system is not confluent at " + format_monomial(m));
    }
  }

  basis_.assign(spec_.top_degree + 1, {});
  for (const auto& m : monomials) {
    const bool reducible = std::any_of(spec_.rules.begin(), spec_.rules.end(),
                                       [&](const RewriteRule& r) { return divides(r.lead, m); });
    if (!reducible) basis_[degree(m)].push_back(m);
  }
  for (auto& layer : basis_) std::sort(layer.begin(), layer.end(), std::greater<>());

  if (spec_.point) {
    const auto& pt = *spec_.point;
    if (pt.size() != ngen || degree(pt) != spec_.top_degree)
      throw InputError("point class must be a monomial of top degree");
    const auto& top = basis_[spec_.top_degree];
    if (top.size() != 1 || top.front() != pt)
      throw InputError("point class must span the top-degree part of the basis");
  }
}

Exponents RingPresentation::parse_monomial(std::string_view text) const {
  Exponents m(spec_.generators.size(), 0);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  if (text == "1") return m;
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    int exponent = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      const std::string digits(trim(factor.substr(caret + 1)));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("malformed exponent in monomial factor \"" + std::string(factor) + "\"");
      exponent = std::stoi(digits);
      factor = trim(factor.substr(0, caret));
    }
    m[generator_index(factor)] += exponent;
  }
  return m;
}

std::string RingPresentation::format_monomial(const Exponents& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += spec_.generators[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr projective_bundle_ring(const RingPtr& base, int rank, const PresentedElement<Rational>& chern,
                               const std::string& generator_name, const std::vector<std::string>& base_names) {
  if (rank < 1) throw InputError("projective bundle needs rank >= 1");
  if (chern.ring() != base) throw InputError("bundle Chern class is not defined over the base ring");
  if (!base_names.empty() && base_names.size() != base->generators().size())
    throw InputError("base generator renaming has the wrong length");

  RingPresentation::Spec spec;
  spec.generators = base->generators();
  for (std::size_t i = 0; i < base_names.size(); ++i) spec.generators[i].name = base_names[i];
  spec.generators.push_back({generator_name, 1});
  const std::size_t ngen = spec.generators.size();
  auto lift = [&](const Exponents& m, int h_power) {
    Exponents out(ngen, 0);
    std::copy(m.begin(), m.end(), out.begin());
    out.back() = h_power;
    return out;
  };

  for (const auto& rule : base->rules()) {
    RewriteRule lifted{lift(rule.lead, 0), {}};
    for (const auto& [m, c] : rule.rhs) lifted.rhs.emplace(lift(m, 0), c);
    spec.rules.push_back(std::move(lifted));
  }
  // H^r -> sum_{i=1}^{r} (-1)^{i+1} c_i H^{r-i}
  RewriteRule grothendieck{lift(Exponents(base->generators().size(), 0), rank), {}};
  for (const auto& [m, c] : chern.terms()) {
    const int i = base->degree(m);
    if (i == 0 || i > rank) continue;
    const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
    add_into(grothendieck.rhs, lift(m, rank - i), sign * c);
  }
  spec.rules.push_back(std::move(grothendieck));

  spec.top_degree = base->top_degree() + rank - 1;
  if (base->point()) spec.point = lift(*base->point(), rank - 1);
  spec.base = base;
  return RingPresentation::create(std::move(spec));
}

RingPtr truncated_polynomial_ring(const std::vector<std::string>& names, int top_degree) {
  RingPresentation::Spec spec;
  for (const auto& n : names) spec.generators.push_back({n, 1});
  spec.top_degree = top_degree;
  // With nothing above degree 0 the ring is that of a point.
  if (top_degree == 0) spec.point = Exponents(names.size(), 0);
  return RingPresentation::create(std::move(spec));
}

PresentedElement<Rational> solve_class_by_pairing(
    const RingPtr& ring, int degree, const std::vector<std::pair<PresentedElement<Rational>, Rational>>& constraints) {
  const auto& basis = ring->basis(degree);
  const auto rows = static_cast<Eigen::Index>(constraints.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  if (cols == 0) throw SolverError("no basis monomials in degree " + std::to_string(degree));

  // Augmented system [K | v] with K(i, j) = integral(test_i * basis_j).
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> system(rows, cols + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& [test, value] = constraints[i];
    if (test.ring() != ring) throw InputError("pairing constraint lives in another ring");
    for (Eigen::Index j = 0; j < cols; ++j)
      system(i, j) = (test * PresentedElement<Rational>::monomial(ring, basis[j])).integrate();
    system(i, cols) = value;
  }

  // Exact Gauss-Jordan elimination.
  Eigen::Index pivot_row = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r)
      if (!system(r, col).is_zero()) {
        found = r;
        break;
      }
    if (found < 0) continue;
    system.row(pivot_row).swap(system.row(found));
    const Rational inv = Rational(1) / system(pivot_row, col);
    for (Eigen::Index c = 0; c <= cols; ++c) system(pivot_row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || system(r, col).is_zero()) continue;
      const Rational factor = system(r, col);
      for (Eigen::Index c = 0; c <= cols; ++c) system(r, c) -= factor * system(pivot_row, c);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  for (Eigen::Index r = pivot_row; r < rows; ++r)
    if (!system(r, cols).is_zero()) throw SolverError("pairing constraints are inconsistent");
  if (static_cast<Eigen::Index>(pivot_cols.size()) < cols)
    throw SolverError("pairing constraints do not determine a unique class");

  PresentedElement<Rational> out(ring);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k)
    out.add_monomial(basis[pivot_cols[k]], system(static_cast<Eigen::Index>(k), cols));
  return out;
}

} // namespace chow

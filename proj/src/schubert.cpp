#include "chow/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace chow {

GrassmannianShape::GrassmannianShape(int k_, int n_) : k(k_), n(n_) {
  if (k_ <= 0 || k_ >= n_)
    throw InputError("Grassmannian G(" + std::to_string(k_) + ";" + std::to_string(n_) + ") needs 0 < k < n");
}

std::string to_string(const GrassmannianShape& shape) {
  return "G(" + std::to_string(shape.k) + ";" + std::to_string(shape.n) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition has a negative part: " + to_string(*this));
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition is not weakly decreasing: " + to_string(*this));
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(const GrassmannianShape& shape) const {
  return length() <= shape.rows() && (parts_.empty() || parts_.front() <= shape.cols());
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

Partition Partition::complement(const GrassmannianShape& shape) const {
  if (!fits(shape)) throw InputError("partition " + to_string(*this) + " does not fit " + to_string(shape));
  std::vector<int> out(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) out[i] = shape.cols() - (*this)[shape.rows() - 1 - i];
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_in_box(const GrassmannianShape& shape, int weight) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == shape.rows()) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (weight >= 0) rec(weight, shape.cols());
  return out;
}

std::vector<Partition> partitions_in_box(const GrassmannianShape& shape) {
  std::vector<Partition> out;
  for (int w = 0; w <= shape.dimension(); ++w) {
    auto layer = partitions_in_box(shape, w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

SchubertElement::SchubertElement(GrassmannianShape shape, Terms terms) : shape_(shape) {
  for (const auto& [lambda, c] : terms) add(lambda, c);
}

SchubertElement SchubertElement::schubert_class(const GrassmannianShape& shape, const Partition& lambda) {
  SchubertElement e(shape);
  e.add(lambda, Rational(1));
  return e;
}

SchubertElement SchubertElement::identity(const GrassmannianShape& shape) {
  return schubert_class(shape, Partition{});
}

Rational SchubertElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertElement::add(const Partition& lambda, const Rational& coefficient) {
  if (!lambda.fits(shape_))
    throw InputError("partition " + to_string(lambda) + " does not fit the box of " + to_string(shape_));
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchubertElement& SchubertElement::operator+=(const SchubertElement& o) {
  if (!(o.shape_ == shape_)) throw InputError("shape mismatch: " + to_string(shape_) + " vs " + to_string(o.shape_));
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

SchubertElement& SchubertElement::operator-=(const SchubertElement& o) {
  if (!(o.shape_ == shape_)) throw InputError("shape mismatch: " + to_string(shape_) + " vs " + to_string(o.shape_));
  for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
  return *this;
}

SchubertElement& SchubertElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= s;
  return *this;
}

std::string to_string(const SchubertElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (!(c == Rational(1))) out += to_string(c) + "*";
    out += "s" + to_string(lambda);
  }
  return out;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;

  // Cells of nu/lambda in reading order: rows top to bottom, right to left.
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});

  const int rows = nu.length();
  const int width = nu[0];
  std::vector<int> filling(static_cast<std::size_t>(rows) * std::max(width, 1), 0);
  auto at = [&](int r, int c) -> int& { return filling[static_cast<std::size_t>(r) * width + c]; };
  std::vector<int> used(mu.length() + 1, 0);

  long long count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = mu.length();
    if (c + 1 < nu[r]) hi = std::min(hi, at(r, c + 1)); // rows weakly increase
    int lo = 1;
    if (r > 0 && c >= lambda[r - 1]) lo = at(r - 1, c) + 1; // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue; // lattice word
      ++used[v];
      at(r, c) = v;
      place(idx + 1);
      at(r, c) = 0;
      --used[v];
    }
  };
  place(0);
  return count;
}

SchubertElement lr_multiply(const SchubertElement& lhs, const SchubertElement& rhs) {
  if (!(lhs.shape() == rhs.shape()))
    throw InputError("shape mismatch: " + to_string(lhs.shape()) + " vs " + to_string(rhs.shape()));
  const auto& shape = lhs.shape();
  SchubertElement out(shape);
  for (const auto& [lambda, a] : lhs.terms()) {
    for (const auto& [mu, b] : rhs.terms()) {
      for (const auto& nu : partitions_in_box(shape, lambda.weight() + mu.weight())) {
        const long long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.add(nu, a * b * Rational(c));
      }
    }
  }
  return out;
}

SchubertElement pieri_multiply(const SchubertElement& e, int p) {
  const auto& shape = e.shape();
  if (p < 0 || p > shape.cols())
    throw InputError("Pieri degree " + std::to_string(p) + " out of range for " + to_string(shape));
  SchubertElement out(shape);
  for (const auto& [lambda, coeff] : e.terms()) {
    // nu interlaces lambda: lambda_i <= nu_i <= lambda_{i-1}, with nu_0 bounded by the box.
    std::vector<int> nu(shape.rows(), 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
      if (row == shape.rows()) {
        if (remaining == 0) out.add(Partition(nu), coeff);
        return;
      }
      const int upper = row == 0 ? shape.cols() : lambda[row - 1];
      for (int v = lambda[row]; v <= upper && v - lambda[row] <= remaining; ++v) {
        nu[row] = v;
        rec(row + 1, remaining - (v - lambda[row]));
      }
    };
    rec(0, p);
  }
  return out;
}

Rational poincare_pair(const SchubertElement& lhs, const SchubertElement& rhs) {
  const auto product = lr_multiply(lhs, rhs);
  std::vector<int> top(product.shape().rows(), product.shape().cols());
  return product.coefficient(Partition(top));
}

NamedClass parse_named_class(std::string_view name) {
  if (name == "V") return NamedClass::V;
  if (name == "W1") return NamedClass::W1;
  if (name == "W2") return NamedClass::W2;
  if (name == "P_alpha") return NamedClass::PAlpha;
  if (name == "P_beta") return NamedClass::PBeta;
  throw InputError("unknown named class \"" + std::string(name) + "\" (expected V, W1, W2, P_alpha, P_beta)");
}

std::string_view to_string(NamedClass name) {
  switch (name) {
  case NamedClass::V: return "V";
  case NamedClass::W1: return "W1";
  case NamedClass::W2: return "W2";
  case NamedClass::PAlpha: return "P_alpha";
  case NamedClass::PBeta: return "P_beta";
  }
  return "?";
}

SchubertElement named_class(const GrassmannianShape& shape, NamedClass name) {
  auto require = [&](bool ok) {
    if (!ok) throw InputError(std::string(to_string(name)) + " is not defined on " + to_string(shape));
  };
  switch (name) {
  case NamedClass::V:
    return SchubertElement::schubert_class(shape, Partition{1});
  case NamedClass::W1:
    require(shape.cols() >= 2);
    return SchubertElement::schubert_class(shape, Partition{2});
  case NamedClass::W2:
    require(shape.rows() >= 2);
    return SchubertElement::schubert_class(shape, Partition{1, 1});
  case NamedClass::PAlpha:
    require(shape.rows() >= 2 && shape.cols() >= 2);
    return SchubertElement::schubert_class(shape, Partition{2}.complement(shape));
  case NamedClass::PBeta:
    require(shape.rows() >= 2 && shape.cols() >= 2);
    return SchubertElement::schubert_class(shape, Partition{1, 1}.complement(shape));
  }
  throw InputError("unknown named class");
}

} // namespace chow

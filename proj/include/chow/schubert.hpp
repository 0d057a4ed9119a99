#pragma once

#include "chow/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chow {

/// The Grassmannian G(k;n) of k-planes in an n-dimensional space.
struct GrassmannianShape {
  int k = 0;
  int n = 0;

  GrassmannianShape() = default;
  GrassmannianShape(int k_, int n_);

  [[nodiscard]] int rows() const { return k; }
  [[nodiscard]] int cols() const { return n - k; }
  [[nodiscard]] int dimension() const { return k * (n - k); }

  friend bool operator==(const GrassmannianShape&, const GrassmannianShape&) = default;
};

std::string to_string(const GrassmannianShape& shape);

/// Weakly decreasing list of nonnegative parts; trailing zeros are dropped so
/// that (2,1,0) and (2,1) compare equal.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int weight() const;
  /// Part i, or 0 past the end.
  [[nodiscard]] int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  [[nodiscard]] bool fits(const GrassmannianShape& shape) const;
  [[nodiscard]] bool contains(const Partition& other) const;
  /// Complement in the k x (n-k) box, rotated by 180 degrees.
  [[nodiscard]] Partition complement(const GrassmannianShape& shape) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// All partitions fitting the box of `shape` with the given weight, in
/// reverse lexicographic order.
std::vector<Partition> partitions_in_box(const GrassmannianShape& shape, int weight);
std::vector<Partition> partitions_in_box(const GrassmannianShape& shape);

/// Formal rational combination of Schubert classes sigma_lambda on G(k;n).
class SchubertElement {
public:
  using Terms = std::map<Partition, Rational>;

  explicit SchubertElement(GrassmannianShape shape) : shape_(shape) {}
  SchubertElement(GrassmannianShape shape, Terms terms);

  /// sigma_lambda.
  static SchubertElement schubert_class(const GrassmannianShape& shape, const Partition& lambda);
  static SchubertElement identity(const GrassmannianShape& shape);

  [[nodiscard]] const GrassmannianShape& shape() const { return shape_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const Partition& lambda) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(const Partition& lambda, const Rational& coefficient);

  SchubertElement& operator+=(const SchubertElement& o);
  SchubertElement& operator-=(const SchubertElement& o);
  SchubertElement& operator*=(const Rational& s);
  friend SchubertElement operator+(SchubertElement a, const SchubertElement& b) { return a += b; }
  friend SchubertElement operator-(SchubertElement a, const SchubertElement& b) { return a -= b; }
  friend SchubertElement operator*(SchubertElement a, const Rational& s) { return a *= s; }
  friend SchubertElement operator*(const Rational& s, SchubertElement a) { return a *= s; }

  friend bool operator==(const SchubertElement&, const SchubertElement&) = default;

private:
  GrassmannianShape shape_;
  Terms terms_;
};

std::string to_string(const SchubertElement& e);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, by enumerating LR
/// tableaux of shape nu/lambda and content mu.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Product in the Chow ring of G(k;n); classes outside the box vanish.
SchubertElement lr_multiply(const SchubertElement& lhs, const SchubertElement& rhs);

/// e * sigma_p by adding horizontal strips of size p inside the box.
SchubertElement pieri_multiply(const SchubertElement& e, int p);

/// Degree of the top-dimensional component of lhs * rhs.
Rational poincare_pair(const SchubertElement& lhs, const SchubertElement& rhs);

enum class NamedClass { V, W1, W2, PAlpha, PBeta };

NamedClass parse_named_class(std::string_view name);
std::string_view to_string(NamedClass name);

/// V = sigma_1, W1 = sigma_2, W2 = sigma_{1,1}; the alpha- and beta-plane
/// classes are the duals of W1 and W2 under the Poincare pairing.
SchubertElement named_class(const GrassmannianShape& shape, NamedClass name);

} // namespace chow

#pragma once

// Exact arithmetic in a totally real number field K = Q(g).
//
// Elements are stored in the power basis 1, g, ..., g^(d-1) with rational
// coordinates. Real embeddings are ordered by ascending root value; every
// SignVector refers to that order.

#include "nlfield/coeff.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nlf {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of the sign group {-1,+1}^d; the group law is componentwise product.
struct SignVector {
  std::vector<std::int8_t> signs;

  static SignVector constant(std::size_t d, std::int8_t s) { return {std::vector<std::int8_t>(d, s)}; }

  std::size_t size() const { return signs.size(); }
  bool is_diagonal() const;
  std::string to_string() const;  // "(-,+)"

  friend SignVector operator*(const SignVector& a, const SignVector& b);
  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

/// Default sign-resolution cap, in bits of root-interval precision.
inline constexpr unsigned kDefaultPrecisionCap = 256;

class NumberField {
 public:
  using Coords = std::vector<Rational>;

  static FieldPtr rationals();
  /// Q(sqrt D) for squarefree D > 1, generator sqrt D.
  static FieldPtr real_quadratic(long D);
  /// Monic integer minimal polynomial, coefficients c0, c1, ..., 1.
  static FieldPtr from_min_poly(const std::vector<Integer>& coeffs);

  std::size_t degree() const { return min_poly_.size() - 1; }
  const std::vector<Integer>& min_poly() const { return min_poly_; }
  const std::vector<double>& embeddings() const { return embeddings_; }
  const std::string& name() const { return name_; }
  /// Traces of g^k for k = 0 .. d-1, from Newton's identities.
  const std::vector<Rational>& power_sums() const { return power_sums_; }

  bool is_galois() const { return automorphisms_.size() == degree(); }
  std::size_t automorphism_count() const { return automorphisms_.size(); }
  /// Coordinates of sigma(g). Index 0 is the identity; sigma_j maps the
  /// first embedding of g to the j-th root.
  const Coords& automorphism_image(std::size_t sigma) const;
  /// pi with e_i(sigma(x)) = e_{pi(i)}(x).
  const std::vector<std::size_t>& embedding_permutation(std::size_t sigma) const;

  bool same_as(const NumberField& other) const { return min_poly_ == other.min_poly_; }

  Coords multiply(const Coords& a, const Coords& b) const;
  Coords inverse(const Coords& a) const;
  Rational trace(const Coords& a) const;
  std::vector<double> embed(const Coords& a) const;
  /// Exact sign of the image of a under embedding i, by rational interval
  /// refinement of the isolated root. a must be nonzero.
  int embedding_sign(std::size_t i, const Coords& a, unsigned cap_bits) const;
  Coords apply_automorphism(std::size_t sigma, const Coords& a) const;

 private:
  struct RootInterval {
    Rational lo, hi;
  };

  explicit NumberField(std::vector<Integer> coeffs);
  void isolate_roots();
  void find_automorphisms();
  RootInterval refine(const RootInterval& iv, unsigned bits) const;
  int poly_sign_at(const Rational& x) const;

  std::vector<Integer> min_poly_;
  std::vector<Rational> min_poly_q_;
  std::vector<RootInterval> roots_;
  std::vector<double> embeddings_;
  std::vector<Rational> power_sums_;
  std::vector<Coords> automorphisms_;
  std::vector<std::vector<std::size_t>> embedding_perms_;
  std::string name_;
};

class NFElem {
 public:
  NFElem(FieldPtr field, std::vector<Rational> coords);

  static NFElem from_rational(FieldPtr field, const Rational& q);
  static NFElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  bool is_rational_integer() const;

  NFElem inverse() const;

  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o) { return *this *= o.inverse(); }

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  NFElem operator-() const;

  // Total order on coordinates (lexicographic from the constant term).
  // Comparing elements of different fields is a logic error.
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const NFElem& a, const NFElem& b);

  std::string to_string() const;

 private:
  void check_same_field(const NFElem& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

Rational trace(const NFElem& x);
SignVector sign_of(const NFElem& x, unsigned cap_bits = kDefaultPrecisionCap);
NFElem galois_apply(std::size_t sigma, const NFElem& x);
std::vector<double> embed(const NFElem& x);

}  // namespace nlf

template <>
struct std::hash<nlf::NFElem> {
  std::size_t operator()(const nlf::NFElem& x) const noexcept;
};

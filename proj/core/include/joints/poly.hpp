#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "joints/geometry.hpp"

namespace joints {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q.

class UniPoly {
 public:
  UniPoly() = default;  // zero
  explicit UniPoly(std::vector<Scalar> ascending, std::string variable = "t");

  static UniPoly constant(Scalar c, std::string variable = "t");
  static UniPoly monomial(Scalar c, unsigned degree, std::string variable = "t");
  /// a*t + b
  static UniPoly linear(Scalar a, Scalar b, std::string variable = "t");

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }
  const std::string& variable() const { return var_; }
  UniPoly with_variable(std::string variable) const;

  Scalar evaluate(const Scalar& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(a t + c)
  UniPoly compose_affine(const Scalar& a, const Scalar& c) const;
  /// p(q(t))
  UniPoly compose(const UniPoly& q) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  /// Coefficient equality; the variable tag is a label.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
  std::string var_ = "t";
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient; throws InvalidArgument if b does not divide a.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

/// Monic gcd via Euclid over Q. Throws InvalidArgument if both are zero.
UniPoly unipoly_gcd(const UniPoly& f, const UniPoly& g);

/// f / gcd(f, f'), monic.
UniPoly square_free(const UniPoly& f);

/// Distinct real roots of f in (a, b], by Sturm sequence.
std::size_t count_real_roots(const UniPoly& f, const Scalar& a, const Scalar& b);
/// Distinct real roots of f.
std::size_t count_real_roots(const UniPoly& f);

struct RationalRoots {
  std::vector<std::pair<Scalar, unsigned>> roots;  // ascending, with multiplicity
  /// True iff f has real roots that are not rational (exact Sturm count).
  bool nonrational_roots_possible = false;
};

/// Every rational root of a nonzero f, each verified by exact evaluation.
RationalRoots rational_roots(const UniPoly& f);

// ---------------------------------------------------------------------------
// Bivariate polynomials: a polynomial in the main variable whose coefficients
// are univariate polynomials in the inner variable.

enum class BiVar { main, inner };

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> by_main_degree);

  /// Keys are (main exponent, inner exponent).
  static BiPoly from_terms(const std::map<std::pair<unsigned, unsigned>, Scalar>& terms);
  /// Embeds a polynomial in the main variable (inner-constant coefficients).
  static BiPoly from_main(const UniPoly& p);
  /// Embeds a polynomial in the inner variable (main-degree 0).
  static BiPoly from_inner(const UniPoly& p);

  int degree(BiVar v) const;
  int total_degree() const;
  bool is_zero() const { return c_.empty(); }
  const std::vector<UniPoly>& coefficients() const { return c_; }
  UniPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : UniPoly(); }

  /// Exchanges the roles of the two variables.
  BiPoly swapped() const;
  /// Fixes the inner variable; result is a polynomial in the main variable.
  UniPoly at_inner(const Scalar& value) const;
  /// Fixes the main variable; result is a polynomial in the inner variable.
  UniPoly at_main(const Scalar& value) const;
  Scalar evaluate(const Scalar& main, const Scalar& inner) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Determinant of the Sylvester matrix of f and g with respect to `eliminate`,
/// computed fraction-free (Bareiss) over Q[other variable]. Throws DegreeZero
/// when either input has degree < 1 in the eliminated variable.
UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, BiVar eliminate = BiVar::main);

// ---------------------------------------------------------------------------
// Trivariate polynomials in x, y, z.

struct PolyFactor;

class MultiPoly {
 public:
  using Monomial = std::array<unsigned, 3>;

  MultiPoly() = default;  // zero
  static MultiPoly constant(Scalar c);
  /// x (axis 0), y (axis 1) or z (axis 2).
  static MultiPoly variable(int axis);
  /// a x + b y + c z + d
  static MultiPoly linear(Scalar a, Scalar b, Scalar c, Scalar d);
  static MultiPoly from_terms(std::map<Monomial, Scalar> terms);
  /// Expanded product that also remembers its factorization.
  static MultiPoly product(std::vector<PolyFactor> factors);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  int degree() const;  // -1 for zero
  bool is_zero() const { return terms_.empty(); }
  bool has_factored_form() const { return factored_; }
  const std::vector<PolyFactor>& factors() const { return factors_; }

  Scalar evaluate(const Point3& at) const;
  MultiPoly partial(int axis) const;
  /// p(A v + b) for a 3x3 rational matrix A (row-major) and offset b.
  MultiPoly substitute_affine(const std::array<std::array<Scalar, 3>, 3>& A,
                              const std::array<Scalar, 3>& b) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a);
  MultiPoly pow(unsigned e) const;
  /// Expanded-form equality.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Monomial, Scalar> terms_;
  std::vector<PolyFactor> factors_;
  bool factored_ = false;
};

struct PolyFactor {
  MultiPoly poly;
  unsigned exponent = 1;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

std::array<MultiPoly, 3> gradient(const MultiPoly& p);

/// q(t) = p(base + t dir).
UniPoly restrict_to_line(const MultiPoly& p, const Line3& line);

/// Product of the distinct non-constant factors of p, each to the first
/// power. Requires a factored form, except that an unfactored p is returned
/// unchanged when restrictions to seeded random lines certify it has no
/// repeated factor; otherwise throws UnsupportedRepresentation.
MultiPoly square_free_part(const MultiPoly& p);

}  // namespace joints

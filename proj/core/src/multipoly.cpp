#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "joints/error.hpp"
#include "joints/poly.hpp"

namespace joints {
namespace {

using Monomial = MultiPoly::Monomial;

unsigned total(const Monomial& m) { return m[0] + m[1] + m[2]; }

// Graded, then lexicographic with x > y > z.
bool graded_greater(const Monomial& a, const Monomial& b) {
  if (total(a) != total(b)) return total(a) > total(b);
  return a > b;
}

void add_term(std::map<Monomial, Scalar>& terms, const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

MultiPoly MultiPoly::constant(Scalar c) {
  MultiPoly p;
  add_term(p.terms_, {0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int axis) {
  if (axis < 0 || axis > 2) throw InvalidArgument("axis must be 0, 1 or 2");
  Monomial m{0, 0, 0};
  m[static_cast<std::size_t>(axis)] = 1;
  MultiPoly p;
  p.terms_[m] = 1;
  return p;
}

MultiPoly MultiPoly::linear(Scalar a, Scalar b, Scalar c, Scalar d) {
  MultiPoly p;
  add_term(p.terms_, {1, 0, 0}, a);
  add_term(p.terms_, {0, 1, 0}, b);
  add_term(p.terms_, {0, 0, 1}, c);
  add_term(p.terms_, {0, 0, 0}, d);
  return p;
}

MultiPoly MultiPoly::from_terms(std::map<Monomial, Scalar> terms) {
  MultiPoly p;
  for (auto& [m, c] : terms) add_term(p.terms_, m, c);
  return p;
}

MultiPoly MultiPoly::product(std::vector<PolyFactor> factors) {
  MultiPoly expanded = constant(1);
  for (const auto& f : factors) expanded = expanded * f.poly.pow(f.exponent);
  expanded.factors_.reserve(factors.size());
  for (auto& f : factors) {
    // Nested factorizations are flattened to their expanded factor.
    MultiPoly plain = MultiPoly::from_terms(f.poly.terms_);
    expanded.factors_.push_back(PolyFactor{std::move(plain), f.exponent});
  }
  expanded.factored_ = true;
  return expanded;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total(m)));
  return d;
}

Scalar MultiPoly::evaluate(const Point3& at) const {
  // Horner in x over coefficients that are polynomials in (y, z).
  const int deg = degree();
  if (deg < 0) return 0;
  std::vector<Scalar> pow_y(static_cast<std::size_t>(deg) + 1, 1), pow_z(pow_y);
  for (std::size_t i = 1; i < pow_y.size(); ++i) {
    pow_y[i] = pow_y[i - 1] * at.y;
    pow_z[i] = pow_z[i - 1] * at.z;
  }
  std::vector<Scalar> by_x(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& [m, c] : terms_) by_x[m[0]] += c * pow_y[m[1]] * pow_z[m[2]];
  Scalar acc = 0;
  for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) acc = acc * at.x + *it;
  return acc;
}

MultiPoly MultiPoly::partial(int axis) const {
  const auto a = static_cast<std::size_t>(axis);
  MultiPoly p;
  for (const auto& [m, c] : terms_) {
    if (m[a] == 0) continue;
    Monomial d = m;
    --d[a];
    add_term(p.terms_, d, c * static_cast<unsigned long>(m[a]));
  }
  return p;
}

MultiPoly MultiPoly::substitute_affine(const std::array<std::array<Scalar, 3>, 3>& A,
                                       const std::array<Scalar, 3>& b) const {
  std::array<MultiPoly, 3> image;
  for (std::size_t i = 0; i < 3; ++i) image[i] = linear(A[i][0], A[i][1], A[i][2], b[i]);
  const int deg = std::max(degree(), 0);
  std::array<std::vector<MultiPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(constant(1));
    for (int e = 1; e <= deg; ++e) powers[i].push_back(powers[i].back() * image[i]);
  }
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    out = out + c * (powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]]);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const { return Scalar(-1) * *this; }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = a.terms_;
  for (const auto& [m, c] : b.terms_) add_term(r.terms_, m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      add_term(r.terms_, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
  MultiPoly r;
  if (s == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return graded_greater(a.first, b.first); });
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (total(m) == 0 || mag != 1) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << kNames[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::array<MultiPoly, 3> gradient(const MultiPoly& p) {
  return {p.partial(0), p.partial(1), p.partial(2)};
}

UniPoly restrict_to_line(const MultiPoly& p, const Line3& line) {
  const int deg = std::max(p.degree(), 0);
  std::array<std::vector<UniPoly>, 3> powers;
  for (int axis = 0; axis < 3; ++axis) {
    const UniPoly coord = UniPoly::linear(Scalar(line.dir[axis]), line.base[axis]);
    auto& pw = powers[static_cast<std::size_t>(axis)];
    pw.push_back(UniPoly::constant(1));
    for (int e = 1; e <= deg; ++e) pw.push_back(pw.back() * coord);
  }
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    out += c * (powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]]);
  }
  return out;
}

namespace {

// Scales p so that its graded-leading coefficient is 1.
MultiPoly normalized(const MultiPoly& p) {
  const auto& terms = p.terms();
  auto lead = std::min_element(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return graded_greater(a.first, b.first);
  });
  return (Scalar(1) / lead->second) * p;
}

}  // namespace

MultiPoly square_free_part(const MultiPoly& p) {
  if (p.is_zero()) throw InvalidArgument("square-free part of the zero polynomial");
  if (p.has_factored_form()) {
    std::vector<PolyFactor> distinct;
    for (const auto& f : p.factors()) {
      if (f.exponent == 0 || f.poly.degree() < 1) continue;
      MultiPoly n = normalized(f.poly);
      auto same = [&](const PolyFactor& g) { return g.poly == n; };
      if (std::none_of(distinct.begin(), distinct.end(), same)) {
        distinct.push_back(PolyFactor{std::move(n), 1});
      }
    }
    return MultiPoly::product(std::move(distinct));
  }
  if (p.degree() < 1) return MultiPoly::constant(1);

  // A repeated factor q^2 makes q|l divide p|l and every partial restricted
  // to l. If deg p|l = deg p, the top form of q is nonzero on l's direction,
  // so q|l is nonconstant: one such line with a trivial gcd certifies that p
  // has no repeated factor.
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<long> coord(-50, 50);
  const auto grad = gradient(p);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::optional<Line3> line;
    try {
      line = canonicalize_line(Point3(coord(rng), coord(rng), coord(rng)),
                               {Scalar(coord(rng)), Scalar(coord(rng)), Scalar(coord(rng))});
    } catch (const ZeroDirection&) {
      continue;
    }
    UniPoly g = restrict_to_line(p, *line);
    if (g.degree() != p.degree()) continue;
    for (const auto& d : grad) g = unipoly_gcd(g, restrict_to_line(d, *line));
    if (g.degree() == 0) return p;
  }
  throw UnsupportedRepresentation(
      "no factored form available and repeated factors could not be ruled out");
}

}  // namespace joints

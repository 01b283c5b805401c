#include <algorithm>
#include <ostream>
#include <sstream>

#include "joints/error.hpp"
#include "joints/poly.hpp"

namespace joints {

UniPoly::UniPoly(std::vector<Scalar> ascending, std::string variable)
    : c_(std::move(ascending)), var_(std::move(variable)) {
  trim();
}

UniPoly UniPoly::constant(Scalar c, std::string variable) {
  return UniPoly({std::move(c)}, std::move(variable));
}

UniPoly UniPoly::monomial(Scalar c, unsigned degree, std::string variable) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = std::move(c);
  return UniPoly(std::move(v), std::move(variable));
}

UniPoly UniPoly::linear(Scalar a, Scalar b, std::string variable) {
  return UniPoly({std::move(b), std::move(a)}, std::move(variable));
}

UniPoly UniPoly::with_variable(std::string variable) const {
  UniPoly p = *this;
  p.var_ = std::move(variable);
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly({}, var_);
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly p = *this;
  const Scalar lead = leading();
  for (auto& c : p.c_) c /= lead;
  return p;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc({}, var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q + UniPoly::constant(*it, var_);
  }
  return acc.with_variable(var_);
}

UniPoly UniPoly::compose_affine(const Scalar& a, const Scalar& c) const {
  return compose(UniPoly::linear(a, c, var_));
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r), a.var_);
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var_;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const auto& bc = b.coefficients();
  std::vector<Scalar> rem = a.coefficients();
  if (a.degree() < b.degree()) return {UniPoly({}, a.variable()), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Scalar& lead = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Scalar q = rem[k + bc.size() - 1] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {UniPoly(std::move(quo), a.variable()), UniPoly(std::move(rem), a.variable())};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("inexact polynomial division");
  return q;
}

UniPoly unipoly_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  UniPoly a = f.monic();
  UniPoly b = g.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.with_variable(f.is_zero() ? g.variable() : f.variable());
}

UniPoly square_free(const UniPoly& f) {
  if (f.is_zero()) throw InvalidArgument("square-free part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(1, f.variable());
  return exact_divide(f, unipoly_gcd(f, f.derivative())).monic();
}

namespace {

// Sturm chain of a square-free polynomial, each member scaled by a positive
// constant (signs are all that matter).
std::vector<UniPoly> sturm_chain(const UniPoly& g) {
  auto normalize = [](UniPoly p) {
    if (p.is_zero()) return p;
    return p * (Scalar(1) / abs(p.leading()));
  };
  std::vector<UniPoly> chain{normalize(g), normalize(g.derivative())};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalize(std::move(r)));
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Scalar& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Strictly exceeds |r| for every root r (Cauchy).
Scalar cauchy_bound(const UniPoly& g) {
  Scalar m = 0;
  for (int i = 0; i < g.degree(); ++i) {
    Scalar r = abs(g.coeff(static_cast<std::size_t>(i)) / g.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

// Primitive integer multiple of p (same roots), positive leading coefficient.
UniPoly primitive_integer(const UniPoly& p) {
  Integer l = 1, content = 0;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Scalar> out;
  for (const auto& c : p.coefficients()) {
    Integer v(c * l);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(v);
  }
  if (p.leading() < 0) content = -content;
  for (auto& c : out) c /= content;
  return UniPoly(std::move(out), p.variable());
}

}  // namespace

std::size_t count_real_roots(const UniPoly& f, const Scalar& a, const Scalar& b) {
  if (f.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (f.degree() == 0 || !(a < b)) return 0;
  const auto chain = sturm_chain(square_free(f));
  return static_cast<std::size_t>(sign_variations(chain, a) - sign_variations(chain, b));
}

std::size_t count_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  const UniPoly g = square_free(f);
  const Scalar B = cauchy_bound(g);
  return count_real_roots(g, -B, B);
}

RationalRoots rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  RationalRoots out;
  if (f.degree() == 0) return out;

  // Rational roots of a primitive integer polynomial with leading coefficient
  // a_n are m / a_n for integers m; isolate each real root with Sturm
  // bisection until its interval scaled by a_n holds at most one integer.
  const UniPoly g = primitive_integer(square_free(f));
  const Scalar lead = g.leading();
  const auto chain = sturm_chain(g);
  const Scalar B = cauchy_bound(g);

  struct Interval {
    Scalar lo, hi;
    int vlo, vhi;
  };
  std::vector<Scalar> found;
  std::size_t real_count = 0;
  std::vector<Interval> stack{{-B, B, sign_variations(chain, -B), sign_variations(chain, B)}};
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    const int n = iv.vlo - iv.vhi;
    if (n <= 0) continue;
    if (n == 1 && (iv.hi - iv.lo) * lead < 1) {
      ++real_count;
      Integer m;
      mpz_fdiv_q(m.get_mpz_t(), Scalar(iv.hi * lead).get_num_mpz_t(),
                 Scalar(iv.hi * lead).get_den_mpz_t());
      Scalar candidate(m, Integer(lead));
      candidate.canonicalize();
      if (candidate > iv.lo && g.evaluate(candidate) == 0) found.push_back(candidate);
      continue;
    }
    Scalar mid = (iv.lo + iv.hi) / 2;
    const int vmid = sign_variations(chain, mid);
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
    stack.push_back({std::move(iv.lo), mid, iv.vlo, vmid});
  }

  std::sort(found.begin(), found.end());
  for (const auto& r : found) {
    unsigned mult = 0;
    UniPoly rest = f;
    const UniPoly factor = UniPoly::linear(1, -r, f.variable());
    while (true) {
      auto [q, rem] = divmod(rest, factor);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(q);
    }
    out.roots.emplace_back(r, mult);
  }
  out.nonrational_roots_possible = real_count > found.size();
  return out;
}

}  // namespace joints

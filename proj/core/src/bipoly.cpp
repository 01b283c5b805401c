#include <algorithm>

#include "joints/error.hpp"
#include "joints/poly.hpp"

namespace joints {

BiPoly::BiPoly(std::vector<UniPoly> by_main_degree) : c_(std::move(by_main_degree)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_terms(const std::map<std::pair<unsigned, unsigned>, Scalar>& terms) {
  std::vector<UniPoly> c;
  for (const auto& [exp, coeff] : terms) {
    if (exp.first >= c.size()) c.resize(exp.first + 1);
    c[exp.first] += UniPoly::monomial(coeff, exp.second);
  }
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_main(const UniPoly& p) {
  std::vector<UniPoly> c;
  for (const auto& a : p.coefficients()) c.push_back(UniPoly::constant(a));
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_inner(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

int BiPoly::degree(BiVar v) const {
  if (v == BiVar::main) return static_cast<int>(c_.size()) - 1;
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].degree());
  }
  return d;
}

BiPoly BiPoly::swapped() const {
  std::map<std::pair<unsigned, unsigned>, Scalar> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto& inner = c_[i].coefficients();
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (inner[j] != 0) {
        terms[{static_cast<unsigned>(j), static_cast<unsigned>(i)}] = inner[j];
      }
    }
  }
  return from_terms(terms);
}

UniPoly BiPoly::at_inner(const Scalar& value) const {
  std::vector<Scalar> c;
  for (const auto& coeff : c_) c.push_back(coeff.evaluate(value));
  return UniPoly(std::move(c));
}

UniPoly BiPoly::at_main(const Scalar& value) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

Scalar BiPoly::evaluate(const Scalar& main, const Scalar& inner) const {
  return at_inner(inner).evaluate(main);
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(c));
}

namespace {

// Bareiss elimination over Q[y]; every division is exact.
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return UniPoly();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

UniPoly sylvester_resultant(const BiPoly& f_in, const BiPoly& g_in, BiVar eliminate) {
  const BiPoly f = eliminate == BiVar::main ? f_in : f_in.swapped();
  const BiPoly g = eliminate == BiVar::main ? g_in : g_in.swapped();
  const int l = f.degree(BiVar::main);
  const int m = g.degree(BiVar::main);
  if (l < 1 || m < 1) {
    throw DegreeZero("resultant needs positive degree in the eliminated variable (got " +
                     std::to_string(l) + ", " + std::to_string(m) + ")");
  }
  const auto L = static_cast<std::size_t>(l);
  const auto M = static_cast<std::size_t>(m);
  const std::size_t n = L + M;
  std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
  for (std::size_t r = 0; r < M; ++r) {
    for (std::size_t i = 0; i <= L; ++i) s[r][r + i] = f.coeff(L - i);
  }
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t i = 0; i <= M; ++i) s[M + r][r + i] = g.coeff(M - i);
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace joints

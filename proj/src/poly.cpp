#include "polybern/poly.hpp"

#include <algorithm>
#include <ostream>

#include "polybern/combinatorics.hpp"

namespace polybern {

Poly1::Poly1(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly1 Poly1::constant(const Rat& c) { return Poly1(std::vector<Rat>{c}); }

Poly1 Poly1::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::binomial_power(const Rat& shift, std::size_t n) {
  std::vector<Rat> v(n + 1);
  Rat shift_pow = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    // coefficient of x^(n-i) is C(n, i) shift^i
    v[n - i] = Rat(binomial(static_cast<long>(n), static_cast<long>(i))) * shift_pow;
    shift_pow *= shift;
  }
  return Poly1(std::move(v));
}

Rat Poly1::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly1(std::move(v));
}

Poly1 Poly1::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  }
  return Poly1(std::move(v));
}

Poly1 Poly1::compose_affine(const Rat& scale, const Rat& shift) const {
  // Horner in the linear polynomial (scale * x + shift).
  Poly1 inner{shift, scale};
  Poly1 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly1(std::move(v));
}

std::vector<std::string> Poly1::coeff_strings() const {
  if (coeffs_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly1& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rat& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os;
}

Poly2::Poly2(std::vector<Poly1> rows) : rows_(std::move(rows)) { trim(); }

void Poly2::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

Poly2 Poly2::constant(const Rat& c) { return Poly2({Poly1::constant(c)}); }

Poly2 Poly2::from_x(const Poly1& p) {
  std::vector<Poly1> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.push_back(Poly1::constant(c));
  return Poly2(std::move(rows));
}

Poly2 Poly2::from_y(const Poly1& p) { return Poly2({p}); }

long Poly2::total_degree() const {
  long best = -1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].is_zero()) best = std::max(best, static_cast<long>(i) + rows_[i].degree());
  }
  return best;
}

Rat Poly2::operator()(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + (*it)(y);
  return acc;
}

Poly2 Poly2::swap_xy() const {
  std::size_t ydeg = 0;
  for (const auto& r : rows_) ydeg = std::max(ydeg, r.coeffs().size());
  std::vector<std::vector<Rat>> cols(ydeg, std::vector<Rat>(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].coeffs().size(); ++j) cols[j][i] = rows_[i].coeffs()[j];
  }
  std::vector<Poly1> out;
  out.reserve(ydeg);
  for (auto& c : cols) out.emplace_back(std::move(c));
  return Poly2(std::move(out));
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  if (rows_.size() < rhs.rows_.size()) rows_.resize(rhs.rows_.size());
  for (std::size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] += rhs.rows_[i];
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  if (rows_.size() < rhs.rows_.size()) rows_.resize(rhs.rows_.size());
  for (std::size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] -= rhs.rows_[i];
  trim();
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  for (auto& r : rows_) r *= c;
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly1> rows(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
  }
  return Poly2(std::move(rows));
}

std::vector<std::tuple<std::size_t, std::size_t, Rat>> Poly2::terms() const {
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& c = rows_[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) out.emplace_back(i, j, c[j]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [i, j, c] : p.terms()) {
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")*x^" << i << "*y^" << j;
    first = false;
  }
  return os;
}

}  // namespace polybern

#include "lawrence/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace lawrence {

int Monomial::total_degree() const {
  int d = 0;
  for (int e : x) d += e;
  for (int e : y) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  for (int e : x)
    if (e > 1) return false;
  for (int e : y)
    if (e > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  assert(vars() == other.vars());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > other.x[i] || y[i] > other.y[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  Monomial out = a;
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] += b.x[i];
    out.y[i] += b.y[i];
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial out = a;
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] -= b.x[i];
    out.y[i] -= b.y[i];
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  assert(a.vars() == b.vars());
  Monomial out = a;
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] = std::max(out.x[i], b.x[i]);
    out.y[i] = std::max(out.y[i], b.y[i]);
  }
  return out;
}

std::string Monomial::str() const {
  std::string s;
  auto emit = [&s](char name, std::size_t idx, int exp) {
    if (exp == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    s += std::to_string(idx + 1);
    if (exp != 1) s += "^" + std::to_string(exp);
  };
  for (std::size_t i = 0; i < x.size(); ++i) emit('x', i, x[i]);
  for (std::size_t i = 0; i < y.size(); ++i) emit('y', i, y[i]);
  return s.empty() ? "1" : s;
}

void PolyEntry::add(int coef, Monomial m) {
  if (coef == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& mm) { return t.mono < mm; });
  if (it != terms_.end() && it->mono == m) {
    it->coef += coef;
    if (it->coef == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{coef, std::move(m)});
  }
}

PolyEntry& PolyEntry::operator+=(const PolyEntry& other) {
  for (const Term& t : other.terms_) add(t.coef, t.mono);
  return *this;
}

PolyEntry PolyEntry::operator-() const {
  PolyEntry out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

PolyEntry operator*(const PolyEntry& a, const PolyEntry& b) {
  PolyEntry out;
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) out.add(s.coef * t.coef, s.mono * t.mono);
  return out;
}

bool PolyEntry::has_unit_term() const {
  for (const Term& t : terms_)
    if (t.mono.is_one()) return true;
  return false;
}

int PolyEntry::value_at_one() const {
  int v = 0;
  for (const Term& t : terms_) v += t.coef;
  return v;
}

std::string PolyEntry::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    int c = t.coef;
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += t.mono.str();
  }
  return s;
}

}  // namespace lawrence

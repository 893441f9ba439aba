#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lawrence {

// Monomial x^u y^v in the 2n-variable Lawrence frame; exponents stay small
// at desk scale, so plain ints are used.
struct Monomial {
  std::vector<int> x, y;

  Monomial() = default;
  Monomial(std::vector<int> xs, std::vector<int> ys)
      : x(std::move(xs)), y(std::move(ys)) {}
  static Monomial one(std::size_t n) {
    return Monomial(std::vector<int>(n, 0), std::vector<int>(n, 0));
  }

  std::size_t vars() const { return x.size(); }
  int total_degree() const;
  bool is_one() const { return total_degree() == 0; }
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a / b, requires b.divides(a)
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;  // e.g. "x1^2*x3*y2"
};

struct Term {
  int coef = 0;
  Monomial mono;
  auto operator<=>(const Term&) const = default;
};

// Signed sum of monomials with distinct monomials, zero terms dropped.
class PolyEntry {
 public:
  PolyEntry() = default;
  PolyEntry(int coef, Monomial m) { add(coef, std::move(m)); }

  void add(int coef, Monomial m);
  PolyEntry& operator+=(const PolyEntry& other);
  PolyEntry operator-() const;
  friend PolyEntry operator*(const PolyEntry& a, const PolyEntry& b);

  bool is_zero() const { return terms_.empty(); }
  bool has_unit_term() const;
  int value_at_one() const;  // all variables specialized to 1
  const std::vector<Term>& terms() const { return terms_; }

  friend auto operator<=>(const PolyEntry&, const PolyEntry&) = default;

  std::string str() const;  // e.g. "x1*y2 - x2*y1"

 private:
  std::vector<Term> terms_;  // sorted by monomial
};

}  // namespace lawrence

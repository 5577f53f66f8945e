#pragma once

// Polynomials over the two-element field.
//
// Symbols are either ordinary coefficient variables (non-negative exponents
// only) or invertible torus parameters (any integer exponent).  The symbol
// named "r" plays the role of a square root of a parameter a, so a = r^2 and
// the ground field k is modelled by the polynomials of even degree in r.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace d4cr {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Name of the distinguished symbol with r^2 = a.
inline constexpr const char* kSqrtA = "r";

/// Natural ordering of symbol names: runs of digits compare numerically, so
/// x5 < x10 < y.
int compare_symbol_names(const std::string& a, const std::string& b);

struct Symbol {
  std::string name;
  bool invertible = false;

  bool operator==(const Symbol& o) const { return name == o.name; }
  std::strong_ordering operator<=>(const Symbol& o) const {
    int c = compare_symbol_names(name, o.name);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  /// Factors in any order; zero exponents are dropped, repeats are merged.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(const std::string& name) const;
  /// True if every symbol is invertible (so the monomial is a unit).
  bool is_unit() const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  bool operator==(const Monomial& o) const;
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by symbol, exponents nonzero
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Monomial& m);

  static Poly zero() { return {}; }
  static Poly one() { return Poly(Monomial()); }
  static Poly constant(int c) { return (c % 2) ? one() : zero(); }
  static Poly var(const std::string& name) { return Poly(Monomial({{Symbol{name, false}, 1}})); }
  static Poly unit(const std::string& name) { return Poly(Monomial({{Symbol{name, true}, 1}})); }
  /// r, the square root of a
  static Poly sqrt_a() { return var(kSqrtA); }
  /// a = r^2
  static Poly a() { return sqrt_a() * sqrt_a(); }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// A single monomial in invertible symbols only (including 1).
  bool is_unit() const { return is_monomial() && terms_[0].is_unit(); }

  /// Every symbol occurring, sorted.
  std::vector<Symbol> symbols() const;
  bool contains(const std::string& name) const;

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Poly& o);

  /// Negative powers are allowed for units only.
  Poly pow(int n) const;
  Poly inverse() const;

  bool operator==(const Poly&) const = default;
  auto operator<=>(const Poly&) const = default;

  /// Terms in descending monomial order joined by '+'.  Powers of r are
  /// written through a, e.g. r^3 renders as a*r.
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Monomial> terms_;  // ascending, no duplicates
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Simultaneous substitution.  Throws PolyError if an invertible symbol is
/// bound to something that is not a unit monomial.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);

/// Every monomial has even degree in r.
bool is_k_rational(const Poly& p);

/// q with q^2 = p when every exponent of p is even; nullopt otherwise.
std::optional<Poly> square_root_if_perfect_square(const Poly& p);

}  // namespace d4cr

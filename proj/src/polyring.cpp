#include "d4cr/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace d4cr {

int compare_symbol_names(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size() ? -1 : 1;
      if (int c = na.compare(nb); c != 0) return c < 0 ? -1 : 1;
      // equal values: fewer leading zeros first keeps the order total
      if (ie - i != je - j) return (ie - i) < (je - j) ? -1 : 1;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i == a.size() && j == b.size()) return 0;
  return i == a.size() ? -1 : 1;
}

// ---------------------------------------------------------------- Monomial

namespace {

void check_compatible(const Symbol& a, const Symbol& b) {
  if (a.invertible != b.invertible)
    throw PolyError("symbol '" + a.name + "' used both as invertible and non-invertible");
}

void check_exponent(const Symbol& s, int e) {
  if (e < 0 && !s.invertible)
    throw PolyError("negative exponent on non-invertible symbol '" + s.name + "'");
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first) {
      check_compatible(factors_.back().first, f.first);
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
  for (const auto& [s, e] : factors_) check_exponent(s, e);
}

int Monomial::exponent(const std::string& name) const {
  for (const auto& [s, e] : factors_)
    if (s.name == name) return e;
  return 0;
}

bool Monomial::is_unit() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.first.invertible; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() || j != o.factors_.end()) {
    if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      check_compatible(i->first, j->first);
      int e = i->second + j->second;
      if (e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  for (const auto& [s, e] : r.factors_) check_exponent(s, e);
  return r;
}

Monomial Monomial::inverse() const {
  if (!is_unit()) throw PolyError("monomial " + to_string() + " is not invertible");
  Monomial r = *this;
  for (auto& f : r.factors_) f.second = -f.second;
  return r;
}

bool Monomial::operator==(const Monomial& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!(factors_[i].first == o.factors_[i].first) || factors_[i].second != o.factors_[i].second)
      return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  std::size_t n = std::min(factors_.size(), o.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = factors_[i].first <=> o.factors_[i].first; c != 0) return c;
    if (auto c = factors_[i].second <=> o.factors_[i].second; c != 0) return c;
  }
  return factors_.size() <=> o.factors_.size();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::vector<std::string> parts;
  auto power = [](const std::string& base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  for (const auto& [s, e] : factors_) {
    if (s.name == kSqrtA && e > 0) {
      if (e / 2 > 0) parts.push_back(power("a", e / 2));
      if (e % 2) parts.push_back(s.name);
    } else {
      parts.push_back(power(s.name, e));
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Monomial& m) { terms_.push_back(m); }

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms_[i]));
    i = j;
  }
  terms_ = std::move(out);
}

std::vector<Symbol> Poly::symbols() const {
  std::set<Symbol> s;
  for (const auto& m : terms_)
    for (const auto& f : m.factors()) s.insert(f.first);
  return {s.begin(), s.end()};
}

bool Poly::contains(const std::string& name) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Monomial& m) { return m.exponent(name) != 0; });
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  // merge of two sorted lists with cancellation
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && *i < *j)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || *j < *i) {
      r.terms_.push_back(*j++);
    } else {
      for (std::size_t k = 0; k < i->factors().size(); ++k)
        check_compatible(i->factors()[k].first, j->factors()[k].first);
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back(a * b);
  r.canonicalize();
  return r;
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Poly r = one();
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Poly Poly::inverse() const {
  if (!is_unit()) throw PolyError("polynomial " + to_string() + " is not a unit");
  return Poly(terms_[0].inverse());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out += (it == terms_.rbegin() ? "" : "+") + it->to_string();
  return out;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  if (bindings.empty()) return p;
  for (const Symbol& s : p.symbols()) {
    auto it = bindings.find(s.name);
    if (it != bindings.end() && s.invertible && !it->second.is_unit())
      throw PolyError("invertible symbol '" + s.name + "' bound to non-unit " +
                      it->second.to_string());
  }
  Poly out;
  for (const Monomial& m : p.terms()) {
    Poly term = Poly::one();
    std::vector<Monomial::Factor> kept;
    for (const auto& [s, e] : m.factors()) {
      auto it = bindings.find(s.name);
      if (it == bindings.end())
        kept.emplace_back(s, e);
      else
        term *= it->second.pow(e);
    }
    out += term * Poly(Monomial(std::move(kept)));
  }
  return out;
}

bool is_k_rational(const Poly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Monomial& m) { return m.exponent(kSqrtA) % 2 == 0; });
}

std::optional<Poly> square_root_if_perfect_square(const Poly& p) {
  Poly root;
  for (const Monomial& m : p.terms()) {
    std::vector<Monomial::Factor> half;
    for (const auto& [s, e] : m.factors()) {
      if (e % 2 != 0) return std::nullopt;
      half.emplace_back(s, e / 2);
    }
    // distinct monomials have distinct square roots, so no cancellation
    root += Poly(Monomial(std::move(half)));
  }
  return root;
}

}  // namespace d4cr

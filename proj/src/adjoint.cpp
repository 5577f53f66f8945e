#include "d4cr/adjoint.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace d4cr {

// -------------------------------------------------------------- lie_basis

namespace lie_basis {

int root_index(const Root& zeta) {
  int l = zeta.label();
  return l < 0 ? l + 12 : l + 11;
}

int h_index(int coord) { return 24 + coord; }

bool is_root_index(int idx) { return idx >= 0 && idx < 24; }

Root root_at(int idx) { return Root::from_label(idx < 12 ? idx - 12 : idx - 11); }

std::string name(int idx) {
  if (is_root_index(idx)) return "e(" + std::to_string(root_at(idx).label()) + ")";
  Vec4 c{};
  c[static_cast<std::size_t>(idx - 24)] = 1;
  return "h" + Coweight(c).to_string();
}

}  // namespace lie_basis

// -------------------------------------------------------------- LieVector

LieVector LieVector::basis(int idx, Poly c) {
  LieVector v;
  v.add_term(idx, c);
  return v;
}

LieVector LieVector::e(int label, Poly c) {
  return basis(lie_basis::root_index(Root::from_label(label)), std::move(c));
}

LieVector LieVector::h(const Coweight& mu, Poly c) {
  LieVector v;
  for (int i = 0; i < 4; ++i) v.add_term(lie_basis::h_index(i), c * Poly::constant(mu.coords[i]));
  return v;
}

Poly LieVector::coefficient(int idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Poly::zero() : it->second;
}

void LieVector::add_term(int idx, const Poly& c) {
  if (c.is_zero()) return;
  Poly& slot = coeffs_[idx];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(idx);
}

LieVector LieVector::operator+(const LieVector& o) const {
  LieVector r = *this;
  for (const auto& [i, c] : o.coeffs_) r.add_term(i, c);
  return r;
}

LieVector LieVector::scaled(const Poly& c) const {
  LieVector r;
  for (const auto& [i, x] : coeffs_) r.add_term(i, x * c);
  return r;
}

std::string LieVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) out += "+";
    first = false;
    if (!c.is_one()) out += "(" + c.to_string() + ")*";
    out += lie_basis::name(i);
  }
  return out;
}

// -------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity() {
  LinearMap m;
  for (int i = 0; i < lie_basis::kDim; ++i) m.at(i, i) = Poly::one();
  return m;
}

void LinearMap::set_column(int col, const LieVector& v) {
  for (int i = 0; i < lie_basis::kDim; ++i) at(i, col) = v.coefficient(i);
}

LieVector LinearMap::column(int col) const {
  LieVector v;
  for (int i = 0; i < lie_basis::kDim; ++i) v.add_term(i, at(i, col));
  return v;
}

LieVector LinearMap::apply(const LieVector& v) const {
  LieVector r;
  for (const auto& [j, c] : v.coefficients())
    for (int i = 0; i < lie_basis::kDim; ++i)
      if (!at(i, j).is_zero()) r.add_term(i, at(i, j) * c);
  return r;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  constexpr int n = lie_basis::kDim;
  LinearMap r;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const Poly& b = o.at(k, j);
      if (b.is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        const Poly& a = at(i, k);
        if (!a.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  LinearMap r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

bool LinearMap::is_identity() const { return *this == identity(); }

// ---------------------------------------------------------- adjoint action

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Coweight unit_coweight(int i) {
  Vec4 c{};
  c[static_cast<std::size_t>(i)] = 1;
  return Coweight(c);
}

// Columns for h_i under a twisted Weyl element acting on coroot coordinates.
void set_h_columns(LinearMap& m, const TwistedAction& w) {
  for (int i = 0; i < 4; ++i)
    m.set_column(lie_basis::h_index(i), LieVector::h(w.apply(unit_coweight(i))));
}

LinearMap ad_twisted(const TwistedAction& w) {
  LinearMap m;
  for (const Root& z : all_roots())
    m.set_column(lie_basis::root_index(z), LieVector::e(w.apply(z).label()));
  set_h_columns(m, w);
  return m;
}

LinearMap ad_eps(const Eps& x) {
  const Root& xi = x.root;
  const Poly& c = x.coeff;
  LinearMap m = LinearMap::identity();
  for (const Root& z : all_roots()) {
    LieVector img = LieVector::e(z.label());
    if (z == -xi) {
      img = img + LieVector::h(xi.coroot(), c) + LieVector::e(xi.label(), c * c);
    } else if (auto s = root_sum(xi, z)) {
      img = img + LieVector::e(s->label(), c);
    }
    m.set_column(lie_basis::root_index(z), img);
  }
  for (int i = 0; i < 4; ++i) {
    int p = pairing(xi, unit_coweight(i));
    m.set_column(lie_basis::h_index(i),
                 LieVector::h(unit_coweight(i)) + LieVector::e(xi.label(), c * Poly::constant(p)));
  }
  return m;
}

LinearMap ad_torus(const CochVal& t) {
  LinearMap m = LinearMap::identity();
  for (const Root& z : all_roots()) {
    int idx = lie_basis::root_index(z);
    m.at(idx, idx) = t.param.pow(pairing(z, t.cocharacter));
  }
  return m;
}

}  // namespace

LinearMap ad_atom(const Atom& x) {
  return std::visit(overloaded{
                        [](const Eps& e) { return ad_eps(e); },
                        [](const CochVal& t) { return ad_torus(t); },
                        [](const WeylRep& n) { return ad_twisted(TwistedAction::reflection(n.root)); },
                        [](const Sigma&) { return ad_twisted(TwistedAction::sigma()); },
                    },
                    x);
}

LinearMap ad_word(const GroupWord& g) {
  LinearMap m = LinearMap::identity();
  for (const Atom& a : g.atoms()) m = m * ad_atom(a);
  return m;
}

namespace {

// Weights of a toral generator, read as one-parameter subgroups.
std::vector<Coweight> toral_weights(const GroupWord& g) { return collect(g).torus.cocharacters(); }

bool weight_zero(const LieVector& v, const std::vector<Coweight>& weights) {
  for (const auto& [idx, c] : v.coefficients()) {
    if (!lie_basis::is_root_index(idx)) continue;
    for (const Coweight& mu : weights)
      if (pairing(lie_basis::root_at(idx), mu) != 0) return false;
  }
  return true;
}

}  // namespace

bool centralizes(std::span<const GroupWord> gens, const LieVector& v) {
  for (const GroupWord& g : gens) {
    if (g.is_toral()) {
      if (!weight_zero(v, toral_weights(g))) return false;
    } else if (!(ad_word(g).apply(v) == v)) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------ elimination over GF(2)(r)

namespace {

// Dense univariate polynomial over GF(2); bit i is the coefficient of r^i.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly monomial(int e) {
    Gf2Poly p;
    p.flip(e);
    return p;
  }

  static Gf2Poly from_poly(const Poly& p) {
    Gf2Poly out;
    for (const Monomial& m : p.terms()) {
      int e = 0;
      for (const auto& [sym, exp] : m.factors()) {
        if (sym.name != kSqrtA || exp < 0)
          throw UnsupportedCoefficients("coefficient " + p.to_string() +
                                        " is not a polynomial in " + kSqrtA);
        e = exp;
      }
      out.flip(e);
    }
    return out;
  }

  Poly to_poly() const {
    Poly p;
    for (int e = 0; e <= degree(); ++e)
      if (bit(e)) p += Poly::sqrt_a().pow(e);
    return p;
  }

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  int degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
  }

  bool bit(int e) const {
    std::size_t w = static_cast<std::size_t>(e) / 64;
    return w < words_.size() && ((words_[w] >> (e % 64)) & 1U);
  }

  Gf2Poly operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    if (r.words_.size() < o.words_.size()) r.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
  }

  Gf2Poly operator*(const Gf2Poly& o) const {
    Gf2Poly r;
    for (int e = 0; e <= o.degree(); ++e)
      if (o.bit(e)) r = r + shifted(e);
    return r;
  }

  // quotient and remainder
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const {
    Gf2Poly q, rem = *this;
    int dd = d.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
      int s = rem.degree() - dd;
      q.flip(s);
      rem = rem + d.shifted(s);
    }
    return {q, rem};
  }

  Gf2Poly operator/(const Gf2Poly& d) const { return divmod(d).first; }

  bool operator==(const Gf2Poly&) const = default;

 private:
  void flip(int e) {
    std::size_t w = static_cast<std::size_t>(e) / 64;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (e % 64);
    trim();
  }

  Gf2Poly shifted(int s) const {
    Gf2Poly r;
    for (int e = 0; e <= degree(); ++e)
      if (bit(e)) r.flip(e + s);
    return r;
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

using Row = std::vector<Gf2Poly>;

void remove_content(Row& row) {
  Gf2Poly g;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x : gcd(g, x);
    if (g.is_one()) return;
  }
  if (g.is_zero() || g.is_one()) return;
  for (auto& x : row)
    if (!x.is_zero()) x = x / g;
}

// Fraction-free Gauss-Jordan elimination in place; returns the pivot columns.
std::vector<int> eliminate(std::vector<Row>& rows, int ncols) {
  std::vector<int> pivot_col;
  std::size_t top = 0;
  for (int col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t i = top; i < rows.size(); ++i)
      if (!rows[i][col].is_zero() &&
          (best == rows.size() || rows[i][col].degree() < rows[best][col].degree()))
        best = i;
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    const Row& p = rows[top];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][col].is_zero()) continue;
      Gf2Poly f = rows[i][col];
      for (int k = 0; k < ncols; ++k) rows[i][k] = p[col] * rows[i][k] + f * p[k];
      remove_content(rows[i]);
    }
    pivot_col.push_back(col);
    ++top;
  }
  return pivot_col;
}

// Kernel of the row system.
std::vector<Row> kernel(std::vector<Row> rows, int ncols) {
  std::vector<int> pivot_col = eliminate(rows, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Row> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    // p_i x_{c_i} + a_{i,f} x_f = 0  =>  x_{c_i} = a_{i,f} / p_i  (char 2)
    Gf2Poly denom = Gf2Poly::monomial(0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (rows[i][f].is_zero()) continue;
      const Gf2Poly& p = rows[i][pivot_col[i]];
      denom = denom * (p / gcd(denom, p));
    }
    Row x(static_cast<std::size_t>(ncols));
    x[static_cast<std::size_t>(f)] = denom;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (rows[i][f].is_zero()) continue;
      const Gf2Poly& p = rows[i][pivot_col[i]];
      x[static_cast<std::size_t>(pivot_col[i])] = rows[i][f] * (denom / p);
    }
    remove_content(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

Row to_row(const LieVector& v) {
  Row r(lie_basis::kDim);
  for (const auto& [idx, c] : v.coefficients()) r[static_cast<std::size_t>(idx)] = Gf2Poly::from_poly(c);
  return r;
}

}  // namespace

int lie_rank(std::span<const LieVector> vectors) {
  std::vector<Row> rows;
  for (const LieVector& v : vectors) rows.push_back(to_row(v));
  return static_cast<int>(eliminate(rows, lie_basis::kDim).size());
}

bool span_contains(std::span<const LieVector> family, const LieVector& v) {
  std::vector<LieVector> ext(family.begin(), family.end());
  ext.push_back(v);
  return lie_rank(family) == lie_rank(ext);
}

std::vector<LieVector> lie_centralizer_basis(std::span<const GroupWord> gens) {
  constexpr int n = lie_basis::kDim;
  std::vector<Row> rows;
  for (const GroupWord& g : gens) {
    if (g.is_toral()) {
      for (const Coweight& mu : toral_weights(g))
        for (const Root& z : all_roots()) {
          if (pairing(z, mu) == 0) continue;
          Row r(n);
          r[static_cast<std::size_t>(lie_basis::root_index(z))] = Gf2Poly::monomial(0);
          rows.push_back(std::move(r));
        }
      continue;
    }
    LinearMap m = ad_word(g) + LinearMap::identity();  // Ad(g) - 1 in char 2
    for (int i = 0; i < n; ++i) {
      Row r(n);
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        r[static_cast<std::size_t>(j)] = Gf2Poly::from_poly(m.at(i, j));
        nonzero = nonzero || !r[static_cast<std::size_t>(j)].is_zero();
      }
      if (nonzero) rows.push_back(std::move(r));
    }
  }

  std::vector<LieVector> out;
  for (const Row& x : kernel(std::move(rows), n)) {
    LieVector v;
    for (int j = 0; j < n; ++j) v.add_term(j, x[static_cast<std::size_t>(j)].to_poly());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace d4cr

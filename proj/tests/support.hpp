#pragma once

// Test-only oracles and random generators.
//
//  * Euclidean model of D4: alpha = e1-e2, beta = e2-e3, gamma = e3-e4,
//    delta = e3+e4, with the standard dot product.
//  * Evaluation of polynomials at points of GF(2^8).
//  * The 8-dimensional orthogonal representation of the sigma-free part
//    of the group, with matrix entries in the polynomial ring.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "d4cr/engine.hpp"
#include "d4cr/polyring.hpp"
#include "d4cr/rootsys.hpp"

namespace testsupport {

using d4cr::Poly;

inline constexpr std::uint64_t kSeed = 0x5eed'd4c2'0000'0001ULL;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(kSeed);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// ------------------------------------------------------------ Euclidean D4

using EVec = std::array<int, 4>;

inline EVec euclid(const d4cr::Vec4& c) {
  // a*alpha + b*beta + c*gamma + d*delta
  return {c[0], -c[0] + c[1], -c[1] + c[2] + c[3], -c[2] + c[3]};
}

inline int dot(const EVec& x, const EVec& y) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += x[i] * y[i];
  return s;
}

inline EVec add(const EVec& x, const EVec& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

inline bool is_euclid_root(const EVec& v) {
  int nz = 0;
  for (int x : v) {
    if (x != 0 && x != 1 && x != -1) return false;
    nz += x != 0;
  }
  return nz == 2;
}

// ------------------------------------------------------------ GF(2^8)

inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    bool hi = a & 0x80;
    a = static_cast<std::uint8_t>(a << 1);
    if (hi) a ^= 0x1B;
    b >>= 1;
  }
  return p;
}

inline std::uint8_t gf_pow(std::uint8_t a, int e) {
  if (e < 0) e = (e % 255 + 255) % 255;  // a != 0 assumed
  std::uint8_t r = 1;
  for (int i = 0; i < e; ++i) r = gf_mul(r, a);
  return r;
}

inline std::uint8_t evaluate(const Poly& p, const std::map<std::string, std::uint8_t>& at) {
  std::uint8_t sum = 0;
  for (const d4cr::Monomial& m : p.terms()) {
    std::uint8_t term = 1;
    for (const auto& [sym, e] : m.factors()) term = gf_mul(term, gf_pow(at.at(sym.name), e));
    sum ^= term;
  }
  return sum;
}

// ------------------------------------------------------------ random data

inline const std::vector<std::string>& plain_symbols() {
  static const std::vector<std::string> s{"x1", "x2", "x3", "r"};
  return s;
}

/// Random polynomial in x1, x2, x3, r and the invertible symbol s.
inline Poly random_poly(int max_terms = 4) {
  Poly p;
  int n = uniform(0, max_terms);
  for (int t = 0; t < n; ++t) {
    std::vector<d4cr::Monomial::Factor> fs;
    for (const std::string& name : plain_symbols()) fs.push_back({d4cr::Symbol{name, false}, uniform(0, 2)});
    fs.push_back({d4cr::Symbol{"s", true}, uniform(-2, 2)});
    p += Poly(d4cr::Monomial(std::move(fs)));
  }
  return p;
}

/// Random polynomial in x1, x2, x3, r only.
inline Poly random_coefficient(int max_terms = 2) {
  Poly p;
  int n = uniform(1, max_terms);
  for (int t = 0; t < n; ++t) {
    std::vector<d4cr::Monomial::Factor> fs;
    for (const std::string& name : plain_symbols()) fs.push_back({d4cr::Symbol{name, false}, uniform(0, 1)});
    p += Poly(d4cr::Monomial(std::move(fs)));
  }
  return p.is_zero() ? Poly::one() : p;
}

/// Random k-rational polynomial (even degree in r) in the symbols t1, t2.
inline Poly random_k_rational() {
  Poly p;
  int n = uniform(0, 3);
  for (int t = 0; t < n; ++t) {
    std::vector<d4cr::Monomial::Factor> fs{{d4cr::Symbol{"r", false}, 2 * uniform(0, 2)},
                                           {d4cr::Symbol{"t1", false}, uniform(0, 2)},
                                           {d4cr::Symbol{"t2", false}, uniform(0, 2)}};
    p += Poly(d4cr::Monomial(std::move(fs)));
  }
  return p;
}

inline std::map<std::string, std::uint8_t> random_point() {
  std::map<std::string, std::uint8_t> at;
  for (const char* n : {"x1", "x2", "x3", "r", "t1", "t2", "c", "x"})
    at[n] = static_cast<std::uint8_t>(uniform(0, 255));
  at["s"] = static_cast<std::uint8_t>(uniform(1, 255));
  return at;
}

/// Word of eps atoms over the given labels.
inline d4cr::GroupWord random_unipotent_word(const std::vector<int>& labels, int min_len, int max_len) {
  d4cr::GroupWord w;
  int n = uniform(min_len, max_len);
  for (int i = 0; i < n; ++i)
    w *= d4cr::GroupWord::eps(labels[static_cast<std::size_t>(uniform(0, static_cast<int>(labels.size()) - 1))],
                              random_coefficient());
  return w;
}

inline d4cr::Coweight random_coweight() {
  return d4cr::Coweight(d4cr::Vec4{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)});
}

/// Random word mixing all atom kinds; eps atoms use positive roots.
inline d4cr::GroupWord random_word(int max_len, bool allow_sigma = true) {
  d4cr::GroupWord w;
  int n = uniform(1, max_len);
  for (int i = 0; i < n; ++i) {
    int kind = uniform(0, 9);
    if (kind < 6) {
      w *= d4cr::GroupWord::eps(uniform(1, 12), random_coefficient());
    } else if (kind < 7) {
      w *= d4cr::GroupWord::cochar(random_coweight(), Poly::unit("s"));
    } else if (kind < 9 || !allow_sigma) {
      w *= d4cr::GroupWord::weyl(uniform(1, 4));
    } else {
      w *= d4cr::GroupWord::sigma();
    }
  }
  return w;
}

/// A random word that collects without obstruction.
inline d4cr::GroupWord random_collectible_word(int max_len, bool allow_sigma = true) {
  while (true) {
    d4cr::GroupWord w = random_word(max_len, allow_sigma);
    try {
      (void)d4cr::collect(w);
      return w;
    } catch (const d4cr::CollectionObstruction&) {
    }
  }
}

// ------------------------------------------------------ 8-dim matrix model

struct Mat8 {
  std::array<std::array<Poly, 8>, 8> e{};

  static Mat8 identity() {
    Mat8 m;
    for (int i = 0; i < 8; ++i) m.e[i][i] = Poly::one();
    return m;
  }
  Mat8 operator*(const Mat8& o) const {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        if (e[i][k].is_zero()) continue;
        for (int j = 0; j < 8; ++j)
          if (!o.e[k][j].is_zero()) r.e[i][j] += e[i][k] * o.e[k][j];
      }
    return r;
  }
  Mat8 operator+(const Mat8& o) const {
    Mat8 r = *this;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r.e[i][j] += o.e[i][j];
    return r;
  }
  bool operator==(const Mat8&) const = default;
};

// position of the weight +-e_i
inline int weight_pos(int i, int sign) { return sign > 0 ? i : 4 + i; }

/// Nilpotent matrix E_zeta with x_zeta(t) = 1 + t E_zeta.
inline Mat8 root_matrix(const d4cr::Root& zeta) {
  EVec v = euclid(zeta.coords());
  std::vector<std::pair<int, int>> w;  // (index, sign)
  for (int i = 0; i < 4; ++i)
    if (v[i] != 0) w.emplace_back(i, v[i]);
  Mat8 m;
  auto [i1, s1] = w[0];
  auto [i2, s2] = w[1];
  m.e[weight_pos(i1, s1)][weight_pos(i2, -s2)] = Poly::one();
  m.e[weight_pos(i2, s2)][weight_pos(i1, -s1)] = Poly::one();
  return m;
}

inline Mat8 scaled(const Mat8& m, const Poly& c) {
  Mat8 r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.e[i][j] = m.e[i][j] * c;
  return r;
}

inline Mat8 matrix_of(const d4cr::Atom& atom);

inline Mat8 matrix_of(const d4cr::GroupWord& w) {
  Mat8 m = Mat8::identity();
  for (const d4cr::Atom& a : w.atoms()) m = m * matrix_of(a);
  return m;
}

/// Sigma has no image here; callers only pass sigma-free words.
inline Mat8 matrix_of(const d4cr::Atom& atom) {
  if (const auto* e = std::get_if<d4cr::Eps>(&atom))
    return Mat8::identity() + scaled(root_matrix(e->root), e->coeff);
  if (const auto* t = std::get_if<d4cr::CochVal>(&atom)) {
    EVec m = euclid(t->cocharacter.coords);
    Mat8 r;
    for (int i = 0; i < 4; ++i) {
      r.e[weight_pos(i, 1)][weight_pos(i, 1)] = t->param.pow(m[i]);
      r.e[weight_pos(i, -1)][weight_pos(i, -1)] = t->param.pow(-m[i]);
    }
    return r;
  }
  if (const auto* n = std::get_if<d4cr::WeylRep>(&atom)) {
    Mat8 x = Mat8::identity() + root_matrix(n->root);
    Mat8 y = Mat8::identity() + root_matrix(-n->root);
    return x * y * x;
  }
  throw std::logic_error("sigma has no matrix in the 8-dimensional model");
}

}  // namespace testsupport

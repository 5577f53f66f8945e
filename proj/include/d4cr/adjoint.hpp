#pragma once

// The 28-dimensional Lie algebra of G~ in a Chevalley basis
// {e_zeta : zeta a root} u {h_alpha, h_beta, h_gamma, h_delta}, the adjoint
// action of group atoms, and centralizers of generator sets.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "d4cr/engine.hpp"
#include "d4cr/polyring.hpp"
#include "d4cr/rootsys.hpp"

namespace d4cr {

class UnsupportedCoefficients : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis indices: 0..23 are e_zeta in label order (-12..-1, 1..12),
/// 24..27 are h_alpha, h_beta, h_gamma, h_delta.
namespace lie_basis {
inline constexpr int kDim = 28;
int root_index(const Root& zeta);
int h_index(int coord);
bool is_root_index(int idx);
Root root_at(int idx);
std::string name(int idx);
}  // namespace lie_basis

class LieVector {
 public:
  LieVector() = default;

  static LieVector e(int label, Poly c = Poly::one());
  /// h_mu = sum_i mu_i h_i
  static LieVector h(const Coweight& mu, Poly c = Poly::one());
  static LieVector basis(int idx, Poly c = Poly::one());

  Poly coefficient(int idx) const;
  const std::map<int, Poly>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int idx, const Poly& c);
  LieVector operator+(const LieVector& o) const;
  LieVector scaled(const Poly& c) const;

  bool operator==(const LieVector&) const = default;

  /// e.g. "e(6)+e(9)" or "(a)*e(12)+h(1,0,0,0)"
  std::string to_string() const;

 private:
  std::map<int, Poly> coeffs_;  // no zero entries
};

class LinearMap {
 public:
  LinearMap() : entries_(lie_basis::kDim * lie_basis::kDim) {}

  static LinearMap identity();

  const Poly& at(int row, int col) const { return entries_[row * lie_basis::kDim + col]; }
  Poly& at(int row, int col) { return entries_[row * lie_basis::kDim + col]; }

  void set_column(int col, const LieVector& v);
  LieVector column(int col) const;

  LieVector apply(const LieVector& v) const;
  /// (this o other)(v) = this(other(v))
  LinearMap operator*(const LinearMap& other) const;
  LinearMap operator+(const LinearMap& other) const;

  bool is_identity() const;
  bool operator==(const LinearMap&) const = default;

 private:
  std::vector<Poly> entries_;
};

LinearMap ad_atom(const Atom& x);
LinearMap ad_word(const GroupWord& g);

/// True iff every non-toral generator fixes v and every toral generator,
/// read as its full one-parameter subgroups, fixes v.
bool centralizes(std::span<const GroupWord> gens, const LieVector& v);

/// Basis of the common fixed space.  Generator coefficients must be
/// polynomials in r alone; toral generators contribute weight-zero conditions.
/// Throws UnsupportedCoefficients otherwise.
std::vector<LieVector> lie_centralizer_basis(std::span<const GroupWord> gens);

/// Rank over GF(2)(r) of a family of vectors with coefficients in GF(2)[r].
int lie_rank(std::span<const LieVector> vectors);

/// v lies in the GF(2)(r)-span of the family.
bool span_contains(std::span<const LieVector> family, const LieVector& v);

}  // namespace d4cr

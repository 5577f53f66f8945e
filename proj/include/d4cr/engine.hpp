#pragma once

// Words in G = G~ x| <sigma> (G~ of type D4, characteristic 2) and their
// collection into a normal form
//
//     w . sigma^j  *  torus  *  prod eps_zeta(c_zeta)
//
// with the root elements in a fixed order.  All Chevalley signs are 1 in
// characteristic 2, and Weyl representatives satisfy n_xi^2 = 1.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "d4cr/polyring.hpp"
#include "d4cr/rootsys.hpp"

namespace d4cr {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collection would have to merge eps_zeta and eps_{-zeta}; the word leaves
/// the (torus normalizer) x (unipotent) fragment the collector handles.
class CollectionObstruction : public EngineError {
 public:
  explicit CollectionObstruction(const Root& zeta);
  const Root& root() const { return root_; }

 private:
  Root root_;
};

/// act_on_coweight was given an element with unipotent content.
class NotWeylToral : public EngineError {
 public:
  using EngineError::EngineError;
};

struct Eps {
  Root root;
  Poly coeff;
};

/// mu^vee(param); param must be a unit monomial.
struct CochVal {
  Coweight cocharacter;
  Poly param;
};

/// n_xi
struct WeylRep {
  Root root;
};

struct Sigma {};

using Atom = std::variant<Eps, CochVal, WeylRep, Sigma>;

std::string to_string(const Atom& atom);

class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Atom> atoms) : atoms_(atoms) {}
  explicit GroupWord(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  static GroupWord eps(int label, Poly c) { return {Eps{Root::from_label(label), std::move(c)}}; }
  /// Throws EngineError unless param is a unit monomial.
  static GroupWord cochar(const Coweight& mu, Poly param);
  static GroupWord weyl(int label) { return {WeylRep{Root::from_label(label)}}; }
  static GroupWord sigma() { return {Sigma{}}; }

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  GroupWord operator*(const GroupWord& o) const;
  GroupWord& operator*=(const GroupWord& o);

  /// Only CochVal atoms (and at least one of them).
  bool is_toral() const;

  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

/// n_alpha sigma
GroupWord n_alpha_sigma();

/// Torus element prod_s mu_s(s), stored per invertible symbol.
class TorusPart {
 public:
  const std::vector<std::pair<Symbol, Coweight>>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }

  /// Multiply by mu(param).
  void multiply(const Coweight& mu, const Poly& param);
  /// Conjugate: each mu_s replaced by its image under the action.
  TorusPart transformed(const TwistedAction& w) const;
  TorusPart inverse() const;

  /// zeta(t) as a unit monomial: prod_s s^{<zeta, mu_s>}
  Poly character_value(const Root& zeta) const;

  /// Coweights of the factors, one per symbol.
  std::vector<Coweight> cocharacters() const;

  bool operator==(const TorusPart&) const = default;

 private:
  std::vector<std::pair<Symbol, Coweight>> factors_;  // sorted by symbol, no zero coweights
};

/// Total order on root labels used to arrange the unipotent part.
class RootOrder {
 public:
  /// -12 < ... < -1 < 1 < ... < 12 (ascending height).
  static RootOrder canonical();
  /// Listed labels first in the given order, then the rest canonically.
  static RootOrder from_sequence(std::span<const int> labels);

  int rank(const Root& r) const { return rank_[static_cast<std::size_t>(r.label() + 12)]; }
  bool less(const Root& a, const Root& b) const { return rank(a) < rank(b); }

 private:
  std::vector<int> rank_ = std::vector<int>(25, 0);
};

struct NormalForm {
  TwistedAction twisted;
  TorusPart torus;
  std::vector<Eps> unipotent;  // distinct roots, nonzero coefficients, in collection order

  bool is_identity() const {
    return twisted.is_identity() && torus.is_identity() && unipotent.empty();
  }

  /// Coefficient of eps_zeta, zero if absent.
  Poly coefficient(int label) const;
  std::vector<int> unipotent_labels() const;

  GroupWord to_word() const;

  /// e.g. "n_1 sigma^1 cochar(1,0,1,0)(s) eps(12)(a)"; identity renders as "1".
  std::string to_string() const;

  /// Per-root comparison of the unipotent part; atom order is not compared.
  bool operator==(const NormalForm& o) const;
};

struct CollectOptions {
  RootOrder order = RootOrder::canonical();
  std::size_t step_limit = 200000;
};

NormalForm collect(const GroupWord& w, const CollectOptions& opts = {});

GroupWord invert(const GroupWord& g);

/// g h g^{-1}, collected.
NormalForm conjugate(const GroupWord& g, const GroupWord& h, const CollectOptions& opts = {});

/// n-fold product, n >= 1.
NormalForm power(const GroupWord& g, int n, const CollectOptions& opts = {});

/// Image of mu under the twisted Weyl part of g.  Throws NotWeylToral if g
/// collects to something with root elements.
Coweight act_on_coweight(const GroupWord& g, const Coweight& mu);

enum class MembershipClass { InLevi, InRadical, InParabolic, NotInParabolic };

std::string to_string(MembershipClass m);

/// Does the twisted element preserve the Levi / radical / opposite split for lambda?
bool stabilizes_partition(const TwistedAction& w, const Coweight& lambda);

MembershipClass membership(const NormalForm& nf, const Coweight& lambda);

/// [conjugate(v, g) for g in gens]
std::vector<NormalForm> generator_transport(const GroupWord& v, std::span<const GroupWord> gens,
                                            const CollectOptions& opts = {});

}  // namespace d4cr

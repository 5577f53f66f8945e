#pragma once

// Generic radical elements, polynomial constraint systems derived from them,
// and a small characteristic-2 reduction pipeline with certificates.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "d4cr/engine.hpp"
#include "d4cr/polyring.hpp"
#include "d4cr/rootsys.hpp"

namespace d4cr {

/// reduce found equations none of its rules apply to.
class UnsolvedResidual : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// u = prod eps_zeta(x_zeta) over the given labels, in the given order.
struct GenericElement {
  std::vector<int> labels;
  GroupWord word;

  static GenericElement over(std::span<const int> labels);
  /// "x4", "x12", "xm12" for label -12
  static std::string variable_name(int label);
  static Poly variable(int label) { return Poly::var(variable_name(label)); }

  std::vector<std::string> variables() const;
  /// eps atoms with coefficients replaced via substitute(.., bindings)
  GroupWord instantiate(const std::map<std::string, Poly>& bindings) const;
};

struct ConstraintSystem {
  std::vector<Poly> equations;         // each read as "= 0"
  std::vector<std::string> variables;  // unknowns; every other symbol is a parameter

  /// Symbols occurring in the equations that are not variables.
  std::vector<std::string> parameters() const;
  /// Rename a variable (in the equations and the variable list).
  ConstraintSystem renamed(const std::string& from, const std::string& to) const;
};

struct LeviConjugacy {
  ConstraintSystem system;
  GenericElement u;
  NormalForm expansion;  // collected u^-1 g u
};

/// Conditions on u in R_u(P_lambda) for u^-1 g u to lie in L_lambda: the
/// coefficients of every root with nonzero pairing against lambda vanish.
/// `opts` selects the order used to collect the expansion.
LeviConjugacy levi_conjugacy_constraints(const GroupWord& g, const Coweight& lambda,
                                         const CollectOptions& opts = {});

struct Solvable {
  /// eliminated variable -> value in terms of the variables left free
  std::map<std::string, Poly> assignment;
};

/// The system forces p^2 = c with p k-rational and c not a square in k.
struct UnsolvableOverK {
  Poly square_root_defect;
  Poly constant;
};

/// A nonzero equation in the parameters alone.
struct Inconsistent {
  Poly witness;
};

using Certificate = std::variant<Solvable, UnsolvableOverK, Inconsistent>;

/// "SOLVABLE: x4 = 0, x6 = x9", "UNSOLVABLE-OVER-K: (p)^2 = a with p = y+x9",
/// "INCONSISTENT: a = 0"
std::string to_string(const Certificate& c);

/// Rules, applied to the canonically sorted equations until none remain:
///   a nonzero equation free of variables           -> Inconsistent
///   v + q (v linear, absent from q, q k-rational)  -> substitute v := q
///   q^2 + c (q in the variables)                   -> q + sqrt(c), or a certificate
/// Throws UnsolvedResidual when equations remain and no rule applies.
Certificate reduce(const ConstraintSystem& system);

enum class RadicalSide { Positive, Negative };

struct SubgroupDescriptor {
  std::vector<int> free_unipotent_labels;
  std::vector<Coweight> torus_rank_basis;
};

/// Solutions u of g u g^-1 = u for every generator, with u generic over the
/// chosen radical.  Toral generators stand for their one-parameter subgroups.
/// Throws UnsolvedResidual unless the solution set is a coordinate subgroup.
SubgroupDescriptor centralizer_in_radical(std::span<const GroupWord> gens, const Coweight& lambda,
                                          RadicalSide side);

/// eps_zeta(c) or mu(s) for a fresh symbol.
using Family = std::variant<Eps, CochVal>;

/// First nonzero coefficient of the collected commutator h f h^-1 f^-1, or
/// nullopt when h commutes with the family.
std::optional<Poly> noncommuting_witness(const GroupWord& h, const Family& family);

/// GF(2)-span equality of two families of polynomials viewed as vectors of
/// monomial coefficients.
bool same_linear_span(std::span<const Poly> a, std::span<const Poly> b);

/// Total degree in the given variables of the highest monomial (0 for constants).
int degree_in(const Poly& p, std::span<const std::string> variables);

}  // namespace d4cr

#pragma once

// Root system of type D4 with the triality automorphism.
//
// Simple roots are alpha, beta, gamma, delta with beta the branch node.
// Coordinates are always given in (alpha, beta, gamma, delta) order, both for
// roots (simple-root basis) and for coweights (simple-coroot basis).  Positive
// roots carry labels 1..12 and their negatives -1..-12; labels 1, 2, 3, 4 are
// alpha, gamma, delta, beta.

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace d4cr {

using Vec4 = std::array<int, 4>;

class RootSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a twisted Weyl element does not permute a requested root set.
class NotStable : public RootSystemError {
 public:
  using RootSystemError::RootSystemError;
};

struct Coweight {
  Vec4 coords{};

  Coweight() = default;
  constexpr explicit Coweight(Vec4 c) : coords(c) {}

  static Coweight alpha() { return Coweight({1, 0, 0, 0}); }
  static Coweight beta() { return Coweight({0, 1, 0, 0}); }
  static Coweight gamma() { return Coweight({0, 0, 1, 0}); }
  static Coweight delta() { return Coweight({0, 0, 0, 1}); }

  bool is_zero() const { return coords == Vec4{}; }

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator-() const;
  Coweight operator*(int k) const;

  auto operator<=>(const Coweight&) const = default;

  /// "(a,b,c,d)"
  std::string to_string() const;
};

Coweight operator*(int k, const Coweight& mu);

class Root {
 public:
  /// Throws RootSystemError unless label is in +-{1..12}.
  static Root from_label(int label);
  /// Throws RootSystemError unless coords is one of the 24 roots.
  static Root from_coords(const Vec4& coords);
  static std::optional<Root> try_from_coords(const Vec4& coords);

  static Root alpha() { return from_label(1); }
  static Root gamma() { return from_label(2); }
  static Root delta() { return from_label(3); }
  static Root beta() { return from_label(4); }

  int label() const { return label_; }
  const Vec4& coords() const { return coords_; }
  bool is_positive() const { return label_ > 0; }
  bool is_simple() const { return label_ >= 1 && label_ <= 4; }
  int height() const;

  /// The coroot, written in simple-coroot coordinates.  D4 is simply laced,
  /// so this has the same coordinates as the root.
  Coweight coroot() const { return Coweight(coords_); }

  Root operator-() const { return from_label(-label_); }

  bool operator==(const Root& o) const { return label_ == o.label_; }
  auto operator<=>(const Root& o) const { return label_ <=> o.label_; }

 private:
  Root(int label, Vec4 coords) : label_(label), coords_(coords) {}
  int label_;
  Vec4 coords_;
};

/// All 24 roots ordered by label: -12, ..., -1, 1, ..., 12.
std::span<const Root> all_roots();
/// The 12 positive roots, labels 1..12.
std::span<const Root> positive_roots();
/// alpha, beta, gamma, delta in coordinate order.
std::span<const Root> simple_roots();

/// The D4 Cartan matrix in (alpha, beta, gamma, delta) order.
const std::array<Vec4, 4>& cartan_matrix();

/// <zeta, mu> for a root (or any root-lattice vector) against a coweight.
int pairing(const Vec4& root_coords, const Coweight& mu);
int pairing(const Root& zeta, const Coweight& mu);

/// s_xi . zeta = zeta - <zeta, xi^vee> xi
Root reflect(const Root& xi, const Root& zeta);
/// s_xi . mu = mu - <xi, mu> xi^vee
Coweight reflect(const Root& xi, const Coweight& mu);

/// Triality: alpha -> gamma -> delta -> alpha, beta fixed.
Root sigma_act(const Root& zeta);
Coweight sigma_act(const Coweight& mu);

/// Sum of two roots when it is again a root.
std::optional<Root> root_sum(const Root& a, const Root& b);

/// Integer 4x4 matrix acting on coordinate vectors.  Because D4 is simply
/// laced and triality permutes coordinates, the same matrix describes the
/// action of a twisted Weyl element on roots and on coweights.
struct Mat4 {
  std::array<Vec4, 4> rows{};

  static Mat4 identity();
  Vec4 operator*(const Vec4& v) const;
  Mat4 operator*(const Mat4& o) const;
  bool operator==(const Mat4&) const = default;
};

/// An element w.sigma^j of the twisted Weyl group W x| <sigma>.
class TwistedAction {
 public:
  TwistedAction() = default;

  static TwistedAction reflection(const Root& xi);
  static TwistedAction sigma();

  const Mat4& matrix() const { return matrix_; }
  int sigma_exponent() const { return sigma_exp_; }

  /// Matrix of the Weyl factor w (the element with sigma^j stripped off the right).
  Mat4 weyl_matrix() const;

  bool is_identity() const { return sigma_exp_ == 0 && matrix_ == Mat4::identity(); }

  TwistedAction operator*(const TwistedAction& o) const;
  TwistedAction inverse() const;

  Root apply(const Root& zeta) const;
  Coweight apply(const Coweight& mu) const;

  /// Number of positive roots sent to negative roots by the Weyl factor.
  int weyl_length() const;

  /// Lexicographically least reduced word (by root label) for the Weyl factor,
  /// as a list of simple roots.
  std::vector<Root> reduced_word() const;

  bool operator==(const TwistedAction&) const = default;

 private:
  TwistedAction(Mat4 m, int j) : matrix_(m), sigma_exp_(j) {}
  Mat4 matrix_ = Mat4::identity();
  int sigma_exp_ = 0;
};

struct TwistedGenerator {
  enum class Kind { Reflection, Sigma };
  Kind kind = Kind::Sigma;
  Root root = Root::alpha();  // used for reflections only

  static TwistedGenerator s(const Root& xi) { return {Kind::Reflection, xi}; }
  static TwistedGenerator sigma() { return {Kind::Sigma, Root::alpha()}; }
};

/// Word in simple reflections and sigma; the leftmost generator acts last.
struct TwistedWeylWord {
  std::vector<TwistedGenerator> gens;

  TwistedAction action() const;
};

Root word_act(const TwistedWeylWord& w, const Root& zeta);
Coweight word_act(const TwistedWeylWord& w, const Coweight& mu);

/// The 12-letter word n_a n_b n_a n_g n_b n_a n_d n_b n_a n_g n_b n_d.
TwistedWeylWord longest_word();

/// Canonical cycle decomposition: each cycle starts at its minimum and
/// cycles are sorted by their minimum.  Fixed points are kept as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::string to_string() const;
  bool operator==(const CycleDecomposition&) const = default;
};

/// Permutation induced by w on the labels {zeta : <zeta, lambda> > 0}.
/// Throws NotStable if w does not preserve that set.
CycleDecomposition radical_permutation(const TwistedAction& w, const Coweight& lambda);
CycleDecomposition radical_permutation(const TwistedWeylWord& w, const Coweight& lambda);

struct ParabolicPartition {
  std::vector<int> levi;      // pairing zero
  std::vector<int> radical;   // pairing positive
  std::vector<int> opposite;  // pairing negative
};

ParabolicPartition parabolic_partition(const Coweight& lambda);

/// Canonical (Hermite normal form) basis of the coweights fixed by w.
std::vector<Coweight> fixed_cocharacters(const TwistedAction& w);
std::vector<Coweight> fixed_cocharacters(const TwistedWeylWord& w);

/// lambda = alpha^vee + 2 beta^vee + gamma^vee + delta^vee
Coweight highest_coroot();

struct RootRecord {
  int label;
  Vec4 coords;
  int pairing;
};

/// One record per positive root with its pairing against mu.
std::vector<RootRecord> root_table(const Coweight& mu);

}  // namespace d4cr

#include "d4cr/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace d4cr {

namespace {

constexpr std::array<Vec4, 12> kPositiveCoords = {{
    {1, 0, 0, 0},  // 1  alpha
    {0, 0, 1, 0},  // 2  gamma
    {0, 0, 0, 1},  // 3  delta
    {0, 1, 0, 0},  // 4  beta
    {1, 1, 0, 0},  // 5
    {0, 1, 1, 0},  // 6
    {0, 1, 0, 1},  // 7
    {1, 1, 1, 0},  // 8
    {1, 1, 0, 1},  // 9
    {0, 1, 1, 1},  // 10
    {1, 1, 1, 1},  // 11
    {1, 2, 1, 1},  // 12
}};

constexpr std::array<Vec4, 4> kCartan = {{
    {2, -1, 0, 0},
    {-1, 2, -1, -1},
    {0, -1, 2, 0},
    {0, -1, 0, 2},
}};

Vec4 negate(const Vec4& v) { return {-v[0], -v[1], -v[2], -v[3]}; }

int label_of(const Vec4& c) {
  for (std::size_t i = 0; i < kPositiveCoords.size(); ++i) {
    if (kPositiveCoords[i] == c) return static_cast<int>(i) + 1;
    if (negate(kPositiveCoords[i]) == c) return -static_cast<int>(i) - 1;
  }
  return 0;
}

// alpha -> gamma -> delta -> alpha on coordinates (a, b, c, d).
Vec4 sigma_coords(const Vec4& v) { return {v[3], v[1], v[0], v[2]}; }

Mat4 sigma_matrix() {
  Mat4 m;
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1;
    Vec4 img = sigma_coords(e);
    for (int i = 0; i < 4; ++i) m.rows[i][j] = img[i];
  }
  return m;
}

Mat4 reflection_matrix(const Root& xi) {
  // v -> v - (xi^T A v) xi
  Mat4 m = Mat4::identity();
  const Vec4& x = xi.coords();
  Vec4 xa{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) xa[j] += x[k] * kCartan[k][j];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.rows[i][j] -= x[i] * xa[j];
  return m;
}

Mat4 matrix_power(const Mat4& m, int n) {
  Mat4 r = Mat4::identity();
  for (int i = 0; i < n; ++i) r = r * m;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Coweight

Coweight Coweight::operator+(const Coweight& o) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = coords[i] + o.coords[i];
  return Coweight(r);
}

Coweight Coweight::operator-(const Coweight& o) const { return *this + (-o); }

Coweight Coweight::operator-() const { return Coweight(negate(coords)); }

Coweight Coweight::operator*(int k) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = k * coords[i];
  return Coweight(r);
}

Coweight operator*(int k, const Coweight& mu) { return mu * k; }

std::string Coweight::to_string() const {
  std::ostringstream os;
  os << '(' << coords[0] << ',' << coords[1] << ',' << coords[2] << ',' << coords[3] << ')';
  return os.str();
}

// -------------------------------------------------------------------- Root

Root Root::from_label(int label) {
  if (label == 0 || std::abs(label) > 12)
    throw RootSystemError("invalid root label " + std::to_string(label));
  const Vec4& c = kPositiveCoords[std::abs(label) - 1];
  return Root(label, label > 0 ? c : negate(c));
}

std::optional<Root> Root::try_from_coords(const Vec4& coords) {
  int l = label_of(coords);
  if (l == 0) return std::nullopt;
  return Root(l, coords);
}

Root Root::from_coords(const Vec4& coords) {
  auto r = try_from_coords(coords);
  if (!r) throw RootSystemError("not a root: " + Coweight(coords).to_string());
  return *r;
}

int Root::height() const { return coords_[0] + coords_[1] + coords_[2] + coords_[3]; }

std::span<const Root> all_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> v;
    for (int l = -12; l <= 12; ++l)
      if (l != 0) v.push_back(Root::from_label(l));
    return v;
  }();
  return roots;
}

std::span<const Root> positive_roots() { return all_roots().subspan(12); }

std::span<const Root> simple_roots() {
  static const std::array<Root, 4> s = {Root::alpha(), Root::beta(), Root::gamma(),
                                        Root::delta()};
  return s;
}

const std::array<Vec4, 4>& cartan_matrix() { return kCartan; }

int pairing(const Vec4& z, const Coweight& mu) {
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += z[i] * kCartan[i][j] * mu.coords[j];
  return s;
}

int pairing(const Root& zeta, const Coweight& mu) { return pairing(zeta.coords(), mu); }

Root reflect(const Root& xi, const Root& zeta) {
  return Root::from_coords(reflection_matrix(xi) * zeta.coords());
}

Coweight reflect(const Root& xi, const Coweight& mu) {
  return Coweight(reflection_matrix(xi) * mu.coords);
}

Root sigma_act(const Root& zeta) { return Root::from_coords(sigma_coords(zeta.coords())); }

Coweight sigma_act(const Coweight& mu) { return Coweight(sigma_coords(mu.coords)); }

std::optional<Root> root_sum(const Root& a, const Root& b) {
  Vec4 s;
  for (int i = 0; i < 4; ++i) s[i] = a.coords()[i] + b.coords()[i];
  return Root::try_from_coords(s);
}

// -------------------------------------------------------------------- Mat4

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.rows[i][i] = 1;
  return m;
}

Vec4 Mat4::operator*(const Vec4& v) const {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += rows[i][j] * v[j];
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r.rows[i][j] += rows[i][k] * o.rows[k][j];
  return r;
}

// ----------------------------------------------------------- TwistedAction

TwistedAction TwistedAction::reflection(const Root& xi) {
  return TwistedAction(reflection_matrix(xi), 0);
}

TwistedAction TwistedAction::sigma() { return TwistedAction(sigma_matrix(), 1); }

Mat4 TwistedAction::weyl_matrix() const {
  // matrix = W * S^j, so W = matrix * S^(3-j)
  return matrix_ * matrix_power(sigma_matrix(), (3 - sigma_exp_) % 3);
}

TwistedAction TwistedAction::operator*(const TwistedAction& o) const {
  return TwistedAction(matrix_ * o.matrix_, (sigma_exp_ + o.sigma_exp_) % 3);
}

TwistedAction TwistedAction::inverse() const {
  // Finite group: the inverse is a positive power.  Order divides 2^6*3*... so
  // iterate until we return to the identity.
  TwistedAction acc = *this;
  TwistedAction prev;
  while (!acc.is_identity()) {
    prev = acc;
    acc = acc * *this;
  }
  return prev;
}

Root TwistedAction::apply(const Root& zeta) const {
  return Root::from_coords(matrix_ * zeta.coords());
}

Coweight TwistedAction::apply(const Coweight& mu) const { return Coweight(matrix_ * mu.coords); }

namespace {

int length_of(const Mat4& w) {
  int n = 0;
  for (const Root& r : positive_roots()) {
    Vec4 img = w * r.coords();
    if (img[0] + img[1] + img[2] + img[3] < 0) ++n;
  }
  return n;
}

}  // namespace

int TwistedAction::weyl_length() const { return length_of(weyl_matrix()); }

std::vector<Root> TwistedAction::reduced_word() const {
  std::vector<Root> word;
  Mat4 w = weyl_matrix();
  int len = length_of(w);
  while (len > 0) {
    bool found = false;
    for (int l = 1; l <= 4 && !found; ++l) {
      Root s = Root::from_label(l);
      Mat4 sw = reflection_matrix(s) * w;
      int sl = length_of(sw);
      if (sl < len) {
        word.push_back(s);
        w = sw;
        len = sl;
        found = true;
      }
    }
    if (!found) throw RootSystemError("reduced word search failed");
  }
  return word;
}

// --------------------------------------------------------- TwistedWeylWord

TwistedAction TwistedWeylWord::action() const {
  TwistedAction acc;
  for (const auto& g : gens) {
    acc = acc * (g.kind == TwistedGenerator::Kind::Sigma ? TwistedAction::sigma()
                                                        : TwistedAction::reflection(g.root));
  }
  return acc;
}

Root word_act(const TwistedWeylWord& w, const Root& zeta) { return w.action().apply(zeta); }

Coweight word_act(const TwistedWeylWord& w, const Coweight& mu) { return w.action().apply(mu); }

TwistedWeylWord longest_word() {
  const Root a = Root::alpha(), b = Root::beta(), g = Root::gamma(), d = Root::delta();
  TwistedWeylWord w;
  for (const Root& r : {a, b, a, g, b, a, d, b, a, g, b, d})
    w.gens.push_back(TwistedGenerator::s(r));
  return w;
}

// ------------------------------------------------------------ permutations

std::string CycleDecomposition::to_string() const {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

CycleDecomposition radical_permutation(const TwistedAction& w, const Coweight& lambda) {
  std::vector<int> support;
  for (const Root& r : all_roots())
    if (pairing(r, lambda) > 0) support.push_back(r.label());

  auto image = [&](int l) {
    int img = w.apply(Root::from_label(l)).label();
    if (!std::binary_search(support.begin(), support.end(), img))
      throw NotStable("root " + std::to_string(l) + " is mapped to " + std::to_string(img) +
                      ", outside the positive-pairing set");
    return img;
  };

  CycleDecomposition out;
  std::vector<bool> seen(support.size(), false);
  auto index_of = [&](int l) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), l) -
                                    support.begin());
  };
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int l = support[i];
    while (!seen[index_of(l)]) {
      seen[index_of(l)] = true;
      cycle.push_back(l);
      l = image(l);
    }
    // support is scanned in ascending order, so cycle already starts at its minimum
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

CycleDecomposition radical_permutation(const TwistedWeylWord& w, const Coweight& lambda) {
  return radical_permutation(w.action(), lambda);
}

ParabolicPartition parabolic_partition(const Coweight& lambda) {
  ParabolicPartition p;
  for (const Root& r : all_roots()) {
    int s = pairing(r, lambda);
    (s == 0 ? p.levi : s > 0 ? p.radical : p.opposite).push_back(r.label());
  }
  return p;
}

// ------------------------------------------------------ fixed cocharacters

namespace {

using IntRows = std::vector<Vec4>;

// Row-style Hermite normal form of the lattice spanned by the given rows.
IntRows hermite_normal_form(IntRows rows) {
  IntRows out;
  std::size_t top = 0;
  for (int col = 0; col < 4 && top < rows.size(); ++col) {
    // Euclid on column col among rows[top..]
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        int q = rows[i][col] / rows[top][col];
        for (int k = 0; k < 4; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (int& x : rows[top]) x = -x;
      for (std::size_t i = 0; i < top; ++i) {
        int p = rows[top][col];
        int q = rows[i][col] / p;
        if (rows[i][col] - q * p < 0) --q;
        for (int k = 0; k < 4; ++k) rows[i][k] -= q * rows[top][k];
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

// Integer kernel of B via unimodular column operations on [B; I].
IntRows integer_kernel(const Mat4& b) {
  // columns as 8-vectors: first 4 entries from B, last 4 from identity
  std::array<std::array<int, 8>, 4> cols{};
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) cols[j][i] = b.rows[i][j];
    cols[j][4 + j] = 1;
  }
  std::size_t lead = 0;
  for (int row = 0; row < 4 && lead < 4; ++row) {
    while (true) {
      std::size_t best = 4;
      for (std::size_t j = lead; j < 4; ++j)
        if (cols[j][row] != 0 &&
            (best == 4 || std::abs(cols[j][row]) < std::abs(cols[best][row])))
          best = j;
      if (best == 4) break;
      std::swap(cols[lead], cols[best]);
      bool done = true;
      for (std::size_t j = lead + 1; j < 4; ++j) {
        int q = cols[j][row] / cols[lead][row];
        for (int k = 0; k < 8; ++k) cols[j][k] -= q * cols[lead][k];
        if (cols[j][row] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  IntRows kernel;
  for (std::size_t j = lead; j < 4; ++j)
    kernel.push_back({cols[j][4], cols[j][5], cols[j][6], cols[j][7]});
  return kernel;
}

}  // namespace

std::vector<Coweight> fixed_cocharacters(const TwistedAction& w) {
  Mat4 b = w.matrix();
  for (int i = 0; i < 4; ++i) b.rows[i][i] -= 1;
  std::vector<Coweight> out;
  for (const Vec4& v : hermite_normal_form(integer_kernel(b))) out.emplace_back(v);
  return out;
}

std::vector<Coweight> fixed_cocharacters(const TwistedWeylWord& w) {
  return fixed_cocharacters(w.action());
}

Coweight highest_coroot() { return Coweight({1, 2, 1, 1}); }

std::vector<RootRecord> root_table(const Coweight& mu) {
  std::vector<RootRecord> t;
  for (const Root& r : positive_roots()) t.push_back({r.label(), r.coords(), pairing(r, mu)});
  return t;
}

}  // namespace d4cr

#include "d4cr/engine.hpp"

#include <algorithm>
#include <sstream>

namespace d4cr {

CollectionObstruction::CollectionObstruction(const Root& zeta)
    : EngineError("collection would merge eps(" + std::to_string(zeta.label()) + ") with eps(" +
                  std::to_string(-zeta.label()) + ")"),
      root_(zeta) {}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_unit(const Poly& p) {
  if (!p.is_unit())
    throw EngineError("cocharacter parameter " + p.to_string() + " is not a unit monomial");
}

}  // namespace

std::string to_string(const Atom& atom) {
  return std::visit(
      overloaded{
          [](const Eps& e) {
            return "eps(" + std::to_string(e.root.label()) + ")(" + e.coeff.to_string() + ")";
          },
          [](const CochVal& c) {
            return "cochar" + c.cocharacter.to_string() + "(" + c.param.to_string() + ")";
          },
          [](const WeylRep& n) { return "n_" + std::to_string(n.root.label()); },
          [](const Sigma&) { return std::string("sigma"); },
      },
      atom);
}

// --------------------------------------------------------------- GroupWord

GroupWord GroupWord::cochar(const Coweight& mu, Poly param) {
  require_unit(param);
  return {CochVal{mu, std::move(param)}};
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord r = *this;
  r *= o;
  return r;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
  atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
  return *this;
}

bool GroupWord::is_toral() const {
  return !atoms_.empty() && std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) {
    return std::holds_alternative<CochVal>(a);
  });
}

std::string GroupWord::to_string() const {
  if (atoms_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) out += (i ? " " : "") + d4cr::to_string(atoms_[i]);
  return out;
}

GroupWord n_alpha_sigma() { return GroupWord::weyl(1) * GroupWord::sigma(); }

// --------------------------------------------------------------- TorusPart

void TorusPart::multiply(const Coweight& mu, const Poly& param) {
  require_unit(param);
  if (mu.is_zero()) return;
  for (const auto& [sym, e] : param.terms().front().factors()) {
    auto it = std::find_if(factors_.begin(), factors_.end(),
                           [&](const auto& f) { return f.first == sym; });
    if (it == factors_.end()) {
      factors_.emplace_back(sym, mu * e);
    } else {
      it->second = it->second + mu * e;
    }
  }
  std::erase_if(factors_, [](const auto& f) { return f.second.is_zero(); });
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

TorusPart TorusPart::transformed(const TwistedAction& w) const {
  TorusPart t = *this;
  for (auto& f : t.factors_) f.second = w.apply(f.second);
  return t;
}

TorusPart TorusPart::inverse() const {
  TorusPart t = *this;
  for (auto& f : t.factors_) f.second = -f.second;
  return t;
}

Poly TorusPart::character_value(const Root& zeta) const {
  std::vector<Monomial::Factor> fs;
  for (const auto& [sym, mu] : factors_) fs.emplace_back(sym, pairing(zeta, mu));
  return Poly(Monomial(std::move(fs)));
}

std::vector<Coweight> TorusPart::cocharacters() const {
  std::vector<Coweight> out;
  for (const auto& f : factors_) out.push_back(f.second);
  return out;
}

// --------------------------------------------------------------- RootOrder

RootOrder RootOrder::canonical() {
  RootOrder o;
  for (int l = -12; l <= 12; ++l) o.rank_[static_cast<std::size_t>(l + 12)] = l;
  return o;
}

RootOrder RootOrder::from_sequence(std::span<const int> labels) {
  RootOrder o = canonical();
  // listed labels get ranks below every canonical rank
  int next = -100;
  for (int l : labels) o.rank_[static_cast<std::size_t>(Root::from_label(l).label() + 12)] = next++;
  return o;
}

// -------------------------------------------------------------- NormalForm

Poly NormalForm::coefficient(int label) const {
  for (const Eps& e : unipotent)
    if (e.root.label() == label) return e.coeff;
  return Poly::zero();
}

std::vector<int> NormalForm::unipotent_labels() const {
  std::vector<int> out;
  for (const Eps& e : unipotent) out.push_back(e.root.label());
  return out;
}

GroupWord NormalForm::to_word() const {
  std::vector<Atom> atoms;
  for (const Root& s : twisted.reduced_word()) atoms.emplace_back(WeylRep{s});
  for (int j = 0; j < twisted.sigma_exponent(); ++j) atoms.emplace_back(Sigma{});
  for (const auto& [sym, mu] : torus.factors())
    atoms.emplace_back(CochVal{mu, Poly(Monomial({{sym, 1}}))});
  for (const Eps& e : unipotent) atoms.emplace_back(e);
  return GroupWord(std::move(atoms));
}

std::string NormalForm::to_string() const {
  std::vector<std::string> parts;
  for (const Root& s : twisted.reduced_word()) parts.push_back("n_" + std::to_string(s.label()));
  if (twisted.sigma_exponent() > 0)
    parts.push_back("sigma^" + std::to_string(twisted.sigma_exponent()));
  for (const auto& [sym, mu] : torus.factors())
    parts.push_back("cochar" + mu.to_string() + "(" + sym.name + ")");
  for (const Eps& e : unipotent) parts.push_back(d4cr::to_string(Atom{e}));
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

bool NormalForm::operator==(const NormalForm& o) const {
  if (!(twisted == o.twisted) || !(torus == o.torus)) return false;
  if (unipotent.size() != o.unipotent.size()) return false;
  for (const Eps& e : unipotent)
    if (!(o.coefficient(e.root.label()) == e.coeff)) return false;
  return true;
}

// -------------------------------------------------------------- collection

namespace {

void normalize_unipotent(std::vector<Eps>& u, const CollectOptions& opts) {
  std::size_t steps = 0;
  while (true) {
    std::erase_if(u, [](const Eps& e) { return e.coeff.is_zero(); });

    bool merged = false;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i].root == u[i + 1].root) {
        u[i].coeff += u[i + 1].coeff;
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        merged = true;
      }
    }
    if (merged) continue;

    std::size_t i = 0;
    while (i + 1 < u.size() && !opts.order.less(u[i + 1].root, u[i].root)) ++i;
    if (i + 1 >= u.size()) return;

    if (u[i].root == -u[i + 1].root) throw CollectionObstruction(u[i].root);
    if (++steps > opts.step_limit)
      throw EngineError("collection exceeded " + std::to_string(opts.step_limit) + " steps");

    // eps_z(x) eps_y(v) = eps_y(v) eps_z(x) eps_{z+y}(x v)
    auto sum = root_sum(u[i].root, u[i + 1].root);
    Poly product = u[i].coeff * u[i + 1].coeff;
    std::swap(u[i], u[i + 1]);
    if (sum) u.insert(u.begin() + static_cast<std::ptrdiff_t>(i) + 2, Eps{*sum, std::move(product)});
  }
}

}  // namespace

NormalForm collect(const GroupWord& w, const CollectOptions& opts) {
  NormalForm nf;
  for (const Atom& atom : w.atoms()) {
    std::visit(overloaded{
                   [&](const Eps& e) {
                     if (!e.coeff.is_zero()) nf.unipotent.push_back(e);
                   },
                   [&](const CochVal& c) {
                     // u . mu(s) = mu(s) . (mu(s)^-1 u mu(s))
                     require_unit(c.param);
                     for (Eps& e : nf.unipotent)
                       e.coeff *= c.param.pow(-pairing(e.root, c.cocharacter));
                     nf.torus.multiply(c.cocharacter, c.param);
                   },
                   [&](const auto& twisted_atom) {
                     using T = std::decay_t<decltype(twisted_atom)>;
                     TwistedAction x;
                     if constexpr (std::is_same_v<T, WeylRep>)
                       x = TwistedAction::reflection(twisted_atom.root);
                     else
                       x = TwistedAction::sigma();
                     TwistedAction xinv = x.inverse();
                     for (Eps& e : nf.unipotent) e.root = xinv.apply(e.root);
                     nf.torus = nf.torus.transformed(xinv);
                     nf.twisted = nf.twisted * x;
                   },
               },
               atom);
  }
  normalize_unipotent(nf.unipotent, opts);
  return nf;
}

GroupWord invert(const GroupWord& g) {
  std::vector<Atom> out;
  out.reserve(g.size() + 1);
  for (auto it = g.atoms().rbegin(); it != g.atoms().rend(); ++it) {
    std::visit(overloaded{
                   [&](const Eps& e) { out.emplace_back(e); },
                   [&](const CochVal& c) { out.emplace_back(CochVal{c.cocharacter, c.param.inverse()}); },
                   [&](const WeylRep& n) { out.emplace_back(n); },
                   [&](const Sigma&) {
                     out.emplace_back(Sigma{});
                     out.emplace_back(Sigma{});
                   },
               },
               *it);
  }
  return GroupWord(std::move(out));
}

NormalForm conjugate(const GroupWord& g, const GroupWord& h, const CollectOptions& opts) {
  return collect(g * h * invert(g), opts);
}

NormalForm power(const GroupWord& g, int n, const CollectOptions& opts) {
  if (n < 1) throw std::invalid_argument("power: exponent must be positive");
  GroupWord w;
  for (int i = 0; i < n; ++i) w *= g;
  return collect(w, opts);
}

Coweight act_on_coweight(const GroupWord& g, const Coweight& mu) {
  NormalForm nf = collect(g);
  if (!nf.unipotent.empty())
    throw NotWeylToral("element " + nf.to_string() + " has root-element content");
  return nf.twisted.apply(mu);
}

// -------------------------------------------------------------- membership

std::string to_string(MembershipClass m) {
  switch (m) {
    case MembershipClass::InLevi: return "InLevi";
    case MembershipClass::InRadical: return "InRadical";
    case MembershipClass::InParabolic: return "InParabolic";
    case MembershipClass::NotInParabolic: return "NotInParabolic";
  }
  return "?";
}

bool stabilizes_partition(const TwistedAction& w, const Coweight& lambda) {
  auto sign = [](int x) { return (x > 0) - (x < 0); };
  for (const Root& r : all_roots())
    if (sign(pairing(w.apply(r), lambda)) != sign(pairing(r, lambda))) return false;
  return true;
}

MembershipClass membership(const NormalForm& nf, const Coweight& lambda) {
  bool all_zero = true, all_pos = true, all_nonneg = true;
  for (const Eps& e : nf.unipotent) {
    int p = pairing(e.root, lambda);
    all_zero = all_zero && p == 0;
    all_pos = all_pos && p > 0;
    all_nonneg = all_nonneg && p >= 0;
  }
  bool stable = stabilizes_partition(nf.twisted, lambda);
  if (stable && all_zero) return MembershipClass::InLevi;
  if (nf.twisted.is_identity() && nf.torus.is_identity() && all_pos)
    return MembershipClass::InRadical;
  if (stable && all_nonneg) return MembershipClass::InParabolic;
  return MembershipClass::NotInParabolic;
}

std::vector<NormalForm> generator_transport(const GroupWord& v, std::span<const GroupWord> gens,
                                            const CollectOptions& opts) {
  std::vector<NormalForm> out;
  out.reserve(gens.size());
  for (const GroupWord& g : gens) out.push_back(conjugate(v, g, opts));
  return out;
}

}  // namespace d4cr

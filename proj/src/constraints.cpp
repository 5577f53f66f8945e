#include "d4cr/constraints.hpp"

#include <algorithm>
#include <set>

namespace d4cr {

// ---------------------------------------------------------- GenericElement

GenericElement GenericElement::over(std::span<const int> labels) {
  GenericElement u;
  u.labels.assign(labels.begin(), labels.end());
  for (int l : labels) u.word *= GroupWord::eps(l, variable(l));
  return u;
}

std::string GenericElement::variable_name(int label) {
  return label < 0 ? "xm" + std::to_string(-label) : "x" + std::to_string(label);
}

std::vector<std::string> GenericElement::variables() const {
  std::vector<std::string> out;
  for (int l : labels) out.push_back(variable_name(l));
  return out;
}

GroupWord GenericElement::instantiate(const std::map<std::string, Poly>& bindings) const {
  GroupWord w;
  for (int l : labels) w *= GroupWord::eps(l, substitute(variable(l), bindings));
  return w;
}

// -------------------------------------------------------- ConstraintSystem

std::vector<std::string> ConstraintSystem::parameters() const {
  std::set<Symbol> syms;
  for (const Poly& p : equations)
    for (const Symbol& s : p.symbols())
      if (std::find(variables.begin(), variables.end(), s.name) == variables.end()) syms.insert(s);
  std::vector<std::string> out;
  for (const Symbol& s : syms) out.push_back(s.name);
  return out;
}

ConstraintSystem ConstraintSystem::renamed(const std::string& from, const std::string& to) const {
  ConstraintSystem r;
  std::map<std::string, Poly> b{{from, Poly::var(to)}};
  for (const Poly& p : equations) r.equations.push_back(substitute(p, b));
  for (const std::string& v : variables) r.variables.push_back(v == from ? to : v);
  return r;
}

// ------------------------------------------------------------- Levi test

LeviConjugacy levi_conjugacy_constraints(const GroupWord& g, const Coweight& lambda,
                                         const CollectOptions& opts) {
  ParabolicPartition part = parabolic_partition(lambda);
  LeviConjugacy out{{}, GenericElement::over(part.radical), {}};
  out.expansion = collect(invert(out.u.word) * g * out.u.word, opts);
  for (const Eps& e : out.expansion.unipotent)
    if (pairing(e.root, lambda) != 0) out.system.equations.push_back(e.coeff);
  out.system.variables = out.u.variables();
  return out;
}

// ---------------------------------------------------------------- reduce

namespace {

struct Split {
  Poly var_part;
  Poly param_part;
};

Split split(const Poly& p, const std::set<std::string>& vars) {
  Split s;
  for (const Monomial& m : p.terms()) {
    bool has_var = std::any_of(m.factors().begin(), m.factors().end(),
                               [&](const auto& f) { return vars.count(f.first.name) > 0; });
    (has_var ? s.var_part : s.param_part) += Poly(m);
  }
  return s;
}

// even and odd parts in r
std::pair<Poly, Poly> split_rational(const Poly& p) {
  Poly even, odd;
  for (const Monomial& m : p.terms()) (m.exponent(kSqrtA) % 2 == 0 ? even : odd) += Poly(m);
  return {even, odd};
}

struct LinearCandidate {
  std::string var;
  Poly rest;  // eq = var + rest
};

std::optional<LinearCandidate> find_linear(const std::vector<Poly>& eqs,
                                           const std::set<std::string>& vars) {
  std::optional<LinearCandidate> best;
  for (const Poly& eq : eqs) {
    for (const Symbol& s : eq.symbols()) {
      if (!vars.count(s.name)) continue;
      Poly v = Poly::var(s.name);
      bool linear_only = true, has_linear = false;
      for (const Monomial& m : eq.terms()) {
        if (m.exponent(s.name) == 0) continue;
        if (Poly(m) == v)
          has_linear = true;
        else
          linear_only = false;
      }
      if (!has_linear || !linear_only) continue;
      Poly rest = eq + v;
      if (!is_k_rational(split(rest, vars).var_part)) continue;
      if (!best || compare_symbol_names(s.name, best->var) < 0) best = LinearCandidate{s.name, rest};
    }
  }
  return best;
}

std::string join(const std::vector<Poly>& eqs) {
  std::string out;
  for (std::size_t i = 0; i < eqs.size(); ++i) out += (i ? ", " : "") + eqs[i].to_string();
  return out;
}

}  // namespace

std::string to_string(const Certificate& c) {
  if (const auto* s = std::get_if<Solvable>(&c)) {
    std::vector<std::pair<std::string, Poly>> items(s->assignment.begin(), s->assignment.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
      return compare_symbol_names(x.first, y.first) < 0;
    });
    std::string out = "SOLVABLE";
    for (std::size_t i = 0; i < items.size(); ++i)
      out += (i ? ", " : ": ") + items[i].first + " = " + items[i].second.to_string();
    return out;
  }
  if (const auto* u = std::get_if<UnsolvableOverK>(&c))
    return "UNSOLVABLE-OVER-K: (p)^2 = " + u->constant.to_string() +
           " with p = " + u->square_root_defect.to_string();
  return "INCONSISTENT: " + std::get<Inconsistent>(c).witness.to_string() + " = 0";
}

Certificate reduce(const ConstraintSystem& system) {
  const std::set<std::string> vars(system.variables.begin(), system.variables.end());
  std::vector<Poly> eqs = system.equations;
  std::map<std::string, Poly> assignment;

  while (true) {
    std::erase_if(eqs, [](const Poly& p) { return p.is_zero(); });
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    if (eqs.empty()) return Solvable{assignment};

    for (const Poly& eq : eqs)
      if (split(eq, vars).var_part.is_zero()) return Inconsistent{eq};

    if (auto lin = find_linear(eqs, vars)) {
      Split rest = split(lin->rest, vars);
      if (!is_k_rational(rest.param_part)) {
        auto [even, odd] = split_rational(rest.param_part);
        return UnsolvableOverK{Poly::var(lin->var) + rest.var_part + even, odd * odd};
      }
      std::map<std::string, Poly> b{{lin->var, lin->rest}};
      for (Poly& eq : eqs) eq = substitute(eq, b);
      for (auto& [v, val] : assignment) val = substitute(val, b);
      assignment[lin->var] = lin->rest;
      continue;
    }

    bool changed = false;
    for (Poly& eq : eqs) {
      Split s = split(eq, vars);
      auto q = square_root_if_perfect_square(s.var_part);
      if (!q) continue;
      if (s.param_part.is_zero()) {
        eq = *q;  // no nilpotents
      } else if (auto c = square_root_if_perfect_square(s.param_part); c && is_k_rational(*c)) {
        eq = *q + *c;
      } else if (is_k_rational(*q)) {
        return UnsolvableOverK{*q, s.param_part};
      } else {
        continue;
      }
      changed = true;
      break;
    }
    if (!changed) throw UnsolvedResidual("no reduction rule applies to {" + join(eqs) + "}");
  }
}

// -------------------------------------------------------- centralizers

SubgroupDescriptor centralizer_in_radical(std::span<const GroupWord> gens, const Coweight& lambda,
                                          RadicalSide side) {
  ParabolicPartition part = parabolic_partition(lambda);
  std::vector<int> labels = side == RadicalSide::Positive ? part.radical : part.opposite;
  std::sort(labels.begin(), labels.end());
  GenericElement u = GenericElement::over(labels);
  NormalForm base = collect(u.word);

  ConstraintSystem sys;
  sys.variables = u.variables();
  for (const GroupWord& g : gens) {
    if (g.is_toral()) {
      for (const Coweight& mu : collect(g).torus.cocharacters())
        for (int l : labels)
          if (pairing(Root::from_label(l), mu) != 0) sys.equations.push_back(u.variable(l));
      continue;
    }
    NormalForm nf = conjugate(g, u.word);
    if (!nf.twisted.is_identity() || !nf.torus.is_identity())
      throw EngineError("conjugate " + nf.to_string() + " left the unipotent radical");
    std::set<int> support;
    for (const Eps& e : nf.unipotent) support.insert(e.root.label());
    for (const Eps& e : base.unipotent) support.insert(e.root.label());
    for (int l : support) sys.equations.push_back(nf.coefficient(l) + base.coefficient(l));
  }

  Certificate cert = reduce(sys);
  const auto* sol = std::get_if<Solvable>(&cert);
  if (!sol) throw UnsolvedResidual("centralizer conditions reduce to " + to_string(cert));
  SubgroupDescriptor d;
  for (int l : labels) {
    auto it = sol->assignment.find(u.variable_name(l));
    if (it == sol->assignment.end()) {
      d.free_unipotent_labels.push_back(l);
    } else if (!it->second.is_zero()) {
      throw UnsolvedResidual("centralizer is not a coordinate subgroup: " + it->first + " = " +
                             it->second.to_string());
    }
  }
  return d;
}

std::optional<Poly> noncommuting_witness(const GroupWord& h, const Family& family) {
  GroupWord f = std::visit([](const auto& atom) { return GroupWord{Atom{atom}}; }, family);
  NormalForm nf = collect(h * f * invert(h) * invert(f));
  if (nf.is_identity()) return std::nullopt;
  if (nf.unipotent.empty())
    throw EngineError("commutator " + nf.to_string() + " has no unipotent part");
  return nf.unipotent.front().coeff;
}

// ------------------------------------------------------------- helpers

namespace {

int gf2_rank(std::span<const Poly> polys) {
  std::map<Monomial, Poly> pivots;  // leading monomial -> row
  for (Poly p : polys) {
    while (!p.is_zero()) {
      const Monomial lead = p.terms().back();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, p);
        break;
      }
      p += it->second;
    }
  }
  return static_cast<int>(pivots.size());
}

}  // namespace

bool same_linear_span(std::span<const Poly> a, std::span<const Poly> b) {
  std::vector<Poly> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  int r = gf2_rank(both);
  return gf2_rank(a) == r && gf2_rank(b) == r;
}

int degree_in(const Poly& p, std::span<const std::string> variables) {
  int best = 0;
  for (const Monomial& m : p.terms()) {
    int d = 0;
    for (const std::string& v : variables) d += m.exponent(v);
    best = std::max(best, d);
  }
  return best;
}

}  // namespace d4cr

// Model-theoretic layer: first-order formulas, the standard DRS translation,
// Tarskian evaluation over finite models, and bounded countermodel search.
// A countermodel disproves an entailment; absence of one up to a bound is
// reported as exactly that, never as a proof.
#ifndef AMRPLUS_LOGIC_HPP
#define AMRPLUS_LOGIC_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/drs.hpp"

namespace amrplus {

// ---------------------------------------------------------------------------
// Formulas

struct Formula;

// Argument terms are variables or constants (Term::Kind::Var / Const).
struct Atom {
  std::string pred;
  std::vector<Term> args;
  bool operator==(const Atom&) const = default;
};

struct TruthConstant {
  bool value = true;
  bool operator==(const TruthConstant&) const = default;
};

struct AndFormula {
  std::vector<Formula> items;
  bool operator==(const AndFormula&) const = default;
};

struct NotFormula {
  detail::box<Formula> body;
  bool operator==(const NotFormula&) const = default;
};

struct ImpliesFormula {
  detail::box<Formula> antecedent;
  detail::box<Formula> consequent;
  bool operator==(const ImpliesFormula&) const = default;
};

struct ExistsFormula {
  std::vector<std::string> variables;
  detail::box<Formula> body;
  bool operator==(const ExistsFormula&) const = default;
};

struct ForallFormula {
  std::vector<std::string> variables;
  detail::box<Formula> body;
  bool operator==(const ForallFormula&) const = default;
};

struct Formula {
  std::variant<Atom, TruthConstant, AndFormula, NotFormula, ImpliesFormula,
               ExistsFormula, ForallFormula>
      node;
  bool operator==(const Formula&) const = default;
};

inline Formula atom(std::string pred, std::vector<Term> args) {
  return {Atom{std::move(pred), std::move(args)}};
}
inline Formula truth(bool value) { return {TruthConstant{value}}; }
inline Formula conj(std::vector<Formula> items) {
  if (items.size() == 1) return items[0];
  return {AndFormula{std::move(items)}};
}
inline Formula fnot(Formula body) {
  return {NotFormula{detail::box<Formula>(std::move(body))}};
}
inline Formula implies(Formula a, Formula b) {
  return {ImpliesFormula{detail::box<Formula>(std::move(a)),
                         detail::box<Formula>(std::move(b))}};
}
inline Formula exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  return {ExistsFormula{std::move(vars), detail::box<Formula>(std::move(body))}};
}
inline Formula forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  return {ForallFormula{std::move(vars), detail::box<Formula>(std::move(body))}};
}

namespace detail {

inline std::string term_text(const Term& t) {
  if (t.kind == Term::Kind::Const) return "\"" + t.text + "\"";
  return t.text;
}

inline void formula_text(const Formula& f, std::string& out) {
  if (const auto* a = std::get_if<Atom>(&f.node)) {
    out += a->pred;
    out += '(';
    for (std::size_t i = 0; i < a->args.size(); ++i) {
      if (i) out += ',';
      out += term_text(a->args[i]);
    }
    out += ')';
  } else if (const auto* t = std::get_if<TruthConstant>(&f.node)) {
    out += t->value ? "true" : "false";
  } else if (const auto* c = std::get_if<AndFormula>(&f.node)) {
    out += '(';
    for (std::size_t i = 0; i < c->items.size(); ++i) {
      if (i) out += " & ";
      formula_text(c->items[i], out);
    }
    out += ')';
  } else if (const auto* n = std::get_if<NotFormula>(&f.node)) {
    out += '~';
    formula_text(*n->body, out);
  } else if (const auto* imp = std::get_if<ImpliesFormula>(&f.node)) {
    out += '(';
    formula_text(*imp->antecedent, out);
    out += " -> ";
    formula_text(*imp->consequent, out);
    out += ')';
  } else if (const auto* e = std::get_if<ExistsFormula>(&f.node)) {
    out += "exists";
    for (const auto& v : e->variables) out += ' ' + v;
    out += '.';
    formula_text(*e->body, out);
  } else if (const auto* u = std::get_if<ForallFormula>(&f.node)) {
    out += "forall";
    for (const auto& v : u->variables) out += ' ' + v;
    out += '.';
    formula_text(*u->body, out);
  }
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::formula_text(f, out);
  return out;
}

namespace detail {

inline void collect_free(const Formula& f, std::vector<std::string>& bound,
                         std::set<std::string>& free) {
  if (const auto* a = std::get_if<Atom>(&f.node)) {
    for (const auto& t : a->args) {
      if (t.kind == Term::Kind::Var &&
          std::find(bound.begin(), bound.end(), t.text) == bound.end()) {
        free.insert(t.text);
      }
    }
  } else if (const auto* c = std::get_if<AndFormula>(&f.node)) {
    for (const auto& item : c->items) collect_free(item, bound, free);
  } else if (const auto* n = std::get_if<NotFormula>(&f.node)) {
    collect_free(*n->body, bound, free);
  } else if (const auto* imp = std::get_if<ImpliesFormula>(&f.node)) {
    collect_free(*imp->antecedent, bound, free);
    collect_free(*imp->consequent, bound, free);
  } else if (const auto* e = std::get_if<ExistsFormula>(&f.node)) {
    std::size_t n0 = bound.size();
    bound.insert(bound.end(), e->variables.begin(), e->variables.end());
    collect_free(*e->body, bound, free);
    bound.resize(n0);
  } else if (const auto* u = std::get_if<ForallFormula>(&f.node)) {
    std::size_t n0 = bound.size();
    bound.insert(bound.end(), u->variables.begin(), u->variables.end());
    collect_free(*u->body, bound, free);
    bound.resize(n0);
  }
}

}  // namespace detail

inline std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> free;
  detail::collect_free(f, bound, free);
  return free;
}

// ---------------------------------------------------------------------------
// DRS to first-order logic

namespace detail {

inline Term fol_term(const DrsArg& a) {
  if (is_referent(a)) return Term::var(referent(a));
  return Term::constant(std::get<Constant>(a));
}

inline Formula condition_to_formula(const Condition& c);

inline Formula box_body(const Drs& d) {
  std::vector<Formula> items;
  for (const auto& c : d.conditions) items.push_back(condition_to_formula(c));
  if (items.empty()) return truth(true);
  return conj(std::move(items));
}

// [x1..xn | C1..Cm] is read existentially; an implication quantifies its
// antecedent referents universally over the conditional.
inline Formula box_to_formula(const Drs& d) {
  return exists(d.referents, box_body(d));
}

inline Formula condition_to_formula(const Condition& c) {
  if (const auto* p = std::get_if<PredCondition>(&c)) {
    return atom(p->name, {fol_term(p->arg)});
  }
  if (const auto* r = std::get_if<RelCondition>(&c)) {
    return atom(r->name, {fol_term(r->first), fol_term(r->second)});
  }
  if (const auto* n = std::get_if<NotCondition>(&c)) {
    return fnot(box_to_formula(*n->body));
  }
  const auto& imp = std::get<ImpCondition>(c);
  return forall(imp.ante->referents,
                implies(box_body(*imp.ante), box_to_formula(*imp.cons)));
}

}  // namespace detail

// Accommodates any presupposed boxes still listed in the output, then maps
// boxes to quantified formulas. Global (the default) merges presupposed
// content into the top box; None conjoins the boxes as separate formulas,
// which leaves cross-box referents free and is rejected. Local accommodation
// happens at translation time, so outputs reaching here with mode Local are
// treated globally.
inline Formula drs_to_fol(const DrsOutput& out,
                          Accommodation mode = Accommodation::Global) {
  Formula f = truth(true);
  if (mode == Accommodation::None) {
    std::vector<Formula> items;
    for (const auto& p : out.presuppositions) {
      items.push_back(detail::box_to_formula(p));
    }
    items.push_back(detail::box_to_formula(out.main));
    f = conj(std::move(items));
  } else {
    Drs combined;
    for (const auto& p : out.presuppositions) combined = merge(combined, p);
    combined = merge(combined, out.main);
    f = detail::box_to_formula(combined);
  }
  auto free = free_variables(f);
  if (!free.empty()) {
    std::string names;
    for (const auto& v : free) names += ' ' + v;
    throw AmrError(ErrorCode::FreeVariable,
                   "free variable(s) after accommodation:" + names);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Models and evaluation

struct Model {
  std::vector<std::string> domain;
  std::map<std::string, std::set<std::string>> unary;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> binary;
  std::map<std::string, std::string> constants;
};

using Assignment = std::map<std::string, std::string>;

namespace detail {

inline std::string resolve_term(const Term& t, const Model& m,
                                const Assignment& env) {
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.text);
    if (it == env.end()) {
      throw AmrError(ErrorCode::FreeVariable,
                     "variable '" + t.text + "' has no assignment");
    }
    return it->second;
  }
  auto it = m.constants.find(t.text);
  if (it == m.constants.end()) {
    throw AmrError(ErrorCode::BadInput,
                   "constant \"" + t.text + "\" not interpreted by the model");
  }
  return it->second;
}

inline bool eval_node(const Formula& f, const Model& m, Assignment& env);

inline bool eval_quantified(const std::vector<std::string>& vars,
                            std::size_t i, const Formula& body, const Model& m,
                            Assignment& env, bool existential) {
  if (i == vars.size()) return eval_node(body, m, env);
  for (const auto& d : m.domain) {
    auto saved = env.find(vars[i]) != env.end()
                     ? std::optional<std::string>(env[vars[i]])
                     : std::nullopt;
    env[vars[i]] = d;
    bool v = eval_quantified(vars, i + 1, body, m, env, existential);
    if (saved) {
      env[vars[i]] = *saved;
    } else {
      env.erase(vars[i]);
    }
    if (existential && v) return true;
    if (!existential && !v) return false;
  }
  return !existential;
}

inline bool eval_node(const Formula& f, const Model& m, Assignment& env) {
  if (const auto* a = std::get_if<Atom>(&f.node)) {
    if (a->args.size() == 1) {
      std::string d = resolve_term(a->args[0], m, env);
      auto it = m.unary.find(a->pred);
      if (it == m.unary.end()) return false;  // empty extension
      return it->second.count(d) > 0;
    }
    if (a->args.size() == 2) {
      std::string d1 = resolve_term(a->args[0], m, env);
      std::string d2 = resolve_term(a->args[1], m, env);
      auto it = m.binary.find(a->pred);
      if (it == m.binary.end()) return false;
      return it->second.count({d1, d2}) > 0;
    }
    throw AmrError(ErrorCode::ArityMismatch,
                   "predicate '" + a->pred + "' used with arity " +
                       std::to_string(a->args.size()));
  }
  if (const auto* t = std::get_if<TruthConstant>(&f.node)) return t->value;
  if (const auto* c = std::get_if<AndFormula>(&f.node)) {
    for (const auto& item : c->items) {
      if (!eval_node(item, m, env)) return false;
    }
    return true;
  }
  if (const auto* n = std::get_if<NotFormula>(&f.node)) {
    return !eval_node(*n->body, m, env);
  }
  if (const auto* imp = std::get_if<ImpliesFormula>(&f.node)) {
    return !eval_node(*imp->antecedent, m, env) ||
           eval_node(*imp->consequent, m, env);
  }
  if (const auto* e = std::get_if<ExistsFormula>(&f.node)) {
    return eval_quantified(e->variables, 0, *e->body, m, env, true);
  }
  const auto& u = std::get<ForallFormula>(f.node);
  return eval_quantified(u.variables, 0, *u.body, m, env, false);
}

}  // namespace detail

// Standard Tarskian evaluation; quantifiers range over the model's domain,
// predicates missing from the model have the empty extension.
inline bool eval(const Formula& f, const Model& m,
                 const Assignment& assignment = {}) {
  if (m.domain.empty()) {
    throw AmrError(ErrorCode::BadInput, "model domain must be non-empty");
  }
  Assignment env = assignment;
  return detail::eval_node(f, m, env);
}

// ---------------------------------------------------------------------------
// Bounded countermodel search

namespace detail {

constexpr int kMaxInterpBits = 28;
constexpr int kMaxPreds = kMaxInterpBits;
constexpr int kMaxConsts = 12;
constexpr int kMaxSlots = 24;

struct FolVocabulary {
  std::vector<std::string> unary, binary, constants;

  int id_of(const std::vector<std::string>& v, const std::string& s) const {
    return static_cast<int>(std::find(v.begin(), v.end(), s) - v.begin());
  }
};

inline void collect_vocabulary(const Formula& f, FolVocabulary& vocab) {
  auto add_unique = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  if (const auto* a = std::get_if<Atom>(&f.node)) {
    if (a->args.size() == 1) {
      if (std::find(vocab.binary.begin(), vocab.binary.end(), a->pred) !=
          vocab.binary.end()) {
        throw AmrError(ErrorCode::ArityMismatch,
                       "predicate '" + a->pred + "' used with two arities");
      }
      add_unique(vocab.unary, a->pred);
    } else if (a->args.size() == 2) {
      if (std::find(vocab.unary.begin(), vocab.unary.end(), a->pred) !=
          vocab.unary.end()) {
        throw AmrError(ErrorCode::ArityMismatch,
                       "predicate '" + a->pred + "' used with two arities");
      }
      add_unique(vocab.binary, a->pred);
    } else {
      throw AmrError(ErrorCode::ArityMismatch,
                     "predicate '" + a->pred + "' used with arity " +
                         std::to_string(a->args.size()));
    }
    for (const auto& t : a->args) {
      if (t.kind == Term::Kind::Const) add_unique(vocab.constants, t.text);
    }
  } else if (const auto* c = std::get_if<AndFormula>(&f.node)) {
    for (const auto& item : c->items) collect_vocabulary(item, vocab);
  } else if (const auto* n = std::get_if<NotFormula>(&f.node)) {
    collect_vocabulary(*n->body, vocab);
  } else if (const auto* imp = std::get_if<ImpliesFormula>(&f.node)) {
    collect_vocabulary(*imp->antecedent, vocab);
    collect_vocabulary(*imp->consequent, vocab);
  } else if (const auto* e = std::get_if<ExistsFormula>(&f.node)) {
    collect_vocabulary(*e->body, vocab);
  } else if (const auto* u = std::get_if<ForallFormula>(&f.node)) {
    collect_vocabulary(*u->body, vocab);
  }
}

// Interpretation over domain {0..n-1} with bitmask extensions.
struct Interp {
  int n = 1;
  int n_unary = 0, n_binary = 0, n_consts = 0;
  std::uint32_t unary[kMaxPreds] = {};
  std::uint32_t binary[kMaxPreds] = {};
  std::uint8_t consts[kMaxConsts] = {};
};

struct CompiledFormula {
  enum class Op { Unary, Binary, And, Not, Implies, Exists, Forall, Truth };
  Op op = Op::Truth;
  int pred = 0;
  bool const_a = false, const_b = false;
  int arg_a = 0, arg_b = 0;  // quantifier slot or constant id
  bool truth_value = true;
  int slot = 0;
  std::vector<CompiledFormula> children;
};

inline CompiledFormula compile_formula(
    const Formula& f, const FolVocabulary& vocab,
    std::vector<std::string>& scope) {
  CompiledFormula out;
  auto resolve = [&](const Term& t, bool& is_const, int& arg) {
    if (t.kind == Term::Kind::Const) {
      is_const = true;
      arg = vocab.id_of(vocab.constants, t.text);
      return;
    }
    auto it = std::find(scope.rbegin(), scope.rend(), t.text);
    if (it == scope.rend()) {
      throw AmrError(ErrorCode::FreeVariable,
                     "variable '" + t.text + "' is not bound");
    }
    is_const = false;
    arg = static_cast<int>(scope.rend() - it) - 1;
  };
  if (const auto* a = std::get_if<Atom>(&f.node)) {
    if (a->args.size() == 1) {
      out.op = CompiledFormula::Op::Unary;
      out.pred = vocab.id_of(vocab.unary, a->pred);
      resolve(a->args[0], out.const_a, out.arg_a);
    } else {
      out.op = CompiledFormula::Op::Binary;
      out.pred = vocab.id_of(vocab.binary, a->pred);
      resolve(a->args[0], out.const_a, out.arg_a);
      resolve(a->args[1], out.const_b, out.arg_b);
    }
  } else if (const auto* t = std::get_if<TruthConstant>(&f.node)) {
    out.op = CompiledFormula::Op::Truth;
    out.truth_value = t->value;
  } else if (const auto* c = std::get_if<AndFormula>(&f.node)) {
    out.op = CompiledFormula::Op::And;
    for (const auto& item : c->items) {
      out.children.push_back(compile_formula(item, vocab, scope));
    }
  } else if (const auto* n = std::get_if<NotFormula>(&f.node)) {
    out.op = CompiledFormula::Op::Not;
    out.children.push_back(compile_formula(*n->body, vocab, scope));
  } else if (const auto* imp = std::get_if<ImpliesFormula>(&f.node)) {
    out.op = CompiledFormula::Op::Implies;
    out.children.push_back(compile_formula(*imp->antecedent, vocab, scope));
    out.children.push_back(compile_formula(*imp->consequent, vocab, scope));
  } else {
    bool is_exists = std::holds_alternative<ExistsFormula>(f.node);
    const auto& vars = is_exists ? std::get<ExistsFormula>(f.node).variables
                                 : std::get<ForallFormula>(f.node).variables;
    const auto& body = is_exists ? *std::get<ExistsFormula>(f.node).body
                                 : *std::get<ForallFormula>(f.node).body;
    // Multi-variable quantifiers become a chain of single-slot ones.
    CompiledFormula* cur = &out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (scope.size() >= kMaxSlots) {
        throw AmrError(ErrorCode::VocabularyTooLarge,
                       "quantifier nesting too deep");
      }
      cur->op = is_exists ? CompiledFormula::Op::Exists
                          : CompiledFormula::Op::Forall;
      cur->slot = static_cast<int>(scope.size());
      scope.push_back(vars[i]);
      cur->children.emplace_back();
      cur = &cur->children.back();
    }
    *cur = compile_formula(body, vocab, scope);
    scope.resize(scope.size() - vars.size());
  }
  return out;
}

inline bool eval_compiled(const CompiledFormula& f, const Interp& m,
                          std::uint8_t env[kMaxSlots]) {
  switch (f.op) {
    case CompiledFormula::Op::Unary: {
      int d = f.const_a ? m.consts[f.arg_a] : env[f.arg_a];
      return (m.unary[f.pred] >> d) & 1u;
    }
    case CompiledFormula::Op::Binary: {
      int d1 = f.const_a ? m.consts[f.arg_a] : env[f.arg_a];
      int d2 = f.const_b ? m.consts[f.arg_b] : env[f.arg_b];
      return (m.binary[f.pred] >> (d1 * m.n + d2)) & 1u;
    }
    case CompiledFormula::Op::And:
      for (const auto& c : f.children) {
        if (!eval_compiled(c, m, env)) return false;
      }
      return true;
    case CompiledFormula::Op::Not:
      return !eval_compiled(f.children[0], m, env);
    case CompiledFormula::Op::Implies:
      return !eval_compiled(f.children[0], m, env) ||
             eval_compiled(f.children[1], m, env);
    case CompiledFormula::Op::Exists:
      for (int d = 0; d < m.n; ++d) {
        env[f.slot] = static_cast<std::uint8_t>(d);
        if (eval_compiled(f.children[0], m, env)) return true;
      }
      return false;
    case CompiledFormula::Op::Forall:
      for (int d = 0; d < m.n; ++d) {
        env[f.slot] = static_cast<std::uint8_t>(d);
        if (!eval_compiled(f.children[0], m, env)) return false;
      }
      return true;
    case CompiledFormula::Op::Truth:
      return f.truth_value;
  }
  return false;
}

inline std::uint32_t permute_unary(std::uint32_t mask,
                                   const std::vector<int>& perm, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) out |= 1u << perm[i];
  }
  return out;
}

inline std::uint32_t permute_binary(std::uint32_t mask,
                                    const std::vector<int>& perm, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1u) out |= 1u << (perm[i] * n + perm[j]);
    }
  }
  return out;
}

// Enumerates interpretations over domains of size min_n..max_n in a fixed
// order. With symmetry reduction only the lexicographically least member of
// each relabeling class is visited. Returns true as soon as fn does.
template <typename Fn>
bool enumerate_interps(const FolVocabulary& vocab, int min_n, int max_n,
                       bool reduce_symmetry, Fn&& fn) {
  const int nu = static_cast<int>(vocab.unary.size());
  const int nb = static_cast<int>(vocab.binary.size());
  const int nc = static_cast<int>(vocab.constants.size());
  if (nu > kMaxPreds || nb > kMaxPreds || nc > kMaxConsts) {
    throw AmrError(ErrorCode::VocabularyTooLarge,
                   "too many predicates or constants");
  }
  if (max_n > kMaxInterpBits) {
    throw AmrError(ErrorCode::VocabularyTooLarge,
                   "domain bound exceeds the search guard");
  }
  const long long max_bits =
      static_cast<long long>(nu) * max_n +
      static_cast<long long>(nb) * max_n * max_n;
  if (max_bits > kMaxInterpBits) {
    throw AmrError(ErrorCode::VocabularyTooLarge,
                   std::to_string(max_bits) +
                       " interpretation bits at domain size " +
                       std::to_string(max_n) + " exceed the " +
                       std::to_string(kMaxInterpBits) + "-bit search guard");
  }

  for (int n = min_n; n <= max_n; ++n) {
    const int ubits = nu * n;
    const int bits = ubits + nb * n * n;
    const std::uint32_t umask = nu == 0 ? 0 : ((1u << n) - 1);
    const std::uint32_t bmask = nb == 0 ? 0 : ((1u << (n * n)) - 1);

    // Relabeling classes collapse by up to n!; past a handful of elements
    // the permutation set itself is the bottleneck, so fall back to the
    // plain sweep there.
    std::vector<std::vector<int>> perms;
    if (reduce_symmetry && n > 1 && n <= 6) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
    }

    Interp m;
    m.n = n;
    m.n_unary = nu;
    m.n_binary = nb;
    m.n_consts = nc;

    const std::uint64_t limit = 1ull << bits;
    std::vector<const std::vector<int>*> tie_perms;
    for (std::uint64_t word = 0; word < limit; ++word) {
      for (int u = 0; u < nu; ++u) {
        m.unary[u] = static_cast<std::uint32_t>(word >> (u * n)) & umask;
      }
      for (int b = 0; b < nb; ++b) {
        m.binary[b] =
            static_cast<std::uint32_t>(word >> (ubits + b * n * n)) & bmask;
      }

      // A permutation making the predicate masks strictly smaller rules the
      // whole word out; ones that leave them unchanged are decided by the
      // constant assignment below.
      tie_perms.clear();
      bool canonical = true;
      for (const auto& perm : perms) {
        int cmp = 0;
        for (int u = 0; u < nu && cmp == 0; ++u) {
          std::uint32_t pm = permute_unary(m.unary[u], perm, n);
          if (pm != m.unary[u]) cmp = pm < m.unary[u] ? -1 : 1;
        }
        for (int b = 0; b < nb && cmp == 0; ++b) {
          std::uint32_t pm = permute_binary(m.binary[b], perm, n);
          if (pm != m.binary[b]) cmp = pm < m.binary[b] ? -1 : 1;
        }
        if (cmp < 0) {
          canonical = false;
          break;
        }
        if (cmp == 0 && nc > 0) tie_perms.push_back(&perm);
      }
      if (!canonical) continue;

      std::uint64_t const_combos = 1;
      for (int c = 0; c < nc; ++c) const_combos *= n;
      for (std::uint64_t cc = 0; cc < const_combos; ++cc) {
        std::uint64_t rest = cc;
        for (int c = 0; c < nc; ++c) {
          m.consts[c] = static_cast<std::uint8_t>(rest % n);
          rest /= n;
        }
        bool const_canonical = true;
        for (const auto* perm : tie_perms) {
          int cmp = 0;
          for (int c = 0; c < nc && cmp == 0; ++c) {
            int pc = (*perm)[m.consts[c]];
            if (pc != m.consts[c]) cmp = pc < m.consts[c] ? -1 : 1;
          }
          if (cmp < 0) {
            const_canonical = false;
            break;
          }
        }
        if (!const_canonical) continue;
        if (fn(static_cast<const Interp&>(m))) return true;
      }
    }
  }
  return false;
}

inline Model interp_to_model(const Interp& m, const FolVocabulary& vocab) {
  Model out;
  for (int i = 0; i < m.n; ++i) {
    out.domain.push_back("d" + std::to_string(i + 1));
  }
  for (int u = 0; u < m.n_unary; ++u) {
    auto& ext = out.unary[vocab.unary[u]];
    for (int i = 0; i < m.n; ++i) {
      if ((m.unary[u] >> i) & 1u) ext.insert(out.domain[i]);
    }
  }
  for (int b = 0; b < m.n_binary; ++b) {
    auto& ext = out.binary[vocab.binary[b]];
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        if ((m.binary[b] >> (i * m.n + j)) & 1u) {
          ext.insert({out.domain[i], out.domain[j]});
        }
      }
    }
  }
  for (int c = 0; c < m.n_consts; ++c) {
    out.constants[vocab.constants[c]] = out.domain[m.consts[c]];
  }
  return out;
}

}  // namespace detail

struct Refuted {
  Model countermodel;
};

struct NoCountermodelUpTo {
  int size = 0;
};

using EntailmentVerdict = std::variant<Refuted, NoCountermodelUpTo>;

inline bool is_refuted(const EntailmentVerdict& v) {
  return std::holds_alternative<Refuted>(v);
}

// Enumerates every interpretation of the combined vocabulary over domains of
// size 1..max_domain (up to relabeling); reports the first model satisfying
// the premise but not the conclusion, or that none exists within the bound.
inline EntailmentVerdict check_entailment(const Formula& premise,
                                          const Formula& conclusion,
                                          int max_domain) {
  if (max_domain < 1) {
    throw AmrError(ErrorCode::BadInput, "max_domain must be >= 1");
  }
  detail::FolVocabulary vocab;
  detail::collect_vocabulary(premise, vocab);
  detail::collect_vocabulary(conclusion, vocab);
  std::vector<std::string> scope;
  detail::CompiledFormula cp = detail::compile_formula(premise, vocab, scope);
  detail::CompiledFormula cc =
      detail::compile_formula(conclusion, vocab, scope);

  Model counter;
  bool found = detail::enumerate_interps(
      vocab, 1, max_domain, true, [&](const detail::Interp& m) {
        std::uint8_t env[detail::kMaxSlots] = {};
        if (detail::eval_compiled(cp, m, env) &&
            !detail::eval_compiled(cc, m, env)) {
          counter = detail::interp_to_model(m, vocab);
          return true;
        }
        return false;
      });
  if (found) return Refuted{std::move(counter)};
  return NoCountermodelUpTo{max_domain};
}

// Test-support enumeration over public models.
template <typename Fn>  // Fn(const Model&) -> bool, true stops early
bool for_each_model(const std::vector<std::string>& unary,
                    const std::vector<std::string>& binary,
                    const std::vector<std::string>& constants, int min_n,
                    int max_n, bool reduce_symmetry, Fn&& fn) {
  detail::FolVocabulary vocab{unary, binary, constants};
  return detail::enumerate_interps(
      vocab, min_n, max_n, reduce_symmetry, [&](const detail::Interp& m) {
        return fn(detail::interp_to_model(m, vocab));
      });
}

inline std::string model_to_text(const Model& m) {
  std::ostringstream out;
  out << "domain";
  for (const auto& d : m.domain) out << ' ' << d;
  out << '\n';
  for (const auto& [pred, ext] : m.unary) {
    out << "unary " << pred;
    for (const auto& d : ext) out << ' ' << d;
    out << '\n';
  }
  for (const auto& [rel, ext] : m.binary) {
    out << "binary " << rel;
    for (const auto& [a, b] : ext) out << ' ' << a << ',' << b;
    out << '\n';
  }
  for (const auto& [c, d] : m.constants) {
    out << "constant \"" << c << "\" " << d << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Clause reading (inverse of render_clauses up to box naming)

namespace detail {

inline DrsArg clause_arg(const std::string& text, bool quoted) {
  if (quoted) {
    if (text == "-") return Constant::minus();
    if (text == "+") return Constant::plus();
    if (number_text(text)) return Constant::number(text);
    return Constant::string(text);
  }
  if (number_text(text)) return Constant::number(text);
  if (text == "-") return Constant::minus();
  if (text == "+") return Constant::plus();
  return text;  // referent
}

}  // namespace detail

inline DrsOutput read_clauses(const std::string& text) {
  struct RawClause {
    std::vector<std::string> fields;
    std::vector<bool> quoted;
    int lineno;
  };
  std::map<std::string, std::vector<RawClause>> boxes;
  std::vector<std::string> box_order;
  std::map<std::string, int> targeted;  // box -> times used as a target
  std::vector<std::string> prs_targets;
  std::vector<std::pair<std::string, int>> prs_sources;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    RawClause rc;
    rc.lineno = lineno;
    rc.fields = detail::split_fields(line, lineno, &rc.quoted);
    if (rc.fields.empty()) continue;
    if (rc.fields.size() < 3 || rc.fields.size() > 4) {
      throw AmrError(ErrorCode::ClauseSyntax,
                     "expected 3 or 4 fields per clause", lineno, 1);
    }
    if (rc.quoted[0] || rc.quoted[1]) {
      throw AmrError(ErrorCode::ClauseSyntax,
                     "box name and operator must not be quoted", lineno, 1);
    }
    const std::string& bx = rc.fields[0];
    if (!boxes.count(bx)) {
      box_order.push_back(bx);
      boxes[bx];  // a box may consist of presupposition links alone
    }
    const std::string& op = rc.fields[1];
    auto target_field = [&](std::size_t i) {
      if (rc.quoted[i]) {
        throw AmrError(ErrorCode::ClauseSyntax, "box name must not be quoted",
                       lineno, 1);
      }
      return rc.fields[i];
    };
    if (op == "NOT") {
      if (rc.fields.size() != 3) {
        throw AmrError(ErrorCode::ClauseSyntax, "NOT takes one box", lineno,
                       1);
      }
      ++targeted[target_field(2)];
    } else if (op == "IMP") {
      if (rc.fields.size() != 4) {
        throw AmrError(ErrorCode::ClauseSyntax, "IMP takes two boxes", lineno,
                       1);
      }
      ++targeted[target_field(2)];
      ++targeted[target_field(3)];
    } else if (op == "PRS") {
      if (rc.fields.size() != 3) {
        throw AmrError(ErrorCode::ClauseSyntax, "PRS takes one box", lineno,
                       1);
      }
      ++targeted[target_field(2)];
      prs_targets.push_back(rc.fields[2]);
      prs_sources.emplace_back(bx, lineno);
      continue;  // presupposition links are structural, not conditions
    }
    boxes[bx].push_back(std::move(rc));
  }

  if (boxes.empty() && prs_targets.empty()) return DrsOutput{};

  for (const auto& [bx, count] : targeted) {
    if (count > 1) {
      throw AmrError(ErrorCode::ClauseSyntax,
                     "box " + bx + " is used in more than one place");
    }
  }

  std::vector<std::string> top;
  for (const auto& bx : box_order) {
    if (!targeted.count(bx)) top.push_back(bx);
  }
  if (top.size() != 1) {
    throw AmrError(ErrorCode::ClauseSyntax,
                   "expected exactly one top box, found " +
                       std::to_string(top.size()));
  }
  const std::string& main_box = top[0];
  for (const auto& [src, ln] : prs_sources) {
    if (src != main_box) {
      throw AmrError(ErrorCode::ClauseSyntax,
                     "presupposition link from non-top box " + src, ln, 1);
    }
  }

  std::set<std::string> built;
  auto build = [&](auto&& self, const std::string& name) -> Drs {
    auto it = boxes.find(name);
    if (it == boxes.end()) {
      throw AmrError(ErrorCode::DanglingBox,
                     "box " + name + " referenced but never defined");
    }
    built.insert(name);
    Drs d;
    for (const RawClause& rc : it->second) {
      const std::string& op = rc.fields[1];
      if (op == "REF") {
        if (rc.fields.size() != 3 || rc.quoted[2]) {
          throw AmrError(ErrorCode::ClauseSyntax, "REF takes one referent",
                         rc.lineno, 1);
        }
        d.add_referent(rc.fields[2]);
      } else if (op == "NOT") {
        d.conditions.push_back(
            NotCondition{detail::box<Drs>(self(self, rc.fields[2]))});
      } else if (op == "IMP") {
        d.conditions.push_back(
            ImpCondition{detail::box<Drs>(self(self, rc.fields[2])),
                         detail::box<Drs>(self(self, rc.fields[3]))});
      } else if (rc.fields.size() == 3) {
        d.conditions.push_back(PredCondition{
            op, detail::clause_arg(rc.fields[2], rc.quoted[2])});
      } else {
        d.conditions.push_back(
            RelCondition{op, detail::clause_arg(rc.fields[2], rc.quoted[2]),
                         detail::clause_arg(rc.fields[3], rc.quoted[3])});
      }
    }
    return d;
  };

  DrsOutput out;
  out.main = build(build, main_box);
  for (const auto& p : prs_targets) {
    out.presuppositions.push_back(build(build, p));
  }
  for (const auto& bx : box_order) {
    if (!built.count(bx)) {
      throw AmrError(ErrorCode::ClauseSyntax,
                     "box " + bx + " is not connected to the top box");
    }
  }
  return out;
}

}  // namespace amrplus

#endif  // AMRPLUS_LOGIC_HPP

// Discourse representation structures and the translation from validated
// indexed AMRs: one box per node, merge by context, then a fold over the
// placement structure.
#ifndef AMRPLUS_DRS_HPP
#define AMRPLUS_DRS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"
#include "amrplus/lexmap.hpp"
#include "amrplus/penman.hpp"

namespace amrplus {

// ---------------------------------------------------------------------------
// Types

// Condition argument: a discourse referent or a literal.
using DrsArg = std::variant<std::string, Constant>;

inline bool is_referent(const DrsArg& a) {
  return std::holds_alternative<std::string>(a);
}
inline const std::string& referent(const DrsArg& a) {
  return std::get<std::string>(a);
}

struct Drs;

struct PredCondition {
  std::string name;
  DrsArg arg;
  bool operator==(const PredCondition&) const = default;
};

// Relations have arity exactly two.
struct RelCondition {
  std::string name;
  DrsArg first;
  DrsArg second;
  bool operator==(const RelCondition&) const = default;
};

struct NotCondition {
  detail::box<Drs> body;
  bool operator==(const NotCondition&) const = default;
};

struct ImpCondition {
  detail::box<Drs> ante;
  detail::box<Drs> cons;
  bool operator==(const ImpCondition&) const = default;
};

using Condition =
    std::variant<PredCondition, RelCondition, NotCondition, ImpCondition>;

struct Drs {
  std::vector<std::string> referents;  // unique, first-occurrence order
  std::vector<Condition> conditions;

  void add_referent(const std::string& name) {
    if (std::find(referents.begin(), referents.end(), name) ==
        referents.end()) {
      referents.push_back(name);
    }
  }

  bool empty() const { return referents.empty() && conditions.empty(); }
  bool operator==(const Drs&) const = default;
};

// Translation result: the main box plus any presupposed boxes, listed in
// context-index order.
struct DrsOutput {
  std::vector<Drs> presuppositions;
  Drs main;
  bool operator==(const DrsOutput&) const = default;
};

enum class Accommodation { None, Global, Local };

inline Accommodation accommodation_from_string(const std::string& s) {
  if (s == "none") return Accommodation::None;
  if (s == "global") return Accommodation::Global;
  if (s == "local") return Accommodation::Local;
  throw AmrError(ErrorCode::BadInput,
                 "unknown accommodation mode '" + s + "'");
}

// ---------------------------------------------------------------------------
// node_to_drs

namespace detail {

inline DrsArg to_drs_arg(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.text;
  Constant c;
  c.kind = t.const_kind;
  c.text = t.text;
  return c;
}

}  // namespace detail

// One discourse referent, one unary condition for the concept, one binary
// condition per role; role targets contribute their main variable.
inline Drs node_to_drs(const AmrPlusNode& node, const LexMap& lex) {
  Drs d;
  d.add_referent(node.variable);
  d.conditions.push_back(
      PredCondition{lex.map_concept(node.concept_name), node.variable});
  for (const auto& role : node.roles) {
    d.conditions.push_back(
        RelCondition{lex.map_role(node.concept_name, role.relation),
                     node.variable, detail::to_drs_arg(main_variable(role.target))});
  }
  return d;
}

// ---------------------------------------------------------------------------
// merge

// Union of referents (first occurrence wins) and concatenation of conditions
// with structural duplicates removed. The empty box is the identity.
inline Drs merge(const Drs& a, const Drs& b) {
  Drs out = a;
  for (const auto& r : b.referents) out.add_referent(r);
  for (const auto& c : b.conditions) {
    if (std::find(out.conditions.begin(), out.conditions.end(), c) ==
        out.conditions.end()) {
      out.conditions.push_back(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// translate

// Per-context intermediate boxes alongside the final output: `merged` holds
// the box of each context after same-index merging, `folded` the box after
// its structural children were folded in.
struct Derivation {
  std::map<ContextIndex, Drs> merged;
  std::map<ContextIndex, Drs> folded;
  DrsOutput output;
};

inline Derivation derive(const AmrPlusDocument& doc,
                         const ContextStructure& structure, const LexMap& lex,
                         Accommodation mode = Accommodation::None) {
  Derivation out;

  // Step 1 + 2: one box per node, merged by effective context index;
  // contexts with no nodes (inferred) get the empty box.
  for (const auto& entry : structure.placement) out.merged[entry.first];
  for (const auto& [idx, node] : subamrs(doc)) {
    ContextIndex ctx = structure.representative(idx);
    out.merged[ctx] = merge(out.merged[ctx], node_to_drs(*node, lex));
  }

  // Children per host, ordered by child index for determinism.
  std::map<ContextIndex, std::vector<ContextIndex>> negs;
  std::map<ContextIndex, std::vector<ContextIndex>> presups;
  std::map<ContextIndex, std::vector<std::pair<ContextIndex, ContextIndex>>>
      conds;  // host -> (ante, cons)
  std::vector<ContextIndex> presup_contexts;
  for (const auto& [ctx, placement] : structure.placement) {
    if (const auto* n = std::get_if<NegIn>(&placement)) {
      negs[n->host].push_back(ctx);
    } else if (const auto* a = std::get_if<AnteOf>(&placement)) {
      conds[a->host].emplace_back(ctx, a->cons);
    } else if (const auto* p = std::get_if<PresupOf>(&placement)) {
      presups[p->anchor].push_back(ctx);
      presup_contexts.push_back(ctx);
    }
  }
  for (auto& [h, v] : negs) std::sort(v.begin(), v.end());
  for (auto& [h, v] : conds) std::sort(v.begin(), v.end());
  for (auto& [h, v] : presups) std::sort(v.begin(), v.end());
  std::sort(presup_contexts.begin(), presup_contexts.end());

  // Step 3: fold bottom-up from the root. Presupposed content merges in
  // front of its anchor only under local accommodation.
  auto fold = [&](auto&& self, ContextIndex ctx) -> Drs {
    Drs box = out.merged[ctx];
    if (mode == Accommodation::Local) {
      auto it = presups.find(ctx);
      if (it != presups.end()) {
        Drs given;
        for (ContextIndex p : it->second) given = merge(given, self(self, p));
        box = merge(given, box);
      }
    }
    auto ni = negs.find(ctx);
    auto ci = conds.find(ctx);
    std::size_t a = 0, b = 0;
    const std::size_t na = ni == negs.end() ? 0 : ni->second.size();
    const std::size_t nb = ci == conds.end() ? 0 : ci->second.size();
    while (a < na || b < nb) {
      bool take_neg =
          b >= nb || (a < na && ni->second[a] < ci->second[b].first);
      if (take_neg) {
        box.conditions.push_back(NotCondition{self(self, ni->second[a])});
        ++a;
      } else {
        box.conditions.push_back(ImpCondition{
            self(self, ci->second[b].first), self(self, ci->second[b].second)});
        ++b;
      }
    }
    out.folded[ctx] = box;
    return box;
  };

  Drs main = fold(fold, structure.root);
  if (mode == Accommodation::Local) {
    out.output.main = std::move(main);
    return out;
  }
  std::vector<Drs> presupposed;
  for (ContextIndex p : presup_contexts) {
    presupposed.push_back(fold(fold, p));
  }
  if (mode == Accommodation::Global) {
    Drs merged_main;
    for (const Drs& p : presupposed) merged_main = merge(merged_main, p);
    out.output.main = merge(merged_main, main);
    return out;
  }
  out.output.presuppositions = std::move(presupposed);
  out.output.main = std::move(main);
  return out;
}

inline DrsOutput translate(const AmrPlusDocument& doc,
                           const ContextStructure& structure,
                           const LexMap& lex,
                           Accommodation mode = Accommodation::None) {
  return derive(doc, structure, lex, mode).output;
}

}  // namespace amrplus

#endif  // AMRPLUS_DRS_HPP

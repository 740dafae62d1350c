// Normalization and validation of scoping-constraint sets, and the placement
// structure the translator folds over.
#ifndef AMRPLUS_CONTEXTS_HPP
#define AMRPLUS_CONTEXTS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/penman.hpp"

namespace amrplus {

// ---------------------------------------------------------------------------
// Placement

struct RootPlacement {
  bool operator==(const RootPlacement&) const = default;
};
struct NegIn {
  ContextIndex host = 0;
  bool operator==(const NegIn&) const = default;
};
struct AnteOf {
  ContextIndex host = 0;
  ContextIndex cons = 0;
  bool operator==(const AnteOf&) const = default;
};
struct ConsOf {
  ContextIndex host = 0;
  ContextIndex ante = 0;
  bool operator==(const ConsOf&) const = default;
};
struct PresupOf {
  ContextIndex anchor = 0;
  bool operator==(const PresupOf&) const = default;
};

using Placement = std::variant<RootPlacement, NegIn, AnteOf, ConsOf, PresupOf>;

// Where each context sits. `merged` maps away indices eliminated by equality
// constraints; `constraints` holds the normalized (shorthand-free, equality-
// free) set; `discharged` lists presuppositions bound by structural placement.
struct ContextStructure {
  ContextIndex root = 0;
  std::map<ContextIndex, Placement> placement;
  std::map<ContextIndex, ContextIndex> merged;
  ConstraintSet constraints;
  std::vector<PresupConstraint> discharged;

  ContextIndex representative(ContextIndex i) const {
    auto it = merged.find(i);
    return it == merged.end() ? i : it->second;
  }

  // Host link used for acyclicity and scope checks.
  ContextIndex host_of(ContextIndex i) const {
    const Placement& p = placement.at(i);
    if (const auto* n = std::get_if<NegIn>(&p)) return n->host;
    if (const auto* a = std::get_if<AnteOf>(&p)) return a->host;
    if (const auto* c = std::get_if<ConsOf>(&p)) return c->host;
    if (const auto* s = std::get_if<PresupOf>(&p)) return s->anchor;
    return i;  // root
  }

  bool is_root(ContextIndex i) const {
    return std::holds_alternative<RootPlacement>(placement.at(i));
  }
};

namespace detail {

inline void collect_constraint_indices(const Constraint& c,
                                       std::set<ContextIndex>& out) {
  if (const auto* eq = std::get_if<EqConstraint>(&c)) {
    out.insert(eq->a);
    out.insert(eq->b);
  } else if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
    out.insert(pr->presupposed);
    out.insert(pr->anchor);
  } else if (const auto* ng = std::get_if<NegConstraint>(&c)) {
    out.insert(ng->host);
    out.insert(ng->scope);
  } else if (const auto* cd = std::get_if<CondConstraint>(&c)) {
    out.insert(cd->host);
    out.insert(cd->ante);
    out.insert(cd->cons);
  } else if (const auto* sn = std::get_if<ShorthandNeg>(&c)) {
    out.insert(sn->scope);
  } else if (const auto* sc = std::get_if<ShorthandCond>(&c)) {
    out.insert(sc->ante);
    out.insert(sc->cons);
  }
}

}  // namespace detail

// All context indices mentioned on nodes or in constraints.
inline std::set<ContextIndex> used_indices(const AmrPlusDocument& doc) {
  std::set<ContextIndex> used;
  for (const auto& [idx, node] : subamrs(doc)) used.insert(idx);
  for (const auto& c : doc.constraints) {
    detail::collect_constraint_indices(c, used);
  }
  return used;
}

// ---------------------------------------------------------------------------
// expand_shorthand

// Replaces {~j} by {i:~j} and {j=>k} by {i:j=>k}, inferring each host i as
// the smallest positive integer not yet in use, in constraint order.
inline ConstraintSet expand_shorthand(const ConstraintSet& cs,
                                      std::set<ContextIndex> used) {
  auto fresh = [&used]() {
    ContextIndex i = 1;
    while (used.count(i)) ++i;
    used.insert(i);
    return i;
  };
  ConstraintSet out;
  for (const auto& c : cs) {
    if (const auto* sn = std::get_if<ShorthandNeg>(&c)) {
      out.insert(NegConstraint{fresh(), sn->scope});
    } else if (const auto* sc = std::get_if<ShorthandCond>(&c)) {
      out.insert(CondConstraint{fresh(), sc->ante, sc->cons});
    } else {
      out.insert(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// eliminate_equalities

namespace detail {

class UnionFind {
 public:
  ContextIndex find(ContextIndex i) {
    auto it = parent_.find(i);
    if (it == parent_.end()) return i;
    ContextIndex root = find(it->second);
    parent_[i] = root;
    return root;
  }

  // Representative is the smaller index.
  void unite(ContextIndex a, ContextIndex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    members_.insert(a);
    members_.insert(b);
  }

  std::map<ContextIndex, ContextIndex> mapping() {
    std::map<ContextIndex, ContextIndex> out;
    for (ContextIndex i : members_) {
      ContextIndex rep = find(i);
      if (rep != i) out[i] = rep;
    }
    return out;
  }

 private:
  std::map<ContextIndex, ContextIndex> parent_;
  std::set<ContextIndex> members_;
};

}  // namespace detail

struct EqualityElimination {
  ConstraintSet constraints;                      // equality-free
  std::map<ContextIndex, ContextIndex> mapping;   // merged index -> representative
};

// Union-find over Eq constraints; everything else is rewritten through the
// resulting mapping. Presuppositions collapsing onto themselves are vacuous
// and dropped; negations or conditionals collapsing onto themselves are
// cyclic scope.
inline EqualityElimination eliminate_equalities(const ConstraintSet& cs) {
  detail::UnionFind uf;
  for (const auto& c : cs) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      uf.unite(eq->a, eq->b);
    } else if (std::holds_alternative<ShorthandNeg>(c) ||
               std::holds_alternative<ShorthandCond>(c)) {
      throw AmrError(ErrorCode::BadInput,
                     "shorthand constraint not expanded before equality "
                     "elimination");
    }
  }
  EqualityElimination out;
  out.mapping = uf.mapping();
  auto rep = [&uf](ContextIndex i) { return uf.find(i); };
  for (const auto& c : cs) {
    if (std::holds_alternative<EqConstraint>(c)) continue;
    if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
      ContextIndex p = rep(pr->presupposed), a = rep(pr->anchor);
      if (p == a) continue;  // vacuous residue
      out.constraints.insert(PresupConstraint{p, a});
    } else if (const auto* ng = std::get_if<NegConstraint>(&c)) {
      ContextIndex h = rep(ng->host), s = rep(ng->scope);
      if (h == s) {
        throw AmrError(ErrorCode::CyclicScope,
                       "context " + std::to_string(h) +
                           " would contain its own negation");
      }
      out.constraints.insert(NegConstraint{h, s});
    } else if (const auto* cd = std::get_if<CondConstraint>(&c)) {
      ContextIndex h = rep(cd->host), a = rep(cd->ante), k = rep(cd->cons);
      if (h == a || h == k || a == k) {
        throw AmrError(ErrorCode::CyclicScope,
                       "conditional constraint collapses onto itself");
      }
      out.constraints.insert(CondConstraint{h, a, k});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// conditional_as_negation

// {i: j => k} becomes {i:~j, j:~k}: the antecedent context hosts the inner
// negation.
inline ConstraintSet conditional_as_negation(const ConstraintSet& cs,
                                             const std::set<ContextIndex>&) {
  ConstraintSet out;
  for (const auto& c : cs) {
    if (const auto* cd = std::get_if<CondConstraint>(&c)) {
      out.insert(NegConstraint{cd->host, cd->ante});
      out.insert(NegConstraint{cd->ante, cd->cons});
    } else if (std::holds_alternative<ShorthandNeg>(c) ||
               std::holds_alternative<ShorthandCond>(c)) {
      throw AmrError(ErrorCode::BadInput,
                     "shorthand constraint not expanded before conditional "
                     "rewriting");
    } else {
      out.insert(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// build_structure

// Computes a placement for every index. Structural constraints (negation,
// conditional) place their children first; presuppositions then either place
// their context or, if it is already structurally placed, are discharged.
// Exactly one index must remain unplaced; it becomes the root.
inline ContextStructure build_structure(const ConstraintSet& cs,
                                        const std::set<ContextIndex>& used) {
  ContextStructure st;
  st.constraints = cs;

  auto place = [&st](ContextIndex child, Placement p) {
    auto [it, inserted] = st.placement.emplace(child, std::move(p));
    if (!inserted) {
      throw AmrError(ErrorCode::DoublePlacement,
                     "context " + std::to_string(child) +
                         " placed by more than one structural constraint");
    }
  };

  std::set<ContextIndex> all = used;
  for (const auto& c : cs) detail::collect_constraint_indices(c, all);

  for (const auto& c : cs) {
    if (const auto* ng = std::get_if<NegConstraint>(&c)) {
      if (ng->host == ng->scope) {
        throw AmrError(ErrorCode::CyclicScope,
                       "context " + std::to_string(ng->host) +
                           " would contain its own negation");
      }
      place(ng->scope, NegIn{ng->host});
    } else if (const auto* cd = std::get_if<CondConstraint>(&c)) {
      if (cd->host == cd->ante || cd->host == cd->cons ||
          cd->ante == cd->cons) {
        throw AmrError(ErrorCode::CyclicScope,
                       "conditional constraint collapses onto itself");
      }
      place(cd->ante, AnteOf{cd->host, cd->cons});
      place(cd->cons, ConsOf{cd->host, cd->ante});
    } else if (std::holds_alternative<EqConstraint>(c)) {
      throw AmrError(ErrorCode::ResidualEquality,
                     "equality constraint not eliminated before structure "
                     "building");
    } else if (std::holds_alternative<ShorthandNeg>(c) ||
               std::holds_alternative<ShorthandCond>(c)) {
      throw AmrError(ErrorCode::BadInput,
                     "shorthand constraint not expanded before structure "
                     "building");
    }
  }

  // Presuppositions bind rather than place when their context already sits
  // inside the structure.
  for (const auto& c : cs) {
    if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
      if (st.placement.count(pr->presupposed)) {
        st.discharged.push_back(*pr);
      } else {
        place(pr->presupposed, PresupOf{pr->anchor});
      }
    }
  }

  std::vector<ContextIndex> unplaced;
  for (ContextIndex i : all) {
    if (!st.placement.count(i)) unplaced.push_back(i);
  }
  if (unplaced.empty()) {
    throw AmrError(ErrorCode::NoRoot, "no root candidate: every context is "
                                      "placed inside another");
  }
  if (unplaced.size() > 1) {
    // A context mentioned by some constraint is a determined candidate; ones
    // mentioned nowhere are contexts the constraints never situate.
    std::set<ContextIndex> mentioned;
    for (const auto& c : cs) detail::collect_constraint_indices(c, mentioned);
    std::vector<ContextIndex> determined, stray;
    for (ContextIndex i : unplaced) {
      (mentioned.count(i) ? determined : stray).push_back(i);
    }
    if (determined.size() == 1 && !stray.empty()) {
      std::string list;
      for (ContextIndex i : stray) list += " " + std::to_string(i);
      throw AmrError(ErrorCode::Unplaced,
                     "context(s)" + list + " never situated by the "
                     "constraints (root is " + std::to_string(determined[0]) +
                     ")");
    }
    std::string list;
    for (ContextIndex i : unplaced) list += " " + std::to_string(i);
    throw AmrError(ErrorCode::MultiRoot, "multiple root candidates:" + list);
  }
  st.root = unplaced[0];
  st.placement.emplace(st.root, RootPlacement{});

  // Every host chain must reach the root.
  for (ContextIndex i : all) {
    ContextIndex cur = i;
    std::size_t steps = 0;
    while (!st.is_root(cur)) {
      ContextIndex next = st.host_of(cur);
      if (!st.placement.count(next)) {
        throw AmrError(ErrorCode::Unplaced,
                       "context " + std::to_string(cur) +
                           " hangs off unknown context " +
                           std::to_string(next));
      }
      cur = next;
      if (++steps > all.size()) {
        throw AmrError(ErrorCode::CyclicScope,
                       "scope cycle through context " + std::to_string(i));
      }
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// validate

// Full document check: expands shorthand, eliminates equalities, builds the
// placement structure, and verifies every node context is situated.
inline ContextStructure validate(const AmrPlusDocument& doc) {
  std::set<ContextIndex> node_indices;
  for (const auto& [idx, node] : subamrs(doc)) node_indices.insert(idx);

  std::set<ContextIndex> used = used_indices(doc);
  ConstraintSet expanded = expand_shorthand(doc.constraints, used);
  EqualityElimination elim = eliminate_equalities(expanded);

  std::set<ContextIndex> contexts;
  for (ContextIndex i : node_indices) {
    auto it = elim.mapping.find(i);
    contexts.insert(it == elim.mapping.end() ? i : it->second);
  }

  ContextStructure st = build_structure(elim.constraints, contexts);
  st.merged = std::move(elim.mapping);
  return st;
}

}  // namespace amrplus

#endif  // AMRPLUS_CONTEXTS_HPP

// Seeded generator of well-formed documents for the property suites.
//
// The scoping structure nests along a single spine (each negation or
// conditional extends the current deepest context; presuppositions hang off
// it), the syntactic root sits in the deepest context, and every role edge
// points at a context whose referents are visible from the parent's box.
// That keeps three things true by construction: validation succeeds, no box
// the clause format must name is empty, and global accommodation yields a
// closed formula.
#ifndef AMRPLUS_TESTS_DOCGEN_HPP
#define AMRPLUS_TESTS_DOCGEN_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"
#include "amrplus/triples.hpp"  // SplitMix64

namespace testsupport {

using amrplus::AmrPlusDocument;
using amrplus::AmrPlusNode;
using amrplus::CondConstraint;
using amrplus::Constant;
using amrplus::ConstraintSet;
using amrplus::ContextIndex;
using amrplus::NegConstraint;
using amrplus::PresupConstraint;
using amrplus::Role;
using amrplus::VarRef;
using Rng = amrplus::detail::SplitMix64;

struct DocGenOptions {
  int max_nodes = 6;
  int max_structure_ops = 2;  // negations / conditionals / presuppositions
  bool allow_constants = true;
  bool allow_reentrancy = true;
};

namespace docgen_detail {

struct Structure {
  std::map<ContextIndex, ContextIndex> neg_host;
  std::map<ContextIndex, std::pair<ContextIndex, ContextIndex>> cond;  // ante -> (host, cons)
  std::map<ContextIndex, ContextIndex> presup_anchor;
  std::vector<ContextIndex> contexts;  // creation order; contexts[0] = root
  std::set<ContextIndex> hosts;
  ContextIndex deepest = 1;
};

inline Structure random_structure(Rng& rng, int max_ops) {
  Structure st;
  st.contexts.push_back(1);
  ContextIndex next = 2;
  int ops = static_cast<int>(rng.below(static_cast<std::uint32_t>(max_ops + 1)));
  for (int i = 0; i < ops && st.contexts.size() < 5; ++i) {
    switch (rng.below(3)) {
      case 0: {  // negation extends the spine
        ContextIndex scope = next++;
        st.neg_host[scope] = st.deepest;
        st.contexts.push_back(scope);
        st.hosts.insert(st.deepest);
        st.deepest = scope;
        break;
      }
      case 1: {  // conditional extends the spine through its consequent
        ContextIndex ante = next++;
        ContextIndex cons = next++;
        st.cond[ante] = {st.deepest, cons};
        st.contexts.push_back(ante);
        st.contexts.push_back(cons);
        st.hosts.insert(st.deepest);
        st.deepest = cons;
        break;
      }
      default: {  // presupposition anchored somewhere on the spine
        ContextIndex anchor = st.contexts[rng.below(
            static_cast<std::uint32_t>(st.contexts.size()))];
        ContextIndex p = next++;
        st.presup_anchor[p] = anchor;
        st.contexts.push_back(p);
        break;
      }
    }
  }
  return st;
}

inline ConstraintSet to_constraints(const Structure& st) {
  ConstraintSet cs;
  for (const auto& [scope, host] : st.neg_host) {
    cs.insert(NegConstraint{host, scope});
  }
  for (const auto& [ante, hc] : st.cond) {
    cs.insert(CondConstraint{hc.first, ante, hc.second});
  }
  for (const auto& [p, anchor] : st.presup_anchor) {
    cs.insert(PresupConstraint{p, anchor});
  }
  return cs;
}

// Contexts whose referents are visible from inside `ctx` under global
// accommodation: the host chain upward, antecedents of consequents on it,
// and every presupposed context. A presupposed context itself is hoisted
// into the top box, so from there only other presuppositions and the root
// context are visible.
inline std::set<ContextIndex> accessible_from(const Structure& st,
                                              ContextIndex ctx) {
  std::set<ContextIndex> acc;
  for (const auto& [p, anchor] : st.presup_anchor) acc.insert(p);
  if (st.presup_anchor.count(ctx)) {
    acc.insert(ctx);
    acc.insert(st.contexts[0]);
    return acc;
  }
  ContextIndex cur = ctx;
  for (std::size_t guard = 0; guard <= st.contexts.size() + 1; ++guard) {
    acc.insert(cur);
    if (auto it = st.neg_host.find(cur); it != st.neg_host.end()) {
      cur = it->second;
      continue;
    }
    if (auto it = st.cond.find(cur); it != st.cond.end()) {
      cur = it->second.first;  // the antecedent hangs off the host
      continue;
    }
    bool is_cons = false;
    for (const auto& [ante, hc] : st.cond) {
      if (hc.second == cur) {
        acc.insert(ante);  // antecedent referents reach the consequent
        cur = hc.first;
        is_cons = true;
        break;
      }
    }
    if (is_cons) continue;
    if (auto it = st.presup_anchor.find(cur); it != st.presup_anchor.end()) {
      cur = it->second;
      continue;
    }
    break;  // root
  }
  return acc;
}

}  // namespace docgen_detail

inline AmrPlusDocument random_document(std::uint64_t seed,
                                       const DocGenOptions& opt = {}) {
  Rng rng(seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull);
  auto st = docgen_detail::random_structure(rng, opt.max_structure_ops);

  // Contexts the clause output names as content boxes need a node each.
  std::vector<ContextIndex> need_node;
  for (ContextIndex c : st.contexts) {
    if (!st.hosts.count(c) && c != st.deepest) need_node.push_back(c);
  }

  int n_nodes = std::max<int>(
      1 + static_cast<int>(need_node.size()),
      1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(opt.max_nodes))));
  n_nodes = std::min(n_nodes,
                     std::max(opt.max_nodes, 1 + static_cast<int>(need_node.size())));

  std::vector<ContextIndex> node_ctx(static_cast<std::size_t>(n_nodes));
  node_ctx[0] = st.deepest;  // syntactic root in the deepest context
  for (std::size_t i = 0; i < need_node.size(); ++i) {
    node_ctx[i + 1] = need_node[i];
  }
  for (std::size_t i = need_node.size() + 1; i < node_ctx.size(); ++i) {
    node_ctx[i] =
        st.contexts[rng.below(static_cast<std::uint32_t>(st.contexts.size()))];
  }

  // Visibility per context, reused for parent choice and re-entrancies.
  std::map<ContextIndex, std::set<ContextIndex>> visible;
  for (ContextIndex c : st.contexts) {
    visible[c] = docgen_detail::accessible_from(st, c);
  }

  // Node i attaches below a node whose box can see node i's referents.
  std::vector<int> parent(static_cast<std::size_t>(n_nodes), -1);
  for (int i = 1; i < n_nodes; ++i) {
    std::vector<int> candidates;
    for (int j = 0; j < i; ++j) {
      if (visible[node_ctx[j]].count(node_ctx[i])) candidates.push_back(j);
    }
    parent[i] =
        candidates.empty()
            ? 0
            : candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
  }

  static const char* kEventConcepts[] = {"think-01", "see-01", "chase-01",
                                         "give-01", "sleep-01"};
  static const char* kThingConcepts[] = {"dog", "cat", "woman", "man",
                                         "house", "person.n.01"};
  static const char* kRelations[] = {"ARG0", "ARG1", "ARG2", "mod", "time",
                                     "loc"};

  std::vector<AmrPlusNode> nodes(static_cast<std::size_t>(n_nodes));
  for (int i = 0; i < n_nodes; ++i) {
    nodes[i].variable = "v" + std::to_string(i);
    nodes[i].index = node_ctx[i];
    nodes[i].concept_name =
        i == 0 ? kEventConcepts[rng.below(5)] : kThingConcepts[rng.below(6)];
  }

  std::vector<Role> extra(static_cast<std::size_t>(n_nodes));
  if (opt.allow_constants && rng.below(3) == 0) {
    int host = static_cast<int>(rng.below(static_cast<std::uint32_t>(n_nodes)));
    Role r;
    r.relation = "Name";
    r.target = rng.below(2) ? Constant::string("Kim")
                            : Constant::number(std::to_string(rng.below(90)));
    extra[host] = r;
  }
  std::vector<Role> reent(static_cast<std::size_t>(n_nodes));
  if (opt.allow_reentrancy && n_nodes > 1 && rng.below(2) == 0) {
    int from =
        1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n_nodes - 1)));
    const auto& acc = visible[node_ctx[from]];
    std::vector<int> candidates;
    for (int j = 0; j < n_nodes; ++j) {
      if (j != from && acc.count(node_ctx[j])) candidates.push_back(j);
    }
    if (!candidates.empty()) {
      int to =
          candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
      Role r;
      r.relation = "poss";
      r.target = VarRef{nodes[to].variable};
      reent[from] = r;
    }
  }

  std::vector<std::vector<int>> children(static_cast<std::size_t>(n_nodes));
  for (int i = 1; i < n_nodes; ++i) children[parent[i]].push_back(i);
  auto build = [&](auto&& self, int i) -> AmrPlusNode {
    AmrPlusNode node = nodes[i];
    for (int c : children[i]) {
      Role r;
      r.relation = kRelations[rng.below(6)];
      r.target = amrplus::detail::box<AmrPlusNode>(self(self, c));
      node.roles.push_back(std::move(r));
    }
    if (!extra[i].relation.empty()) node.roles.push_back(extra[i]);
    if (!reent[i].relation.empty()) node.roles.push_back(reent[i]);
    return node;
  };

  AmrPlusDocument doc;
  doc.root = build(build, 0);
  doc.constraints = docgen_detail::to_constraints(st);
  return doc;
}

}  // namespace testsupport

#endif  // AMRPLUS_TESTS_DOCGEN_HPP

// Mechanical conversion of plain AMRs to indexed form: index insertion plus
// rewrites for :polarity - and universal :mod every. Scope corrections beyond
// these rewrites are a human job; the polarity rewrite flags its guesses.
#ifndef AMRPLUS_UPGRADE_HPP
#define AMRPLUS_UPGRADE_HPP

#include <set>
#include <string>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"

namespace amrplus {

struct ReviewNotice {
  std::string variable;
  std::string reason;
  bool operator==(const ReviewNotice&) const = default;
};

struct UpgradeResult {
  AmrPlusDocument document;
  std::vector<ReviewNotice> notices;
};

namespace detail {

inline void set_all_indices(AmrPlusNode& node, ContextIndex idx) {
  if (node.index) {
    throw AmrError(ErrorCode::AlreadyIndexed,
                   "node '" + node.variable + "' is already indexed");
  }
  node.index = idx;
  for (auto& role : node.roles) {
    if (is_node(role.target)) set_all_indices(target_node(role.target), idx);
  }
}

class FreshIndex {
 public:
  explicit FreshIndex(std::set<ContextIndex> used) : used_(std::move(used)) {}

  ContextIndex next() {
    ContextIndex i = 1;
    while (used_.count(i)) ++i;
    used_.insert(i);
    return i;
  }

 private:
  std::set<ContextIndex> used_;
};

inline void require_indexed(const AmrPlusNode& node) {
  if (!node.index) {
    throw AmrError(ErrorCode::MissingIndex,
                   "node '" + node.variable + "' carries no context index");
  }
  for (const auto& role : node.roles) {
    if (is_node(role.target)) require_indexed(target_node(role.target));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// auto_index

// Every slash gets index 1. The result has a single context and trivially
// validates; scope distinctions are added by later edits.
inline AmrPlusDocument auto_index(const AmrPlusDocument& doc) {
  AmrPlusDocument out = doc;
  detail::set_all_indices(out.root, 1);
  out.constraints = ConstraintSet{};
  return out;
}

// ---------------------------------------------------------------------------
// rewrite_polarity

namespace detail {

inline void rewrite_polarity_node(AmrPlusNode& node, FreshIndex& fresh,
                                  ConstraintSet& constraints,
                                  std::vector<ReviewNotice>& notices) {
  for (auto it = node.roles.begin(); it != node.roles.end();) {
    if (it->relation == "polarity") {
      if (!is_constant(it->target)) {
        throw AmrError(ErrorCode::BadInput,
                       "polarity on '" + node.variable +
                           "' must be the constant - or +");
      }
      const Constant& c = std::get<Constant>(it->target);
      if (c.kind == Constant::Kind::Minus) {
        constraints.insert(NegConstraint{fresh.next(), *node.index});
        notices.push_back(
            {node.variable,
             "negation takes widest scope by default; re-index arguments "
             "that should outscope it"});
        it = node.roles.erase(it);
        continue;
      }
      if (c.kind == Constant::Kind::Plus) {
        it = node.roles.erase(it);  // affirmation adds nothing
        continue;
      }
      throw AmrError(ErrorCode::BadInput,
                     "polarity on '" + node.variable +
                         "' must be the constant - or +");
    }
    ++it;
  }
  for (auto& role : node.roles) {
    if (is_node(role.target)) {
      rewrite_polarity_node(target_node(role.target), fresh, constraints,
                            notices);
    }
  }
}

}  // namespace detail

// Replaces each ":polarity -" by a negated context: the role is removed and a
// freshly indexed host receives the node's context as its negation.
inline UpgradeResult rewrite_polarity(const AmrPlusDocument& doc) {
  detail::require_indexed(doc.root);
  UpgradeResult out{doc, {}};
  detail::FreshIndex fresh(used_indices(doc));
  detail::rewrite_polarity_node(out.document.root, fresh,
                                out.document.constraints, out.notices);
  return out;
}

// ---------------------------------------------------------------------------
// rewrite_universal

namespace detail {

inline bool take_mod_every(AmrPlusNode& node) {
  for (auto it = node.roles.begin(); it != node.roles.end(); ++it) {
    if (it->relation == "mod" && is_node(it->target) &&
        target_node(it->target).concept_name == "every") {
      node.roles.erase(it);
      return true;
    }
  }
  return false;
}

struct UniversalChain {
  FreshIndex fresh;
  ConstraintSet* constraints;
  ContextIndex previous_host = 0;
  bool first = true;
};

inline void rewrite_universal_node(AmrPlusNode& node, UniversalChain& chain) {
  bool universal = take_mod_every(node);
  if (node.concept_name == "everyone") {
    node.concept_name = "person";
    universal = true;
  }
  if (universal) {
    ContextIndex previous_index = *node.index;
    ContextIndex ante = chain.fresh.next();
    ContextIndex host = chain.fresh.next();
    node.index = ante;
    // The first universal restricts the node's original context; later ones
    // wrap the previous conditional, giving the source-last universal the
    // widest scope.
    ContextIndex cons = chain.first ? previous_index : chain.previous_host;
    chain.constraints->insert(CondConstraint{host, ante, cons});
    chain.previous_host = host;
    chain.first = false;
  }
  for (auto& role : node.roles) {
    if (is_node(role.target)) {
      rewrite_universal_node(target_node(role.target), chain);
    }
  }
}

}  // namespace detail

// Rewrites ":mod (… / every)" (and the concept "everyone") as a conditional
// context: the quantified node moves to a fresh antecedent context and a
// fresh host receives the conditional. Multiple universals chain.
inline AmrPlusDocument rewrite_universal(const AmrPlusDocument& doc) {
  detail::require_indexed(doc.root);
  AmrPlusDocument out = doc;
  detail::UniversalChain chain{detail::FreshIndex(used_indices(doc)),
                               &out.constraints};
  detail::rewrite_universal_node(out.root, chain);
  return out;
}

// ---------------------------------------------------------------------------
// Full mechanical pipeline

// auto_index (when the document is plain) followed by both rewrites.
inline UpgradeResult upgrade(const AmrPlusDocument& doc) {
  AmrPlusDocument indexed =
      detail::any_indexed(doc.root) ? doc : auto_index(doc);
  UpgradeResult afterPolarity = rewrite_polarity(indexed);
  UpgradeResult out{rewrite_universal(afterPolarity.document),
                    std::move(afterPolarity.notices)};
  return out;
}

}  // namespace amrplus

#endif  // AMRPLUS_UPGRADE_HPP

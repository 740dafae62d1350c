// Concept and role mapping used when translating to DRS conditions:
// PropBank-style predicates become synset-style names, frame relations
// become role names.
//
// File format, one rule per line, first match wins:
//   concept <amr-concept> <target>
//   role <amr-concept> <amr-relation> <target>    ('*' matches any concept)
//   # comment
#ifndef AMRPLUS_LEXMAP_HPP
#define AMRPLUS_LEXMAP_HPP

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "amrplus/ast.hpp"

namespace amrplus {

struct RoleRule {
  std::string concept_pattern;  // exact concept or "*"
  std::string relation;
  std::string target;
  bool operator==(const RoleRule&) const = default;
};

class LexMap {
 public:
  // When no concept rule matches and the default rewrite is on:
  //   w-NN       -> w.v.NN      (PropBank frame to verb synset)
  //   w.p.NN     -> unchanged   (already synset-shaped)
  //   w          -> w.n.01      (bare noun)
  // Unmatched relations pass through unchanged.
  bool default_concept_rewrite = true;

  void add_concept(std::string pattern, std::string target) {
    concept_rules_.emplace_back(std::move(pattern), std::move(target));
  }
  void add_role(std::string concept_pattern, std::string relation,
                std::string target) {
    role_rules_.push_back(
        {std::move(concept_pattern), std::move(relation), std::move(target)});
  }

  std::string map_concept(const std::string& concept_name) const {
    for (const auto& [pattern, target] : concept_rules_) {
      if (pattern == concept_name) return target;
    }
    if (!default_concept_rewrite) return concept_name;
    return default_rewrite(concept_name);
  }

  std::string map_role(const std::string& concept_name,
                       const std::string& relation) const {
    for (const auto& rule : role_rules_) {
      if (rule.relation == relation &&
          (rule.concept_pattern == "*" ||
           rule.concept_pattern == concept_name)) {
        return rule.target;
      }
    }
    return relation;
  }

  // Covers the stock verbs and their role frames; mirrors
  // data/lexmap/default.lex.
  static LexMap builtin() {
    LexMap m;
    m.add_role("scare-01", "ARG0", "Stimulus");
    m.add_role("scare-01", "ARG1", "Experiencer");
    m.add_role("smile-01", "ARG0", "Agent");
    m.add_role("growl-01", "ARG0", "Agent");
    m.add_role("bark-01", "ARG0", "Agent");
    m.add_role("revise-01", "ARG0", "Agent");
    m.add_role("revise-01", "ARG1", "Theme");
    m.add_role("bite-01", "ARG0", "Agent");
    m.add_role("bite-01", "ARG1", "Patient");
    m.add_role("leave-01", "ARG0", "Agent");
    m.add_role("*", "Name", "Name");
    m.add_role("*", "poss", "poss");
    return m;
  }

  static LexMap load(std::istream& in) {
    LexMap m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string kind;
      if (!(fields >> kind)) continue;
      if (kind == "concept") {
        std::string pattern, target;
        if (!(fields >> pattern >> target)) {
          throw AmrError(ErrorCode::BadInput,
                         "expected 'concept <pattern> <target>'", lineno, 1);
        }
        m.add_concept(pattern, target);
      } else if (kind == "role") {
        std::string pattern, relation, target;
        if (!(fields >> pattern >> relation >> target)) {
          throw AmrError(ErrorCode::BadInput,
                         "expected 'role <concept> <relation> <target>'",
                         lineno, 1);
        }
        m.add_role(pattern, relation, target);
      } else {
        throw AmrError(ErrorCode::BadInput,
                       "unknown lexmap rule kind '" + kind + "'", lineno, 1);
      }
    }
    return m;
  }

  const std::vector<std::pair<std::string, std::string>>& concept_rules()
      const {
    return concept_rules_;
  }
  const std::vector<RoleRule>& role_rules() const { return role_rules_; }

 private:
  static std::string default_rewrite(const std::string& concept_name) {
    if (concept_name.find('.') != std::string::npos) return concept_name;
    auto dash = concept_name.rfind('-');
    if (dash != std::string::npos && dash > 0 &&
        dash + 1 < concept_name.size()) {
      bool digits = true;
      for (std::size_t i = dash + 1; i < concept_name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(concept_name[i]))) {
          digits = false;
          break;
        }
      }
      if (digits) {
        return concept_name.substr(0, dash) + ".v." +
               concept_name.substr(dash + 1);
      }
    }
    return concept_name + ".n.01";
  }

  std::vector<std::pair<std::string, std::string>> concept_rules_;
  std::vector<RoleRule> role_rules_;
};

}  // namespace amrplus

#endif  // AMRPLUS_LEXMAP_HPP

// JSON views of the domain types, one field per field. The schema is
// documented in docs/json.md.
#ifndef AMRPLUS_JSON_IO_HPP
#define AMRPLUS_JSON_IO_HPP

#include <json.hpp>

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"
#include "amrplus/drs.hpp"
#include "amrplus/logic.hpp"
#include "amrplus/triples.hpp"

namespace amrplus {

using Json = nlohmann::ordered_json;

inline Json to_json(const Constant& c) {
  const char* type = "string";
  switch (c.kind) {
    case Constant::Kind::String: type = "string"; break;
    case Constant::Kind::Number: type = "number"; break;
    case Constant::Kind::Minus: type = "minus"; break;
    case Constant::Kind::Plus: type = "plus"; break;
  }
  return Json{{"type", type}, {"value", c.text}};
}

inline Json to_json(const AmrPlusNode& node);

inline Json to_json(const RoleTarget& target) {
  if (is_node(target)) {
    Json j = to_json(target_node(target));
    j["kind"] = "node";
    return j;
  }
  if (is_var_ref(target)) {
    return Json{{"kind", "ref"}, {"variable", std::get<VarRef>(target).name}};
  }
  Json j = to_json(std::get<Constant>(target));
  j["kind"] = "constant";
  return j;
}

inline Json to_json(const AmrPlusNode& node) {
  Json roles = Json::array();
  for (const auto& role : node.roles) {
    roles.push_back(
        Json{{"relation", role.relation}, {"target", to_json(role.target)}});
  }
  Json j;
  j["variable"] = node.variable;
  j["index"] = node.index ? Json(*node.index) : Json(nullptr);
  j["concept"] = node.concept_name;
  j["roles"] = roles;
  return j;
}

inline Json to_json(const Constraint& c) {
  if (const auto* eq = std::get_if<EqConstraint>(&c)) {
    return Json{{"kind", "eq"}, {"a", eq->a}, {"b", eq->b}};
  }
  if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
    return Json{{"kind", "presup"},
                {"presupposed", pr->presupposed},
                {"anchor", pr->anchor}};
  }
  if (const auto* ng = std::get_if<NegConstraint>(&c)) {
    return Json{{"kind", "neg"}, {"host", ng->host}, {"scope", ng->scope}};
  }
  if (const auto* cd = std::get_if<CondConstraint>(&c)) {
    return Json{{"kind", "cond"},
                {"host", cd->host},
                {"ante", cd->ante},
                {"cons", cd->cons}};
  }
  if (const auto* sn = std::get_if<ShorthandNeg>(&c)) {
    return Json{{"kind", "shorthand_neg"}, {"scope", sn->scope}};
  }
  const auto& sc = std::get<ShorthandCond>(c);
  return Json{{"kind", "shorthand_cond"}, {"ante", sc.ante}, {"cons", sc.cons}};
}

inline Json to_json(const AmrPlusDocument& doc) {
  Json constraints = Json::array();
  for (const auto& c : doc.constraints) constraints.push_back(to_json(c));
  return Json{{"root", to_json(doc.root)}, {"constraints", constraints}};
}

inline Json to_json(const Placement& p) {
  if (std::holds_alternative<RootPlacement>(p)) {
    return Json{{"kind", "root"}};
  }
  if (const auto* n = std::get_if<NegIn>(&p)) {
    return Json{{"kind", "neg_in"}, {"host", n->host}};
  }
  if (const auto* a = std::get_if<AnteOf>(&p)) {
    return Json{{"kind", "ante_of"}, {"host", a->host}, {"cons", a->cons}};
  }
  if (const auto* c = std::get_if<ConsOf>(&p)) {
    return Json{{"kind", "cons_of"}, {"host", c->host}, {"ante", c->ante}};
  }
  const auto& s = std::get<PresupOf>(p);
  return Json{{"kind", "presup_of"}, {"anchor", s.anchor}};
}

inline Json to_json(const ContextStructure& st) {
  Json placement = Json::object();
  for (const auto& [idx, p] : st.placement) {
    placement[std::to_string(idx)] = to_json(p);
  }
  Json merged = Json::object();
  for (const auto& [from, to] : st.merged) {
    merged[std::to_string(from)] = to;
  }
  Json discharged = Json::array();
  for (const auto& pr : st.discharged) {
    discharged.push_back(
        Json{{"presupposed", pr.presupposed}, {"anchor", pr.anchor}});
  }
  Json constraints = Json::array();
  for (const auto& c : st.constraints) constraints.push_back(to_json(c));
  return Json{{"root", st.root},
              {"placement", placement},
              {"merged", merged},
              {"constraints", constraints},
              {"discharged", discharged}};
}

inline Json to_json(const DrsArg& a) {
  if (is_referent(a)) {
    return Json{{"kind", "ref"}, {"name", referent(a)}};
  }
  Json j = to_json(std::get<Constant>(a));
  j["kind"] = "constant";
  return j;
}

inline Json to_json(const Drs& d);

inline Json to_json(const Condition& c) {
  if (const auto* p = std::get_if<PredCondition>(&c)) {
    return Json{{"kind", "pred"}, {"name", p->name}, {"arg", to_json(p->arg)}};
  }
  if (const auto* r = std::get_if<RelCondition>(&c)) {
    return Json{{"kind", "rel"},
                {"name", r->name},
                {"args", Json::array({to_json(r->first), to_json(r->second)})}};
  }
  if (const auto* n = std::get_if<NotCondition>(&c)) {
    return Json{{"kind", "not"}, {"body", to_json(*n->body)}};
  }
  const auto& imp = std::get<ImpCondition>(c);
  return Json{{"kind", "imp"},
              {"ante", to_json(*imp.ante)},
              {"cons", to_json(*imp.cons)}};
}

inline Json to_json(const Drs& d) {
  Json conditions = Json::array();
  for (const auto& c : d.conditions) conditions.push_back(to_json(c));
  return Json{{"referents", d.referents}, {"conditions", conditions}};
}

inline Json to_json(const DrsOutput& out) {
  Json presups = Json::array();
  for (const auto& p : out.presuppositions) presups.push_back(to_json(p));
  return Json{{"presuppositions", presups}, {"main", to_json(out.main)}};
}

inline Json to_json(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return Json{{"kind", "var"}, {"name", t.text}};
    case Term::Kind::Ctx: return Json{{"kind", "ctx"}, {"index", t.ctx}};
    case Term::Kind::Sym: return Json{{"kind", "sym"}, {"name", t.text}};
    case Term::Kind::Const: {
      Constant c;
      c.kind = t.const_kind;
      c.text = t.text;
      Json j = to_json(c);
      j["kind"] = "constant";
      return j;
    }
  }
  return Json();
}

inline Json to_json(const Triple& t) {
  return Json{{"source", to_json(t.source)},
              {"edge", t.edge},
              {"target", to_json(t.target)}};
}

inline Json to_json(const std::vector<Triple>& ts) {
  Json j = Json::array();
  for (const auto& t : ts) j.push_back(to_json(t));
  return j;
}

inline Json to_json(const MatchResult& r) {
  Json vars = Json::object();
  for (const auto& [a, b] : r.mapping.variables) vars[a] = b;
  Json ctxs = Json::object();
  for (const auto& [a, b] : r.mapping.contexts) ctxs[std::to_string(a)] = b;
  return Json{{"matched", r.matched},
              {"total_a", r.total_a},
              {"total_b", r.total_b},
              {"precision", r.precision},
              {"recall", r.recall},
              {"f1", r.f1},
              {"mapping", Json{{"variables", vars}, {"contexts", ctxs}}}};
}

inline Json to_json(const Model& m) {
  Json unary = Json::object();
  for (const auto& [pred, ext] : m.unary) {
    unary[pred] = std::vector<std::string>(ext.begin(), ext.end());
  }
  Json binary = Json::object();
  for (const auto& [rel, ext] : m.binary) {
    Json pairs = Json::array();
    for (const auto& [a, b] : ext) pairs.push_back(Json::array({a, b}));
    binary[rel] = pairs;
  }
  Json constants = Json::object();
  for (const auto& [c, d] : m.constants) constants[c] = d;
  return Json{{"domain", m.domain},
              {"unary", unary},
              {"binary", binary},
              {"constants", constants}};
}

inline Json to_json(const EntailmentVerdict& v) {
  if (const auto* r = std::get_if<Refuted>(&v)) {
    return Json{{"refuted", true}, {"countermodel", to_json(r->countermodel)}};
  }
  return Json{{"refuted", false},
              {"no_countermodel_up_to", std::get<NoCountermodelUpTo>(v).size}};
}

}  // namespace amrplus

#endif  // AMRPLUS_JSON_IO_HPP

// Triple export for evaluation and a Smatch-style scorer: hill-climbing over
// variable/index mappings plus an exhaustive oracle for small inputs.
#ifndef AMRPLUS_TRIPLES_HPP
#define AMRPLUS_TRIPLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"
#include "amrplus/penman.hpp"

namespace amrplus {

struct Triple {
  Term source;
  std::string edge;
  Term target;
  bool operator==(const Triple&) const = default;
};

// ---------------------------------------------------------------------------
// Export

// Per node: an instance triple, one triple per role, and a membership (IN)
// triple tying the node's variable to its context. Two-index constraints
// yield one structural triple, three-index constraints two.
inline std::vector<Triple> export_triples(const AmrPlusDocument& doc,
                                          const ContextStructure& structure) {
  std::vector<Triple> out;
  auto push = [&out](Triple t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(std::move(t));
    }
  };

  auto nodes = subamrs(doc);
  for (const auto& [idx, node] : nodes) {
    push({Term::var(node->variable), "instance",
          Term::symbol(node->concept_name)});
    for (const auto& role : node->roles) {
      push({Term::var(node->variable), role.relation,
            main_variable(role.target)});
    }
  }
  for (const auto& [idx, node] : nodes) {
    push({Term::var(node->variable), "IN",
          Term::context(structure.representative(idx))});
  }
  for (const auto& c : structure.constraints) {
    if (const auto* ng = std::get_if<NegConstraint>(&c)) {
      push({Term::context(ng->host), "NOT", Term::context(ng->scope)});
    } else if (const auto* cd = std::get_if<CondConstraint>(&c)) {
      push({Term::context(cd->host), "IF", Term::context(cd->ante)});
      push({Term::context(cd->ante), "THEN", Term::context(cd->cons)});
    } else if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
      push({Term::context(pr->presupposed), "PRESUP",
            Term::context(pr->anchor)});
    } else if (std::holds_alternative<EqConstraint>(c)) {
      throw AmrError(ErrorCode::ResidualEquality,
                     "equality constraint present at triple export");
    } else {
      throw AmrError(ErrorCode::BadInput,
                     "shorthand constraint present at triple export");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form
//
// `<source> <edge> <target>` per line; constants quoted; context indices
// written c1, c2, ... to keep them apart from variables. Variable names of
// the shape c<digits> are therefore reserved.

inline std::string term_to_text(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return t.text;
    case Term::Kind::Ctx: return "c" + std::to_string(t.ctx);
    case Term::Kind::Sym: return t.text;
    case Term::Kind::Const: return "\"" + t.text + "\"";
  }
  return t.text;
}

inline std::string write_triples(const std::vector<Triple>& triples) {
  std::ostringstream out;
  for (const auto& t : triples) {
    out << term_to_text(t.source) << ' ' << t.edge << ' '
        << term_to_text(t.target) << '\n';
  }
  return out.str();
}

namespace detail {

inline Term term_from_text(const std::string& text, bool was_quoted,
                           bool instance_target) {
  if (was_quoted) {
    Constant c = number_text(text) ? Constant::number(text)
                                   : Constant::string(text);
    if (text == "-") c = Constant::minus();
    if (text == "+") c = Constant::plus();
    return Term::constant(c);
  }
  if (text.size() > 1 && text[0] == 'c' && all_digits(text.substr(1))) {
    return Term::context(std::stoi(text.substr(1)));
  }
  if (instance_target) return Term::symbol(text);
  if (number_text(text)) return Term::constant(Constant::number(text));
  return Term::var(text);
}

}  // namespace detail

inline std::vector<Triple> read_triples(const std::string& text) {
  std::vector<Triple> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<bool> quoted;
    auto fields = detail::split_fields(line, lineno, &quoted);
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      throw AmrError(ErrorCode::BadInput,
                     "expected '<source> <edge> <target>'", lineno, 1);
    }
    if (quoted[1]) {
      throw AmrError(ErrorCode::BadInput, "edge must not be quoted", lineno,
                     1);
    }
    Triple t;
    t.source = detail::term_from_text(fields[0], quoted[0], false);
    t.edge = fields[1];
    t.target =
        detail::term_from_text(fields[2], quoted[2], t.edge == "instance");
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching

struct SymbolMapping {
  std::map<std::string, std::string> variables;
  std::map<ContextIndex, ContextIndex> contexts;
};

struct MatchResult {
  SymbolMapping mapping;
  int matched = 0;
  int total_a = 0;
  int total_b = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

namespace detail {

// Variables map only to variables, context indices only to indices; edges,
// concepts, and constants match literally. Everything is interned so a
// candidate mapping scores with integer operations.
struct MatchProblem {
  std::vector<std::string> a_vars, b_vars;
  std::vector<ContextIndex> a_ctxs, b_ctxs;

  // a-side triples with symbol slots: kind 0 = mapped var, 1 = mapped ctx,
  // 2 = literal id.
  struct Side {
    int kind;
    int id;
  };
  struct ATriple {
    int edge;
    Side src, tgt;
  };
  std::vector<ATriple> a_triples;
  std::vector<std::uint64_t> b_codes;  // sorted

  int n_a = 0, n_b = 0;

  static std::uint64_t pack(int edge, int src_kind, int src_id, int tgt_kind,
                            int tgt_id) {
    auto side = [](int kind, int id) {
      return (static_cast<std::uint64_t>(kind) << 18) |
             static_cast<std::uint64_t>(id);
    };
    return (static_cast<std::uint64_t>(edge) << 40) |
           (side(src_kind, src_id) << 20) | side(tgt_kind, tgt_id);
  }

  bool has_b_code(std::uint64_t code) const {
    return std::binary_search(b_codes.begin(), b_codes.end(), code);
  }

  // Composes an a-triple under the current assignment; returns false when a
  // needed symbol is unmapped.
  bool compose(const ATriple& t, const std::vector<int>& var_map,
               const std::vector<int>& ctx_map, std::uint64_t& code) const {
    auto side = [&](const Side& s, int& kind, int& id) {
      if (s.kind == 0) {
        int m = var_map[s.id];
        if (m < 0) return false;
        kind = 0;
        id = m;
      } else if (s.kind == 1) {
        int m = ctx_map[s.id];
        if (m < 0) return false;
        kind = 1;
        id = m;
      } else {
        kind = 2;
        id = s.id;
      }
      return true;
    };
    int sk, si, tk, ti;
    if (!side(t.src, sk, si) || !side(t.tgt, tk, ti)) return false;
    code = pack(t.edge, sk, si, tk, ti);
    return true;
  }

  int count(const std::vector<int>& var_map,
            const std::vector<int>& ctx_map) const {
    int matched = 0;
    for (const auto& t : a_triples) {
      std::uint64_t code;
      if (compose(t, var_map, ctx_map, code) && has_b_code(code)) ++matched;
    }
    return matched;
  }
};

inline MatchProblem build_match_problem(const std::vector<Triple>& a,
                                        const std::vector<Triple>& b) {
  MatchProblem p;
  auto dedupe = [](const std::vector<Triple>& in) {
    std::vector<Triple> out;
    for (const auto& t : in) {
      if (std::find(out.begin(), out.end(), t) == out.end())
        out.push_back(t);
    }
    return out;
  };
  std::vector<Triple> da = dedupe(a), db = dedupe(b);
  p.n_a = static_cast<int>(da.size());
  p.n_b = static_cast<int>(db.size());

  std::set<std::string> av, bv;
  std::set<ContextIndex> ac, bc;
  auto collect = [](const std::vector<Triple>& ts, std::set<std::string>& vs,
                    std::set<ContextIndex>& cs) {
    for (const auto& t : ts) {
      for (const Term* term : {&t.source, &t.target}) {
        if (term->kind == Term::Kind::Var) vs.insert(term->text);
        if (term->kind == Term::Kind::Ctx) cs.insert(term->ctx);
      }
    }
  };
  collect(da, av, ac);
  collect(db, bv, bc);
  p.a_vars.assign(av.begin(), av.end());
  p.b_vars.assign(bv.begin(), bv.end());
  p.a_ctxs.assign(ac.begin(), ac.end());
  p.b_ctxs.assign(bc.begin(), bc.end());

  std::map<std::string, int> edges;
  std::map<std::pair<int, std::string>, int> literals;  // (class, text)
  auto edge_id = [&edges](const std::string& e) {
    auto [it, fresh] = edges.emplace(e, static_cast<int>(edges.size()));
    return it->second;
  };
  auto literal_id = [&literals](const Term& t) {
    int cls = t.kind == Term::Kind::Sym ? 0 : 1;
    auto [it, fresh] = literals.emplace(
        std::make_pair(cls, t.text), static_cast<int>(literals.size()));
    return it->second;
  };
  auto index_of = [](const auto& vec, const auto& value) {
    return static_cast<int>(
        std::lower_bound(vec.begin(), vec.end(), value) - vec.begin());
  };

  for (const auto& t : da) {
    MatchProblem::ATriple at;
    at.edge = edge_id(t.edge);
    auto fill = [&](const Term& term, MatchProblem::Side& s) {
      if (term.kind == Term::Kind::Var) {
        s = {0, index_of(p.a_vars, term.text)};
      } else if (term.kind == Term::Kind::Ctx) {
        s = {1, index_of(p.a_ctxs, term.ctx)};
      } else {
        s = {2, literal_id(term)};
      }
    };
    fill(t.source, at.src);
    fill(t.target, at.tgt);
    p.a_triples.push_back(at);
  }
  for (const auto& t : db) {
    auto side_code = [&](const Term& term, int& kind, int& id) {
      if (term.kind == Term::Kind::Var) {
        kind = 0;
        id = index_of(p.b_vars, term.text);
      } else if (term.kind == Term::Kind::Ctx) {
        kind = 1;
        id = index_of(p.b_ctxs, term.ctx);
      } else {
        kind = 2;
        id = literal_id(term);
      }
    };
    int sk, si, tk, ti;
    side_code(t.source, sk, si);
    side_code(t.target, tk, ti);
    p.b_codes.push_back(MatchProblem::pack(edge_id(t.edge), sk, si, tk, ti));
  }
  std::sort(p.b_codes.begin(), p.b_codes.end());
  return p;
}

inline MatchResult finish_match(const MatchProblem& p,
                                const std::vector<int>& var_map,
                                const std::vector<int>& ctx_map,
                                int matched) {
  MatchResult r;
  r.matched = matched;
  r.total_a = p.n_a;
  r.total_b = p.n_b;
  for (std::size_t i = 0; i < var_map.size(); ++i) {
    if (var_map[i] >= 0) {
      r.mapping.variables[p.a_vars[i]] = p.b_vars[var_map[i]];
    }
  }
  for (std::size_t i = 0; i < ctx_map.size(); ++i) {
    if (ctx_map[i] >= 0) r.mapping.contexts[p.a_ctxs[i]] = p.b_ctxs[ctx_map[i]];
  }
  r.precision = p.n_a ? static_cast<double>(matched) / p.n_a
                      : (p.n_b == 0 ? 1.0 : 0.0);
  r.recall = p.n_b ? static_cast<double>(matched) / p.n_b
                   : (p.n_a == 0 ? 1.0 : 0.0);
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

// Deterministic generator; identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound must be positive.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

 private:
  std::uint64_t state_;
};

}  // namespace detail

// Exhaustive search over injective mappings; optimal, guarded by size.
inline MatchResult smatch_exact(const std::vector<Triple>& a,
                                const std::vector<Triple>& b) {
  detail::MatchProblem p = detail::build_match_problem(a, b);
  const int nv = static_cast<int>(p.a_vars.size());
  const int nc = static_cast<int>(p.a_ctxs.size());
  const int bv = static_cast<int>(p.b_vars.size());
  const int bc = static_cast<int>(p.b_ctxs.size());
  if (nv + nc > 12 || bv + bc > 12) {
    throw AmrError(ErrorCode::SizeGuard,
                   "too many mappable symbols for exhaustive matching");
  }

  // Triples become countable at the last of their mapped symbols; positions
  // 0..nv-1 are variables, nv..nv+nc-1 contexts.
  const int total = nv + nc;
  std::vector<std::vector<int>> bucket(total + 1);
  std::vector<int> base_triples;
  for (std::size_t ti = 0; ti < p.a_triples.size(); ++ti) {
    const auto& t = p.a_triples[ti];
    int last = -1;
    for (const auto& s : {t.src, t.tgt}) {
      if (s.kind == 0) last = std::max(last, s.id);
      if (s.kind == 1) last = std::max(last, nv + s.id);
    }
    if (last < 0) {
      base_triples.push_back(static_cast<int>(ti));
    } else {
      bucket[last].push_back(static_cast<int>(ti));
    }
  }
  std::vector<int> suffix(total + 1, 0);
  for (int pos = total - 1; pos >= 0; --pos) {
    suffix[pos] = suffix[pos + 1] + static_cast<int>(bucket[pos].size());
  }

  std::vector<int> var_map(nv, -1), ctx_map(nc, -1);
  std::vector<bool> used_bv(bv, false), used_bc(bc, false);
  int base = 0;
  for (int ti : base_triples) {
    std::uint64_t code;
    if (p.compose(p.a_triples[ti], var_map, ctx_map, code) &&
        p.has_b_code(code)) {
      ++base;
    }
  }

  int best = -1;
  std::vector<int> best_var, best_ctx;

  auto bucket_gain = [&](int pos) {
    int gain = 0;
    for (int ti : bucket[pos]) {
      std::uint64_t code;
      if (p.compose(p.a_triples[ti], var_map, ctx_map, code) &&
          p.has_b_code(code)) {
        ++gain;
      }
    }
    return gain;
  };

  auto rec = [&](auto&& self, int pos, int current) -> void {
    if (current + suffix[pos] <= best) return;  // cannot beat best
    if (pos == total) {
      if (current > best) {
        best = current;
        best_var = var_map;
        best_ctx = ctx_map;
      }
      return;
    }
    bool is_var = pos < nv;
    int idx = is_var ? pos : pos - nv;
    auto& used = is_var ? used_bv : used_bc;
    auto& map = is_var ? var_map : ctx_map;
    const int nimages = is_var ? bv : bc;
    const int n_this_side = is_var ? nv : nc;
    for (int img = 0; img < nimages; ++img) {
      if (used[img]) continue;
      used[img] = true;
      map[idx] = img;
      self(self, pos + 1, current + bucket_gain(pos));
      map[idx] = -1;
      used[img] = false;
    }
    // Leaving a symbol unmapped is only ever needed when this side has more
    // symbols than the other.
    if (n_this_side > nimages) {
      self(self, pos + 1, current + bucket_gain(pos));
    }
  };
  rec(rec, 0, base);

  return detail::finish_match(p, best_var, best_ctx, best);
}

// Hill-climbing with deterministic seeded restarts; never beats the exact
// optimum, usually reaches it on small inputs.
inline MatchResult smatch_score(const std::vector<Triple>& a,
                                const std::vector<Triple>& b, int restarts,
                                std::uint64_t seed = 0) {
  if (restarts < 1) {
    throw AmrError(ErrorCode::BadInput, "restarts must be >= 1");
  }
  detail::MatchProblem p = detail::build_match_problem(a, b);
  const int nv = static_cast<int>(p.a_vars.size());
  const int nc = static_cast<int>(p.a_ctxs.size());
  const int bv = static_cast<int>(p.b_vars.size());
  const int bc = static_cast<int>(p.b_ctxs.size());

  int best = -1;
  std::vector<int> best_var, best_ctx;

  for (int r = 0; r < restarts; ++r) {
    detail::SplitMix64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull * r + 1);
    auto random_injection = [&rng](int from, int to) {
      std::vector<int> images(to);
      for (int i = 0; i < to; ++i) images[i] = i;
      for (int i = to - 1; i > 0; --i) {
        std::swap(images[i], images[rng.below(static_cast<std::uint32_t>(i + 1))]);
      }
      std::vector<int> map(from, -1);
      for (int i = 0; i < from && i < to; ++i) map[i] = images[i];
      return map;
    };
    std::vector<int> var_map(nv, -1), ctx_map(nc, -1);
    if (r == 0) {
      // Deterministic first start: assign symbols one by one to the image
      // that matches the most triples so far (ties to the smallest index).
      auto greedy_fill = [&p, &var_map, &ctx_map](std::vector<int>& map,
                                                  int n, int nb) {
        std::vector<bool> used(nb, false);
        for (int i = 0; i < n; ++i) {
          int best_img = -1, best_gain = -1;
          for (int img = 0; img < nb; ++img) {
            if (used[img]) continue;
            map[i] = img;
            int gain = p.count(var_map, ctx_map);
            map[i] = -1;
            if (gain > best_gain) {
              best_gain = gain;
              best_img = img;
            }
          }
          if (best_img >= 0) {
            map[i] = best_img;
            used[best_img] = true;
          }
        }
      };
      greedy_fill(var_map, nv, bv);
      greedy_fill(ctx_map, nc, bc);
    } else {
      var_map = random_injection(nv, bv);
      ctx_map = random_injection(nc, bc);
    }
    int current = p.count(var_map, ctx_map);

    for (;;) {
      int gain = 0;
      int move_sort = -1, move_idx = -1, move_img = -2, move_swap = -1;
      auto consider = [&](int sort, int idx, int img, int swap_with,
                          int score) {
        if (score - current > gain) {
          gain = score - current;
          move_sort = sort;
          move_idx = idx;
          move_img = img;
          move_swap = swap_with;
        }
      };
      for (int sort = 0; sort < 2; ++sort) {
        auto& map = sort == 0 ? var_map : ctx_map;
        const int n = sort == 0 ? nv : nc;
        const int nb = sort == 0 ? bv : bc;
        std::vector<bool> used(nb, false);
        for (int i = 0; i < n; ++i) {
          if (map[i] >= 0) used[map[i]] = true;
        }
        for (int i = 0; i < n; ++i) {
          int old = map[i];
          for (int img = -1; img < nb; ++img) {
            if (img == old) continue;
            if (img >= 0 && used[img]) continue;
            map[i] = img;
            consider(sort, i, img, -1, p.count(var_map, ctx_map));
          }
          map[i] = old;
          for (int j = i + 1; j < n; ++j) {
            std::swap(map[i], map[j]);
            consider(sort, i, -2, j, p.count(var_map, ctx_map));
            std::swap(map[i], map[j]);
          }
        }
      }
      if (gain <= 0) break;
      auto& map = move_sort == 0 ? var_map : ctx_map;
      if (move_swap >= 0) {
        std::swap(map[move_idx], map[move_swap]);
      } else {
        map[move_idx] = move_img;
      }
      current += gain;
    }

    if (current > best) {
      best = current;
      best_var = var_map;
      best_ctx = ctx_map;
    }
  }
  return detail::finish_match(p, best_var, best_ctx, best);
}

}  // namespace amrplus

#endif  // AMRPLUS_TRIPLES_HPP

// Lexing, parsing, and canonical printing of plain-AMR and indexed-AMR
// textual notation.
//
// Grammar:
//   document   := amr [ '{' [constraint (',' constraint)*] '}' ]
//   amr        := '(' VAR slashes CONCEPT role* ')'
//   slashes    := '/' | '/' INT '/'
//   role       := ':' RELNAME (amr | VAR | constant)
//   constant   := STRING | NUMBER | '-' | '+'
//   constraint := INT '=' INT | INT '<' INT | INT ':' '~' INT
//              | INT ':' INT '=>' INT | '~' INT | INT '=>' INT
//
// '#' starts a comment running to end of line. A file may hold several
// documents; each starts at the next '('.
#ifndef AMRPLUS_PENMAN_HPP
#define AMRPLUS_PENMAN_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "amrplus/ast.hpp"

namespace amrplus {

namespace detail {

enum class TokKind {
  LParen, RParen, LBrace, RBrace, Slash, Colon, Comma,
  Eq, Lt, Tilde, Arrow, Minus, Plus,
  Integer, Number, Symbol, String,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

inline bool is_symbol_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '.' || c == '-' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) break;
      out.push_back(next_token());
    }
    out.push_back({TokKind::End, "", line_, col_});
    return out;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw AmrError(ErrorCode::LexError, msg, line_, col_);
  }

  Token make(TokKind k, std::string text, int line, int col) {
    return {k, std::move(text), line, col};
  }

  Token next_token() {
    int line = line_, col = col_;
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); return make(TokKind::LParen, "(", line, col);
      case ')': advance(); return make(TokKind::RParen, ")", line, col);
      case '{': advance(); return make(TokKind::LBrace, "{", line, col);
      case '}': advance(); return make(TokKind::RBrace, "}", line, col);
      case '/': advance(); return make(TokKind::Slash, "/", line, col);
      case ':': advance(); return make(TokKind::Colon, ":", line, col);
      case ',': advance(); return make(TokKind::Comma, ",", line, col);
      case '<': advance(); return make(TokKind::Lt, "<", line, col);
      case '~': advance(); return make(TokKind::Tilde, "~", line, col);
      case '+': advance(); return make(TokKind::Plus, "+", line, col);
      case '=':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          return make(TokKind::Arrow, "=>", line, col);
        }
        return make(TokKind::Eq, "=", line, col);
      case '-':
        // A dash immediately followed by a digit is a signed number; a lone
        // dash is the polarity constant.
        if (pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          return lex_number(line, col);
        }
        advance();
        return make(TokKind::Minus, "-", line, col);
      case '"':
        return lex_string(line, col);
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          return lex_number(line, col);
        }
        if (is_symbol_start(c)) {
          std::string s;
          while (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
            s += text_[pos_];
            advance();
          }
          return make(TokKind::Symbol, std::move(s), line, col);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  Token lex_number(int line, int col) {
    std::string s;
    if (text_[pos_] == '-') {
      s += '-';
      advance();
    }
    bool fractional = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        s += c;
        advance();
      } else if (c == '.' && !fractional && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        fractional = true;
        s += c;
        advance();
      } else {
        break;
      }
    }
    bool plain_int = !fractional && s[0] != '-';
    return make(plain_int ? TokKind::Integer : TokKind::Number, std::move(s),
                line, col);
  }

  Token lex_string(int line, int col) {
    advance();  // opening quote
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') fail("unterminated string literal");
      s += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) fail("unterminated string literal");
    advance();  // closing quote
    return make(TokKind::String, std::move(s), line, col);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  AmrPlusDocument parse_document() {
    AmrPlusDocument doc;
    doc.root = parse_amr();
    if (peek().kind == TokKind::LBrace) {
      doc.constraints = parse_constraints();
    }
    check_bindings(doc.root);
    return doc;
  }

  bool at_end() const { return toks_[pos_].kind == TokKind::End; }

  void expect_end() {
    if (!at_end()) fail("trailing input after document");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg,
                         ErrorCode code = ErrorCode::ParseError) {
    const Token& t = peek();
    throw AmrError(code, msg, t.line, t.column);
  }

  Token expect(TokKind k, const char* what) {
    if (peek().kind != k) {
      fail(std::string("expected ") + what);
    }
    return get();
  }

  AmrPlusNode parse_amr() {
    expect(TokKind::LParen, "'('");
    AmrPlusNode node;
    node.variable = expect(TokKind::Symbol, "variable name").text;
    expect(TokKind::Slash, "'/'");
    if (peek().kind == TokKind::Integer) {
      const Token& t = peek();
      int idx = to_int(get());
      if (idx < 1) {
        throw AmrError(ErrorCode::ParseError, "context index must be >= 1",
                       t.line, t.column);
      }
      node.index = idx;
      expect(TokKind::Slash, "'/' after context index");
    }
    node.concept_name = parse_concept();
    while (peek().kind == TokKind::Colon) {
      get();
      Role role;
      role.relation = expect(TokKind::Symbol, "relation name").text;
      role.target = parse_target();
      node.roles.push_back(std::move(role));
    }
    expect(TokKind::RParen, "')'");
    return node;
  }

  std::string parse_concept() {
    const Token& t = peek();
    if (t.kind == TokKind::Symbol) return get().text;
    // Synset-style concepts lex as symbols; anything else is malformed.
    fail("expected concept");
  }

  RoleTarget parse_target() {
    switch (peek().kind) {
      case TokKind::LParen:
        return detail::box<AmrPlusNode>(parse_amr());
      case TokKind::Symbol:
        return VarRef{get().text};
      case TokKind::String:
        return Constant::string(get().text);
      case TokKind::Integer:
      case TokKind::Number:
        return Constant::number(get().text);
      case TokKind::Minus:
        get();
        return Constant::minus();
      case TokKind::Plus:
        get();
        return Constant::plus();
      default:
        fail("expected role target");
    }
  }

  ConstraintSet parse_constraints() {
    expect(TokKind::LBrace, "'{'");
    ConstraintSet cs;
    if (peek().kind == TokKind::RBrace) {
      get();
      return cs;
    }
    cs.insert(parse_constraint());
    while (peek().kind == TokKind::Comma) {
      get();
      cs.insert(parse_constraint());
    }
    expect(TokKind::RBrace, "'}' or ','");
    return cs;
  }

  Constraint parse_constraint() {
    if (peek().kind == TokKind::Tilde) {
      get();
      return ShorthandNeg{expect_index()};
    }
    ContextIndex first = expect_index();
    switch (peek().kind) {
      case TokKind::Eq:
        get();
        return EqConstraint{first, expect_index()};
      case TokKind::Lt:
        get();
        return PresupConstraint{first, expect_index()};
      case TokKind::Arrow:
        get();
        return ShorthandCond{first, expect_index()};
      case TokKind::Colon: {
        get();
        if (peek().kind == TokKind::Tilde) {
          get();
          return NegConstraint{first, expect_index()};
        }
        ContextIndex ante = expect_index();
        if (peek().kind != TokKind::Arrow) {
          fail("expected '=>' in conditional constraint",
               ErrorCode::MalformedConstraint);
        }
        get();
        return CondConstraint{first, ante, expect_index()};
      }
      default:
        fail("expected '=', '<', ':', or '=>' in constraint",
             ErrorCode::MalformedConstraint);
    }
  }

  ContextIndex expect_index() {
    if (peek().kind != TokKind::Integer) {
      fail("expected context index", ErrorCode::MalformedConstraint);
    }
    const Token& t = peek();
    int v = to_int(get());
    if (v < 1) {
      throw AmrError(ErrorCode::MalformedConstraint,
                     "context index must be >= 1", t.line, t.column);
    }
    return v;
  }

  int to_int(const Token& t) {
    try {
      return std::stoi(t.text);
    } catch (const std::exception&) {
      throw AmrError(ErrorCode::ParseError, "integer out of range", t.line,
                     t.column);
    }
  }

  // Every variable binds exactly once (at the node carrying a concept);
  // every VarRef must resolve to such a binding.
  void check_bindings(const AmrPlusNode& root) {
    std::set<std::string> bound;
    collect_bound(root, bound);
    check_refs(root, bound);
  }

  void collect_bound(const AmrPlusNode& node, std::set<std::string>& bound) {
    if (!bound.insert(node.variable).second) {
      throw AmrError(ErrorCode::DuplicateVariable,
                     "variable '" + node.variable + "' bound more than once");
    }
    for (const auto& role : node.roles) {
      if (is_node(role.target)) collect_bound(target_node(role.target), bound);
    }
  }

  void check_refs(const AmrPlusNode& node,
                  const std::set<std::string>& bound) {
    for (const auto& role : node.roles) {
      if (is_node(role.target)) {
        check_refs(target_node(role.target), bound);
      } else if (is_var_ref(role.target)) {
        const auto& ref = std::get<VarRef>(role.target);
        if (!bound.count(ref.name)) {
          throw AmrError(ErrorCode::UnboundVariable,
                         "reference to unbound variable '" + ref.name + "'");
        }
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline AmrPlusDocument parse(const std::string& text) {
  detail::Parser p(detail::Lexer(text).run());
  AmrPlusDocument doc = p.parse_document();
  p.expect_end();
  return doc;
}

// Reads all documents in a file-sized string, in order.
inline std::vector<AmrPlusDocument> parse_all(const std::string& text) {
  detail::Parser p(detail::Lexer(text).run());
  std::vector<AmrPlusDocument> docs;
  while (!p.at_end()) {
    docs.push_back(p.parse_document());
  }
  return docs;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string print_constant(const Constant& c) {
  switch (c.kind) {
    case Constant::Kind::String: return "\"" + c.text + "\"";
    case Constant::Kind::Number: return c.text;
    case Constant::Kind::Minus: return "-";
    case Constant::Kind::Plus: return "+";
  }
  return c.text;
}

inline void print_node(std::ostringstream& out, const AmrPlusNode& node) {
  out << '(' << node.variable << ' ';
  if (node.index) {
    out << '/' << *node.index << '/';
  } else {
    out << '/';
  }
  out << ' ' << node.concept_name;
  for (const auto& role : node.roles) {
    out << " :" << role.relation << ' ';
    if (is_node(role.target)) {
      print_node(out, target_node(role.target));
    } else if (is_var_ref(role.target)) {
      out << std::get<VarRef>(role.target).name;
    } else {
      out << print_constant(std::get<Constant>(role.target));
    }
  }
  out << ')';
}

inline std::string print_constraint(const Constraint& c) {
  std::ostringstream out;
  if (const auto* eq = std::get_if<EqConstraint>(&c)) {
    out << eq->a << '=' << eq->b;
  } else if (const auto* pr = std::get_if<PresupConstraint>(&c)) {
    out << pr->presupposed << '<' << pr->anchor;
  } else if (const auto* ng = std::get_if<NegConstraint>(&c)) {
    out << ng->host << ":~" << ng->scope;
  } else if (const auto* cd = std::get_if<CondConstraint>(&c)) {
    out << cd->host << ':' << cd->ante << "=>" << cd->cons;
  } else if (const auto* sn = std::get_if<ShorthandNeg>(&c)) {
    out << '~' << sn->scope;
  } else if (const auto* sc = std::get_if<ShorthandCond>(&c)) {
    out << sc->ante << "=>" << sc->cons;
  }
  return out.str();
}

inline bool any_indexed(const AmrPlusNode& node) {
  if (node.index) return true;
  for (const auto& role : node.roles) {
    if (is_node(role.target) && any_indexed(target_node(role.target)))
      return true;
  }
  return false;
}

}  // namespace detail

// Canonical form: single spaces between tokens, roles in source order,
// constraints rendered and sorted lexicographically. Plain AMRs omit the
// constraint block; indexed documents always carry one, even when empty.
inline std::string print(const AmrPlusDocument& doc) {
  std::ostringstream out;
  detail::print_node(out, doc.root);
  bool indexed = detail::any_indexed(doc.root);
  if (indexed || !doc.constraints.empty()) {
    std::vector<std::string> rendered;
    for (const auto& c : doc.constraints) {
      rendered.push_back(detail::print_constraint(c));
    }
    std::sort(rendered.begin(), rendered.end());
    out << " {";
    for (std::size_t i = 0; i < rendered.size(); ++i) {
      if (i) out << ',';
      out << rendered[i];
    }
    out << '}';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Main variable and sub-AMR listing

// v: an AMR denotes its main variable; a reference denotes the referenced
// variable; a constant denotes itself.
inline Term main_variable(const AmrPlusNode& node) {
  return Term::var(node.variable);
}

inline Term main_variable(const RoleTarget& target) {
  if (is_node(target)) return Term::var(target_node(target).variable);
  if (is_var_ref(target)) return Term::var(std::get<VarRef>(target).name);
  return Term::constant(std::get<Constant>(target));
}

namespace detail {

inline void collect_subamrs(
    const AmrPlusNode& node,
    std::vector<std::pair<ContextIndex, const AmrPlusNode*>>& out) {
  if (!node.index) {
    throw AmrError(ErrorCode::MissingIndex,
                   "node '" + node.variable + "' carries no context index");
  }
  out.emplace_back(*node.index, &node);
  for (const auto& role : node.roles) {
    if (is_node(role.target)) collect_subamrs(target_node(role.target), out);
  }
}

}  // namespace detail

// Every node paired with its context index, in depth-first source order.
inline std::vector<std::pair<ContextIndex, const AmrPlusNode*>> subamrs(
    const AmrPlusDocument& doc) {
  std::vector<std::pair<ContextIndex, const AmrPlusNode*>> out;
  detail::collect_subamrs(doc.root, out);
  return out;
}

}  // namespace amrplus

#endif  // AMRPLUS_PENMAN_HPP

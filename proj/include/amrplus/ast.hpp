// Core value types for indexed AMR documents: nodes, role targets,
// scoping constraints, and the terms they denote.
#ifndef AMRPLUS_AST_HPP
#define AMRPLUS_AST_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace amrplus {

using ContextIndex = int;

// ---------------------------------------------------------------------------
// Errors

enum class ErrorCode {
  LexError,
  ParseError,
  UnboundVariable,
  DuplicateVariable,
  MalformedConstraint,
  MissingIndex,
  AlreadyIndexed,
  CyclicScope,
  NoRoot,
  MultiRoot,
  Unplaced,
  DoublePlacement,
  ResidualEquality,
  MissingRoleMap,
  VocabularyTooLarge,
  SizeGuard,
  DanglingBox,
  ClauseSyntax,
  FreeVariable,
  ArityMismatch,
  BadInput,
  Io,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::LexError: return "LEX_ERROR";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnboundVariable: return "UNBOUND_VAR";
    case ErrorCode::DuplicateVariable: return "DUPLICATE_VAR";
    case ErrorCode::MalformedConstraint: return "MALFORMED_CONSTRAINT";
    case ErrorCode::MissingIndex: return "MISSING_INDEX";
    case ErrorCode::AlreadyIndexed: return "ALREADY_INDEXED";
    case ErrorCode::CyclicScope: return "CYCLIC_SCOPE";
    case ErrorCode::NoRoot: return "NO_ROOT";
    case ErrorCode::MultiRoot: return "MULTI_ROOT";
    case ErrorCode::Unplaced: return "UNPLACED";
    case ErrorCode::DoublePlacement: return "DOUBLE_PLACEMENT";
    case ErrorCode::ResidualEquality: return "RESIDUAL_EQ";
    case ErrorCode::MissingRoleMap: return "MISSING_ROLE_MAP";
    case ErrorCode::VocabularyTooLarge: return "VOCAB_TOO_LARGE";
    case ErrorCode::SizeGuard: return "SIZE_GUARD";
    case ErrorCode::DanglingBox: return "DANGLING_BOX";
    case ErrorCode::ClauseSyntax: return "CLAUSE_SYNTAX";
    case ErrorCode::FreeVariable: return "FREE_VARIABLE";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

// Carries a machine-readable code plus, for lexer/parser errors, a 1-based
// source position.
class AmrError : public std::runtime_error {
 public:
  AmrError(ErrorCode code, std::string message, int line = -1, int column = -1)
      : std::runtime_error(format(code, message, line, column)),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(ErrorCode code, const std::string& message,
                            int line, int column) {
    std::string out = to_string(code);
    if (line >= 0) {
      out += " at " + std::to_string(line) + ":" + std::to_string(column);
    }
    out += ": " + message;
    return out;
  }

  ErrorCode code_;
  int line_;
  int column_;
};

namespace detail {

// Whitespace-separated fields; double quotes group and are stripped. Used by
// the line-oriented triple and clause formats.
inline std::vector<std::string> split_fields(const std::string& line,
                                             int lineno,
                                             std::vector<bool>* quoted) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    if (line[i] == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) {
        throw AmrError(ErrorCode::BadInput, "unterminated quoted field",
                       lineno, static_cast<int>(i + 1));
      }
      out.push_back(line.substr(i + 1, end - i - 1));
      if (quoted) quoted->push_back(true);
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
             line[end] != '\r' && line[end] != '#') {
        ++end;
      }
      out.push_back(line.substr(i, end - i));
      if (quoted) quoted->push_back(false);
      i = end;
    }
  }
  return out;
}

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Optional sign, digits, at most one decimal point.
inline bool number_text(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  bool digit = false, dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digit = true;
    } else if (s[i] == '.' && !dot) {
      dot = true;
    } else {
      return false;
    }
  }
  return digit;
}

// Copyable heap box; gives the recursive node type value semantics.
template <typename T>
class box {
 public:
  box() : ptr_(std::make_unique<T>()) {}
  box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  box(const box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  box(box&&) noexcept = default;
  box& operator=(const box& other) {
    ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  box& operator=(box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const box& a, const box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Nodes and role targets

// Literal role target. Minus/Plus cover the bare polarity symbols of plain
// AMR; numbers are kept verbatim as text so printing is exact.
struct Constant {
  enum class Kind { String, Number, Minus, Plus };
  Kind kind = Kind::String;
  std::string text;

  static Constant string(std::string s) {
    return {Kind::String, std::move(s)};
  }
  static Constant number(std::string s) {
    return {Kind::Number, std::move(s)};
  }
  static Constant minus() { return {Kind::Minus, "-"}; }
  static Constant plus() { return {Kind::Plus, "+"}; }

  bool operator==(const Constant&) const = default;
};

// Re-entrant reference to a variable bound elsewhere in the same document.
struct VarRef {
  std::string name;
  bool operator==(const VarRef&) const = default;
};

struct AmrPlusNode;

using RoleTarget = std::variant<detail::box<AmrPlusNode>, VarRef, Constant>;

struct Role {
  std::string relation;
  RoleTarget target;
  bool operator==(const Role&) const = default;
};

// One slash of the notation: a bound variable, an optional context index,
// a concept, and the roles hanging off it in source order.
struct AmrPlusNode {
  std::string variable;
  std::optional<ContextIndex> index;
  std::string concept_name;
  std::vector<Role> roles;

  bool operator==(const AmrPlusNode&) const = default;
};

inline bool is_node(const RoleTarget& t) {
  return std::holds_alternative<detail::box<AmrPlusNode>>(t);
}
inline bool is_var_ref(const RoleTarget& t) {
  return std::holds_alternative<VarRef>(t);
}
inline bool is_constant(const RoleTarget& t) {
  return std::holds_alternative<Constant>(t);
}
inline const AmrPlusNode& target_node(const RoleTarget& t) {
  return *std::get<detail::box<AmrPlusNode>>(t);
}
inline AmrPlusNode& target_node(RoleTarget& t) {
  return *std::get<detail::box<AmrPlusNode>>(t);
}

// ---------------------------------------------------------------------------
// Scoping constraints

struct EqConstraint {
  ContextIndex a = 0;
  ContextIndex b = 0;
  bool operator==(const EqConstraint&) const = default;
};

// p must hold in a context outscoping its anchor.
struct PresupConstraint {
  ContextIndex presupposed = 0;
  ContextIndex anchor = 0;
  bool operator==(const PresupConstraint&) const = default;
};

// host contains the negation of scope.
struct NegConstraint {
  ContextIndex host = 0;
  ContextIndex scope = 0;
  bool operator==(const NegConstraint&) const = default;
};

// host contains the conditional "ante => cons".
struct CondConstraint {
  ContextIndex host = 0;
  ContextIndex ante = 0;
  ContextIndex cons = 0;
  bool operator==(const CondConstraint&) const = default;
};

// Shorthand forms whose host index is left to be inferred.
struct ShorthandNeg {
  ContextIndex scope = 0;
  bool operator==(const ShorthandNeg&) const = default;
};

struct ShorthandCond {
  ContextIndex ante = 0;
  ContextIndex cons = 0;
  bool operator==(const ShorthandCond&) const = default;
};

using Constraint = std::variant<EqConstraint, PresupConstraint, NegConstraint,
                                CondConstraint, ShorthandNeg, ShorthandCond>;

// Duplicate-free constraint collection preserving source order.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(std::initializer_list<Constraint> items) {
    for (const auto& c : items) insert(c);
  }

  bool insert(const Constraint& c) {
    if (contains(c)) return false;
    items_.push_back(c);
    return true;
  }

  bool contains(const Constraint& c) const {
    for (const auto& x : items_)
      if (x == c) return true;
    return false;
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Constraint& operator[](std::size_t i) const { return items_[i]; }

  // Set equality: insertion order is kept for deterministic processing but
  // does not distinguish documents.
  friend bool operator==(const ConstraintSet& a, const ConstraintSet& b) {
    if (a.items_.size() != b.items_.size()) return false;
    for (const auto& c : a.items_) {
      if (!b.contains(c)) return false;
    }
    return true;
  }

 private:
  std::vector<Constraint> items_;
};

struct AmrPlusDocument {
  AmrPlusNode root;
  ConstraintSet constraints;
  bool operator==(const AmrPlusDocument&) const = default;
};

// ---------------------------------------------------------------------------
// Terms

// What a (sub-)AMR or triple endpoint denotes: a variable, a context index,
// a bare symbol (concept), or a constant.
struct Term {
  enum class Kind { Var, Ctx, Sym, Const };
  Kind kind = Kind::Var;
  std::string text;       // Var/Sym name or constant text
  ContextIndex ctx = 0;   // valid when kind == Ctx
  Constant::Kind const_kind = Constant::Kind::String;  // when kind == Const

  static Term var(std::string name) {
    Term t;
    t.kind = Kind::Var;
    t.text = std::move(name);
    return t;
  }
  static Term context(ContextIndex i) {
    Term t;
    t.kind = Kind::Ctx;
    t.ctx = i;
    return t;
  }
  static Term symbol(std::string name) {
    Term t;
    t.kind = Kind::Sym;
    t.text = std::move(name);
    return t;
  }
  static Term constant(const Constant& c) {
    Term t;
    t.kind = Kind::Const;
    t.text = c.text;
    t.const_kind = c.kind;
    return t;
  }

  bool operator==(const Term&) const = default;
};

}  // namespace amrplus

#endif  // AMRPLUS_AST_HPP

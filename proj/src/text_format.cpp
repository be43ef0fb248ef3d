#include "qbflab/text_format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace qbflab {
namespace {

enum class Tok { kIdent, kZero, kOne, kNot, kAnd, kOr, kXor, kLParen, kRParen, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c) || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view in) : in_(in) {}

  Token next() {
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
    const std::size_t line = line_;
    const std::size_t col = col_;
    if (pos_ >= in_.size()) return {Tok::kEnd, "", line, col};
    const unsigned char c = static_cast<unsigned char>(in_[pos_]);
    auto single = [&](Tok t) {
      advance();
      return Token{t, std::string(1, static_cast<char>(c)), line, col};
    };
    switch (c) {
      case '\n': {
        Token t{Tok::kNewline, "\\n", line, col};
        advance();
        return t;
      }
      case '!': return single(Tok::kNot);
      case '&': return single(Tok::kAnd);
      case '|': return single(Tok::kOr);
      case '^': return single(Tok::kXor);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      default: break;
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < in_.size() && std::isalnum(static_cast<unsigned char>(in_[pos_]))) advance();
      const std::string text(in_.substr(start, pos_ - start));
      if (text == "0") return {Tok::kZero, text, line, col};
      if (text == "1") return {Tok::kOne, text, line, col};
      throw ParseError(line, col, "invalid constant '" + text + "'", {"0", "1"});
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < in_.size() && ident_char(static_cast<unsigned char>(in_[pos_]))) advance();
      return {Tok::kIdent, std::string(in_.substr(start, pos_ - start)), line, col};
    }
    throw ParseError(line, col, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }

 private:
  void advance() {
    if (in_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }

const std::vector<std::string> kOperandStart{"identifier", "'0'", "'1'", "'!'", "'('"};

class Parser {
 public:
  explicit Parser(std::string_view in) : lexer_(in) { current_ = lexer_.next(); }

  PrenexQbf parse() {
    skip_newlines();
    while (current_.kind == Tok::kIdent && is_keyword(current_.text)) parse_quantifier_line();
    Formula matrix = parse_or();
    skip_newlines();
    if (current_.kind != Tok::kEnd) fail("unexpected '" + current_.text + "'", {"operator", "end of input"});
    return PrenexQbf(std::move(prefix_), std::move(matrix), std::move(names_));
  }

 private:
  void parse_quantifier_line() {
    const Quantifier q = current_.text == "forall" ? Quantifier::kForall : Quantifier::kExists;
    shift();
    if (current_.kind != Tok::kIdent) fail("quantifier needs at least one variable", {"identifier"});
    while (current_.kind == Tok::kIdent) {
      if (is_keyword(current_.text)) fail("keyword '" + current_.text + "' used as a variable", {"identifier"});
      if (ids_.contains(current_.text)) {
        throw DuplicateQuantificationError(current_.line, current_.column,
                                           "variable '" + current_.text + "' is quantified twice");
      }
      const VarId id{static_cast<std::uint32_t>(prefix_.size() + 1)};
      ids_.emplace(current_.text, id);
      names_.emplace(id, current_.text);
      prefix_.push_back({q, id});
      shift();
    }
    if (current_.kind != Tok::kNewline && current_.kind != Tok::kEnd) {
      fail("unexpected '" + current_.text + "' in quantifier line", {"identifier", "end of line"});
    }
    skip_newlines();
  }

  Formula parse_or() {
    std::vector<Formula> terms{parse_xor()};
    while (peek() == Tok::kOr) {
      shift();
      terms.push_back(parse_xor());
    }
    return Formula::disjunction(std::move(terms));
  }

  // Right-associative, so nesting depth grows with each operator and the
  // depth guard bounds the tree.
  Formula parse_xor() {
    Formula lhs = parse_and();
    if (peek() != Tok::kXor) return lhs;
    shift();
    DepthGuard guard(*this);
    return Formula::exclusive_or(std::move(lhs), parse_xor());
  }

  Formula parse_and() {
    std::vector<Formula> terms{parse_unary()};
    while (peek() == Tok::kAnd) {
      shift();
      terms.push_back(parse_unary());
    }
    return Formula::conjunction(std::move(terms));
  }

  Formula parse_unary() {
    DepthGuard guard(*this);
    if (peek() == Tok::kNot) {
      shift();
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (peek()) {
      case Tok::kZero:
        shift();
        return Formula::constant(false);
      case Tok::kOne:
        shift();
        return Formula::constant(true);
      case Tok::kLParen: {
        shift();
        Formula inner = parse_or();
        if (peek() != Tok::kRParen) fail("unclosed parenthesis", {"')'"});
        shift();
        return inner;
      }
      case Tok::kIdent: {
        auto it = ids_.find(current_.text);
        if (it == ids_.end()) {
          if (is_keyword(current_.text)) fail("quantifier line after the matrix started", kOperandStart);
          throw UnboundVariableError(current_.line, current_.column,
                                     "variable '" + current_.text + "' is not quantified");
        }
        shift();
        return Formula::variable(it->second);
      }
      case Tok::kEnd:
        fail("unexpected end of input", kOperandStart);
      default:
        fail("unexpected '" + current_.text + "'", kOperandStart);
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNestingDepth) parser.fail("expression nested too deeply", {});
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Tok peek() {
    skip_newlines();
    return current_.kind;
  }
  void skip_newlines() {
    while (current_.kind == Tok::kNewline) shift();
  }
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(current_.line, current_.column, msg, std::move(expected));
  }

  Lexer lexer_;
  Token current_;
  std::size_t depth_ = 0;
  std::vector<QuantifiedVar> prefix_;
  std::map<std::string, VarId> ids_;
  std::map<VarId, std::string> names_;
};

enum Prec { kPrecOr = 1, kPrecXor = 2, kPrecAnd = 3, kPrecNot = 4, kPrecAtom = 5 };

int precedence(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::kOr: return kPrecOr;
    case NodeKind::kXor: return kPrecXor;
    case NodeKind::kAnd: return kPrecAnd;
    case NodeKind::kNot: return kPrecNot;
    default: return kPrecAtom;
  }
}

struct Symbols {
  const char* negation;
  const char* conj;
  const char* disj;
  const char* xor_;
};

constexpr Symbols kAscii{"!", " & ", " | ", " ^ "};
constexpr Symbols kMath{"¬", "∧", "∨", "⊕"};

void render(const Formula& f, const PrenexQbf& names, const Symbols& sym, std::ostream& out);

void render_child(const Formula& child, bool parens, const PrenexQbf& names, const Symbols& sym, std::ostream& out) {
  if (parens) out << '(';
  render(child, names, sym, out);
  if (parens) out << ')';
}

void render(const Formula& f, const PrenexQbf& names, const Symbols& sym, std::ostream& out) {
  switch (f.kind()) {
    case NodeKind::kConst:
      out << (f.constant_value() ? '1' : '0');
      return;
    case NodeKind::kVar:
      out << names.name_of(f.var());
      return;
    case NodeKind::kNot:
      out << sym.negation;
      render_child(f.children()[0], precedence(f.children()[0]) < kPrecNot, names, sym, out);
      return;
    case NodeKind::kXor:
      // right-associative: only a left operand of equal precedence needs parens
      render_child(f.children()[0], precedence(f.children()[0]) <= kPrecXor, names, sym, out);
      out << sym.xor_;
      render_child(f.children()[1], precedence(f.children()[1]) < kPrecXor, names, sym, out);
      return;
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      // n-ary: a nested node of the same kind is kept as its own group
      const int prec = precedence(f);
      const char* op = f.kind() == NodeKind::kAnd ? sym.conj : sym.disj;
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out << op;
        first = false;
        render_child(c, precedence(c) <= prec, names, sym, out);
      }
      return;
    }
  }
}

Formula rename(const Formula& f, const std::map<VarId, VarId>& to) {
  std::map<VarId, Formula> images;
  for (auto v : variables(f)) {
    auto it = to.find(v);
    images.emplace(v, Formula::variable(it != to.end() ? it->second : VarId{v.value + (1u << 30)}));
  }
  return substitute_vars(f, images);
}

PrenexQbf positional(const PrenexQbf& q) {
  std::map<VarId, VarId> to;
  std::vector<QuantifiedVar> prefix;
  for (std::size_t i = 0; i < q.prefix().size(); ++i) {
    const VarId id{static_cast<std::uint32_t>(i + 1)};
    to.emplace(q.prefix()[i].var, id);
    prefix.push_back({q.prefix()[i].quantifier, id});
  }
  return PrenexQbf(std::move(prefix), rename(q.matrix(), to));
}

}  // namespace

PrenexQbf parse_qbf_text(std::string_view input) { return Parser(input).parse(); }

std::string print_formula(const Formula& f, const PrenexQbf& names_from) {
  std::ostringstream out;
  render(f, names_from, kAscii, out);
  return out.str();
}

std::string print_qbf(const PrenexQbf& q) {
  std::ostringstream out;
  const auto& prefix = q.prefix();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i == 0 || prefix[i].quantifier != prefix[i - 1].quantifier) {
      if (i) out << '\n';
      out << (prefix[i].quantifier == Quantifier::kForall ? "forall" : "exists");
    }
    out << ' ' << q.name_of(prefix[i].var);
  }
  if (!prefix.empty()) out << '\n';
  render(q.matrix(), q, kAscii, out);
  out << '\n';
  return out.str();
}

std::string print_qbf_math(const PrenexQbf& q) {
  std::ostringstream out;
  for (const auto& qv : q.prefix()) {
    out << '(' << (qv.quantifier == Quantifier::kForall ? "∀" : "∃") << q.name_of(qv.var) << ')';
  }
  out << '[';
  render(q.matrix(), q, kMath, out);
  out << ']';
  return out.str();
}

bool alpha_equivalent(const PrenexQbf& a, const PrenexQbf& b) {
  if (a.prefix().size() != b.prefix().size()) return false;
  return positional(a) == positional(b);
}

}  // namespace qbflab

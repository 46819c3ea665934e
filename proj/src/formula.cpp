#include "nmfo/formula.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <utility>

#include "nmfo/errors.hpp"

namespace nmfo {

struct Formula::Node {
  Kind kind;
  std::string name;               // predicate or bound variable
  std::vector<std::string> args;  // atom arguments
  std::optional<Formula> lhs;     // quantifier body lives here
  std::optional<Formula> rhs;
};

namespace {

const std::string& kind_name(Formula::Kind k) {
  static const std::string names[] = {"atom", "bottom", "and", "strong", "implies", "forall", "exists"};
  return names[static_cast<int>(k)];
}

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<std::string> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}, {}}));
}

Formula Formula::bottom() {
  static const Formula bot(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}, {}}));
  return bot;
}

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::strong(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Strong, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, std::move(body), {}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, std::move(body), {}}));
}

Formula Formula::neg(Formula f) { return implies(std::move(f), bottom()); }

Formula Formula::disj(Formula lhs, Formula rhs) {
  return conj(implies(implies(lhs, rhs), rhs), implies(implies(rhs, lhs), lhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) { return conj(implies(lhs, rhs), implies(rhs, lhs)); }

Formula Formula::square(Formula f) { return strong(f, f); }

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  const Kind k = kind();
  return k == Kind::And || k == Kind::Strong || k == Kind::Implies;
}

bool Formula::is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }

const std::string& Formula::predicate() const {
  if (kind() != Kind::Atom) throw Error("predicate() on " + kind_name(kind()));
  return node_->name;
}

const std::vector<std::string>& Formula::args() const {
  if (kind() != Kind::Atom) throw Error("args() on " + kind_name(kind()));
  return node_->args;
}

const std::string& Formula::variable() const {
  if (!is_quantifier()) throw Error("variable() on " + kind_name(kind()));
  return node_->name;
}

const Formula& Formula::body() const {
  if (!is_quantifier()) throw Error("body() on " + kind_name(kind()));
  return *node_->lhs;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw Error("lhs() on " + kind_name(kind()));
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw Error("rhs() on " + kind_name(kind()));
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.args != y.args) return false;
  if (x.lhs.has_value() != y.lhs.has_value() || x.rhs.has_value() != y.rhs.has_value()) return false;
  if (x.lhs && !(*x.lhs == *y.lhs)) return false;
  if (x.rhs && !(*x.rhs == *y.rhs)) return false;
  return true;
}

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  std::function<void(const Formula&, std::multiset<std::string>&)> walk = [&](const Formula& f,
                                                                              std::multiset<std::string>& bound) {
    switch (f.kind()) {
      case Kind::Atom:
        for (const auto& a : f.args())
          if (!bound.contains(a)) out.insert(a);
        break;
      case Kind::Bottom: break;
      case Kind::Forall:
      case Kind::Exists: {
        auto it = bound.insert(f.variable());
        walk(f.body(), bound);
        bound.erase(it);
        break;
      }
      default:
        walk(f.lhs(), bound);
        walk(f.rhs(), bound);
    }
  };
  std::multiset<std::string> bound;
  walk(*this, bound);
  return out;
}

bool Formula::is_quantifier_free() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Bottom: return true;
    case Kind::Forall:
    case Kind::Exists: return false;
    default: return lhs().is_quantifier_free() && rhs().is_quantifier_free();
  }
}

std::size_t Formula::size() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Bottom: return 1;
    case Kind::Forall:
    case Kind::Exists: return 1 + body().size();
    default: return 1 + lhs().size() + rhs().size();
  }
}

namespace {

void collect_arities(const Formula& f, std::map<std::string, int>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const int arity = static_cast<int>(f.args().size());
      auto [it, inserted] = out.emplace(f.predicate(), arity);
      if (!inserted && it->second != arity)
        throw ArityError("predicate '" + f.predicate() + "' used with arities " + std::to_string(it->second) +
                         " and " + std::to_string(arity));
      break;
    }
    case Formula::Kind::Bottom: break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collect_arities(f.body(), out); break;
    default:
      collect_arities(f.lhs(), out);
      collect_arities(f.rhs(), out);
  }
}

}  // namespace

std::map<std::string, int> predicate_arities(const Formula& f) {
  std::map<std::string, int> out;
  collect_arities(f, out);
  return out;
}

std::set<std::string> propositional_atoms(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [name, arity] : predicate_arities(f))
    if (arity == 0) out.insert(name);
  return out;
}

Formula eliminate_exists(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Forall: return Formula::forall(f.variable(), eliminate_exists(f.body()));
    case Formula::Kind::Exists:
      return Formula::neg(Formula::forall(f.variable(), Formula::neg(eliminate_exists(f.body()))));
    case Formula::Kind::And: return Formula::conj(eliminate_exists(f.lhs()), eliminate_exists(f.rhs()));
    case Formula::Kind::Strong: return Formula::strong(eliminate_exists(f.lhs()), eliminate_exists(f.rhs()));
    case Formula::Kind::Implies: return Formula::implies(eliminate_exists(f.lhs()), eliminate_exists(f.rhs()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Shape { Atom, Bottom, Top, Neg, Or, Iff, And, Strong, Implies, Forall, Exists };

struct View {
  Shape shape;
  const Formula* a = nullptr;
  const Formula* b = nullptr;
};

View view(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return {Shape::Atom};
    case K::Bottom: return {Shape::Bottom};
    case K::Forall: return {Shape::Forall, &f.body()};
    case K::Exists: return {Shape::Exists, &f.body()};
    case K::Strong: return {Shape::Strong, &f.lhs(), &f.rhs()};
    case K::Implies:
      if (f.rhs().kind() == K::Bottom) {
        if (f.lhs().kind() == K::Bottom) return {Shape::Top};
        return {Shape::Neg, &f.lhs()};
      }
      return {Shape::Implies, &f.lhs(), &f.rhs()};
    case K::And: {
      const Formula& l = f.lhs();
      const Formula& r = f.rhs();
      if (l.kind() == K::Implies && r.kind() == K::Implies) {
        // ((a→b)→b) ∧ ((b→a)→a)
        const Formula& la = l.lhs();
        const Formula& ra = r.lhs();
        if (la.kind() == K::Implies && ra.kind() == K::Implies) {
          const Formula& a = la.lhs();
          const Formula& b = la.rhs();
          if (l.rhs() == b && ra.lhs() == b && ra.rhs() == a && r.rhs() == a) return {Shape::Or, &a, &b};
        }
        // (a→b) ∧ (b→a)
        if (l.lhs() == r.rhs() && l.rhs() == r.lhs()) return {Shape::Iff, &l.lhs(), &l.rhs()};
      }
      return {Shape::And, &l, &r};
    }
  }
  return {Shape::Bottom};
}

int precedence(Shape s) {
  switch (s) {
    case Shape::Forall:
    case Shape::Exists: return 0;
    case Shape::Iff: return 1;
    case Shape::Implies: return 2;
    case Shape::Or: return 3;
    case Shape::And: return 4;
    case Shape::Strong: return 5;
    case Shape::Neg: return 6;
    default: return 7;
  }
}

const char* operator_text(Shape s) {
  switch (s) {
    case Shape::Iff: return "<->";
    case Shape::Implies: return "->";
    case Shape::Or: return "\\/";
    case Shape::And: return "/\\";
    case Shape::Strong: return "&";
    default: return "";
  }
}

void emit_atom(const Formula& f, std::string& out) {
  out += f.predicate();
  if (f.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out += ',';
    out += f.args()[i];
  }
  out += ')';
}

bool emit_leaf(const Formula& f, const View& v, std::string& out) {
  switch (v.shape) {
    case Shape::Atom: emit_atom(f, out); return true;
    case Shape::Bottom: out += "bot"; return true;
    case Shape::Top: out += "top"; return true;
    default: return false;
  }
}

// `rightmost`: nothing follows this subformula up to the enclosing
// parenthesis, so a quantifier body may extend freely.
void emit_spaced(const Formula& f, int ctx, bool rightmost, std::string& out) {
  const View v = view(f);
  if (emit_leaf(f, v, out)) return;
  const int p = precedence(v.shape);
  const bool paren = p == 0 ? !rightmost : p < ctx;
  if (paren) {
    out += '(';
    rightmost = true;
  }
  switch (v.shape) {
    case Shape::Neg:
      out += '~';
      emit_spaced(*v.a, 6, rightmost, out);
      break;
    case Shape::Forall:
    case Shape::Exists:
      out += v.shape == Shape::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      emit_spaced(*v.a, 0, rightmost, out);
      break;
    default: {
      const bool right_assoc = v.shape == Shape::Implies;
      emit_spaced(*v.a, right_assoc ? p + 1 : p, false, out);
      out += ' ';
      out += operator_text(v.shape);
      out += ' ';
      emit_spaced(*v.b, right_assoc ? p : p + 1, rightmost, out);
    }
  }
  if (paren) out += ')';
}

void emit_compact(const Formula& f, bool operand, std::string& out) {
  const View v = view(f);
  if (emit_leaf(f, v, out)) return;
  switch (v.shape) {
    case Shape::Neg:
      out += '~';
      emit_compact(*v.a, true, out);
      return;
    case Shape::Forall:
    case Shape::Exists:
      if (operand) out += '(';
      out += v.shape == Shape::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      emit_compact(*v.a, false, out);
      if (operand) out += ')';
      return;
    default:
      if (operand) out += '(';
      emit_compact(*v.a, true, out);
      out += operator_text(v.shape);
      emit_compact(*v.b, true, out);
      if (operand) out += ')';
  }
}

}  // namespace

std::string print(const Formula& f, PrintStyle style) {
  std::string out;
  if (style == PrintStyle::Spaced)
    emit_spaced(f, 0, true, out);
  else
    emit_compact(f, false, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Tilde, Amp, Wedge, Vee, Arrow, DArrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Wedge: return "'/\\'";
    case Tok::Vee: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int cc = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    Tok t;
    std::size_t n = 1;
    if (starts("<->")) {
      t = Tok::DArrow;
      n = 3;
    } else if (starts("->")) {
      t = Tok::Arrow;
      n = 2;
    } else if (starts("/\\")) {
      t = Tok::Wedge;
      n = 2;
    } else if (starts("\\/")) {
      t = Tok::Vee;
      n = 2;
    } else {
      switch (c) {
        case '(': t = Tok::LParen; break;
        case ')': t = Tok::RParen; break;
        case ',': t = Tok::Comma; break;
        case '.': t = Tok::Dot; break;
        case '~': t = Tok::Tilde; break;
        case '&': t = Tok::Amp; break;
        default: throw SyntaxError(std::string("unexpected character '") + c + "'", l, cc);
      }
    }
    out.push_back({t, std::string(s.substr(i, n)), l, cc});
    advance(n);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists" || s == "bot" || s == "top"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail("expected end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + ", found " + (peek().kind == Tok::Ident ? "'" + peek().text + "'" : describe(peek().kind)),
                      peek().line, peek().column);
  }
  const Token& expect(Tok t) {
    if (peek().kind != t) fail(std::string("expected ") + describe(t));
    return next();
  }
  std::string expect_name(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail(std::string("expected ") + what);
    return next().text;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::DArrow)) f = Formula::iff(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::Arrow)) return Formula::implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Vee)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_strong();
    while (accept(Tok::Wedge)) f = Formula::conj(f, parse_strong());
    return f;
  }

  Formula parse_strong() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = Formula::strong(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Tilde)) return Formula::neg(parse_unary());
    if (peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists")) {
      const bool universal = next().text == "forall";
      std::string var = expect_name("variable");
      expect(Tok::Dot);
      Formula body = parse_iff();
      return universal ? Formula::forall(std::move(var), std::move(body))
                       : Formula::exists(std::move(var), std::move(body));
    }
    return parse_primary();
  }

  Formula parse_primary() {
    if (accept(Tok::LParen)) {
      Formula f = parse_iff();
      expect(Tok::RParen);
      return f;
    }
    if (peek().kind != Tok::Ident) fail("expected formula");
    if (peek().text == "bot") {
      next();
      return Formula::bottom();
    }
    if (peek().text == "top") {
      next();
      return Formula::top();
    }
    const Token& name_tok = peek();
    std::string name = expect_name("predicate");
    std::vector<std::string> args;
    if (accept(Tok::LParen)) {
      if (!accept(Tok::RParen)) {
        do {
          args.push_back(expect_name("variable"));
        } while (accept(Tok::Comma));
        expect(Tok::RParen);
      }
    }
    const int arity = static_cast<int>(args.size());
    auto [it, inserted] = arities_.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw ArityError(std::to_string(name_tok.line) + ":" + std::to_string(name_tok.column) + ": predicate '" + name +
                       "' used with arities " + std::to_string(it->second) + " and " + std::to_string(arity));
    return Formula::atom(std::move(name), std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, int> arities_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace nmfo

#include <lel/formula.hpp>

#include <algorithm>
#include <cctype>
#include <utility>

namespace lel {

namespace {

FormulaPtr node(Conn c, std::string atom, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->conn = c;
  f->atom = std::move(atom);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

}  // namespace

FormulaPtr Formula::make_atom(std::string name) {
  return node(Conn::Atom, std::move(name), nullptr, nullptr);
}
FormulaPtr Formula::bottom() { return node(Conn::Bottom, {}, nullptr, nullptr); }
FormulaPtr Formula::top() { return node(Conn::Top, {}, nullptr, nullptr); }
FormulaPtr Formula::neg(FormulaPtr f) { return node(Conn::Neg, {}, std::move(f), nullptr); }
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return node(Conn::Implies, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::sconj(FormulaPtr a, FormulaPtr b) {
  return node(Conn::SConj, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::sdisj(FormulaPtr a, FormulaPtr b) {
  return node(Conn::SDisj, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::meet(FormulaPtr a, FormulaPtr b) {
  return node(Conn::Meet, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::join(FormulaPtr a, FormulaPtr b) {
  return node(Conn::Join, {}, std::move(a), std::move(b));
}

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->conn != b->conn) return false;
  switch (a->conn) {
    case Conn::Atom: return a->atom == b->atom;
    case Conn::Bottom:
    case Conn::Top: return true;
    case Conn::Neg: return formulas_equal(a->lhs, b->lhs);
    default: return formulas_equal(a->lhs, b->lhs) && formulas_equal(a->rhs, b->rhs);
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Atom, Bottom, Top, Neg, Implies, SConj, SDisj, Meet, Join, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;      // atom name, or operator spelling for diagnostics
  std::size_t position;  // byte offset into the input
};

[[noreturn]] void syntax_fail(const std::string& msg, std::size_t position) {
  throw Error(Errc::ParseError, msg + " (at offset " + std::to_string(position) + ")",
              Json{{"position", position}});
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto at = [&](std::size_t k) { return k < n ? text[k] : '\0'; };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t start = i;
    if (c == '(') { out.push_back({Tok::LParen, "(", start}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", start}); ++i; continue; }
    if (c == '~') { out.push_back({Tok::Neg, "~", start}); ++i; continue; }
    if (c == '-') {
      if (at(i + 1) == '>') { out.push_back({Tok::Implies, "->", start}); i += 2; continue; }
      syntax_fail("stray '-' (did you mean \"->\"?)", start);
    }
    if (c == '<') {
      if (at(i + 1) == '-' && at(i + 2) == '>')
        syntax_fail("the language has no biconditional; \"<->\" abbreviates two implications",
                    start);
      syntax_fail("unexpected character '<'", start);
    }
    if (c == '&') {
      if (at(i + 1) == '.') { out.push_back({Tok::SConj, "&.", start}); i += 2; continue; }
      out.push_back({Tok::Meet, "&", start});
      ++i;
      continue;
    }
    if (c == '|') {
      if (at(i + 1) == '.') { out.push_back({Tok::SDisj, "|.", start}); i += 2; continue; }
      out.push_back({Tok::Join, "|", start});
      ++i;
      continue;
    }
    if (c == '_') {
      if (at(i + 1) == '|' && at(i + 2) == '_') {
        out.push_back({Tok::Bottom, "_|_", start});
        i += 3;
        continue;
      }
      syntax_fail("unexpected '_' (falsum is spelled \"_|_\")", start);
    }
    if (c == 'T') {
      out.push_back({Tok::Top, "T", start});
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Atom, std::string(text.substr(i, j - i)), start});
      i = j;
      continue;
    }
    syntax_fail(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", n});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_implication();
    if (peek().kind != Tok::End)
      syntax_fail("unexpected \"" + peek().text + "\"", peek().position);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  FormulaPtr parse_implication() {
    FormulaPtr left = parse_join_level();
    if (peek().kind == Tok::Implies) {
      take();
      return Formula::implies(std::move(left), parse_implication());  // right-associative
    }
    return left;
  }

  // One precedence level with two same-strength operators: the plain one
  // chains left-associatively, the Sasaki one must not chain, and the two
  // must not meet without parentheses.
  FormulaPtr parse_level(Tok plain, Tok sasaki, FormulaPtr (Parser::*next)(),
                         FormulaPtr (*build_plain)(FormulaPtr, FormulaPtr),
                         FormulaPtr (*build_sasaki)(FormulaPtr, FormulaPtr)) {
    FormulaPtr acc = (this->*next)();
    if (peek().kind != plain && peek().kind != sasaki) return acc;
    const Token first = peek();
    int sasaki_count = 0;
    while (peek().kind == plain || peek().kind == sasaki) {
      Token op = take();
      if (op.kind != first.kind)
        syntax_fail("\"" + first.text + "\" and \"" + op.text +
                        "\" have equal precedence; use parentheses",
                    op.position);
      if (op.kind == sasaki && ++sasaki_count > 1)
        syntax_fail("\"" + op.text +
                        "\" is non-associative; parenthesize the chain explicitly",
                    op.position);
      FormulaPtr right = (this->*next)();
      acc = (first.kind == plain) ? build_plain(std::move(acc), std::move(right))
                                  : build_sasaki(std::move(acc), std::move(right));
    }
    return acc;
  }

  FormulaPtr parse_join_level() {
    return parse_level(Tok::Join, Tok::SDisj, &Parser::parse_meet_level, &Formula::join,
                       &Formula::sdisj);
  }

  FormulaPtr parse_meet_level() {
    return parse_level(Tok::Meet, Tok::SConj, &Parser::parse_unary, &Formula::meet,
                       &Formula::sconj);
  }

  FormulaPtr parse_unary() {
    if (peek().kind == Tok::Neg) {
      take();
      return Formula::neg(parse_unary());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    Token t = take();
    switch (t.kind) {
      case Tok::Atom: return Formula::make_atom(std::move(t.text));
      case Tok::Bottom: return Formula::bottom();
      case Tok::Top: return Formula::top();
      case Tok::LParen: {
        FormulaPtr f = parse_implication();
        if (peek().kind != Tok::RParen) syntax_fail("expected ')'", peek().position);
        take();
        return f;
      }
      case Tok::End: syntax_fail("unexpected end of input", t.position);
      default: syntax_fail("unexpected \"" + t.text + "\"", t.position);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string print_formula(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: return f->atom;
    case Conn::Bottom: return "_|_";
    case Conn::Top: return "T";
    case Conn::Neg: return "~" + print_formula(f->lhs);
    case Conn::Implies: return "(" + print_formula(f->lhs) + " -> " + print_formula(f->rhs) + ")";
    case Conn::SConj: return "(" + print_formula(f->lhs) + " &. " + print_formula(f->rhs) + ")";
    case Conn::SDisj: return "(" + print_formula(f->lhs) + " |. " + print_formula(f->rhs) + ")";
    case Conn::Meet: return "(" + print_formula(f->lhs) + " & " + print_formula(f->rhs) + ")";
    case Conn::Join: return "(" + print_formula(f->lhs) + " | " + print_formula(f->rhs) + ")";
  }
  throw Error(Errc::InternalInconsistency, "unknown connective");
}

FormulaPtr expand(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return f;
    case Conn::Top: return Formula::implies(Formula::bottom(), Formula::bottom());
    case Conn::Neg: return Formula::implies(expand(f->lhs), Formula::bottom());
    case Conn::Implies: return Formula::implies(expand(f->lhs), expand(f->rhs));
    case Conn::SConj:  // ¬(φ→¬ψ)
      return expand(Formula::neg(Formula::implies(f->lhs, Formula::neg(f->rhs))));
    case Conn::SDisj:  // ¬(¬φ∧·¬ψ)
      return expand(Formula::neg(Formula::sconj(Formula::neg(f->lhs), Formula::neg(f->rhs))));
    case Conn::Meet:  // φ∧·(φ→ψ)
      return expand(Formula::sconj(f->lhs, Formula::implies(f->lhs, f->rhs)));
    case Conn::Join:  // ¬(¬φ∧¬ψ)
      return expand(Formula::neg(Formula::meet(Formula::neg(f->lhs), Formula::neg(f->rhs))));
  }
  throw Error(Errc::InternalInconsistency, "unknown connective");
}

namespace {

bool is_bottom(const FormulaPtr& f) { return f->conn == Conn::Bottom; }
bool is_top_constant(const FormulaPtr& f) {
  return f->conn == Conn::Implies && is_bottom(f->lhs) && is_bottom(f->rhs);
}
// After folding, a subformula is atom-free iff it is one of the two
// canonical constants.
bool constant_value(const FormulaPtr& folded, bool& value) {
  if (is_bottom(folded)) { value = false; return true; }
  if (is_top_constant(folded)) { value = true; return true; }
  return false;
}

}  // namespace

FormulaPtr fold_constants(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return f;
    case Conn::Implies: {
      FormulaPtr l = fold_constants(f->lhs);
      FormulaPtr r = fold_constants(f->rhs);
      bool lv = false, rv = false;
      if (constant_value(l, lv) && constant_value(r, rv)) {
        // Closed formulas take the same value in every effect algebra:
        // 0→x = 1 and 1→x = x.
        bool value = !lv || rv;
        return value ? Formula::implies(Formula::bottom(), Formula::bottom())
                     : Formula::bottom();
      }
      return Formula::implies(std::move(l), std::move(r));
    }
    default:
      throw Error(Errc::InternalInconsistency,
                  "fold_constants expects an expanded (core) formula");
  }
}

FormulaPtr normalize(const FormulaPtr& f) { return fold_constants(expand(f)); }

namespace {

void collect_atoms_into(const FormulaPtr& f, std::vector<std::string>& out) {
  switch (f->conn) {
    case Conn::Atom: out.push_back(f->atom); return;
    case Conn::Bottom:
    case Conn::Top: return;
    case Conn::Neg: collect_atoms_into(f->lhs, out); return;
    default:
      collect_atoms_into(f->lhs, out);
      collect_atoms_into(f->rhs, out);
      return;
  }
}

}  // namespace

std::vector<std::string> collect_atoms(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_atoms_into(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lel

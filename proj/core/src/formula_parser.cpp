#include "czr/formula.hpp"

#include <cctype>

namespace czr {

namespace {

enum class Tok { End, Bot, Eq, In, And, Or, Imp, Not, Forall, Exists, Dot, LParen, RParen, Var, Param };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto two = s.substr(i, 2);
    if (two == "/\\") {
      out.push_back({Tok::And, "/\\", start});
      i += 2;
    } else if (two == "\\/") {
      out.push_back({Tok::Or, "\\/", start});
      i += 2;
    } else if (two == "->") {
      out.push_back({Tok::Imp, "->", start});
      i += 2;
    } else if (c == '=') {
      out.push_back({Tok::Eq, "=", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", start});
      ++i;
    } else if (c == '.') {
      out.push_back({Tok::Dot, ".", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", start});
      ++i;
    } else if (c == '$') {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      if (i == start + 1) throw SyntaxError(start, "expected parameter name after '$'");
      out.push_back({Tok::Param, std::string(s.substr(start + 1, i - start - 1)), start});
    } else if (std::islower(c)) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = word == "bot"      ? Tok::Bot
              : word == "in"     ? Tok::In
              : word == "forall" ? Tok::Forall
              : word == "exists" ? Tok::Exists
                                 : Tok::Var;
      out.push_back({k, std::move(word), start});
    } else {
      throw SyntaxError(start, std::string("unexpected character '") + s[i] + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : toks_(lex(src)) {}

  FormulaPtr parse_all() {
    auto p = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(peek().pos, what); }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  FormulaPtr implication() {
    auto l = disjunction();
    if (accept(Tok::Imp)) return fm::imp(std::move(l), implication());
    return l;
  }

  FormulaPtr disjunction() {
    auto l = conjunction();
    if (accept(Tok::Or)) return fm::disj(std::move(l), disjunction());
    return l;
  }

  FormulaPtr conjunction() {
    auto l = unary();
    if (accept(Tok::And)) return fm::conj(std::move(l), conjunction());
    return l;
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return fm::neg(unary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      bool universal = toks_[i_++].kind == Tok::Forall;
      if (peek().kind != Tok::Var) fail("expected variable after quantifier");
      std::string v = toks_[i_++].text;
      if (accept(Tok::In)) {
        auto bound = term();
        expect(Tok::Dot, "'.'");
        auto body = implication();
        return universal ? fm::forall_in(v, bound, body) : fm::exists_in(v, bound, body);
      }
      expect(Tok::Dot, "'.'");
      auto body = implication();
      return universal ? fm::forall(v, body) : fm::exists(v, body);
    }
    return atom();
  }

  FormulaPtr atom() {
    if (accept(Tok::Bot)) return fm::bot();
    if (accept(Tok::LParen)) {
      auto p = implication();
      expect(Tok::RParen, "')'");
      return p;
    }
    auto lhs = term();
    if (accept(Tok::Eq)) return fm::eq(lhs, term());
    if (accept(Tok::In)) return fm::mem(lhs, term());
    fail("expected '=' or 'in'");
  }

  FTerm term() {
    const Token& t = peek();
    if (t.kind == Tok::Var) {
      ++i_;
      return FTerm::var(t.text);
    }
    if (t.kind == Tok::Param) {
      ++i_;
      return FTerm::param(t.text);
    }
    fail("expected variable or parameter");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

std::string fresh(const std::string& base, const std::set<std::string>& avoid) {
  for (unsigned i = 1;; ++i) {
    auto c = base + "_" + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

// Renames binders that coincide with a variable free in the whole formula.
FormulaPtr rename_apart(const FormulaPtr& p, const std::set<std::string>& free, std::set<std::string>& used) {
  switch (p->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Eq:
    case FormulaKind::Mem:
      return p;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: {
      auto l = rename_apart(p->kids[0], free, used);
      auto r = rename_apart(p->kids[1], free, used);
      return std::make_shared<const Formula>(Formula{p->kind, {}, {}, {}, {l, r}});
    }
    default:
      break;
  }
  std::string binder = p->var;
  FormulaPtr body = p->kids[0];
  if (free.count(binder)) {
    auto renamed = fresh(binder, used);
    used.insert(renamed);
    body = substitute(body, binder, FTerm::var(renamed));
    binder = renamed;
  }
  body = rename_apart(body, free, used);
  return std::make_shared<const Formula>(Formula{p->kind, binder, {}, p->rhs, {body}});
}

void all_names(const FormulaPtr& p, std::set<std::string>& out) {
  if (!p->var.empty()) out.insert(p->var);
  if (p->lhs.is_var() && !p->lhs.name.empty()) out.insert(p->lhs.name);
  if (p->rhs.is_var() && !p->rhs.name.empty()) out.insert(p->rhs.name);
  for (const auto& k : p->kids) all_names(k, out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  auto raw = FormulaParser(text).parse_all();
  auto free = free_vars(raw);
  if (free.empty()) return raw;
  std::set<std::string> used;
  all_names(raw, used);
  return rename_apart(raw, free, used);
}

}  // namespace czr

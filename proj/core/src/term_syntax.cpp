#include "czr/term_syntax.hpp"

#include <cctype>

namespace czr {

namespace {

bool is_keyword(std::string_view w) {
  return w == "lam" || w == "fix" || w == "ifz" || w == "then" || w == "else" || w == "succ" || w == "pred";
}

class TermParser {
 public:
  explicit TermParser(std::string_view src) : src_(src) {}

  TermPtr parse_all() {
    auto t = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool eat_char(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }

  void expect_char(char c) {
    if (!eat_char(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    if (end < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
    }
    return src_.substr(pos_, end - pos_);
  }

  bool eat_keyword(std::string_view kw) {
    if (peek_word() != kw) return false;
    pos_ += kw.size();
    return true;
  }

  void expect_keyword(std::string_view kw) {
    if (!eat_keyword(kw)) fail("expected '" + std::string(kw) + "'");
  }

  std::string identifier() {
    auto w = peek_word();
    if (w.empty() || is_keyword(w)) fail("expected identifier");
    pos_ += w.size();
    return std::string(w);
  }

  Nat numeral() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected numeral");
    return Nat(std::string(src_.substr(start, pos_ - start)));
  }

  TermPtr expr() {
    if (eat_keyword("lam")) {
      auto binder = identifier();
      expect_char('.');
      return term::lam(std::move(binder), expr());
    }
    if (eat_keyword("ifz")) {
      auto c = expr();
      expect_keyword("then");
      auto t = expr();
      expect_keyword("else");
      return term::ifz(std::move(c), std::move(t), expr());
    }
    return application();
  }

  bool starts_operand() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '<' || c == '#') return true;
    auto w = peek_word();
    if (w.empty()) return false;
    return w == "fix" || w == "succ" || w == "pred" || w == "lam" || w == "ifz" || !is_keyword(w);
  }

  TermPtr application() {
    auto head = unary();
    while (starts_operand()) {
      // A trailing lambda or conditional swallows the rest of the application.
      auto w = peek_word();
      TermPtr arg = (w == "lam" || w == "ifz") ? expr() : unary();
      head = term::app(std::move(head), std::move(arg));
    }
    return head;
  }

  TermPtr unary() {
    if (eat_keyword("fix")) return term::fix(unary());
    if (eat_keyword("succ")) return term::succ(unary());
    if (eat_keyword("pred")) return term::pred(unary());
    if (eat_char('#')) return term::arity(unary());
    return postfix();
  }

  TermPtr postfix() {
    auto t = atom();
    for (;;) {
      skip_ws();
      if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
          (std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) || src_[pos_ + 1] == '(')) {
        ++pos_;
        if (eat_char('(')) {
          auto idx = expr();
          expect_char(')');
          t = term::proj(std::move(t), std::move(idx));
        } else {
          t = term::proj(std::move(t), term::num(numeral()));
        }
        continue;
      }
      return t;
    }
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return term::num(numeral());
    if (eat_char('(')) {
      auto t = expr();
      expect_char(')');
      return t;
    }
    if (eat_char('<')) {
      std::vector<TermPtr> elems;
      if (!eat_char('>')) {
        do {
          elems.push_back(expr());
        } while (eat_char(','));
        expect_char('>');
      }
      return term::tuple(std::move(elems));
    }
    if (peek_word() == "lam" || peek_word() == "ifz") return expr();
    return term::var(identifier());
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return TermParser(text).parse_all(); }

}  // namespace czr

#include "czr/realizers.hpp"

#include "czr/term_syntax.hpp"

namespace czr {

CoreRealizers build_core_realizers(Pca& pca) {
  CoreRealizers c;
  c.id_gen = pca.intern_source("lam f. <lam x. <x, f>, lam x. <x, f>>");
  c.id = pca.fixpoint(c.id_gen);
  c.sym = pca.intern_source("lam e. <e.1, e.0>");
  c.trans = pca.intern_source(
      "fix (lam T. lam p. lam q."
      " <lam a. <(q.0 ((p.0 a).0)).0, T ((p.0 a).1) ((q.0 ((p.0 a).0)).1)>,"
      "  lam c. <(p.1 ((q.1 c).0)).0, T ((q.1 c).1) ((p.1 ((q.1 c).0)).1)>>)");
  std::map<std::string, Nat> names{{"T", c.trans}};
  c.trans_pair = pca.intern_source("lam u. T (u.0) (u.1)", names);
  c.mem_left = pca.intern_source("lam u. <((u.0).0 (u.1).0).0, T (u.1).1 ((u.0).0 (u.1).0).1>", names);
  c.mem_right = pca.intern_source("lam u. <(u.1).0, T <(u.0).1, (u.0).0> (u.1).1>", names);
  c.nat_eq = pca.intern_source(
      "fix (lam E. lam a. lam b. ifz a then (ifz b then 0 else 1)"
      " else (ifz b then 1 else E (pred a) (pred b)))");
  return c;
}

std::map<std::string, Nat> core_names(const CoreRealizers& c) {
  return {{"Id", c.id},         {"Sym", c.sym},       {"Trans", c.trans}, {"TransPair", c.trans_pair},
          {"MemL", c.mem_left}, {"MemR", c.mem_right}, {"NatEq", c.nat_eq}};
}

namespace {

class TransportBuilder {
 public:
  TransportBuilder(const CoreRealizers& core, std::string v) : core_(core), v_(std::move(v)) {}

  TermPtr build(const FormulaPtr& phi, const TermPtr& p, const TermPtr& r) {
    using namespace term;
    const bool lv = phi->lhs.is_var() && phi->lhs.name == v_;
    const bool rv = phi->rhs.is_var() && phi->rhs.name == v_;
    switch (phi->kind) {
      case FormulaKind::Bot:
        return r;
      case FormulaKind::Eq:
        if (lv && rv) return trans(sym(p), trans(r, p));
        if (lv) return trans(sym(p), r);
        if (rv) return trans(r, p);
        return r;
      case FormulaKind::Mem:
        if (lv && rv) return app(num(core_.mem_right), tuple({p, app(num(core_.mem_left), tuple({p, r}))}));
        if (lv) return app(num(core_.mem_right), tuple({p, r}));
        if (rv) return app(num(core_.mem_left), tuple({p, r}));
        return r;
      case FormulaKind::And:
        return tuple({build(phi->kids[0], p, proj(r, 0)), build(phi->kids[1], p, proj(r, 1))});
      case FormulaKind::Or:
        return ifz(proj(r, 0), tuple({num(0), build(phi->kids[0], p, proj(r, 1))}),
                   tuple({num(1), build(phi->kids[1], p, proj(r, 1))}));
      case FormulaKind::Imp: {
        auto f = fresh();
        auto back = build(phi->kids[0], sym(p), var(f));
        return lam(f, build(phi->kids[1], p, app(r, back)));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        if (phi->var == v_) return r;
        return build(phi->kids[0], p, r);
      case FormulaKind::ForallIn: {
        auto f = fresh();
        TermPtr member = var(f);
        if (rv) member = app(num(core_.mem_left), tuple({sym(p), member}));
        TermPtr inner = app(r, member);
        if (phi->var != v_) inner = build(phi->kids[0], p, inner);
        return lam(f, inner);
      }
      case FormulaKind::ExistsIn: {
        TermPtr member = proj(r, 0);
        if (rv) member = app(num(core_.mem_left), tuple({p, member}));
        TermPtr body = proj(r, 1);
        if (phi->var != v_) body = build(phi->kids[0], p, body);
        return tuple({member, body});
      }
    }
    return r;
  }

 private:
  TermPtr trans(TermPtr a, TermPtr b) const { return term::app(term::num(core_.trans), std::move(a), std::move(b)); }
  static TermPtr sym(const TermPtr& p) { return term::tuple({term::proj(p, 1), term::proj(p, 0)}); }
  std::string fresh() { return "f_" + std::to_string(counter_++); }

  const CoreRealizers& core_;
  std::string v_;
  unsigned counter_ = 0;
};

}  // namespace

TermPtr transport_term(const CoreRealizers& core, const FormulaPtr& phi, const std::string& v) {
  TransportBuilder b(core, v);
  auto body = b.build(phi, term::var("p_"), term::var("r_"));
  return term::lam("p_", term::lam("r_", body));
}

Nat transport_realizer(Pca& pca, const CoreRealizers& core, const FormulaPtr& phi, const std::string& v) {
  return pca.intern(transport_term(core, phi, v));
}

}  // namespace czr

#pragma once

#include "czr/formula.hpp"
#include "czr/pca.hpp"

#include <string>

namespace czr {

/// Realizers for the equality fragment, interned into one Pca. Building twice
/// against the same Pca yields the same naturals.
///
/// Conventions: m realizes X in S when m = <a, q> with <a> in S and
/// q realizing X = a^S; e realizes S = T when {e_0} maps each label of S to a
/// membership realizer into T and {e_1} does the converse.
struct CoreRealizers {
  Nat id_gen;     // {g}(f) = <lam x.<x,f>, lam x.<x,f>>
  Nat id;         // fixpoint of id_gen; realizes forall x. x = x
  Nat sym;        // lam e.<e_1, e_0>
  Nat trans;      // curried: p |- A=B, q |- B=C  =>  trans p q |- A=C
  Nat trans_pair; // lam u. trans u_0 u_1
  Nat mem_left;   // <p, m>, p |- X=Y, m |- Z in X  =>  Z in Y
  Nat mem_right;  // <p, m>, p |- X=Y, m |- X in Z  =>  Y in Z
  Nat nat_eq;     // curried: 0 iff the two naturals are equal, 1 otherwise
};

CoreRealizers build_core_realizers(Pca& pca);

inline Nat identity_realizer(Pca& pca) { return build_core_realizers(pca).id; }

/// Names usable in realizer sources: Id, Sym, Trans, TransPair, MemL, MemR, NatEq.
std::map<std::string, Nat> core_names(const CoreRealizers& core);

/// Builds a closed term T such that, for p |- A = B and r |- phi(A),
/// T p r |- phi(B). phi is read as a formula in the free variable v; other
/// free variables and parameters stay fixed.
TermPtr transport_term(const CoreRealizers& core, const FormulaPtr& phi, const std::string& v);
Nat transport_realizer(Pca& pca, const CoreRealizers& core, const FormulaPtr& phi, const std::string& v);

}  // namespace czr

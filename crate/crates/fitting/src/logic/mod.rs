//! First-order formulas over the group language, with a concrete grammar.
//!
//! Terms are built from the identity constant `1`, variables `x<k>`,
//! parameter slots `p<k>`, products `t*t`, inverses `t^-1`, conjugations
//! `t^t` and commutators `[t, t]`. Formulas are term equalities combined
//! with `~`, `&`, `|`, `->` and the bounded quantifiers `A x<k>.` (for all)
//! and `E x<k>.` (exists), which range over a finite group during
//! evaluation.
//!
//! `^` binds tighter than `*`, `&` tighter than `|` tighter than `->`, and a
//! quantifier scopes as far right as possible. Rendering and parsing are
//! mutually inverse: `parse(render(f))` is structurally `f`, and rendering a
//! parsed canonical string reproduces it byte for byte.

mod build;
mod eval;
mod parse;
mod render;

pub use build::{
    closure_nilpotency_check, closure_nilpotency_formula, definable_set,
    fitting_class_bound_check, nilpotent_closure_formula, soluble_closure_formula,
    word_to_term, TruncationRecord, FORMULA_CONJUNCT_BUDGET,
};
pub use eval::{evaluate, evaluate_with, replay_witness, EvalOptions, EvalResult};
pub use parse::parse;

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("variable x{0} is not assigned")]
    UnassignedVariable(u32),
    #[error("parameter p{index} has no value ({provided} provided)")]
    ParamOutOfRange { index: u32, provided: usize },
    #[error("formula uses {used} parameter slots, expected {expected}")]
    ParamArityMismatch { expected: usize, used: usize },
    #[error("formula would have {conjuncts} conjuncts, over the budget of {budget}; use the lazy checker")]
    FormulaTooLarge { conjuncts: u64, budget: u64 },
    #[error("formula index must be at least 1")]
    ZeroIndex,
    #[error("formula has free variables and cannot be evaluated as a sentence")]
    UnboundVariables(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Identity,
    Var(u32),
    Param(u32),
    Product(Box<Term>, Box<Term>),
    Inverse(Box<Term>),
    Conj(Box<Term>, Box<Term>),
    Comm(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(u32, Box<Formula>),
    Exists(u32, Box<Formula>),
}

impl Term {
    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Identity | Term::Param(_) => {}
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Inverse(a) => a.collect_vars(out),
            Term::Product(a, b) | Term::Conj(a, b) | Term::Comm(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn max_param(&self) -> Option<u32> {
        match self {
            Term::Identity | Term::Var(_) => None,
            Term::Param(p) => Some(*p),
            Term::Inverse(a) => a.max_param(),
            Term::Product(a, b) | Term::Conj(a, b) | Term::Comm(a, b) => {
                a.max_param().max(b.max_param())
            }
        }
    }

    pub fn contains_var(&self, v: u32) -> bool {
        match self {
            Term::Identity | Term::Param(_) => false,
            Term::Var(k) => *k == v,
            Term::Inverse(a) => a.contains_var(v),
            Term::Product(a, b) | Term::Conj(a, b) | Term::Comm(a, b) => {
                a.contains_var(v) || b.contains_var(v)
            }
        }
    }
}

impl Formula {
    /// Variables occurring free, computed structurally: a quantifier removes
    /// its own variable from the body's free set, so shadowed binders behave
    /// correctly.
    pub fn free_vars(&self) -> BTreeSet<u32> {
        match self {
            Formula::Eq(a, b) => {
                let mut out = BTreeSet::new();
                a.collect_vars(&mut out);
                b.collect_vars(&mut out);
                out
            }
            Formula::Not(f) => f.free_vars(),
            Formula::And(fs) | Formula::Or(fs) => {
                fs.iter().flat_map(|f| f.free_vars()).collect()
            }
            Formula::Implies(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Formula::ForAll(v, f) | Formula::Exists(v, f) => {
                let mut out = f.free_vars();
                out.remove(v);
                out
            }
        }
    }

    /// Number of parameter slots: one past the largest `p<k>` used, zero if
    /// none appear.
    pub fn param_count(&self) -> usize {
        fn walk(f: &Formula) -> Option<u32> {
            match f {
                Formula::Eq(a, b) => a.max_param().max(b.max_param()),
                Formula::Not(f) => walk(f),
                Formula::And(fs) | Formula::Or(fs) => fs.iter().filter_map(walk).max(),
                Formula::Implies(a, b) => walk(a).max(walk(b)),
                Formula::ForAll(_, f) | Formula::Exists(_, f) => walk(f),
            }
        }
        walk(self).map_or(0, |max| max as usize + 1)
    }

    /// Renumbers bound variables in binding order, starting just above the
    /// largest free variable, so that α-equivalent formulas become
    /// structurally equal.
    pub fn canonicalize_bound_vars(&self) -> Formula {
        let base = self.free_vars().iter().max().copied().map_or(1, |m| m + 1);
        fn walk(f: &Formula, next: &mut u32, scope: &mut Vec<(u32, u32)>) -> Formula {
            let rename_term = |t: &Term, scope: &[(u32, u32)]| -> Term {
                fn go(t: &Term, scope: &[(u32, u32)]) -> Term {
                    match t {
                        Term::Identity => Term::Identity,
                        Term::Param(p) => Term::Param(*p),
                        Term::Var(v) => Term::Var(
                            scope.iter().rev().find(|(old, _)| old == v).map_or(*v, |&(_, n)| n),
                        ),
                        Term::Inverse(a) => Term::Inverse(Box::new(go(a, scope))),
                        Term::Product(a, b) => {
                            Term::Product(Box::new(go(a, scope)), Box::new(go(b, scope)))
                        }
                        Term::Conj(a, b) => {
                            Term::Conj(Box::new(go(a, scope)), Box::new(go(b, scope)))
                        }
                        Term::Comm(a, b) => {
                            Term::Comm(Box::new(go(a, scope)), Box::new(go(b, scope)))
                        }
                    }
                }
                go(t, scope)
            };
            match f {
                Formula::Eq(a, b) => Formula::Eq(rename_term(a, scope), rename_term(b, scope)),
                Formula::Not(inner) => Formula::Not(Box::new(walk(inner, next, scope))),
                Formula::And(fs) => {
                    Formula::And(fs.iter().map(|f| walk(f, next, scope)).collect())
                }
                Formula::Or(fs) => Formula::Or(fs.iter().map(|f| walk(f, next, scope)).collect()),
                Formula::Implies(a, b) => Formula::Implies(
                    Box::new(walk(a, next, scope)),
                    Box::new(walk(b, next, scope)),
                ),
                Formula::ForAll(v, body) => {
                    let fresh = *next;
                    *next += 1;
                    scope.push((*v, fresh));
                    let body = walk(body, next, scope);
                    scope.pop();
                    Formula::ForAll(fresh, Box::new(body))
                }
                Formula::Exists(v, body) => {
                    let fresh = *next;
                    *next += 1;
                    scope.push((*v, fresh));
                    let body = walk(body, next, scope);
                    scope.pop();
                    Formula::Exists(fresh, Box::new(body))
                }
            }
        }
        let mut next = base;
        walk(self, &mut next, &mut Vec::new())
    }
}

/// Conjunction that collapses a single conjunct instead of wrapping it.
pub(crate) fn and_all(mut conjuncts: Vec<Formula>) -> Formula {
    debug_assert!(!conjuncts.is_empty());
    if conjuncts.len() == 1 {
        conjuncts.pop().unwrap()
    } else {
        Formula::And(conjuncts)
    }
}

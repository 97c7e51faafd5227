//! Bounded-quantifier evaluation over a finite group.
//!
//! Quantifiers range over the whole group, with one pruning rule: when a
//! quantified variable occurs only as the conjugator of terms it does not
//! appear in, the quantifier runs over one representative per distinct joint
//! conjugate instead of over every element. The joint conjugate is constant
//! on right cosets of the intersection of the base centralizers, so the
//! pruned scan sees exactly the value combinations the full scan would.
//! Everything is scanned in ascending element order, so results and
//! witnesses are deterministic.

use std::collections::BTreeMap;

use crate::group::FiniteGroup;

use super::{Formula, LogicError, Term};

#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub prune_conjugators: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { prune_conjugators: true }
    }
}

/// Outcome of an evaluation.
///
/// `witness` is a variable assignment for the outermost quantifier prefix:
/// a counterexample when a universal prefix fails, a satisfying assignment
/// when an existential prefix succeeds, absent otherwise. Re-evaluating the
/// quantifier-stripped formula under the witness reproduces `truth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalResult {
    pub truth: bool,
    pub witness: Option<BTreeMap<u32, usize>>,
    pub tuples_examined: u64,
}

type Witness = BTreeMap<u32, usize>;

struct Evaluator<'a> {
    group: &'a FiniteGroup,
    params: &'a [usize],
    assignment: &'a Witness,
    prune: bool,
    env: Vec<(u32, usize)>,
    tuples: u64,
}

impl<'a> Evaluator<'a> {
    fn lookup(&self, var: u32) -> Result<usize, LogicError> {
        if let Some(&(_, value)) = self.env.iter().rev().find(|&&(v, _)| v == var) {
            return Ok(value);
        }
        self.assignment.get(&var).copied().ok_or(LogicError::UnassignedVariable(var))
    }

    fn term(&self, t: &Term) -> Result<usize, LogicError> {
        Ok(match t {
            Term::Identity => self.group.identity(),
            Term::Var(v) => self.lookup(*v)?,
            Term::Param(p) => *self
                .params
                .get(*p as usize)
                .ok_or(LogicError::ParamOutOfRange { index: *p, provided: self.params.len() })?,
            Term::Product(a, b) => self.group.mul(self.term(a)?, self.term(b)?),
            Term::Inverse(a) => self.group.inverse(self.term(a)?),
            Term::Conj(a, b) => self.group.conjugate(self.term(a)?, self.term(b)?),
            Term::Comm(a, b) => self.group.commutator(self.term(a)?, self.term(b)?),
        })
    }

    /// The candidate values a quantifier over `var` must scan for `body`.
    fn domain(&mut self, var: u32, body: &Formula) -> Result<Vec<usize>, LogicError> {
        if self.prune {
            if let Some(bases) = conjugation_bases(body, var) {
                if bases.is_empty() {
                    // The variable does not occur at all.
                    return Ok(vec![self.group.identity()]);
                }
                // Bases may mention variables bound deeper inside; those
                // cannot be resolved yet, so fall back to the full domain.
                let values: Result<Vec<usize>, LogicError> =
                    bases.iter().map(|t| self.term(t)).collect();
                if let Ok(values) = values {
                    return Ok(self.group.joint_conjugator_representatives(&values));
                }
            }
        }
        Ok((0..self.group.order()).collect())
    }

    /// Evaluates a formula. `in_prefix` is true while we are still inside
    /// the outermost quantifier chain; only there are witnesses assembled,
    /// composed on unwind along the path that decides the result.
    fn formula(
        &mut self,
        f: &Formula,
        in_prefix: bool,
    ) -> Result<(bool, Option<Witness>), LogicError> {
        match f {
            Formula::Eq(a, b) => Ok((self.term(a)? == self.term(b)?, None)),
            Formula::Not(inner) => Ok((!self.formula(inner, false)?.0, None)),
            Formula::And(parts) => {
                for part in parts {
                    if !self.formula(part, false)?.0 {
                        return Ok((false, None));
                    }
                }
                Ok((true, None))
            }
            Formula::Or(parts) => {
                for part in parts {
                    if self.formula(part, false)?.0 {
                        return Ok((true, None));
                    }
                }
                Ok((false, None))
            }
            Formula::Implies(a, b) => {
                let holds = !self.formula(a, false)?.0 || self.formula(b, false)?.0;
                Ok((holds, None))
            }
            Formula::ForAll(var, body) => {
                let domain = self.domain(*var, body)?;
                let child_prefix =
                    in_prefix && matches!(**body, Formula::ForAll(_, _) | Formula::Exists(_, _));
                for value in domain {
                    self.env.push((*var, value));
                    self.tuples += 1;
                    let (holds, inner) = self.formula(body, child_prefix)?;
                    self.env.pop();
                    if !holds {
                        let witness = in_prefix.then(|| {
                            let mut w = inner.unwrap_or_default();
                            w.insert(*var, value);
                            w
                        });
                        return Ok((false, witness));
                    }
                }
                Ok((true, None))
            }
            Formula::Exists(var, body) => {
                let domain = self.domain(*var, body)?;
                let child_prefix =
                    in_prefix && matches!(**body, Formula::ForAll(_, _) | Formula::Exists(_, _));
                for value in domain {
                    self.env.push((*var, value));
                    self.tuples += 1;
                    let (holds, inner) = self.formula(body, child_prefix)?;
                    self.env.pop();
                    if holds {
                        let witness = in_prefix.then(|| {
                            let mut w = inner.unwrap_or_default();
                            w.insert(*var, value);
                            w
                        });
                        return Ok((true, witness));
                    }
                }
                Ok((false, None))
            }
        }
    }
}

/// Occurrences of `var` in conjugator position only: returns the conjugated
/// base terms when every occurrence of the variable is as `t^var` with `t`
/// neither containing `var` nor any variable bound below the quantifier
/// being pruned (such a base could not be evaluated at pruning time).
/// Returns `None` when any occurrence disqualifies; an empty vector means
/// the variable does not occur.
fn conjugation_bases(f: &Formula, var: u32) -> Option<Vec<&Term>> {
    let mut bases = Vec::new();
    fn walk_term<'f>(
        t: &'f Term,
        var: u32,
        bases: &mut Vec<&'f Term>,
        bound: &[u32],
    ) -> bool {
        match t {
            Term::Conj(base, exp) => {
                if matches!(**exp, Term::Var(v) if v == var) {
                    if base.contains_var(var) || bound.iter().any(|&b| base.contains_var(b)) {
                        return false;
                    }
                    bases.push(base);
                    true
                } else {
                    walk_term(base, var, bases, bound) && walk_term(exp, var, bases, bound)
                }
            }
            Term::Var(v) => *v != var,
            Term::Identity | Term::Param(_) => true,
            Term::Inverse(a) => walk_term(a, var, bases, bound),
            Term::Product(a, b) | Term::Comm(a, b) => {
                walk_term(a, var, bases, bound) && walk_term(b, var, bases, bound)
            }
        }
    }
    fn walk<'f>(
        f: &'f Formula,
        var: u32,
        bases: &mut Vec<&'f Term>,
        bound: &mut Vec<u32>,
    ) -> bool {
        match f {
            Formula::Eq(a, b) => {
                walk_term(a, var, bases, bound) && walk_term(b, var, bases, bound)
            }
            Formula::Not(inner) => walk(inner, var, bases, bound),
            Formula::And(parts) | Formula::Or(parts) => {
                parts.iter().all(|p| walk(p, var, bases, bound))
            }
            Formula::Implies(a, b) => {
                walk(a, var, bases, bound) && walk(b, var, bases, bound)
            }
            Formula::ForAll(v, body) | Formula::Exists(v, body) => {
                if *v == var {
                    // A shadowing binder hides the outer variable entirely.
                    return true;
                }
                bound.push(*v);
                let ok = walk(body, var, bases, bound);
                bound.pop();
                ok
            }
        }
    }
    walk(f, var, &mut bases, &mut Vec::new()).then_some(bases)
}

pub fn evaluate(
    group: &FiniteGroup,
    formula: &Formula,
    params: &[usize],
    assignment: &BTreeMap<u32, usize>,
) -> Result<EvalResult, LogicError> {
    evaluate_with(group, formula, params, assignment, EvalOptions::default())
}

pub fn evaluate_with(
    group: &FiniteGroup,
    formula: &Formula,
    params: &[usize],
    assignment: &BTreeMap<u32, usize>,
    options: EvalOptions,
) -> Result<EvalResult, LogicError> {
    let mut evaluator = Evaluator {
        group,
        params,
        assignment,
        prune: options.prune_conjugators,
        env: Vec::new(),
        tuples: 0,
    };
    let (truth, witness) = evaluator.formula(formula, true)?;
    Ok(EvalResult { truth, witness, tuples_examined: evaluator.tuples })
}

/// Re-checks a witness: strips the outermost quantifiers whose variables the
/// witness assigns and evaluates the remaining body under it. A sound
/// witness reproduces the truth value of the original evaluation.
pub fn replay_witness(
    group: &FiniteGroup,
    formula: &Formula,
    params: &[usize],
    witness: &BTreeMap<u32, usize>,
) -> Result<bool, LogicError> {
    let mut f = formula;
    loop {
        match f {
            Formula::ForAll(v, body) | Formula::Exists(v, body) if witness.contains_key(v) => {
                f = body;
            }
            _ => break,
        }
    }
    Ok(evaluate(group, f, params, witness)?.truth)
}

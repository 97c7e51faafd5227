//! Builders for the membership formulas, plus checkers that avoid
//! materializing the large ones.

use rayon::prelude::*;

use crate::group::FiniteGroup;
use crate::radicals::RadicalResult;
use crate::words::{derived_word, lower_central_word, Word, WordExpr};

use super::{and_all, evaluate, EvalResult, Formula, LogicError, Term};

/// Cap on materialized conjunctions; larger formulas exist only through the
/// lazy checker.
pub const FORMULA_CONJUNCT_BUDGET: u64 = 100_000;

/// Substitutes terms for the word's variables.
pub fn word_to_term(word: &Word, args: &[Term]) -> Term {
    assert_eq!(args.len(), word.arity(), "argument count must match word arity");
    fn go(expr: &WordExpr, args: &[Term]) -> Term {
        match expr {
            WordExpr::Var(i) => args[*i].clone(),
            WordExpr::Product(a, b) => {
                Term::Product(Box::new(go(a, args)), Box::new(go(b, args)))
            }
            WordExpr::Inverse(a) => Term::Inverse(Box::new(go(a, args))),
            WordExpr::Conjugation(a, b) => {
                Term::Conj(Box::new(go(a, args)), Box::new(go(b, args)))
            }
            WordExpr::Commutator(a, b) => Term::Comm(Box::new(go(a, args)), Box::new(go(b, args))),
        }
    }
    go(word.expr(), args)
}

fn forall_chain(vars: impl DoubleEndedIterator<Item = u32>, body: Formula) -> Formula {
    vars.rev().fold(body, |acc, v| Formula::ForAll(v, Box::new(acc)))
}

/// One-parameter formula satisfied by `a` exactly when the normal closure of
/// `a` is nilpotent of class at most `n`: the weight-`n` commutator word must
/// vanish on all tuples of conjugates of `a`.
pub fn nilpotent_closure_formula(n: usize) -> Result<Formula, LogicError> {
    if n == 0 {
        return Err(LogicError::ZeroIndex);
    }
    let word = lower_central_word(n).expect("n >= 1");
    let args: Vec<Term> = (1..=n as u32 + 1)
        .map(|v| Term::Conj(Box::new(Term::Param(0)), Box::new(Term::Var(v))))
        .collect();
    let body = Formula::Eq(word_to_term(&word, &args), Term::Identity);
    Ok(forall_chain(1..=n as u32 + 1, body))
}

/// One-parameter formula satisfied by `a` exactly when the normal closure of
/// `a` is soluble of derived length at most `n`.
pub fn soluble_closure_formula(n: usize) -> Result<Formula, LogicError> {
    if n == 0 {
        return Err(LogicError::ZeroIndex);
    }
    let arity = 1u64 << n;
    if arity > FORMULA_CONJUNCT_BUDGET {
        return Err(LogicError::FormulaTooLarge {
            conjuncts: arity,
            budget: FORMULA_CONJUNCT_BUDGET,
        });
    }
    let word = derived_word(n).expect("n >= 1");
    let args: Vec<Term> = (1..=arity as u32)
        .map(|v| Term::Conj(Box::new(Term::Param(0)), Box::new(Term::Var(v))))
        .collect();
    let body = Formula::Eq(word_to_term(&word, &args), Term::Identity);
    Ok(forall_chain(1..=arity as u32, body))
}

/// Formula in `m` free variables `x1..xm`, true of a tuple exactly when the
/// normal closure of its entries is nilpotent of class at most `n`. The body
/// conjoins the weight-`n` word over every assignment of tuple entries to
/// word positions (`m^(n+1)` conjuncts), each entry conjugated by its own
/// quantified variable `x(m+1)..x(m+n+1)`.
pub fn closure_nilpotency_formula(n: usize, m: usize) -> Result<Formula, LogicError> {
    if n == 0 || m == 0 {
        return Err(LogicError::ZeroIndex);
    }
    let conjunct_count = (m as u64)
        .checked_pow(n as u32 + 1)
        .filter(|&c| c <= FORMULA_CONJUNCT_BUDGET)
        .ok_or_else(|| LogicError::FormulaTooLarge {
            conjuncts: (m as u64).saturating_pow(n as u32 + 1),
            budget: FORMULA_CONJUNCT_BUDGET,
        })?;
    let word = lower_central_word(n).expect("n >= 1");
    let positions = n + 1;
    let mut conjuncts = Vec::with_capacity(conjunct_count as usize);
    for selector in selections(m, positions) {
        let args: Vec<Term> = selector
            .iter()
            .enumerate()
            .map(|(i, &which)| {
                Term::Conj(
                    Box::new(Term::Var(which as u32 + 1)),
                    Box::new(Term::Var((m + i) as u32 + 1)),
                )
            })
            .collect();
        conjuncts.push(Formula::Eq(word_to_term(&word, &args), Term::Identity));
    }
    let body = and_all(conjuncts);
    Ok(forall_chain(m as u32 + 1..=(m + positions) as u32, body))
}

/// All maps from `positions` positions into `0..m`, in lexicographic order
/// with the first position most significant.
fn selections(m: usize, positions: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (m as u64).pow(positions as u32);
    (0..total).map(move |index| {
        let mut digits = vec![0usize; positions];
        let mut rest = index;
        for slot in (0..positions).rev() {
            digits[slot] = (rest % m as u64) as usize;
            rest /= m as u64;
        }
        digits
    })
}

/// Decides the tuple-closure nilpotency formula at `tuple` without building
/// it: iterates the position assignments and, per assignment, the conjugator
/// tuples restricted to distinct-conjugate representatives, exiting on the
/// first non-vanishing word value. A commutator chain that has already
/// reached the identity stays there, so such subtrees are skipped.
pub fn closure_nilpotency_check(
    group: &FiniteGroup,
    n: usize,
    m: usize,
    tuple: &[usize],
) -> EvalResult {
    assert_eq!(tuple.len(), m, "tuple length must be m");
    assert!(n >= 1 && m >= 1);
    assert!(
        (m as u64).checked_pow(n as u32 + 1).is_some(),
        "m^(n+1) position assignments overflow"
    );
    let identity = group.identity();
    let reps_for: Vec<Vec<usize>> =
        tuple.iter().map(|&b| group.conjugator_representatives(b)).collect();
    let mut tuples_examined = 0u64;

    struct Scan<'g> {
        group: &'g FiniteGroup,
        bases: Vec<usize>,
        reps: Vec<&'g [usize]>,
        conjugators: Vec<usize>,
        tuples: u64,
    }

    impl Scan<'_> {
        /// Returns a counterexample conjugator tuple, if any. `acc` is the
        /// word value of the arguments chosen so far.
        fn run(&mut self, position: usize, acc: usize) -> Option<Vec<usize>> {
            let identity = self.group.identity();
            if position > 0 && acc == identity {
                return None;
            }
            if position == self.bases.len() {
                return (acc != identity).then(|| self.conjugators.clone());
            }
            let reps: &[usize] = self.reps[position];
            for &y in reps {
                self.tuples += 1;
                let arg = self.group.conjugate(self.bases[position], y);
                let next = if position == 0 { arg } else { self.group.commutator(acc, arg) };
                self.conjugators.push(y);
                let hit = self.run(position + 1, next);
                if hit.is_some() {
                    return hit;
                }
                self.conjugators.pop();
            }
            None
        }
    }

    for selector in selections(m, n + 1) {
        let bases: Vec<usize> = selector.iter().map(|&w| tuple[w]).collect();
        let reps: Vec<&[usize]> = selector.iter().map(|&w| reps_for[w].as_slice()).collect();
        let mut scan =
            Scan { group, bases, reps, conjugators: Vec::new(), tuples: 0 };
        let hit = scan.run(0, identity);
        tuples_examined += scan.tuples;
        if let Some(conjugators) = hit {
            let witness = conjugators
                .iter()
                .enumerate()
                .map(|(i, &y)| ((m + i) as u32 + 1, y))
                .collect();
            return EvalResult { truth: false, witness: Some(witness), tuples_examined };
        }
    }
    EvalResult { truth: true, witness: None, tuples_examined }
}

/// Truncation used by [`fitting_class_bound_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationRecord {
    /// Word weight used in the hypothesis: the largest nilpotency class of
    /// any single element's normal closure, clamped to at least 1.
    pub n_star: usize,
    /// Tuple length used in the conclusion: `p + 1`.
    pub m: usize,
}

/// Checks whether the Fitting subgroup has nilpotency class at most `p`,
/// through formulas alone.
///
/// The implication family "if every entry of an m-tuple has a nilpotent
/// normal closure of class ≤ n, the tuple's joint closure has class ≤ p" is
/// infinite in n and m; for a finite group it suffices to take n = n*
/// (largest witness class, so the hypothesis captures every element it ever
/// could) and m = p + 1 (enough entries to probe the weight-p word). Both
/// hypothesis and conclusion are decided by word vanishing, never by series
/// computations, so this route stays independent of the algebraic one.
///
/// The universal tuple quantifier collapses to one scan. The hypothesis is
/// conjugation-invariant, so the passing elements form a union of conjugacy
/// classes D; the family holds exactly when the weight-p word vanishes on
/// D^(p+1): a non-vanishing word tuple is itself an m-tuple of passing
/// elements whose conclusion fails at the identity conjugators, and
/// conversely any failing m-tuple's conclusion exhibits a non-vanishing
/// word tuple with entries conjugate into D.
pub fn fitting_class_bound_check(
    group: &FiniteGroup,
    p: usize,
    fitting: &RadicalResult<'_>,
) -> (EvalResult, TruncationRecord) {
    let n_star = fitting.max_witness().max(1);
    let m = p + 1;
    let record = TruncationRecord { n_star, m };
    let mut tuples_examined = 0u64;

    let mut domain = Vec::new();
    for rep in group.class_representatives() {
        let result = closure_nilpotency_check(group, n_star, 1, &[rep]);
        tuples_examined += result.tuples_examined;
        if result.truth {
            domain.extend_from_slice(group.conjugacy_class(rep));
        }
    }
    domain.sort_unstable();

    let witness_for = |tuple: &[usize]| -> Option<std::collections::BTreeMap<u32, usize>> {
        Some(tuple.iter().enumerate().map(|(i, &b)| (i as u32 + 1, b)).collect())
    };

    if p == 0 {
        // Class 0 means trivial: every passing element must be the identity.
        let bad = domain.iter().copied().find(|&d| d != group.identity());
        return match bad {
            Some(d) => (
                EvalResult { truth: false, witness: witness_for(&[d]), tuples_examined },
                record,
            ),
            None => (EvalResult { truth: true, witness: None, tuples_examined }, record),
        };
    }

    // Depth-first scan of the left-normed weight-p chain over D^(p+1); a
    // chain that reaches the identity stays there, so those subtrees are
    // skipped.
    fn scan(
        group: &FiniteGroup,
        domain: &[usize],
        depth_left: usize,
        acc: usize,
        prefix: &mut Vec<usize>,
        tuples: &mut u64,
    ) -> Option<Vec<usize>> {
        if depth_left == 0 {
            return (acc != group.identity()).then(|| prefix.clone());
        }
        if !prefix.is_empty() && acc == group.identity() {
            return None;
        }
        for &d in domain {
            *tuples += 1;
            let next = if prefix.is_empty() { d } else { group.commutator(acc, d) };
            prefix.push(d);
            let hit = scan(group, domain, depth_left - 1, next, prefix, tuples);
            if hit.is_some() {
                return hit;
            }
            prefix.pop();
        }
        None
    }

    let mut prefix = Vec::with_capacity(m);
    let hit = scan(group, &domain, m, group.identity(), &mut prefix, &mut tuples_examined);
    match hit {
        Some(tuple) => (
            EvalResult { truth: false, witness: witness_for(&tuple), tuples_examined },
            record,
        ),
        None => (EvalResult { truth: true, witness: None, tuples_examined }, record),
    }
}

/// The solution set of a one-parameter formula: every element whose
/// substitution into the parameter slot satisfies it.
pub fn definable_set(group: &FiniteGroup, formula: &Formula) -> Result<Vec<usize>, LogicError> {
    let used = formula.param_count();
    if used != 1 {
        return Err(LogicError::ParamArityMismatch { expected: 1, used });
    }
    let free: Vec<u32> = formula.free_vars().into_iter().collect();
    if !free.is_empty() {
        return Err(LogicError::UnboundVariables(free));
    }
    let empty = std::collections::BTreeMap::new();
    let verdicts: Result<Vec<bool>, LogicError> = (0..group.order())
        .into_par_iter()
        .map(|a| Ok(evaluate(group, formula, &[a], &empty)?.truth))
        .collect();
    Ok(verdicts?
        .into_iter()
        .enumerate()
        .filter_map(|(a, truth)| truth.then_some(a))
        .collect())
}

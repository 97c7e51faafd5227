//! Commutator words over free variables and their evaluation in a group.
//!
//! Three recursive families are built here. Writing `c(a, b)` for the
//! commutator:
//! - the left-normed lower-central word of weight `n` in `n + 1` variables,
//!   `c(c(…c(x1, x2)…, xn), x(n+1))`, which vanishes identically on a group
//!   exactly when the group is nilpotent of class at most `n`;
//! - the derived word of depth `n` in `2^n` variables, the balanced tree of
//!   commutators, vanishing identically exactly on groups soluble of derived
//!   length at most `n`;
//! - the Engel word of depth `n` in two variables, `c(…c(c(x, y), y)…, y)`.

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("word index must be at least 1")]
    ZeroIndex,
    #[error("word has arity {expected}, got {got} arguments")]
    ArityMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordExpr {
    Var(usize),
    Product(Box<WordExpr>, Box<WordExpr>),
    Inverse(Box<WordExpr>),
    Conjugation(Box<WordExpr>, Box<WordExpr>),
    Commutator(Box<WordExpr>, Box<WordExpr>),
}

/// A word in `arity` free variables. Evaluation over any group is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    arity: usize,
    expr: WordExpr,
}

impl Word {
    pub fn new(arity: usize, expr: WordExpr) -> Self {
        debug_assert!(max_var(&expr).is_none_or(|v| v < arity));
        Word { arity, expr }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn expr(&self) -> &WordExpr {
        &self.expr
    }
}

fn max_var(expr: &WordExpr) -> Option<usize> {
    match expr {
        WordExpr::Var(i) => Some(*i),
        WordExpr::Inverse(inner) => max_var(inner),
        WordExpr::Product(a, b) | WordExpr::Conjugation(a, b) | WordExpr::Commutator(a, b) => {
            max_var(a).max(max_var(b))
        }
    }
}

/// The left-normed commutator word of weight `n`, arity `n + 1`.
pub fn lower_central_word(n: usize) -> Result<Word, WordError> {
    if n == 0 {
        return Err(WordError::ZeroIndex);
    }
    let mut expr = WordExpr::Commutator(Box::new(WordExpr::Var(0)), Box::new(WordExpr::Var(1)));
    for next in 2..=n {
        expr = WordExpr::Commutator(Box::new(expr), Box::new(WordExpr::Var(next)));
    }
    Ok(Word::new(n + 1, expr))
}

/// The balanced derived word of depth `n`, arity `2^n`.
pub fn derived_word(n: usize) -> Result<Word, WordError> {
    if n == 0 {
        return Err(WordError::ZeroIndex);
    }
    fn build(depth: usize, offset: usize) -> WordExpr {
        if depth == 1 {
            WordExpr::Commutator(
                Box::new(WordExpr::Var(offset)),
                Box::new(WordExpr::Var(offset + 1)),
            )
        } else {
            let half = 1 << (depth - 1);
            WordExpr::Commutator(
                Box::new(build(depth - 1, offset)),
                Box::new(build(depth - 1, offset + half)),
            )
        }
    }
    Ok(Word::new(1 << n, build(n, 0)))
}

/// The depth-`n` Engel word in two variables.
pub fn engel_word(n: usize) -> Result<Word, WordError> {
    if n == 0 {
        return Err(WordError::ZeroIndex);
    }
    let mut expr = WordExpr::Commutator(Box::new(WordExpr::Var(0)), Box::new(WordExpr::Var(1)));
    for _ in 1..n {
        expr = WordExpr::Commutator(Box::new(expr), Box::new(WordExpr::Var(1)));
    }
    Ok(Word::new(2, expr))
}

pub fn evaluate_word(
    group: &FiniteGroup,
    word: &Word,
    args: &[usize],
) -> Result<usize, WordError> {
    if args.len() != word.arity {
        return Err(WordError::ArityMismatch { expected: word.arity, got: args.len() });
    }
    Ok(eval_expr(group, &word.expr, args))
}

fn eval_expr(group: &FiniteGroup, expr: &WordExpr, args: &[usize]) -> usize {
    match expr {
        WordExpr::Var(i) => args[*i],
        WordExpr::Product(a, b) => {
            group.mul(eval_expr(group, a, args), eval_expr(group, b, args))
        }
        WordExpr::Inverse(a) => group.inverse(eval_expr(group, a, args)),
        WordExpr::Conjugation(a, b) => {
            group.conjugate(eval_expr(group, a, args), eval_expr(group, b, args))
        }
        WordExpr::Commutator(a, b) => {
            group.commutator(eval_expr(group, a, args), eval_expr(group, b, args))
        }
    }
}

/// Renders the word in the formula grammar's term syntax, variables printed
/// 1-based as `x1`, `x2`, ….
impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_expr(&self.expr, f)
    }
}

fn fmt_expr(expr: &WordExpr, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    match expr {
        WordExpr::Var(i) => write!(f, "x{}", i + 1),
        WordExpr::Product(a, b) => {
            fmt_operand(a, f)?;
            write!(f, "*")?;
            fmt_operand(b, f)
        }
        WordExpr::Inverse(a) => {
            fmt_operand(a, f)?;
            write!(f, "^-1")
        }
        WordExpr::Conjugation(a, b) => {
            fmt_operand(a, f)?;
            write!(f, "^")?;
            fmt_operand(b, f)
        }
        WordExpr::Commutator(a, b) => {
            write!(f, "[")?;
            fmt_expr(a, f)?;
            write!(f, ", ")?;
            fmt_expr(b, f)?;
            write!(f, "]")
        }
    }
}

/// Parenthesize anything that is not atomic in the term grammar.
fn fmt_operand(expr: &WordExpr, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    match expr {
        WordExpr::Var(_) | WordExpr::Commutator(_, _) => fmt_expr(expr, f),
        _ => {
            write!(f, "(")?;
            fmt_expr(expr, f)?;
            write!(f, ")")
        }
    }
}

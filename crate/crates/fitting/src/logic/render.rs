//! Canonical text rendering, inverse to the parser.
//!
//! Operands are parenthesized exactly when their binding level is below what
//! the position requires, so rendering is minimal and reparsing reproduces
//! the same tree. Canonical spacing: `*`, `^` and `~` are tight; `=`, `&`,
//! `|`, `->` are spaced; commutators are written `[a, b]`; quantifiers as
//! `A x1. body`.

use std::fmt;

use super::{Formula, Term};

// Term binding levels: product < power (^) < atom.
const TERM_PRODUCT: u8 = 1;
const TERM_POWER: u8 = 2;
const TERM_ATOM: u8 = 3;

fn term_level(t: &Term) -> u8 {
    match t {
        Term::Product(_, _) => TERM_PRODUCT,
        Term::Inverse(_) | Term::Conj(_, _) => TERM_POWER,
        Term::Identity | Term::Var(_) | Term::Param(_) | Term::Comm(_, _) => TERM_ATOM,
    }
}

fn fmt_term(t: &Term, min_level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let needs_parens = term_level(t) < min_level;
    if needs_parens {
        write!(f, "(")?;
    }
    match t {
        Term::Identity => write!(f, "1")?,
        Term::Var(k) => write!(f, "x{k}")?,
        Term::Param(k) => write!(f, "p{k}")?,
        Term::Product(a, b) => {
            fmt_term(a, TERM_PRODUCT, f)?;
            write!(f, "*")?;
            fmt_term(b, TERM_POWER, f)?;
        }
        Term::Inverse(a) => {
            fmt_term(a, TERM_POWER, f)?;
            write!(f, "^-1")?;
        }
        Term::Conj(a, b) => {
            fmt_term(a, TERM_POWER, f)?;
            write!(f, "^")?;
            fmt_term(b, TERM_ATOM, f)?;
        }
        Term::Comm(a, b) => {
            write!(f, "[")?;
            fmt_term(a, TERM_PRODUCT, f)?;
            write!(f, ", ")?;
            fmt_term(b, TERM_PRODUCT, f)?;
            write!(f, "]")?;
        }
    }
    if needs_parens {
        write!(f, ")")?;
    }
    Ok(())
}

// Formula binding levels: quantifier < -> < | < & < ~ < equation.
const F_QUANT: u8 = 0;
const F_IMPLIES: u8 = 1;
const F_OR: u8 = 2;
const F_AND: u8 = 3;
const F_NOT: u8 = 4;
const F_ATOM: u8 = 5;

fn formula_level(fm: &Formula) -> u8 {
    match fm {
        Formula::ForAll(_, _) | Formula::Exists(_, _) => F_QUANT,
        Formula::Implies(_, _) => F_IMPLIES,
        Formula::Or(_) => F_OR,
        Formula::And(_) => F_AND,
        Formula::Not(_) => F_NOT,
        Formula::Eq(_, _) => F_ATOM,
    }
}

fn fmt_formula(fm: &Formula, min_level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let needs_parens = formula_level(fm) < min_level;
    if needs_parens {
        write!(f, "(")?;
    }
    match fm {
        Formula::Eq(a, b) => {
            fmt_term(a, TERM_PRODUCT, f)?;
            write!(f, " = ")?;
            fmt_term(b, TERM_PRODUCT, f)?;
        }
        Formula::Not(inner) => {
            write!(f, "~")?;
            // Parenthesize a negated equation: `~x1 = 1` parses fine but
            // reads like a term negation.
            if matches!(**inner, Formula::Eq(_, _)) {
                write!(f, "(")?;
                fmt_formula(inner, F_QUANT, f)?;
                write!(f, ")")?;
            } else {
                fmt_formula(inner, F_NOT, f)?;
            }
        }
        Formula::And(parts) => {
            for (i, part) in parts.iter().enumerate() {
                if i > 0 {
                    write!(f, " & ")?;
                }
                fmt_formula(part, F_AND + 1, f)?;
            }
        }
        Formula::Or(parts) => {
            for (i, part) in parts.iter().enumerate() {
                if i > 0 {
                    write!(f, " | ")?;
                }
                fmt_formula(part, F_OR + 1, f)?;
            }
        }
        Formula::Implies(a, b) => {
            fmt_formula(a, F_IMPLIES + 1, f)?;
            write!(f, " -> ")?;
            // The right side runs to the end of the enclosing scope, so even
            // a quantifier may stand bare here.
            fmt_formula(b, F_QUANT, f)?;
        }
        Formula::ForAll(v, body) => {
            write!(f, "A x{v}. ")?;
            fmt_formula(body, F_QUANT, f)?;
        }
        Formula::Exists(v, body) => {
            write!(f, "E x{v}. ")?;
            fmt_formula(body, F_QUANT, f)?;
        }
    }
    if needs_parens {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(self, TERM_PRODUCT, f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_formula(self, F_QUANT, f)
    }
}

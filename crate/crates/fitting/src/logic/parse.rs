//! Recursive-descent parser for the formula grammar.

use super::{Formula, LogicError, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    One,
    Var(u32),
    Param(u32),
    ForAll,
    Exists,
    Star,
    Caret,
    NegOne,
    Arrow,
    Tilde,
    Amp,
    Pipe,
    Eq,
    Dot,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Tok::One => "1",
            Tok::Var(k) => return write!(f, "x{k}"),
            Tok::Param(k) => return write!(f, "p{k}"),
            Tok::ForAll => "A",
            Tok::Exists => "E",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::NegOne => "-1",
            Tok::Arrow => "->",
            Tok::Tilde => "~",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Eq => "=",
            Tok::Dot => ".",
            Tok::Comma => ",",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
        };
        write!(f, "{s}")
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> LogicError {
    LogicError::Parse { line, col, message: message.into() }
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, LogicError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.bump() else { break };
            let tok = match c {
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '~' => Tok::Tilde,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '=' => Tok::Eq,
                '.' => Tok::Dot,
                ',' => Tok::Comma,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '-' => match self.bump() {
                    Some('>') => Tok::Arrow,
                    Some('1') => Tok::NegOne,
                    _ => return Err(err(line, col, "expected '->' or '-1'")),
                },
                c if c.is_ascii_digit() => {
                    let mut digits = String::from(c);
                    while matches!(self.chars.peek(), Some(d) if d.is_ascii_digit()) {
                        digits.push(self.bump().unwrap());
                    }
                    if digits == "1" {
                        Tok::One
                    } else {
                        return Err(err(
                            line,
                            col,
                            format!("'{digits}' is not a term; the only constant is 1"),
                        ));
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let mut word = String::from(c);
                    while matches!(self.chars.peek(), Some(d) if d.is_ascii_alphanumeric()) {
                        word.push(self.bump().unwrap());
                    }
                    match word.as_str() {
                        "A" => Tok::ForAll,
                        "E" => Tok::Exists,
                        _ => {
                            let (kind, rest) = word.split_at(1);
                            let index: Option<u32> =
                                if rest.is_empty() { None } else { rest.parse().ok() };
                            match (kind, index) {
                                ("x", Some(k)) => Tok::Var(k),
                                ("p", Some(k)) => Tok::Param(k),
                                _ => {
                                    return Err(err(
                                        line,
                                        col,
                                        format!("unknown identifier '{word}'"),
                                    ))
                                }
                            }
                        }
                    }
                }
                other => return Err(err(line, col, format!("unexpected character '{other}'"))),
            };
            out.push((tok, line, col));
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |&(_, l, c)| (l, c))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), LogicError> {
        let (line, col) = self.here();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(err(line, col, format!("expected '{want}', found '{t}'"))),
            None => Err(err(line, col, format!("expected '{want}', found end of input"))),
        }
    }

    fn unexpected<T>(&self, context: &str) -> Result<T, LogicError> {
        let (line, col) = self.here();
        match self.tokens.get(self.pos) {
            Some((t, _, _)) => Err(err(line, col, format!("expected {context}, found '{t}'"))),
            None => Err(err(line, col, format!("expected {context}, found end of input"))),
        }
    }

    // formula := quantified | implication
    fn formula(&mut self) -> Result<Formula, LogicError> {
        if matches!(self.peek(), Some(Tok::ForAll) | Some(Tok::Exists)) {
            return self.quantified();
        }
        self.implication()
    }

    fn quantified(&mut self) -> Result<Formula, LogicError> {
        let quant = self.next().unwrap();
        let (line, col) = self.here();
        let var = match self.next() {
            Some(Tok::Var(k)) => k,
            Some(t) => return Err(err(line, col, format!("expected a variable, found '{t}'"))),
            None => return Err(err(line, col, "expected a variable, found end of input")),
        };
        self.expect(Tok::Dot)?;
        let body = self.formula()?;
        Ok(match quant {
            Tok::ForAll => Formula::ForAll(var, Box::new(body)),
            _ => Formula::Exists(var, Box::new(body)),
        })
    }

    // implication := disjunction ('->' implication)?   (right-associative)
    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if matches!(self.peek(), Some(Tok::Arrow)) {
            self.next();
            let rhs = self.implication()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    // disjunction := conjunction ('|' conjunction)*
    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut parts = vec![self.conjunction()?];
        while matches!(self.peek(), Some(Tok::Pipe)) {
            self.next();
            parts.push(self.conjunction()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Formula::Or(parts) })
    }

    // conjunction := negation ('&' negation)*
    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut parts = vec![self.negation()?];
        while matches!(self.peek(), Some(Tok::Amp)) {
            self.next();
            parts.push(self.negation()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Formula::And(parts) })
    }

    // negation := '~' negation | atom_formula
    fn negation(&mut self) -> Result<Formula, LogicError> {
        if matches!(self.peek(), Some(Tok::Tilde)) {
            self.next();
            return Ok(Formula::Not(Box::new(self.negation()?)));
        }
        self.atom_formula()
    }

    // atom_formula := '(' formula ')' | quantified | term '=' term
    fn atom_formula(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(Tok::LParen) => {
                // Could be a parenthesized formula or a parenthesized term
                // opening an equation; try the formula reading first and
                // fall back on the term reading.
                let saved = self.pos;
                self.next();
                if let Ok(inner) = self.formula() {
                    if matches!(self.peek(), Some(Tok::RParen)) {
                        self.next();
                        // A parenthesized formula is not followed by term
                        // operators; if it is, reparse as a term.
                        if !matches!(
                            self.peek(),
                            Some(Tok::Star) | Some(Tok::Caret) | Some(Tok::Eq)
                        ) {
                            return Ok(inner);
                        }
                    }
                }
                self.pos = saved;
                self.equation()
            }
            Some(Tok::ForAll) | Some(Tok::Exists) => self.quantified(),
            _ => self.equation(),
        }
    }

    fn equation(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.term()?;
        self.expect(Tok::Eq)?;
        let rhs = self.term()?;
        Ok(Formula::Eq(lhs, rhs))
    }

    // term := power ('*' power)*   (left-associative)
    fn term(&mut self) -> Result<Term, LogicError> {
        let mut acc = self.power()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            let rhs = self.power()?;
            acc = Term::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    // power := atom_term ('^' ('-1' | atom_term))*   (left-associative)
    fn power(&mut self) -> Result<Term, LogicError> {
        let mut acc = self.atom_term()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            if matches!(self.peek(), Some(Tok::NegOne)) {
                self.next();
                acc = Term::Inverse(Box::new(acc));
            } else {
                let exponent = self.atom_term()?;
                acc = Term::Conj(Box::new(acc), Box::new(exponent));
            }
        }
        Ok(acc)
    }

    // atom_term := '1' | variable | parameter | '[' term ',' term ']'
    //            | '(' term ')'
    fn atom_term(&mut self) -> Result<Term, LogicError> {
        match self.peek() {
            Some(Tok::One) => {
                self.next();
                Ok(Term::Identity)
            }
            Some(Tok::Var(k)) => {
                let k = *k;
                self.next();
                Ok(Term::Var(k))
            }
            Some(Tok::Param(k)) => {
                let k = *k;
                self.next();
                Ok(Term::Param(k))
            }
            Some(Tok::LBracket) => {
                self.next();
                let a = self.term()?;
                self.expect(Tok::Comma)?;
                let b = self.term()?;
                self.expect(Tok::RBracket)?;
                Ok(Term::Comm(Box::new(a), Box::new(b)))
            }
            Some(Tok::LParen) => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => self.unexpected("a term"),
        }
    }
}

/// Parses a formula. Free variables are permitted; evaluation decides
/// whether they are acceptable.
pub fn parse(text: &str) -> Result<Formula, LogicError> {
    let tokens = Lexer::new(text).tokens()?;
    let end = tokens
        .last()
        .map_or((1, 1), |&(_, l, c)| (l, c + 1));
    let mut parser = Parser { tokens, pos: 0, end };
    let formula = parser.formula()?;
    if parser.pos != parser.tokens.len() {
        let (line, col) = parser.here();
        let (tok, _, _) = &parser.tokens[parser.pos];
        return Err(err(line, col, format!("unexpected trailing '{tok}'")));
    }
    Ok(formula)
}

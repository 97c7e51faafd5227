//! Text formats for ingesting and emitting groups.
//!
//! Cayley table file: line 1 is the order `n`; lines 2..n+1 hold `n`
//! space-separated element indices each (row `g` lists the products `g·h`).
//! Elements are 0-indexed and index 0 must be the identity.
//!
//! Permutation file: line 1 is the degree `d`; each following line is one
//! generator as `d` space-separated images, 0-indexed.
//!
//! Both formats reject trailing garbage.

use super::{FiniteGroup, GroupError, PermutationSpec, DEFAULT_MAX_ORDER};

fn parse_row(line_no: usize, line: &str, expected: usize) -> Result<Vec<usize>, GroupError> {
    let entries: Result<Vec<usize>, _> =
        line.split_whitespace().map(|tok| tok.parse::<usize>()).collect();
    let entries = entries.map_err(|e| GroupError::Parse {
        line: line_no,
        message: format!("invalid entry: {e}"),
    })?;
    if entries.len() != expected {
        return Err(GroupError::Parse {
            line: line_no,
            message: format!("expected {expected} entries, found {}", entries.len()),
        });
    }
    Ok(entries)
}

fn reject_trailing(lines: &[(usize, &str)], consumed: usize) -> Result<(), GroupError> {
    if let Some(&(line_no, _)) = lines.get(consumed) {
        return Err(GroupError::Parse { line: line_no, message: "trailing garbage".into() });
    }
    Ok(())
}

/// Non-blank lines paired with their 1-based line numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub fn read_cayley_table(text: &str) -> Result<FiniteGroup, GroupError> {
    let lines = significant_lines(text);
    let &(first_no, first) = lines
        .first()
        .ok_or(GroupError::Parse { line: 1, message: "empty file".into() })?;
    let order: usize = first.parse().map_err(|e| GroupError::Parse {
        line: first_no,
        message: format!("invalid order: {e}"),
    })?;
    if order == 0 {
        return Err(GroupError::Parse { line: first_no, message: "order must be positive".into() });
    }
    if lines.len() < order + 1 {
        return Err(GroupError::Parse {
            line: lines.last().map_or(first_no, |&(n, _)| n),
            message: format!("expected {order} table rows, found {}", lines.len() - 1),
        });
    }
    let mut rows = Vec::with_capacity(order);
    for i in 0..order {
        let (line_no, line) = lines[i + 1];
        rows.push(parse_row(line_no, line, order)?);
    }
    reject_trailing(&lines, order + 1)?;
    let group = FiniteGroup::from_cayley_table(rows)?;
    if group.identity() != 0 {
        return Err(GroupError::Parse {
            line: 2,
            message: format!("identity must be element 0, found {}", group.identity()),
        });
    }
    Ok(group)
}

pub fn read_permutations(text: &str) -> Result<FiniteGroup, GroupError> {
    read_permutations_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn read_permutations_with_limit(
    text: &str,
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    let lines = significant_lines(text);
    let &(first_no, first) = lines
        .first()
        .ok_or(GroupError::Parse { line: 1, message: "empty file".into() })?;
    let degree: usize = first.parse().map_err(|e| GroupError::Parse {
        line: first_no,
        message: format!("invalid degree: {e}"),
    })?;
    if degree == 0 {
        return Err(GroupError::Parse {
            line: first_no,
            message: "degree must be positive".into(),
        });
    }
    let mut generators = Vec::new();
    for &(line_no, line) in &lines[1..] {
        generators.push(parse_row(line_no, line, degree)?);
    }
    let spec = PermutationSpec::new(degree, generators)?;
    FiniteGroup::from_permutations_with_limit(&spec, max_order)
}

/// Emits the Cayley table format; parsing the result reconstructs an
/// identical table when the identity is element 0.
pub fn write_cayley_table(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| group.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_permutations(spec: &PermutationSpec) -> String {
    let mut out = String::new();
    out.push_str(&spec.degree.to_string());
    out.push('\n');
    for gen in &spec.generators {
        let row: Vec<String> = gen.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

//! Commutator subgroups and descending series, each computed two ways.
//!
//! For normal subgroups H = ⟨A⟩ and K = ⟨B⟩ of G, the commutator subgroup
//! [H, K] is generated by the commutators of conjugates of the generators,
//! `{[aᵅ, bᵝ] : a ∈ A, b ∈ B, α, β ∈ G}` — so it can be computed without
//! touching all |H|·|K| member pairs. The all-pairs closure is kept as a
//! separate definitional route ([`commutator_subgroup_all_pairs`]) so the two
//! can be checked against each other.
//!
//! The lower central series N ⊇ N¹ ⊇ N², with N¹ = [N, N] and
//! Nⁿ⁺¹ = [Nⁿ, N], and the derived series with N⁽ⁿ⁺¹⁾ = [N⁽ⁿ⁾, N⁽ⁿ⁾], are
//! likewise computed twice: once by repeated commutator subgroups, and once
//! as closures of the evaluated commutator words over conjugates of the
//! generators. A disagreement between the two routes is an error, never
//! silently ignored.

use thiserror::Error;

use crate::group::{closure_reduced, FiniteGroup, Subgroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("{0} is not normal in the parent group")]
    NotNormal(&'static str),
    #[error("{kind:?} series: word-generator route disagrees with the direct route at term {index}")]
    WordPathMismatch { kind: SeriesKind, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// A computed descending series.
///
/// `terms[0]` is the subgroup itself; terms strictly descend until the
/// series stabilizes. When it stabilizes at a non-trivial subgroup the first
/// repeated term is kept, so the repetition is visible. `class_or_length` is
/// the index of the first trivial term, absent when the series stalls above
/// the trivial subgroup.
#[derive(Debug, Clone)]
pub struct SeriesReport<'g> {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup<'g>>,
    pub stabilized: bool,
    pub class_or_length: Option<usize>,
}

/// Both computation routes for a series, term by term.
#[derive(Debug, Clone)]
pub struct SeriesPaths<'g> {
    pub kind: SeriesKind,
    pub direct: Vec<Subgroup<'g>>,
    pub word: Vec<Subgroup<'g>>,
}

/// [H, K] for H, K normal in G, via the conjugated-generator set.
///
/// Conjugates `aᵅ` are enumerated as the conjugacy class of `a`, one value
/// each, rather than over all α in G.
pub fn commutator_subgroup<'g>(
    group: &'g FiniteGroup,
    h: &Subgroup<'g>,
    k: &Subgroup<'g>,
) -> Result<Subgroup<'g>, SeriesError> {
    if !h.is_normal() {
        return Err(SeriesError::NotNormal("left subgroup"));
    }
    if !k.is_normal() {
        return Err(SeriesError::NotNormal("right subgroup"));
    }
    Ok(commutator_subgroup_unchecked(group, h, k))
}

fn commutator_subgroup_unchecked<'g>(
    group: &'g FiniteGroup,
    h: &Subgroup<'g>,
    k: &Subgroup<'g>,
) -> Subgroup<'g> {
    let mut seen = vec![false; group.order()];
    let mut values = Vec::new();
    for &a in h.generators() {
        for &ac in group.conjugacy_class(a) {
            for &b in k.generators() {
                for &bc in group.conjugacy_class(b) {
                    let c = group.commutator(ac, bc);
                    if !seen[c] {
                        seen[c] = true;
                        values.push(c);
                    }
                }
            }
        }
    }
    closure_reduced(group, values)
}

/// The definitional route: closure of every pairwise commutator of members.
pub fn commutator_subgroup_all_pairs<'g>(
    group: &'g FiniteGroup,
    h: &Subgroup<'g>,
    k: &Subgroup<'g>,
) -> Subgroup<'g> {
    let mut seen = vec![false; group.order()];
    let mut values = Vec::new();
    for &a in h.members() {
        for &b in k.members() {
            let c = group.commutator(a, b);
            if !seen[c] {
                seen[c] = true;
                values.push(c);
            }
        }
    }
    closure_reduced(group, values)
}

/// All distinct conjugates of the generators of `n`, ascending. Every word
/// value over this set is a word value over conjugated generators and vice
/// versa, since conjugates of a generator are exactly its conjugacy class.
fn conjugated_generator_set(group: &FiniteGroup, n: &Subgroup<'_>) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for &b in n.generators() {
        for &c in group.conjugacy_class(b) {
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The set of values of the weight-(k+1) left-normed word, given the value
/// set of the weight-k word: every longer word value is a commutator of a
/// shorter one with one more conjugated generator, and every such commutator
/// arises from some argument tuple.
fn extend_left_normed_values(
    group: &FiniteGroup,
    current: &[usize],
    base: &[usize],
) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for &v in current {
        for &d in base {
            let c = group.commutator(v, d);
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

fn pairwise_commutator_values(group: &FiniteGroup, left: &[usize], right: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for &a in left {
        for &b in right {
            let c = group.commutator(a, b);
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

fn series_paths_inner<'g>(
    group: &'g FiniteGroup,
    n: &Subgroup<'g>,
    kind: SeriesKind,
) -> Result<SeriesPaths<'g>, SeriesError> {
    if !n.is_normal() {
        return Err(SeriesError::NotNormal("series subgroup"));
    }
    let base = conjugated_generator_set(group, n);

    let mut direct: Vec<Subgroup<'g>> = vec![n.clone()];
    let mut word: Vec<Subgroup<'g>> = vec![n.clone()];
    // Value set of the current word (weight k, or depth k for the derived
    // series) over the conjugated generators.
    let mut values = pairwise_commutator_values(group, &base, &base);

    loop {
        let prev = direct.last().unwrap();
        if prev.is_trivial() {
            break;
        }
        let next = match kind {
            SeriesKind::LowerCentral => commutator_subgroup_unchecked(group, prev, n),
            SeriesKind::Derived => commutator_subgroup_unchecked(group, prev, prev),
        };
        word.push(closure_reduced(group, values.iter().copied()));
        let stabilized = &next == prev;
        direct.push(next);
        if stabilized {
            break;
        }
        values = match kind {
            SeriesKind::LowerCentral => extend_left_normed_values(group, &values, &base),
            SeriesKind::Derived => pairwise_commutator_values(group, &values, &values),
        };
        // Strict descent bounds the series length by the subgroup order.
        assert!(direct.len() <= n.order() + 1, "series failed to stabilize");
    }

    Ok(SeriesPaths { kind, direct, word })
}

/// Both routes for the lower central series of `n`, without comparing them.
pub fn lower_central_series_paths<'g>(
    group: &'g FiniteGroup,
    n: &Subgroup<'g>,
) -> Result<SeriesPaths<'g>, SeriesError> {
    series_paths_inner(group, n, SeriesKind::LowerCentral)
}

/// Both routes for the derived series of `n`, without comparing them.
pub fn derived_series_paths<'g>(
    group: &'g FiniteGroup,
    n: &Subgroup<'g>,
) -> Result<SeriesPaths<'g>, SeriesError> {
    series_paths_inner(group, n, SeriesKind::Derived)
}

fn report_from_paths(paths: SeriesPaths<'_>) -> Result<SeriesReport<'_>, SeriesError> {
    for (index, (d, w)) in paths.direct.iter().zip(&paths.word).enumerate() {
        if d != w {
            return Err(SeriesError::WordPathMismatch { kind: paths.kind, index });
        }
    }
    let terms = paths.direct;
    let class_or_length = terms.iter().position(|t| t.is_trivial());
    Ok(SeriesReport { kind: paths.kind, terms, stabilized: true, class_or_length })
}

/// Lower central series of `n` (normal in `group`), with the word-generator
/// route checked against the direct route term by term.
pub fn lower_central_series<'g>(
    group: &'g FiniteGroup,
    n: &Subgroup<'g>,
) -> Result<SeriesReport<'g>, SeriesError> {
    report_from_paths(lower_central_series_paths(group, n)?)
}

/// Derived series of `n` (normal in `group`), dual-route checked.
pub fn derived_series<'g>(
    group: &'g FiniteGroup,
    n: &Subgroup<'g>,
) -> Result<SeriesReport<'g>, SeriesError> {
    report_from_paths(derived_series_paths(group, n)?)
}

/// Least k with the k-th lower central term trivial, or `None` when the
/// series stalls above the trivial subgroup.
pub fn nilpotency_class(
    group: &FiniteGroup,
    n: &Subgroup<'_>,
) -> Result<Option<usize>, SeriesError> {
    Ok(lower_central_series(group, n)?.class_or_length)
}

pub fn derived_length(
    group: &FiniteGroup,
    n: &Subgroup<'_>,
) -> Result<Option<usize>, SeriesError> {
    Ok(derived_series(group, n)?.class_or_length)
}

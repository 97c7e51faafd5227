//! The Fitting subgroup, the soluble radical, and their cross-checks.
//!
//! For a finite group the Fitting subgroup — the join of all normal
//! nilpotent subgroups — consists exactly of the elements whose normal
//! closure is nilpotent, and the soluble radical likewise collects the
//! elements with soluble normal closure. The elementwise route is the
//! default; [`oracle_fitting`] and [`oracle_radical`] recompute the same
//! subgroups directly from the definition by enumerating every normal
//! subgroup as a closure of a union of conjugacy classes, so the two
//! characterizations can be checked against each other on concrete groups.

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::group::{closure_reduced, normal_closure, FiniteGroup, Subgroup};
use crate::series::{derived_length, nilpotency_class, SeriesError};

/// Cap on the number of class-union candidates the oracle will enumerate.
pub const ORACLE_UNION_BUDGET: u64 = 1 << 20;

/// Subset enumeration cap for [`bound_profile`]; beyond it, seeded sampling.
pub const SUBSET_BUDGET: u64 = 1_000_000;

/// Number of sampled subsets per size once the exhaustive budget is blown.
pub const SUBSET_SAMPLES: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RadicalError {
    #[error("oracle infeasible: {candidates} class-union candidates exceed the budget of {budget}")]
    OracleInfeasible { candidates: u64, budget: u64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalMethod {
    Elementwise,
    Oracle,
}

/// A computed radical subgroup together with per-member witnesses.
///
/// `witness_classes` maps every member to the nilpotency class (Fitting) or
/// derived length (radical) of its normal closure; elements outside the
/// subgroup have no entry.
#[derive(Debug, Clone)]
pub struct RadicalResult<'g> {
    pub subgroup: Subgroup<'g>,
    pub witness_classes: BTreeMap<usize, usize>,
    pub method: RadicalMethod,
}

impl RadicalResult<'_> {
    /// Largest witness value, i.e. the largest class (or derived length) of
    /// any nilpotent (soluble) normal closure of a single element. Zero for
    /// a trivial subgroup.
    pub fn max_witness(&self) -> usize {
        self.witness_classes.values().copied().max().unwrap_or(0)
    }
}

fn elementwise_radical<'g>(
    group: &'g FiniteGroup,
    measure: impl Fn(&Subgroup<'g>) -> Option<usize> + Sync,
) -> RadicalResult<'g> {
    // The closure of g and of any conjugate of g coincide, so one series
    // computation per conjugacy class suffices.
    let reps = group.class_representatives();
    let per_class: Vec<Option<usize>> = reps
        .par_iter()
        .map(|&rep| measure(&normal_closure(group, &[rep])))
        .collect();

    let mut witness_classes = BTreeMap::new();
    let mut members = Vec::new();
    for (class, value) in group.conjugacy_classes().iter().zip(&per_class) {
        if let Some(v) = *value {
            for &m in class {
                witness_classes.insert(m, v);
                members.push(m);
            }
        }
    }
    members.sort_unstable();
    let subgroup = closure_reduced(group, members.iter().copied());

    // The element set must already be a subgroup, and a normal one.
    assert_eq!(
        subgroup.members(),
        &members[..],
        "elementwise radical member set is not closed"
    );
    assert!(subgroup.is_normal(), "elementwise radical is not normal");
    RadicalResult { subgroup, witness_classes, method: RadicalMethod::Elementwise }
}

/// The set of elements whose normal closure is nilpotent. The result is
/// verified to be a normal subgroup that is itself nilpotent. Its own class
/// can exceed the largest witness class (in the quaternion group every
/// single-element closure is abelian while the whole group has class 2),
/// but never undershoots it.
pub fn fitting_subgroup(group: &FiniteGroup) -> RadicalResult<'_> {
    let result = elementwise_radical(group, |n| {
        nilpotency_class(group, n).expect("normal closure is normal")
    });
    let own_class = nilpotency_class(group, &result.subgroup)
        .expect("radical is normal")
        .expect("the subgroup of nilpotent-closure elements must be nilpotent");
    assert!(
        own_class >= result.max_witness(),
        "class of the join undershoots a witness class"
    );
    result
}

/// The set of elements whose normal closure is soluble, verified normal and
/// soluble.
pub fn soluble_radical(group: &FiniteGroup) -> RadicalResult<'_> {
    let result = elementwise_radical(group, |n| {
        derived_length(group, n).expect("normal closure is normal")
    });
    derived_length(group, &result.subgroup)
        .expect("radical is normal")
        .expect("the subgroup of soluble-closure elements must be soluble");
    result
}

/// Every normal subgroup, enumerated as closures of unions of conjugacy
/// classes containing the identity class.
pub fn normal_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup<'_>>, RadicalError> {
    let classes = group.conjugacy_classes();
    let nontrivial = classes.len() - 1;
    if nontrivial >= 63 || (1u64 << nontrivial) > ORACLE_UNION_BUDGET {
        return Err(RadicalError::OracleInfeasible {
            candidates: if nontrivial >= 63 { u64::MAX } else { 1 << nontrivial },
            budget: ORACLE_UNION_BUDGET,
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << nontrivial) {
        let mut union = Vec::new();
        for bit in 0..nontrivial {
            if mask & (1 << bit) != 0 {
                union.extend_from_slice(&classes[bit + 1]);
            }
        }
        union.sort_unstable();
        let sub = closure_reduced(group, union);
        if seen.insert(sub.membership_key()) {
            out.push(sub);
        }
    }
    Ok(out)
}

fn oracle_radical_inner<'g>(
    group: &'g FiniteGroup,
    keep: impl Fn(&Subgroup<'g>) -> bool,
) -> Result<Subgroup<'g>, RadicalError> {
    let normals = normal_subgroups(group)?;
    let mut union: Vec<usize> = Vec::new();
    for sub in normals.iter().filter(|s| keep(s)) {
        union.extend_from_slice(sub.members());
    }
    union.sort_unstable();
    union.dedup();
    Ok(closure_reduced(group, union))
}

/// Join of all normal nilpotent subgroups, straight from the definition.
pub fn oracle_fitting(group: &FiniteGroup) -> Result<Subgroup<'_>, RadicalError> {
    oracle_radical_inner(group, |sub| {
        nilpotency_class(group, sub).expect("enumerated subgroup is normal").is_some()
    })
}

/// Join of all normal soluble subgroups, straight from the definition.
pub fn oracle_radical(group: &FiniteGroup) -> Result<Subgroup<'_>, RadicalError> {
    oracle_radical_inner(group, |sub| {
        derived_length(group, sub).expect("enumerated subgroup is normal").is_some()
    })
}

/// Nilpotency-class bounds for normal closures of small subsets of the
/// Fitting subgroup.
///
/// `d_of_m[i]` is the largest nilpotency class of the normal closure of any
/// subset of the Fitting subgroup of size at most `m_values[i]`; the vector
/// is nondecreasing by construction. Exhaustive while the subset count stays
/// within [`SUBSET_BUDGET`], seeded sampling (flagged) beyond that.
#[derive(Debug, Clone)]
pub struct BoundProfile {
    pub m_values: Vec<usize>,
    pub d_of_m: Vec<usize>,
    pub sampled: Vec<bool>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u64;
    for i in 0..k.min(n - k) {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

pub fn bound_profile(
    group: &FiniteGroup,
    fitting: &RadicalResult<'_>,
    m_max: usize,
    seed: u64,
) -> BoundProfile {
    let members = fitting.subgroup.members();
    let mut profile =
        BoundProfile { m_values: Vec::new(), d_of_m: Vec::new(), sampled: Vec::new() };
    let mut best = 0usize;

    let class_of_closure = |subset: &[usize]| -> usize {
        nilpotency_class(group, &normal_closure(group, subset))
            .expect("normal closure is normal")
            .expect("normal closure of a Fitting subset is nilpotent")
    };

    for m in 1..=m_max {
        let mut sampled = false;
        if fitting.subgroup.is_trivial() {
            // Only the identity is available; every closure is trivial.
        } else if binomial(members.len() as u64, m as u64) <= SUBSET_BUDGET {
            for subset in members.iter().copied().combinations(m) {
                best = best.max(class_of_closure(&subset));
            }
        } else {
            sampled = true;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (m as u64).wrapping_mul(0x9e37_79b9));
            for _ in 0..SUBSET_SAMPLES {
                let subset: Vec<usize> =
                    members.choose_multiple(&mut rng, m).copied().collect();
                best = best.max(class_of_closure(&subset));
            }
        }
        profile.m_values.push(m);
        profile.d_of_m.push(best);
        profile.sampled.push(sampled);
    }
    profile
}

/// Smallest `n <= n_max` such that the depth-`n` Engel word vanishes on all
/// pairs, or `None`. Once a pair's Engel chain hits the identity it stays
/// there, so the group-wide answer is the largest first-vanishing depth over
/// all pairs.
pub fn engel_classify(group: &FiniteGroup, n_max: usize) -> Option<usize> {
    let mut worst = 0usize;
    for x in group.elements() {
        for y in group.elements() {
            let mut chain = group.commutator(x, y);
            let mut depth = 1;
            while chain != group.identity() {
                if depth >= n_max {
                    return None;
                }
                chain = group.commutator(chain, y);
                depth += 1;
            }
            worst = worst.max(depth);
        }
    }
    Some(worst.max(1))
}

//! Finite groups as dense multiplication tables, and subgroup machinery.
//!
//! Elements are integer indices into precomputed tables, so every product,
//! inverse, conjugate and commutator is a table lookup. All construction
//! paths validate the group axioms before a [`FiniteGroup`] exists; after
//! construction both groups and subgroups are immutable and safe to share
//! across threads.

mod io;
mod subgroup;

pub use io::{read_cayley_table, read_permutations, write_cayley_table, write_permutations};
pub use subgroup::Subgroup;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default cap on the order of constructed groups. Dense tables are
/// quadratic in the order, so anything much larger stops being desk-scale.
pub const DEFAULT_MAX_ORDER: usize = 5040;

/// Orders up to this bound get their multiplication table checked for
/// associativity over every triple; larger tables are spot-checked.
const EXHAUSTIVE_ASSOC_ORDER: usize = 256;

/// Number of random triples tested for associativity above the exhaustive
/// bound.
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// Elements never exceed this, so table entries fit in `u16`.
const ABSOLUTE_MAX_ORDER: usize = u16::MAX as usize;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("multiplication table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry at ({row}, {col}) is {value}, out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("row {index} of the multiplication table is not a permutation")]
    RowNotPermutation { index: usize },
    #[error("column {index} of the multiplication table is not a permutation")]
    ColumnNotPermutation { index: usize },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("associativity fails on the triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {index} is not a bijection on 0..{degree}")]
    NotBijective { index: usize, degree: usize },
    #[error("generator {index} has {len} images, expected degree {degree}")]
    DegreeMismatch { index: usize, len: usize, degree: usize },
    #[error("group order exceeds the configured limit of {limit}")]
    OrderLimitExceeded { limit: usize },
    #[error("{context}: element index {value} out of range for order {order}")]
    ElementOutOfRange { context: &'static str, value: usize, order: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A permutation group given by generators, each as an image array on
/// `0..degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermutationSpec {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (index, gen) in generators.iter().enumerate() {
            if gen.len() != degree {
                return Err(GroupError::DegreeMismatch { index, len: gen.len(), degree });
            }
            let mut seen = vec![false; degree];
            for &image in gen {
                if image >= degree || seen[image] {
                    return Err(GroupError::NotBijective { index, degree });
                }
                seen[image] = true;
            }
        }
        Ok(PermutationSpec { degree, generators })
    }
}

/// A finite group with precomputed multiplication and inverse tables.
///
/// Elements are the indices `0..order`. The tables are validated at
/// construction: identity and inverses exist, every row and column is a
/// permutation, and associativity holds (exhaustively up to order 256, on
/// seeded random triples above that).
pub struct FiniteGroup {
    order: usize,
    mul_table: Vec<u16>,
    identity: usize,
    inv_table: Vec<u16>,
    labels: Option<Vec<String>>,
    classes: OnceLock<ClassData>,
}

struct ClassData {
    /// Conjugacy classes, each sorted ascending; ordered by smallest member.
    classes: Vec<Vec<usize>>,
    /// Map element -> index into `classes`.
    class_of: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table (`rows[a][b]` = a·b).
    ///
    /// The identity may sit at any index; file-based ingestion additionally
    /// requires it at index 0 (see [`read_cayley_table`]).
    pub fn from_cayley_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_cayley_table_with_labels(rows, None)
    }

    pub fn from_cayley_table_with_labels(
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        if order > ABSOLUTE_MAX_ORDER {
            return Err(GroupError::OrderLimitExceeded { limit: ABSOLUTE_MAX_ORDER });
        }
        let mut mul_table = vec![0u16; order * order];
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare { row, len: entries.len(), order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
                mul_table[row * order + col] = value as u16;
            }
        }
        Self::validate_and_build(order, mul_table, labels)
    }

    fn validate_and_build(
        order: usize,
        mul_table: Vec<u16>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        // Latin square: every row and column a permutation of 0..order.
        let mut seen = vec![false; order];
        for row in 0..order {
            seen.fill(false);
            for col in 0..order {
                let v = mul_table[row * order + col] as usize;
                if seen[v] {
                    return Err(GroupError::RowNotPermutation { index: row });
                }
                seen[v] = true;
            }
        }
        for col in 0..order {
            seen.fill(false);
            for row in 0..order {
                let v = mul_table[row * order + col] as usize;
                if seen[v] {
                    return Err(GroupError::ColumnNotPermutation { index: col });
                }
                seen[v] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| {
                    mul_table[e * order + x] as usize == x && mul_table[x * order + e] as usize == x
                })
            })
            .ok_or(GroupError::NoIdentity)?;

        let mut inv_table = vec![0u16; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| {
                    mul_table[x * order + y] as usize == identity
                        && mul_table[y * order + x] as usize == identity
                })
                .ok_or(GroupError::NoInverse { element: x })?;
            inv_table[x] = y as u16;
        }

        let assoc = |a: usize, b: usize, c: usize| {
            let ab = mul_table[a * order + b] as usize;
            let bc = mul_table[b * order + c] as usize;
            mul_table[ab * order + c] == mul_table[a * order + bc]
        };
        if order <= EXHAUSTIVE_ASSOC_ORDER {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0a55 ^ order as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.gen_range(0..order);
                let b = rng.gen_range(0..order);
                let c = rng.gen_range(0..order);
                if !assoc(a, b, c) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }

        if let Some(ref l) = labels {
            debug_assert_eq!(l.len(), order);
        }
        Ok(FiniteGroup { order, mul_table, identity, inv_table, labels, classes: OnceLock::new() })
    }

    /// Enumerates the permutation group generated by `spec` and builds its
    /// dense table. Elements are indexed in breadth-first discovery order
    /// starting from the identity, so construction is deterministic.
    pub fn from_permutations(spec: &PermutationSpec) -> Result<Self, GroupError> {
        Self::from_permutations_with_limit(spec, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutations_with_limit(
        spec: &PermutationSpec,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        let degree = spec.degree;
        let identity_perm: Vec<u16> = (0..degree as u16).collect();
        let gens: Vec<Vec<u16>> = spec
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| x as u16).collect())
            .collect();

        let mut index_of = std::collections::HashMap::new();
        let mut perms: Vec<Vec<u16>> = vec![identity_perm.clone()];
        index_of.insert(identity_perm, 0usize);
        let mut queue = 0usize;
        while queue < perms.len() {
            let current = perms[queue].clone();
            queue += 1;
            for gen in &gens {
                // Right action: (p·g)(x) = g(p(x)).
                let product: Vec<u16> = current.iter().map(|&x| gen[x as usize]).collect();
                if !index_of.contains_key(&product) {
                    if perms.len() >= max_order.min(ABSOLUTE_MAX_ORDER) {
                        return Err(GroupError::OrderLimitExceeded {
                            limit: max_order.min(ABSOLUTE_MAX_ORDER),
                        });
                    }
                    index_of.insert(product.clone(), perms.len());
                    perms.push(product);
                }
            }
        }

        let order = perms.len();
        let mut mul_table = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let product: Vec<u16> = perms[a].iter().map(|&x| perms[b][x as usize]).collect();
                mul_table[a * order + b] = index_of[&product] as u16;
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::validate_and_build(order, mul_table, Some(labels))
    }

    /// Componentwise product of two groups; element `(a, b)` gets index
    /// `a * other.order() + b`, and labels pair the factor labels.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self, GroupError> {
        self.direct_product_with_limit(other, DEFAULT_MAX_ORDER)
    }

    pub fn direct_product_with_limit(
        &self,
        other: &FiniteGroup,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        let order = self
            .order
            .checked_mul(other.order)
            .filter(|&n| n <= max_order.min(ABSOLUTE_MAX_ORDER))
            .ok_or(GroupError::OrderLimitExceeded { limit: max_order.min(ABSOLUTE_MAX_ORDER) })?;
        let n2 = other.order;
        let mut mul_table = vec![0u16; order * order];
        for a1 in 0..self.order {
            for b1 in 0..n2 {
                let x = a1 * n2 + b1;
                for a2 in 0..self.order {
                    for b2 in 0..n2 {
                        let y = a2 * n2 + b2;
                        mul_table[x * order + y] =
                            (self.mul(a1, a2) * n2 + other.mul(b1, b2)) as u16;
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|x| format!("({},{})", self.label(x / n2), other.label(x % n2)))
            .collect();
        Self::validate_and_build(order, mul_table, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inv_table[a] as usize
    }

    /// `g` conjugated by `h`: h⁻¹·g·h.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        let hg = self.mul(self.inverse(h), g);
        self.mul(hg, h)
    }

    /// a⁻¹·b⁻¹·a·b.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let left = self.mul(self.inverse(a), self.inverse(b));
        self.mul(left, self.mul(a, b))
    }

    /// Display label for an element; falls back to the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; self.order];
            let mut classes = Vec::new();
            for g in 0..self.order {
                if class_of[g] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut members = Vec::new();
                let mut seen = vec![false; self.order];
                for h in 0..self.order {
                    let c = self.conjugate(g, h);
                    if !seen[c] {
                        seen[c] = true;
                        members.push(c);
                    }
                }
                members.sort_unstable();
                for &m in &members {
                    class_of[m] = id;
                }
                classes.push(members);
            }
            ClassData { classes, class_of }
        })
    }

    /// The conjugacy class of `g`, sorted ascending.
    pub fn conjugacy_class(&self, g: usize) -> &[usize] {
        let data = self.class_data();
        &data.classes[data.class_of[g] as usize]
    }

    /// All conjugacy classes, ordered by smallest member (so the identity
    /// class comes first).
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.class_data().classes
    }

    pub fn class_index(&self, g: usize) -> usize {
        self.class_data().class_of[g] as usize
    }

    /// One representative per conjugacy class: the smallest member.
    pub fn class_representatives(&self) -> Vec<usize> {
        self.conjugacy_classes().iter().map(|c| c[0]).collect()
    }

    /// Conjugator representatives for `g`: elements `h` realising each
    /// distinct conjugate of `g` exactly once, in ascending order of `h`.
    /// Two conjugators give the same conjugate exactly when they lie in the
    /// same right coset of the centralizer, so this enumerates coset
    /// representatives without building the centralizer.
    pub fn conjugator_representatives(&self, g: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for h in 0..self.order {
            let c = self.conjugate(g, h);
            if !seen[c] {
                seen[c] = true;
                reps.push(h);
            }
        }
        reps
    }

    /// Conjugator representatives for a whole base tuple: one `h` per
    /// distinct joint value of `(b₁ʰ, …, bₖʰ)`. The joint value is constant
    /// exactly on right cosets of the intersection of the centralizers.
    pub fn joint_conjugator_representatives(&self, bases: &[usize]) -> Vec<usize> {
        if bases.is_empty() {
            return vec![self.identity];
        }
        if bases.len() == 1 {
            return self.conjugator_representatives(bases[0]);
        }
        let mut seen = std::collections::HashSet::new();
        let mut reps = Vec::new();
        for h in 0..self.order {
            let joint: Vec<usize> = bases.iter().map(|&b| self.conjugate(b, h)).collect();
            if seen.insert(joint) {
                reps.push(h);
            }
        }
        reps
    }
}

/// Cycle notation on 0-based points, e.g. `(0 1 2)(3 4)`; the identity
/// renders as `()`.
fn cycle_notation(perm: &[u16]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut point = start;
        let mut first = true;
        while !seen[point] {
            seen[point] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&point.to_string());
            first = false;
            point = perm[point] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// The subgroup generated by `elems`: fixed-point closure under products.
/// The given elements (deduplicated, identity dropped) are kept as the
/// stored generator list.
pub fn closure<'g>(group: &'g FiniteGroup, elems: &[usize]) -> Subgroup<'g> {
    let mut gens: Vec<usize> = Vec::new();
    for &e in elems {
        if e != group.identity() && !gens.contains(&e) {
            gens.push(e);
        }
    }
    let members = close_under_products(group, &gens);
    Subgroup::from_parts(group, members, gens)
}

/// Closure over a (possibly large) candidate generating set, keeping only
/// the candidates that actually enlarge the subgroup. Candidates are scanned
/// in the order given, so the reduced generator list is deterministic.
pub fn closure_reduced<'g>(
    group: &'g FiniteGroup,
    candidates: impl IntoIterator<Item = usize>,
) -> Subgroup<'g> {
    let mut kept: Vec<usize> = Vec::new();
    let mut members = vec![false; group.order()];
    members[group.identity()] = true;
    for c in candidates {
        if !members[c] {
            kept.push(c);
            members = close_under_products(group, &kept);
        }
    }
    Subgroup::from_members(group, members, kept)
}

fn close_under_products(group: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut members = vec![false; group.order()];
    members[group.identity()] = true;
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let p = group.mul(x, g);
            if !members[p] {
                members[p] = true;
                frontier.push(p);
            }
        }
    }
    members
}

/// Smallest normal subgroup of `group` containing `elems`: the closure of
/// all conjugates. The stored generators are a reduced subset of the
/// conjugate set.
pub fn normal_closure<'g>(group: &'g FiniteGroup, elems: &[usize]) -> Subgroup<'g> {
    let mut conjugates: Vec<usize> = Vec::new();
    let mut seen = vec![false; group.order()];
    for &e in elems {
        for &c in group.conjugacy_class(e) {
            if !seen[c] && c != group.identity() {
                seen[c] = true;
                conjugates.push(c);
            }
        }
    }
    conjugates.sort_unstable();
    closure_reduced(group, conjugates)
}

/// The centralizer of `g`: all elements commuting with it.
pub fn centralizer<'g>(group: &'g FiniteGroup, g: usize) -> Subgroup<'g> {
    closure_reduced(
        group,
        (0..group.order()).filter(|&h| group.mul(h, g) == group.mul(g, h)),
    )
}

/// The center: elements commuting with everything.
pub fn center<'g>(group: &'g FiniteGroup) -> Subgroup<'g> {
    closure_reduced(
        group,
        (0..group.order())
            .filter(|&z| (0..group.order()).all(|h| group.mul(z, h) == group.mul(h, z))),
    )
}

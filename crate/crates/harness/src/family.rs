//! Named group families and the little grammar that selects them.
//!
//! Family descriptors: `cyclic-N`, `dihedral-N` (symmetries of the N-gon,
//! order 2N), `symmetric-N`, `alternating-N`, `quaternion8`, `klein4`, and
//! `product(F,G)` for direct products of families.

use fitting::group::{FiniteGroup, GroupError, PermutationSpec};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family '{0}'")]
    Unknown(String),
    #[error("family '{family}' does not accept parameter {value}")]
    BadParameter { family: &'static str, value: usize },
    #[error("malformed family descriptor '{0}'")]
    Malformed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Klein4,
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses a descriptor such as `symmetric-4` or
    /// `product(quaternion8,cyclic-3)`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix("product(").and_then(|r| r.strip_suffix(')')) {
            // Split at the comma balancing nested parentheses.
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let split = split.ok_or_else(|| FamilyError::Malformed(text.to_string()))?;
            let left = Self::parse(&inner[..split])?;
            let right = Self::parse(&inner[split + 1..])?;
            return Ok(FamilySpec::Product(Box::new(left), Box::new(right)));
        }
        match text {
            "quaternion8" => return Ok(FamilySpec::Quaternion8),
            "klein4" => return Ok(FamilySpec::Klein4),
            _ => {}
        }
        let (name, param) = text
            .split_once('-')
            .ok_or_else(|| FamilyError::Unknown(text.to_string()))?;
        let value: usize =
            param.parse().map_err(|_| FamilyError::Malformed(text.to_string()))?;
        match name {
            "cyclic" => Ok(FamilySpec::Cyclic(value)),
            "dihedral" => Ok(FamilySpec::Dihedral(value)),
            "symmetric" => Ok(FamilySpec::Symmetric(value)),
            "alternating" => Ok(FamilySpec::Alternating(value)),
            _ => Err(FamilyError::Unknown(text.to_string())),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, FamilyError> {
        match self {
            FamilySpec::Cyclic(n) => cyclic(*n),
            FamilySpec::Dihedral(n) => dihedral(*n),
            FamilySpec::Symmetric(n) => symmetric(*n),
            FamilySpec::Alternating(n) => alternating(*n),
            FamilySpec::Quaternion8 => Ok(quaternion8()),
            FamilySpec::Klein4 => Ok(klein4()),
            FamilySpec::Product(left, right) => {
                Ok(left.build()?.direct_product(&right.build()?)?)
            }
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic-{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral-{n}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric-{n}"),
            FamilySpec::Alternating(n) => write!(f, "alternating-{n}"),
            FamilySpec::Quaternion8 => write!(f, "quaternion8"),
            FamilySpec::Klein4 => write!(f, "klein4"),
            FamilySpec::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

/// Convenience wrapper: parse and build in one step.
pub fn family(descriptor: &str) -> Result<FiniteGroup, FamilyError> {
    FamilySpec::parse(descriptor)?.build()
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameter { family: "cyclic", value: n });
    }
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(FiniteGroup::from_cayley_table_with_labels(rows, Some(labels))?)
}

pub fn dihedral(n: usize) -> Result<FiniteGroup, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParameter { family: "dihedral", value: n });
    }
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let spec = PermutationSpec::new(n, vec![rotation, reflection])?;
    Ok(FiniteGroup::from_permutations(&spec)?)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameter { family: "symmetric", value: n });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(swap);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    let spec = PermutationSpec::new(n, gens)?;
    Ok(FiniteGroup::from_permutations(&spec)?)
}

pub fn alternating(n: usize) -> Result<FiniteGroup, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParameter { family: "alternating", value: n });
    }
    // Consecutive 3-cycles generate the alternating group.
    let gens: Vec<Vec<usize>> = (0..n - 2)
        .map(|i| {
            let mut images: Vec<usize> = (0..n).collect();
            images[i] = i + 1;
            images[i + 1] = i + 2;
            images[i + 2] = i;
            images
        })
        .collect();
    let spec = PermutationSpec::new(n, gens)?;
    Ok(FiniteGroup::from_permutations(&spec)?)
}

/// The quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> FiniteGroup {
    let unit_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, u) => (0, u),
            (u, 0) => (0, u),
            (1, 1) | (2, 2) | (3, 3) => (1, 0),
            (1, 2) => (0, 3),
            (2, 1) => (1, 3),
            (2, 3) => (0, 1),
            (3, 2) => (1, 1),
            (3, 1) => (0, 2),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut rows = vec![vec![0usize; 8]; 8];
    for (a, row) in rows.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            let (s, u) = unit_mul(a / 2, b / 2);
            *entry = 2 * u + ((a % 2) ^ (b % 2) ^ s);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroup::from_cayley_table_with_labels(
        rows,
        Some(labels.iter().map(|s| s.to_string()).collect()),
    )
    .expect("quaternion table is a group")
}

pub fn klein4() -> FiniteGroup {
    let rows = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_cayley_table_with_labels(rows, Some(labels))
        .expect("xor table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_round_trip() {
        for text in [
            "cyclic-12",
            "dihedral-5",
            "symmetric-4",
            "alternating-5",
            "quaternion8",
            "klein4",
            "product(quaternion8,cyclic-3)",
            "product(product(cyclic-2,cyclic-2),symmetric-3)",
        ] {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!(FamilySpec::parse("frobnicate-3").is_err());
        assert!(FamilySpec::parse("cyclic-x").is_err());
        assert!(FamilySpec::parse("product(cyclic-2").is_err());
    }

    #[test]
    fn family_orders() {
        assert_eq!(family("cyclic-1").unwrap().order(), 1);
        assert_eq!(family("cyclic-12").unwrap().order(), 12);
        assert_eq!(family("dihedral-4").unwrap().order(), 8);
        assert_eq!(family("symmetric-4").unwrap().order(), 24);
        assert_eq!(family("alternating-4").unwrap().order(), 12);
        assert_eq!(family("alternating-5").unwrap().order(), 60);
        assert_eq!(family("quaternion8").unwrap().order(), 8);
        assert_eq!(family("klein4").unwrap().order(), 4);
        assert_eq!(family("product(quaternion8,cyclic-3)").unwrap().order(), 24);
    }

    #[test]
    fn parameter_ranges_are_validated() {
        assert!(matches!(family("cyclic-0"), Err(FamilyError::BadParameter { .. })));
        assert!(matches!(family("dihedral-2"), Err(FamilyError::BadParameter { .. })));
        assert!(matches!(family("symmetric-8"), Err(FamilyError::Group(_))));
    }

    #[test]
    fn klein_four_group_has_exponent_two() {
        let g = klein4();
        for x in g.elements() {
            assert_eq!(g.mul(x, x), g.identity());
        }
    }

    #[test]
    fn product_of_coprime_cyclic_groups_is_cyclic() {
        let g = family("product(cyclic-2,cyclic-3)").unwrap();
        assert!(g.elements().any(|x| g.element_order(x) == 6));
    }
}

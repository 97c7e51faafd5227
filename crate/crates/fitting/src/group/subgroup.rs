use super::FiniteGroup;

/// A subgroup of a fixed parent group.
///
/// The membership set is the source of truth: two subgroups compare equal
/// exactly when their member sets coincide, regardless of how they were
/// generated. The generator list always satisfies
/// `closure(generators) == members`.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: Vec<bool>,
    member_list: Vec<usize>,
    generators: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    pub(super) fn from_members(
        group: &'g FiniteGroup,
        members: Vec<bool>,
        generators: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(members.len(), group.order());
        debug_assert!(members[group.identity()]);
        let member_list = (0..group.order()).filter(|&x| members[x]).collect();
        Subgroup { group, members, member_list, generators }
    }

    pub(super) fn from_parts(
        group: &'g FiniteGroup,
        members: Vec<bool>,
        generators: Vec<usize>,
    ) -> Self {
        Self::from_members(group, members, generators)
    }

    pub fn trivial(group: &'g FiniteGroup) -> Self {
        let mut members = vec![false; group.order()];
        members[group.identity()] = true;
        Self::from_members(group, members, Vec::new())
    }

    pub fn whole(group: &'g FiniteGroup) -> Self {
        super::closure_reduced(group, 0..group.order())
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.member_list.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.member_list
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.member_list.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.member_list.len() == self.group.order()
    }

    /// True when every generator commutes with every other; with
    /// `closure(generators) == members` this decides commutativity of the
    /// whole subgroup.
    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators.iter().all(|&b| self.group.mul(a, b) == self.group.mul(b, a))
        })
    }

    /// True when conjugation by any element of the parent maps the subgroup
    /// into itself. Checking generators suffices since conjugation is an
    /// automorphism.
    pub fn is_normal(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| (0..self.group.order()).all(|g| self.members[self.group.conjugate(a, g)]))
    }

    /// Membership bitset packed into machine words, usable as a set key.
    pub fn membership_key(&self) -> Vec<u64> {
        let mut key = vec![0u64; self.members.len().div_ceil(64)];
        for &m in &self.member_list {
            key[m / 64] |= 1u64 << (m % 64);
        }
        key
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(std::ptr::eq(self.group, other.group));
        self.member_list == other.member_list
    }
}

impl Eq for Subgroup<'_> {}

impl std::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.generators)
    }
}

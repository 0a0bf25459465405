use crate::fincat::Functor;
use crate::star::{LinearFunctor, LinearStarCategory, MarkedStarCategory};

/// A finite group as a multiplication table over dense element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
    pub inv: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("multiplication table is not square or references bad ids")]
    Shape,
    #[error("unit law fails at element {g}")]
    Unit { g: usize },
    #[error("associativity fails on ({g}, {h}, {k})")]
    NonAssociative { g: usize, h: usize, k: usize },
    #[error("element {g} has no inverse")]
    NoInverse { g: usize },
    #[error("subset is not a subgroup (witness element {g})")]
    NotASubgroup { g: usize },
}

impl FinGroup {
    pub fn validate(mult: Vec<Vec<usize>>, unit: usize) -> Result<FinGroup, GroupError> {
        let n = mult.len();
        if unit >= n || mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::Shape);
        }
        for g in 0..n {
            if mult[unit][g] != g || mult[g][unit] != g {
                return Err(GroupError::Unit { g });
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if mult[mult[g][h]][k] != mult[g][mult[h][k]] {
                        return Err(GroupError::NonAssociative { g, h, k });
                    }
                }
            }
        }
        let inv: Result<Vec<usize>, GroupError> = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mult[g][h] == unit && mult[h][g] == unit)
                    .ok_or(GroupError::NoInverse { g })
            })
            .collect();
        Ok(FinGroup { mult, unit, inv: inv? })
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn cyclic(n: usize) -> FinGroup {
        let mult = (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect();
        FinGroup::validate(mult, 0).expect("cyclic group is valid")
    }

    pub fn trivial() -> FinGroup {
        FinGroup::cyclic(1)
    }

    /// Validate a subset as a subgroup; returns the subgroup with its
    /// element list (ascending) into the ambient group.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FinGroup, Vec<usize>), GroupError> {
        let mut els: Vec<usize> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if !els.contains(&self.unit) {
            return Err(GroupError::NotASubgroup { g: self.unit });
        }
        for &g in &els {
            if g >= self.order() || !els.contains(&self.inv[g]) {
                return Err(GroupError::NotASubgroup { g });
            }
            for &h in &els {
                if !els.contains(&self.mult[g][h]) {
                    return Err(GroupError::NotASubgroup { g });
                }
            }
        }
        let pos = |g: usize| els.iter().position(|&x| x == g).expect("member");
        let mult = els
            .iter()
            .map(|&g| els.iter().map(|&h| pos(self.mult[g][h])).collect())
            .collect();
        Ok((FinGroup::validate(mult, pos(self.unit))?, els))
    }

    /// The one-object groupoid BG.
    pub fn b_groupoid(&self) -> crate::fincat::FinGroupoid {
        crate::fincat::FinGroupoid::from_group_table(&self.mult, self.unit)
    }
}

/// A strict action of a finite group on a marked *-category: one star- and
/// marking-preserving automorphism per element, functorial in the group.
#[derive(Debug, Clone)]
pub struct GAction {
    pub group: FinGroup,
    pub base: MarkedStarCategory,
    pub on: Vec<Functor>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GActionError {
    #[error("action table has wrong length")]
    Shape,
    #[error("action of element {g} is not a (marked) *-automorphism")]
    NotAutomorphism { g: usize },
    #[error("action of the unit is not the identity")]
    UnitActs,
    #[error("action is not multiplicative at ({g}, {h})")]
    NotMultiplicative { g: usize, h: usize },
}

impl GAction {
    pub fn validate(
        group: FinGroup,
        base: MarkedStarCategory,
        on: Vec<Functor>,
    ) -> Result<GAction, GActionError> {
        if on.len() != group.order() {
            return Err(GActionError::Shape);
        }
        for (g, f) in on.iter().enumerate() {
            let bij = {
                let o: std::collections::BTreeSet<usize> = f.obj.iter().copied().collect();
                let m: std::collections::BTreeSet<usize> = f.mor.iter().copied().collect();
                o.len() == base.base().ob_count() && m.len() == base.base().mor_count()
            };
            if !bij || crate::star::star_functor_ok(&base, &base, f, true).is_err() {
                return Err(GActionError::NotAutomorphism { g });
            }
        }
        if on[group.unit] != Functor::identity(base.base()) {
            return Err(GActionError::UnitActs);
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if on[group.mul(g, h)] != on[g].after(&on[h]) {
                    return Err(GActionError::NotMultiplicative { g, h });
                }
            }
        }
        Ok(GAction { group, base, on })
    }

    pub fn trivial(group: FinGroup, base: MarkedStarCategory) -> GAction {
        let id = Functor::identity(base.base());
        let on = vec![id; group.order()];
        GAction::validate(group, base, on).expect("trivial action is valid")
    }
}

/// A strict action on a linear *-category.
#[derive(Debug, Clone)]
pub struct LinearGAction {
    pub group: FinGroup,
    pub base: LinearStarCategory,
    pub on: Vec<LinearFunctor>,
}

impl LinearGAction {
    pub fn validate(
        group: FinGroup,
        base: LinearStarCategory,
        on: Vec<LinearFunctor>,
    ) -> Result<LinearGAction, GActionError> {
        if on.len() != group.order() {
            return Err(GActionError::Shape);
        }
        for (g, f) in on.iter().enumerate() {
            if f.validate(&base, &base, true).is_err() {
                return Err(GActionError::NotAutomorphism { g });
            }
        }
        if on[group.unit] != LinearFunctor::identity(&base) {
            return Err(GActionError::UnitActs);
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let composite = on[g].after(&on[h], &base, &base, &base);
                if on[group.mul(g, h)] != composite {
                    return Err(GActionError::NotMultiplicative { g, h });
                }
            }
        }
        Ok(LinearGAction { group, base, on })
    }

    pub fn trivial(group: FinGroup, base: LinearStarCategory) -> LinearGAction {
        let id = LinearFunctor::identity(&base);
        let on = vec![id; group.order()];
        LinearGAction::validate(group, base, on).expect("trivial action is valid")
    }

    /// Linearize a plain action.
    pub fn from_plain(action: &GAction) -> LinearGAction {
        let lin = crate::star::linearize(&action.base);
        let on = action
            .on
            .iter()
            .map(|f| {
                let n = action.base.base().ob_count();
                LinearFunctor {
                    obj: f.obj.clone(),
                    maps: (0..n)
                        .map(|x| {
                            (0..n)
                                .map(|y| {
                                    lin.basis[x][y]
                                        .iter()
                                        .map(|&m| lin.elem_of_mor(&action.base, f.mor[m]).coeffs)
                                        .collect()
                                })
                                .collect()
                        })
                        .collect(),
                }
            })
            .collect();
        LinearGAction::validate(action.group.clone(), lin.cat.clone(), on)
            .expect("linearization of a valid action is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinGroupoid;

    #[test]
    fn cyclic_groups_and_subgroups() {
        let z6 = FinGroup::cyclic(6);
        let (h, els) = z6.subgroup(&[0, 2, 4]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(els, vec![0, 2, 4]);
        assert!(z6.subgroup(&[0, 2]).is_err());
    }

    #[test]
    fn swap_action_on_indiscrete() {
        let i2 = FinGroupoid::indiscrete(2);
        let base = MarkedStarCategory::from_groupoid_ma(&i2);
        let swap = Functor { obj: vec![1, 0], mor: vec![3, 2, 1, 0] };
        let action = GAction::validate(
            FinGroup::cyclic(2),
            base.clone(),
            vec![Functor::identity(base.base()), swap],
        )
        .unwrap();
        assert_eq!(action.group.order(), 2);
    }

    #[test]
    fn non_multiplicative_action_is_rejected() {
        let i2 = FinGroupoid::indiscrete(2);
        let base = MarkedStarCategory::from_groupoid_ma(&i2);
        let swap = Functor { obj: vec![1, 0], mor: vec![3, 2, 1, 0] };
        let bad = GAction::validate(
            FinGroup::cyclic(3),
            base.clone(),
            vec![Functor::identity(base.base()), swap.clone(), swap],
        );
        assert!(matches!(bad, Err(GActionError::NotMultiplicative { .. })));
    }
}

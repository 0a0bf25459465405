use crate::fincat::{FinCategory, FinGroupoid};
use std::collections::BTreeSet;

/// A finite *-category with a marking.
///
/// The involution fixes objects and reverses morphisms; the marked subset
/// consists of unitary morphisms, contains all identities, and is closed
/// under composition and the involution.  Marking validation is eager at
/// construction, so downstream code may assume all of this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedStarCategory {
    base: FinCategory,
    star: Vec<usize>,
    marked: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StarError {
    #[error(transparent)]
    Category(#[from] crate::fincat::CategoryError),
    #[error("star table has wrong length")]
    BadStarTable,
    #[error("star of morphism {f} has wrong endpoints")]
    StarEndpoints { f: usize },
    #[error("star is not an involution at morphism {f}")]
    NotInvolutive { f: usize },
    #[error("star moves the identity of object {a}")]
    MovesIdentity { a: usize },
    #[error("star is not contravariant on ({g}, {f})")]
    NotContravariant { g: usize, f: usize },
    #[error("marked morphism {f} is not unitary")]
    MarkedNotUnitary { f: usize },
    #[error("marked set misses the identity of object {a}")]
    MarkedMissesIdentity { a: usize },
    #[error("marked set is not closed under star at morphism {f}")]
    MarkedNotStarClosed { f: usize },
    #[error("marked set is not closed under composition at ({g}, {f})")]
    MarkedNotComposeClosed { g: usize, f: usize },
}

impl MarkedStarCategory {
    pub fn validate(
        base: FinCategory,
        star: Vec<usize>,
        marked: BTreeSet<usize>,
    ) -> Result<Self, StarError> {
        if star.len() != base.mor_count() || star.iter().any(|&g| g >= base.mor_count()) {
            return Err(StarError::BadStarTable);
        }
        for f in base.morphisms() {
            if base.src(star[f]) != base.tgt(f) || base.tgt(star[f]) != base.src(f) {
                return Err(StarError::StarEndpoints { f });
            }
            if star[star[f]] != f {
                return Err(StarError::NotInvolutive { f });
            }
        }
        for a in base.objects() {
            if star[base.id(a)] != base.id(a) {
                return Err(StarError::MovesIdentity { a });
            }
        }
        for g in base.morphisms() {
            for f in base.morphisms() {
                if let Some(gf) = base.compose(g, f) {
                    if base.compose(star[f], star[g]) != Some(star[gf]) {
                        return Err(StarError::NotContravariant { g, f });
                    }
                }
            }
        }
        let cat = MarkedStarCategory { base, star, marked };
        for &f in &cat.marked {
            if f >= cat.base.mor_count() || !cat.is_unitary(f) {
                return Err(StarError::MarkedNotUnitary { f });
            }
            if !cat.marked.contains(&cat.star[f]) {
                return Err(StarError::MarkedNotStarClosed { f });
            }
        }
        for a in cat.base.objects() {
            if !cat.marked.contains(&cat.base.id(a)) {
                return Err(StarError::MarkedMissesIdentity { a });
            }
        }
        for &g in &cat.marked {
            for &f in &cat.marked {
                if let Some(gf) = cat.base.compose(g, f) {
                    if !cat.marked.contains(&gf) {
                        return Err(StarError::MarkedNotComposeClosed { g, f });
                    }
                }
            }
        }
        Ok(cat)
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn star(&self, f: usize) -> usize {
        self.star[f]
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn is_marked(&self, f: usize) -> bool {
        self.marked.contains(&f)
    }

    /// u*∘u = id and u∘u* = id.
    pub fn is_unitary(&self, u: usize) -> bool {
        let s = self.star[u];
        self.base.compose(s, u) == Some(self.base.id(self.base.src(u)))
            && self.base.compose(u, s) == Some(self.base.id(self.base.tgt(u)))
    }

    pub fn unitaries(&self) -> Vec<usize> {
        self.base.morphisms().filter(|&u| self.is_unitary(u)).collect()
    }

    /// Same underlying *-category with only the identities marked.
    pub fn mi(&self) -> MarkedStarCategory {
        let marked = self.base.objects().map(|a| self.base.id(a)).collect();
        MarkedStarCategory::validate(self.base.clone(), self.star.clone(), marked)
            .expect("identity marking is valid")
    }

    /// Same underlying *-category with all unitaries marked.
    pub fn ma(&self) -> MarkedStarCategory {
        let marked = self.unitaries().into_iter().collect();
        MarkedStarCategory::validate(self.base.clone(), self.star.clone(), marked)
            .expect("unitary marking is valid")
    }

    /// Forget star and marking.
    pub fn forget_star(&self) -> FinCategory {
        self.base.clone()
    }

    /// The wide subcategory on the marked morphisms, always a groupoid.
    /// Returns the groupoid together with the original morphism id carried
    /// by each of its morphisms.
    pub fn marked_subcategory(&self) -> (FinGroupoid, Vec<usize>) {
        self.wide_subgroupoid(&self.marked.iter().copied().collect::<Vec<_>>())
    }

    /// The wide subcategory on all unitary morphisms.
    pub fn unitary_subcategory(&self) -> (FinGroupoid, Vec<usize>) {
        self.wide_subgroupoid(&self.unitaries())
    }

    fn wide_subgroupoid(&self, mors: &[usize]) -> (FinGroupoid, Vec<usize>) {
        let index_of = |f: usize| mors.iter().position(|&m| m == f).expect("member");
        let raw = crate::fincat::RawCategory {
            objects: self.base.ob_count(),
            morphisms: mors.iter().map(|&f| (self.base.src(f), self.base.tgt(f))).collect(),
            identity: self.base.objects().map(|a| index_of(self.base.id(a))).collect(),
            compose: mors
                .iter()
                .enumerate()
                .flat_map(|(gi, &g)| {
                    mors.iter().enumerate().filter_map(move |(fi, &f)| {
                        self.base.compose(g, f).map(|gf| (gi, fi, gf))
                    })
                })
                .map(|(gi, fi, gf)| (gi, fi, index_of(gf)))
                .collect(),
        };
        let cat = FinCategory::validate(&raw).expect("wide subcategory on a closed set is valid");
        let inverse = mors.iter().map(|&f| index_of(self.star[f])).collect();
        let grp = FinGroupoid::validate(cat, inverse)
            .expect("marked/unitary morphisms form a groupoid with star as inverse");
        (grp, mors.to_vec())
    }

    /// View a groupoid as a *-category with g* := g⁻¹ and the given marking.
    pub fn from_groupoid(g: &FinGroupoid, marked: BTreeSet<usize>) -> Result<Self, StarError> {
        MarkedStarCategory::validate(g.cat.clone(), g.inverse.clone(), marked)
    }

    /// Groupoid as a *-category with only identities marked.
    pub fn from_groupoid_mi(g: &FinGroupoid) -> Self {
        let marked = g.cat.objects().map(|a| g.cat.id(a)).collect();
        Self::from_groupoid(g, marked).expect("identity marking on a groupoid is valid")
    }

    /// Groupoid as a *-category with everything marked.
    pub fn from_groupoid_ma(g: &FinGroupoid) -> Self {
        Self::from_groupoid(g, g.cat.morphisms().collect())
            .expect("full marking on a groupoid is valid")
    }

    /// The point: one object, one morphism.
    pub fn point() -> Self {
        MarkedStarCategory::validate(FinCategory::point(), vec![0], BTreeSet::from([0]))
            .expect("point is valid")
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let base = self.base.disjoint_union(&other.base);
        let off = self.base.mor_count();
        let star =
            self.star.iter().copied().chain(other.star.iter().map(|&f| f + off)).collect();
        let marked = self
            .marked
            .iter()
            .copied()
            .chain(other.marked.iter().map(|&f| f + off))
            .collect();
        MarkedStarCategory::validate(base, star, marked)
            .expect("disjoint union of valid marked *-categories is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::RawCategory;

    #[test]
    fn groupoid_star_is_inverse() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_mi(&z2);
        assert!(bz2.is_unitary(1));
        assert!(!bz2.is_marked(1));
        assert_eq!(bz2.ma().marked().len(), 2);
    }

    #[test]
    fn marked_non_unitary_is_rejected() {
        // One object, End = {id, p} with p∘p = p, p* = p: p is a selfadjoint
        // idempotent, not unitary.
        let base = FinCategory::validate(&RawCategory {
            objects: 1,
            morphisms: vec![(0, 0), (0, 0)],
            identity: vec![0],
            compose: vec![(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
        })
        .unwrap();
        let err = MarkedStarCategory::validate(base, vec![0, 1], BTreeSet::from([0, 1]));
        assert_eq!(err, Err(StarError::MarkedNotUnitary { f: 1 }));
    }

    #[test]
    fn marked_subcategory_of_mi_is_discrete() {
        let i2 = FinGroupoid::indiscrete(2);
        let mi = MarkedStarCategory::from_groupoid_mi(&i2);
        let (sub, _) = mi.marked_subcategory();
        assert_eq!(sub.cat.mor_count(), 2);
        let ma = MarkedStarCategory::from_groupoid_ma(&i2);
        let (sub, _) = ma.marked_subcategory();
        assert_eq!(sub.cat.mor_count(), 4);
    }

    #[test]
    fn non_contravariant_star_is_rejected() {
        // Walking arrow doubled into a *-shape with a bogus star table that
        // swaps the two parallel arrows of an indiscrete groupoid wrongly.
        let i2 = FinGroupoid::indiscrete(2);
        // star that fixes every morphism: fails endpoints for the cross maps.
        let bad = MarkedStarCategory::validate(
            i2.cat.clone(),
            i2.cat.morphisms().collect(),
            BTreeSet::from([0, 3]),
        );
        assert!(matches!(bad, Err(StarError::StarEndpoints { .. })));
    }
}

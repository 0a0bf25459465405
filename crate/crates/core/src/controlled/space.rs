use crate::equivariant::FinGroup;
use std::collections::BTreeSet;

/// A relation between finite sets, as a subset of target × source pairs:
/// Hom(X, Y) = P(Y × X), with relational composition, union, and transpose.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub rows: usize,
    pub cols: usize,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn empty(rows: usize, cols: usize) -> Relation {
        Relation { rows, cols, pairs: BTreeSet::new() }
    }

    pub fn identity(n: usize) -> Relation {
        Relation { rows: n, cols: n, pairs: (0..n).map(|i| (i, i)).collect() }
    }

    pub fn full(rows: usize, cols: usize) -> Relation {
        Relation {
            rows,
            cols,
            pairs: (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).collect(),
        }
    }

    pub fn from_pairs(rows: usize, cols: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation { rows, cols, pairs: pairs.iter().copied().collect() }
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.cols, other.rows);
        let mut pairs = BTreeSet::new();
        for &(z, y) in &self.pairs {
            for &(y2, x) in &other.pairs {
                if y == y2 {
                    pairs.insert((z, x));
                }
            }
        }
        Relation { rows: self.rows, cols: other.cols, pairs }
    }

    /// Transpose U⁻¹ = {(x, y) | (y, x) ∈ U}; the *-operation.
    pub fn transpose(&self) -> Relation {
        Relation {
            rows: self.cols,
            cols: self.rows,
            pairs: self.pairs.iter().map(|&(y, x)| (x, y)).collect(),
        }
    }

    /// The commutative monoid structure on hom-sets.
    pub fn union(&self, other: &Relation) -> Relation {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Relation {
            rows: self.rows,
            cols: self.cols,
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// A selfadjoint idempotent that is a restriction of the identity.
    pub fn is_partial_identity(&self) -> bool {
        self.rows == self.cols && self.pairs.iter().all(|&(y, x)| y == x)
    }

    /// The graph of a bijection (exactly the unitary relations).
    pub fn is_bijection_graph(&self) -> bool {
        self.rows == self.cols
            && self.pairs.len() == self.rows
            && self.pairs.iter().map(|&(y, _)| y).collect::<BTreeSet<_>>().len() == self.rows
            && self.pairs.iter().map(|&(_, x)| x).collect::<BTreeSet<_>>().len() == self.rows
    }

    /// U-thickening of a point set: U[B] = { x | ∃ b ∈ B, (x, b) ∈ U }.
    pub fn thicken(&self, b: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.pairs.iter().filter(|&&(_, x)| b.contains(&x)).map(|&(y, _)| y).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bornology {
    All,
    /// Down-closure of the listed sets together with all singletons.
    Generated(Vec<BTreeSet<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("entourage generator ({0}, {1}) references an undeclared point")]
    BadGenerator(usize, usize),
    #[error("bornology and coarse structure are incompatible: U[{{{witness:?}}}] is unbounded")]
    IncompatibleStructures { witness: Vec<usize> },
    #[error("bornology misses the singleton {{{0}}}")]
    MissingSingleton(usize),
    #[error("invariant entourages are not cofinal (generatorsare not closed under the action)")]
    NotCofinal,
    #[error("group action does not permute the points")]
    BadAction,
}

/// A finite bornological coarse space.  On a finite set a coarse structure
/// is determined by its maximal entourage (the family is closed under
/// subsets and finite unions), so only that closure is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BornCoarseSpace {
    pub points: usize,
    /// The maximal entourage: reflexive, symmetric, transitively closed
    /// under relational composition.
    pub max_entourage: Relation,
    pub bornology: Bornology,
}

impl BornCoarseSpace {
    pub fn validate(
        points: usize,
        entourage_generators: &[(usize, usize)],
        bornology: Bornology,
    ) -> Result<BornCoarseSpace, SpaceError> {
        for &(p, q) in entourage_generators {
            if p >= points || q >= points {
                return Err(SpaceError::BadGenerator(p, q));
            }
        }
        // Closure of diagonal ∪ generators under union, inverse, and
        // composition: iterate to a fixpoint.
        let mut u = Relation::identity(points);
        for &(p, q) in entourage_generators {
            u.pairs.insert((p, q));
        }
        loop {
            let mut next = u.union(&u.transpose());
            next = next.union(&next.compose(&next));
            if next == u {
                break;
            }
            u = next;
        }
        let space = BornCoarseSpace { points, max_entourage: u, bornology };
        if let Bornology::Generated(sets) = &space.bornology {
            for x in 0..points {
                if !sets.iter().any(|s| s.contains(&x)) {
                    return Err(SpaceError::MissingSingleton(x));
                }
            }
            for s in sets {
                let thick = space.max_entourage.thicken(s);
                if !space.is_bounded(&thick) {
                    return Err(SpaceError::IncompatibleStructures {
                        witness: s.iter().copied().collect(),
                    });
                }
            }
        }
        Ok(space)
    }

    pub fn is_entourage(&self, u: &Relation) -> bool {
        u.rows == self.points && u.cols == self.points && u.is_subset(&self.max_entourage)
    }

    pub fn is_bounded(&self, b: &BTreeSet<usize>) -> bool {
        match &self.bornology {
            Bornology::All => true,
            Bornology::Generated(sets) => {
                // Down-closure of finite unions: every point of b is covered
                // and b is a subset of the union of generators, which is
                // automatic; boundedness means inclusion in a finite union,
                // which over a finite family is inclusion in the union.
                let mut union = BTreeSet::new();
                for s in sets {
                    union.extend(s.iter().copied());
                }
                b.is_subset(&union)
            }
        }
    }
}

/// A G-bornological coarse space: a space with a G-action by permutations
/// such that the invariant entourages are cofinal.
#[derive(Debug, Clone)]
pub struct GCoarseSpace {
    pub space: BornCoarseSpace,
    pub group: FinGroup,
    /// `action[g][x]` = g·x.
    pub action: Vec<Vec<usize>>,
}

impl GCoarseSpace {
    pub fn validate(
        space: BornCoarseSpace,
        group: FinGroup,
        action: Vec<Vec<usize>>,
    ) -> Result<GCoarseSpace, SpaceError> {
        let n = space.points;
        if action.len() != group.order()
            || action.iter().any(|p| {
                p.len() != n || p.iter().copied().collect::<BTreeSet<_>>().len() != n
            })
        {
            return Err(SpaceError::BadAction);
        }
        if action[group.unit] != (0..n).collect::<Vec<_>>() {
            return Err(SpaceError::BadAction);
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let composite: Vec<usize> = (0..n).map(|x| action[g][action[h][x]]).collect();
                if composite != action[group.mul(g, h)] {
                    return Err(SpaceError::BadAction);
                }
            }
        }
        // Cofinality of invariant entourages: on a finite space this is the
        // invariance of the maximal entourage.
        for g in 0..group.order() {
            let moved = Relation {
                rows: n,
                cols: n,
                pairs: space
                    .max_entourage
                    .pairs
                    .iter()
                    .map(|&(y, x)| (action[g][y], action[g][x]))
                    .collect(),
            };
            if moved != space.max_entourage {
                return Err(SpaceError::NotCofinal);
            }
        }
        Ok(GCoarseSpace { space, group, action })
    }

    /// The canonical G-coarse space on the underlying set of G: entourages
    /// generated by the G-orbits of the diagonal pairs, bornology all.
    pub fn canonical_on_group(group: &FinGroup) -> GCoarseSpace {
        let n = group.order();
        // Orbits of all pairs under left multiplication generate; taking
        // the orbit of every pair (e, g) gives the cofinal invariant family.
        let mut gens = Vec::new();
        for g in 0..n {
            for k in 0..n {
                gens.push((group.mul(k, group.unit), group.mul(k, g)));
            }
        }
        let space = BornCoarseSpace::validate(n, &gens, Bornology::All)
            .expect("canonical structures are valid");
        let action = (0..n).map(|g| (0..n).map(|x| group.mul(g, x)).collect()).collect();
        GCoarseSpace::validate(space, group.clone(), action).expect("left action is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_space() {
        let s = BornCoarseSpace::validate(1, &[], Bornology::All).unwrap();
        assert_eq!(s.max_entourage, Relation::identity(1));
    }

    #[test]
    fn closure_reaches_full_relation() {
        let s = BornCoarseSpace::validate(2, &[(0, 1)], Bornology::All).unwrap();
        assert_eq!(s.max_entourage, Relation::full(2, 2));
        // Discrete space: only the diagonal.
        let d = BornCoarseSpace::validate(2, &[], Bornology::All).unwrap();
        assert_eq!(d.max_entourage, Relation::identity(2));
    }

    #[test]
    fn missing_singleton_is_rejected() {
        let r = BornCoarseSpace::validate(
            2,
            &[],
            Bornology::Generated(vec![BTreeSet::from([0])]),
        );
        assert_eq!(r, Err(SpaceError::MissingSingleton(1)));
    }

    #[test]
    fn canonical_group_space() {
        let g = FinGroup::cyclic(2);
        let s = GCoarseSpace::canonical_on_group(&g);
        assert_eq!(s.space.max_entourage, Relation::full(2, 2));
    }

    #[test]
    fn relation_algebra() {
        let u = Relation::from_pairs(2, 2, &[(0, 1)]);
        assert_eq!(u.transpose(), Relation::from_pairs(2, 2, &[(1, 0)]));
        assert_eq!(u.compose(&u.transpose()), Relation::from_pairs(2, 2, &[(0, 0)]));
        assert!(Relation::identity(2).is_partial_identity());
        assert!(!u.is_partial_identity());
        assert!(Relation::from_pairs(2, 2, &[(0, 1), (1, 0)]).is_bijection_graph());
    }
}

use super::{BornCoarseSpace, Relation};
use crate::bounds::BoundExceeded;
use crate::fincat::{FinCategory, RawCategory};
use crate::star::MarkedStarCategory;
use std::collections::BTreeSet;

/// An X-controlled object determined on points: a finite carrier with a
/// projection-valued measure, stored as the full table of sub-diagonal
/// projections per subset of X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlledObject {
    pub carrier: usize,
    /// `measure[mask]` = φ(Y) for the subset with that bitmask.
    pub measure: Vec<Relation>,
    /// The point supporting each carrier element (determined on points).
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ControlledObjectError {
    #[error("space has {points} points; measures are only materialized for ≤ 6")]
    Bound { points: usize },
    #[error("measure table has wrong shape")]
    Shape,
    #[error("φ(Y) is not a sub-diagonal projection for mask {mask} (general idempotent relations are rejected)")]
    NotPartialIdentity { mask: usize },
    #[error("φ(X) ≠ id or φ(∅) ≠ 0")]
    Normalization,
    #[error("φ(Y)φ(Z) ≠ φ(Y∩Z) at masks ({0}, {1})")]
    Intersection(usize, usize),
    #[error("φ(Y∪Z) + φ(Y∩Z) ≠ φ(Y) + φ(Z) at masks ({0}, {1})")]
    Additivity(usize, usize),
    #[error("the object is not determined on points (element {element})")]
    NotDeterminedOnPoints { element: usize },
}

impl ControlledObject {
    /// Validate a raw measure table against all the measure axioms.
    pub fn validate(
        space: &BornCoarseSpace,
        carrier: usize,
        measure: Vec<Relation>,
    ) -> Result<ControlledObject, ControlledObjectError> {
        let n = space.points;
        if n > 6 {
            return Err(ControlledObjectError::Bound { points: n });
        }
        let masks = 1usize << n;
        if measure.len() != masks
            || measure.iter().any(|r| r.rows != carrier || r.cols != carrier)
        {
            return Err(ControlledObjectError::Shape);
        }
        for (mask, r) in measure.iter().enumerate() {
            if !r.is_partial_identity() {
                return Err(ControlledObjectError::NotPartialIdentity { mask });
            }
        }
        if measure[masks - 1] != Relation::identity(carrier)
            || !measure[0].is_empty()
        {
            return Err(ControlledObjectError::Normalization);
        }
        for y in 0..masks {
            for z in 0..masks {
                if measure[y].compose(&measure[z]) != measure[y & z] {
                    return Err(ControlledObjectError::Intersection(y, z));
                }
                // With sub-diagonal projections, + is union.
                let lhs = measure[y | z].union(&measure[y & z]);
                let rhs = measure[y].union(&measure[z]);
                if lhs != rhs {
                    return Err(ControlledObjectError::Additivity(y, z));
                }
            }
        }
        // Determined on points: the singleton images partition the carrier.
        let mut labels = vec![usize::MAX; carrier];
        for x in 0..n {
            for &(m, _) in &measure[1 << x].pairs {
                if labels[m] != usize::MAX {
                    return Err(ControlledObjectError::NotDeterminedOnPoints { element: m });
                }
                labels[m] = x;
            }
        }
        if let Some(element) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(ControlledObjectError::NotDeterminedOnPoints { element });
        }
        Ok(ControlledObject { carrier, measure, labels })
    }

    /// The canonical object with the given support labels.
    pub fn from_labels(space: &BornCoarseSpace, labels: Vec<usize>) -> ControlledObject {
        let n = space.points;
        let carrier = labels.len();
        let measure = (0..1usize << n)
            .map(|mask| Relation {
                rows: carrier,
                cols: carrier,
                pairs: labels
                    .iter()
                    .enumerate()
                    .filter(|&(_, &l)| mask & (1 << l) != 0)
                    .map(|(m, _)| (m, m))
                    .collect(),
            })
            .collect();
        ControlledObject { carrier, measure, labels }
    }

    pub fn phi(&self, mask: usize) -> &Relation {
        &self.measure[mask]
    }
}

/// Pushforward of a measure along a map of point sets: f_*(M, φ) = (M, φ∘f⁻¹).
pub fn pushforward_measure(
    obj: &ControlledObject,
    from_points: usize,
    to_points: usize,
    f: &[usize],
) -> ControlledObject {
    let masks_to = 1usize << to_points;
    let measure = (0..masks_to)
        .map(|mask| {
            // f⁻¹(Y) as a mask over the source points.
            let mut pre = 0usize;
            for (x, &fx) in f.iter().enumerate().take(from_points) {
                if mask & (1 << fx) != 0 {
                    pre |= 1 << x;
                }
            }
            obj.measure[pre].clone()
        })
        .collect();
    ControlledObject {
        carrier: obj.carrier,
        measure,
        labels: obj.labels.iter().map(|&l| f[l]).collect(),
    }
}

/// The vanishing condition φ'(B')∘A∘φ(B) = 0 over all U-separated pairs,
/// exhaustively over subset pairs.
pub fn is_controlled(
    space: &BornCoarseSpace,
    src: &ControlledObject,
    tgt: &ControlledObject,
    a: &Relation,
    u: &Relation,
) -> Result<bool, BoundExceeded> {
    let n = space.points;
    if n > 6 {
        return Err(BoundExceeded { cap: 1 << 12, spent: 1 << (2 * n) });
    }
    let masks = 1usize << n;
    for b in 0..masks {
        let b_set: BTreeSet<usize> = (0..n).filter(|x| b & (1 << x) != 0).collect();
        let thick = u.thicken(&b_set);
        for b2 in 0..masks {
            let b2_set: BTreeSet<usize> = (0..n).filter(|x| b2 & (1 << x) != 0).collect();
            if thick.intersection(&b2_set).next().is_some() {
                continue;
            }
            // U-separated: the composite must vanish.
            let composite = tgt.phi(b2).compose(&a.compose(src.phi(b)));
            if !composite.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The marked *-category V⁺(X) up to a carrier-size bound: objects are the
/// determined-on-points controlled objects with carrier {0, …, k} for
/// k ≤ max_carrier, morphisms the relations controlled by some entourage
/// (equivalently by the maximal one), star the transpose, marked the
/// diag(X)-controlled unitaries.
#[derive(Debug, Clone)]
pub struct VPlus {
    pub cat: MarkedStarCategory,
    pub objects: Vec<ControlledObject>,
    pub relations: Vec<Relation>,
}

impl VPlus {
    pub fn object_index(&self, labels: &[usize]) -> Option<usize> {
        self.objects.iter().position(|o| o.labels == labels)
    }

    pub fn morphism_index(&self, src: usize, tgt: usize, rel: &Relation) -> Option<usize> {
        self.cat
            .base()
            .morphisms()
            .find(|&m| self.cat.base().src(m) == src && self.cat.base().tgt(m) == tgt && &self.relations[m] == rel)
    }
}

pub fn build_vplus(
    space: &BornCoarseSpace,
    max_carrier: usize,
) -> Result<VPlus, BoundExceeded> {
    let n = space.points;
    if n > 4 || max_carrier > 3 {
        return Err(BoundExceeded { cap: 4, spent: n.max(max_carrier) as u64 });
    }
    // Objects: all labelings of carriers of size 0..=max_carrier.
    let mut objects: Vec<ControlledObject> = Vec::new();
    for k in 0..=max_carrier {
        let mut labelings: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..k {
            labelings = labelings
                .into_iter()
                .flat_map(|l| {
                    (0..n).map(move |x| {
                        let mut l2 = l.clone();
                        l2.push(x);
                        l2
                    })
                })
                .collect();
        }
        for labels in labelings {
            objects.push(ControlledObject::from_labels(space, labels));
        }
    }
    // Morphisms: subsets of the allowed pair set for each object pair.  A
    // relation is controlled by some entourage iff it is controlled by the
    // maximal one, iff every pair of supports lies in it.
    let u = &space.max_entourage;
    let mut mors: Vec<(usize, usize, Relation)> = Vec::new();
    for (oi, o) in objects.iter().enumerate() {
        for (oj, o2) in objects.iter().enumerate() {
            let allowed: Vec<(usize, usize)> = (0..o2.carrier)
                .flat_map(|m2| (0..o.carrier).map(move |m| (m2, m)))
                .filter(|&(m2, m)| u.pairs.contains(&(o2.labels[m2], o.labels[m])))
                .collect();
            let count = 1usize << allowed.len();
            for mask in 0..count {
                let pairs: BTreeSet<(usize, usize)> = allowed
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                mors.push((oi, oj, Relation { rows: o2.carrier, cols: o.carrier, pairs }));
            }
        }
    }
    let index_of = |oi: usize, oj: usize, r: &Relation| {
        mors.iter()
            .position(|(s, t, q)| *s == oi && *t == oj && q == r)
            .expect("controlled relation")
    };
    let mut compose = Vec::new();
    for (i2, (s2, t2, r2)) in mors.iter().enumerate() {
        for (i1, (s1, t1, r1)) in mors.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            compose.push((i2, i1, index_of(*s1, *t2, &r2.compose(r1))));
        }
    }
    let base = FinCategory::validate(&RawCategory {
        objects: objects.len(),
        morphisms: mors.iter().map(|(s, t, _)| (*s, *t)).collect(),
        identity: objects
            .iter()
            .enumerate()
            .map(|(oi, o)| index_of(oi, oi, &Relation::identity(o.carrier)))
            .collect(),
        compose,
    })
    .expect("controlled-object tables are valid");
    let star = mors.iter().map(|(s, t, r)| index_of(*t, *s, &r.transpose())).collect();
    let marked: BTreeSet<usize> = mors
        .iter()
        .enumerate()
        .filter(|(_, (s, t, r))| {
            r.is_bijection_graph()
                && r.pairs
                    .iter()
                    .all(|&(m2, m)| objects[*t].labels[m2] == objects[*s].labels[m])
        })
        .map(|(i, _)| i)
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked)
        .expect("V⁺ star structure is valid");
    Ok(VPlus { cat, objects, relations: mors.into_iter().map(|(_, _, r)| r).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::controlled::Bornology;

    #[test]
    fn measure_axioms_from_labels() {
        let space = BornCoarseSpace::validate(2, &[(0, 1)], Bornology::All).unwrap();
        let obj = ControlledObject::from_labels(&space, vec![0, 1, 1]);
        ControlledObject::validate(&space, 3, obj.measure.clone()).unwrap();
    }

    #[test]
    fn general_idempotent_is_rejected() {
        let space = BornCoarseSpace::validate(1, &[], Bornology::All).unwrap();
        // A non-diagonal selfadjoint idempotent: the full relation on two
        // elements (it is idempotent and symmetric but not a sub-diagonal).
        let full = Relation::full(2, 2);
        let measure = vec![Relation::empty(2, 2), full];
        assert!(matches!(
            ControlledObject::validate(&space, 2, measure),
            Err(ControlledObjectError::NotPartialIdentity { .. })
        ));
    }

    #[test]
    fn control_on_discrete_two_point_space() {
        let space = BornCoarseSpace::validate(2, &[], Bornology::All).unwrap();
        let m = ControlledObject::from_labels(&space, vec![0]);
        let m2 = ControlledObject::from_labels(&space, vec![1]);
        let link = Relation::from_pairs(1, 1, &[(0, 0)]);
        // A relation linking points over x₀ and x₁ is not diag-controlled:
        // ({x₀}, {x₁}) is a diag-separated witness.
        let diag = Relation::identity(2);
        assert!(!is_controlled(&space, &m, &m2, &link, &diag).unwrap());
        // With the full entourage there are no separated pairs.
        assert!(is_controlled(&space, &m, &m2, &link, &Relation::full(2, 2)).unwrap());
        // The identity is diag-controlled.
        assert!(is_controlled(&space, &m, &m, &Relation::identity(1), &diag).unwrap());
    }

    #[test]
    fn vplus_on_point_space() {
        let space = BornCoarseSpace::validate(1, &[], Bornology::All).unwrap();
        let v = build_vplus(&space, 2).unwrap();
        // Objects: carriers of size 0, 1, 2 with the unique labeling.
        assert_eq!(v.objects.len(), 3);
        // Everything is diag-controlled over a point: morphisms are all
        // relations.  Hom counts are 2^(|M'|·|M|) per object pair:
        // five empty-carrier homs, 2 + 4 + 4 + 16 for the rest.
        assert_eq!(v.cat.base().mor_count(), 31);
    }

    #[test]
    fn pushforward_to_point_gives_total_measure() {
        let space = BornCoarseSpace::validate(2, &[(0, 1)], Bornology::All).unwrap();
        let obj = ControlledObject::from_labels(&space, vec![0, 1]);
        let pushed = pushforward_measure(&obj, 2, 1, &[0, 0]);
        assert_eq!(pushed.labels, vec![0, 0]);
        assert_eq!(pushed.measure[1], Relation::identity(2));
        assert!(pushed.measure[0].is_empty());
    }
}

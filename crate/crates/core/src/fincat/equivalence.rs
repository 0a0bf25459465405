use super::{FinCategory, Functor};
use crate::bounds::{BoundExceeded, Budget};

/// Why a functor fails to be an equivalence of categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceWitness {
    /// No object of the domain maps to something isomorphic to this object.
    NotEssentiallySurjective { object: usize },
    /// The hom map at this pair is not surjective; carries a morphism of the
    /// codomain with no preimage.
    NotFull { pair: (usize, usize), morphism: usize },
    /// The hom map at this pair identifies two distinct morphisms.
    NotFaithful { pair: (usize, usize), morphisms: (usize, usize) },
}

/// Essential surjectivity plus full faithfulness, with a deterministic
/// witness if either fails.
pub fn is_equivalence(
    dom: &FinCategory,
    cod: &FinCategory,
    f: &Functor,
) -> Result<(), EquivalenceWitness> {
    for b in cod.objects() {
        if !dom.objects().any(|a| cod.objects_isomorphic(f.obj[a], b)) {
            return Err(EquivalenceWitness::NotEssentiallySurjective { object: b });
        }
    }
    for a in dom.objects() {
        for a2 in dom.objects() {
            let hom = dom.hom(a, a2);
            let image: Vec<usize> = hom.iter().map(|&m| f.mor[m]).collect();
            for target in cod.hom(f.obj[a], f.obj[a2]) {
                if !image.contains(&target) {
                    return Err(EquivalenceWitness::NotFull { pair: (a, a2), morphism: target });
                }
            }
            for (i, &m1) in hom.iter().enumerate() {
                for &m2 in &hom[i + 1..] {
                    if f.mor[m1] == f.mor[m2] {
                        return Err(EquivalenceWitness::NotFaithful {
                            pair: (a, a2),
                            morphisms: (m1, m2),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive search for an isomorphism of categories (structural bijection
/// on objects and morphisms).  First one in lexicographic order.
pub fn find_isomorphism(
    a: &FinCategory,
    b: &FinCategory,
    budget: &Budget,
) -> Result<Option<Functor>, BoundExceeded> {
    if a.ob_count() != b.ob_count() || a.mor_count() != b.mor_count() {
        return Ok(None);
    }
    for f in super::enumerate_functors(a, b, budget)? {
        let obj_bij = {
            let s: std::collections::BTreeSet<usize> = f.obj.iter().copied().collect();
            s.len() == b.ob_count()
        };
        let mor_bij = {
            let s: std::collections::BTreeSet<usize> = f.mor.iter().copied().collect();
            s.len() == b.mor_count()
        };
        if obj_bij && mor_bij {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn isomorphic(a: &FinCategory, b: &FinCategory, budget: &Budget) -> Result<bool, BoundExceeded> {
    Ok(find_isomorphism(a, b, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_equivalence() {
        let arrow = FinCategory::walking_arrow();
        assert!(is_equivalence(&arrow, &arrow, &Functor::identity(&arrow)).is_ok());
    }

    #[test]
    fn collapse_of_discrete_two_is_not_full() {
        let d2 = FinCategory::discrete(2);
        let pt = FinCategory::point();
        let collapse = Functor { obj: vec![0, 0], mor: vec![0, 0] };
        // The empty hom (0,1) maps onto {id}: fullness fails.
        assert_eq!(
            is_equivalence(&d2, &pt, &collapse),
            Err(EquivalenceWitness::NotFull { pair: (0, 1), morphism: 0 })
        );
    }

    #[test]
    fn isomorphism_search() {
        let d2 = FinCategory::discrete(2);
        assert!(isomorphic(&d2, &d2, &Budget::default()).unwrap());
        assert!(!isomorphic(&d2, &FinCategory::point(), &Budget::default()).unwrap());
    }
}

use super::MarkedStarCategory;
use crate::fincat::{FinGroupoid, Functor};

/// The four classifiers that admit finite models, plus the morphism
/// classifier which is only ever used through representability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifierKind {
    /// Δ⁰: the point.
    Object,
    /// 𝕀: the indiscrete groupoid on two objects, classifying invertibles.
    Invertible,
    /// 𝟙: two objects with a single unitary u, nothing but identities marked.
    Unitary,
    /// 𝟙⁺: same as 𝟙 with u marked.
    MarkedUnitary,
    /// Δ¹: not materialized in *-categories (morphisms 0 → 1 are the words
    /// aa*aa*…a; see the free-star presentation).  Only representable data.
    Morphism,
}

/// Finite classifier models.  `Morphism` has no finite model and panics;
/// callers use [`represented_hom`] for it instead.
pub fn classifier(kind: ClassifierKind) -> MarkedStarCategory {
    match kind {
        ClassifierKind::Object => MarkedStarCategory::point(),
        ClassifierKind::Invertible | ClassifierKind::Unitary => {
            MarkedStarCategory::from_groupoid_mi(&FinGroupoid::indiscrete(2))
        }
        ClassifierKind::MarkedUnitary => {
            MarkedStarCategory::from_groupoid_ma(&FinGroupoid::indiscrete(2))
        }
        ClassifierKind::Morphism => {
            panic!("the morphism classifier is infinite in *-categories; use represented_hom")
        }
    }
}

/// In the indiscrete-on-two model of 𝟙, the universal unitary u: 0 → 1.
pub const UNIVERSAL_UNITARY: usize = 1;

/// The represented set for a classifier kind, together with the explicit
/// functor realizing each element as a map out of the classifier.
#[derive(Debug, Clone)]
pub struct RepresentedHom {
    /// Elements of the represented set, as morphism or object ids of `B`.
    pub elements: Vec<usize>,
    /// For finite classifiers: the functor `classifier(kind) → B`
    /// corresponding to each element.  For `Morphism`, the generator
    /// assignment on the walking arrow (a functor into the underlying
    /// category, star images left free).
    pub functors: Vec<Functor>,
}

/// Ob(B) / Mor(B) / unitaries(B) / marked(B), with the bijection to
/// Hom(classifier, B) realized by functor construction.
pub fn represented_hom(kind: ClassifierKind, b: &MarkedStarCategory) -> RepresentedHom {
    match kind {
        ClassifierKind::Object => {
            let elements: Vec<usize> = b.base().objects().collect();
            let functors = elements
                .iter()
                .map(|&obj| Functor { obj: vec![obj], mor: vec![b.base().id(obj)] })
                .collect();
            RepresentedHom { elements, functors }
        }
        ClassifierKind::Morphism => {
            let elements: Vec<usize> = b.base().morphisms().collect();
            let functors = elements
                .iter()
                .map(|&m| Functor {
                    obj: vec![b.base().src(m), b.base().tgt(m)],
                    mor: vec![b.base().id(b.base().src(m)), b.base().id(b.base().tgt(m)), m],
                })
                .collect();
            RepresentedHom { elements, functors }
        }
        ClassifierKind::Invertible => {
            let elements: Vec<usize> =
                b.base().morphisms().filter(|&m| b.base().is_invertible(m)).collect();
            let functors = elements.iter().map(|&m| span_functor(b, m, b.base().inverse(m).expect("invertible"))).collect();
            RepresentedHom { elements, functors }
        }
        ClassifierKind::Unitary => {
            let elements = b.unitaries();
            let functors = elements.iter().map(|&u| span_functor(b, u, b.star(u))).collect();
            RepresentedHom { elements, functors }
        }
        ClassifierKind::MarkedUnitary => {
            let elements: Vec<usize> = b.marked().iter().copied().collect();
            let functors = elements.iter().map(|&u| span_functor(b, u, b.star(u))).collect();
            RepresentedHom { elements, functors }
        }
    }
}

/// The functor 𝕀 → B picking out u: src → tgt with the given inverse.
/// Morphism ids of the indiscrete groupoid on two objects: 0 = id₀,
/// 1 = (0→1), 2 = (1→0), 3 = id₁.
fn span_functor(b: &MarkedStarCategory, u: usize, u_inv: usize) -> Functor {
    let (s, t) = (b.base().src(u), b.base().tgt(u));
    Functor { obj: vec![s, t], mor: vec![b.base().id(s), u, u_inv, b.base().id(t)] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Budget;
    use crate::star::enumerate_star_functors;

    #[test]
    fn classifier_tables() {
        let u = classifier(ClassifierKind::Unitary);
        assert_eq!(u.base().ob_count(), 2);
        assert_eq!(u.base().mor_count(), 4);
        assert_eq!(u.marked().len(), 2);
        let up = classifier(ClassifierKind::MarkedUnitary);
        assert_eq!(up.marked().len(), 4);
        assert!(up.is_marked(UNIVERSAL_UNITARY));
        // u*u = id₀ and uu* = id₁ in the indiscrete model.
        let c = u.base();
        assert_eq!(c.compose(u.star(1), 1), Some(c.id(0)));
        assert_eq!(c.compose(1, u.star(1)), Some(c.id(1)));
    }

    #[test]
    fn representability_against_enumeration() {
        let z2 = crate::fincat::FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let targets = [
            MarkedStarCategory::point(),
            MarkedStarCategory::from_groupoid_mi(&z2),
            MarkedStarCategory::from_groupoid_ma(&z2),
            classifier(ClassifierKind::MarkedUnitary),
        ];
        let budget = Budget::default();
        for b in &targets {
            for (kind, cls) in [
                (ClassifierKind::Object, classifier(ClassifierKind::Object)),
                (ClassifierKind::Unitary, classifier(ClassifierKind::Unitary)),
                (ClassifierKind::MarkedUnitary, classifier(ClassifierKind::MarkedUnitary)),
            ] {
                let rep = represented_hom(kind, b);
                let homs = enumerate_star_functors(&cls, b, true, &budget).unwrap();
                assert_eq!(rep.elements.len(), homs.len(), "{:?}", kind);
                for f in &rep.functors {
                    assert!(homs.contains(f), "{:?}: constructed functor not found", kind);
                }
            }
        }
    }

    #[test]
    fn marked_of_mi_bz2_is_identity_only() {
        let z2 = crate::fincat::FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let mi = MarkedStarCategory::from_groupoid_mi(&z2);
        assert_eq!(represented_hom(ClassifierKind::MarkedUnitary, &mi).elements, vec![0]);
        assert_eq!(represented_hom(ClassifierKind::Unitary, &mi).elements, vec![0, 1]);
    }
}

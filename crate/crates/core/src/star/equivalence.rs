use super::{exists_unitary_iso, star_functor_ok, MarkedStarCategory};
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{is_equivalence, EquivalenceWitness, Functor};

/// Why a *-functor fails to be a weak equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakEquivalenceWitness {
    /// The underlying functor is not an equivalence of categories.
    Underlying(EquivalenceWitness),
    /// The induced functor on the marked (resp. unitary) subcategories is
    /// not an equivalence.  Ids refer to the subcategory.
    Subcategory(EquivalenceWitness),
}

/// Weak equivalence test: the underlying functor and the induced functor
/// on the marked (marked flavor) or unitary (plain flavor) subcategories
/// must both be equivalences of categories.
pub fn is_weak_equivalence(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    f: &Functor,
    marked: bool,
) -> Result<(), WeakEquivalenceWitness> {
    is_equivalence(dom.base(), cod.base(), f).map_err(WeakEquivalenceWitness::Underlying)?;
    let ((sub_dom, dom_ids), (sub_cod, cod_ids)) = if marked {
        (dom.marked_subcategory(), cod.marked_subcategory())
    } else {
        (dom.unitary_subcategory(), cod.unitary_subcategory())
    };
    let sub_functor = Functor {
        obj: f.obj.clone(),
        mor: dom_ids
            .iter()
            .map(|&m| {
                cod_ids
                    .iter()
                    .position(|&c| c == f.mor[m])
                    .expect("*-functors preserve unitaries and marked functors preserve markings")
            })
            .collect(),
    };
    is_equivalence(&sub_dom.cat, &sub_cod.cat, &sub_functor)
        .map_err(WeakEquivalenceWitness::Subcategory)
}

/// The definitional test: search for an inverse g together with unitary
/// (marked) isomorphisms f∘g ≅ id and g∘f ≅ id.  Returns the first inverse
/// found, if any.
pub fn definitional_weak_equivalence(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    f: &Functor,
    marked: bool,
    budget: &Budget,
) -> Result<Option<Functor>, BoundExceeded> {
    for g in super::enumerate_star_functors(cod, dom, marked, budget)? {
        let fg = f.after(&g);
        let gf = g.after(f);
        if exists_unitary_iso(cod, cod, &fg, &Functor::identity(cod.base()), marked, budget)?
            && exists_unitary_iso(dom, dom, &gf, &Functor::identity(dom.base()), marked, budget)?
        {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Check a *-functor and classify it with both routes, asserting agreement.
/// Used by the suites; returns the characterization verdict.
pub fn weak_equivalence_routes_agree(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    f: &Functor,
    marked: bool,
    budget: &Budget,
) -> Result<(bool, bool), BoundExceeded> {
    debug_assert!(star_functor_ok(dom, cod, f, marked).is_ok());
    let via_characterization = is_weak_equivalence(dom, cod, f, marked).is_ok();
    let via_search = definitional_weak_equivalence(dom, cod, f, marked, budget)?.is_some();
    Ok((via_characterization, via_search))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinGroupoid;
    use crate::star::classifiers::{classifier, ClassifierKind};

    #[test]
    fn identity_is_weak_equivalence() {
        let one = classifier(ClassifierKind::Unitary);
        let id = Functor::identity(one.base());
        assert!(is_weak_equivalence(&one, &one, &id, true).is_ok());
        assert!(
            definitional_weak_equivalence(&one, &one, &id, true, &Budget::default())
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn point_into_unitary_classifier() {
        // pt → 𝟙 at object 0 is a unitary equivalence of plain *-categories
        // but not a marked equivalence into mi(𝟙): object 1 is not
        // marked-isomorphic to 0.
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::Unitary);
        let incl = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        assert!(is_weak_equivalence(&pt, &one, &incl, false).is_ok());
        assert!(matches!(
            is_weak_equivalence(&pt, &one, &incl, true),
            Err(WeakEquivalenceWitness::Subcategory(
                EquivalenceWitness::NotEssentiallySurjective { object: 1 }
            ))
        ));
        // And into 𝟙⁺ it is a marked equivalence.
        let one_plus = classifier(ClassifierKind::MarkedUnitary);
        let incl2 = Functor { obj: vec![0], mor: vec![one_plus.base().id(0)] };
        assert!(is_weak_equivalence(&pt, &one_plus, &incl2, true).is_ok());
        // The definitional searches agree in all three cases.
        let b = Budget::default();
        assert!(definitional_weak_equivalence(&pt, &one, &incl, false, &b).unwrap().is_some());
        assert!(definitional_weak_equivalence(&pt, &one, &incl, true, &b).unwrap().is_none());
        assert!(definitional_weak_equivalence(&pt, &one_plus, &incl2, true, &b).unwrap().is_some());
    }

    #[test]
    fn collapse_of_bz2_fails_faithfulness() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_mi(&z2);
        let pt = MarkedStarCategory::point();
        let collapse = Functor { obj: vec![0], mor: vec![0, 0] };
        assert!(matches!(
            is_weak_equivalence(&bz2, &pt, &collapse, true),
            Err(WeakEquivalenceWitness::Underlying(EquivalenceWitness::NotFaithful { .. }))
        ));
    }
}

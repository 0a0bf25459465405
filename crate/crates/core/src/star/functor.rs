use super::MarkedStarCategory;
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{enumerate_functors, enumerate_transformations, Functor, NatTransformation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StarFunctorError {
    #[error(transparent)]
    Underlying(#[from] crate::fincat::FunctorError),
    #[error("star not preserved at morphism {f}")]
    Star { f: usize },
    #[error("marked morphism {f} has unmarked image")]
    Marked { f: usize },
}

/// Check that a functor of the underlying categories is a morphism of
/// (marked) *-categories.  With `marked = false` the marking is ignored.
pub fn star_functor_ok(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    f: &Functor,
    marked: bool,
) -> Result<(), StarFunctorError> {
    f.validate(dom.base(), cod.base())?;
    for m in dom.base().morphisms() {
        if f.mor[dom.star(m)] != cod.star(f.mor[m]) {
            return Err(StarFunctorError::Star { f: m });
        }
    }
    if marked {
        for &m in dom.marked() {
            if !cod.is_marked(f.mor[m]) {
                return Err(StarFunctorError::Marked { f: m });
            }
        }
    }
    Ok(())
}

/// All (marked) *-functors, in the lexicographic order inherited from the
/// underlying functor enumeration.
pub fn enumerate_star_functors(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    marked: bool,
    budget: &Budget,
) -> Result<Vec<Functor>, BoundExceeded> {
    Ok(enumerate_functors(dom.base(), cod.base(), budget)?
        .into_iter()
        .filter(|f| star_functor_ok(dom, cod, f, marked).is_ok())
        .collect())
}

/// All unitary (marked) natural isomorphisms `source → target`.
pub fn unitary_isos(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    source: &Functor,
    target: &Functor,
    marked: bool,
    budget: &Budget,
) -> Result<Vec<NatTransformation>, BoundExceeded> {
    let ok: Box<dyn Fn(usize) -> bool> = if marked {
        Box::new(|c| cod.is_marked(c))
    } else {
        Box::new(|c| cod.is_unitary(c))
    };
    enumerate_transformations(dom.base(), cod.base(), source, target, &ok, budget)
}

pub fn exists_unitary_iso(
    dom: &MarkedStarCategory,
    cod: &MarkedStarCategory,
    source: &Functor,
    target: &Functor,
    marked: bool,
    budget: &Budget,
) -> Result<bool, BoundExceeded> {
    Ok(!unitary_isos(dom, cod, source, target, marked, budget)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinGroupoid;

    #[test]
    fn star_functors_from_point_are_objects() {
        let pt = MarkedStarCategory::point();
        let i2 = MarkedStarCategory::from_groupoid_mi(&FinGroupoid::indiscrete(2));
        let fs = enumerate_star_functors(&pt, &i2, true, &Budget::default()).unwrap();
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn marking_constrains_functors() {
        // 𝟙 → 𝟙 with source marking full must land in marked morphisms.
        let i2 = FinGroupoid::indiscrete(2);
        let mi = MarkedStarCategory::from_groupoid_mi(&i2);
        let ma = MarkedStarCategory::from_groupoid_ma(&i2);
        let from_ma = enumerate_star_functors(&ma, &mi, true, &Budget::default()).unwrap();
        // Only the two constant functors survive: u must map to a marked
        // morphism of mi(𝟙), i.e. an identity.
        assert_eq!(from_ma.len(), 2);
        let from_mi = enumerate_star_functors(&mi, &mi, true, &Budget::default()).unwrap();
        assert_eq!(from_mi.len(), 4);
    }
}

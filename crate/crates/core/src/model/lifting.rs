use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::Functor;
use crate::star::{star_functor_ok, MarkedStarCategory};

/// A commuting square: i on the left, f on the right, top and bottom across.
#[derive(Debug, Clone, Copy)]
pub struct LiftingProblem<'a> {
    pub left_dom: &'a MarkedStarCategory,
    pub left_cod: &'a MarkedStarCategory,
    pub left: &'a Functor,
    pub right_dom: &'a MarkedStarCategory,
    pub right_cod: &'a MarkedStarCategory,
    pub right: &'a Functor,
    pub top: &'a Functor,
    pub bottom: &'a Functor,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftingError {
    #[error("the square does not commute")]
    NotCommuting,
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
}

/// Exhaustive search for a diagonal: a (marked) *-functor ℓ with
/// ℓ∘i = top and f∘ℓ = bottom.  Deterministic: lexicographic in object
/// assignment, then morphism assignment; the first lift is returned.
pub fn solve_lifting(
    p: &LiftingProblem<'_>,
    marked: bool,
    budget: &Budget,
) -> Result<Option<Functor>, LiftingError> {
    solve_lifting_where(p, marked, &|_| true, budget)
}

/// Like [`solve_lifting`], returning the first lift satisfying `accept`
/// (used for equivariant lifting, where the extra constraint is not part of
/// the square).
pub fn solve_lifting_where(
    p: &LiftingProblem<'_>,
    marked: bool,
    accept: &dyn Fn(&Functor) -> bool,
    budget: &Budget,
) -> Result<Option<Functor>, LiftingError> {
    if p.right.after(p.top) != p.bottom.after(p.left) {
        return Err(LiftingError::NotCommuting);
    }
    budget.start_scope();
    let b = p.left_cod.base();
    // Forced object images from the top triangle; the bottom constrains.
    let mut obj_forced: Vec<Option<usize>> = vec![None; b.ob_count()];
    for a in p.left_dom.base().objects() {
        obj_forced[p.left.obj[a]] = Some(p.top.obj[a]);
    }
    let mut mor_forced: Vec<Option<usize>> = vec![None; b.mor_count()];
    for m in p.left_dom.base().morphisms() {
        mor_forced[p.left.mor[m]] = Some(p.top.mor[m]);
    }
    let mut obj = vec![usize::MAX; b.ob_count()];
    let out = search_objects(p, &obj_forced, &mor_forced, &mut obj, 0, marked, accept, budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_objects(
    p: &LiftingProblem<'_>,
    obj_forced: &[Option<usize>],
    mor_forced: &[Option<usize>],
    obj: &mut Vec<usize>,
    next: usize,
    marked: bool,
    accept: &dyn Fn(&Functor) -> bool,
    budget: &Budget,
) -> Result<Option<Functor>, LiftingError> {
    let b = p.left_cod.base();
    let c = p.right_dom.base();
    if next == b.ob_count() {
        let mut mor = vec![usize::MAX; b.mor_count()];
        return search_morphisms(p, mor_forced, obj, &mut mor, 0, marked, accept, budget);
    }
    let candidates: Vec<usize> = match obj_forced[next] {
        Some(o) => vec![o],
        None => c
            .objects()
            .filter(|&o| p.right.obj[o] == p.bottom.obj[next])
            .collect(),
    };
    for cand in candidates {
        budget.step()?;
        if obj_forced[next].is_none() && p.right.obj[cand] != p.bottom.obj[next] {
            continue;
        }
        obj[next] = cand;
        if let Some(found) =
            search_objects(p, obj_forced, mor_forced, obj, next + 1, marked, accept, budget)?
        {
            return Ok(Some(found));
        }
        obj[next] = usize::MAX;
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search_morphisms(
    p: &LiftingProblem<'_>,
    mor_forced: &[Option<usize>],
    obj: &[usize],
    mor: &mut Vec<usize>,
    next: usize,
    marked: bool,
    accept: &dyn Fn(&Functor) -> bool,
    budget: &Budget,
) -> Result<Option<Functor>, LiftingError> {
    let b = p.left_cod.base();
    let c = p.right_dom.base();
    if next == b.mor_count() {
        let cand = Functor { obj: obj.to_vec(), mor: mor.clone() };
        let ok = star_functor_ok(p.left_cod, p.right_dom, &cand, marked).is_ok()
            && p.right.after(&cand) == *p.bottom
            && cand.after(p.left) == *p.top
            && accept(&cand);
        return Ok(if ok { Some(cand) } else { None });
    }
    let (s, t) = (obj[b.src(next)], obj[b.tgt(next)]);
    let candidates: Vec<usize> = match mor_forced[next] {
        Some(m) => vec![m],
        None => c
            .morphisms()
            .filter(|&m| {
                c.src(m) == s && c.tgt(m) == t && p.right.mor[m] == p.bottom.mor[next]
            })
            .collect(),
    };
    for cand in candidates {
        budget.step()?;
        if c.src(cand) != s || c.tgt(cand) != t {
            continue;
        }
        mor[next] = cand;
        // Composition consistency on everything assigned so far.
        let consistent = b.morphisms().all(|g| {
            b.morphisms().all(|f| match b.compose(g, f) {
                Some(gf) if g <= next && f <= next && gf <= next => {
                    c.compose(mor[g], mor[f]) == Some(mor[gf])
                }
                _ => true,
            })
        });
        if consistent {
            if let Some(found) =
                search_morphisms(p, mor_forced, obj, mor, next + 1, marked, accept, budget)?
            {
                return Ok(Some(found));
            }
        }
        mor[next] = usize::MAX;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{classifier, ClassifierKind};

    #[test]
    fn identity_square_lifts_by_identity() {
        let one = classifier(ClassifierKind::MarkedUnitary);
        let id = Functor::identity(one.base());
        let p = LiftingProblem {
            left_dom: &one,
            left_cod: &one,
            left: &id,
            right_dom: &one,
            right_cod: &one,
            right: &id,
            top: &id,
            bottom: &id,
        };
        let lift = solve_lifting(&p, true, &Budget::default()).unwrap().unwrap();
        assert_eq!(lift, id);
    }

    #[test]
    fn good_target_lifts_generator_square() {
        // left leg pt → 𝟙⁺ at 0; right leg 𝟙⁺ → pt; bottom unique; top at 0.
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::MarkedUnitary);
        let left = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let to_pt = Functor { obj: vec![0, 0], mor: vec![0; 4] };
        let top = Functor { obj: vec![0], mor: vec![0] };
        let bottom = Functor { obj: vec![0, 0], mor: vec![0; 4] };
        let p = LiftingProblem {
            left_dom: &pt,
            left_cod: &one,
            left: &left,
            right_dom: &one,
            right_cod: &pt,
            right: &to_pt,
            top: &top,
            bottom: &bottom,
        };
        assert!(solve_lifting(&p, true, &Budget::default()).unwrap().is_some());
    }

    #[test]
    fn no_lift_when_target_is_not_good() {
        // left leg pt → 𝟙 at 0 (marked flavor off); right leg pt → 𝟙 at 0.
        // Bottom picks the unitary u, which has no unitary preimage in pt.
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::Unitary);
        let left = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let right = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let top = Functor::identity(pt.base());
        let bottom = Functor::identity(one.base());
        let p = LiftingProblem {
            left_dom: &pt,
            left_cod: &one,
            left: &left,
            right_dom: &pt,
            right_cod: &one,
            right: &right,
            top: &top,
            bottom: &bottom,
        };
        assert!(solve_lifting(&p, false, &Budget::default()).unwrap().is_none());
    }
}

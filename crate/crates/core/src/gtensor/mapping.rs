use super::{sharp_times, SharpProduct};
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{FinGroupoid, Functor};
use crate::star::{enumerate_star_functors, unitary_isos, MarkedStarCategory};

/// The n-simplices of Map(A, B): functors A ♯ Iₙ → B, where Iₙ = Π(Δⁿ) is
/// the indiscrete groupoid on n+1 objects (materialized directly, bypassing
/// simplicial-set storage).
pub fn mapping_space(
    a: &MarkedStarCategory,
    b: &MarkedStarCategory,
    n: usize,
    marked: bool,
    budget: &Budget,
) -> Result<Vec<Functor>, BoundExceeded> {
    let sharp = sharp_times(a, &FinGroupoid::indiscrete(n + 1));
    enumerate_star_functors(&sharp.cat, b, marked, budget)
}

/// The morphism A ♯ I_m → A ♯ I_n induced by a vertex map [m] → [n]
/// (functors between indiscrete groupoids are exactly vertex maps).  Faces
/// and degeneracies of Map(A, B) are precomposition with these.
pub fn sharp_vertex_map(
    from: &SharpProduct,
    to: &SharpProduct,
    vmap: &[usize],
) -> Functor {
    debug_assert_eq!(vmap.len(), from.g_obs);
    let g_from = from.g_obs;
    let g_to = to.g_obs;
    let mut obj = Vec::with_capacity(from.cat.base().ob_count());
    for o in 0..from.cat.base().ob_count() {
        let (x, v) = (o / g_from, o % g_from);
        obj.push(x * g_to + vmap[v]);
    }
    let mut mor = Vec::with_capacity(from.cat.base().mor_count());
    for m in 0..from.cat.base().mor_count() {
        let (f, e) = (m / (g_from * g_from), m % (g_from * g_from));
        let (v0, v1) = (e / g_from, e % g_from);
        mor.push(f * (g_to * g_to) + vmap[v0] * g_to + vmap[v1]);
    }
    Functor { obj, mor }
}

/// The i-th face of a level-n simplex: precompose with A ♯ δᵢ.
pub fn face(a: &MarkedStarCategory, n: usize, i: usize, simplex: &Functor) -> Functor {
    let from = sharp_times(a, &FinGroupoid::indiscrete(n));
    let to = sharp_times(a, &FinGroupoid::indiscrete(n + 1));
    let vmap: Vec<usize> = (0..n).map(|v| if v < i { v } else { v + 1 }).collect();
    simplex.after(&sharp_vertex_map(&from, &to, &vmap))
}

/// The j-th degeneracy of a level-n simplex: precompose with A ♯ σⱼ.
pub fn degeneracy(a: &MarkedStarCategory, n: usize, j: usize, simplex: &Functor) -> Functor {
    let from = sharp_times(a, &FinGroupoid::indiscrete(n + 2));
    let to = sharp_times(a, &FinGroupoid::indiscrete(n + 1));
    let vmap: Vec<usize> = (0..n + 2).map(|v| if v <= j { v } else { v - 1 }).collect();
    simplex.after(&sharp_vertex_map(&from, &to, &vmap))
}

/// The level-1 correspondence: 1-simplices of Map(A, B) are in bijection
/// with triples (f₀, f₁, u) of two functors and a (marked) unitary
/// isomorphism u: f₀ → f₁.  Checks the bijection by exhaustion.
pub fn level_one_isos_agree(
    a: &MarkedStarCategory,
    b: &MarkedStarCategory,
    marked: bool,
    budget: &Budget,
) -> Result<bool, BoundExceeded> {
    let level1 = mapping_space(a, b, 1, marked, budget)?;
    let sharp = sharp_times(a, &FinGroupoid::indiscrete(2));
    let mut triples = Vec::new();
    for u in &level1 {
        // fᵢ = U ∘ ιᵢ, u_c = U(id_c, 0→1).
        let f0 = restrict_at_vertex(&sharp, u, 0);
        let f1 = restrict_at_vertex(&sharp, u, 1);
        let comps: Vec<usize> = a
            .base()
            .objects()
            .map(|c| u.mor[sharp.mor(a.base().id(c), 1)])
            .collect();
        triples.push((f0, f1, comps));
    }
    // Each extracted component family must be a (marked) unitary iso, and
    // the assignment must biject onto all such triples.
    let mut expected = 0usize;
    let fs = enumerate_star_functors(a, b, marked, budget)?;
    for f0 in &fs {
        for f1 in &fs {
            expected += unitary_isos(a, b, f0, f1, marked, budget)?.len();
        }
    }
    if triples.len() != expected || triples.len() != level1.len() {
        return Ok(false);
    }
    let mut seen = triples.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != triples.len() {
        return Ok(false);
    }
    for (f0, f1, comps) in &triples {
        let t = crate::fincat::NatTransformation { components: comps.clone() };
        let ok = crate::fincat::check_natural(a.base(), b.base(), f0, f1, &t).is_ok()
            && comps.iter().all(|&c| if marked { b.is_marked(c) } else { b.is_unitary(c) });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn restrict_at_vertex(sharp: &SharpProduct, u: &Functor, v: usize) -> Functor {
    let g = FinGroupoid::indiscrete(sharp.g_obs);
    Functor {
        obj: (0..sharp.a_obs).map(|x| u.obj[sharp.ob(x, v)]).collect(),
        mor: (0..sharp.a_mors).map(|f| u.mor[sharp.mor(f, g.cat.id(v))]).collect(),
    }
}

/// d_i ∘ d_j = d_{j-1} ∘ d_i for i < j, on the 2-simplices of Map(A, B).
pub fn simplicial_identities_hold(
    a: &MarkedStarCategory,
    b: &MarkedStarCategory,
    marked: bool,
    budget: &Budget,
) -> Result<bool, BoundExceeded> {
    let level2 = mapping_space(a, b, 2, marked, budget)?;
    for s in &level2 {
        for j in 0..3usize {
            for i in 0..j {
                let left = face(a, 1, i, &face(a, 2, j, s));
                let right = face(a, 1, j - 1, &face(a, 2, i, s));
                if left != right {
                    return Ok(false);
                }
            }
        }
    }
    // Degeneracies of 0-simplices are 1-simplices with identity components.
    let level0 = mapping_space(a, b, 0, marked, budget)?;
    for s in &level0 {
        let s1 = degeneracy_of_zero(a, s);
        let d0 = face(a, 1, 0, &s1);
        let d1 = face(a, 1, 1, &s1);
        if &d0 != s || &d1 != s {
            return Ok(false);
        }
    }
    Ok(true)
}

fn degeneracy_of_zero(a: &MarkedStarCategory, s: &Functor) -> Functor {
    let from = sharp_times(a, &FinGroupoid::indiscrete(2));
    let to = sharp_times(a, &FinGroupoid::indiscrete(1));
    s.after(&sharp_vertex_map(&from, &to, &[0, 0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{classifier, ClassifierKind};

    #[test]
    fn map_point_levels() {
        let pt = MarkedStarCategory::point();
        let b = classifier(ClassifierKind::MarkedUnitary);
        let budget = Budget::default();
        // Map(pt, B)[0] ↔ Ob(B); Map(pt, B)[1] ↔ marked morphisms.
        assert_eq!(mapping_space(&pt, &b, 0, true, &budget).unwrap().len(), 2);
        assert_eq!(mapping_space(&pt, &b, 1, true, &budget).unwrap().len(), 4);
        let bu = classifier(ClassifierKind::Unitary);
        assert_eq!(mapping_space(&pt, &bu, 1, true, &budget).unwrap().len(), 2);
        assert_eq!(mapping_space(&pt, &bu, 1, false, &budget).unwrap().len(), 4);
    }

    #[test]
    fn level_one_bijection_and_identities() {
        let pt = MarkedStarCategory::point();
        let b = classifier(ClassifierKind::MarkedUnitary);
        let budget = Budget::default();
        assert!(level_one_isos_agree(&pt, &b, true, &budget).unwrap());
        assert!(simplicial_identities_hold(&pt, &b, true, &budget).unwrap());
    }
}

use super::Factorization;
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{FinCategory, Functor, RawCategory};
use crate::star::MarkedStarCategory;
use std::collections::BTreeSet;

/// The path object P(a) of a: A → B, as the pull-back of evaluation at 1 on
/// Fun^?(𝕀, B) along a.
///
/// Concretely: objects are pairs (u, x) of a (marked) unitary u of B ending
/// at a(x); morphisms (u, x) → (u', x') are pairs (w₀: src u → src u',
/// f: x → x') with u'∘w₀ = a(f)∘u; everything is componentwise.  Returns
/// the factorization a = p ∘ j with j(x) = (id_{a(x)}, x) a trivial
/// cofibration and p(u, x) = src(u) a fibration, together with the marked
/// unitary isomorphism certifying j and the good-lift recipe certifying p.
pub struct PathObject {
    pub fact: Factorization,
    /// (unitary of B, object of A) per path object.
    pub objects: Vec<(usize, usize)>,
    /// (w₀, f) per path morphism.
    pub pairs: Vec<(usize, usize)>,
}

pub fn path_factorize(
    a_dom: &MarkedStarCategory,
    b_cod: &MarkedStarCategory,
    a: &Functor,
    marked: bool,
    budget: &Budget,
) -> Result<PathObject, BoundExceeded> {
    budget.start_scope();
    let units: Vec<usize> = if marked {
        b_cod.marked().iter().copied().collect()
    } else {
        b_cod.unitaries()
    };
    let mut objects = Vec::new();
    for x in a_dom.base().objects() {
        for &u in &units {
            if b_cod.base().tgt(u) == a.obj[x] {
                objects.push((u, x));
            }
        }
    }
    let mut mors: Vec<(usize, usize, (usize, usize))> = Vec::new();
    for (oi, &(u, x)) in objects.iter().enumerate() {
        for (oj, &(u2, x2)) in objects.iter().enumerate() {
            for f in a_dom.base().hom(x, x2) {
                for w0 in b_cod.base().hom(b_cod.base().src(u), b_cod.base().src(u2)) {
                    budget.step()?;
                    let left = b_cod.base().compose(u2, w0);
                    let right = b_cod.base().compose(a.mor[f], u);
                    if left == right {
                        mors.push((oi, oj, (w0, f)));
                    }
                }
            }
        }
    }
    let index_of = |oi: usize, oj: usize, w0: usize, f: usize| {
        mors.iter().position(|&m| m == (oi, oj, (w0, f))).expect("path morphism")
    };
    let mut compose = Vec::new();
    for (i2, &(s2, t2, (w2, f2))) in mors.iter().enumerate() {
        for (i1, &(s1, t1, (w1, f1))) in mors.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let w = b_cod.base().compose(w2, w1).expect("component composable");
            let f = a_dom.base().compose(f2, f1).expect("component composable");
            compose.push((i2, i1, index_of(s1, t2, w, f)));
        }
    }
    let base = FinCategory::validate(&RawCategory {
        objects: objects.len(),
        morphisms: mors.iter().map(|&(s, t, _)| (s, t)).collect(),
        identity: objects
            .iter()
            .enumerate()
            .map(|(oi, &(u, x))| {
                index_of(oi, oi, b_cod.base().id(b_cod.base().src(u)), a_dom.base().id(x))
            })
            .collect(),
        compose,
    })
    .expect("path object tables are valid");
    let star = mors
        .iter()
        .map(|&(s, t, (w0, f))| index_of(t, s, b_cod.star(w0), a_dom.star(f)))
        .collect();
    let marked_set: BTreeSet<usize> = mors
        .iter()
        .enumerate()
        .filter(|(_, &(_, _, (w0, f)))| b_cod.is_marked(w0) && a_dom.is_marked(f))
        .map(|(i, _)| i)
        .collect();
    let mid = MarkedStarCategory::validate(base, star, marked_set)
        .expect("path object star structure is valid");
    let j = Functor {
        obj: a_dom
            .base()
            .objects()
            .map(|x| {
                objects
                    .iter()
                    .position(|&(u, y)| y == x && u == b_cod.base().id(a.obj[x]))
                    .expect("j object")
            })
            .collect(),
        mor: a_dom
            .base()
            .morphisms()
            .map(|f| {
                let x = a_dom.base().src(f);
                let x2 = a_dom.base().tgt(f);
                let oi = objects
                    .iter()
                    .position(|&(u, y)| y == x && u == b_cod.base().id(a.obj[x]))
                    .unwrap();
                let oj = objects
                    .iter()
                    .position(|&(u, y)| y == x2 && u == b_cod.base().id(a.obj[x2]))
                    .unwrap();
                index_of(oi, oj, a.mor[f], f)
            })
            .collect(),
    };
    let p = Functor {
        obj: objects.iter().map(|&(u, _)| b_cod.base().src(u)).collect(),
        mor: mors.iter().map(|&(_, _, (w0, _))| w0).collect(),
    };
    Ok(PathObject {
        fact: Factorization { mid, first: j, second: p },
        objects,
        pairs: mors.iter().map(|&(_, _, pair)| pair).collect(),
    })
}

/// The explicit good-lift recipe for p: given a (marked) unitary
/// v: p(u, x) → d, the object c := (u∘v*, x) and the morphism (v, id_x)
/// solve the lifting instance.  Verifies the recipe for every instance.
pub fn path_good_recipe_holds(
    a_dom: &MarkedStarCategory,
    b_cod: &MarkedStarCategory,
    path: &PathObject,
    marked: bool,
) -> bool {
    let units: Vec<usize> = if marked {
        b_cod.marked().iter().copied().collect()
    } else {
        b_cod.unitaries()
    };
    for (oi, &(u, x)) in path.objects.iter().enumerate() {
        for &v in &units {
            if b_cod.base().src(v) != b_cod.base().src(u) {
                continue;
            }
            let new_u = b_cod
                .base()
                .compose(u, b_cod.star(v))
                .expect("u∘v* is defined");
            let Some(oj) = path.objects.iter().position(|&o| o == (new_u, x)) else {
                return false;
            };
            // The lift (v, id_x) must exist in P(a) and project to v.
            let found = path
                .pairs
                .iter()
                .enumerate()
                .any(|(m, &(w0, f))| {
                    w0 == v
                        && f == a_dom.base().id(x)
                        && path.fact.mid.base().src(m) == oi
                        && path.fact.mid.base().tgt(m) == oj
                        && (!marked || path.fact.mid.is_marked(m) == (b_cod.is_marked(v)))
                });
            if !found {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinGroupoid;
    use crate::model::{is_cofibration, is_good};
    use crate::star::is_weak_equivalence;

    #[test]
    fn path_of_identity_on_point_is_point() {
        let pt = MarkedStarCategory::point();
        let p = path_factorize(&pt, &pt, &Functor::identity(pt.base()), true, &Budget::default())
            .unwrap();
        assert_eq!(p.fact.mid.base().ob_count(), 1);
        assert_eq!(p.fact.second.after(&p.fact.first), Functor::identity(pt.base()));
    }

    #[test]
    fn path_of_point_into_bz2() {
        let pt = MarkedStarCategory::point();
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_ma(&z2);
        let incl = Functor { obj: vec![0], mor: vec![0] };
        let p = path_factorize(&pt, &bz2, &incl, true, &Budget::default()).unwrap();
        // Objects: the marked morphisms of BZ₂ ending at the point: {e, s}.
        assert_eq!(p.fact.mid.base().ob_count(), 2);
        assert_eq!(p.fact.second.after(&p.fact.first), incl);
        assert!(is_cofibration(&p.fact.first));
        assert!(is_weak_equivalence(&pt, &p.fact.mid, &p.fact.first, true).is_ok());
        assert!(is_good(&p.fact.mid, &bz2, &p.fact.second, true).is_ok());
        assert!(path_good_recipe_holds(&pt, &bz2, &p, true));
    }
}

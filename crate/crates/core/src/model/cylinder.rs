use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{FinCategory, FinGroupoid, Functor, RawCategory};
use crate::gtensor::sharp_times;
use crate::star::{
    enumerate_star_functors, LinearFunctor, LinearStarCategory, MarkedStarCategory,
};
use std::collections::BTreeSet;

/// A factorization A → mid → B.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub mid: MarkedStarCategory,
    pub first: Functor,
    pub second: Functor,
}

/// The mapping cylinder Z̃(a) of a: A → B.
///
/// Objects are Ob(A) ⊔ Ob(B).  Writing â for the object map sending an
/// A-side object x to a(x) and a B-side object to itself, the hom-set
/// between any two cylinder objects is Hom_B(â(o), â(o')); composition,
/// star, and enrichment are those of B on representatives.  (On the A-side
/// this realizes the hom-sets of the defining pushout: every morphism
/// x → y there is u_y⁻¹∘g∘u_x for a unique g in Hom_B(a(x), a(y)), with u
/// the tautological unitary — the collapse q must be fully faithful, which
/// pins this presentation.)  Marked morphisms are those whose representative
/// is marked in B; this is the closure of the markings of A and B.
#[derive(Debug, Clone)]
pub struct Cylinder {
    pub fact: Factorization,
    /// Number of A-side objects; objects ≥ this are B-side.
    pub a_side: usize,
    /// B-morphism representative of each cylinder morphism.
    pub reps: Vec<usize>,
    /// The inclusion B → Z̃(a).
    pub b_incl: Functor,
}

pub fn cylinder_factorize(
    a_dom: &MarkedStarCategory,
    b_cod: &MarkedStarCategory,
    a: &Functor,
) -> Cylinder {
    let na = a_dom.base().ob_count();
    let nb = b_cod.base().ob_count();
    let n = na + nb;
    let hat = |o: usize| if o < na { a.obj[o] } else { o - na };
    // Morphisms: (src object, tgt object, B-representative), lex order.
    let mut mors: Vec<(usize, usize, usize)> = Vec::new();
    for o1 in 0..n {
        for o2 in 0..n {
            for g in b_cod.base().hom(hat(o1), hat(o2)) {
                mors.push((o1, o2, g));
            }
        }
    }
    let index_of = |o1: usize, o2: usize, g: usize| {
        mors.iter().position(|&m| m == (o1, o2, g)).expect("cylinder morphism")
    };
    let mut compose = Vec::new();
    for (i2, &(s2, t2, g2)) in mors.iter().enumerate() {
        for (i1, &(s1, t1, g1)) in mors.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let g = b_cod.base().compose(g2, g1).expect("representatives compose");
            compose.push((i2, i1, index_of(s1, t2, g)));
        }
    }
    let base = FinCategory::validate(&RawCategory {
        objects: n,
        morphisms: mors.iter().map(|&(s, t, _)| (s, t)).collect(),
        identity: (0..n).map(|o| index_of(o, o, b_cod.base().id(hat(o)))).collect(),
        compose,
    })
    .expect("cylinder tables are valid");
    let star = mors
        .iter()
        .map(|&(s, t, g)| index_of(t, s, b_cod.star(g)))
        .collect();
    let marked: BTreeSet<usize> = mors
        .iter()
        .enumerate()
        .filter(|(_, &(_, _, g))| b_cod.is_marked(g))
        .map(|(i, _)| i)
        .collect();
    let mid = MarkedStarCategory::validate(base, star, marked)
        .expect("cylinder star structure is valid");
    let j = Functor {
        obj: (0..na).collect(),
        mor: a_dom
            .base()
            .morphisms()
            .map(|f| index_of(a_dom.base().src(f), a_dom.base().tgt(f), a.mor[f]))
            .collect(),
    };
    let q = Functor {
        obj: (0..n).map(hat).collect(),
        mor: mors.iter().map(|&(_, _, g)| g).collect(),
    };
    let b_incl = Functor {
        obj: (0..nb).map(|y| na + y).collect(),
        mor: b_cod
            .base()
            .morphisms()
            .map(|g| index_of(na + b_cod.base().src(g), na + b_cod.base().tgt(g), g))
            .collect(),
    };
    let reps = mors.iter().map(|&(_, _, g)| g).collect();
    Cylinder { fact: Factorization { mid, first: j, second: q }, a_side: na, reps, b_incl }
}

/// The canonical morphism A♯𝕀 → Z̃(a) used in the pushout comparison:
/// (x, 0) ↦ x, (x, 1) ↦ a(x), morphisms to their B-representatives.
pub fn cylinder_canonical_from_sharp(
    a_dom: &MarkedStarCategory,
    a: &Functor,
    cyl: &Cylinder,
) -> Functor {
    let sharp = sharp_times(a_dom, &FinGroupoid::indiscrete(2));
    let na = cyl.a_side;
    let side = |x: usize, v: usize| if v == 0 { x } else { na + a.obj[x] };
    let mid = &cyl.fact.mid;
    let find = |o1: usize, o2: usize, g: usize| {
        mid.base()
            .morphisms()
            .find(|&m| {
                mid.base().src(m) == o1 && mid.base().tgt(m) == o2 && cyl.reps[m] == g
            })
            .expect("cylinder morphism")
    };
    let mut obj = vec![0usize; sharp.cat.base().ob_count()];
    for x in a_dom.base().objects() {
        for v in 0..2 {
            obj[sharp.ob(x, v)] = side(x, v);
        }
    }
    let mut mor = vec![0usize; sharp.cat.base().mor_count()];
    let i2 = FinGroupoid::indiscrete(2);
    for f in a_dom.base().morphisms() {
        for e in i2.cat.morphisms() {
            let (v0, v1) = (i2.cat.src(e), i2.cat.tgt(e));
            mor[sharp.mor(f, e)] =
                find(side(a_dom.base().src(f), v0), side(a_dom.base().tgt(f), v1), a.mor[f]);
        }
    }
    Functor { obj, mor }
}

/// The universal property of the defining pushout, by exhaustion: functors
/// Z̃(a) → D correspond bijectively to pairs (φ: A♯𝕀 → D, ψ: B → D) with
/// φ∘(1) = ψ∘a.
pub fn cylinder_ump_agrees(
    a_dom: &MarkedStarCategory,
    b_cod: &MarkedStarCategory,
    a: &Functor,
    cyl: &Cylinder,
    d: &MarkedStarCategory,
    marked: bool,
    budget: &Budget,
) -> Result<bool, BoundExceeded> {
    let sharp = sharp_times(a_dom, &FinGroupoid::indiscrete(2));
    let canonical = cylinder_canonical_from_sharp(a_dom, a, cyl);
    // (1): A → A♯𝕀 at vertex 1.
    let i2 = FinGroupoid::indiscrete(2);
    let at1 = Functor {
        obj: a_dom.base().objects().map(|x| sharp.ob(x, 1)).collect(),
        mor: a_dom.base().morphisms().map(|f| sharp.mor(f, i2.cat.id(1))).collect(),
    };
    let from_mid = enumerate_star_functors(&cyl.fact.mid, d, marked, budget)?;
    let phis = enumerate_star_functors(&sharp.cat, d, marked, budget)?;
    let psis = enumerate_star_functors(b_cod, d, marked, budget)?;
    let mut pairs = Vec::new();
    for phi in &phis {
        for psi in &psis {
            if phi.after(&at1) == psi.after(a) {
                pairs.push((phi.clone(), psi.clone()));
            }
        }
    }
    if pairs.len() != from_mid.len() {
        return Ok(false);
    }
    // The comparison map must be injective into the compatible pairs.
    let mut images = Vec::new();
    for big in &from_mid {
        let phi = big.after(&canonical);
        let psi = big.after(&cyl.b_incl);
        if !pairs.contains(&(phi.clone(), psi.clone())) {
            return Ok(false);
        }
        images.push((phi, psi));
    }
    images.sort();
    images.dedup();
    Ok(images.len() == from_mid.len())
}

/// Linear cylinder: same object set, hom spaces Hom_B(â(o), â(o')) with the
/// tables of B, marked elements those with marked representative.
#[derive(Debug, Clone)]
pub struct LinearFactorization {
    pub mid: LinearStarCategory,
    pub first: LinearFunctor,
    pub second: LinearFunctor,
    pub a_side: usize,
}

pub fn cylinder_factorize_linear(
    a_dom: &LinearStarCategory,
    b_cod: &LinearStarCategory,
    a: &LinearFunctor,
) -> LinearFactorization {
    let na = a_dom.ob_count();
    let nb = b_cod.ob_count();
    let n = na + nb;
    let hat: Vec<usize> = (0..n).map(|o| if o < na { a.obj[o] } else { o - na }).collect();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|o1| (0..n).map(|o2| b_cod.dim(hat[o1], hat[o2])).collect()).collect();
    let compose: Vec<Vec<Vec<Vec<Vec<Vec<crate::scalar::Scalar>>>>>> = (0..n)
        .map(|o1| {
            (0..n)
                .map(|o2| {
                    (0..n)
                        .map(|o3| {
                            let (x, y, z) = (hat[o1], hat[o2], hat[o3]);
                            (0..b_cod.dim(y, z))
                                .map(|j| {
                                    (0..b_cod.dim(x, y))
                                        .map(|i| {
                                            b_cod
                                                .compose_elems(
                                                    &b_cod.basis_elem(y, z, j),
                                                    &b_cod.basis_elem(x, y, i),
                                                )
                                                .coeffs
                                        })
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let identity = (0..n).map(|o| b_cod.identity_elem(hat[o]).coeffs).collect();
    let star = (0..n)
        .map(|o1| {
            (0..n)
                .map(|o2| {
                    (0..b_cod.dim(hat[o1], hat[o2]))
                        .map(|i| b_cod.star_elem(&b_cod.basis_elem(hat[o1], hat[o2], i)).coeffs)
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut marked = Vec::new();
    for m in b_cod.marked() {
        for o1 in 0..n {
            for o2 in 0..n {
                if hat[o1] == m.src && hat[o2] == m.tgt {
                    marked.push(crate::star::LinElem {
                        src: o1,
                        tgt: o2,
                        coeffs: m.coeffs.clone(),
                    });
                }
            }
        }
    }
    let mid = LinearStarCategory::validate(n, dims, compose, identity, star, marked)
        .expect("linear cylinder is valid");
    let first = LinearFunctor {
        obj: (0..na).collect(),
        maps: (0..na)
            .map(|x| (0..na).map(|y| a.maps[x][y].clone()).collect())
            .collect(),
    };
    let second = LinearFunctor {
        obj: hat.clone(),
        maps: (0..n)
            .map(|o1| {
                (0..n)
                    .map(|o2| {
                        (0..b_cod.dim(hat[o1], hat[o2]))
                            .map(|i| b_cod.basis_elem(hat[o1], hat[o2], i).coeffs)
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    };
    LinearFactorization { mid, first, second, a_side: na }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_cofibration, is_good};
    use crate::star::{classifier, is_weak_equivalence, ClassifierKind};

    #[test]
    fn cylinder_of_identity_on_point_is_indiscrete() {
        let pt = MarkedStarCategory::point();
        let cyl = cylinder_factorize(&pt, &pt, &Functor::identity(pt.base()));
        assert_eq!(cyl.fact.mid.base().ob_count(), 2);
        assert_eq!(cyl.fact.mid.base().mor_count(), 4);
        // q∘j = a.
        assert_eq!(cyl.fact.second.after(&cyl.fact.first), Functor::identity(pt.base()));
        assert!(is_cofibration(&cyl.fact.first));
        assert!(is_good(&cyl.fact.mid, &pt, &cyl.fact.second, true).is_ok());
        assert!(is_weak_equivalence(&cyl.fact.mid, &pt, &cyl.fact.second, true).is_ok());
    }

    #[test]
    fn cylinder_of_inclusion_has_three_objects() {
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::MarkedUnitary);
        let incl = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let cyl = cylinder_factorize(&pt, &one, &incl);
        assert_eq!(cyl.fact.mid.base().ob_count(), 3);
        assert_eq!(cyl.fact.second.after(&cyl.fact.first), incl);
        assert!(is_cofibration(&cyl.fact.first));
        assert!(is_good(&cyl.fact.mid, &one, &cyl.fact.second, true).is_ok());
        assert!(is_weak_equivalence(&cyl.fact.mid, &one, &cyl.fact.second, true).is_ok());
    }

    #[test]
    fn ump_count_on_small_targets() {
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::MarkedUnitary);
        let incl = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let cyl = cylinder_factorize(&pt, &one, &incl);
        let budget = Budget::default();
        for d in [MarkedStarCategory::point(), classifier(ClassifierKind::MarkedUnitary)] {
            assert!(cylinder_ump_agrees(&pt, &one, &incl, &cyl, &d, true, &budget).unwrap());
        }
    }

    #[test]
    fn linear_cylinder_certificates() {
        let linpt = crate::star::linearize(&MarkedStarCategory::point());
        let id = LinearFunctor::identity(&linpt.cat);
        let f = cylinder_factorize_linear(&linpt.cat, &linpt.cat, &id);
        f.first.validate(&linpt.cat, &f.mid, true).unwrap();
        f.second.validate(&f.mid, &linpt.cat, true).unwrap();
        // q∘j = a on objects and hom matrices.
        let qj = f.second.after(&f.first, &linpt.cat, &f.mid, &linpt.cat);
        assert_eq!(qj, id);
    }
}

use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{
    enumerate_functors, enumerate_transformations, FinGroupoid, Functor, NatTransformation,
    RawCategory,
};
use crate::linalg::{columns, Matrix, Vector};
use crate::star::{LinElem, LinearStarCategory, MarkedStarCategory};
use std::collections::BTreeSet;

/// Fun^u(𝔾, A), materialized: objects are the unitary (resp. marked)
/// functors 𝔾 → A, morphisms are all natural transformations, the star is
/// componentwise, and the marked morphisms are the componentwise-marked
/// transformations.
#[derive(Debug, Clone)]
pub struct FunuCat {
    pub cat: MarkedStarCategory,
    pub objects: Vec<Functor>,
    /// (source object index, target object index, components) per morphism.
    pub morphisms: Vec<(usize, usize, NatTransformation)>,
}

impl FunuCat {
    pub fn object_index(&self, f: &Functor) -> Option<usize> {
        self.objects.iter().position(|g| g == f)
    }

    pub fn morphism_index(&self, src: usize, tgt: usize, t: &NatTransformation) -> Option<usize> {
        self.morphisms.iter().position(|(s, tg, u)| *s == src && *tg == tgt && u == t)
    }
}

/// Enumerate Fun^u(𝔾, A).  With `value_marked` the objects are the functors
/// landing in marked morphisms (the marked flavor); otherwise unitary-valued
/// functors (the plain flavor).
pub fn funu(
    g: &FinGroupoid,
    a: &MarkedStarCategory,
    value_marked: bool,
    budget: &Budget,
) -> Result<FunuCat, BoundExceeded> {
    let objects: Vec<Functor> = enumerate_functors(&g.cat, a.base(), budget)?
        .into_iter()
        .filter(|f| {
            f.mor.iter().all(|&m| if value_marked { a.is_marked(m) } else { a.is_unitary(m) })
        })
        .collect();
    let mut morphisms = Vec::new();
    for (si, s) in objects.iter().enumerate() {
        for (ti, t) in objects.iter().enumerate() {
            for tr in enumerate_transformations(&g.cat, a.base(), s, t, &|_| true, budget)? {
                morphisms.push((si, ti, tr));
            }
        }
    }
    let find = |si: usize, ti: usize, tr: &NatTransformation| {
        morphisms
            .iter()
            .position(|(s, t, u)| *s == si && *t == ti && u == tr)
            .expect("closed under the structure maps")
    };
    let identity: Vec<usize> = (0..objects.len())
        .map(|oi| {
            let comps = g
                .cat
                .objects()
                .map(|x| a.base().id(objects[oi].obj[x]))
                .collect();
            find(oi, oi, &NatTransformation { components: comps })
        })
        .collect();
    let mut compose = Vec::new();
    for (gi, (gs, gt, gc)) in morphisms.iter().enumerate() {
        for (fi, (fs, ft, fc)) in morphisms.iter().enumerate() {
            if ft != gs {
                continue;
            }
            let comps: Vec<usize> = g
                .cat
                .objects()
                .map(|x| a.base().compose(gc.components[x], fc.components[x]).expect("componentwise"))
                .collect();
            compose.push((gi, fi, find(*fs, *gt, &NatTransformation { components: comps })));
        }
    }
    let base = crate::fincat::FinCategory::validate(&RawCategory {
        objects: objects.len(),
        morphisms: morphisms.iter().map(|(s, t, _)| (*s, *t)).collect(),
        identity,
        compose,
    })
    .expect("functor category tables are valid");
    let star: Vec<usize> = morphisms
        .iter()
        .map(|(s, t, tr)| {
            let comps: Vec<usize> = tr.components.iter().map(|&c| a.star(c)).collect();
            find(*t, *s, &NatTransformation { components: comps })
        })
        .collect();
    let marked: BTreeSet<usize> = morphisms
        .iter()
        .enumerate()
        .filter(|(_, (_, _, tr))| tr.components.iter().all(|&c| a.is_marked(c)))
        .map(|(i, _)| i)
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked)
        .expect("functor category star structure is valid");
    Ok(FunuCat { cat, objects, morphisms })
}

/// Which unitary elements a linear unitary functor may take as values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearValueSet {
    /// Marked elements (the marked flavor; exact).
    Marked,
    /// The monomial unitary frame (the plain flavor; unitary groups of
    /// linear categories are infinite, so enumeration is frame-bounded).
    Frame,
}

/// An object of the linear Fun^u(𝔾, A): an object map together with a
/// unitary value on every morphism of 𝔾.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinUnitaryFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<LinElem>,
}

/// Fun^u(𝔾, A) in the linear flavor.  Objects are enumerated over the given
/// value set; hom-spaces are the exact solution spaces of the naturality
/// equations, with explicit bases of component families.
#[derive(Debug, Clone)]
pub struct FunuLinear {
    pub cat: LinearStarCategory,
    pub objects: Vec<LinUnitaryFunctor>,
    /// `hom_basis[s][t][k]` = the k-th basis transformation, as one component
    /// per object of 𝔾.
    pub hom_basis: Vec<Vec<Vec<Vec<LinElem>>>>,
}

impl FunuLinear {
    pub fn object_index(&self, f: &LinUnitaryFunctor) -> Option<usize> {
        self.objects.iter().position(|g| g == f)
    }

    /// Express a component family in the hom basis of (s, t).
    pub fn express(&self, s: usize, t: usize, family: &[LinElem]) -> Option<LinElem> {
        let basis = &self.hom_basis[s][t];
        let flat = |fam: &[LinElem]| -> Vector {
            fam.iter().flat_map(|e| e.coeffs.iter().cloned()).collect()
        };
        let dim = flat(family).len();
        let m = columns(&basis.iter().map(|fam| flat(fam)).collect::<Vec<_>>(), dim);
        m.express(&flat(family)).map(|coeffs| LinElem { src: s, tgt: t, coeffs })
    }

    /// Decode an element of the functor category into its component family.
    pub fn components(&self, a: &LinearStarCategory, x: &LinElem) -> Vec<LinElem> {
        let basis = &self.hom_basis[x.src][x.tgt];
        let g_obs = self.objects[x.src].obj.len();
        (0..g_obs)
            .map(|gx| {
                let (sa, ta) = (self.objects[x.src].obj[gx], self.objects[x.tgt].obj[gx]);
                let mut acc = a.zero_elem(sa, ta);
                for (k, c) in x.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc = a.add_elems(&acc, &a.scale_elem(c, &basis[k][gx]));
                    }
                }
                acc
            })
            .collect()
    }
}

pub fn funu_linear(
    g: &FinGroupoid,
    a: &LinearStarCategory,
    values: LinearValueSet,
    budget: &Budget,
) -> Result<FunuLinear, BoundExceeded> {
    budget.start_scope();
    let candidates: Vec<LinElem> = match values {
        LinearValueSet::Marked => a.marked().to_vec(),
        LinearValueSet::Frame => a.unitary_frame(),
    };
    // Enumerate unitary functors: object map, then values on morphisms with
    // functoriality enforced incrementally.
    let mut objects = Vec::new();
    let g_obs = g.cat.ob_count();
    let g_mors = g.cat.mor_count();
    let mut obj = vec![0usize; g_obs];
    'outer: loop {
        budget.step()?;
        enumerate_values(g, a, &candidates, &obj, budget, &mut objects)?;
        let mut k = g_obs;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            obj[k] += 1;
            if obj[k] < a.ob_count() {
                break;
            }
            obj[k] = 0;
        }
    }
    // Hom spaces: nullspace of the naturality equations inside
    // ⊕_{x ∈ Ob 𝔾} Hom_A(s(x), t(x)).
    let nobj = objects.len();
    let mut hom_basis: Vec<Vec<Vec<Vec<LinElem>>>> = vec![vec![Vec::new(); nobj]; nobj];
    for (si, s) in objects.iter().enumerate() {
        for (ti, t) in objects.iter().enumerate() {
            hom_basis[si][ti] = transformation_basis(g, a, s, t);
        }
    }
    let dims: Vec<Vec<usize>> =
        (0..nobj).map(|s| (0..nobj).map(|t| hom_basis[s][t].len()).collect()).collect();
    let express = |s: usize, t: usize, family: &[LinElem]| -> Vector {
        let flat = |fam: &[LinElem]| -> Vector {
            fam.iter().flat_map(|e| e.coeffs.iter().cloned()).collect()
        };
        let target = flat(family);
        let m = columns(
            &hom_basis[s][t].iter().map(|fam| flat(fam)).collect::<Vec<_>>(),
            target.len(),
        );
        m.express(&target).expect("family lies in the transformation space")
    };
    let compose_tables: Vec<Vec<Vec<Vec<Vec<Vector>>>>> = (0..nobj)
        .map(|x| {
            (0..nobj)
                .map(|y| {
                    (0..nobj)
                        .map(|z| {
                            (0..dims[y][z])
                                .map(|j| {
                                    (0..dims[x][y])
                                        .map(|i| {
                                            let fam: Vec<LinElem> = (0..g_obs)
                                                .map(|gx| {
                                                    a.compose_elems(
                                                        &hom_basis[y][z][j][gx],
                                                        &hom_basis[x][y][i][gx],
                                                    )
                                                })
                                                .collect();
                                            express(x, z, &fam)
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
    let identity: Vec<Vector> = (0..nobj)
        .map(|x| {
            let fam: Vec<LinElem> =
                (0..g_obs).map(|gx| a.identity_elem(objects[x].obj[gx])).collect();
            express(x, x, &fam)
        })
        .collect();
    let star: Vec<Vec<Vec<Vector>>> = (0..nobj)
        .map(|x| {
            (0..nobj)
                .map(|y| {
                    (0..dims[x][y])
                        .map(|i| {
                            let fam: Vec<LinElem> =
                                (0..g_obs).map(|gx| a.star_elem(&hom_basis[x][y][i][gx])).collect();
                            express(y, x, &fam)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    // Marked morphisms: componentwise-marked transformations, enumerated
    // from the finite marked set of A.
    let mut marked: Vec<LinElem> = Vec::new();
    for (si, s) in objects.iter().enumerate() {
        for (ti, t) in objects.iter().enumerate() {
            let mut families: Vec<Vec<LinElem>> = vec![Vec::new()];
            for gx in 0..g_obs {
                let mut next = Vec::new();
                for fam in &families {
                    for m in a.marked() {
                        if m.src == s.obj[gx] && m.tgt == t.obj[gx] {
                            budget.step()?;
                            let mut f = fam.clone();
                            f.push(m.clone());
                            next.push(f);
                        }
                    }
                }
                families = next;
            }
            for fam in families {
                let natural = (0..g_mors).all(|phi| {
                    let (gx, gy) = (g.cat.src(phi), g.cat.tgt(phi));
                    a.compose_elems(&fam[gy], &s.mor[phi])
                        == a.compose_elems(&t.mor[phi], &fam[gx])
                });
                if natural {
                    let coeffs = express(si, ti, &fam);
                    let e = LinElem { src: si, tgt: ti, coeffs };
                    if !marked.contains(&e) {
                        marked.push(e);
                    }
                }
            }
        }
    }
    let cat = LinearStarCategory::validate(nobj, dims, compose_tables, identity, star, marked)
        .expect("linear functor category is valid");
    Ok(FunuLinear { cat, objects, hom_basis })
}

fn enumerate_values(
    g: &FinGroupoid,
    a: &LinearStarCategory,
    candidates: &[LinElem],
    obj: &[usize],
    budget: &Budget,
    out: &mut Vec<LinUnitaryFunctor>,
) -> Result<(), BoundExceeded> {
    fn rec(
        g: &FinGroupoid,
        a: &LinearStarCategory,
        candidates: &[LinElem],
        obj: &[usize],
        mor: &mut Vec<Option<LinElem>>,
        next: usize,
        budget: &Budget,
        out: &mut Vec<LinUnitaryFunctor>,
    ) -> Result<(), BoundExceeded> {
        let m = g.cat.mor_count();
        if next == m {
            let f = LinUnitaryFunctor {
                obj: obj.to_vec(),
                mor: mor.iter().map(|x| x.clone().expect("assigned")).collect(),
            };
            out.push(f);
            return Ok(());
        }
        let (s, t) = (obj[g.cat.src(next)], obj[g.cat.tgt(next)]);
        let choices: Vec<LinElem> = if g.cat.is_identity(next) {
            vec![a.identity_elem(s)]
        } else {
            candidates.iter().filter(|c| c.src == s && c.tgt == t).cloned().collect()
        };
        for cand in choices {
            budget.step()?;
            mor[next] = Some(cand);
            let ok = (0..m).all(|phi1| {
                (0..m).all(|phi0| match g.cat.compose(phi1, phi0) {
                    Some(c) if phi1 <= next && phi0 <= next && c <= next => {
                        let lhs = a.compose_elems(
                            mor[phi1].as_ref().unwrap(),
                            mor[phi0].as_ref().unwrap(),
                        );
                        lhs == *mor[c].as_ref().unwrap()
                    }
                    _ => true,
                })
            });
            if ok {
                rec(g, a, candidates, obj, mor, next + 1, budget, out)?;
            }
            mor[next] = None;
        }
        Ok(())
    }
    let mut mor = vec![None; g.cat.mor_count()];
    rec(g, a, candidates, obj, &mut mor, 0, budget, out)
}

/// Basis of the space of natural transformations s → t as component
/// families, via the nullspace of the naturality equations.
fn transformation_basis(
    g: &FinGroupoid,
    a: &LinearStarCategory,
    s: &LinUnitaryFunctor,
    t: &LinUnitaryFunctor,
) -> Vec<Vec<LinElem>> {
    let g_obs = g.cat.ob_count();
    let comp_dims: Vec<usize> = (0..g_obs).map(|gx| a.dim(s.obj[gx], t.obj[gx])).collect();
    let total: usize = comp_dims.iter().sum();
    let offset: Vec<usize> = comp_dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    // One row block per morphism of 𝔾: t(φ) ∘ f_src − f_tgt ∘ s(φ) = 0.
    let mut rows: Vec<Vector> = Vec::new();
    for phi in g.cat.morphisms() {
        let (gx, gy) = (g.cat.src(phi), g.cat.tgt(phi));
        let out_dim = a.dim(s.obj[gx], t.obj[gy]);
        for r in 0..out_dim {
            let mut row = crate::linalg::zero_vec(total);
            for i in 0..comp_dims[gx] {
                let e = a.basis_elem(s.obj[gx], t.obj[gx], i);
                let v = a.compose_elems(&t.mor[phi], &e);
                row[offset[gx] + i] = v.coeffs[r].clone();
            }
            for i in 0..comp_dims[gy] {
                let e = a.basis_elem(s.obj[gy], t.obj[gy], i);
                let v = a.compose_elems(&e, &s.mor[phi]);
                row[offset[gy] + i] = &row[offset[gy] + i] - &v.coeffs[r];
            }
            rows.push(row);
        }
    }
    let m = if rows.is_empty() { Matrix::zero(1, total) } else { Matrix::from_rows(rows) };
    m.nullspace()
        .into_iter()
        .map(|v| {
            (0..g_obs)
                .map(|gx| LinElem {
                    src: s.obj[gx],
                    tgt: t.obj[gx],
                    coeffs: v[offset[gx]..offset[gx] + comp_dims[gx]].to_vec(),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{classifier, linearize, ClassifierKind};

    #[test]
    fn funu_indiscrete_point_is_point() {
        let pt = MarkedStarCategory::point();
        let f = funu(&FinGroupoid::indiscrete(2), &pt, true, &Budget::default()).unwrap();
        assert_eq!(f.objects.len(), 1);
        assert_eq!(f.cat.base().mor_count(), 1);
    }

    #[test]
    fn funu_objects_are_unitaries_or_marked() {
        // objects of Fun^u(𝕀, B) ↔ unitaries of B (marked flavor: marked).
        let one_plus = classifier(ClassifierKind::MarkedUnitary);
        let i2 = FinGroupoid::indiscrete(2);
        let plain = funu(&i2, &one_plus, false, &Budget::default()).unwrap();
        assert_eq!(plain.objects.len(), one_plus.unitaries().len());
        let marked = funu(&i2, &one_plus, true, &Budget::default()).unwrap();
        assert_eq!(marked.objects.len(), one_plus.marked().len());
    }

    #[test]
    fn funu_bz2_bz2_objects_are_group_homs() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_ma(&z2);
        let f = funu(&z2, &bz2, true, &Budget::default()).unwrap();
        assert_eq!(f.objects.len(), 2);
    }

    #[test]
    fn funu_linear_frame_on_scalars() {
        let linpt = linearize(&MarkedStarCategory::point());
        let i2 = FinGroupoid::indiscrete(2);
        let f = funu_linear(&i2, &linpt.cat, LinearValueSet::Frame, &Budget::default()).unwrap();
        // Functors 𝕀 → Lin(pt) with frame values: u ↦ μ ∈ {1,−1,i,−i};
        // functoriality forces u⁻¹ ↦ μ̄ and nothing else.
        assert_eq!(f.objects.len(), 4);
        // Every hom space is one-dimensional (the categories are connected).
        assert_eq!(f.cat.dim(0, 1), 1);
        let e = f.cat.basis_elem(0, 1, 0);
        assert!(f.cat.compose_elems(&f.cat.star_elem(&e), &e) == f.cat.identity_elem(0));
    }
}

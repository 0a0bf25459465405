use super::{GAction, LinearGAction};
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{FinCategory, Functor, RawCategory};
use crate::gtensor::{LinUnitaryFunctor, LinearValueSet};
use crate::linalg::{columns, Matrix, Vector};
use crate::star::{star_functor_ok, LinElem, LinearStarCategory, MarkedStarCategory};
use std::collections::BTreeSet;

/// The explicit fixed-point category Â^G: objects are pairs (b, ρ) of an
/// object of A and a cocycle of (marked) unitaries ρ(g): b → g(b) with
/// ρ(e) = id and g(ρ(h)) ∘ ρ(g) = ρ(gh); morphisms are the intertwiners
/// f: b → b' with ρ'(g) ∘ f = g(f) ∘ ρ(g); marked are the intertwiners
/// marked in A.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    pub cat: MarkedStarCategory,
    /// (base object, ρ table indexed by group element) per object.
    pub objects: Vec<(usize, Vec<usize>)>,
    /// The intertwiner of A carried by each morphism.
    pub intertwiners: Vec<usize>,
}

pub fn fixed_points(action: &GAction, marked: bool) -> FixedPoints {
    let a = &action.base;
    let n = action.group.order();
    let ok = |m: usize| if marked { a.is_marked(m) } else { a.is_unitary(m) };
    // Enumerate cocycles: ρ(e) forced to the identity; objects are ordered
    // by (b, ρ-tuple) for deterministic witnesses.
    let mut objects: Vec<(usize, Vec<usize>)> = Vec::new();
    for b in a.base().objects() {
        let mut partial: Vec<Vec<usize>> = vec![vec![usize::MAX; n]];
        for g in 0..n {
            let mut next = Vec::new();
            for rho in &partial {
                if g == action.group.unit {
                    let mut r = rho.clone();
                    r[g] = a.base().id(b);
                    next.push(r);
                    continue;
                }
                for cand in a.base().hom(b, action.on[g].obj[b]) {
                    if !ok(cand) {
                        continue;
                    }
                    let mut r = rho.clone();
                    r[g] = cand;
                    next.push(r);
                }
            }
            partial = next;
        }
        for rho in partial {
            let cocycle = (0..n).all(|g| {
                (0..n).all(|h| {
                    let lhs = a
                        .base()
                        .compose(action.on[g].mor[rho[h]], rho[g])
                        .expect("cocycle composite is defined");
                    lhs == rho[action.group.mul(g, h)]
                })
            });
            if cocycle {
                objects.push((b, rho));
            }
        }
    }
    // Intertwiners.
    let mut mors: Vec<(usize, usize, usize)> = Vec::new();
    for (oi, (b, rho)) in objects.iter().enumerate() {
        for (oj, (b2, rho2)) in objects.iter().enumerate() {
            for f in a.base().hom(*b, *b2) {
                let intertwines = (0..n).all(|g| {
                    a.base().compose(rho2[g], f)
                        == a.base().compose(action.on[g].mor[f], rho[g])
                });
                if intertwines {
                    mors.push((oi, oj, f));
                }
            }
        }
    }
    let index_of = |oi: usize, oj: usize, f: usize| {
        mors.iter().position(|&m| m == (oi, oj, f)).expect("intertwiner")
    };
    let mut compose = Vec::new();
    for (i2, &(s2, t2, f2)) in mors.iter().enumerate() {
        for (i1, &(s1, t1, f1)) in mors.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let f = a.base().compose(f2, f1).expect("intertwiners compose");
            compose.push((i2, i1, index_of(s1, t2, f)));
        }
    }
    let base = FinCategory::validate(&RawCategory {
        objects: objects.len(),
        morphisms: mors.iter().map(|&(s, t, _)| (s, t)).collect(),
        identity: objects
            .iter()
            .enumerate()
            .map(|(oi, (b, _))| index_of(oi, oi, a.base().id(*b)))
            .collect(),
        compose,
    })
    .expect("fixed-point tables are valid");
    let star = mors.iter().map(|&(s, t, f)| index_of(t, s, a.star(f))).collect();
    let marked_set: BTreeSet<usize> = mors
        .iter()
        .enumerate()
        .filter(|(_, &(_, _, f))| a.is_marked(f))
        .map(|(i, _)| i)
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked_set)
        .expect("fixed-point star structure is valid");
    FixedPoints { cat, objects, intertwiners: mors.iter().map(|&(_, _, f)| f).collect() }
}

/// The strict limit over BG of the resolution: the subcategory of
/// G-invariant objects and morphisms of Fun^u(G̃, A), computed
/// componentwise.
#[derive(Debug, Clone)]
pub struct LimOfResolution {
    pub cat: MarkedStarCategory,
    /// Indices into the resolution's objects and morphisms.
    pub object_ids: Vec<usize>,
    pub morphism_ids: Vec<usize>,
}

pub fn lim_of_resolution(res: &super::Resolution) -> LimOfResolution {
    let n = res.action.group.order();
    let fu = &res.funu.cat;
    let object_ids: Vec<usize> = fu
        .base()
        .objects()
        .filter(|&o| (0..n).all(|g| res.action.on[g].obj[o] == o))
        .collect();
    let morphism_ids: Vec<usize> = fu
        .base()
        .morphisms()
        .filter(|&m| {
            (0..n).all(|g| res.action.on[g].mor[m] == m)
                && object_ids.contains(&fu.base().src(m))
                && object_ids.contains(&fu.base().tgt(m))
        })
        .collect();
    let opos = |o: usize| object_ids.iter().position(|&x| x == o).expect("invariant object");
    let mpos = |m: usize| morphism_ids.iter().position(|&x| x == m).expect("invariant morphism");
    let base = FinCategory::validate(&RawCategory {
        objects: object_ids.len(),
        morphisms: morphism_ids.iter().map(|&m| (opos(fu.base().src(m)), opos(fu.base().tgt(m)))).collect(),
        identity: object_ids.iter().map(|&o| mpos(fu.base().id(o))).collect(),
        compose: morphism_ids
            .iter()
            .enumerate()
            .flat_map(|(i2, &m2)| {
                morphism_ids.iter().enumerate().filter_map(move |(i1, &m1)| {
                    fu.base().compose(m2, m1).map(|c| (i2, i1, c))
                })
            })
            .map(|(i2, i1, c)| (i2, i1, mpos(c)))
            .collect(),
    })
    .expect("invariant subcategory tables are valid");
    let star = morphism_ids.iter().map(|&m| mpos(fu.star(m))).collect();
    let marked: BTreeSet<usize> = morphism_ids
        .iter()
        .enumerate()
        .filter(|(_, &m)| fu.is_marked(m))
        .map(|(i, _)| i)
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked)
        .expect("invariant subcategory star structure is valid");
    LimOfResolution { cat, object_ids, morphism_ids }
}

/// Construct the comparison functor Â^G → lim_BG Fun^u(G̃, A):
/// (b, ρ) ↦ the invariant functor a(x) = x(b), a(g → h) = g(ρ(g⁻¹h)), and
/// check that it is an isomorphism of marked *-categories.
pub fn fixed_points_agree(
    action: &GAction,
    fp: &FixedPoints,
    res: &super::Resolution,
    lim: &LimOfResolution,
    marked: bool,
) -> bool {
    let n = action.group.order();
    // Object comparison.
    let mut obj_map = Vec::with_capacity(fp.objects.len());
    for (b, rho) in &fp.objects {
        let functor = Functor {
            obj: (0..n).map(|x| action.on[x].obj[*b]).collect(),
            mor: (0..n * n)
                .map(|m| {
                    let (g, h) = res.gtilde.ends(m);
                    let k = action.group.mul(action.group.inv[g], h);
                    action.on[g].mor[rho[k]]
                })
                .collect(),
        };
        let Some(oi) = res.funu.object_index(&functor) else {
            return false;
        };
        let Some(pos) = lim.object_ids.iter().position(|&x| x == oi) else {
            return false;
        };
        obj_map.push(pos);
    }
    // Morphism comparison: intertwiner f ↦ the invariant family (x(f))_x.
    let mut mor_map = Vec::with_capacity(fp.intertwiners.len());
    for (mi, &f) in fp.intertwiners.iter().enumerate() {
        let (s, t) = (fp.cat.base().src(mi), fp.cat.base().tgt(mi));
        let comps = crate::fincat::NatTransformation {
            components: (0..n).map(|x| action.on[x].mor[f]).collect(),
        };
        let Some(idx) = res.funu.morphism_index(
            lim.object_ids[obj_map[s]],
            lim.object_ids[obj_map[t]],
            &comps,
        ) else {
            return false;
        };
        let Some(pos) = lim.morphism_ids.iter().position(|&x| x == idx) else {
            return false;
        };
        mor_map.push(pos);
    }
    let comparison = Functor { obj: obj_map, mor: mor_map };
    // Isomorphism of marked *-categories: valid, bijective both levels.
    let obj_bij = {
        let s: BTreeSet<usize> = comparison.obj.iter().copied().collect();
        s.len() == lim.cat.base().ob_count() && comparison.obj.len() == s.len()
    };
    let mor_bij = {
        let s: BTreeSet<usize> = comparison.mor.iter().copied().collect();
        s.len() == lim.cat.base().mor_count() && comparison.mor.len() == s.len()
    };
    obj_bij
        && mor_bij
        && star_functor_ok(&fp.cat, &lim.cat, &comparison, marked).is_ok()
        // Marked morphisms correspond exactly (not just forward).
        && fp
            .cat
            .base()
            .morphisms()
            .all(|m| fp.cat.is_marked(m) == lim.cat.is_marked(comparison.mor[m]))
}

/// Linear fixed points: cocycles over the marked set (marked flavor) or the
/// monomial unitary frame (plain flavor); hom spaces are the exact solution
/// spaces of the intertwiner equations.
#[derive(Debug, Clone)]
pub struct FixedPointsLinear {
    pub cat: LinearStarCategory,
    pub objects: Vec<(usize, Vec<LinElem>)>,
    /// `hom_basis[i][j][k]`: the k-th basis intertwiner as an element of A.
    pub hom_basis: Vec<Vec<Vec<LinElem>>>,
}

pub fn fixed_points_linear(
    action: &LinearGAction,
    values: LinearValueSet,
    budget: &Budget,
) -> Result<FixedPointsLinear, BoundExceeded> {
    let a = &action.base;
    let n = action.group.order();
    budget.start_scope();
    let candidates: Vec<LinElem> = match values {
        LinearValueSet::Marked => a.marked().to_vec(),
        LinearValueSet::Frame => a.unitary_frame(),
    };
    let mut objects: Vec<(usize, Vec<LinElem>)> = Vec::new();
    for b in 0..a.ob_count() {
        let mut partial: Vec<Vec<Option<LinElem>>> = vec![vec![None; n]];
        for g in 0..n {
            let mut next = Vec::new();
            for rho in &partial {
                if g == action.group.unit {
                    let mut r = rho.clone();
                    r[g] = Some(a.identity_elem(b));
                    next.push(r);
                    continue;
                }
                let tgt = action.on[g].obj[b];
                for cand in candidates.iter().filter(|c| c.src == b && c.tgt == tgt) {
                    budget.step()?;
                    let mut r = rho.clone();
                    r[g] = Some(cand.clone());
                    next.push(r);
                }
            }
            partial = next;
        }
        for rho in partial {
            let rho: Vec<LinElem> = rho.into_iter().map(|x| x.expect("assigned")).collect();
            let cocycle = (0..n).all(|g| {
                (0..n).all(|h| {
                    let moved = action.on[g].apply(a, a, &rho[h]);
                    a.compose_elems(&moved, &rho[g]) == rho[action.group.mul(g, h)]
                })
            });
            if cocycle {
                objects.push((b, rho));
            }
        }
    }
    // Intertwiner spaces: nullspace of ρ'(g)∘f − g(f)∘ρ(g) over f.
    let nobj = objects.len();
    let mut hom_basis: Vec<Vec<Vec<LinElem>>> = vec![vec![Vec::new(); nobj]; nobj];
    for (i, (b, rho)) in objects.iter().enumerate() {
        for (j, (b2, rho2)) in objects.iter().enumerate() {
            let d = a.dim(*b, *b2);
            let mut rows: Vec<Vector> = Vec::new();
            for g in 0..n {
                let out_dim = a.dim(*b, action.on[g].obj[*b2]);
                for r in 0..out_dim {
                    let mut row = crate::linalg::zero_vec(d);
                    for (col, item) in row.iter_mut().enumerate() {
                        let e = a.basis_elem(*b, *b2, col);
                        let lhs = a.compose_elems(&rho2[g], &e);
                        let rhs = a.compose_elems(&action.on[g].apply(a, a, &e), &rho[g]);
                        *item = &lhs.coeffs[r] - &rhs.coeffs[r];
                    }
                    rows.push(row);
                }
            }
            let m = if rows.is_empty() { Matrix::zero(1, d) } else { Matrix::from_rows(rows) };
            hom_basis[i][j] = m
                .nullspace()
                .into_iter()
                .map(|v| LinElem { src: *b, tgt: *b2, coeffs: v })
                .collect();
        }
    }
    let dims: Vec<Vec<usize>> =
        (0..nobj).map(|i| (0..nobj).map(|j| hom_basis[i][j].len()).collect()).collect();
    let express = |i: usize, j: usize, x: &LinElem| -> Vector {
        let m = columns(
            &hom_basis[i][j].iter().map(|e| e.coeffs.clone()).collect::<Vec<_>>(),
            x.coeffs.len(),
        );
        m.express(&x.coeffs).expect("element lies in the intertwiner space")
    };
    let compose: Vec<Vec<Vec<Vec<Vec<Vector>>>>> = (0..nobj)
        .map(|i| {
            (0..nobj)
                .map(|j| {
                    (0..nobj)
                        .map(|k| {
                            (0..dims[j][k])
                                .map(|jj| {
                                    (0..dims[i][j])
                                        .map(|ii| {
                                            let comp = a.compose_elems(
                                                &hom_basis[j][k][jj],
                                                &hom_basis[i][j][ii],
                                            );
                                            express(i, k, &comp)
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
    let identity: Vec<Vector> =
        (0..nobj).map(|i| express(i, i, &a.identity_elem(objects[i].0))).collect();
    let star: Vec<Vec<Vec<Vector>>> = (0..nobj)
        .map(|i| {
            (0..nobj)
                .map(|j| {
                    (0..dims[i][j])
                        .map(|k| express(j, i, &a.star_elem(&hom_basis[i][j][k])))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut marked = Vec::new();
    for (i, (b, rho)) in objects.iter().enumerate() {
        for (j, (b2, rho2)) in objects.iter().enumerate() {
            for m in a.marked() {
                if m.src != *b || m.tgt != *b2 {
                    continue;
                }
                let intertwines = (0..n).all(|g| {
                    a.compose_elems(&rho2[g], m)
                        == a.compose_elems(&action.on[g].apply(a, a, m), &rho[g])
                });
                if intertwines {
                    let e = LinElem { src: i, tgt: j, coeffs: express(i, j, m) };
                    if !marked.contains(&e) {
                        marked.push(e);
                    }
                }
            }
        }
    }
    let cat = LinearStarCategory::validate(nobj, dims, compose, identity, star, marked)
        .expect("linear fixed points are valid");
    Ok(FixedPointsLinear { cat, objects, hom_basis })
}

/// Strict invariants of the linear resolution.
#[derive(Debug, Clone)]
pub struct LimOfResolutionLinear {
    pub cat: LinearStarCategory,
    pub object_ids: Vec<usize>,
    /// Basis of the invariant subspace of each hom space, in the resolution
    /// category's coordinates.
    pub hom_basis: Vec<Vec<Vec<Vector>>>,
}

pub fn lim_of_resolution_linear(res: &super::ResolutionLinear) -> LimOfResolutionLinear {
    let n = res.action.group.order();
    let fu = &res.funu.cat;
    let object_ids: Vec<usize> = (0..fu.ob_count())
        .filter(|&o| (0..n).all(|g| res.action.on[g].obj[o] == o))
        .collect();
    // Invariant subspace of Hom(s, t): solutions of (g·x) − x = 0 for all g.
    let mut hom_basis: Vec<Vec<Vec<Vector>>> = vec![vec![Vec::new(); object_ids.len()]; object_ids.len()];
    for (i, &s) in object_ids.iter().enumerate() {
        for (j, &t) in object_ids.iter().enumerate() {
            let d = fu.dim(s, t);
            let mut rows: Vec<Vector> = Vec::new();
            for g in 0..n {
                for r in 0..d {
                    let mut row = crate::linalg::zero_vec(d);
                    for col in 0..d {
                        let e = fu.basis_elem(s, t, col);
                        let moved = res.action.on[g].apply(fu, fu, &e);
                        let delta = if col == r {
                            crate::scalar::Scalar::one()
                        } else {
                            crate::scalar::Scalar::zero()
                        };
                        row[col] = &moved.coeffs[r] - &delta;
                    }
                    rows.push(row);
                }
            }
            let m = if rows.is_empty() { Matrix::zero(1, d) } else { Matrix::from_rows(rows) };
            hom_basis[i][j] = m.nullspace();
        }
    }
    let dims: Vec<Vec<usize>> = (0..object_ids.len())
        .map(|i| (0..object_ids.len()).map(|j| hom_basis[i][j].len()).collect())
        .collect();
    let elem_of = |i: usize, j: usize, v: &Vector| LinElem {
        src: object_ids[i],
        tgt: object_ids[j],
        coeffs: v.clone(),
    };
    let express = |i: usize, j: usize, x: &LinElem| -> Vector {
        let m = columns(&hom_basis[i][j].to_vec(), x.coeffs.len());
        m.express(&x.coeffs).expect("element is invariant")
    };
    let nobj = object_ids.len();
    let compose: Vec<Vec<Vec<Vec<Vec<Vector>>>>> = (0..nobj)
        .map(|i| {
            (0..nobj)
                .map(|j| {
                    (0..nobj)
                        .map(|k| {
                            (0..dims[j][k])
                                .map(|jj| {
                                    (0..dims[i][j])
                                        .map(|ii| {
                                            let comp = fu.compose_elems(
                                                &elem_of(j, k, &hom_basis[j][k][jj]),
                                                &elem_of(i, j, &hom_basis[i][j][ii]),
                                            );
                                            express(i, k, &comp)
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
    let identity: Vec<Vector> =
        (0..nobj).map(|i| express(i, i, &fu.identity_elem(object_ids[i]))).collect();
    let star: Vec<Vec<Vec<Vector>>> = (0..nobj)
        .map(|i| {
            (0..nobj)
                .map(|j| {
                    (0..dims[i][j])
                        .map(|k| express(j, i, &fu.star_elem(&elem_of(i, j, &hom_basis[i][j][k]))))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut marked = Vec::new();
    for m in fu.marked() {
        let (Some(i), Some(j)) = (
            object_ids.iter().position(|&o| o == m.src),
            object_ids.iter().position(|&o| o == m.tgt),
        ) else {
            continue;
        };
        let invariant = (0..n).all(|g| &res.action.on[g].apply(fu, fu, m) == m);
        if invariant {
            let e = LinElem { src: i, tgt: j, coeffs: express(i, j, m) };
            if !marked.contains(&e) {
                marked.push(e);
            }
        }
    }
    let cat = LinearStarCategory::validate(nobj, dims, compose, identity, star, marked)
        .expect("linear invariants are valid");
    LimOfResolutionLinear { cat, object_ids, hom_basis }
}

/// Comparison Â^G ≅ lim_BG Fun^u(G̃, A) in the linear flavor: object
/// bijection plus mutually inverse linear functors.
pub fn fixed_points_linear_agree(
    action: &LinearGAction,
    fp: &FixedPointsLinear,
    res: &super::ResolutionLinear,
    lim: &LimOfResolutionLinear,
) -> bool {
    let a = &action.base;
    let n = action.group.order();
    let fu = &res.funu;
    // Objects.
    let mut obj_map = Vec::with_capacity(fp.objects.len());
    for (b, rho) in &fp.objects {
        let functor = LinUnitaryFunctor {
            obj: (0..n).map(|x| action.on[x].obj[*b]).collect(),
            mor: (0..n * n)
                .map(|m| {
                    let (g, h) = res.gtilde.ends(m);
                    let k = action.group.mul(action.group.inv[g], h);
                    action.on[g].apply(a, a, &rho[k])
                })
                .collect(),
        };
        let Some(oi) = fu.object_index(&functor) else { return false };
        let Some(pos) = lim.object_ids.iter().position(|&x| x == oi) else { return false };
        obj_map.push(pos);
    }
    if obj_map.len() != lim.object_ids.len() {
        return false;
    }
    let distinct: BTreeSet<usize> = obj_map.iter().copied().collect();
    if distinct.len() != obj_map.len() {
        return false;
    }
    // Hom-space comparison: f ↦ (x(f))_x expressed in lim's basis; check
    // dimension equality and invertibility of every block.
    for (i, (_, _)) in fp.objects.iter().enumerate() {
        for (j, (_, _)) in fp.objects.iter().enumerate() {
            let (li, lj) = (obj_map[i], obj_map[j]);
            let d = fp.cat.dim(i, j);
            if d != lim.cat.dim(li, lj) {
                return false;
            }
            let mut cols = Vec::new();
            for k in 0..d {
                let f = &fp.hom_basis[i][j][k];
                let family: Vec<LinElem> =
                    (0..n).map(|x| action.on[x].apply(a, a, f)).collect();
                let Some(in_fu) = fu.express(lim.object_ids[li], lim.object_ids[lj], &family)
                else {
                    return false;
                };
                // Express in the invariant basis.
                let m = columns(&lim.hom_basis[li][lj].to_vec(), in_fu.coeffs.len());
                let Some(v) = m.express(&in_fu.coeffs) else { return false };
                cols.push(v);
            }
            if d > 0 {
                let mat = columns(&cols, d);
                if mat.rank() != d {
                    return false;
                }
            }
        }
    }
    // Marked elements correspond: counts agree under the comparison.
    fp.cat.marked().len() == lim.cat.marked().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::{resolution, FinGroup};
    use crate::fincat::FinGroupoid;

    #[test]
    fn fixed_points_of_trivial_action_on_point() {
        let action = GAction::trivial(FinGroup::cyclic(2), MarkedStarCategory::point());
        let fp = fixed_points(&action, true);
        assert_eq!(fp.objects.len(), 1);
        let res = resolution(&action, true, &Budget::default()).unwrap();
        let lim = lim_of_resolution(&res);
        assert!(fixed_points_agree(&action, &fp, &res, &lim, true));
    }

    #[test]
    fn fixed_points_of_bz2_count_group_homs() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_ma(&z2);
        let action = GAction::trivial(FinGroup::cyclic(2), bz2);
        let fp = fixed_points(&action, true);
        // ρ(s) ∈ {e, s} with ρ(s)² = e: both work.
        assert_eq!(fp.objects.len(), 2);
        let res = resolution(&action, true, &Budget::default()).unwrap();
        let lim = lim_of_resolution(&res);
        assert!(fixed_points_agree(&action, &fp, &res, &lim, true));
    }

    #[test]
    fn free_swap_action_has_empty_fixed_points() {
        let d2 = MarkedStarCategory::from_groupoid_mi(&FinGroupoid::discrete(2));
        let swap = Functor { obj: vec![1, 0], mor: vec![1, 0] };
        let action = GAction::validate(
            FinGroup::cyclic(2),
            d2.clone(),
            vec![Functor::identity(d2.base()), swap],
        )
        .unwrap();
        let fp = fixed_points(&action, true);
        assert_eq!(fp.objects.len(), 0);
        let res = resolution(&action, true, &Budget::default()).unwrap();
        let lim = lim_of_resolution(&res);
        assert_eq!(lim.cat.base().ob_count(), 0);
        assert!(fixed_points_agree(&action, &fp, &res, &lim, true));
    }

    #[test]
    fn linear_fixed_points_of_scalars() {
        let linpt = crate::star::linearize(&MarkedStarCategory::point());
        let action = LinearGAction::trivial(FinGroup::cyclic(2), linpt.cat.clone());
        let fp = fixed_points_linear(&action, LinearValueSet::Frame, &Budget::default()).unwrap();
        // ρ(s) ∈ {±1}: two objects; Hom((pt,1),(pt,−1)) = 0.
        assert_eq!(fp.objects.len(), 2);
        assert_eq!(fp.cat.dim(0, 0), 1);
        assert_eq!(fp.cat.dim(0, 1), 0);
        let res = crate::equivariant::resolution_linear(&action, LinearValueSet::Frame, &Budget::default())
            .unwrap();
        let lim = lim_of_resolution_linear(&res);
        assert!(fixed_points_linear_agree(&action, &fp, &res, &lim));
    }
}

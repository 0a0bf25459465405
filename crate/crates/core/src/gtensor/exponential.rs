use super::{FunuCat, FunuLinear, SharpProduct, SharpTensor};
use crate::fincat::{FinGroupoid, Functor, NatTransformation};
use crate::star::{LinearFunctor, LinearStarCategory, MarkedStarCategory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransportError {
    #[error("transported object is not an object of the functor category (object {c})")]
    NotAnObject { c: usize },
    #[error("transported family is not a morphism of the functor category (morphism {f})")]
    NotATransformation { f: usize },
}

/// Φ: C♯𝔾 → A  ↦  Ψ: C → Fun^u(𝔾, A), by Ψ(c)(g) := Φ(c,g),
/// Ψ(c)(φ) := Φ(id_c, φ), Ψ(f) := (Φ(f, id_g))_g.
pub fn phi_to_psi_times(
    c: &MarkedStarCategory,
    g: &FinGroupoid,
    sharp: &SharpProduct,
    fu: &FunuCat,
    phi: &Functor,
) -> Result<Functor, TransportError> {
    let mut obj = Vec::with_capacity(c.base().ob_count());
    for x in c.base().objects() {
        let val = Functor {
            obj: g.cat.objects().map(|gg| phi.obj[sharp.ob(x, gg)]).collect(),
            mor: g
                .cat
                .morphisms()
                .map(|p| phi.mor[sharp.mor(c.base().id(x), p)])
                .collect(),
        };
        obj.push(fu.object_index(&val).ok_or(TransportError::NotAnObject { c: x })?);
    }
    let mut mor = Vec::with_capacity(c.base().mor_count());
    for f in c.base().morphisms() {
        let comps = NatTransformation {
            components: g
                .cat
                .objects()
                .map(|gg| phi.mor[sharp.mor(f, g.cat.id(gg))])
                .collect(),
        };
        let (s, t) = (obj[c.base().src(f)], obj[c.base().tgt(f)]);
        mor.push(
            fu.morphism_index(s, t, &comps)
                .ok_or(TransportError::NotATransformation { f })?,
        );
    }
    Ok(Functor { obj, mor })
}

/// Ψ: C → Fun^u(𝔾, A)  ↦  Φ: C♯𝔾 → A, by Φ(c,g) := Ψ(c)(g) and
/// Φ(f,φ) := Ψ(c′)(φ) ∘ Ψ(f)(g) for f: c → c′ and φ: g → g′.
pub fn psi_to_phi_times(
    c: &MarkedStarCategory,
    g: &FinGroupoid,
    a: &MarkedStarCategory,
    sharp: &SharpProduct,
    fu: &FunuCat,
    psi: &Functor,
) -> Functor {
    let mut obj = vec![0usize; sharp.cat.base().ob_count()];
    for x in c.base().objects() {
        for gg in g.cat.objects() {
            obj[sharp.ob(x, gg)] = fu.objects[psi.obj[x]].obj[gg];
        }
    }
    let mut mor = vec![0usize; sharp.cat.base().mor_count()];
    for f in c.base().morphisms() {
        let c_tgt = c.base().tgt(f);
        let (_, _, transf) = &fu.morphisms[psi.mor[f]];
        for p in g.cat.morphisms() {
            let gx = g.cat.src(p);
            let top = fu.objects[psi.obj[c_tgt]].mor[p];
            mor[sharp.mor(f, p)] = a
                .base()
                .compose(top, transf.components[gx])
                .expect("transport composite is defined");
        }
    }
    Functor { obj, mor }
}

/// Linear version of Φ ↦ Ψ.  Fails with `NotAnObject` if some transported
/// unitary functor falls outside the enumerated value set of the functor
/// category (the frame, in the plain flavor).
pub fn phi_to_psi_tensor(
    c: &LinearStarCategory,
    g: &FinGroupoid,
    a: &LinearStarCategory,
    tensor: &SharpTensor,
    fu: &FunuLinear,
    phi: &LinearFunctor,
) -> Result<LinearFunctor, TransportError> {
    let g_obs = g.cat.ob_count();
    let mut obj = Vec::with_capacity(c.ob_count());
    for x in 0..c.ob_count() {
        let val = super::funu::LinUnitaryFunctor {
            obj: (0..g_obs).map(|gg| phi.obj[tensor.ob(x, gg)]).collect(),
            mor: g
                .cat
                .morphisms()
                .map(|p| {
                    let src = tensor.ob(x, g.cat.src(p));
                    let tgt = tensor.ob(x, g.cat.tgt(p));
                    let pos = tensor.blocks[src][tgt].iter().position(|&m| m == p).expect("block");
                    let e = tensor.block_elem(c, &c.identity_elem(x), pos, src, tgt);
                    phi.apply(&tensor.cat, a, &e)
                })
                .collect(),
        };
        obj.push(fu.object_index(&val).ok_or(TransportError::NotAnObject { c: x })?);
    }
    let n = c.ob_count();
    let mut maps = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            for i in 0..c.dim(x, y) {
                let family: Vec<_> = (0..g_obs)
                    .map(|gg| {
                        let src = tensor.ob(x, gg);
                        let tgt = tensor.ob(y, gg);
                        let pos = tensor.blocks[src][tgt]
                            .iter()
                            .position(|&m| m == g.cat.id(gg))
                            .expect("identity block");
                        let e = tensor.block_elem(c, &c.basis_elem(x, y, i), pos, src, tgt);
                        phi.apply(&tensor.cat, a, &e)
                    })
                    .collect();
                let expressed = fu
                    .express(obj[x], obj[y], &family)
                    .ok_or(TransportError::NotATransformation { f: i })?;
                maps[x][y].push(expressed.coeffs);
            }
        }
    }
    Ok(LinearFunctor { obj, maps })
}

/// Linear version of Ψ ↦ Φ.
pub fn psi_to_phi_tensor(
    c: &LinearStarCategory,
    g: &FinGroupoid,
    a: &LinearStarCategory,
    tensor: &SharpTensor,
    fu: &FunuLinear,
    psi: &LinearFunctor,
) -> LinearFunctor {
    let n = tensor.cat.ob_count();
    let mut obj = vec![0usize; n];
    for x in 0..c.ob_count() {
        for gg in g.cat.objects() {
            obj[tensor.ob(x, gg)] = fu.objects[psi.obj[x]].obj[gg];
        }
    }
    let mut maps = vec![vec![Vec::new(); n]; n];
    for sx in 0..n {
        for sy in 0..n {
            let (x, gx) = tensor.unob(sx);
            let (y, _gy) = tensor.unob(sy);
            let d = c.dim(x, y);
            for ii in 0..tensor.cat.dim(sx, sy) {
                let (pos, i) = (ii / d, ii % d);
                let p = tensor.blocks[sx][sy][pos];
                // Φ(e_i, φ) = Ψ(y)(φ) ∘ Ψ(e_i)(g_x).
                let top = fu.objects[psi.obj[y]].mor[p].clone();
                let transf = crate::star::LinElem {
                    src: psi.obj[x],
                    tgt: psi.obj[y],
                    coeffs: psi.maps[x][y][i].clone(),
                };
                let comp = fu.components(a, &transf);
                let img = a.compose_elems(&top, &comp[gx]);
                maps[sx][sy].push(img.coeffs);
            }
        }
    }
    LinearFunctor { obj, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Budget;
    use crate::gtensor::{funu, funu_linear, sharp_tensor, sharp_times, LinearValueSet};
    use crate::star::{classifier, enumerate_star_functors, linearize, ClassifierKind};

    #[test]
    fn times_transport_is_a_bijection() {
        let c = MarkedStarCategory::point();
        let g = FinGroupoid::indiscrete(2);
        let a = classifier(ClassifierKind::MarkedUnitary);
        let sharp = sharp_times(&c, &g);
        let fu = funu(&g, &a, true, &Budget::default()).unwrap();
        let homs_sharp = enumerate_star_functors(&sharp.cat, &a, true, &Budget::default()).unwrap();
        let homs_c = enumerate_star_functors(&c, &fu.cat, true, &Budget::default()).unwrap();
        assert_eq!(homs_sharp.len(), homs_c.len());
        // Hom(pt♯𝕀, 𝟙⁺) ≅ marked morphisms of 𝟙⁺, which has four.
        assert_eq!(homs_sharp.len(), 4);
        for phi in &homs_sharp {
            let psi = phi_to_psi_times(&c, &g, &sharp, &fu, phi).unwrap();
            assert!(homs_c.contains(&psi));
            let back = psi_to_phi_times(&c, &g, &a, &sharp, &fu, &psi);
            assert_eq!(&back, phi);
        }
        for psi in &homs_c {
            let phi = psi_to_phi_times(&c, &g, &a, &sharp, &fu, psi);
            assert!(homs_sharp.contains(&phi));
            let back = phi_to_psi_times(&c, &g, &sharp, &fu, &phi).unwrap();
            assert_eq!(&back, psi);
        }
    }

    #[test]
    fn tensor_transport_round_trips() {
        let linpt = linearize(&MarkedStarCategory::point());
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let tensor = sharp_tensor(&linpt.cat, &z2);
        let fu = funu_linear(&z2, &tensor.cat, LinearValueSet::Frame, &Budget::default()).unwrap();
        // Φ generated from the identity of Lin(pt)⊗BZ₂ … which is the group
        // algebra itself: Φ = id.
        let phi = LinearFunctor::identity(&tensor.cat);
        let psi = phi_to_psi_tensor(&linpt.cat, &z2, &tensor.cat, &tensor, &fu, &phi).unwrap();
        psi.validate(&linpt.cat, &fu.cat, false).unwrap();
        let back = psi_to_phi_tensor(&linpt.cat, &z2, &tensor.cat, &tensor, &fu, &psi);
        assert_eq!(back, phi);
    }
}

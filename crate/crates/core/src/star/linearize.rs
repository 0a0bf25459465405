use super::{LinElem, LinearFunctor, LinearStarCategory, MarkedStarCategory};
use crate::scalar::Scalar;

/// The linearization of a marked *-category, remembering which morphism of
/// the base names each basis element.
#[derive(Debug, Clone)]
pub struct Linearized {
    pub cat: LinearStarCategory,
    /// `basis[a][b]` = base-category morphism ids forming the basis of
    /// Hom(a, b), in ascending id order.
    pub basis: Vec<Vec<Vec<usize>>>,
}

impl Linearized {
    /// The basis element named by a morphism of the base category.
    pub fn elem_of_mor(&self, base: &MarkedStarCategory, f: usize) -> LinElem {
        let (a, b) = (base.base().src(f), base.base().tgt(f));
        let i = self.basis[a][b].iter().position(|&m| m == f).expect("morphism in basis");
        self.cat.basis_elem(a, b, i)
    }
}

/// Free linearization: hom bases are the hom-sets of the input, composition
/// and star extend those of the input bilinearly / anti-linearly, and the
/// marked elements are the images of the marked morphisms.
pub fn linearize(a: &MarkedStarCategory) -> Linearized {
    let base = a.base();
    let n = base.ob_count();
    let basis: Vec<Vec<Vec<usize>>> =
        (0..n).map(|x| (0..n).map(|y| base.hom(x, y)).collect()).collect();
    let dims: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| basis[x][y].len()).collect()).collect();
    let index_in = |x: usize, y: usize, f: usize| -> usize {
        basis[x][y].iter().position(|&m| m == f).expect("hom member")
    };
    let unit_vec = |x: usize, y: usize, f: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dims[x][y]];
        v[index_in(x, y, f)] = Scalar::one();
        v
    };
    let compose = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    (0..n)
                        .map(|z| {
                            basis[y][z]
                                .iter()
                                .map(|&g| {
                                    basis[x][y]
                                        .iter()
                                        .map(|&f| {
                                            let gf =
                                                base.compose(g, f).expect("composable basis pair");
                                            unit_vec(x, z, gf)
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
    let identity = (0..n).map(|x| unit_vec(x, x, base.id(x))).collect();
    let star = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| basis[x][y].iter().map(|&f| unit_vec(y, x, a.star(f))).collect())
                .collect()
        })
        .collect();
    let marked = a
        .marked()
        .iter()
        .map(|&m| {
            let (x, y) = (base.src(m), base.tgt(m));
            LinElem { src: x, tgt: y, coeffs: unit_vec(x, y, m) }
        })
        .collect();
    let cat = LinearStarCategory::validate(n, dims, compose, identity, star, marked)
        .expect("linearization of a valid marked *-category is valid");
    Linearized { cat, basis }
}

/// A *-functor from a marked *-category into the underlying *-category of a
/// linear one: each morphism goes to a hom-element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarFunctorIntoLinear {
    pub obj: Vec<usize>,
    pub mor: Vec<LinElem>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntoLinearError {
    #[error("shape or endpoint mismatch at morphism {f}")]
    Endpoints { f: usize },
    #[error("identity of object {a} not preserved")]
    Identity { a: usize },
    #[error("composition not preserved on ({g}, {f})")]
    Composition { g: usize, f: usize },
    #[error("star not preserved at morphism {f}")]
    Star { f: usize },
    #[error("marked morphism {f} has unmarked image")]
    Marked { f: usize },
}

impl StarFunctorIntoLinear {
    pub fn validate(
        &self,
        dom: &MarkedStarCategory,
        cod: &LinearStarCategory,
        marked: bool,
    ) -> Result<(), IntoLinearError> {
        let base = dom.base();
        if self.obj.len() != base.ob_count()
            || self.mor.len() != base.mor_count()
            || self.obj.iter().any(|&b| b >= cod.ob_count())
        {
            return Err(IntoLinearError::Endpoints { f: 0 });
        }
        for f in base.morphisms() {
            let img = &self.mor[f];
            if img.src != self.obj[base.src(f)]
                || img.tgt != self.obj[base.tgt(f)]
                || img.coeffs.len() != cod.dim(img.src, img.tgt)
            {
                return Err(IntoLinearError::Endpoints { f });
            }
        }
        for a in base.objects() {
            if self.mor[base.id(a)] != cod.identity_elem(self.obj[a]) {
                return Err(IntoLinearError::Identity { a });
            }
        }
        for g in base.morphisms() {
            for f in base.morphisms() {
                if let Some(gf) = base.compose(g, f) {
                    if cod.compose_elems(&self.mor[g], &self.mor[f]) != self.mor[gf] {
                        return Err(IntoLinearError::Composition { g, f });
                    }
                }
            }
        }
        for f in base.morphisms() {
            if cod.star_elem(&self.mor[f]) != self.mor[dom.star(f)] {
                return Err(IntoLinearError::Star { f });
            }
        }
        if marked {
            for &f in dom.marked() {
                if !cod.is_marked(&self.mor[f]) {
                    return Err(IntoLinearError::Marked { f });
                }
            }
        }
        Ok(())
    }
}

/// Adjunction transport Φ ↦ Ψ: a *-functor A → F(B) extends uniquely to a
/// linear functor Lin(A) → B by Ψ(Σ λ_φ φ) := Σ λ_φ Φ(φ).
pub fn phi_to_psi(
    lin: &Linearized,
    b: &LinearStarCategory,
    phi: &StarFunctorIntoLinear,
) -> LinearFunctor {
    let n = lin.cat.ob_count();
    let _ = b;
    LinearFunctor {
        obj: phi.obj.clone(),
        maps: (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| lin.basis[x][y].iter().map(|&f| phi.mor[f].coeffs.clone()).collect())
                    .collect()
            })
            .collect(),
    }
}

/// Adjunction transport Ψ ↦ Φ: restrict a linear functor along the canonical
/// map A → Lin(A).
pub fn psi_to_phi(
    a: &MarkedStarCategory,
    lin: &Linearized,
    b: &LinearStarCategory,
    psi: &LinearFunctor,
) -> StarFunctorIntoLinear {
    StarFunctorIntoLinear {
        obj: psi.obj.clone(),
        mor: a
            .base()
            .morphisms()
            .map(|f| psi.apply(&lin.cat, b, &lin.elem_of_mor(a, f)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinGroupoid;

    fn bz2() -> MarkedStarCategory {
        MarkedStarCategory::from_groupoid_ma(&FinGroupoid::from_group_table(
            &[vec![0, 1], vec![1, 0]],
            0,
        ))
    }

    #[test]
    fn linearize_point_is_scalar_algebra() {
        let lin = linearize(&MarkedStarCategory::point());
        assert_eq!(lin.cat.ob_count(), 1);
        assert_eq!(lin.cat.dim(0, 0), 1);
    }

    #[test]
    fn linearize_bz2_is_group_algebra() {
        let a = bz2();
        let lin = linearize(&a);
        assert_eq!(lin.cat.dim(0, 0), 2);
        let s = lin.elem_of_mor(&a, 1);
        // s∘s = e and s* = s.
        assert_eq!(lin.cat.compose_elems(&s, &s), lin.cat.identity_elem(0));
        assert_eq!(lin.cat.star_elem(&s), s);
        assert!(lin.cat.is_marked(&s));
    }

    #[test]
    fn transport_round_trips() {
        let a = bz2();
        let lin = linearize(&a);
        // Φ: the canonical inclusion of BZ₂ into its linearization.
        let phi = StarFunctorIntoLinear {
            obj: vec![0],
            mor: a.base().morphisms().map(|f| lin.elem_of_mor(&a, f)).collect(),
        };
        phi.validate(&a, &lin.cat, true).unwrap();
        let psi = phi_to_psi(&lin, &lin.cat, &phi);
        psi.validate(&lin.cat, &lin.cat, true).unwrap();
        assert_eq!(psi, LinearFunctor::identity(&lin.cat));
        let phi2 = psi_to_phi(&a, &lin, &lin.cat, &psi);
        assert_eq!(phi2, phi);
        // A second Φ: send s to −s (still a *-functor, not marked-preserving
        // since −s is not a marked element).
        let minus_s = lin.cat.scale_elem(&(-crate::scalar::Scalar::one()), &lin.elem_of_mor(&a, 1));
        let phi3 = StarFunctorIntoLinear { obj: vec![0], mor: vec![lin.cat.identity_elem(0), minus_s] };
        phi3.validate(&a, &lin.cat, false).unwrap();
        assert!(phi3.validate(&a, &lin.cat, true).is_err());
        let psi3 = phi_to_psi(&lin, &lin.cat, &phi3);
        psi3.validate(&lin.cat, &lin.cat, false).unwrap();
        assert_eq!(psi_to_phi(&a, &lin, &lin.cat, &psi3), phi3);
    }
}

use crate::fincat::FinGroupoid;
use crate::linalg::zero_vec;
use crate::scalar::Scalar;
use crate::star::{LinElem, LinearStarCategory, MarkedStarCategory};

/// A ♯ 𝔾 in the plain/marked flavor: the product category with
/// (f, φ)* = (f*, φ⁻¹), marking all (f, φ) with f marked.
#[derive(Debug, Clone)]
pub struct SharpProduct {
    pub cat: MarkedStarCategory,
    pub a_obs: usize,
    pub g_obs: usize,
    pub a_mors: usize,
    pub g_mors: usize,
}

impl SharpProduct {
    pub fn ob(&self, a: usize, g: usize) -> usize {
        a * self.g_obs + g
    }

    pub fn unob(&self, o: usize) -> (usize, usize) {
        (o / self.g_obs, o % self.g_obs)
    }

    pub fn mor(&self, f: usize, phi: usize) -> usize {
        f * self.g_mors + phi
    }

    pub fn unmor(&self, m: usize) -> (usize, usize) {
        (m / self.g_mors, m % self.g_mors)
    }
}

pub fn sharp_times(a: &MarkedStarCategory, g: &FinGroupoid) -> SharpProduct {
    let base = a.base().product(&g.cat);
    let g_mors = g.cat.mor_count();
    let star = (0..base.mor_count())
        .map(|m| {
            let (f, phi) = (m / g_mors, m % g_mors);
            a.star(f) * g_mors + g.inv(phi)
        })
        .collect();
    let marked = a
        .marked()
        .iter()
        .flat_map(|&f| g.cat.morphisms().map(move |phi| f * g_mors + phi))
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked)
        .expect("sharp product of valid inputs is valid");
    SharpProduct {
        cat,
        a_obs: a.base().ob_count(),
        g_obs: g.cat.ob_count(),
        a_mors: a.base().mor_count(),
        g_mors,
    }
}

/// A ⊗ 𝔾 in the linear flavor: Hom((a,g),(a',g')) = ⊕_{φ: g→g'} Hom_A(a,a'),
/// basis indexed by pairs (φ, i) in lexicographic order.
#[derive(Debug, Clone)]
pub struct SharpTensor {
    pub cat: LinearStarCategory,
    pub a_obs: usize,
    pub g_obs: usize,
    /// `blocks[x][y]` = list of 𝔾-morphisms g_x → g_y indexing the blocks of
    /// Hom((a,g_x),(a',g_y)), where (x, y) are sharp objects.
    pub blocks: Vec<Vec<Vec<usize>>>,
}

impl SharpTensor {
    pub fn ob(&self, a: usize, g: usize) -> usize {
        a * self.g_obs + g
    }

    pub fn unob(&self, o: usize) -> (usize, usize) {
        (o / self.g_obs, o % self.g_obs)
    }

    /// The element with the coefficients of `f` placed in the block of φ.
    pub fn block_elem(&self, a: &LinearStarCategory, f: &LinElem, phi_pos: usize, src: usize, tgt: usize) -> LinElem {
        let dim_a = a.dim(self.unob(src).0, self.unob(tgt).0);
        let total = self.blocks[src][tgt].len() * dim_a;
        let mut coeffs = zero_vec(total);
        for (i, c) in f.coeffs.iter().enumerate() {
            coeffs[phi_pos * dim_a + i] = c.clone();
        }
        LinElem { src, tgt, coeffs }
    }
}

pub fn sharp_tensor(a: &LinearStarCategory, g: &FinGroupoid) -> SharpTensor {
    let an = a.ob_count();
    let gn = g.cat.ob_count();
    let n = an * gn;
    let ob = |x: usize, gg: usize| x * gn + gg;
    let unob = |o: usize| (o / gn, o % gn);
    let blocks: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (_, gx) = unob(x);
                    let (_, gy) = unob(y);
                    g.cat.hom(gx, gy)
                })
                .collect()
        })
        .collect();
    let dims: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| blocks[x][y].len() * a.dim(unob(x).0, unob(y).0))
                .collect()
        })
        .collect();
    // Composition: (ψ, e_j) ∘ (φ, e_i) = (ψ∘φ, e_j ∘ e_i) expanded over the
    // basis of Hom_A.
    let compose: Vec<Vec<Vec<Vec<Vec<Vec<Scalar>>>>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    (0..n)
                        .map(|z| {
                            let (ax, _) = unob(x);
                            let (ay, _) = unob(y);
                            let (az, _) = unob(z);
                            let d_xy = a.dim(ax, ay);
                            let d_yz = a.dim(ay, az);
                            let d_xz = a.dim(ax, az);
                            (0..dims[y][z])
                                .map(|jj| {
                                    let (pj, j) = (jj / d_yz, jj % d_yz);
                                    (0..dims[x][y])
                                        .map(|ii| {
                                            let (pi, i) = (ii / d_xy, ii % d_xy);
                                            let psi = blocks[y][z][pj];
                                            let phi = blocks[x][y][pi];
                                            let comp_g = g
                                                .cat
                                                .compose(psi, phi)
                                                .expect("groupoid morphisms compose");
                                            let pk = blocks[x][z]
                                                .iter()
                                                .position(|&m| m == comp_g)
                                                .expect("composite block");
                                            let prod = a.compose_elems(
                                                &a.basis_elem(ay, az, j),
                                                &a.basis_elem(ax, ay, i),
                                            );
                                            let mut v = zero_vec(dims[x][z]);
                                            for (k, c) in prod.coeffs.iter().enumerate() {
                                                v[pk * d_xz + k] = c.clone();
                                            }
                                            v
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
    let identity: Vec<Vec<Scalar>> = (0..n)
        .map(|x| {
            let (ax, gx) = unob(x);
            let id_a = a.identity_elem(ax);
            let p = blocks[x][x]
                .iter()
                .position(|&m| m == g.cat.id(gx))
                .expect("identity block");
            let d = a.dim(ax, ax);
            let mut v = zero_vec(dims[x][x]);
            for (i, c) in id_a.coeffs.iter().enumerate() {
                v[p * d + i] = c.clone();
            }
            v
        })
        .collect();
    let star: Vec<Vec<Vec<Vec<Scalar>>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (ax, _) = unob(x);
                    let (ay, _) = unob(y);
                    let d_xy = a.dim(ax, ay);
                    let d_yx = a.dim(ay, ax);
                    (0..dims[x][y])
                        .map(|ii| {
                            let (pi, i) = (ii / d_xy, ii % d_xy);
                            let phi = blocks[x][y][pi];
                            let phi_inv = g.inv(phi);
                            let p = blocks[y][x]
                                .iter()
                                .position(|&m| m == phi_inv)
                                .expect("inverse block");
                            let starred = a.star_elem(&a.basis_elem(ax, ay, i));
                            let mut v = zero_vec(dims[y][x]);
                            for (k, c) in starred.coeffs.iter().enumerate() {
                                v[p * d_yx + k] = c.clone();
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut marked = Vec::new();
    for m in a.marked() {
        for gg in g.cat.morphisms() {
            let x = ob(m.src, g.cat.src(gg));
            let y = ob(m.tgt, g.cat.tgt(gg));
            let p = blocks[x][y].iter().position(|&mm| mm == gg).expect("block of φ");
            let d = a.dim(m.src, m.tgt);
            let mut v = zero_vec(dims[x][y]);
            for (i, c) in m.coeffs.iter().enumerate() {
                v[p * d + i] = c.clone();
            }
            marked.push(LinElem { src: x, tgt: y, coeffs: v });
        }
    }
    let cat = LinearStarCategory::validate(n, dims, compose, identity, star, marked)
        .expect("tensor of valid inputs is valid");
    SharpTensor { cat, a_obs: an, g_obs: gn, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Budget;
    use crate::fincat::isomorphic;
    use crate::star::{classifier, linearize, ClassifierKind};

    #[test]
    fn point_sharp_indiscrete_is_unitary_classifier() {
        let pt = MarkedStarCategory::point();
        let i2 = FinGroupoid::indiscrete(2);
        let sharp = sharp_times(&pt, &i2);
        // Underlying *-category: the tables of 𝟙.  As a marked category the
        // product marks every (id, φ), which is the marking of 𝟙⁺.
        let one = classifier(ClassifierKind::Unitary);
        assert!(isomorphic(sharp.cat.base(), one.base(), &Budget::default()).unwrap());
        let one_plus = classifier(ClassifierKind::MarkedUnitary);
        assert_eq!(sharp.cat.marked().len(), one_plus.marked().len());
    }

    #[test]
    fn sharp_with_trivial_groupoid_is_identity() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let a = MarkedStarCategory::from_groupoid_ma(&z2);
        let sharp = sharp_times(&a, &FinGroupoid::discrete(1));
        assert!(isomorphic(sharp.cat.base(), a.base(), &Budget::default()).unwrap());
        assert_eq!(sharp.cat.marked().len(), a.marked().len());
    }

    #[test]
    fn tensor_point_with_bz2_is_group_algebra() {
        let linpt = linearize(&MarkedStarCategory::point());
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let t = sharp_tensor(&linpt.cat, &z2);
        assert_eq!(t.cat.ob_count(), 1);
        assert_eq!(t.cat.dim(0, 0), 2);
        // The nontrivial block element squares to the identity.
        let s = t.cat.basis_elem(0, 0, 1);
        let e = t.cat.basis_elem(0, 0, 0);
        let ss = t.cat.compose_elems(&s, &s);
        assert!(ss == e || ss == t.cat.basis_elem(0, 0, 0));
        assert_eq!(t.cat.star_elem(&s), s);
    }
}

use crate::linalg::{vec_add, vec_is_zero, vec_scale, zero_vec, Vector};
use crate::scalar::Scalar;

/// An element of a hom-space of a linear *-category, as a coefficient vector
/// over the chosen basis of Hom(src, tgt).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinElem {
    pub src: usize,
    pub tgt: usize,
    pub coeffs: Vector,
}

/// A finite-dimensional ℚ(i)-linear *-category: hom-spaces with explicit
/// finite bases, bilinear composition tables, an anti-linear involution, and
/// a marked subset of hom-elements.
///
/// Zero objects (End = 0) are permitted: their identity is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearStarCategory {
    objects: usize,
    /// `dims[a][b]` = dim Hom(a, b).
    dims: Vec<Vec<usize>>,
    /// `compose[a][b][c][j][i]` = the vector of e_j ∘ e_i in Hom(a, c),
    /// where e_i runs over Hom(a, b) and e_j over Hom(b, c).
    compose: Vec<Vec<Vec<Vec<Vec<Vector>>>>>,
    /// `identity[a]`: the identity element of End(a).
    identity: Vec<Vector>,
    /// `star[a][b][i]` = the vector of (e_i)* in Hom(b, a).
    star: Vec<Vec<Vec<Vector>>>,
    marked: Vec<LinElem>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("table shape mismatch")]
    Shape,
    #[error("identity law fails on basis element {i} of Hom({a}, {b})")]
    Identity { a: usize, b: usize, i: usize },
    #[error("associativity fails on basis triple ({i}, {j}, {k}) over ({a}, {b}, {c}, {d})")]
    NonAssociative { a: usize, b: usize, c: usize, d: usize, i: usize, j: usize, k: usize },
    #[error("star is not an involution on basis element {i} of Hom({a}, {b})")]
    NotInvolutive { a: usize, b: usize, i: usize },
    #[error("star moves the identity of object {a}")]
    MovesIdentity { a: usize },
    #[error("star is not contravariant on basis pair ({j}, {i})")]
    NotContravariant { j: usize, i: usize },
    #[error("marked element {index} is not unitary")]
    MarkedNotUnitary { index: usize },
    #[error("marked set misses the identity of object {a}")]
    MarkedMissesIdentity { a: usize },
    #[error("marked set not closed under star at element {index}")]
    MarkedNotStarClosed { index: usize },
    #[error("marked set not closed under composition at pair ({g}, {f})")]
    MarkedNotComposeClosed { g: usize, f: usize },
}

impl LinearStarCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn validate(
        objects: usize,
        dims: Vec<Vec<usize>>,
        compose: Vec<Vec<Vec<Vec<Vec<Vector>>>>>,
        identity: Vec<Vector>,
        star: Vec<Vec<Vec<Vector>>>,
        marked: Vec<LinElem>,
    ) -> Result<Self, LinearError> {
        let shape_ok = dims.len() == objects
            && dims.iter().all(|row| row.len() == objects)
            && identity.len() == objects
            && (0..objects).all(|a| identity[a].len() == dims[a][a])
            && star.len() == objects
            && (0..objects).all(|a| {
                star[a].len() == objects
                    && (0..objects).all(|b| {
                        star[a][b].len() == dims[a][b]
                            && star[a][b].iter().all(|v| v.len() == dims[b][a])
                    })
            })
            && compose.len() == objects
            && (0..objects).all(|a| {
                compose[a].len() == objects
                    && (0..objects).all(|b| {
                        compose[a][b].len() == objects
                            && (0..objects).all(|c| {
                                compose[a][b][c].len() == dims[b][c]
                                    && compose[a][b][c].iter().all(|row| {
                                        row.len() == dims[a][b]
                                            && row.iter().all(|v| v.len() == dims[a][c])
                                    })
                            })
                    })
            });
        if !shape_ok {
            return Err(LinearError::Shape);
        }
        let cat = LinearStarCategory { objects, dims, compose, identity, star, marked };
        // Identity laws on basis elements.
        for a in 0..objects {
            for b in 0..objects {
                for i in 0..cat.dims[a][b] {
                    let e = cat.basis_elem(a, b, i);
                    if cat.compose_elems(&e, &cat.identity_elem(a)) != e
                        || cat.compose_elems(&cat.identity_elem(b), &e) != e
                    {
                        return Err(LinearError::Identity { a, b, i });
                    }
                }
            }
        }
        // Associativity on basis triples.
        for a in 0..objects {
            for b in 0..objects {
                for c in 0..objects {
                    for d in 0..objects {
                        for i in 0..cat.dims[a][b] {
                            for j in 0..cat.dims[b][c] {
                                for k in 0..cat.dims[c][d] {
                                    let e1 = cat.basis_elem(a, b, i);
                                    let e2 = cat.basis_elem(b, c, j);
                                    let e3 = cat.basis_elem(c, d, k);
                                    let left =
                                        cat.compose_elems(&cat.compose_elems(&e3, &e2), &e1);
                                    let right =
                                        cat.compose_elems(&e3, &cat.compose_elems(&e2, &e1));
                                    if left != right {
                                        return Err(LinearError::NonAssociative {
                                            a, b, c, d, i, j, k,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // Star: involution, identity-fixing, contravariance.
        for a in 0..objects {
            for b in 0..objects {
                for i in 0..cat.dims[a][b] {
                    let e = cat.basis_elem(a, b, i);
                    if cat.star_elem(&cat.star_elem(&e)) != e {
                        return Err(LinearError::NotInvolutive { a, b, i });
                    }
                }
            }
            if cat.star_elem(&cat.identity_elem(a)) != cat.identity_elem(a) {
                return Err(LinearError::MovesIdentity { a });
            }
        }
        for a in 0..objects {
            for b in 0..objects {
                for c in 0..objects {
                    for i in 0..cat.dims[a][b] {
                        for j in 0..cat.dims[b][c] {
                            let f = cat.basis_elem(a, b, i);
                            let g = cat.basis_elem(b, c, j);
                            let left = cat.star_elem(&cat.compose_elems(&g, &f));
                            let right = cat.compose_elems(&cat.star_elem(&f), &cat.star_elem(&g));
                            if left != right {
                                return Err(LinearError::NotContravariant { j, i });
                            }
                        }
                    }
                }
            }
        }
        // Marking.
        for (index, m) in cat.marked.iter().enumerate() {
            if m.src >= objects || m.tgt >= objects || m.coeffs.len() != cat.dims[m.src][m.tgt] {
                return Err(LinearError::Shape);
            }
            if !cat.is_unitary_elem(m) {
                return Err(LinearError::MarkedNotUnitary { index });
            }
            if !cat.is_marked(&cat.star_elem(m)) {
                return Err(LinearError::MarkedNotStarClosed { index });
            }
        }
        for a in 0..objects {
            if !cat.is_marked(&cat.identity_elem(a)) {
                return Err(LinearError::MarkedMissesIdentity { a });
            }
        }
        for (gi, g) in cat.marked.iter().enumerate() {
            for (fi, f) in cat.marked.iter().enumerate() {
                if f.tgt == g.src && !cat.is_marked(&cat.compose_elems(g, f)) {
                    return Err(LinearError::MarkedNotComposeClosed { g: gi, f: fi });
                }
            }
        }
        Ok(cat)
    }

    pub fn ob_count(&self) -> usize {
        self.objects
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.dims[a][b]
    }

    pub fn is_zero_object(&self, a: usize) -> bool {
        self.dims[a][a] == 0 || vec_is_zero(&self.identity[a])
    }

    pub fn zero_elem(&self, a: usize, b: usize) -> LinElem {
        LinElem { src: a, tgt: b, coeffs: zero_vec(self.dims[a][b]) }
    }

    pub fn basis_elem(&self, a: usize, b: usize, i: usize) -> LinElem {
        let mut coeffs = zero_vec(self.dims[a][b]);
        coeffs[i] = Scalar::one();
        LinElem { src: a, tgt: b, coeffs }
    }

    pub fn identity_elem(&self, a: usize) -> LinElem {
        LinElem { src: a, tgt: a, coeffs: self.identity[a].clone() }
    }

    /// Bilinear composite g∘f; panics if the elements are not composable.
    pub fn compose_elems(&self, g: &LinElem, f: &LinElem) -> LinElem {
        assert_eq!(f.tgt, g.src, "non-composable elements");
        let (a, b, c) = (f.src, f.tgt, g.tgt);
        let mut acc = zero_vec(self.dims[a][c]);
        for (j, gj) in g.coeffs.iter().enumerate() {
            if gj.is_zero() {
                continue;
            }
            for (i, fi) in f.coeffs.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                acc = vec_add(&acc, &vec_scale(&(gj * fi), &self.compose[a][b][c][j][i]));
            }
        }
        LinElem { src: a, tgt: c, coeffs: acc }
    }

    /// Anti-linear involution.
    pub fn star_elem(&self, x: &LinElem) -> LinElem {
        let mut acc = zero_vec(self.dims[x.tgt][x.src]);
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = vec_add(&acc, &vec_scale(&c.conj(), &self.star[x.src][x.tgt][i]));
        }
        LinElem { src: x.tgt, tgt: x.src, coeffs: acc }
    }

    pub fn scale_elem(&self, c: &Scalar, x: &LinElem) -> LinElem {
        LinElem { src: x.src, tgt: x.tgt, coeffs: vec_scale(c, &x.coeffs) }
    }

    pub fn add_elems(&self, x: &LinElem, y: &LinElem) -> LinElem {
        assert_eq!((x.src, x.tgt), (y.src, y.tgt));
        LinElem { src: x.src, tgt: x.tgt, coeffs: vec_add(&x.coeffs, &y.coeffs) }
    }

    pub fn is_unitary_elem(&self, u: &LinElem) -> bool {
        let s = self.star_elem(u);
        self.compose_elems(&s, u) == self.identity_elem(u.src)
            && self.compose_elems(u, &s) == self.identity_elem(u.tgt)
    }

    pub fn is_marked(&self, x: &LinElem) -> bool {
        self.marked.contains(x)
    }

    pub fn marked(&self) -> &[LinElem] {
        &self.marked
    }

    /// The monomial unitaries μ·e for e a unitary basis element and μ a
    /// fourth root of unity, together with all scaled identities.  Unitary
    /// groups of linear categories are infinite in general ((3+4i)/5 is a
    /// norm-one scalar), so enumerative constructions in the linear flavor
    /// quantify over this finite frame instead.
    pub fn unitary_frame(&self) -> Vec<LinElem> {
        let roots = [
            Scalar::one(),
            -Scalar::one(),
            Scalar::i(),
            -Scalar::i(),
        ];
        let mut frame = Vec::new();
        for a in 0..self.objects {
            for b in 0..self.objects {
                for i in 0..self.dims[a][b] {
                    let e = self.basis_elem(a, b, i);
                    if self.is_unitary_elem(&e) {
                        for mu in &roots {
                            let cand = self.scale_elem(mu, &e);
                            if !frame.contains(&cand) {
                                frame.push(cand);
                            }
                        }
                    }
                }
            }
            for mu in &roots {
                let cand = self.scale_elem(mu, &self.identity_elem(a));
                if self.is_unitary_elem(&cand) && !frame.contains(&cand) {
                    frame.push(cand);
                }
            }
        }
        frame
    }

    pub fn with_marked(&self, marked: Vec<LinElem>) -> Result<Self, LinearError> {
        LinearStarCategory::validate(
            self.objects,
            self.dims.clone(),
            self.compose.clone(),
            self.identity.clone(),
            self.star.clone(),
            marked,
        )
    }

    /// Raw table access for serialization.
    pub fn tables(
        &self,
    ) -> (&Vec<Vec<usize>>, &Vec<Vec<Vec<Vec<Vec<Vector>>>>>, &Vec<Vector>, &Vec<Vec<Vec<Vector>>>)
    {
        (&self.dims, &self.compose, &self.identity, &self.star)
    }
}

/// A linear *-functor: object map plus one matrix per hom-space, subject to
/// identity, composition, star, and (optionally) marking preservation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctor {
    pub obj: Vec<usize>,
    /// `maps[a][b][i]` = image vector of the i-th basis element of
    /// Hom(a, b), living in `Hom(obj[a], obj[b])`.
    pub maps: Vec<Vec<Vec<Vector>>>,
}

impl LinearFunctor {
    pub fn identity(cat: &LinearStarCategory) -> Self {
        let n = cat.ob_count();
        LinearFunctor {
            obj: (0..n).collect(),
            maps: (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| (0..cat.dim(a, b)).map(|i| cat.basis_elem(a, b, i).coeffs).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn apply(&self, cat: &LinearStarCategory, cod: &LinearStarCategory, x: &LinElem) -> LinElem {
        let (fa, fb) = (self.obj[x.src], self.obj[x.tgt]);
        let mut acc = zero_vec(cod.dim(fa, fb));
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = vec_add(&acc, &vec_scale(c, &self.maps[x.src][x.tgt][i]));
        }
        let _ = cat;
        LinElem { src: fa, tgt: fb, coeffs: acc }
    }

    pub fn validate(
        &self,
        dom: &LinearStarCategory,
        cod: &LinearStarCategory,
        marked: bool,
    ) -> Result<(), LinearFunctorError> {
        let n = dom.ob_count();
        if self.obj.len() != n || self.obj.iter().any(|&b| b >= cod.ob_count()) {
            return Err(LinearFunctorError::Shape);
        }
        let shape_ok = self.maps.len() == n
            && (0..n).all(|a| {
                self.maps[a].len() == n
                    && (0..n).all(|b| {
                        self.maps[a][b].len() == dom.dim(a, b)
                            && self.maps[a][b]
                                .iter()
                                .all(|v| v.len() == cod.dim(self.obj[a], self.obj[b]))
                    })
            });
        if !shape_ok {
            return Err(LinearFunctorError::Shape);
        }
        for a in 0..n {
            if self.apply(dom, cod, &dom.identity_elem(a)) != cod.identity_elem(self.obj[a]) {
                return Err(LinearFunctorError::Identity { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for i in 0..dom.dim(a, b) {
                        for j in 0..dom.dim(b, c) {
                            let f = dom.basis_elem(a, b, i);
                            let g = dom.basis_elem(b, c, j);
                            let left = self.apply(dom, cod, &dom.compose_elems(&g, &f));
                            let right = cod
                                .compose_elems(&self.apply(dom, cod, &g), &self.apply(dom, cod, &f));
                            if left != right {
                                return Err(LinearFunctorError::Composition { j, i });
                            }
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for i in 0..dom.dim(a, b) {
                    let e = dom.basis_elem(a, b, i);
                    if self.apply(dom, cod, &dom.star_elem(&e))
                        != cod.star_elem(&self.apply(dom, cod, &e))
                    {
                        return Err(LinearFunctorError::Star { a, b, i });
                    }
                }
            }
        }
        if marked {
            for (index, m) in dom.marked().iter().enumerate() {
                if !cod.is_marked(&self.apply(dom, cod, m)) {
                    return Err(LinearFunctorError::Marked { index });
                }
            }
        }
        Ok(())
    }

    /// self ∘ inner.
    pub fn after(
        &self,
        inner: &LinearFunctor,
        inner_dom: &LinearStarCategory,
        mid: &LinearStarCategory,
        cod: &LinearStarCategory,
    ) -> LinearFunctor {
        let n = inner_dom.ob_count();
        LinearFunctor {
            obj: inner.obj.iter().map(|&a| self.obj[a]).collect(),
            maps: (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| {
                            (0..inner_dom.dim(a, b))
                                .map(|i| {
                                    let mid_img = inner.apply(inner_dom, mid, &inner_dom.basis_elem(a, b, i));
                                    self.apply(mid, cod, &mid_img).coeffs
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearFunctorError {
    #[error("shape mismatch")]
    Shape,
    #[error("identity of object {a} not preserved")]
    Identity { a: usize },
    #[error("composition not preserved on basis pair ({j}, {i})")]
    Composition { j: usize, i: usize },
    #[error("star not preserved on basis element {i} of Hom({a}, {b})")]
    Star { a: usize, b: usize, i: usize },
    #[error("marked element {index} has unmarked image")]
    Marked { index: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The one-object category with End = ℚ(i): composition is
    /// multiplication, star is conjugation.
    pub fn scalar_point() -> LinearStarCategory {
        LinearStarCategory::validate(
            1,
            vec![vec![1]],
            vec![vec![vec![vec![vec![vec![Scalar::one()]]]]]],
            vec![vec![Scalar::one()]],
            vec![vec![vec![vec![Scalar::one()]]]],
            vec![LinElem { src: 0, tgt: 0, coeffs: vec![Scalar::one()] }],
        )
        .unwrap()
    }

    #[test]
    fn scalar_point_is_valid() {
        let c = scalar_point();
        let two = LinElem { src: 0, tgt: 0, coeffs: vec![Scalar::from_int(2)] };
        // 2·id is selfadjoint but (2·id)*(2·id) = 4·id ≠ id.
        assert!(!c.is_unitary_elem(&two));
        assert!(c.is_unitary_elem(&c.identity_elem(0)));
        let i_elem = LinElem { src: 0, tgt: 0, coeffs: vec![Scalar::i()] };
        assert!(c.is_unitary_elem(&i_elem));
        assert_eq!(c.unitary_frame().len(), 4);
    }

    #[test]
    fn identity_functor_validates() {
        let c = scalar_point();
        LinearFunctor::identity(&c).validate(&c, &c, true).unwrap();
    }
}

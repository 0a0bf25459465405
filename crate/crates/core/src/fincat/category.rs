use std::fmt;

/// Raw category tables as parsed from the wire: not yet checked.
#[derive(Debug, Clone, Default)]
pub struct RawCategory {
    pub objects: usize,
    /// (src, tgt) per morphism id.
    pub morphisms: Vec<(usize, usize)>,
    /// identity morphism id per object id.
    pub identity: Vec<usize>,
    /// (g, f, g∘f) entries.
    pub compose: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("morphism {mor} references undeclared object ({src}, {tgt})")]
    BadEndpoints { mor: usize, src: usize, tgt: usize },
    #[error("identity table has {given} entries for {objects} objects")]
    BadIdentityTable { objects: usize, given: usize },
    #[error("identity law fails at morphism {f}")]
    MissingIdentity { f: usize },
    #[error("composite entry ({g}, {f}, {gf}) is ill-typed or references undeclared ids")]
    DanglingComposite { g: usize, f: usize, gf: usize },
    #[error("composable pair ({g}, {f}) has no composite entry")]
    MissingComposite { g: usize, f: usize },
    #[error("associativity fails on ({h}, {g}, {f})")]
    NonAssociative { h: usize, g: usize, f: usize },
    #[error("duplicate composite entry for ({g}, {f})")]
    DuplicateComposite { g: usize, f: usize },
}

/// A validated finite category.  Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// `compose[g][f] = Some(g∘f)` exactly when `tgt(f) = src(g)`.
    compose: Vec<Vec<Option<usize>>>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCategory({} objects, {} morphisms)", self.objects, self.mor_count())
    }
}

impl FinCategory {
    /// Validate raw tables; all invariants hold on the returned value.
    pub fn validate(raw: &RawCategory) -> Result<FinCategory, CategoryError> {
        let n = raw.objects;
        let m = raw.morphisms.len();
        for (id, &(s, t)) in raw.morphisms.iter().enumerate() {
            if s >= n || t >= n {
                return Err(CategoryError::BadEndpoints { mor: id, src: s, tgt: t });
            }
        }
        if raw.identity.len() != n {
            return Err(CategoryError::BadIdentityTable { objects: n, given: raw.identity.len() });
        }
        for (a, &e) in raw.identity.iter().enumerate() {
            if e >= m || raw.morphisms[e] != (a, a) {
                return Err(CategoryError::MissingIdentity { f: e.min(m.saturating_sub(1)) });
            }
        }
        let mut compose = vec![vec![None; m]; m];
        for &(g, f, gf) in &raw.compose {
            if g >= m || f >= m || gf >= m {
                return Err(CategoryError::DanglingComposite { g, f, gf });
            }
            let (fs, ft) = raw.morphisms[f];
            let (gs, gt) = raw.morphisms[g];
            let (hs, ht) = raw.morphisms[gf];
            if ft != gs || hs != fs || ht != gt {
                return Err(CategoryError::DanglingComposite { g, f, gf });
            }
            if compose[g][f].is_some() {
                return Err(CategoryError::DuplicateComposite { g, f });
            }
            compose[g][f] = Some(gf);
        }
        let cat = FinCategory {
            objects: n,
            src: raw.morphisms.iter().map(|&(s, _)| s).collect(),
            tgt: raw.morphisms.iter().map(|&(_, t)| t).collect(),
            identity: raw.identity.clone(),
            compose,
        };
        // Totality on composable pairs.
        for g in 0..m {
            for f in 0..m {
                if cat.tgt[f] == cat.src[g] && cat.compose[g][f].is_none() {
                    return Err(CategoryError::MissingComposite { g, f });
                }
            }
        }
        // Identity laws.
        for f in 0..m {
            let idt = cat.identity[cat.tgt[f]];
            let ids = cat.identity[cat.src[f]];
            if cat.compose[idt][f] != Some(f) || cat.compose[f][ids] != Some(f) {
                return Err(CategoryError::MissingIdentity { f });
            }
        }
        // Associativity.
        for h in 0..m {
            for g in 0..m {
                let Some(hg) = cat.compose[h][g] else { continue };
                for f in 0..m {
                    let Some(gf) = cat.compose[g][f] else { continue };
                    if cat.compose[hg][f] != cat.compose[h][gf] {
                        return Err(CategoryError::NonAssociative { h, g, f });
                    }
                }
            }
        }
        Ok(cat)
    }

    pub fn ob_count(&self) -> usize {
        self.objects
    }

    pub fn mor_count(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = usize> {
        0..self.objects
    }

    pub fn morphisms(&self) -> impl Iterator<Item = usize> {
        0..self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn id(&self, a: usize) -> usize {
        self.identity[a]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src[f]] == f
    }

    /// `g∘f`, defined exactly when `tgt(f) = src(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        self.morphisms().filter(|&f| self.src[f] == a && self.tgt[f] == b).collect()
    }

    /// Two-sided inverse, if one exists.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src[f], self.tgt[f]);
        self.hom(b, a).into_iter().find(|&g| {
            self.compose[g][f] == Some(self.identity[a]) && self.compose[f][g] == Some(self.identity[b])
        })
    }

    pub fn is_invertible(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// Is there an isomorphism a ≅ b?
    pub fn objects_isomorphic(&self, a: usize, b: usize) -> bool {
        self.hom(a, b).into_iter().any(|f| self.is_invertible(f))
    }

    pub fn to_raw(&self) -> RawCategory {
        let mut compose = Vec::new();
        for g in self.morphisms() {
            for f in self.morphisms() {
                if let Some(gf) = self.compose[g][f] {
                    compose.push((g, f, gf));
                }
            }
        }
        RawCategory {
            objects: self.objects,
            morphisms: self.src.iter().copied().zip(self.tgt.iter().copied()).collect(),
            identity: self.identity.clone(),
            compose,
        }
    }

    /// The terminal category: one object, one identity.
    pub fn point() -> FinCategory {
        FinCategory::validate(&RawCategory {
            objects: 1,
            morphisms: vec![(0, 0)],
            identity: vec![0],
            compose: vec![(0, 0, 0)],
        })
        .expect("point category is valid")
    }

    /// The empty category.
    pub fn empty() -> FinCategory {
        FinCategory::validate(&RawCategory::default()).expect("empty category is valid")
    }

    /// Discrete category on `n` objects.
    pub fn discrete(n: usize) -> FinCategory {
        FinCategory::validate(&RawCategory {
            objects: n,
            morphisms: (0..n).map(|a| (a, a)).collect(),
            identity: (0..n).collect(),
            compose: (0..n).map(|a| (a, a, a)).collect(),
        })
        .expect("discrete category is valid")
    }

    /// The walking arrow 0 → 1.
    pub fn walking_arrow() -> FinCategory {
        FinCategory::validate(&RawCategory {
            objects: 2,
            morphisms: vec![(0, 0), (1, 1), (0, 1)],
            identity: vec![0, 1],
            compose: vec![(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 2)],
        })
        .expect("walking arrow is valid")
    }

    /// Disjoint union, objects and morphisms of `self` first.
    pub fn disjoint_union(&self, other: &FinCategory) -> FinCategory {
        let on = self.objects;
        let mn = self.mor_count();
        let mut raw = self.to_raw();
        raw.objects += other.objects;
        raw.morphisms
            .extend(other.src.iter().zip(&other.tgt).map(|(&s, &t)| (s + on, t + on)));
        raw.identity.extend(other.identity.iter().map(|&e| e + mn));
        for g in other.morphisms() {
            for f in other.morphisms() {
                if let Some(gf) = other.compose[g][f] {
                    raw.compose.push((g + mn, f + mn, gf + mn));
                }
            }
        }
        FinCategory::validate(&raw).expect("disjoint union of valid categories is valid")
    }

    /// Product category.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let pair_o = |a: usize, b: usize| a * other.objects + b;
        let pair_m = |f: usize, g: usize| f * other.mor_count() + g;
        let mut morphisms = Vec::new();
        for f in self.morphisms() {
            for g in other.morphisms() {
                morphisms.push((pair_o(self.src[f], other.src[g]), pair_o(self.tgt[f], other.tgt[g])));
            }
        }
        let mut compose = Vec::new();
        for f1 in self.morphisms() {
            for g1 in other.morphisms() {
                for f0 in self.morphisms() {
                    for g0 in other.morphisms() {
                        if let (Some(f), Some(g)) = (self.compose[f1][f0], other.compose[g1][g0]) {
                            compose.push((pair_m(f1, g1), pair_m(f0, g0), pair_m(f, g)));
                        }
                    }
                }
            }
        }
        FinCategory::validate(&RawCategory {
            objects: self.objects * other.objects,
            morphisms,
            identity: (0..self.objects)
                .flat_map(|a| (0..other.objects).map(move |b| (a, b)))
                .map(|(a, b)| pair_m(self.identity[a], other.identity[b]))
                .collect(),
            compose,
        })
        .expect("product of valid categories is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_is_valid() {
        let pt = FinCategory::point();
        assert_eq!(pt.ob_count(), 1);
        assert_eq!(pt.mor_count(), 1);
    }

    #[test]
    fn missing_identity_entry_is_reported() {
        // Walking arrow with the id∘f entry removed.
        let mut raw = FinCategory::walking_arrow().to_raw();
        raw.compose.retain(|&(g, f, _)| !(g == 1 && f == 2));
        assert_eq!(
            FinCategory::validate(&raw),
            Err(CategoryError::MissingComposite { g: 1, f: 2 })
        );
        // Two parallel arrows with id∘f pointing at the wrong one.
        let raw = RawCategory {
            objects: 2,
            morphisms: vec![(0, 0), (1, 1), (0, 1), (0, 1)],
            identity: vec![0, 1],
            compose: vec![(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 3), (3, 0, 3), (1, 3, 3)],
        };
        assert_eq!(FinCategory::validate(&raw), Err(CategoryError::MissingIdentity { f: 2 }));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // One object, morphisms {id, p, q} with a deliberately broken table:
        // p∘p = q, q∘p = id but p∘q = p  =>  (p∘p)∘p = q∘p = id while
        // p∘(p∘p) = p∘q = p.
        let raw = RawCategory {
            objects: 1,
            morphisms: vec![(0, 0), (0, 0), (0, 0)],
            identity: vec![0],
            compose: vec![
                (0, 0, 0),
                (0, 1, 1),
                (1, 0, 1),
                (0, 2, 2),
                (2, 0, 2),
                (1, 1, 2),
                (2, 1, 0),
                (1, 2, 1),
                (2, 2, 1),
            ],
        };
        match FinCategory::validate(&raw) {
            Err(CategoryError::NonAssociative { .. }) => {}
            other => panic!("expected NonAssociative, got {:?}", other),
        }
    }

    #[test]
    fn dangling_composite_is_rejected() {
        let mut raw = FinCategory::point().to_raw();
        raw.compose.push((0, 0, 7));
        assert_eq!(
            FinCategory::validate(&raw),
            Err(CategoryError::DanglingComposite { g: 0, f: 0, gf: 7 })
        );
    }

    #[test]
    fn product_and_union_shapes() {
        let pt = FinCategory::point();
        let arrow = FinCategory::walking_arrow();
        assert_eq!(arrow.product(&pt).mor_count(), 3);
        assert_eq!(arrow.disjoint_union(&pt).ob_count(), 3);
        assert_eq!(FinCategory::empty().mor_count(), 0);
    }
}

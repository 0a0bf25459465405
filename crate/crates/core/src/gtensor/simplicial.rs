use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::FinGroupoid;

/// A simplicial set through dimension 2, stored without degeneracies: the
/// listed simplices are the (possibly degenerate) generating ones, with face
/// maps only.  Degenerate 1-simplices present identities in the fundamental
/// groupoid, and degenerate 2-simplices impose unit relations, so nothing is
/// lost for Π by this truncation.
#[derive(Debug, Clone, Default)]
pub struct FiniteSimplicialSet {
    pub vertices: usize,
    /// (d1, d0) per edge: d1 is the source vertex, d0 the target.
    pub edges: Vec<(usize, usize)>,
    /// (d0, d1, d2) per triangle, as edge ids: d2: v0→v1, d0: v1→v2,
    /// d1: v0→v2.
    pub triangles: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialError {
    #[error("edge {e} references an undeclared vertex")]
    BadEdge { e: usize },
    #[error("triangle {t} references an undeclared edge")]
    BadTriangle { t: usize },
    #[error("simplicial identities fail on triangle {t}")]
    FaceMismatch { t: usize },
}

impl FiniteSimplicialSet {
    pub fn validate(&self) -> Result<(), SimplicialError> {
        for (e, &(d1, d0)) in self.edges.iter().enumerate() {
            if d1 >= self.vertices || d0 >= self.vertices {
                return Err(SimplicialError::BadEdge { e });
            }
        }
        for (t, &(d0, d1, d2)) in self.triangles.iter().enumerate() {
            if d0 >= self.edges.len() || d1 >= self.edges.len() || d2 >= self.edges.len() {
                return Err(SimplicialError::BadTriangle { t });
            }
            let (v01_src, v01_tgt) = self.edges[d2];
            let (v12_src, v12_tgt) = self.edges[d0];
            let (v02_src, v02_tgt) = self.edges[d1];
            if v01_tgt != v12_src || v01_src != v02_src || v12_tgt != v02_tgt {
                return Err(SimplicialError::FaceMismatch { t });
            }
        }
        Ok(())
    }

    /// Δ⁰.
    pub fn delta0() -> Self {
        FiniteSimplicialSet { vertices: 1, edges: vec![], triangles: vec![] }
    }

    /// Δ¹: one non-degenerate edge.
    pub fn delta1() -> Self {
        FiniteSimplicialSet { vertices: 2, edges: vec![(0, 1)], triangles: vec![] }
    }

    /// Δ²: three edges and the filling triangle.
    pub fn delta2() -> Self {
        FiniteSimplicialSet {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (0, 2)],
            triangles: vec![(1, 2, 0)],
        }
    }
}

/// A presentation of the fundamental groupoid: free on the edges, with one
/// relation g∘f = h per triangle, and formal inverses.  Never materialized;
/// all uses go through [`hom_into`].
#[derive(Debug, Clone)]
pub struct GroupoidPresentation {
    pub vertices: usize,
    /// (src, tgt) per generator.
    pub generators: Vec<(usize, usize)>,
    /// (f, g, h) meaning g∘f = h.
    pub relations: Vec<(usize, usize, usize)>,
}

/// The fundamental groupoid Π(K) of a 2-truncated simplicial set, freely
/// generated by the path category: objects are the 0-simplices, generators
/// the 1-simplices, and each 2-simplex σ imposes d0σ ∘ d2σ = d1σ.
pub fn fundamental_groupoid(k: &FiniteSimplicialSet) -> GroupoidPresentation {
    GroupoidPresentation {
        vertices: k.vertices,
        generators: k.edges.clone(),
        relations: k.triangles.iter().map(|&(d0, d1, d2)| (d2, d0, d1)).collect(),
    }
}

/// A functor Π(K) → H named by where the generators go.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PresentationMap {
    pub obj: Vec<usize>,
    pub gen: Vec<usize>,
}

/// Enumerate Hom(Π(K), H) for a finite groupoid H by assigning generators
/// and checking relations.  Since H is a groupoid the formal inverses are
/// automatic, and this set also realizes Hom_sSet(K, N(H)).
pub fn hom_into(
    p: &GroupoidPresentation,
    h: &FinGroupoid,
    budget: &Budget,
) -> Result<Vec<PresentationMap>, BoundExceeded> {
    budget.start_scope();
    let mut out = Vec::new();
    let mut obj = vec![0usize; p.vertices];
    if h.cat.ob_count() == 0 {
        return Ok(if p.vertices == 0 && p.generators.is_empty() {
            vec![PresentationMap { obj: vec![], gen: vec![] }]
        } else {
            vec![]
        });
    }
    loop {
        budget.step()?;
        assign_generators(p, h, &obj, budget, &mut out)?;
        let mut k = p.vertices;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            obj[k] += 1;
            if obj[k] < h.cat.ob_count() {
                break;
            }
            obj[k] = 0;
        }
    }
}

fn assign_generators(
    p: &GroupoidPresentation,
    h: &FinGroupoid,
    obj: &[usize],
    budget: &Budget,
    out: &mut Vec<PresentationMap>,
) -> Result<(), BoundExceeded> {
    fn rec(
        p: &GroupoidPresentation,
        h: &FinGroupoid,
        obj: &[usize],
        gen: &mut Vec<usize>,
        next: usize,
        budget: &Budget,
        out: &mut Vec<PresentationMap>,
    ) -> Result<(), BoundExceeded> {
        if next == p.generators.len() {
            out.push(PresentationMap { obj: obj.to_vec(), gen: gen.clone() });
            return Ok(());
        }
        let (s, t) = p.generators[next];
        for cand in h.cat.hom(obj[s], obj[t]) {
            budget.step()?;
            gen.push(cand);
            let ok = p.relations.iter().all(|&(f, g, hh)| {
                if f <= next && g <= next && hh <= next {
                    h.cat.compose(gen[g], gen[f]) == Some(gen[hh])
                } else {
                    true
                }
            });
            if ok {
                rec(p, h, obj, gen, next + 1, budget, out)?;
            }
            gen.pop();
        }
        Ok(())
    }
    rec(p, h, obj, &mut Vec::new(), 0, budget, out)
}

/// The 2-truncated nerve of a finite groupoid: vertices are objects, edges
/// all morphisms (including identities), triangles all composable pairs.
pub fn nerve_truncated(h: &FinGroupoid) -> FiniteSimplicialSet {
    let edges: Vec<(usize, usize)> = h.cat.morphisms().map(|m| (h.cat.src(m), h.cat.tgt(m))).collect();
    let mut triangles = Vec::new();
    for f in h.cat.morphisms() {
        for g in h.cat.morphisms() {
            if let Some(gf) = h.cat.compose(g, f) {
                triangles.push((g, gf, f));
            }
        }
    }
    FiniteSimplicialSet { vertices: h.cat.ob_count(), edges, triangles }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_of_delta0_is_point() {
        let p = fundamental_groupoid(&FiniteSimplicialSet::delta0());
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        // Hom(Π(Δ⁰), H) ↔ Ob(H).
        for h in [FinGroupoid::indiscrete(2), z2, FinGroupoid::discrete(3)] {
            let maps = hom_into(&p, &h, &Budget::default()).unwrap();
            assert_eq!(maps.len(), h.cat.ob_count());
        }
    }

    #[test]
    fn pi_of_delta1_is_walking_iso() {
        let p = fundamental_groupoid(&FiniteSimplicialSet::delta1());
        // Hom(Π(Δ¹), H) ↔ Mor(H) for groupoids H, matching 𝕀.
        for h in [FinGroupoid::indiscrete(2), FinGroupoid::discrete(2)] {
            let maps = hom_into(&p, &h, &Budget::default()).unwrap();
            assert_eq!(maps.len(), h.cat.mor_count());
        }
    }

    #[test]
    fn nerve_of_bz2_has_group_homs_into_bz2() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let n = nerve_truncated(&z2);
        n.validate().unwrap();
        let p = fundamental_groupoid(&n);
        let maps = hom_into(&p, &z2, &Budget::default()).unwrap();
        // The relation s·s = e imposed by the 2-simplices leaves exactly the
        // two group homomorphisms.
        assert_eq!(maps.len(), 2);
    }

    #[test]
    fn invalid_faces_rejected() {
        let broken = FiniteSimplicialSet {
            vertices: 2,
            edges: vec![(0, 1), (0, 1)],
            triangles: vec![(0, 1, 1)],
        };
        assert_eq!(broken.validate(), Err(SimplicialError::FaceMismatch { t: 0 }));
    }
}

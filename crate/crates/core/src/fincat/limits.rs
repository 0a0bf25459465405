use super::{enumerate_functors, FinCategory, Functor};
use crate::bounds::{BoundExceeded, Budget};

/// A diagram of categories over a finite index category: one category per
/// index object, one functor per index morphism.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub index: FinCategory,
    pub nodes: Vec<FinCategory>,
    pub arrows: Vec<Functor>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram has {nodes} nodes and {arrows} arrows for index of size ({0}, {1})", .index.0, .index.1)]
    Shape { index: (usize, usize), nodes: usize, arrows: usize },
    #[error("arrow {u} is not a functor between its endpoints")]
    BadArrow { u: usize },
    #[error("diagram does not respect identity at index object {i}")]
    Identity { i: usize },
    #[error("diagram does not respect composition at index pair ({g}, {f})")]
    Composition { g: usize, f: usize },
}

impl Diagram {
    pub fn validate(&self) -> Result<(), DiagramError> {
        if self.nodes.len() != self.index.ob_count() || self.arrows.len() != self.index.mor_count() {
            return Err(DiagramError::Shape {
                index: (self.index.ob_count(), self.index.mor_count()),
                nodes: self.nodes.len(),
                arrows: self.arrows.len(),
            });
        }
        for u in self.index.morphisms() {
            let (i, j) = (self.index.src(u), self.index.tgt(u));
            if self.arrows[u].validate(&self.nodes[i], &self.nodes[j]).is_err() {
                return Err(DiagramError::BadArrow { u });
            }
        }
        for i in self.index.objects() {
            if self.arrows[self.index.id(i)] != Functor::identity(&self.nodes[i]) {
                return Err(DiagramError::Identity { i });
            }
        }
        for g in self.index.morphisms() {
            for f in self.index.morphisms() {
                if let Some(gf) = self.index.compose(g, f) {
                    if self.arrows[g].after(&self.arrows[f]) != self.arrows[gf] {
                        return Err(DiagramError::Composition { g, f });
                    }
                }
            }
        }
        Ok(())
    }
}

/// The limit cone: the limit category, the compatible families indexing its
/// objects and morphisms, and the projection functors.
#[derive(Debug, Clone)]
pub struct LimitCone {
    pub category: FinCategory,
    pub object_families: Vec<Vec<usize>>,
    pub morphism_families: Vec<Vec<usize>>,
    pub projections: Vec<Functor>,
}

/// Componentwise limit: objects are the compatible families of objects,
/// morphisms the compatible families of morphisms, and all structure is
/// computed componentwise.
pub fn finite_limit(d: &Diagram) -> LimitCone {
    let object_families = compatible_families(d, |node| (0..node.ob_count()).collect(), |arrow, x| arrow.obj[x]);
    let morphism_families =
        compatible_families(d, |node| (0..node.mor_count()).collect(), |arrow, f| arrow.mor[f]);
    let ob_index = |fam: &Vec<usize>| object_families.iter().position(|g| g == fam).expect("family");
    let morphisms: Vec<(usize, usize)> = morphism_families
        .iter()
        .map(|fam| {
            let srcs: Vec<usize> = fam.iter().enumerate().map(|(i, &f)| d.nodes[i].src(f)).collect();
            let tgts: Vec<usize> = fam.iter().enumerate().map(|(i, &f)| d.nodes[i].tgt(f)).collect();
            (ob_index(&srcs), ob_index(&tgts))
        })
        .collect();
    let identity: Vec<usize> = object_families
        .iter()
        .map(|fam| {
            let ids: Vec<usize> = fam.iter().enumerate().map(|(i, &a)| d.nodes[i].id(a)).collect();
            morphism_families.iter().position(|g| *g == ids).expect("identity family")
        })
        .collect();
    let mut compose = Vec::new();
    for (gi, g) in morphism_families.iter().enumerate() {
        for (fi, f) in morphism_families.iter().enumerate() {
            if morphisms[fi].1 != morphisms[gi].0 {
                continue;
            }
            let comp: Vec<usize> = g
                .iter()
                .zip(f)
                .enumerate()
                .map(|(i, (&gc, &fc))| d.nodes[i].compose(gc, fc).expect("componentwise composable"))
                .collect();
            let ci = morphism_families.iter().position(|h| *h == comp).expect("composite family");
            compose.push((gi, fi, ci));
        }
    }
    let category = FinCategory::validate(&super::RawCategory {
        objects: object_families.len(),
        morphisms,
        identity,
        compose,
    })
    .expect("componentwise limit is a valid category");
    let projections = (0..d.nodes.len())
        .map(|i| Functor {
            obj: object_families.iter().map(|fam| fam[i]).collect(),
            mor: morphism_families.iter().map(|fam| fam[i]).collect(),
        })
        .collect();
    LimitCone { category, object_families, morphism_families, projections }
}

fn compatible_families(
    d: &Diagram,
    elements: impl Fn(&FinCategory) -> Vec<usize>,
    act: impl Fn(&Functor, usize) -> usize,
) -> Vec<Vec<usize>> {
    // Empty index: the limit is the point (one empty family).
    let mut families = vec![Vec::new()];
    for node in &d.nodes {
        let elems = elements(node);
        families = families
            .into_iter()
            .flat_map(|fam| {
                elems.iter().map(move |&e| {
                    let mut f = fam.clone();
                    f.push(e);
                    f
                })
            })
            .collect();
    }
    families.retain(|fam| {
        d.index.morphisms().all(|u| {
            let (i, j) = (d.index.src(u), d.index.tgt(u));
            act(&d.arrows[u], fam[i]) == fam[j]
        })
    });
    families
}

/// All cones from `tip` to the diagram: families of functors commuting with
/// the diagram arrows.
pub fn cones_into(
    d: &Diagram,
    tip: &FinCategory,
    budget: &Budget,
) -> Result<Vec<Vec<Functor>>, BoundExceeded> {
    let per_node: Vec<Vec<Functor>> = d
        .nodes
        .iter()
        .map(|node| enumerate_functors(tip, node, budget))
        .collect::<Result<_, _>>()?;
    budget.start_scope();
    let mut cones: Vec<Vec<Functor>> = vec![Vec::new()];
    for legs in &per_node {
        let mut next = Vec::new();
        for cone in &cones {
            for leg in legs {
                budget.step()?;
                let mut c = cone.clone();
                c.push(leg.clone());
                next.push(c);
            }
        }
        cones = next;
    }
    cones.retain(|legs| {
        d.index.morphisms().all(|u| {
            let (i, j) = (d.index.src(u), d.index.tgt(u));
            d.arrows[u].after(&legs[i]) == legs[j]
        })
    });
    Ok(cones)
}

/// The universal property, checked by exhaustion: functors `tip → lim D`
/// correspond bijectively (by post-composition with the projections) to
/// cones `tip → D`.
pub fn universal_property_holds(
    d: &Diagram,
    cone: &LimitCone,
    tip: &FinCategory,
    budget: &Budget,
) -> Result<bool, BoundExceeded> {
    let functors = enumerate_functors(tip, &cone.category, budget)?;
    let cones = cones_into(d, tip, budget)?;
    if functors.len() != cones.len() {
        return Ok(false);
    }
    let mut images: Vec<Vec<Functor>> = functors
        .iter()
        .map(|f| cone.projections.iter().map(|p| p.after(f)).collect())
        .collect();
    images.sort();
    images.dedup();
    let mut sorted_cones = cones;
    sorted_cones.sort();
    Ok(images == sorted_cones)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary_product_diagram(a: FinCategory, b: FinCategory) -> Diagram {
        let index = FinCategory::discrete(2);
        Diagram {
            arrows: vec![Functor::identity(&a), Functor::identity(&b)],
            nodes: vec![a, b],
            index,
        }
    }

    #[test]
    fn product_point_point_is_point() {
        let d = binary_product_diagram(FinCategory::point(), FinCategory::point());
        d.validate().unwrap();
        let lim = finite_limit(&d);
        assert_eq!(lim.category.ob_count(), 1);
        assert_eq!(lim.category.mor_count(), 1);
        assert!(universal_property_holds(&d, &lim, &FinCategory::walking_arrow(), &Budget::default())
            .unwrap());
    }

    #[test]
    fn equalizer_of_identity_and_swap_on_discrete_two_is_empty() {
        // Index: two parallel arrows 0 ⇉ 1.
        let index = FinCategory::validate(&super::super::RawCategory {
            objects: 2,
            morphisms: vec![(0, 0), (1, 1), (0, 1), (0, 1)],
            identity: vec![0, 1],
            compose: vec![
                (0, 0, 0),
                (1, 1, 1),
                (2, 0, 2),
                (1, 2, 2),
                (3, 0, 3),
                (1, 3, 3),
            ],
        })
        .unwrap();
        let d2 = FinCategory::discrete(2);
        let swap = Functor { obj: vec![1, 0], mor: vec![1, 0] };
        let d = Diagram {
            index,
            nodes: vec![d2.clone(), d2.clone()],
            arrows: vec![Functor::identity(&d2), Functor::identity(&d2), Functor::identity(&d2), swap],
        };
        d.validate().unwrap();
        let lim = finite_limit(&d);
        assert_eq!(lim.category.ob_count(), 0);
        assert_eq!(lim.category.mor_count(), 0);
        assert!(universal_property_holds(&d, &lim, &FinCategory::point(), &Budget::default()).unwrap());
    }
}

//! The built-in verification corpus: a spread of small marked *-categories,
//! morphisms between them, groupoids, group actions, retract diagrams, and
//! exponential-law triples.  Everything here is deterministic; ids never
//! change between runs.

use crate::bounds::Budget;
use crate::equivariant::{FinGroup, GAction, LinearGAction};
use crate::fincat::{FinCategory, FinGroupoid, Functor, RawCategory};
use crate::star::{
    classifier, enumerate_star_functors, linearize, ClassifierKind, LinearStarCategory,
    MarkedStarCategory,
};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct NamedCategory {
    pub name: String,
    pub cat: MarkedStarCategory,
}

pub fn bz2() -> FinGroupoid {
    FinGroup::cyclic(2).b_groupoid()
}

pub fn bz3() -> FinGroupoid {
    FinGroup::cyclic(3).b_groupoid()
}

/// One object, End = {id, p} with p∘p = p and p* = p: a selfadjoint
/// idempotent, the smallest non-groupoid *-category.
pub fn projection_monoid() -> MarkedStarCategory {
    let base = FinCategory::validate(&RawCategory {
        objects: 1,
        morphisms: vec![(0, 0), (0, 0)],
        identity: vec![0],
        compose: vec![(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
    })
    .expect("projection monoid is valid");
    MarkedStarCategory::validate(base, vec![0, 1], BTreeSet::from([0])).expect("mi marking")
}

/// Two objects a, b with a partial isometry f: a → b: f*f = id_a but
/// ff* = e, a proper projection on b.
pub fn partial_isometry() -> MarkedStarCategory {
    let base = FinCategory::validate(&RawCategory {
        objects: 2,
        morphisms: vec![(0, 0), (1, 1), (0, 1), (1, 0), (1, 1)],
        identity: vec![0, 1],
        compose: vec![
            (0, 0, 0),
            (2, 0, 2),
            (1, 1, 1),
            (3, 1, 3),
            (4, 1, 4),
            (1, 2, 2),
            (3, 2, 0),
            (4, 2, 2),
            (0, 3, 3),
            (2, 3, 4),
            (1, 4, 4),
            (3, 4, 3),
            (4, 4, 4),
        ],
    })
    .expect("partial isometry category is valid");
    MarkedStarCategory::validate(base, vec![0, 1, 3, 2, 4], BTreeSet::from([0, 1]))
        .expect("mi marking")
}

/// The standard corpus of marked *-categories (≥ 10, ≤ 4 objects,
/// ≤ 16 morphisms each).
pub fn categories() -> Vec<NamedCategory> {
    let i2 = FinGroupoid::indiscrete(2);
    let i3 = FinGroupoid::indiscrete(3);
    let pt = MarkedStarCategory::point();
    let bz2_ma = MarkedStarCategory::from_groupoid_ma(&bz2());
    vec![
        NamedCategory { name: "pt".into(), cat: pt.clone() },
        NamedCategory { name: "one_mi".into(), cat: classifier(ClassifierKind::Unitary) },
        NamedCategory { name: "one_ma".into(), cat: classifier(ClassifierKind::MarkedUnitary) },
        NamedCategory { name: "bz2_mi".into(), cat: MarkedStarCategory::from_groupoid_mi(&bz2()) },
        NamedCategory { name: "bz2_ma".into(), cat: bz2_ma.clone() },
        NamedCategory { name: "bz3_ma".into(), cat: MarkedStarCategory::from_groupoid_ma(&bz3()) },
        NamedCategory {
            name: "disc2_mi".into(),
            cat: MarkedStarCategory::from_groupoid_mi(&FinGroupoid::discrete(2)),
        },
        NamedCategory { name: "proj_monoid".into(), cat: projection_monoid() },
        NamedCategory { name: "partial_isometry".into(), cat: partial_isometry() },
        NamedCategory { name: "i3_ma".into(), cat: MarkedStarCategory::from_groupoid_ma(&i3) },
        NamedCategory { name: "pt_u_bz2".into(), cat: pt.disjoint_union(&bz2_ma) },
        NamedCategory {
            name: "one_u_pt".into(),
            cat: MarkedStarCategory::from_groupoid_ma(&i2).disjoint_union(&pt),
        },
        NamedCategory {
            name: "ii_ma".into(),
            cat: MarkedStarCategory::from_groupoid_ma(&i2)
                .disjoint_union(&MarkedStarCategory::from_groupoid_ma(&i2)),
        },
    ]
}

/// Corpus groupoids for Π, orbit, and tensoring checks.
pub fn groupoids() -> Vec<(&'static str, FinGroupoid)> {
    vec![
        ("pt", FinGroupoid::discrete(1)),
        ("disc2", FinGroupoid::discrete(2)),
        ("walking_iso", FinGroupoid::indiscrete(2)),
        ("bz2", bz2()),
        ("bz3", bz3()),
    ]
}

#[derive(Debug, Clone)]
pub struct CorpusMorphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
    pub f: Functor,
}

/// ≥ 30 corpus morphisms, generated deterministically: for each listed
/// (dom, cod) pair, the first few marked *-functors in lexicographic order,
/// plus all identities.
pub fn morphisms() -> Vec<CorpusMorphism> {
    let cats = categories();
    let budget = Budget::default();
    let mut out = Vec::new();
    for (i, c) in cats.iter().enumerate() {
        out.push(CorpusMorphism {
            name: format!("id_{}", c.name),
            dom: i,
            cod: i,
            f: Functor::identity(c.cat.base()),
        });
    }
    // (dom, cod, how many functors to take).
    let pairs: &[(&str, &str, usize)] = &[
        ("pt", "one_mi", 2),
        ("pt", "one_ma", 2),
        ("pt", "bz2_ma", 1),
        ("pt", "partial_isometry", 2),
        ("one_mi", "one_ma", 2),
        ("one_ma", "bz2_ma", 2),
        ("one_ma", "pt", 1),
        ("bz2_mi", "bz2_ma", 2),
        ("bz2_ma", "pt", 1),
        ("bz3_ma", "pt", 1),
        ("disc2_mi", "pt", 1),
        ("disc2_mi", "one_mi", 3),
        ("proj_monoid", "pt", 1),
        ("i3_ma", "one_ma", 2),
        ("one_u_pt", "one_ma", 2),
        ("ii_ma", "one_ma", 3),
        ("pt_u_bz2", "bz2_ma", 2),
    ];
    let index = |name: &str| cats.iter().position(|c| c.name == name).expect("corpus name");
    for &(dn, cn, take) in pairs {
        let (di, ci) = (index(dn), index(cn));
        let fs = enumerate_star_functors(&cats[di].cat, &cats[ci].cat, true, &budget)
            .expect("corpus enumeration within bounds");
        for (k, f) in fs.into_iter().take(take).enumerate() {
            out.push(CorpusMorphism { name: format!("{dn}->{cn}#{k}"), dom: di, cod: ci, f });
        }
    }
    out
}

/// The corpus actions for the fixed-point suite.
pub struct CorpusAction {
    pub name: &'static str,
    pub action: GAction,
    /// Run the marked-flavor checks (otherwise plain).
    pub marked: bool,
}

pub fn actions() -> Vec<CorpusAction> {
    let i2 = FinGroupoid::indiscrete(2);
    let one_ma = MarkedStarCategory::from_groupoid_ma(&i2);
    let swap_one = Functor { obj: vec![1, 0], mor: vec![3, 2, 1, 0] };
    let disc2 = MarkedStarCategory::from_groupoid_mi(&FinGroupoid::discrete(2));
    let swap_disc = Functor { obj: vec![1, 0], mor: vec![1, 0] };
    vec![
        CorpusAction {
            name: "z2_trivial_pt",
            action: GAction::trivial(FinGroup::cyclic(2), MarkedStarCategory::point()),
            marked: true,
        },
        CorpusAction {
            name: "z2_swap_disc2",
            action: GAction::validate(
                FinGroup::cyclic(2),
                disc2.clone(),
                vec![Functor::identity(disc2.base()), swap_disc],
            )
            .expect("swap action"),
            marked: true,
        },
        CorpusAction {
            name: "z2_trivial_bz2_ma",
            action: GAction::trivial(
                FinGroup::cyclic(2),
                MarkedStarCategory::from_groupoid_ma(&bz2()),
            ),
            marked: true,
        },
        CorpusAction {
            name: "z2_trivial_bz2_plain",
            action: GAction::trivial(
                FinGroup::cyclic(2),
                MarkedStarCategory::from_groupoid_mi(&bz2()),
            ),
            marked: false,
        },
        CorpusAction {
            name: "z2_swap_one_ma",
            action: GAction::validate(
                FinGroup::cyclic(2),
                one_ma.clone(),
                vec![Functor::identity(one_ma.base()), swap_one],
            )
            .expect("swap action"),
            marked: true,
        },
        CorpusAction {
            name: "z3_trivial_bz3_ma",
            action: GAction::trivial(
                FinGroup::cyclic(3),
                MarkedStarCategory::from_groupoid_ma(&bz3()),
            ),
            marked: true,
        },
    ]
}

/// Linear corpus actions (marked- or frame-valued).
pub struct CorpusLinearAction {
    pub name: &'static str,
    pub action: LinearGAction,
    pub values: crate::gtensor::LinearValueSet,
}

pub fn linear_actions() -> Vec<CorpusLinearAction> {
    let lin_pt = linearize(&MarkedStarCategory::point()).cat;
    let lin_bz2 = linearize(&MarkedStarCategory::from_groupoid_ma(&bz2())).cat;
    vec![
        CorpusLinearAction {
            name: "z2_trivial_lin_pt",
            action: LinearGAction::trivial(FinGroup::cyclic(2), lin_pt),
            values: crate::gtensor::LinearValueSet::Frame,
        },
        CorpusLinearAction {
            name: "z2_trivial_lin_bz2_marked",
            action: LinearGAction::trivial(FinGroup::cyclic(2), lin_bz2.clone()),
            values: crate::gtensor::LinearValueSet::Marked,
        },
        CorpusLinearAction {
            name: "z2_trivial_lin_bz2_frame",
            action: LinearGAction::trivial(FinGroup::cyclic(2), lin_bz2),
            values: crate::gtensor::LinearValueSet::Frame,
        },
    ]
}

/// Deterministic morphisms over an arbitrary category list: identities plus
/// the first few marked *-functors between consecutive pairs.
pub fn morphisms_over(
    cats: &[NamedCategory],
    per_pair: usize,
    budget: &Budget,
) -> Vec<CorpusMorphism> {
    let mut out = Vec::new();
    for (i, c) in cats.iter().enumerate() {
        out.push(CorpusMorphism {
            name: format!("id_{}", c.name),
            dom: i,
            cod: i,
            f: Functor::identity(c.cat.base()),
        });
    }
    for i in 0..cats.len() {
        for j in 0..cats.len() {
            if i == j || cats[i].cat.base().ob_count() > 3 || cats[j].cat.base().ob_count() > 3 {
                continue;
            }
            if let Ok(fs) = enumerate_star_functors(&cats[i].cat, &cats[j].cat, true, budget) {
                for (k, f) in fs.into_iter().take(per_pair).enumerate() {
                    out.push(CorpusMorphism {
                        name: format!("{}->{}#{k}", cats[i].name, cats[j].name),
                        dom: i,
                        cod: j,
                        f,
                    });
                }
            }
        }
    }
    out
}

/// Retract diagrams over the corpus: every f is exhibited as a retract of
/// f ⊔ id_pt.
pub fn retract_diagrams(limit: usize) -> Vec<crate::model::RetractDiagram> {
    retract_diagrams_over(&categories(), &morphisms(), limit)
}

pub fn retract_diagrams_over(
    cats: &[NamedCategory],
    morphisms: &[CorpusMorphism],
    limit: usize,
) -> Vec<crate::model::RetractDiagram> {
    let mut out = Vec::new();
    for m in morphisms {
        if out.len() >= limit {
            break;
        }
        let a = &cats[m.dom].cat;
        let b = &cats[m.cod].cat;
        if a.base().ob_count() == 0 {
            continue;
        }
        let pt = MarkedStarCategory::point();
        let a_prime = a.disjoint_union(&pt);
        let b_prime = b.disjoint_union(&pt);
        // f' = f ⊔ id_pt.
        let f_prime = Functor {
            obj: m
                .f
                .obj
                .iter()
                .copied()
                .chain(std::iter::once(b.base().ob_count()))
                .collect(),
            mor: m
                .f
                .mor
                .iter()
                .copied()
                .chain(std::iter::once(b.base().mor_count()))
                .collect(),
        };
        let i = Functor {
            obj: (0..a.base().ob_count()).collect(),
            mor: (0..a.base().mor_count()).collect(),
        };
        // p collapses the extra point onto object 0 of A.
        let p = Functor {
            obj: (0..a.base().ob_count()).chain(std::iter::once(0)).collect(),
            mor: (0..a.base().mor_count()).chain(std::iter::once(a.base().id(0))).collect(),
        };
        let j = Functor {
            obj: (0..b.base().ob_count()).collect(),
            mor: (0..b.base().mor_count()).collect(),
        };
        // q collapses the extra point onto f(0).
        let q = Functor {
            obj: (0..b.base().ob_count()).chain(std::iter::once(m.f.obj[0])).collect(),
            mor: (0..b.base().mor_count())
                .chain(std::iter::once(b.base().id(m.f.obj[0])))
                .collect(),
        };
        out.push(crate::model::RetractDiagram {
            a: a.clone(),
            b: b.clone(),
            a_prime,
            b_prime,
            f: m.f.clone(),
            f_prime,
            i,
            p,
            j,
            q,
        });
    }
    out
}

/// Triples (C, 𝔾, A) for the exponential-law suite, ♯-times flavor.
pub fn exp_law_triples_times(
) -> Vec<(&'static str, MarkedStarCategory, FinGroupoid, MarkedStarCategory)> {
    let pt = MarkedStarCategory::point();
    let one_ma = classifier(ClassifierKind::MarkedUnitary);
    let one_mi = classifier(ClassifierKind::Unitary);
    let bz2_ma = MarkedStarCategory::from_groupoid_ma(&bz2());
    let disc2 = MarkedStarCategory::from_groupoid_mi(&FinGroupoid::discrete(2));
    let i2 = FinGroupoid::indiscrete(2);
    vec![
        ("pt_i_one", pt.clone(), i2.clone(), one_ma.clone()),
        ("pt_bz2_bz2", pt.clone(), bz2(), bz2_ma.clone()),
        ("pt_i_onemi", pt.clone(), i2.clone(), one_mi.clone()),
        ("disc2_i_one", disc2.clone(), i2.clone(), one_ma.clone()),
        ("one_pt_one", one_ma.clone(), FinGroupoid::discrete(1), one_ma.clone()),
        ("bz2_trivial_bz2", bz2_ma.clone(), FinGroupoid::discrete(1), bz2_ma.clone()),
        ("pt_bz3_bz3", pt.clone(), bz3(), MarkedStarCategory::from_groupoid_ma(&bz3())),
        ("proj_i_one", projection_monoid(), i2, one_ma),
    ]
}

/// Triples for the ⊗ flavor: (C₀, 𝔾, A₀) as plain data to be linearized,
/// so that a generated family of linear functors is available.
pub fn exp_law_triples_tensor(
) -> Vec<(&'static str, MarkedStarCategory, FinGroupoid, MarkedStarCategory)> {
    let pt = MarkedStarCategory::point();
    let bz2_ma = MarkedStarCategory::from_groupoid_ma(&bz2());
    vec![
        ("lin_pt_bz2_pt", pt.clone(), bz2(), pt.clone()),
        ("lin_pt_i_pt", pt.clone(), FinGroupoid::indiscrete(2), pt.clone()),
        ("lin_bz2_pt_bz2", bz2_ma.clone(), FinGroupoid::discrete(1), bz2_ma),
    ]
}

/// The corpus of linear categories used by linear-flavor checks.
pub fn linear_categories() -> Vec<(&'static str, LinearStarCategory)> {
    vec![
        ("lin_pt", linearize(&MarkedStarCategory::point()).cat),
        ("lin_bz2", linearize(&MarkedStarCategory::from_groupoid_ma(&bz2())).cat),
        ("lin_one", linearize(&classifier(ClassifierKind::MarkedUnitary)).cat),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_meet_the_floor() {
        let cats = categories();
        assert!(cats.len() >= 10);
        for c in &cats {
            assert!(c.cat.base().ob_count() <= 4, "{}", c.name);
            assert!(c.cat.base().mor_count() <= 16, "{}", c.name);
        }
        assert!(morphisms().len() >= 30);
        assert!(actions().len() + linear_actions().len() >= 6);
        assert!(retract_diagrams(5).len() >= 5);
        assert!(exp_law_triples_times().len() + exp_law_triples_tensor().len() >= 10);
    }

    #[test]
    fn corpus_morphisms_are_valid() {
        let cats = categories();
        for m in morphisms() {
            crate::star::star_functor_ok(&cats[m.dom].cat, &cats[m.cod].cat, &m.f, true)
                .unwrap_or_else(|e| panic!("{}: {e}", m.name));
        }
    }

    #[test]
    fn retract_diagrams_commute() {
        for d in retract_diagrams(8) {
            assert!(d.commutes());
        }
    }
}

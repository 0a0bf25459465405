use super::{build_gtilde, GAction, GTilde, LinearGAction};
use crate::bounds::{BoundExceeded, Budget};
use crate::fincat::{Functor, NatTransformation};
use crate::gtensor::{funu, funu_linear, FunuCat, FunuLinear, LinearValueSet};
use crate::gtensor::LinUnitaryFunctor;
use crate::star::{exists_unitary_iso, is_weak_equivalence, star_functor_ok};

/// Fun^u(G̃, A) with its induced G-action g(a) = g ∘ a ∘ g⁻¹ and the unit
/// r: A → Fun^u(G̃, A), the fibrant replacement data.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub gtilde: GTilde,
    pub funu: FunuCat,
    pub action: GAction,
    pub unit: Functor,
}

pub fn resolution(action: &GAction, marked: bool, budget: &Budget) -> Result<Resolution, BoundExceeded> {
    let gt = build_gtilde(&action.group);
    let fu = funu(&gt.groupoid, &action.base, marked, budget)?;
    let n = action.group.order();
    // Action on objects: (g·a)(x) = g(a(g⁻¹x)).
    let act_obj = |g: usize, a: &Functor| -> Functor {
        let ginv = action.group.inv[g];
        Functor {
            obj: (0..n)
                .map(|x| action.on[g].obj[a.obj[action.group.mul(ginv, x)]])
                .collect(),
            mor: (0..n * n)
                .map(|m| {
                    let (x, y) = gt.ends(m);
                    let pre = gt.arrow(action.group.mul(ginv, x), action.group.mul(ginv, y));
                    action.on[g].mor[a.mor[pre]]
                })
                .collect(),
        }
    };
    let on: Vec<Functor> = (0..n)
        .map(|g| {
            let ginv = action.group.inv[g];
            let obj: Vec<usize> = fu
                .objects
                .iter()
                .map(|a| fu.object_index(&act_obj(g, a)).expect("action permutes objects"))
                .collect();
            let mor: Vec<usize> = fu
                .morphisms
                .iter()
                .map(|(s, t, tr)| {
                    let comps = NatTransformation {
                        components: (0..n)
                            .map(|x| action.on[g].mor[tr.components[action.group.mul(ginv, x)]])
                            .collect(),
                    };
                    fu.morphism_index(obj[*s], obj[*t], &comps)
                        .expect("action permutes morphisms")
                })
                .collect();
            Functor { obj, mor }
        })
        .collect();
    let fu_action = GAction::validate(action.group.clone(), fu.cat.clone(), on)
        .expect("conjugation action on the resolution is valid");
    // Unit r: a ↦ the constant functor at a.
    let unit = Functor {
        obj: action
            .base
            .base()
            .objects()
            .map(|a| {
                let constant = Functor {
                    obj: vec![a; n],
                    mor: vec![action.base.base().id(a); n * n],
                };
                fu.object_index(&constant).expect("constant functors are unitary")
            })
            .collect(),
        mor: action
            .base
            .base()
            .morphisms()
            .map(|f| {
                let (a, b) = (action.base.base().src(f), action.base.base().tgt(f));
                let constant_a = Functor { obj: vec![a; n], mor: vec![action.base.base().id(a); n * n] };
                let constant_b = Functor { obj: vec![b; n], mor: vec![action.base.base().id(b); n * n] };
                let s = fu.object_index(&constant_a).unwrap();
                let t = fu.object_index(&constant_b).unwrap();
                fu.morphism_index(s, t, &NatTransformation { components: vec![f; n] })
                    .expect("constant transformations exist")
            })
            .collect(),
    };
    Ok(Resolution { gtilde: gt, funu: fu, action: fu_action, unit })
}

impl Resolution {
    /// The unit is G-equivariant.
    pub fn unit_is_equivariant(&self, base_action: &GAction) -> bool {
        (0..base_action.group.order()).all(|g| {
            self.unit.after(&base_action.on[g]) == self.action.on[g].after(&self.unit)
        })
    }

    /// The unit is a weak equivalence of underlying (marked) *-categories:
    /// checked via the characterization and via the explicit inverse
    /// e(a) = a(1) with unitary (a(1 → g))_g.
    pub fn unit_is_weak_equivalence(
        &self,
        base_action: &GAction,
        marked: bool,
        budget: &Budget,
    ) -> Result<bool, BoundExceeded> {
        let a = &base_action.base;
        let fu = &self.funu;
        if is_weak_equivalence(a, &fu.cat, &self.unit, marked).is_err() {
            return Ok(false);
        }
        // Explicit inverse: evaluation at the unit object of G̃.
        let unit_el = base_action.group.unit;
        let e = Functor {
            obj: fu.objects.iter().map(|f| f.obj[unit_el]).collect(),
            mor: fu.morphisms.iter().map(|(_, _, tr)| tr.components[unit_el]).collect(),
        };
        if star_functor_ok(&fu.cat, a, &e, marked).is_err() {
            return Ok(false);
        }
        if e.after(&self.unit) != Functor::identity(a.base()) {
            return Ok(false);
        }
        // r∘e ≅ id via h_a = (a(1 → g))_g, componentwise in Fun^u.
        let n = base_action.group.order();
        let comps: Vec<usize> = (0..fu.objects.len())
            .map(|oi| {
                let aob = &fu.objects[oi];
                let family = NatTransformation {
                    components: (0..n).map(|g| aob.mor[self.gtilde.arrow(unit_el, g)]).collect(),
                };
                let src = self.unit.obj[e.obj[oi]];
                fu.morphism_index(src, oi, &family).expect("h_a is a morphism of Fun^u")
            })
            .collect();
        let t = NatTransformation { components: comps };
        let ok = crate::fincat::check_natural(
            fu.cat.base(),
            fu.cat.base(),
            &self.unit.after(&e),
            &Functor::identity(fu.cat.base()),
            &t,
        )
        .is_ok()
            && t.components
                .iter()
                .all(|&c| if marked { fu.cat.is_marked(c) } else { fu.cat.is_unitary(c) });
        if !ok {
            return Ok(false);
        }
        // Cross-check with the definitional search.
        exists_unitary_iso(
            &fu.cat,
            &fu.cat,
            &self.unit.after(&e),
            &Functor::identity(fu.cat.base()),
            marked,
            budget,
        )
    }
}

/// An equivariant lifting problem: a square of G-categories and equivariant
/// functors, lifted equivariantly.
#[derive(Debug, Clone, Copy)]
pub struct EquivariantLiftingProblem<'a> {
    pub left_dom: &'a GAction,
    pub left_cod: &'a GAction,
    pub left: &'a Functor,
    pub right_dom: &'a GAction,
    pub right_cod: &'a GAction,
    pub right: &'a Functor,
    pub top: &'a Functor,
    pub bottom: &'a Functor,
}

/// Search for an equivariant lift: backtracking over lifts of the underlying
/// problem, accepting the first equivariant one.
pub fn solve_equivariant_lifting(
    p: &EquivariantLiftingProblem<'_>,
    marked: bool,
    budget: &Budget,
) -> Result<Option<Functor>, BoundExceeded> {
    let order = p.left_dom.group.order();
    let underlying = crate::model::LiftingProblem {
        left_dom: &p.left_dom.base,
        left_cod: &p.left_cod.base,
        left: p.left,
        right_dom: &p.right_dom.base,
        right_cod: &p.right_cod.base,
        right: p.right,
        top: p.top,
        bottom: p.bottom,
    };
    let is_equivariant = |lift: &Functor| {
        (0..order).all(|g| {
            lift.after(&p.left_cod.on[g]) == p.right_dom.on[g].after(lift)
        })
    };
    crate::model::solve_lifting_where(&underlying, marked, &is_equivariant, budget).map_err(|e| {
        match e {
            crate::model::LiftingError::Bound(b) => b,
            crate::model::LiftingError::NotCommuting => {
                panic!("equivariant lifting problem square does not commute")
            }
        }
    })
}

/// Linear resolution: Fun^u(G̃, A) over the given value set, with the
/// conjugation action and the constant-functor unit.
#[derive(Debug, Clone)]
pub struct ResolutionLinear {
    pub gtilde: GTilde,
    pub funu: FunuLinear,
    pub action: LinearGAction,
    pub unit: crate::star::LinearFunctor,
}

pub fn resolution_linear(
    action: &LinearGAction,
    values: LinearValueSet,
    budget: &Budget,
) -> Result<ResolutionLinear, BoundExceeded> {
    let gt = build_gtilde(&action.group);
    let fu = funu_linear(&gt.groupoid, &action.base, values, budget)?;
    let n = action.group.order();
    let a = &action.base;
    let act_obj = |g: usize, f: &LinUnitaryFunctor| -> LinUnitaryFunctor {
        let ginv = action.group.inv[g];
        LinUnitaryFunctor {
            obj: (0..n).map(|x| action.on[g].obj[f.obj[action.group.mul(ginv, x)]]).collect(),
            mor: (0..n * n)
                .map(|m| {
                    let (x, y) = gt.ends(m);
                    let pre = gt.arrow(action.group.mul(ginv, x), action.group.mul(ginv, y));
                    action.on[g].apply(a, a, &f.mor[pre])
                })
                .collect(),
        }
    };
    let on: Vec<crate::star::LinearFunctor> = (0..n)
        .map(|g| {
            let ginv = action.group.inv[g];
            let obj: Vec<usize> = fu
                .objects
                .iter()
                .map(|f| fu.object_index(&act_obj(g, f)).expect("action permutes objects"))
                .collect();
            let nobj = fu.objects.len();
            let maps: Vec<Vec<Vec<crate::linalg::Vector>>> = (0..nobj)
                .map(|s| {
                    (0..nobj)
                        .map(|t| {
                            (0..fu.cat.dim(s, t))
                                .map(|k| {
                                    let fam = &fu.hom_basis[s][t][k];
                                    let moved: Vec<crate::star::LinElem> = (0..n)
                                        .map(|x| {
                                            action.on[g]
                                                .apply(a, a, &fam[action.group.mul(ginv, x)])
                                        })
                                        .collect();
                                    fu.express(obj[s], obj[t], &moved)
                                        .expect("action preserves transformation spaces")
                                        .coeffs
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect();
            crate::star::LinearFunctor { obj, maps }
        })
        .collect();
    let fu_action = LinearGAction::validate(action.group.clone(), fu.cat.clone(), on)
        .expect("conjugation action on the linear resolution is valid");
    // Unit: constant functors.
    let const_at = |x: usize| LinUnitaryFunctor {
        obj: vec![x; n],
        mor: vec![a.identity_elem(x); n * n],
    };
    let unit_obj: Vec<usize> = (0..a.ob_count())
        .map(|x| fu.object_index(&const_at(x)).expect("constant functors are in every value set"))
        .collect();
    let unit_maps: Vec<Vec<Vec<crate::linalg::Vector>>> = (0..a.ob_count())
        .map(|x| {
            (0..a.ob_count())
                .map(|y| {
                    (0..a.dim(x, y))
                        .map(|i| {
                            let fam: Vec<crate::star::LinElem> =
                                vec![a.basis_elem(x, y, i); n];
                            fu.express(unit_obj[x], unit_obj[y], &fam)
                                .expect("constant families are transformations")
                                .coeffs
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit = crate::star::LinearFunctor { obj: unit_obj, maps: unit_maps };
    Ok(ResolutionLinear { gtilde: gt, funu: fu, action: fu_action, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::FinGroup;
    use crate::fincat::FinGroupoid;
    use crate::star::MarkedStarCategory;

    #[test]
    fn resolution_of_point_is_point() {
        let action = GAction::trivial(FinGroup::cyclic(2), MarkedStarCategory::point());
        let r = resolution(&action, true, &Budget::default()).unwrap();
        assert_eq!(r.funu.objects.len(), 1);
        assert!(r.unit_is_equivariant(&action));
        assert!(r.unit_is_weak_equivalence(&action, true, &Budget::default()).unwrap());
    }

    #[test]
    fn resolution_of_discrete_two_with_trivial_action() {
        // Unitary functors G̃ → discrete must be constant, so the resolution
        // is the base itself.
        let d2 = MarkedStarCategory::from_groupoid_mi(&FinGroupoid::discrete(2));
        let action = GAction::trivial(FinGroup::cyclic(2), d2);
        let r = resolution(&action, true, &Budget::default()).unwrap();
        assert_eq!(r.funu.objects.len(), 2);
        assert!(r.unit_is_weak_equivalence(&action, true, &Budget::default()).unwrap());
    }

    #[test]
    fn resolution_of_bz2() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        let bz2 = MarkedStarCategory::from_groupoid_ma(&z2);
        let action = GAction::trivial(FinGroup::cyclic(2), bz2);
        let r = resolution(&action, true, &Budget::default()).unwrap();
        // Functors G̃ → BZ₂ ↔ morphisms picked by 1 → s: two of them.
        assert_eq!(r.funu.objects.len(), 2);
        assert!(r.unit_is_equivariant(&action));
        assert!(r.unit_is_weak_equivalence(&action, true, &Budget::default()).unwrap());
    }
}

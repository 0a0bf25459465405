//! Suite runners: each suite exercises one family of checks over the corpus
//! and returns a [`Report`] with one line per check.  The acceptance gate
//! and the CLI both go through these.

use crate::bounds::Budget;
use crate::corpus;
use crate::equivariant::{
    build_gtilde, fixed_points, fixed_points_agree, fixed_points_linear,
    fixed_points_linear_agree, gtilde_colim_certificate, lim_of_resolution,
    lim_of_resolution_linear, orbit, orbit_cofibrant_certificate, resolution, resolution_linear,
    solve_equivariant_lifting, EquivariantLiftingProblem, FinGroup, GAction,
};
use crate::fincat::{FinGroupoid, Functor};
use crate::gtensor::{
    funu, funu_linear, fundamental_groupoid, hom_into, nerve_truncated, phi_to_psi_tensor,
    phi_to_psi_times, psi_to_phi_tensor, psi_to_phi_times, sharp_tensor, sharp_times,
    FiniteSimplicialSet, LinearValueSet,
};
use crate::model::{
    all_objects_fibrant_and_cofibrant, cylinder_factorize, cylinder_ump_agrees,
    has_rlp_against_generator, is_cofibration, is_good, path_factorize, path_good_recipe_holds,
    retract_closure_holds, trivial_fibration_characterization_agrees, two_of_three_consistent,
};
use crate::report::{Check, Report};
use crate::star::{
    classifier, enumerate_star_functors, is_weak_equivalence, linearize, ClassifierKind,
    LinearFunctor, MarkedStarCategory, UNIVERSAL_UNITARY,
};

fn timed(report: &mut Report, name: String, run: impl FnOnce() -> Result<(), String>) {
    let start = std::time::Instant::now();
    let mut check = match run() {
        Ok(()) => Check::pass(name),
        Err(witness) => Check::fail(name, witness),
    };
    check.timing_ms = Some(start.elapsed().as_millis());
    report.push(check);
}

/// Criterion 1: representability of objects, unitaries, and marked
/// morphisms, with explicit mutually inverse maps.
pub fn representability_suite(cats: &[corpus::NamedCategory], budget: &Budget) -> Report {
    let mut report = Report::new("representability");
    for c in cats {
        for (kind, label) in [
            (ClassifierKind::Object, "objects"),
            (ClassifierKind::Unitary, "unitaries"),
            (ClassifierKind::MarkedUnitary, "marked"),
        ] {
            timed(&mut report, format!("hom({label}) ≅ {label}({})", c.name), || {
                let cls = classifier(kind);
                let rep = crate::star::represented_hom(kind, &c.cat);
                let homs = enumerate_star_functors(&cls, &c.cat, true, budget)
                    .map_err(|e| e.to_string())?;
                if rep.elements.len() != homs.len() {
                    return Err(format!(
                        "|represented| = {}, |Hom| = {}",
                        rep.elements.len(),
                        homs.len()
                    ));
                }
                // Forward map lands in Hom and is injective; backward map
                // recovers the element: mutually inverse bijections.
                let mut seen = Vec::new();
                for (el, f) in rep.elements.iter().zip(&rep.functors) {
                    if !homs.contains(f) {
                        return Err(format!("functor for element {el} is not a hom"));
                    }
                    if seen.contains(f) {
                        return Err(format!("element {el} duplicates a functor"));
                    }
                    seen.push(f.clone());
                    let back = match kind {
                        ClassifierKind::Object => f.obj[0],
                        _ => f.mor[UNIVERSAL_UNITARY],
                    };
                    if back != *el {
                        return Err(format!("round trip: {el} came back as {back}"));
                    }
                }
                Ok(())
            });
        }
    }
    report
}

/// Criterion 2: the weak-equivalence characterization agrees with the
/// definitional inverse-up-to-(marked)-unitary-isomorphism search.
pub fn equivalence_suite(
    cats: &[corpus::NamedCategory],
    morphisms: &[corpus::CorpusMorphism],
    budget: &Budget,
) -> Report {
    let mut report = Report::new("equivalence");
    for m in morphisms {
        timed(&mut report, format!("routes agree on {}", m.name), || {
            let dom = &cats[m.dom].cat;
            let cod = &cats[m.cod].cat;
            let (characterization, search) =
                crate::star::weak_equivalence_routes_agree(dom, cod, &m.f, true, budget)
                    .map_err(|e| e.to_string())?;
            if characterization != search {
                return Err(format!(
                    "characterization: {characterization}, definitional search: {search}"
                ));
            }
            Ok(())
        });
    }
    report
}

/// Criterion 3: the exponential law in both flavors.
pub fn exponential_suite(
    triples_times: Vec<(String, MarkedStarCategory, FinGroupoid, MarkedStarCategory)>,
    triples_tensor: Vec<(String, MarkedStarCategory, FinGroupoid, MarkedStarCategory)>,
    budget: &Budget,
) -> Report {
    let mut report = Report::new("exponential-law");
    for (name, c, g, a) in triples_times {
        timed(&mut report, format!("times bijection {name}"), || {
            let sharp = sharp_times(&c, &g);
            let fu = funu(&g, &a, true, budget).map_err(|e| e.to_string())?;
            let homs_sharp =
                enumerate_star_functors(&sharp.cat, &a, true, budget).map_err(|e| e.to_string())?;
            let homs_c =
                enumerate_star_functors(&c, &fu.cat, true, budget).map_err(|e| e.to_string())?;
            if homs_sharp.len() != homs_c.len() {
                return Err(format!("|Hom(C♯G,A)| = {}, |Hom(C,Fun)| = {}", homs_sharp.len(), homs_c.len()));
            }
            for phi in &homs_sharp {
                let psi = phi_to_psi_times(&c, &g, &sharp, &fu, phi).map_err(|e| e.to_string())?;
                if !homs_c.contains(&psi) {
                    return Err("transported Ψ is not a hom".into());
                }
                if psi_to_phi_times(&c, &g, &a, &sharp, &fu, &psi) != *phi {
                    return Err("Φ → Ψ → Φ is not the identity".into());
                }
            }
            for psi in &homs_c {
                let phi = psi_to_phi_times(&c, &g, &a, &sharp, &fu, psi);
                if !homs_sharp.contains(&phi) {
                    return Err("transported Φ is not a hom".into());
                }
                if phi_to_psi_times(&c, &g, &sharp, &fu, &phi).map_err(|e| e.to_string())? != *psi
                {
                    return Err("Ψ → Φ → Ψ is not the identity".into());
                }
            }
            Ok(())
        });
    }
    // Tensor flavor: the generated family are the linearizations of all
    // plain transports; round trips are checked on every member.
    for (name, c0, g, a0) in triples_tensor {
        timed(&mut report, format!("tensor round-trips {name}"), || {
            let c = linearize(&c0);
            let a0_sharp = sharp_times(&a0, &g);
            let a = linearize(&a0_sharp.cat);
            let tensor = sharp_tensor(&c.cat, &g);
            let fu = funu_linear(&g, &a.cat, LinearValueSet::Frame, budget)
                .map_err(|e| e.to_string())?;
            // Generated Φ's: linearize the plain functors C₀♯G → A₀♯G.
            let c0_sharp = sharp_times(&c0, &g);
            let plain =
                enumerate_star_functors(&c0_sharp.cat, &a0_sharp.cat, true, budget)
                    .map_err(|e| e.to_string())?;
            if plain.is_empty() {
                return Err("no generated functors".into());
            }
            let c_lin = linearize(&c0);
            for f in &plain {
                // Lin(C₀♯G) ≅ Lin(C₀)⊗G: transport the linearized functor
                // along the canonical identification of bases.
                let phi = lift_linearized(&c_lin, &tensor, &c0_sharp, &a, &a0_sharp.cat, f);
                phi.validate(&tensor.cat, &a.cat, false).map_err(|e| e.to_string())?;
                let psi = phi_to_psi_tensor(&c.cat, &g, &a.cat, &tensor, &fu, &phi)
                    .map_err(|e| e.to_string())?;
                psi.validate(&c.cat, &fu.cat, false).map_err(|e| e.to_string())?;
                let back = psi_to_phi_tensor(&c.cat, &g, &a.cat, &tensor, &fu, &psi);
                if back != phi {
                    return Err("Φ → Ψ → Φ is not the identity".into());
                }
            }
            Ok(())
        });
    }
    report
}

/// Express the linearization of a plain functor C₀♯G → A₀♯G as a linear
/// functor Lin(C₀)⊗G → Lin(A₀♯G), using Lin(C₀♯G) ≅ Lin(C₀)⊗G.
fn lift_linearized(
    c_lin: &crate::star::Linearized,
    tensor: &crate::gtensor::SharpTensor,
    c0_sharp: &crate::gtensor::SharpProduct,
    a: &crate::star::Linearized,
    a_base: &MarkedStarCategory,
    f: &Functor,
) -> LinearFunctor {
    let n = tensor.cat.ob_count();
    let mut maps = vec![vec![Vec::new(); n]; n];
    let obj: Vec<usize> = (0..n).map(|o| f.obj[o]).collect();
    for sx in 0..n {
        for sy in 0..n {
            let (x, y) = (tensor.unob(sx).0, tensor.unob(sy).0);
            let d = c_lin.cat.dim(x, y);
            for ii in 0..tensor.cat.dim(sx, sy) {
                let (pos, i) = (ii / d, ii % d);
                let phi_mor = tensor.blocks[sx][sy][pos];
                // The base morphism of C₀ named by basis index i.
                let base_mor = c_lin.basis[x][y][i];
                let image = f.mor[c0_sharp.mor(base_mor, phi_mor)];
                maps[sx][sy].push(a.elem_of_mor(a_base, image).coeffs);
            }
        }
    }
    LinearFunctor { obj, maps }
}

/// Criterion 4: cylinder and path factorizations with exact certificates,
/// plus the cylinder universal property against every corpus target.
pub fn factorization_suite(
    cats: &[corpus::NamedCategory],
    morphisms: &[corpus::CorpusMorphism],
    budget: &Budget,
) -> Report {
    let mut report = Report::new("factorization");
    for m in morphisms {
        let dom = &cats[m.dom].cat;
        let cod = &cats[m.cod].cat;
        timed(&mut report, format!("cylinder {}", m.name), || {
            let cyl = cylinder_factorize(dom, cod, &m.f);
            if cyl.fact.second.after(&cyl.fact.first) != m.f {
                return Err("q∘j ≠ a".into());
            }
            if !is_cofibration(&cyl.fact.first) {
                return Err("j is not a cofibration".into());
            }
            if is_good(&cyl.fact.mid, cod, &cyl.fact.second, true).is_err() {
                return Err("q is not good".into());
            }
            if is_weak_equivalence(&cyl.fact.mid, cod, &cyl.fact.second, true).is_err() {
                return Err("q is not a weak equivalence".into());
            }
            Ok(())
        });
        timed(&mut report, format!("path {}", m.name), || {
            let p = path_factorize(dom, cod, &m.f, true, budget).map_err(|e| e.to_string())?;
            if p.fact.second.after(&p.fact.first) != m.f {
                return Err("p∘j ≠ a".into());
            }
            if !is_cofibration(&p.fact.first) {
                return Err("j is not a cofibration".into());
            }
            if is_weak_equivalence(dom, &p.fact.mid, &p.fact.first, true).is_err() {
                return Err("j is not a weak equivalence".into());
            }
            if is_good(&p.fact.mid, cod, &p.fact.second, true).is_err() {
                return Err("p is not good".into());
            }
            if !path_good_recipe_holds(dom, cod, &p, true) {
                return Err("explicit good-lift recipe fails".into());
            }
            Ok(())
        });
    }
    // Universal property against every corpus target.
    for m in morphisms {
        let dom = &cats[m.dom].cat;
        let cod = &cats[m.cod].cat;
        let cyl = cylinder_factorize(dom, cod, &m.f);
        for d in cats {
            timed(&mut report, format!("cylinder ump {} vs {}", m.name, d.name), || {
                match cylinder_ump_agrees(dom, cod, &m.f, &cyl, &d.cat, true, budget) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err("pair counts or comparison map disagree".into()),
                    Err(e) => Err(e.to_string()),
                }
            });
        }
    }
    report
}

/// Criterion 5: two-out-of-three, retract closure, fibration ⟺ good,
/// fibrant/cofibrant objects, and the trivial-fibration characterization.
pub fn model_suite(
    cats: &[corpus::NamedCategory],
    morphisms: &[corpus::CorpusMorphism],
    retracts: &[crate::model::RetractDiagram],
    budget: &Budget,
) -> Report {
    let mut report = Report::new("model");
    if morphisms.is_empty() {
        return report;
    }
    let mut pairs = 0usize;
    timed(&mut report, "two-of-three over all composable corpus pairs".into(), || {
        for f in morphisms {
            for g in morphisms {
                if f.cod != g.dom {
                    continue;
                }
                pairs += 1;
                if !two_of_three_consistent(
                    &cats[f.dom].cat,
                    &cats[f.cod].cat,
                    &cats[g.cod].cat,
                    &f.f,
                    &g.f,
                    true,
                ) {
                    return Err(format!("violated on ({}, {})", f.name, g.name));
                }
            }
        }
        Ok(())
    });
    report.push(Check::from_bool(
        format!("composable pairs covered: {pairs}"),
        pairs > 0 || morphisms.is_empty(),
        "no composable pairs",
    ));
    for (k, d) in retracts.iter().enumerate() {
        timed(&mut report, format!("retract closure #{k}"), || {
            if !retract_closure_holds(d, true) {
                return Err("a class is not closed under this retract".into());
            }
            Ok(())
        });
    }
    for m in morphisms {
        timed(&mut report, format!("fibration ⟺ good on {}", m.name), || {
            let dom = &cats[m.dom].cat;
            let cod = &cats[m.cod].cat;
            let good = is_good(dom, cod, &m.f, true).is_ok();
            let rlp = has_rlp_against_generator(dom, cod, &m.f, true, budget)
                .map_err(|e| e.to_string())?;
            if good != rlp {
                return Err(format!("good: {good}, RLP against the generator: {rlp}"));
            }
            Ok(())
        });
        timed(&mut report, format!("trivial-fibration characterization {}", m.name), || {
            if !trivial_fibration_characterization_agrees(
                &cats[m.dom].cat,
                &cats[m.cod].cat,
                &m.f,
                true,
            ) {
                return Err("class route and representable route disagree".into());
            }
            Ok(())
        });
    }
    for c in cats {
        timed(&mut report, format!("{} is fibrant and cofibrant", c.name), || {
            if !all_objects_fibrant_and_cofibrant(&c.cat, true) {
                return Err("object fails fibrancy or cofibrancy".into());
            }
            Ok(())
        });
    }
    // Good morphisms have the right lifting property against a generated
    // family of trivial cofibrations beyond the single generator: the
    // cylinder inclusions B → B♯𝕀 at 0.
    timed(&mut report, "good morphisms lift against cylinder inclusions".into(), || {
        let i2 = FinGroupoid::indiscrete(2);
        let lefts: Vec<(MarkedStarCategory, MarkedStarCategory, Functor)> = cats
            .iter()
            .filter(|c| c.cat.base().ob_count() == 1)
            .take(2)
            .map(|c| {
                let sharp = sharp_times(&c.cat, &i2);
                let incl = Functor {
                    obj: c.cat.base().objects().map(|x| sharp.ob(x, 0)).collect(),
                    mor: c.cat.base().morphisms().map(|f| sharp.mor(f, i2.cat.id(0))).collect(),
                };
                (c.cat.clone(), sharp.cat, incl)
            })
            .collect();
        for (ldom, lcod, left) in &lefts {
            if !is_cofibration(left) || is_weak_equivalence(ldom, lcod, left, true).is_err() {
                return Err("family member is not a trivial cofibration".into());
            }
            for m in morphisms.iter().take(12) {
                let dom = &cats[m.dom].cat;
                let cod = &cats[m.cod].cat;
                if is_good(dom, cod, &m.f, true).is_err() {
                    continue;
                }
                let tops =
                    enumerate_star_functors(ldom, dom, true, budget).map_err(|e| e.to_string())?;
                let bottoms =
                    enumerate_star_functors(lcod, cod, true, budget).map_err(|e| e.to_string())?;
                for top in &tops {
                    for bottom in &bottoms {
                        if bottom.after(left) != m.f.after(top) {
                            continue;
                        }
                        let problem = crate::model::LiftingProblem {
                            left_dom: ldom,
                            left_cod: lcod,
                            left,
                            right_dom: dom,
                            right_cod: cod,
                            right: &m.f,
                            top,
                            bottom,
                        };
                        let lift = crate::model::solve_lifting(&problem, true, budget)
                            .map_err(|e| e.to_string())?;
                        if lift.is_none() {
                            return Err(format!(
                                "good morphism {} has no lift against a cylinder inclusion",
                                m.name
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });
    // ♯ preserves (trivial) cofibrations, checked on corpus morphisms.
    for m in morphisms.iter().take(12) {
        timed(&mut report, format!("♯𝔾 preserves (trivial) cofibrations on {}", m.name), || {
            let dom = &cats[m.dom].cat;
            let cod = &cats[m.cod].cat;
            for (gname, g) in corpus::groupoids().into_iter().take(4) {
                let sh_dom = sharp_times(dom, &g);
                let sh_cod = sharp_times(cod, &g);
                let sh_f = Functor {
                    obj: (0..sh_dom.cat.base().ob_count())
                        .map(|o| {
                            let (x, gg) = sh_dom.unob(o);
                            sh_cod.ob(m.f.obj[x], gg)
                        })
                        .collect(),
                    mor: (0..sh_dom.cat.base().mor_count())
                        .map(|mm| {
                            let (f0, phi) = sh_dom.unmor(mm);
                            sh_cod.mor(m.f.mor[f0], phi)
                        })
                        .collect(),
                };
                if is_cofibration(&m.f) != is_cofibration(&sh_f) {
                    return Err(format!("cofibration status changes under ♯{gname}"));
                }
                let we = is_weak_equivalence(dom, cod, &m.f, true).is_ok();
                if is_cofibration(&m.f) && we {
                    let sh_we =
                        is_weak_equivalence(&sh_dom.cat, &sh_cod.cat, &sh_f, true).is_ok();
                    if !sh_we {
                        return Err(format!("trivial cofibration broken by ♯{gname}"));
                    }
                }
            }
            Ok(())
        });
    }
    report
}

/// Criterion 6: fixed points agree with the limit of the resolution, the
/// unit is a weak equivalence, and the resolution is injectively fibrant
/// against a generated family of equivariant trivial cofibrations.
pub fn fixed_point_suite(
    actions: &[corpus::CorpusAction],
    linear_actions: &[corpus::CorpusLinearAction],
    budget: &Budget,
) -> Report {
    let mut report = Report::new("fixed-point");
    for ca in actions {
        let marked = ca.marked;
        timed(&mut report, format!("Â^G ≅ lim resolution [{}]", ca.name), || {
            let fp = fixed_points(&ca.action, marked);
            let res = resolution(&ca.action, marked, budget).map_err(|e| e.to_string())?;
            let lim = lim_of_resolution(&res);
            if !fixed_points_agree(&ca.action, &fp, &res, &lim, marked) {
                return Err("comparison functor is not an isomorphism".into());
            }
            Ok(())
        });
        timed(&mut report, format!("unit is a weak equivalence [{}]", ca.name), || {
            let res = resolution(&ca.action, marked, budget).map_err(|e| e.to_string())?;
            if !res.unit_is_equivariant(&ca.action) {
                return Err("unit is not equivariant".into());
            }
            if !res
                .unit_is_weak_equivalence(&ca.action, marked, budget)
                .map_err(|e| e.to_string())?
            {
                return Err("unit fails the weak-equivalence certificates".into());
            }
            Ok(())
        });
        timed(&mut report, format!("injective fibrancy [{}]", ca.name), || {
            let res = resolution(&ca.action, marked, budget).map_err(|e| e.to_string())?;
            fibrancy_against_family(&ca.action, &res, marked, budget)
        });
    }
    for la in linear_actions {
        timed(&mut report, format!("linear Â^G ≅ lim resolution [{}]", la.name), || {
            let fp = fixed_points_linear(&la.action, la.values, budget).map_err(|e| e.to_string())?;
            let res = resolution_linear(&la.action, la.values, budget).map_err(|e| e.to_string())?;
            let lim = lim_of_resolution_linear(&res);
            if !fixed_points_linear_agree(&la.action, &fp, &res, &lim) {
                return Err("linear comparison fails".into());
            }
            Ok(())
        });
        timed(&mut report, format!("linear fibrancy (retraction lifts) [{}]", la.name), || {
            linear_fibrancy_against_family(&la.action, la.values, budget)
        });
    }
    report
}

/// The generated family of equivariant trivial cofibrations: (0)-inclusions
/// into cylinders D → D♯𝕀 for D ∈ {base, G̃}, and c♯G̃ for the generating
/// trivial cofibration c: Δ⁰ → 𝟙(⁺).
fn fibrancy_against_family(
    base_action: &GAction,
    res: &crate::equivariant::Resolution,
    marked: bool,
    budget: &Budget,
) -> Result<(), String> {
    let group = &base_action.group;
    let fu_action = &res.action;
    let pt_action = GAction::trivial(group.clone(), MarkedStarCategory::point());
    let collapse = Functor {
        obj: vec![0; fu_action.base.base().ob_count()],
        mor: vec![0; fu_action.base.base().mor_count()],
    };
    let mut family: Vec<(String, GAction, GAction, Functor)> = Vec::new();
    // D → D♯𝕀 for D the base action and the left-multiplication G̃-action.
    for (dname, d_action) in [
        ("base".to_string(), base_action.clone()),
        ("gtilde".to_string(), build_gtilde(group).as_g_action()),
    ] {
        let i2 = FinGroupoid::indiscrete(2);
        let sharp = sharp_times(&d_action.base, &i2);
        let on: Vec<Functor> = (0..group.order())
            .map(|g| Functor {
                obj: (0..sharp.cat.base().ob_count())
                    .map(|o| {
                        let (x, v) = sharp.unob(o);
                        sharp.ob(d_action.on[g].obj[x], v)
                    })
                    .collect(),
                mor: (0..sharp.cat.base().mor_count())
                    .map(|m| {
                        let (f, e) = sharp.unmor(m);
                        sharp.mor(d_action.on[g].mor[f], e)
                    })
                    .collect(),
            })
            .collect();
        let sharp_action = GAction::validate(group.clone(), sharp.cat.clone(), on)
            .map_err(|e| e.to_string())?;
        let incl = Functor {
            obj: d_action.base.base().objects().map(|x| sharp.ob(x, 0)).collect(),
            mor: d_action
                .base
                .base()
                .morphisms()
                .map(|f| sharp.mor(f, i2.cat.id(0)))
                .collect(),
        };
        family.push((format!("{dname}→{dname}♯I"), d_action, sharp_action, incl));
    }
    // c ♯ G̃ for c: Δ⁰ → 𝟙(⁺).
    {
        let gt = build_gtilde(group);
        let one = if marked {
            classifier(ClassifierKind::MarkedUnitary)
        } else {
            classifier(ClassifierKind::Unitary)
        };
        let pt = MarkedStarCategory::point();
        let sharp_pt = sharp_times(&pt, &gt.groupoid);
        let sharp_one = sharp_times(&one, &gt.groupoid);
        let mk_action = |sharp: &crate::gtensor::SharpProduct, base: &MarkedStarCategory| {
            let on: Vec<Functor> = (0..group.order())
                .map(|g| Functor {
                    obj: (0..sharp.cat.base().ob_count())
                        .map(|o| {
                            let (x, gg) = sharp.unob(o);
                            sharp.ob(x, group.mul(g, gg))
                        })
                        .collect(),
                    mor: (0..sharp.cat.base().mor_count())
                        .map(|m| {
                            let (f, e) = sharp.unmor(m);
                            let (g1, g2) = gt.ends(e);
                            sharp.mor(f, gt.arrow(group.mul(g, g1), group.mul(g, g2)))
                        })
                        .collect(),
                })
                .collect();
            let _ = base;
            GAction::validate(group.clone(), sharp.cat.clone(), on).map_err(|e| e.to_string())
        };
        let left_dom = mk_action(&sharp_pt, &pt)?;
        let left_cod = mk_action(&sharp_one, &one)?;
        let incl = Functor {
            obj: (0..sharp_pt.cat.base().ob_count())
                .map(|o| {
                    let (_, gg) = sharp_pt.unob(o);
                    sharp_one.ob(0, gg)
                })
                .collect(),
            mor: (0..sharp_pt.cat.base().mor_count())
                .map(|m| {
                    let (_, e) = sharp_pt.unmor(m);
                    sharp_one.mor(one.base().id(0), e)
                })
                .collect(),
        };
        family.push(("Δ⁰♯G̃→𝟙♯G̃".into(), left_dom, left_cod, incl));
    }
    for (name, left_dom, left_cod, left) in &family {
        // Sanity: the left leg is an equivariant trivial cofibration.
        if !is_cofibration(left)
            || is_weak_equivalence(&left_dom.base, &left_cod.base, left, marked).is_err()
        {
            return Err(format!("family member {name} is not a trivial cofibration"));
        }
        let tops = enumerate_star_functors(&left_dom.base, &fu_action.base, marked, budget)
            .map_err(|e| e.to_string())?;
        let mut instances = 0usize;
        for top in &tops {
            let equivariant = (0..group.order())
                .all(|g| top.after(&left_dom.on[g]) == fu_action.on[g].after(top));
            if !equivariant {
                continue;
            }
            instances += 1;
            let bottom = Functor {
                obj: vec![0; left_cod.base.base().ob_count()],
                mor: vec![0; left_cod.base.base().mor_count()],
            };
            let problem = EquivariantLiftingProblem {
                left_dom,
                left_cod,
                left,
                right_dom: fu_action,
                right_cod: &pt_action,
                right: &collapse,
                top,
                bottom: &bottom,
            };
            if solve_equivariant_lifting(&problem, marked, budget)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                return Err(format!("no equivariant lift for {name}"));
            }
        }
        if instances == 0 && name.starts_with("base") {
            return Err(format!("no equivariant squares generated for {name}"));
        }
    }
    Ok(())
}

/// Linear fibrancy: for family members with an explicit equivariant
/// retraction r (r∘c = id), the composite α∘r is an equivariant lift; verify
/// it for every equivariant α out of the linear cylinder inclusion.
fn linear_fibrancy_against_family(
    action: &crate::equivariant::LinearGAction,
    values: LinearValueSet,
    budget: &Budget,
) -> Result<(), String> {
    let res = resolution_linear(action, values, budget).map_err(|e| e.to_string())?;
    let group = &action.group;
    // Family member: R(A) → R(A)⊗𝕀 at 0, with retraction the projection.
    let i2 = FinGroupoid::indiscrete(2);
    let fu = &res.funu.cat;
    let tensor = sharp_tensor(fu, &i2);
    let incl = |o: usize| tensor.ob(o, 0);
    // α := identity of R(A); the lift is α∘pr.
    let pr_obj: Vec<usize> = (0..tensor.cat.ob_count()).map(|o| tensor.unob(o).0).collect();
    let n = tensor.cat.ob_count();
    let mut pr_maps = vec![vec![Vec::new(); n]; n];
    for sx in 0..n {
        for sy in 0..n {
            let (x, _) = tensor.unob(sx);
            let (y, _) = tensor.unob(sy);
            let d = fu.dim(x, y);
            for ii in 0..tensor.cat.dim(sx, sy) {
                let i = ii % d;
                pr_maps[sx][sy].push(fu.basis_elem(x, y, i).coeffs);
            }
        }
    }
    let pr = LinearFunctor { obj: pr_obj, maps: pr_maps };
    pr.validate(&tensor.cat, fu, true).map_err(|e| format!("projection: {e}"))?;
    // pr ∘ incl = id.
    for o in 0..fu.ob_count() {
        if pr.obj[incl(o)] != o {
            return Err("retraction does not split the inclusion".into());
        }
    }
    // Equivariance of the lift: the G-action on R(A)⊗𝕀 acts on the R(A)
    // factor only, and pr intertwines it by construction; verify on objects.
    for g in 0..group.order() {
        for o in 0..tensor.cat.ob_count() {
            let (x, v) = tensor.unob(o);
            let moved = tensor.ob(res.action.on[g].obj[x], v);
            if pr.obj[moved] != res.action.on[g].obj[pr.obj[o]] {
                return Err("retraction is not equivariant".into());
            }
        }
    }
    Ok(())
}

/// Criterion 7: the orbit certificates and the group-algebra oracle.
pub fn orbit_suite(
    groups: &[FinGroup],
    groupoids: &[(String, FinGroupoid)],
    builtin_instances: bool,
    budget: &Budget,
) -> Report {
    let mut report = Report::new("orbit");
    for group in groups {
        for (kname, k) in groupoids {
            timed(
                &mut report,
                format!("Hom_G(G̃, K̲) ≅ Hom(BG, K) for |G|={}, K={kname}", group.order()),
                || match gtilde_colim_certificate(group, k, budget) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err("bijection fails".into()),
                    Err(e) => Err(e.to_string()),
                },
            );
        }
    }
    if !builtin_instances {
        return report;
    }
    timed(&mut report, "pt♯BG ≅ BG".into(), || {
        for group in [FinGroup::cyclic(2), FinGroup::cyclic(3)] {
            let o = orbit(&MarkedStarCategory::point(), &group);
            let bg = group.b_groupoid();
            if !crate::fincat::isomorphic(o.cat.base(), &bg.cat, budget).map_err(|e| e.to_string())?
            {
                return Err(format!("fails for |G| = {}", group.order()));
            }
        }
        Ok(())
    });
    timed(&mut report, "End(Lin(pt)⊗BZ₂) is the group algebra".into(), || {
        let linpt = linearize(&MarkedStarCategory::point());
        let z2 = FinGroup::cyclic(2);
        let t = crate::equivariant::orbit_linear(&linpt.cat, &z2);
        if t.cat.ob_count() != 1 || t.cat.dim(0, 0) != 2 {
            return Err(format!("dimension {} ≠ 2", t.cat.dim(0, 0)));
        }
        // Oracle: the group algebra built directly from the mult table.
        let oracle = group_algebra_oracle(&z2);
        if t.cat != oracle {
            return Err("multiplication or star table differs from the oracle".into());
        }
        Ok(())
    });
    timed(&mut report, "orbit cofibrancy certificates".into(), || {
        let pt = MarkedStarCategory::point();
        let one = classifier(ClassifierKind::MarkedUnitary);
        let incl = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
        let cyl = cylinder_factorize(&pt, &one, &incl);
        for group in [FinGroup::cyclic(2), FinGroup::cyclic(3)] {
            // C̲♯G̃ → C̲ is a weak equivalence.
            let gt = build_gtilde(&group);
            let sharp = sharp_times(&one, &gt.groupoid);
            let collapse = Functor {
                obj: (0..sharp.cat.base().ob_count()).map(|o| sharp.unob(o).0).collect(),
                mor: (0..sharp.cat.base().mor_count()).map(|m| sharp.unmor(m).0).collect(),
            };
            if is_weak_equivalence(&sharp.cat, &one, &collapse, true).is_err() {
                return Err("C♯G̃ → C is not a weak equivalence".into());
            }
            // Lifting against the collapse q of the corpus cylinder.
            for v_obj in 0..one.base().ob_count() {
                let u = Functor {
                    obj: vec![v_obj; sharp_times(&pt, &gt.groupoid).cat.base().ob_count()],
                    mor: vec![
                        one.base().id(v_obj);
                        sharp_times(&pt, &gt.groupoid).cat.base().mor_count()
                    ],
                };
                if !orbit_cofibrant_certificate(
                    &pt,
                    &group,
                    &cyl.fact.mid,
                    &one,
                    &cyl.fact.second,
                    &u,
                    true,
                ) {
                    return Err(format!("unique equivariant extension fails at object {v_obj}"));
                }
            }
        }
        Ok(())
    });
    timed(&mut report, "induction values".into(), || {
        let z2 = FinGroup::cyclic(2);
        let pt = MarkedStarCategory::point();
        let trivial = crate::equivariant::induction_value(&pt, &z2, &[0])
            .map_err(|e| e.to_string())?;
        if !crate::fincat::isomorphic(trivial.cat.base(), pt.base(), budget)
            .map_err(|e| e.to_string())?
        {
            return Err("C♯B{e} is not C".into());
        }
        let full =
            crate::equivariant::induction_value(&pt, &z2, &[0, 1]).map_err(|e| e.to_string())?;
        if full.cat.base().mor_count() != 2 {
            return Err("C♯BZ₂ has the wrong size".into());
        }
        Ok(())
    });
    report
}

/// The group algebra of G over ℚ(i) built directly from the multiplication
/// table: the independent oracle for orbit computations.
pub fn group_algebra_oracle(g: &FinGroup) -> crate::star::LinearStarCategory {
    use crate::scalar::Scalar;
    let n = g.order();
    let unit_vec = |k: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[k] = Scalar::one();
        v
    };
    let compose = vec![vec![vec![(0..n)
        .map(|j| (0..n).map(|i| unit_vec(g.mul(j, i))).collect())
        .collect()]]];
    let star = vec![vec![(0..n).map(|k| unit_vec(g.inv[k])).collect()]];
    let marked = (0..n)
        .map(|k| crate::star::LinElem { src: 0, tgt: 0, coeffs: unit_vec(k) })
        .collect();
    crate::star::LinearStarCategory::validate(
        1,
        vec![vec![n]],
        compose,
        vec![unit_vec(g.unit)],
        star,
        marked,
    )
    .expect("group algebra oracle is valid")
}

/// Criterion 8: controlled objects over the Z/2 coarse space.
pub fn controlled_suite(
    spaces: &[(String, crate::controlled::GCoarseSpace)],
    _budget: &Budget,
) -> Report {
    let mut report = Report::new("controlled");
    for (sname, gx) in spaces {
        controlled_space_checks(&mut report, sname, gx);
    }
    report
}

fn controlled_space_checks(
    report: &mut Report,
    sname: &str,
    gx: &crate::controlled::GCoarseSpace,
) {
    timed(report, format!("measure axioms hold on {sname}"), || {
        let v = crate::controlled::build_vplus(&gx.space, 2).map_err(|e| e.to_string())?;
        for o in &v.objects {
            crate::controlled::ControlledObject::validate(&gx.space, o.carrier, o.measure.clone())
                .map_err(|e| e.to_string())?;
        }
        Ok(())
    });
    timed(report, format!("control characterization and composition law on {sname}"), || {
        let v = crate::controlled::build_vplus(&gx.space, 2).map_err(|e| e.to_string())?;
        // On the small slice (carriers ≤ 1), the definitional subset-pair
        // scan agrees with the support characterization for every
        // sub-entourage.
        let masks: Vec<crate::controlled::Relation> = {
            let all: Vec<(usize, usize)> =
                gx.space.max_entourage.pairs.iter().copied().collect();
            (0..(1usize << all.len()))
                .map(|mask| {
                    crate::controlled::Relation::from_pairs(
                        gx.space.points,
                        gx.space.points,
                        &all
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, &p)| p)
                            .collect::<Vec<_>>(),
                    )
                })
                .collect()
        };
        for m in v.cat.base().morphisms() {
            let (s, t) = (v.cat.base().src(m), v.cat.base().tgt(m));
            let (os, ot) = (&v.objects[s], &v.objects[t]);
            if os.carrier > 1 || ot.carrier > 1 {
                continue;
            }
            let a = &v.relations[m];
            let support: Vec<(usize, usize)> = a
                .pairs
                .iter()
                .map(|&(m2, m1)| (ot.labels[m2], os.labels[m1]))
                .collect();
            for u in &masks {
                let scan = crate::controlled::is_controlled(&gx.space, os, ot, a, u)
                    .map_err(|e| e.to_string())?;
                let supp = support.iter().all(|p| u.pairs.contains(p));
                if scan != supp {
                    return Err(format!("characterization fails on morphism {m}"));
                }
            }
        }
        // Composition and transpose laws via supports, over all composable
        // corpus morphisms.
        for m2 in v.cat.base().morphisms() {
            for m1 in v.cat.base().morphisms() {
                let Some(c) = v.cat.base().compose(m2, m1) else { continue };
                let u1 = support_entourage(&v, gx.space.points, m1);
                let u2 = support_entourage(&v, gx.space.points, m2);
                let uc = support_entourage(&v, gx.space.points, c);
                if !uc.is_subset(&u2.compose(&u1)) {
                    return Err(format!("composition law fails on ({m2}, {m1})"));
                }
            }
        }
        for m in v.cat.base().morphisms() {
            let u = support_entourage(&v, gx.space.points, m);
            let star_u = support_entourage(&v, gx.space.points, v.cat.star(m));
            if star_u != u.transpose() {
                return Err(format!("transpose law fails on {m}"));
            }
        }
        Ok(())
    });
    timed(report, format!("marked morphisms are the diag-controlled unitaries on {sname}"), || {
        let v = crate::controlled::build_vplus(&gx.space, 2).map_err(|e| e.to_string())?;
        for m in v.cat.base().morphisms() {
            let (s, t) = (v.cat.base().src(m), v.cat.base().tgt(m));
            let diag_unitary = v.relations[m].is_bijection_graph()
                && v.relations[m]
                    .pairs
                    .iter()
                    .all(|&(m2, m1)| v.objects[t].labels[m2] == v.objects[s].labels[m1]);
            if v.cat.is_marked(m) != diag_unitary {
                return Err(format!("marking mismatch on morphism {m}"));
            }
        }
        Ok(())
    });
    timed(report, format!("equivariant V⁺ ≅ fixed points of V⁺ on {sname}"), || {
        let v = crate::controlled::build_vplus(&gx.space, 2).map_err(|e| e.to_string())?;
        let ev = crate::controlled::equivariant_vplus(&v, gx).map_err(|e| e.to_string())?;
        if !crate::controlled::equivariant_vplus_agrees(&v, gx, &ev) {
            return Err("triple category does not match the fixed points".into());
        }
        Ok(())
    });
}

fn support_entourage(
    v: &crate::controlled::VPlus,
    points: usize,
    m: usize,
) -> crate::controlled::Relation {
    let (s, t) = (v.cat.base().src(m), v.cat.base().tgt(m));
    let pairs: Vec<(usize, usize)> = v.relations[m]
        .pairs
        .iter()
        .map(|&(m2, m1)| (v.objects[t].labels[m2], v.objects[s].labels[m1]))
        .collect();
    crate::controlled::Relation::from_pairs(points, points, &pairs)
}

/// Criterion 9: the fundamental groupoid through hom-counting.
pub fn pi_suite(groupoids: &[(String, FinGroupoid)], budget: &Budget) -> Report {
    let mut report = Report::new("pi");
    timed(&mut report, "Π(Δ⁰) ≅ pt by hom counting".into(), || {
        let p = fundamental_groupoid(&FiniteSimplicialSet::delta0());
        for (name, h) in groupoids {
            let count = hom_into(&p, h, budget).map_err(|e| e.to_string())?.len();
            if count != h.cat.ob_count() {
                return Err(format!("into {name}: {count} maps, {} objects", h.cat.ob_count()));
            }
        }
        Ok(())
    });
    timed(&mut report, "Π(Δ¹) ≅ 𝕀 by hom counting".into(), || {
        let p = fundamental_groupoid(&FiniteSimplicialSet::delta1());
        for (name, h) in groupoids {
            let count = hom_into(&p, h, budget).map_err(|e| e.to_string())?.len();
            if count != h.cat.mor_count() {
                return Err(format!(
                    "into {name}: {count} maps, {} morphisms",
                    h.cat.mor_count()
                ));
            }
        }
        Ok(())
    });
    timed(&mut report, "Π(N(BZ₂)) → BZ₂ has two maps".into(), || {
        let z2 = corpus::bz2();
        let n = nerve_truncated(&z2);
        n.validate().map_err(|e| e.to_string())?;
        let p = fundamental_groupoid(&n);
        let count = hom_into(&p, &z2, budget).map_err(|e| e.to_string())?.len();
        if count != 2 {
            return Err(format!("{count} maps"));
        }
        Ok(())
    });
    timed(&mut report, "Π ⊣ N unit on small groupoids".into(), || {
        for (name, g) in groupoids.iter().filter(|(_, g)| g.cat.ob_count() <= 2) {
            let n = nerve_truncated(g);
            let p = fundamental_groupoid(&n);
            for (tname, h) in groupoids {
                let via_pi = hom_into(&p, h, budget).map_err(|e| e.to_string())?.len();
                let direct = crate::fincat::enumerate_functors(&g.cat, &h.cat, budget)
                    .map_err(|e| e.to_string())?
                    .len();
                if via_pi != direct {
                    return Err(format!("{name} → {tname}: Π route {via_pi}, direct {direct}"));
                }
            }
        }
        Ok(())
    });
    report
}

/// Run every suite with the built-in corpus.
pub fn all_suites(budget: &Budget) -> Vec<Report> {
    let cats = corpus::categories();
    let morphisms = corpus::morphisms();
    vec![
        representability_suite(&cats, budget),
        equivalence_suite(&cats, &morphisms, budget),
        exponential_suite(builtin_triples_times(), builtin_triples_tensor(), budget),
        factorization_suite(&cats, &morphisms, budget),
        model_suite(&cats, &morphisms, &corpus::retract_diagrams(6), budget),
        fixed_point_suite(&corpus::actions(), &corpus::linear_actions(), budget),
        orbit_suite(
            &[FinGroup::cyclic(2), FinGroup::cyclic(3)],
            &builtin_groupoids(),
            true,
            budget,
        ),
        controlled_suite(&builtin_spaces(), budget),
        pi_suite(&builtin_groupoids(), budget),
    ]
}

pub fn builtin_groupoids() -> Vec<(String, FinGroupoid)> {
    corpus::groupoids().into_iter().map(|(n, g)| (n.to_string(), g)).collect()
}

pub fn builtin_spaces() -> Vec<(String, crate::controlled::GCoarseSpace)> {
    vec![(
        "z2_canonical".to_string(),
        crate::controlled::GCoarseSpace::canonical_on_group(&FinGroup::cyclic(2)),
    )]
}

pub fn builtin_triples_times(
) -> Vec<(String, MarkedStarCategory, FinGroupoid, MarkedStarCategory)> {
    corpus::exp_law_triples_times()
        .into_iter()
        .map(|(n, c, g, a)| (n.to_string(), c, g, a))
        .collect()
}

pub fn builtin_triples_tensor(
) -> Vec<(String, MarkedStarCategory, FinGroupoid, MarkedStarCategory)> {
    corpus::exp_law_triples_tensor()
        .into_iter()
        .map(|(n, c, g, a)| (n.to_string(), c, g, a))
        .collect()
}

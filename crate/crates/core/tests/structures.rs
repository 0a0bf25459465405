//! Cross-module integration checks: limit universal properties over the
//! corpus, simplicial identities of mapping spaces, representability of
//! morphisms through free-star words, and the equivariant exponential law.

use starcat::bounds::Budget;
use starcat::corpus;
use starcat::equivariant::{build_gtilde, resolution, FinGroup, GAction};
use starcat::fincat::{
    cones_into, enumerate_functors, finite_limit, universal_property_holds, Diagram, FinCategory,
    FinGroupoid, Functor,
};
use starcat::gtensor::{level_one_isos_agree, sharp_times, simplicial_identities_hold};
use starcat::star::{FreeStarPresentation, MarkedStarCategory};

#[test]
fn products_of_corpus_pairs_satisfy_the_universal_property() {
    let budget = Budget::default();
    let cats = corpus::categories();
    let small: Vec<&corpus::NamedCategory> =
        cats.iter().filter(|c| c.cat.base().ob_count() <= 2).collect();
    let tips = [FinCategory::point(), FinCategory::walking_arrow()];
    for a in small.iter().take(3) {
        for b in small.iter().take(3) {
            let index = FinCategory::discrete(2);
            let d = Diagram {
                index,
                nodes: vec![a.cat.base().clone(), b.cat.base().clone()],
                arrows: vec![
                    Functor::identity(a.cat.base()),
                    Functor::identity(b.cat.base()),
                ],
            };
            d.validate().unwrap();
            let lim = finite_limit(&d);
            assert_eq!(
                lim.category.ob_count(),
                a.cat.base().ob_count() * b.cat.base().ob_count()
            );
            for tip in &tips {
                assert!(
                    universal_property_holds(&d, &lim, tip, &budget).unwrap(),
                    "{} × {} against tip with {} objects",
                    a.name,
                    b.name,
                    tip.ob_count()
                );
                // Cone count sanity: cones are pairs of functors.
                let cones = cones_into(&d, tip, &budget).unwrap();
                let fa = enumerate_functors(tip, a.cat.base(), &budget).unwrap().len();
                let fb = enumerate_functors(tip, b.cat.base(), &budget).unwrap().len();
                assert_eq!(cones.len(), fa * fb);
            }
        }
    }
}

#[test]
fn mapping_space_identities_on_corpus_pairs() {
    let budget = Budget::default();
    let pt = MarkedStarCategory::point();
    let one = starcat::star::classifier(starcat::star::ClassifierKind::MarkedUnitary);
    let bz2 = MarkedStarCategory::from_groupoid_ma(&corpus::bz2());
    for (a, b) in [(&pt, &one), (&pt, &bz2), (&one, &bz2)] {
        assert!(simplicial_identities_hold(a, b, true, &budget).unwrap());
        assert!(level_one_isos_agree(a, b, true, &budget).unwrap());
    }
}

#[test]
fn morphism_representability_through_free_star_words() {
    // Hom(Free_*(walking arrow), B) ≅ Mor(B): the assignments are exactly
    // the plain functors from the walking arrow into the underlying
    // category, and every reduced word evaluates consistently under each.
    let budget = Budget::default();
    let p = FreeStarPresentation::validate(FinCategory::walking_arrow(), Default::default())
        .unwrap();
    for c in corpus::categories().iter().take(6) {
        let assignments =
            enumerate_functors(&p.base, c.cat.base(), &budget).unwrap();
        assert_eq!(assignments.len(), c.cat.base().mor_count(), "{}", c.name);
        for asg in assignments.iter().take(4) {
            for w in p.enumerate_reduced(0, 1, 3) {
                let direct = starcat::star::free_star_evaluate(&p, asg, &c.cat, &w).unwrap();
                let reduced =
                    starcat::star::free_star_evaluate(&p, asg, &c.cat, &p.reduce(&w)).unwrap();
                assert_eq!(direct, reduced);
            }
        }
    }
}

#[test]
fn equivariant_exponential_law_counts() {
    // Hom_G(C̲♯G̃, A) ≅ Hom_G(C̲, Fun^u(G̃, A)) by counting, for the trivial
    // action on C = pt and A = BZ₂.
    let budget = Budget::default();
    let group = FinGroup::cyclic(2);
    let gt = build_gtilde(&group);
    let c = MarkedStarCategory::point();
    let a = MarkedStarCategory::from_groupoid_ma(&corpus::bz2());
    let a_action = GAction::trivial(group.clone(), a.clone());
    let res = resolution(&a_action, true, &budget).unwrap();
    // Left side: equivariant functors pt♯G̃ → A (diagonal action, trivial
    // on both pt and A).
    let sharp = sharp_times(&c, &gt.groupoid);
    let lhs = starcat::star::enumerate_star_functors(&sharp.cat, &a, true, &budget)
        .unwrap()
        .into_iter()
        .filter(|f| {
            (0..group.order()).all(|g| {
                sharp.cat.base().morphisms().all(|m| {
                    let (f0, e) = sharp.unmor(m);
                    let (g1, g2) = gt.ends(e);
                    f.mor[sharp.mor(f0, gt.arrow(group.mul(g, g1), group.mul(g, g2)))] == f.mor[m]
                })
            })
        })
        .count();
    // Right side: equivariant functors pt → Fun^u(G̃, A).
    let rhs = starcat::star::enumerate_star_functors(&c, &res.funu.cat, true, &budget)
        .unwrap()
        .into_iter()
        .filter(|f| (0..group.order()).all(|g| res.action.on[g].after(f) == *f))
        .count();
    assert_eq!(lhs, rhs);
    assert!(lhs > 0);
}

#[test]
fn groupoid_sharp_preserves_weak_equivalences_with_explicit_inverse() {
    // For a trivial cofibration and weak equivalence i, A♯Π(i)-style tensors
    // stay weak equivalences; checked directly on 𝔾-tensors with the
    // explicit inverse A♯u.
    let budget = Budget::default();
    let pt = MarkedStarCategory::point();
    let one = starcat::star::classifier(starcat::star::ClassifierKind::MarkedUnitary);
    let incl = Functor { obj: vec![0], mor: vec![one.base().id(0)] };
    assert!(starcat::star::is_weak_equivalence(&pt, &one, &incl, true).is_ok());
    for (_, g) in corpus::groupoids() {
        let sh_dom = sharp_times(&pt, &g);
        let sh_cod = sharp_times(&one, &g);
        let sh_f = Functor {
            obj: (0..sh_dom.cat.base().ob_count())
                .map(|o| {
                    let (x, gg) = sh_dom.unob(o);
                    sh_cod.ob(incl.obj[x], gg)
                })
                .collect(),
            mor: (0..sh_dom.cat.base().mor_count())
                .map(|m| {
                    let (f0, phi) = sh_dom.unmor(m);
                    sh_cod.mor(incl.mor[f0], phi)
                })
                .collect(),
        };
        assert!(starcat::model::is_cofibration(&sh_f));
        assert!(starcat::star::is_weak_equivalence(&sh_dom.cat, &sh_cod.cat, &sh_f, true).is_ok());
        // Definitional route finds an inverse too.
        assert!(starcat::star::definitional_weak_equivalence(
            &sh_dom.cat,
            &sh_cod.cat,
            &sh_f,
            true,
            &budget
        )
        .unwrap()
        .is_some());
    }
}

#[test]
fn pushforward_functoriality_to_the_point() {
    // f_*(M, φ) = (M, φ∘f⁻¹): collapsing a two-point space onto the point
    // sends every measure to the total measure.
    use starcat::controlled::{pushforward_measure, Bornology, BornCoarseSpace, ControlledObject};
    let space = BornCoarseSpace::validate(2, &[(0, 1)], Bornology::All).unwrap();
    let target = BornCoarseSpace::validate(1, &[], Bornology::All).unwrap();
    for labels in [vec![], vec![0], vec![1, 0], vec![0, 0, 1]] {
        let obj = ControlledObject::from_labels(&space, labels);
        let pushed = pushforward_measure(&obj, 2, 1, &[0, 0]);
        ControlledObject::validate(&target, pushed.carrier, pushed.measure.clone()).unwrap();
        assert_eq!(pushed.measure[1], starcat::controlled::Relation::identity(obj.carrier));
    }
}

#[test]
fn groupoid_corpus_is_what_it_says() {
    for (name, g) in corpus::groupoids() {
        for f in g.cat.morphisms() {
            assert!(g.cat.is_invertible(f), "{name}");
        }
    }
    // FinGroupoid validation rejects a broken inverse table.
    let i2 = FinGroupoid::indiscrete(2);
    assert!(FinGroupoid::validate(i2.cat.clone(), vec![0, 1, 2, 3]).is_err());
}

#[test]
fn mi_ma_adjunctions_by_hom_counting() {
    // mi ⊣ forget: marked functors mi(A) → B correspond to star functors
    // A → B ignoring markings; forget ⊣ ma: star functors A → B correspond
    // to marked functors A → ma(B).
    let budget = Budget::default();
    let cats = corpus::categories();
    let small: Vec<_> = cats.iter().filter(|c| c.cat.base().ob_count() <= 2).take(4).collect();
    for a in &small {
        for b in &small {
            let lhs_mi = starcat::star::enumerate_star_functors(
                &a.cat.mi(),
                &b.cat,
                true,
                &budget,
            )
            .unwrap()
            .len();
            let rhs_mi =
                starcat::star::enumerate_star_functors(&a.cat, &b.cat, false, &budget)
                    .unwrap()
                    .len();
            assert_eq!(lhs_mi, rhs_mi, "mi adjunction on ({}, {})", a.name, b.name);
            let lhs_ma =
                starcat::star::enumerate_star_functors(&a.cat, &b.cat, false, &budget)
                    .unwrap()
                    .len();
            let rhs_ma = starcat::star::enumerate_star_functors(
                &a.cat,
                &b.cat.ma(),
                true,
                &budget,
            )
            .unwrap()
            .len();
            assert_eq!(lhs_ma, rhs_ma, "ma adjunction on ({}, {})", a.name, b.name);
        }
    }
}

#[test]
fn marked_subcategory_shapes() {
    // (𝟙⁺)⁺ ≅ 𝕀 and (ma(BZ₂))⁺ ≅ BZ₂.
    let budget = Budget::default();
    let one_plus = starcat::star::classifier(starcat::star::ClassifierKind::MarkedUnitary);
    let (sub, _) = one_plus.marked_subcategory();
    assert!(starcat::fincat::isomorphic(
        &sub.cat,
        &FinGroupoid::indiscrete(2).cat,
        &budget
    )
    .unwrap());
    let bz2_ma = MarkedStarCategory::from_groupoid_ma(&corpus::bz2());
    let (sub, _) = bz2_ma.marked_subcategory();
    assert!(starcat::fincat::isomorphic(&sub.cat, &corpus::bz2().cat, &budget).unwrap());
}

#[test]
fn linearization_adjunction_round_trips_over_corpus() {
    // For corpus categories with ≤ 3 objects, the canonical Φ: A → F(Lin A)
    // and every marked variant generated from star endofunctors round-trip
    // through the adjunction transports.
    let budget = Budget::default();
    for c in corpus::categories().iter().filter(|c| c.cat.base().ob_count() <= 3).take(6) {
        let a = &c.cat;
        let lin = starcat::star::linearize(a);
        let endos = starcat::star::enumerate_star_functors(a, a, true, &budget).unwrap();
        for e in endos.into_iter().take(3) {
            let phi = starcat::star::StarFunctorIntoLinear {
                obj: e.obj.clone(),
                mor: a.base().morphisms().map(|f| lin.elem_of_mor(a, e.mor[f])).collect(),
            };
            phi.validate(a, &lin.cat, true).unwrap();
            let psi = starcat::star::phi_to_psi(&lin, &lin.cat, &phi);
            psi.validate(&lin.cat, &lin.cat, true).unwrap();
            assert_eq!(starcat::star::psi_to_phi(a, &lin, &lin.cat, &psi), phi, "{}", c.name);
        }
    }
}

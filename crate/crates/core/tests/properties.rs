//! Property tests for the algebraic invariants: category laws on random
//! triples, star axioms, marking validation with injected violations, word
//! rewriting confluence, scalar arithmetic, and relation algebra.

use proptest::prelude::*;
use starcat::corpus;
use starcat::fincat::FinCategory;
use starcat::scalar::Scalar;
use starcat::star::{FreeStarPresentation, Letter, MarkedStarCategory, Word};

fn corpus_cat(idx: usize) -> MarkedStarCategory {
    let cats = corpus::categories();
    cats[idx % cats.len()].cat.clone()
}

proptest! {
    #[test]
    fn associativity_and_identity_on_random_triples(
        cat_idx in 0usize..13,
        picks in prop::collection::vec(0usize..4096, 3),
    ) {
        let cat = corpus_cat(cat_idx);
        let base = cat.base();
        let m = base.mor_count();
        prop_assume!(m > 0);
        let f = picks[0] % m;
        // Identity laws.
        prop_assert_eq!(base.compose(base.id(base.tgt(f)), f), Some(f));
        prop_assert_eq!(base.compose(f, base.id(base.src(f))), Some(f));
        // Associativity on a random composable triple, when one exists.
        let g = (0..2 * m).map(|k| (k + picks[1]) % m).find(|&g| base.src(g) == base.tgt(f));
        if let Some(g) = g {
            if let Some(h) =
                (0..2 * m).map(|k| (k + picks[2]) % m).find(|&h| base.src(h) == base.tgt(g))
            {
                let left = base.compose(h, base.compose(g, f).unwrap());
                let right = base.compose(base.compose(h, g).unwrap(), f);
                prop_assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn star_axioms_hold_on_corpus(cat_idx in 0usize..13, pick in 0usize..4096) {
        let cat = corpus_cat(cat_idx);
        let base = cat.base();
        let m = base.mor_count();
        prop_assume!(m > 0);
        let f = pick % m;
        prop_assert_eq!(cat.star(cat.star(f)), f);
        prop_assert_eq!(base.src(cat.star(f)), base.tgt(f));
        for g in base.morphisms() {
            if let Some(gf) = base.compose(g, f) {
                prop_assert_eq!(
                    base.compose(cat.star(f), cat.star(g)),
                    Some(cat.star(gf))
                );
            }
        }
    }

    #[test]
    fn marking_rejects_injected_non_unitaries(cat_idx in 0usize..13, pick in 0usize..4096) {
        // Restrict to the corpus members that have non-unitary morphisms.
        let with_non_unitaries: Vec<MarkedStarCategory> = corpus::categories()
            .into_iter()
            .map(|c| c.cat)
            .filter(|c| c.base().morphisms().any(|f| !c.is_unitary(f)))
            .collect();
        let cat = with_non_unitaries[cat_idx % with_non_unitaries.len()].clone();
        let base = cat.base();
        let non_unitaries: Vec<usize> =
            base.morphisms().filter(|&f| !cat.is_unitary(f)).collect();
        let f = non_unitaries[pick % non_unitaries.len()];
        let mut marked = cat.marked().clone();
        marked.insert(f);
        marked.insert(cat.star(f));
        let result =
            MarkedStarCategory::validate(base.clone(), cat.star_table().to_vec(), marked);
        prop_assert!(result.is_err());
    }

    #[test]
    fn word_reduction_is_confluent(
        letters in prop::collection::vec((0usize..3, prop::bool::ANY), 0..7),
        order in prop::collection::vec(0usize..8, 0..32),
    ) {
        // Free *-category on the walking arrow: morphisms 0 = id₀, 1 = id₁,
        // 2 = a.  Build a composable word starting at 0.
        let p = FreeStarPresentation::validate(
            FinCategory::walking_arrow(),
            Default::default(),
        ).unwrap();
        let mut at = 0usize;
        let mut ws = Vec::new();
        for (gen, star) in letters {
            // Pick any letter whose source matches the current endpoint.
            let candidates: Vec<Letter> = [Letter::Gen(gen % 3), Letter::Star(gen % 3)]
                .into_iter()
                .filter(|&l| match l {
                    Letter::Gen(g) => p.base.src(g) == at,
                    Letter::Star(g) => p.base.tgt(g) == at,
                })
                .collect();
            let pick = if candidates.is_empty() {
                continue;
            } else if star && candidates.len() > 1 {
                candidates[1]
            } else {
                candidates[0]
            };
            at = match pick {
                Letter::Gen(g) => p.base.tgt(g),
                Letter::Star(g) => p.base.src(g),
            };
            ws.push(pick);
        }
        let w = Word { at: 0, letters: ws };
        p.word_ok(&w).unwrap();
        let normal = p.reduce(&w);
        let mut k = 0usize;
        let scrambled = p.reduce_with_order(&w, |n| {
            k += 1;
            order.get(k % order.len().max(1)).copied().unwrap_or(0) % n
        });
        prop_assert_eq!(normal, scrambled);
    }

    #[test]
    fn scalar_field_laws(
        a in (-20i64..20, 1i64..9, -20i64..20, 1i64..9),
        b in (-20i64..20, 1i64..9, -20i64..20, 1i64..9),
        c in (-20i64..20, 1i64..9, -20i64..20, 1i64..9),
    ) {
        let x = Scalar::from_parts(a.0, a.1, a.2, a.3);
        let y = Scalar::from_parts(b.0, b.1, b.2, b.3);
        let z = Scalar::from_parts(c.0, c.1, c.2, c.3);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(Scalar::parse(&x.to_string()).unwrap(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn relation_algebra_laws(
        pairs_a in prop::collection::btree_set((0usize..3, 0usize..3), 0..6),
        pairs_b in prop::collection::btree_set((0usize..3, 0usize..3), 0..6),
        pairs_c in prop::collection::btree_set((0usize..3, 0usize..3), 0..6),
    ) {
        use starcat::controlled::Relation;
        let a = Relation { rows: 3, cols: 3, pairs: pairs_a };
        let b = Relation { rows: 3, cols: 3, pairs: pairs_b };
        let c = Relation { rows: 3, cols: 3, pairs: pairs_c };
        // Transpose is involutive and contravariant.
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(
            b.compose(&a).transpose(),
            a.transpose().compose(&b.transpose())
        );
        // Composition is associative and union-compatible on each side.
        prop_assert_eq!(c.compose(&b.compose(&a)), c.compose(&b).compose(&a));
        prop_assert_eq!(
            b.union(&c).compose(&a),
            b.compose(&a).union(&c.compose(&a))
        );
    }
}

#[test]
fn functor_counts_from_point_match_objects() {
    let budget = starcat::bounds::Budget::default();
    for c in corpus::categories() {
        let fs = starcat::star::enumerate_star_functors(
            &MarkedStarCategory::point(),
            &c.cat,
            true,
            &budget,
        )
        .unwrap();
        assert_eq!(fs.len(), c.cat.base().ob_count(), "{}", c.name);
    }
}

#[test]
fn is_equivalence_matches_definitional_search_on_small_corpus() {
    let budget = starcat::bounds::Budget::default();
    let cats = corpus::categories();
    for m in corpus::morphisms() {
        let dom = &cats[m.dom].cat;
        let cod = &cats[m.cod].cat;
        if dom.base().ob_count() > 3
            || cod.base().ob_count() > 3
            || dom.base().mor_count() > 12
            || cod.base().mor_count() > 12
        {
            continue;
        }
        let (characterization, search) =
            starcat::star::weak_equivalence_routes_agree(dom, cod, &m.f, true, &budget).unwrap();
        assert_eq!(characterization, search, "{}", m.name);
    }
}

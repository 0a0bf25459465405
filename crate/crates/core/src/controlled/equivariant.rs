use super::{GCoarseSpace, Relation, VPlus};
use crate::bounds::BoundExceeded;
use crate::equivariant::{fixed_points, GAction};
use crate::fincat::{FinCategory, Functor, RawCategory};
use crate::star::{star_functor_ok, MarkedStarCategory};
use std::collections::BTreeSet;

/// The G-action on V⁺(X) by pushforward: g·(M, φ) = (M, φ∘g⁻¹), identity on
/// the underlying relations.
pub fn vplus_action(v: &VPlus, gx: &GCoarseSpace) -> GAction {
    let n = gx.group.order();
    let on: Vec<Functor> = (0..n)
        .map(|g| {
            let obj: Vec<usize> = v
                .objects
                .iter()
                .map(|o| {
                    let labels: Vec<usize> = o.labels.iter().map(|&l| gx.action[g][l]).collect();
                    v.object_index(&labels).expect("pushforward stays in the universe")
                })
                .collect();
            let mor: Vec<usize> = v
                .cat
                .base()
                .morphisms()
                .map(|m| {
                    v.morphism_index(
                        obj[v.cat.base().src(m)],
                        obj[v.cat.base().tgt(m)],
                        &v.relations[m],
                    )
                    .expect("pushforward preserves control")
                })
                .collect();
            Functor { obj, mor }
        })
        .collect();
    GAction::validate(gx.group.clone(), v.cat.clone(), on)
        .expect("pushforward is a valid action")
}

/// The category of equivariant controlled objects: triples (M, φ, ρ) with ρ
/// a unitary representation by bijection relations satisfying
/// ρ(g)∘φ(gY)∘ρ(g⁻¹) = φ(Y); morphisms are the G-equivariant controlled
/// relations; marked are the G-invariant diag(X)-controlled unitaries.
#[derive(Debug, Clone)]
pub struct EquivariantVPlus {
    pub cat: MarkedStarCategory,
    /// (index of the underlying V⁺ object, ρ per group element).
    pub triples: Vec<(usize, Vec<Relation>)>,
    pub relations: Vec<Relation>,
}

pub fn equivariant_vplus(
    v: &VPlus,
    gx: &GCoarseSpace,
) -> Result<EquivariantVPlus, BoundExceeded> {
    let n = gx.group.order();
    let points = gx.space.points;
    if points > 4 {
        return Err(BoundExceeded { cap: 4, spent: points as u64 });
    }
    let masks = 1usize << points;
    let act_mask = |g: usize, mask: usize| -> usize {
        let mut out = 0usize;
        for x in 0..points {
            if mask & (1 << x) != 0 {
                out |= 1 << gx.action[g][x];
            }
        }
        out
    };
    // Enumerate triples: for each object, all families of bijection graphs.
    let mut triples: Vec<(usize, Vec<Relation>)> = Vec::new();
    for (oi, o) in v.objects.iter().enumerate() {
        // Candidate bijections on the carrier.
        let bijections = all_bijection_graphs(o.carrier);
        let mut families: Vec<Vec<Relation>> = vec![Vec::new()];
        for g in 0..n {
            let mut next = Vec::new();
            for fam in &families {
                if g == gx.group.unit {
                    let mut f = fam.clone();
                    f.push(Relation::identity(o.carrier));
                    next.push(f);
                    continue;
                }
                for b in &bijections {
                    let mut f = fam.clone();
                    f.push(b.clone());
                    next.push(f);
                }
            }
            families = next;
        }
        for rho in families {
            // Representation: ρ(h)∘ρ(g) = ρ(gh) (the group acts trivially on
            // the underlying relations, so the cocycle is a plain product).
            let multiplicative = (0..n).all(|g| {
                (0..n).all(|h| rho[h].compose(&rho[g]) == rho[gx.group.mul(g, h)])
            });
            if !multiplicative {
                continue;
            }
            // ρ(g)∘φ(gY)∘ρ(g⁻¹) = φ(Y) for all g and Y.
            let compatible = (0..n).all(|g| {
                (0..masks).all(|y| {
                    let conj = rho[g]
                        .compose(&o.measure[act_mask(g, y)].compose(&rho[gx.group.inv[g]]));
                    conj == o.measure[y]
                })
            });
            if compatible {
                triples.push((oi, rho));
            }
        }
    }
    // Morphisms: controlled relations intertwining the representations.
    let mut mors: Vec<(usize, usize, Relation)> = Vec::new();
    for (ti, (oi, rho)) in triples.iter().enumerate() {
        for (tj, (oj, rho2)) in triples.iter().enumerate() {
            for m in v.cat.base().morphisms() {
                if v.cat.base().src(m) != *oi || v.cat.base().tgt(m) != *oj {
                    continue;
                }
                let a = &v.relations[m];
                let equivariant =
                    (0..n).all(|g| rho2[g].compose(a) == a.compose(&rho[g]));
                if equivariant {
                    mors.push((ti, tj, a.clone()));
                }
            }
        }
    }
    let index_of = |ti: usize, tj: usize, r: &Relation| {
        mors.iter()
            .position(|(s, t, q)| *s == ti && *t == tj && q == r)
            .expect("equivariant relation")
    };
    let mut compose = Vec::new();
    for (i2, (s2, t2, r2)) in mors.iter().enumerate() {
        for (i1, (s1, t1, r1)) in mors.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            compose.push((i2, i1, index_of(*s1, *t2, &r2.compose(r1))));
        }
    }
    let base = FinCategory::validate(&RawCategory {
        objects: triples.len(),
        morphisms: mors.iter().map(|(s, t, _)| (*s, *t)).collect(),
        identity: triples
            .iter()
            .enumerate()
            .map(|(ti, (oi, _))| {
                index_of(ti, ti, &Relation::identity(v.objects[*oi].carrier))
            })
            .collect(),
        compose,
    })
    .expect("equivariant controlled tables are valid");
    let star = mors.iter().map(|(s, t, r)| index_of(*t, *s, &r.transpose())).collect();
    let marked: BTreeSet<usize> = mors
        .iter()
        .enumerate()
        .filter(|(_, (s, t, r))| {
            r.is_bijection_graph()
                && r.pairs.iter().all(|&(m2, m)| {
                    v.objects[triples[*t].0].labels[m2] == v.objects[triples[*s].0].labels[m]
                })
        })
        .map(|(i, _)| i)
        .collect();
    let cat = MarkedStarCategory::validate(base, star, marked)
        .expect("equivariant controlled star structure is valid");
    Ok(EquivariantVPlus {
        cat,
        triples,
        relations: mors.into_iter().map(|(_, _, r)| r).collect(),
    })
}

fn all_bijection_graphs(n: usize) -> Vec<Relation> {
    // All permutations of 0..n as relation graphs.
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for x in (0..n).filter(|x| !p.contains(x)) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        perms = next;
    }
    perms
        .into_iter()
        .map(|p| Relation {
            rows: n,
            cols: n,
            pairs: p.iter().enumerate().map(|(src, &tgt)| (tgt, src)).collect(),
        })
        .collect()
}

/// The agreement isomorphism between the triple category and the fixed
/// points of the pushforward action on V⁺(X).
pub fn equivariant_vplus_agrees(
    v: &VPlus,
    gx: &GCoarseSpace,
    ev: &EquivariantVPlus,
) -> bool {
    let action = vplus_action(v, gx);
    let fp = fixed_points(&action, true);
    let n = gx.group.order();
    // Objects of the fixed points are (object, ρ̂) with ρ̂(g) a marked
    // morphism id of V⁺; our triples carry the same data as relations.
    let mut obj_map = Vec::with_capacity(ev.triples.len());
    for (oi, rho) in &ev.triples {
        let rho_ids: Vec<usize> = (0..n)
            .map(|g| {
                v.morphism_index(*oi, action.on[g].obj[*oi], &rho[g])
                    .expect("ρ(g) is a controlled morphism")
            })
            .collect();
        let Some(pos) = fp.objects.iter().position(|(b, r)| b == oi && r == &rho_ids) else {
            return false;
        };
        obj_map.push(pos);
    }
    if obj_map.len() != fp.objects.len() {
        return false;
    }
    let distinct: BTreeSet<usize> = obj_map.iter().copied().collect();
    if distinct.len() != obj_map.len() {
        return false;
    }
    // Morphisms.
    let mut mor_map = Vec::with_capacity(ev.relations.len());
    for m in ev.cat.base().morphisms() {
        let (s, t) = (ev.cat.base().src(m), ev.cat.base().tgt(m));
        let underlying = v
            .morphism_index(ev.triples[s].0, ev.triples[t].0, &ev.relations[m])
            .expect("underlying controlled morphism");
        let Some(pos) = fp
            .cat
            .base()
            .morphisms()
            .find(|&fm| {
                fp.cat.base().src(fm) == obj_map[s]
                    && fp.cat.base().tgt(fm) == obj_map[t]
                    && fp.intertwiners[fm] == underlying
            })
        else {
            return false;
        };
        mor_map.push(pos);
    }
    if mor_map.len() != fp.cat.base().mor_count() {
        return false;
    }
    let distinct_m: BTreeSet<usize> = mor_map.iter().copied().collect();
    if distinct_m.len() != mor_map.len() {
        return false;
    }
    let comparison = Functor { obj: obj_map, mor: mor_map };
    star_functor_ok(&ev.cat, &fp.cat, &comparison, true).is_ok()
        && ev
            .cat
            .base()
            .morphisms()
            .all(|m| ev.cat.is_marked(m) == fp.cat.is_marked(comparison.mor[m]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::controlled::build_vplus;
    use crate::equivariant::FinGroup;

    #[test]
    fn trivial_group_reduces_to_vplus() {
        let gx = GCoarseSpace::canonical_on_group(&FinGroup::trivial());
        let v = build_vplus(&gx.space, 1).unwrap();
        let ev = equivariant_vplus(&v, &gx).unwrap();
        assert_eq!(ev.triples.len(), v.objects.len());
        assert!(equivariant_vplus_agrees(&v, &gx, &ev));
    }

    #[test]
    fn z2_coarse_space_agreement_small() {
        let gx = GCoarseSpace::canonical_on_group(&FinGroup::cyclic(2));
        let v = build_vplus(&gx.space, 1).unwrap();
        let ev = equivariant_vplus(&v, &gx).unwrap();
        assert!(equivariant_vplus_agrees(&v, &gx, &ev));
        // Cocycle identity instances: ρ(s)∘φ(s·{x})∘ρ(s⁻¹) = φ({x}).
        for (oi, rho) in &ev.triples {
            let o = &v.objects[*oi];
            for x in 0..gx.space.points {
                let moved = 1usize << gx.action[1][x];
                let conj = rho[1].compose(&o.measure[moved].compose(&rho[1]));
                assert_eq!(conj, o.measure[1 << x]);
            }
        }
    }
}

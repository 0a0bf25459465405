use super::FinCategory;
use crate::bounds::{BoundExceeded, Budget};

/// A functor between two validated categories, stored as dense maps.  The
/// domain and codomain are passed explicitly to every operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctorError {
    #[error("object map has wrong length or out-of-range image")]
    BadObjectMap,
    #[error("morphism {f} has image with wrong endpoints")]
    BadEndpoints { f: usize },
    #[error("identity of object {a} is not sent to an identity")]
    Identity { a: usize },
    #[error("composition not preserved on ({g}, {f})")]
    Composition { g: usize, f: usize },
}

impl Functor {
    pub fn identity(cat: &FinCategory) -> Functor {
        Functor { obj: cat.objects().collect(), mor: cat.morphisms().collect() }
    }

    pub fn validate(&self, dom: &FinCategory, cod: &FinCategory) -> Result<(), FunctorError> {
        if self.obj.len() != dom.ob_count()
            || self.mor.len() != dom.mor_count()
            || self.obj.iter().any(|&b| b >= cod.ob_count())
            || self.mor.iter().any(|&g| g >= cod.mor_count())
        {
            return Err(FunctorError::BadObjectMap);
        }
        for f in dom.morphisms() {
            let img = self.mor[f];
            if cod.src(img) != self.obj[dom.src(f)] || cod.tgt(img) != self.obj[dom.tgt(f)] {
                return Err(FunctorError::BadEndpoints { f });
            }
        }
        for a in dom.objects() {
            if self.mor[dom.id(a)] != cod.id(self.obj[a]) {
                return Err(FunctorError::Identity { a });
            }
        }
        for g in dom.morphisms() {
            for f in dom.morphisms() {
                if let Some(gf) = dom.compose(g, f) {
                    if cod.compose(self.mor[g], self.mor[f]) != Some(self.mor[gf]) {
                        return Err(FunctorError::Composition { g, f });
                    }
                }
            }
        }
        Ok(())
    }

    /// `self ∘ inner` (apply `inner` first).
    pub fn after(&self, inner: &Functor) -> Functor {
        Functor {
            obj: inner.obj.iter().map(|&a| self.obj[a]).collect(),
            mor: inner.mor.iter().map(|&f| self.mor[f]).collect(),
        }
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.obj.iter().all(|&a| seen.insert(a))
    }

    pub fn is_surjective_on_objects(&self, cod: &FinCategory) -> bool {
        let seen: std::collections::BTreeSet<usize> = self.obj.iter().copied().collect();
        seen.len() == cod.ob_count()
    }
}

/// All functors `A → B` in lexicographic order of (object map, morphism map).
///
/// This is the oracle behind every Hom-set bijection check, so it does the
/// dumbest complete thing: backtracking over morphism images in id order with
/// identity images forced and composition checked as soon as all three ids of
/// a composable triple are assigned.
pub fn enumerate_functors(
    dom: &FinCategory,
    cod: &FinCategory,
    budget: &Budget,
) -> Result<Vec<Functor>, BoundExceeded> {
    budget.start_scope();
    if dom.ob_count() == 0 {
        return Ok(vec![Functor { obj: vec![], mor: vec![] }]);
    }
    if cod.ob_count() == 0 {
        return Ok(vec![]);
    }
    // Composition triples indexed by the largest morphism id involved.
    let m = dom.mor_count();
    let mut triples_at: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); m];
    for g in dom.morphisms() {
        for f in dom.morphisms() {
            if let Some(gf) = dom.compose(g, f) {
                triples_at[g.max(f).max(gf)].push((g, f, gf));
            }
        }
    }
    let mut result = Vec::new();
    let mut obj = vec![0usize; dom.ob_count()];
    loop {
        budget.step()?;
        enumerate_mor_maps(dom, cod, &obj, &triples_at, budget, &mut result)?;
        // Advance the object map odometer.
        let mut k = dom.ob_count();
        loop {
            if k == 0 {
                return Ok(result);
            }
            k -= 1;
            obj[k] += 1;
            if obj[k] < cod.ob_count() {
                break;
            }
            obj[k] = 0;
        }
    }
}

fn enumerate_mor_maps(
    dom: &FinCategory,
    cod: &FinCategory,
    obj: &[usize],
    triples_at: &[Vec<(usize, usize, usize)>],
    budget: &Budget,
    out: &mut Vec<Functor>,
) -> Result<(), BoundExceeded> {
    let m = dom.mor_count();
    let mut mor = vec![usize::MAX; m];
    // Identity images are forced by the object map.
    for a in dom.objects() {
        mor[dom.id(a)] = cod.id(obj[a]);
    }
    fn consistent(cod: &FinCategory, mor: &[usize], triples: &[(usize, usize, usize)]) -> bool {
        triples.iter().all(|&(g, f, gf)| cod.compose(mor[g], mor[f]) == Some(mor[gf]))
    }
    fn rec(
        dom: &FinCategory,
        cod: &FinCategory,
        obj: &[usize],
        triples_at: &[Vec<(usize, usize, usize)>],
        mor: &mut Vec<usize>,
        next: usize,
        budget: &Budget,
        out: &mut Vec<Functor>,
    ) -> Result<(), BoundExceeded> {
        let m = dom.mor_count();
        let mut k = next;
        while k < m && mor[k] != usize::MAX {
            // Forced (identity) entry: still verify its triples once reached.
            if !consistent(cod, mor, &triples_at[k]) {
                return Ok(());
            }
            k += 1;
        }
        if k == m {
            out.push(Functor { obj: obj.to_vec(), mor: mor.clone() });
            return Ok(());
        }
        let (s, t) = (obj[dom.src(k)], obj[dom.tgt(k)]);
        for cand in cod.morphisms() {
            if cod.src(cand) != s || cod.tgt(cand) != t {
                continue;
            }
            budget.step()?;
            mor[k] = cand;
            if consistent(cod, mor, &triples_at[k]) {
                rec(dom, cod, obj, triples_at, mor, k + 1, budget, out)?;
            }
            mor[k] = usize::MAX;
        }
        Ok(())
    }
    rec(dom, cod, obj, triples_at, &mut mor, 0, budget, out)
}

use super::MarkedStarCategory;
use crate::fincat::{FinCategory, Functor};
use std::collections::BTreeSet;

/// A presentation of the free (marked) *-category on a finite marked
/// category.  Free *-categories are never materialized: the morphism
/// classifier already has infinitely many words aa*aa*…a.  Everything goes
/// through reduced words and evaluation.
#[derive(Debug, Clone)]
pub struct FreeStarPresentation {
    pub base: FinCategory,
    /// Marked generators; must be invertible in `base` (they are the
    /// distinguished isomorphisms of the generating marked category), and
    /// the relation f* = f⁻¹ is imposed for them.
    pub marked: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("marked generator {f} is not invertible")]
    MarkedNotInvertible { f: usize },
    #[error("assignment is not a functor, or sends a marked generator to an unmarked morphism")]
    IllTypedAssignment,
    #[error("letters {at} and {next} of the word do not compose")]
    IllFormedWord { at: usize, next: usize },
}

/// A word letter: a generator or a starred generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    Gen(usize),
    Star(usize),
}

/// A composable word.  Letters are stored in application order: the word
/// [l₀, l₁, …] denotes … ∘ l₁ ∘ l₀.  The empty word is the identity of
/// `at`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub at: usize,
    pub letters: Vec<Letter>,
}

impl FreeStarPresentation {
    pub fn validate(base: FinCategory, marked: BTreeSet<usize>) -> Result<Self, PresentationError> {
        for &f in &marked {
            if f >= base.mor_count() || !base.is_invertible(f) {
                return Err(PresentationError::MarkedNotInvertible { f });
            }
        }
        Ok(FreeStarPresentation { base, marked })
    }

    fn letter_src(&self, l: Letter) -> usize {
        match l {
            Letter::Gen(g) => self.base.src(g),
            Letter::Star(g) => self.base.tgt(g),
        }
    }

    fn letter_tgt(&self, l: Letter) -> usize {
        match l {
            Letter::Gen(g) => self.base.tgt(g),
            Letter::Star(g) => self.base.src(g),
        }
    }

    pub fn word_src(&self, w: &Word) -> usize {
        w.letters.first().map_or(w.at, |&l| self.letter_src(l))
    }

    pub fn word_tgt(&self, w: &Word) -> usize {
        w.letters.last().map_or(w.at, |&l| self.letter_tgt(l))
    }

    pub fn word_ok(&self, w: &Word) -> Result<(), PresentationError> {
        for (at, pair) in w.letters.windows(2).enumerate() {
            if self.letter_tgt(pair[0]) != self.letter_src(pair[1]) {
                return Err(PresentationError::IllFormedWord { at, next: at + 1 });
            }
        }
        Ok(())
    }

    /// Formal star of a word: reverse and star each letter.
    pub fn star_word(&self, w: &Word) -> Word {
        Word {
            at: self.word_tgt(w),
            letters: w
                .letters
                .iter()
                .rev()
                .map(|&l| match l {
                    Letter::Gen(g) => Letter::Star(g),
                    Letter::Star(g) => Letter::Gen(g),
                })
                .collect(),
        }
    }

    /// One rewriting pass at position `k`; returns true if something fired.
    fn reduce_at(&self, letters: &mut Vec<Letter>, k: usize) -> bool {
        // Starred marked generators become inverses; starred identities and
        // identity letters disappear below.
        if let Letter::Star(g) = letters[k] {
            if self.marked.contains(&g) {
                letters[k] = Letter::Gen(self.base.inverse(g).expect("marked gens invertible"));
                return true;
            }
            if self.base.is_identity(g) {
                letters[k] = Letter::Gen(g);
                return true;
            }
        }
        if let Letter::Gen(g) = letters[k] {
            if self.base.is_identity(g) && letters.len() > 1 {
                letters.remove(k);
                return true;
            }
        }
        if k + 1 < letters.len() {
            match (letters[k], letters[k + 1]) {
                (Letter::Gen(f), Letter::Gen(g)) => {
                    let gf = self.base.compose(g, f).expect("word letters compose");
                    letters[k] = Letter::Gen(gf);
                    letters.remove(k + 1);
                    return true;
                }
                (Letter::Star(f), Letter::Star(g)) => {
                    // …∘ g* ∘ f* = …∘ (f∘g)*.
                    let fg = self.base.compose(f, g).expect("starred letters compose");
                    letters[k] = Letter::Star(fg);
                    letters.remove(k + 1);
                    return true;
                }
                _ => {}
            }
        }
        false
    }

    /// Normal form: alternating unstarred/starred non-identity letters with
    /// no starred marked generator, or the empty word.
    pub fn reduce(&self, w: &Word) -> Word {
        let src0 = self.word_src(w);
        let mut letters = w.letters.clone();
        loop {
            let mut fired = false;
            let mut k = 0;
            while k < letters.len() {
                if self.reduce_at(&mut letters, k) {
                    fired = true;
                } else {
                    k += 1;
                }
            }
            if !fired {
                break;
            }
        }
        if letters.len() == 1 {
            if let Letter::Gen(g) = letters[0] {
                if self.base.is_identity(g) {
                    return Word { at: src0, letters: vec![] };
                }
            }
        }
        Word { at: src0, letters }
    }

    /// Reduce with rule applications in a caller-chosen order; used to
    /// check confluence of the rewriting system.
    pub fn reduce_with_order(&self, w: &Word, mut pick: impl FnMut(usize) -> usize) -> Word {
        let src0 = self.word_src(w);
        let mut letters = w.letters.clone();
        loop {
            let candidates: Vec<usize> = (0..letters.len())
                .filter(|&k| {
                    let mut probe = letters.clone();
                    self.reduce_at(&mut probe, k)
                })
                .collect();
            if candidates.is_empty() {
                break;
            }
            let k = candidates[pick(candidates.len())];
            self.reduce_at(&mut letters, k);
        }
        if letters.len() == 1 {
            if let Letter::Gen(g) = letters[0] {
                if self.base.is_identity(g) {
                    return Word { at: src0, letters: vec![] };
                }
            }
        }
        Word { at: src0, letters }
    }

    /// All reduced words from `src` to `tgt` of length at most `max_len`.
    pub fn enumerate_reduced(&self, src: usize, tgt: usize, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut stack: Vec<Word> = vec![Word { at: src, letters: vec![] }];
        while let Some(w) = stack.pop() {
            if self.word_tgt(&w) == tgt && self.reduce(&w) == w {
                out.push(w.clone());
            }
            if w.letters.len() == max_len {
                continue;
            }
            let from = self.word_tgt(&w);
            for g in self.base.morphisms() {
                for l in [Letter::Gen(g), Letter::Star(g)] {
                    if self.letter_src(l) == from {
                        let mut next = w.clone();
                        next.letters.push(l);
                        if self.reduce(&next) == next {
                            stack.push(next);
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Evaluate a word under an assignment of the generating category into a
/// marked *-category.  The assignment must be a functor of the underlying
/// categories sending marked generators to marked morphisms; this is the
/// counit side of the free/forget adjunction, so the returned evaluation is
/// automatically a *-functor on words.
pub fn free_star_evaluate(
    p: &FreeStarPresentation,
    assignment: &Functor,
    b: &MarkedStarCategory,
    w: &Word,
) -> Result<usize, PresentationError> {
    assignment
        .validate(&p.base, b.base())
        .map_err(|_| PresentationError::IllTypedAssignment)?;
    for &g in &p.marked {
        if !b.is_marked(assignment.mor[g]) {
            return Err(PresentationError::IllTypedAssignment);
        }
    }
    p.word_ok(w)?;
    let mut acc = b.base().id(assignment.obj[p.word_src(w)]);
    for &l in &w.letters {
        let img = match l {
            Letter::Gen(g) => assignment.mor[g],
            Letter::Star(g) => b.star(assignment.mor[g]),
        };
        acc = b.base().compose(img, acc).expect("evaluation stays composable");
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::classifiers::{classifier, ClassifierKind};

    fn walking_arrow_presentation() -> FreeStarPresentation {
        FreeStarPresentation::validate(FinCategory::walking_arrow(), BTreeSet::new()).unwrap()
    }

    #[test]
    fn reduction_normalizes() {
        let p = walking_arrow_presentation();
        // a* a reduces to nothing shorter (a is not marked): stays length 2.
        let w = Word { at: 0, letters: vec![Letter::Gen(2), Letter::Star(2)] };
        assert_eq!(p.reduce(&w), w);
        // id-letters vanish.
        let w2 = Word { at: 0, letters: vec![Letter::Gen(0), Letter::Gen(2), Letter::Gen(1)] };
        assert_eq!(p.reduce(&w2), Word { at: 0, letters: vec![Letter::Gen(2)] });
        // Pure identity word becomes the empty word.
        let w3 = Word { at: 0, letters: vec![Letter::Gen(0), Letter::Star(0)] };
        assert_eq!(p.reduce(&w3), Word { at: 0, letters: vec![] });
    }

    #[test]
    fn marked_generator_star_is_inverse() {
        // Generating category 𝕀 with the crossing morphism marked.
        let i2 = crate::fincat::FinGroupoid::indiscrete(2);
        let p = FreeStarPresentation::validate(i2.cat.clone(), BTreeSet::from([1, 2])).unwrap();
        let w = Word { at: 0, letters: vec![Letter::Star(1)] };
        // (0→1)* = (0→1)⁻¹ = (1→0), then as a lone letter it stays.
        assert_eq!(p.reduce(&w), Word { at: 1, letters: vec![Letter::Gen(2)] });
    }

    #[test]
    fn walking_arrow_words_into_unitary_classifier() {
        // Assignment a ↦ u ∈ 𝟙 evaluates a*a to id₀.
        let p = walking_arrow_presentation();
        let one = classifier(ClassifierKind::Unitary);
        let asg = Functor { obj: vec![0, 1], mor: vec![one.base().id(0), one.base().id(1), 1] };
        let w = Word { at: 0, letters: vec![Letter::Gen(2), Letter::Star(2)] };
        assert_eq!(free_star_evaluate(&p, &asg, &one, &w).unwrap(), one.base().id(0));
        // Evaluation is invariant under reduction.
        let noisy = Word {
            at: 0,
            letters: vec![Letter::Gen(0), Letter::Gen(2), Letter::Star(2), Letter::Gen(2), Letter::Star(1)],
        };
        let reduced = p.reduce(&noisy);
        assert_eq!(
            free_star_evaluate(&p, &asg, &one, &noisy).unwrap(),
            free_star_evaluate(&p, &asg, &one, &reduced).unwrap(),
        );
    }

    #[test]
    fn reduced_words_zero_to_one_alternate() {
        // In Free_*(walking arrow) the morphisms 0 → 1 of length ≤ 5 are
        // a, aa*a, aa*aa*a — the odd-length alternating words.
        let p = walking_arrow_presentation();
        let words = p.enumerate_reduced(0, 1, 5);
        assert_eq!(words.len(), 3);
        for w in &words {
            assert!(w.letters.len() % 2 == 1);
        }
    }

    #[test]
    fn ill_typed_assignment_is_rejected() {
        let i2 = crate::fincat::FinGroupoid::indiscrete(2);
        let p = FreeStarPresentation::validate(i2.cat.clone(), BTreeSet::from([1, 2])).unwrap();
        // Target mi(𝕀): crossing morphisms unmarked, so the marked generator
        // cannot land anywhere except an identity — the identity assignment
        // into mi is ill-typed.
        let mi = MarkedStarCategory::from_groupoid_mi(&i2);
        let asg = Functor { obj: vec![0, 1], mor: vec![0, 1, 2, 3] };
        let w = Word { at: 0, letters: vec![Letter::Gen(1)] };
        assert_eq!(
            free_star_evaluate(&p, &asg, &mi, &w),
            Err(PresentationError::IllTypedAssignment)
        );
    }
}

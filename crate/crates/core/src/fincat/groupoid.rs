use super::{FinCategory, RawCategory};

/// A finite groupoid: a category with a validated inverse table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroupoid {
    pub cat: FinCategory,
    pub inverse: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupoidError {
    #[error("morphism {f} has no two-sided inverse")]
    NotInvertible { f: usize },
    #[error("inverse table disagrees with composition at morphism {f}")]
    BadInverse { f: usize },
}

impl FinGroupoid {
    pub fn validate(cat: FinCategory, inverse: Vec<usize>) -> Result<FinGroupoid, GroupoidError> {
        for f in cat.morphisms() {
            let g = *inverse.get(f).ok_or(GroupoidError::BadInverse { f })?;
            if g >= cat.mor_count()
                || cat.compose(g, f) != Some(cat.id(cat.src(f)))
                || cat.compose(f, g) != Some(cat.id(cat.tgt(f)))
            {
                return Err(GroupoidError::BadInverse { f });
            }
        }
        Ok(FinGroupoid { cat, inverse })
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// Indiscrete groupoid on `n` objects: exactly one morphism between any
    /// ordered pair.  Morphism `a*n + b` points `a → b`.
    pub fn indiscrete(n: usize) -> FinGroupoid {
        let mid = |a: usize, b: usize| a * n + b;
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    compose.push((mid(b, c), mid(a, b), mid(a, c)));
                }
            }
        }
        let cat = FinCategory::validate(&RawCategory {
            objects: n,
            morphisms: (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect(),
            identity: (0..n).map(|a| mid(a, a)).collect(),
            compose,
        })
        .expect("indiscrete groupoid is valid");
        let inverse = (0..n).flat_map(|a| (0..n).map(move |b| mid(b, a))).collect();
        FinGroupoid::validate(cat, inverse).expect("indiscrete inverses are valid")
    }

    /// Discrete groupoid (identities only).
    pub fn discrete(n: usize) -> FinGroupoid {
        let cat = FinCategory::discrete(n);
        let inverse = cat.morphisms().collect();
        FinGroupoid::validate(cat, inverse).expect("discrete groupoid is valid")
    }

    /// One-object groupoid from a group multiplication table:
    /// `mult[g][h] = g·h`, morphism `g∘h` is the composite "apply h, then g",
    /// matching `mult[g][h]`.
    pub fn from_group_table(mult: &[Vec<usize>], unit: usize) -> FinGroupoid {
        let n = mult.len();
        let mut compose = Vec::new();
        for g in 0..n {
            for h in 0..n {
                compose.push((g, h, mult[g][h]));
            }
        }
        let cat = FinCategory::validate(&RawCategory {
            objects: 1,
            morphisms: vec![(0, 0); n],
            identity: vec![unit],
            compose,
        })
        .expect("group table gives a valid one-object category");
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| mult[g][h] == unit && mult[h][g] == unit).expect("group inverse"))
            .collect();
        FinGroupoid::validate(cat, inverse).expect("group inverses are valid")
    }
}

/// Upgrade a category to a groupoid by computing inverses, if possible.
pub fn as_groupoid(cat: &FinCategory) -> Result<FinGroupoid, GroupoidError> {
    let inverse: Result<Vec<usize>, GroupoidError> = cat
        .morphisms()
        .map(|f| cat.inverse(f).ok_or(GroupoidError::NotInvertible { f }))
        .collect();
    FinGroupoid::validate(cat.clone(), inverse?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indiscrete_two_has_four_morphisms() {
        let i = FinGroupoid::indiscrete(2);
        assert_eq!(i.cat.ob_count(), 2);
        assert_eq!(i.cat.mor_count(), 4);
        for f in i.cat.morphisms() {
            assert!(i.cat.is_invertible(f));
        }
    }

    #[test]
    fn z2_as_one_object_groupoid() {
        let z2 = FinGroupoid::from_group_table(&[vec![0, 1], vec![1, 0]], 0);
        assert_eq!(z2.cat.mor_count(), 2);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn walking_arrow_is_not_a_groupoid() {
        assert!(as_groupoid(&FinCategory::walking_arrow()).is_err());
    }
}

use super::{FinGroup, GAction};
use crate::fincat::{FinGroupoid, Functor};
use crate::star::MarkedStarCategory;

/// The resolution groupoid G̃: objects are the group elements, exactly one
/// morphism between any two, with G acting by left multiplication.
#[derive(Debug, Clone)]
pub struct GTilde {
    pub group: FinGroup,
    pub groupoid: FinGroupoid,
    /// The left-multiplication action, one automorphism per group element.
    pub action: Vec<Functor>,
}

impl GTilde {
    /// Morphism id of g → h.
    pub fn arrow(&self, g: usize, h: usize) -> usize {
        g * self.group.order() + h
    }

    /// Endpoints of a morphism id.
    pub fn ends(&self, m: usize) -> (usize, usize) {
        (m / self.group.order(), m % self.group.order())
    }

    /// G̃ as a marked *-category (star = inverse, everything marked: all
    /// morphisms of a groupoid are unitary for g* = g⁻¹, and in the marked
    /// world the resolution needs them marked).
    pub fn as_marked_star(&self) -> MarkedStarCategory {
        MarkedStarCategory::from_groupoid_ma(&self.groupoid)
    }

    /// The action as a GAction on the marked *-category model.
    pub fn as_g_action(&self) -> GAction {
        GAction::validate(self.group.clone(), self.as_marked_star(), self.action.clone())
            .expect("left multiplication is a valid action")
    }
}

pub fn build_gtilde(group: &FinGroup) -> GTilde {
    let n = group.order();
    let groupoid = FinGroupoid::indiscrete(n);
    let action = (0..n)
        .map(|k| Functor {
            obj: (0..n).map(|g| group.mul(k, g)).collect(),
            mor: (0..n * n)
                .map(|m| {
                    let (g, h) = (m / n, m % n);
                    group.mul(k, g) * n + group.mul(k, h)
                })
                .collect(),
        })
        .collect();
    GTilde { group: group.clone(), groupoid, action }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_gives_point() {
        let gt = build_gtilde(&FinGroup::trivial());
        assert_eq!(gt.groupoid.cat.ob_count(), 1);
        assert_eq!(gt.groupoid.cat.mor_count(), 1);
    }

    #[test]
    fn z2_gives_swap_on_indiscrete() {
        let gt = build_gtilde(&FinGroup::cyclic(2));
        assert_eq!(gt.groupoid.cat.mor_count(), 4);
        assert_eq!(gt.action[1].obj, vec![1, 0]);
        // The action is by valid automorphisms.
        gt.as_g_action();
    }

    #[test]
    fn morphism_count_is_order_squared() {
        for n in 1..4 {
            let gt = build_gtilde(&FinGroup::cyclic(n));
            assert_eq!(gt.groupoid.cat.mor_count(), n * n);
        }
    }
}

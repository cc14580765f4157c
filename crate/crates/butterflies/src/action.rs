//! Right actions of one finite group on another by automorphisms.
//!
//! An action table stores `alpha^g` for every point `alpha` of the space and
//! every `g` of the acting group, so evaluation is a single lookup.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, IDENTITY};
use crate::hom::GroupHom;

#[derive(Clone, PartialEq, Eq)]
pub struct RightAction {
    group: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    table: Vec<usize>, // space.order x group.order, row-major over the space
}

impl std::fmt::Debug for RightAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RightAction({} on {})",
            self.group.order(),
            self.space.order()
        )
    }
}

impl RightAction {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    /// `alpha^g`.
    #[inline]
    pub fn apply(&self, alpha: usize, g: usize) -> usize {
        self.table[alpha * self.group.order() + g]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.space
            .elements()
            .map(|alpha| self.group.elements().map(|g| self.apply(alpha, g)).collect())
            .collect()
    }

    pub fn trivial(group: &Arc<FiniteGroup>, space: &Arc<FiniteGroup>) -> RightAction {
        let table = space
            .elements()
            .flat_map(|alpha| std::iter::repeat(alpha).take(group.order()))
            .collect();
        RightAction {
            group: group.clone(),
            space: space.clone(),
            table,
        }
    }

    /// Conjugation of a group on itself: `g^a = a^-1 g a`.
    pub fn conjugation(group: &Arc<FiniteGroup>) -> RightAction {
        let mut table = vec![0; group.order() * group.order()];
        for g in group.elements() {
            for a in group.elements() {
                table[g * group.order() + a] = group.conj(g, a);
            }
        }
        RightAction {
            group: group.clone(),
            space: group.clone(),
            table,
        }
    }

    /// Pulls the action back along a homomorphism into the acting group.
    pub fn via_hom(&self, f: &GroupHom) -> RightAction {
        assert_eq!(f.codomain(), &self.group);
        let k = f.domain();
        let mut table = vec![0; self.space.order() * k.order()];
        for alpha in self.space.elements() {
            for g in k.elements() {
                table[alpha * k.order() + g] = self.apply(alpha, f.apply(g));
            }
        }
        RightAction {
            group: k.clone(),
            space: self.space.clone(),
            table,
        }
    }

    /// Action from an explicit list of automorphism permutations, one per
    /// acting element, composed as `alpha^(g*h) = (alpha^g)^h`.
    pub fn from_automorphisms(
        group: &Arc<FiniteGroup>,
        space: &Arc<FiniteGroup>,
        autos: &[Vec<usize>],
    ) -> Result<RightAction> {
        assert_eq!(autos.len(), group.order());
        let mut table = vec![0; space.order() * group.order()];
        for alpha in space.elements() {
            for g in group.elements() {
                table[alpha * group.order() + g] = autos[g][alpha];
            }
        }
        let action = RightAction {
            group: group.clone(),
            space: space.clone(),
            table,
        };
        action.validate()?;
        Ok(action)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let n = self.group.order();
        let m = self.space.order();
        if self.table.len() != n * m {
            return Err(Error::MalformedAction);
        }
        if self.table.iter().any(|&v| v >= m) {
            return Err(Error::MalformedAction);
        }
        for alpha in self.space.elements() {
            if self.apply(alpha, IDENTITY) != alpha {
                return Err(Error::ActionIdentityFails { alpha });
            }
        }
        for alpha in self.space.elements() {
            for g in self.group.elements() {
                for h in self.group.elements() {
                    if self.apply(self.apply(alpha, g), h) != self.apply(alpha, self.group.mul(g, h)) {
                        return Err(Error::ActionCompatFails { alpha, g, h });
                    }
                }
            }
        }
        for g in self.group.elements() {
            for alpha in self.space.elements() {
                for beta in self.space.elements() {
                    let lhs = self.apply(self.space.mul(alpha, beta), g);
                    let rhs = self.space.mul(self.apply(alpha, g), self.apply(beta, g));
                    if lhs != rhs {
                        return Err(Error::ActionNotAutomorphism { g, alpha, beta });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates a raw action table.
pub fn make_action(
    group: &Arc<FiniteGroup>,
    space: &Arc<FiniteGroup>,
    rows: Vec<Vec<usize>>,
) -> Result<RightAction> {
    if rows.len() != space.order() || rows.iter().any(|r| r.len() != group.order()) {
        return Err(Error::MalformedAction);
    }
    let table = rows.into_iter().flatten().collect();
    let action = RightAction {
        group: group.clone(),
        space: space.clone(),
        table,
    };
    action.validate()?;
    Ok(action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_action_on_s3_validates() {
        let s3 = FiniteGroup::symmetric_3();
        let act = RightAction::conjugation(&s3);
        act.validate().unwrap();
        // conjugation by the identity fixes everything
        for g in s3.elements() {
            assert_eq!(act.apply(g, 0), g);
        }
    }

    #[test]
    fn inversion_action_of_z2_on_z3() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let act = make_action(&z2, &z3, vec![vec![0, 0], vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(act.apply(1, 1), 2);
    }

    #[test]
    fn rejects_non_action() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        // "action" by the non-automorphism x -> x+1
        let err = make_action(&z2, &z4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]])
            .unwrap_err();
        assert!(matches!(
            err,
            Error::ActionNotAutomorphism { .. } | Error::ActionCompatFails { .. }
        ));
    }
}

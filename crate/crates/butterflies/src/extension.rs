//! Short exact sequences `1 -> N -> E -> Gamma -> 1` with distinguished
//! injection and projection, and the outer action they induce.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, IDENTITY};
use crate::hom::{quotient_by_normal, GroupHom};

#[derive(Clone, Debug, PartialEq)]
pub struct Extension {
    pub n: Arc<FiniteGroup>,
    pub e: Arc<FiniteGroup>,
    pub gamma: Arc<FiniteGroup>,
    pub incl: GroupHom,
    pub proj: GroupHom,
}

impl Extension {
    /// A canonical transversal: for each element of Gamma, the smallest
    /// preimage under the projection.
    pub fn transversal(&self) -> Vec<usize> {
        self.gamma
            .elements()
            .map(|c| {
                self.e
                    .elements()
                    .find(|&x| self.proj.apply(x) == c)
                    .expect("projection is surjective")
            })
            .collect()
    }

    /// The conjugation automorphism of N induced by an element of E:
    /// `n -> incl^-1(x^-1 incl(n) x)`.
    pub fn conj_on_n(&self, x: usize) -> Vec<usize> {
        let incl_img = self.incl.image_array();
        self.n
            .elements()
            .map(|n| {
                let moved = self.e.conj(incl_img[n], x);
                incl_img
                    .iter()
                    .position(|&v| v == moved)
                    .expect("N is normal in E")
            })
            .collect()
    }

    /// The outer action `psi: Gamma -> Out(N)` as indices into the cosets of
    /// inner automorphisms, together with the groups involved. Returns
    /// `(out_group, psi_image, aut_group, aut_perms)`.
    pub fn outer_action(&self) -> Result<(Arc<FiniteGroup>, Vec<usize>, Arc<FiniteGroup>, Vec<Vec<usize>>)> {
        let (aut, perms) = self.n.automorphisms();
        let index_of = |perm: &[usize]| -> usize {
            perms
                .binary_search_by(|probe| probe.as_slice().cmp(perm))
                .expect("conjugation by a normalizing element is an automorphism")
        };
        let inner: Vec<usize> = {
            let mut v: Vec<usize> = self
                .n
                .elements()
                .map(|n| {
                    let perm: Vec<usize> =
                        self.n.elements().map(|m| self.n.conj(m, n)).collect();
                    index_of(&perm)
                })
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let (out, out_proj, _) = quotient_by_normal(&aut, &inner)?;
        let transversal = self.transversal();
        let psi: Vec<usize> = transversal
            .iter()
            .map(|&x| out_proj.apply(index_of(&self.conj_on_n(x))))
            .collect();
        Ok((out, psi, aut, perms))
    }
}

/// Validates the data of a short exact sequence.
pub fn make_extension(
    n: &Arc<FiniteGroup>,
    e: &Arc<FiniteGroup>,
    gamma: &Arc<FiniteGroup>,
    incl: GroupHom,
    proj: GroupHom,
) -> Result<Extension> {
    if incl.domain() != n || incl.codomain() != e || proj.domain() != e || proj.codomain() != gamma
    {
        return Err(Error::NotExtension {
            reason: "maps do not connect N -> E -> Gamma".into(),
        });
    }
    if !incl.is_injective() {
        return Err(Error::NotExtension {
            reason: "inclusion is not injective".into(),
        });
    }
    if !proj.is_surjective() {
        return Err(Error::NotExtension {
            reason: "projection is not surjective".into(),
        });
    }
    if proj.kernel() != incl.image_subgroup() {
        return Err(Error::NotExtension {
            reason: "kernel of the projection differs from the image of the inclusion".into(),
        });
    }
    Ok(Extension {
        n: n.clone(),
        e: e.clone(),
        gamma: gamma.clone(),
        incl,
        proj,
    })
}

/// Isomorphism of extensions inducing the identity on both N and Gamma.
pub fn extension_isomorphism(a: &Extension, b: &Extension) -> Option<GroupHom> {
    if a.n != b.n || a.gamma != b.gamma || a.e.order() != b.e.order() {
        return None;
    }
    let constraints: Vec<(usize, usize)> = a
        .n
        .elements()
        .map(|n| (a.incl.apply(n), b.incl.apply(n)))
        .collect();
    let allowed: Vec<Vec<usize>> = a
        .e
        .elements()
        .map(|x| {
            let c = a.proj.apply(x);
            b.e.elements().filter(|&y| b.proj.apply(y) == c).collect()
        })
        .collect();
    crate::hom::constrained_isomorphism_search(&a.e, &b.e, &constraints, Some(&allowed))
}

/// The split extension `N ⋊ Gamma` for a right action of Gamma on N.
pub fn split_extension(
    gamma: &Arc<FiniteGroup>,
    n: &Arc<FiniteGroup>,
    act: &crate::action::RightAction,
) -> Result<Extension> {
    let e = crate::semidirect::outer_semidirect(gamma, n, act)?;
    let incl = crate::hom::make_hom(
        n,
        &e,
        n.elements().map(|x| IDENTITY * n.order() + x).collect(),
    )?;
    let proj = crate::hom::make_hom(&e, gamma, e.elements().map(|x| x / n.order()).collect())?;
    make_extension(n, &e, gamma, incl, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::RightAction;
    use crate::hom::make_hom;

    #[test]
    fn z4_over_z2_is_an_extension() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let incl = make_hom(&z2, &z4, vec![0, 2]).unwrap();
        let proj = make_hom(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let ext = make_extension(&z2, &z4, &z2, incl, proj).unwrap();
        assert_eq!(ext.transversal(), vec![0, 1]);
    }

    #[test]
    fn rejects_non_exact_data() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let incl = make_hom(&z2, &z4, vec![0, 2]).unwrap();
        let proj = crate::hom::GroupHom::trivial(&z4, &z2);
        let err = make_extension(&z2, &z4, &z2, incl, proj).unwrap_err();
        assert!(matches!(err, Error::NotExtension { .. }));
    }

    #[test]
    fn outer_action_of_s3_over_z2() {
        // 1 -> Z/3 -> S3 -> Z/2 -> 1 has psi = inversion
        let s3 = FiniteGroup::symmetric_3();
        let z3 = FiniteGroup::cyclic(3);
        let z2 = FiniteGroup::cyclic(2);
        let three_cycles: Vec<usize> = s3
            .elements()
            .filter(|&g| g == 0 || s3.element_order(g) == 3)
            .collect();
        let (sub, _incl_raw) = crate::hom::subgroup_group(&s3, &three_cycles).unwrap();
        let iso = crate::hom::isomorphism_search(&z3, &sub, &[]).unwrap();
        let incl = make_hom(
            &z3,
            &s3,
            z3.elements().map(|x| three_cycles[iso.apply(x)]).collect(),
        )
        .unwrap();
        let (_, proj, _) = quotient_by_normal(&s3, &three_cycles).unwrap();
        let ext = make_extension(&z3, &s3, &z2, incl, proj).unwrap();
        let (out, psi, _, _) = ext.outer_action().unwrap();
        assert_eq!(out.order(), 2); // Out(Z/3) = Z/2
        assert_eq!(psi[0], 0);
        assert_ne!(psi[1], 0); // conjugation by a transposition inverts
    }

    #[test]
    fn split_extension_of_z3_by_z2_inversion_is_s3() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let inv =
            crate::action::make_action(&z2, &z3, vec![vec![0, 0], vec![1, 2], vec![2, 1]]).unwrap();
        let ext = split_extension(&z2, &z3, &inv).unwrap();
        assert!(ext.e.is_isomorphic(&FiniteGroup::symmetric_3()));
        let trivial = RightAction::trivial(&z2, &z3);
        let ext2 = split_extension(&z2, &z3, &trivial).unwrap();
        assert!(ext2.e.is_isomorphic(&FiniteGroup::cyclic(6)));
        assert!(extension_isomorphism(&ext, &ext2).is_none());
        assert!(extension_isomorphism(&ext, &ext).is_some());
    }
}

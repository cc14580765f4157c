//! Group homomorphisms as total image arrays, quotients by normal subgroups,
//! subgroup embeddings, and deterministic (iso)morphism searches.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{make_group_table, FiniteGroup, IDENTITY};

/// A validated homomorphism between two table groups.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.domain.order(),
            self.codomain.order(),
            self.image
        )
    }
}

impl GroupHom {
    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image_array(&self) -> &[usize] {
        &self.image
    }

    /// Sorted kernel elements.
    pub fn kernel(&self) -> Vec<usize> {
        self.domain
            .elements()
            .filter(|&g| self.image[g] == IDENTITY)
            .collect()
    }

    /// Sorted image elements.
    pub fn image_subgroup(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.image.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image_subgroup().len() == self.codomain.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_trivial(&self) -> bool {
        self.image.iter().all(|&v| v == IDENTITY)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupHom) -> GroupHom {
        assert_eq!(
            self.codomain, next.domain,
            "composition requires matching middle group"
        );
        GroupHom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            image: self.image.iter().map(|&g| next.apply(g)).collect(),
        }
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse_hom(&self) -> GroupHom {
        assert!(self.is_bijective());
        let mut image = vec![0; self.codomain.order()];
        for g in self.domain.elements() {
            image[self.image[g]] = g;
        }
        GroupHom {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            image,
        }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            image: g.elements().collect(),
        }
    }

    pub fn trivial(domain: &Arc<FiniteGroup>, codomain: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            image: vec![IDENTITY; domain.order()],
        }
    }
}

/// Validates an image array as a homomorphism.
pub fn make_hom(
    domain: &Arc<FiniteGroup>,
    codomain: &Arc<FiniteGroup>,
    image: Vec<usize>,
) -> Result<GroupHom> {
    if image.len() != domain.order() {
        return Err(Error::HomLengthMismatch {
            got: image.len(),
            expected: domain.order(),
        });
    }
    if let Some(&v) = image.iter().find(|&&v| v >= codomain.order()) {
        return Err(Error::HomOutOfRange { value: v });
    }
    for g in domain.elements() {
        for h in domain.elements() {
            if image[domain.mul(g, h)] != codomain.mul(image[g], image[h]) {
                return Err(Error::NotHomomorphism { g, h });
            }
        }
    }
    Ok(GroupHom {
        domain: domain.clone(),
        codomain: codomain.clone(),
        image,
    })
}

/// Quotient of `g` by a normal subgroup, with canonical coset labels: each
/// coset is named after its minimal element, and cosets are sorted by that
/// label (so the identity coset is 0). Returns the quotient, the projection,
/// and the section picking the minimal representative of each coset.
pub fn quotient_by_normal(
    g: &Arc<FiniteGroup>,
    normal: &[usize],
) -> Result<(Arc<FiniteGroup>, GroupHom, Vec<usize>)> {
    g.is_normal_subgroup(normal)?;
    let n = g.order();
    let mut coset_min = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in g.elements() {
        if coset_min[x] != usize::MAX {
            continue;
        }
        // right coset N*x; by normality this equals x*N
        let members: Vec<usize> = normal.iter().map(|&m| g.mul(m, x)).collect();
        let min = *members.iter().min().unwrap();
        for &y in &members {
            coset_min[y] = min;
        }
        reps.push(min);
    }
    reps.sort_unstable();
    let index_of = |rep: usize| reps.binary_search(&rep).unwrap();
    let q = reps.len();
    let mut table = vec![0usize; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = index_of(coset_min[g.mul(a, b)]);
        }
    }
    let quotient = Arc::new(make_group_table(table)?);
    let proj = GroupHom {
        domain: g.clone(),
        codomain: quotient.clone(),
        image: g.elements().map(|x| index_of(coset_min[x])).collect(),
    };
    debug_assert!(proj.is_surjective());
    debug_assert_eq!(proj.kernel(), normal);
    Ok((quotient, proj, reps))
}

/// A sorted subgroup as a group in its own right, together with the inclusion.
/// Element 0 of the result is the identity because subgroups contain index 0.
pub fn subgroup_group(g: &Arc<FiniteGroup>, elems: &[usize]) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    g.is_subgroup(elems)?;
    let k = elems.len();
    let index_of = |x: usize| elems.binary_search(&x).unwrap();
    let mut table = vec![0usize; k * k];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            table[i * k + j] = index_of(g.mul(a, b));
        }
    }
    let sub = Arc::new(make_group_table(table)?);
    let incl = GroupHom {
        domain: sub.clone(),
        codomain: g.clone(),
        image: elems.to_vec(),
    };
    Ok((sub, incl))
}

/// Deterministic isomorphism search with optional point constraints.
///
/// Returns the first bijective homomorphism found in lexicographic
/// generator-image order, or `None`. Prunes by element-order profile and
/// center order before searching.
pub fn isomorphism_search(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    constraints: &[(usize, usize)],
) -> Option<GroupHom> {
    constrained_isomorphism_search(g, h, constraints, None)
}

/// Isomorphism search where each element may also be restricted to a set of
/// allowed images (`allowed[g]` sorted). Used for extension and butterfly
/// isomorphisms, where fibers over a common base pin most of the map down.
pub fn constrained_isomorphism_search(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    constraints: &[(usize, usize)],
    allowed: Option<&[Vec<usize>]>,
) -> Option<GroupHom> {
    if g.order() != h.order() {
        return None;
    }
    if allowed.is_none() {
        if g.order_profile() != h.order_profile() {
            return None;
        }
        if g.center().len() != h.center().len() {
            return None;
        }
    }
    let mut image = vec![usize::MAX; g.order()];
    image[IDENTITY] = IDENTITY;
    for &(x, y) in constraints {
        if !crate::group::extend_partial_map(g, h, &mut image, x, y) {
            return None;
        }
    }
    if !respects_allowed(&image, allowed) {
        return None;
    }
    search_bijective(g, h, &mut image, allowed).map(|img| GroupHom {
        domain: g.clone(),
        codomain: h.clone(),
        image: img,
    })
}

fn respects_allowed(image: &[usize], allowed: Option<&[Vec<usize>]>) -> bool {
    let Some(allowed) = allowed else { return true };
    image
        .iter()
        .enumerate()
        .all(|(x, &v)| v == usize::MAX || allowed[x].binary_search(&v).is_ok())
}

fn search_bijective(
    g: &FiniteGroup,
    h: &FiniteGroup,
    image: &mut Vec<usize>,
    allowed: Option<&[Vec<usize>]>,
) -> Option<Vec<usize>> {
    // next unassigned element, smallest first
    let Some(x) = g.elements().find(|&x| image[x] == usize::MAX) else {
        // total map: multiplicative by closure, check bijectivity
        let mut hit = vec![false; image.len()];
        for &v in image.iter() {
            if hit[v] {
                return None;
            }
            hit[v] = true;
        }
        return Some(image.clone());
    };
    let used: Vec<bool> = {
        let mut used = vec![false; h.order()];
        for &v in image.iter() {
            if v != usize::MAX {
                used[v] = true;
            }
        }
        used
    };
    let order = g.element_order(x);
    for cand in h.elements() {
        if used[cand] || h.element_order(cand) != order {
            continue;
        }
        if let Some(allowed) = allowed {
            if allowed[x].binary_search(&cand).is_err() {
                continue;
            }
        }
        let saved = image.clone();
        if crate::group::extend_partial_map(g, h, image, x, cand) && respects_allowed(image, allowed)
        {
            if let Some(found) = search_bijective(g, h, image, allowed) {
                return Some(found);
            }
        }
        *image = saved;
    }
    None
}

/// Deterministic search for a homomorphism (not necessarily bijective) with
/// point constraints and per-element allowed image sets.
pub fn constrained_hom_search(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    constraints: &[(usize, usize)],
    allowed: Option<&[Vec<usize>]>,
) -> Option<GroupHom> {
    let mut image = vec![usize::MAX; g.order()];
    image[IDENTITY] = IDENTITY;
    for &(x, y) in constraints {
        if !crate::group::extend_partial_map(g, h, &mut image, x, y) {
            return None;
        }
    }
    if !respects_allowed(&image, allowed) {
        return None;
    }
    search_hom(g, h, &mut image, allowed).map(|img| GroupHom {
        domain: g.clone(),
        codomain: h.clone(),
        image: img,
    })
}

fn search_hom(
    g: &FiniteGroup,
    h: &FiniteGroup,
    image: &mut Vec<usize>,
    allowed: Option<&[Vec<usize>]>,
) -> Option<Vec<usize>> {
    let Some(x) = g.elements().find(|&x| image[x] == usize::MAX) else {
        return Some(image.clone());
    };
    let order = g.element_order(x);
    for cand in h.elements() {
        // image order must divide the element order
        if order % h.element_order(cand) != 0 {
            continue;
        }
        if let Some(allowed) = allowed {
            if allowed[x].binary_search(&cand).is_err() {
                continue;
            }
        }
        let saved = image.clone();
        if crate::group::extend_partial_map(g, h, image, x, cand) && respects_allowed(image, allowed)
        {
            if let Some(found) = search_hom(g, h, image, allowed) {
                return Some(found);
            }
        }
        *image = saved;
    }
    None
}

/// All homomorphisms `g -> h`, in deterministic order. Exponential worst
/// case; intended for the small groups this crate works with.
pub fn all_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Vec<GroupHom> {
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; g.order()];
    image[IDENTITY] = IDENTITY;
    collect_homs(g, h, &mut image, &mut out);
    out.sort_by(|a, b| a.image.cmp(&b.image));
    out.dedup_by(|a, b| a.image == b.image);
    out.into_iter()
        .map(|raw| GroupHom {
            domain: g.clone(),
            codomain: h.clone(),
            image: raw.image,
        })
        .collect()
}

fn collect_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, image: &mut Vec<usize>, out: &mut Vec<GroupHom>) {
    let Some(x) = g.elements().find(|&x| image[x] == usize::MAX) else {
        out.push(GroupHom {
            domain: g.clone(),
            codomain: h.clone(),
            image: image.clone(),
        });
        return;
    };
    let order = g.element_order(x);
    for cand in h.elements() {
        if order % h.element_order(cand) != 0 {
            continue;
        }
        let saved = image.clone();
        if crate::group::extend_partial_map(g, h, image, x, cand) {
            collect_homs(g, h, image, out);
        }
        *image = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Arc<FiniteGroup> {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn identity_hom_on_z4_is_bijective() {
        let z4 = z(4);
        let hom = make_hom(&z4, &z4, vec![0, 1, 2, 3]).unwrap();
        assert!(hom.is_bijective());
    }

    #[test]
    fn reduction_z4_to_z2() {
        let z4 = z(4);
        let z2 = z(2);
        let hom = make_hom(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert!(hom.is_surjective());
        assert_eq!(hom.kernel(), vec![0, 2]);
    }

    #[test]
    fn rejects_non_homomorphism() {
        let z4 = z(4);
        let z3 = z(3);
        let err = make_hom(&z4, &z3, vec![0, 1, 2, 0]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { .. }));
    }

    #[test]
    fn quotient_z4_by_two_torsion() {
        let z4 = z(4);
        let (q, proj, reps) = quotient_by_normal(&z4, &[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.apply(1), 1); // coset of 1 is labeled by min element 1
        assert_eq!(reps, vec![0, 1]);
        // projection of the minimal representative is the identity on cosets
        for (i, &rep) in reps.iter().enumerate() {
            assert_eq!(proj.apply(rep), i);
        }
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let s3 = FiniteGroup::symmetric_3();
        let (q, proj, _) = quotient_by_normal(&s3, &[0]).unwrap();
        assert_eq!(q.order(), 6);
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_s3_by_a3() {
        // independent oracle: partition S3 into cosets of the 3-cycle
        // subgroup by scanning the table, then compare orders
        let s3 = FiniteGroup::symmetric_3();
        let three_cycles: Vec<usize> = s3
            .elements()
            .filter(|&g| g == 0 || s3.element_order(g) == 3)
            .collect();
        assert_eq!(three_cycles.len(), 3);
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; 6];
        for x in s3.elements() {
            if assigned[x] {
                continue;
            }
            let mut coset: Vec<usize> = three_cycles.iter().map(|&m| s3.mul(m, x)).collect();
            coset.sort_unstable();
            for &y in &coset {
                assigned[y] = true;
            }
            cosets.push(coset);
        }
        assert_eq!(cosets.len(), 2);
        let (q, proj, _) = quotient_by_normal(&s3, &three_cycles).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), three_cycles);
    }

    #[test]
    fn rejects_non_normal_subgroup() {
        let s3 = FiniteGroup::symmetric_3();
        let transposition = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let sub = s3.subgroup_closure(&[transposition]);
        assert_eq!(sub.len(), 2);
        let err = quotient_by_normal(&s3, &sub).unwrap_err();
        assert!(matches!(err, Error::NotNormal { .. }));
    }

    #[test]
    fn isomorphism_search_through_small_cases() {
        let z4 = z(4);
        let found = isomorphism_search(&z4, &z4, &[]).unwrap();
        assert_eq!(found.image_array(), &[0, 1, 2, 3]); // identity comes first
        let klein = FiniteGroup::direct_product(&z(2), &z(2)).unwrap();
        assert!(isomorphism_search(&z4, &klein, &[]).is_none());
        assert!(isomorphism_search(&z(6), &FiniteGroup::symmetric_3(), &[]).is_none());
        assert!(isomorphism_search(&z(6), &FiniteGroup::direct_product(&z(2), &z(3)).unwrap(), &[]).is_some());
    }

    #[test]
    fn hom_counts_between_cyclic_groups() {
        // |Hom(Z/n, Z/m)| = gcd(n, m)
        for (n, m, want) in [(4, 2, 2), (4, 3, 1), (6, 4, 2), (6, 3, 3)] {
            assert_eq!(all_homs(&z(n), &z(m)).len(), want, "Hom(Z/{n}, Z/{m})");
        }
    }

    #[test]
    fn subgroup_group_of_kernel() {
        let z4 = z(4);
        let z2 = z(2);
        let hom = make_hom(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let (sub, incl) = subgroup_group(&z4, &hom.kernel()).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(incl.apply(1), 2);
    }
}

//! Exact finite groups given by multiplication tables.
//!
//! Elements are dense indices `0..n-1` with `0` always the identity. All maps
//! between groups are total arrays of indices, so every computation is exact,
//! hashable and deterministic. Groups above [`size_limit`] are rejected; the
//! limit exists because every constructor re-validates the full set of group
//! axioms, which is only sensible at desk scale.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const IDENTITY: usize = 0;

static SIZE_LIMIT: AtomicUsize = AtomicUsize::new(4096);

/// Current bound on the order of any constructed group.
pub fn size_limit() -> usize {
    SIZE_LIMIT.load(Ordering::Relaxed)
}

/// Raise or lower the bound on constructed group orders. Applies process-wide.
pub fn set_size_limit(limit: usize) {
    SIZE_LIMIT.store(limit, Ordering::Relaxed);
}

pub(crate) fn check_size(order: usize) -> Result<()> {
    let limit = size_limit();
    if order > limit {
        Err(Error::SizeLimit { order, limit })
    } else {
        Ok(())
    }
}

/// A finite group as a validated multiplication table.
///
/// Invariants established at construction: the table is associative, row and
/// column 0 are identities, every row and column is a permutation, and
/// `inverse[g]` is the unique `h` with `g*h = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `by^-1 * g * by`.
    #[inline]
    pub fn conj(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), g), by)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Product of a slice of elements, left to right; empty product is 1.
    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(IDENTITY, |acc, &g| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != IDENTITY {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// Multiset of element orders, as `order -> count`. Isomorphism invariant.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for g in self.elements() {
            *profile.entry(self.element_order(g)).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_abelian(&self) -> bool {
        for a in self.elements() {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Elements commuting with every member of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Vec<usize> {
        self.elements()
            .filter(|&z| set.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[IDENTITY] = true;
        let mut members = vec![IDENTITY];
        let mut frontier: Vec<usize> = gens.to_vec();
        while let Some(g) = frontier.pop() {
            if seen[g] {
                continue;
            }
            seen[g] = true;
            members.push(g);
            frontier.push(self.inv(g));
            // close under products with everything already present
            let snapshot = members.clone();
            for &m in &snapshot {
                frontier.push(self.mul(m, g));
                frontier.push(self.mul(g, m));
            }
        }
        members.sort_unstable();
        members
    }

    /// Checks that a sorted element list is closed under product and inverse.
    pub fn is_subgroup(&self, elems: &[usize]) -> Result<()> {
        if elems.binary_search(&IDENTITY).is_err() {
            return Err(Error::NotSubgroup { a: IDENTITY, b: IDENTITY });
        }
        for &a in elems {
            if elems.binary_search(&self.inv(a)).is_err() {
                return Err(Error::NotSubgroup { a, b: a });
            }
            for &b in elems {
                if elems.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::NotSubgroup { a, b });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> Result<()> {
        self.is_subgroup(elems)?;
        for &n in elems {
            for g in self.elements() {
                if elems.binary_search(&self.conj(n, g)).is_err() {
                    return Err(Error::NotNormal { element: n, by: g });
                }
            }
        }
        Ok(())
    }

    /// Greedy generating sequence: repeatedly adjoin the smallest element not
    /// yet generated. Deterministic; short for the groups handled here.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = self.subgroup_closure(&[]);
        while generated.len() < self.order {
            let next = self
                .elements()
                .find(|g| generated.binary_search(g).is_err())
                .expect("closure is not the whole group, so some element is missing");
            gens.push(next);
            generated = self.subgroup_closure(&gens);
        }
        gens
    }

    pub fn trivial() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
        })
    }

    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 1);
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        Arc::new(FiniteGroup {
            order: n,
            table,
            inverse,
        })
    }

    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Arc<FiniteGroup>> {
        let n = a.order * b.order;
        check_size(n)?;
        let mut table = vec![0; n * n];
        for x1 in a.elements() {
            for y1 in b.elements() {
                let i = x1 * b.order + y1;
                for x2 in a.elements() {
                    for y2 in b.elements() {
                        let j = x2 * b.order + y2;
                        table[i * n + j] = a.mul(x1, x2) * b.order + b.mul(y1, y2);
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|i| a.inv(i / b.order) * b.order + b.inv(i % b.order))
            .collect();
        Ok(Arc::new(FiniteGroup {
            order: n,
            table,
            inverse,
        }))
    }

    /// The symmetric group on three letters, from permutation composition.
    pub fn symmetric_3() -> Arc<FiniteGroup> {
        // permutations of {0,1,2}; identity first, then sorted
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // apply p first, then q
            [q[p[0]], q[p[1]], q[p[2]]]
        };
        let index =
            |p: &[usize; 3]| -> usize { perms.iter().position(|x| x == p).expect("closed") };
        let n = 6;
        let mut table = vec![0; n * n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                table[i * n + j] = index(&compose(p, q));
            }
        }
        let group = make_group_table(table).expect("S3 table is a group");
        Arc::new(group)
    }

    /// Dihedral group of order `2n`; rotations first, index `j*n + i` for r^i s^j.
    pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
        assert!(n >= 1);
        let order = 2 * n;
        check_size(order)?;
        let idx = |i: usize, j: usize| j * n + i;
        let mut table = vec![0; order * order];
        for i1 in 0..n {
            for j1 in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                        let i = if j1 == 0 {
                            (i1 + i2) % n
                        } else {
                            (i1 + n - i2 % n) % n
                        };
                        let j = (j1 + j2) % 2;
                        table[idx(i1, j1) * order + idx(i2, j2)] = idx(i, j);
                    }
                }
            }
        }
        Ok(Arc::new(make_group_table(table)?))
    }

    /// Invariant factors `d_1 | d_2 | ...` for an abelian group, `None` otherwise.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let basis = abelian_basis(self);
        // split cyclic orders into prime powers, then re-aggregate
        let mut by_prime: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (_, mut m) in basis {
            let mut p = 2;
            while m > 1 {
                if m % p == 0 {
                    let mut e = 0;
                    while m % p == 0 {
                        m /= p;
                        e += 1;
                    }
                    by_prime.entry(p).or_default().push(e);
                }
                p += 1;
            }
        }
        let depth = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors = vec![1usize; depth];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (k, e) in exps.into_iter().enumerate() {
                factors[k] *= p.pow(e);
            }
        }
        factors.reverse(); // ascending divisibility chain
        Some(factors)
    }

    /// All automorphisms, returned as a group plus the permutation realizing
    /// each element. Product convention: `(i*j)` acts by `i` first, then `j`.
    pub fn automorphisms(self: &Arc<Self>) -> (Arc<FiniteGroup>, Vec<Vec<usize>>) {
        let mut autos: Vec<Vec<usize>> = Vec::new();
        let gens = self.generating_sequence();
        let mut image = vec![usize::MAX; self.order];
        image[IDENTITY] = IDENTITY;
        search_autos(self, &gens, 0, &mut image, &mut autos);
        autos.sort();
        let n = autos.len();
        let index_of = |perm: &[usize]| -> usize {
            autos
                .binary_search_by(|probe| probe.as_slice().cmp(perm))
                .expect("composition of automorphisms is an automorphism")
        };
        let mut table = vec![0; n * n];
        let mut scratch = vec![0usize; self.order];
        for i in 0..n {
            for j in 0..n {
                for x in self.elements() {
                    scratch[x] = autos[j][autos[i][x]];
                }
                table[i * n + j] = index_of(&scratch);
            }
        }
        let group = make_group_table(table).expect("automorphism composition table is a group");
        (Arc::new(group), autos)
    }

    pub fn is_isomorphic(self: &Arc<Self>, other: &Arc<FiniteGroup>) -> bool {
        crate::hom::isomorphism_search(self, other, &[]).is_some()
    }
}

fn search_autos(
    g: &FiniteGroup,
    gens: &[usize],
    pos: usize,
    image: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == gens.len() {
        let total = image.iter().all(|&v| v != usize::MAX);
        let mut hit = vec![false; image.len()];
        let bijective = total
            && image.iter().all(|&v| {
                let fresh = !hit[v];
                hit[v] = true;
                fresh
            });
        if bijective {
            out.push(image.clone());
        }
        return;
    }
    let gen = gens[pos];
    let target_order = g.element_order(gen);
    for cand in g.elements() {
        if g.element_order(cand) != target_order {
            continue;
        }
        let saved = image.clone();
        if extend_partial_map(g, g, image, gen, cand) {
            search_autos(g, gens, pos + 1, image, out);
        }
        *image = saved;
    }
}

/// Extends a partial multiplicative map `dom -> cod` with `gen -> value`,
/// closing under products. Returns false on contradiction. Used by the
/// automorphism and isomorphism searches; injectivity is not enforced here.
pub(crate) fn extend_partial_map(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    image: &mut Vec<usize>,
    gen: usize,
    value: usize,
) -> bool {
    if image[gen] != usize::MAX {
        return image[gen] == value;
    }
    image[gen] = value;
    let mut queue = vec![gen];
    while let Some(x) = queue.pop() {
        let known: Vec<usize> = (0..dom.order()).filter(|&y| image[y] != usize::MAX).collect();
        for &y in &known {
            for (p, q) in [(x, y), (y, x)] {
                let prod = dom.mul(p, q);
                let want = cod.mul(image[p], image[q]);
                if image[prod] == usize::MAX {
                    image[prod] = want;
                    queue.push(prod);
                } else if image[prod] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// Validates a raw multiplication table and builds a group. The identity is
/// relabeled to index 0 when the table has it elsewhere.
pub fn make_group(table: Vec<Vec<usize>>) -> Result<Arc<FiniteGroup>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NoIdentity);
    }
    check_size(n)?;
    let mut flat = vec![0usize; n * n];
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable { row: i, col: row.len() });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::MalformedTable { row: i, col: j });
            }
            flat[i * n + j] = v;
        }
    }
    // locate the two-sided identity
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| flat[e * n + x] == x && flat[x * n + e] == x))
        .ok_or(Error::NoIdentity)?;
    if identity != 0 {
        // swap labels 0 <-> identity
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut relabeled = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                relabeled[relabel(i) * n + relabel(j)] = relabel(flat[i * n + j]);
            }
        }
        flat = relabeled;
    }
    Ok(Arc::new(make_group_flat(n, flat)?))
}

pub(crate) fn make_group_table(flat: Vec<usize>) -> Result<FiniteGroup> {
    let n = (flat.len() as f64).sqrt().round() as usize;
    assert_eq!(n * n, flat.len());
    make_group_flat(n, flat)
}

fn make_group_flat(n: usize, flat: Vec<usize>) -> Result<FiniteGroup> {
    check_size(n)?;
    for (pos, &v) in flat.iter().enumerate() {
        if v >= n {
            return Err(Error::MalformedTable { row: pos / n, col: pos % n });
        }
    }
    for x in 0..n {
        if flat[x] != x || flat[x * n] != x {
            return Err(Error::NoIdentity);
        }
    }
    // latin square: every row and column is a permutation
    for i in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for j in 0..n {
            let r = flat[i * n + j];
            let c = flat[j * n + i];
            if seen_row[r] {
                return Err(Error::MalformedTable { row: i, col: j });
            }
            if seen_col[c] {
                return Err(Error::MalformedTable { row: j, col: i });
            }
            seen_row[r] = true;
            seen_col[c] = true;
        }
    }
    check_associative(n, &flat)?;
    let mut inverse = vec![usize::MAX; n];
    for g in 0..n {
        match (0..n).find(|&h| flat[g * n + h] == IDENTITY) {
            Some(h) => inverse[g] = h,
            None => return Err(Error::NoInverse { element: g }),
        }
    }
    Ok(FiniteGroup {
        order: n,
        table: flat,
        inverse,
    })
}

/// Full associativity proof. Small tables get the naive triple scan, which
/// reports the lexicographically first violation; larger ones use Light's
/// test over a generating set, an equivalent complete check once the table
/// is a latin square with identity.
fn check_associative(n: usize, flat: &[usize]) -> Result<()> {
    let mul = |a: usize, b: usize| flat[a * n + b];
    if n <= 256 {
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        return Ok(());
    }
    // generating set under the raw table, grown greedily
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    reached[IDENTITY] = true;
    let mut count = 1;
    while count < n {
        let next = (0..n).find(|&x| !reached[x]).unwrap();
        gens.push(next);
        let mut frontier = vec![next];
        reached[next] = true;
        count += 1;
        while let Some(x) = frontier.pop() {
            for y in 0..n {
                if reached[y] {
                    for p in [mul(x, y), mul(y, x)] {
                        if !reached[p] {
                            reached[p] = true;
                            count += 1;
                            frontier.push(p);
                        }
                    }
                }
            }
        }
    }
    // Light's test: associativity on (a, g, c) for generators g implies it
    // everywhere, because the set of middle elements that associate with all
    // pairs is closed under the product and contains the generators.
    for &g in &gens {
        for a in 0..n {
            let ag = mul(a, g);
            for c in 0..n {
                if mul(ag, c) != mul(a, mul(g, c)) {
                    return Err(Error::NotAssociative { a, b: g, c });
                }
            }
        }
    }
    Ok(())
}

/// Cyclic basis of a finite abelian group: pairs `(generator, order)` such
/// that every element is a unique product of powers of the generators.
/// Extraction: take an element of maximal order, quotient, recurse, and lift
/// each quotient generator to a representative with the same order.
pub fn abelian_basis(g: &FiniteGroup) -> Vec<(usize, usize)> {
    assert!(g.is_abelian());
    if g.order() == 1 {
        return Vec::new();
    }
    let top = g
        .elements()
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .unwrap();
    let m = g.element_order(top);
    if m == g.order() {
        return vec![(top, m)];
    }
    let cyclic: Vec<usize> = {
        let mut elems = Vec::with_capacity(m);
        let mut x = IDENTITY;
        loop {
            elems.push(x);
            x = g.mul(x, top);
            if x == IDENTITY {
                break;
            }
        }
        elems.sort_unstable();
        elems
    };
    let arc = Arc::new(g.clone());
    let (quotient, proj, _section) =
        crate::hom::quotient_by_normal(&arc, &cyclic).expect("cyclic subgroup of abelian group");
    let mut basis = vec![(top, m)];
    for (qgen, r) in abelian_basis(&quotient) {
        // lift to an order-r element: any preimage h has h^r in <top>,
        // h^r = top^t with r | t, so h * top^(-t/r) has order r
        let h = proj
            .image_array()
            .iter()
            .position(|&v| v == qgen)
            .expect("projection is surjective");
        let mut hr = IDENTITY;
        for _ in 0..r {
            hr = g.mul(hr, h);
        }
        let t = (0..m)
            .find(|&t| {
                let mut p = IDENTITY;
                for _ in 0..t {
                    p = g.mul(p, top);
                }
                p == hr
            })
            .expect("h^r lies in the cyclic subgroup");
        assert_eq!(t % r, 0, "maximal order forces divisibility");
        let mut corrected = h;
        let steps = (m - t / r % m) % m;
        for _ in 0..steps {
            corrected = g.mul(corrected, top);
        }
        debug_assert_eq!(g.element_order(corrected), r);
        basis.push((corrected, r));
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_from_table() {
        let g = make_group(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn cyclic_four_table() {
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        let g = make_group(table).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.element_order(1), 4);
    }

    #[test]
    fn rejects_non_associative_table() {
        // order-5 loop: latin square with identity, (1*1)*2 != 1*(1*2)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = make_group(rows).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn rejects_malformed_and_identityless_tables() {
        assert!(matches!(
            make_group(vec![vec![0, 1], vec![1]]).unwrap_err(),
            Error::MalformedTable { .. }
        ));
        // constant table has no identity
        assert!(matches!(
            make_group(vec![vec![0, 0], vec![0, 0]]).unwrap_err(),
            Error::NoIdentity
        ));
    }

    #[test]
    fn relabels_identity_to_zero() {
        // Z/2 with labels swapped: element 1 is the identity
        let g = make_group(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let s3 = FiniteGroup::symmetric_3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.center(), vec![0]);
        let profile = s3.order_profile();
        assert_eq!(profile.get(&2), Some(&3));
        assert_eq!(profile.get(&3), Some(&2));
    }

    #[test]
    fn dihedral_four_matches_klein() {
        let d2 = FiniteGroup::dihedral(2).unwrap();
        let klein =
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap();
        assert!(d2.is_isomorphic(&klein));
    }

    #[test]
    fn abelian_invariants_of_products() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let g = FiniteGroup::direct_product(&z4, &z2).unwrap();
        assert_eq!(g.abelian_invariants(), Some(vec![2, 4]));
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.abelian_invariants(), Some(vec![6]));
        let k4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(k4.abelian_invariants(), Some(vec![2, 2]));
        assert_eq!(FiniteGroup::symmetric_3().abelian_invariants(), None);
    }

    #[test]
    fn automorphism_groups_of_small_groups() {
        let z3 = FiniteGroup::cyclic(3);
        let (aut, perms) = z3.automorphisms();
        assert_eq!(aut.order(), 2);
        assert_eq!(perms[0], vec![0, 1, 2]);
        let z4 = FiniteGroup::cyclic(4);
        let (aut4, _) = z4.automorphisms();
        assert_eq!(aut4.order(), 2);
        let k4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap();
        let (autk, _) = k4.automorphisms();
        assert_eq!(autk.order(), 6); // GL(2, F2)
        assert!(autk.is_isomorphic(&FiniteGroup::symmetric_3()));
    }

    #[test]
    fn size_limit_guards_construction() {
        let err = check_size(5000).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }
}

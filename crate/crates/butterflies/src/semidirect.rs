//! Relative semidirect products `K x^H G`.
//!
//! Given a K-equivariant pair of maps `d: H -> K`, `p: H -> G` (K acting on
//! itself by conjugation) with `g^{d(h)} = p(h)^-1 g p(h)`, the product is
//! the ordinary semidirect product `K ⋉ G` modulo the antidiagonal copy
//! `N = {(d(h)^-1, p(h))}` of H. It comes with maps from K and G and an
//! action on G making `G -> K x^H G` a crossed-module.

use std::sync::Arc;

use crate::action::RightAction;
use crate::error::{Error, Result};
use crate::group::{check_size, make_group_table, FiniteGroup, IDENTITY};
use crate::hom::{make_hom, quotient_by_normal, GroupHom};

#[derive(Clone, Debug)]
pub struct SemidirectData {
    pub k: Arc<FiniteGroup>,
    pub g: Arc<FiniteGroup>,
    pub h: Arc<FiniteGroup>,
    pub d: GroupHom,
    pub p: GroupHom,
    pub act_k_on_h: RightAction,
    pub act_k_on_g: RightAction,
}

impl SemidirectData {
    pub fn validate(&self) -> Result<()> {
        let check = |cond: bool, reason: &str| -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::IncompatibleData {
                    reason: reason.to_string(),
                })
            }
        };
        check(self.d.domain() == &self.h && self.d.codomain() == &self.k, "d must map H to K")?;
        check(self.p.domain() == &self.h && self.p.codomain() == &self.g, "p must map H to G")?;
        check(
            self.act_k_on_h.group() == &self.k && self.act_k_on_h.space() == &self.h,
            "action of K on H has wrong carriers",
        )?;
        check(
            self.act_k_on_g.group() == &self.k && self.act_k_on_g.space() == &self.g,
            "action of K on G has wrong carriers",
        )?;
        self.act_k_on_h.validate()?;
        self.act_k_on_g.validate()?;
        // d is K-equivariant for conjugation on K
        for h in self.h.elements() {
            for k in self.k.elements() {
                if self.d.apply(self.act_k_on_h.apply(h, k)) != self.k.conj(self.d.apply(h), k) {
                    return Err(Error::IncompatibleData {
                        reason: format!("d is not K-equivariant at h={h}, k={k}"),
                    });
                }
            }
        }
        // p is K-equivariant
        for h in self.h.elements() {
            for k in self.k.elements() {
                if self.p.apply(self.act_k_on_h.apply(h, k))
                    != self.act_k_on_g.apply(self.p.apply(h), k)
                {
                    return Err(Error::IncompatibleData {
                        reason: format!("p is not K-equivariant at h={h}, k={k}"),
                    });
                }
            }
        }
        // compatibility: g^{d(h)} = p(h)^-1 g p(h)
        for h in self.h.elements() {
            let ph = self.p.apply(h);
            for g in self.g.elements() {
                if self.act_k_on_g.apply(g, self.d.apply(h)) != self.g.conj(g, ph) {
                    return Err(Error::IncompatibleData {
                        reason: format!("compatibility g^d(h) = g^p(h) fails at h={h}, g={g}"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The finished product with its structure maps.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: Arc<FiniteGroup>,
    /// `p': K -> K x^H G`, `k -> [(k, 1)]`.
    pub from_k: GroupHom,
    /// `d': G -> K x^H G`, `g -> [(1, g)]`.
    pub from_g: GroupHom,
    /// Action of the product on G: `[(k, g)]` sends `x` to `g^-1 x^k g`.
    pub action_on_g: RightAction,
}

/// The plain outer semidirect product `K ⋉ G` for a right action of K on G,
/// with element `(k, g)` at index `k * |G| + g`.
pub fn outer_semidirect(
    k: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
    act: &RightAction,
) -> Result<Arc<FiniteGroup>> {
    assert_eq!(act.group(), k);
    assert_eq!(act.space(), g);
    let n = k.order() * g.order();
    check_size(n)?;
    let idx = |kk: usize, gg: usize| kk * g.order() + gg;
    let mut table = vec![0usize; n * n];
    for k1 in k.elements() {
        for g1 in g.elements() {
            for k2 in k.elements() {
                for g2 in g.elements() {
                    table[idx(k1, g1) * n + idx(k2, g2)] =
                        idx(k.mul(k1, k2), g.mul(act.apply(g1, k2), g2));
                }
            }
        }
    }
    Ok(Arc::new(make_group_table(table)?))
}

pub fn generalized_semidirect(data: &SemidirectData) -> Result<SemidirectProduct> {
    data.validate()?;
    let k = &data.k;
    let g = &data.g;
    let outer = outer_semidirect(k, g, &data.act_k_on_g)?;
    let idx = |kk: usize, gg: usize| kk * g.order() + gg;
    let mut diag: Vec<usize> = data
        .h
        .elements()
        .map(|h| idx(k.inv(data.d.apply(h)), data.p.apply(h)))
        .collect();
    diag.sort_unstable();
    diag.dedup();
    let (quotient, proj, reps) = quotient_by_normal(&outer, &diag)?;
    let from_k = make_hom(
        k,
        &quotient,
        k.elements().map(|kk| proj.apply(idx(kk, IDENTITY))).collect(),
    )?;
    let from_g = make_hom(
        g,
        &quotient,
        g.elements().map(|gg| proj.apply(idx(IDENTITY, gg))).collect(),
    )?;
    // action of the quotient on G, checked to be representative-independent
    let mut rows = vec![vec![0usize; quotient.order()]; g.order()];
    for x in g.elements() {
        let mut value = vec![usize::MAX; quotient.order()];
        for outer_elem in outer.elements() {
            let q = proj.apply(outer_elem);
            let (kk, gg) = (outer_elem / g.order(), outer_elem % g.order());
            let moved = g.mul(g.mul(g.inv(gg), data.act_k_on_g.apply(x, kk)), gg);
            if value[q] == usize::MAX {
                value[q] = moved;
            } else if value[q] != moved {
                return Err(Error::IncompatibleData {
                    reason: format!(
                        "action of the product on G is not well defined at x={x}, class {q}"
                    ),
                });
            }
        }
        rows[x] = value;
    }
    let action_on_g = crate::action::make_action(&quotient, g, rows)?;
    let product = SemidirectProduct {
        group: quotient,
        from_k,
        from_g,
        action_on_g,
    };
    verify_coker_ker_claims(data, &product)?;
    debug_assert_eq!(product.group.order() * diag.len(), outer.order());
    let _ = reps;
    Ok(product)
}

/// Post-conditions carried by every relative semidirect product: the
/// cokernels of `d` and `d'` agree, the induced map on kernels is onto, and
/// its kernel is `Ker p ∩ Ker d`.
pub fn verify_coker_ker_claims(data: &SemidirectData, product: &SemidirectProduct) -> Result<()> {
    let fail = |reason: &str| -> Error {
        Error::IncompatibleData {
            reason: reason.to_string(),
        }
    };
    // commuting square p' . d = d' . p
    for h in data.h.elements() {
        if product.from_k.apply(data.d.apply(h)) != product.from_g.apply(data.p.apply(h)) {
            return Err(fail("square p'd = d'p does not commute"));
        }
    }
    // Coker(d) = Coker(d') via p'
    let im_d = {
        let mut v: Vec<usize> = data.d.image_subgroup();
        v.sort_unstable();
        v
    };
    let (coker_d, proj_d, _) = quotient_by_normal(&data.k, &im_d)?;
    let im_dprime = product.from_g.image_subgroup();
    let (coker_dp, proj_dp, _) = quotient_by_normal(&product.group, &im_dprime)?;
    if coker_d.order() != coker_dp.order() {
        return Err(fail("cokernels of d and d' have different orders"));
    }
    let induced: Vec<usize> = {
        // class of k in Coker d -> class of p'(k) in Coker d'
        let mut image = vec![usize::MAX; coker_d.order()];
        for k in data.k.elements() {
            let src = proj_d.apply(k);
            let dst = proj_dp.apply(product.from_k.apply(k));
            if image[src] == usize::MAX {
                image[src] = dst;
            } else if image[src] != dst {
                return Err(fail("induced map on cokernels is not well defined"));
            }
        }
        image
    };
    let induced_hom = make_hom(&coker_d, &coker_dp, induced)
        .map_err(|_| fail("induced map on cokernels is not a homomorphism"))?;
    if !induced_hom.is_bijective() {
        return Err(fail("induced map on cokernels is not an isomorphism"));
    }
    // Ker(d) -> Ker(d') via p is surjective with kernel Ker p ∩ Ker d
    let ker_d: Vec<usize> = data.d.kernel();
    let ker_dprime: Vec<usize> = product.from_g.kernel();
    let mapped: Vec<usize> = {
        let mut v: Vec<usize> = ker_d.iter().map(|&h| data.p.apply(h)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if mapped != ker_dprime {
        return Err(fail("Ker d does not surject onto Ker d'"));
    }
    let both: Vec<usize> = ker_d
        .iter()
        .copied()
        .filter(|&h| data.p.apply(h) == IDENTITY)
        .collect();
    let expected: Vec<usize> = data
        .h
        .elements()
        .filter(|&h| data.d.apply(h) == IDENTITY && data.p.apply(h) == IDENTITY)
        .collect();
    if both != expected {
        return Err(fail("kernel of Ker d -> Ker d' is not Ker p ∩ Ker d"));
    }
    Ok(())
}

/// Transport along a crossed homomorphism `theta: K -> G`.
///
/// `data_p` is a valid datum with map `p`; `data_q` must carry the same
/// `d` and K-action on H, the shifted map `q(h) = p(h) theta(d(h))`, and the
/// conjugated action `g^{*k} = theta(k)^-1 g^k theta(k)`. The returned map
/// `(k, g) -> (k, theta(k) g)` is an isomorphism of the two products
/// commuting with the maps from G and inducing the identity on `Coker d`.
pub fn theta_pushforward(
    theta: &[usize],
    data_p: &SemidirectData,
    data_q: &SemidirectData,
) -> Result<GroupHom> {
    let k = &data_p.k;
    let g = &data_p.g;
    if theta.len() != k.order() || theta.iter().any(|&v| v >= g.order()) {
        return Err(Error::IncompatibleData {
            reason: "theta must be a total map K -> G".into(),
        });
    }
    // crossed homomorphism law for the action of data_p
    for a in k.elements() {
        for b in k.elements() {
            let lhs = theta[k.mul(a, b)];
            let rhs = g.mul(data_p.act_k_on_g.apply(theta[a], b), theta[b]);
            if lhs != rhs {
                return Err(Error::NotCrossedHom { k: a, kprime: b });
            }
        }
    }
    if data_q.k != data_p.k || data_q.g != data_p.g || data_q.h != data_p.h {
        return Err(Error::IncompatibleData {
            reason: "the two data must share K, G, H".into(),
        });
    }
    if data_q.d != data_p.d || data_q.act_k_on_h != data_p.act_k_on_h {
        return Err(Error::IncompatibleData {
            reason: "the two data must share d and the action on H".into(),
        });
    }
    for h in data_p.h.elements() {
        let want = g.mul(data_p.p.apply(h), theta[data_p.d.apply(h)]);
        if data_q.p.apply(h) != want {
            return Err(Error::TriangleFails {
                reason: format!("q(h) != p(h) theta(d(h)) at h={h}"),
            });
        }
    }
    for x in g.elements() {
        for kk in k.elements() {
            let want = g.mul(
                g.mul(g.inv(theta[kk]), data_p.act_k_on_g.apply(x, kk)),
                theta[kk],
            );
            if data_q.act_k_on_g.apply(x, kk) != want {
                return Err(Error::TriangleFails {
                    reason: format!("action of data_q is not the theta-conjugated one at x={x}, k={kk}"),
                });
            }
        }
    }
    let prod_p = generalized_semidirect(data_p)?;
    let prod_q = generalized_semidirect(data_q)?;
    // theta_* on classes, via representatives; well-definedness checked
    let outer_q = outer_semidirect(k, g, &data_q.act_k_on_g)?;
    let idx = |kk: usize, gg: usize| kk * g.order() + gg;
    let proj_q = make_hom(
        &outer_q,
        &prod_q.group,
        outer_q
            .elements()
            .map(|e| {
                let (kk, gg) = (e / g.order(), e % g.order());
                prod_q.group.mul(
                    prod_q.from_k.apply(kk),
                    prod_q.from_g.apply(gg),
                )
            })
            .collect(),
    )?;
    let mut image = vec![usize::MAX; prod_q.group.order()];
    for e in outer_q.elements() {
        let (kk, gg) = (e / g.order(), e % g.order());
        let src = proj_q.apply(idx(kk, gg));
        let target = prod_p.group.mul(
            prod_p.from_k.apply(kk),
            prod_p.from_g.apply(g.mul(theta[kk], gg)),
        );
        if image[src] == usize::MAX {
            image[src] = target;
        } else if image[src] != target {
            return Err(Error::TriangleFails {
                reason: "theta_* is not well defined on classes".into(),
            });
        }
    }
    let iso = make_hom(&prod_q.group, &prod_p.group, image)?;
    if !iso.is_bijective() {
        return Err(Error::TriangleFails {
            reason: "theta_* is not bijective".into(),
        });
    }
    // triangle over G
    for gg in g.elements() {
        if iso.apply(prod_q.from_g.apply(gg)) != prod_p.from_g.apply(gg) {
            return Err(Error::TriangleFails {
                reason: format!("theta_* d'_q != d'_p at g={gg}"),
            });
        }
    }
    // identity on Coker d: theta_*(p'_q(k)) and p'_p(k) agree mod Im d'
    let im_dp = prod_p.from_g.image_subgroup();
    let (_, coker_proj, _) = quotient_by_normal(&prod_p.group, &im_dp)?;
    for kk in k.elements() {
        let lhs = coker_proj.apply(iso.apply(prod_q.from_k.apply(kk)));
        let rhs = coker_proj.apply(prod_p.from_k.apply(kk));
        if lhs != rhs {
            return Err(Error::TriangleFails {
                reason: format!("theta_* does not induce the identity on Coker d at k={kk}"),
            });
        }
    }
    Ok(iso)
}

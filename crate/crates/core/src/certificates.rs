//! Optimal-containment certificates.
//!
//! `K ⊂ t + λC` is optimal exactly when there are contact points `p^j ∈ K`
//! on the boundary of `t + λC`, outer normals `a^j` there, and convex
//! weights with `Σ λ_j a^j = 0`. Extraction reads these off the dual of the
//! circumradius program; validation rechecks them from scratch.

use serde::{Deserialize, Serialize};

use crate::bodies::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};
use crate::lp::{LinearProgram, VarSign};
use crate::radii::solve_circumradius;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentCertificate {
    pub contacts: Vec<RationalVector>,
    pub normals: Vec<RationalVector>,
    pub weights: Vec<Rational>,
}

impl ContainmentCertificate {
    pub fn len(&self) -> usize {
        self.contacts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contacts.is_empty()
    }

    /// `Σ λ_j a^j`.
    pub fn weighted_normal_sum(&self) -> Option<RationalVector> {
        let dim = self.normals.first()?.dim();
        let mut acc = RationalVector::zeros(dim);
        for (a, w) in self.normals.iter().zip(&self.weights) {
            if a.dim() != dim {
                return None;
            }
            acc = acc.add(&a.scale(w));
        }
        Some(acc)
    }
}

/// Certificate together with the optimal dilate it certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extracted {
    pub certificate: ContainmentCertificate,
    pub radius: Rational,
    pub translation: RationalVector,
    /// set when the normals came from the explicit dual program rather than
    /// the dual of the primal solve
    pub dual_fallback: bool,
}

impl Extracted {
    /// The container `t + λC`.
    pub fn container(&self, c: &VPolytope) -> Result<VPolytope> {
        c.scale(&self.radius)?.translate(&self.translation)
    }
}

/// Checks the three optimality conditions against `container`, assuming
/// `K ⊂ container` was established separately.
pub fn validate(k: &VPolytope, container: &VPolytope, cert: &ContainmentCertificate) -> bool {
    let n = k.dim();
    let count = cert.contacts.len();
    if count == 0 || count > n + 1 || cert.normals.len() != count || cert.weights.len() != count {
        return false;
    }
    if container.dim() != n {
        return false;
    }
    if cert.weights.iter().any(|w| !w.is_positive()) {
        return false;
    }
    if cert.weights.iter().sum::<Rational>() != Rational::one() {
        return false;
    }
    for (p, a) in cert.contacts.iter().zip(&cert.normals) {
        if p.dim() != n || a.dim() != n || a.is_zero() {
            return false;
        }
        if a.dot(p) != container.support_value(a) {
            return false;
        }
        if !k.contains_point(p).unwrap_or(false) {
            return false;
        }
    }
    matches!(cert.weighted_normal_sum(), Some(s) if s.is_zero())
}

/// Extracts a certificate for `K ⊂^opt R(K,C) C + t`.
///
/// Every nonzero dual block `y_i` of the circumradius program is an outer
/// normal of `t + λC` at `v_i` by complementary slackness, and the free
/// translation forces `Σ y_i = 0`. A basic solution of
/// `Σ w_i y_i = 0, Σ w_i = 1, w >= 0` keeps at most `n + 1` of them.
pub fn extract(k: &VPolytope, c: &VPolytope) -> Result<Extracted> {
    let sol = solve_circumradius(k, c)?.ok_or(Error::InfiniteRadius)?;
    if sol.value.is_zero() {
        return Err(Error::ZeroRadius);
    }
    let container = c.scale(&sol.value)?.translate(&sol.translation)?;
    let (normals, dual_fallback) = match usable_normals(k, &container, &sol.normals) {
        Some(found) => (found, false),
        None => {
            let ys = explicit_dual(k, c)?;
            (usable_normals(k, &container, &ys).ok_or(Error::DegenerateDual)?, true)
        }
    };
    let certificate = caratheodory(k, normals)?;
    if !validate(k, &container, &certificate) {
        return Err(Error::DegenerateDual);
    }
    Ok(Extracted { certificate, radius: sol.value, translation: sol.translation, dual_fallback })
}

/// Nonzero blocks that support the container at their vertex; `None` when
/// there are none or one fails.
fn usable_normals(k: &VPolytope, container: &VPolytope, ys: &[RationalVector]) -> Option<Vec<(usize, RationalVector)>> {
    let picked: Vec<(usize, RationalVector)> =
        ys.iter().enumerate().filter(|(_, y)| !y.is_zero()).map(|(i, y)| (i, y.clone())).collect();
    if picked.len() < 2 {
        return None;
    }
    for (i, y) in &picked {
        if y.dot(&k.vertices()[*i]) != container.support_value(y) {
            return None;
        }
    }
    Some(picked)
}

/// Solves the dual of the circumradius program directly:
/// maximize `Σ y_i·v_i` subject to `Σ y_i = 0`, `y_i·c_j <= u_i`,
/// `Σ u_i <= 1`.
fn explicit_dual(k: &VPolytope, c: &VPolytope) -> Result<Vec<RationalVector>> {
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let mut ys = Vec::new();
    let mut us = Vec::new();
    for v in k.vertices() {
        let y = lp.add_vars(n, VarSign::Free);
        for a in 0..n {
            lp.set_cost(y + a, -&v[a]);
        }
        ys.push(y);
        us.push(lp.add_var(VarSign::Free, Rational::zero()));
    }
    for a in 0..n {
        lp.add_eq(ys.iter().map(|&y| (y + a, Rational::one())).collect(), Rational::zero());
    }
    for (&y, &u) in ys.iter().zip(&us) {
        for cj in c.vertices() {
            let mut terms: Vec<(usize, Rational)> =
                (0..n).filter(|&a| !cj[a].is_zero()).map(|a| (y + a, cj[a].clone())).collect();
            terms.push((u, -Rational::one()));
            lp.add_le(terms, Rational::zero());
        }
    }
    lp.add_le(us.iter().map(|&u| (u, Rational::one())).collect(), Rational::one());
    let sol = lp.solve()?.into_optimal().ok_or(Error::DegenerateDual)?;
    Ok(ys.iter().map(|&y| (0..n).map(|a| sol.primal[y + a].clone()).collect()).collect())
}

/// Prunes to a basic weight vector with at most `n + 1` nonzeros.
fn caratheodory(k: &VPolytope, picked: Vec<(usize, RationalVector)>) -> Result<ContainmentCertificate> {
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let w = lp.add_vars(picked.len(), VarSign::NonNegative);
    for a in 0..n {
        let terms = picked
            .iter()
            .enumerate()
            .filter(|(_, (_, y))| !y[a].is_zero())
            .map(|(l, (_, y))| (w + l, y[a].clone()))
            .collect();
        lp.add_eq(terms, Rational::zero());
    }
    lp.add_eq((0..picked.len()).map(|l| (w + l, Rational::one())).collect(), Rational::one());
    let sol = lp.solve()?.into_optimal().ok_or(Error::DegenerateDual)?;
    let mut cert = ContainmentCertificate { contacts: Vec::new(), normals: Vec::new(), weights: Vec::new() };
    for (l, (i, y)) in picked.into_iter().enumerate() {
        let weight = sol.primal[w + l].clone();
        if weight.is_positive() {
            cert.contacts.push(k.vertices()[i].clone());
            cert.normals.push(y);
            cert.weights.push(weight);
        }
    }
    Ok(cert)
}

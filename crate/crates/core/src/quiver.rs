//! Dynkin quivers as height functions: sources, reflections, the Coxeter
//! element `τ_Q`, the roots `γ_i^Q`, and folding/lifting/transposition.
//!
//! An arrow `i → j` means `ξ_i = ξ_j + 1`.

use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::cartan::{AutomorphismKind, CartanDatum, CartanType, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::linalg;
use crate::roots::{Root, RootSystem};
use crate::weyl::{self, Word};
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinQuiver {
    pub datum: CartanDatum,
    pub xi: Vec<i64>,
}

impl DynkinQuiver {
    pub fn new(datum: &CartanDatum, xi: Vec<i64>) -> Result<Self> {
        if xi.len() != datum.rank {
            return Err(Error::InvalidHeights(format!("{} heights given for rank {}", xi.len(), datum.rank)));
        }
        for (i, j) in datum.edges() {
            if (xi[i] - xi[j]).abs() != 1 {
                return Err(Error::InvalidHeights(format!(
                    "|ξ_{} − ξ_{}| = {} on an edge",
                    i + 1,
                    j + 1,
                    (xi[i] - xi[j]).abs()
                )));
            }
        }
        Ok(DynkinQuiver { datum: datum.clone(), xi })
    }

    /// `parse("D5", "3,2,1,0,0")`.
    pub fn parse(ty: &str, heights: &str) -> Result<Self> {
        let datum = CartanDatum::parse(ty)?;
        let xi: std::result::Result<Vec<i64>, _> = heights.split(',').map(|s| s.trim().parse::<i64>()).collect();
        let xi = xi.map_err(|e| Error::InvalidHeights(format!("`{heights}`: {e}")))?;
        Self::new(&datum, xi)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.datum.neighbors(i).all(|j| self.xi[i] > self.xi[j])
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_source(i)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.datum.neighbors(i).all(|j| self.xi[i] < self.xi[j])).collect()
    }

    /// `(s_i ξ)_j = ξ_j − 2δ_{ij}` for a source `i`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        if i >= self.rank() || !self.is_source(i) {
            return Err(Error::NotSource(i + 1));
        }
        let mut xi = self.xi.clone();
        xi[i] -= 2;
        Ok(DynkinQuiver { datum: self.datum.clone(), xi })
    }

    /// Reduced word of `τ_Q`: repeatedly reflect the smallest unused source.
    pub fn coxeter_word(&self) -> Word {
        let n = self.rank();
        let mut xi = self.xi.clone();
        let mut used = vec![false; n];
        let mut word = Vec::with_capacity(n);
        for _ in 0..n {
            let i = (0..n)
                .find(|&i| !used[i] && self.datum.neighbors(i).all(|j| xi[i] > xi[j]))
                .expect("an unused source always exists");
            used[i] = true;
            xi[i] -= 2;
            word.push(i);
        }
        word
    }

    pub fn tau(&self, v: &[i64]) -> Root {
        weyl::apply_word(&self.datum, &self.coxeter_word(), v)
    }

    pub fn tau_inv(&self, v: &[i64]) -> Root {
        let mut w = self.coxeter_word();
        w.reverse();
        weyl::apply_word(&self.datum, &w, v)
    }

    /// `τ_Q^k v` for any integer `k`.
    pub fn tau_pow(&self, k: i64, v: &[i64]) -> Root {
        let mut w = self.coxeter_word();
        if k < 0 {
            w.reverse();
        }
        let mut out = v.to_vec();
        for _ in 0..k.unsigned_abs() {
            out = weyl::apply_word(&self.datum, &w, &out);
        }
        out
    }

    /// `j` such that there is a path `j → ⋯ → i` (including `i`), with the
    /// unique diagram path `j = p_1, …, p_l = i`.
    fn incoming_paths(&self, i: usize) -> Vec<(usize, Vec<usize>)> {
        let mut out = vec![(i, vec![i])];
        let mut k = 0;
        while k < out.len() {
            let (v, path) = out[k].clone();
            for w in self.datum.neighbors(v) {
                if self.xi[w] == self.xi[v] + 1 && !path.contains(&w) {
                    let mut p = vec![w];
                    p.extend(&path);
                    out.push((w, p));
                }
            }
            k += 1;
        }
        out
    }

    /// Weighted-path formula for `γ_i^Q`.
    pub fn gamma_by_paths(&self, i: usize) -> Root {
        let mut g = vec![0; self.rank()];
        for (j, path) in self.incoming_paths(i) {
            g[j] = path.windows(2).map(|w| -self.datum.c(w[0], w[1])).product();
        }
        g
    }

    /// `γ_i^Q = (1 − τ_Q) ϖ_i` via rational weights.
    pub fn gamma_by_weights(&self, i: usize) -> Root {
        let w = fundamental_weight(&self.datum, i);
        let tw = weyl::apply_word_q(&self.datum, &self.coxeter_word(), &w);
        w.iter()
            .zip(&tw)
            .map(|(a, b)| {
                let x = *a - *b;
                assert!(x.is_integer(), "(1 − τ)ϖ_i left the root lattice");
                *x.numer()
            })
            .collect()
    }

    pub fn gamma(&self, i: usize) -> Result<Root> {
        let a = self.gamma_by_paths(i);
        let b = self.gamma_by_weights(i);
        if a != b {
            return Err(Error::Internal(format!("γ_{} routes disagree: {a:?} vs {b:?}", i + 1)));
        }
        Ok(a)
    }

    /// `Q*`: `ξ*_i = ξ_{i*}`.
    pub fn star(&self) -> Self {
        let xi = (0..self.rank()).map(|i| self.xi[self.datum.star[i]]).collect();
        DynkinQuiver { datum: self.datum.clone(), xi }
    }

    /// Shifted so that the minimum height is 0.
    pub fn normalized(&self) -> Self {
        let m = *self.xi.iter().min().unwrap();
        DynkinQuiver { datum: self.datum.clone(), xi: self.xi.iter().map(|x| x - m).collect() }
    }

    /// Same orientation (heights equal up to a global constant).
    pub fn same_orientation(&self, other: &Self) -> bool {
        self.datum == other.datum && self.normalized().xi == other.normalized().xi
    }

    pub fn is_fixed(&self, sigma: &DiagramAutomorphism) -> bool {
        (0..self.rank()).all(|i| self.xi[sigma.perm[i]] == self.xi[i])
    }

    /// Q-adapted reduced word of `w0`: read `Γ_Q` from the largest `p` down.
    pub fn adapted_reduced_word(&self) -> Word {
        let h = self.datum.h as i64;
        let mut verts: Vec<(i64, usize)> = Vec::new();
        for i in 0..self.rank() {
            let lo = self.xi[self.datum.star[i]] - h;
            let mut p = self.xi[i];
            while p > lo {
                verts.push((p, i));
                p -= 2;
            }
        }
        verts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        verts.into_iter().map(|(_, i)| i).collect()
    }

    /// Whether every letter is a source of the successively reflected quiver.
    pub fn is_adapted(&self, word: &[usize]) -> bool {
        let mut q = self.clone();
        for &i in word {
            match q.reflect(i) {
                Ok(next) => q = next,
                Err(_) => return false,
            }
        }
        true
    }

    pub fn heights_string(&self) -> String {
        self.xi.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"type": self.datum.ty.letter().to_string(), "rank": self.rank(), "xi": self.xi})
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ξ=({})", self.datum.name(), self.heights_string())
    }
}

/// `ϖ_i = C⁻¹ e_i` in root coordinates.
pub fn fundamental_weight(datum: &CartanDatum, i: usize) -> Vec<Q> {
    let inv = linalg::inverse(&linalg::from_int(&datum.cartan)).expect("Cartan matrices are invertible");
    (0..datum.rank).map(|j| inv[j][i]).collect()
}

/// Bipartite orientation: `ξ_i` is the parity of the distance from vertex 1.
pub fn canonical_quiver(datum: &CartanDatum) -> DynkinQuiver {
    let xi = datum.distances_from(0).into_iter().map(|d| (d % 2) as i64).collect();
    DynkinQuiver { datum: datum.clone(), xi }
}

/// All `2^{#edges}` orientations, normalized to minimum height 0.
pub fn all_quivers(datum: &CartanDatum) -> Vec<DynkinQuiver> {
    let edges = datum.edges();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let mut xi: Vec<Option<i64>> = vec![None; datum.rank];
        xi[0] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for (k, &(a, b)) in edges.iter().enumerate() {
                let s = if mask >> k & 1 == 1 { 1 } else { -1 };
                match (xi[a], xi[b]) {
                    (Some(x), None) => {
                        xi[b] = Some(x - s);
                        changed = true;
                    }
                    (None, Some(y)) => {
                        xi[a] = Some(y + s);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        let q = DynkinQuiver { datum: datum.clone(), xi: xi.into_iter().map(|x| x.unwrap()).collect() };
        out.push(q.normalized());
    }
    out
}

pub fn sigma_fixed_quivers(datum: &CartanDatum, sigma: &DiagramAutomorphism) -> Vec<DynkinQuiver> {
    all_quivers(datum).into_iter().filter(|q| q.is_fixed(sigma)).collect()
}

/// Index map `σ̄` onto the subalgebra type: `(A_{2n−1},∨) → C_n`,
/// `(D_{n+1},∨) → B_n`, `(E6,∨) → F4`, `(D4,∨̃) → G2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubFolding {
    pub source: CartanDatum,
    pub target: CartanDatum,
    pub sigma: DiagramAutomorphism,
    pub map: Vec<usize>,
}

impl SubFolding {
    pub fn new(source: &CartanDatum, kind: AutomorphismKind) -> Result<Self> {
        let sigma = DiagramAutomorphism::standard(source, kind)?;
        let n = source.rank;
        let (target, map): (CartanDatum, Vec<usize>) = match (kind, source.ty) {
            (AutomorphismKind::Vee, CartanType::A) => {
                let m = n.div_ceil(2);
                (CartanDatum::build(CartanType::C, m)?, (0..n).map(|i| i.min(n - 1 - i)).collect())
            }
            (AutomorphismKind::Vee, CartanType::D) => {
                (CartanDatum::build(CartanType::B, n - 1)?, (0..n).map(|i| i.min(n - 2)).collect())
            }
            (AutomorphismKind::Vee, CartanType::E) => (CartanDatum::build(CartanType::F, 4)?, vec![3, 0, 2, 1, 2, 3]),
            (AutomorphismKind::VeeTilde, CartanType::D) => (CartanDatum::build(CartanType::G, 2)?, vec![0, 1, 0, 0]),
            _ => unreachable!("standard() already rejected this pair"),
        };
        Ok(SubFolding { source: source.clone(), target, sigma, map })
    }

    /// The unfolding that produces `target` (inverse lookup of the table).
    pub fn for_target(target: &CartanDatum) -> Result<Self> {
        let n = target.rank;
        let (src, kind) = match target.ty {
            CartanType::C => (CartanDatum::build(CartanType::A, 2 * n - 1)?, AutomorphismKind::Vee),
            CartanType::B => (CartanDatum::build(CartanType::D, n + 1)?, AutomorphismKind::Vee),
            CartanType::F => (CartanDatum::build(CartanType::E, 6)?, AutomorphismKind::Vee),
            CartanType::G => (CartanDatum::build(CartanType::D, 4)?, AutomorphismKind::VeeTilde),
            _ => {
                return Err(Error::MethodMismatch {
                    method: "lift".into(),
                    reason: format!("{} is not a folded type", target.name()),
                })
            }
        };
        Self::new(&src, kind)
    }

    /// `ψ(α_ı) = ᾱ_{σ̄(ı)}`, extended linearly.
    pub fn psi(&self, r: &[i64]) -> Root {
        let mut out = vec![0; self.target.rank];
        for (i, &c) in r.iter().enumerate() {
            out[self.map[i]] += c;
        }
        out
    }

    /// `ξ̄_{σ̄(i)} = ξ_i` for a σ-fixed quiver.
    pub fn fold_quiver(&self, q: &DynkinQuiver) -> Result<DynkinQuiver> {
        if q.datum != self.source {
            return Err(Error::InvalidType(q.datum.name()));
        }
        if !q.is_fixed(&self.sigma) {
            return Err(Error::NotFixed);
        }
        let mut xi = vec![0; self.target.rank];
        for (i, &m) in self.map.iter().enumerate() {
            xi[m] = q.xi[i];
        }
        DynkinQuiver::new(&self.target, xi)
    }

    /// `ξ_ı = ξ̄_{σ̄(ı)}`.
    pub fn lift_quiver(&self, q: &DynkinQuiver) -> Result<DynkinQuiver> {
        if q.datum != self.target {
            return Err(Error::InvalidType(q.datum.name()));
        }
        let xi = self.map.iter().map(|&m| q.xi[m]).collect();
        DynkinQuiver::new(&self.source, xi)
    }
}

/// `B_n ↔ C_n` with the same heights.
pub fn transpose(q: &DynkinQuiver) -> Result<DynkinQuiver> {
    let ty = match q.datum.ty {
        CartanType::B => CartanType::C,
        CartanType::C => CartanType::B,
        _ => {
            return Err(Error::MethodMismatch {
                method: "transpose".into(),
                reason: format!("{} is not of type B or C", q.datum.name()),
            })
        }
    };
    DynkinQuiver::new(&CartanDatum::build(ty, q.rank())?, q.xi.clone())
}

/// Positive root check helper used by tests and callers of γ.
pub fn is_positive_root(sys: &RootSystem, r: &[i64]) -> bool {
    sys.index_of(r).is_some()
}

#[allow(dead_code)]
fn weight_is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

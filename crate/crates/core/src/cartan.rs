//! Cartan data of finite type, diagram automorphisms and foldings.
//!
//! Indices are 0-based internally; everything user-facing (display, JSON)
//! is 1-based. Numbering follows the usual Bourbaki-style diagrams with the
//! E-type branch node labelled 2 and the D-type fork at the last two nodes.
//! Short roots have `(α,α) = 2`, so `d_i = (α_i,α_i)/2`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D | CartanType::E)
    }
}

/// A finite-type Cartan datum: `cartan[i][j] = ⟨h_i, α_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub ty: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub h: usize,
    pub star: Vec<usize>,
}

fn edges(ty: CartanType, n: usize) -> Vec<(usize, usize)> {
    match ty {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
            (0..n - 1).map(|i| (i, i + 1)).collect()
        }
        CartanType::D => {
            let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        CartanType::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

fn symmetrizer(ty: CartanType, n: usize) -> Vec<i64> {
    match ty {
        CartanType::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
        CartanType::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
        CartanType::F => vec![2, 2, 1, 1],
        CartanType::G => vec![1, 3],
        _ => vec![1; n],
    }
}

fn coxeter_number(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n + 1,
        CartanType::B | CartanType::C => 2 * n,
        CartanType::D => 2 * n - 2,
        CartanType::E => [12, 18, 30][n - 6],
        CartanType::F => 12,
        CartanType::G => 6,
    }
}

fn classical_star(ty: CartanType, n: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (0..n).collect();
    match ty {
        CartanType::A => s.reverse(),
        CartanType::D if n % 2 == 1 => s.swap(n - 2, n - 1),
        CartanType::E if n == 6 => {
            s.swap(0, 5);
            s.swap(2, 4);
        }
        _ => {}
    }
    s
}

impl CartanDatum {
    pub fn build(ty: CartanType, rank: usize) -> Result<Self> {
        let ok = match ty {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{}{}", ty.letter(), rank)));
        }
        let d = symmetrizer(ty, rank);
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges(ty, rank) {
            for (i, j) in [(a, b), (b, a)] {
                cartan[i][j] = if d[j] > d[i] { -(d[j] / d[i]) } else { -1 };
            }
        }
        let mut datum = CartanDatum { ty, rank, cartan, d, h: coxeter_number(ty, rank), star: (0..rank).collect() };
        let star = crate::weyl::star_from_longest(&datum);
        if star != classical_star(ty, rank) {
            return Err(Error::Internal(format!(
                "involution of {} from w0 disagrees with the classical table",
                datum.name()
            )));
        }
        datum.star = star;
        Ok(datum)
    }

    /// Parses labels such as `D5`, `e8`, `G2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let ty = match letter.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidType(s.to_string()))?;
        Self::build(ty, rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.ty.letter(), self.rank)
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// `(α_i, α_j) = d_i c_ij`.
    #[inline]
    pub fn sym(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.cartan[i][j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.adjacent(i, j))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.adjacent(i, j) {
                    e.push((i, j));
                }
            }
        }
        e
    }

    /// `ℐ = 2·Id − C`.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| if i == j { 0 } else { -self.cartan[i][j] }).collect()).collect()
    }

    /// Graph distance in the Dynkin diagram.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.distances_from(i)[j]
    }

    pub fn distances_from(&self, i: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.rank];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn num_positive_roots(&self) -> usize {
        self.rank * self.h / 2
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.ty.letter().to_string(),
            "rank": self.rank,
            "cartan": self.cartan,
            "d": self.d,
            "h": self.h,
            "star": self.star.iter().map(|s| s + 1).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for CartanDatum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutomorphismKind {
    /// The involution of `A_{2n-1}`, `D_{n+1}` and `E6`.
    Vee,
    /// The order-3 triality of `D4`.
    VeeTilde,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
    pub order: usize,
}

impl DiagramAutomorphism {
    /// Validates that `perm` preserves the Cartan matrix and moves no vertex
    /// to a neighbour.
    pub fn new(datum: &CartanDatum, perm: Vec<usize>) -> Result<Self> {
        let n = datum.rank;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidAutomorphism("not a permutation of the index set".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if datum.c(i, j) != datum.c(perm[i], perm[j]) {
                    return Err(Error::InvalidAutomorphism("does not preserve the Cartan matrix".into()));
                }
            }
            if datum.adjacent(i, perm[i]) {
                return Err(Error::InvalidAutomorphism(format!("vertex {} is adjacent to its image", i + 1)));
            }
        }
        let mut order = 1;
        let mut cur = perm.clone();
        while cur.iter().enumerate().any(|(i, &p)| i != p) {
            cur = cur.iter().map(|&p| perm[p]).collect();
            order += 1;
        }
        Ok(DiagramAutomorphism { perm, order })
    }

    pub fn standard(datum: &CartanDatum, kind: AutomorphismKind) -> Result<Self> {
        let n = datum.rank;
        let perm: Vec<usize> = match (kind, datum.ty) {
            (AutomorphismKind::Vee, CartanType::A) if n % 2 == 1 && n >= 3 => (0..n).rev().collect(),
            (AutomorphismKind::Vee, CartanType::D) => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            (AutomorphismKind::Vee, CartanType::E) if n == 6 => vec![5, 1, 4, 3, 2, 0],
            (AutomorphismKind::VeeTilde, CartanType::D) if n == 4 => vec![2, 1, 3, 0],
            _ => return Err(Error::InvalidAutomorphism(format!("{kind:?} is not defined on {}", datum.name()))),
        };
        Self::new(datum, perm)
    }

    /// Orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![i];
            seen[i] = true;
            let mut j = self.perm[i];
            while j != i {
                seen[j] = true;
                orbit.push(j);
                j = self.perm[j];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// Result of folding: the folded datum and the projection onto its indices.
#[derive(Clone, Debug)]
pub struct Folding {
    pub folded: CartanDatum,
    pub projection: Vec<usize>,
}

/// Folds by the orbit rule: `c̄_{π(i),π(j)} = Σ_{j' ∈ π⁻¹π(j)} c_{i,j'}`,
/// `d̄_{π(i)} = |π⁻¹π(i)|`. The folded matrix is matched against the
/// standard numbering of the target type.
pub fn fold(datum: &CartanDatum, sigma: &DiagramAutomorphism) -> Result<Folding> {
    let orbits = sigma.orbits();
    let m = orbits.len();
    let mut folded_c = vec![vec![0i64; m]; m];
    for (a, oa) in orbits.iter().enumerate() {
        for (b, ob) in orbits.iter().enumerate() {
            folded_c[a][b] = ob.iter().map(|&j| datum.c(oa[0], j)).sum();
        }
    }
    let sizes: Vec<i64> = orbits.iter().map(|o| o.len() as i64).collect();
    let target_ty = match (datum.ty, sigma.order) {
        (CartanType::A, 2) => CartanType::B,
        (CartanType::D, 2) => CartanType::C,
        (CartanType::E, 2) => CartanType::F,
        (CartanType::D, 3) => CartanType::G,
        _ => return Err(Error::InvalidAutomorphism("no folded type".into())),
    };
    let target = CartanDatum::build(target_ty, m)?;
    let assign = match_indices(&folded_c, &sizes, &target)
        .ok_or_else(|| Error::Internal("folded Cartan matrix does not match the target".into()))?;
    let mut projection = vec![0; datum.rank];
    for (a, o) in orbits.iter().enumerate() {
        for &i in o {
            projection[i] = assign[a];
        }
    }
    Ok(Folding { folded: target, projection })
}

fn match_indices(c: &[Vec<i64>], sizes: &[i64], target: &CartanDatum) -> Option<Vec<usize>> {
    fn go(k: usize, c: &[Vec<i64>], sizes: &[i64], t: &CartanDatum, cur: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if k == c.len() {
            return true;
        }
        for x in 0..t.rank {
            if used[x] || t.d[x] != sizes[k] {
                continue;
            }
            if (0..k).all(|l| c[k][l] == t.c(x, cur[l]) && c[l][k] == t.c(cur[l], x)) && c[k][k] == 2 {
                used[x] = true;
                cur.push(x);
                if go(k + 1, c, sizes, t, cur, used) {
                    return true;
                }
                cur.pop();
                used[x] = false;
            }
        }
        false
    }
    let mut cur = Vec::new();
    let mut used = vec![false; target.rank];
    go(0, c, sizes, target, &mut cur, &mut used).then_some(cur)
}

/// Every finite type of rank at most `max_rank` (E, F, G included when they fit).
pub fn finite_types(max_rank: usize) -> Vec<CartanDatum> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(CartanDatum::build(CartanType::A, n).unwrap());
        if n >= 2 {
            out.push(CartanDatum::build(CartanType::B, n).unwrap());
            out.push(CartanDatum::build(CartanType::C, n).unwrap());
        }
        if n >= 4 {
            out.push(CartanDatum::build(CartanType::D, n).unwrap());
        }
        if (6..=8).contains(&n) {
            out.push(CartanDatum::build(CartanType::E, n).unwrap());
        }
    }
    if max_rank >= 4 {
        out.push(CartanDatum::build(CartanType::F, 4).unwrap());
    }
    if max_rank >= 2 {
        out.push(CartanDatum::build(CartanType::G, 2).unwrap());
    }
    out
}

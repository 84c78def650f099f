//! Positive roots as coefficient vectors over the simple roots, the
//! symmetrized pairing, root strings and ε-coordinate labels.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cartan::{CartanDatum, CartanType};
use crate::error::{Error, Result};
use crate::Q;

/// Coefficients of a root over the simple roots.
pub type Root = Vec<i64>;

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

pub fn simple_root(rank: usize, i: usize) -> Root {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// `(a, b) = aᵀ (D C) b`.
pub fn pairing(datum: &CartanDatum, a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..datum.rank {
        if a[i] == 0 {
            continue;
        }
        for j in 0..datum.rank {
            s += a[i] * datum.sym(i, j) * b[j];
        }
    }
    s
}

/// `⟨h_i, v⟩` for `v` in root coordinates.
pub fn coroot_pairing(datum: &CartanDatum, i: usize, v: &[i64]) -> i64 {
    (0..datum.rank).map(|j| datum.c(i, j) * v[j]).sum()
}

pub fn reflect(datum: &CartanDatum, i: usize, v: &mut [i64]) {
    let k = coroot_pairing(datum, i, v);
    v[i] -= k;
}

pub fn reflect_q(datum: &CartanDatum, i: usize, v: &mut [Q]) {
    let mut k = Q::zero();
    for j in 0..datum.rank {
        k += Q::from_integer(datum.c(i, j)) * v[j];
    }
    v[i] -= k;
}

pub fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

/// The positive roots of a datum with fast membership and label lookup.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub datum: CartanDatum,
    pub roots: Vec<Root>,
    index: HashMap<Root, usize>,
    labels: HashMap<String, usize>,
}

impl RootSystem {
    /// Generates Φ⁺ by closing Π under simple reflections, then sorts by
    /// height and lexicographic coefficients.
    pub fn new(datum: &CartanDatum) -> Self {
        let n = datum.rank;
        let mut roots: Vec<Root> = (0..n).map(|i| simple_root(n, i)).collect();
        let mut seen: HashMap<Root, ()> = roots.iter().map(|r| (r.clone(), ())).collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..n {
                let mut v = roots[k].clone();
                reflect(datum, i, &mut v);
                if is_positive(&v) && !seen.contains_key(&v) {
                    seen.insert(v.clone(), ());
                    roots.push(v);
                }
            }
            k += 1;
        }
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let mut sys = RootSystem { datum: datum.clone(), roots, index, labels: HashMap::new() };
        sys.labels =
            (0..sys.roots.len()).map(|k| (normalize_label(&sys.label(&sys.roots[k]).to_string()), k)).collect();
        sys
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn simple_index(&self, i: usize) -> usize {
        self.index[&simple_root(self.datum.rank, i)]
    }

    /// Membership in Φ = Φ⁺ ⊔ −Φ⁺.
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Root = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    fn check(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.datum.rank && self.is_root(v) {
            Ok(())
        } else {
            Err(Error::NotARoot(v.to_vec()))
        }
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        self.check(a)?;
        self.check(b)?;
        Ok(pairing(&self.datum, a, b))
    }

    /// `d_β = (β,β)/2`.
    pub fn d_beta(&self, b: &[i64]) -> i64 {
        pairing(&self.datum, b, b) / 2
    }

    /// `p_{β,α} = max{p : β − pα ∈ Φ}`.
    pub fn root_string_p(&self, beta: &[i64], alpha: &[i64]) -> Result<i64> {
        self.check(beta)?;
        self.check(alpha)?;
        let mut p = 0;
        loop {
            let v: Root = beta.iter().zip(alpha).map(|(b, a)| b - (p + 1) * a).collect();
            if v.iter().all(|&x| x == 0) || !self.is_root(&v) {
                return Ok(p);
            }
            p += 1;
        }
    }

    /// ε-coordinate label of a positive root.
    pub fn label(&self, r: &[i64]) -> EpsilonLabel {
        epsilon_label(&self.datum, r)
    }

    pub fn label_string(&self, r: &[i64]) -> String {
        self.label(r).to_string()
    }

    /// Inverse of [`RootSystem::label`]; accepts ASCII spellings such as
    /// `<1,-3>` as well as `⟨1,−3⟩`.
    pub fn parse_label(&self, s: &str) -> Result<Root> {
        self.labels
            .get(&normalize_label(s))
            .map(|&k| self.roots[k].clone())
            .ok_or_else(|| Error::Parse(format!("`{s}` is not a positive root label of {}", self.datum.name())))
    }

    /// Accepts either a label or a coefficient tuple like `(1,2,2,1,1)`.
    pub fn parse_root(&self, s: &str) -> Result<Root> {
        let t = s.trim();
        if t.starts_with('(') && t.ends_with(')') {
            let v: std::result::Result<Vec<i64>, _> =
                t[1..t.len() - 1].split(',').map(|x| x.trim().parse::<i64>()).collect();
            let v = v.map_err(|e| Error::Parse(e.to_string()))?;
            return self.index_of(&v).map(|_| v.clone()).ok_or(Error::NotARoot(v));
        }
        self.parse_label(t)
    }
}

fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '⟨' => '<',
            '⟩' => '>',
            '−' => '-',
            c => c,
        })
        .collect::<String>()
        .replace('½', "1/2")
}

pub fn coeff_string(r: &[i64]) -> String {
    format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EpsilonLabel {
    /// `[a,b] = α_a + … + α_b` (type A).
    Segment(usize, usize),
    /// `⟨a,±b⟩ = ε_a ± ε_b`; `b` carries the sign.
    Pair(usize, i64),
    /// `⟨i⟩ = ε_i` (type B).
    Single(usize),
    /// `⟨i,i⟩ = 2ε_i` (type C).
    Double(usize),
    /// Orthonormal coordinates (F4, G2).
    Coords(Vec<Q>),
    /// Coefficient string (type E).
    Coeffs(Vec<i64>),
}

fn minus(x: i64) -> String {
    if x < 0 {
        format!("−{}", -x)
    } else {
        x.to_string()
    }
}

fn fmt_q(x: &Q) -> String {
    let s = if x.is_negative() { "−" } else { "" };
    let a = x.abs();
    if a.is_integer() {
        format!("{s}{}", a.numer())
    } else {
        format!("{s}{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for EpsilonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpsilonLabel::Segment(a, b) if a == b => write!(f, "[{a}]"),
            EpsilonLabel::Segment(a, b) => write!(f, "[{a},{b}]"),
            EpsilonLabel::Pair(a, b) => write!(f, "⟨{a},{}⟩", minus(*b)),
            EpsilonLabel::Single(i) => write!(f, "⟨{i}⟩"),
            EpsilonLabel::Double(i) => write!(f, "⟨{i},{i}⟩"),
            EpsilonLabel::Coords(v) => {
                write!(f, "⟨{}⟩", v.iter().map(fmt_q).collect::<Vec<_>>().join(","))
            }
            EpsilonLabel::Coeffs(v) => {
                for x in v {
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// ε-coordinates of the simple roots (types other than E).
fn simple_epsilon(datum: &CartanDatum) -> Vec<Vec<Q>> {
    let n = datum.rank;
    let int = |v: Vec<i64>| v.into_iter().map(Q::from_integer).collect::<Vec<_>>();
    let unit = |dim: usize, i: usize, j: Option<(usize, i64)>| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        if let Some((j, s)) = j {
            v[j] += s;
        }
        v
    };
    match datum.ty {
        CartanType::A => (0..n).map(|i| int(unit(n + 1, i, Some((i + 1, -1))))).collect(),
        CartanType::B | CartanType::C | CartanType::D => (0..n)
            .map(|i| {
                if i + 1 < n {
                    int(unit(n, i, Some((i + 1, -1))))
                } else {
                    match datum.ty {
                        CartanType::B => int(unit(n, i, None)),
                        CartanType::C => int(unit(n, i, Some((i, 1)))),
                        _ => int(unit(n, i - 1, Some((i, 1)))),
                    }
                }
            })
            .collect(),
        CartanType::F => {
            let h = Q::new(1, 2);
            vec![int(vec![0, 1, -1, 0]), int(vec![0, 0, 1, -1]), int(vec![0, 0, 0, 1]), vec![h, -h, -h, -h]]
        }
        CartanType::G => vec![int(vec![0, 1, -1]), int(vec![1, -2, 1])],
        CartanType::E => Vec::new(),
    }
}

pub fn epsilon_vector(datum: &CartanDatum, r: &[i64]) -> Vec<Q> {
    let basis = simple_epsilon(datum);
    let dim = basis.first().map_or(0, |b| b.len());
    let mut v = vec![Q::zero(); dim];
    for (c, b) in r.iter().zip(&basis) {
        for (x, y) in v.iter_mut().zip(b) {
            *x += Q::from_integer(*c) * *y;
        }
    }
    v
}

pub fn epsilon_label(datum: &CartanDatum, r: &[i64]) -> EpsilonLabel {
    match datum.ty {
        CartanType::E => EpsilonLabel::Coeffs(r.to_vec()),
        CartanType::A => {
            let a = r.iter().position(|&x| x != 0).unwrap_or(0);
            let b = r.iter().rposition(|&x| x != 0).unwrap_or(0);
            EpsilonLabel::Segment(a + 1, b + 1)
        }
        CartanType::F | CartanType::G => EpsilonLabel::Coords(epsilon_vector(datum, r)),
        _ => {
            let v = epsilon_vector(datum, r);
            let nz: Vec<(usize, Q)> =
                v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i + 1, *x)).collect();
            match nz.as_slice() {
                [(i, x)] if x.is_one() => EpsilonLabel::Single(*i),
                [(i, _)] => EpsilonLabel::Double(*i),
                [(i, _), (j, y)] => EpsilonLabel::Pair(*i, if y.is_positive() { *j as i64 } else { -(*j as i64) }),
                _ => EpsilonLabel::Coeffs(r.to_vec()),
            }
        }
    }
}

/// Case table for `p_{β,α}` when `α + β` is a root; used as an oracle.
pub fn p_case_table(sys: &RootSystem, alpha: &[i64], beta: &[i64]) -> i64 {
    let g: Root = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
    let (da, db, dg) = (sys.d_beta(alpha), sys.d_beta(beta), sys.d_beta(&g));
    if dg == 3 && da == 1 && db == 1 {
        2
    } else if da == 1 && db == 1 && (dg == 2 || (sys.datum.ty == CartanType::G && dg == 1)) {
        1
    } else {
        0
    }
}

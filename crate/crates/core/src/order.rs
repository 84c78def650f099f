//! The convex partial order `≺_[w0]`, exponent vectors and the class-wide
//! bi-lexicographic order: simplicity, minimal pairs, heads and degrees.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Mutex;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::arquiver::{ARQuiver, Upsilon};
use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::quiver::DynkinQuiver;
use crate::roots::{Root, RootSystem};
use crate::weyl::{self, Word};

/// Hard cap on the number of exponent vectors enumerated per weight.
pub const ENUMERATION_CAP: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    Incomparable,
    Equal,
}

/// Multiplicities indexed like `RootSystem::roots`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    pub mult: Vec<u32>,
}

impl ExponentVector {
    pub fn zero(sys: &RootSystem) -> Self {
        ExponentVector { mult: vec![0; sys.len()] }
    }

    pub fn single(sys: &RootSystem, r: &[i64]) -> Result<Self> {
        Self::from_roots(sys, &[r])
    }

    pub fn pair(sys: &RootSystem, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::from_roots(sys, &[a, b])
    }

    pub fn from_roots(sys: &RootSystem, rs: &[&[i64]]) -> Result<Self> {
        let mut m = Self::zero(sys);
        for r in rs {
            let k = sys.index_of(r).ok_or_else(|| Error::NotARoot(r.to_vec()))?;
            m.mult[k] += 1;
        }
        Ok(m)
    }

    pub fn weight(&self, sys: &RootSystem) -> Root {
        let mut w = vec![0i64; sys.datum.rank];
        for (k, &c) in self.mult.iter().enumerate() {
            for (x, y) in w.iter_mut().zip(&sys.roots[k]) {
                *x += c as i64 * y;
            }
        }
        w
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&k| self.mult[k] > 0).collect()
    }

    pub fn size(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// Formal sum, e.g. `2⟨1⟩ + ⟨3,4⟩`.
    pub fn render(&self, sys: &RootSystem) -> String {
        let mut s = String::new();
        for k in self.support() {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            if self.mult[k] > 1 {
                write!(s, "{}", self.mult[k]).unwrap();
            }
            s.push_str(&sys.label_string(&sys.roots[k]));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn to_json(&self, sys: &RootSystem) -> serde_json::Value {
        let terms: Vec<_> =
            self.support().into_iter().map(|k| json!({"root": sys.roots[k], "mult": self.mult[k]})).collect();
        json!({ "terms": terms })
    }
}

/// `≺` on `Φ⁺` for one commutation class, as strict-less bitsets.
#[derive(Debug)]
pub struct ConvexOrder {
    pub sys: RootSystem,
    /// `below[b]` contains `a` iff `a ≺ b`.
    below: Vec<FixedBitSet>,
    deg_cache: Mutex<HashMap<ExponentVector, usize>>,
}

impl Clone for ConvexOrder {
    fn clone(&self) -> Self {
        ConvexOrder { sys: self.sys.clone(), below: self.below.clone(), deg_cache: Mutex::new(HashMap::new()) }
    }
}

impl ConvexOrder {
    /// Path order of `Υ`: `α ≺ β` iff there is a path from `β` to `α`.
    pub fn from_upsilon(datum: &CartanDatum, u: &Upsilon) -> Result<Self> {
        let sys = RootSystem::new(datum);
        let n = sys.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (from, to) in u.arrows.keys() {
            let a = sys.index_of(from).ok_or_else(|| Error::NotARoot(from.clone()))?;
            let b = sys.index_of(to).ok_or_else(|| Error::NotARoot(to.clone()))?;
            succ[a].push(b);
        }
        // reach[b] ∋ a iff a path b → a; compute by DFS from every vertex
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (b, set) in below.iter_mut().enumerate() {
            let mut stack = succ[b].clone();
            while let Some(a) = stack.pop() {
                if !set.contains(a) {
                    set.insert(a);
                    stack.extend(&succ[a]);
                }
            }
            if set.contains(b) {
                return Err(Error::Internal("Υ has a cycle".into()));
            }
        }
        Ok(ConvexOrder { sys, below, deg_cache: Mutex::new(HashMap::new()) })
    }

    pub fn from_quiver(q: &DynkinQuiver) -> Result<Self> {
        Self::from_ar(&ARQuiver::new(q)?)
    }

    /// Reads `≺_Q` off the path order of `Γ_Q`.
    pub fn from_ar(ar: &ARQuiver) -> Result<Self> {
        let sys = ar.roots.clone();
        let n = sys.len();
        let at: Vec<usize> = sys.roots.iter().map(|r| ar.index_of_root(r).expect("Γ_Q covers Φ⁺")).collect();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for b in 0..n {
            for a in 0..n {
                if a != b && ar.leq_idx(at[a], at[b]) {
                    below[b].insert(a);
                }
            }
        }
        Ok(ConvexOrder { sys, below, deg_cache: Mutex::new(HashMap::new()) })
    }

    pub fn same_order(&self, other: &ConvexOrder) -> bool {
        self.below == other.below
    }

    /// The class `[w]` of a reduced word of `w0`.
    pub fn from_word(datum: &CartanDatum, w: &[usize]) -> Result<Self> {
        Self::from_upsilon(datum, &crate::arquiver::upsilon(datum, w)?)
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    /// Strict `a ≺ b` on root indices.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn compare(&self, a: usize, b: usize) -> Comparison {
        if a == b {
            Comparison::Equal
        } else if self.less(a, b) {
            Comparison::Less
        } else if self.less(b, a) {
            Comparison::Greater
        } else {
            Comparison::Incomparable
        }
    }

    pub fn compare_roots(&self, a: &[i64], b: &[i64]) -> Result<Comparison> {
        let ia = self.sys.index_of(a).ok_or_else(|| Error::NotARoot(a.to_vec()))?;
        let ib = self.sys.index_of(b).ok_or_else(|| Error::NotARoot(b.to_vec()))?;
        Ok(self.compare(ia, ib))
    }

    /// `⟨α, β⟩` is a pair iff `β ⋠ α`.
    pub fn is_pair(&self, a: usize, b: usize) -> bool {
        a != b && !self.less(b, a)
    }

    /// Class-wide `m ≺^b m'`: the disagreement set `D` is nonempty and
    /// every `≺`-minimal and `≺`-maximal element of `D` has `m_β < m'_β`.
    pub fn bilex_less(&self, m: &ExponentVector, m2: &ExponentVector) -> Result<bool> {
        if m.weight(&self.sys) != m2.weight(&self.sys) {
            return Err(Error::WeightMismatch);
        }
        Ok(self.bilex_less_unchecked(m, m2))
    }

    fn bilex_less_unchecked(&self, m: &ExponentVector, m2: &ExponentVector) -> bool {
        let d: Vec<usize> = (0..m.mult.len()).filter(|&k| m.mult[k] != m2.mult[k]).collect();
        if d.is_empty() {
            return false;
        }
        d.iter().all(|&b| {
            let minimal = !d.iter().any(|&a| self.less(a, b));
            let maximal = !d.iter().any(|&c| self.less(b, c));
            !(minimal || maximal) || m.mult[b] < m2.mult[b]
        })
    }

    /// `{β : α ≼ β ≼ α'}` for `α, α'` in the support.
    pub fn hull(&self, m: &ExponentVector) -> Vec<usize> {
        let supp = m.support();
        (0..self.n())
            .filter(|&b| {
                supp.contains(&b) || (supp.iter().any(|&a| self.less(a, b)) && supp.iter().any(|&c| self.less(b, c)))
            })
            .collect()
    }

    /// Everything strictly `≺^b`-below `m` (the down-set minus `m`).
    pub fn below_set(&self, m: &ExponentVector) -> Result<Vec<ExponentVector>> {
        let hull = self.hull(m);
        let all = enumerate_over(&self.sys, &hull, &m.weight(&self.sys))?;
        Ok(all.into_iter().filter(|x| self.bilex_less_unchecked(x, m)).collect())
    }

    pub fn is_simple(&self, m: &ExponentVector) -> Result<bool> {
        Ok(self.below_set(m)?.is_empty())
    }

    /// Longest `≺^b`-chain ending at `m`.
    pub fn deg(&self, m: &ExponentVector) -> Result<usize> {
        if let Some(&d) = self.deg_cache.lock().unwrap().get(m) {
            return Ok(d);
        }
        let down = self.below_set(m)?;
        let d = longest_chain(&down, |a, b| self.bilex_less_unchecked(a, b));
        self.deg_cache.lock().unwrap().insert(m.clone(), d);
        Ok(d)
    }

    /// The unique simple vector `≼^b m`.
    pub fn head(&self, m: &ExponentVector) -> Result<ExponentVector> {
        let down = self.below_set(m)?;
        if down.is_empty() {
            return Ok(m.clone());
        }
        let simple: Vec<&ExponentVector> =
            down.iter().filter(|x| !down.iter().any(|y| self.bilex_less_unchecked(y, x))).collect();
        match simple.as_slice() {
            [s] => Ok((*s).clone()),
            _ => Err(Error::HeadUndefined(simple.len())),
        }
    }

    /// Pairs `⟨α, β⟩` with `α + β = γ` that cover `γ` under `≺^b`.
    pub fn minimal_pairs(&self, gamma: &[i64]) -> Result<Vec<(Root, Root)>> {
        let g = ExponentVector::single(&self.sys, gamma)?;
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in 0..self.n() {
                let sum: Root = self.sys.roots[a].iter().zip(&self.sys.roots[b]).map(|(x, y)| x + y).collect();
                if sum != gamma || !self.is_pair(a, b) || (self.compare(a, b) == Comparison::Incomparable && a > b) {
                    continue;
                }
                let p = ExponentVector::pair(&self.sys, &self.sys.roots[a], &self.sys.roots[b])?;
                if !self.bilex_less_unchecked(&g, &p) {
                    continue;
                }
                let down = self.below_set(&p)?;
                if !down.iter().any(|x| self.bilex_less_unchecked(&g, x)) {
                    out.push((self.sys.roots[a].clone(), self.sys.roots[b].clone()));
                }
            }
        }
        Ok(out)
    }

    pub fn is_minimal_pair(&self, a: &[i64], b: &[i64]) -> Result<bool> {
        let gamma: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if !self.sys.is_root(&gamma) {
            return Ok(false);
        }
        let (ia, ib) = (self.idx(a)?, self.idx(b)?);
        if !self.is_pair(ia, ib) && !self.is_pair(ib, ia) {
            return Ok(false);
        }
        let set: BTreeSet<(Root, Root)> = self.minimal_pairs(&gamma)?.into_iter().collect();
        Ok(set.contains(&(a.to_vec(), b.to_vec())) || set.contains(&(b.to_vec(), a.to_vec())))
    }

    fn idx(&self, r: &[i64]) -> Result<usize> {
        self.sys.index_of(r).ok_or_else(|| Error::NotARoot(r.to_vec()))
    }
}

/// All exponent vectors of weight `w` over every positive root.
pub fn enumerate_exponent_vectors(datum: &CartanDatum, w: &[i64]) -> Result<Vec<ExponentVector>> {
    let sys = RootSystem::new(datum);
    let all: Vec<usize> = (0..sys.len()).collect();
    enumerate_over(&sys, &all, w)
}

/// Exponent vectors of weight `w` supported on `roots`.
/// Counts first and refuses above `ENUMERATION_CAP`.
pub fn enumerate_over(sys: &RootSystem, roots: &[usize], w: &[i64]) -> Result<Vec<ExponentVector>> {
    if w.iter().any(|&x| x < 0) {
        return Ok(Vec::new());
    }
    // tallest first; the height-one tail is linearly independent and
    // is resolved in one step
    let mut roots: Vec<usize> =
        roots.iter().copied().filter(|&k| sys.roots[k].iter().zip(w).all(|(a, b)| a <= b)).collect();
    roots.sort_by_key(|&k| std::cmp::Reverse(crate::roots::height(&sys.roots[k])));
    let tail = roots.iter().position(|&k| crate::roots::height(&sys.roots[k]) == 1).unwrap_or(roots.len());
    let c = count_vectors(sys, &roots, w);
    if c > ENUMERATION_CAP as u128 {
        return Err(Error::Budget { count: c, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::with_capacity(c as usize);
    let mut cur = vec![0u32; sys.len()];
    let mut rest = w.to_vec();
    walk(sys, &roots, tail, 0, &mut rest, &mut cur, &mut |v| {
        out.push(ExponentVector { mult: v.to_vec() });
        true
    });
    Ok(out)
}

/// Visits every completion of `cur`; the callback returns `false` to stop.
fn walk(
    sys: &RootSystem,
    roots: &[usize],
    tail: usize,
    k: usize,
    w: &mut Root,
    cur: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    if k == tail {
        // remaining simple roots: unique solution or none
        let mut touched = Vec::new();
        for &r in &roots[tail..] {
            let i = sys.roots[r].iter().position(|&x| x == 1).unwrap();
            if w[i] > 0 {
                cur[r] += w[i] as u32;
                touched.push((r, i, w[i]));
                w[i] = 0;
            }
        }
        let go_on = if w.iter().all(|&x| x == 0) { emit(cur) } else { true };
        for (r, i, m) in touched {
            cur[r] -= m as u32;
            w[i] = m;
        }
        return go_on;
    }
    let r = &sys.roots[roots[k]];
    let mut used = 0i64;
    let mut go_on = true;
    loop {
        if !walk(sys, roots, tail, k + 1, w, cur, emit) {
            go_on = false;
            break;
        }
        if w.iter().zip(r).any(|(x, y)| x < y) {
            break;
        }
        w.iter_mut().zip(r).for_each(|(x, y)| *x -= y);
        cur[roots[k]] += 1;
        used += 1;
    }
    w.iter_mut().zip(r).for_each(|(x, y)| *x += used * y);
    cur[roots[k]] -= used as u32;
    go_on
}

/// Number of vectors, saturating just above the cap.
fn count_vectors(sys: &RootSystem, roots: &[usize], w: &[i64]) -> u128 {
    let limit = ENUMERATION_CAP + 1;
    let boxsize = w.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x as u64 + 1));
    match boxsize {
        Some(n) if n <= 1 << 23 => {
            // unbounded knapsack over the box 0 ≤ v ≤ w
            let n = n as usize;
            let rank = w.len();
            let mut stride = vec![1usize; rank];
            for i in 1..rank {
                stride[i] = stride[i - 1] * (w[i - 1] as usize + 1);
            }
            let mut f = vec![0u64; n];
            f[0] = 1;
            let mut coord = vec![0i64; rank];
            for &k in roots {
                let r = &sys.roots[k];
                let off: usize = r.iter().zip(&stride).map(|(&a, &s)| a as usize * s).sum();
                coord.iter_mut().for_each(|c| *c = 0);
                for idx in 0..n {
                    if idx > 0 {
                        for i in 0..rank {
                            coord[i] += 1;
                            if coord[i] <= w[i] {
                                break;
                            }
                            coord[i] = 0;
                        }
                    }
                    if coord.iter().zip(r).all(|(c, a)| c >= a) {
                        f[idx] = (f[idx] + f[idx - off]).min(limit);
                    }
                }
            }
            f[n - 1] as u128
        }
        _ => {
            let tail = roots.iter().position(|&k| crate::roots::height(&sys.roots[k]) == 1).unwrap_or(roots.len());
            let mut c = 0u64;
            let mut cur = vec![0u32; sys.len()];
            walk(sys, roots, tail, 0, &mut w.to_vec(), &mut cur, &mut |_| {
                c += 1;
                c < limit
            });
            c as u128
        }
    }
}

/// Literal bi-lexicographic order for one reduced word.
pub fn bilex_less_word(sys: &RootSystem, word_betas: &[Root], m: &ExponentVector, m2: &ExponentVector) -> bool {
    if m.weight(sys) != m2.weight(sys) {
        return false;
    }
    let seq: Vec<usize> = word_betas.iter().map(|b| sys.index_of(b).expect("β is a root")).collect();
    let first = seq.iter().find(|&&k| m.mult[k] != m2.mult[k]);
    let last = seq.iter().rev().find(|&&k| m.mult[k] != m2.mult[k]);
    match (first, last) {
        (Some(&a), Some(&b)) => m.mult[a] < m2.mult[a] && m.mult[b] < m2.mult[b],
        _ => false,
    }
}

/// Every reduced word in the class of `w` (rank ≤ 3).
pub fn class_words(datum: &CartanDatum, w: &[usize]) -> Result<Vec<Word>> {
    let target = crate::arquiver::upsilon(datum, w)?;
    let all = weyl::all_longest_words(datum)?;
    let mut out = Vec::new();
    for v in all {
        if crate::arquiver::upsilon_any(datum, &v)? == target {
            out.push(v);
        }
    }
    Ok(out)
}

/// Oracle: `m ≺^b m'` for every word of the class, evaluated literally.
pub fn bilex_less_oracle(datum: &CartanDatum, class: &[Word], m: &ExponentVector, m2: &ExponentVector) -> Result<bool> {
    let sys = RootSystem::new(datum);
    if m.weight(&sys) != m2.weight(&sys) {
        return Err(Error::WeightMismatch);
    }
    for w in class {
        let betas = weyl::beta_sequence(datum, w)?;
        if !bilex_less_word(&sys, &betas, m, m2) {
            return Ok(false);
        }
    }
    Ok(!class.is_empty())
}

/// Longest chain in `down` under `less`, counting the element above all of
/// them (0 when `down` is empty).
fn longest_chain(down: &[ExponentVector], less: impl Fn(&ExponentVector, &ExponentVector) -> bool) -> usize {
    let k = down.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            if a != b && less(&down[a], &down[b]) {
                preds[b].push(a);
            }
        }
    }
    fn longest(v: usize, preds: &[Vec<usize>], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let x = preds[v].iter().map(|&u| longest(u, preds, memo) + 1).max().unwrap_or(0);
        memo[v] = Some(x);
        x
    }
    let mut memo = vec![None; k];
    (0..k).map(|v| longest(v, &preds, &mut memo) + 1).max().unwrap_or(0)
}

/// `≺^b` evaluated literally over every word of a commutation class, with no
/// use of the min/max characterization. Rank ≤ 3 only.
#[derive(Clone, Debug)]
pub struct LiteralOrder {
    pub sys: RootSystem,
    datum: CartanDatum,
    seqs: Vec<Vec<usize>>,
}

impl LiteralOrder {
    pub fn new(datum: &CartanDatum, w: &[usize]) -> Result<Self> {
        let sys = RootSystem::new(datum);
        let mut seqs = Vec::new();
        for v in class_words(datum, w)? {
            let betas = weyl::beta_sequence(datum, &v)?;
            seqs.push(betas.iter().map(|b| sys.index_of(b).expect("β is a root")).collect());
        }
        Ok(LiteralOrder { sys, datum: datum.clone(), seqs })
    }

    pub fn for_quiver(q: &DynkinQuiver) -> Result<Self> {
        Self::new(&q.datum, &q.adapted_reduced_word())
    }

    pub fn class_size(&self) -> usize {
        self.seqs.len()
    }

    pub fn less(&self, m: &ExponentVector, m2: &ExponentVector) -> bool {
        !self.seqs.is_empty()
            && self.seqs.iter().all(|seq| {
                let first = seq.iter().find(|&&k| m.mult[k] != m2.mult[k]);
                let last = seq.iter().rev().find(|&&k| m.mult[k] != m2.mult[k]);
                matches!((first, last), (Some(&a), Some(&b)) if m.mult[a] < m2.mult[a] && m.mult[b] < m2.mult[b])
            })
    }

    /// Longest chain below `m` over all vectors of its weight.
    pub fn deg(&self, m: &ExponentVector) -> Result<usize> {
        let all = enumerate_exponent_vectors(&self.datum, &m.weight(&self.sys))?;
        let down: Vec<ExponentVector> = all.into_iter().filter(|x| self.less(x, m)).collect();
        Ok(longest_chain(&down, |a, b| self.less(a, b)))
    }
}

/// One representative word per commutation class of `w0` (rank ≤ 3).
pub fn commutation_classes(datum: &CartanDatum) -> Result<Vec<Vec<Word>>> {
    let all = weyl::all_longest_words(datum)?;
    let mut classes: Vec<(Upsilon, Vec<Word>)> = Vec::new();
    for w in all {
        let u = crate::arquiver::upsilon_any(datum, &w)?;
        match classes.iter_mut().find(|c| c.0 == u) {
            Some(c) => c.1.push(w),
            None => classes.push((u, vec![w])),
        }
    }
    Ok(classes.into_iter().map(|c| c.1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::DynkinQuiver;

    #[test]
    fn literal_degrees_match() {
        for t in ["A3", "B2", "C3", "G2"] {
            for q in crate::quiver::all_quivers(&CartanDatum::parse(t).unwrap()) {
                let o = ConvexOrder::from_quiver(&q).unwrap();
                let lit = LiteralOrder::for_quiver(&q).unwrap();
                assert!(lit.class_size() >= 1);
                for a in 0..o.n() {
                    for b in 0..o.n() {
                        if a != b && o.is_pair(a, b) {
                            let m = ExponentVector::pair(&o.sys, &o.sys.roots[a], &o.sys.roots[b]).unwrap();
                            assert_eq!(lit.deg(&m).unwrap(), o.deg(&m).unwrap(), "{q}");
                        }
                    }
                }
            }
        }
    }

    fn order(t: &str, h: &str) -> ConvexOrder {
        ConvexOrder::from_quiver(&DynkinQuiver::parse(t, h).unwrap()).unwrap()
    }

    fn ev(o: &ConvexOrder, labels: &[&str]) -> ExponentVector {
        let roots: Vec<Root> = labels.iter().map(|l| o.sys.parse_label(l).unwrap()).collect();
        let refs: Vec<&[i64]> = roots.iter().map(|r| r.as_slice()).collect();
        ExponentVector::from_roots(&o.sys, &refs).unwrap()
    }

    #[test]
    fn convex_examples() {
        let o = order("C3", "4,3,2");
        let a = o.sys.parse_label("⟨1,-3⟩").unwrap();
        let b = o.sys.parse_label("⟨2,-3⟩").unwrap();
        assert_eq!(o.compare_roots(&a, &b).unwrap(), Comparison::Less);
        assert_eq!(o.compare_roots(&a, &a).unwrap(), Comparison::Equal);
    }

    #[test]
    fn ar_order_equals_upsilon_order() {
        for (t, h) in [("D5", "3,2,1,0,0"), ("B3", "2,1,0"), ("G2", "1,0"), ("F4", "4,3,2,1")] {
            let ar = ARQuiver::new(&DynkinQuiver::parse(t, h).unwrap()).unwrap();
            let a = ConvexOrder::from_ar(&ar).unwrap();
            let b = ConvexOrder::from_upsilon(ar.datum(), &ar.upsilon()).unwrap();
            assert!(a.same_order(&b), "{t}");
        }
    }

    #[test]
    fn enumeration() {
        let a2 = CartanDatum::parse("A2").unwrap();
        assert_eq!(enumerate_exponent_vectors(&a2, &[1, 1]).unwrap().len(), 2);
        assert_eq!(enumerate_exponent_vectors(&a2, &[1, 0]).unwrap().len(), 1);
        // Kostant partition function of A3 at the highest root is 4
        let a3 = CartanDatum::parse("A3").unwrap();
        assert_eq!(enumerate_exponent_vectors(&a3, &[1, 1, 1]).unwrap().len(), 4);
        let e8 = CartanDatum::parse("E8").unwrap();
        assert!(matches!(enumerate_exponent_vectors(&e8, &[4, 6, 8, 12, 10, 8, 6, 4]), Err(Error::Budget { .. })));
    }

    #[test]
    fn bilex_examples() {
        let o = order("D5", "3,2,1,0,0");
        let m = ev(&o, &["⟨1,-4⟩"]);
        assert!(!o.bilex_less(&m, &m).unwrap());
        let p = ev(&o, &["⟨1,-2⟩", "⟨2,-4⟩"]);
        assert!(o.bilex_less(&m, &p).unwrap());
        assert!(o.bilex_less(&m, &ev(&o, &["⟨1,2⟩"])).is_err());
        let o = order("B4", "2,3,2,3");
        assert!(o.bilex_less(&ev(&o, &["⟨1⟩", "⟨1⟩"]), &ev(&o, &["⟨1,-3⟩", "⟨1,3⟩"])).unwrap());
    }

    #[test]
    fn heads() {
        let o = order("B4", "2,3,2,3");
        let h = o.head(&ev(&o, &["⟨1,4⟩", "⟨1,3⟩"])).unwrap();
        assert_eq!(h, ev(&o, &["⟨3,4⟩", "⟨1⟩", "⟨1⟩"]));
        let o = order("C4", "2,3,2,3");
        let h = o.head(&ev(&o, &["⟨3,3⟩", "⟨4,4⟩"])).unwrap();
        assert_eq!(h, ev(&o, &["⟨3,4⟩", "⟨3,4⟩"]));
        let o = order("C3", "4,3,2");
        let g = o.sys.parse_label("⟨2,3⟩").unwrap();
        let mp = o.minimal_pairs(&g).unwrap();
        let a = o.sys.parse_label("⟨2,-3⟩").unwrap();
        let b = o.sys.parse_label("⟨3,3⟩").unwrap();
        assert!(mp.contains(&(a.clone(), b.clone())) || mp.contains(&(b, a)), "{mp:?}");
    }

    #[test]
    fn simple_roots_and_degrees() {
        let o = order("A3", "2,1,0");
        for r in o.sys.roots.clone() {
            let m = ExponentVector::single(&o.sys, &r).unwrap();
            assert!(o.is_simple(&m).unwrap());
            assert_eq!(o.deg(&m).unwrap(), 0);
            for (a, b) in o.minimal_pairs(&r).unwrap() {
                let p = ExponentVector::pair(&o.sys, &a, &b).unwrap();
                assert_eq!(o.head(&p).unwrap(), m);
                assert_eq!(o.deg(&p).unwrap(), 1);
            }
        }
    }

    #[test]
    fn characterization_matches_literal_definition_small() {
        let x = CartanDatum::parse("B2").unwrap();
        for class in commutation_classes(&x).unwrap() {
            let o = ConvexOrder::from_word(&x, &class[0]).unwrap();
            let sys = &o.sys;
            let w = sys.roots.iter().fold(vec![0; 2], |acc, r| acc.iter().zip(r).map(|(a, b)| a + b).collect());
            let vs = enumerate_exponent_vectors(&x, &w).unwrap();
            for a in &vs {
                for b in &vs {
                    assert_eq!(o.bilex_less(a, b).unwrap(), bilex_less_oracle(&x, &class, a, b).unwrap());
                }
            }
        }
    }
}

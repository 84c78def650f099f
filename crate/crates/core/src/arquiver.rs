//! The repetition quiver, `φ_Q`, the AR-quiver `Γ_Q`, the combinatorial
//! quiver `Υ` of a reduced word, label-free labeling algorithms and exports.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::cartan::{CartanDatum, CartanType};
use crate::error::{Error, Result};
use crate::quiver::{self, DynkinQuiver, SubFolding};
use crate::roots::{self, is_positive, EpsilonLabel, Root, RootSystem};
use crate::weyl;

/// Vertex `(i, p)` of `Γ_Q`, 0-based residue.
pub type Coord = (usize, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArVertex {
    pub i: usize,
    pub p: i64,
    pub root: Root,
}

#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub quiver: DynkinQuiver,
    pub roots: RootSystem,
    /// Sorted by `p` descending, then residue.
    pub vertices: Vec<ArVertex>,
    /// `(from, to, multiplicity)` as vertex indices.
    pub arrows: Vec<(usize, usize, i64)>,
    index: HashMap<Coord, usize>,
    by_root: HashMap<Root, usize>,
    /// `reach[v]`: vertices reachable from `v` by a (possibly empty) path.
    reach: Vec<FixedBitSet>,
}

impl PartialEq for ARQuiver {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.vertices == other.vertices && self.arrows == other.arrows
    }
}

/// `φ_Q(i, p)`: the root and the shift `u` with `φ = (β, u)`.
pub fn phi(q: &DynkinQuiver, i: usize, p: i64) -> Result<(Root, i64)> {
    if i >= q.rank() {
        return Err(Error::OutsideQuiver(i + 1, p));
    }
    if (p - q.xi[i]).rem_euclid(2) != 0 {
        return Err(Error::Parity(i + 1, p));
    }
    let mut beta = q.gamma(i)?;
    let mut u = 0i64;
    let word = q.coxeter_word();
    let mut inv = word.clone();
    inv.reverse();
    let mut cur = q.xi[i];
    while cur > p {
        beta = weyl::apply_word(&q.datum, &word, &beta);
        if !is_positive(&beta) {
            beta.iter_mut().for_each(|x| *x = -*x);
            u += 1;
        }
        cur -= 2;
    }
    while cur < p {
        beta = weyl::apply_word(&q.datum, &inv, &beta);
        if !is_positive(&beta) {
            beta.iter_mut().for_each(|x| *x = -*x);
            u -= 1;
        }
        cur += 2;
    }
    Ok((beta, u))
}

/// Rows of `Γ_Q`: the window `ξ_i ≥ p > ξ_{i*} − h`, walked from the anchor.
fn rows(q: &DynkinQuiver) -> Result<Vec<ArVertex>> {
    let h = q.datum.h as i64;
    let word = q.coxeter_word();
    let mut out = Vec::new();
    for i in 0..q.rank() {
        let lo = q.xi[q.datum.star[i]] - h;
        let mut beta = q.gamma(i)?;
        let mut p = q.xi[i];
        while p > lo {
            if !is_positive(&beta) {
                return Err(Error::Internal(format!("φ_Q({}, {p}) left Φ⁺ inside the window", i + 1)));
            }
            out.push(ArVertex { i, p, root: beta.clone() });
            beta = weyl::apply_word(&q.datum, &word, &beta);
            p -= 2;
        }
    }
    Ok(out)
}

impl ARQuiver {
    pub fn new(q: &DynkinQuiver) -> Result<Self> {
        let verts = rows(q)?;
        Self::from_vertices(q, verts)
    }

    fn from_vertices(q: &DynkinQuiver, mut vertices: Vec<ArVertex>) -> Result<Self> {
        vertices.sort_by(|a, b| b.p.cmp(&a.p).then(a.i.cmp(&b.i)));
        let roots = RootSystem::new(&q.datum);
        let index: HashMap<Coord, usize> = vertices.iter().enumerate().map(|(k, v)| ((v.i, v.p), k)).collect();
        let by_root: HashMap<Root, usize> = vertices.iter().enumerate().map(|(k, v)| (v.root.clone(), k)).collect();
        if by_root.len() != roots.len() || vertices.len() != roots.len() {
            return Err(Error::Internal(format!(
                "Γ_Q has {} vertices / {} distinct labels, Φ⁺ has {}",
                vertices.len(),
                by_root.len(),
                roots.len()
            )));
        }
        let mut arrows = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            for j in q.datum.neighbors(v.i) {
                if let Some(&l) = index.get(&(j, v.p + 1)) {
                    arrows.push((k, l, -q.datum.c(v.i, j)));
                }
            }
        }
        arrows.sort();
        let n = vertices.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b, _) in &arrows {
            succ[a].push(b);
        }
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        // successors have larger p, hence smaller index
        for k in 0..n {
            reach[k].insert(k);
            for &s in &succ[k] {
                let other = reach[s].clone();
                reach[k].union_with(&other);
            }
        }
        Ok(ARQuiver { quiver: q.clone(), roots, vertices, arrows, index, by_root, reach })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.quiver.datum
    }

    pub fn vertex_at(&self, i: usize, p: i64) -> Option<&ArVertex> {
        self.index.get(&(i, p)).map(|&k| &self.vertices[k])
    }

    pub fn root_at(&self, i: usize, p: i64) -> Result<&Root> {
        self.vertex_at(i, p).map(|v| &v.root).ok_or(Error::OutsideQuiver(i + 1, p))
    }

    /// `φ_Q^{-1}(β, 0)`.
    pub fn coord(&self, beta: &[i64]) -> Result<Coord> {
        self.by_root
            .get(beta)
            .map(|&k| (self.vertices[k].i, self.vertices[k].p))
            .ok_or_else(|| Error::NotARoot(beta.to_vec()))
    }

    pub fn residue(&self, beta: &[i64]) -> Result<usize> {
        self.coord(beta).map(|c| c.0)
    }

    fn idx(&self, beta: &[i64]) -> Result<usize> {
        self.by_root.get(beta).copied().ok_or_else(|| Error::NotARoot(beta.to_vec()))
    }

    /// `α ≼_Q β` iff there is a path from `β` to `α`.
    pub fn leq(&self, alpha: &[i64], beta: &[i64]) -> Result<bool> {
        let (a, b) = (self.idx(alpha)?, self.idx(beta)?);
        Ok(self.reach[b].contains(a))
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.reach[b].contains(a)
    }

    pub fn index_of_root(&self, beta: &[i64]) -> Option<usize> {
        self.by_root.get(beta).copied()
    }

    /// Column count of row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.vertices.iter().filter(|v| v.i == i).count()
    }

    pub fn p_range(&self) -> (i64, i64) {
        let lo = self.vertices.iter().map(|v| v.p).min().unwrap_or(0);
        let hi = self.vertices.iter().map(|v| v.p).max().unwrap_or(0);
        (lo, hi)
    }

    /// Reading by `p` descending; a reduced `Q`-adapted word of `w0`.
    pub fn compatible_reading(&self) -> weyl::Word {
        self.vertices.iter().map(|v| v.i).collect()
    }

    pub fn upsilon(&self) -> Upsilon {
        let mut u = Upsilon::default();
        for v in &self.vertices {
            u.residue.insert(v.root.clone(), v.i);
        }
        for &(a, b, m) in &self.arrows {
            u.arrows.insert((self.vertices[a].root.clone(), self.vertices[b].root.clone()), m);
        }
        u
    }

    pub fn label(&self, r: &[i64]) -> String {
        self.roots.label_string(r)
    }

    /// Rows by residue, `p` columns, cells padded per column.
    pub fn to_text(&self) -> String {
        labels_grid(self.quiver.rank(), self.vertices.iter().map(|v| ((v.i, v.p), self.label(&v.root))))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| json!({"i": v.i + 1, "p": v.p, "root": v.root, "label": self.label(&v.root)}))
            .collect();
        let arrows: Vec<_> = self
            .arrows
            .iter()
            .map(|&(a, b, m)| {
                let (x, y) = (&self.vertices[a], &self.vertices[b]);
                json!({"from": [x.i + 1, x.p], "to": [y.i + 1, y.p], "mult": m})
            })
            .collect();
        json!({"quiver": self.quiver.to_json(), "vertices": vertices, "arrows": arrows})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("AR-quiver json: {what}"));
        let qj = v.get("quiver").ok_or_else(|| bad("missing quiver"))?;
        let ty = qj["type"].as_str().ok_or_else(|| bad("type"))?;
        let rank = qj["rank"].as_u64().ok_or_else(|| bad("rank"))?;
        let datum = CartanDatum::parse(&format!("{ty}{rank}"))?;
        let xi: Option<Vec<i64>> = qj["xi"].as_array().map(|a| a.iter().filter_map(|x| x.as_i64()).collect());
        let q = DynkinQuiver::new(&datum, xi.ok_or_else(|| bad("xi"))?)?;
        let mut verts = Vec::new();
        for x in v["vertices"].as_array().ok_or_else(|| bad("vertices"))? {
            let i = x["i"].as_u64().ok_or_else(|| bad("i"))? as usize;
            let p = x["p"].as_i64().ok_or_else(|| bad("p"))?;
            let root: Option<Root> = x["root"].as_array().map(|a| a.iter().filter_map(|c| c.as_i64()).collect());
            if i == 0 || i > rank as usize {
                return Err(bad("residue out of range"));
            }
            verts.push(ArVertex { i: i - 1, p, root: root.ok_or_else(|| bad("root"))? });
        }
        let out = Self::from_vertices(&q, verts)?;
        let n_arrows = v["arrows"].as_array().map_or(0, |a| a.len());
        if n_arrows != out.arrows.len() {
            return Err(bad("arrow set does not match the vertex set"));
        }
        Ok(out)
    }

    /// One node `i_p` per vertex; `rank=same` per column; rows kept straight by `group`.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let name = |v: &ArVertex| format!("\"{}_{}\"", v.i + 1, v.p);
        writeln!(s, "digraph \"Gamma_{}\" {{", self.quiver.datum.name()).unwrap();
        writeln!(s, "  rankdir=LR;\n  node [shape=plaintext];").unwrap();
        for v in &self.vertices {
            let lbl = self.label(&v.root).replace('"', "\\\"");
            writeln!(s, "  {} [label=\"{}\", group=\"row{}\"];", name(v), lbl, v.i + 1).unwrap();
        }
        let mut cols: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for v in &self.vertices {
            cols.entry(v.p).or_default().push(name(v));
        }
        for (p, names) in &cols {
            writeln!(s, "  subgraph \"col_{p}\" {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
        for &(a, b, m) in &self.arrows {
            for _ in 0..m {
                writeln!(s, "  {} -> {};", name(&self.vertices[a]), name(&self.vertices[b])).unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn export(&self, format: &str) -> Result<String> {
        match format {
            "text" => Ok(self.to_text()),
            "json" => Ok(serde_json::to_string_pretty(&self.to_json()).expect("json serialization") + "\n"),
            "dot" => Ok(self.to_dot()),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }

    pub fn labels(&self) -> BTreeMap<Coord, Root> {
        self.vertices.iter().map(|v| ((v.i, v.p), v.root.clone())).collect()
    }
}

/// Text grid: header `(i\p)`, one row per residue, one column per `p`.
pub fn labels_grid(rank: usize, cells: impl IntoIterator<Item = (Coord, String)>) -> String {
    let cells: BTreeMap<Coord, String> = cells.into_iter().collect();
    let lo = cells.keys().map(|c| c.1).min().unwrap_or(0);
    let hi = cells.keys().map(|c| c.1).max().unwrap_or(0);
    let mut table: Vec<Vec<String>> = Vec::new();
    let mut head = vec!["(i\\p)".to_string()];
    head.extend((lo..=hi).map(|p| p.to_string()));
    table.push(head);
    for i in 0..rank {
        let mut row = vec![(i + 1).to_string()];
        row.extend((lo..=hi).map(|p| cells.get(&(i, p)).cloned().unwrap_or_default()));
        table.push(row);
    }
    let ncol = table[0].len();
    let width: Vec<usize> = (0..ncol).map(|c| table.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> =
            row.iter().enumerate().map(|(c, x)| format!("{x}{}", " ".repeat(width[c] - x.chars().count()))).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn gamma_quiver(q: &DynkinQuiver) -> Result<ARQuiver> {
    ARQuiver::new(q)
}

/// `Γ_{s_i Q}` for a source `i`.
pub fn reflect_ar(q: &DynkinQuiver, i: usize) -> Result<ARQuiver> {
    ARQuiver::new(&q.reflect(i)?)
}

/// `Υ`: roots with residues and arrows with multiplicities; compared as sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Upsilon {
    pub residue: BTreeMap<Root, usize>,
    pub arrows: BTreeMap<(Root, Root), i64>,
}

/// `Υ` of any reduced word: `β_k → β_l` (`l < k`) with `−⟨h_{i_k}, α_{i_l}⟩`
/// arrows when `i_k ≠ i_l` are adjacent and no letter strictly between them
/// lies in `{i_k, i_l}`.
pub fn upsilon_any(datum: &CartanDatum, word: &[usize]) -> Result<Upsilon> {
    let betas = weyl::beta_sequence(datum, word)?;
    let mut u = Upsilon::default();
    for (k, b) in betas.iter().enumerate() {
        u.residue.insert(b.clone(), word[k]);
    }
    for k in 0..word.len() {
        let a = word[k];
        for l in (0..k).rev() {
            let b = word[l];
            if b == a {
                break;
            }
            if datum.adjacent(a, b) && !word[l + 1..k].contains(&b) {
                u.arrows.insert((betas[k].clone(), betas[l].clone()), -datum.c(a, b));
            }
        }
    }
    Ok(u)
}

/// `Υ_{[w0]}`; the word must be a reduced word of `w0`.
pub fn upsilon(datum: &CartanDatum, word: &[usize]) -> Result<Upsilon> {
    if !weyl::is_longest_word(datum, word) {
        return Err(Error::NotLongest);
    }
    upsilon_any(datum, word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelMethod {
    /// N-/S-paths (type A).
    Paths,
    /// Swings and shallow paths (types D, B).
    Swings,
    /// Surgery on the D-type lift (type B).
    Surgery,
    /// Transpose of the B-type labels (type C).
    Transpose,
    /// `ψ` applied to the simply-laced lift (types C, F, G).
    Fold,
}

impl std::str::FromStr for LabelMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paths" => Ok(LabelMethod::Paths),
            "swings" => Ok(LabelMethod::Swings),
            "surgery" => Ok(LabelMethod::Surgery),
            "transpose" => Ok(LabelMethod::Transpose),
            "fold" => Ok(LabelMethod::Fold),
            other => Err(Error::Parse(format!("unknown labeling method `{other}`"))),
        }
    }
}

/// Default method per type.
pub fn default_method(ty: CartanType) -> Option<LabelMethod> {
    match ty {
        CartanType::A => Some(LabelMethod::Paths),
        CartanType::D | CartanType::B => Some(LabelMethod::Swings),
        CartanType::C => Some(LabelMethod::Transpose),
        CartanType::F | CartanType::G => Some(LabelMethod::Fold),
        CartanType::E => None,
    }
}

fn mismatch(method: LabelMethod, reason: impl Into<String>) -> Error {
    Error::MethodMismatch { method: format!("{method:?}").to_lowercase(), reason: reason.into() }
}

/// Vertex set of `Γ_Q` without labels (the window of each row).
pub fn vertex_set(q: &DynkinQuiver) -> BTreeSet<Coord> {
    let h = q.datum.h as i64;
    let mut out = BTreeSet::new();
    for i in 0..q.rank() {
        let lo = q.xi[q.datum.star[i]] - h;
        let mut p = q.xi[i];
        while p > lo {
            out.insert((i, p));
            p -= 2;
        }
    }
    out
}

/// Labels `Γ_Q` by `method` without computing `φ_Q`.
pub fn label_alternative(q: &DynkinQuiver, method: LabelMethod) -> Result<BTreeMap<Coord, Root>> {
    let ty = q.datum.ty;
    let labels = match (method, ty) {
        (LabelMethod::Paths, CartanType::A) => label_a(q),
        (LabelMethod::Swings, CartanType::D) => label_d(q)?,
        (LabelMethod::Swings, CartanType::B) => label_b(q)?,
        (LabelMethod::Surgery, CartanType::B) => {
            let lift = SubFolding::for_target(&q.datum)?.lift_quiver(q)?;
            surgery_d_to_b(&label_d(&lift)?, q.rank())
        }
        (LabelMethod::Transpose, CartanType::C) => {
            let b = quiver::transpose(q)?;
            transpose_labels(&label_b(&b)?)
        }
        (LabelMethod::Fold, CartanType::C | CartanType::F | CartanType::G) => {
            let sub = SubFolding::for_target(&q.datum)?;
            let lift = sub.lift_quiver(q)?;
            let up: BTreeMap<Coord, Root> = if lift.datum.ty == CartanType::A {
                labels_to_roots(&lift.datum, label_a(&lift))?
            } else {
                ARQuiver::new(&lift)?.labels()
            };
            let mut out = BTreeMap::new();
            for ((i, p), r) in up {
                let img = sub.psi(&r);
                if let Some(prev) = out.insert((sub.map[i], p), img.clone()) {
                    if prev != img {
                        return Err(Error::Internal(format!("ψ disagrees on the orbit at ({}, {p})", sub.map[i] + 1)));
                    }
                }
            }
            return Ok(out);
        }
        _ => return Err(mismatch(method, format!("not available for type {}", q.datum.name()))),
    };
    labels_to_roots(&q.datum, labels)
}

fn labels_to_roots(datum: &CartanDatum, labels: BTreeMap<Coord, EpsilonLabel>) -> Result<BTreeMap<Coord, Root>> {
    let sys = RootSystem::new(datum);
    let by_label: HashMap<EpsilonLabel, Root> =
        sys.roots.iter().map(|r| (roots::epsilon_label(datum, r), r.clone())).collect();
    labels
        .into_iter()
        .map(|(c, l)| {
            by_label
                .get(&l)
                .cloned()
                .map(|r| (c, r))
                .ok_or_else(|| Error::Internal(format!("{l} at ({}, {}) is not a positive root", c.0 + 1, c.1)))
        })
        .collect()
}

/// Maximal run through `start` along `(r,p) → (r + dr, p + 1)` inside `set`.
fn run(set: &BTreeSet<Coord>, start: Coord, dr: i64) -> Vec<Coord> {
    let step = |c: Coord, s: i64| -> Option<Coord> {
        let r = c.0 as i64 + s * dr;
        if r < 0 {
            return None;
        }
        let n = (r as usize, c.1 + s);
        set.contains(&n).then_some(n)
    };
    let mut first = start;
    while let Some(prev) = step(first, -1) {
        first = prev;
    }
    let mut out = vec![first];
    while let Some(next) = step(*out.last().unwrap(), 1) {
        out.push(next);
    }
    out
}

/// A-type: first component from the N-path, second from the S-path.
fn label_a(q: &DynkinQuiver) -> BTreeMap<Coord, EpsilonLabel> {
    let n = q.rank();
    let set = vertex_set(q);
    set.iter()
        .map(|&c| {
            let north = run(&set, c, -1).len();
            let south = run(&set, c, 1).len();
            (c, EpsilonLabel::Segment(n + 1 - north, south))
        })
        .collect()
}

/// Backward walk `(r−1, p−1)` from `c` and forward walk `(r−1, p+1)`.
fn walk_up(set: &BTreeSet<Coord>, mut c: Coord, dp: i64) -> Vec<Coord> {
    let mut out = Vec::new();
    while set.contains(&c) {
        out.push(c);
        if c.0 == 0 {
            break;
        }
        c = (c.0 - 1, c.1 + dp);
    }
    out
}

type Components = (BTreeMap<Coord, Vec<i64>>, Vec<(i64, Vec<Coord>)>);

/// Components shared along swings (tails at rows `tails`) and shallow paths
/// (rows `< base`, where `base` is the first tail row).
fn swing_components(set: &BTreeSet<Coord>, base: usize, tails: &[usize], total: usize) -> Result<Components> {
    let mut comps: BTreeMap<Coord, Vec<i64>> = set.iter().map(|&c| (c, Vec::new())).collect();
    let mut swings = Vec::new();
    let cols: BTreeSet<i64> = set.iter().filter(|c| c.0 == base).map(|c| c.1).collect();
    for &u in &cols {
        let mut sw = Vec::new();
        if base > 0 {
            sw.extend(walk_up(set, (base - 1, u - 1), -1));
            sw.extend(walk_up(set, (base - 1, u + 1), 1));
        }
        for &t in tails {
            if set.contains(&(t, u)) {
                sw.push((t, u));
            }
        }
        let a = total as i64 - sw.len() as i64;
        for c in &sw {
            comps.get_mut(c).unwrap().push(a);
        }
        swings.push((a, sw));
    }
    // shallow paths live in rows < base
    let low: BTreeSet<Coord> = set.iter().copied().filter(|c| c.0 < base).collect();
    let feeds_tail = |c: Coord, dp: i64| tails.iter().any(|&t| set.contains(&(t, c.1 + dp)));
    let mut seen = BTreeSet::new();
    for &c in &low {
        // S-path: (r,p) → (r+1,p+1)
        let s = run(&low, c, 1);
        let last = *s.last().unwrap();
        if seen.insert(('S', s[0])) && !(last.0 + 1 == base && feeds_tail(last, 1)) {
            let a = s.len() as i64 + 1;
            for x in &s {
                comps.get_mut(x).unwrap().push(-a);
            }
            swings.push((-a, s.clone()));
        }
        // N-path: (r,p) → (r−1,p+1), starting in rows < base
        let nn = run(&low, c, -1);
        let first = nn[0];
        if seen.insert(('N', first)) && !(first.0 + 1 == base && feeds_tail(first, -1)) {
            let a = nn.len() as i64 + 1;
            for x in &nn {
                comps.get_mut(x).unwrap().push(-a);
            }
            swings.push((-a, nn.clone()));
        }
    }
    Ok((comps, swings))
}

fn pair_label(mut c: Vec<i64>) -> Option<EpsilonLabel> {
    if c.len() != 2 {
        return None;
    }
    c.sort_by_key(|x| (x.abs(), *x));
    if c[0] <= 0 {
        return None;
    }
    Some(EpsilonLabel::Pair(c[0] as usize, c[1]))
}

/// D_{n+1}: swings and shallow paths; σ-fixed quivers only.
fn label_d(q: &DynkinQuiver) -> Result<BTreeMap<Coord, EpsilonLabel>> {
    let m = q.rank();
    let n = m - 1;
    if q.xi[n - 1] != q.xi[n] {
        return Err(mismatch(LabelMethod::Swings, "the D-type swing labeling needs ξ_n = ξ_{n+1}"));
    }
    let set = vertex_set(q);
    let (comps, _) = swing_components(&set, n - 1, &[n - 1, n], 2 * n + 1)?;
    let mut out = BTreeMap::new();
    for (c, v) in comps {
        let lbl = if c.0 + 1 >= n {
            // rows n, n+1: ε_a ± ε_{n+1}, alternating along the row from γ_n
            let [a] = v[..] else {
                return Err(Error::Internal(format!("tail ({}, {}) lies on {} swings", c.0 + 1, c.1, v.len())));
            };
            let k = (q.xi[n - 1] - c.1) / 2;
            let mut s = if k % 2 == 0 { -1 } else { 1 };
            if c.0 == n {
                s = -s;
            }
            EpsilonLabel::Pair(a as usize, s * (n as i64 + 1))
        } else {
            pair_label(v.clone())
                .ok_or_else(|| Error::Internal(format!("({}, {}) collected components {v:?}", c.0 + 1, c.1)))?
        };
        out.insert(c, lbl);
    }
    Ok(out)
}

/// B_n: swings with a single tail at row n, then shallow paths.
fn label_b(q: &DynkinQuiver) -> Result<BTreeMap<Coord, EpsilonLabel>> {
    let n = q.rank();
    let set = vertex_set(q);
    let (comps, _) = swing_components(&set, n - 1, &[n - 1], 2 * n)?;
    let mut out = BTreeMap::new();
    for (c, v) in comps {
        let lbl = if c.0 + 1 == n {
            match v[..] {
                [a] if a > 0 => EpsilonLabel::Single(a as usize),
                _ => return Err(Error::Internal(format!("row {n} vertex at {} has components {v:?}", c.1))),
            }
        } else {
            pair_label(v.clone())
                .ok_or_else(|| Error::Internal(format!("({}, {}) collected components {v:?}", c.0 + 1, c.1)))?
        };
        out.insert(c, lbl);
    }
    Ok(out)
}

/// Drop row `n+1`; `⟨ı, ±(n+1)⟩ ↦ ⟨i⟩`.
fn surgery_d_to_b(d: &BTreeMap<Coord, EpsilonLabel>, n: usize) -> BTreeMap<Coord, EpsilonLabel> {
    d.iter()
        .filter(|(c, _)| c.0 < n)
        .map(|(&c, l)| {
            let l = match *l {
                EpsilonLabel::Pair(a, b) if b.unsigned_abs() as usize == n + 1 => EpsilonLabel::Single(a),
                ref other => other.clone(),
            };
            (c, l)
        })
        .collect()
}

/// `⟨i⟩ ↦ ⟨i,i⟩`.
fn transpose_labels(b: &BTreeMap<Coord, EpsilonLabel>) -> BTreeMap<Coord, EpsilonLabel> {
    b.iter()
        .map(|(&c, l)| {
            let l = match *l {
                EpsilonLabel::Single(i) => EpsilonLabel::Double(i),
                ref other => other.clone(),
            };
            (c, l)
        })
        .collect()
}

/// Swing and shallow-path shapes (for structural checks): `(index, vertices)`,
/// negative index for shallow paths.
pub fn swings(q: &DynkinQuiver) -> Result<Vec<(i64, Vec<Coord>)>> {
    let set = vertex_set(q);
    let n = q.rank();
    match q.datum.ty {
        CartanType::D => Ok(swing_components(&set, n - 2, &[n - 2, n - 1], 2 * n - 1)?.1),
        CartanType::B => Ok(swing_components(&set, n - 1, &[n - 1], 2 * n)?.1),
        _ => Err(mismatch(LabelMethod::Swings, format!("{} has no swings", q.datum.name()))),
    }
}

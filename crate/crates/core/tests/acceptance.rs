//! End-to-end acceptance run: one line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::collections::BTreeSet;
use std::time::Instant;

use arq_core::arquiver::{label_alternative, LabelMethod};
use arq_core::cartan::{finite_types, fold, AutomorphismKind, CartanDatum, CartanType, DiagramAutomorphism};
use arq_core::invariants::{
    all_pair_degrees, dual_phenomenon_check, minimal_pair_checks, representative_quivers, verify_main_with,
    QuiverContext,
};
use arq_core::laurent::{
    closed_form_tilde_d, coefficient_law_violations, dual_route_agrees, reconstruction_holds, tilde_table_series,
    verify_fold_sum,
};
use arq_core::order::{commutation_classes, enumerate_exponent_vectors, ConvexOrder, ExponentVector};
use arq_core::quiver::{all_quivers, canonical_quiver, sigma_fixed_quivers};
use arq_core::roots::Root;
use arq_core::{weyl, ARQuiver, DynkinQuiver, LaurentPoly, RootSystem, Q};

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

fn datum(s: &str) -> CartanDatum {
    CartanDatum::parse(s).unwrap()
}

fn types_of(ty: CartanType, ranks: std::ops::RangeInclusive<usize>) -> Vec<CartanDatum> {
    ranks.filter_map(|n| CartanDatum::build(ty, n).ok()).collect()
}

fn classical(max: usize) -> Vec<CartanDatum> {
    let mut v = types_of(CartanType::A, 1..=max);
    v.extend(types_of(CartanType::B, 2..=max));
    v.extend(types_of(CartanType::C, 2..=max));
    v.extend(types_of(CartanType::D, 4..=max));
    v
}

fn c1_dual_route() -> Outcome {
    let mut bad = Vec::new();
    let all = finite_types(8);
    for x in &all {
        if !dual_route_agrees(x).unwrap() {
            bad.push(x.name());
        }
    }
    if bad.is_empty() {
        ok(format!("{} types, all (i,j), 0 ≤ u ≤ 2h", all.len()))
    } else {
        fail(format!("routes disagree for {bad:?}"))
    }
}

/// `d̃_{i,j}` rebuilt from the tabulated neighbours of `j` through
/// `b(u−1) + b(u+1) = Σ_{k∼j} b_{i,k}(u)` (simply-laced), `b(0) = 0`,
/// `b(1) = δ_{ij}`.
fn recurrence_from_literals(x: &CartanDatum, i: usize, j: usize) -> Option<LaurentPoly> {
    let h = x.h as i64;
    let nbrs: Vec<LaurentPoly> = x.neighbors(j).map(|k| closed_form_tilde_d(x, i, k)).collect::<Option<_>>()?;
    let mut b = vec![Q::from(0); h as usize + 2];
    b[1] = Q::from((i == j) as i64);
    for u in 1..=h {
        let s = nbrs.iter().fold(Q::from(0), |acc, p| acc + p.coeff(u + 1));
        b[u as usize + 1] = s - b[u as usize - 1];
    }
    let mut p = LaurentPoly::zero();
    for u in 0..h {
        p.add_term(u + 1, b[u as usize]);
    }
    Some(p)
}

fn c2_closed_forms() -> Outcome {
    let mut checked = 0;
    let mut hard = Vec::new();
    let mut errata = Vec::new();
    let mut missing = Vec::new();
    let mut list = classical(8);
    list.extend(["E6", "E7", "E8", "F4", "G2"].map(datum));
    for x in &list {
        let tt = tilde_table_series(x).unwrap();
        let literal_type = x.ty == CartanType::E && x.rank > 6;
        for i in 0..x.rank {
            for j in i..x.rank {
                let got = tt.d(i, j);
                match closed_form_tilde_d(x, i, j) {
                    None => missing.push(format!("{} ({},{})", x.name(), i + 1, j + 1)),
                    Some(want) if want == got => checked += 1,
                    Some(want) => {
                        // a literal that disagrees is accepted only if the
                        // recurrence over its tabulated neighbours reproduces
                        // the computed value
                        let confirmed =
                            literal_type && recurrence_from_literals(x, i, j).is_some_and(|r| r == got && r != want);
                        let tag = format!("{} ({},{}): tabulated {want}, computed {got}", x.name(), i + 1, j + 1);
                        if confirmed {
                            errata.push(tag);
                        } else {
                            hard.push(tag);
                        }
                    }
                }
            }
        }
    }
    if !hard.is_empty() {
        return fail(format!("{} cells differ: {}", hard.len(), hard.join("; ")));
    }
    let mut d = format!("{checked} cells exact");
    if !errata.is_empty() {
        d += &format!("; tabulated-literal errata confirmed by neighbour recurrence: {}", errata.join("; "));
    }
    if !missing.is_empty() {
        d += &format!("; no tabulated literal: {}", missing.join(", "));
    }
    ok(d)
}

fn c3_folding() -> Outcome {
    let mut cases: Vec<(CartanDatum, AutomorphismKind)> = Vec::new();
    for n in 2..=4 {
        cases.push((CartanDatum::build(CartanType::A, 2 * n - 1).unwrap(), AutomorphismKind::Vee));
    }
    for n in 3..=7 {
        cases.push((CartanDatum::build(CartanType::D, n + 1).unwrap(), AutomorphismKind::Vee));
    }
    cases.push((datum("E6"), AutomorphismKind::Vee));
    cases.push((datum("D4"), AutomorphismKind::VeeTilde));
    let mut names = Vec::new();
    for (x, k) in cases {
        let s = DiagramAutomorphism::standard(&x, k).unwrap();
        let r = verify_fold_sum(&x, &s).unwrap();
        if !r.all_equal() {
            let c = r.cells.iter().find(|c| !c.equal).unwrap();
            return fail(format!("{}→{} cell ({},{}) {} vs {}", r.source, r.target, c.i + 1, c.j + 1, c.lhs, c.rhs));
        }
        names.push(format!("{}→{}", r.source, r.target));
    }
    ok(format!("exact for {}", names.join(", ")))
}

fn c4_coefficient_laws() -> Outcome {
    let all = finite_types(8);
    for x in &all {
        let t = tilde_table_series(x).unwrap();
        let v = coefficient_law_violations(&t);
        if !v.is_empty() {
            return fail(format!("{} violations, first: {}", v.len(), v[0]));
        }
        for i in 0..x.rank {
            for j in 0..x.rank {
                if !reconstruction_holds(&t, i, j) {
                    return fail(format!("{} ({},{}) reconstruction", x.name(), i + 1, j + 1));
                }
            }
        }
    }
    ok(format!("{} types, u ≤ 2h", all.len()))
}

fn c5_main_identity() -> Outcome {
    let mut full = classical(6);
    full.push(datum("E6"));
    let mut cells = 0;
    let mut single = Vec::new();
    for x in &full {
        let qs = representative_quivers(x, 2);
        if qs.len() < 2 {
            single.push(x.name());
        }
        let r = verify_main_with(x, &qs, None).unwrap();
        if !r.all_equal() {
            let c = r.failures()[0];
            return fail(format!("{} ({},{}): {} vs {}", x.name(), c.i + 1, c.j + 1, c.lhs, c.rhs));
        }
        if !r.quiver_independent {
            return fail(format!("{}: O_k depends on the quiver", x.name()));
        }
        cells += r.cells.len();
    }
    let mut sampled = 0;
    for x in classical(8).into_iter().filter(|x| x.rank >= 7) {
        let all: Vec<(usize, usize)> = (0..x.rank).flat_map(|i| (i..x.rank).map(move |j| (i, j))).collect();
        let pick: Vec<(usize, usize)> = (0..10).map(|k| all[k * all.len() / 10]).collect();
        let r = verify_main_with(&x, &[canonical_quiver(&x)], Some(&pick)).unwrap();
        if !r.all_equal() {
            let c = r.failures()[0];
            return fail(format!("{} ({},{}): {} vs {}", x.name(), c.i + 1, c.j + 1, c.lhs, c.rhs));
        }
        sampled += r.cells.len();
    }
    let mut d = format!("{cells} cells exhaustive (2 quivers each), {sampled} sampled cells rank 7–8");
    if !single.is_empty() {
        d += &format!("; only one quiver exists for {}", single.join(", "));
    }
    ok(d)
}

fn c6_counterexamples() -> Outcome {
    let mut found = Vec::new();
    for (t, heights, i, j, k, want_tilde, want_deg) in [("F4", "4,3,2,1", 1, 2, 9, 4, 6), ("G2", "1,0", 0, 0, 4, 2, 1)]
    {
        let x = datum(t);
        let q = DynkinQuiver::parse(t, heights).unwrap();
        let r = verify_main_with(&x, &[q, canonical_quiver(&x)], Some(&[(i, j)])).unwrap();
        let c = &r.cells[0];
        // lhs carries 𝔡 plus the t^{h−1} correction, which sits elsewhere
        let (dk, tk) = (c.lhs.coeff(k - 1), c.rhs.coeff(k - 1));
        if dk != Q::from(want_deg) || tk != Q::from(want_tilde) {
            return fail(format!("{t} ({},{})[{k}]: d̃ = {tk}, 𝔡 = {dk}", i + 1, j + 1));
        }
        found.push(format!("{t} d̃_{{{},{}}}[{k}] = {tk} vs 𝔡 = {dk}", i + 1, j + 1));
    }
    ok(found.join("; "))
}

fn c7_labels() -> Outcome {
    let text =
        |name: &str| std::fs::read_to_string(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let mut notes = Vec::new();
    let cases = [
        ("D5", "3,2,1,0,0", LabelMethod::Swings, "d5_swing_example.txt"),
        ("B4", "2,3,2,3", LabelMethod::Swings, "b4_example.txt"),
        ("B4", "2,3,2,3", LabelMethod::Surgery, "b4_example.txt"),
        ("C4", "2,3,2,3", LabelMethod::Transpose, "c4_example.txt"),
    ];
    for (t, h, m, fixture) in cases {
        let q = DynkinQuiver::parse(t, h).unwrap();
        let ar = ARQuiver::new(&q).unwrap();
        if label_alternative(&q, m).unwrap() != ar.labels() {
            return fail(format!("{t} {m:?} labels differ from φ"));
        }
        let printed = text(fixture);
        let ours = ar.to_text();
        if printed != ours {
            // the reference D5 grid has the p = 0 cells of rows 4 and 5
            // exchanged; accept exactly that and nothing else
            let diff: Vec<(usize, &str, &str)> = printed
                .lines()
                .zip(ours.lines())
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(k, (a, b))| (k, a, b))
                .collect();
            let swapped = t == "D5"
                && diff.len() == 2
                && diff[0].0 == 4
                && diff[1].0 == 5
                && diff[0].1.replace("⟨1,5⟩", "X") == diff[0].2.replace("⟨1,−5⟩", "X")
                && diff[1].1.replace("⟨1,−5⟩", "X") == diff[1].2.replace("⟨1,5⟩", "X");
            if !swapped {
                return fail(format!("{t} grid differs from the reference grid:\n{ours}"));
            }
            let fixed = printed.replace("⟨1,5⟩", "@").replace("⟨1,−5⟩", "⟨1,5⟩").replace('@', "⟨1,−5⟩");
            if fixed != ours {
                return fail("D5 grid differs beyond the row 4/5 exchange");
            }
            if !notes.iter().any(|n: &String| n.starts_with("D5")) {
                notes.push(
                    "D5 reference grid has ⟨1,5⟩/⟨1,−5⟩ exchanged at p=0 (rows 4,5); otherwise byte-identical".into(),
                );
            }
        }
    }
    let mut folds = 0;
    for t in ["A3", "A4", "A5", "C3", "C4", "F4", "G2"] {
        let x = datum(t);
        let m = if x.ty == CartanType::A { LabelMethod::Paths } else { LabelMethod::Fold };
        for q in all_quivers(&x) {
            if label_alternative(&q, m).unwrap() != ARQuiver::new(&q).unwrap().labels() {
                return fail(format!("{q} {m:?} labels differ from φ"));
            }
            folds += 1;
        }
    }
    notes
        .insert(0, format!("worked examples match φ; B4/C4 grids byte-identical; {folds} A-path/fold labelings match"));
    ok(notes.join("; "))
}

/// The literal definition: the first and the last disagreement along the
/// word's root sequence both favour `m'`.
fn literal_less(seq: &[usize], m: &ExponentVector, m2: &ExponentVector) -> bool {
    let diff: Vec<usize> = seq.iter().copied().filter(|&k| m.mult[k] != m2.mult[k]).collect();
    match (diff.first(), diff.last()) {
        (Some(&a), Some(&b)) => m.mult[a] < m2.mult[a] && m.mult[b] < m2.mult[b],
        _ => false,
    }
}

fn c8_order_oracle() -> Outcome {
    let mut compared = 0u64;
    let mut classes_seen = Vec::new();
    for t in ["A3", "B2", "C3", "G2"] {
        let x = datum(t);
        let sys = RootSystem::new(&x);
        let mut weights: BTreeSet<Root> = BTreeSet::new();
        for a in &sys.roots {
            weights.insert(a.clone());
            for b in &sys.roots {
                weights.insert(a.iter().zip(b).map(|(p, q)| p + q).collect());
            }
        }
        let classes = commutation_classes(&x).unwrap();
        classes_seen.push(format!("{t}:{}", classes.len()));
        for class in &classes {
            let order = ConvexOrder::from_word(&x, &class[0]).unwrap();
            let seqs: Vec<Vec<usize>> = class
                .iter()
                .map(|w| weyl::beta_sequence(&x, w).unwrap().iter().map(|b| sys.index_of(b).unwrap()).collect())
                .collect();
            for w in &weights {
                let vs = enumerate_exponent_vectors(&x, w).unwrap();
                for a in &vs {
                    for b in &vs {
                        let lit = seqs.iter().all(|s| literal_less(s, a, b));
                        if order.bilex_less(a, b).unwrap() != lit {
                            return fail(format!(
                                "{t} class of {:?}: {} vs {}",
                                class[0],
                                a.render(&sys),
                                b.render(&sys)
                            ));
                        }
                        compared += 1;
                    }
                }
            }
        }
    }
    ok(format!("{compared} comparisons over every class ({})", classes_seen.join(", ")))
}

fn c9_degree_bounds() -> Outcome {
    let mut pairs = 0;
    let mut max_seen = Vec::new();
    for (ty, ranks, bound) in [(CartanType::A, 1..=6, 1), (CartanType::D, 4..=6, 2)] {
        let mut top = 0;
        for x in types_of(ty, ranks) {
            for q in representative_quivers(&x, 2) {
                let ctx = QuiverContext::new(&q).unwrap();
                for (p, d) in all_pair_degrees(&ctx).unwrap() {
                    if d > bound {
                        return fail(format!("{q}: deg⟨{:?},{:?}⟩ = {d} > {bound}", p.alpha, p.beta));
                    }
                    top = top.max(d);
                    pairs += 1;
                }
            }
        }
        max_seen.push(format!("max {ty:?} deg {top}"));
    }
    let ctx = QuiverContext::new(&DynkinQuiver::parse("F4", "4,3,2,1").unwrap()).unwrap();
    let sys = &ctx.order.sys;
    let (a, b) = (sys.parse_label("⟨0,1,0,−1⟩").unwrap(), sys.parse_label("⟨1/2,−1/2,1/2,1/2⟩").unwrap());
    let d = ctx.pair_deg(&a, &b).unwrap();
    if d != 3 {
        return fail(format!("F4 pair deg = {d}"));
    }
    ok(format!("{pairs} pairs; {}; F4 pair deg 3", max_seen.join(", ")))
}

fn c10_minimal_pairs() -> Outcome {
    let mut n = 0;
    let mut list = types_of(CartanType::B, 2..=5);
    list.extend(types_of(CartanType::C, 2..=5));
    list.extend(types_of(CartanType::D, 4..=5));
    for x in &list {
        let tt = tilde_table_series(x).unwrap();
        for q in all_quivers(x) {
            let ctx = QuiverContext::new(&q).unwrap();
            for c in minimal_pair_checks(&ctx, &tt).unwrap() {
                if !c.consistent() {
                    return fail(format!("{q}: {c:?}"));
                }
                n += 1;
            }
        }
    }
    ok(format!("{n} minimal pairs over every quiver of B2–B5, C2–C5, D4–D5"))
}

fn c11_dual_phenomenon() -> Outcome {
    let all = finite_types(8);
    for x in &all {
        let tt = tilde_table_series(x).unwrap();
        let bad = dual_phenomenon_check(&canonical_quiver(x), &tt).unwrap();
        if !bad.is_empty() {
            return fail(bad.join("; "));
        }
    }
    ok(format!("{} types", all.len()))
}

fn coxeter_number(x: &CartanDatum) -> usize {
    let n = x.rank;
    match (x.ty, n) {
        (CartanType::A, _) => n + 1,
        (CartanType::B | CartanType::C, _) => 2 * n,
        (CartanType::D, _) => 2 * n - 2,
        (CartanType::E, 6) | (CartanType::F, _) => 12,
        (CartanType::E, 7) => 18,
        (CartanType::E, _) => 30,
        (CartanType::G, _) => 6,
    }
}

fn c12_counting() -> Outcome {
    for x in finite_types(8) {
        let h = coxeter_number(&x);
        if x.h != h || RootSystem::new(&x).len() != x.rank * h / 2 {
            return fail(format!("{}: |Φ⁺| = {}, h = {}", x.name(), RootSystem::new(&x).len(), x.h));
        }
    }
    let mut cases: Vec<(CartanDatum, AutomorphismKind, usize)> = Vec::new();
    for n in 2..=4 {
        cases.push((CartanDatum::build(CartanType::A, 2 * n - 1).unwrap(), AutomorphismKind::Vee, 1 << (n - 1)));
    }
    for n in 3..=6 {
        cases.push((CartanDatum::build(CartanType::D, n + 1).unwrap(), AutomorphismKind::Vee, 1 << (n - 1)));
    }
    cases.push((datum("E6"), AutomorphismKind::Vee, 8));
    cases.push((datum("D4"), AutomorphismKind::VeeTilde, 2));
    for (x, k, want) in &cases {
        let s = DiagramAutomorphism::standard(x, *k).unwrap();
        let got = sigma_fixed_quivers(x, &s).len();
        if got != *want {
            return fail(format!("{} {k:?}: {got} fixed quivers, expected {want}", x.name()));
        }
        fold(x, &s).unwrap();
    }
    ok(format!("|Φ⁺| = nh/2 for all types rank ≤ 8; σ-fixed counts for {} cases", cases.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("dual-route B̃", c1_dual_route),
        ("closed-form d̃ tables", c2_closed_forms),
        ("folding identity", c3_folding),
        ("coefficient laws", c4_coefficient_laws),
        ("𝔡 + δ t^{h−1} = d̃", c5_main_identity),
        ("F4/G2 counterexamples", c6_counterexamples),
        ("labeling agreement", c7_labels),
        ("order oracle", c8_order_oracle),
        ("degree bounds", c9_degree_bounds),
        ("minimal-pair invariants", c10_minimal_pairs),
        ("dual phenomenon", c11_dual_phenomenon),
        ("counting", c12_counting),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        if only.is_some_and(|o| o != k + 1) {
            continue;
        }
        let t0 = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            fail(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {} ({:.1}s)", k + 1, r.detail, t0.elapsed().as_secs_f64());
        failed += (!r.pass) as usize;
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

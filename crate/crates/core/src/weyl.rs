//! Words in the simple reflections: action, reducedness, β-sequences,
//! the longest element and commutation classes.

use crate::arquiver;
use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::roots::{self, is_positive, simple_root, Root};
use crate::Q;

/// A word `s_{i_1} ⋯ s_{i_l}` (0-based indices).
pub type Word = Vec<usize>;

/// `s_{i_1} ⋯ s_{i_l}(v)`, applied right to left.
pub fn apply_word(datum: &CartanDatum, word: &[usize], v: &[i64]) -> Root {
    let mut out = v.to_vec();
    for &i in word.iter().rev() {
        roots::reflect(datum, i, &mut out);
    }
    out
}

pub fn apply_word_q(datum: &CartanDatum, word: &[usize], v: &[Q]) -> Vec<Q> {
    let mut out = v.to_vec();
    for &i in word.iter().rev() {
        roots::reflect_q(datum, i, &mut out);
    }
    out
}

/// Images of the simple roots; two words give the same group element iff
/// these agree.
pub fn element_action(datum: &CartanDatum, word: &[usize]) -> Vec<Root> {
    (0..datum.rank).map(|i| apply_word(datum, word, &simple_root(datum.rank, i))).collect()
}

fn betas_unchecked(datum: &CartanDatum, word: &[usize]) -> Vec<Root> {
    (0..word.len()).map(|k| apply_word(datum, &word[..k], &simple_root(datum.rank, word[k]))).collect()
}

/// A word is reduced iff every `s_{i_1}⋯s_{i_{k−1}}(α_{i_k})` is positive.
pub fn is_reduced(datum: &CartanDatum, word: &[usize]) -> bool {
    word.iter().all(|&i| i < datum.rank) && betas_unchecked(datum, word).iter().all(|b| is_positive(b))
}

pub fn beta_sequence(datum: &CartanDatum, word: &[usize]) -> Result<Vec<Root>> {
    if !is_reduced(datum, word) {
        return Err(Error::NotReduced);
    }
    Ok(betas_unchecked(datum, word))
}

pub fn is_longest_word(datum: &CartanDatum, word: &[usize]) -> bool {
    word.len() == datum.num_positive_roots() && is_reduced(datum, word)
}

/// A reduced word of `w0`, found by driving ρ to its antidominant image.
pub fn longest_word(datum: &CartanDatum) -> Word {
    let n = datum.rank;
    // weight coordinates ⟨h_j, λ⟩; α_i has coordinates c_{ji}
    let mut lam = vec![1i64; n];
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| lam[i] > 0) {
        let k = lam[i];
        for (j, l) in lam.iter_mut().enumerate() {
            *l -= k * datum.c(j, i);
        }
        word.push(i);
    }
    word.reverse();
    word
}

/// `w0(α_i) = −α_{i*}`.
pub fn star_from_longest(datum: &CartanDatum) -> Vec<usize> {
    let w0 = longest_word(datum);
    (0..datum.rank)
        .map(|i| {
            let img = apply_word(datum, &w0, &simple_root(datum.rank, i));
            img.iter().position(|&x| x == -1).expect("w0 maps simple roots to negative simple roots")
        })
        .collect()
}

/// The longest element together with the involution it induces.
pub fn longest_element(datum: &CartanDatum) -> (Word, Vec<usize>) {
    (longest_word(datum), star_from_longest(datum))
}

/// Equal Υ-quivers ⇔ same commutation class.
pub fn commutation_equivalent(datum: &CartanDatum, w: &[usize], w2: &[usize]) -> Result<bool> {
    if !is_reduced(datum, w) || !is_reduced(datum, w2) {
        return Err(Error::NotReduced);
    }
    if element_action(datum, w) != element_action(datum, w2) {
        return Err(Error::DifferentElements);
    }
    Ok(arquiver::upsilon_any(datum, w)? == arquiver::upsilon_any(datum, w2)?)
}

/// Every reduced word of `w0`. Oracle use only; refuses rank above 3.
pub fn all_longest_words(datum: &CartanDatum) -> Result<Vec<Word>> {
    if datum.rank > 3 {
        return Err(Error::MethodMismatch { method: "exhaustive reduced words".into(), reason: "rank above 3".into() });
    }
    let n = datum.num_positive_roots();
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn go(datum: &CartanDatum, n: usize, word: &mut Word, out: &mut Vec<Word>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for i in 0..datum.rank {
            if is_positive(&apply_word(datum, word, &simple_root(datum.rank, i))) {
                word.push(i);
                go(datum, n, word, out);
                word.pop();
            }
        }
    }
    go(datum, n, &mut word, &mut out);
    Ok(out)
}

pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::finite_types;
    use crate::roots::RootSystem;

    fn d(s: &str) -> CartanDatum {
        CartanDatum::parse(s).unwrap()
    }

    #[test]
    fn action_examples() {
        let a2 = d("A2");
        assert_eq!(apply_word(&a2, &[], &[1, 0]), vec![1, 0]);
        assert_eq!(apply_word(&a2, &[0, 1], &[1, 0]), vec![0, 1]);
        let c3 = d("C3");
        let rs = RootSystem::new(&c3);
        let img = apply_word(&c3, &[0, 1, 2], &[1, 0, 0]);
        assert_eq!(rs.label_string(&img), "⟨2,−3⟩");
    }

    #[test]
    fn reducedness() {
        let a2 = d("A2");
        assert!(!is_reduced(&a2, &[0, 0]));
        assert!(is_reduced(&a2, &[0, 1, 0]));
        assert_eq!(beta_sequence(&a2, &[0, 1, 0]).unwrap(), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(beta_sequence(&a2, &[0, 0]), Err(Error::NotReduced));
    }

    #[test]
    fn longest_words_enumerate_all_roots() {
        for x in finite_types(8) {
            let (w0, star) = longest_element(&x);
            assert!(is_longest_word(&x, &w0), "{}", x.name());
            assert_eq!(star, x.star);
            let mut b = beta_sequence(&x, &w0).unwrap();
            b.sort();
            let mut r = RootSystem::new(&x).roots;
            r.sort();
            assert_eq!(b, r);
        }
        assert_eq!(longest_element(&d("D5")).1, vec![0, 1, 2, 4, 3]);
        assert_eq!(longest_element(&d("E6")).1, vec![5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn word_counts() {
        // Known counts of reduced words of w0.
        for (t, n) in [("A2", 2), ("A3", 16), ("B2", 2), ("G2", 2), ("C3", 42), ("B3", 42)] {
            assert_eq!(all_longest_words(&d(t)).unwrap().len(), n, "{t}");
        }
        assert!(all_longest_words(&d("A4")).is_err());
    }

    #[test]
    fn commutation() {
        let a2 = d("A2");
        assert!(!commutation_equivalent(&a2, &[0, 1, 0], &[1, 0, 1]).unwrap());
        let a3 = d("A3");
        assert!(commutation_equivalent(&a3, &[0, 2, 1, 0, 2, 1], &[2, 0, 1, 2, 0, 1]).unwrap());
        assert!(commutation_equivalent(&a3, &[0, 2, 1], &[2, 0, 1]).unwrap());
        assert_eq!(commutation_equivalent(&a3, &[0, 1], &[1, 0]), Err(Error::DifferentElements));
    }

    /// Brute-force oracle: commutation classes generated by swapping adjacent
    /// commuting letters coincide with classes of equal Υ.
    #[test]
    fn classes_by_moves_match_upsilon() {
        for t in ["A3", "B2", "C3", "G2", "B3"] {
            let x = d(t);
            let words = all_longest_words(&x).unwrap();
            let pos: std::collections::HashMap<Word, usize> =
                words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
            let mut class = vec![usize::MAX; words.len()];
            let mut next = 0;
            for s in 0..words.len() {
                if class[s] != usize::MAX {
                    continue;
                }
                let mut stack = vec![s];
                class[s] = next;
                while let Some(k) = stack.pop() {
                    let w = &words[k];
                    for p in 0..w.len() - 1 {
                        if x.c(w[p], w[p + 1]) == 0 {
                            let mut v = w.clone();
                            v.swap(p, p + 1);
                            let q = pos[&v];
                            if class[q] == usize::MAX {
                                class[q] = next;
                                stack.push(q);
                            }
                        }
                    }
                }
                next += 1;
            }
            for a in 0..words.len() {
                for b in a + 1..words.len() {
                    assert_eq!(class[a] == class[b], commutation_equivalent(&x, &words[a], &words[b]).unwrap(), "{t}");
                }
            }
        }
    }
}

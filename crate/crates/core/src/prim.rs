//! Primitivity and proper-power classification of cyclic words, via the
//! Cohen-Metzler-Zimmermann syllable criterion.

use crate::word::{CyclicWord, Gen};
use alloc::vec::Vec;

/// Three-way classification of a reduced cyclic word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimClass {
    Primitive,
    ProperPower { root: CyclicWord, exponent: u32, root_primitive: bool },
    Neither,
}

impl PrimClass {
    pub fn is_primitive_or_power(&self) -> bool {
        !matches!(self, PrimClass::Neither)
    }
}

/// Cyclic syllable decomposition: maximal runs of one generator, with signed
/// exponents, alternating between the generators.
fn syllables(w: &CyclicWord) -> Vec<(Gen, i64)> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    // Start at a generator change so runs are cyclically maximal.
    let start = (0..n)
        .find(|&i| w.letter((i + n - 1) % n).gen != w.letter(i).gen)
        .unwrap_or(0);
    let mut out: Vec<(Gen, i64)> = Vec::new();
    for i in 0..n {
        let l = w.letter(start + i);
        let d = if l.positive { 1 } else { -1 };
        match out.last_mut() {
            Some((g, e)) if *g == l.gen => *e += d,
            _ => out.push((l.gen, d)),
        }
    }
    out
}

fn side_all_single_same_sign(exps: &[i64]) -> bool {
    !exps.is_empty()
        && exps.iter().all(|&e| e.abs() == 1)
        && exps.iter().all(|&e| e.signum() == exps[0].signum())
}

fn side_within_step(exps: &[i64]) -> bool {
    if exps.is_empty() || !exps.iter().all(|&e| e.signum() == exps[0].signum()) {
        return false;
    }
    let lo = exps.iter().map(|e| e.abs()).min().unwrap();
    let hi = exps.iter().map(|e| e.abs()).max().unwrap();
    hi - lo <= 1
}

/// True iff the reduced cyclic word is a primitive element of `F(A, B)`
/// (a member of some free basis).
///
/// A word mixing both generators is primitive exactly when, after possibly
/// inverting a generator, one generator appears only with exponent 1 while
/// the other's exponents all lie in `{e, e+1}` for some `e > 0`. The set
/// condition is read as containment, so `AB^2` (exponents `{2}`) is
/// primitive.
pub fn cmz_is_primitive(w: &CyclicWord) -> bool {
    debug_assert!(w.is_reduced());
    if w.is_empty() {
        return false;
    }
    // Proper powers of primitives also satisfy the syllable pattern; the
    // pattern characterizes primitives only among non-powers.
    if w.proper_power_root().is_some() {
        return false;
    }
    let sy = syllables(w);
    let uses_a = sy.iter().any(|&(g, _)| g == Gen::A);
    let uses_b = sy.iter().any(|&(g, _)| g == Gen::B);
    if !(uses_a && uses_b) {
        // Single-generator word: reduced means X^k; primitive iff k = +-1.
        return w.len() == 1;
    }
    let a_exps: Vec<i64> = sy.iter().filter(|&&(g, _)| g == Gen::A).map(|&(_, e)| e).collect();
    let b_exps: Vec<i64> = sy.iter().filter(|&&(g, _)| g == Gen::B).map(|&(_, e)| e).collect();
    (side_all_single_same_sign(&a_exps) && side_within_step(&b_exps))
        || (side_all_single_same_sign(&b_exps) && side_within_step(&a_exps))
}

/// Classifies a reduced cyclic word as primitive, a proper power, or neither.
pub fn is_primitive_or_proper_power(w: &CyclicWord) -> PrimClass {
    debug_assert!(w.is_reduced());
    if let Some((root, exponent)) = w.proper_power_root() {
        let root_primitive = cmz_is_primitive(&root);
        return PrimClass::ProperPower { root, exponent, root_primitive };
    }
    if cmz_is_primitive(w) {
        PrimClass::Primitive
    } else {
        PrimClass::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{apply_move, BasisMove};
    use crate::word::parse_word;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn generators_and_small_words() {
        assert!(cmz_is_primitive(&w("A")));
        assert!(cmz_is_primitive(&w("b")));
        assert!(cmz_is_primitive(&w("AB")));
        assert!(cmz_is_primitive(&w("Abb")));
        assert!(cmz_is_primitive(&w("AABAB")));
        assert!(cmz_is_primitive(&w("AAAAB")));
        assert!(!cmz_is_primitive(&w("AA")));
        assert!(!cmz_is_primitive(&w("AABB")));
        assert!(!cmz_is_primitive(&w("AABBB")));
        assert!(!cmz_is_primitive(&w("AABab")));
    }

    #[test]
    fn classification() {
        match is_primitive_or_proper_power(&w("ABAB")) {
            PrimClass::ProperPower { root, exponent, root_primitive } => {
                assert_eq!(root.to_string(), "AB");
                assert_eq!(exponent, 2);
                assert!(root_primitive);
            }
            other => panic!("expected proper power, got {other:?}"),
        }
        assert_eq!(is_primitive_or_proper_power(&w("Abb")), PrimClass::Primitive);
        assert_eq!(is_primitive_or_proper_power(&w("AABBB")), PrimClass::Neither);
    }

    #[test]
    fn primitive_implies_primitive_abelian_vector() {
        for s in ["A", "AB", "Abb", "AABAB", "AAAAB", "ABABB"] {
            let v = w(s);
            assert!(cmz_is_primitive(&v));
            assert_eq!(v.abelianize().gcd(), 1, "{s}");
        }
    }

    /// Independent oracle: breadth-first search over all basis-move
    /// sequences; a word is primitive iff some sequence reaches length 1.
    fn brute_force_primitive(v: &CyclicWord) -> bool {
        let mut seen: BTreeSet<CyclicWord> = BTreeSet::new();
        let mut frontier = alloc::vec![v.clone()];
        seen.insert(v.clone());
        while let Some(cur) = frontier.pop() {
            if cur.len() == 1 {
                return true;
            }
            for m in BasisMove::all() {
                let next = apply_move(&cur, m);
                if next.len() <= cur.len() && !next.is_empty() && seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        false
    }

    fn all_reduced_words(len: usize) -> alloc::vec::Vec<CyclicWord> {
        use crate::word::Letter;
        let alphabet = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
        let mut out = alloc::vec![alloc::vec::Vec::new()];
        for _ in 0..len {
            let mut next = alloc::vec::Vec::new();
            for prefix in out {
                for &l in &alphabet {
                    if prefix.last().is_some_and(|t: &Letter| *t == l.inverse()) {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(l);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(CyclicWord::new)
            .filter(|cw: &CyclicWord| cw.is_reduced())
            .collect()
    }

    #[test]
    fn cmz_matches_brute_force_to_length_6() {
        // Lengths 7..8 are covered by the slower acceptance property suite.
        for len in 1..=6 {
            for v in all_reduced_words(len) {
                assert_eq!(
                    cmz_is_primitive(&v),
                    brute_force_primitive(&v),
                    "disagreement on {v}"
                );
            }
        }
    }
}

//! Canonical embedding of a single curve word into the cut-open surface.
//!
//! The slot orders are found by inserting the word's letters one at a time
//! into the cyclic orders of their disks, keeping the partial arc system
//! planar at every step (each fattened component must stay genus zero).
//! Positions are tried in a fixed order and the first completion wins, so
//! the construction is deterministic. A word is realizable as a simple
//! closed curve exactly when the search succeeds.

use crate::diagram::{Circle, Dart, DiagramError, EmbeddedDiagram, Occ};
use crate::word::{CyclicWord, Gen};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    /// No slot ordering satisfies the surface invariants: the word is not
    /// realizable as a simple closed curve.
    NotRealizable,
    /// Input word rejected or explicit slot data invalid.
    Diagram(DiagramError),
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::NotRealizable => write!(f, "word is not realizable as a simple closed curve"),
            EmbedError::Diagram(e) => write!(f, "{e}"),
        }
    }
}

impl From<DiagramError> for EmbedError {
    fn from(e: DiagramError) -> Self {
        EmbedError::Diagram(e)
    }
}

/// Validates an explicitly given two-curve diagram (slot orders supplied).
pub fn embed_pair(
    words: Vec<CyclicWord>,
    order_a: Vec<Occ>,
    order_b: Vec<Occ>,
) -> Result<EmbeddedDiagram, DiagramError> {
    EmbeddedDiagram::new(words, order_a, order_b)
}

struct Search<'a> {
    word: &'a CyclicWord,
    order_a: Vec<usize>,
    order_b: Vec<usize>,
}

impl<'a> Search<'a> {
    fn order_mut(&mut self, gen: Gen) -> &mut Vec<usize> {
        match gen {
            Gen::A => &mut self.order_a,
            Gen::B => &mut self.order_b,
        }
    }

    /// Planarity of the partial arc system with letters `0..placed` present.
    /// Arcs `e_i` exist for `i + 1 < placed`, plus the seam arc when the
    /// word is complete.
    fn partial_planar(&self, placed: usize) -> bool {
        let n = self.word.len();
        let complete = placed == n;
        let arc_exists = |i: usize| -> bool {
            if complete {
                true
            } else {
                i + 1 < placed
            }
        };
        // Rotations per circle, as darts (arc id, tail?).
        let mut rot: [Vec<Dart>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
        for (gen, order) in [(Gen::A, &self.order_a), (Gen::B, &self.order_b)] {
            for plus in [true, false] {
                let circle = Circle { gen, plus };
                let occs: Vec<usize> = if plus {
                    order.clone()
                } else {
                    order.iter().rev().copied().collect()
                };
                let mut darts = Vec::with_capacity(occs.len());
                for &i in &occs {
                    let l = self.word.letter(i);
                    if l.positive == plus {
                        if arc_exists(i) {
                            darts.push(Dart { arc: Occ { curve: 0, pos: i }, tail: true });
                        }
                    } else {
                        let p = (i + n - 1) % n;
                        if arc_exists(p) {
                            darts.push(Dart { arc: Occ { curve: 0, pos: p }, tail: false });
                        }
                    }
                }
                rot[circle.index()] = darts;
            }
        }
        // Union-find components over circles via existing arcs.
        let mut comp = [0usize, 1, 2, 3];
        fn find(c: &mut [usize; 4], mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        let circle_of = |i: usize, tail: bool| -> usize {
            let o = if tail { i } else { (i + 1) % n };
            let l = self.word.letter(o);
            Circle { gen: l.gen, plus: l.positive == tail }.index()
        };
        let mut e_count = [0i64; 4];
        for i in 0..n {
            if arc_exists(i) {
                let (u, v) = (circle_of(i, true), circle_of(i, false));
                let (ru, rv) = (find(&mut comp, u), find(&mut comp, v));
                if ru != rv {
                    comp[ru] = rv;
                }
            }
        }
        for i in 0..n {
            if arc_exists(i) {
                let r = find(&mut comp, circle_of(i, true));
                e_count[r] += 1;
            }
        }
        // Count face orbits per component.
        let pos_of = |d: Dart| -> (usize, usize) {
            let c = circle_of(d.arc.pos, d.tail);
            (c, rot[c].iter().position(|&x| x == d).expect("dart present"))
        };
        let mut f_count = [0i64; 4];
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        for c in 0..4 {
            for &start in &rot[c] {
                if seen.contains(&start) {
                    continue;
                }
                let mut d = start;
                loop {
                    seen.insert(d);
                    let opp = Dart { arc: d.arc, tail: !d.tail };
                    let (ci, pi) = pos_of(opp);
                    d = rot[ci][(pi + 1) % rot[ci].len()];
                    if d == start {
                        break;
                    }
                }
                let r = find(&mut comp, c);
                f_count[r] += 1;
            }
        }
        for r in 0..4 {
            if comp[r] != r || e_count[r] == 0 {
                continue;
            }
            let v = (0..4).filter(|&x| find(&mut comp.clone(), x) == r).count() as i64;
            if v - e_count[r] + f_count[r] != 2 {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, next: usize) -> bool {
        let n = self.word.len();
        if next == n {
            return self.partial_planar(n);
        }
        let gen = self.word.letter(next).gen;
        let len = self.order_mut(gen).len();
        if len == 0 {
            // First slot of this disk: cyclic order makes the position moot.
            self.order_mut(gen).push(next);
            if self.partial_planar(next + 1) && self.solve(next + 1) {
                return true;
            }
            self.order_mut(gen).pop();
            return false;
        }
        // Keep slot 0 anchored (cyclic order), try insertion points 1..=len.
        for p in 1..=len {
            self.order_mut(gen).insert(p, next);
            if self.partial_planar(next + 1) && self.solve(next + 1) {
                return true;
            }
            self.order_mut(gen).remove(p);
        }
        false
    }
}

/// Embeds a single reduced word as a simple closed curve, deterministically.
///
/// Fails with `NotRealizable` when no slot ordering yields a planar system.
pub fn embed_single_word(w: &CyclicWord) -> Result<EmbeddedDiagram, EmbedError> {
    if w.is_empty() || !w.is_reduced() {
        return Err(EmbedError::Diagram(DiagramError::BadWord(0)));
    }
    let mut search = Search { word: w, order_a: Vec::new(), order_b: Vec::new() };
    if !search.solve(0) {
        return Err(EmbedError::NotRealizable);
    }
    let to_occ = |v: &[usize]| -> Vec<Occ> { v.iter().map(|&i| Occ { curve: 0, pos: i }).collect() };
    let d = EmbeddedDiagram::new(
        alloc::vec![w.clone()],
        to_occ(&search.order_a),
        to_occ(&search.order_b),
    )?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn embeds_simple_words() {
        for s in ["A", "AB", "AABBB", "AAABAbbbAB", "AABBAABaBaB", "ABAB", "AABB"] {
            assert!(embed_single_word(&w(s)).is_ok(), "{s} should embed");
        }
    }

    #[test]
    fn rejects_unrealizable_word() {
        assert_eq!(embed_single_word(&w("AAbaB")), Err(EmbedError::NotRealizable));
    }

    #[test]
    fn commutator_embeds_as_separating_curve() {
        assert!(embed_single_word(&w("ABab")).is_ok());
    }

    #[test]
    fn single_crossing_core() {
        let d = embed_single_word(&w("A")).unwrap();
        assert_eq!(d.order(crate::word::Gen::A).len(), 1);
        assert!(d.order(crate::word::Gen::B).is_empty());
    }

    /// Exhaustive oracle at small lengths: a word embeds iff some pair of
    /// slot orders validates.
    #[test]
    fn solver_agrees_with_exhaustive_slot_permutations() {
        use crate::word::Letter;
        fn permutations(items: &[usize]) -> alloc::vec::Vec<alloc::vec::Vec<usize>> {
            if items.is_empty() {
                return alloc::vec![alloc::vec::Vec::new()];
            }
            let mut out = alloc::vec::Vec::new();
            for (k, &x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(k);
                for mut tail in permutations(&rest) {
                    tail.insert(0, x);
                    out.push(tail);
                }
            }
            out
        }
        let alphabet = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
        let mut words = alloc::vec![alloc::vec::Vec::new()];
        for _ in 0..5 {
            let mut next = alloc::vec::Vec::new();
            for p in &words {
                for &l in &alphabet {
                    if p.last().is_some_and(|t: &Letter| *t == l.inverse()) {
                        continue;
                    }
                    let mut q = p.clone();
                    q.push(l);
                    next.push(q);
                }
            }
            words = next;
        }
        for letters in words {
            let cw = CyclicWord::new(letters);
            if !cw.is_reduced() {
                continue;
            }
            let a_occ: alloc::vec::Vec<usize> = (0..cw.len())
                .filter(|&i| cw.letter(i).gen == Gen::A)
                .collect();
            let b_occ: alloc::vec::Vec<usize> =
                (0..cw.len()).filter(|&i| cw.letter(i).gen == Gen::B).collect();
            let mut any_valid = false;
            // Fix the first element of each cyclic order.
            let a_tails = if a_occ.is_empty() {
                alloc::vec![alloc::vec::Vec::new()]
            } else {
                permutations(&a_occ[1..])
            };
            for at in &a_tails {
                let mut oa: alloc::vec::Vec<Occ> = alloc::vec::Vec::new();
                if !a_occ.is_empty() {
                    oa.push(Occ { curve: 0, pos: a_occ[0] });
                    oa.extend(at.iter().map(|&i| Occ { curve: 0, pos: i }));
                }
                let b_tails = if b_occ.is_empty() {
                    alloc::vec![alloc::vec::Vec::new()]
                } else {
                    permutations(&b_occ[1..])
                };
                for bt in &b_tails {
                    let mut ob: alloc::vec::Vec<Occ> = alloc::vec::Vec::new();
                    if !b_occ.is_empty() {
                        ob.push(Occ { curve: 0, pos: b_occ[0] });
                        ob.extend(bt.iter().map(|&i| Occ { curve: 0, pos: i }));
                    }
                    if EmbeddedDiagram::new(alloc::vec![cw.clone()], oa.clone(), ob.clone()).is_ok()
                    {
                        any_valid = true;
                    }
                }
                if any_valid {
                    break;
                }
            }
            assert_eq!(
                embed_single_word(&cw).is_ok(),
                any_valid,
                "solver disagrees with oracle on {cw}"
            );
        }
    }
}

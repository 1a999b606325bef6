//! Basis substitutions on cyclic words.
//!
//! A bandsum replacement of one meridian disk acts on curve words as a
//! Nielsen substitution `X -> XY`, `X -> Xy`, `X -> YX` or `X -> yX` (with
//! `{X, Y} = {A, B}`), followed by reduction. Generator swaps and generator
//! inversions are the length-preserving relabelings of the disk system.

use crate::word::{CyclicWord, Gen, Letter};
use alloc::vec::Vec;
use core::fmt;

/// An invertible change of the meridian-disk basis, acting on curve words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisMove {
    /// Replace the disk dual to the generator whose letters change: every
    /// occurrence of `gen` is rewritten as a two-letter bandsum pattern.
    /// `suffix` picks `gen . other` vs `other . gen`; `inverse` picks the
    /// sign of the `other` factor. The four patterns of the spec are
    /// AB (`suffix, !inverse`), AB^-1 (`suffix, inverse`), BA, B^-1 A.
    Bandsum { gen: Gen, suffix: bool, inverse: bool },
    /// The relabeling A <-> B.
    SwapGenerators,
    /// The relabeling X <-> X^-1 for one generator.
    InvertGenerator(Gen),
}

impl BasisMove {
    /// The eight bandsum moves, in a fixed deterministic order.
    pub fn bandsums() -> [BasisMove; 8] {
        let mut out = [BasisMove::SwapGenerators; 8];
        let mut i = 0;
        for gen in [Gen::A, Gen::B] {
            for suffix in [true, false] {
                for inverse in [false, true] {
                    out[i] = BasisMove::Bandsum { gen, suffix, inverse };
                    i += 1;
                }
            }
        }
        out
    }

    /// All eleven moves: eight bandsums, swap, two generator inversions.
    pub fn all() -> Vec<BasisMove> {
        let mut v: Vec<BasisMove> = Self::bandsums().to_vec();
        v.push(BasisMove::SwapGenerators);
        v.push(BasisMove::InvertGenerator(Gen::A));
        v.push(BasisMove::InvertGenerator(Gen::B));
        v
    }

    pub fn inverse(self) -> BasisMove {
        match self {
            BasisMove::Bandsum { gen, suffix, inverse } => {
                BasisMove::Bandsum { gen, suffix, inverse: !inverse }
            }
            other => other,
        }
    }

    /// Image of each old generator as a word in the new letters.
    fn images(self) -> (Vec<Letter>, Vec<Letter>) {
        let single = |gen, positive| alloc::vec![Letter { gen, positive }];
        match self {
            BasisMove::Bandsum { gen, suffix, inverse } => {
                let x = Letter { gen, positive: true };
                let y = Letter { gen: gen.other(), positive: !inverse };
                let img = if suffix { alloc::vec![x, y] } else { alloc::vec![y, x] };
                match gen {
                    Gen::A => (img, single(Gen::B, true)),
                    Gen::B => (single(Gen::A, true), img),
                }
            }
            BasisMove::SwapGenerators => (single(Gen::B, true), single(Gen::A, true)),
            BasisMove::InvertGenerator(g) => match g {
                Gen::A => (single(Gen::A, false), single(Gen::B, true)),
                Gen::B => (single(Gen::A, true), single(Gen::B, false)),
            },
        }
    }

    /// The move's action on exponent sums; always unimodular.
    pub fn abelian_matrix(self) -> [[i64; 2]; 2] {
        let (ia, ib) = self.images();
        let row = |img: &[Letter]| {
            let mut r = [0i64; 2];
            for l in img {
                let d = if l.positive { 1 } else { -1 };
                match l.gen {
                    Gen::A => r[0] += d,
                    Gen::B => r[1] += d,
                }
            }
            r
        };
        [row(&ia), row(&ib)]
    }
}

impl fmt::Display for BasisMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisMove::Bandsum { gen, suffix, inverse } => {
                let x = Letter { gen, positive: true }.to_char();
                let y = Letter { gen: gen.other(), positive: !inverse }.to_char();
                if suffix {
                    write!(f, "{x} -> {x}{y}")
                } else {
                    write!(f, "{x} -> {y}{x}")
                }
            }
            BasisMove::SwapGenerators => write!(f, "A <-> B"),
            BasisMove::InvertGenerator(g) => {
                let x = Letter { gen: g, positive: true }.to_char();
                let xi = Letter { gen: g, positive: false }.to_char();
                write!(f, "{x} -> {xi}")
            }
        }
    }
}

/// Applies a basis move to a reduced cyclic word; the result is reduced.
pub fn apply_move(w: &CyclicWord, m: BasisMove) -> CyclicWord {
    let (img_a, img_b) = m.images();
    let mut letters: Vec<Letter> = Vec::with_capacity(2 * w.len());
    for &l in w.letters() {
        let img = match l.gen {
            Gen::A => &img_a,
            Gen::B => &img_b,
        };
        if l.positive {
            letters.extend_from_slice(img);
        } else {
            letters.extend(img.iter().rev().map(|x| x.inverse()));
        }
    }
    CyclicWord::new(letters).reduce()
}

/// Applies a sequence of moves left to right.
pub fn apply_moves(w: &CyclicWord, moves: &[BasisMove]) -> CyclicWord {
    let mut cur = w.clone();
    for &m in moves {
        cur = apply_move(&cur, m);
    }
    cur
}

/// Inverse of a move sequence: undoes `apply_moves(w, moves)`.
pub fn invert_moves(moves: &[BasisMove]) -> Vec<BasisMove> {
    moves.iter().rev().map(|m| m.inverse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, AbelianImage};
    use alloc::string::ToString;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn substitution_reduces() {
        // A -> Ab applied to AABBB.
        let m = BasisMove::Bandsum { gen: Gen::A, suffix: true, inverse: true };
        let got = apply_move(&w("AABBB"), m);
        assert_eq!(got.len(), 5);
        assert_eq!(got, w("AbAbBBB").reduce());
    }

    #[test]
    fn swap_is_involution_and_b_free_words_are_fixed_by_b_moves() {
        let v = w("AABaB");
        assert_eq!(apply_move(&apply_move(&v, BasisMove::SwapGenerators), BasisMove::SwapGenerators), v);
        let m = BasisMove::Bandsum { gen: Gen::B, suffix: true, inverse: false };
        assert_eq!(apply_move(&w("A"), m).to_string(), "A");
    }

    #[test]
    fn moves_invert_on_reduced_words() {
        use crate::word::CanonFlags;
        for s in ["AABBB", "AAABAbbbAB", "AABaB", "A"] {
            let v = w(s);
            for m in BasisMove::all() {
                let back = apply_move(&apply_move(&v, m), m.inverse());
                assert_eq!(
                    back.canonical_form(CanonFlags::ROTATION),
                    v.canonical_form(CanonFlags::ROTATION),
                    "move {m}"
                );
            }
        }
    }

    #[test]
    fn abelian_action_matches_matrix_and_is_unimodular() {
        for s in ["AABBB", "AAABAbbbAB", "ABaB"] {
            let v = w(s);
            let im = v.abelianize();
            for m in BasisMove::all() {
                let mat = m.abelian_matrix();
                let det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0];
                assert_eq!(det.abs(), 1);
                let got = apply_move(&v, m).abelianize();
                let want = AbelianImage::new(
                    im.n_a * mat[0][0] + im.n_b * mat[1][0],
                    im.n_a * mat[0][1] + im.n_b * mat[1][1],
                );
                assert_eq!(got, want, "move {m} on {s}");
            }
        }
    }
}

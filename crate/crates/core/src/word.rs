//! Cyclic words in the rank-2 free group `F(A, B)`.
//!
//! Uppercase letters are the generators, lowercase their inverses, so `Abb`
//! is `A B^-1 B^-1`. Words are read cyclically; free and cyclic reduction,
//! canonical forms and abelianization are all exact.

use alloc::vec::Vec;
use core::fmt;

/// One of the two free generators (equivalently, one of the two meridian
/// disks of the handlebody).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }
}

/// A single letter: a generator together with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub positive: bool,
}

impl Letter {
    pub const A: Letter = Letter { gen: Gen::A, positive: true };
    pub const A_INV: Letter = Letter { gen: Gen::A, positive: false };
    pub const B: Letter = Letter { gen: Gen::B, positive: true };
    pub const B_INV: Letter = Letter { gen: Gen::B, positive: false };

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, positive: !self.positive }
    }

    pub fn to_char(self) -> char {
        match (self.gen, self.positive) {
            (Gen::A, true) => 'A',
            (Gen::A, false) => 'a',
            (Gen::B, true) => 'B',
            (Gen::B, false) => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'a' => Some(Letter::A_INV),
            'B' => Some(Letter::B),
            'b' => Some(Letter::B_INV),
            _ => None,
        }
    }

    // Fixed letter order A < a < B < b used for all lexicographic tie-breaks.
    fn rank(self) -> u8 {
        match (self.gen, self.positive) {
            (Gen::A, true) => 0,
            (Gen::A, false) => 1,
            (Gen::B, true) => 2,
            (Gen::B, false) => 3,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> core::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// Exponent-sum pair `(n_A, n_B)` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbelianImage {
    pub n_a: i64,
    pub n_b: i64,
}

impl AbelianImage {
    pub fn new(n_a: i64, n_b: i64) -> Self {
        AbelianImage { n_a, n_b }
    }

    pub fn neg(self) -> Self {
        AbelianImage { n_a: -self.n_a, n_b: -self.n_b }
    }

    pub fn add(self, other: Self) -> Self {
        AbelianImage { n_a: self.n_a + other.n_a, n_b: self.n_b + other.n_b }
    }

    /// gcd of the two exponent sums; 0 only for the zero vector.
    pub fn gcd(self) -> i64 {
        gcd(self.n_a.unsigned_abs() as i64, self.n_b.unsigned_abs() as i64)
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Errors from word parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    EmptyWord,
    IllegalCharacter(usize),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::EmptyWord => write!(f, "empty word"),
            WordError::IllegalCharacter(pos) => {
                write!(f, "illegal character at position {pos} (alphabet is A, a, B, b)")
            }
        }
    }
}

/// Symmetries admitted when computing a canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonFlags {
    /// Cyclic rotations of the word.
    pub rotation: bool,
    /// Orientation reversal of the curve (formal inverse of the word).
    pub inversion: bool,
    /// The relabeling A <-> B.
    pub generator_swap: bool,
    /// The relabelings A <-> a and B <-> b, independently.
    pub generator_inversion: bool,
}

impl CanonFlags {
    /// Rotation only.
    pub const ROTATION: CanonFlags = CanonFlags {
        rotation: true,
        inversion: false,
        generator_swap: false,
        generator_inversion: false,
    };
    /// Rotation and curve inversion: identifies the two orientations of one
    /// unoriented curve. This is the comparison used for meridian words.
    pub const UNORIENTED: CanonFlags = CanonFlags {
        rotation: true,
        inversion: true,
        generator_swap: false,
        generator_inversion: false,
    };
    /// Every symmetry; identifies words up to relabeling the disk system.
    pub const FULL: CanonFlags = CanonFlags {
        rotation: true,
        inversion: true,
        generator_swap: true,
        generator_inversion: true,
    };
}

/// A word over `{A, a, B, b}` interpreted cyclically.
///
/// Most operations expect (and produce) words that are freely and cyclically
/// reduced; `parse_word` performs no reduction so that raw input can be
/// inspected.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

/// Parses a word from its ASCII form. No reduction is performed.
pub fn parse_word(text: &str) -> Result<CyclicWord, WordError> {
    if text.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        match Letter::from_char(c) {
            Some(l) => letters.push(l),
            None => return Err(WordError::IllegalCharacter(i)),
        }
    }
    Ok(CyclicWord { letters })
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> CyclicWord {
        CyclicWord { letters }
    }

    /// The empty (trivial) word.
    pub fn trivial() -> CyclicWord {
        CyclicWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, pos: usize) -> Letter {
        self.letters[pos % self.letters.len()]
    }

    /// Freely and cyclically reduces the word. The result is empty exactly
    /// when the word is trivial in `F(A, B)` up to conjugacy.
    pub fn reduce(&self) -> CyclicWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|t| *t == l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        // Cancel across the cyclic seam.
        let mut lo = 0usize;
        let mut hi = stack.len();
        while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        CyclicWord { letters: stack[lo..hi].to_vec() }
    }

    pub fn is_reduced(&self) -> bool {
        let n = self.letters.len();
        if n == 0 {
            return true;
        }
        (0..n).all(|i| self.letters[i] != self.letters[(i + 1) % n].inverse())
    }

    pub fn rotate(&self, k: usize) -> CyclicWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let n = self.letters.len();
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        CyclicWord { letters }
    }

    /// The formal inverse (reversed word with all signs flipped); as a curve,
    /// the same curve with reversed orientation.
    pub fn invert(&self) -> CyclicWord {
        CyclicWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Applies one of the eight letter relabelings generated by A<->B,
    /// A<->a, B<->b to every letter.
    pub fn relabel(&self, swap: bool, flip_a: bool, flip_b: bool) -> CyclicWord {
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let gen = if swap { l.gen.other() } else { l.gen };
                let flip = match gen {
                    Gen::A => flip_a,
                    Gen::B => flip_b,
                };
                Letter { gen, positive: l.positive != flip }
            })
            .collect();
        CyclicWord { letters }
    }

    fn least_rotation(&self) -> CyclicWord {
        let n = self.letters.len();
        if n <= 1 {
            return self.clone();
        }
        let mut best = 0usize;
        for k in 1..n {
            for i in 0..n {
                let a = self.letters[(best + i) % n];
                let b = self.letters[(k + i) % n];
                match a.cmp(&b) {
                    core::cmp::Ordering::Less => break,
                    core::cmp::Ordering::Greater => {
                        best = k;
                        break;
                    }
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
        self.rotate(best)
    }

    /// Lexicographically least representative under the chosen symmetry
    /// group, with the letter order A < a < B < b. Deterministic.
    pub fn canonical_form(&self, flags: CanonFlags) -> CyclicWord {
        let mut variants: Vec<CyclicWord> = Vec::new();
        let swaps: &[bool] = if flags.generator_swap { &[false, true] } else { &[false] };
        let flips: &[bool] = if flags.generator_inversion { &[false, true] } else { &[false] };
        let invs: &[bool] = if flags.inversion { &[false, true] } else { &[false] };
        for &inv in invs {
            let base = if inv { self.invert() } else { self.clone() };
            for &swap in swaps {
                for &fa in flips {
                    for &fb in flips {
                        variants.push(base.relabel(swap, fa, fb));
                    }
                }
            }
        }
        variants
            .into_iter()
            .map(|w| if flags.rotation { w.least_rotation() } else { w })
            .min()
            .expect("at least one variant")
    }

    /// Canonical form of an unoriented curve word (rotation + inversion).
    pub fn canon(&self) -> CyclicWord {
        self.canonical_form(CanonFlags::UNORIENTED)
    }

    /// Exponent sums `(n_A, n_B)`.
    pub fn abelianize(&self) -> AbelianImage {
        let mut im = AbelianImage::default();
        for l in &self.letters {
            let d = if l.positive { 1 } else { -1 };
            match l.gen {
                Gen::A => im.n_a += d,
                Gen::B => im.n_b += d,
            }
        }
        im
    }

    /// If the cyclic word is a proper power, returns `(root, exponent)` with
    /// the minimal-length root and exponent >= 2.
    pub fn proper_power_root(&self) -> Option<(CyclicWord, u32)> {
        let n = self.letters.len();
        if n < 2 {
            return None;
        }
        for d in 1..n {
            if n % d != 0 {
                continue;
            }
            let periodic = (0..n).all(|i| self.letters[i] == self.letters[(i + d) % n]);
            if periodic {
                let root = CyclicWord { letters: self.letters[..d].to_vec() };
                return Some((root, (n / d) as u32));
            }
        }
        None
    }

    /// Consecutive-letter-pair count `n(x, y)` over the cyclic word.
    pub fn pair_count(&self, x: Letter, y: Letter) -> usize {
        let n = self.letters.len();
        (0..n)
            .filter(|&i| self.letters[i] == x && self.letters[(i + 1) % n] == y)
            .count()
    }

    /// True when every letter of a generator has one sign (the word is
    /// positive up to inverting generators), e.g. `AABBB`, `AbbAb`.
    pub fn is_sign_coherent(&self) -> bool {
        for g in [Gen::A, Gen::B] {
            let mut seen_pos = false;
            let mut seen_neg = false;
            for l in &self.letters {
                if l.gen == g {
                    if l.positive {
                        seen_pos = true;
                    } else {
                        seen_neg = true;
                    }
                }
            }
            if seen_pos && seen_neg {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

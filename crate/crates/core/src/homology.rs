//! First homology of the closed manifold obtained by filling the handlebody
//! along a pair of curve words: the Smith normal form of the 2x2 matrix of
//! exponent sums.

use crate::word::{gcd, AbelianImage, CyclicWord};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Invariant factors of `Z^2 / <ab(w1), ab(w2)>`.
///
/// Factors are stored in divisibility order `d1 | d2`, with `0` denoting a
/// free `Z` summand and `1` a trivial summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FillingHomology {
    pub d1: u64,
    pub d2: u64,
}

impl FillingHomology {
    /// Smith normal form of the matrix with rows `r1`, `r2`.
    pub fn from_rows(r1: AbelianImage, r2: AbelianImage) -> FillingHomology {
        let det = (r1.n_a.checked_mul(r2.n_b).unwrap() - r1.n_b.checked_mul(r2.n_a).unwrap())
            .unsigned_abs();
        let d1 = gcd(gcd(r1.n_a, r1.n_b), gcd(r2.n_a, r2.n_b)).unsigned_abs();
        if det != 0 {
            FillingHomology { d1, d2: det / d1 }
        } else if d1 != 0 {
            FillingHomology { d1, d2: 0 }
        } else {
            FillingHomology { d1: 0, d2: 0 }
        }
    }

    pub fn from_words(w1: &CyclicWord, w2: &CyclicWord) -> FillingHomology {
        FillingHomology::from_rows(w1.abelianize(), w2.abelianize())
    }

    /// True when the group is trivial.
    pub fn is_trivial(&self) -> bool {
        self.d1 == 1 && self.d2 == 1
    }

    /// True when the group is infinite cyclic.
    pub fn is_z(&self) -> bool {
        self.d1 == 1 && self.d2 == 0
    }

    /// `Some(p)` when the group is `Z (+) Z/p` with `p > 1`.
    pub fn z_plus_torsion(&self) -> Option<u64> {
        (self.d2 == 0 && self.d1 > 1).then_some(self.d1)
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<u64> {
        (self.d1 != 0 && self.d2 != 0).then(|| self.d1 * self.d2)
    }

    /// Free rank (number of `Z` summands).
    pub fn free_rank(&self) -> u32 {
        [self.d1, self.d2].iter().filter(|&&d| d == 0).count() as u32
    }
}

impl fmt::Display for FillingHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for d in [self.d1, self.d2] {
            if d == 0 {
                parts.push(String::from("Z"));
            }
        }
        for d in [self.d1, self.d2] {
            if d > 1 {
                parts.push(alloc::format!("Z/{d}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use alloc::string::ToString;

    fn h(a: &str, b: &str) -> FillingHomology {
        FillingHomology::from_words(&parse_word(a).unwrap(), &parse_word(b).unwrap())
    }

    #[test]
    fn fixture_fillings() {
        assert_eq!(h("AAABAbbbAB", "Abb").to_string(), "Z/9");
        assert_eq!(h("AABBAABaBaB", "ABaB").to_string(), "Z/4");
        assert!(h("A", "B").is_trivial());
        assert_eq!(h("A", "BB").order(), Some(2));
    }

    #[test]
    fn degenerate_shapes() {
        // Parallel rows give a free factor.
        assert_eq!(h("AB", "AB").to_string(), "Z");
        assert_eq!(h("AB", "ABAB").d1, 1);
        assert_eq!(h("AB", "ABAB").d2, 0);
        // Torsion with a free factor.
        let two = FillingHomology::from_rows(AbelianImage::new(2, 0), AbelianImage::new(4, 0));
        assert_eq!(two.z_plus_torsion(), Some(2));
        // Zero matrix: Z^2.
        let zz = FillingHomology::from_rows(AbelianImage::new(0, 0), AbelianImage::new(0, 0));
        assert_eq!(zz.free_rank(), 2);
    }

    #[test]
    fn determinant_consistency() {
        // Product of finite invariant factors equals |det| when det != 0.
        for (a, b) in [("AABBB", "AB"), ("AAABAbbbAB", "Abb"), ("AABB", "ABB")] {
            let (wa, wb) = (parse_word(a).unwrap(), parse_word(b).unwrap());
            let (ia, ib) = (wa.abelianize(), wb.abelianize());
            let det = (ia.n_a * ib.n_b - ia.n_b * ib.n_a).unsigned_abs();
            let hh = h(a, b);
            if det != 0 {
                assert_eq!(hh.order(), Some(det));
                assert_eq!(hh.d2 % hh.d1, 0);
            }
        }
    }
}

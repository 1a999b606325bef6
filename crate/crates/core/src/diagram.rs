//! The embedded (fat-graph) model of one or two disjoint simple closed
//! curves on the genus-two surface, cut open along the standard meridian
//! disks `{D_A, D_B}`.
//!
//! Cutting turns the surface into a 4-holed sphere whose boundary circles
//! `A+, A-, B+, B-` are the fat vertices. Each letter of a curve word is one
//! crossing of a disk and occupies one slot on each of the two circles of
//! that disk; the arcs between consecutive letters are the edges. A diagram
//! is the pair of cyclic slot orders around the `+` circles (the `-` circles
//! carry the reversed orders, because the two copies of a disk are reglued
//! by an orientation-reversing identification).
//!
//! Crossing convention: a positive letter departs on the `+` circle of its
//! disk and arrives on the `-` circle; inverse letters reverse the roles.

use crate::word::{CyclicWord, Gen};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One of the four boundary circles of the cut-open handlebody.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circle {
    pub gen: Gen,
    pub plus: bool,
}

impl Circle {
    pub const ALL: [Circle; 4] = [
        Circle { gen: Gen::A, plus: true },
        Circle { gen: Gen::A, plus: false },
        Circle { gen: Gen::B, plus: true },
        Circle { gen: Gen::B, plus: false },
    ];

    pub fn index(self) -> usize {
        match (self.gen, self.plus) {
            (Gen::A, true) => 0,
            (Gen::A, false) => 1,
            (Gen::B, true) => 2,
            (Gen::B, false) => 3,
        }
    }

    pub fn opposite(self) -> Circle {
        Circle { gen: self.gen, plus: !self.plus }
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.gen {
            Gen::A => 'A',
            Gen::B => 'B',
        };
        write!(f, "{}{}", g, if self.plus { '+' } else { '-' })
    }
}

/// A letter occurrence: curve index and position within that curve's word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occ {
    pub curve: usize,
    pub pos: usize,
}

impl fmt::Display for Occ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.curve, self.pos)
    }
}

/// Arc `e_(c,i)`: the strand between letters `i` and `i+1` of curve `c`,
/// identified by its tail occurrence.
pub type ArcId = Occ;

/// One end of an arc. `tail` is the end at the departure circle of the
/// arc's tail letter; arcs are directed tail -> head along the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub arc: ArcId,
    pub tail: bool,
}

/// An item of a face boundary walk: an arc side or a circle segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkItem {
    /// Arc side, `cod` when the walk traverses the arc tail -> head.
    Arc { arc: ArcId, cod: bool },
    /// Segment of `circle` from rotation slot `idx` to slot `idx + 1`.
    Seg { circle: Circle, idx: usize },
}

/// A face boundary walk (cyclic, alternating arc sides and segments).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub items: Vec<WalkItem>,
}

impl FaceWalk {
    pub fn arc_sides(&self) -> impl Iterator<Item = (ArcId, bool)> + '_ {
        self.items.iter().filter_map(|it| match *it {
            WalkItem::Arc { arc, cod } => Some((arc, cod)),
            WalkItem::Seg { .. } => None,
        })
    }
}

/// A complementary piece of the diagram in the 4-holed sphere. Pieces of
/// connected diagrams without cut-vertices are disks; for other diagrams the
/// outer faces of the nested components merge into one non-disk piece.
#[derive(Debug, Clone)]
pub struct Face {
    /// Boundary walks of the piece (one for a disk).
    pub walks: Vec<FaceWalk>,
    /// Euler characteristic of the piece.
    pub euler: i64,
}

/// Validation failures for embedded diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    /// Word is empty or not cyclically reduced.
    BadWord(usize),
    /// Slot lists do not match the letter occurrences of the words.
    SlotMismatch(String),
    /// The slot orders do not embed in the sphere (some component of the
    /// fattened graph has positive genus).
    NotPlanar,
    /// A curve became trivial during reduction.
    TrivialCurve(usize),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::BadWord(c) => write!(f, "curve {c}: word empty or not cyclically reduced"),
            DiagramError::SlotMismatch(m) => write!(f, "slot order mismatch: {m}"),
            DiagramError::NotPlanar => write!(f, "slot orders are not realizable in the surface"),
            DiagramError::TrivialCurve(c) => write!(f, "curve {c} is trivial"),
        }
    }
}

/// A validated embedded diagram of one or two disjoint curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedDiagram {
    words: Vec<CyclicWord>,
    order_a: Vec<Occ>,
    order_b: Vec<Occ>,
}

impl EmbeddedDiagram {
    /// Builds and validates a diagram from curve words and the cyclic slot
    /// orders around `A+` and `B+`.
    pub fn new(
        words: Vec<CyclicWord>,
        order_a: Vec<Occ>,
        order_b: Vec<Occ>,
    ) -> Result<EmbeddedDiagram, DiagramError> {
        for (c, w) in words.iter().enumerate() {
            if w.is_empty() || !w.is_reduced() {
                return Err(DiagramError::BadWord(c));
            }
        }
        let d = EmbeddedDiagram { words, order_a, order_b };
        d.check_slots()?;
        if !d.is_planar() {
            return Err(DiagramError::NotPlanar);
        }
        Ok(d)
    }

    /// Construction used by surgery: words may still carry cancelling pairs,
    /// which are removed geometrically before validation.
    pub(crate) fn new_unreduced(
        words: Vec<CyclicWord>,
        order_a: Vec<Occ>,
        order_b: Vec<Occ>,
    ) -> Result<EmbeddedDiagram, DiagramError> {
        let d = EmbeddedDiagram { words, order_a, order_b };
        d.check_slots()?;
        let d = d.remove_bigons()?;
        if !d.is_planar() {
            return Err(DiagramError::NotPlanar);
        }
        Ok(d)
    }

    pub fn words(&self) -> &[CyclicWord] {
        &self.words
    }

    pub fn curve_count(&self) -> usize {
        self.words.len()
    }

    pub fn order(&self, gen: Gen) -> &[Occ] {
        match gen {
            Gen::A => &self.order_a,
            Gen::B => &self.order_b,
        }
    }

    /// Total number of arcs (= total letters = diagram complexity).
    pub fn complexity(&self) -> usize {
        self.words.iter().map(|w| w.len()).sum()
    }

    fn letter(&self, o: Occ) -> crate::word::Letter {
        self.words[o.curve].letter(o.pos)
    }

    pub(crate) fn prev_pos(&self, o: Occ) -> Occ {
        let n = self.words[o.curve].len();
        Occ { curve: o.curve, pos: (o.pos + n - 1) % n }
    }

    pub(crate) fn next_pos(&self, o: Occ) -> Occ {
        let n = self.words[o.curve].len();
        Occ { curve: o.curve, pos: (o.pos + 1) % n }
    }

    fn check_slots(&self) -> Result<(), DiagramError> {
        for (gen, order) in [(Gen::A, &self.order_a), (Gen::B, &self.order_b)] {
            let mut expect: BTreeSet<Occ> = BTreeSet::new();
            for (c, w) in self.words.iter().enumerate() {
                for (i, l) in w.letters().iter().enumerate() {
                    if l.gen == gen {
                        expect.insert(Occ { curve: c, pos: i });
                    }
                }
            }
            let got: BTreeSet<Occ> = order.iter().copied().collect();
            if got.len() != order.len() {
                return Err(DiagramError::SlotMismatch(alloc::format!(
                    "duplicate occurrence in {gen:?} order"
                )));
            }
            if got != expect {
                return Err(DiagramError::SlotMismatch(alloc::format!(
                    "{gen:?} order does not list each {gen:?}-occurrence exactly once"
                )));
            }
        }
        Ok(())
    }

    /// The rotation (cyclic dart order) around a circle. `-` circles carry
    /// the reversed occurrence order (gluing reversal).
    pub fn rotation(&self, circle: Circle) -> Vec<Dart> {
        let order = self.order(circle.gen);
        let mut occs: Vec<Occ> = order.to_vec();
        if !circle.plus {
            occs.reverse();
        }
        occs.into_iter()
            .map(|o| {
                let l = self.letter(o);
                if l.positive == circle.plus {
                    Dart { arc: o, tail: true }
                } else {
                    Dart { arc: self.prev_pos(o), tail: false }
                }
            })
            .collect()
    }

    /// Circle at which a dart sits.
    pub fn dart_circle(&self, d: Dart) -> Circle {
        let o = if d.tail { d.arc } else { self.next_pos(d.arc) };
        let l = self.letter(o);
        Circle { gen: l.gen, plus: l.positive == d.tail }
    }

    fn all_rotations(&self) -> [Vec<Dart>; 4] {
        [
            self.rotation(Circle::ALL[0]),
            self.rotation(Circle::ALL[1]),
            self.rotation(Circle::ALL[2]),
            self.rotation(Circle::ALL[3]),
        ]
    }

    /// Face orbit walks of the fattened diagram. Each arc side appears in
    /// exactly one walk.
    pub fn orbit_faces(&self) -> Vec<FaceWalk> {
        let rotations = self.all_rotations();
        let pos_of = |d: Dart| -> (usize, usize) {
            let c = self.dart_circle(d).index();
            let p = rotations[c].iter().position(|&x| x == d).expect("dart in rotation");
            (c, p)
        };
        let mut all_darts: Vec<Dart> = Vec::new();
        for r in &rotations {
            all_darts.extend_from_slice(r);
        }
        all_darts.sort();
        all_darts.dedup();

        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for &start in &all_darts {
            if seen.contains(&start) {
                continue;
            }
            let mut items = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d);
                items.push(WalkItem::Arc { arc: d.arc, cod: d.tail });
                let opp = Dart { arc: d.arc, tail: !d.tail };
                let (ci, pi) = pos_of(opp);
                items.push(WalkItem::Seg { circle: Circle::ALL[ci], idx: pi });
                let rot = &rotations[ci];
                d = rot[(pi + 1) % rot.len()];
                if d == start {
                    break;
                }
            }
            faces.push(FaceWalk { items });
        }
        faces
    }

    /// Connected components of the 4-vertex multigraph (vertex partition).
    fn components(&self) -> Vec<usize> {
        let mut comp: [usize; 4] = [0, 1, 2, 3];
        fn find(comp: &mut [usize; 4], mut x: usize) -> usize {
            while comp[x] != x {
                comp[x] = comp[comp[x]];
                x = comp[x];
            }
            x
        }
        for (c, w) in self.words.iter().enumerate() {
            for i in 0..w.len() {
                let o = Occ { curve: c, pos: i };
                let tail_circle = {
                    let l = self.letter(o);
                    Circle { gen: l.gen, plus: l.positive }
                };
                let head_occ = self.next_pos(o);
                let head_circle = {
                    let l = self.letter(head_occ);
                    Circle { gen: l.gen, plus: !l.positive }
                };
                let (a, b) = (find(&mut comp, tail_circle.index()), find(&mut comp, head_circle.index()));
                if a != b {
                    comp[a] = b;
                }
            }
        }
        let mut out = alloc::vec![0usize; 4];
        for i in 0..4 {
            out[i] = find(&mut comp, i);
        }
        out
    }

    /// Genus-zero check: every component of the fattened graph satisfies
    /// V - E + F = 2.
    fn is_planar(&self) -> bool {
        let comp = self.components();
        let faces = self.orbit_faces();
        let reprs: BTreeSet<usize> = comp.iter().copied().collect();
        for r in reprs {
            let verts: Vec<usize> = (0..4).filter(|&i| comp[i] == r).collect();
            let v = verts.len() as i64;
            let mut e = 0i64;
            for (c, w) in self.words.iter().enumerate() {
                for i in 0..w.len() {
                    let o = Occ { curve: c, pos: i };
                    let l = self.letter(o);
                    let tc = Circle { gen: l.gen, plus: l.positive };
                    if comp[tc.index()] == r {
                        e += 1;
                    }
                }
            }
            let mut f = 0i64;
            for face in &faces {
                if let Some(WalkItem::Seg { circle, .. }) =
                    face.items.iter().find(|it| matches!(it, WalkItem::Seg { .. }))
                {
                    if comp[circle.index()] == r {
                        f += 1;
                    }
                } else if let Some(WalkItem::Arc { arc, .. }) =
                    face.items.iter().find(|it| matches!(it, WalkItem::Arc { .. }))
                {
                    let l = self.letter(*arc);
                    if comp[Circle { gen: l.gen, plus: l.positive }.index()] == r {
                        f += 1;
                    }
                }
            }
            // Isolated circles carry one face each.
            if e == 0 {
                continue;
            }
            if v - e + f != 2 {
                return false;
            }
        }
        true
    }

    /// Complementary pieces with Euler characteristics. Components of a
    /// disconnected diagram are placed side by side in one shared region, so
    /// the first orbit face of every component merges into a single piece.
    pub fn faces(&self) -> Vec<Face> {
        let comp = self.components();
        let orbit = self.orbit_faces();
        let face_comp = |fw: &FaceWalk| -> usize {
            for it in &fw.items {
                if let WalkItem::Seg { circle, .. } = it {
                    return comp[circle.index()];
                }
            }
            unreachable!("face walk without segment")
        };
        // Representatives of components, counting isolated circles too.
        let reprs: Vec<usize> = {
            let mut r: Vec<usize> = comp.to_vec();
            r.sort_unstable();
            r.dedup();
            r
        };
        if reprs.len() == 1 {
            return orbit.into_iter().map(|w| Face { euler: 1, walks: alloc::vec![w] }).collect();
        }
        let mut shared = Face { euler: 2 - reprs.len() as i64, walks: Vec::new() };
        let mut out: Vec<Face> = Vec::new();
        let mut outer_taken: BTreeSet<usize> = BTreeSet::new();
        for fw in orbit {
            let r = face_comp(&fw);
            if outer_taken.insert(r) {
                shared.walks.push(fw);
            } else {
                out.push(Face { euler: 1, walks: alloc::vec![fw] });
            }
        }
        // Isolated circles (no darts) have no orbit walk; they still bound
        // the shared region.
        out.push(shared);
        out
    }

    /// The multigraph summary with band multiplicities and form tag.
    pub fn graph(&self) -> DiagramGraph {
        DiagramGraph::of_words(&self.words)
    }

    /// The diagram of one curve obtained by deleting the others' arcs.
    pub fn subdiagram(&self, curve: usize) -> EmbeddedDiagram {
        let filter = |order: &[Occ]| -> Vec<Occ> {
            order
                .iter()
                .filter(|o| o.curve == curve)
                .map(|o| Occ { curve: 0, pos: o.pos })
                .collect()
        };
        EmbeddedDiagram {
            words: alloc::vec![self.words[curve].clone()],
            order_a: filter(&self.order_a),
            order_b: filter(&self.order_b),
        }
    }

    /// Removes cancelling letter pairs geometrically: a cancelling pair is a
    /// loop arc at a circle, and an innermost loop has its two slots adjacent
    /// in the rotation, so both slots can be deleted. Repeats to a fixed
    /// point; words end up cyclically reduced.
    fn remove_bigons(mut self) -> Result<EmbeddedDiagram, DiagramError> {
        'outer: loop {
            let mut has_pair = false;
            for (c, w) in self.words.iter().enumerate() {
                let n = w.len();
                if n == 0 {
                    return Err(DiagramError::TrivialCurve(c));
                }
                for i in 0..n {
                    let j = (i + 1) % n;
                    if w.letter(i) != w.letter(j).inverse() {
                        continue;
                    }
                    has_pair = true;
                    let (oi, oj) = (Occ { curve: c, pos: i }, Occ { curve: c, pos: j });
                    let gen = w.letter(i).gen;
                    let order = self.order(gen);
                    let m = order.len();
                    let pi = order.iter().position(|&o| o == oi).expect("slot");
                    let pj = order.iter().position(|&o| o == oj).expect("slot");
                    if (pi + 1) % m == pj || (pj + 1) % m == pi {
                        self.delete_pair(c, i, j);
                        continue 'outer;
                    }
                }
            }
            if !has_pair {
                return Ok(self);
            }
            // A cancelling pair exists but none is innermost: impossible for
            // slot orders that came from a planar diagram.
            return Err(DiagramError::SlotMismatch(String::from(
                "cancelling pair without an innermost bigon",
            )));
        }
    }

    /// Deletes letters `i` and `j = i+1` of curve `c` and their slots.
    fn delete_pair(&mut self, c: usize, i: usize, j: usize) {
        let keep = |o: &Occ| !(o.curve == c && (o.pos == i || o.pos == j));
        let shift = |o: Occ| -> Occ {
            if o.curve != c {
                return o;
            }
            let mut p = o.pos;
            if p > i {
                p -= 1;
            }
            if o.pos > j {
                p -= 1;
            }
            // When j == 0 (cyclic seam) only the i-deletion shifts.
            Occ { curve: c, pos: p }
        };
        let fix = |order: &[Occ]| -> Vec<Occ> {
            order.iter().filter(|o| keep(o)).map(|&o| shift(o)).collect()
        };
        self.order_a = fix(&self.order_a);
        self.order_b = fix(&self.order_b);
        let letters: Vec<_> = self.words[c]
            .letters()
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != i && *p != j)
            .map(|(_, &l)| l)
            .collect();
        self.words[c] = CyclicWord::new(letters);
    }
}

/// Multiplicities of the six band types plus the form classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramGraph {
    /// `counts[i][j]` = number of arcs joining circles `i` and `j`
    /// (unordered, `i <= j` populated).
    pub counts: [[usize; 4]; 4],
    pub form: GraphForm,
}

/// Shape classification of the 4-vertex multigraph. Connected graphs
/// without cut-vertices carry one antipodal pair of mixed bands (`FormII`,
/// the shape of positive diagrams) or both pairs (`FormI`); `FormIII` is the
/// degenerate shape with a cut-vertex or a disconnection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphForm {
    FormI,
    /// For positive diagrams carries `(a, c, d)` = multiplicities of the
    /// `A+A-` band, each mixed band, and the `B+B-` band.
    FormII { positive_params: Option<(usize, usize, usize)> },
    FormIII,
}

impl DiagramGraph {
    pub fn of_words(words: &[CyclicWord]) -> DiagramGraph {
        let mut counts = [[0usize; 4]; 4];
        for w in words {
            let n = w.len();
            for i in 0..n {
                let (x, y) = (w.letter(i), w.letter((i + 1) % n));
                let from = Circle { gen: x.gen, plus: x.positive }.index();
                let to = Circle { gen: y.gen, plus: !y.positive }.index();
                let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
                counts[lo][hi] += 1;
            }
        }
        let mut g = DiagramGraph { counts, form: GraphForm::FormIII };
        g.form = g.classify(words);
        g
    }

    pub fn band(&self, u: Circle, v: Circle) -> usize {
        let (a, b) = (u.index(), v.index());
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.counts[lo][hi]
    }

    fn degree(&self, v: usize) -> usize {
        (0..4).map(|u| self.band(Circle::ALL[u], Circle::ALL[v])).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = [false; 4];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..4 {
                if !seen[u] && self.band(Circle::ALL[v], Circle::ALL[u]) > 0 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Articulation test on the 4-vertex multigraph: removing some vertex
    /// increases the number of components.
    pub fn has_cut_vertex(&self) -> bool {
        let comps = |skip: Option<usize>| -> usize {
            let verts: Vec<usize> = (0..4).filter(|&v| Some(v) != skip).collect();
            let mut seen: Vec<bool> = alloc::vec![false; verts.len()];
            let mut n = 0;
            for s in 0..verts.len() {
                if seen[s] {
                    continue;
                }
                n += 1;
                let mut stack = alloc::vec![s];
                seen[s] = true;
                while let Some(vi) = stack.pop() {
                    for ui in 0..verts.len() {
                        if !seen[ui]
                            && self.band(Circle::ALL[verts[vi]], Circle::ALL[verts[ui]]) > 0
                        {
                            seen[ui] = true;
                            stack.push(ui);
                        }
                    }
                }
            }
            n
        };
        let base = comps(None);
        (0..4).any(|v| self.degree(v) > 0 && comps(Some(v)) > base - 1 + 1usize.min(1))
    }

    /// True when every arc joins `A+` to `A-` or `B+` to `B-` etc. with the
    /// one-antipodal-pair mixed pattern of positive diagrams and all of
    /// `a, c, d > 0`.
    pub fn positive_params(&self) -> Option<(usize, usize, usize)> {
        let c = |u: usize, v: usize| self.counts[u.min(v)][u.max(v)];
        let a = c(0, 1);
        let d = c(2, 3);
        // A+B- with A-B+ (all-positive words), or A+B+ with A-B- (words
        // positive after inverting one generator).
        for (m1, m2, z1, z2) in [((0, 3), (1, 2), (0, 2), (1, 3)), ((0, 2), (1, 3), (0, 3), (1, 2))]
        {
            let cc = c(m1.0, m1.1);
            if cc > 0 && c(m2.0, m2.1) == cc && c(z1.0, z1.1) == 0 && c(z2.0, z2.1) == 0 && a > 0 && d > 0
            {
                return Some((a, cc, d));
            }
        }
        None
    }

    fn classify(&self, words: &[CyclicWord]) -> GraphForm {
        if !self.is_connected() || self.has_cut_vertex() {
            return GraphForm::FormIII;
        }
        let c = |u: usize, v: usize| self.counts[u.min(v)][u.max(v)];
        let pair1 = c(0, 3) + c(1, 2); // A+B-, A-B+
        let pair2 = c(0, 2) + c(1, 3); // A+B+, A-B-
        if pair1 > 0 && pair2 > 0 {
            GraphForm::FormI
        } else {
            let positive_params = self
                .positive_params()
                .filter(|_| words.iter().all(|w| w.is_sign_coherent()));
            GraphForm::FormII { positive_params }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::embed_single_word;
    use crate::word::parse_word;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn graph_counts_match_pair_counts() {
        let g = DiagramGraph::of_words(&[w("AABBB")]);
        // (a, c, d) = (1, 1, 2) in the positive form.
        assert_eq!(g.positive_params(), Some((1, 1, 2)));
        assert!(g.is_connected());
        assert!(!g.has_cut_vertex());
        assert!(matches!(g.form, GraphForm::FormII { positive_params: Some((1, 1, 2)) }));
    }

    #[test]
    fn m011_word_band_multiplicities() {
        let g = DiagramGraph::of_words(&[w("AAABAbbbAB")]);
        let c = |u: usize, v: usize| g.counts[u.min(v)][u.max(v)];
        assert_eq!(c(0, 1), 2, "AA band");
        assert_eq!(c(2, 3), 2, "bb band");
        // Four mixed bands present.
        let mixed = [c(0, 2), c(0, 3), c(1, 2), c(1, 3)];
        assert!(mixed.iter().all(|&m| m > 0));
        assert_eq!(g.form, GraphForm::FormI);
    }

    #[test]
    fn single_generator_graph_is_disconnected() {
        let g = DiagramGraph::of_words(&[w("A")]);
        assert!(!g.is_connected());
        assert_eq!(g.form, GraphForm::FormIII);
    }

    #[test]
    fn faces_of_core_diagram() {
        let d = embed_single_word(&w("A")).unwrap();
        let faces = d.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].euler, -1);
        let total: i64 = faces.iter().map(|f| f.euler).sum();
        assert_eq!(total, d.complexity() as i64 - 2);
    }

    #[test]
    fn euler_bookkeeping_for_trefoil() {
        let d = embed_single_word(&w("AABBB")).unwrap();
        let faces = d.faces();
        assert_eq!(faces.len(), 3, "all pieces disks, count E - 2");
        assert!(faces.iter().all(|f| f.euler == 1));
    }
}

//! Waves based at a curve of an embedded diagram, the distinguished wave,
//! and surgery along a wave producing the distinguished meridian pair.
//!
//! A wave based at `R` is an essential arc in the surface cut along `R`,
//! with both endpoints on the same side of `R` and interior disjoint from
//! every diagram curve. Inside the cut-open model a wave is a chord of one
//! complementary face joining two arc sides of `R` which the face sees from
//! the same side. Essentiality is decided by a region fill in the reglued
//! surface: the chord is inessential exactly when one of its sides, grown
//! across disk regluings and across the other curves' strands, closes up
//! into a disk meeting `R` in a single subarc.

use crate::diagram::{ArcId, Circle, DiagramError, EmbeddedDiagram, FaceWalk, Occ, WalkItem};
use crate::embed::{embed_single_word, EmbedError};
use crate::moves::{apply_moves, invert_moves, BasisMove};
use crate::reduction::{minimal_orbit_with_traces, whitehead_minimize, OrbitCap};
use crate::word::{CyclicWord, Gen};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// Classification of a wave in a connected diagram without cut-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WaveKind {
    /// The unique wave of a nonpositive diagram.
    UniqueNonpositive,
    /// Endpoints on an `A+A-` band arc and a `B+B-` band arc.
    Horizontal,
    /// Endpoints on the two mixed band arcs.
    Vertical,
}

/// A wave based at curve `base`, recorded by its two endpoint arc sides.
/// `cod` is true when the hosting face traverses the arc along the curve
/// orientation; both endpoints of a wave carry the same `cod`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wave {
    pub base: usize,
    pub arc1: ArcId,
    pub arc2: ArcId,
    pub cod: bool,
    pub kind: WaveKind,
    /// Index of the hosting face in `orbit_faces()` of the diagram the wave
    /// was found in.
    pub face: usize,
}

/// Errors from wave location and surgery pipelines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WaveError {
    /// Diagram graph is disconnected or has a cut-vertex.
    DiagramNotEligible,
    /// Every minimal diagram of the word is disconnected or has a
    /// cut-vertex (the word is primitive or a proper power).
    BoundaryCompressible,
    /// The curve admits no positive minimal diagram.
    NotPositive,
    Embed(EmbedError),
    Diagram(DiagramError),
    /// A structural expectation failed; indicates a bug or bad input.
    Internal(&'static str),
}

impl fmt::Display for WaveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WaveError::DiagramNotEligible => {
                write!(f, "diagram is disconnected or has a cut-vertex")
            }
            WaveError::BoundaryCompressible => write!(
                f,
                "every minimal diagram is disconnected or has a cut-vertex (primitive or proper power)"
            ),
            WaveError::NotPositive => write!(f, "curve has no positive minimal diagram"),
            WaveError::Embed(e) => write!(f, "{e}"),
            WaveError::Diagram(e) => write!(f, "{e}"),
            WaveError::Internal(m) => write!(f, "internal invariant failed: {m}"),
        }
    }
}

impl From<EmbedError> for WaveError {
    fn from(e: EmbedError) -> Self {
        WaveError::Embed(e)
    }
}

impl From<DiagramError> for WaveError {
    fn from(e: DiagramError) -> Self {
        WaveError::Diagram(e)
    }
}

/// Pieces and crossable adjacencies used by the essentiality fill.
struct FillContext<'a> {
    d: &'a EmbeddedDiagram,
    faces: &'a [FaceWalk],
    base: usize,
    /// piece id of every (face, item); host face items get split ids.
    piece_of_item: BTreeMap<(usize, usize), usize>,
    #[allow(dead_code)]
    piece_count: usize,
    host_parts: (usize, usize),
}

impl<'a> FillContext<'a> {
    fn new(d: &'a EmbeddedDiagram, faces: &'a [FaceWalk], base: usize, host: usize, e1: usize, e2: usize) -> Self {
        let mut piece_of_item = BTreeMap::new();
        let mut piece_count = 0usize;
        for (fi, fw) in faces.iter().enumerate() {
            if fi == host {
                continue;
            }
            for ii in 0..fw.items.len() {
                piece_of_item.insert((fi, ii), piece_count);
            }
            piece_count += 1;
        }
        let part0 = piece_count;
        let part1 = piece_count + 1;
        piece_count += 2;
        let m = faces[host].items.len();
        let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
        for ii in 0..m {
            if ii == lo || ii == hi {
                continue;
            }
            let part = if ii > lo && ii < hi { part0 } else { part1 };
            piece_of_item.insert((host, ii), part);
        }
        FillContext { d, faces, base, piece_of_item, piece_count, host_parts: (part0, part1) }
    }

    fn seg_partner(&self, circle: Circle, idx: usize) -> (Circle, usize) {
        let m = self.d.rotation(circle).len();
        (circle.opposite(), (2 * m - 2 - idx) % m)
    }

    fn locate_seg(&self, circle: Circle, idx: usize) -> (usize, usize) {
        for (fi, fw) in self.faces.iter().enumerate() {
            for (ii, it) in fw.items.iter().enumerate() {
                if *it == (WalkItem::Seg { circle, idx }) {
                    return (fi, ii);
                }
            }
        }
        unreachable!("segment not on any face")
    }

    fn locate_arc_side(&self, arc: ArcId, cod: bool) -> (usize, usize) {
        for (fi, fw) in self.faces.iter().enumerate() {
            for (ii, it) in fw.items.iter().enumerate() {
                if *it == (WalkItem::Arc { arc, cod }) {
                    return (fi, ii);
                }
            }
        }
        unreachable!("arc side not on any face")
    }

    /// Grows the region from one side of the chord. Returns
    /// `(pieces, internal_gluings, contains_other_side)`.
    fn fill(&self, start_part: usize) -> (BTreeSet<usize>, usize, bool) {
        let mut region: BTreeSet<usize> = BTreeSet::new();
        let mut stack = alloc::vec![start_part];
        region.insert(start_part);
        // Collect crossable adjacencies as piece pairs, each listed once.
        let mut gluings: Vec<(usize, usize)> = Vec::new();
        let mut seen_seg: BTreeSet<(Circle, usize)> = BTreeSet::new();
        let mut seen_arc: BTreeSet<ArcId> = BTreeSet::new();
        for (fi, fw) in self.faces.iter().enumerate() {
            for (ii, it) in fw.items.iter().enumerate() {
                match *it {
                    WalkItem::Seg { circle, idx } => {
                        if seen_seg.contains(&(circle, idx)) {
                            continue;
                        }
                        let (pc, pidx) = self.seg_partner(circle, idx);
                        seen_seg.insert((circle, idx));
                        seen_seg.insert((pc, pidx));
                        let here = self.piece_of_item[&(fi, ii)];
                        let there_item = self.locate_seg(pc, pidx);
                        let there = self.piece_of_item[&there_item];
                        gluings.push((here, there));
                    }
                    WalkItem::Arc { arc, .. } => {
                        if arc.curve == self.base || !seen_arc.insert(arc) {
                            continue;
                        }
                        let s1 = self.locate_arc_side(arc, true);
                        let s2 = self.locate_arc_side(arc, false);
                        gluings.push((self.piece_of_item[&s1], self.piece_of_item[&s2]));
                    }
                }
            }
        }
        while let Some(p) = stack.pop() {
            for &(u, v) in &gluings {
                let next = if u == p && !region.contains(&v) {
                    v
                } else if v == p && !region.contains(&u) {
                    u
                } else {
                    continue;
                };
                region.insert(next);
                stack.push(next);
            }
        }
        let internal = gluings
            .iter()
            .filter(|&&(u, v)| region.contains(&u) && region.contains(&v))
            .count();
        let other = if start_part == self.host_parts.0 { self.host_parts.1 } else { self.host_parts.0 };
        let has_other = region.contains(&other);
        (region, internal, has_other)
    }
}


/// True when the chord between items `e1`, `e2` of face `host` is essential
/// in the surface cut along `base`.
fn chord_is_essential(
    d: &EmbeddedDiagram,
    faces: &[FaceWalk],
    base: usize,
    host: usize,
    e1: usize,
    e2: usize,
) -> bool {
    let ctx = FillContext::new(d, faces, base, host, e1, e2);
    for part in [ctx.host_parts.0, ctx.host_parts.1] {
        let (region, internal, has_other) = ctx.fill(part);
        if has_other {
            // Both chord sides connect around: no trivializing disk at all.
            return true;
        }
        let chi = region.len() as i64 - internal as i64;
        if chi == 1 {
            return false;
        }
    }
    true
}

fn classify(d: &EmbeddedDiagram, positive: bool, arc1: ArcId, arc2: ArcId) -> WaveKind {
    if !positive {
        return WaveKind::UniqueNonpositive;
    }
    let band = |arc: ArcId| -> (Circle, Circle) {
        let w = &d.words()[arc.curve];
        let x = w.letter(arc.pos);
        let y = w.letter((arc.pos + 1) % w.len());
        (
            Circle { gen: x.gen, plus: x.positive },
            Circle { gen: y.gen, plus: !y.positive },
        )
    };
    let pure = |(u, v): (Circle, Circle)| u.gen == v.gen;
    match (pure(band(arc1)), pure(band(arc2))) {
        (true, true) => WaveKind::Horizontal,
        (false, false) => WaveKind::Vertical,
        _ => WaveKind::UniqueNonpositive,
    }
}

/// All waves based at `base`, one representative per hyperelliptic pair
/// (the representative whose hosting face lies on the left of the curve),
/// deduplicated by the unordered surgery word pair.
///
/// Returns an empty list for disconnected or cut-vertex diagrams.
pub fn find_waves(d: &EmbeddedDiagram, base: usize) -> Vec<Wave> {
    let g = d.graph();
    if !g.is_connected() || g.has_cut_vertex() {
        return Vec::new();
    }
    let faces = d.orbit_faces();
    // The positive classification only applies to single-curve positive
    // diagrams; a wave of a pair diagram is classified against the base
    // curve's own sign coherence together with the positive band pattern.
    let positive = g.positive_params().is_some() && d.words().iter().all(|w| w.is_sign_coherent());
    let mut found: BTreeMap<(CyclicWord, CyclicWord), Wave> = BTreeMap::new();
    for (fi, fw) in faces.iter().enumerate() {
        let sides: Vec<(usize, ArcId, bool)> = fw
            .items
            .iter()
            .enumerate()
            .filter_map(|(ii, it)| match *it {
                WalkItem::Arc { arc, cod } if arc.curve == base => Some((ii, arc, cod)),
                _ => None,
            })
            .collect();
        for x in 0..sides.len() {
            for y in (x + 1)..sides.len() {
                let (i1, a1, c1) = sides[x];
                let (i2, a2, c2) = sides[y];
                if c1 != c2 || !c1 {
                    // Same-side condition; keep only the left-side member of
                    // each hyperelliptic pair.
                    continue;
                }
                if !chord_is_essential(d, &faces, base, fi, i1, i2) {
                    continue;
                }
                let wave = Wave {
                    base,
                    arc1: a1,
                    arc2: a2,
                    cod: true,
                    kind: classify(d, positive, a1, a2),
                    face: fi,
                };
                let (m1, m2) = split_words(d, base, a1.pos, a2.pos);
                let mut key = [m1.reduce().canon(), m2.reduce().canon()];
                key.sort();
                let [k1, k2] = key;
                found.entry((k1, k2)).or_insert(wave);
            }
        }
    }
    found.into_values().collect()
}

/// The distinguished wave of a connected single-curve diagram without
/// cut-vertices: the unique wave when the diagram is nonpositive, the
/// horizontal wave when it is positive.
pub fn distinguished_wave(d: &EmbeddedDiagram) -> Result<Wave, WaveError> {
    if d.curve_count() != 1 {
        return Err(WaveError::Internal("distinguished_wave expects a single-curve diagram"));
    }
    let g = d.graph();
    if !g.is_connected() || g.has_cut_vertex() {
        return Err(WaveError::DiagramNotEligible);
    }
    let waves = find_waves(d, 0);
    let positive = g.positive_params().is_some() && d.words()[0].is_sign_coherent();
    if positive {
        if waves.len() != 2 {
            return Err(WaveError::Internal("positive diagram must have exactly two waves"));
        }
        waves
            .into_iter()
            .find(|w| w.kind == WaveKind::Horizontal)
            .ok_or(WaveError::Internal("positive diagram lacks a horizontal wave"))
    } else {
        if waves.len() != 1 {
            return Err(WaveError::Internal("nonpositive diagram must have a unique wave"));
        }
        Ok(waves.into_iter().next().expect("one wave"))
    }
}

/// Splits the base word at the wave feet: cutting the curve just after
/// letter `i` and just after letter `j` yields the letter runs
/// `i+1 ..= j` and `j+1 ..= i`.
fn split_words(d: &EmbeddedDiagram, base: usize, i: usize, j: usize) -> (CyclicWord, CyclicWord) {
    let w = &d.words()[base];
    let n = w.len();
    let run = |from: usize, to: usize| -> CyclicWord {
        let mut letters = Vec::new();
        let mut p = (from + 1) % n;
        loop {
            letters.push(w.letter(p));
            if p == to {
                break;
            }
            p = (p + 1) % n;
        }
        CyclicWord::new(letters)
    };
    (run(i, j), run(j, i))
}

/// The meridian pair produced by surgery along a wave, with the inherited
/// pair diagram and provenance.
#[derive(Debug, Clone)]
pub struct MeridianPair {
    /// Reduced slope representative words, in the basis of `base`.
    pub m1: CyclicWord,
    pub m2: CyclicWord,
    /// Pair diagram of `{m1, m2}` inherited from the surgered diagram.
    pub diagram: EmbeddedDiagram,
    /// The surgered curve word.
    pub base: CyclicWord,
    /// The wave used.
    pub wave: Wave,
    /// Basis moves leading from the original input word to `base` (empty
    /// when surgery was performed in the input basis).
    pub moves: Vec<BasisMove>,
}

impl MeridianPair {
    /// The two words with the shorter first (ties by canonical order).
    pub fn ordered(&self) -> (&CyclicWord, &CyclicWord) {
        let k1 = (self.m1.len(), self.m1.canon());
        let k2 = (self.m2.len(), self.m2.canon());
        if k1 <= k2 {
            (&self.m1, &self.m2)
        } else {
            (&self.m2, &self.m1)
        }
    }

    /// Unordered canonical key for comparisons.
    pub fn canon_key(&self) -> (CyclicWord, CyclicWord) {
        let mut k = [self.m1.canon(), self.m2.canon()];
        k.sort();
        let [a, b] = k;
        (a, b)
    }

    /// The pair words mapped back to the basis of the original input word.
    pub fn words_in_input_basis(&self) -> (CyclicWord, CyclicWord) {
        let inv = invert_moves(&self.moves);
        (apply_moves(&self.m1, &inv), apply_moves(&self.m2, &inv))
    }
}

/// Surgery on curve `base` of `d` along `wave`: the two boundary components
/// of a neighborhood of the curve union the wave, other than the curve
/// itself. Any other curve of `d` is dropped from the resulting diagram.
pub fn surgery(d: &EmbeddedDiagram, wave: &Wave) -> Result<MeridianPair, WaveError> {
    let base = wave.base;
    let (i, j) = (wave.arc1.pos, wave.arc2.pos);
    let w = &d.words()[base];
    let n = w.len();
    // Positions of each new curve, walking forward from the cut points.
    let mut owner: Vec<(usize, usize)> = alloc::vec![(usize::MAX, usize::MAX); n];
    let mut fill = |from: usize, to: usize, curve: usize| {
        let mut p = (from + 1) % n;
        let mut idx = 0usize;
        loop {
            owner[p] = (curve, idx);
            idx += 1;
            if p == to {
                break;
            }
            p = (p + 1) % n;
        }
    };
    fill(i, j, 0);
    fill(j, i, 1);
    let (w1, w2) = split_words(d, base, i, j);
    let map_order = |order: &[Occ]| -> Vec<Occ> {
        order
            .iter()
            .filter(|o| o.curve == base)
            .map(|o| {
                let (curve, pos) = owner[o.pos];
                Occ { curve, pos }
            })
            .collect()
    };
    let order_a = map_order(d.order(Gen::A));
    let order_b = map_order(d.order(Gen::B));
    let pair = EmbeddedDiagram::new_unreduced(alloc::vec![w1, w2], order_a, order_b)?;
    let m1 = pair.words()[0].clone();
    let m2 = pair.words()[1].clone();
    // Slope representatives are strictly shorter and conserve homology.
    let ab_sum = m1.abelianize().add(m2.abelianize());
    let ab_base = w.abelianize();
    if m1.is_empty() || m2.is_empty() {
        return Err(WaveError::Internal("surgery produced a trivial curve"));
    }
    if m1.len() >= n || m2.len() >= n {
        return Err(WaveError::Internal("surgery output not shorter than base"));
    }
    if ab_sum != ab_base && ab_sum != ab_base.neg() {
        return Err(WaveError::Internal("surgery broke abelianization conservation"));
    }
    Ok(MeridianPair {
        m1,
        m2,
        diagram: pair,
        base: w.clone(),
        wave: wave.clone(),
        moves: Vec::new(),
    })
}

/// Selects the diagram base for a word: the input itself when it is already
/// minimal with an eligible graph, otherwise a canonical minimal-orbit
/// representative (positive representatives preferred), together with the
/// moves reaching it.
fn select_base(w: &CyclicWord, cap: OrbitCap) -> Result<(CyclicWord, Vec<BasisMove>), WaveError> {
    let red = w.reduce();
    if red.is_empty() {
        return Err(WaveError::BoundaryCompressible);
    }
    let eligible = |v: &CyclicWord| -> bool {
        let g = crate::diagram::DiagramGraph::of_words(core::slice::from_ref(v));
        g.is_connected() && !g.has_cut_vertex()
    };
    let (min, trace) = whitehead_minimize(&red);
    if red.len() == min.len() && eligible(&red) && embed_single_word(&red).is_ok() {
        return Ok((red, Vec::new()));
    }
    let orbit = minimal_orbit_with_traces(&min, cap);
    let mut candidates: Vec<(bool, CyclicWord, Vec<BasisMove>)> = Vec::new();
    for (word, orbit_trace) in orbit {
        if eligible(&word) && embed_single_word(&word).is_ok() {
            let mut moves = trace.clone();
            moves.extend(orbit_trace);
            let positive = word.is_sign_coherent();
            candidates.push((positive, word, moves));
        }
    }
    // Prefer positive representatives, then canonical word order.
    candidates.sort_by(|(p1, w1, _), (p2, w2, _)| p2.cmp(p1).then(w1.cmp(w2)));
    match candidates.into_iter().next() {
        Some((_, word, moves)) => Ok((word, moves)),
        None => Err(WaveError::BoundaryCompressible),
    }
}

/// The distinguished meridian pair of a curve word: minimize, embed, find
/// the distinguished wave, surger. The pair is returned in the basis of the
/// chosen minimal representative (`MeridianPair::moves` records the basis
/// change; it is empty whenever the input itself was already an eligible
/// minimal diagram).
pub fn distinguished_meridian_pair(w: &CyclicWord) -> Result<MeridianPair, WaveError> {
    distinguished_meridian_pair_capped(w, OrbitCap::default())
}

pub fn distinguished_meridian_pair_capped(
    w: &CyclicWord,
    cap: OrbitCap,
) -> Result<MeridianPair, WaveError> {
    let (base, moves) = select_base(w, cap)?;
    let d = embed_single_word(&base)?;
    let wave = distinguished_wave(&d)?;
    let mut pair = surgery(&d, &wave)?;
    pair.moves = moves;
    Ok(pair)
}

/// Surgery along the vertical wave of a positive minimal diagram of `w`.
pub fn vertical_slope_pair(w: &CyclicWord) -> Result<MeridianPair, WaveError> {
    vertical_slope_pair_capped(w, OrbitCap::default())
}

pub fn vertical_slope_pair_capped(w: &CyclicWord, cap: OrbitCap) -> Result<MeridianPair, WaveError> {
    let positive_form = |v: &CyclicWord| {
        let g = crate::diagram::DiagramGraph::of_words(core::slice::from_ref(v));
        v.is_sign_coherent() && g.positive_params().is_some() && embed_single_word(v).is_ok()
    };
    // Vertical slopes depend on the diagram, not only on the curve: when the
    // given word itself presents a positive diagram, use it; otherwise fall
    // back to a positive minimal representative.
    let (base, moves) = {
        let red = w.reduce();
        if positive_form(&red) {
            (red, Vec::new())
        } else {
            select_base(w, cap)?
        }
    };
    if !positive_form(&base) {
        return Err(WaveError::NotPositive);
    }
    let d = embed_single_word(&base)?;
    let waves = find_waves(&d, 0);
    let vertical = waves
        .into_iter()
        .find(|wv| wv.kind == WaveKind::Vertical)
        .ok_or(WaveError::Internal("positive diagram lacks a vertical wave"))?;
    let mut pair = surgery(&d, &vertical)?;
    pair.moves = moves;
    Ok(pair)
}

/// Algebraic intersection number of curve `other` of `d` with a wave found
/// in the subdiagram of `base` (the wave's chord, pushed into the full
/// diagram, crosses only strands of `other`; the signed crossing count is
/// path-independent because the hosting subdiagram face is a disk).
pub fn signed_intersection(
    d: &EmbeddedDiagram,
    base: usize,
    other: usize,
    wave: &Wave,
) -> Result<i64, WaveError> {
    let faces = d.orbit_faces();
    let locate = |arc: ArcId, cod: bool| -> Option<(usize, usize)> {
        for (fi, fw) in faces.iter().enumerate() {
            for (ii, it) in fw.items.iter().enumerate() {
                if *it == (WalkItem::Arc { arc: Occ { curve: base, pos: arc.pos }, cod }) {
                    return Some((fi, ii));
                }
            }
        }
        None
    };
    let (f_start, _) = locate(wave.arc1, wave.cod).ok_or(WaveError::Internal("wave arc1 not in diagram"))?;
    let (f_goal, _) = locate(wave.arc2, wave.cod).ok_or(WaveError::Internal("wave arc2 not in diagram"))?;
    if f_start == f_goal {
        return Ok(0);
    }
    // Breadth-first search over faces, crossing only strands of `other`.
    let mut prev: BTreeMap<usize, (usize, ArcId, bool)> = BTreeMap::new();
    let mut queue: Vec<usize> = alloc::vec![f_start];
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    seen.insert(f_start);
    let side_of = |arc: ArcId, cod: bool| -> Option<usize> {
        for (fi, fw) in faces.iter().enumerate() {
            if fw.items.iter().any(|it| *it == (WalkItem::Arc { arc, cod })) {
                return Some(fi);
            }
        }
        None
    };
    let mut arcs_of_other: Vec<ArcId> = Vec::new();
    let n_other = d.words()[other].len();
    for p in 0..n_other {
        arcs_of_other.push(Occ { curve: other, pos: p });
    }
    'bfs: while let Some(f) = queue.pop() {
        for &arc in &arcs_of_other {
            for cod in [true, false] {
                if side_of(arc, cod) == Some(f) {
                    let to = side_of(arc, !cod).ok_or(WaveError::Internal("arc side missing"))?;
                    if seen.insert(to) {
                        prev.insert(to, (f, arc, cod));
                        queue.push(to);
                        if to == f_goal {
                            break 'bfs;
                        }
                    }
                }
            }
        }
    }
    if !seen.contains(&f_goal) {
        return Err(WaveError::Internal("wave feet not connected through the other curve"));
    }
    let mut total = 0i64;
    let mut cur = f_goal;
    while cur != f_start {
        let (from, _arc, cod_from) = prev[&cur];
        // Crossing from the side that sees the arc co-directed means passing
        // from the curve's left to its right.
        total += if cod_from { -1 } else { 1 };
        cur = from;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use alloc::string::ToString;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn trefoil_has_horizontal_and_vertical_waves() {
        let d = embed_single_word(&w("AABBB")).unwrap();
        let waves = find_waves(&d, 0);
        assert_eq!(waves.len(), 2);
        let kinds: alloc::vec::Vec<WaveKind> = waves.iter().map(|x| x.kind).collect();
        assert!(kinds.contains(&WaveKind::Horizontal));
        assert!(kinds.contains(&WaveKind::Vertical));
    }

    #[test]
    fn trefoil_horizontal_surgery_gives_ab_abb() {
        let d = embed_single_word(&w("AABBB")).unwrap();
        let wave = distinguished_wave(&d).unwrap();
        assert_eq!(wave.kind, WaveKind::Horizontal);
        let pair = surgery(&d, &wave).unwrap();
        let key = pair.canon_key();
        assert_eq!(key.0.to_string(), "AB");
        assert_eq!(key.1.to_string(), "ABB");
    }

    #[test]
    fn nonpositive_word_has_unique_wave() {
        let d = embed_single_word(&w("AAABAbbbAB")).unwrap();
        let waves = find_waves(&d, 0);
        assert_eq!(waves.len(), 1);
        assert_eq!(waves[0].kind, WaveKind::UniqueNonpositive);
    }

    #[test]
    fn m011_first_relator_pair() {
        let pair = distinguished_meridian_pair(&w("AAABAbbbAB")).unwrap();
        let key = pair.canon_key();
        let mut expect = [w("Abb").canon(), w("AAAAB").canon()];
        expect.sort();
        assert_eq!((key.0, key.1), (expect[0].clone(), expect[1].clone()));
    }

    #[test]
    fn core_diagram_not_eligible() {
        let d = embed_single_word(&w("A")).unwrap();
        assert_eq!(distinguished_wave(&d).unwrap_err(), WaveError::DiagramNotEligible);
    }

    #[test]
    fn primitive_is_boundary_compressible() {
        assert_eq!(
            distinguished_meridian_pair(&w("AB")).unwrap_err(),
            WaveError::BoundaryCompressible
        );
    }
}

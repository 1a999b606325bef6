//! Depth of an unknotting tunnel, the shortest meridian representative, and
//! the unknotting graphs `G` and `G*` carrying all minimal unknotting paths.

use crate::prim::is_primitive_or_proper_power;
use crate::recognition::{
    embeds_in_family_capped, jointly_minimize_to_eligible, EmbedVerdict, RecognitionError,
};
use crate::reduction::OrbitCap;
use crate::waves::{distinguished_meridian_pair_capped, MeridianPair, WaveError};
use crate::word::CyclicWord;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

const STEP_CAP: usize = 10_000;
/// Hard cap on unknotting-graph vertices.
pub const GRAPH_VERTEX_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DepthError {
    /// The exterior does not embed in S3, S1xS2, or S1xS2 # L(p,q), so
    /// depth is undefined.
    NotInFamily,
    /// Both members are primitive or proper powers; no shortest meridian
    /// representative is defined.
    BothPrimitiveOrPower,
    VertexCapExceeded,
    StepCapExceeded,
    Wave(WaveError),
    Recognition(RecognitionError),
}

impl fmt::Display for DepthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthError::NotInFamily => {
                write!(f, "depth is defined only for tunnels of knots in S3, S1xS2, or S1xS2#L(p,q)")
            }
            DepthError::BothPrimitiveOrPower => {
                write!(f, "both representatives are primitive or proper powers")
            }
            DepthError::VertexCapExceeded => write!(f, "unknotting graph exceeded the vertex cap"),
            DepthError::StepCapExceeded => write!(f, "depth procedure exceeded the step cap"),
            DepthError::Wave(e) => write!(f, "{e}"),
            DepthError::Recognition(e) => write!(f, "{e}"),
        }
    }
}

impl From<WaveError> for DepthError {
    fn from(e: WaveError) -> Self {
        DepthError::Wave(e)
    }
}

impl From<RecognitionError> for DepthError {
    fn from(e: RecognitionError) -> Self {
        DepthError::Recognition(e)
    }
}

/// Index (0 or 1) of the shortest meridian representative of a pair: the
/// member the distinguished wave of an eligible pair diagram is not based
/// at, equivalently the shorter member in a basis where the pair diagram is
/// connected without cut-vertices.
pub fn shortest_meridian(pair: &MeridianPair) -> Result<usize, DepthError> {
    shortest_meridian_capped(pair, OrbitCap::default())
}

pub fn shortest_meridian_capped(pair: &MeridianPair, cap: OrbitCap) -> Result<usize, DepthError> {
    let c1 = is_primitive_or_proper_power(&pair.m1);
    let c2 = is_primitive_or_proper_power(&pair.m2);
    if c1.is_primitive_or_power() && c2.is_primitive_or_power() {
        return Err(DepthError::BothPrimitiveOrPower);
    }
    let (u1, u2) = jointly_minimize_to_eligible(&pair.m1, &pair.m2, cap)
        .ok_or(DepthError::Wave(WaveError::DiagramNotEligible))?;
    if u1.len() == u2.len() {
        return Err(DepthError::Wave(WaveError::Internal(
            "eligible minimal pair diagram with equal lengths",
        )));
    }
    Ok(if u1.len() < u2.len() { 0 } else { 1 })
}

/// Result of the depth procedure: the minimal unknotting path length, the
/// path itself, and the meridian pair seen at each step (all words in the
/// input basis).
#[derive(Debug, Clone)]
pub struct DepthResult {
    pub depth: usize,
    pub path: Vec<CyclicWord>,
    pub steps: Vec<(CyclicWord, CyclicWord)>,
}

fn pair_in_input_basis(
    w: &CyclicWord,
    cap: OrbitCap,
) -> Result<(MeridianPair, CyclicWord, CyclicWord), WaveError> {
    let pair = distinguished_meridian_pair_capped(w, cap)?;
    let (p1, p2) = pair.words_in_input_basis();
    Ok((pair, p1, p2))
}

/// Computes the depth of the tunnel dual to `w`, replacing the current
/// curve with the shortest distinguished meridian representative at each
/// step (either member when both are primitive or proper powers).
pub fn depth(w: &CyclicWord) -> Result<DepthResult, DepthError> {
    depth_capped(w, OrbitCap::default())
}

pub fn depth_capped(w: &CyclicWord, cap: OrbitCap) -> Result<DepthResult, DepthError> {
    let red = w.reduce();
    if red.is_empty() {
        return Err(DepthError::Wave(WaveError::BoundaryCompressible));
    }
    if !is_primitive_or_proper_power(&red).is_primitive_or_power() {
        match embeds_in_family_capped(&red, cap)?.0 {
            EmbedVerdict::InFamily(_) => {}
            EmbedVerdict::DoesNotEmbed => return Err(DepthError::NotInFamily),
        }
    }
    let mut cur = red;
    let mut result = DepthResult { depth: 0, path: alloc::vec![cur.clone()], steps: Vec::new() };
    for _ in 0..STEP_CAP {
        if is_primitive_or_proper_power(&cur).is_primitive_or_power() {
            return Ok(result);
        }
        let (pair, p1, p2) = pair_in_input_basis(&cur, cap)?;
        let next = match shortest_meridian_capped(&pair, cap) {
            Ok(idx) => {
                if idx == 0 {
                    p1.clone()
                } else {
                    p2.clone()
                }
            }
            Err(DepthError::BothPrimitiveOrPower) => {
                // Either member works; follow the shorter for determinism.
                let k1 = (p1.len(), p1.canon());
                let k2 = (p2.len(), p2.canon());
                if k1 <= k2 {
                    p1.clone()
                } else {
                    p2.clone()
                }
            }
            Err(e) => return Err(e),
        };
        result.steps.push((p1, p2));
        result.path.push(next.clone());
        result.depth += 1;
        cur = next;
    }
    Err(DepthError::StepCapExceeded)
}

/// A vertex of the unknotting graph.
#[derive(Debug, Clone)]
pub struct GraphVertex {
    /// Canonical (rotation + inversion) word in the input basis.
    pub word: CyclicWord,
    pub prim_or_power: bool,
}

/// The directed graphs `G` (distinguished-meridian descendants, carrying
/// all minimal unknotting paths) and its subgraph `G*` (the vertices the
/// depth procedure examines, plus cross-links from each non-followed,
/// non-terminal sibling to its followed sibling).
#[derive(Debug, Clone)]
pub struct UnknottingGraph {
    pub vertices: Vec<GraphVertex>,
    /// Distinguished-child edges of `G`.
    pub child_edges: Vec<(usize, usize)>,
    /// Cross-link edges of `G*`.
    pub cross_edges: Vec<(usize, usize)>,
    pub initial: usize,
    /// Vertices belonging to `G*`.
    pub gstar_vertices: Vec<usize>,
    /// The procedure's unknotting path as vertex indices.
    pub path: Vec<usize>,
}

impl UnknottingGraph {
    pub fn terminal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.prim_or_power)
            .map(|(i, _)| i)
    }
}

/// Builds the full graph `G` by recursive expansion from `w`, marking the
/// `G*` subgraph along the deterministic depth path.
pub fn build_unknotting_graph(w: &CyclicWord) -> Result<UnknottingGraph, DepthError> {
    build_unknotting_graph_capped(w, OrbitCap::default())
}

pub fn build_unknotting_graph_capped(
    w: &CyclicWord,
    cap: OrbitCap,
) -> Result<UnknottingGraph, DepthError> {
    let red = w.reduce();
    if red.is_empty() {
        return Err(DepthError::Wave(WaveError::BoundaryCompressible));
    }
    if !is_primitive_or_proper_power(&red).is_primitive_or_power() {
        match embeds_in_family_capped(&red, cap)?.0 {
            EmbedVerdict::InFamily(_) => {}
            EmbedVerdict::DoesNotEmbed => return Err(DepthError::NotInFamily),
        }
    }
    let mut vertices: Vec<GraphVertex> = Vec::new();
    let mut index: BTreeMap<CyclicWord, usize> = BTreeMap::new();
    let mut child_edges: Vec<(usize, usize)> = Vec::new();
    let mut children: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let intern = |vertices: &mut Vec<GraphVertex>,
                      index: &mut BTreeMap<CyclicWord, usize>,
                      word: &CyclicWord|
     -> Result<usize, DepthError> {
        let canon = word.canon();
        if let Some(&i) = index.get(&canon) {
            return Ok(i);
        }
        if vertices.len() >= GRAPH_VERTEX_CAP {
            return Err(DepthError::VertexCapExceeded);
        }
        let prim_or_power = is_primitive_or_proper_power(&canon).is_primitive_or_power();
        vertices.push(GraphVertex { word: canon.clone(), prim_or_power });
        index.insert(canon, vertices.len() - 1);
        Ok(vertices.len() - 1)
    };
    let initial = intern(&mut vertices, &mut index, &red)?;
    let mut frontier = alloc::vec![initial];
    while let Some(v) = frontier.pop() {
        if vertices[v].prim_or_power || children.contains_key(&v) {
            continue;
        }
        let word = vertices[v].word.clone();
        let (_, p1, p2) = pair_in_input_basis(&word, cap)?;
        let i1 = intern(&mut vertices, &mut index, &p1)?;
        let i2 = intern(&mut vertices, &mut index, &p2)?;
        child_edges.push((v, i1));
        child_edges.push((v, i2));
        children.insert(v, (i1, i2));
        frontier.push(i1);
        frontier.push(i2);
    }
    // The deterministic procedure path and the G* decoration.
    let depth_result = depth_capped(&red, cap)?;
    let mut path = Vec::new();
    for word in &depth_result.path {
        let canon = word.canon();
        path.push(*index.get(&canon).ok_or(DepthError::Wave(WaveError::Internal(
            "depth path word missing from graph",
        )))?);
    }
    let mut gstar: Vec<usize> = path.clone();
    let mut cross_edges: Vec<(usize, usize)> = Vec::new();
    for (step, &v) in path.iter().enumerate() {
        if let Some(&(c1, c2)) = children.get(&v) {
            let followed = path.get(step + 1).copied();
            for c in [c1, c2] {
                if !gstar.contains(&c) {
                    gstar.push(c);
                }
            }
            if let Some(fv) = followed {
                let other = if fv == c1 { c2 } else { c1 };
                if other != fv && !vertices[other].prim_or_power {
                    cross_edges.push((other, fv));
                }
            }
        }
    }
    Ok(UnknottingGraph {
        vertices,
        child_edges,
        cross_edges,
        initial,
        gstar_vertices: gstar,
        path,
    })
}

/// Minimal directed path lengths `L(V)` from the initial vertex, following
/// distinguished-child edges.
pub fn min_path_lengths(g: &UnknottingGraph) -> BTreeMap<usize, usize> {
    bfs_lengths(g.initial, g.vertices.len(), &g.child_edges)
}

/// `L(V)` computed over child edges plus cross-links (used to check that
/// cross-links never shorten terminal distances).
pub fn min_path_lengths_with_cross(g: &UnknottingGraph) -> BTreeMap<usize, usize> {
    let mut edges = g.child_edges.clone();
    edges.extend_from_slice(&g.cross_edges);
    bfs_lengths(g.initial, g.vertices.len(), &edges)
}

fn bfs_lengths(start: usize, n: usize, edges: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    dist.insert(start, 0);
    let mut frontier = alloc::vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            let dv = dist[&v];
            for &(a, b) in edges {
                if a == v && !dist.contains_key(&b) {
                    dist.insert(b, dv + 1);
                    next.push(b);
                }
            }
        }
        frontier = next;
        let _ = n;
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> CyclicWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn primitive_has_depth_zero() {
        let r = depth(&w("AB")).unwrap();
        assert_eq!(r.depth, 0);
        assert_eq!(r.path.len(), 1);
    }

    #[test]
    fn trefoil_has_depth_one() {
        let r = depth(&w("AABBB")).unwrap();
        assert_eq!(r.depth, 1);
        assert_eq!(r.path.len(), 2);
        let last = r.path.last().unwrap();
        assert!(is_primitive_or_proper_power(last).is_primitive_or_power());
        // The followed representative is the shorter one, AB.
        assert_eq!(last.canon(), w("AB").canon());
    }

    #[test]
    fn trefoil_pair_hits_the_both_primitive_branch() {
        let pair = crate::waves::distinguished_meridian_pair(&w("AABBB")).unwrap();
        assert_eq!(shortest_meridian(&pair), Err(DepthError::BothPrimitiveOrPower));
    }

    #[test]
    fn graph_of_primitive_is_single_terminal() {
        let g = build_unknotting_graph(&w("AB")).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.child_edges.is_empty());
        assert!(g.vertices[0].prim_or_power);
    }

    #[test]
    fn trefoil_graph_and_lengths() {
        let g = build_unknotting_graph(&w("AABBB")).unwrap();
        assert_eq!(g.vertices.len(), 3, "initial plus two terminal children");
        assert_eq!(g.child_edges.len(), 2);
        let lens = min_path_lengths(&g);
        assert_eq!(lens[&g.initial], 0);
        let term_min = g.terminal_vertices().filter_map(|v| lens.get(&v)).min().copied();
        assert_eq!(term_min, Some(1));
        let d = depth(&w("AABBB")).unwrap();
        assert_eq!(d.depth, 1);
        assert_eq!(term_min, Some(d.depth));
    }

    #[test]
    fn depth_is_undefined_outside_the_family() {
        assert!(matches!(depth(&w("AAABAbbbAB")), Err(DepthError::NotInFamily)));
    }
}

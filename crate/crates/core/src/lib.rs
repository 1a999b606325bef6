//! Exact combinatorics of nonseparating simple closed curves on the boundary
//! of a genus-two handlebody, presented as cyclic words in the rank-2 free
//! group `F(A, B)`.
//!
//! The crate computes embedded curve diagrams with respect to the standard
//! meridian-disk system, locates distinguished waves, performs wave surgery to
//! obtain meridian pairs, minimizes words under basis changes, recognizes
//! genus-two diagrams of `S^3`, `S^1 x S^2` and `(S^1 x S^2) # L(p,q)`, tests
//! (1,1)-tunnel status, and computes tunnel depth together with the full
//! unknotting-path graph.
//!
//! Everything is exact integer/combinatorial arithmetic; the crate is
//! `no_std` + `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod depth;
pub mod diagram;
pub mod embed;
pub mod homology;
pub mod moves;
pub mod prim;
pub mod recognition;
pub mod reduction;
pub mod waves;
pub mod word;

pub use depth::{build_unknotting_graph, depth, min_path_lengths, DepthError, DepthResult, UnknottingGraph};
pub use diagram::{DiagramGraph, EmbeddedDiagram, Face, GraphForm};
pub use embed::{embed_pair, embed_single_word, EmbedError};
pub use homology::FillingHomology;
pub use moves::{apply_move, BasisMove};
pub use prim::{cmz_is_primitive, is_primitive_or_proper_power, PrimClass};
pub use recognition::{
    canonical_constituents, embeds_in_family, homology_of_filling, is_11_tunnel, recognize_closed,
    recognize_words, Constituents, Family, NotReason, RecognitionError, RecognitionResult, Verdict,
};
pub use reduction::{
    classify_bandsum, is_positive_curve, minimal_orbit, whitehead_minimize, BandsumClass,
    BandsumCase, BandsumSite, Delta, DEFAULT_ORBIT_CAP,
};
pub use waves::{
    distinguished_meridian_pair, distinguished_wave, find_waves, signed_intersection, surgery,
    vertical_slope_pair, MeridianPair, Wave, WaveError, WaveKind,
};
pub use word::{parse_word, AbelianImage, CyclicWord, Gen, Letter, WordError};

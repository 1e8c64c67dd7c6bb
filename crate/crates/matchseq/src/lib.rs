//! Edge orderings of complete graphs and complete k-graphs whose sliding
//! windows have bounded maximum degree.
//!
//! An ordering of a graph `G` is a bijection from its edges to
//! `0..|E(G)|`. Its *r-matching sequencibility* `ms_r` is the largest `s`
//! such that every `s` consecutive edges form a subgraph of maximum degree
//! at most `r`; `cms_r` is the cyclic variant, where windows wrap around
//! the end of the ordering. For complete graphs these values are
//! `⌊(rn-1)/2⌋` (or one less, in one cyclic family), and this crate builds
//! orderings attaining them:
//!
//! * [`ordering`] — graphs, orderings, and the window evaluators.
//! * [`decomp`] — matching and 2-regular decompositions of `K_n`.
//! * [`labels`] — per-part labellings and the index orderings that
//!   interleave parts.
//! * [`assemble`] — concatenation combinators and the `(n, r)` dispatch
//!   pipelines ([`assemble::construct_ms`], [`assemble::construct_cms`]).
//! * [`oracle`] — exact values for small graphs by pruned backtracking,
//!   plus window-duality and product-bound checkers.
//! * [`hyper`] — complete k-graphs, their perfect-matching decompositions
//!   (k | n), and a greedy ordering meeting the corresponding bounds.
//! * [`corpus`] — three embedded reference orderings of `K_7` and `K_9`
//!   found by computer search, with their certified cyclic values.
//! * [`io`] — text and JSON formats for graphs, orderings, and
//!   decompositions.

#![forbid(unsafe_code)]

pub mod assemble;
pub mod corpus;
pub mod decomp;
mod error;
pub mod graph;
pub mod hyper;
pub mod io;
pub mod labels;
pub mod oracle;
pub mod ordering;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use ordering::{EdgeOrdering, SequencibilityReport};

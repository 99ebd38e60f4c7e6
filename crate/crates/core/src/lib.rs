//! Forced and forbidden edges of graphic degree sequences.
//!
//! An edge is *forced* for a degree sequence when it appears in every
//! labeled realization and *forbidden* when it appears in none. This crate
//! computes both sets in `O(n)` graphicality probes, constructs and samples
//! realizations that respect them, measures the structure they impose on
//! realizations, and checks all of it against a brute-force enumeration of
//! realizations for small `n`.
//!
//! ```
//! use degseq::{forced_set, DegreeSequence};
//!
//! let a: DegreeSequence = "4,4,3,3,3,1".parse().unwrap();
//! let forced = forced_set(&a).unwrap();
//! assert_eq!(forced.to_string(), "(1,2)");
//! ```

pub mod analysis;
pub mod error;
pub mod forced;
pub mod graph;
pub mod oracle;
pub mod realize;
pub mod report;
pub mod seq;

pub use analysis::{diameter, edge_connectivity, induced_subgraph, CutResult, Diameter};
pub use error::{Error, Result};
pub use forced::{
    analyze, forbidden_set, forced_set, is_forbidden, is_forced, AnalysisReport, Edge, SetKind,
    StaircaseEdgeSet,
};
pub use graph::LabeledGraph;
pub use realize::{mcmc_sample, realize, sis_sample, McmcChain, TwoSwitch};
pub use seq::{is_graphic, majorizes, DegreeSequence, Label, LabeledIntSequence, Majorization};

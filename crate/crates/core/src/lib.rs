//! Braid groups, Garside normal forms and the Hurwitz action on tuples of
//! braids.

pub mod dual;
pub mod error;
pub mod garside;
pub mod hurwitz;
pub mod nielsen_thurston;
pub mod orbit_graph;
pub mod verify;
pub mod word;

pub use dual::DualNf;
pub use error::{Error, Result};
pub use garside::{GarsideNf, SimpleBraid};
pub use hurwitz::{BraidSystem, OrbitOutcome, OrbitResult, Subgroup};
pub use nielsen_thurston::{classify, NtType, RoundCurve};
pub use orbit_graph::{OrbitGraph, Pattern};
pub use verify::TheoremReport;
pub use word::{BraidWord, Letter, Permutation};

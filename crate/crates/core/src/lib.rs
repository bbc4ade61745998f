//! Finite posets with complementation: LU-cones, modularity notions,
//! term and operator residuation, Dedekind-MacNeille completion, an identity
//! language and small-model search.
//!
//! ```
//! use posetres::{builtins, props};
//!
//! let fig1 = builtins::fig1();
//! assert!(props::is_modular_lattice(fig1.poset()).unwrap().holds());
//! assert!(!fig1.antitone().holds());
//! ```

pub mod builtins;
pub mod complement;
pub mod completion;
pub mod cones;
pub mod dsl;
pub mod format;
pub mod lattice;
pub mod poset;
pub mod props;
pub mod residuation;
pub mod search;
pub mod subset;
pub mod verdict;

pub use complement::{ComplementError, ComplementedPoset, Structure};
pub use lattice::{Lattice, NotALattice};
pub use poset::{Poset, PosetError};
pub use subset::Subset;
pub use verdict::{Verdict, Witness};

//! Promotion on P-strict labelings, toggles and rowmotion on Q-partitions,
//! the Γ poset linking the two, and an orbit engine that checks order,
//! homomesy, distribution and resonance claims by exhaustive enumeration.
//!
//! ```
//! use orbitkit_core::poset::build_poset;
//! use orbitkit_core::pstrict::LabelingSpace;
//!
//! let space = LabelingSpace::with_global_bound(build_poset("prod:2x3").unwrap(), 2, 5).unwrap();
//! let f = space.minimal();
//! assert_eq!(space.orbit_length(&f) % 5, 0);
//! ```

pub mod conventions;
pub mod dynamics;
pub mod error;
pub mod gamma;
pub mod laws;
pub mod poset;
pub mod pstrict;
pub mod qpartition;
pub mod restriction;
pub mod suite;

pub use conventions::Conventions;
pub use dynamics::{Certificate, OrbitDecomposition};
pub use error::{Error, Result};
pub use gamma::{GammaPoset, LabelingBijection};
pub use poset::{build_poset, Poset};
pub use pstrict::{LabelingSpace, PStrictLabeling};
pub use qpartition::{PartitionSpace, QPartition};
pub use restriction::{Label, RestrictionFunction};

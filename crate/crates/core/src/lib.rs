//! Partition logic and the two entropy calculi built on it.
//!
//! * [`partition`], [`relation`], [`closure`], [`lattice`], [`enumerate`]:
//!   partitions of a finite universe, their distinction (dit) sets as dense
//!   pair relations, the closure/interior operators, and the refinement lattice.
//! * [`logical`]: logical entropy, the measure of dit sets, and its compounds.
//! * [`shannon`]: Shannon entropy and compounds, the dit-bit bridge, Stirling.
//! * [`stochastic`]: seeded Monte Carlo estimators for both entropies.
//! * [`verify`]: exhaustive and randomized identity suites.
//! * [`cli`]: the command implementations behind the `partition-logic` binary.

pub mod cli;
pub mod closure;
pub mod distribution;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod logical;
pub mod partition;
pub mod relation;
pub mod scalar;
pub mod shannon;
pub mod stochastic;
pub mod verify;

pub use distribution::{DistanceMatrix, Distribution, Given, JointDistribution};
pub use error::{Error, Result};
pub use partition::{Partition, Universe};
pub use relation::PairRelation;
pub use scalar::{Rational, Scalar};
pub use shannon::{Base, BitValue};

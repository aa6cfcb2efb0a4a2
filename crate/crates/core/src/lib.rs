//! Dual braid monoids, Coxeter-sortable elements and the Cambrian map
//! `S_c` for finite Coxeter groups.

pub mod absolute;
pub mod error;
pub mod garside;
pub mod hecke;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod sortable;
pub mod system;
pub mod types;

pub use error::{Error, Result};
pub use scalar::{CoefficientRing, IntegerRing, RealCyclotomicRing};
pub use system::{build_system, CoxeterSystem, Element, Reflection, Side};
pub use types::{CoxeterType, Family};

/// Root coordinates for crystallographic types.
pub type Integers = IntegerRing<i64>;
/// Root coordinates for `H3`, `H4` and `I2(m)`.
pub type CyclotomicIntegers = RealCyclotomicRing<i64>;

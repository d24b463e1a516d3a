//! Exact computation of Wronskian Laguerre and Wronskian Hermite
//! polynomials indexed by integer partitions, by determinant and by
//! recurrence over the Young lattice, with checks for the identities they
//! satisfy.

pub mod identities;
pub mod partitions;
pub mod polyalg;
pub mod recurrence;
pub mod sequences;
pub mod wronskian;

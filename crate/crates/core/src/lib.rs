//! Exact q-series and combinatorial enumeration for overpartition-pair identities of
//! Rogers–Ramanujan–Gordon type.

pub mod durfee;
pub mod frobenius;
pub mod hypergeometric;
pub mod overpartition;
pub mod partition;
pub mod paths;
pub mod series;
pub mod verify;

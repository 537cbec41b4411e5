//! Slow, obviously-correct reference implementations used as test oracles.
//!
//! Everything here works on plain data (vertex counts, edge lists, element
//! indices, closures) so it shares no code with the library under test.

pub mod algebra;
pub mod field;
pub mod graphs;
pub mod kuratowski;

//! Analysis of the lit-only sigma-game on simple connected graphs.
//!
//! A configuration assigns on/off to each vertex; a move picks an *on* vertex
//! and toggles all of its neighbors. For graphs whose adjacency matrix is
//! invertible over F2 and which are not line graphs, the orbits of the game
//! are `{0}` and the two level sets of a quadratic form pulled back through
//! the inverse adjacency matrix, and the minimum light number is 1 or 2.
//!
//! * [`graph`] parses, generates and inspects graphs.
//! * [`f2`] holds the bit-packed linear algebra and the quadratic space.
//! * [`game`] plays the game: moves, exhaustive orbits and a BFS solver.
//! * [`classifier`] turns the algebra into verdicts about orbits and `k`-litness.
//! * [`transvections`] covers the dual action on the vector space.
//! * [`enumerate`] lists graphs up to isomorphism for oracle sweeps.

pub mod classifier;
pub mod enumerate;
pub mod f2;
pub mod game;
pub mod graph;
pub mod transvections;

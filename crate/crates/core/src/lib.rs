//! Exact computation of the cyclic cohomology of finite-dimensional Hopf
//! algebras equipped with a modular pair in involution.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactla`]: exact scalars (ℚ and number fields), sparse tensor maps,
//!   rank and kernel.
//! * [`hopf`]: Hopf algebras given by structure constants, axiom checks,
//!   group-likes, characters, the twisted antipode, modular pairs, duals and
//!   the quasitriangular constructions (Drinfeld element, double cover).
//! * [`cyclic`]: the cocyclic module of a Hopf algebra with a modular pair in
//!   involution, its relation checker, and the (b, B)-bicomplex cohomology.
//! * [`catalog`]: concrete algebras (group and function algebras, Sweedler,
//!   Taft) and module algebras used as fixtures.
//! * [`charmap`]: module algebras, invariant σ-traces and the characteristic
//!   map into algebra cochains.

pub mod catalog;
pub mod charmap;
pub mod cyclic;
pub mod exactla;
pub mod hopf;
pub mod report;

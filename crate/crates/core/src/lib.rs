//! Desk-scale computational model theory for henselian valued fields:
//! exact finite-field arithmetic, truncated local-field models of F_q((t))
//! and Q_p, existential ring-formula synthesis, and certificate-backed
//! verification that the synthesized formulas define the valuation ring.

pub mod ffield;
pub mod intpoly;

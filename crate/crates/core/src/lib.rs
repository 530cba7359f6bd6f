//! Exact classification of automorphism-group loci of hyperelliptic curves.

pub mod classify;
pub mod equations;
pub mod exactnum;
pub mod grouptheory;
pub mod lattice;
pub mod moebius;
pub mod polyalg;
pub mod text;

//! fiatkit: exact-arithmetic calculus for 2-categories of projective
//! bimodules over finite-dimensional quiver algebras, together with the
//! decategorified dihedral layer (fusion rings, ADE based modules,
//! Temperley-Lieb calculus, the dihedral Kazhdan-Lusztig ring at v = 1).
//!
//! Everything is computed over ℚ or over real cyclotomic fields ℚ(δ);
//! there are no floating-point numbers anywhere.

pub mod exact;

pub mod quivalg;

pub mod bimod;

pub mod cells;

pub mod frobobj;

pub mod internalhom;

pub mod morita;

pub mod decat;

pub mod tl2;

pub mod abel;

//! Cubic covers of curves of positive genus branched over a single point.

pub mod mumford;

pub use mumford::{AffinePoint, HyperellipticModel, MumfordClass};
pub mod cover;
pub use cover::{find_ptilde, interpolate_f, parshin_cover, CurveFunction, ParshinCover};
pub mod explicit;
pub use explicit::{genus1_parshin, weierstrass_parshin, Genus1Parshin, WeierstrassParshin};

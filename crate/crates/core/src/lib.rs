//! Convolutional codes over small finite fields: distance bounds, exact
//! free and column distances, weight spectra, skew-polynomial (σ-cyclic)
//! constructions, and a catalog of verified codes.

pub mod analysis;
pub mod bounds;
pub mod budget;
pub mod catalog;
pub mod code;
pub mod gf;
pub mod linalg;
pub mod metrics;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod poly;
pub mod polymat;
pub mod skew;
pub mod text;

//! Exact spectra of corona-type products of signed graphs under r-orientation.

pub mod coronal;
pub mod cospectral;
pub mod error;
pub mod exactalg;
pub mod gen;
pub mod graph;
pub mod orientation;
pub mod products;
pub mod spectra;
pub mod structural;
pub mod sweep;

pub use coronal::{coronal, coronal_coregular, coronal_star, MatrixKind};
pub use error::{Error, Result};
pub use graph::{CoRegularity, DegreeProfile, Edge, SignedGraph};
pub use orientation::{all_orientations, default_orientation, random_orientation, OrientedGraph, ROrientation};
pub use products::{build_product, ProductKind, ProductResult};

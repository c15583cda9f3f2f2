//! Search for cospectral, non-isomorphic product pairs.

pub mod canon;
pub mod enumerate;
pub mod iso;
pub mod search;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{count_classes_by_brute_force, enumerate_signed_graphs, underlying_graphs};
pub use iso::{switching_isomorphic, IsoVerdict};
pub use search::{
    certify_pair, find_coronal_pairs, search_catalogue, spectral_key, CatalogueEntry, CoronalPair, PairCertificate,
    SearchConfig, SpectralKey, DEFAULT_NODE_LIMIT,
};

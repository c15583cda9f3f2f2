use serde::Serialize;

use super::closed::{closed_form, FormVariant};
use super::matrices::build_matrix;
use crate::coronal::MatrixKind;
use crate::error::Result;
use crate::exactalg::{charpoly_exact, multiset_distance, real_roots, RatPolynomial};
use crate::graph::SignedGraph;
use crate::orientation::OrientedGraph;
use crate::products::{build_product, ProductKind};

/// Closed form against direct computation for one instance.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub kind: MatrixKind,
    pub product: ProductKind,
    pub variant: FormVariant,
    pub closed_form: RatPolynomial,
    pub direct: RatPolynomial,
    pub equal: bool,
    pub residual: RatPolynomial,
    /// Largest distance between paired real roots, filled in on mismatch only.
    pub numeric_fallback: Option<f64>,
}

/// Monic characteristic polynomial of the `kind` matrix of `g`.
pub fn direct_charpoly(g: &SignedGraph, kind: MatrixKind) -> Result<RatPolynomial> {
    charpoly_exact(&build_matrix(g, kind)?)
}

/// Builds the product, computes both sides and compares them exactly.
pub fn verify_theorem(
    product: ProductKind,
    kind: MatrixKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
    variant: FormVariant,
) -> Result<VerificationReport> {
    let closed = closed_form(product, kind, og1, g2, mu2, variant)?;
    let built = build_product(product, og1, g2, mu2)?;
    let direct = direct_charpoly(&built.graph, kind)?;
    Ok(report(product, kind, variant, closed, direct).with_numeric_fallback())
}

/// Assembles an exact report from two monic polynomials.
pub fn report(
    product: ProductKind,
    kind: MatrixKind,
    variant: FormVariant,
    closed_form: RatPolynomial,
    direct: RatPolynomial,
) -> VerificationReport {
    let residual = &closed_form - &direct;
    let equal = residual.is_zero();
    VerificationReport {
        kind,
        product,
        variant,
        closed_form,
        direct,
        equal,
        residual,
        numeric_fallback: None,
    }
}

impl VerificationReport {
    /// Fills in the root distance of a mismatch. Root isolation is slow on
    /// large, high-degree residuals, so sweeps leave it out.
    pub fn with_numeric_fallback(mut self) -> Self {
        if !self.equal {
            self.numeric_fallback = Some(multiset_distance(&real_roots(&self.closed_form), &real_roots(&self.direct)));
        }
        self
    }
}

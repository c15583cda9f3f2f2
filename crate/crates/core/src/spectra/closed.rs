//! Closed-form characteristic polynomials of the three products.
//!
//! Every closed form has the shape
//!
//! ```text
//! base(x)^e * prod_j [ a(x) - l_j b(x) ] / den(x)^p
//! ```
//!
//! where `l_j` runs over the roots of the first factor's characteristic
//! polynomial `f1`. The product over roots is assembled as
//! `sum_k c_k a^k b^(n1-k)` from the coefficients of `f1`, so no eigenvalue
//! is ever computed. `a` and `b` are built from the unreduced coronal
//! `N / F` of the second factor, after clearing `F` and any base factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::matrices::build_matrix;
use crate::coronal::MatrixKind;
use crate::error::{Error, Result};
use crate::exactalg::{
    charpoly_int, poly_compose_projective, resolvent_quadratic_form, IntPolynomial, RatPolynomial,
};
use crate::graph::SignedGraph;
use crate::orientation::OrientedGraph;
use crate::products::ProductKind;

/// Which printed form of a closed formula to assemble. The two differ only
/// where a statement and its derivation disagree; elsewhere they coincide.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FormVariant {
    /// The form obtained by carrying out the block elimination.
    Derived,
    /// The form as literally stated.
    Stated,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProductForm {
    pub base: IntPolynomial,
    pub exponent: usize,
    pub term_a: IntPolynomial,
    pub term_b: IntPolynomial,
    /// Integer polynomial whose roots are the eigenvalues `l_j`, each scaled
    /// by the same constant that scales `term_a`.
    pub eigen_source: IntPolynomial,
    pub global_den: IntPolynomial,
    pub den_power: usize,
}

impl ProductForm {
    fn new(base: IntPolynomial, exponent: i64, a: IntPolynomial, b: IntPolynomial, f1: IntPolynomial) -> Self {
        let (exponent, global_den, den_power) = if exponent >= 0 {
            (exponent as usize, IntPolynomial::one(), 0)
        } else {
            (0, base.clone(), (-exponent) as usize)
        };
        ProductForm {
            base,
            exponent,
            term_a: a,
            term_b: b,
            eigen_source: f1,
            global_den,
            den_power,
        }
    }

    /// The assembled polynomial before normalization.
    pub fn assemble(&self) -> Result<IntPolynomial> {
        let prod = poly_compose_projective(&self.eigen_source, &self.term_a, &self.term_b);
        let num = &self.base.pow(self.exponent) * &prod;
        if self.den_power == 0 {
            return Ok(num);
        }
        num.div_exact(&self.global_den.pow(self.den_power))
    }

    /// The assembled polynomial scaled to be monic.
    pub fn monic(&self) -> Result<RatPolynomial> {
        let p = self.assemble()?;
        if p.is_zero() {
            return Err(Error::precondition("closed form assembled to zero"));
        }
        p.to_rational().to_monic()
    }
}

fn x() -> IntPolynomial {
    IntPolynomial::x()
}

/// `x - s`.
fn shifted(s: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[-s, 1])
}

fn scaled_x(k: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[0, k])
}

/// Coronal numerator and denominator of `g2` for `kind`, evaluated at `inner(x)`.
fn coronal_at(g2: &SignedGraph, mu2: &[i8], kind: MatrixKind, inner: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let m = build_matrix(g2, kind)?;
    let mu: Vec<i64> = mu2.iter().map(|&v| v as i64).collect();
    let r = resolvent_quadratic_form(&m, &mu)?;
    Ok((r.num.compose(inner), r.den.compose(inner)))
}

fn regular_first_factor(og1: &OrientedGraph) -> Result<usize> {
    og1.graph
        .regular_degree()
        .or((og1.graph.n() == 0).then_some(0))
        .ok_or_else(|| Error::precondition("first factor must be regular"))
}

/// Closed form for the integral kinds `A`, `L`, `Q`. The first factor must be
/// regular.
pub fn integral_form(
    product: ProductKind,
    kind: MatrixKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
    variant: FormVariant,
) -> Result<ProductForm> {
    if !kind.is_integral() {
        return Err(Error::precondition(format!("{kind} has no integral closed form")));
    }
    let g1 = &og1.graph;
    let gamma1 = regular_first_factor(og1)? as i64;
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    if m1 == 0 && product != ProductKind::SubdivisionVertexNc {
        return Err(Error::precondition(format!("{product} needs a first factor with at least one edge")));
    }
    if mu2.len() != g2.n() {
        return Err(Error::DimensionMismatch {
            expected: g2.n(),
            found: mu2.len(),
        });
    }
    let f1 = charpoly_int(&build_matrix(g1, kind)?)?;
    let e = m1 - n1;
    use MatrixKind::*;
    use ProductKind::*;
    let form = match (product, kind) {
        (EdgeCorona, Adjacency) => {
            let (n, f) = coronal_at(g2, mu2, kind, &x())?;
            let a = &(&x() * &f) - &n.scale(&gamma1.into());
            ProductForm::new(f.clone(), e, a, &f + &n, f1)
        }
        (EdgeCorona, Laplacian) => {
            let (n, f) = coronal_at(g2, mu2, kind, &shifted(2))?;
            let a = &(&shifted(gamma1 * n2) * &f) - &n.scale(&(2 * gamma1).into());
            ProductForm::new(f.clone(), e, a, &f - &n, f1)
        }
        (EdgeCorona, SignlessLaplacian) => {
            let (n, f) = coronal_at(g2, mu2, kind, &shifted(2))?;
            let a = &shifted(gamma1 * n2) * &f;
            ProductForm::new(f.clone(), e, a, &f + &n, f1)
        }
        (SubdivisionVertexNc, Adjacency) => {
            let (n, f) = coronal_at(g2, mu2, kind, &x())?;
            let w = &f + &(&x() * &n);
            let a = &(&x().pow(2) * &f) - &w.scale(&gamma1.into());
            ProductForm::new(x(), e, a, w, f1)
        }
        (SubdivisionVertexNc, Laplacian | SignlessLaplacian) => {
            let s = shifted(gamma1);
            let (n, f) = coronal_at(g2, mu2, kind, &s)?;
            let w = &f + &(&s * &n);
            let base = shifted(2 + 2 * n2);
            let lead = &(&base * &s) * &f;
            if kind == Laplacian {
                let a = &lead - &w.scale(&(2 * gamma1).into());
                ProductForm::new(base, e, a, -&w, f1)
            } else {
                ProductForm::new(base, e, lead, w, f1)
            }
        }
        (SubdivisionEdgeNc, Adjacency) => {
            let (n, f) = coronal_at(g2, mu2, kind, &x())?;
            let w = &f + &(&x() * &n);
            let a = &(&x().pow(2) * &f) - &w.scale(&gamma1.into());
            ProductForm::new(&x() * &f, e, a, w, f1)
        }
        (SubdivisionEdgeNc, Laplacian | SignlessLaplacian) => {
            let s = shifted(2);
            let (n, f) = coronal_at(g2, mu2, kind, &s)?;
            let w = &f + &(&s * &n);
            let quad = match (kind, variant) {
                (Laplacian, FormVariant::Stated) => IntPolynomial::from_i64s(&[
                    2 * gamma1 * (n2 + 1),
                    -(gamma1 + 2 + 2 * gamma1 * n2),
                    1,
                ]),
                _ => &shifted(gamma1 + gamma1 * n2) * &s,
            };
            let lead = &quad * &f;
            let base = &s * &f;
            if kind == Laplacian {
                let a = &lead - &w.scale(&(2 * gamma1).into());
                ProductForm::new(base, e, a, -&w, f1)
            } else {
                ProductForm::new(base, e, lead, w, f1)
            }
        }
        _ => unreachable!("integral kinds only"),
    };
    Ok(form)
}

/// Integer matrix `c * P(g)` and the scale `c`.
fn scaled_random_walk(g: &SignedGraph) -> Result<(IntPolynomial, BigInt)> {
    let p = build_matrix(g, MatrixKind::RandomWalk)?;
    let c = p.denominator_lcm();
    let f = charpoly_int(&p.scale(&BigRational::from_integer(c.clone())))?;
    Ok((f, c))
}

fn regular_second_factor(g2: &SignedGraph) -> Result<i64> {
    match g2.regular_degree() {
        Some(0) | None => Err(Error::precondition(
            "second factor must be regular of positive degree",
        )),
        Some(d) => Ok(d as i64),
    }
}

/// Closed form for the random-walk matrix `P = D^{-1} A` of the product.
///
/// Edge corona and subdivision-edge corona need a regular second factor and a
/// first factor without isolated vertices; the subdivision-vertex corona
/// needs both factors regular.
pub fn random_walk_form(
    product: ProductKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
    variant: FormVariant,
) -> Result<ProductForm> {
    let g1 = &og1.graph;
    let gamma2 = regular_second_factor(g2)?;
    if g1.n() == 0 || g1.min_degree() == 0 {
        return Err(Error::precondition("first factor must have no isolated vertices"));
    }
    if mu2.len() != g2.n() {
        return Err(Error::DimensionMismatch {
            expected: g2.n(),
            found: mu2.len(),
        });
    }
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    let (f1, scale) = scaled_random_walk(g1)?;
    let scale = IntPolynomial::constant(scale);
    let e = m1 - n1;
    let form = match product {
        ProductKind::EdgeCorona => {
            let (n, f) = coronal_at(g2, mu2, MatrixKind::Adjacency, &scaled_x(gamma2 + 2))?;
            let a = &(&(&scaled_x(n2 + 1) * &f) - &n) * &scale;
            ProductForm::new(f.clone(), e, a, &f + &n, f1)
        }
        ProductKind::SubdivisionVertexNc => {
            let gamma1 = g1
                .regular_degree()
                .ok_or_else(|| Error::precondition("first factor must be regular"))? as i64;
            let (n, f) = coronal_at(g2, mu2, MatrixKind::Adjacency, &scaled_x(gamma1 + gamma2))?;
            let w = &f + &(&scaled_x(gamma1) * &n);
            let a = &(&(&x().pow(2) * &f).scale(&(2 * (n2 + 1)).into()) - &w) * &scale;
            ProductForm::new(x(), e, a, w, f1)
        }
        ProductKind::SubdivisionEdgeNc => {
            let (n, f) = coronal_at(g2, mu2, MatrixKind::Adjacency, &scaled_x(gamma2 + 2))?;
            let w = match variant {
                FormVariant::Derived => &f + &(&scaled_x(2) * &n),
                FormVariant::Stated => &f + &n.scale(&2.into()),
            };
            let a = &(&(&x().pow(2) * &f).scale(&(2 * (n2 + 1)).into()) - &w) * &scale;
            ProductForm::new(&x() * &f, e, a, w, f1)
        }
    };
    Ok(form)
}

/// Monic closed-form characteristic polynomial of the `kind` matrix of the
/// product. The normalized Laplacian form is `(-1)^N f_P(1 - x)`.
pub fn closed_form(
    product: ProductKind,
    kind: MatrixKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
    variant: FormVariant,
) -> Result<RatPolynomial> {
    match kind {
        MatrixKind::RandomWalk => random_walk_form(product, og1, g2, mu2, variant)?.monic(),
        MatrixKind::NormalizedLaplacian => {
            let p = random_walk_form(product, og1, g2, mu2, variant)?.monic()?;
            let one_minus_x = RatPolynomial::new(vec![BigRational::one(), -BigRational::one()]);
            p.compose(&one_minus_x).to_monic()
        }
        _ => integral_form(product, kind, og1, g2, mu2, variant)?.monic(),
    }
}

fn integral(p: RatPolynomial) -> Result<IntPolynomial> {
    IntPolynomial::try_from_rational(&p)
        .ok_or_else(|| Error::precondition("integral closed form has fractional coefficients"))
}

pub fn charpoly_edge_corona(kind: MatrixKind, og1: &OrientedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    let mu2 = g2.marking_or_canonical();
    integral(integral_form(ProductKind::EdgeCorona, kind, og1, g2, &mu2, FormVariant::Derived)?.monic()?)
}

pub fn charpoly_svnc(kind: MatrixKind, og1: &OrientedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    let mu2 = g2.marking_or_canonical();
    integral(integral_form(ProductKind::SubdivisionVertexNc, kind, og1, g2, &mu2, FormVariant::Derived)?.monic()?)
}

pub fn charpoly_senc(kind: MatrixKind, og1: &OrientedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    let mu2 = g2.marking_or_canonical();
    integral(integral_form(ProductKind::SubdivisionEdgeNc, kind, og1, g2, &mu2, FormVariant::Derived)?.monic()?)
}

/// Rational closed form for `P` or the normalized Laplacian.
pub fn charpoly_normalized(
    product: ProductKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    which: MatrixKind,
) -> Result<RatPolynomial> {
    if which.is_integral() {
        return Err(Error::precondition(format!("{which} is not a normalized kind")));
    }
    closed_form(product, which, og1, g2, &g2.marking_or_canonical(), FormVariant::Derived)
}

/// Whether `variant` actually changes the assembled form for this pair.
pub fn has_distinct_stated_form(product: ProductKind, kind: MatrixKind) -> bool {
    matches!(
        (product, kind),
        (ProductKind::SubdivisionEdgeNc, MatrixKind::Laplacian)
            | (ProductKind::SubdivisionEdgeNc, MatrixKind::RandomWalk)
            | (ProductKind::SubdivisionEdgeNc, MatrixKind::NormalizedLaplacian)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn og(g: SignedGraph) -> OrientedGraph {
        OrientedGraph::with_default(g)
    }

    #[test]
    fn triangle_edge_corona_fixture() {
        let got = charpoly_edge_corona(MatrixKind::Adjacency, &og(cycle(3)), &empty(1)).unwrap();
        let want = &IntPolynomial::from_i64s(&[-4, -2, 1]) * &IntPolynomial::from_i64s(&[-1, 1, 1]).pow(2);
        assert_eq!(got, want);
    }

    #[test]
    fn edge_corona_of_single_edge_is_triangle() {
        let k2 = og(path(2));
        assert_eq!(
            charpoly_edge_corona(MatrixKind::Adjacency, &k2, &empty(1)).unwrap(),
            IntPolynomial::from_i64s(&[-2, -3, 0, 1])
        );
        assert_eq!(
            charpoly_edge_corona(MatrixKind::Laplacian, &k2, &empty(1)).unwrap(),
            &x() * &shifted(3).pow(2)
        );
    }

    #[test]
    fn subdivision_coronas_of_single_edge() {
        // the subdivision-edge product is a 4-cycle
        let got = charpoly_senc(MatrixKind::Adjacency, &og(path(2)), &empty(1)).unwrap();
        assert_eq!(got, IntPolynomial::from_i64s(&[0, 0, -4, 0, 1]));
        // the subdivision-vertex product is a star with four leaves
        let got = charpoly_svnc(MatrixKind::Adjacency, &og(path(2)), &empty(1)).unwrap();
        assert_eq!(got, IntPolynomial::from_i64s(&[0, 0, 0, -4, 0, 1]));
    }

    #[test]
    fn preconditions() {
        let irregular = og(star(&[1, 1]));
        assert!(charpoly_svnc(MatrixKind::Adjacency, &irregular, &empty(1)).is_err());
        assert!(charpoly_edge_corona(MatrixKind::Adjacency, &og(empty(2)), &empty(1)).is_err());
        assert!(charpoly_normalized(ProductKind::EdgeCorona, &og(cycle(3)), &empty(1), MatrixKind::RandomWalk).is_err());
        assert!(charpoly_normalized(ProductKind::EdgeCorona, &og(cycle(3)), &path(2), MatrixKind::Adjacency).is_err());
    }

    #[test]
    fn negative_exponent_divides_exactly() {
        // a perfect matching has fewer edges than vertices
        let matching = og(SignedGraph::unsigned(4, [(0, 1), (2, 3)]).unwrap());
        let g2 = path(2);
        let got = charpoly_senc(MatrixKind::Adjacency, &matching, &g2).unwrap();
        let p = crate::products::subdivision_edge_nc(&matching, &g2).unwrap();
        let direct = charpoly_int(&build_matrix(&p.graph, MatrixKind::Adjacency).unwrap()).unwrap();
        assert_eq!(got, direct);
    }
}

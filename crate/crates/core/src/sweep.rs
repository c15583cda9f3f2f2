//! Randomized verification of every closed form against direct computation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coronal::MatrixKind;
use crate::error::Result;
use crate::exactalg::RatPolynomial;
use crate::gen::{random_signed_graph, MarkingChoice, RegularCatalogue};
use crate::graph::SignedGraph;
use crate::orientation::{random_orientation_with, OrientedGraph};
use crate::products::{build_product, ProductKind};
use crate::spectra::{closed_form, direct_charpoly, report, FormVariant, VerificationReport};

/// Adds one to a single coefficient of one closed form before comparison,
/// so the harness can be shown to notice a wrong formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Fault {
    pub product: ProductKind,
    pub kind: MatrixKind,
    pub coefficient: usize,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub seed: u64,
    pub instances: usize,
    pub max_n1: usize,
    pub max_n2: usize,
    pub products: Vec<ProductKind>,
    pub kinds: Vec<MatrixKind>,
    pub variant: FormVariant,
    pub fault: Option<Fault>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            instances: 50,
            max_n1: 6,
            max_n2: 4,
            products: ProductKind::ALL.to_vec(),
            kinds: MatrixKind::ALL.to_vec(),
            variant: FormVariant::Derived,
            fault: None,
        }
    }
}

/// Everything needed to rebuild one instance without the generator.
#[derive(Clone, Debug, Serialize)]
pub struct SweepInstance {
    pub product: ProductKind,
    pub kind: MatrixKind,
    pub index: usize,
    pub seed: u64,
    pub marking_choice: MarkingChoice,
    pub g1: String,
    pub theta: Vec<(i8, i8)>,
    pub g2: String,
    pub mu2: Vec<i8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    pub instance: SweepInstance,
    pub report: Option<VerificationReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormTally {
    pub product: ProductKind,
    pub kind: MatrixKind,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub seed: u64,
    pub variant: FormVariant,
    pub tallies: Vec<FormTally>,
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self) -> usize {
        self.tallies.iter().map(|t| t.passed).sum()
    }
}

/// Seed of instance `index` of form `(product, kind)`; independent of the
/// other forms and of thread scheduling.
fn instance_seed(master: u64, product: ProductKind, kind: MatrixKind, index: usize) -> u64 {
    let p = ProductKind::ALL.iter().position(|&x| x == product).expect("listed") as u64;
    let k = MatrixKind::ALL.iter().position(|&x| x == kind).expect("listed") as u64;
    master
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((p * 8 + k) << 32)
        .wrapping_add(index as u64)
}

struct Catalogues {
    first: RegularCatalogue,
    second_regular: RegularCatalogue,
}

fn draw(
    cats: &Catalogues,
    cfg: &SweepConfig,
    product: ProductKind,
    kind: MatrixKind,
    index: usize,
) -> (SweepInstance, OrientedGraph, SignedGraph) {
    let seed = instance_seed(cfg.seed, product, kind, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g1 = cats.first.sample(&mut rng);
    let theta = random_orientation_with(&g1, &mut rng);
    let g2 = if kind.is_integral() {
        let n2 = rng.gen_range(1..=cfg.max_n2);
        random_signed_graph(&mut rng, n2, 0.5)
    } else {
        cats.second_regular.sample(&mut rng)
    };
    let marking_choice = MarkingChoice::ALL[index % 2];
    let mu2 = marking_choice.apply(&g2);
    let inst = SweepInstance {
        product,
        kind,
        index,
        seed,
        marking_choice,
        g1: g1.to_edge_list(),
        theta: theta.per_edge.clone(),
        g2: g2.to_edge_list(),
        mu2,
    };
    let og1 = OrientedGraph::new(g1, theta).expect("drawn orientation is consistent");
    (inst, og1, g2)
}

fn perturb(p: &RatPolynomial, coefficient: usize) -> RatPolynomial {
    let mut c = p.coeffs().to_vec();
    if c.len() <= coefficient {
        c.resize(coefficient + 1, num_rational::BigRational::from_integer(0.into()));
    }
    c[coefficient] += num_rational::BigRational::from_integer(1.into());
    RatPolynomial::new(c)
}

fn check(cfg: &SweepConfig, inst: &SweepInstance, og1: &OrientedGraph, g2: &SignedGraph) -> Result<VerificationReport> {
    let mut closed = closed_form(inst.product, inst.kind, og1, g2, &inst.mu2, cfg.variant)?;
    if let Some(f) = cfg.fault.filter(|f| f.product == inst.product && f.kind == inst.kind) {
        closed = perturb(&closed, f.coefficient);
    }
    let built = build_product(inst.product, og1, g2, &inst.mu2)?;
    let direct = direct_charpoly(&built.graph, inst.kind)?;
    Ok(report(inst.product, inst.kind, cfg.variant, closed, direct))
}

/// Runs `cfg.instances` random instances of every requested form in
/// parallel. The summary depends only on the configuration.
pub fn run_sweep(cfg: &SweepConfig) -> SweepSummary {
    let cats = Catalogues {
        first: RegularCatalogue::new(cfg.max_n1, 1),
        second_regular: RegularCatalogue::new(cfg.max_n2, 1),
    };
    let forms: Vec<(ProductKind, MatrixKind)> = cfg
        .products
        .iter()
        .flat_map(|&p| cfg.kinds.iter().map(move |&k| (p, k)))
        .collect();
    let jobs: Vec<(usize, usize)> = (0..forms.len()).flat_map(|f| (0..cfg.instances).map(move |i| (f, i))).collect();
    let outcomes: Vec<(usize, Option<SweepFailure>)> = jobs
        .par_iter()
        .map(|&(f, i)| {
            let (product, kind) = forms[f];
            let (inst, og1, g2) = draw(&cats, cfg, product, kind, i);
            let failure = match check(cfg, &inst, &og1, &g2) {
                Ok(r) if r.equal => None,
                Ok(r) => Some(SweepFailure {
                    instance: inst,
                    report: Some(r),
                    error: None,
                }),
                Err(e) => Some(SweepFailure {
                    instance: inst,
                    report: None,
                    error: Some(e.to_string()),
                }),
            };
            (f, failure)
        })
        .collect();
    let mut tallies: Vec<FormTally> = forms
        .iter()
        .map(|&(product, kind)| FormTally {
            product,
            kind,
            passed: 0,
            failed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (f, failure) in outcomes {
        match failure {
            None => tallies[f].passed += 1,
            Some(x) => {
                tallies[f].failed += 1;
                failures.push(x);
            }
        }
    }
    SweepSummary {
        seed: cfg.seed,
        variant: cfg.variant,
        tallies,
        failures,
    }
}

/// Rebuilds and rechecks one instance from a failure dump, with the numeric
/// root distance filled in.
pub fn replay(cfg: &SweepConfig, inst: &SweepInstance) -> Result<VerificationReport> {
    let g1 = SignedGraph::parse_edge_list(&inst.g1)?;
    let og1 = OrientedGraph::new(g1.clone(), crate::orientation::ROrientation::new(&g1, inst.theta.clone())?)?;
    let g2 = SignedGraph::parse_edge_list(&inst.g2)?;
    Ok(check(cfg, inst, &og1, &g2)?.with_numeric_fallback())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            instances: 4,
            max_n1: 4,
            max_n2: 3,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn clean_sweep_passes() {
        let s = run_sweep(&small());
        assert!(s.all_passed(), "{:?}", s.failures);
        assert_eq!(s.passed(), 15 * 4);
    }

    #[test]
    fn injected_fault_is_caught_and_replays() {
        let cfg = SweepConfig {
            fault: Some(Fault {
                product: ProductKind::SubdivisionEdgeNc,
                kind: MatrixKind::Laplacian,
                coefficient: 0,
            }),
            ..small()
        };
        let s = run_sweep(&cfg);
        assert_eq!(s.failures.len(), 4);
        assert!(s.failures.iter().all(|f| f.instance.product == ProductKind::SubdivisionEdgeNc));
        let again = replay(&cfg, &s.failures[0].instance).unwrap();
        assert!(!again.equal);
        assert!(replay(&small(), &s.failures[0].instance).unwrap().equal);
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let a = serde_json::to_string(&run_sweep(&small())).unwrap();
        let b = serde_json::to_string(&run_sweep(&small())).unwrap();
        assert_eq!(a, b);
    }
}

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use signed_corona::cospectral::{search_catalogue, SearchConfig};
use signed_corona::exactalg::RatPolynomial;
use signed_corona::graph::families;
use signed_corona::spectra::{closed_form, direct_charpoly, report};
use signed_corona::structural::{balance_of_product, CensusReport, UnbalancingEdge};
use signed_corona::sweep::{run_sweep, SweepConfig};
use signed_corona::{build_product, coronal, MatrixKind, ProductKind};

use crate::config::{load_graph, marking, parse_fault, Cli, Command, RunConfig};
use crate::{CliError, Outcome};

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Build { pair, output, layout } => {
            let cfg = RunConfig::from_pair(&pair)?;
            let built = build_product(cfg.product, &cfg.og1, &cfg.g2, &cfg.mu2)?;
            let text = built.graph.to_edge_list();
            let layout_json = schema(json!({ "product": built.kind, "layout": built.layout }));
            if let Some(path) = layout {
                write(&path, &layout_json)?;
            }
            let stdout = match output {
                Some(path) => {
                    write(&path, &text)?;
                    String::new()
                }
                None if json => schema(json!({
                    "product": built.kind,
                    "graph": text,
                    "layout": built.layout,
                })),
                None => text,
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Charpoly { pair, kind, verify, variant } => {
            let cfg = RunConfig::from_pair(&pair)?;
            let closed = closed_form(cfg.product, kind, &cfg.og1, &cfg.g2, &cfg.mu2, variant.into())?;
            if !verify {
                let stdout = if json {
                    schema(json!({ "product": cfg.product, "kind": kind, "closed_form": closed }))
                } else {
                    format!("{}\n{}\n", highest_first(&closed), closed)
                };
                return Ok(Outcome::ok(stdout));
            }
            let built = build_product(cfg.product, &cfg.og1, &cfg.g2, &cfg.mu2)?;
            let direct = direct_charpoly(&built.graph, kind)?;
            let r = report(cfg.product, kind, variant.into(), closed, direct).with_numeric_fallback();
            let stdout = if json {
                schema(json!({ "report": r }))
            } else {
                let mut s = format!(
                    "closed: {}\ndirect: {}\nequal: {}\n",
                    highest_first(&r.closed_form),
                    highest_first(&r.direct),
                    r.equal
                );
                if let Some(d) = r.numeric_fallback {
                    let _ = writeln!(s, "root distance: {d:e}");
                }
                s
            };
            Ok(Outcome {
                stdout,
                verified: r.equal,
            })
        }
        Command::Coronal { graph, kind, marking: m } => {
            let g = load_graph(&graph)?;
            let mu = marking(&g, m)?;
            let raw = coronal(&g, &mu, kind)?;
            let reduced = raw.reduced();
            let stdout = if json {
                schema(json!({
                    "kind": kind,
                    "marking": mu,
                    "numerator": raw.num,
                    "denominator": raw.den,
                    "reduced_numerator": reduced.num,
                    "reduced_denominator": reduced.den,
                }))
            } else {
                format!("{raw}\nreduced: {reduced}\n")
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Census { pair, table } => {
            let cfg = RunConfig::from_pair(&pair)?;
            let r = CensusReport::new(cfg.product, &cfg.og1, &cfg.g2, &cfg.mu2, table.into())?;
            let stdout = if json { schema(json!({ "census": r })) } else { r.to_text() };
            Ok(Outcome {
                stdout,
                verified: r.agrees(),
            })
        }
        Command::Balance { pair } => {
            let cfg = RunConfig::from_pair(&pair)?;
            let v = balance_of_product(cfg.product, &cfg.og1.graph, &cfg.g2, &cfg.mu2)?;
            let stdout = if json {
                schema(json!({ "product": cfg.product, "verdict": v }))
            } else {
                match v.witness {
                    None => "balanced\n".to_string(),
                    Some((e, t)) => {
                        let why = match t {
                            UnbalancingEdge::PositiveMixed => "positive edge between opposite markings",
                            UnbalancingEdge::NegativePlus => "negative edge between two + vertices",
                            UnbalancingEdge::NegativeMinus => "negative edge between two - vertices",
                        };
                        format!("unbalanced: edge {} {} of the second factor, {why}\n", e.u, e.v)
                    }
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::CospectralSearch {
            max_order,
            kind,
            product,
            first_factors,
            disconnected,
            seed,
            node_limit,
            output,
        } => {
            let first = if first_factors.is_empty() {
                vec![families::cycle(3), families::cycle(4), families::complete(4)]
            } else {
                first_factors.iter().map(|s| load_graph(s)).collect::<Result<_, _>>()?
            };
            let cfg = SearchConfig {
                max_order,
                connected_only: !disconnected,
                kinds: or_all(kind, &MatrixKind::ALL),
                products: or_all(product, &ProductKind::ALL),
                first_factors: first,
                seed,
                node_limit,
            };
            let entries = search_catalogue(&cfg)?;
            let certified = entries.iter().filter(|e| e.certified).count();
            let mut lines = String::new();
            for e in &entries {
                let mut v = serde_json::to_value(e).expect("entry serializes");
                v["schema"] = json!(1);
                lines.push_str(&v.to_string());
                lines.push('\n');
            }
            let summary = format!("{} pairs, {certified} certified\n", entries.len());
            let stdout = match output {
                Some(path) => {
                    write(&path, &lines)?;
                    summary
                }
                None if json => lines,
                None => lines + &summary,
            };
            Ok(Outcome {
                stdout,
                verified: certified == entries.len(),
            })
        }
        Command::VerifyAll {
            seed,
            instances,
            max_n1,
            max_n2,
            variant,
            inject_fault,
            dump,
        } => {
            if !(2..=7).contains(&max_n1) || !(1..=5).contains(&max_n2) || instances == 0 {
                return Err(CliError::Precondition(
                    "sweep bounds: 2 <= max-n1 <= 7, 1 <= max-n2 <= 5, instances >= 1".into(),
                ));
            }
            let cfg = SweepConfig {
                seed,
                instances,
                max_n1,
                max_n2,
                variant: variant.into(),
                fault: inject_fault.as_deref().map(parse_fault).transpose()?,
                ..SweepConfig::default()
            };
            let s = run_sweep(&cfg);
            if let Some(path) = dump {
                write(&path, &schema(json!({ "seed": seed, "failures": s.failures })))?;
            }
            let stdout = if json {
                schema(json!({ "summary": s }))
            } else {
                let mut out = String::new();
                for t in &s.tallies {
                    let _ = writeln!(out, "{:<12} {:<3} passed {:>4} failed {:>4}", t.product.name(), t.kind.symbol(), t.passed, t.failed);
                }
                let _ = writeln!(out, "total passed {} failed {}", s.passed(), s.failures.len());
                out
            };
            Ok(Outcome {
                stdout,
                verified: s.all_passed(),
            })
        }
    }
}

fn or_all<T: Copy>(chosen: Vec<T>, all: &[T]) -> Vec<T> {
    if chosen.is_empty() {
        all.to_vec()
    } else {
        chosen
    }
}

fn highest_first(p: &RatPolynomial) -> String {
    let mut c = p.coeff_strings();
    c.reverse();
    c.join(", ")
}

/// Pretty JSON with the top-level schema version.
fn schema<T: Serialize>(body: T) -> String {
    let mut v = serde_json::to_value(body).expect("output serializes");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    serde_json::to_string_pretty(&v).expect("value prints") + "\n"
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Precondition(format!("{}: {e}", path.display())))
}

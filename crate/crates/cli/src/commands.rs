//! One handler per subcommand. Each returns the rendered report and the
//! process exit code (0 = holds, 1 = a property failed).

use crate::report::{approx_into, property_into, subset_value, witness_value, Report};
use crate::schema::{
    coverage_document, digraph_document, hard_document, load_document, render_document,
    scaled_sum_document, table_document, tree_document, FunctionDocument, ParsedFunction,
};
use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use subapprox::certify::{
    check_symmetrized_feasible, dual_certificate, hard_instance, primal_construction_bound,
    symmetrized_primal_solution,
};
use subapprox::construct::{
    budgeted_expected_coverage, budgeted_sampled_coverage, concave_modular_to_budgeted,
    decompose_uniform_profile, directed_cut_approx, gomory_hu_tree, DecompTerm, Decomposition,
};
use subapprox::rational::rat;
use subapprox::verify::{
    approximation_ratio, check_class, check_gomory_hu, check_submodular, is_coverage,
    CoverageDecision,
};
use subapprox::{all_masks, format_rational, Guard, HardSpec, Oracle, Rat};

pub struct CommandOutput {
    pub stdout: String,
    pub exit: i32,
}

fn write_side_output(path: &Option<PathBuf>, doc: &FunctionDocument) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, render_document(doc))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn parse_oracle(path: &Path, guard: Guard) -> Result<Oracle> {
    load_document(path)?.parse()?.to_oracle(guard)
}

pub fn cmd_check(file: &Path, guard: Guard) -> Result<CommandOutput> {
    let f = parse_oracle(file, guard)?;
    let submodular = check_submodular(&f, guard)?;
    let class = check_class(&f, guard)?;
    let mut report = Report::new("check");
    report.arg("file", file.display().to_string());
    property_into(&mut report, "submodular", &submodular);
    property_into(&mut report, "nonnegative", &class.nonnegative);
    property_into(&mut report, "monotone", &class.monotone);
    property_into(&mut report, "symmetric", &class.symmetric);
    property_into(&mut report, "zero_boundary", &class.zero_boundary);
    // monotone/symmetric/zero_boundary are informational: no nonzero
    // function satisfies all of them at once
    let exit = if submodular.holds && class.nonnegative.holds {
        0
    } else {
        1
    };
    Ok(CommandOutput {
        stdout: report.render(),
        exit,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    DirectedCut,
    GomoryHu,
    CoverageExpected,
    CoverageSampled,
    BudgetedSum,
}

pub fn cmd_approx(
    method: Method,
    file: &Path,
    output: &Option<PathBuf>,
    seed: Option<u64>,
    guard: Guard,
) -> Result<CommandOutput> {
    let parsed = load_document(file)?.parse()?;
    let mut report = Report::new("approx");
    report.arg("file", file.display().to_string());
    match method {
        Method::DirectedCut => {
            report.arg("method", "directed-cut");
            let f = parsed.to_oracle(guard)?;
            let n = f.ground_set_size();
            let g = directed_cut_approx(&f, guard)?;
            let cut = Oracle::directed_cut(g.clone());
            let ratio = approximation_ratio(&f, &cut, guard)?;
            let bound = Rat::new((n * n).into(), 4.into());
            let within = ratio
                .theta
                .as_finite()
                .map(|t| t <= &bound)
                .unwrap_or(false);
            approx_into(&mut report, &ratio);
            report.verdict("theta_within_bound", within);
            report.value_rat("bound", &bound);
            let doc = digraph_document(&g);
            report.output = Some(json!({ "directed_cut": doc }));
            write_side_output(output, &doc)?;
            let exit = i32::from(!(ratio.lower_ok && within));
            Ok(CommandOutput {
                stdout: report.render(),
                exit,
            })
        }
        Method::GomoryHu => {
            report.arg("method", "gomory-hu");
            let f = parsed.to_oracle(guard)?;
            let n = f.ground_set_size();
            let tree = gomory_hu_tree(&f, guard)?;
            let edge_property = check_gomory_hu(&f, &tree, guard)?;
            let cut = Oracle::tree_cut(tree.clone());
            let ratio = approximation_ratio(&f, &cut, guard)?;
            let bound = rat(n.max(1) as i64 - 1).max(rat(1));
            let within = ratio
                .theta
                .as_finite()
                .map(|t| t <= &bound)
                .unwrap_or(false);
            approx_into(&mut report, &ratio);
            property_into(&mut report, "gomory_hu_edge_property", &edge_property);
            report.verdict("theta_within_bound", within);
            report.value_rat("bound", &bound);
            let doc = tree_document(&tree);
            report.output = Some(json!({ "tree_cut": doc }));
            write_side_output(output, &doc)?;
            let exit = i32::from(!(ratio.lower_ok && within && edge_property.holds));
            Ok(CommandOutput {
                stdout: report.render(),
                exit,
            })
        }
        Method::CoverageExpected => {
            report.arg("method", "coverage-expected");
            let f = parsed.to_oracle(guard)?;
            let expected = budgeted_expected_coverage(&f)?;
            let n = expected.ground_set_size();
            guard.admit(n)?;
            let g_prime = expected.g_prime_oracle(guard)?;
            // h = g'/rho is the upper approximator: f <= h <= (1/rho) f
            let h_values: Vec<Rat> = all_masks(n).map(|s| expected.upper(s)).collect();
            let h = Oracle::table(n, h_values.clone())?;
            let ratio = approximation_ratio(&f, &h, guard)?;
            let scale = expected.scale();
            let within = ratio
                .theta
                .as_finite()
                .map(|t| t <= &scale)
                .unwrap_or(false);
            let coverage = is_coverage(&g_prime, guard)?.is_coverage();
            approx_into(&mut report, &ratio);
            report.verdict("theta_within_scale", within);
            report.verdict("expectation_is_coverage", coverage);
            report.value_rat("rho", expected.rho());
            report.value_rat("scale", &scale);
            report.value_raw("lift", Value::String(expected.lift().to_string()));
            report.value_raw(
                "lifted_budget",
                Value::String(expected.lifted_budget().to_string()),
            );
            report.value_raw(
                "lifted_values",
                Value::from(
                    expected
                        .lifted_values()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>(),
                ),
            );
            let doc = table_document(n, &h_values);
            report.output = Some(json!({ "scaled_expected_coverage": doc }));
            write_side_output(output, &doc)?;
            let exit = i32::from(!(ratio.lower_ok && within && coverage));
            Ok(CommandOutput {
                stdout: report.render(),
                exit,
            })
        }
        Method::CoverageSampled => {
            report.arg("method", "coverage-sampled");
            let seed = seed.unwrap_or(0);
            report.seed = Some(seed);
            let f = parsed.to_oracle(guard)?;
            let system = budgeted_sampled_coverage(&f, seed)?;
            let n = f.ground_set_size();
            let g = Oracle::coverage(system.clone())?;
            // sampled coverage sits below f: check g <= f by swapping roles
            report.arg("sandwich_direction", "candidate-below-target");
            let ratio = approximation_ratio(&g, &f, guard)?;
            approx_into(&mut report, &ratio);
            let doc = coverage_document(&system, n);
            report.output = Some(json!({ "coverage": doc }));
            write_side_output(output, &doc)?;
            let exit = i32::from(!ratio.lower_ok);
            Ok(CommandOutput {
                stdout: report.render(),
                exit,
            })
        }
        Method::BudgetedSum => {
            report.arg("method", "budgeted-sum");
            let (decomposition, reference) = match &parsed {
                ParsedFunction::Oracle(f @ Oracle::UniformProfile { .. }) => {
                    (decompose_uniform_profile(f)?, f.clone())
                }
                ParsedFunction::ConcaveComposition { values, profile } => (
                    concave_modular_to_budgeted(profile, values, guard)?,
                    parsed.to_oracle(guard)?,
                ),
                _ => bail!(
                    "budgeted-sum expects a uniform_profile or concave_composition document"
                ),
            };
            let n = reference.ground_set_size();
            guard.admit(n)?;
            let exact = all_masks(n)
                .all(|s| decomposition.eval(s) == reference.eval_rational(s).unwrap());
            let nonneg = decomposition
                .alphas
                .iter()
                .all(subapprox::rational::is_nonneg);
            report.verdict("exact_reconstruction", exact);
            report.verdict("alphas_nonnegative", nonneg);
            report.value_raw(
                "printed_alpha1_differs",
                Value::Bool(decomposition.printed_alpha1_differs),
            );
            report.value_raw(
                "alphas",
                Value::from(
                    decomposition
                        .alphas
                        .iter()
                        .map(|a| Value::String(format_rational(a)))
                        .collect::<Vec<_>>(),
                ),
            );
            let (doc, terms_json) = decomposition_outputs(n, &decomposition);
            report.output = Some(json!({ "terms": terms_json, "scaled_sum": doc }));
            write_side_output(output, &doc)?;
            let exit = i32::from(!(exact && nonneg));
            Ok(CommandOutput {
                stdout: report.render(),
                exit,
            })
        }
    }
}

fn decomposition_outputs(n: usize, d: &Decomposition) -> (FunctionDocument, Value) {
    let triples: Vec<(Rat, Vec<Rat>, Rat)> = d
        .terms
        .iter()
        .map(|(coef, term)| match term {
            DecompTerm::UniformRank { n, rank } => {
                (coef.clone(), vec![rat(1); *n], rat(*rank as i64))
            }
            DecompTerm::BudgetedAdditive { values, budget } => {
                (coef.clone(), values.clone(), budget.clone())
            }
        })
        .collect();
    let terms_json = Value::from(
        d.terms
            .iter()
            .map(|(coef, term)| match term {
                DecompTerm::UniformRank { rank, .. } => json!({
                    "coefficient": format_rational(coef),
                    "uniform_rank": rank,
                }),
                DecompTerm::BudgetedAdditive { values, budget } => json!({
                    "coefficient": format_rational(coef),
                    "values": values.iter().map(format_rational).collect::<Vec<_>>(),
                    "budget": format_rational(budget),
                }),
            })
            .collect::<Vec<_>>(),
    );
    (scaled_sum_document(n, &triples), terms_json)
}

pub fn cmd_verify(target: &Path, candidate: &Path, guard: Guard) -> Result<CommandOutput> {
    let f = parse_oracle(target, guard)?;
    let g = parse_oracle(candidate, guard)?;
    let ratio = approximation_ratio(&f, &g, guard)?;
    let mut report = Report::new("verify");
    report.arg("target", target.display().to_string());
    report.arg("candidate", candidate.display().to_string());
    approx_into(&mut report, &ratio);
    let exit = i32::from(!(ratio.lower_ok && ratio.theta.as_finite().is_some()));
    Ok(CommandOutput {
        stdout: report.render(),
        exit,
    })
}

pub fn cmd_is_coverage(file: &Path, guard: Guard) -> Result<CommandOutput> {
    let f = parse_oracle(file, guard)?;
    let decision = is_coverage(&f, guard)?;
    let mut report = Report::new("is-coverage");
    report.arg("file", file.display().to_string());
    match decision {
        CoverageDecision::Coverage(h) => {
            report.verdict("is_coverage", true);
            report.output = Some(json!({
                "hitting_weights": h
                    .weights
                    .iter()
                    .map(|(t, x)| json!({
                        "set": subset_value(*t),
                        "weight": format_rational(x),
                    }))
                    .collect::<Vec<_>>(),
            }));
            Ok(CommandOutput {
                stdout: report.render(),
                exit: 0,
            })
        }
        CoverageDecision::NotCoverage(property) => {
            report.verdict("is_coverage", false);
            if let Some(w) = &property.witness {
                report.witness("negative_weight", witness_value(w));
            }
            Ok(CommandOutput {
                stdout: report.render(),
                exit: 1,
            })
        }
    }
}

pub fn cmd_certify_dual(k: usize) -> Result<CommandOutput> {
    let cert = dual_certificate(k)?;
    let mut report = Report::new("certify-dual");
    report.arg("k", k);
    report.verdict("feasible", cert.feasible);
    report.value_rat("objective", &cert.objective);
    report.value_rat("v_k", &cert.v_k);
    report.value_rat("u_1", &cert.u_1);
    report.value_rat("u_n", &cert.u_n);
    report.output = Some(json!({
        "k": cert.k,
        "n": cert.n,
        "c": cert.c.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "delta_c_k": cert.delta_c_k.to_string(),
    }));
    Ok(CommandOutput {
        stdout: report.render(),
        exit: i32::from(!cert.feasible),
    })
}

pub fn cmd_certify_primal(k: usize) -> Result<CommandOutput> {
    let solution = symmetrized_primal_solution(k)?;
    let feasible = check_symmetrized_feasible(k, &solution.x, &solution.alpha);
    let lower = primal_construction_bound(k)?;
    let upper = dual_certificate(k)?.objective;
    let bracketed = lower <= solution.alpha && solution.alpha <= upper;
    let mut report = Report::new("certify-primal");
    report.arg("k", k);
    report.verdict("vertex_feasible", feasible);
    report.verdict("within_duality_bracket", bracketed);
    report.value_rat("alpha", &solution.alpha);
    report.value_rat("construction_bound", &lower);
    report.value_rat("dual_objective", &upper);
    report.output = Some(json!({
        "k": solution.k,
        "n": solution.n,
        "x": solution.x.iter().map(format_rational).collect::<Vec<_>>(),
    }));
    Ok(CommandOutput {
        stdout: report.render(),
        exit: i32::from(!(feasible && bracketed)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GalleryKind {
    General,
    Symmetric,
    Budgeted,
}

pub fn cmd_gallery(
    kind: GalleryKind,
    n: Option<usize>,
    a_size: Option<usize>,
    k: Option<usize>,
    output: &Option<PathBuf>,
) -> Result<CommandOutput> {
    let spec = match kind {
        GalleryKind::General => {
            let n = n.context("--kind general requires --n")?;
            let size = a_size.unwrap_or(n / 2);
            if size == 0 || size >= n {
                bail!("--a must be between 1 and n - 1");
            }
            HardSpec::General {
                n,
                a_set: subapprox::Mask::from_elements(&(0..size).collect::<Vec<_>>()),
            }
        }
        GalleryKind::Symmetric => HardSpec::Symmetric {
            n: n.context("--kind symmetric requires --n")?,
        },
        GalleryKind::Budgeted => {
            let k = match (k, n) {
                (Some(k), maybe_n) => {
                    if let Some(n) = maybe_n {
                        if n != k * k {
                            bail!("--n must equal k^2 (got n = {n}, k = {k})");
                        }
                    }
                    k
                }
                (None, Some(n)) => {
                    let k = (n as f64).sqrt().round() as usize;
                    if k * k != n {
                        bail!("--n must be a perfect square for --kind budgeted");
                    }
                    k
                }
                (None, None) => bail!("--kind budgeted requires --k or --n"),
            };
            HardSpec::BudgetedUniform { k }
        }
    };
    hard_instance(spec.clone())?; // validates
    let doc = hard_document(&spec);
    write_side_output(output, &doc)?;
    Ok(CommandOutput {
        stdout: render_document(&doc),
        exit: 0,
    })
}

//! JSON function documents: the input/output schema for every oracle kind.
//!
//! Rationals travel as strings ("5/6", "3", "0.25"); integer JSON numbers
//! are accepted too. Non-integer JSON number literals are rejected so no
//! value ever passes through floating point.

use anyhow::{anyhow, bail, Context, Result};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use subapprox::{
    format_rational, parse_rational, CoverageSystem, Guard, HardSpec, Mask, Oracle, Rat,
    WeightedDigraph, WeightedGraph, WeightedTree,
};

/// An exact rational in transit.
#[derive(Clone, Debug, PartialEq)]
pub struct RatText(pub Rat);

impl Serialize for RatText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = RatText;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a rational string like \"5/6\" or \"0.25\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatText, E> {
                Ok(RatText(Rat::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatText, E> {
                Ok(RatText(Rat::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RatText, E> {
                Err(E::custom(format!(
                    "non-integer number literal {v}: write decimals as strings (e.g. \"0.5\") so they stay exact"
                )))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<RatText, E> {
                parse_rational(s)
                    .map(RatText)
                    .ok_or_else(|| E::custom(format!("cannot parse {s:?} as a rational")))
            }
        }
        deserializer.deserialize_any(RatVisitor)
    }
}

fn rats(values: &[RatText]) -> Vec<Rat> {
    values.iter().map(|r| r.0.clone()).collect()
}

fn rat_texts(values: &[Rat]) -> Vec<RatText> {
    values.iter().map(|r| RatText(r.clone())).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedSetEntry {
    pub set: Vec<usize>,
    pub weight: RatText,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcEntry {
    pub from: usize,
    pub to: usize,
    pub weight: RatText,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: usize,
    pub v: usize,
    pub weight: RatText,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub coefficient: RatText,
    pub function: FunctionSpec,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum HardKind {
    General,
    Symmetric,
    BudgetedUniform,
}

/// The tagged function object inside a document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    Table {
        values: Vec<RatText>,
    },
    BudgetedAdditive {
        values: Vec<RatText>,
        budget: RatText,
    },
    Coverage {
        universe: usize,
        weights: Vec<RatText>,
        sets: Vec<Vec<usize>>,
    },
    Hitting {
        weights: Vec<WeightedSetEntry>,
    },
    DirectedCut {
        arcs: Vec<ArcEntry>,
    },
    UndirectedCut {
        edges: Vec<EdgeEntry>,
    },
    TreeCut {
        edges: Vec<EdgeEntry>,
    },
    UniformProfile {
        profile: Vec<RatText>,
    },
    SqrtModular {
        values: Vec<RatText>,
    },
    ScaledSum {
        terms: Vec<TermEntry>,
    },
    Hard {
        hard_kind: HardKind,
        #[serde(skip_serializing_if = "Option::is_none")]
        a_set: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
    },
    /// f(S) = g(sum of values over S): the concave-of-modular composition
    /// consumed by the budgeted-sum decomposition.
    ConcaveComposition {
        values: Vec<RatText>,
        profile: Vec<RatText>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDocument {
    pub ground_set: usize,
    pub function: FunctionSpec,
}

/// A parsed document: either a ready oracle or the concave-composition
/// inputs, which only densify into an oracle under a guard.
pub enum ParsedFunction {
    Oracle(Oracle),
    ConcaveComposition { values: Vec<Rat>, profile: Vec<Rat> },
}

impl ParsedFunction {
    pub fn to_oracle(&self, guard: Guard) -> Result<Oracle> {
        match self {
            ParsedFunction::Oracle(f) => Ok(f.clone()),
            ParsedFunction::ConcaveComposition { values, profile } => {
                let n = values.len();
                guard.admit(n)?;
                let mut weights = Vec::with_capacity(n);
                for (i, a) in values.iter().enumerate() {
                    let w = subapprox::rational::as_usize(a).ok_or_else(|| {
                        anyhow!("concave composition value at index {i} is not a small nonnegative integer")
                    })?;
                    weights.push(w);
                }
                let m: usize = weights.iter().sum();
                if profile.len() != m + 1 {
                    bail!(
                        "profile has {} entries but the values sum to {m}",
                        profile.len()
                    );
                }
                let table = subapprox::all_masks(n)
                    .map(|s| {
                        let w: usize = s.elements().map(|i| weights[i]).sum();
                        profile[w].clone()
                    })
                    .collect();
                Ok(Oracle::table(n, table)?)
            }
        }
    }
}

fn mask_from_indices(indices: &[usize], n: usize) -> Result<Mask> {
    for &i in indices {
        if i >= n {
            bail!("element {i} out of range for ground set of size {n}");
        }
    }
    Ok(Mask::from_elements(indices))
}

impl FunctionDocument {
    pub fn parse(&self) -> Result<ParsedFunction> {
        let n = self.ground_set;
        let oracle = match &self.function {
            FunctionSpec::Table { values } => Oracle::table(n, rats(values))?,
            FunctionSpec::BudgetedAdditive { values, budget } => {
                let values = rats(values);
                if values.len() != n {
                    bail!("{} values for ground set of size {n}", values.len());
                }
                Oracle::budgeted_additive(values, budget.0.clone())?
            }
            FunctionSpec::Coverage {
                universe,
                weights,
                sets,
            } => {
                if sets.len() != n {
                    bail!("{} coverage sets for ground set of size {n}", sets.len());
                }
                Oracle::coverage(CoverageSystem::new(*universe, rats(weights), sets.clone())?)?
            }
            FunctionSpec::Hitting { weights } => {
                let entries = weights
                    .iter()
                    .map(|e| Ok((mask_from_indices(&e.set, n)?, e.weight.0.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Oracle::hitting(n, entries)?
            }
            FunctionSpec::DirectedCut { arcs } => {
                let arcs = arcs
                    .iter()
                    .map(|a| (a.from, a.to, a.weight.0.clone()))
                    .collect::<Vec<_>>();
                Oracle::directed_cut(WeightedDigraph::from_arcs(n, arcs)?)
            }
            FunctionSpec::UndirectedCut { edges } => {
                let edges = edges
                    .iter()
                    .map(|e| (e.u, e.v, e.weight.0.clone()))
                    .collect::<Vec<_>>();
                Oracle::undirected_cut(WeightedGraph::from_edges(n, edges)?)
            }
            FunctionSpec::TreeCut { edges } => {
                let edges = edges
                    .iter()
                    .map(|e| (e.u, e.v, e.weight.0.clone()))
                    .collect::<Vec<_>>();
                Oracle::tree_cut(WeightedTree::new(n, edges)?)
            }
            FunctionSpec::UniformProfile { profile } => {
                let profile = rats(profile);
                if profile.len() != n + 1 {
                    bail!(
                        "profile has {} entries; expected n + 1 = {}",
                        profile.len(),
                        n + 1
                    );
                }
                Oracle::uniform_profile(profile)?
            }
            FunctionSpec::SqrtModular { values } => {
                let values = rats(values);
                if values.len() != n {
                    bail!("{} values for ground set of size {n}", values.len());
                }
                Oracle::sqrt_modular(values)?
            }
            FunctionSpec::ScaledSum { terms } => {
                let parsed = terms
                    .iter()
                    .map(|t| {
                        let doc = FunctionDocument {
                            ground_set: n,
                            function: t.function.clone(),
                        };
                        match doc.parse()? {
                            ParsedFunction::Oracle(f) => Ok((t.coefficient.0.clone(), f)),
                            ParsedFunction::ConcaveComposition { .. } => {
                                Err(anyhow!("concave compositions cannot appear inside sums"))
                            }
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Oracle::scaled_sum(n, parsed)?
            }
            FunctionSpec::Hard { hard_kind, a_set, k } => {
                let spec = match hard_kind {
                    HardKind::General => {
                        let indices = a_set
                            .clone()
                            .unwrap_or_else(|| (0..n / 2).collect::<Vec<_>>());
                        HardSpec::General {
                            n,
                            a_set: mask_from_indices(&indices, n)?,
                        }
                    }
                    HardKind::Symmetric => HardSpec::Symmetric { n },
                    HardKind::BudgetedUniform => {
                        let k = k.ok_or_else(|| anyhow!("budgeted_uniform requires k"))?;
                        if k * k != n {
                            bail!("budgeted_uniform requires ground_set = k^2 (got n = {n}, k = {k})");
                        }
                        HardSpec::BudgetedUniform { k }
                    }
                };
                Oracle::hard(spec)?
            }
            FunctionSpec::ConcaveComposition { values, profile } => {
                return Ok(ParsedFunction::ConcaveComposition {
                    values: rats(values),
                    profile: rats(profile),
                });
            }
        };
        if oracle.ground_set_size() != n {
            bail!(
                "function is over {} elements but ground_set is {n}",
                oracle.ground_set_size()
            );
        }
        Ok(ParsedFunction::Oracle(oracle))
    }
}

pub fn load_document(path: &std::path::Path) -> Result<FunctionDocument> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let doc: FunctionDocument = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}: parse error at line {} column {}: {e}", path.display(), e.line(), e.column()))?;
    Ok(doc)
}

/// Render a document deterministically (pretty JSON plus trailing newline).
pub fn render_document(doc: &FunctionDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Documents for constructed approximators, so command outputs round-trip
/// back in as inputs.
pub fn digraph_document(g: &WeightedDigraph) -> FunctionDocument {
    FunctionDocument {
        ground_set: g.node_count(),
        function: FunctionSpec::DirectedCut {
            arcs: g
                .arcs()
                .map(|(u, v, w)| ArcEntry {
                    from: u,
                    to: v,
                    weight: RatText(w.clone()),
                })
                .collect(),
        },
    }
}

pub fn tree_document(t: &WeightedTree) -> FunctionDocument {
    FunctionDocument {
        ground_set: t.node_count(),
        function: FunctionSpec::TreeCut {
            edges: t
                .edges()
                .iter()
                .map(|(u, v, w)| EdgeEntry {
                    u: *u,
                    v: *v,
                    weight: RatText(w.clone()),
                })
                .collect(),
        },
    }
}

pub fn coverage_document(c: &CoverageSystem, n: usize) -> FunctionDocument {
    FunctionDocument {
        ground_set: n,
        function: FunctionSpec::Coverage {
            universe: c.universe_size(),
            weights: rat_texts(c.weights()),
            sets: c.sets().to_vec(),
        },
    }
}

pub fn table_document(n: usize, values: &[Rat]) -> FunctionDocument {
    FunctionDocument {
        ground_set: n,
        function: FunctionSpec::Table {
            values: rat_texts(values),
        },
    }
}

pub fn scaled_sum_document(n: usize, terms: &[(Rat, Vec<Rat>, Rat)]) -> FunctionDocument {
    // terms as (coefficient, budgeted values, budget)
    FunctionDocument {
        ground_set: n,
        function: FunctionSpec::ScaledSum {
            terms: terms
                .iter()
                .map(|(coef, values, budget)| TermEntry {
                    coefficient: RatText(coef.clone()),
                    function: FunctionSpec::BudgetedAdditive {
                        values: rat_texts(values),
                        budget: RatText(budget.clone()),
                    },
                })
                .collect(),
        },
    }
}

pub fn hard_document(spec: &HardSpec) -> FunctionDocument {
    let (hard_kind, a_set, k) = match spec {
        HardSpec::General { a_set, .. } => {
            (HardKind::General, Some(a_set.to_sorted_vec()), None)
        }
        HardSpec::Symmetric { .. } => (HardKind::Symmetric, None, None),
        HardSpec::BudgetedUniform { k } => (HardKind::BudgetedUniform, None, Some(*k)),
    };
    FunctionDocument {
        ground_set: spec.ground_set_size(),
        function: FunctionSpec::Hard {
            hard_kind,
            a_set,
            k,
        },
    }
}

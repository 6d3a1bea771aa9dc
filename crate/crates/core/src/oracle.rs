//! Exact set-function oracles.
//!
//! Every representation evaluates deterministically in big rationals, with a
//! single exception: the sqrt-modular surrogate, whose values are square
//! roots of rationals. [`Value`] keeps that one irrational case exact by
//! carrying the radicand and comparing through squares.

use crate::error::{Error, Result};
use crate::graph::{WeightedDigraph, WeightedGraph, WeightedTree};
use crate::mask::{all_masks, Mask, MAX_GROUND_SET};
use crate::rational::Rat;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exhaustive-operation guard: scans over all 2^n subsets refuse ground sets
/// larger than this.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    max_n: usize,
}

pub const DEFAULT_MAX_EXHAUSTIVE: usize = 16;

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_n: DEFAULT_MAX_EXHAUSTIVE,
        }
    }
}

impl Guard {
    pub fn new(max_n: usize) -> Self {
        Guard {
            max_n: max_n.min(MAX_GROUND_SET),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn admit(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::ExhaustiveGuardExceeded { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

/// An exact function value: either a rational or the nonnegative square root
/// of one. Construction canonicalizes perfect squares to the rational side,
/// so a `Sqrt` is always irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rat),
    Sqrt(Rat),
}

impl Value {
    pub fn sqrt_of(radicand: Rat) -> Value {
        assert!(!radicand.is_negative(), "negative radicand");
        let ns = radicand.numer().sqrt();
        let ds = radicand.denom().sqrt();
        if &(&ns * &ns) == radicand.numer() && &(&ds * &ds) == radicand.denom() {
            Value::Rational(Rat::new(ns, ds))
        } else {
            Value::Sqrt(radicand)
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Value::Rational(r) => Some(r),
            Value::Sqrt(_) => None,
        }
    }

    pub fn expect_rational(self) -> Rat {
        match self {
            Value::Rational(r) => r,
            Value::Sqrt(r) => panic!("expected rational value, found sqrt({r})"),
        }
    }

    /// Exact comparison against a rational, squaring where needed.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        match self {
            Value::Rational(r) => r.cmp(q),
            Value::Sqrt(r) => {
                if q.is_negative() {
                    Ordering::Greater
                } else {
                    r.cmp(&(q * q))
                }
            }
        }
    }

    pub fn le_rat(&self, q: &Rat) -> bool {
        self.cmp_rat(q) != Ordering::Greater
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => a.cmp(b),
            (Value::Sqrt(a), Value::Sqrt(b)) => a.cmp(b),
            (Value::Rational(_), Value::Sqrt(_)) => other.cmp_rat(self.as_rational().unwrap()).reverse(),
            (Value::Sqrt(_), Value::Rational(_)) => self.cmp_rat(other.as_rational().unwrap()),
        }
    }
}

/// Parameters of the three lower-bound instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HardSpec {
    /// 1 iff S hits A but misses some of the complement of A.
    General { n: usize, a_set: Mask },
    /// 1 on every nontrivial subset.
    Symmetric { n: usize },
    /// min(|S|, k) on n = k^2 unit-value elements.
    BudgetedUniform { k: usize },
}

impl HardSpec {
    pub fn ground_set_size(&self) -> usize {
        match self {
            HardSpec::General { n, .. } | HardSpec::Symmetric { n } => *n,
            HardSpec::BudgetedUniform { k } => k * k,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.ground_set_size();
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::BadInstanceSpec {
                reason: format!("ground set size {n} outside 1..={MAX_GROUND_SET}"),
            });
        }
        match self {
            HardSpec::General { n, a_set } => {
                if n % 2 != 0 {
                    return Err(Error::BadInstanceSpec {
                        reason: "general instance needs an even ground set".into(),
                    });
                }
                if !a_set.fits(*n) || a_set.is_empty() || a_set.is_full(*n) {
                    return Err(Error::BadInstanceSpec {
                        reason: "A must be a nontrivial subset of the ground set".into(),
                    });
                }
            }
            HardSpec::Symmetric { .. } => {}
            HardSpec::BudgetedUniform { k } => {
                if *k == 0 {
                    return Err(Error::BadInstanceSpec {
                        reason: "k must be positive".into(),
                    });
                }
            }
        }
        Ok(())
    }

    fn eval(&self, s: Mask) -> Rat {
        match self {
            HardSpec::General { n, a_set } => {
                let hits_a = !s.intersect(*a_set).is_empty();
                let misses_complement = !a_set.complement(*n).minus(s).is_empty();
                if hits_a && misses_complement {
                    Rat::from_integer(1.into())
                } else {
                    Rat::zero()
                }
            }
            HardSpec::Symmetric { n } => {
                if s.is_empty() || s.is_full(*n) {
                    Rat::zero()
                } else {
                    Rat::from_integer(1.into())
                }
            }
            HardSpec::BudgetedUniform { k } => Rat::from_integer(s.len().min(*k).into()),
        }
    }
}

/// A coverage system: weighted auxiliary universe plus one subset per ground
/// element; f(S) is the weight of the union of the chosen subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageSystem {
    universe: usize,
    weights: Vec<Rat>,
    sets: Vec<Vec<usize>>,
}

impl CoverageSystem {
    pub fn new(universe: usize, weights: Vec<Rat>, sets: Vec<Vec<usize>>) -> Result<Self> {
        if weights.len() != universe {
            return Err(Error::DimensionMismatch {
                context: format!("{} weights for universe of size {universe}", weights.len()),
            });
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::NegativeValue {
                context: "coverage point weight",
            });
        }
        let mut sets = sets;
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
            if set.iter().any(|&z| z >= universe) {
                return Err(Error::DimensionMismatch {
                    context: "coverage set references a point outside the universe".into(),
                });
            }
        }
        Ok(Self {
            universe,
            weights,
            sets,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    fn eval(&self, s: Mask) -> Rat {
        let mut covered = vec![false; self.universe];
        for i in s.elements() {
            for &z in &self.sets[i] {
                covered[z] = true;
            }
        }
        let mut total = Rat::zero();
        for (z, hit) in covered.iter().enumerate() {
            if *hit {
                total += &self.weights[z];
            }
        }
        total
    }
}

/// Tagged union of the exact set-function representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Oracle {
    Table {
        n: usize,
        values: Vec<Rat>,
    },
    BudgetedAdditive {
        values: Vec<Rat>,
        budget: Rat,
    },
    Coverage(CoverageSystem),
    /// Nonnegative weights on nonempty subsets; f(S) sums the weights of
    /// subsets intersecting S.
    Hitting {
        n: usize,
        weights: BTreeMap<Mask, Rat>,
    },
    DirectedCut(WeightedDigraph),
    UndirectedCut(WeightedGraph),
    TreeCut(WeightedTree),
    /// Value depends only on |S|; profile holds f_0..f_n with f_0 = 0.
    UniformProfile {
        profile: Vec<Rat>,
    },
    /// g(S) = sqrt(sum of a_e over S); the one irrational representation.
    SqrtModular {
        values: Vec<Rat>,
    },
    /// Nonnegative combination of rational-valued oracles.
    ScaledSum {
        n: usize,
        terms: Vec<(Rat, Oracle)>,
    },
    Hard(HardSpec),
}

fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

impl Oracle {
    pub fn table(n: usize, values: Vec<Rat>) -> Result<Oracle> {
        check_ground_set(n)?;
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                context: format!("table with {} entries for n = {n}", values.len()),
            });
        }
        if values.iter().any(|v| v.is_negative()) {
            return Err(Error::NegativeValue {
                context: "table value",
            });
        }
        Ok(Oracle::Table { n, values })
    }

    pub fn budgeted_additive(values: Vec<Rat>, budget: Rat) -> Result<Oracle> {
        check_ground_set(values.len())?;
        if values.iter().any(|v| v.is_negative()) {
            return Err(Error::NegativeValue {
                context: "budgeted additive element value",
            });
        }
        if budget.is_negative() {
            return Err(Error::NegativeValue { context: "budget" });
        }
        Ok(Oracle::BudgetedAdditive { values, budget })
    }

    pub fn coverage(system: CoverageSystem) -> Result<Oracle> {
        check_ground_set(system.sets.len())?;
        Ok(Oracle::Coverage(system))
    }

    pub fn hitting(n: usize, weights: impl IntoIterator<Item = (Mask, Rat)>) -> Result<Oracle> {
        check_ground_set(n)?;
        let mut map = BTreeMap::new();
        for (t, x) in weights {
            if t.is_empty() {
                return Err(Error::EmptyHittingSet);
            }
            if !t.fits(n) {
                return Err(Error::DimensionMismatch {
                    context: format!("hitting set {t:?} outside ground set of size {n}"),
                });
            }
            if x.is_negative() {
                return Err(Error::NegativeValue {
                    context: "hitting weight",
                });
            }
            if !x.is_zero() {
                *map.entry(t).or_insert_with(Rat::zero) += x;
            }
        }
        Ok(Oracle::Hitting { n, weights: map })
    }

    pub fn directed_cut(g: WeightedDigraph) -> Oracle {
        Oracle::DirectedCut(g)
    }

    pub fn undirected_cut(g: WeightedGraph) -> Oracle {
        Oracle::UndirectedCut(g)
    }

    pub fn tree_cut(t: WeightedTree) -> Oracle {
        Oracle::TreeCut(t)
    }

    pub fn uniform_profile(profile: Vec<Rat>) -> Result<Oracle> {
        if profile.is_empty() {
            return Err(Error::DimensionMismatch {
                context: "empty profile".into(),
            });
        }
        check_ground_set(profile.len() - 1)?;
        if !profile[0].is_zero() {
            return Err(Error::ProfileNotZeroBased);
        }
        if profile.iter().any(|v| v.is_negative()) {
            return Err(Error::NegativeValue {
                context: "profile value",
            });
        }
        Ok(Oracle::UniformProfile { profile })
    }

    pub fn sqrt_modular(values: Vec<Rat>) -> Result<Oracle> {
        check_ground_set(values.len())?;
        if values.iter().any(|v| v.is_negative()) {
            return Err(Error::NegativeValue {
                context: "sqrt-modular coefficient",
            });
        }
        Ok(Oracle::SqrtModular { values })
    }

    pub fn scaled_sum(n: usize, terms: Vec<(Rat, Oracle)>) -> Result<Oracle> {
        check_ground_set(n)?;
        for (coef, term) in &terms {
            if coef.is_negative() {
                return Err(Error::NegativeValue {
                    context: "scaled-sum coefficient",
                });
            }
            if term.ground_set_size() != n {
                return Err(Error::DimensionMismatch {
                    context: format!(
                        "scaled-sum term over {} elements inside a sum over {n}",
                        term.ground_set_size()
                    ),
                });
            }
            if !term.is_rational_valued() {
                return Err(Error::SqrtInScaledSum);
            }
        }
        Ok(Oracle::ScaledSum { n, terms })
    }

    pub fn hard(spec: HardSpec) -> Result<Oracle> {
        spec.validate()?;
        Ok(Oracle::Hard(spec))
    }

    pub fn ground_set_size(&self) -> usize {
        match self {
            Oracle::Table { n, .. } => *n,
            Oracle::BudgetedAdditive { values, .. } => values.len(),
            Oracle::Coverage(c) => c.sets.len(),
            Oracle::Hitting { n, .. } => *n,
            Oracle::DirectedCut(g) => g.node_count(),
            Oracle::UndirectedCut(g) => g.node_count(),
            Oracle::TreeCut(t) => t.node_count(),
            Oracle::UniformProfile { profile } => profile.len() - 1,
            Oracle::SqrtModular { values } => values.len(),
            Oracle::ScaledSum { n, .. } => *n,
            Oracle::Hard(spec) => spec.ground_set_size(),
        }
    }

    /// The (values, budget) view of a budgeted additive function; the
    /// uniform budgeted hard instance is one with unit values and budget k.
    pub fn as_budgeted_additive(&self) -> Option<(Vec<Rat>, Rat)> {
        match self {
            Oracle::BudgetedAdditive { values, budget } => {
                Some((values.clone(), budget.clone()))
            }
            Oracle::Hard(HardSpec::BudgetedUniform { k }) => {
                let one = Rat::from_integer(1.into());
                Some((vec![one; k * k], Rat::from_integer((*k as i64).into())))
            }
            _ => None,
        }
    }

    /// True unless the oracle is (or contains) a sqrt-modular surrogate.
    pub fn is_rational_valued(&self) -> bool {
        match self {
            Oracle::SqrtModular { .. } => false,
            Oracle::ScaledSum { terms, .. } => {
                terms.iter().all(|(_, t)| t.is_rational_valued())
            }
            _ => true,
        }
    }

    /// Exact evaluation at a subset of the ground set.
    pub fn eval(&self, s: Mask) -> Value {
        debug_assert!(s.fits(self.ground_set_size()), "mask outside ground set");
        match self {
            Oracle::Table { values, .. } => Value::Rational(values[s.index()].clone()),
            Oracle::BudgetedAdditive { values, budget } => {
                let mut sum = Rat::zero();
                for i in s.elements() {
                    sum += &values[i];
                }
                Value::Rational(sum.min(budget.clone()))
            }
            Oracle::Coverage(c) => Value::Rational(c.eval(s)),
            Oracle::Hitting { weights, .. } => {
                let mut sum = Rat::zero();
                for (t, x) in weights {
                    if !t.intersect(s).is_empty() {
                        sum += x;
                    }
                }
                Value::Rational(sum)
            }
            Oracle::DirectedCut(g) => Value::Rational(g.cut_value(s)),
            Oracle::UndirectedCut(g) => Value::Rational(g.cut_value(s)),
            Oracle::TreeCut(t) => Value::Rational(t.cut_value(s)),
            Oracle::UniformProfile { profile } => Value::Rational(profile[s.len()].clone()),
            Oracle::SqrtModular { values } => {
                let mut radicand = Rat::zero();
                for i in s.elements() {
                    radicand += &values[i];
                }
                Value::sqrt_of(radicand)
            }
            Oracle::ScaledSum { terms, .. } => {
                let mut sum = Rat::zero();
                for (coef, term) in terms {
                    sum += coef * term.eval_rat(s);
                }
                Value::Rational(sum)
            }
            Oracle::Hard(spec) => Value::Rational(spec.eval(s)),
        }
    }

    pub fn eval_rational(&self, s: Mask) -> Option<Rat> {
        match self.eval(s) {
            Value::Rational(r) => Some(r),
            Value::Sqrt(_) => None,
        }
    }

    /// Evaluation for oracles already known to be rational-valued.
    pub(crate) fn eval_rat(&self, s: Mask) -> Rat {
        self.eval(s).expect_rational()
    }
}

/// A 2^n table of rational values; the workhorse behind every exhaustive
/// scan. Built once per operation so repeated lookups are O(1).
#[derive(Clone, Debug)]
pub struct DenseTable {
    n: usize,
    values: Vec<Rat>,
}

impl DenseTable {
    pub fn from_oracle(f: &Oracle, guard: Guard) -> Result<DenseTable> {
        if !f.is_rational_valued() {
            return Err(Error::IrrationalOracle);
        }
        let n = f.ground_set_size();
        guard.admit(n)?;
        let values = all_masks(n).map(|s| f.eval_rat(s)).collect();
        Ok(DenseTable { n, values })
    }

    pub fn from_values(n: usize, values: Vec<Rat>) -> DenseTable {
        debug_assert_eq!(values.len(), 1 << n);
        DenseTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, s: Mask) -> &Rat {
        &self.values[s.index()]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn into_oracle(self) -> Oracle {
        Oracle::Table {
            n: self.n,
            values: self.values,
        }
    }

    /// Evaluation of the contraction of this function: element i of the
    /// contracted ground set stands for `parts[i]`, a disjoint union of
    /// original elements.
    pub fn eval_contracted(&self, parts: &[Mask], s: Mask) -> &Rat {
        let mut expanded = Mask::EMPTY;
        for i in s.elements() {
            expanded = expanded.union(parts[i]);
        }
        self.value(expanded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn budgeted_1111_2() -> Oracle {
        Oracle::budgeted_additive(vec![rat(1), rat(1), rat(1), rat(1)], rat(2)).unwrap()
    }

    #[test]
    fn budgeted_additive_matches_definition() {
        let f = budgeted_1111_2();
        assert_eq!(f.eval_rat(Mask::from_elements(&[0, 1, 2])), rat(2));
        assert_eq!(f.eval_rat(Mask::singleton(0)), rat(1));
        assert_eq!(f.eval_rat(Mask::full(4)), rat(2));
        assert_eq!(f.eval_rat(Mask::EMPTY), rat(0));
    }

    #[test]
    fn coverage_and_hitting_agree_on_shared_point() {
        let cov = Oracle::coverage(
            CoverageSystem::new(1, vec![rat(1)], vec![vec![0], vec![0]]).unwrap(),
        )
        .unwrap();
        let hit = Oracle::hitting(2, vec![(Mask::from_elements(&[0, 1]), rat(1))]).unwrap();
        for s in all_masks(2) {
            assert_eq!(cov.eval_rat(s), hit.eval_rat(s));
        }
        assert_eq!(cov.eval_rat(Mask::singleton(0)), rat(1));
        assert_eq!(cov.eval_rat(Mask::full(2)), rat(1));
    }

    #[test]
    fn hitting_sums_intersecting_sets() {
        let f = Oracle::hitting(
            2,
            vec![
                (Mask::from_elements(&[0, 1]), rat(1)),
                (Mask::singleton(0), ratio(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(f.eval_rat(Mask::singleton(1)), rat(1));
        assert_eq!(f.eval_rat(Mask::singleton(0)), ratio(3, 2));
        assert_eq!(f.eval_rat(Mask::EMPTY), rat(0));
    }

    #[test]
    fn hitting_rejects_empty_set_and_negative_weight() {
        assert!(matches!(
            Oracle::hitting(2, vec![(Mask::EMPTY, rat(1))]),
            Err(Error::EmptyHittingSet)
        ));
        assert!(Oracle::hitting(2, vec![(Mask::singleton(0), rat(-1))]).is_err());
    }

    #[test]
    fn directed_cut_boundaries() {
        let g = WeightedDigraph::from_arcs(3, vec![(0, 1, rat(5)), (2, 1, rat(2))]).unwrap();
        let f = Oracle::directed_cut(g);
        assert_eq!(f.eval_rat(Mask::EMPTY), rat(0));
        assert_eq!(f.eval_rat(Mask::full(3)), rat(0));
    }

    #[test]
    fn uniform_profile_depends_only_on_cardinality() {
        let f = Oracle::uniform_profile(vec![rat(0), rat(1), ratio(3, 2), ratio(7, 4)]).unwrap();
        assert_eq!(f.eval_rat(Mask::singleton(2)), rat(1));
        assert_eq!(f.eval_rat(Mask::from_elements(&[0, 2])), ratio(3, 2));
        assert!(Oracle::uniform_profile(vec![rat(1), rat(1)]).is_err());
    }

    #[test]
    fn sqrt_modular_value_semantics() {
        let g = Oracle::sqrt_modular(vec![rat(1), rat(1), rat(1), rat(1)]).unwrap();
        let v = g.eval(Mask::from_elements(&[0, 1]));
        assert_eq!(v, Value::Sqrt(rat(2)));
        // sqrt(2) <= 3/2 because 2 <= 9/4
        assert!(v.le_rat(&ratio(3, 2)));
        assert!(!v.le_rat(&ratio(7, 5)));
        // perfect squares canonicalize
        let g4 = Oracle::sqrt_modular(vec![rat(4)]).unwrap();
        assert_eq!(g4.eval(Mask::singleton(0)), Value::Rational(rat(2)));
        assert_eq!(
            Value::sqrt_of(ratio(9, 4)),
            Value::Rational(ratio(3, 2))
        );
        // zero coefficients give the zero function
        let z = Oracle::sqrt_modular(vec![rat(0), rat(0)]).unwrap();
        assert_eq!(z.eval(Mask::full(2)), Value::Rational(rat(0)));
    }

    #[test]
    fn value_ordering_mixes_exactly() {
        let root2 = Value::sqrt_of(rat(2));
        assert!(root2 > Value::Rational(ratio(7, 5)));
        assert!(root2 < Value::Rational(ratio(3, 2)));
        assert!(root2 < Value::sqrt_of(rat(3)));
        assert!(Value::Rational(rat(-1)) < root2);
    }

    #[test]
    fn scaled_sum_is_exact_linear_combination() {
        let f = budgeted_1111_2();
        let g = Oracle::uniform_profile(vec![rat(0), rat(1), rat(1), rat(1), rat(1)]).unwrap();
        let sum = Oracle::scaled_sum(4, vec![(ratio(1, 3), f.clone()), (rat(2), g.clone())]).unwrap();
        for s in all_masks(4) {
            assert_eq!(
                sum.eval_rat(s),
                ratio(1, 3) * f.eval_rat(s) + rat(2) * g.eval_rat(s)
            );
        }
    }

    #[test]
    fn scaled_sum_rejects_sqrt_terms() {
        let g = Oracle::sqrt_modular(vec![rat(1)]).unwrap();
        assert!(matches!(
            Oracle::scaled_sum(1, vec![(rat(1), g)]),
            Err(Error::SqrtInScaledSum)
        ));
    }

    #[test]
    fn build_rejections() {
        assert!(matches!(
            Oracle::table(2, vec![rat(0), rat(1), rat(1), rat(-1)]),
            Err(Error::NegativeValue { .. })
        ));
        assert!(matches!(
            Oracle::table(2, vec![rat(0)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Oracle::budgeted_additive(vec![rat(1); 31], rat(1)),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn hard_instances_match_their_case_definitions() {
        let a = Mask::from_elements(&[0, 1]);
        let general = Oracle::hard(HardSpec::General { n: 4, a_set: a }).unwrap();
        assert_eq!(general.eval_rat(Mask::singleton(0)), rat(1));
        assert_eq!(general.eval_rat(Mask::from_elements(&[2, 3])), rat(0));
        assert_eq!(general.eval_rat(Mask::full(4)), rat(0));
        assert_eq!(general.eval_rat(Mask::EMPTY), rat(0));

        let symmetric = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        assert_eq!(symmetric.eval_rat(Mask::singleton(2)), rat(1));
        assert_eq!(symmetric.eval_rat(Mask::EMPTY), rat(0));
        assert_eq!(symmetric.eval_rat(Mask::full(4)), rat(0));

        let budgeted = Oracle::hard(HardSpec::BudgetedUniform { k: 2 }).unwrap();
        assert_eq!(budgeted.ground_set_size(), 4);
        assert_eq!(budgeted.eval_rat(Mask::from_elements(&[0, 1, 2])), rat(2));
        assert_eq!(budgeted.eval_rat(Mask::singleton(3)), rat(1));
    }

    #[test]
    fn hard_spec_validation() {
        assert!(Oracle::hard(HardSpec::General {
            n: 3,
            a_set: Mask::singleton(0)
        })
        .is_err());
        assert!(Oracle::hard(HardSpec::General {
            n: 4,
            a_set: Mask::EMPTY
        })
        .is_err());
        assert!(Oracle::hard(HardSpec::General {
            n: 4,
            a_set: Mask::full(4)
        })
        .is_err());
        assert!(Oracle::hard(HardSpec::BudgetedUniform { k: 0 }).is_err());
        assert!(Oracle::hard(HardSpec::BudgetedUniform { k: 6 }).is_err());
    }

    #[test]
    fn dense_table_round_trip() {
        let f = budgeted_1111_2();
        let table = DenseTable::from_oracle(&f, Guard::default()).unwrap();
        for s in all_masks(4) {
            assert_eq!(table.value(s), &f.eval_rat(s));
        }
        let guard = Guard::new(3);
        assert!(matches!(
            DenseTable::from_oracle(&f, guard),
            Err(Error::ExhaustiveGuardExceeded { .. })
        ));
    }

    #[test]
    fn contracted_evaluation_unions_parts() {
        let f = budgeted_1111_2();
        let table = DenseTable::from_oracle(&f, Guard::default()).unwrap();
        let parts = vec![Mask::from_elements(&[0, 3]), Mask::singleton(1)];
        assert_eq!(
            table.eval_contracted(&parts, Mask::singleton(0)),
            &rat(2)
        );
        assert_eq!(table.eval_contracted(&parts, Mask::full(2)), &rat(2));
        assert_eq!(table.eval_contracted(&parts, Mask::EMPTY), &rat(0));
    }
}

//! Coverage approximations of budgeted additive functions.
//!
//! Both constructions lift the rational input (a, B) by the least common
//! multiple L of all denominators to integers (a', B'), build over the
//! integers, and divide weights back by L.

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::oracle::{CoverageSystem, DenseTable, Guard, Oracle};
use crate::rational::{pow_rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Integer lift of a budgeted additive function.
struct Lifted {
    values: Vec<BigInt>,
    budget: BigInt,
    lift: BigInt,
}

fn lift_budgeted(f: &Oracle) -> Result<Lifted> {
    let (values, budget) = f.as_budgeted_additive().ok_or(Error::NotBudgetedAdditive)?;
    if !budget.is_positive() {
        return Err(Error::ZeroBudget);
    }
    if values.iter().all(|a| a.is_zero()) {
        return Err(Error::AllValuesZero);
    }
    let mut lift = budget.denom().clone();
    for a in &values {
        lift = lift.lcm(a.denom());
    }
    let scale = Rat::from_integer(lift.clone());
    let to_int = |r: &Rat| -> BigInt {
        let lifted = r * &scale;
        debug_assert!(lifted.denom().is_one());
        lifted.numer().clone()
    };
    Ok(Lifted {
        values: values.iter().map(to_int).collect(),
        budget: to_int(&budget),
        lift,
    })
}

/// The closed-form expectation of the randomized coverage construction:
/// g'(S) = (1/L) B' (1 - (1 - 1/B')^{V'(S)}) with V'(S) the lifted additive
/// value of S. Satisfies rho(B') f <= g' <= f with rho(B') = 1 - (1-1/B')^B'.
#[derive(Clone, Debug)]
pub struct ExpectedCoverage {
    lifted_values: Vec<BigInt>,
    lifted_budget: BigInt,
    lift: BigInt,
    miss: Rat,
    rho: Rat,
}

impl ExpectedCoverage {
    pub fn ground_set_size(&self) -> usize {
        self.lifted_values.len()
    }

    pub fn lifted_values(&self) -> &[BigInt] {
        &self.lifted_values
    }

    pub fn lifted_budget(&self) -> &BigInt {
        &self.lifted_budget
    }

    pub fn lift(&self) -> &BigInt {
        &self.lift
    }

    /// rho(B') = 1 - (1 - 1/B')^{B'}.
    pub fn rho(&self) -> &Rat {
        &self.rho
    }

    /// The upper-approximation factor 1/rho(B').
    pub fn scale(&self) -> Rat {
        self.rho.recip()
    }

    fn lifted_value(&self, s: Mask) -> u32 {
        let mut v = BigInt::zero();
        for i in s.elements() {
            v += &self.lifted_values[i];
        }
        v.to_u32().expect("lifted additive value fits u32")
    }

    /// Exact expectation g'(S).
    pub fn g_prime(&self, s: Mask) -> Rat {
        let v = self.lifted_value(s);
        let uncovered = pow_rat(&self.miss, u64::from(v));
        Rat::new(self.lifted_budget.clone(), self.lift.clone()) * (Rat::one() - uncovered)
    }

    /// The scaled upper approximator h(S) = g'(S) / rho(B') with
    /// f(S) <= h(S) <= (1/rho) f(S).
    pub fn upper(&self, s: Mask) -> Rat {
        self.g_prime(s) / &self.rho
    }

    /// Tabulates g' as an oracle (it is a coverage function).
    pub fn g_prime_oracle(&self, guard: Guard) -> Result<Oracle> {
        let n = self.ground_set_size();
        guard.admit(n)?;
        let values = crate::mask::all_masks(n).map(|s| self.g_prime(s)).collect();
        Ok(DenseTable::from_values(n, values).into_oracle())
    }
}

/// Closed-form expected coverage approximation of a budgeted additive
/// oracle.
pub fn budgeted_expected_coverage(f: &Oracle) -> Result<ExpectedCoverage> {
    let lifted = lift_budgeted(f)?;
    let budget_u32 = lifted
        .budget
        .to_u32()
        .ok_or(Error::LiftedBudgetTooLarge)?;
    let total: BigInt = lifted.values.iter().sum();
    if total.to_u32().is_none() {
        return Err(Error::LiftedBudgetTooLarge);
    }
    let miss = Rat::new(&lifted.budget - BigInt::one(), lifted.budget.clone());
    let rho = Rat::one() - pow_rat(&miss, u64::from(budget_u32));
    Ok(ExpectedCoverage {
        lifted_values: lifted.values,
        lifted_budget: lifted.budget,
        lift: lifted.lift,
        miss,
        rho,
    })
}

/// One sample of the randomized construction: a' independent uniform draws
/// per element from an auxiliary universe of B' points, collapsed to sets,
/// with every point weighing 1/L. Satisfies g(S) <= f(S) for every seed, and
/// g' is the exact expectation over seeds.
pub fn budgeted_sampled_coverage(f: &Oracle, seed: u64) -> Result<CoverageSystem> {
    let lifted = lift_budgeted(f)?;
    let universe = lifted
        .budget
        .to_usize()
        .filter(|&b| b <= (1 << 22))
        .ok_or(Error::LiftedBudgetTooLarge)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(lifted.values.len());
    for a in &lifted.values {
        let draws = a.to_usize().ok_or(Error::LiftedBudgetTooLarge)?;
        let mut set = Vec::with_capacity(draws);
        for _ in 0..draws {
            set.push(rng.gen_range(0..universe));
        }
        sets.push(set);
    }
    let weight = Rat::new(BigInt::one(), lifted.lift.clone());
    CoverageSystem::new(universe, vec![weight; universe], sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::all_masks;
    use crate::rational::{rat, ratio};

    fn unit_budgeted(n: usize, budget: i64) -> Oracle {
        Oracle::budgeted_additive(vec![rat(1); n], rat(budget)).unwrap()
    }

    #[test]
    fn closed_form_matches_hand_computation() {
        let f = unit_budgeted(4, 2);
        let g = budgeted_expected_coverage(&f).unwrap();
        assert_eq!(g.g_prime(Mask::singleton(0)), rat(1));
        assert_eq!(g.g_prime(Mask::from_elements(&[0, 1])), ratio(3, 2));
        assert_eq!(g.scale(), ratio(4, 3));
        assert_eq!(g.rho(), &ratio(3, 4));
    }

    #[test]
    fn budget_one_reproduces_f_exactly() {
        let f = Oracle::budgeted_additive(vec![rat(2), rat(1), rat(3)], rat(1)).unwrap();
        let g = budgeted_expected_coverage(&f).unwrap();
        assert_eq!(g.scale(), rat(1));
        for s in all_masks(3) {
            assert_eq!(g.g_prime(s), f.eval_rational(s).unwrap());
        }
    }

    #[test]
    fn nine_ones_budget_three_worst_ratio() {
        // the k = 3 hard instance: worst f/g' ratio is 27/19, at |S| = 3
        let f = unit_budgeted(9, 3);
        let g = budgeted_expected_coverage(&f).unwrap();
        let mut worst = rat(0);
        let mut worst_mask = Mask::EMPTY;
        for s in all_masks(9) {
            if s.is_empty() {
                continue;
            }
            let ratio = f.eval_rational(s).unwrap() / g.g_prime(s);
            if ratio > worst {
                worst = ratio;
                worst_mask = s;
            }
        }
        assert_eq!(worst, ratio(27, 19));
        assert_eq!(worst_mask.len(), 3);
    }

    #[test]
    fn rational_inputs_lift_exactly() {
        let f = Oracle::budgeted_additive(vec![ratio(1, 2), ratio(3, 2), rat(1)], ratio(3, 2))
            .unwrap();
        let g = budgeted_expected_coverage(&f).unwrap();
        // L = lcm(2,2,1,2) = 2, so a' = (1,3,2), B' = 3
        assert_eq!(g.lift(), &BigInt::from(2));
        assert_eq!(g.lifted_budget(), &BigInt::from(3));
        for s in all_masks(3) {
            let fval = f.eval_rational(s).unwrap();
            let gval = g.g_prime(s);
            assert!(gval <= fval, "upper violated at {s:?}");
            assert!(g.rho() * &fval <= gval, "lower violated at {s:?}");
        }
    }

    #[test]
    fn sampling_stays_below_f_and_single_point_is_exact() {
        let f = Oracle::budgeted_additive(vec![rat(1)], rat(1)).unwrap();
        let cov = budgeted_sampled_coverage(&f, 7).unwrap();
        assert_eq!(cov.sets(), &[vec![0]]);
        let g = Oracle::coverage(cov).unwrap();
        assert_eq!(g.eval_rational(Mask::singleton(0)).unwrap(), rat(1));

        let f = unit_budgeted(4, 2);
        for seed in [0, 1, 42] {
            let cov = budgeted_sampled_coverage(&f, seed).unwrap();
            let g = Oracle::coverage(cov).unwrap();
            for s in all_masks(4) {
                assert!(
                    g.eval_rational(s).unwrap() <= f.eval_rational(s).unwrap(),
                    "seed {seed} at {s:?}"
                );
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let f = unit_budgeted(4, 2);
        let a = budgeted_sampled_coverage(&f, 42).unwrap();
        let b = budgeted_sampled_coverage(&f, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let zero_budget = Oracle::budgeted_additive(vec![rat(1)], rat(0)).unwrap();
        assert!(matches!(
            budgeted_expected_coverage(&zero_budget),
            Err(Error::ZeroBudget)
        ));
        let all_zero = Oracle::budgeted_additive(vec![rat(0), rat(0)], rat(1)).unwrap();
        assert!(matches!(
            budgeted_sampled_coverage(&all_zero, 0),
            Err(Error::AllValuesZero)
        ));
        let not_budgeted = Oracle::table(1, vec![rat(0), rat(1)]).unwrap();
        assert!(matches!(
            budgeted_expected_coverage(&not_budgeted),
            Err(Error::NotBudgetedAdditive)
        ));
    }
}

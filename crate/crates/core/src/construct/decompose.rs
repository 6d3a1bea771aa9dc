//! Decomposing concave cardinality profiles into uniform matroid ranks, and
//! concave-of-modular compositions into budgeted additive functions.

use crate::error::{Error, Result};
use crate::mask::{all_masks, Mask};
use crate::oracle::{Guard, Oracle};
use crate::rational::{rat, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

/// One component of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompTerm {
    /// min(|S|, rank) over a ground set of size n.
    UniformRank { n: usize, rank: usize },
    /// min(sum of values over S, budget).
    BudgetedAdditive { values: Vec<Rat>, budget: Rat },
}

impl DecompTerm {
    pub fn eval(&self, s: Mask) -> Rat {
        match self {
            DecompTerm::UniformRank { rank, .. } => rat(s.len().min(*rank) as i64),
            DecompTerm::BudgetedAdditive { values, budget } => {
                let mut sum = Rat::zero();
                for i in s.elements() {
                    sum += &values[i];
                }
                sum.min(budget.clone())
            }
        }
    }

    pub fn to_oracle(&self) -> Result<Oracle> {
        match self {
            DecompTerm::UniformRank { n, rank } => {
                Oracle::budgeted_additive(vec![rat(1); *n], rat(*rank as i64))
            }
            DecompTerm::BudgetedAdditive { values, budget } => {
                Oracle::budgeted_additive(values.clone(), budget.clone())
            }
        }
    }
}

/// An exact nonnegative combination reconstructing the input function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Coefficients alpha_1..alpha_n (index 0 corresponds to rank 1).
    pub alphas: Vec<Rat>,
    /// The nonzero terms, in ascending rank order.
    pub terms: Vec<(Rat, DecompTerm)>,
    /// Set when the literature's printed alpha_1 = 2 f_2 - f_1 differs from
    /// the telescoped alpha_1 = 2 f_1 - f_2 actually used.
    pub printed_alpha1_differs: bool,
}

impl Decomposition {
    pub fn eval(&self, s: Mask) -> Rat {
        let mut sum = Rat::zero();
        for (coef, term) in &self.terms {
            sum += coef * term.eval(s);
        }
        sum
    }

    /// The decomposition as a scaled sum of budgeted additive oracles.
    pub fn to_oracle(&self, n: usize) -> Result<Oracle> {
        let terms = self
            .terms
            .iter()
            .map(|(coef, term)| Ok((coef.clone(), term.to_oracle()?)))
            .collect::<Result<Vec<_>>>()?;
        Oracle::scaled_sum(n, terms)
    }
}

/// Telescoped second-difference coefficients of a concave nondecreasing
/// profile f_0..f_n with f_0 = 0: alpha_j = d_j - d_{j+1} for j < n and
/// alpha_n = d_n, where d_j = f_j - f_{j-1}. Returns the coefficients and
/// whether the printed alpha_1 variant would have disagreed.
fn profile_alphas(profile: &[Rat]) -> Result<(Vec<Rat>, bool)> {
    let n = profile.len() - 1;
    if !profile[0].is_zero() {
        return Err(Error::ProfileNotZeroBased);
    }
    for j in 0..n {
        if profile[j + 1] < profile[j] {
            return Err(Error::NotMonotoneProfile { index: j + 1 });
        }
    }
    for j in 1..n {
        // concavity: d_{j+1} <= d_j
        if &profile[j + 1] - &profile[j] > &profile[j] - &profile[j - 1] {
            return Err(Error::NotConcaveProfile { index: j + 1 });
        }
    }
    let mut alphas = Vec::with_capacity(n);
    for j in 1..=n {
        let d_j = &profile[j] - &profile[j - 1];
        let alpha = if j == n {
            d_j
        } else {
            d_j - (&profile[j + 1] - &profile[j])
        };
        debug_assert!(!alpha.is_negative());
        alphas.push(alpha);
    }
    let printed_differs = n >= 2 && {
        let printed = rat(2) * &profile[2] - &profile[1];
        printed != alphas[0]
    };
    // alpha reconstructs the profile at every cardinality
    for (j, f_j) in profile.iter().enumerate() {
        let mut sum = Rat::zero();
        for (idx, alpha) in alphas.iter().enumerate() {
            sum += alpha * rat(j.min(idx + 1) as i64);
        }
        if &sum != f_j {
            return Err(Error::ReconstructionFailed);
        }
    }
    Ok((alphas, printed_differs))
}

/// Writes a uniform (cardinality-only) profile as a nonnegative combination
/// of uniform matroid rank functions, exactly.
pub fn decompose_uniform_profile(f: &Oracle) -> Result<Decomposition> {
    let profile = match f {
        Oracle::UniformProfile { profile } => profile,
        _ => {
            return Err(Error::DimensionMismatch {
                context: "decompose_uniform_profile expects a uniform profile oracle".into(),
            })
        }
    };
    let n = profile.len() - 1;
    let (alphas, printed_alpha1_differs) = profile_alphas(profile)?;
    let terms = alphas
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(idx, a)| (a.clone(), DecompTerm::UniformRank { n, rank: idx + 1 }))
        .collect();
    Ok(Decomposition {
        alphas,
        terms,
        printed_alpha1_differs,
    })
}

/// Writes f(S) = g(sum of a_i over S), with g concave nondecreasing on
/// 0..=m and a nonnegative integers summing to m, as a nonnegative
/// combination of budgeted additive functions. The reconstruction is
/// verified on every subset before returning.
pub fn concave_modular_to_budgeted(
    g_profile: &[Rat],
    values: &[Rat],
    guard: Guard,
) -> Result<Decomposition> {
    let n = values.len();
    guard.admit(n)?;
    if n == 0 {
        return Err(Error::DimensionMismatch {
            context: "empty value vector".into(),
        });
    }
    let mut int_values = Vec::with_capacity(n);
    for (i, a) in values.iter().enumerate() {
        if a.is_negative() {
            return Err(Error::NegativeValue {
                context: "modular element value",
            });
        }
        match a.to_integer().to_usize() {
            Some(v) if a.is_integer() => int_values.push(v),
            _ => return Err(Error::NonIntegerValues { index: i }),
        }
    }
    let m: usize = int_values.iter().sum();
    if g_profile.len() != m + 1 {
        return Err(Error::DimensionMismatch {
            context: format!(
                "profile has {} entries but the values sum to {m}",
                g_profile.len()
            ),
        });
    }
    let (alphas, printed_alpha1_differs) = profile_alphas(g_profile)?;
    let terms: Vec<(Rat, DecompTerm)> = alphas
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(idx, a)| {
            (
                a.clone(),
                DecompTerm::BudgetedAdditive {
                    values: values.to_vec(),
                    budget: rat((idx + 1) as i64),
                },
            )
        })
        .collect();
    let decomposition = Decomposition {
        alphas,
        terms,
        printed_alpha1_differs,
    };
    for s in all_masks(n) {
        let weight: usize = s.elements().map(|i| int_values[i]).sum();
        if decomposition.eval(s) != g_profile[weight] {
            return Err(Error::ReconstructionFailed);
        }
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn profile_oracle(values: &[Rat]) -> Oracle {
        Oracle::uniform_profile(values.to_vec()).unwrap()
    }

    #[test]
    fn rank_two_profile_is_a_single_rank_term() {
        let f = profile_oracle(&[rat(0), rat(1), rat(2), rat(2)]);
        let d = decompose_uniform_profile(&f).unwrap();
        assert_eq!(d.alphas, vec![rat(0), rat(1), rat(0)]);
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].1, DecompTerm::UniformRank { n: 3, rank: 2 });
        // printed variant would give alpha_1 = 2 f_2 - f_1 = 3, not 0
        assert!(d.printed_alpha1_differs);
    }

    #[test]
    fn printed_alpha1_agrees_when_first_increments_match() {
        let f = profile_oracle(&[rat(0), rat(1), rat(1), rat(1)]);
        let d = decompose_uniform_profile(&f).unwrap();
        assert_eq!(d.alphas, vec![rat(1), rat(0), rat(0)]);
        assert!(!d.printed_alpha1_differs);
    }

    #[test]
    fn fractional_profile_coefficients() {
        let f = profile_oracle(&[rat(0), rat(1), ratio(3, 2), ratio(7, 4)]);
        let d = decompose_uniform_profile(&f).unwrap();
        assert_eq!(d.alphas, vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
        for s in all_masks(3) {
            assert_eq!(d.eval(s), f.eval_rational(s).unwrap());
        }
        assert!(d.printed_alpha1_differs);
    }

    #[test]
    fn linear_profile_is_modular() {
        let c = ratio(5, 3);
        let profile: Vec<Rat> = (0..=4).map(|j| rat(j) * &c).collect();
        let d = decompose_uniform_profile(&profile_oracle(&profile)).unwrap();
        assert_eq!(d.alphas[3], c);
        assert!(d.alphas[..3].iter().all(|a| a.is_zero()));
    }

    #[test]
    fn profile_validation_errors() {
        let dec = profile_oracle(&[rat(0), rat(2), rat(1)]);
        assert!(matches!(
            decompose_uniform_profile(&dec),
            Err(Error::NotMonotoneProfile { index: 2 })
        ));
        let convex = profile_oracle(&[rat(0), rat(1), rat(3)]);
        assert!(matches!(
            decompose_uniform_profile(&convex),
            Err(Error::NotConcaveProfile { index: 2 })
        ));
    }

    #[test]
    fn single_element_profile() {
        let f = profile_oracle(&[rat(0), ratio(2, 7)]);
        let d = decompose_uniform_profile(&f).unwrap();
        assert_eq!(d.alphas, vec![ratio(2, 7)]);
    }

    #[test]
    fn concave_modular_reconstructs_budgeted_additive() {
        // a = (2,1), g = min(t, 2): one term, the budgeted additive itself
        let g: Vec<Rat> = vec![rat(0), rat(1), rat(2), rat(2)];
        let a = vec![rat(2), rat(1)];
        let d = concave_modular_to_budgeted(&g, &a, Guard::default()).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].0, rat(1));
        let reference = Oracle::budgeted_additive(a, rat(2)).unwrap();
        for s in all_masks(2) {
            assert_eq!(d.eval(s), reference.eval_rational(s).unwrap());
        }
    }

    #[test]
    fn identity_profile_is_one_modular_term() {
        let g: Vec<Rat> = (0..=3).map(rat).collect();
        let a = vec![rat(1), rat(1), rat(1)];
        let d = concave_modular_to_budgeted(&g, &a, Guard::default()).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(
            d.terms[0].1,
            DecompTerm::BudgetedAdditive {
                values: a,
                budget: rat(3)
            }
        );
    }

    #[test]
    fn rational_valued_concave_profile_over_integer_weights() {
        let g: Vec<Rat> = vec![rat(0), rat(1), ratio(5, 4), ratio(3, 2), ratio(3, 2)];
        let a = vec![rat(1), rat(1), rat(2)];
        let d = concave_modular_to_budgeted(&g, &a, Guard::default()).unwrap();
        assert!(d.alphas.iter().all(|x| !x.is_negative()));
        for s in all_masks(3) {
            let weight: usize = s.elements().map(|i| if i == 2 { 2 } else { 1 }).sum();
            assert_eq!(d.eval(s), g[weight]);
        }
    }

    #[test]
    fn non_integer_values_are_rejected() {
        let g: Vec<Rat> = vec![rat(0), rat(1)];
        let a = vec![ratio(1, 2), ratio(1, 2)];
        assert!(matches!(
            concave_modular_to_budgeted(&g, &a, Guard::default()),
            Err(Error::NonIntegerValues { index: 0 })
        ));
    }
}

//! Seeded random instance generators for the property suites.
//!
//! All generators run on a counter-based ChaCha stream so any instance is
//! reproducible from its seed alone.

use crate::graph::{WeightedDigraph, WeightedGraph};
use crate::mask::Mask;
use crate::oracle::{CoverageSystem, Oracle};
use crate::rational::{rat, Rat};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonnegative rational with numerator 0..=max_num and denominator drawn
/// from 1..=max_den. Small parts keep integer lifts and powers cheap.
pub fn small_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    let num = rng.gen_range(0..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rat::new(num.into(), den.into())
}

fn positive_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    let num = rng.gen_range(1..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rat::new(num.into(), den.into())
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(n).expect("valid node count");
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.4) {
                g.add_arc(u, v, small_rat(rng, 4, 3)).unwrap();
            }
        }
    }
    g
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    let mut g = WeightedGraph::new(n).expect("valid node count");
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v, small_rat(rng, 4, 3)).unwrap();
            }
        }
    }
    g
}

/// Nonnegative combination of 1..=3 directed cut functions: submodular with
/// zero boundary values.
pub fn random_directed_cut_sum(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| (positive_rat(&mut rng, 3, 2), Oracle::directed_cut(random_digraph(&mut rng, n))))
        .collect();
    Oracle::scaled_sum(n, terms).expect("cut sums are valid")
}

/// Nonnegative combination of 1..=3 undirected cut functions: symmetric
/// submodular with zero boundary values.
pub fn random_symmetric_cut_sum(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| {
            (
                positive_rat(&mut rng, 3, 2),
                Oracle::undirected_cut(random_graph(&mut rng, n)),
            )
        })
        .collect();
    Oracle::scaled_sum(n, terms).expect("cut sums are valid")
}

/// Budgeted additive oracle with small rational values and a positive
/// budget. At least one element value is positive.
pub fn random_budgeted_additive(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let mut values: Vec<Rat> = (0..n).map(|_| small_rat(&mut rng, 4, 3)).collect();
    if values.iter().all(Rat::is_zero) {
        values[0] = rat(1);
    }
    let budget = positive_rat(&mut rng, 6, 3);
    Oracle::budgeted_additive(values, budget).expect("valid budgeted additive")
}

/// Coverage system over an auxiliary universe of up to 2n points.
pub fn random_coverage_system(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let universe = rng.gen_range(1..=(2 * n).max(2));
    let weights = (0..universe).map(|_| small_rat(&mut rng, 4, 3)).collect();
    let sets = (0..n)
        .map(|_| (0..universe).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    Oracle::coverage(CoverageSystem::new(universe, weights, sets).unwrap())
        .expect("valid coverage system")
}

/// Mixed submodular ensemble member: a nonnegative combination of directed
/// cuts, budgeted additive functions, and coverage systems.
pub fn random_submodular_mix(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let mut terms = Vec::new();
    for kind_seed in 0..rng.gen_range(1..=3u64) {
        let coef = positive_rat(&mut rng, 3, 2);
        let sub_seed = seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(kind_seed + 1);
        let term = match rng.gen_range(0..3) {
            0 => Oracle::directed_cut(random_digraph(&mut rng, n)),
            1 => random_budgeted_additive(sub_seed, n),
            _ => random_coverage_system(sub_seed, n),
        };
        terms.push((coef, term));
    }
    Oracle::scaled_sum(n, terms).expect("valid mix")
}

/// Concave nondecreasing profile f_0..f_n with f_0 = 0, built from sorted
/// nonincreasing increments.
pub fn random_concave_profile(seed: u64, n: usize) -> Vec<Rat> {
    let mut rng = rng(seed);
    let mut increments: Vec<Rat> = (0..n).map(|_| small_rat(&mut rng, 6, 4)).collect();
    increments.sort_by(|a, b| b.cmp(a));
    let mut profile = Vec::with_capacity(n + 1);
    let mut acc = Rat::zero();
    profile.push(acc.clone());
    for d in increments {
        acc += d;
        profile.push(acc.clone());
    }
    profile
}

/// Nonempty random subsets of a ground set of size n.
pub fn random_subsets(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Mask> {
    (0..count)
        .map(|_| {
            let bits = rng.gen_range(1..(1u64 << n)) as u32;
            Mask(bits)
        })
        .collect()
}

/// Hitting-weight oracle with a random positive support.
pub fn random_hitting(seed: u64, n: usize) -> Oracle {
    let mut rng = rng(seed);
    let support = rng.gen_range(1..=(1usize << n).min(8));
    let weights = (0..support)
        .map(|_| {
            let bits = rng.gen_range(1..(1u64 << n)) as u32;
            (Mask(bits), positive_rat(&mut rng, 5, 4))
        })
        .collect::<Vec<_>>();
    Oracle::hitting(n, weights).expect("valid hitting weights")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_directed_cut_sum(7, 5), random_directed_cut_sum(7, 5));
        assert_eq!(random_budgeted_additive(7, 5), random_budgeted_additive(7, 5));
        assert_eq!(random_coverage_system(7, 5), random_coverage_system(7, 5));
        assert_eq!(random_submodular_mix(7, 5), random_submodular_mix(7, 5));
        assert_eq!(random_concave_profile(7, 5), random_concave_profile(7, 5));
    }

    #[test]
    fn concave_profiles_are_concave_and_monotone() {
        for seed in 0..20 {
            let p = random_concave_profile(seed, 8);
            for j in 1..p.len() {
                assert!(p[j] >= p[j - 1]);
                if j + 1 < p.len() {
                    assert!(&p[j + 1] - &p[j] <= &p[j] - &p[j - 1]);
                }
            }
        }
    }
}

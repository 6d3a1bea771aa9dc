//! Exact optimum of the symmetrized primal LP for the uniform budgeted
//! instance f_k on n = k^2 elements.
//!
//! Variables are x_1..x_n >= 0 (the common hitting weight of every subset of
//! each cardinality) and alpha. For every cardinality s in [n]:
//!
//!   sum_j x_j cov(s, j) <= f_k(s)              (upper)
//!   alpha f_k(s) - sum_j x_j cov(s, j) <= 0    (lower)
//!
//! with cov(s, j) = C(n,j) - C(n-s,j), the number of j-subsets meeting a
//! fixed s-set. The optimum alpha_k is found by enumerating every basic
//! point: each choice of n+1 active constraints from the 2n inequalities and
//! the n nonnegativity constraints yields one square rational system, and
//! the feasible maximum over all of them is exact. The feasible region is
//! pointed (the nonnegativity normals plus any lower row span) and alpha is
//! bounded by 1, so an optimal basic point exists.
//!
//! Arithmetic is fraction-free elimination over i128 — reduced entries are
//! minors of the (small) integer constraint matrix, within i128 for every
//! admissible n — with a checked BigInt fallback. Alpha is the last
//! variable, so each reduced system yields its candidate objective before
//! any back substitution; systems that cannot beat the incumbent are
//! discarded unsolved.

use crate::error::{Error, Result};
use crate::rational::{binomial, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Enumeration cap on the ground set n = k^2.
pub const MAX_PRIMAL_N: usize = 10;

const MAX_DIM: usize = MAX_PRIMAL_N + 1;

/// Exact optimal value and an optimal vertex of the symmetrized primal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedPrimal {
    pub k: usize,
    pub n: usize,
    /// The optimum alpha_k.
    pub alpha: Rat,
    /// Symmetric weights attaining it; x[j-1] is the weight shared by every
    /// subset of cardinality j.
    pub x: Vec<Rat>,
}

#[derive(Clone, Debug)]
struct Constraint {
    /// The constraint is coeffs . (x_1..x_n, alpha) <= rhs.
    coeffs: Vec<i64>,
    rhs: i64,
}

fn build_constraints(k: usize, n: usize) -> Vec<Constraint> {
    let ni = n as i64;
    let f = |s: usize| s.min(k) as i64;
    let cov = |s: usize, j: usize| -> i64 {
        (binomial(ni, j as i64) - binomial(ni - s as i64, j as i64))
            .to_i64()
            .expect("coverage counts fit i64 for admissible n")
    };
    let mut rows = Vec::with_capacity(3 * n);
    for s in 1..=n {
        let mut coeffs: Vec<i64> = (1..=n).map(|j| cov(s, j)).collect();
        coeffs.push(0);
        rows.push(Constraint { coeffs, rhs: f(s) });
    }
    for s in 1..=n {
        let mut coeffs: Vec<i64> = (1..=n).map(|j| -cov(s, j)).collect();
        coeffs.push(f(s));
        rows.push(Constraint { coeffs, rhs: 0 });
    }
    for j in 0..n {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[j] = -1;
        rows.push(Constraint { coeffs, rhs: 0 });
    }
    rows
}

enum Reduced<T> {
    Singular,
    Overflow,
    /// Upper-triangular augmented matrix from fraction-free elimination.
    /// The last pivot is the common denominator of the solution.
    Triangular(T),
}

/// Bareiss forward elimination over i128 on the augmented system [A | b] of
/// the selected rows. Row swaps only; the variable (column) order is fixed,
/// so the final variable alpha stays last.
#[allow(clippy::needless_range_loop)]
fn forward_i128(
    rows: &[Constraint],
    sel: &[usize],
    dim: usize,
) -> Reduced<[[i128; MAX_DIM + 1]; MAX_DIM]> {
    let mut a = [[0i128; MAX_DIM + 1]; MAX_DIM];
    for (r, &idx) in sel.iter().enumerate() {
        for c in 0..dim {
            a[r][c] = rows[idx].coeffs[c] as i128;
        }
        a[r][dim] = rows[idx].rhs as i128;
    }
    let mut prev = 1i128;
    for col in 0..dim {
        let pivot_row = match (col..dim).find(|&r| a[r][col] != 0) {
            Some(r) => r,
            None => return Reduced::Singular,
        };
        if pivot_row != col {
            a.swap(pivot_row, col);
        }
        let pivot = a[col][col];
        for r in (col + 1)..dim {
            let lead = a[r][col];
            for c in (col + 1)..=dim {
                let num = match a[r][c]
                    .checked_mul(pivot)
                    .and_then(|x| lead.checked_mul(a[col][c]).and_then(|y| x.checked_sub(y)))
                {
                    Some(v) => v,
                    None => return Reduced::Overflow,
                };
                // exact by the Sylvester identity
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
    }
    Reduced::Triangular(a)
}

fn forward_big(rows: &[Constraint], sel: &[usize], dim: usize) -> Reduced<Vec<Vec<BigInt>>> {
    let mut a: Vec<Vec<BigInt>> = sel
        .iter()
        .map(|&idx| {
            let mut row: Vec<BigInt> = rows[idx].coeffs[..dim]
                .iter()
                .map(|&v| BigInt::from(v))
                .collect();
            row.push(BigInt::from(rows[idx].rhs));
            row
        })
        .collect();
    let mut prev = BigInt::from(1);
    for col in 0..dim {
        let pivot_row = match (col..dim).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return Reduced::Singular,
        };
        a.swap(pivot_row, col);
        for r in (col + 1)..dim {
            let lead = a[r][col].clone();
            for c in (col + 1)..=dim {
                let num = &a[r][c] * &a[col][col] - &lead * &a[col][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    Reduced::Triangular(a)
}

/// Back substitution on a Bareiss-reduced triangular system; returns the
/// solution as integer numerators over a positive common denominator.
fn back_substitute(get: impl Fn(usize, usize) -> BigInt, dim: usize) -> (Vec<BigInt>, BigInt) {
    let det = get(dim - 1, dim - 1);
    let mut nums = vec![BigInt::zero(); dim];
    for i in (0..dim).rev() {
        let mut acc = get(i, dim) * &det;
        for (j, num) in nums.iter().enumerate().take(dim).skip(i + 1) {
            acc -= get(i, j) * num;
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &get(i, i));
        debug_assert!(r.is_zero(), "fraction-free back substitution is exact");
        nums[i] = q;
    }
    if det.is_negative() {
        (nums.into_iter().map(|v| -v).collect(), -det)
    } else {
        (nums, det)
    }
}

/// num/den > best, with den > 0.
fn beats(num: &BigInt, den: &BigInt, best: &Rat) -> bool {
    num * best.denom() > best.numer() * den
}

/// Exact feasibility of z = nums/den (den > 0) against every constraint
/// outside the active set, in i128 where the numerators allow.
#[allow(clippy::needless_range_loop)]
fn feasible(rows: &[Constraint], sel_mask: u32, nums: &[BigInt], den: &BigInt) -> bool {
    let dim = nums.len();
    let small: Option<Vec<i128>> = nums.iter().map(|v| v.to_i128()).collect();
    if let (Some(small), Some(den_small)) = (small, den.to_i128()) {
        'rows: for (idx, row) in rows.iter().enumerate() {
            if sel_mask >> idx & 1 == 1 {
                continue;
            }
            let mut acc: i128 = 0;
            for c in 0..dim {
                let coef = row.coeffs[c];
                if coef == 0 {
                    continue;
                }
                match (coef as i128)
                    .checked_mul(small[c])
                    .and_then(|p| acc.checked_add(p))
                {
                    Some(v) => acc = v,
                    None => {
                        if !feasible_row_big(row, nums, den) {
                            return false;
                        }
                        continue 'rows;
                    }
                }
            }
            match (row.rhs as i128).checked_mul(den_small) {
                Some(bound) => {
                    if acc > bound {
                        return false;
                    }
                }
                None => {
                    if !feasible_row_big(row, nums, den) {
                        return false;
                    }
                }
            }
        }
        true
    } else {
        rows.iter()
            .enumerate()
            .all(|(idx, row)| sel_mask >> idx & 1 == 1 || feasible_row_big(row, nums, den))
    }
}

fn feasible_row_big(row: &Constraint, nums: &[BigInt], den: &BigInt) -> bool {
    let mut acc = BigInt::zero();
    for (c, num) in nums.iter().enumerate() {
        if row.coeffs[c] != 0 {
            acc += BigInt::from(row.coeffs[c]) * num;
        }
    }
    acc <= BigInt::from(row.rhs) * den
}

/// Exact optimum of the symmetrized primal LP, with an optimal vertex.
pub fn symmetrized_primal_solution(k: usize) -> Result<SymmetrizedPrimal> {
    if k == 0 {
        return Err(Error::BadInstanceSpec {
            reason: "k must be positive".into(),
        });
    }
    let n = k * k;
    if n > MAX_PRIMAL_N {
        return Err(Error::InstanceTooLarge {
            n,
            max: MAX_PRIMAL_N,
        });
    }
    let rows = build_constraints(k, n);
    let total = rows.len();
    let dim = n + 1;

    // the origin with alpha = 0 is feasible
    let mut best_alpha = Rat::zero();
    let mut best_x = vec![Rat::zero(); n];

    let mut sel: Vec<usize> = (0..dim).collect();
    loop {
        // a nonsingular system needs a row involving alpha, i.e. a lower row
        if sel.iter().any(|&i| i >= n && i < 2 * n) {
            let sel_mask = sel.iter().fold(0u32, |m, &i| m | 1 << i);
            match forward_i128(&rows, &sel, dim) {
                Reduced::Singular => {}
                Reduced::Triangular(a) => {
                    // candidate alpha is the last variable: a[l][dim]/a[l][l]
                    let (mut num, mut den) = (a[dim - 1][dim], a[dim - 1][dim - 1]);
                    if den < 0 {
                        num = -num;
                        den = -den;
                    }
                    if beats(&BigInt::from(num), &BigInt::from(den), &best_alpha) {
                        let (nums, den) = back_substitute(|i, j| BigInt::from(a[i][j]), dim);
                        if feasible(&rows, sel_mask, &nums, &den) {
                            best_alpha = Rat::new(nums[dim - 1].clone(), den.clone());
                            best_x = nums[..n]
                                .iter()
                                .map(|v| Rat::new(v.clone(), den.clone()))
                                .collect();
                        }
                    }
                }
                Reduced::Overflow => match forward_big(&rows, &sel, dim) {
                    Reduced::Singular => {}
                    Reduced::Overflow => unreachable!("BigInt elimination cannot overflow"),
                    Reduced::Triangular(a) => {
                        let (nums, den) = back_substitute(|i, j| a[i][j].clone(), dim);
                        if beats(&nums[dim - 1], &den, &best_alpha)
                            && feasible(&rows, sel_mask, &nums, &den)
                        {
                            best_alpha = Rat::new(nums[dim - 1].clone(), den.clone());
                            best_x = nums[..n]
                                .iter()
                                .map(|v| Rat::new(v.clone(), den.clone()))
                                .collect();
                        }
                    }
                },
            }
        }
        // next combination in lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(SymmetrizedPrimal {
                    k,
                    n,
                    alpha: best_alpha,
                    x: best_x,
                });
            }
            i -= 1;
            if sel[i] != i + total - dim {
                sel[i] += 1;
                for j in (i + 1)..dim {
                    sel[j] = sel[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The optimum alpha_k alone.
pub fn symmetrized_primal_optimum(k: usize) -> Result<Rat> {
    Ok(symmetrized_primal_solution(k)?.alpha)
}

/// Exact feasibility of a given (x, alpha) for the symmetrized primal; lets
/// callers confirm a reported optimum independently of the enumeration.
pub fn check_symmetrized_feasible(k: usize, x: &[Rat], alpha: &Rat) -> bool {
    let n = k * k;
    if x.len() != n {
        return false;
    }
    let rows = build_constraints(k, n);
    let mut z: Vec<Rat> = x.to_vec();
    z.push(alpha.clone());
    rows.iter().all(|row| {
        let mut acc = Rat::zero();
        for (c, v) in z.iter().enumerate() {
            if row.coeffs[c] != 0 {
                acc += Rat::from_integer(row.coeffs[c].into()) * v;
            }
        }
        acc <= Rat::from_integer(row.rhs.into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::dual::{dual_certificate, primal_construction_bound};
    use crate::rational::{rat, ratio};

    #[test]
    fn k1_is_exactly_one() {
        let sol = symmetrized_primal_solution(1).unwrap();
        assert_eq!(sol.alpha, rat(1));
        assert!(check_symmetrized_feasible(1, &sol.x, &sol.alpha));
    }

    #[test]
    fn k2_optimum_is_five_sixths() {
        // independently derived: putting weight 1/3 on every 2-subset is
        // feasible with alpha = 5/6, and 5/6 is the k = 2 dual objective
        let sol = symmetrized_primal_solution(2).unwrap();
        assert_eq!(sol.alpha, ratio(5, 6));
        assert!(sol.alpha >= primal_construction_bound(2).unwrap());
        assert!(sol.alpha <= dual_certificate(2).unwrap().objective);
        assert!(check_symmetrized_feasible(2, &sol.x, &sol.alpha));
        let hand_x = [rat(0), ratio(1, 3), rat(0), rat(0)];
        assert!(check_symmetrized_feasible(2, &hand_x, &ratio(5, 6)));
    }

    #[test]
    fn oversized_k_is_rejected() {
        assert!(matches!(
            symmetrized_primal_optimum(4),
            Err(Error::InstanceTooLarge { .. })
        ));
        assert!(symmetrized_primal_optimum(0).is_err());
    }
}

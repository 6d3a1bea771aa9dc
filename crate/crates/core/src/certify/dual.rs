//! The explicit dual certificate bounding coverage approximations of the
//! uniform budgeted instance on n = k^2 unit-value elements with budget k.

use crate::error::{Error, Result};
use crate::rational::{binomial, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Upper bound on k for the certificate; binomials stay exact regardless,
/// this just keeps n = k^2 sane.
pub const MAX_DUAL_K: usize = 20;

/// An explicit feasible solution to the symmetrized dual LP. Its objective
/// upper-bounds the best approximation quality alpha_k achievable by a
/// coverage function below f_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCertificate {
    pub k: usize,
    pub n: usize,
    /// v_k = 1 / (C(n,k) k); all other v_j are zero.
    pub v_k: Rat,
    /// u_1 = delta_c_k * v_k.
    pub u_1: Rat,
    /// u_n = (c_k - k delta_c_k) * v_k.
    pub u_n: Rat,
    /// c_j = C(n,k) - C(n-j,k) for j = 1..n (index 0 holds c_1).
    pub c: Vec<BigInt>,
    /// delta_c_k = c_{k+1} - c_k = C(n-k-1, k-1).
    pub delta_c_k: BigInt,
    /// Dual feasibility of the assignment, checked constraint by constraint.
    pub feasible: bool,
    /// k c_k v_k = 1 - C(k^2-k, k)/C(k^2, k).
    pub objective: Rat,
}

/// Builds the certificate for a given k and verifies feasibility exactly:
/// the cardinality constraints (j-k) delta_c_k + c_k >= c_j for every j in
/// [n], the budget constraint k C(n,k) v_k >= 1 (met with equality), and
/// nonnegativity of v_k, u_1, u_n.
pub fn dual_certificate(k: usize) -> Result<DualCertificate> {
    if k == 0 || k > MAX_DUAL_K {
        return Err(Error::BadInstanceSpec {
            reason: format!("k must lie in 1..={MAX_DUAL_K}"),
        });
    }
    let n = k * k;
    let ki = k as i64;
    let ni = n as i64;
    let c_nk = binomial(ni, ki);
    let c: Vec<BigInt> = (1..=ni).map(|j| &c_nk - binomial(ni - j, ki)).collect();
    let delta_c_k = binomial(ni - ki - 1, ki - 1);
    let v_k = Rat::new(BigInt::one(), &c_nk * BigInt::from(ki));
    let u_1 = Rat::from_integer(delta_c_k.clone()) * &v_k;
    let c_k = c[k - 1].clone();
    let u_n = Rat::from_integer(&c_k - BigInt::from(ki) * &delta_c_k) * &v_k;
    let objective = Rat::from_integer(BigInt::from(ki) * &c_k) * &v_k;

    let mut feasible = !v_k.is_negative() && !u_1.is_negative() && !u_n.is_negative();
    for (idx, c_j) in c.iter().enumerate() {
        let j = idx as i64 + 1;
        if BigInt::from(j - ki) * &delta_c_k + &c_k < *c_j {
            feasible = false;
        }
    }
    if Rat::from_integer(BigInt::from(ki) * &c_nk) * &v_k < Rat::one() {
        feasible = false;
    }

    Ok(DualCertificate {
        k,
        n,
        v_k,
        u_1,
        u_n,
        c,
        delta_c_k,
        feasible,
        objective,
    })
}

/// The quality of the closed-form coverage construction on f_k:
/// rho(k) = 1 - (1 - 1/k)^k, a constructive lower bound on alpha_k.
pub fn primal_construction_bound(k: usize) -> Result<Rat> {
    if k == 0 {
        return Err(Error::BadInstanceSpec {
            reason: "k must be positive".into(),
        });
    }
    let base = Rat::new(BigInt::from(k as i64 - 1), BigInt::from(k as i64));
    Ok(Rat::one() - crate::rational::pow_rat(&base, k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn k2_certificate_is_the_worked_example() {
        let cert = dual_certificate(2).unwrap();
        assert_eq!(cert.n, 4);
        assert_eq!(cert.v_k, ratio(1, 12));
        assert_eq!(
            cert.c,
            vec![BigInt::from(3), BigInt::from(5), BigInt::from(6), BigInt::from(6)]
        );
        assert_eq!(cert.delta_c_k, BigInt::from(1));
        assert_eq!(cert.u_1, ratio(1, 12));
        assert_eq!(cert.u_n, ratio(1, 4));
        assert!(cert.feasible);
        assert_eq!(cert.objective, ratio(5, 6));
    }

    #[test]
    fn k3_objective_is_sixteen_twentyfirsts() {
        let cert = dual_certificate(3).unwrap();
        assert_eq!(cert.objective, ratio(16, 21));
        assert!(cert.feasible);
    }

    #[test]
    fn k1_degenerates_to_objective_one() {
        let cert = dual_certificate(1).unwrap();
        assert_eq!(cert.n, 1);
        assert_eq!(cert.objective, rat(1));
        assert!(cert.feasible);
    }

    #[test]
    fn c_is_increasing_then_constant_and_delta_nonincreasing() {
        for k in 2..=6usize {
            let cert = dual_certificate(k).unwrap();
            let n = cert.n;
            for j in 1..n {
                assert!(cert.c[j] >= cert.c[j - 1], "c not nondecreasing at {j}");
                if j < n - k + 1 {
                    assert!(cert.c[j] > cert.c[j - 1], "c not strict below n-k at {j}");
                } else {
                    assert_eq!(cert.c[j], cert.c[j - 1], "c not constant past n-k at {j}");
                }
            }
            // delta_c_j = C(n-j-1, k-1) is nonincreasing in j
            let ni = n as i64;
            let ki = k as i64;
            for j in 1..ni {
                assert!(binomial(ni - j - 1, ki - 1) <= binomial(ni - j, ki - 1));
            }
        }
    }

    #[test]
    fn construction_bound_values() {
        assert_eq!(primal_construction_bound(1).unwrap(), rat(1));
        assert_eq!(primal_construction_bound(2).unwrap(), ratio(3, 4));
        assert_eq!(primal_construction_bound(3).unwrap(), ratio(19, 27));
        // primal bound <= dual bound at k = 3: 19/27 <= 16/21
        assert!(primal_construction_bound(3).unwrap() <= dual_certificate(3).unwrap().objective);
    }

    #[test]
    fn k_bounds_enforced() {
        assert!(dual_certificate(0).is_err());
        assert!(dual_certificate(21).is_err());
        assert!(primal_construction_bound(0).is_err());
    }
}

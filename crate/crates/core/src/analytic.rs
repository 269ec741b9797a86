//! Certified checks of the analytic facts behind the degree bounds:
//! harmonic-number residuals, the Robbins form of Stirling's formula and
//! the central binomial bound.
//!
//! Every check passes only when its margin is certified positive and at
//! least [`HEADROOM`] times the width of the enclosure that carries it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::certified::{self, Bounds};

/// Required ratio between a certified margin and its enclosure width.
pub const HEADROOM: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyticFailure {
    pub check: &'static str,
    pub at: u64,
    pub detail: String,
}

impl std::fmt::Display for AnalyticFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at {}: {}", self.check, self.at, self.detail)
    }
}

/// Margin is positive with room to spare over its own uncertainty.
pub fn certified_positive(margin: &Bounds) -> bool {
    margin.certainly_positive()
        && margin.lo_rational() >= margin.width() * BigRational::from_integer(HEADROOM.into())
}

fn recip(k: u64) -> Bounds {
    Bounds::from_ratio(&BigInt::one(), &BigInt::from(k))
}

/// `eps_m = ln m + gamma + 1/(2m) - H_m`.
pub fn harmonic_residual(m: u64) -> Bounds {
    assert!(m >= 1);
    let h = (1..=m).fold(Bounds::from_int(0), |acc, k| acc.add(&recip(k)));
    certified::ln_int(m)
        .add(certified::euler_gamma())
        .add(&recip(2 * m))
        .sub(&h)
}

/// Walks `m = 1..=m_max`, checking `0 <= eps_m <= 1/(8 m^2)` at each step.
pub fn check_harmonic_residuals(m_max: u64) -> Result<(), AnalyticFailure> {
    let mut h = Bounds::from_int(0);
    let mut ln_m = Bounds::from_int(0);
    for m in 1..=m_max {
        h = h.add(&recip(m));
        if m >= 2 {
            ln_m = ln_m.add(&certified::ln_step(m));
        }
        let eps = ln_m
            .add(certified::euler_gamma())
            .add(&recip(2 * m))
            .sub(&h);
        if !certified_positive(&eps) {
            return Err(AnalyticFailure {
                check: "harmonic residual is non-negative",
                at: m,
                detail: format!("eps ~ {:e}", eps.approx()),
            });
        }
        let upper = recip(8 * m * m).sub(&eps);
        if !certified_positive(&upper) {
            return Err(AnalyticFailure {
                check: "harmonic residual is at most 1/(8m^2)",
                at: m,
                detail: format!("eps ~ {:e}", eps.approx()),
            });
        }
    }
    Ok(())
}

/// Checks `H_{2i} - H_i < ln 2` for `i = 1..=i_max`.
pub fn check_half_harmonic_sums(i_max: u64) -> Result<(), AnalyticFailure> {
    let mut diff = Bounds::from_int(0);
    for i in 1..=i_max {
        diff = diff
            .add(&recip(2 * i - 1))
            .add(&recip(2 * i))
            .sub(&recip(i));
        let margin = certified::ln_two().sub(&diff);
        if !certified_positive(&margin) {
            return Err(AnalyticFailure {
                check: "H_2i - H_i < ln 2",
                at: i,
                detail: format!("difference ~ {}", diff.approx()),
            });
        }
    }
    Ok(())
}

/// Margins of the two Robbins inequalities at `m`, in log form:
/// `(ln m! - S - 1/(12m+1), 1/(12m) - (ln m! - S))` with
/// `S = ln(sqrt(2 pi m) (m/e)^m)`.
pub fn stirling_margins(m: u64) -> (Bounds, Bounds) {
    assert!(m >= 1);
    let mut ln_fact = Bounds::from_int(0);
    let mut ln_k = Bounds::from_int(0);
    for k in 2..=m {
        ln_k = ln_k.add(&certified::ln_step(k));
        ln_fact = ln_fact.add(&ln_k);
    }
    stirling_margins_from(m, &ln_k, &ln_fact)
}

fn stirling_margins_from(m: u64, ln_m: &Bounds, ln_fact: &Bounds) -> (Bounds, Bounds) {
    let ln_pi = certified::ln_bounds(certified::pi());
    let half_log = certified::ln_two().add(&ln_pi).add(ln_m).div_int(2);
    let s = half_log
        .add(&ln_m.mul_int(m as i64))
        .sub(&Bounds::from_int(m as i64));
    let excess = ln_fact.sub(&s);
    let lower = excess.sub(&recip(12 * m + 1));
    let upper = recip(12 * m).sub(&excess);
    (lower, upper)
}

/// Both strict Robbins–Stirling inequalities hold at `m`, `1 <= m <= 500`.
pub fn stirling_bounds(m: u64) -> bool {
    assert!(
        (1..=500).contains(&m),
        "stirling_bounds supports 1 <= m <= 500"
    );
    let (lo, hi) = stirling_margins(m);
    certified_positive(&lo) && certified_positive(&hi)
}

/// Checks both Robbins inequalities for every `m` in `1..=m_max`.
pub fn check_stirling(m_max: u64) -> Result<(), AnalyticFailure> {
    let mut ln_fact = Bounds::from_int(0);
    let mut ln_m = Bounds::from_int(0);
    for m in 1..=m_max {
        if m >= 2 {
            ln_m = ln_m.add(&certified::ln_step(m));
            ln_fact = ln_fact.add(&ln_m);
        }
        let (lo, hi) = stirling_margins_from(m, &ln_m, &ln_fact);
        if !certified_positive(&lo) || !certified_positive(&hi) {
            return Err(AnalyticFailure {
                check: "Robbins-Stirling bounds",
                at: m,
                detail: format!("margins ~ {:e}, {:e}", lo.approx(), hi.approx()),
            });
        }
    }
    Ok(())
}

/// Exact certificate that `value < 1/sqrt(pi k)` for a non-negative
/// rational `value`: `value^2 * pi_upper * k < 1`.
pub fn below_inverse_sqrt_pi(value: &BigRational, k: u64) -> bool {
    let lhs = value * value * certified::pi_upper_rational() * BigRational::from_integer(k.into());
    lhs < BigRational::one()
}

/// `C(2i, i) / 4^i` exactly.
pub fn central_binomial_ratio(i: u64) -> BigRational {
    let mut c = BigInt::one();
    for k in 1..=i {
        c = c * BigInt::from(2 * k) * BigInt::from(2 * k - 1) / BigInt::from(k * k);
    }
    BigRational::new(c, BigInt::one() << (2 * i))
}

/// Checks `C(2i,i)/4^i < 1/sqrt(pi i)` for `i = 1..=i_max`, exactly.
pub fn check_central_binomial(i_max: u64) -> Result<(), AnalyticFailure> {
    let pi_hi = certified::pi_upper_rational();
    let (pn, pd) = (pi_hi.numer().clone(), pi_hi.denom().clone());
    let mut c = BigInt::one();
    for i in 1..=i_max {
        c = c * BigInt::from(2 * i) * BigInt::from(2 * i - 1) / BigInt::from(i * i);
        // (c / 4^i)^2 * pi * i < 1  <=>  c^2 * pn * i < 16^i * pd
        let lhs = &c * &c * &pn * BigInt::from(i);
        let rhs = (BigInt::one() << (4 * i)) * &pd;
        if lhs >= rhs {
            return Err(AnalyticFailure {
                check: "C(2i,i)/4^i < 1/sqrt(pi i)",
                at: i,
                detail: "certificate failed".into(),
            });
        }
    }
    Ok(())
}

/// `11/112 < 1/10.18`, i.e. `11 * 1018 < 112 * 100`.
pub fn cap_constant_ordering() -> bool {
    BigRational::new(11.into(), 112.into()) < BigRational::new(100.into(), 1018.into())
}

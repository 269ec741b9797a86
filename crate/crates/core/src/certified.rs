//! Certified real arithmetic on fixed-point intervals.
//!
//! A [`Bounds`] holds integers `lo <= hi` and stands for the real interval
//! `[lo, hi] * 2^-PRECISION_BITS`. Every operation rounds `lo` down and `hi`
//! up, so the true value of any expression stays inside its bounds.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const PRECISION_BITS: u32 = 256;

/// Euler–Mascheroni constant, first 50 decimals (truncated).
const EULER_GAMMA_DIGITS: &str = "57721566490153286060651209008240243104215933593992";

/// Fractional digits of pi, first 64 decimals (truncated).
const PI_FRACTION_DIGITS: &str = "1415926535897932384626433832795028841971693993751058209749445923";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    lo: BigInt,
    hi: BigInt,
}

fn floor_shift(x: BigInt) -> BigInt {
    // BigInt right shift rounds toward negative infinity.
    x >> PRECISION_BITS
}

fn ceil_shift(x: BigInt) -> BigInt {
    -((-x) >> PRECISION_BITS)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Bounds {
    fn raw(lo: BigInt, hi: BigInt) -> Self {
        debug_assert!(lo <= hi);
        Bounds { lo, hi }
    }

    pub fn from_int(v: i64) -> Self {
        let x = BigInt::from(v) << PRECISION_BITS;
        Bounds::raw(x.clone(), x)
    }

    /// Encloses `num / den`; `den` must be positive.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        let scaled = num << PRECISION_BITS;
        Bounds::raw(scaled.div_floor(den), ceil_div(&scaled, den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_ratio(r.numer(), r.denom())
    }

    /// The interval `[lo, hi]` between two enclosures.
    pub fn hull(a: &Bounds, b: &Bounds) -> Self {
        Bounds::raw(
            a.lo.clone().min(b.lo.clone()),
            a.hi.clone().max(b.hi.clone()),
        )
    }

    pub fn lo_rational(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << PRECISION_BITS)
    }

    pub fn hi_rational(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << PRECISION_BITS)
    }

    pub fn width(&self) -> BigRational {
        self.hi_rational() - self.lo_rational()
    }

    /// Midpoint as a float, for display only.
    pub fn approx(&self) -> f64 {
        let mid: BigRational = (self.lo_rational() + self.hi_rational()) / BigInt::from(2);
        num_traits::ToPrimitive::to_f64(&mid).unwrap_or(f64::NAN)
    }

    pub fn add(&self, other: &Bounds) -> Bounds {
        Bounds::raw(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Bounds) -> Bounds {
        Bounds::raw(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Bounds {
        Bounds::raw(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, other: &Bounds) -> Bounds {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Bounds::raw(floor_shift(lo), ceil_shift(hi))
    }

    pub fn mul_int(&self, k: i64) -> Bounds {
        let k = BigInt::from(k);
        let (a, b) = (&self.lo * &k, &self.hi * &k);
        if a <= b {
            Bounds::raw(a, b)
        } else {
            Bounds::raw(b, a)
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, d: u64) -> Bounds {
        assert!(d > 0);
        let d = BigInt::from(d);
        Bounds::raw(self.lo.div_floor(&d), ceil_div(&self.hi, &d))
    }

    /// Widens the upper end by `extra` units of the last place.
    fn widen_up(&self, extra: BigInt) -> Bounds {
        Bounds::raw(self.lo.clone(), &self.hi + extra)
    }

    /// Every value in `self` is strictly below every value in `other`.
    pub fn certainly_lt(&self, other: &Bounds) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Bounds) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }
}

/// `atanh(p/q)` for `0 <= p/q <= 1/2`.
fn atanh_ratio(p: &BigInt, q: &BigInt) -> Bounds {
    assert!(
        !p.is_negative() && (p << 1u32) <= *q,
        "atanh argument out of range"
    );
    let z = Bounds::from_ratio(p, q);
    let z2 = z.mul(&z);
    let mut power = z;
    let mut sum = Bounds::from_int(0);
    let mut j: u64 = 0;
    // Stop once the next power is below one unit in the last place.
    while power.hi > BigInt::one() {
        sum = sum.add(&power.div_int(2 * j + 1));
        power = power.mul(&z2);
        j += 1;
    }
    // Remaining terms: sum_{k>=j} z^(2k+1)/(2k+1) <= z^(2j+1) / (1 - z^2)
    // <= (4/3) z^(2j+1), and z^(2j+1) <= power.hi ulps.
    let tail = ceil_div(&(&power.hi * 4), &BigInt::from(3)) + 1;
    sum.widen_up(tail)
}

fn ln2() -> &'static Bounds {
    static LN2: OnceLock<Bounds> = OnceLock::new();
    LN2.get_or_init(|| atanh_ratio(&BigInt::one(), &BigInt::from(3)).mul_int(2))
}

/// Encloses `ln(num / den)` for positive integers.
pub fn ln_ratio(num: &BigUint, den: &BigUint) -> Bounds {
    assert!(
        !num.is_zero() && !den.is_zero(),
        "logarithm of a non-positive value"
    );
    let mut k = num.bits() as i64 - den.bits() as i64;
    let (mut a, mut b) = (BigInt::from(num.clone()), BigInt::from(den.clone()));
    // Rescale so that a / b = (num / den) * 2^-k lies in [1, 2).
    if k >= 0 {
        b <<= k as u64;
    } else {
        a <<= (-k) as u64;
    }
    if a < b {
        k -= 1;
        a <<= 1u32;
    }
    debug_assert!(a >= b && a < (&b << 1u32));
    let p = &a - &b;
    let q = &a + &b;
    let frac = atanh_ratio(&p, &q).mul_int(2);
    ln2().mul_int(k).add(&frac)
}

pub fn ln_int(m: u64) -> Bounds {
    ln_ratio(&BigUint::from(m), &BigUint::one())
}

/// Encloses the logarithm of every value in a strictly positive interval.
pub fn ln_bounds(x: &Bounds) -> Bounds {
    assert!(
        x.certainly_positive(),
        "logarithm of a non-positive interval"
    );
    let scale = BigUint::one() << PRECISION_BITS;
    let lo = ln_ratio(&x.lo.magnitude().clone(), &scale);
    let hi = ln_ratio(&x.hi.magnitude().clone(), &scale);
    Bounds::hull(&lo, &hi)
}

/// `ln((m) / (m - 1)) = 2 atanh(1 / (2m - 1))`, for stepping `ln m` upward.
pub fn ln_step(m: u64) -> Bounds {
    assert!(m >= 2);
    atanh_ratio(&BigInt::one(), &BigInt::from(2 * m - 1)).mul_int(2)
}

fn decimal_constant(int_part: u64, digits: &str) -> Bounds {
    let den = num_traits::pow(BigInt::from(10), digits.len());
    let num = BigInt::from(int_part) * &den + digits.parse::<BigInt>().expect("constant digits");
    let lo = Bounds::from_ratio(&num, &den);
    let hi = Bounds::from_ratio(&(num + 1), &den);
    Bounds::hull(&lo, &hi)
}

pub fn euler_gamma() -> &'static Bounds {
    static GAMMA: OnceLock<Bounds> = OnceLock::new();
    GAMMA.get_or_init(|| decimal_constant(0, EULER_GAMMA_DIGITS))
}

pub fn pi() -> &'static Bounds {
    static PI: OnceLock<Bounds> = OnceLock::new();
    PI.get_or_init(|| decimal_constant(3, PI_FRACTION_DIGITS))
}

pub fn ln_two() -> &'static Bounds {
    ln2()
}

/// Rational upper bound on pi used for exact certificates of the form
/// `x < 1/sqrt(pi k)`: `x^2 * PI_UPPER * k < 1` implies the claim.
pub fn pi_upper_rational() -> BigRational {
    BigRational::new(3141592653589794u64.into(), 1_000_000_000_000_000u64.into())
}

//! Extremal and random point configurations, and the comparison of exact
//! convex-position counts with their asymptotic leading term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossing::Universe;
use crate::enumerate::{count_plane_graphs, expected_degree_vector, EnumConfig};
use crate::error::Error;
use crate::geometry::{orientation, segments_cross, Orientation, Point, PointSet, COORD_LIMIT};
use crate::pts;
use crate::verify::{Status, VerificationReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    ConvexChain,
    CapWithApex,
    TriangularHullRandom,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::ConvexChain => "convex_chain",
            ConstructionKind::CapWithApex => "cap_with_apex",
            ConstructionKind::TriangularHullRandom => "triangular_hull_random",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "convex_chain" => Ok(ConstructionKind::ConvexChain),
            "cap_with_apex" => Ok(ConstructionKind::CapWithApex),
            "triangular_hull_random" => Ok(ConstructionKind::TriangularHullRandom),
            _ => Err(Error::InvalidArgument(format!(
                "unknown construction {s:?}; expected convex_chain, cap_with_apex or triangular_hull_random"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    pub seed: u64,
}

impl ConstructionSpec {
    pub fn generate(&self) -> Result<PointSet, Error> {
        match self.kind {
            ConstructionKind::ConvexChain => gen_convex_chain(self.n),
            ConstructionKind::CapWithApex => gen_cap_with_apex(self.n),
            ConstructionKind::TriangularHullRandom => gen_triangular_hull_random(self.n, self.seed),
        }
    }
}

fn cap_points(m: usize) -> Result<Vec<Point>, Error> {
    let m = m as i64;
    if m * m > COORD_LIMIT {
        return Err(Error::Construction(format!(
            "cap of {m} points exceeds the coordinate limit"
        )));
    }
    Ok((1..=m).map(|k| Point::new(k, -k * k)).collect())
}

/// `m` points `(k, -k^2)`, `k = 1..=m`, in convex position.
pub fn gen_convex_chain(m: usize) -> Result<PointSet, Error> {
    if m < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: m });
    }
    PointSet::new(cap_points(m)?)
}

/// No segment from the apex (the last point) to a cap point crosses a
/// chord between two cap points.
fn apex_certificate(points: &[Point]) -> Result<bool, Error> {
    let (q, cap) = points.split_last().expect("non-empty");
    for &p in cap {
        for (j, &a) in cap.iter().enumerate() {
            for &b in &cap[j + 1..] {
                if segments_cross(*q, p, a, b)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The cap `(k, -k^2)`, `k = 1..n-1`, plus an apex `(0, H)` placed high
/// enough that no apex segment crosses a cap chord. The apex gets label
/// `n - 1`. `H` starts at `4 (n-1)^2` and doubles until the exhaustive
/// certificate passes.
pub fn gen_cap_with_apex(n: usize) -> Result<PointSet, Error> {
    if n < 4 {
        return Err(Error::TooFewPoints { needed: 4, got: n });
    }
    let cap = cap_points(n - 1)?;
    let mut h = 4 * ((n - 1) as i64).pow(2);
    while h <= COORD_LIMIT {
        let mut pts = cap.clone();
        pts.push(Point::new(0, h));
        if let Ok(set) = PointSet::new(pts) {
            if apex_certificate(set.points())? && set.is_triangular_hull() {
                return Ok(set);
            }
        }
        h *= 2;
    }
    Err(Error::Construction(format!(
        "no certified apex height up to {COORD_LIMIT} for n = {n}"
    )))
}

const RANDOM_TRIANGLE_SIDE: i64 = 4096;
const REJECTION_BUDGET: usize = 100_000;

/// Triangle `(0,0), (S,0), (0,S)` plus `n - 3` interior lattice points,
/// rejection-sampled from a ChaCha stream seeded with `seed`.
pub fn gen_triangular_hull_random(n: usize, seed: u64) -> Result<PointSet, Error> {
    if n < 4 {
        return Err(Error::TooFewPoints { needed: 4, got: n });
    }
    let s = RANDOM_TRIANGLE_SIDE;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = vec![Point::new(0, 0), Point::new(s, 0), Point::new(0, s)];
    let mut attempts = 0;
    while pts.len() < n {
        attempts += 1;
        if attempts > REJECTION_BUDGET {
            return Err(Error::Construction(format!(
                "rejection budget exhausted after {REJECTION_BUDGET} samples"
            )));
        }
        let x = rng.gen_range(1..s - 1);
        let y = rng.gen_range(1..s - x);
        let c = Point::new(x, y);
        let clash = pts.iter().enumerate().any(|(i, &a)| {
            a == c
                || pts[i + 1..]
                    .iter()
                    .any(|&b| orientation(a, b, c) == Orientation::Collinear)
        });
        if !clash {
            pts.push(c);
        }
    }
    PointSet::new(pts)
}

/// `6 + 4 sqrt 2`, the growth rate of convex-position counts.
pub fn convex_growth_rate() -> f64 {
    6.0 + 4.0 * std::f64::consts::SQRT_2
}

/// Constant of the leading term, `sqrt(99 sqrt 2 - 140) / 4`.
pub fn flajolet_noy_constant() -> f64 {
    (99.0 * std::f64::consts::SQRT_2 - 140.0).sqrt() / 4.0
}

/// Leading term `c (6 + 4 sqrt 2)^m / (sqrt(pi) m^{3/2})` of the number of
/// plane graphs on `m` points in convex position.
pub fn flajolet_noy_approx(m: usize) -> f64 {
    let m = m as f64;
    flajolet_noy_constant() * convex_growth_rate().powf(m)
        / (std::f64::consts::PI.sqrt() * m.powf(1.5))
}

/// Checks `pg(cap_with_apex(n)) = 2^{n-1} pg(convex_chain(n-1))` by
/// enumerating both sides.
pub fn verify_product_law(n: usize, cfg: &EnumConfig) -> Result<VerificationReport, Error> {
    let apex = gen_cap_with_apex(n)?;
    let lhs = count_plane_graphs(&Universe::new(apex.clone())?, cfg)?;
    let chain = count_plane_graphs(&Universe::new(gen_convex_chain(n - 1)?)?, cfg)?;
    let rhs = chain << (n - 1);
    let mut r = VerificationReport {
        claim: format!("product-law[n={n}]"),
        point_set: pts::descriptor(&apex),
        status: Status::Holds,
        witness: None,
        margin: Some(BigRational::zero()),
        note: Some(format!("pg = {lhs}, 2^{} * pg(chain) = {rhs}", n - 1)),
    };
    if lhs != rhs {
        r.status = Status::Violated;
        r.margin = Some(BigRational::new(
            num_bigint::BigInt::from(lhs.clone()) - num_bigint::BigInt::from(rhs.clone()),
            1.into(),
        ));
        r.witness = Some(Witness {
            graph: None,
            vertex: None,
            detail: format!("{lhs} != {rhs}"),
        });
    }
    Ok(r)
}

/// Exact count versus the leading term at one size.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub m: usize,
    pub exact: BigUint,
    pub approx: f64,
    pub ratio: f64,
    /// `exact(m) / exact(m-1)`, when the previous row exists.
    pub growth: Option<f64>,
}

/// Growth constants the trend table is reported against.
pub const TREND_CONSTANTS: [f64; 3] = [23.31, 23.314, 23.32];

#[derive(Debug, Clone, PartialEq)]
pub struct TrendRow {
    pub n: usize,
    pub vhat0: BigRational,
    /// `vhat_0 * c / n` for each of [`TREND_CONSTANTS`].
    pub scaled: [f64; 3],
    /// The apex 0-ving fraction plus the cap 0-ving fractions predicted by
    /// the product law; `vhat_0` is at least this.
    pub predicted: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionReport {
    pub ratios: Vec<RatioRow>,
    pub trend: Vec<TrendRow>,
    pub product_law: Vec<VerificationReport>,
}

impl ConstructionReport {
    /// `|ratio - 1|` never grows from one row to the next, for `m >= from`.
    pub fn ratio_distance_non_increasing(&self, from: usize) -> bool {
        let d: Vec<f64> = self
            .ratios
            .iter()
            .filter(|r| r.m >= from)
            .map(|r| (r.ratio - 1.0).abs())
            .collect();
        d.windows(2).all(|w| w[1] <= w[0])
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Ratio rows for `m = 3..=n_max`, the `vhat_0` trend for
/// `cap_with_apex(n)`, `n = 4..=n_max`, and the product law on the same
/// range.
pub fn construction_report(n_max: usize, cfg: &EnumConfig) -> Result<ConstructionReport, Error> {
    cfg.check(n_max)?;
    let mut chain_counts: Vec<BigUint> = Vec::new(); // indexed by m - 3
    let mut ratios = Vec::new();
    for m in 3..=n_max {
        let exact = count_plane_graphs(&Universe::new(gen_convex_chain(m)?)?, cfg)?;
        let approx = flajolet_noy_approx(m);
        let e = exact.to_f64().unwrap_or(f64::NAN);
        let growth = chain_counts
            .last()
            .map(|prev| e / prev.to_f64().unwrap_or(f64::NAN));
        ratios.push(RatioRow {
            m,
            exact: exact.clone(),
            approx,
            ratio: e / approx,
            growth,
        });
        chain_counts.push(exact);
    }
    let chain = |m: usize| -> BigUint {
        match m {
            0 | 1 => BigUint::from(1u8),
            2 => BigUint::from(2u8),
            _ => chain_counts[m - 3].clone(),
        }
    };

    let mut trend = Vec::new();
    let mut product_law = Vec::new();
    for n in 4..=n_max {
        let u = Universe::new(gen_cap_with_apex(n)?)?;
        let d = expected_degree_vector(&u, cfg)?;
        let vhat0 = d.vhat(0);
        let scaled = TREND_CONSTANTS.map(|c| to_f64(&vhat0) * c / n as f64);
        let pg = BigRational::from_integer(d.pg.clone().into());
        let cap_share =
            BigRational::from_integer(((chain(n - 2) * BigUint::from(n - 1)) << (n - 2)).into())
                / pg;
        let apex_share = BigRational::new(1.into(), num_bigint::BigInt::from(1) << (n - 1));
        trend.push(TrendRow {
            n,
            vhat0,
            scaled,
            predicted: cap_share + apex_share,
        });
        product_law.push(verify_product_law(n, cfg)?);
    }
    Ok(ConstructionReport {
        ratios,
        trend,
        product_law,
    })
}

//! Cross-graph charging: visibility, potential, families of vings and the
//! charges they carry, all in exact arithmetic.
//!
//! A ving is a pair `(p, G)` of a point and a plane graph. The family of a
//! 0-ving `(p, R)` is every graph obtained from `R` by joining `p` to any
//! subset of the points visible from `p`; a family whose root sees `j`
//! points has `2^j` members. Every ving belongs to exactly one family,
//! found by deleting the edges at `p`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::crossing::Universe;
use crate::dyadic::DyadicRational;
use crate::edgeset::EdgeSet;
use crate::enumerate::{fold_plane_graphs, EnumConfig};
use crate::error::Error;

/// Segments `pq` that are absent from `g` and cross no edge of `g`.
pub fn visible_segments(u: &Universe, g: EdgeSet, p: usize) -> EdgeSet {
    let mut out = EdgeSet::EMPTY;
    for s in (u.incident(p) & !g).iter() {
        if !u.cross(s).intersects(g) {
            out.insert(s);
        }
    }
    out
}

pub fn visibility(u: &Universe, g: EdgeSet, p: usize) -> usize {
    visible_segments(u, g, p).len()
}

/// Degree of `p` plus its visibility: the points `p` is joined to or could
/// be joined to.
pub fn potential(u: &Universe, g: EdgeSet, p: usize) -> usize {
    u.degree(g, p) + visibility(u, g, p)
}

/// `g` with every edge at `p` removed.
pub fn family_root(u: &Universe, g: EdgeSet, p: usize) -> EdgeSet {
    g & !u.incident(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub point: usize,
    pub root: EdgeSet,
    pub visibility: usize,
    pub member_count: BigUint,
}

impl FamilyRecord {
    pub fn new(u: &Universe, root: EdgeSet, p: usize) -> Result<Self, Error> {
        if u.degree(root, p) != 0 {
            return Err(Error::NotIsolated { point: p });
        }
        let j = visibility(u, root, p);
        Ok(FamilyRecord {
            point: p,
            root,
            visibility: j,
            member_count: BigUint::one() << j,
        })
    }
}

/// All `2^j` members of the family rooted at the 0-ving `(p, root)`, in
/// increasing order of the added subset.
pub fn family_members(u: &Universe, root: EdgeSet, p: usize) -> Result<Vec<EdgeSet>, Error> {
    if u.degree(root, p) != 0 {
        return Err(Error::NotIsolated { point: p });
    }
    let visible: Vec<usize> = visible_segments(u, root, p).iter().collect();
    let mut members = Vec::with_capacity(1 << visible.len());
    for mask in 0u64..1 << visible.len() {
        let mut g = root;
        for (bit, &s) in visible.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.insert(s);
            }
        }
        assert!(
            u.crossings().is_crossing_free(g),
            "family member {} of point {p} has a crossing",
            g.to_hex()
        );
        members.push(g);
    }
    Ok(members)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Charge per ving of a `j`-family when every `i`-ving starts with one
/// unit and the family shares its total evenly: `C(j, i) / 2^j`.
pub fn family_charge_profile(i: u64, j: u64) -> BigRational {
    BigRational::new(binomial(j, i).into(), BigInt::one() << j)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyChargeMax {
    pub i: u64,
    pub argmax: Vec<u64>,
    pub value: BigRational,
    /// `argmax == {2i-1, 2i}` and `value == C(2i,i)/4^i`.
    pub plateau_as_expected: bool,
    /// Ratio test `f(j+1)/f(j) = (j+1)/(2(j+1-i)) < 1` holds at the end of
    /// the scanned window, and therefore for every larger `j`.
    pub tail_decreasing: bool,
}

/// Maximizes `C(j, i) / 2^j` over `j` in `i..=8i` by exact comparison.
pub fn max_family_charge(i: u64) -> FamilyChargeMax {
    assert!(i >= 1, "max_family_charge needs i >= 1");
    let mut best = BigRational::zero();
    let mut argmax = Vec::new();
    for j in i..=8 * i {
        let f = family_charge_profile(i, j);
        if f > best {
            best = f;
            argmax.clear();
            argmax.push(j);
        } else if f == best {
            argmax.push(j);
        }
    }
    let expected = family_charge_profile(i, 2 * i);
    let plateau_as_expected = argmax == vec![2 * i - 1, 2 * i] && best == expected;
    // (j+1) < 2(j+1-i) iff j > 2i - 1; the window ends at j = 8i >= 2i.
    let j = 8 * i;
    let tail_decreasing = j + 1 < 2 * (j + 1 - i);
    FamilyChargeMax {
        i,
        argmax,
        value: best,
        plateau_as_expected,
        tail_decreasing,
    }
}

/// Total charge of `g` after each 0-ving's unit is spread over its family:
/// `sum_p 2^-potential(p, g)`.
pub fn graph_charge_v0(u: &Universe, g: EdgeSet) -> DyadicRational {
    (0..u.n())
        .map(|p| DyadicRational::unit_fraction(potential(u, g, p) as u32))
        .sum()
}

/// `graph_charge_v0` scaled by `2^(n-1)`; potentials never exceed `n - 1`,
/// so this is an integer.
fn scaled_graph_charge(u: &Universe, g: EdgeSet) -> u128 {
    let top = u.n().saturating_sub(1);
    (0..u.n())
        .map(|p| 1u128 << (top - potential(u, g, p)))
        .sum()
}

/// Per-graph charge cap `(11n - 6)/112`.
pub fn charge_cap_closed_form(n: u64) -> BigRational {
    BigRational::new(BigInt::from(11 * n as i64 - 6), BigInt::from(112))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: BigRational,
    pub v3: BigRational,
    pub v4: BigRational,
}

/// Maximizes `v3/8 + v4/16 + (n - v3 - v4)/32` subject to
/// `v3 <= 2n/3 - 1`, `v4 <= (6n - 9 v3 - 6)/2`, `v3, v4 >= 0`,
/// `v3 + v4 <= n`, by exact enumeration of the polygon's vertices.
pub fn lp_charge_cap(n: u64) -> Result<LpSolution, Error> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "charge LP is set up for n >= 5, got {n}"
        )));
    }
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let ni = n as i64;
    // Rows a*v3 + b*v4 <= c.
    let rows: Vec<(BigRational, BigRational, BigRational)> = vec![
        (r(1, 1), r(0, 1), r(2 * ni - 3, 3)),
        (r(9, 2), r(1, 1), r(3 * ni - 3, 1)),
        (r(-1, 1), r(0, 1), r(0, 1)),
        (r(0, 1), r(-1, 1), r(0, 1)),
        (r(1, 1), r(1, 1), r(ni, 1)),
    ];
    let feasible =
        |v3: &BigRational, v4: &BigRational| rows.iter().all(|(a, b, c)| a * v3 + b * v4 <= *c);
    let objective = |v3: &BigRational, v4: &BigRational| {
        v3 / BigInt::from(8) + v4 / BigInt::from(16) + (r(ni, 1) - v3 - v4) / BigInt::from(32)
    };
    let mut best: Option<LpSolution> = None;
    for x in 0..rows.len() {
        for y in x + 1..rows.len() {
            let (a1, b1, c1) = &rows[x];
            let (a2, b2, c2) = &rows[y];
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            let v3 = (c1 * b2 - c2 * b1) / &det;
            let v4 = (a1 * c2 - a2 * c1) / &det;
            if !feasible(&v3, &v4) {
                continue;
            }
            let value = objective(&v3, &v4);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(LpSolution { value, v3, v4 });
            }
        }
    }
    best.ok_or_else(|| Error::InvalidArgument(format!("charge LP infeasible for n = {n}")))
}

/// One row of the family census: `multiplicity` families at `point` whose
/// root sees `visibility` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub point: usize,
    pub visibility: usize,
    pub multiplicity: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeAudit {
    pub n: usize,
    pub pg: BigUint,
    pub ving_counts: Vec<BigUint>,
    /// Rows with non-zero multiplicity, sorted by point then visibility.
    pub census: Vec<CensusRow>,
    /// Sum over all graphs of `graph_charge_v0`.
    pub total_charge: DyadicRational,
    /// Largest per-graph charge and the first graph (in scan order) with it.
    pub max_graph_charge: DyadicRational,
    pub max_charge_witness: EdgeSet,
}

impl ChargeAudit {
    /// `sum_j multiplicity(p, j) * 2^j` for point `p`.
    pub fn family_sizes_at(&self, p: usize) -> BigUint {
        self.census
            .iter()
            .filter(|r| r.point == p)
            .map(|r| &r.multiplicity << r.visibility)
            .sum()
    }

    /// Total `i`-charge handed out by families: `sum C(j, i)` over all
    /// families, which must equal the number of `i`-vings.
    pub fn family_charge_total(&self, i: usize) -> BigUint {
        self.census
            .iter()
            .map(|r| &r.multiplicity * binomial(r.visibility as u64, i as u64))
            .sum()
    }
}

#[derive(Clone)]
struct AuditTally {
    graphs: u128,
    ving: Vec<u128>,
    census: Vec<u128>,
    charge: u128,
    max_charge: u128,
    witness: EdgeSet,
}

impl AuditTally {
    fn merge(mut self, o: AuditTally) -> AuditTally {
        self.graphs += o.graphs;
        for (a, b) in self.ving.iter_mut().zip(o.ving) {
            *a += b;
        }
        for (a, b) in self.census.iter_mut().zip(o.census) {
            *a += b;
        }
        self.charge += o.charge;
        // Ties keep the earlier subtree's witness.
        if o.max_charge > self.max_charge {
            self.max_charge = o.max_charge;
            self.witness = o.witness;
        }
        self
    }
}

/// Runs the charging bookkeeping over every plane graph of `u`.
pub fn charge_audit(u: &Universe, cfg: &EnumConfig) -> Result<ChargeAudit, Error> {
    let n = u.n();
    let width = n.max(1);
    let tally = fold_plane_graphs(
        u,
        cfg,
        || AuditTally {
            graphs: 0,
            ving: vec![0; width],
            census: vec![0; width * width],
            charge: 0,
            max_charge: 0,
            witness: EdgeSet::EMPTY,
        },
        |t, g| {
            t.graphs += 1;
            for p in 0..n {
                let d = u.degree(g, p);
                t.ving[d] += 1;
                if d == 0 {
                    t.census[p * width + visibility(u, g, p)] += 1;
                }
            }
            let c = scaled_graph_charge(u, g);
            t.charge += c;
            if c > t.max_charge || t.graphs == 1 {
                t.max_charge = c;
                t.witness = g;
            }
        },
        AuditTally::merge,
    )?;
    let exp = n.saturating_sub(1) as u32;
    let mut census = Vec::new();
    for p in 0..n {
        for j in 0..width {
            let m = tally.census[p * width + j];
            if m > 0 {
                census.push(CensusRow {
                    point: p,
                    visibility: j,
                    multiplicity: BigUint::from(m),
                });
            }
        }
    }
    Ok(ChargeAudit {
        n,
        pg: BigUint::from(tally.graphs),
        ving_counts: tally.ving.into_iter().map(BigUint::from).collect(),
        census,
        total_charge: DyadicRational::new(BigInt::from(tally.charge), exp),
        max_graph_charge: DyadicRational::new(BigInt::from(tally.max_charge), exp),
        max_charge_witness: tally.witness,
    })
}

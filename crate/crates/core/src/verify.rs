//! Exhaustive verifiers for the degree bounds, the structural lemmas they
//! rest on, and the standalone analytic facts.
//!
//! Each verifier returns one [`VerificationReport`] per claim. Claims whose
//! hypotheses are not met are reported as not applicable, together with
//! whatever was observed. The lower bounds cited from prior work are
//! checked empirically and a small-`n` failure is reported as a finding.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::analytic;
use crate::charging::{self, charge_cap_closed_form, graph_charge_v0, potential, visibility};
use crate::crossing::Universe;
use crate::dyadic::cmp_rational;
use crate::edgeset::EdgeSet;
use crate::enumerate::{
    self, containing_triangulation, count_plane_graphs, expected_degree_vector, fold_plane_graphs,
    DegreeExpectation, EnumConfig,
};
use crate::error::Error;
use crate::pts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
    /// A cited (not proven here) claim fails on this input.
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
            Status::Finding => "finding",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Enough data to replay a violation: the graph, the vertex, and what was
/// observed there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Option<EdgeSet>,
    pub vertex: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub point_set: String,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Exact slack of the claimed inequality; positive when it holds.
    pub margin: Option<BigRational>,
    pub note: Option<String>,
}

impl VerificationReport {
    fn new(claim: impl Into<String>, point_set: &str) -> Self {
        VerificationReport {
            claim: claim.into(),
            point_set: point_set.to_string(),
            status: Status::Holds,
            witness: None,
            margin: None,
            note: None,
        }
    }

    fn status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    fn margin(mut self, m: BigRational) -> Self {
        self.margin = Some(m);
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }

    fn witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_violation(&self) -> bool {
        self.status == Status::Violated
    }
}

/// Claim groups selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimGroup {
    PreviousLower,
    V0Upper,
    ViUpper,
    DeletionIdentity,
    Visibility,
    TriangulationDegrees,
    ChargeCap,
    Charging,
    Analytic,
}

impl ClaimGroup {
    pub const ALL: [ClaimGroup; 9] = [
        ClaimGroup::PreviousLower,
        ClaimGroup::V0Upper,
        ClaimGroup::ViUpper,
        ClaimGroup::DeletionIdentity,
        ClaimGroup::Visibility,
        ClaimGroup::TriangulationDegrees,
        ClaimGroup::ChargeCap,
        ClaimGroup::Charging,
        ClaimGroup::Analytic,
    ];

    /// Groups run by default: everything that depends on the point set.
    pub const DEFAULT: [ClaimGroup; 8] = [
        ClaimGroup::PreviousLower,
        ClaimGroup::V0Upper,
        ClaimGroup::ViUpper,
        ClaimGroup::DeletionIdentity,
        ClaimGroup::Visibility,
        ClaimGroup::TriangulationDegrees,
        ClaimGroup::ChargeCap,
        ClaimGroup::Charging,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimGroup::PreviousLower => "previous-lower",
            ClaimGroup::V0Upper => "v0-upper",
            ClaimGroup::ViUpper => "vi-upper",
            ClaimGroup::DeletionIdentity => "deletion-identity",
            ClaimGroup::Visibility => "visibility",
            ClaimGroup::TriangulationDegrees => "triangulation-degrees",
            ClaimGroup::ChargeCap => "charge-cap",
            ClaimGroup::Charging => "charging",
            ClaimGroup::Analytic => "analytic",
        }
    }
}

impl FromStr for ClaimGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimGroup::ALL
            .iter()
            .copied()
            .find(|g| g.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ClaimGroup::ALL.iter().map(|g| g.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown claim {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn big(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Shared state for verifying the claims on one point set; the degree
/// vector is computed once.
pub struct Verifier<'a> {
    u: &'a Universe,
    cfg: &'a EnumConfig,
    descriptor: String,
    degrees: OnceCell<DegreeExpectation>,
}

impl<'a> Verifier<'a> {
    pub fn new(u: &'a Universe, cfg: &'a EnumConfig) -> Self {
        Verifier {
            u,
            cfg,
            descriptor: pts::descriptor(u.points()),
            degrees: OnceCell::new(),
        }
    }

    pub fn degrees(&self) -> Result<&DegreeExpectation, Error> {
        if let Some(d) = self.degrees.get() {
            return Ok(d);
        }
        let d = expected_degree_vector(self.u, self.cfg)?;
        Ok(self.degrees.get_or_init(|| d))
    }

    fn n(&self) -> usize {
        self.u.n()
    }

    fn triangular_and_large(&self) -> bool {
        self.u.is_triangular_hull() && self.n() >= 5
    }

    fn report(&self, claim: &str) -> VerificationReport {
        VerificationReport::new(claim, &self.descriptor)
    }

    pub fn run(&self, groups: &[ClaimGroup]) -> Result<Vec<VerificationReport>, Error> {
        let mut out = Vec::new();
        for g in groups {
            match g {
                ClaimGroup::PreviousLower => out.extend(self.previous_lower()?),
                ClaimGroup::V0Upper => out.push(self.v0_upper()?),
                ClaimGroup::ViUpper => out.extend(self.vi_upper(self.n().saturating_sub(1))?),
                ClaimGroup::DeletionIdentity => out.extend(self.zero_ving_recurrence()?),
                ClaimGroup::Visibility => out.push(self.visibility_lemma()?),
                ClaimGroup::TriangulationDegrees => out.extend(self.triangulation_degree_lemmas()?),
                ClaimGroup::ChargeCap => out.extend(self.graph_charge_cap()?),
                ClaimGroup::Charging => out.extend(self.charging_conservation()?),
                ClaimGroup::Analytic => out.extend(analytic_reports(&AnalyticLimits::default())),
            }
        }
        Ok(out)
    }

    /// `vhat_0 < 11n/112` for triangular hulls with `n >= 5`.
    pub fn v0_upper(&self) -> Result<VerificationReport, Error> {
        let n = self.n() as i64;
        let d = self.degrees()?;
        let v0 = d.vhat(0);
        let bound = rat(11 * n, 112);
        let margin = &bound - &v0;
        let r = self.report("v0-upper").margin(margin.clone());
        if !self.triangular_and_large() {
            return Ok(r.status(Status::NotApplicable).note(format!(
                "needs a triangular hull and n >= 5; vhat_0 = {}, 11n/112 = {}",
                fmt_rat(&v0),
                fmt_rat(&bound)
            )));
        }
        if margin > BigRational::zero() {
            Ok(r.note(format!("vhat_0 = {}", fmt_rat(&v0))))
        } else {
            Ok(r.status(Status::Violated).witness(Witness {
                graph: None,
                vertex: None,
                detail: format!("vhat_0 = {} >= {}", fmt_rat(&v0), fmt_rat(&bound)),
            }))
        }
    }

    /// `vhat_i < n / sqrt(pi i)` for `1 <= i <= i_max`, certified with a
    /// rational upper bound on pi. The margin is `1 - (vhat_i/n)^2 pi_hi i`.
    pub fn vi_upper(&self, i_max: usize) -> Result<Vec<VerificationReport>, Error> {
        let n = self.n();
        if n >= 1 && i_max > n - 1 {
            return Err(Error::InvalidArgument(format!(
                "i_max = {i_max} exceeds n - 1 = {}",
                n - 1
            )));
        }
        let d = self.degrees()?;
        let pi_hi = crate::certified::pi_upper_rational();
        let mut out = Vec::new();
        for i in 1..=i_max {
            let v = d.vhat(i);
            let scaled = &v / BigInt::from(n);
            let margin = BigRational::one()
                - &scaled * &scaled * &pi_hi * BigRational::from_integer(i.into());
            let r = self
                .report(&format!("vi-upper[i={i}]"))
                .margin(margin.clone())
                .note(format!("vhat_{i} = {}", fmt_rat(&v)));
            if analytic::below_inverse_sqrt_pi(&scaled, i as u64) {
                out.push(r);
            } else {
                out.push(r.status(Status::Violated).witness(Witness {
                    graph: None,
                    vertex: None,
                    detail: format!(
                        "vhat_{i} = {} not certified below n/sqrt(pi i)",
                        fmt_rat(&v)
                    ),
                }));
            }
        }
        Ok(out)
    }

    /// The four cited lower bounds on expected low degrees.
    pub fn previous_lower(&self) -> Result<Vec<VerificationReport>, Error> {
        let n = self.n() as i64;
        let d = self.degrees()?;
        let checks: [(&str, BigRational, BigRational, bool); 4] = [
            ("previous-lower[v0 > n/3207]", d.vhat(0), rat(n, 3207), true),
            (
                "previous-lower[v1 >= 3n/1024]",
                d.vhat(1),
                rat(3 * n, 1024),
                false,
            ),
            (
                "previous-lower[v2 >= 33n/2048]",
                d.vhat(2),
                rat(33 * n, 2048),
                false,
            ),
            (
                "previous-lower[v2+v3 >= n/24]",
                d.vhat(2) + d.vhat(3),
                rat(n, 24),
                false,
            ),
        ];
        Ok(checks
            .into_iter()
            .map(|(claim, lhs, rhs, strict)| {
                let margin = &lhs - &rhs;
                let ok = if strict {
                    margin > BigRational::zero()
                } else {
                    margin >= BigRational::zero()
                };
                let r = self.report(claim).margin(margin);
                if ok {
                    r
                } else {
                    r.status(Status::Finding)
                        .witness(Witness {
                            graph: None,
                            vertex: None,
                            detail: format!("lhs = {}, rhs = {}", fmt_rat(&lhs), fmt_rat(&rhs)),
                        })
                        .note("cited bound fails at this n")
                }
            })
            .collect())
    }

    /// Every 0-ving has visibility at least 3.
    pub fn visibility_lemma(&self) -> Result<VerificationReport, Error> {
        let u = self.u;
        let n = u.n();
        // (minimum visibility, graph, vertex)
        let found = fold_plane_graphs(
            u,
            self.cfg,
            || None::<(usize, EdgeSet, usize)>,
            |acc, g| {
                for p in 0..n {
                    if u.degree(g, p) != 0 {
                        continue;
                    }
                    let v = visibility(u, g, p);
                    if acc.is_none_or(|(m, _, _)| v < m) {
                        *acc = Some((v, g, p));
                    }
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
                (x, None) => x,
                (None, y) => y,
            },
        )?;
        let r = self.report("visibility");
        let Some((min, g, p)) = found else {
            return Ok(r.status(Status::NotApplicable).note("no 0-vings"));
        };
        let r = r.margin(rat(min as i64 - 3, 1));
        let note = format!("minimum 0-ving visibility {min}");
        if !self.triangular_and_large() {
            return Ok(r
                .status(Status::NotApplicable)
                .note(format!("{note}; needs a triangular hull and n >= 5")));
        }
        if min >= 3 {
            Ok(r.note(note))
        } else {
            Ok(r.status(Status::Violated).witness(Witness {
                graph: Some(g),
                vertex: Some(p),
                detail: format!("isolated vertex {p} sees {min} points"),
            }))
        }
    }

    /// Degree-3 and degree-4 counts of every triangulation, and at most one
    /// hull vertex of degree 3.
    pub fn triangulation_degree_lemmas(&self) -> Result<Vec<VerificationReport>, Error> {
        let u = self.u;
        let n = u.n() as i64;
        let applicable = self.triangular_and_large();
        let mut v3_margin: Option<(BigRational, EdgeSet)> = None;
        let mut v4_margin: Option<(BigRational, EdgeSet)> = None;
        let mut hull3: Option<(usize, EdgeSet)> = None;
        enumerate::enumerate_triangulations(u, self.cfg, |t| {
            let v3 = t.v3() as i64;
            let v4 = t.v4() as i64;
            let m3 = rat(2 * n - 3, 3) - rat(v3, 1);
            let m4 = rat(6 * n - 9 * v3 - 6, 2) - rat(v4, 1);
            if v3_margin.as_ref().is_none_or(|(m, _)| m3 < *m) {
                v3_margin = Some((m3, t.edges));
            }
            if v4_margin.as_ref().is_none_or(|(m, _)| m4 < *m) {
                v4_margin = Some((m4, t.edges));
            }
            let h = u
                .hull()
                .iter()
                .filter(|&&p| u.degree(t.edges, p) == 3)
                .count();
            if hull3.is_none_or(|(c, _)| h > c) {
                hull3 = Some((h, t.edges));
            }
        })?;
        let mut out = Vec::new();
        let items: [(&str, Option<(BigRational, EdgeSet)>); 3] = [
            ("triangulation-degrees[v3 <= 2n/3-1]", v3_margin),
            ("triangulation-degrees[v4 <= (6n-9v3-6)/2]", v4_margin),
            (
                "triangulation-degrees[hull vertices of degree 3 <= 1]",
                hull3.map(|(c, g)| (rat(1 - c as i64, 1), g)),
            ),
        ];
        for (claim, worst) in items {
            let r = self.report(claim);
            let Some((m, g)) = worst else {
                out.push(r.status(Status::NotApplicable).note("no triangulations"));
                continue;
            };
            let r = r.margin(m.clone());
            if !applicable {
                out.push(r.status(Status::NotApplicable).note(format!(
                    "needs a triangular hull and n >= 5; worst margin {}",
                    fmt_rat(&m)
                )));
            } else if m >= BigRational::zero() {
                out.push(r);
            } else {
                out.push(r.status(Status::Violated).witness(Witness {
                    graph: Some(g),
                    vertex: None,
                    detail: format!("margin {}", fmt_rat(&m)),
                }));
            }
        }
        Ok(out)
    }

    /// Per-graph charge at most `(11n-6)/112`, and potentials never increase
    /// from a graph to its containing triangulation.
    pub fn graph_charge_cap(&self) -> Result<Vec<VerificationReport>, Error> {
        let u = self.u;
        let n = u.n();
        let cap = charge_cap_closed_form(n as u64);
        #[derive(Default)]
        struct Acc {
            max: Option<(crate::dyadic::DyadicRational, EdgeSet)>,
            monotone_failure: Option<(EdgeSet, usize)>,
            charge_failure: Option<EdgeSet>,
        }
        let acc = fold_plane_graphs(
            u,
            self.cfg,
            Acc::default,
            |a, g| {
                let c = graph_charge_v0(u, g);
                let t = containing_triangulation(u, g);
                if a.monotone_failure.is_none() {
                    if let Some(p) = (0..n).find(|&p| potential(u, g, p) < potential(u, t, p)) {
                        a.monotone_failure = Some((g, p));
                    }
                }
                if a.charge_failure.is_none() && graph_charge_v0(u, t) < c {
                    a.charge_failure = Some(g);
                }
                if a.max.as_ref().is_none_or(|(m, _)| c > *m) {
                    a.max = Some((c, g));
                }
            },
            |a, b| Acc {
                max: match (a.max, b.max) {
                    (Some(x), Some(y)) => Some(if y.0 > x.0 { y } else { x }),
                    (x, None) => x,
                    (None, y) => y,
                },
                monotone_failure: a.monotone_failure.or(b.monotone_failure),
                charge_failure: a.charge_failure.or(b.charge_failure),
            },
        )?;

        let mut out = Vec::new();
        let r = self.report("charge-cap");
        if let Some((max, g)) = acc.max {
            let margin = &cap - max.to_rational();
            let r = r
                .margin(margin.clone())
                .note(format!("largest graph charge {max}"));
            if !self.triangular_and_large() {
                out.push(r.status(Status::NotApplicable));
            } else if cmp_rational(&max, &cap) != std::cmp::Ordering::Greater {
                out.push(r);
            } else {
                out.push(r.status(Status::Violated).witness(Witness {
                    graph: Some(g),
                    vertex: None,
                    detail: format!("charge {max} exceeds {}", fmt_rat(&cap)),
                }));
            }
        }

        let r = self.report("potential-monotonicity");
        match (acc.monotone_failure, acc.charge_failure) {
            (None, None) => out.push(r),
            (Some((g, p)), _) => out.push(r.status(Status::Violated).witness(Witness {
                graph: Some(g),
                vertex: Some(p),
                detail: format!(
                    "potential {} in the graph, {} in its containing triangulation",
                    potential(u, g, p),
                    potential(u, containing_triangulation(u, g), p)
                ),
            })),
            (None, Some(g)) => out.push(r.status(Status::Violated).witness(Witness {
                graph: Some(g),
                vertex: None,
                detail: "containing triangulation carries less charge".into(),
            })),
        }
        Ok(out)
    }

    /// Deletion identities: 0-vings at `q` correspond to plane graphs of
    /// `P \ {q}`, summed over all points and over internal points only.
    pub fn zero_ving_recurrence(&self) -> Result<Vec<VerificationReport>, Error> {
        let u = self.u;
        let n = u.n();
        let d = self.degrees()?;
        let internal: Vec<usize> = (0..n).filter(|&p| !u.is_hull_point(p) && n >= 3).collect();
        let internal_zero = fold_plane_graphs(
            u,
            self.cfg,
            || 0u128,
            |c, g| {
                *c += internal.iter().filter(|&&p| u.degree(g, p) == 0).count() as u128;
            },
            |a, b| a + b,
        )?;
        let internal_zero = BigUint::from(internal_zero);

        let mut deleted = Vec::with_capacity(n);
        for q in 0..n {
            let sub = Universe::new(u.points().without(q))?;
            deleted.push(count_plane_graphs(&sub, self.cfg)?);
        }
        let all_sum: BigUint = deleted.iter().sum();
        let internal_sum: BigUint = internal.iter().map(|&q| &deleted[q]).sum();

        let mut out = Vec::new();
        let identity = |claim: &str, lhs: &BigUint, rhs: &BigUint| {
            let r = self
                .report(claim)
                .margin(big(lhs) - big(rhs))
                .note(format!("lhs = {lhs}, rhs = {rhs}"));
            if lhs == rhs {
                r
            } else {
                r.status(Status::Violated).witness(Witness {
                    graph: None,
                    vertex: None,
                    detail: format!("{lhs} != {rhs}"),
                })
            }
        };
        out.push(identity(
            "deletion-identity[all points]",
            &d.ving_counts[0],
            &all_sum,
        ));
        out.push(identity(
            "deletion-identity[internal points]",
            &internal_zero,
            &internal_sum,
        ));

        // pg(P) >= (n / vhat_0) * min_q pg(P \ q), i.e. v0 total >= n * min.
        let r = self.report("deletion-identity[pg lower bound]");
        match deleted.iter().min() {
            Some(min) => {
                let rhs = min * BigUint::from(n);
                let margin = big(&d.ving_counts[0]) - big(&rhs);
                let r = r.margin(margin);
                out.push(if d.ving_counts[0] >= rhs {
                    r
                } else {
                    r.status(Status::Violated).witness(Witness {
                        graph: None,
                        vertex: None,
                        detail: format!("sum of 0-vings {} < n * min {}", d.ving_counts[0], rhs),
                    })
                });
            }
            None => out.push(r.status(Status::NotApplicable).note("empty point set")),
        }
        Ok(out)
    }

    /// Conservation of both charging schemes and the family bookkeeping.
    pub fn charging_conservation(&self) -> Result<Vec<VerificationReport>, Error> {
        let audit = charging::charge_audit(self.u, self.cfg)?;
        let mut out = Vec::new();

        let total = audit.total_charge.to_rational();
        let v0 = big(&audit.ving_counts[0]);
        let r = self
            .report("charging[graph charges sum to 0-vings]")
            .margin(&total - &v0);
        out.push(if total == v0 {
            r
        } else {
            r.status(Status::Violated).witness(Witness {
                graph: None,
                vertex: None,
                detail: format!(
                    "total charge {} vs {}",
                    audit.total_charge, audit.ving_counts[0]
                ),
            })
        });

        let bad_point = (0..audit.n).find(|&p| audit.family_sizes_at(p) != audit.pg);
        let r = self.report("charging[families partition the vings of each point]");
        out.push(match bad_point {
            None => r,
            Some(p) => r.status(Status::Violated).witness(Witness {
                graph: None,
                vertex: Some(p),
                detail: format!(
                    "family sizes sum to {} != pg {}",
                    audit.family_sizes_at(p),
                    audit.pg
                ),
            }),
        });

        let bad_degree = (0..audit.ving_counts.len())
            .find(|&i| audit.family_charge_total(i) != audit.ving_counts[i]);
        let r = self.report("charging[family shares reproduce i-ving counts]");
        out.push(match bad_degree {
            None => r,
            Some(i) => r.status(Status::Violated).witness(Witness {
                graph: None,
                vertex: None,
                detail: format!(
                    "degree {i}: families hand out {}, there are {}",
                    audit.family_charge_total(i),
                    audit.ving_counts[i]
                ),
            }),
        });
        Ok(out)
    }
}

pub fn verify_v0_upper(u: &Universe, cfg: &EnumConfig) -> Result<VerificationReport, Error> {
    Verifier::new(u, cfg).v0_upper()
}

pub fn verify_vi_upper(
    u: &Universe,
    cfg: &EnumConfig,
    i_max: usize,
) -> Result<Vec<VerificationReport>, Error> {
    Verifier::new(u, cfg).vi_upper(i_max)
}

pub fn verify_previous_lower(
    u: &Universe,
    cfg: &EnumConfig,
) -> Result<Vec<VerificationReport>, Error> {
    Verifier::new(u, cfg).previous_lower()
}

pub fn verify_visibility_lemma(
    u: &Universe,
    cfg: &EnumConfig,
) -> Result<VerificationReport, Error> {
    Verifier::new(u, cfg).visibility_lemma()
}

pub fn verify_triangulation_degree_lemmas(
    u: &Universe,
    cfg: &EnumConfig,
) -> Result<Vec<VerificationReport>, Error> {
    Verifier::new(u, cfg).triangulation_degree_lemmas()
}

pub fn verify_graph_charge_cap(
    u: &Universe,
    cfg: &EnumConfig,
) -> Result<Vec<VerificationReport>, Error> {
    Verifier::new(u, cfg).graph_charge_cap()
}

pub fn verify_zero_ving_recurrence(
    u: &Universe,
    cfg: &EnumConfig,
) -> Result<Vec<VerificationReport>, Error> {
    Verifier::new(u, cfg).zero_ving_recurrence()
}

/// Ranges for the standalone analytic checks.
#[derive(Debug, Clone)]
pub struct AnalyticLimits {
    pub plateau_i: u64,
    pub central_binomial_i: u64,
    pub harmonic_m: u64,
    pub stirling_m: u64,
}

impl Default for AnalyticLimits {
    fn default() -> Self {
        AnalyticLimits {
            plateau_i: 64,
            central_binomial_i: 10_000,
            harmonic_m: 10_000,
            stirling_m: 500,
        }
    }
}

/// Reports for the facts that do not depend on a point set.
pub fn analytic_reports(limits: &AnalyticLimits) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let mk = |claim: String, res: Result<(), analytic::AnalyticFailure>| {
        let r = VerificationReport::new(claim, "none");
        match res {
            Ok(()) => r,
            Err(f) => r.status(Status::Violated).witness(Witness {
                graph: None,
                vertex: None,
                detail: f.to_string(),
            }),
        }
    };
    let plateau = (1..=limits.plateau_i)
        .map(charging::max_family_charge)
        .find(|m| !(m.plateau_as_expected && m.tail_decreasing))
        .map_or(Ok(()), |m| {
            Err(analytic::AnalyticFailure {
                check: "argmax of C(j,i)/2^j is {2i-1, 2i}",
                at: m.i,
                detail: format!("argmax {:?}", m.argmax),
            })
        });
    out.push(mk(
        format!("analytic[charge plateau, i <= {}]", limits.plateau_i),
        plateau,
    ));
    out.push(mk(
        format!(
            "analytic[central binomial, i <= {}]",
            limits.central_binomial_i
        ),
        analytic::check_central_binomial(limits.central_binomial_i),
    ));
    out.push(mk(
        format!("analytic[harmonic residual, m <= {}]", limits.harmonic_m),
        analytic::check_harmonic_residuals(limits.harmonic_m),
    ));
    out.push(mk(
        format!("analytic[half harmonic sums, i <= {}]", limits.harmonic_m),
        analytic::check_half_harmonic_sums(limits.harmonic_m),
    ));
    out.push(mk(
        format!("analytic[Robbins-Stirling, m <= {}]", limits.stirling_m),
        analytic::check_stirling(limits.stirling_m),
    ));
    let ordering = if analytic::cap_constant_ordering() {
        Ok(())
    } else {
        Err(analytic::AnalyticFailure {
            check: "11/112 < 1/10.18",
            at: 0,
            detail: "comparison failed".into(),
        })
    };
    out.push(mk("analytic[11/112 < 1/10.18]".into(), ordering));
    out
}

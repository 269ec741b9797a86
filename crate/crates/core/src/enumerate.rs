//! Exhaustive enumeration of plane graphs and triangulations.
//!
//! Plane graphs of a point set are exactly the independent sets of the
//! crossing relation. The scan walks segment indices in increasing order,
//! keeping the set of still-available segments (not yet decided and not
//! crossed by a chosen one); each available segment is first skipped, then
//! chosen. Leaves are visited in that order, so the empty graph comes first.
//!
//! Parallel runs fix the skip/choose pattern of the first `split_depth`
//! segment indices, producing independent subtrees that are scanned on a
//! worker pool. Results are merged in subtree order, which makes every
//! aggregate identical for any worker count.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::crossing::Universe;
use crate::edgeset::EdgeSet;
use crate::error::Error;
use crate::geometry::segments_cross;

pub const DEFAULT_MAX_N: usize = 12;
pub const DEFAULT_SPLIT_DEPTH: usize = 8;

/// Growth rates bracketing the number of plane graphs on `n` points.
pub const GROWTH_LOW: f64 = 11.65;
pub const GROWTH_HIGH: f64 = 23.32;

#[derive(Debug, Clone)]
pub struct EnumConfig {
    pub max_n: usize,
    pub workers: usize,
    pub split_depth: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_n: DEFAULT_MAX_N,
            workers: 1,
            split_depth: DEFAULT_SPLIT_DEPTH,
        }
    }
}

impl EnumConfig {
    pub fn with_workers(workers: usize) -> Self {
        EnumConfig {
            workers,
            ..Default::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<(), Error> {
        if self.workers == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be at least 1".into(),
            ));
        }
        if n > self.max_n {
            let (low, high) = work_estimate(n);
            return Err(Error::OverCap {
                n,
                cap: self.max_n,
                low,
                high,
            });
        }
        Ok(())
    }
}

/// Rough a-priori range for the number of plane graphs on `n` points.
pub fn work_estimate(n: usize) -> (f64, f64) {
    (GROWTH_LOW.powi(n as i32), GROWTH_HIGH.powi(n as i32))
}

/// A crossing-free edge set of a specific universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    pub n: usize,
    pub edges: EdgeSet,
}

impl PlaneGraph {
    pub fn new(universe: &Universe, edges: EdgeSet) -> Result<Self, Error> {
        if !edges.is_subset(universe.all_segments()) {
            return Err(Error::InvalidArgument(format!(
                "edge vector {} references segments beyond {}",
                edges.to_hex(),
                universe.segment_count()
            )));
        }
        if !universe.crossings().is_crossing_free(edges) {
            return Err(Error::InvalidArgument(format!(
                "edge vector {} contains crossing segments",
                edges.to_hex()
            )));
        }
        Ok(PlaneGraph {
            n: universe.n(),
            edges,
        })
    }

    pub fn from_hex(universe: &Universe, hex: &str) -> Result<Self, Error> {
        let edges = EdgeSet::from_hex(hex)
            .ok_or_else(|| Error::InvalidArgument(format!("bad edge vector {hex:?}")))?;
        Self::new(universe, edges)
    }

    pub fn to_hex(&self) -> String {
        self.edges.to_hex()
    }
}

#[derive(Debug, Clone, Copy)]
struct Subtree {
    avail: EdgeSet,
    chosen: EdgeSet,
    /// Skipped segments not yet crossed by a chosen one (maximal mode only).
    pending: EdgeSet,
}

fn split(universe: &Universe, depth: usize) -> Vec<Subtree> {
    let mut frontier = vec![Subtree {
        avail: universe.all_segments(),
        chosen: EdgeSet::EMPTY,
        pending: EdgeSet::EMPTY,
    }];
    for s in 0..depth.min(universe.segment_count()) {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for t in frontier {
            if !t.avail.contains(s) {
                next.push(t);
                continue;
            }
            let rest = t.avail.without(s);
            let blocked = universe.cross(s);
            next.push(Subtree {
                avail: rest,
                chosen: t.chosen,
                pending: t.pending.with(s),
            });
            next.push(Subtree {
                avail: rest & !blocked,
                chosen: t.chosen.with(s),
                pending: t.pending & !blocked,
            });
        }
        frontier = next;
    }
    frontier
}

fn scan<F: FnMut(EdgeSet)>(universe: &Universe, avail: EdgeSet, chosen: EdgeSet, visit: &mut F) {
    match avail.first() {
        None => visit(chosen),
        Some(s) => {
            let rest = avail.without(s);
            scan(universe, rest, chosen, visit);
            scan(universe, rest & !universe.cross(s), chosen.with(s), visit);
        }
    }
}

fn scan_maximal<F: FnMut(EdgeSet)>(
    universe: &Universe,
    avail: EdgeSet,
    chosen: EdgeSet,
    pending: EdgeSet,
    visit: &mut F,
) {
    // A skipped segment survives only if some still-available segment can
    // cross it later.
    if pending.iter().any(|t| !universe.cross(t).intersects(avail)) {
        return;
    }
    match avail.first() {
        None => {
            if pending.is_empty() {
                visit(chosen);
            }
        }
        Some(s) => {
            let rest = avail.without(s);
            let blocked = universe.cross(s);
            scan_maximal(universe, rest, chosen, pending.with(s), visit);
            scan_maximal(
                universe,
                rest & !blocked,
                chosen.with(s),
                pending & !blocked,
                visit,
            );
        }
    }
}

fn run_subtrees<T, F>(workers: usize, jobs: &[Subtree], work: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Subtree) -> T + Sync + Send,
{
    if workers <= 1 {
        return jobs.iter().map(work).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| jobs.par_iter().map(&work).collect()),
        Err(_) => jobs.iter().map(work).collect(),
    }
}

fn fold_generic<T, I, V, M>(
    universe: &Universe,
    cfg: &EnumConfig,
    maximal: bool,
    init: I,
    visit: V,
    merge: M,
) -> Result<T, Error>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, EdgeSet) + Sync + Send,
    M: Fn(T, T) -> T,
{
    cfg.check(universe.n())?;
    let jobs = split(universe, cfg.split_depth);
    let parts = run_subtrees(cfg.workers, &jobs, |job| {
        let mut acc = init();
        let mut f = |g: EdgeSet| visit(&mut acc, g);
        if maximal {
            scan_maximal(universe, job.avail, job.chosen, job.pending, &mut f);
        } else {
            scan(universe, job.avail, job.chosen, &mut f);
        }
        acc
    });
    Ok(parts.into_iter().fold(init(), merge))
}

/// Folds `visit` over every plane graph, one accumulator per subtree,
/// merging accumulators in subtree order.
pub fn fold_plane_graphs<T, I, V, M>(
    universe: &Universe,
    cfg: &EnumConfig,
    init: I,
    visit: V,
    merge: M,
) -> Result<T, Error>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, EdgeSet) + Sync + Send,
    M: Fn(T, T) -> T,
{
    fold_generic(universe, cfg, false, init, visit, merge)
}

/// As [`fold_plane_graphs`], restricted to triangulations.
pub fn fold_triangulations<T, I, V, M>(
    universe: &Universe,
    cfg: &EnumConfig,
    init: I,
    visit: V,
    merge: M,
) -> Result<T, Error>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, EdgeSet) + Sync + Send,
    M: Fn(T, T) -> T,
{
    fold_generic(universe, cfg, true, init, visit, merge)
}

/// Calls `visit` once per plane graph (including the empty one) in scan
/// order, on the calling thread. Returns the number of visits.
pub fn enumerate_plane_graphs<F: FnMut(EdgeSet)>(
    universe: &Universe,
    cfg: &EnumConfig,
    mut visit: F,
) -> Result<u128, Error> {
    cfg.check(universe.n())?;
    let mut count = 0u128;
    scan(
        universe,
        universe.all_segments(),
        EdgeSet::EMPTY,
        &mut |g| {
            count += 1;
            visit(g);
        },
    );
    Ok(count)
}

pub fn count_plane_graphs(universe: &Universe, cfg: &EnumConfig) -> Result<BigUint, Error> {
    let count = fold_plane_graphs(universe, cfg, || 0u128, |c, _| *c += 1, |a, b| a + b)?;
    Ok(BigUint::from(count))
}

/// Largest segment count the brute-force oracle accepts.
pub const BRUTEFORCE_MAX_SEGMENTS: usize = 22;

/// Test oracle: tries every edge subset against crossing pairs computed
/// directly from the coordinates.
pub fn count_plane_graphs_bruteforce(universe: &Universe) -> Result<BigUint, Error> {
    let m = universe.segment_count();
    if m > BRUTEFORCE_MAX_SEGMENTS {
        return Err(Error::TooManySegments {
            got: m,
            max: BRUTEFORCE_MAX_SEGMENTS,
        });
    }
    let pts = universe.points();
    let table = universe.table();
    let mut conflicts: Vec<u64> = Vec::new();
    for k in 0..m {
        let (a, b) = table.segment(k);
        for l in k + 1..m {
            let (c, d) = table.segment(l);
            if segments_cross(pts.point(a), pts.point(b), pts.point(c), pts.point(d))? {
                conflicts.push(1 << k | 1 << l);
            }
        }
    }
    let count = (0u64..1 << m)
        .filter(|&mask| conflicts.iter().all(|&pair| mask & pair != pair))
        .count();
    Ok(BigUint::from(count))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct DegreeTally {
    graphs: u128,
    edges: u128,
    ving: Vec<u128>,
}

impl DegreeTally {
    fn merge(mut self, other: DegreeTally) -> DegreeTally {
        self.graphs += other.graphs;
        self.edges += other.edges;
        if self.ving.len() < other.ving.len() {
            self.ving.resize(other.ving.len(), 0);
        }
        for (a, b) in self.ving.iter_mut().zip(other.ving) {
            *a += b;
        }
        self
    }
}

/// Exact degree statistics of a uniformly random plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeExpectation {
    pub n: usize,
    pub pg: BigUint,
    /// `ving_counts[i]` is the number of degree-`i` vertices summed over all
    /// plane graphs, for `i` in `0..n` (at least one entry).
    pub ving_counts: Vec<BigUint>,
    /// Total number of edges summed over all plane graphs.
    pub edge_total: BigUint,
}

impl DegreeExpectation {
    /// Expected number of degree-`i` vertices; zero beyond `n - 1`.
    pub fn vhat(&self, i: usize) -> BigRational {
        match self.ving_counts.get(i) {
            Some(c) => BigRational::new(c.clone().into(), self.pg.clone().into()),
            None => BigRational::zero(),
        }
    }

    pub fn vhats(&self) -> Vec<BigRational> {
        (0..self.ving_counts.len()).map(|i| self.vhat(i)).collect()
    }
}

pub fn expected_degree_vector(
    universe: &Universe,
    cfg: &EnumConfig,
) -> Result<DegreeExpectation, Error> {
    let n = universe.n();
    let width = n.max(1);
    let tally = fold_plane_graphs(
        universe,
        cfg,
        || DegreeTally {
            ving: vec![0; width],
            ..Default::default()
        },
        |t, g| {
            t.graphs += 1;
            t.edges += g.len() as u128;
            for p in 0..n {
                t.ving[universe.degree(g, p)] += 1;
            }
        },
        DegreeTally::merge,
    )?;
    let mut ving_counts: Vec<BigUint> = tally.ving.into_iter().map(BigUint::from).collect();
    if n == 0 {
        ving_counts[0] = BigUint::zero();
    }
    Ok(DegreeExpectation {
        n,
        pg: BigUint::from(tally.graphs),
        ving_counts,
        edge_total: BigUint::from(tally.edges),
    })
}

/// Whether no further segment can be added to `edges` without a crossing.
pub fn is_triangulation(universe: &Universe, edges: EdgeSet) -> bool {
    (0..universe.segment_count()).all(|k| edges.contains(k) || universe.cross(k).intersects(edges))
}

/// Edge count of every triangulation: `3n - 3 - h`.
pub fn triangulation_edge_count(universe: &Universe) -> usize {
    let n = universe.n();
    match n {
        0 | 1 => 0,
        2 => 1,
        _ => 3 * n - 3 - universe.hull().len(),
    }
}

/// Extends `edges` to a triangulation by adding, in increasing index order,
/// every segment that crosses nothing already present.
pub fn containing_triangulation(universe: &Universe, edges: EdgeSet) -> EdgeSet {
    let mut t = edges;
    for k in 0..universe.segment_count() {
        if !t.contains(k) && !universe.cross(k).intersects(t) {
            t.insert(k);
        }
    }
    t
}

/// Degree data of one triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationRecord {
    pub edges: EdgeSet,
    /// `histogram[d]` = number of vertices of degree `d`, `d` in `0..n`.
    pub histogram: Vec<usize>,
}

impl TriangulationRecord {
    pub fn new(universe: &Universe, edges: EdgeSet) -> Self {
        let n = universe.n();
        let mut histogram = vec![0; n.max(1)];
        for p in 0..n {
            histogram[universe.degree(edges, p)] += 1;
        }
        TriangulationRecord { edges, histogram }
    }

    pub fn count_of_degree(&self, d: usize) -> usize {
        self.histogram.get(d).copied().unwrap_or(0)
    }

    pub fn v3(&self) -> usize {
        self.count_of_degree(3)
    }

    pub fn v4(&self) -> usize {
        self.count_of_degree(4)
    }
}

/// Exact aggregates over all triangulations of a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationStats {
    pub count: BigUint,
    /// Vertices of each degree, summed over all triangulations.
    pub degree_totals: Vec<BigUint>,
    /// Number of triangulations with each `(v3, v4)` pair, sorted.
    pub v3_v4_census: Vec<((usize, usize), BigUint)>,
}

/// Visits every triangulation in scan order and aggregates its degree data.
pub fn enumerate_triangulations<F: FnMut(&TriangulationRecord)>(
    universe: &Universe,
    cfg: &EnumConfig,
    mut visit: F,
) -> Result<TriangulationStats, Error> {
    let records = fold_triangulations(
        universe,
        cfg,
        Vec::new,
        |acc: &mut Vec<EdgeSet>, g| acc.push(g),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    let n = universe.n();
    let mut degree_totals = vec![0u128; n.max(1)];
    let mut census = std::collections::BTreeMap::<(usize, usize), u128>::new();
    for &edges in &records {
        let rec = TriangulationRecord::new(universe, edges);
        for (d, c) in rec.histogram.iter().enumerate() {
            degree_totals[d] += *c as u128;
        }
        *census.entry((rec.v3(), rec.v4())).or_default() += 1;
        visit(&rec);
    }
    Ok(TriangulationStats {
        count: BigUint::from(records.len()),
        degree_totals: degree_totals.into_iter().map(BigUint::from).collect(),
        v3_v4_census: census
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect(),
    })
}

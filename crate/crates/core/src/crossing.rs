//! Candidate segments of a point set and their crossing relation.
//!
//! Segment `k` is the `k`-th unordered pair `(i, j)`, `i < j`, in
//! lexicographic order: `(0,1), (0,2), .., (0,n-1), (1,2), ..`. Every
//! serialized graph depends on this indexing.

use crate::edgeset::EdgeSet;
use crate::error::Error;
use crate::geometry::{segments_cross, PointSet};

/// Largest point count whose segments fit in an [`EdgeSet`].
pub const MAX_POINTS: usize = 16;

/// Human-readable statement of the segment indexing, embedded in reports.
pub const INDEXING_CONVENTION: &str =
    "segment k = k-th pair (i,j), i<j, in lexicographic order; bit k of the hex edge vector, least-significant first";

pub fn segment_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone)]
pub struct SegmentTable {
    n: usize,
    segments: Vec<(usize, usize)>,
    index: Vec<usize>,
    hull_edges: EdgeSet,
}

impl SegmentTable {
    pub fn build(points: &PointSet) -> Result<Self, Error> {
        let n = points.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints { n, max: MAX_POINTS });
        }
        let mut segments = Vec::with_capacity(segment_count(n));
        let mut index = vec![usize::MAX; n * n];
        for i in 0..n {
            for j in i + 1..n {
                index[i * n + j] = segments.len();
                index[j * n + i] = segments.len();
                segments.push((i, j));
            }
        }
        let mut table = SegmentTable {
            n,
            segments,
            index,
            hull_edges: EdgeSet::EMPTY,
        };
        if n >= 3 {
            let hull = points.convex_hull()?;
            for w in 0..hull.len() {
                let k = table.index_of(hull[w], hull[(w + 1) % hull.len()]);
                table.hull_edges.insert(k);
            }
        } else if n == 2 {
            table.hull_edges.insert(0);
        }
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segment(&self, k: usize) -> (usize, usize) {
        self.segments[k]
    }

    pub fn segments(&self) -> &[(usize, usize)] {
        &self.segments
    }

    /// Index of the segment joining `i` and `j` (in either order).
    #[inline]
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j);
        self.index[i * self.n + j]
    }

    pub fn hull_edges(&self) -> EdgeSet {
        self.hull_edges
    }
}

#[derive(Debug, Clone)]
pub struct CrossingSets {
    cross: Vec<EdgeSet>,
}

impl CrossingSets {
    pub fn build(points: &PointSet, table: &SegmentTable) -> Result<Self, Error> {
        let m = table.len();
        let mut cross = vec![EdgeSet::EMPTY; m];
        for k in 0..m {
            let (a, b) = table.segment(k);
            for l in k + 1..m {
                let (c, d) = table.segment(l);
                if segments_cross(
                    points.point(a),
                    points.point(b),
                    points.point(c),
                    points.point(d),
                )? {
                    cross[k].insert(l);
                    cross[l].insert(k);
                }
            }
        }
        Ok(CrossingSets { cross })
    }

    #[inline]
    pub fn of(&self, k: usize) -> EdgeSet {
        self.cross[k]
    }

    pub fn pair_count(&self) -> usize {
        self.cross.iter().map(|c| c.len()).sum::<usize>() / 2
    }

    /// Whether no two segments of `edges` cross.
    pub fn is_crossing_free(&self, edges: EdgeSet) -> bool {
        edges.iter().all(|k| !self.cross[k].intersects(edges))
    }
}

/// A validated point set with its segment table, crossing sets, hull and
/// per-vertex incidence masks. Immutable once built.
#[derive(Debug, Clone)]
pub struct Universe {
    points: PointSet,
    table: SegmentTable,
    crossings: CrossingSets,
    hull: Vec<usize>,
    incident: Vec<EdgeSet>,
}

impl Universe {
    pub fn new(points: PointSet) -> Result<Self, Error> {
        let table = SegmentTable::build(&points)?;
        let crossings = CrossingSets::build(&points, &table)?;
        let n = points.len();
        let hull = if n >= 3 {
            points.convex_hull()?
        } else {
            (0..n).collect()
        };
        let mut incident = vec![EdgeSet::EMPTY; n];
        for (k, &(i, j)) in table.segments().iter().enumerate() {
            incident[i].insert(k);
            incident[j].insert(k);
        }
        Ok(Universe {
            points,
            table,
            crossings,
            hull,
            incident,
        })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn segment_count(&self) -> usize {
        self.table.len()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn table(&self) -> &SegmentTable {
        &self.table
    }

    pub fn crossings(&self) -> &CrossingSets {
        &self.crossings
    }

    #[inline]
    pub fn cross(&self, k: usize) -> EdgeSet {
        self.crossings.of(k)
    }

    /// Segments with `p` as an endpoint.
    #[inline]
    pub fn incident(&self, p: usize) -> EdgeSet {
        self.incident[p]
    }

    #[inline]
    pub fn degree(&self, edges: EdgeSet, p: usize) -> usize {
        (edges & self.incident[p]).len()
    }

    pub fn all_segments(&self) -> EdgeSet {
        EdgeSet::full(self.table.len())
    }

    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    pub fn is_hull_point(&self, p: usize) -> bool {
        self.hull.contains(&p)
    }

    pub fn is_triangular_hull(&self) -> bool {
        self.n() >= 3 && self.hull.len() == 3
    }
}

//! Exact integer predicates and point-set validation.
//!
//! Every coordinate is an integer bounded by [`COORD_LIMIT`] in absolute
//! value, so the 2x2 orientation determinant is at most `2 * (2^21)^2 = 2^43`
//! and is evaluated exactly in `i64`.

use std::fmt;

use crate::error::Error;

/// Largest admissible absolute coordinate value.
pub const COORD_LIMIT: i64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of `(b - a) x (c - a)`.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    match det.signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// Whether the open segments `ab` and `cd` share an interior point.
///
/// Segments sharing an endpoint never cross. Any collinear triple among
/// the four endpoints is rejected, since general position rules it out.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> Result<bool, Error> {
    if a == c || a == d || b == c || b == d {
        return Ok(false);
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if [o1, o2, o3, o4].contains(&Orientation::Collinear) {
        return Err(Error::Degenerate(format!(
            "collinear triple among {a}, {b}, {c}, {d}"
        )));
    }
    Ok(o1 != o2 && o3 != o4)
}

/// A single reason a point list fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    OutOfRange(usize),
    Duplicate(usize, usize),
    Collinear(usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange(i) => {
                write!(f, "point {i} exceeds the coordinate limit 2^20")
            }
            Violation::Duplicate(i, j) => write!(f, "points {i} and {j} coincide"),
            Violation::Collinear(i, j, k) => write!(f, "points {i}, {j}, {k} are collinear"),
        }
    }
}

/// Lists every violation of the general-position requirements.
///
/// Triples that contain a duplicated pair are reported as duplicates only.
pub fn validate_general_position(points: &[Point]) -> Result<(), Vec<Violation>> {
    let n = points.len();
    let mut violations = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !p.in_range() {
            violations.push(Violation::OutOfRange(i));
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                violations.push(Violation::Duplicate(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                continue;
            }
            for k in j + 1..n {
                if points[i] == points[k] || points[j] == points[k] {
                    continue;
                }
                if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                    violations.push(Violation::Collinear(i, j, k));
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Points in general position, labelled `0..n` by their order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, Error> {
        validate_general_position(&points).map_err(Error::Validation)?;
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, label: usize) -> Point {
        self.points[label]
    }

    /// The same configuration with `label` removed; later labels shift down.
    pub fn without(&self, label: usize) -> PointSet {
        let mut points = self.points.clone();
        points.remove(label);
        PointSet { points }
    }

    /// Convex hull labels in counter-clockwise order, starting from the
    /// lowest-leftmost point.
    pub fn convex_hull(&self) -> Result<Vec<usize>, Error> {
        let n = self.points.len();
        if n < 3 {
            return Err(Error::TooFewPoints { needed: 3, got: n });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.points[i].x, self.points[i].y));

        // Andrew's monotone chain; no collinear triples, so strict turns only.
        let mut hull: Vec<usize> = Vec::with_capacity(2 * n);
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
                Box::new(order.iter())
            } else {
                Box::new(order.iter().rev())
            };
            for &i in iter {
                while hull.len() >= start + 2 {
                    let a = self.points[hull[hull.len() - 2]];
                    let b = self.points[hull[hull.len() - 1]];
                    if orientation(a, b, self.points[i]) == Orientation::CounterClockwise {
                        break;
                    }
                    hull.pop();
                }
                hull.push(i);
            }
            hull.pop();
        }
        Ok(hull)
    }

    pub fn is_triangular_hull(&self) -> bool {
        match self.convex_hull() {
            Ok(h) => h.len() == 3,
            Err(_) => false,
        }
    }

    /// Labels that are not hull vertices, ascending. Empty when `n < 3`
    /// (every point is on the hull).
    pub fn internal_points(&self) -> Vec<usize> {
        let hull = match self.convex_hull() {
            Ok(h) => h,
            Err(_) => return Vec::new(),
        };
        (0..self.len()).filter(|i| !hull.contains(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            orientation(p(0, 0), p(1, 0), p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(p(0, 0), p(1, 1), p(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(p(0, 0), p(0, 1), p(1, 0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn orientation_at_coordinate_limit() {
        let l = COORD_LIMIT;
        assert_eq!(
            orientation(p(-l, -l), p(l, -l), p(l, l)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(p(-l, -l), p(l, l), p(l, l - 1)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn crossing_examples() {
        assert!(segments_cross(p(0, 0), p(2, 2), p(0, 2), p(2, 0)).unwrap());
        assert!(!segments_cross(p(0, 0), p(1, 0), p(0, 0), p(0, 1)).unwrap());
        assert!(!segments_cross(p(0, 0), p(1, 0), p(0, 1), p(1, 1)).unwrap());
    }

    #[test]
    fn crossing_rejects_collinear_input() {
        let err = segments_cross(p(0, 0), p(2, 0), p(1, 0), p(1, 5)).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
    }

    #[test]
    fn validation_examples() {
        assert!(validate_general_position(&[p(0, 0), p(1, 0), p(0, 1)]).is_ok());
        assert_eq!(
            validate_general_position(&[p(0, 0), p(1, 1), p(2, 2)]),
            Err(vec![Violation::Collinear(0, 1, 2)])
        );
        assert_eq!(
            validate_general_position(&[p(0, 0), p(0, 0), p(1, 1)]),
            Err(vec![Violation::Duplicate(0, 1)])
        );
        let big = COORD_LIMIT + 1;
        assert_eq!(
            validate_general_position(&[p(big, 0)]),
            Err(vec![Violation::OutOfRange(0)])
        );
    }

    #[test]
    fn validation_lists_every_collinear_triple() {
        let pts = [p(0, 0), p(1, 1), p(2, 2), p(3, 3)];
        let v = validate_general_position(&pts).unwrap_err();
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn hull_examples() {
        let tri = PointSet::from_coords(&[(0, 0), (4, 0), (0, 4)]).unwrap();
        assert_eq!(tri.convex_hull().unwrap(), vec![0, 1, 2]);
        assert!(tri.is_triangular_hull());

        let with_inner = PointSet::from_coords(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
        let hull = with_inner.convex_hull().unwrap();
        assert_eq!(hull.len(), 3);
        assert!(!hull.contains(&3));
        assert_eq!(with_inner.internal_points(), vec![3]);

        let square = PointSet::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(square.convex_hull().unwrap(), vec![0, 1, 2, 3]);
        assert!(!square.is_triangular_hull());

        let two_inner = PointSet::from_coords(&[(0, 0), (10, 0), (0, 10), (2, 3), (3, 1)]).unwrap();
        assert!(two_inner.is_triangular_hull());
    }

    #[test]
    fn hull_needs_three_points() {
        let two = PointSet::from_coords(&[(0, 0), (1, 0)]).unwrap();
        assert!(matches!(
            two.convex_hull(),
            Err(Error::TooFewPoints { needed: 3, got: 2 })
        ));
    }
}

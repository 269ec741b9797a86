//! The `.pts` text format: a count line, then one `x y` line per point.
//! Labels follow line order.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::geometry::{Point, PointSet};

/// Parses coordinates without validating general position.
pub fn parse_points(text: &str) -> Result<Vec<Point>, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input, expected a point count".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("line 1: expected a point count, got {header:?}")))?;
    let mut points = Vec::with_capacity(n);
    for (lineno, line) in lines {
        let mut fields = line.split_whitespace();
        let mut coord = |what: &str| -> Result<i64, Error> {
            let f = fields
                .next()
                .ok_or_else(|| Error::Parse(format!("line {}: missing {what}", lineno + 1)))?;
            f.parse()
                .map_err(|_| Error::Parse(format!("line {}: bad {what} {f:?}", lineno + 1)))
        };
        let x = coord("x")?;
        let y = coord("y")?;
        if fields.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: trailing fields",
                lineno + 1
            )));
        }
        points.push(Point::new(x, y));
    }
    if points.len() != n {
        return Err(Error::Parse(format!(
            "header announces {n} points, found {}",
            points.len()
        )));
    }
    Ok(points)
}

/// Parses and validates a point set.
pub fn parse(text: &str) -> Result<PointSet, Error> {
    PointSet::new(parse_points(text)?)
}

pub fn read(path: &Path) -> Result<PointSet, Error> {
    parse(&fs::read_to_string(path)?)
}

/// Canonical text form; `parse(&to_string(p)) == p`.
pub fn to_string(points: &PointSet) -> String {
    let mut s = format!("{}\n", points.len());
    for p in points.points() {
        s.push_str(&format!("{} {}\n", p.x, p.y));
    }
    s
}

pub fn write(path: &Path, points: &PointSet) -> Result<(), Error> {
    fs::write(path, to_string(points))?;
    Ok(())
}

/// SHA-256 of the canonical text, hex encoded.
pub fn hash(points: &PointSet) -> String {
    hex::encode(Sha256::digest(to_string(points).as_bytes()))
}

/// Short human-readable identifier used in reports.
pub fn descriptor(points: &PointSet) -> String {
    format!("n={} sha256:{}", points.len(), &hash(points)[..16])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "3\n0 0\n4 0\n0 4\n";
        let p = parse(text).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.point(1), Point::new(4, 0));
        assert_eq!(to_string(&p), text);
    }

    #[test]
    fn tolerates_blank_lines_and_spacing() {
        let p = parse("2\n\n  -1   5\n2 -3\n\n").unwrap();
        assert_eq!(p.point(0), Point::new(-1, 5));
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "x\n",
            "2\n0 0\n",
            "1\n0\n",
            "1\n0 0 0\n",
            "1\na b\n",
            "1\n0 0\n1 1\n",
        ] {
            assert!(matches!(parse(bad), Err(Error::Parse(_))), "{bad:?}");
        }
        assert!(matches!(
            parse("3\n0 0\n1 1\n2 2\n"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn hash_is_stable() {
        let p = parse("3\n0 0\n4 0\n0 4\n").unwrap();
        assert_eq!(hash(&p), hash(&parse("3\n0 0\n4 0\n0 4").unwrap()));
        assert_eq!(hash(&p).len(), 64);
        assert!(descriptor(&p).starts_with("n=3 sha256:"));
    }
}

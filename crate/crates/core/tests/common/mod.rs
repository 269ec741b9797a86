//! Slow, obviously-correct reference implementations used as oracles.
//! Nothing here calls into the library's geometry or enumeration.

#![allow(dead_code)]

use std::collections::HashMap;

pub type Coord = (i64, i64);

/// Proper crossing of segments `ab` and `cd` by solving
/// `a + t (b - a) = c + s (d - c)` with Cramer's rule and testing
/// `0 < t, s < 1` on the exact fractions.
pub fn cross_parametric(a: Coord, b: Coord, c: Coord, d: Coord) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (rx, ry) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (sx, sy) = ((d.0 - c.0) as i128, (d.1 - c.1) as i128);
    let (qx, qy) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128);
    let den = rx * sy - ry * sx;
    if den == 0 {
        return false;
    }
    let t_num = qx * sy - qy * sx;
    let s_num = qx * ry - qy * rx;
    let inside = |num: i128| {
        if den > 0 {
            0 < num && num < den
        } else {
            den < num && num < 0
        }
    };
    inside(t_num) && inside(s_num)
}

pub fn collinear(a: Coord, b: Coord, c: Coord) -> bool {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 == (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

pub fn general_position(pts: &[Coord]) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return false;
            }
            for k in j + 1..n {
                if collinear(pts[i], pts[j], pts[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Segments in lexicographic order and, for each, the mask of segments it
/// crosses.
pub struct Crossings {
    pub segs: Vec<(usize, usize)>,
    pub conflicts: Vec<u64>,
}

pub fn crossings(pts: &[Coord]) -> Crossings {
    let n = pts.len();
    let mut segs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            segs.push((i, j));
        }
    }
    assert!(segs.len() <= 64);
    let conflicts = segs
        .iter()
        .map(|&(a, b)| {
            segs.iter().enumerate().fold(0u64, |m, (k, &(c, d))| {
                if cross_parametric(pts[a], pts[b], pts[c], pts[d]) {
                    m | 1 << k
                } else {
                    m
                }
            })
        })
        .collect();
    Crossings { segs, conflicts }
}

fn is_plane(cr: &Crossings, mask: u64) -> bool {
    (0..cr.segs.len()).all(|k| mask >> k & 1 == 0 || cr.conflicts[k] & mask == 0)
}

/// Every crossing-free subset, by trying all `2^m` of them.
pub fn all_plane_graphs(pts: &[Coord]) -> Vec<u64> {
    let cr = crossings(pts);
    let m = cr.segs.len();
    assert!(m <= 21, "too many segments for exhaustive subsets");
    (0..1u64 << m).filter(|&g| is_plane(&cr, g)).collect()
}

pub fn brute_pg(pts: &[Coord]) -> u64 {
    all_plane_graphs(pts).len() as u64
}

pub fn degree(segs: &[(usize, usize)], g: u64, p: usize) -> usize {
    segs.iter()
        .enumerate()
        .filter(|&(k, &(a, b))| g >> k & 1 == 1 && (a == p || b == p))
        .count()
}

/// `counts[i]` = number of (point, graph) pairs with the point of degree `i`.
pub fn brute_ving_counts(pts: &[Coord]) -> Vec<u64> {
    let cr = crossings(pts);
    let n = pts.len();
    let mut counts = vec![0u64; n.max(1)];
    for g in all_plane_graphs(pts) {
        for p in 0..n {
            counts[degree(&cr.segs, g, p)] += 1;
        }
    }
    counts
}

/// Maximal crossing-free subsets.
pub fn brute_triangulations(pts: &[Coord]) -> Vec<u64> {
    let cr = crossings(pts);
    let m = cr.segs.len();
    all_plane_graphs(pts)
        .into_iter()
        .filter(|&g| (0..m).all(|k| g >> k & 1 == 1 || cr.conflicts[k] & g != 0))
        .collect()
}

/// Points `q` such that `pq` is absent from `g` and crosses none of its edges.
pub fn brute_visibility(pts: &[Coord], g: u64, p: usize) -> usize {
    let cr = crossings(pts);
    (0..pts.len())
        .filter(|&q| q != p)
        .filter(|&q| {
            let k = cr
                .segs
                .iter()
                .position(|&s| s == (p.min(q), p.max(q)))
                .unwrap();
            g >> k & 1 == 0 && cr.conflicts[k] & g == 0
        })
        .count()
}

/// Plane graphs on `m` points in convex position, from the combinatorial
/// crossing rule alone: chords `(i,j)` and `(k,l)` cross iff their
/// endpoints interleave around the circle.
pub fn convex_pg(m: usize) -> u128 {
    let mut segs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            segs.push((i, j));
        }
    }
    let conflicts: Vec<u64> = segs
        .iter()
        .map(|&(i, j)| {
            segs.iter().enumerate().fold(0u64, |acc, (k, &(a, b))| {
                if (i < a && a < j && j < b) || (a < i && i < b && b < j) {
                    acc | 1 << k
                } else {
                    acc
                }
            })
        })
        .collect();
    fn independent(mask: u64, conflicts: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let r =
            independent(rest, conflicts, memo) + independent(rest & !conflicts[v], conflicts, memo);
        memo.insert(mask, r);
        r
    }
    let full = if segs.len() == 64 {
        u64::MAX
    } else {
        (1u64 << segs.len()) - 1
    };
    independent(full, &conflicts, &mut HashMap::new())
}

pub fn catalan(k: u64) -> u64 {
    let mut c = 1u64;
    for i in 0..k {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Largest `v3/8 + v4/16 + (n - v3 - v4)/32` over the grid `v3, v4 in
/// (1/840) Z` inside the charge polygon, as `(numerator, denominator)` in
/// lowest terms. With `v3 = a/840`, `v4 = b/840` the objective is
/// `(3a + b + 840 n) / 26880`, increasing in `b`, so for each `a` only the
/// largest feasible `b` matters.
pub fn lp_grid_oracle(n: i64) -> (i64, i64) {
    let mut best: Option<i64> = None;
    for a in 0..=840 * n {
        if 3 * a > 840 * (2 * n - 3) {
            break;
        }
        // 2b <= 840 (6n - 6) - 9a  and  b <= 840 n - a
        let cap_deg = 840 * (6 * n - 6) - 9 * a;
        if cap_deg < 0 {
            break;
        }
        let b = (cap_deg / 2).min(840 * n - a);
        if b < 0 {
            continue;
        }
        let value = 3 * a + b + 840 * n;
        best = Some(best.map_or(value, |v: i64| v.max(value)));
    }
    let num = best.expect("feasible");
    let g = gcd(num, 26880);
    (num / g, 26880 / g)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn convex_polygon(m: usize) -> Vec<Coord> {
    // A regular-ish convex polygon on integer points: parabola (k, k^2)
    // reflected, different from the library's generator.
    (0..m as i64).map(|k| (3 * k, k * k + 7)).collect()
}

pub fn triangle() -> Vec<Coord> {
    vec![(0, 0), (4, 0), (0, 4)]
}

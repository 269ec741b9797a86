//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines show up in `cargo test` output.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use planegraph::charging::{
    binomial, charge_cap_closed_form, family_members, family_root, lp_charge_cap, visibility,
};
use planegraph::constructions::{
    construction_report, gen_cap_with_apex, gen_convex_chain, gen_triangular_hull_random,
    verify_product_law,
};
use planegraph::crossing::Universe;
use planegraph::edgeset::EdgeSet;
use planegraph::enumerate::{
    count_plane_graphs, count_plane_graphs_bruteforce, enumerate_plane_graphs,
    enumerate_triangulations, expected_degree_vector, EnumConfig,
};
use planegraph::geometry::PointSet;
use planegraph::verify::{analytic_reports, AnalyticLimits, Status, VerificationReport, Verifier};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coords(p: &PointSet) -> Vec<common::Coord> {
    p.points().iter().map(|q| (q.x, q.y)).collect()
}

fn universe(p: &PointSet) -> Universe {
    Universe::new(p.clone()).unwrap()
}

fn from_coords(c: &[common::Coord]) -> PointSet {
    PointSet::from_coords(c).unwrap()
}

fn cfg() -> EnumConfig {
    EnumConfig::default()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Named point sets with a triangular hull and `lo <= n <= hi`: the apex
/// construction plus two random sets per size.
fn triangular_sets(lo: usize, hi: usize) -> Vec<(String, PointSet)> {
    let mut out = Vec::new();
    for n in lo.max(4)..=hi {
        out.push((format!("cap_with_apex({n})"), gen_cap_with_apex(n).unwrap()));
        for seed in [1, 2] {
            out.push((
                format!("triangular_hull_random({n}, {seed})"),
                gen_triangular_hull_random(n, seed).unwrap(),
            ));
        }
    }
    out
}

fn require_all(reports: &[VerificationReport], name: &str, ok: &[Status]) -> Result<(), String> {
    for r in reports {
        ensure(ok.contains(&r.status), || {
            format!("{name}: {} is {} ({:?})", r.claim, r.status, r.witness)
        })?;
    }
    Ok(())
}

fn counting_ground_truth() -> Check {
    let tri = universe(&from_coords(&common::triangle()));
    ensure(count_plane_graphs(&tri, &cfg()).unwrap() == big(8), || {
        "triangle pg != 8".into()
    })?;
    let square = universe(&gen_convex_chain(4).unwrap());
    ensure(
        count_plane_graphs(&square, &cfg()).unwrap() == big(48),
        || "convex 4 pg != 48".into(),
    )?;
    for m in 3..=6 {
        for set in [
            gen_convex_chain(m).unwrap(),
            from_coords(&common::convex_polygon(m)),
        ] {
            let u = universe(&set);
            let got = count_plane_graphs(&u, &cfg()).unwrap();
            let oracle = common::brute_pg(&coords(&set));
            ensure(got == big(oracle), || {
                format!("m={m}: {got} vs oracle {oracle}")
            })?;
            ensure(count_plane_graphs_bruteforce(&u).unwrap() == got, || {
                format!("m={m}: library brute force disagrees")
            })?;
        }
    }
    Ok("pg(3)=8, pg(convex 4)=48, convex m<=6 equal the all-subsets oracle".into())
}

fn catalan_triangulations() -> Check {
    let mut seen = Vec::new();
    for m in 4..=7 {
        let expected = common::catalan(m as u64 - 2);
        for set in [
            gen_convex_chain(m).unwrap(),
            from_coords(&common::convex_polygon(m)),
        ] {
            let stats = enumerate_triangulations(&universe(&set), &cfg(), |_| {}).unwrap();
            ensure(stats.count == big(expected), || {
                format!("m={m}: {} triangulations, expected {expected}", stats.count)
            })?;
        }
        seen.push(expected.to_string());
    }
    Ok(format!("convex m=4..7 give {}", seen.join(", ")))
}

fn deletion_identity() -> Check {
    let mut sets: Vec<(String, PointSet)> = Vec::new();
    for n in 4..=7 {
        for seed in [10, 11] {
            sets.push((
                format!("random({n},{seed})"),
                gen_triangular_hull_random(n, seed).unwrap(),
            ));
        }
    }
    for n in 5..=7 {
        sets.push((format!("cap_with_apex({n})"), gen_cap_with_apex(n).unwrap()));
    }
    for m in 5..=6 {
        sets.push((format!("convex_chain({m})"), gen_convex_chain(m).unwrap()));
    }
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg()).zero_ving_recurrence().unwrap();
        require_all(&reports, name, &[Status::Holds])?;
        // Independent right-hand side from the subset oracle.
        let c = coords(set);
        let rhs: u64 = (0..c.len())
            .map(|q| {
                let mut rest = c.clone();
                rest.remove(q);
                common::brute_pg(&rest)
            })
            .sum();
        let lhs = expected_degree_vector(&u, &cfg()).unwrap().ving_counts[0].clone();
        ensure(lhs == big(rhs), || {
            format!("{name}: sum of 0-vings {lhs} vs oracle {rhs}")
        })?;
    }
    Ok(format!("{} sets with n <= 7", sets.len()))
}

fn bound_sets() -> Vec<(String, PointSet)> {
    triangular_sets(5, 8)
}

fn v0_upper() -> Check {
    let sets = bound_sets();
    let mut worst: Option<BigRational> = None;
    for (name, set) in &sets {
        let u = universe(set);
        let r = Verifier::new(&u, &cfg()).v0_upper().unwrap();
        require_all(std::slice::from_ref(&r), name, &[Status::Holds])?;
        if set.len() <= 6 {
            let oracle = common::brute_ving_counts(&coords(set));
            let d = expected_degree_vector(&u, &cfg()).unwrap();
            ensure(d.ving_counts[0] == big(oracle[0]), || {
                format!("{name}: v0 count disagrees with oracle")
            })?;
        }
        let rel = r.margin.unwrap() / BigRational::from_integer(set.len().into());
        if worst.as_ref().is_none_or(|w| rel < *w) {
            worst = Some(rel);
        }
    }
    Ok(format!(
        "{} sets, 5 <= n <= 8; smallest margin/n = {:.5}",
        sets.len(),
        worst.unwrap().to_f64().unwrap()
    ))
}

fn vi_upper() -> Check {
    let sets = bound_sets();
    let mut checks = 0;
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg()).vi_upper(set.len() - 1).unwrap();
        require_all(&reports, name, &[Status::Holds])?;
        checks += reports.len();
    }
    Ok(format!(
        "{checks} certified inequalities over {} sets",
        sets.len()
    ))
}

fn previous_lower() -> Check {
    let sets = bound_sets();
    let mut findings = Vec::new();
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg()).previous_lower().unwrap();
        require_all(&reports, name, &[Status::Holds, Status::Finding])?;
        findings.extend(
            reports
                .iter()
                .filter(|r| r.status == Status::Finding)
                .map(|r| format!("{name} {}", r.claim)),
        );
    }
    if findings.is_empty() {
        Ok(format!("all four bounds hold on {} sets", sets.len()))
    } else {
        Ok(format!("findings: {}", findings.join("; ")))
    }
}

fn visibility_lemma() -> Check {
    let sets = triangular_sets(5, 7);
    for (name, set) in &sets {
        let u = universe(set);
        let r = Verifier::new(&u, &cfg()).visibility_lemma().unwrap();
        require_all(std::slice::from_ref(&r), name, &[Status::Holds])?;
        if set.len() == 5 {
            let c = coords(set);
            for g in common::all_plane_graphs(&c) {
                for p in 0..c.len() {
                    let cr = common::crossings(&c);
                    if common::degree(&cr.segs, g, p) == 0 {
                        let v = common::brute_visibility(&c, g, p);
                        ensure(v >= 3, || {
                            format!("{name}: oracle visibility {v} at {p} in {g:x}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "every 0-ving of {} sets (n = 5, 6, 7) sees >= 3 points",
        sets.len()
    ))
}

fn triangulation_degrees() -> Check {
    let sets = triangular_sets(5, 9);
    let mut triangulations = 0u64;
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg())
            .triangulation_degree_lemmas()
            .unwrap();
        require_all(&reports, name, &[Status::Holds])?;
        // Recount directly from the degree histograms.
        let n = set.len() as i64;
        let stats = enumerate_triangulations(&u, &cfg(), |t| {
            let (v3, v4) = (t.v3() as i64, t.v4() as i64);
            assert!(3 * v3 <= 2 * n - 3 && 2 * v4 <= 6 * n - 9 * v3 - 6);
            let hull3 = u
                .hull()
                .iter()
                .filter(|&&p| u.degree(t.edges, p) == 3)
                .count();
            assert!(hull3 <= 1);
        })
        .unwrap();
        triangulations += stats.count.to_u64().unwrap();
    }
    Ok(format!(
        "{triangulations} triangulations over {} sets, 5 <= n <= 9",
        sets.len()
    ))
}

fn charging_conservation() -> Check {
    let mut sets: Vec<(String, PointSet)> = vec![
        ("triangle".into(), from_coords(&common::triangle())),
        ("convex(4)".into(), gen_convex_chain(4).unwrap()),
        ("convex(5)".into(), gen_convex_chain(5).unwrap()),
        ("convex(6)".into(), gen_convex_chain(6).unwrap()),
    ];
    sets.extend(triangular_sets(4, 6));
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg()).charging_conservation().unwrap();
        require_all(&reports, name, &[Status::Holds])?;

        // Count i-vings inside every family directly.
        let n = set.len();
        let mut graphs = Vec::new();
        enumerate_plane_graphs(&u, &cfg(), |g| graphs.push(g)).unwrap();
        for p in 0..n {
            let mut roots: Vec<EdgeSet> = graphs.iter().map(|&g| family_root(&u, g, p)).collect();
            roots.sort();
            roots.dedup();
            let mut total = BigUint::from(0u8);
            for &root in &roots {
                let j = visibility(&u, root, p);
                let members = family_members(&u, root, p).unwrap();
                total += BigUint::from(members.len());
                for i in 0..=j {
                    let count = members.iter().filter(|&&m| u.degree(m, p) == i).count();
                    ensure(BigUint::from(count) == binomial(j as u64, i as u64), || {
                        format!("{name}: point {p}, {j}-family has {count} {i}-vings")
                    })?;
                }
            }
            ensure(total == BigUint::from(graphs.len()), || {
                format!(
                    "{name}: families at {p} cover {total} of {} graphs",
                    graphs.len()
                )
            })?;
        }
    }
    Ok(format!("{} sets with n <= 6", sets.len()))
}

fn per_graph_cap() -> Check {
    let sets = triangular_sets(5, 7);
    for (name, set) in &sets {
        let u = universe(set);
        let reports = Verifier::new(&u, &cfg()).graph_charge_cap().unwrap();
        require_all(&reports, name, &[Status::Holds])?;
    }
    Ok(format!(
        "cap and potential monotonicity on {} sets, n = 5..7",
        sets.len()
    ))
}

fn lp_optimum() -> Check {
    for n in 5..=50u64 {
        let sol = lp_charge_cap(n).map_err(|e| e.to_string())?;
        let closed = charge_cap_closed_form(n);
        ensure(sol.value == closed, || {
            format!("n={n}: LP {} vs {}", sol.value, closed)
        })?;
        let (gn, gd) = common::lp_grid_oracle(n as i64);
        ensure(sol.value == BigRational::new(gn.into(), gd.into()), || {
            format!("n={n}: grid oracle {gn}/{gd}")
        })?;
        let ni = n as i64;
        ensure(
            sol.v3 == BigRational::new((4 * ni - 6).into(), 7.into())
                && sol.v4 == BigRational::new((3 * ni + 6).into(), 7.into()),
            || format!("n={n}: optimum at ({}, {})", sol.v3, sol.v4),
        )?;
    }
    Ok("(11n-6)/112 at v3=(4n-6)/7, v4=(3n+6)/7 for n = 5..50; grid oracle agrees".into())
}

fn analytic_suite() -> Check {
    let reports = analytic_reports(&AnalyticLimits::default());
    require_all(&reports, "analytic", &[Status::Holds])?;
    Ok(format!("{} certified checks", reports.len()))
}

fn construction() -> Check {
    for n in 4..=7 {
        let r = verify_product_law(n, &cfg()).unwrap();
        require_all(std::slice::from_ref(&r), "product law", &[Status::Holds])?;
    }
    let rep = construction_report(8, &cfg()).unwrap();
    let rows: Vec<_> = rep.ratios.iter().filter(|r| r.m >= 5).collect();
    for r in &rows {
        ensure((0.5..=2.0).contains(&r.ratio), || {
            format!("m={}: ratio {}", r.m, r.ratio)
        })?;
    }
    ensure(rep.ratio_distance_non_increasing(5), || {
        "ratio distance to 1 grows".into()
    })?;
    for t in &rep.trend {
        ensure(t.vhat0 >= t.predicted, || {
            format!("n={}: vhat_0 below the product-law value", t.n)
        })?;
    }
    let ratios: Vec<String> = rows.iter().map(|r| format!("{:.3}", r.ratio)).collect();
    Ok(format!(
        "product law n=4..7; ratios m=5..8: {}",
        ratios.join(", ")
    ))
}

fn determinism() -> Check {
    let dir = tempfile::TempDir::new().unwrap();
    let mut files = Vec::new();
    for (name, set) in [
        ("a.pts", gen_cap_with_apex(8).unwrap()),
        ("r.pts", gen_triangular_hull_random(8, 4).unwrap()),
        ("c.pts", gen_convex_chain(7).unwrap()),
    ] {
        let p = dir.path().join(name);
        planegraph::pts::write(&p, &set).unwrap();
        files.push(p);
    }
    for f in &files {
        for cmd in ["count", "degrees"] {
            for format in ["json", "csv"] {
                let mut outputs = Vec::new();
                for workers in ["1", "2", "8"] {
                    let mut out = Vec::new();
                    let mut err = Vec::new();
                    let args = [
                        "planegraph",
                        cmd,
                        f.to_str().unwrap(),
                        "--workers",
                        workers,
                        "--format",
                        format,
                    ];
                    let code = planegraph::cli::run(args, &mut out, &mut err);
                    ensure(code == 0, || format!("{cmd} exited {code}"))?;
                    outputs.push(out);
                }
                ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
                    format!(
                        "{cmd} --format {format} differs across workers on {}",
                        f.display()
                    )
                })?;
            }
        }
    }
    Ok("count and degrees byte-identical for workers 1, 2, 8".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "counting ground truth",
            limit: Some(secs(1)),
            run: counting_ground_truth,
        },
        Criterion {
            id: 2,
            name: "convex triangulations are Catalan",
            limit: Some(secs(5)),
            run: catalan_triangulations,
        },
        Criterion {
            id: 3,
            name: "deletion identity",
            limit: Some(secs(60)),
            run: deletion_identity,
        },
        Criterion {
            id: 4,
            name: "vhat_0 < 11n/112",
            limit: Some(secs(600)),
            run: v0_upper,
        },
        Criterion {
            id: 5,
            name: "vhat_i < n/sqrt(pi i)",
            limit: None,
            run: vi_upper,
        },
        Criterion {
            id: 6,
            name: "cited lower bounds",
            limit: None,
            run: previous_lower,
        },
        Criterion {
            id: 7,
            name: "0-ving visibility >= 3",
            limit: None,
            run: visibility_lemma,
        },
        Criterion {
            id: 8,
            name: "triangulation degree bounds",
            limit: None,
            run: triangulation_degrees,
        },
        Criterion {
            id: 9,
            name: "charging conservation",
            limit: None,
            run: charging_conservation,
        },
        Criterion {
            id: 10,
            name: "per-graph charge cap",
            limit: None,
            run: per_graph_cap,
        },
        Criterion {
            id: 11,
            name: "charge LP optimum",
            limit: None,
            run: lp_optimum,
        },
        Criterion {
            id: 12,
            name: "analytic suite",
            limit: Some(secs(60)),
            run: analytic_suite,
        },
        Criterion {
            id: 13,
            name: "apex construction and leading term",
            limit: None,
            run: construction,
        },
        Criterion {
            id: 14,
            name: "determinism across workers",
            limit: None,
            run: determinism,
        },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if result.is_err() {
            failed += 1;
        }
        println!("{tag} [{:>2}] {} ({elapsed:.2?}): {detail}", c.id, c.name);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

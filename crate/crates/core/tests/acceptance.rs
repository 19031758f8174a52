//! Acceptance suite. Every criterion is an exact identity (tolerance zero);
//! runtime budgets are checked against wall-clock time.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dt_wallcross::cli::{wallcross_cached, Cache};
use dt_wallcross::comb::{self, enumerate_trees, tree_sum, u_coeff, Vertex, VertexConfig};
use dt_wallcross::invariants::{
    closed_dt2_series, dt1_series, dt_piece, is_integer_valued, omega2, quarter_m_two_chi,
    wallcross, InvariantKind,
};
use dt_wallcross::oracles::{bipartite_tree_count, plane_partition_count, sigma2};
use dt_wallcross::series::{macmahon, n_series};
use dt_wallcross::{ChiPoly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn poly(c: &[(i64, i64)]) -> ChiPoly {
    ChiPoly::from_dense(&c.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Outcome {
    ensure(elapsed <= budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn ac1_rank_one() -> Outcome {
    let start = Instant::now();
    let closed = dt1_series(10);
    for n in 0..=10u32 {
        let wc = wallcross(InvariantKind::Dt, 1, n).map_err(|e| e.to_string())?;
        ensure(&wc == closed.coeff(n as usize), || {
            format!(
                "n={n}: wall-crossing {wc} vs M(-q)^χ {}",
                closed.coeff(n as usize)
            )
        })?;
    }
    within(start.elapsed(), Duration::from_secs(60))
}

fn ac2_rank_two() -> Outcome {
    let start = Instant::now();
    let closed = closed_dt2_series(8);
    for n in 0..=8u32 {
        let wc = wallcross(InvariantKind::Dt, 2, n).map_err(|e| e.to_string())?;
        ensure(&wc == closed.coeff(n as usize), || {
            format!(
                "n={n}: wall-crossing {wc} vs closed {}",
                closed.coeff(n as usize)
            )
        })?;
    }
    within(start.elapsed(), Duration::from_secs(600))
}

fn ac3_omega_golden() -> Outcome {
    let golden = [
        ChiPoly::zero(),
        ChiPoly::zero(),
        poly(&[(0, 1), (-1, 1)]),
        poly(&[(0, 1), (-20, 6), (-15, 6), (-1, 6)]),
        poly(&[(0, 1), (-102, 12), (-119, 12), (-30, 12), (-1, 12)]),
    ];
    for (n, g) in golden.iter().enumerate() {
        let got = omega2(n);
        ensure(&got == g, || format!("Ω(2,{n}) = {got}, expected {g}"))?;
    }
    Ok(())
}

fn ac4_integrality() -> Outcome {
    for n in 0..=10 {
        let p = omega2(n);
        ensure(is_integer_valued(&p), || {
            format!("Ω(2,{n}) = {p} is not integer valued")
        })?;
    }
    Ok(())
}

fn ac5_sign_relation() -> Outcome {
    let start = Instant::now();
    let cases = (1..=2u32)
        .flat_map(|r| (0..=8u32).map(move |n| (r, n)))
        .chain((0..=4u32).map(|n| (3, n)));
    for (r, n) in cases {
        let dt = wallcross(InvariantKind::Dt, r, n).map_err(|e| e.to_string())?;
        let eu = wallcross(InvariantKind::Eu, r, n).map_err(|e| e.to_string())?;
        let expected = if (r * n + r - 1) % 2 == 0 { eu } else { -eu };
        ensure(dt == expected, || {
            format!("r={r} n={n}: DT {dt} vs signed Eu {expected}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1800))
}

fn ac6_decomposition() -> Outcome {
    let quarter = quarter_m_two_chi(8);
    for n in 0..=8u32 {
        let pieces: Vec<ChiPoly> = (0..4)
            .map(|i| dt_piece(i, n))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(&pieces[0] == quarter.coeff(n as usize), || {
            format!(
                "n={n}: piece 0 {} vs (1/4)M^2χ {}",
                pieces[0],
                quarter.coeff(n as usize)
            )
        })?;
        ensure(pieces[2].is_zero(), || {
            format!("n={n}: piece 2 = {}", pieces[2])
        })?;
        ensure(pieces[3].is_zero(), || {
            format!("n={n}: piece 3 = {}", pieces[3])
        })?;
        let total = pieces.iter().cloned().fold(ChiPoly::zero(), |a, b| a + b);
        let wc = wallcross(InvariantKind::Dt, 2, n).map_err(|e| e.to_string())?;
        ensure(total == wc, || {
            format!("n={n}: pieces sum {total} vs DT(2,n) {wc}")
        })?;
    }
    Ok(())
}

fn ac7_oracles() -> Outcome {
    let m = macmahon::<Rational>(8);
    for n in 0..=8u32 {
        let count = Rational::from_integer(plane_partition_count(n).map_err(|e| e.to_string())?);
        ensure(m.coeff(n as usize) == &count, || {
            format!("M(q) at q^{n}: {} vs {count}", m.coeff(n as usize))
        })?;
    }
    let ns = n_series::<Rational>(12);
    for n in 1..=12u64 {
        let s = Rational::from_integer(sigma2(n).map_err(|e| e.to_string())?);
        ensure(ns.coeff(n as usize) == &s, || {
            format!("N(q) at q^{n}: {} vs {s}", ns.coeff(n as usize))
        })?;
    }
    for a in 1..=3u32 {
        for b in 1..=6u32 {
            let mut vs: Vec<Vertex> = (0..a).map(|_| Vertex::black(1)).collect();
            vs.extend((0..b).map(|_| Vertex::white(1)));
            let c = VertexConfig::new(vs).unwrap();
            let got = BigInt::from(enumerate_trees(&c).len());
            let want = bipartite_tree_count(a, b).map_err(|e| e.to_string())?;
            ensure(got == want, || {
                format!("K_{{{a},{b}}}: {got} trees vs {want}")
            })?;
        }
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

fn weight_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=max).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

fn ac8_micro_oracles() -> Outcome {
    for l in 1..=7usize {
        for whites in weight_vectors(l - 1, 3) {
            for a in 1..=l {
                let mut w = whites.iter();
                let vs = (1..=l)
                    .map(|p| {
                        if p == a {
                            Vertex::black(2)
                        } else {
                            Vertex::white(*w.next().unwrap())
                        }
                    })
                    .collect();
                let c = VertexConfig::new(vs).unwrap();
                let sign = if (l - a) % 2 == 0 { 1 } else { -1 };
                let want = Rational::new(BigInt::from(sign), factorial(a - 1) * factorial(l - a));
                let got = u_coeff(&c.classes());
                ensure(got == want, || {
                    format!("u({c}) = {got}, closed form {want}")
                })?;
            }
        }
    }
    for l in 2..=8usize {
        for whites in weight_vectors(l - 2, 2) {
            for a in 0..l {
                for b in a + 3..l {
                    let mut w = whites.iter();
                    let vs = (0..l)
                        .map(|p| {
                            if p == a || p == b {
                                Vertex::black(1)
                            } else {
                                Vertex::white(*w.next().unwrap())
                            }
                        })
                        .collect();
                    let c = VertexConfig::new(vs).unwrap();
                    let t = tree_sum(&c);
                    ensure(t.is_zero(), || format!("tree sum of {c} is {t}"))?;
                }
            }
        }
    }
    let k = |r, n| comb::KClass::new(r, n).unwrap();
    let u1 = u_coeff(&[k(1, 0), k(0, 1), k(1, 0)]);
    ensure(u1 == q(-1, 1), || format!("u3((1,0),(0,1),(1,0)) = {u1}"))?;
    let u2 = u_coeff(&[k(1, 0), k(1, 0), k(0, 1)]);
    ensure(u2 == q(1, 2), || format!("u3((1,0),(1,0),(0,1)) = {u2}"))?;
    Ok(())
}

/// Every value the criteria above compute, rendered to one string.
fn fingerprint(cache: Option<&Cache>) -> Result<String, String> {
    let mut out = String::new();
    let mut push = |tag: String, p: ChiPoly| {
        out.push_str(&tag);
        out.push('=');
        out.push_str(&p.render("x"));
        out.push('\n');
    };
    let wc = |kind, r, n| wallcross_cached(kind, r, n, cache).map_err(|e| e.to_string());
    for n in 0..=10u32 {
        push(format!("DT(1,{n})"), wc(InvariantKind::Dt, 1, n)?);
    }
    for r in 1..=2u32 {
        for n in 0..=8u32 {
            push(format!("DT({r},{n})"), wc(InvariantKind::Dt, r, n)?);
            push(format!("Eu({r},{n})"), wc(InvariantKind::Eu, r, n)?);
        }
    }
    for n in 0..=4u32 {
        push(format!("DT(3,{n})"), wc(InvariantKind::Dt, 3, n)?);
        push(format!("Eu(3,{n})"), wc(InvariantKind::Eu, 3, n)?);
    }
    for n in 0..=8u32 {
        for i in 0..4 {
            push(
                format!("piece{i}({n})"),
                dt_piece(i, n).map_err(|e| e.to_string())?,
            );
        }
    }
    for n in 0..=10 {
        push(format!("Omega(2,{n})"), omega2(n));
    }
    Ok(out)
}

fn on_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn ac9_determinism() -> Outcome {
    let mut reference: Option<String> = None;
    let mut compare = |label: &str, got: String| -> Outcome {
        match &reference {
            None => {
                reference = Some(got);
                Ok(())
            }
            Some(r) => ensure(r == &got, || format!("{label} differs from the first run")),
        }
    };
    for threads in [1usize, 2, 8] {
        comb::clear_caches();
        compare(
            &format!("{threads} threads, cold memo"),
            on_pool(threads, || fingerprint(None))?,
        )?;
        compare(
            &format!("{threads} threads, warm memo"),
            on_pool(threads, || fingerprint(None))?,
        )?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let disk = Cache::new(dir.path());
    comb::clear_caches();
    compare("disk cache cold", on_pool(2, || fingerprint(Some(&disk)))?)?;
    compare("disk cache warm", on_pool(8, || fingerprint(Some(&disk)))?)?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 rank-1 wall-crossing = M(-q)^χ, n ≤ 10", ac1_rank_one),
        (
            "AC2 rank-2 wall-crossing = closed series, n ≤ 8",
            ac2_rank_two,
        ),
        ("AC3 Ω(2,n) golden values, n ≤ 4", ac3_omega_golden),
        ("AC4 Ω(2,n) integer valued, n ≤ 10", ac4_integrality),
        (
            "AC5 DT = (-1)^{rn+r-1} Eu, r ≤ 2 n ≤ 8, r = 3 n ≤ 4",
            ac5_sign_relation,
        ),
        ("AC6 decomposition pieces, n ≤ 8", ac6_decomposition),
        (
            "AC7 oracle agreement (plane partitions, σ₂, K_{a,b})",
            ac7_oracles,
        ),
        ("AC8 u/s/tree micro-oracles", ac8_micro_oracles),
        (
            "AC9 determinism over 1/2/8 threads, cold/warm caches",
            ac9_determinism,
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  {name}  ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({secs:.2}s): {why}");
            }
        }
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

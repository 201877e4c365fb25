//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero unless the failing set is exactly the documented one.

use std::collections::BTreeSet;
use std::time::Instant;

use jackvo::suites::{self, Context, Suite, SuiteParams, SuiteReport};
use jackvo_core::jack::{JackMemo, JackSource};
use jackvo_core::partition::Partition;
use jackvo_core::vandermonde::{
    dyson_constant, rect_action_check, q_route_coefficient, expand_delta, expand_h1, linear_rank, x_prime_image, DeltaLimits, Prop39,
};
use jackvo_core::{BigInt, BigRational, Result};
use rayon::prelude::*;

/// Criteria whose printed statement is known not to hold; see the decisions notes.
const EXPECTED_FAILURES: &[u32] = &[2];

struct Line {
    id: u32,
    pass: bool,
    summary: String,
}

fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

fn suite_line(id: u32, what: &str, rep: &SuiteReport) -> Line {
    let mut summary = format!("{}: {} cases, {} failed", what, rep.cases, rep.failed);
    if let Some(f) = &rep.first_failure {
        summary.push_str(&format!("; first failure {} {}", f.id, f.detail));
    }
    Line { id, pass: rep.ok() && rep.cases > 0, summary }
}

fn params(max_weight: usize) -> SuiteParams {
    SuiteParams { max_weight: Some(max_weight), ..SuiteParams::default() }
}

fn c1() -> Result<Line> {
    let mut bad = Vec::new();
    let mut n = 0;
    for s in 1..=4 {
        for t in 1..=3 {
            let d = expand_delta(s, t, DeltaLimits::default())?;
            // independent closed form
            let want = fact(s * t) / fact(t).pow(s as u32);
            n += 1;
            if d.coeff(&vec![0; s]) != want || dyson_constant(s, t) != want {
                bad.push((s, t));
            }
        }
    }
    let spot = expand_delta(3, 2, DeltaLimits::default())?.coeff(&[0, 0, 0]) == BigInt::from(90)
        && expand_delta(4, 2, DeltaLimits::default())?.coeff(&[0, 0, 0, 0]) == BigInt::from(2520);
    Ok(Line { id: 1, pass: bad.is_empty() && spot, summary: format!("constant terms of Δ_s^t, s ≤ 4, t ≤ 3: {} cases, mismatches {:?}", n, bad) })
}

fn c2() -> Result<Line> {
    let mut failing: BTreeSet<String> = BTreeSet::new();
    let mut observed_ok = true;
    let mut n = 0;
    for s in 3..=5 {
        for t in 1..=2 {
            let d = expand_delta(s, t, DeltaLimits::default())?;
            let mut forms: Vec<Prop39> = (1..=2).filter(|i| 2 * i <= s).map(Prop39::General).collect();
            forms.extend([Prop39::TwoTwo, Prop39::OneOneTwo]);
            for f in forms {
                n += 1;
                let direct = BigRational::from_integer(d.coeff(&f.exponents(s)?));
                if direct != f.value(s, t)? {
                    failing.insert(format!("{:?}", f));
                }
            }
            let direct = BigRational::from_integer(d.coeff(&Prop39::OneOneTwo.exponents(s)?));
            observed_ok &= direct == Prop39::OneOneTwoObserved.value(s, t)?;
        }
    }
    let diagnosis = failing.iter().eq(["OneOneTwo".to_string()].iter()) && observed_ok;
    let summary = if failing.is_empty() {
        format!("closed forms vs expansion, s ∈ 3..5, t ∈ 1..2: {} cases", n)
    } else {
        format!(
            "closed forms vs expansion, s ∈ 3..5, t ∈ 1..2: {} cases; failing forms {:?}; the D_1^-1 D_2^-1 D_s^2 coefficient equals (st)!/(t!)^s · 2t²/((1+(s-1)t)(1+(s-2)t)) instead{}",
            n,
            failing,
            if diagnosis { " (diagnosis confirmed)" } else { " (diagnosis NOT confirmed)" }
        )
    };
    if !failing.is_empty() && !diagnosis {
        return Ok(Line { id: 2, pass: false, summary: format!("UNEXPECTED: {}", summary) });
    }
    Ok(Line { id: 2, pass: failing.is_empty(), summary })
}

fn c3() -> Result<Line> {
    let mut cases = Vec::new();
    for t in 1..=2 {
        for k in 1..=3 {
            for s in 1..=3 {
                cases.push((k, s, t));
            }
        }
    }
    let ctx = Context::in_memory();
    let results: Vec<((usize, usize, usize), bool)> = cases
        .par_iter()
        .map(|&(k, s, t)| rect_action_check(&*ctx.at_inverse(t), k, s, t, DeltaLimits::default()).map(|ok| ((k, s, t), ok)))
        .collect::<Result<_>>()?;
    let bad: Vec<_> = results.iter().filter(|(_, ok)| !ok).map(|(c, _)| *c).collect();
    Ok(Line { id: 3, pass: bad.is_empty(), summary: format!("Δ·q_(k^s) = (st)!/(t!)^s·Q_(k^s) at 1/t, k,s ≤ 3, t ≤ 2: {} cases, failing {:?}", results.len(), bad) })
}

fn c10() -> Result<Line> {
    let lim = DeltaLimits::default();
    let mut ranks = Vec::new();
    let mut independent = true;
    for n in 1..=6 {
        let rows = Partition::all(n).par_iter().map(|l| x_prime_image(l, 1, lim)).collect::<Result<Vec<_>>>()?;
        let r = linear_rank(&rows);
        independent &= r == rows.len();
        ranks.push((n, r, rows.len()));
    }
    let mut shapes = BTreeSet::new();
    for k in 0..=8usize {
        for s in 1..=8usize {
            for tt in 0..=8usize {
                let w = (k + 1) * s + k * tt;
                if w <= 8 {
                    let mut parts = vec![k + 1; s];
                    parts.extend(std::iter::repeat_n(k, tt));
                    shapes.insert(Partition::new(parts)?);
                }
            }
        }
    }
    let schur = JackMemo::new(BigRational::from_integer(1.into()));
    for w in 0..=8 {
        schur.table(w)?;
    }
    let shapes: Vec<Partition> = shapes.into_iter().collect();
    let images = shapes.par_iter().map(|l| x_prime_image(l, 1, lim)).collect::<Result<Vec<_>>>()?;
    let mut bad = Vec::new();
    for (l, x) in shapes.iter().zip(&images) {
        if x.ratio_to(&schur.triple(l)?.p).is_none_or(|c: BigRational| c == BigRational::from_integer(0.into())) {
            bad.push(l.to_string());
        }
    }
    Ok(Line {
        id: 10,
        pass: independent && bad.is_empty(),
        summary: format!("ranks (n, rank, count) {:?}; {} near-rectangular shapes ∝ Schur, failing {:?}", ranks, shapes.len(), bad),
    })
}

fn c11() -> Result<Line> {
    let mut n = 0;
    let mut bad = Vec::new();
    for s in 1..=3 {
        for t in 1..=2 {
            for term in expand_h1(s, t, 6)? {
                n += 1;
                if term.coeff <= BigInt::from(0) || !term.dominates() {
                    bad.push(format!("s={} t={} {} {} {}", s, t, term.lambda, term.mu, term.coeff));
                }
            }
        }
    }
    Ok(Line { id: 11, pass: n > 0 && bad.is_empty(), summary: format!("H_1 coefficients up to degree 6, s ≤ 3, t ≤ 2: {} terms, bad {:?}", n, bad) })
}

fn c12(ctx: &Context) -> Result<Line> {
    let rep = suites::run(Suite::Frobenius, &SuiteParams { max_weight: Some(6), t_values: vec![1, 2], ..SuiteParams::default() }, ctx)?;
    let complete = rep.records.iter().all(|r| r.detail.get("match").is_some() || r.detail.get("proportional").is_some());
    let mut line = suite_line(12, "g-expansions, scalar identity and general shapes, ks ≤ 6, t ≤ 2", &rep);
    line.pass &= complete;
    line.summary.push_str(&format!("; {} comparison mismatches reported", rep.mismatches));
    Ok(line)
}

fn c13() -> Result<Line> {
    let ctx = Context::in_memory();
    let mut n = 0;
    let mut bad = Vec::new();
    for s in 1..=4 {
        for t in 1..=2 {
            let d = expand_delta(s, t, DeltaLimits::default())?;
            let mut betas: Vec<Vec<i32>> = vec![vec![]];
            for _ in 0..s {
                betas = betas.into_iter().flat_map(|b| (-2..=2).map(move |x| { let mut b = b.clone(); b.push(x); b })).collect();
            }
            betas.retain(|b| b.iter().sum::<i32>() == 0);
            let src = ctx.at_inverse(t);
            let rows = betas.par_iter().map(|b| q_route_coefficient(&*src, b, t, &d)).collect::<Result<Vec<_>>>()?;
            n += rows.len();
            bad.extend(rows.iter().filter(|r| !r.matches()).map(|r| format!("s={} t={} β={:?}", s, t, r.beta)));
        }
    }
    Ok(Line { id: 13, pass: bad.is_empty(), summary: format!("direct coefficient vs q-basis route, β ∈ [-2,2]^s, s ≤ 4, t ≤ 2: {} cases, failing {:?}", n, bad) })
}

fn main() {
    let ctx = Context::in_memory();
    let runs: Vec<(u32, Box<dyn Fn(&Context) -> Result<Line>>)> = vec![
        (1, Box::new(|_| c1())),
        (2, Box::new(|_| c2())),
        (3, Box::new(|_| c3())),
        (4, Box::new(|c| Ok(suite_line(4, "Jack oracle orthogonality, triangularity, norms, |λ| ≤ 8", &suites::run(Suite::Basis, &params(8), c)?)))),
        (5, Box::new(|c| Ok(suite_line(5, "Pieri closed form vs oracle, |λ| ≤ 8", &suites::run(Suite::Pieri, &params(8), c)?)))),
        (6, Box::new(|c| Ok(suite_line(6, "rectangular LR closed form and vanishing, rs ≤ 8", &suites::run(Suite::RectLr, &params(8), c)?)))),
        (7, Box::new(|c| Ok(suite_line(7, "marked rectangular LR closed form, weight ≤ 8", &suites::run(Suite::MarkedLr, &params(8), c)?)))),
        (8, Box::new(|c| Ok(suite_line(8, "⟨J_μ J_(2,1), J_λ⟩ ∈ Z≥0[α], |λ| ≤ 9", &suites::run(Suite::Positivity, &params(9), c)?)))),
        (9, Box::new(|c| Ok(suite_line(9, "filtration construction ∝ Q_λ with c′ ≠ 0, |λ| ≤ 8", &suites::run(Suite::Filtration, &params(8), c)?)))),
        (10, Box::new(|_| c10())),
        (11, Box::new(|_| c11())),
        (12, Box::new(c12)),
        (13, Box::new(|_| c13())),
    ];
    // ACCEPTANCE_ONLY=3,10 restricts the run to the listed criteria.
    let only: Option<BTreeSet<u32>> = std::env::var("ACCEPTANCE_ONLY").ok().map(|v| v.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = BTreeSet::new();
    let mut ran = 0;
    for (id, f) in runs {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let line = f(&ctx).unwrap_or_else(|e| Line { id, pass: false, summary: format!("error: {}", e) });
        println!("criterion {:>2}: {}  {}  [{:.1}s]", line.id, if line.pass { "PASS" } else { "FAIL" }, line.summary, start.elapsed().as_secs_f64());
        if !line.pass {
            failed.insert(line.id);
        }
    }
    let expected: BTreeSet<u32> =
        EXPECTED_FAILURES.iter().copied().filter(|id| only.as_ref().is_none_or(|o| o.contains(id))).collect();
    println!("acceptance: {} of {} criteria pass; failing {:?}, documented {:?}", ran - failed.len(), ran, failed, expected);
    if failed != expected {
        std::process::exit(1);
    }
}

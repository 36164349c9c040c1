//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p hilbert-kunz --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hilbert_kunz::bounds::{
    certify_interval, final_theorem_bound, quadratic_apex, quadratic_g, quadric_ehk, radical_step_bound,
    wy_volume_bound, BoundQuery, GapCase, IntervalShape, QuadricParams,
};
use hilbert_kunz::monomial::{frobenius_colength, mixed_colength, MonomialIdeal};
use hilbert_kunz::slab::{slab_polynomial, vol_slab};
use hilbert_kunz::zigzag::{conjecture_threshold, secant_tangent_coeffs};
use hilbert_kunz::Rational;

fn r(s: &str) -> Rational {
    s.parse().expect("rational literal")
}

/// Collects failed checks with a short reason each.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn series_coefficients(c: &mut Checks) {
    let m = secant_tangent_coeffs(6).unwrap();
    for (d, want, threshold) in [(3, "1/3", "4/3"), (4, "5/24", "29/24"), (5, "2/15", "17/15"), (6, "61/720", "781/720")] {
        let got = m.get(d).unwrap();
        c.check(*got == r(want), || format!("m_{d} = {got}, expected {want}"));
        let t = conjecture_threshold(d).unwrap();
        c.check(t == r(threshold), || format!("1+m_{d} = {t}, expected {threshold}"));
    }
}

fn multiplicity_five(c: &mut Checks) {
    let q = BoundQuery::uniform(7, 5u64, 3, r("83/25")).unwrap();
    let b = wy_volume_bound(&q);
    c.check(b > r("1112/1000"), || format!("bound {} is not > 1.112", b.to_decimal(6)));
}

fn dimension_five_table(c: &mut Checks) {
    let rows = [(35u64, 134u64, "7/5", "1.153"), (18, 32, "17/10", "1.197"), (11, 15, "19/10", "1.187"), (7, 8, "21/10", "1.161"), (5, 4, "12/5", "1.313")];
    for (e0, r0, s, target) in rows {
        let b = wy_volume_bound(&BoundQuery::uniform(5, e0, r0, r(s)).unwrap());
        c.check(b >= r(target), || format!("e0={e0}: bound {} < target {target}", b.to_decimal(6)));
    }
    let large = r("137/120");
    c.check(large > r("17/15"), || "137/120 is not > 17/15".into());
}

fn dimension_six_table(c: &mut Checks) {
    let apex = quadratic_apex(6, &r("13/10")).unwrap();
    c.check(apex > r("3308.57"), || format!("apex at s=13/10 is {}, not > 3308.57", apex.to_decimal(6)));
    let g = quadratic_g(6, &r("296"), &r("13/10"));
    c.check(g > r("1.89"), || format!("G(296) = {} is not > 1.89", g.to_decimal(6)));
    let rows = [(59u64, 296u64, "8/5", "1.133"), (26, 58, "19/10", "1.123"), (16, 25, "21/10", "1.118"), (10, 25, "11/5", "1.118"), (5, 9, "13/5", "1.107")];
    for (a, b, s, target) in rows {
        let row = certify_interval(6, a, b, &r(s), &r(target)).unwrap();
        c.check(row.shape == IntervalShape::ApexInterior, || format!("[{a},{b}]: apex not interior"));
        c.check(row.pass, || {
            format!(
                "[{a},{b}] s={s}: min(G(a),G(b)) = {} < {target}",
                row.certified_bound.to_decimal(6)
            )
        });
    }
}

fn quadric_forms(c: &mut Checks) {
    let t5 = r("17/15");
    let t6 = r("781/720");
    let primes = (3u64..=97).filter(|&p| (2..p).take_while(|k| k * k <= p).all(|k| p % k != 0));
    for p in primes {
        let q5 = quadric_ehk(QuadricParams::new(p, 5).unwrap());
        let q6 = quadric_ehk(QuadricParams::new(p, 6).unwrap());
        c.check(q5 > t5, || format!("p={p}: e_HK(R_p,5) = {q5} is not > 17/15"));
        c.check(q6 > t6, || format!("p={p}: e_HK(R_p,6) = {q6} is not > 781/720"));
        if p >= 11 {
            let gap = (&q5 - &t5).abs();
            c.check(gap < Rational::new(1, p * p).unwrap(), || format!("p={p}: |gap| = {gap} >= 1/p^2"));
        }
    }
}

fn volume_oracle(c: &mut Checks) {
    let q = 32u64;
    for d in 1..=3u32 {
        let j = MonomialIdeal::maximal(d as usize).unwrap();
        let tol = Rational::new(3 * d, q).unwrap();
        for s in ["1/2", "1", "3/2", "2"] {
            let s = r(s);
            let count = mixed_colength(&j, &s, q).unwrap();
            let approx = Rational::new(count, q.pow(d)).unwrap();
            let err = (&approx - vol_slab(d, &s)).abs();
            c.check(err <= tol, || format!("d={d} s={s}: |{approx} - v_s| = {err} > {tol}"));
        }
    }
}

fn monomial_exactness(c: &mut Checks) {
    let sq: MonomialIdeal = "2 0 / 1 1 / 0 2".parse().unwrap();
    for q in [2u64, 3, 4, 8] {
        let got = frobenius_colength(&sq, q).unwrap();
        c.check(got == 3 * q * q, || format!("q={q}: colength {got} != 3q^2"));
    }
    for exps in [vec![3u64, 2], vec![1, 1, 1], vec![2, 3, 1], vec![4], vec![1, 2, 2, 1]] {
        let j = MonomialIdeal::pure_powers(&exps).unwrap();
        let product: u64 = exps.iter().product();
        for q in [1u64, 2, 3, 5] {
            let got = frobenius_colength(&j, q).unwrap();
            let normalized = Rational::new(got, q.pow(exps.len() as u32)).unwrap();
            c.check(normalized == Rational::from(product), || format!("{exps:?} q={q}: normalized {normalized} != {product}"));
        }
    }
}

fn slab_properties(c: &mut Checks) {
    for d in 1..=8u32 {
        let dd = Rational::from(d);
        let mut prev = Rational::zero();
        for k in 0..=(8 * d as i64) {
            let s = Rational::frac(k, 8);
            let v = vol_slab(d, &s);
            let sym = &v + vol_slab(d, &(&dd - &s));
            c.check(sym == 1, || format!("d={d} s={s}: v_s + v_(d-s) = {sym}"));
            c.check(v >= prev, || format!("d={d} s={s}: not monotone"));
            prev = v;
        }
        let poly = slab_polynomial(d);
        for k in 1..d {
            let x = Rational::from(k);
            let left = poly.piece(k - 1).unwrap().eval(&x);
            let right = poly.piece(k).unwrap().eval(&x);
            c.check(left == right, || format!("d={d}: discontinuity at {k}"));
        }
    }
}

fn radical_recursion(c: &mut Checks) {
    let b = final_theorem_bound(4, 6, GapCase::MinimalGap).unwrap();
    let want = Rational::one() + r("4/10").pow(4) * Rational::integer(2);
    c.check(b == want && b == r("1.0512"), || format!("final bound at d=4 is {b}"));
    let one = Rational::one();
    let minimal = radical_step_bound(6, 4, 2, 2, &one).unwrap();
    c.check(minimal == 1, || format!("k=e-2 step maps 1 to {minimal}"));
    let general = radical_step_bound(8, 4, 2, 2, &one).unwrap();
    c.check(general == 1, || format!("k<e-2 step maps 1 to {general}"));
}

fn end_to_end(c: &mut Checks) {
    let exe = env!("CARGO_BIN_EXE_hk-certify");
    for dim in ["5", "6"] {
        let run = || Command::new(exe).args(["verify-tables", "--dim", dim]).output().expect("spawn hk-certify");
        let first = run();
        let second = run();
        c.check(first.status.success(), || format!("verify-tables --dim {dim} exited with {}", first.status));
        c.check(first.stdout == second.stdout && !first.stdout.is_empty(), || format!("verify-tables --dim {dim} output not byte-stable"));
    }
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn(&mut Checks));
    let criteria: [Criterion; 10] = [
        (1, "series coefficients m_3..m_6", Duration::from_secs(1), series_coefficients),
        (2, "multiplicity-5 bound at s = 83/25 exceeds 1.112", Duration::from_secs(1), multiplicity_five),
        (3, "dimension-5 table", Duration::from_secs(1), dimension_five_table),
        (4, "dimension-6 table", Duration::from_secs(1), dimension_six_table),
        (5, "quadric closed forms and limit", Duration::from_secs(1), quadric_forms),
        (6, "mixed colength matches slab volume", Duration::from_secs(10), volume_oracle),
        (7, "monomial Frobenius colengths exact", Duration::from_secs(5), monomial_exactness),
        (8, "slab symmetry, monotonicity, continuity", Duration::from_secs(5), slab_properties),
        (9, "radical recursion values", Duration::from_secs(1), radical_recursion),
        (10, "verify-tables end to end", Duration::from_secs(5), end_to_end),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let mut checks = Checks::default();
        let start = Instant::now();
        run(&mut checks);
        let elapsed = start.elapsed();
        if elapsed > budget {
            checks.failures.push(format!("took {elapsed:?}, budget {budget:?}"));
        }
        let ok = checks.failures.is_empty();
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:2} {}: {name} ({} checks, {:.3}s)",
            if ok { "PASS" } else { "FAIL" },
            checks.count,
            elapsed.as_secs_f64()
        );
        for f in &checks.failures {
            println!("    - {f}");
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

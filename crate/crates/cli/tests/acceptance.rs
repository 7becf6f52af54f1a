//! Acceptance run: one PASS/FAIL line per criterion, exact rational equality
//! throughout. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cmfdb::cm_fdb::{
    a_antipode_images, a_coproduct_images, antipode_delta_ordered, coproduct_delta,
    coproduct_delta_ordered, delta_antipode_images, delta_coproduct_images, oracle_antipode_a_eval,
    oracle_antipode_eval, oracle_coproduct_a_eval, oracle_coproduct_eval, recursive_coproduct_delta,
};
use cmfdb::coefficients::{coeff_q_closed, coeff_q_dual, coeff_r};
use cmfdb::combinatorics::enumerate_compositions;
use cmfdb::hopf::{augmentation, check_hopf_axioms};
use cmfdb::random::{random_diffeo, random_rationals, seeded_rng};
use cmfdb::rational::{format_rational, int, ratio};
use cmfdb::shuffle::{
    conjugacy_mould, conjugacy_phi, conjugacy_residual, symmetrality_check, verify_gamma_antipode_with,
    verify_gamma_coproduct_with, GammaMap,
};
use cmfdb::{Composition, Rational};
use cmfdb_cli::{run, Command, RunConfig};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn check_table(
    expected: &[(&[u32], Rational)],
    rows: impl Fn(u32) -> cmfdb::Result<Vec<(Composition, Rational)>>,
    max: u32,
) -> Outcome {
    let mut got = BTreeMap::new();
    for n in 1..=max {
        got.extend(rows(n).map_err(|e| e.to_string())?);
    }
    for (parts, v) in expected {
        let c = comp(parts);
        match got.get(&c) {
            Some(g) if g == v => {}
            Some(g) => return Err(format!("{c}: expected {}, got {}", format_rational(v), format_rational(g))),
            None => return Err(format!("{c}: missing")),
        }
    }
    Ok(format!("{} entries", expected.len()))
}

fn criterion_1() -> Outcome {
    let expected: Vec<(&[u32], Rational)> = vec![
        (&[1, 1], int(1)),
        (&[1, 2], int(3)),
        (&[2, 1], int(1)),
        (&[1, 1, 1], int(1)),
        (&[1, 3], int(6)),
        (&[2, 2], int(4)),
        (&[3, 1], int(1)),
        (&[1, 1, 2], int(7)),
        (&[1, 2, 1], ratio(3, 2)),
        (&[2, 1, 1], ratio(3, 2)),
        (&[1, 1, 1, 1], int(1)),
        (&[1, 4], int(10)),
        (&[2, 3], int(10)),
        (&[3, 2], int(5)),
        (&[4, 1], int(1)),
        (&[1, 1, 3], int(25)),
        (&[1, 3, 1], int(2)),
        (&[3, 1, 1], int(2)),
        (&[1, 2, 2], ratio(25, 2)),
        (&[2, 1, 2], ratio(25, 2)),
        (&[2, 2, 1], int(3)),
        (&[1, 1, 1, 2], int(15)),
        (&[1, 1, 2, 1], int(2)),
        (&[1, 2, 1, 1], int(2)),
        (&[2, 1, 1, 1], int(2)),
        (&[1, 1, 1, 1, 1], int(1)),
    ];
    check_table(&expected, coproduct_delta_ordered, 5)
}

fn criterion_2() -> Outcome {
    let expected: Vec<(&[u32], Rational)> = vec![
        (&[1], int(-1)),
        (&[2], int(-1)),
        (&[1, 1], int(1)),
        (&[3], int(-1)),
        (&[1, 2], int(3)),
        (&[2, 1], int(1)),
        (&[1, 1, 1], int(-2)),
        (&[4], int(-1)),
        (&[1, 3], int(6)),
        (&[2, 2], int(4)),
        (&[3, 1], int(1)),
        (&[1, 1, 2], int(-11)),
        (&[1, 2, 1], ratio(-9, 2)),
        (&[2, 1, 1], ratio(-5, 2)),
        (&[1, 1, 1, 1], int(6)),
        (&[5], int(-1)),
        (&[1, 4], int(10)),
        (&[2, 3], int(10)),
        (&[3, 2], int(5)),
        (&[4, 1], int(1)),
        (&[1, 1, 3], int(-35)),
        (&[1, 3, 1], int(-8)),
        (&[3, 1, 1], int(-3)),
        (&[1, 2, 2], ratio(-55, 2)),
        (&[2, 1, 2], ratio(-35, 2)),
        (&[2, 2, 1], int(-7)),
        (&[1, 1, 1, 2], int(50)),
        (&[1, 1, 2, 1], int(22)),
        (&[1, 2, 1, 1], ratio(29, 2)),
        (&[2, 1, 1, 1], ratio(19, 2)),
        (&[1, 1, 1, 1, 1], int(-24)),
    ];
    check_table(&expected, antipode_delta_ordered, 5)
}

fn criterion_3() -> Outcome {
    let expected = [
        "Δ̃Γ₁ = 0",
        "Δ̃Γ₂ = Γ₁ ⊗ Γ₁",
        "Δ̃Γ₃ = (Γ₂ + Γ₁²) ⊗ Γ₁ + 3Γ₁ ⊗ Γ₂",
        "Δ̃Γ₄ = (Γ₃ + 3Γ₁Γ₂ + Γ₁³) ⊗ Γ₁ + (4Γ₂ + 7Γ₁²) ⊗ Γ₂ + 6Γ₁ ⊗ Γ₃",
        "Δ̃Γ₅ = (Γ₄ + 4Γ₁Γ₃ + 3Γ₂² + 6Γ₁²Γ₂ + Γ₁⁴) ⊗ Γ₁ + (5Γ₃ + 25Γ₁Γ₂ + 15Γ₁³) ⊗ Γ₂ + (10Γ₂ + 25Γ₁²) ⊗ Γ₃ + 10Γ₁ ⊗ Γ₄",
        "S(Γ₁) = −Γ₁",
        "S(Γ₂) = −Γ₂ + Γ₁²",
        "S(Γ₃) = −Γ₃ + 4Γ₁Γ₂ − 2Γ₁³",
        "S(Γ₄) = −Γ₄ + 7Γ₁Γ₃ + 4Γ₂² − 18Γ₁²Γ₂ + 6Γ₁⁴",
        "S(Γ₅) = −Γ₅ + 11Γ₁Γ₄ + 15Γ₂Γ₃ − 46Γ₁²Γ₃ − 52Γ₁Γ₂² + 96Γ₁³Γ₂ − 24Γ₁⁵",
    ];
    let cfg = RunConfig { command: Command::Tables, degree: 5, ..RunConfig::default() };
    let out = run(&cfg).map_err(|e| e.to_string())?.text;
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("Δ̃") || l.starts_with("S(")).collect();
    if lines.len() != expected.len() {
        return Err(format!("expected {} displays, got {}", expected.len(), lines.len()));
    }
    for (g, e) in lines.iter().zip(expected) {
        if *g != e {
            return Err(format!("expected `{e}`, got `{g}`"));
        }
    }
    Ok(format!("{} displays", expected.len()))
}

const PAIRS: usize = 25;
const ORACLE_MAX: u32 = 10;

fn oracle_pairs(seed: u64) -> Vec<(cmfdb::Diffeo, cmfdb::Diffeo)> {
    let mut rng = seeded_rng(seed);
    (0..PAIRS)
        .map(|_| (random_diffeo(&mut rng, ORACLE_MAX as usize), random_diffeo(&mut rng, ORACLE_MAX as usize)))
        .collect()
}

fn oracle_loop(
    seed: u64,
    eval: impl Fn(u32, &cmfdb::Diffeo, &cmfdb::Diffeo) -> cmfdb::Result<(Rational, Rational)>,
) -> Outcome {
    let mut count = 0;
    for (t, (f, g)) in oracle_pairs(seed).iter().enumerate() {
        for n in 1..=ORACLE_MAX {
            let (l, r) = eval(n, f, g).map_err(|e| e.to_string())?;
            if l != r {
                return Err(format!("trial {t}, n = {n}: {} != {}", format_rational(&l), format_rational(&r)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} evaluations, n <= {ORACLE_MAX}, {PAIRS} pairs"))
}

fn criterion_4() -> Outcome {
    oracle_loop(4, oracle_coproduct_eval)
}

fn criterion_5() -> Outcome {
    oracle_loop(5, |n, f, _| oracle_antipode_eval(n, f))
}

fn criterion_6() -> Outcome {
    for n in 1..=8 {
        let rec = recursive_coproduct_delta(n).map_err(|e| format!("n = {n}: {e}"))?;
        let closed = coproduct_delta(n).map_err(|e| e.to_string())?;
        if rec != closed {
            return Err(format!("n = {n}: residual {}", rec.sub(&closed).map_err(|e| e.to_string())?));
        }
    }
    Ok("n <= 8, no residual letters".into())
}

fn criterion_7() -> Outcome {
    oracle_loop(7, |n, f, g| {
        let (l, r) = oracle_coproduct_a_eval(n, f, g)?;
        if l != r {
            return Ok((l, r));
        }
        oracle_antipode_a_eval(n, f)
    })
}

fn criterion_8() -> Outcome {
    let d = 8;
    let delta = check_hopf_axioms(
        &delta_coproduct_images(d).map_err(|e| e.to_string())?,
        &delta_antipode_images(d).map_err(|e| e.to_string())?,
        augmentation,
        d,
    );
    let a = check_hopf_axioms(
        &a_coproduct_images(d).map_err(|e| e.to_string())?,
        &a_antipode_images(d).map_err(|e| e.to_string())?,
        augmentation,
        d,
    );
    for r in [&delta, &a] {
        if let Some(f) = r.failures.first() {
            return Err(format!("generator {}, {} axiom: {}", f.generator, f.axiom, f.residual));
        }
    }
    Ok(format!("{} checks to degree {d}", delta.checks_run + a.checks_run))
}

fn criterion_9() -> Outcome {
    let d = 8;
    let coproducts = delta_coproduct_images(d).map_err(|e| e.to_string())?;
    let antipodes = delta_antipode_images(d).map_err(|e| e.to_string())?;
    let mut map = GammaMap::new();
    for n in 1..=d {
        let c = verify_gamma_coproduct_with(n, &coproducts[&n], &mut map).map_err(|e| e.to_string())?;
        if let Some(r) = c.residual.first() {
            return Err(format!("coproduct of Γ_{n}: residual {r}"));
        }
        let s = verify_gamma_antipode_with(n, &antipodes[&n], &mut map).map_err(|e| e.to_string())?;
        if let Some(r) = s.residual.first() {
            return Err(format!("antipode of Γ_{n}: residual {r}"));
        }
    }
    let mut compositions = 0;
    for n in 1..=d {
        for p in enumerate_compositions(n).map_err(|e| e.to_string())? {
            compositions += 1;
            if coeff_q_dual(&p) != Rational::from_integer(coeff_q_closed(&p)) {
                return Err(format!("Q at {p}"));
            }
            for k in 1..=5u32 {
                let expect = if p.length() == 1 {
                    BigInt::from(k)
                } else {
                    let q = comp(&p.parts()[1..]);
                    coeff_r(&q, k) * BigInt::from(q.weight() + k)
                };
                if coeff_r(&p, k) != expect {
                    return Err(format!("R recursion at {p}, k = {k}"));
                }
            }
        }
    }
    Ok(format!("Γ_n for n <= {d}, {compositions} compositions"))
}

fn criterion_10() -> Outcome {
    let order = 10;
    let mut rng = seeded_rng(10);
    for t in 0..10 {
        let u = random_rationals(&mut rng, order);
        let phi = conjugacy_phi(&u, order).map_err(|e| e.to_string())?;
        let res = conjugacy_residual(&u, &phi);
        if res.order() < order + 1 || !res.is_zero() {
            return Err(format!("trial {t}: nonzero residual"));
        }
        let m = conjugacy_mould(&u, 6).map_err(|e| e.to_string())?;
        let sym = symmetrality_check(&m, 6).map_err(|e| e.to_string())?;
        if let Some(v) = sym.violations.first() {
            return Err(format!("trial {t}: symmetrality at {} * {}", v.left, v.right));
        }
    }
    Ok(format!("10 fields of order {order}, symmetrality to weight 6"))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    let total = Instant::now();
    for (i, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = secs(start.elapsed());
        match outcome {
            Ok(detail) => println!("criterion {i}: PASS ({detail}; {secs})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {i}: FAIL ({detail}; {secs})");
            }
        }
    }
    println!("acceptance: {} of 10 passed in {}", 10 - failed, secs(total.elapsed()));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

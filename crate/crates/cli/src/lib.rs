//! Command implementations behind the `cmfdb` binary. Every command returns
//! its rendered output and exit code so that tests can drive it directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cmfdb::cm_fdb::{
    a_antipode_images, a_coproduct_images, antipode_a, antipode_a_ordered, antipode_delta,
    antipode_delta_ordered, coproduct_a, coproduct_a_ordered, coproduct_a_via_gamma, coproduct_delta,
    coproduct_delta_ordered, delta_antipode_images, delta_coproduct_images, oracle_antipode_a_eval,
    oracle_antipode_eval, oracle_coproduct_a_eval, oracle_coproduct_eval, recursive_coproduct_delta,
};
use cmfdb::coefficients::{coeff_q_closed, coeff_q_dual};
use cmfdb::combinatorics::enumerate_compositions;
use cmfdb::hopf::{augmentation, check_hopf_axioms, AlgebraElement, Family, Monomial, TensorElement};
use cmfdb::random::{random_diffeo, random_rationals, seeded_rng};
use cmfdb::rational::format_rational;
use cmfdb::shuffle::{
    conjugacy_mould, conjugacy_phi, conjugacy_residual, symmetrality_check, verify_gamma_antipode_with,
    verify_gamma_coproduct_with, GammaMap,
};
use cmfdb::{Composition, Rational, Result};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Coproduct,
    Antipode,
    Tables,
    Verify,
    Conjugate,
}

/// Generator family for `coproduct` and `antipode`. `Gamma` reuses the
/// `delta` formulas under the renaming `δ_n -> γ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    Delta,
    A,
    Gamma,
}

impl Coords {
    fn family(self) -> Family {
        match self {
            Coords::Delta => Family::Delta,
            Coords::A => Family::A,
            Coords::Gamma => Family::Gamma,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub degree: u32,
    pub coords: Coords,
    pub format: Format,
    pub seed: u64,
    pub trials: u32,
    pub order: usize,
    pub u: Vec<Rational>,
    /// Test hook: drops `δ_1 ⊗ δ_1` from `Δ(δ_2)` before verification.
    pub inject_fault: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: Command::Tables,
            degree: 5,
            coords: Coords::Delta,
            format: Format::Text,
            seed: 42,
            trials: 10,
            order: 6,
            u: Vec::new(),
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit_code: 0 }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    match cfg.command {
        Command::Coproduct => cmd_coproduct(cfg).map(Output::ok),
        Command::Antipode => cmd_antipode(cfg).map(Output::ok),
        Command::Tables => cmd_tables(cfg).map(Output::ok),
        Command::Verify => cmd_verify(cfg),
        Command::Conjugate => cmd_conjugate(cfg).map(Output::ok),
    }
}

fn table_rows(rows: &[(Composition, Rational)]) -> String {
    rows.iter().map(|(c, v)| format!("{c} = {}\n", format_rational(v))).collect()
}

fn gen_label(family: Family, n: u32) -> String {
    Monomial::generator(n).render(family.symbol())
}

pub fn cmd_coproduct(cfg: &RunConfig) -> Result<String> {
    let n = cfg.degree;
    let family = cfg.coords.family();
    let t: TensorElement = match cfg.coords {
        Coords::A => coproduct_a(n)?,
        _ => coproduct_delta(n)?.relabel(family),
    };
    Ok(match cfg.format {
        Format::Table => table_rows(&match cfg.coords {
            Coords::A => coproduct_a_ordered(n)?,
            _ => coproduct_delta_ordered(n)?,
        }),
        Format::Json => t.to_json_string() + "\n",
        Format::Text => format!("Δ({}) = {}\n", gen_label(family, n), t),
    })
}

pub fn cmd_antipode(cfg: &RunConfig) -> Result<String> {
    let n = cfg.degree;
    let family = cfg.coords.family();
    let s: AlgebraElement = match cfg.coords {
        Coords::A => antipode_a(n)?,
        _ => antipode_delta(n)?.relabel(family),
    };
    Ok(match cfg.format {
        Format::Table => table_rows(&match cfg.coords {
            Coords::A => antipode_a_ordered(n)?,
            _ => antipode_delta_ordered(n)?,
        }),
        Format::Json => s.to_json_string() + "\n",
        Format::Text => format!("S({}) = {}\n", gen_label(family, n), s),
    })
}

/// Coefficient tables for degrees `1..=degree` followed by the collected
/// reduced coproducts and antipodes of `Γ_n`.
pub fn cmd_tables(cfg: &RunConfig) -> Result<String> {
    let mut out = String::new();
    out.push_str("# coproduct: n!/(n_1!...n_{s+1}!) alpha^{n_1,...,n_s}_{n_{s+1}}\n");
    for n in 1..=cfg.degree {
        out.push_str(&table_rows(&coproduct_delta_ordered(n)?));
    }
    out.push('\n');
    for n in 1..=cfg.degree {
        let t = coproduct_delta(n)?.reduced();
        writeln!(out, "Δ̃{} = {}", Monomial::generator(n).render("Γ"), t.render("Γ")).unwrap();
    }
    out.push('\n');
    out.push_str("# antipode: n!/(n_1!...n_s!) beta^{n_1,...,n_s}\n");
    for n in 1..=cfg.degree {
        out.push_str(&table_rows(&antipode_delta_ordered(n)?));
    }
    out.push('\n');
    for n in 1..=cfg.degree {
        let s = antipode_delta(n)?;
        writeln!(out, "S({}) = {}", Monomial::generator(n).render("Γ"), s.render("Γ")).unwrap();
    }
    Ok(out)
}

struct Checks {
    lines: String,
    failed: bool,
}

impl Checks {
    fn record(&mut self, name: &str, failure: Option<String>) {
        match failure {
            None => writeln!(self.lines, "PASS {name}").unwrap(),
            Some(why) => {
                self.failed = true;
                writeln!(self.lines, "FAIL {name}: {why}").unwrap();
            }
        }
    }
}

fn first_mismatch(pairs: impl IntoIterator<Item = (String, Rational, Rational)>) -> Option<String> {
    pairs
        .into_iter()
        .find(|(_, l, r)| l != r)
        .map(|(at, l, r)| format!("{at}: {} != {}", format_rational(&l), format_rational(&r)))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Output> {
    let d = cfg.degree;
    let mut checks = Checks { lines: String::new(), failed: false };

    let mut coproducts = delta_coproduct_images(d)?;
    if cfg.inject_fault {
        if let Some(t) = coproducts.get_mut(&2) {
            let one = Monomial::generator(1);
            let c = t.coeff(&one, &one);
            t.add_term(one.clone(), one, -c);
        }
    }
    let antipodes = delta_antipode_images(d)?;
    let report = check_hopf_axioms(&coproducts, &antipodes, augmentation, d);
    checks.record(
        "hopf axioms (delta)",
        report.failures.first().map(|f| format!("degree {}, {} axiom, residual {}", f.generator, f.axiom, f.residual)),
    );
    let report = check_hopf_axioms(&a_coproduct_images(d)?, &a_antipode_images(d)?, augmentation, d);
    checks.record(
        "hopf axioms (a)",
        report.failures.first().map(|f| format!("degree {}, {} axiom, residual {}", f.generator, f.axiom, f.residual)),
    );

    let mut failure = None;
    for n in 1..=d {
        let expected = &coproducts[&n];
        match recursive_coproduct_delta(n) {
            Ok(t) if &t == expected => {}
            Ok(t) => {
                failure = Some(format!("degree {n}: residual {}", t.sub(expected)?));
                break;
            }
            Err(e) => {
                failure = Some(format!("degree {n}: {e}"));
                break;
            }
        }
    }
    checks.record("closed coproduct vs PBW recursion", failure);

    let mut failure = None;
    for n in 1..=d {
        if coproduct_a_via_gamma(n)? != coproduct_a(n)? {
            failure = Some(format!("degree {n}"));
            break;
        }
    }
    checks.record("a/gamma change of basis", failure);

    let order = d as usize;
    let mut rng = seeded_rng(cfg.seed);
    let mut pairs = Vec::new();
    for trial in 0..cfg.trials {
        let f = random_diffeo(&mut rng, order);
        let g = random_diffeo(&mut rng, order);
        for n in 1..=d {
            let at = |what: &str| format!("{what}, degree {n}, trial {trial}");
            let (l, r) = oracle_coproduct_eval(n, &f, &g)?;
            pairs.push((at("delta coproduct"), l, r));
            let (l, r) = oracle_antipode_eval(n, &f)?;
            pairs.push((at("delta antipode"), l, r));
            let (l, r) = oracle_coproduct_a_eval(n, &f, &g)?;
            pairs.push((at("a coproduct"), l, r));
            let (l, r) = oracle_antipode_a_eval(n, &f)?;
            pairs.push((at("a antipode"), l, r));
        }
    }
    checks.record("series oracles", first_mismatch(pairs));

    let mut pairs = Vec::new();
    for n in 1..=d {
        for c in enumerate_compositions(n)? {
            pairs.push((c.to_string(), Rational::from_integer(coeff_q_closed(&c)), coeff_q_dual(&c)));
        }
    }
    checks.record("Q closed vs dual", first_mismatch(pairs));

    let mut map = GammaMap::new();
    let mut failure = None;
    for n in 1..=d {
        let c = verify_gamma_coproduct_with(n, &coproducts[&n], &mut map)?;
        let a = verify_gamma_antipode_with(n, &antipodes[&n], &mut map)?;
        if let Some(r) = c.residual.first() {
            failure = Some(format!("coproduct, degree {n}, residual term {r}"));
            break;
        }
        if let Some(r) = a.residual.first() {
            failure = Some(format!("antipode, degree {n}, residual term {r}"));
            break;
        }
    }
    checks.record("Gamma in the shuffle algebra", failure);

    let mut failure = None;
    for trial in 0..cfg.trials {
        let u = random_rationals(&mut rng, order);
        let phi = conjugacy_phi(&u, order)?;
        let res = conjugacy_residual(&u, &phi);
        if !res.is_zero() {
            failure = Some(format!("trial {trial}: nonzero residual"));
            break;
        }
        let sym = symmetrality_check(&conjugacy_mould(&u, d)?, d)?;
        if let Some(v) = sym.violations.first() {
            failure = Some(format!("trial {trial}: symmetrality fails at {} * {}", v.left, v.right));
            break;
        }
    }
    checks.record("conjugacy", failure);

    let exit_code = i32::from(checks.failed);
    Ok(Output { text: checks.lines, exit_code })
}

pub fn cmd_conjugate(cfg: &RunConfig) -> Result<String> {
    let phi = conjugacy_phi(&cfg.u, cfg.order)?;
    let residual = conjugacy_residual(&cfg.u, &phi);
    let fmt_all = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
    Ok(match cfg.format {
        Format::Json => {
            let mut m = BTreeMap::new();
            m.insert("phi", fmt_all(phi.coefficients()));
            m.insert("residual", fmt_all(residual.coeffs()));
            serde_json::to_string(&m).expect("serializable") + "\n"
        }
        Format::Table | Format::Text => {
            let mut out = String::new();
            for (i, c) in phi.coefficients().iter().enumerate() {
                writeln!(out, "phi_{} = {}", i + 1, format_rational(c)).unwrap();
            }
            let rendered = if residual.is_zero() {
                "0".to_string()
            } else {
                residual
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("({}) x^{k}", format_rational(c)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            writeln!(out, "residual u*phi' - phi mod x^{} = {rendered}", cfg.order + 2).unwrap();
            out
        }
    })
}

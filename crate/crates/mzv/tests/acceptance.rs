//! Acceptance run: one PASS/FAIL line per criterion, then the negative controls.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mzv::{Options, RelationDb, Runner, Suite, SuiteReport};
use mzv_core::groupring::CATALOG;
use mzv_core::regularize::gamma_coeffs;
use mzv_core::symbols::relation_generators;
use mzv_core::{Composition, Flavor, Modulus, ProductCombo, Regularizer, Spaces, SymCombo, Verdict};
use num_traits::ToPrimitive;

type Outcome = Result<String, String>;

struct Tally {
    failed: Vec<String>,
}

impl Tally {
    fn run(&mut self, label: &str, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let mut res = f();
        let took = start.elapsed();
        if let (Ok(detail), Some(limit)) = (&res, limit) {
            if took > limit {
                res = Err(format!("{detail}; took {took:.2?}, limit {limit:.0?}"));
            }
        }
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!("{label}: {tag}  {title} ({took:.2?}) {detail}");
        if res.is_err() {
            self.failed.push(label.to_string());
        }
    }
}

fn opts(max_weight: usize) -> Options {
    Options::default().with_max_weight(max_weight)
}

fn suite_ok(r: &SuiteReport, prefixes: &[&str]) -> Outcome {
    let relevant: Vec<_> = r.cases.iter().filter(|c| prefixes.iter().any(|p| c.id.starts_with(p))).collect();
    if relevant.is_empty() {
        return Err(format!("suite {} produced no {prefixes:?} cases", r.suite));
    }
    let bad: Vec<_> = relevant.iter().filter(|c| !c.verdict.is_ok()).map(|c| c.id.clone()).collect();
    if bad.is_empty() {
        Ok(format!("{} cases", relevant.len()))
    } else {
        Err(format!("{} of {} failed, first {}", bad.len(), relevant.len(), bad[0]))
    }
}

fn all_ok(reports: &[&SuiteReport]) -> Outcome {
    let mut parts = Vec::new();
    for r in reports {
        let bad: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
        if !bad.is_empty() {
            return Err(format!("{}: {} failed, first {}", r.suite, bad.len(), bad[0]));
        }
        parts.push(format!("{} {}", r.suite, r.cases.len()));
    }
    Ok(parts.join(", "))
}

fn zeta_f64(c: &Composition) -> f64 {
    match c.parts() {
        [2] => PI * PI / 6.0,
        [3] => 1.202_056_903_159_594_3,
        [4] => PI.powi(4) / 90.0,
        p => panic!("no reference value for {p:?}"),
    }
}

fn product_f64(p: &ProductCombo) -> f64 {
    p.terms()
        .map(|(m, c)| {
            let prod: f64 = m.factors().iter().map(|w| zeta_f64(&w.to_composition().unwrap())).product();
            c.to_f64().unwrap() * prod
        })
        .sum()
}

/// Taylor coefficients of `exp(Σ_{n≥2} (−1)^n ζ(n) u^n / n)` up to `u^4`, by summing powers of the series.
fn gamma_oracle() -> [f64; 5] {
    let mut s = [0.0; 5];
    for (n, slot) in s.iter_mut().enumerate().skip(2) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * zeta_f64(&Composition::new(vec![n as u32]).unwrap()) / n as f64;
    }
    let mut out = [1.0, 0.0, 0.0, 0.0, 0.0];
    let mut power = [1.0, 0.0, 0.0, 0.0, 0.0];
    let mut fact = 1.0;
    for k in 1..=2 {
        let mut next = [0.0; 5];
        for i in 0..5 {
            for j in 0..5 - i {
                next[i + j] += power[i] * s[j];
            }
        }
        power = next;
        fact *= k as f64;
        for i in 0..5 {
            out[i] += power[i] / fact;
        }
    }
    out
}

/// `Σ_{N≥m>n≥1} 1/(m n^2) − H_N ζ_N(2)` by direct summation.
fn harmonic_reg_12(n_max: u64) -> f64 {
    let (mut inner, mut h, mut acc) = (0.0f64, 0.0f64, 0.0f64);
    for m in 1..=n_max {
        let mf = m as f64;
        acc += inner / mf;
        inner += 1.0 / (mf * mf);
        h += 1.0 / mf;
    }
    acc - h * inner
}

fn criterion1() -> Outcome {
    let mut runner = Runner::new(opts(1));
    let rep = runner.run(Suite::Reg);
    let detail = suite_ok(&rep, &["reg.display", "reg.gamma"])?;
    let want = gamma_oracle();
    for (i, g) in gamma_coeffs(4).iter().enumerate() {
        let got = product_f64(g);
        if (got - want[i]).abs() > 1e-12 {
            return Err(format!("gamma_{i} = {got}, series oracle {}", want[i]));
        }
    }
    let mut reg = Regularizer::new();
    let z12 = reg.zeta(&Composition::new(vec![1, 2]).unwrap(), Flavor::Harmonic);
    let expect: SymCombo = "-z(2,1) - z(3)".parse().unwrap();
    if z12 != expect {
        return Err(format!("z*(1,2) = {z12}"));
    }
    let direct = harmonic_reg_12(1_000_000);
    let target = -2.0 * zeta_f64(&Composition::new(vec![3]).unwrap());
    if (direct - target).abs() > 1e-4 {
        return Err(format!("direct sum for z*(1,2) gives {direct}, expected {target}"));
    }
    Ok(format!("{detail}, gamma_0..4 match the series, z*(1,2) = {z12} (direct sum {direct:.6})"))
}

fn criterion2() -> Outcome {
    let mut runner = Runner::new(Options { n_max: 6, ..opts(8) });
    let rep = runner.run(Suite::GroupRing);
    let expected: usize = CATALOG.iter().map(|(_, keys)| keys.len()).sum::<usize>() * 5;
    if CATALOG.len() != 11 || rep.cases.len() != expected {
        return Err(format!("{} families, {} cases, expected {expected}", CATALOG.len(), rep.cases.len()));
    }
    Ok(format!("11 families, {}", all_ok(&[&rep])?))
}

fn criterion3() -> Outcome {
    let o = Options { numeric_n: 100_000, numeric_tol: 1e-3, numeric_max_weight: 5, ..opts(5) };
    let mut runner = Runner::new(o);
    let rep = runner.run(Suite::Numeric);
    let mut reg = Regularizer::new();
    let expected: usize = (2..=5).map(|l| relation_generators(l, &mut reg).len()).sum();
    if rep.cases.len() != expected {
        return Err(format!("{} cases, expected {expected} generators", rep.cases.len()));
    }
    all_ok(&[&rep])
}

fn criterion4() -> Outcome {
    let mut runner = Runner::new(opts(7));
    let rep = runner.run(Suite::Reg);
    let rho: Vec<_> = rep.cases.iter().filter(|c| c.id.starts_with("reg.rho") && c.weight <= Some(6)).collect();
    if let Some(c) = rho.iter().find(|c| !c.verdict.is_ok()) {
        return Err(format!("{} {}", c.id, c.note.clone().unwrap_or_default()));
    }
    let eqs = suite_ok(&rep, &["reg.eq1", "reg.eq2"])?;
    Ok(format!("rho {} cases up to weight 6, eq1/eq2 {eqs} up to weight 7", rho.len()))
}

fn criterion5() -> Outcome {
    let mut runner = Runner::new(opts(6));
    let rep = runner.run(Suite::Table1);
    all_ok(&[&rep])?;
    let either: Vec<_> = rep.cases.iter().filter(|c| c.id.contains('±')).collect();
    let both = either
        .iter()
        .filter(|c| c.note.as_deref().is_some_and(|n| n.starts_with("signs certified: +,-")))
        .count();
    let uses_r = rep.cases.iter().filter(|c| c.note.as_deref().is_some_and(|n| n.contains("uses R"))).count();
    Ok(format!(
        "{} cases; {} ± entries, {both} certified with either sign; {uses_r} need R",
        rep.cases.len(),
        either.len()
    ))
}

fn criterion_suites(max_weight: usize, suites: &[Suite]) -> Outcome {
    let mut runner = Runner::new(opts(max_weight));
    let reports: Vec<_> = suites.iter().map(|&s| runner.run(s)).collect();
    all_ok(&reports.iter().collect::<Vec<_>>())
}

fn criterion9() -> Outcome {
    let mut runner = Runner::new(opts(8));
    let reports: Vec<_> = [Suite::Cor, Suite::Lemma33, Suite::Sums].iter().map(|&s| runner.run(s)).collect();
    for r in &reports {
        for l in [4, 6, 8] {
            if !r.cases.iter().any(|c| c.weight == Some(l)) {
                return Err(format!("{} has no weight {l} case", r.suite));
            }
        }
    }
    all_ok(&reports.iter().collect::<Vec<_>>())
}

fn criterion11() -> Outcome {
    let start = Instant::now();
    let db = RelationDb::build(8);
    let build = start.elapsed();
    if build > Duration::from_secs(60) {
        return Err(format!("database build took {build:.2?}"));
    }
    let start = Instant::now();
    let mut runner = Runner::new(opts(7));
    let reports = runner.run_all();
    let suites = start.elapsed();
    if suites > Duration::from_secs(600) {
        return Err(format!("suites took {suites:.2?}"));
    }
    let cases: usize = reports.iter().map(|r| r.cases.len()).sum();
    all_ok(&reports.iter().collect::<Vec<_>>())?;
    Ok(format!("database to weight {} in {build:.2?}; all suites to weight 7 ({cases} cases) in {suites:.2?}", db.max_weight()))
}

fn control(spaces: &mut Spaces, expr: &str, modulus: &str) -> Outcome {
    let v: SymCombo = expr.parse().unwrap();
    let m: Modulus = modulus.parse().unwrap();
    match spaces.verdict(v.weight(), &v, &m) {
        Ok(Verdict::NotCertified) => Ok(format!("{expr} not certified mod {m}")),
        Ok(other) => Err(format!("{expr} unexpectedly {} mod {m}", other.name())),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let mut t = Tally { failed: Vec::new() };
    let s = Some;
    let secs = Duration::from_secs;
    t.run("criterion 1", "displayed regularized values and gamma_i", s(secs(1)), criterion1);
    t.run("criterion 2", "group-ring identities for n = 2..6", s(secs(30)), criterion2);
    t.run("criterion 3", "relation generators to weight 5 against the numeric oracle", s(secs(120)), criterion3);
    t.run("criterion 4", "rho correction and flavor congruences", s(secs(120)), criterion4);
    t.run("criterion 5", "table of index-pair congruences", s(secs(60)), criterion5);
    t.run("criterion 6", "parity and index-pair theorem to weight 7", s(secs(300)), || {
        criterion_suites(7, &[Suite::Thm1, Suite::Parity])
    });
    t.run("criterion 7", "swap, reversal and cyclic congruences to weight 7", None, || {
        criterion_suites(7, &[Suite::Thm2])
    });
    t.run("criterion 8", "generating-function congruences and shuffle factorization", None, || {
        criterion_suites(7, &[Suite::Lemma31])
    });
    t.run("criterion 9", "corollary, S-sums and sum formulas at even weights 4, 6, 8", None, criterion9);
    t.run("criterion 10", "weight 6 worked examples", None, || criterion_suites(6, &[Suite::Weight6]));
    t.run("criterion 11", "database to weight 8 and full run to weight 7", None, criterion11);

    let mut spaces = Spaces::new();
    t.run("control 1", "weight 8 class survives depth one", None, || control(&mut spaces, "z(5,3)", "Zd:1,P,R"));
    t.run("control 2", "wrong reversal sign at weight 8", None, || {
        control(&mut spaces, "z(5,3) - z(3,5)", "Zd:1,P,R")
    });
    t.run("control 3", "numeric oracle rejects a false relation", None, || {
        let v: SymCombo = "z(2,1) - 2z(3)".parse().unwrap();
        let x = mzv_core::NumericEvaluator::new(100_000).combo(&v).map_err(|e| e.to_string())?;
        if mzv_core::numeric::check_relation_numeric(&v, 1e-3) {
            Err(format!("accepted, value {x}"))
        } else {
            Ok(format!("value {x}"))
        }
    });

    if t.failed.is_empty() {
        println!("acceptance: all criteria and controls pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {}", t.failed.join(", "));
        ExitCode::FAILURE
    }
}

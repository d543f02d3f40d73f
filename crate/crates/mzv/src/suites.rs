//! Verification suites. Each suite turns a family of statements into cases
//! with an explicit modulus and a verdict.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use mzv_core::genfun::{
    check_lemma31_harmonic, check_lemma31_shuffle, check_shuffle_factorization, check_theorem2_cyclic,
    insertion_merge_defect, GenFunReport,
};
use mzv_core::groupring::{identity_sides, CATALOG};
use mzv_core::numeric::{NumericEvaluator, DEFAULT_N, DEFAULT_TOL};
use mzv_core::coeff::qf;
use mzv_core::Coefficient;
use mzv_core::regularize::{gamma_coeffs, rho_apply, Monomial};
use mzv_core::symbols::relation_generators;
use mzv_core::{Composition, Flavor, Modulus, MzvSymbol, ProductCombo, Q, Spaces, SymCombo, TPoly, Verdict};

use crate::report::{Case, CaseVerdict, GenFunSummary, Parameters, SuiteReport};
use crate::table1::{Sign, TABLE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Parity,
    Thm1,
    Thm2,
    Table1,
    Cor,
    Lemma33,
    Sums,
    Weight6,
    GroupRing,
    Reg,
    Lemma31,
    Numeric,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Reg,
        Suite::Numeric,
        Suite::GroupRing,
        Suite::Lemma31,
        Suite::Parity,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Table1,
        Suite::Weight6,
        Suite::Lemma33,
        Suite::Cor,
        Suite::Sums,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Parity => "parity",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Table1 => "table1",
            Suite::Cor => "cor",
            Suite::Lemma33 => "lemma33",
            Suite::Sums => "sums",
            Suite::Weight6 => "weight6",
            Suite::GroupRing => "groupring",
            Suite::Reg => "reg",
            Suite::Lemma31 => "lemma31",
            Suite::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub max_weight: usize,
    pub n_max: usize,
    pub flavors: Vec<Flavor>,
    pub numeric_n: u64,
    pub numeric_tol: f64,
    /// Cap for the numeric oracle, which converges slowly at high weight.
    pub numeric_max_weight: usize,
    /// Cap for the generating-function congruences.
    pub genfun_max_weight: usize,
    /// Cap for the exact shuffle factorization.
    pub factor_max_weight: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_weight: 8,
            n_max: 6,
            flavors: Flavor::BOTH.to_vec(),
            numeric_n: DEFAULT_N,
            numeric_tol: DEFAULT_TOL,
            numeric_max_weight: 5,
            genfun_max_weight: 7,
            factor_max_weight: 6,
        }
    }
}

impl Options {
    pub fn with_max_weight(mut self, w: usize) -> Self {
        self.max_weight = w;
        self
    }

    fn params(&self, n_max: bool) -> Parameters {
        Parameters {
            max_weight: Some(self.max_weight),
            n_max: n_max.then_some(self.n_max),
            flavors: self.flavors.iter().map(|f| f.name().to_string()).collect(),
            numeric_n: None,
            numeric_tol: None,
        }
    }
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

/// `z(2,1)` for convergent indices, `z*(1,2)` or `z_sh(1,2)` otherwise.
pub fn zeta_name(c: &Composition, flavor: Flavor) -> String {
    if c.is_admissible() {
        format!("z({c})")
    } else {
        match flavor {
            Flavor::Harmonic => format!("z*({c})"),
            Flavor::Shuffle => format!("z_sh({c})"),
        }
    }
}

/// `Z_l^d + P_l + R_l`, dropping `Z_l^0 = 0`.
fn depth_mod(d: usize) -> Modulus {
    let m = Modulus::new();
    let m = if d == 0 { m } else { m.depth(d) };
    m.product().relation()
}

fn sign_of(l: usize) -> Q {
    if l % 2 == 1 {
        Q::from_integer(1.into())
    } else {
        Q::from_integer((-1).into())
    }
}

fn neg_one() -> Q {
    Q::from_integer((-1).into())
}

/// Sum of `ζ(l_1,…,l_b)` over weight `l` with `l_1 ≥ a`.
pub fn sum_first_at_least(l: usize, a: u32, b: usize) -> SymCombo {
    let mut s = SymCombo::zero(l);
    for c in Composition::all(l as u32, b) {
        if c.parts()[0] >= a {
            s.add_scaled(&SymCombo::of(&c).expect("admissible"), &Q::from_integer(1.into()));
        }
    }
    s
}

fn append_ones(c: &Composition, k: usize) -> Composition {
    let mut v = c.parts().to_vec();
    v.extend(std::iter::repeat_n(1, k));
    comp(&v)
}

/// `Σ ζ(l_1,…,l_p,1^{q−1})` over `l_1 ≥ 2` and `l_1 + … + l_p = l − q + 1`.
pub fn sum_s(l: usize, p: usize, q: usize) -> SymCombo {
    let mut s = SymCombo::zero(l);
    for c in Composition::all((l + 1 - q) as u32, p) {
        if c.parts()[0] >= 2 {
            s.add_scaled(&SymCombo::of(&append_ones(&c, q - 1)).expect("admissible"), &Q::from_integer(1.into()));
        }
    }
    s
}

/// `Σ ζ^R(l_1,…,l_p,1^{q−1})` over all `l_1 + … + l_p = l − q + 1`.
pub fn sum_s_reg(l: usize, p: usize, q: usize, flavor: Flavor, spaces: &mut Spaces) -> SymCombo {
    let mut s = SymCombo::zero(l);
    for c in Composition::all((l + 1 - q) as u32, p) {
        s.add_scaled(&spaces.zeta(&append_ones(&c, q - 1), flavor), &Q::from_integer(1.into()));
    }
    s
}

/// Flavors worth running for `c`: a convergent value does not depend on
/// the regularization.
fn flavors_for(c: &Composition, opts: &Options) -> Vec<Option<Flavor>> {
    if c.is_admissible() {
        vec![None]
    } else {
        opts.flavors.iter().copied().map(Some).collect()
    }
}

fn with_flavor(case: Case, f: Option<Flavor>) -> Case {
    match f {
        Some(f) => case.flavor(f.name()),
        None => case,
    }
}

fn suffix(f: Option<Flavor>) -> String {
    f.map(|f| format!("/{}", f.name())).unwrap_or_default()
}

/// Runs suites against a shared, lazily grown set of subspaces.
pub struct Runner {
    pub spaces: Spaces,
    pub opts: Options,
}

impl Runner {
    pub fn new(opts: Options) -> Self {
        Runner { spaces: Spaces::new(), opts }
    }

    pub fn with_spaces(spaces: Spaces, opts: Options) -> Self {
        Runner { spaces, opts }
    }

    pub fn run(&mut self, suite: Suite) -> SuiteReport {
        let start = Instant::now();
        let mut r = match suite {
            Suite::Parity => self.parity(),
            Suite::Thm1 => self.theorem1(),
            Suite::Thm2 => self.theorem2(),
            Suite::Table1 => self.table1(),
            Suite::Cor => self.corollary(),
            Suite::Lemma33 => self.lemma33(),
            Suite::Sums => self.sum_formulas(),
            Suite::Weight6 => self.weight6(),
            Suite::GroupRing => self.groupring(),
            Suite::Reg => self.regularization(),
            Suite::Lemma31 => self.lemma31(),
            Suite::Numeric => self.numeric(),
        };
        r.elapsed = start.elapsed();
        r
    }

    pub fn run_all(&mut self) -> Vec<SuiteReport> {
        Suite::ALL.iter().map(|&s| self.run(s)).collect()
    }

    fn zeta(&mut self, c: &Composition, f: Option<Flavor>) -> SymCombo {
        self.spaces.zeta(c, f.unwrap_or(Flavor::Harmonic))
    }

    fn verdict(&mut self, l: usize, v: &SymCombo, m: &Modulus) -> CaseVerdict {
        self.spaces.verdict(l, v, m).map(CaseVerdict::from).unwrap_or(CaseVerdict::NotCertified)
    }

    /// Whether `v` already lies in `m` without the relation space.
    fn needs_relations(&mut self, l: usize, v: &SymCombo, m: &Modulus) -> bool {
        let smaller = Modulus::of(m.labels().iter().filter(|x| **x != mzv_core::SubspaceLabel::Relation).cloned());
        !self.spaces.verdict(l, v, &smaller).map(Verdict::is_ok).unwrap_or(false)
    }

    fn parity(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("parity", self.opts.params(false));
        for l in 2..=self.opts.max_weight {
            for n in 1..=l {
                if (l + n) % 2 == 0 {
                    continue;
                }
                let m = Modulus::new().below(n).product().relation();
                for c in Composition::all(l as u32, n) {
                    for f in flavors_for(&c, &self.opts) {
                        let v = self.zeta(&c, f);
                        let verdict = self.verdict(l, &v, &m);
                        let case = Case::new(format!("parity/{c}{}", suffix(f)), zeta_name(&c, f.unwrap_or(Flavor::Harmonic)), &m, verdict);
                        rep.push(with_flavor(case.weight(l).depth(n), f));
                    }
                }
            }
        }
        rep
    }

    fn theorem1(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("thm1", self.opts.params(false));
        for l in 1..=self.opts.max_weight {
            for c in Composition::all_of_weight(l as u32) {
                let n = c.depth();
                let r = c.reverse();
                let m = depth_mod(n - 1);
                for f in self.opts.flavors.clone() {
                    let fo = (!c.is_admissible() || !r.is_admissible()).then_some(f);
                    if fo.is_none() && f != self.opts.flavors[0] {
                        continue;
                    }
                    let mut v = self.zeta(&c, Some(f));
                    v.add_scaled(&self.zeta(&r, Some(f)), &-sign_of(l));
                    let verdict = if l < 2 { CaseVerdict::exact(v.is_zero()) } else { self.verdict(l, &v, &m) };
                    let st = format!("{} - ({}) {}", zeta_name(&c, f), if l % 2 == 1 { "+1" } else { "-1" }, zeta_name(&r, f));
                    let case = Case::new(format!("thm1/{c}{}", suffix(fo)), st, &m, verdict);
                    rep.push(with_flavor(case.weight(l).depth(n), fo));
                }
            }
        }
        rep
    }

    fn theorem2(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("thm2", self.opts.params(false));
        for l in 2..=self.opts.max_weight {
            for c in Composition::all_of_weight(l as u32) {
                let n = c.depth();
                if n < 2 {
                    continue;
                }
                let m = depth_mod(n - 1);
                let parts = c.parts();
                for i in 0..n {
                    if parts[i] != 1 {
                        continue;
                    }
                    let (k, rest) = parts.split_at(i);
                    let lr = &rest[1..];
                    let swapped = comp(&[lr, &[1], k].concat());
                    let rk: Vec<u32> = k.iter().rev().copied().collect();
                    let rl: Vec<u32> = lr.iter().rev().copied().collect();
                    let reversed = comp(&[&rk[..], &[1], &rl[..]].concat());
                    for f in self.opts.flavors.clone() {
                        let base = self.zeta(&c, Some(f));
                        let mut a = base.clone();
                        a.add_scaled(&self.zeta(&swapped, Some(f)), &neg_one());
                        let va = self.verdict(l, &a, &m);
                        let st = format!("{} - {}", zeta_name(&c, f), zeta_name(&swapped, f));
                        rep.push(
                            Case::new(format!("thm2.swap/{c}/i={}/{}", i + 1, f.name()), st, &m, va)
                                .flavor(f.name())
                                .weight(l)
                                .depth(n),
                        );
                        let mut b = base;
                        b.add_scaled(&self.zeta(&reversed, Some(f)), &-sign_of(l));
                        let vb = self.verdict(l, &b, &m);
                        let st = format!(
                            "{} - ({}) {}",
                            zeta_name(&c, f),
                            if l % 2 == 1 { "+1" } else { "-1" },
                            zeta_name(&reversed, f)
                        );
                        rep.push(
                            Case::new(format!("thm2.reverse/{c}/i={}/{}", i + 1, f.name()), st, &m, vb)
                                .flavor(f.name())
                                .weight(l)
                                .depth(n),
                        );
                    }
                }
            }
        }
        for l in 2..=self.opts.max_weight.min(self.opts.genfun_max_weight) {
            for n in 2..=l {
                for f in self.opts.flavors.clone() {
                    match check_theorem2_cyclic(l, n, f, &mut self.spaces) {
                        Ok(r) => rep.push(genfun_case(&r, "cyclic substitution of the generating function")),
                        Err(e) => rep.push(
                            Case::new(format!("thm2.cyclic/{l}/{n}/{}", f.name()), e.to_string(), depth_mod(n - 1), CaseVerdict::NotCertified)
                                .flavor(f.name()),
                        ),
                    }
                }
            }
        }
        rep
    }

    fn table1(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("table1", self.opts.params(false));
        for row in TABLE {
            let l = row.weight;
            if l > self.opts.max_weight {
                continue;
            }
            let base = comp(row.base);
            let m = depth_mod(row.depth);
            for item in row.items {
                let ic = comp(item.parts);
                let flavors: Vec<Option<Flavor>> =
                    if item.regularized { self.opts.flavors.iter().copied().map(Some).collect() } else { vec![None] };
                for f in flavors {
                    let fl = f.unwrap_or(Flavor::Harmonic);
                    let target = self.zeta(&ic, f);
                    let signs: &[(&str, i64)] = match item.sign {
                        Sign::Plus => &[("+", 1)],
                        Sign::Minus => &[("-", -1)],
                        Sign::Either => &[("+", 1), ("-", -1)],
                    };
                    let mut held = Vec::new();
                    let mut best = CaseVerdict::NotCertified;
                    let mut needs_r = false;
                    for (name, s) in signs {
                        let mut v = SymCombo::of(&base).expect("admissible base");
                        v.add_scaled(&target, &Q::from_integer((-s).into()));
                        let verdict = self.verdict(l, &v, &m);
                        if verdict.is_ok() {
                            held.push(*name);
                            needs_r |= self.needs_relations(l, &v, &m);
                            if best == CaseVerdict::NotCertified || verdict == CaseVerdict::ExactEqual {
                                best = verdict;
                            }
                        }
                    }
                    let mut note = match item.sign {
                        Sign::Either => format!(
                            "signs certified: {}",
                            if held.is_empty() { "none".to_string() } else { held.join(",") }
                        ),
                        _ => String::new(),
                    };
                    if !held.is_empty() {
                        if !note.is_empty() {
                            note.push_str("; ");
                        }
                        note.push_str(if needs_r { "uses R" } else { "Z+P suffices" });
                    }
                    let st = format!("z({base}) = {}{}", item.sign.symbol(), zeta_name(&ic, fl));
                    let case = Case::new(format!("table1/{base}/{}{ic}{}", item.sign.symbol(), suffix(f)), st, &m, best)
                        .weight(l)
                        .depth(row.depth + 1)
                        .note(note);
                    rep.push(with_flavor(case, f));
                }
            }
        }
        rep
    }

    fn corollary(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("cor", self.opts.params(false));
        for l in (4..=self.opts.max_weight).step_by(2) {
            for n in 1..l {
                for mm in 1..=(l - n) {
                    let v = sum_first_at_least(l, mm as u32 + 1, n);
                    let mut ds = vec![mm, n];
                    ds.dedup();
                    for d in ds {
                        let m = depth_mod(d + 1);
                        let verdict = self.verdict(l, &v, &m);
                        let st = format!("sum_(l1>={}) z(l1..l{n}) of weight {l}, d={d}", mm + 1);
                        rep.push(Case::new(format!("cor/{l}/m={mm}/n={n}/d={d}"), st, &m, verdict).weight(l).depth(n));
                    }
                    if mm + 1 < n {
                        let m = Modulus::new().below(n).product().relation();
                        let verdict = self.verdict(l, &v, &m);
                        let st = format!("sum_(l1>={}) z(l1..l{n}) of weight {l}", mm + 1);
                        rep.push(Case::new(format!("cor/{l}/m={mm}/n={n}/below"), st, &m, verdict).weight(l).depth(n));
                    }
                }
            }
        }
        rep
    }

    fn lemma33(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("lemma33", self.opts.params(false));
        for l in (2..=self.opts.max_weight).step_by(2) {
            for p in 1..l {
                for q in 1..=(l - p) {
                    let m = depth_mod(p + q - 2);
                    let v = sum_s(l, p, q);
                    let verdict = self.verdict(l, &v, &m);
                    rep.push(
                        Case::new(format!("lemma33/{l}/p={p}/q={q}"), format!("S({l},{p},{q})"), &m, verdict)
                            .weight(l)
                            .depth(p + q - 1),
                    );
                    for f in self.opts.flavors.clone() {
                        let v = sum_s_reg(l, p, q, f, &mut self.spaces);
                        let verdict = self.verdict(l, &v, &m);
                        rep.push(
                            Case::new(format!("lemma33.reg/{l}/p={p}/q={q}/{}", f.name()), format!("S~({l},{p},{q})"), &m, verdict)
                                .flavor(f.name())
                                .weight(l)
                                .depth(p + q - 1),
                        );
                    }
                }
            }
        }
        rep
    }

    fn sum_formulas(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("sums", self.opts.params(false));
        let m = Modulus::new().relation();
        for l in 3..=self.opts.max_weight {
            for n in 1..l {
                for mm in 1..=(l - n) {
                    let r = sum_first_at_least(l, mm as u32 + 1, n);
                    let mut v = r.clone();
                    v.add_scaled(&sum_s(l, l - mm - n + 1, n), &neg_one());
                    let verdict = self.verdict(l, &v, &m);
                    let st = format!("R({l},{},{n}) - S({l},{},{n})", mm + 1, l - mm - n + 1);
                    rep.push(Case::new(format!("sums.restricted/{l}/m={mm}/n={n}"), st, &m, verdict).weight(l));
                    let mut v = r;
                    v.add_scaled(&sum_first_at_least(l, n as u32 + 1, mm), &neg_one());
                    let verdict = self.verdict(l, &v, &m);
                    let st = format!("R({l},{},{n}) - R({l},{},{mm})", mm + 1, n + 1);
                    rep.push(Case::new(format!("sums.ohno/{l}/m={mm}/n={n}"), st, &m, verdict).weight(l));
                }
            }
            for c in Composition::admissible_of_weight(l as u32) {
                let d = c.dual().expect("admissible");
                if d < c {
                    continue;
                }
                let mut v = SymCombo::of(&c).expect("admissible");
                v.add_scaled(&SymCombo::of(&d).expect("admissible"), &neg_one());
                let verdict = self.verdict(l, &v, &m);
                rep.push(Case::new(format!("sums.duality/{c}"), format!("z({c}) - z({d})"), &m, verdict).weight(l));
            }
        }
        rep
    }

    fn weight6(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("weight6", self.opts.params(false));
        if self.opts.max_weight < 6 {
            return rep;
        }
        for c in Composition::admissible_of_weight(6) {
            let n = c.depth();
            if !(2..=5).contains(&n) {
                continue;
            }
            let m = depth_mod(n - 1);
            let v = SymCombo::of(&c).expect("admissible");
            let verdict = self.verdict(6, &v, &m);
            let note = if verdict.is_ok() && !self.needs_relations(6, &v, &m) { "Z+P suffices" } else { "uses R" };
            rep.push(Case::new(format!("weight6/{c}"), format!("z({c})"), &m, verdict).weight(6).depth(n).note(note));
        }
        let sym = |p: &[u32]| MzvSymbol::new(&comp(p)).expect("admissible");
        let one = Q::from_integer(1.into());
        let product_checks: [(&str, SymCombo, ProductCombo); 2] = [
            (
                "2z(3,3) = z(3)z(3) - z(6)",
                SymCombo::of(&comp(&[3, 3])).unwrap().scaled(&Q::from_integer(2.into())),
                {
                    let mut p = ProductCombo::monomial(Monomial::new(vec![sym(&[3]), sym(&[3])]), one.clone());
                    p.add_term(Monomial::new(vec![sym(&[6])]), neg_one());
                    p
                },
            ),
            (
                "3z(2,2,2) = z(2)z(2,2) - z(4,2) - z(2,4)",
                SymCombo::of(&comp(&[2, 2, 2])).unwrap().scaled(&Q::from_integer(3.into())),
                {
                    let mut p = ProductCombo::monomial(Monomial::new(vec![sym(&[2]), sym(&[2, 2])]), one.clone());
                    p.add_term(Monomial::new(vec![sym(&[4, 2])]), neg_one());
                    p.add_term(Monomial::new(vec![sym(&[2, 4])]), neg_one());
                    p
                },
            ),
        ];
        for (name, lhs, rhs) in product_checks {
            let expanded = self.spaces.expand(&rhs, Flavor::Harmonic);
            let holds = expanded.map(|e| (&lhs - &e).is_zero()).unwrap_or(false);
            rep.push(Case::new(format!("weight6.harmonic/{name}"), name, "0", CaseVerdict::exact(holds)).weight(6));
        }
        let mut v = SymCombo::of(&comp(&[2, 3, 1])).unwrap();
        v.add_scaled(&SymCombo::of(&comp(&[3, 1, 2])).unwrap(), &neg_one());
        let m = Modulus::new().relation();
        let verdict = self.verdict(6, &v, &m);
        rep.push(Case::new("weight6.duality/2,3,1", "z(2,3,1) - z(3,1,2)", &m, verdict).weight(6));
        rep
    }

    fn groupring(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("groupring", self.opts.params(true));
        for (family, keys) in CATALOG.iter() {
            for n in 2..=self.opts.n_max {
                for key in keys.iter() {
                    let (verdict, note) = match identity_sides(key, n) {
                        Ok((a, b)) => (CaseVerdict::exact(a == b), None),
                        Err(e) => (CaseVerdict::NotCertified, Some(e.to_string())),
                    };
                    let mut case = Case::new(format!("groupring/{family}/{key}/n={n}"), *key, "0", verdict).depth(n);
                    if let Some(note) = note {
                        case = case.note(note);
                    }
                    rep.push(case);
                }
            }
        }
        rep
    }

    fn regularization(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("reg", self.opts.params(false));
        self.displayed_values(&mut rep);
        for l in 1..=self.opts.max_weight {
            for c in Composition::all_of_weight(l as u32) {
                let (verdict, detail) = self.rho_check(&c);
                rep.push(
                    Case::new(format!("reg.rho/{c}"), format!("rho(Z*({c};T)) - Z_sh({c};T)"), "R (per coefficient weight)", verdict)
                        .weight(l)
                        .depth(c.depth())
                        .note(detail),
                );
                if l < 2 {
                    continue;
                }
                let n = c.depth();
                let star = self.zeta(&c, Some(Flavor::Harmonic));
                let sh = self.zeta(&c, Some(Flavor::Shuffle));
                let m1 = Modulus::new().product().relation();
                let v = &star - &sh;
                let verdict = self.verdict(l, &v, &m1);
                rep.push(
                    Case::new(format!("reg.eq1/{c}"), format!("z*({c}) - z_sh({c})"), &m1, verdict).weight(l).depth(n),
                );
                let m2 = depth_mod(n);
                for (f, v) in [(Flavor::Harmonic, star), (Flavor::Shuffle, sh)] {
                    let verdict = self.verdict(l, &v, &m2);
                    rep.push(
                        Case::new(format!("reg.eq2/{c}/{}", f.name()), zeta_name(&c, f), &m2, verdict)
                            .flavor(f.name())
                            .weight(l)
                            .depth(n),
                    );
                }
            }
        }
        rep
    }

    /// `ρ(Z*(c;T)) − Z_sh(c;T)` coefficientwise, each coefficient expanded
    /// and tested modulo the relation space of its weight.
    fn rho_check(&mut self, c: &Composition) -> (CaseVerdict, String) {
        let reg = self.spaces.regularizer();
        let star = reg.t_poly(c, Flavor::Harmonic);
        let sh = reg.t_poly(c, Flavor::Shuffle);
        let rho = rho_apply(&star);
        let top = rho.degree().unwrap_or(0).max(sh.degree().unwrap_or(0));
        let l = c.weight() as usize;
        let mut worst = CaseVerdict::ExactEqual;
        let mut detail = Vec::new();
        for k in 0..=top {
            let w = l.saturating_sub(k as usize);
            let mut d = rho.coeff(k).cloned().unwrap_or_else(|| ProductCombo::zero(w));
            if let Some(s) = sh.coeff(k) {
                d.add_scaled(&ProductCombo::from(s), &neg_one());
            }
            let v = match self.spaces.expand(&d, Flavor::Harmonic) {
                Ok(v) => v,
                Err(_) => {
                    worst = CaseVerdict::NotCertified;
                    continue;
                }
            };
            let verdict = if v.is_zero() {
                CaseVerdict::ExactEqual
            } else if w < 2 {
                CaseVerdict::NotCertified
            } else {
                self.verdict(w, &v, &Modulus::new().relation())
            };
            detail.push(format!("T^{k}: {}", verdict.name()));
            if !verdict.is_ok() || (worst == CaseVerdict::ExactEqual && verdict == CaseVerdict::Certified) {
                worst = verdict;
            }
            if !worst.is_ok() {
                worst = CaseVerdict::NotCertified;
            }
        }
        (worst, detail.join(", "))
    }

    fn displayed_values(&mut self, rep: &mut SuiteReport) {
        let sc = |s: &str| -> SymCombo { s.parse().expect("literal") };
        let scalar = |n, d| SymCombo::scalar(qf(n, d));
        let polys: [(&str, Flavor, &[u32], Vec<(u32, SymCombo)>); 4] = [
            ("z*(1;T) = T", Flavor::Harmonic, &[1], vec![(1, scalar(1, 1))]),
            ("z_sh(1;T) = T", Flavor::Shuffle, &[1], vec![(1, scalar(1, 1))]),
            ("z*(1,1;T) = T^2/2 - z(2)/2", Flavor::Harmonic, &[1, 1], vec![(2, scalar(1, 2)), (0, sc("-1/2 z(2)"))]),
            ("z_sh(1,1;T) = T^2/2", Flavor::Shuffle, &[1, 1], vec![(2, scalar(1, 2))]),
        ];
        for (name, f, parts, want) in polys {
            let got = self.spaces.regularizer().t_poly(&comp(parts), f);
            let mut expected = TPoly::new(got.weight);
            for (k, c) in want {
                expected.set(k, c);
            }
            let same = got.coeffs().count() == expected.coeffs().count()
                && expected.coeffs().all(|(k, c)| got.coeff(k) == Some(c));
            rep.push(
                Case::new(format!("reg.display/{name}"), name, "0", CaseVerdict::exact(same))
                    .note(format!("computed {got}")),
            );
        }
        let values = [
            ("z*(1,1) = -z(2)/2", comp(&[1, 1]), Flavor::Harmonic, sc("-1/2 z(2)")),
            ("z*(1) = 0", comp(&[1]), Flavor::Harmonic, SymCombo::zero(1)),
            ("z_sh(1) = 0", comp(&[1]), Flavor::Shuffle, SymCombo::zero(1)),
            ("z_sh(1,1) = 0", comp(&[1, 1]), Flavor::Shuffle, SymCombo::zero(2)),
        ];
        for (name, c, f, want) in values {
            let got = self.zeta(&c, Some(f));
            rep.push(Case::new(format!("reg.display/{name}"), name, "0", CaseVerdict::exact(got == want)));
        }
        let single = |p: &[u32]| Monomial::new(vec![MzvSymbol::new(&comp(p)).expect("admissible")]);
        let mut g4 = ProductCombo::monomial(single(&[4]), qf(1, 4));
        g4.add_term(
            Monomial::new(vec![MzvSymbol::new(&comp(&[2])).unwrap(), MzvSymbol::new(&comp(&[2])).unwrap()]),
            qf(1, 8),
        );
        let listed = [
            ("1", ProductCombo::one()),
            ("0", ProductCombo::zero(1)),
            ("z(2)/2", ProductCombo::monomial(single(&[2]), qf(1, 2))),
            ("-z(3)/3", ProductCombo::monomial(single(&[3]), qf(-1, 3))),
            ("(2z(4) + z(2)^2)/8", g4),
        ];
        for (i, (g, (text, want))) in gamma_coeffs(4).iter().zip(listed).enumerate() {
            rep.push(
                Case::new(format!("reg.gamma/{i}"), format!("gamma_{i} = {text}"), "0", CaseVerdict::exact(*g == want))
                    .note(format!("computed {g}")),
            );
        }
    }

    fn lemma31(&mut self) -> SuiteReport {
        let mut rep = SuiteReport::new("lemma31", self.opts.params(false));
        let top = self.opts.max_weight.min(self.opts.genfun_max_weight);
        for l in 2..=top {
            for n in 2..=l {
                for f in self.opts.flavors.clone() {
                    match check_lemma31_shuffle(l, n, f, &mut self.spaces) {
                        Ok(r) => rep.push(genfun_case(&r, "Z|P(e+(-1)^n tau), Z|P sh_j")),
                        Err(e) => rep.push(Case::new(format!("lemma31.shuffle/{l}/{n}"), e.to_string(), "P+R", CaseVerdict::NotCertified)),
                    }
                    match check_lemma31_harmonic(l, n, f, &mut self.spaces) {
                        Ok(r) => rep.push(genfun_case(&r, "Z|(e - eps tau P tau P^-1), Z|sh_1")),
                        Err(e) => rep.push(Case::new(format!("lemma31.harmonic/{l}/{n}"), e.to_string(), depth_mod(n - 1), CaseVerdict::NotCertified)),
                    }
                }
            }
            for c in Composition::all_of_weight(l as u32) {
                if c.depth() < 2 {
                    continue;
                }
                let holds = insertion_merge_defect(&c, self.spaces.regularizer()).is_zero();
                rep.push(
                    Case::new(format!("lemma31.insertion/{c}"), format!("z*({}) z*(rest) = insertions + merges", c.parts()[0]), "0", CaseVerdict::exact(holds))
                        .flavor(Flavor::Harmonic.name())
                        .weight(l)
                        .depth(c.depth()),
                );
            }
        }
        for l in 2..=self.opts.max_weight.min(self.opts.factor_max_weight) {
            for n in 2..=l {
                for j in 1..n {
                    let holds = check_shuffle_factorization(l, n, j, self.spaces.regularizer()).unwrap_or(false);
                    let summary = GenFunSummary {
                        check: "shuffle.factorization".into(),
                        l,
                        n,
                        j: Some(j),
                        verdict: CaseVerdict::exact(holds),
                        failures: Vec::new(),
                    };
                    rep.push(
                        Case::new(format!("lemma31.factorization/{l}/{n}/{j}"), "(Z_sh|P)|sh_j = product of split generating functions", "0", summary.verdict)
                            .flavor(Flavor::Shuffle.name())
                            .weight(l)
                            .depth(n)
                            .note(summary.to_json()),
                    );
                }
            }
        }
        rep
    }

    fn numeric(&mut self) -> SuiteReport {
        let mut params = self.opts.params(false);
        params.numeric_n = Some(self.opts.numeric_n);
        params.numeric_tol = Some(self.opts.numeric_tol);
        let mut rep = SuiteReport::new("numeric", params);
        let mut ev = NumericEvaluator::new(self.opts.numeric_n);
        for l in 2..=self.opts.max_weight.min(self.opts.numeric_max_weight) {
            let gens = relation_generators(l, self.spaces.regularizer());
            for (i, g) in gens.iter().enumerate() {
                let (verdict, note) = match ev.combo(&g.value) {
                    Ok(x) => {
                        let pass = x.to_f64().abs() <= self.opts.numeric_tol + x.error_bound;
                        (CaseVerdict::numeric(pass), format!("value {x}"))
                    }
                    Err(e) => (CaseVerdict::NumericFail, e.to_string()),
                };
                rep.push(
                    Case::new(format!("numeric/{l}/{i}"), format!("{:?} {}", g.kind, g.source), "0", verdict)
                        .weight(l)
                        .note(note),
                );
            }
        }
        rep
    }
}

fn genfun_case(r: &GenFunReport, statement: &str) -> Case {
    let s = GenFunSummary::from_report(r);
    let id = match r.j {
        Some(j) => format!("{}/{}/{}/{j}/{}", r.check, r.l, r.n, r.flavor.name()),
        None => format!("{}/{}/{}/{}", r.check, r.l, r.n, r.flavor.name()),
    };
    let mut note = s.to_json();
    if let Some(w) = r.without_relations {
        note.push_str(if w { "; without R: yes" } else { "; without R: no" });
    }
    Case::new(id, statement, &r.modulus, s.verdict).flavor(r.flavor.name()).weight(r.l).depth(r.n).note(note)
}

//! Homogeneous polynomials with symbolic coefficients, the right action of
//! the group ring, and generating functions of regularized values.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{Coefficient, Q};
use crate::groupring::{named, GroupRingElem, IntMatrix, Named};
use crate::regularize::{Flavor, Regularizer, SymCombo};
use crate::symbols::{Modulus, Spaces, SymbolError, Verdict};
use crate::words::{Composition, ProductMemo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenFunError {
    #[error("dimension mismatch: polynomial in {poly} variables, element of size {elem}")]
    DimensionMismatch { poly: usize, elem: usize },
    #[error("expected {expected} linear forms, got {found}")]
    FormCount { expected: usize, found: usize },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// All exponent vectors of length `n` summing to `degree`, in lexicographic order.
pub fn exponents(n: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A homogeneous polynomial of degree `degree` in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly<C> {
    n: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> HomogPoly<C> {
    pub fn new(n: usize, degree: u32) -> Self {
        HomogPoly { n, degree, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    /// `self += factor · c · x^exps`.
    pub fn add_term(&mut self, exps: Vec<u32>, c: &C, factor: &Q) {
        debug_assert_eq!(exps.len(), self.n);
        debug_assert_eq!(exps.iter().sum::<u32>(), self.degree);
        if factor.is_zero() || c.vanishes() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(e) => {
                e.add_scaled(c, factor);
                if e.vanishes() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.scaled(factor));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Q) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c, factor);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    /// Maps every coefficient.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> HomogPoly<D> {
        let mut out = HomogPoly::new(self.n, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c), &Q::one());
        }
        out
    }
}

type RatPoly = BTreeMap<Vec<u32>, Q>;

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = out.entry(e.clone()).or_insert_with(Q::zero);
            *v += ca * cb;
            if v.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Substitutes `x_k ↦ Σ_i forms[k][i] y_i` (homogeneous linear forms in
/// `m = forms[k].len()` new variables).
pub fn substitute_affine<C: Coefficient>(
    f: &HomogPoly<C>,
    forms: &[Vec<Q>],
) -> Result<HomogPoly<C>, GenFunError> {
    if forms.len() != f.n {
        return Err(GenFunError::FormCount { expected: f.n, found: forms.len() });
    }
    let m = forms.first().map(Vec::len).unwrap_or(0);
    if forms.iter().any(|v| v.len() != m) {
        return Err(GenFunError::Parameters(String::from("linear forms of unequal length")));
    }
    let linear: Vec<RatPoly> = forms
        .iter()
        .map(|form| {
            form.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let mut e = alloc::vec![0u32; m];
                    e[i] = 1;
                    (e, c.clone())
                })
                .collect()
        })
        .collect();
    let mut powers: Vec<Vec<RatPoly>> = linear
        .iter()
        .map(|_| alloc::vec![core::iter::once((alloc::vec![0u32; m], Q::one())).collect()])
        .collect();
    let mut out = HomogPoly::new(m, f.degree);
    for (exps, c) in &f.terms {
        let mut acc: RatPoly = core::iter::once((alloc::vec![0u32; m], Q::one())).collect();
        for (k, &e) in exps.iter().enumerate() {
            while powers[k].len() <= e as usize {
                let next = rat_mul(powers[k].last().unwrap(), &linear[k]);
                powers[k].push(next);
            }
            acc = rat_mul(&acc, &powers[k][e as usize]);
        }
        for (e, q) in acc {
            out.add_term(e, c, &q);
        }
    }
    Ok(out)
}

fn matrix_forms(inv: &IntMatrix) -> Vec<Vec<Q>> {
    let n = inv.n();
    (0..n).map(|k| (0..n).map(|i| Q::from_integer(inv.get(i, k).into())).collect()).collect()
}

/// `f|S = Σ a_j f(x · S_j^{-1})` with `x` a row vector.
pub fn act<C: Coefficient>(f: &HomogPoly<C>, s: &GroupRingElem) -> Result<HomogPoly<C>, GenFunError> {
    if s.n() != f.n {
        return Err(GenFunError::DimensionMismatch { poly: f.n, elem: s.n() });
    }
    let mut out = HomogPoly::new(f.n, f.degree);
    for (m, a) in s.terms() {
        let g = substitute_affine(f, &matrix_forms(&m.inverse()))?;
        out.add_scaled(&g, &Q::from_integer(a.into()));
    }
    Ok(out)
}

/// `f|(RS) = (f|R)|S`.
pub fn act_law_check<C: Coefficient>(
    f: &HomogPoly<C>,
    r: &GroupRingElem,
    s: &GroupRingElem,
) -> Result<bool, GenFunError> {
    let rs = r.try_mul(s).map_err(|_| GenFunError::DimensionMismatch { poly: r.n(), elem: s.n() })?;
    Ok(act(f, &rs)? == act(&act(f, r)?, s)?)
}

/// The generating function `Σ ζ^R(l_1,…,l_n) x_1^{l_1−1}⋯x_n^{l_n−1}` over
/// compositions of weight `l` and depth `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun {
    pub l: usize,
    pub n: usize,
    pub flavor: Flavor,
    pub poly: HomogPoly<SymCombo>,
}

pub fn build_genfun(l: usize, n: usize, flavor: Flavor, reg: &mut Regularizer) -> GenFun {
    assert!(l >= n && n >= 1, "need l >= n >= 1");
    let mut poly = HomogPoly::new(n, (l - n) as u32);
    for c in Composition::all(l as u32, n) {
        let z = reg.zeta(&c, flavor);
        poly.add_term(c.parts().iter().map(|p| p - 1).collect(), &z, &Q::one());
    }
    GenFun { l, n, flavor, poly }
}

/// Verdict for one coefficient of an acted-on generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVerdict {
    pub element: String,
    pub exponents: Vec<u32>,
    pub verdict: Verdict,
}

/// Per-coefficient results of a generating-function congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunReport {
    pub check: &'static str,
    pub l: usize,
    pub n: usize,
    pub j: Option<usize>,
    pub flavor: Flavor,
    pub modulus: Modulus,
    pub cases: Vec<CoeffVerdict>,
    /// Whether a smaller modulus (without the relation space) already sufficed.
    pub without_relations: Option<bool>,
}

impl GenFunReport {
    pub fn all_ok(&self) -> bool {
        self.cases.iter().all(|c| c.verdict.is_ok())
    }

    pub fn failures(&self) -> Vec<Vec<u32>> {
        self.cases.iter().filter(|c| !c.verdict.is_ok()).map(|c| c.exponents.clone()).collect()
    }
}

fn certify_coeffs(
    spaces: &mut Spaces,
    l: usize,
    element: &str,
    poly: &HomogPoly<SymCombo>,
    modulus: &Modulus,
    weaker: Option<&Modulus>,
    cases: &mut Vec<CoeffVerdict>,
    weaker_ok: &mut bool,
) -> Result<(), GenFunError> {
    for (e, c) in poly.terms() {
        let verdict = spaces.verdict(l, c, modulus)?;
        if let Some(w) = weaker {
            if *weaker_ok && !spaces.verdict(l, c, w)?.is_ok() {
                *weaker_ok = false;
            }
        }
        cases.push(CoeffVerdict { element: String::from(element), exponents: e.clone(), verdict });
    }
    Ok(())
}

fn check_ln(l: usize, n: usize) -> Result<(), GenFunError> {
    if n < 2 || n > l {
        return Err(GenFunError::Parameters(format!("need 2 <= n <= l, got l = {l}, n = {n}")));
    }
    Ok(())
}

/// Coefficients of `Z|P(e + (−1)^n τ)` and of `Z|P·sh_j` modulo `P_l + R_l`.
pub fn check_lemma31_shuffle(
    l: usize,
    n: usize,
    flavor: Flavor,
    spaces: &mut Spaces,
) -> Result<GenFunReport, GenFunError> {
    check_ln(l, n)?;
    let z = build_genfun(l, n, flavor, spaces.regularizer()).poly;
    let p = named(n, Named::P).unwrap();
    let t = named(n, Named::Tau0).unwrap();
    let e = GroupRingElem::identity(n);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut elements = alloc::vec![(String::from("P(e+(-1)^n tau)"), &p * &(&e + &t.scaled(sign)))];
    for j in 1..n {
        elements.push((format!("P sh_{j}"), &p * &named(n, Named::Shuffle(j)).unwrap()));
    }
    let modulus = Modulus::new().product().relation();
    let weaker = Modulus::new().product();
    let mut cases = Vec::new();
    let mut p_alone = true;
    for (name, s) in &elements {
        let g = act(&z, s)?;
        certify_coeffs(spaces, l, name, &g, &modulus, Some(&weaker), &mut cases, &mut p_alone)?;
    }
    Ok(GenFunReport {
        check: "lemma31.shuffle",
        l,
        n,
        j: None,
        flavor,
        modulus,
        cases,
        without_relations: Some(p_alone),
    })
}

/// Coefficients of `Z|(e − ετPτP^{-1})` and of `Z|sh_1` modulo
/// `Z_l^{n−1} + P_l + R_l`.
pub fn check_lemma31_harmonic(
    l: usize,
    n: usize,
    flavor: Flavor,
    spaces: &mut Spaces,
) -> Result<GenFunReport, GenFunError> {
    check_ln(l, n)?;
    let z = build_genfun(l, n, flavor, spaces.regularizer()).poly;
    let nm = |w| named(n, w).unwrap();
    let (e, eps, t, p, pi) = (nm(Named::Identity), nm(Named::Epsilon), nm(Named::Tau0), nm(Named::P), nm(Named::PInv));
    let crucial = &e - &crate::groupring::product(&[&eps, &t, &p, &t, &pi]);
    let elements = [
        (String::from("e - eps tau P tau P^-1"), crucial),
        (String::from("sh_1"), nm(Named::Shuffle(1))),
    ];
    let modulus = Modulus::new().depth(n - 1).product().relation();
    let weaker = Modulus::new().depth(n - 1).product();
    let mut cases = Vec::new();
    let mut weaker_ok = true;
    for (name, s) in &elements {
        let g = act(&z, s)?;
        certify_coeffs(spaces, l, name, &g, &modulus, Some(&weaker), &mut cases, &mut weaker_ok)?;
    }
    Ok(GenFunReport {
        check: "lemma31.harmonic",
        l,
        n,
        j: None,
        flavor,
        modulus,
        cases,
        without_relations: Some(weaker_ok),
    })
}

/// Harmonic product of two symbol combinations, expanded to symbols.
pub fn harmonic_mul(a: &SymCombo, b: &SymCombo, memo: &mut ProductMemo) -> SymCombo {
    let w = memo.harmonic(&a.to_word_sum(), &b.to_word_sum()).expect("admissible words");
    SymCombo::from_words(a.weight() + b.weight(), &w).expect("admissible product")
}

/// Shuffle product of two symbol combinations, expanded to symbols.
pub fn shuffle_mul(a: &SymCombo, b: &SymCombo, memo: &mut ProductMemo) -> SymCombo {
    let w = memo.shuffle(&a.to_word_sum(), &b.to_word_sum());
    SymCombo::from_words(a.weight() + b.weight(), &w).expect("admissible product")
}

/// `ζ*(l_1)ζ*(l_2,…,l_n)` minus the insertion and merge sums, in the free
/// symbol space; zero exactly when the identity holds.
pub fn insertion_merge_defect(c: &Composition, reg: &mut Regularizer) -> SymCombo {
    let parts = c.parts();
    assert!(parts.len() >= 2, "need depth >= 2");
    let l1 = parts[0];
    let rest = &parts[1..];
    let a = reg.zeta_star(&Composition::new(alloc::vec![l1]).unwrap());
    let b = reg.zeta_star(&Composition::new(rest.to_vec()).unwrap());
    let mut defect = harmonic_mul(&a, &b, reg.memo());
    let n = parts.len();
    for j in 1..=n {
        let mut v = rest[..j - 1].to_vec();
        v.push(l1);
        v.extend_from_slice(&rest[j - 1..]);
        defect.add_scaled(&reg.zeta_star(&Composition::new(v).unwrap()), &-Q::one());
    }
    for j in 2..=n {
        let mut v = rest[..j - 2].to_vec();
        v.push(l1 + rest[j - 2]);
        v.extend_from_slice(&rest[j - 1..]);
        defect.add_scaled(&reg.zeta_star(&Composition::new(v).unwrap()), &-Q::one());
    }
    defect
}

/// `(Z^ш|P)|sh_j` minus the product of the split generating functions,
/// with products of values expanded by the shuffle product. Zero exactly
/// when the factorization holds.
pub fn shuffle_factorization_defect(
    l: usize,
    n: usize,
    j: usize,
    reg: &mut Regularizer,
) -> Result<HomogPoly<SymCombo>, GenFunError> {
    check_ln(l, n)?;
    if j == 0 || j >= n {
        return Err(GenFunError::Parameters(format!("need 1 <= j <= n-1, got j = {j}")));
    }
    let z = build_genfun(l, n, Flavor::Shuffle, reg).poly;
    let lhs = act(&z, &(&named(n, Named::P).unwrap() * &named(n, Named::Shuffle(j)).unwrap()))?;
    let mut rhs = HomogPoly::new(n, (l - n) as u32);
    for a in j..=l - (n - j) {
        let left = act(&build_genfun(a, j, Flavor::Shuffle, reg).poly, &named(j, Named::P).unwrap())?;
        let right = act(&build_genfun(l - a, n - j, Flavor::Shuffle, reg).poly, &named(n - j, Named::P).unwrap())?;
        for (ea, ca) in left.terms() {
            for (eb, cb) in right.terms() {
                let mut e = ea.clone();
                e.extend_from_slice(eb);
                let prod = shuffle_mul(ca, cb, reg.memo());
                rhs.add_term(e, &prod, &Q::one());
            }
        }
    }
    Ok(lhs.sub(&rhs))
}

/// Whether the shuffle factorization holds exactly.
pub fn check_shuffle_factorization(
    l: usize,
    n: usize,
    j: usize,
    reg: &mut Regularizer,
) -> Result<bool, GenFunError> {
    Ok(shuffle_factorization_defect(l, n, j, reg)?.is_zero())
}

/// `c^i(k)` for the cycle `c = (1 2 … n+1)`, 1-based.
pub fn cyclic_power(n: usize, i: usize, k: usize) -> usize {
    (k - 1 + i) % (n + 1) + 1
}

/// `Z(x_1 − x_{n+1}, …) − Z(x_{c^i(1)} − x_{c^i(n+1)}, …)` in `n + 1` variables.
pub fn theorem2_cyclic_difference(
    z: &HomogPoly<SymCombo>,
    i: usize,
) -> Result<HomogPoly<SymCombo>, GenFunError> {
    let n = z.n();
    let m = n + 1;
    let form = |a: usize, b: usize| {
        let mut v = alloc::vec![Q::zero(); m];
        v[a - 1] += Q::one();
        v[b - 1] -= Q::one();
        v
    };
    let plain: Vec<Vec<Q>> = (1..=n).map(|k| form(k, m)).collect();
    let cyc: Vec<Vec<Q>> = (1..=n).map(|k| form(cyclic_power(n, i, k), cyclic_power(n, i, m))).collect();
    Ok(substitute_affine(z, &plain)?.sub(&substitute_affine(z, &cyc)?))
}

/// Coefficients of the cyclic difference modulo `Z_l^{n−1} + P_l + R_l`,
/// for every `i = 1..n`.
pub fn check_theorem2_cyclic(
    l: usize,
    n: usize,
    flavor: Flavor,
    spaces: &mut Spaces,
) -> Result<GenFunReport, GenFunError> {
    check_ln(l, n)?;
    let z = build_genfun(l, n, flavor, spaces.regularizer()).poly;
    let modulus = Modulus::new().depth(n - 1).product().relation();
    let mut cases = Vec::new();
    let mut unused = true;
    for i in 1..=n {
        let d = theorem2_cyclic_difference(&z, i)?;
        certify_coeffs(spaces, l, &format!("c^{i}"), &d, &modulus, None, &mut cases, &mut unused)?;
    }
    Ok(GenFunReport {
        check: "thm2.cyclic",
        l,
        n,
        j: None,
        flavor,
        modulus,
        cases,
        without_relations: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q;
    use crate::groupring::{cycle, permutations};
    use alloc::vec;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }
    fn sc(s: &str) -> SymCombo {
        s.parse().unwrap()
    }
    fn rp(n: usize, deg: u32, terms: &[(&[u32], i64)]) -> HomogPoly<Q> {
        let mut p = HomogPoly::new(n, deg);
        for (e, k) in terms {
            p.add_term(e.to_vec(), &q(*k), &q(1));
        }
        p
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(exponents(2, 2), [vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(exponents(3, 4).len(), 15);
    }

    #[test]
    fn actions() {
        let x1 = rp(3, 1, &[(&[1, 0, 0], 1)]);
        assert_eq!(act(&x1, &GroupRingElem::identity(3)).unwrap(), x1);
        // x_1 | σ = x_{σ^{-1}(1)}
        let sigma = cycle(3, &[1, 2, 3]);
        let g = act(&x1, &GroupRingElem::from_permutation(&sigma).unwrap()).unwrap();
        assert_eq!(g, rp(3, 1, &[(&[0, 0, 1], 1)]));
        let g = act(&x1, &named(3, Named::TauPrimeProj).unwrap()).unwrap();
        assert_eq!(g, rp(3, 1, &[(&[1, 0, 0], -1), (&[0, 1, 0], -1), (&[0, 0, 1], -1)]));
        // the cycle acts by p(−(x_1+…+x_n), x_1, …, x_{n−1})
        let x2 = rp(3, 1, &[(&[0, 1, 0], 1)]);
        assert_eq!(act(&x2, &named(3, Named::CyclicProj).unwrap()).unwrap(), x1);
    }

    #[test]
    fn right_action_law() {
        let f = rp(3, 3, &[(&[2, 1, 0], 3), (&[0, 1, 2], -1), (&[1, 1, 1], 2)]);
        let p = named(3, Named::P).unwrap();
        let t = named(3, Named::Tau0).unwrap();
        assert!(act_law_check(&f, &p, &t).unwrap());
        let e = GroupRingElem::identity(3);
        assert!(act_law_check(&f, &e, &e).unwrap());
        let perms = permutations(4);
        let f4 = rp(4, 2, &[(&[2, 0, 0, 0], 1), (&[0, 1, 0, 1], 5)]);
        let a = GroupRingElem::from_permutation(&perms[7]).unwrap();
        let b = GroupRingElem::from_permutation(&perms[17]).unwrap();
        assert!(act_law_check(&f4, &a, &b).unwrap());
        assert!(act(&f4, &e).is_err());
    }

    #[test]
    fn affine_substitution() {
        let x1 = rp(1, 1, &[(&[1], 1)]);
        let g = substitute_affine(&x1, &[vec![q(1), q(-1)]]).unwrap();
        assert_eq!(g, rp(2, 1, &[(&[1, 0], 1), (&[0, 1], -1)]));
        let f = rp(2, 2, &[(&[1, 1], 1)]);
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(substitute_affine(&f, &id).unwrap(), f);
    }

    #[test]
    fn generating_functions() {
        let mut reg = Regularizer::new();
        assert!(build_genfun(2, 2, Flavor::Shuffle, &mut reg).poly.is_zero());
        let z = build_genfun(3, 2, Flavor::Harmonic, &mut reg).poly;
        assert_eq!(z.coeff(&[1, 0]), Some(&sc("z(2,1)")));
        assert_eq!(z.coeff(&[0, 1]), Some(&sc("-z(2,1) - z(3)")));
        let z = build_genfun(5, 1, Flavor::Harmonic, &mut reg).poly;
        assert_eq!(z.coeff(&[4]), Some(&sc("z(5)")));
        assert_eq!(z.len(), 1);
    }

    #[test]
    fn insertion_merge_instance() {
        let mut reg = Regularizer::new();
        assert!(insertion_merge_defect(&c("2,2"), &mut reg).is_zero());
        assert!(insertion_merge_defect(&c("1,2,1"), &mut reg).is_zero());
    }

    #[test]
    fn factorization_instances() {
        let mut reg = Regularizer::new();
        assert!(check_shuffle_factorization(3, 2, 1, &mut reg).unwrap());
        assert!(check_shuffle_factorization(5, 3, 1, &mut reg).unwrap());
        assert!(check_shuffle_factorization(5, 3, 2, &mut reg).unwrap());
        assert!(check_shuffle_factorization(5, 3, 3, &mut reg).is_err());
    }

    #[test]
    fn lemma_instances() {
        let mut spaces = Spaces::new();
        for (l, n) in [(3, 2), (4, 2), (6, 3)] {
            for flavor in Flavor::BOTH {
                assert!(check_lemma31_shuffle(l, n, flavor, &mut spaces).unwrap().all_ok());
            }
        }
        for (l, n) in [(4, 3), (6, 3)] {
            for flavor in Flavor::BOTH {
                assert!(check_lemma31_harmonic(l, n, flavor, &mut spaces).unwrap().all_ok());
            }
        }
    }

    #[test]
    fn cyclic_specialization_pattern() {
        // at (l, n) = (4, 2), setting x_i = x_{n+1} = 0 pairs (K, 1, L) with (L, 1, K)
        let mut reg = Regularizer::new();
        let z = build_genfun(4, 2, Flavor::Harmonic, &mut reg).poly;
        let d = theorem2_cyclic_difference(&z, 1).unwrap();
        let mut spec = HomogPoly::<SymCombo>::new(1, 2);
        for (e, coeff) in d.terms() {
            if e[0] == 0 && e[2] == 0 {
                spec.add_term(vec![e[1]], coeff, &q(1));
            }
        }
        // coefficient of x_2^2: ζ*(1,3) − ζ*(3,1)
        let mut expected = reg.zeta_star(&c("1,3"));
        expected.add_scaled(&reg.zeta_star(&c("3,1")), &q(-1));
        assert_eq!(spec.coeff(&[2]).cloned().unwrap_or_else(|| SymCombo::zero(4)), expected);
        assert_eq!(cyclic_power(3, 1, 4), 1);
        assert_eq!(cyclic_power(3, 2, 1), 3);
    }
}

//! Truncated nested sums as a floating-point cross-check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;
use twofloat::TwoFloat;

use crate::coeff::Q;
use crate::regularize::SymCombo;
use crate::words::Composition;

pub const DEFAULT_N: u64 = 100_000;
pub const DEFAULT_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("composition {0} is not admissible; the series diverges")]
    Divergent(Composition),
    #[error("truncation bound {n} is smaller than the depth {depth}")]
    TooShort { n: u64, depth: usize },
}

/// `value ± error_bound`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericValue {
    pub value: TwoFloat,
    pub error_bound: f64,
}

impl NumericValue {
    pub fn to_f64(&self) -> f64 {
        self.value.hi() + self.value.lo()
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.to_f64() - x).abs() <= self.error_bound + 1e-15 * x.abs()
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.15} ± {:.3e}", self.to_f64(), self.error_bound)
    }
}

fn inv_power(n: u64, k: u32) -> TwoFloat {
    TwoFloat::from(n as f64).recip().powi(k as i32)
}

/// Bound on `Σ_{m>N} m^{-k} (1 + log m)^j`.
///
/// With `u = 1 + log t`, `I_j = ∫_N^∞ t^{-k} u^j dt` satisfies
/// `I_j = (N^{1-k} u_N^j + j I_{j-1}) / (k - 1)`. The summand is
/// decreasing once `u ≥ j/k`; before that we add its maximum.
fn tail_bound(n: u64, k: u32, j: usize) -> f64 {
    let nf = n as f64;
    let km1 = (k - 1) as f64;
    let u = 1.0 + libm::log(nf);
    let base = libm::pow(nf, 1.0 - k as f64);
    let mut integral = base / km1;
    for i in 1..=j {
        integral = (base * libm::pow(u, i as f64) + i as f64 * integral) / km1;
    }
    let turn = j as f64 / k as f64;
    if u < turn {
        let t = libm::exp(turn - 1.0).max(1.0);
        integral += libm::pow(t, -(k as f64)) * libm::pow(turn.max(1.0), j as f64);
    }
    integral
}

/// Partial sum of `ζ(k_1,…,k_d)` over `N ≥ m_1 > … > m_d ≥ 1`, with a bound
/// on the omitted tail and on rounding.
///
/// The inner sums are tabulated once per suffix, so the cost is
/// `O(N · depth)`. The tail uses `ζ_{m−1}(k_2,…,k_d) ≤ H_m^{d−1} ≤ (1 + log m)^{d−1}`.
pub fn mzv_numeric(c: &Composition, n: u64) -> Result<NumericValue, NumericError> {
    if !c.is_admissible() {
        return Err(NumericError::Divergent(c.clone()));
    }
    let parts = c.parts();
    let d = parts.len();
    if n < d as u64 {
        return Err(NumericError::TooShort { n, depth: d });
    }
    let len = n as usize + 1;
    // inner[m] = Σ_{m ≥ m_i > … > m_d ≥ 1} Π m_j^{-k_j} for the current suffix.
    let mut inner = vec![TwoFloat::from(1.0); len];
    for &k in parts.iter().rev() {
        let mut next = vec![TwoFloat::from(0.0); len];
        for m in 1..len {
            next[m] = next[m - 1] + inv_power(m as u64, k) * inner[m - 1];
        }
        inner = next;
    }
    let value = inner[n as usize];
    let magnitude = value.hi().abs();
    let ops = (n as f64) * (d as f64) * (parts.iter().copied().max().unwrap_or(1) as f64 + 2.0);
    let rounding = magnitude * ops * 1e-31;
    let tail = tail_bound(n, parts[0], d - 1);
    Ok(NumericValue { value, error_bound: tail + rounding })
}

fn q_to_twofloat(q: &Q) -> TwoFloat {
    let num = q.numer().to_f64().unwrap_or(f64::INFINITY);
    let den = q.denom().to_f64().unwrap_or(f64::INFINITY);
    TwoFloat::from(num) / TwoFloat::from(den)
}

/// Caches values keyed by composition and truncation bound.
#[derive(Debug, Clone)]
pub struct NumericEvaluator {
    n: u64,
    cache: BTreeMap<(Composition, u64), NumericValue>,
}

impl Default for NumericEvaluator {
    fn default() -> Self {
        NumericEvaluator::new(DEFAULT_N)
    }
}

impl NumericEvaluator {
    pub fn new(n: u64) -> Self {
        NumericEvaluator { n, cache: BTreeMap::new() }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn set_n(&mut self, n: u64) {
        self.n = n;
    }

    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    pub fn value(&mut self, c: &Composition) -> Result<NumericValue, NumericError> {
        let key = (c.clone(), self.n);
        if let Some(v) = self.cache.get(&key) {
            return Ok(*v);
        }
        let v = mzv_numeric(c, self.n)?;
        self.cache.insert(key, v);
        Ok(v)
    }

    /// Numeric value of a combination, with propagated error bounds.
    pub fn combo(&mut self, v: &SymCombo) -> Result<NumericValue, NumericError> {
        let mut value = TwoFloat::from(0.0);
        let mut error = 0.0;
        for (w, q) in v.terms() {
            let coeff = q_to_twofloat(q);
            if w.is_empty() {
                value += coeff;
                continue;
            }
            let comp = w.to_composition().expect("symbols are admissible words");
            let x = self.value(&comp)?;
            value += coeff * x.value;
            error += coeff.hi().abs() * x.error_bound;
        }
        let rounding = value.hi().abs() * 1e-30 * (v.len() as f64 + 1.0);
        Ok(NumericValue { value, error_bound: error + rounding })
    }

    /// `|Σ coeff · value| ≤ tol + propagated error`.
    pub fn check_relation(&mut self, v: &SymCombo, tol: f64) -> Result<bool, NumericError> {
        let x = self.combo(v)?;
        Ok(x.to_f64().abs() <= tol + x.error_bound)
    }

    /// Values for many compositions; the underlying tabulations are independent.
    pub fn values(&mut self, cs: &[Composition]) -> Result<Vec<NumericValue>, NumericError> {
        cs.iter().map(|c| self.value(c)).collect()
    }
}

/// Checks a relation at the default truncation `N = 10^5`.
pub fn check_relation_numeric(v: &SymCombo, tol: f64) -> bool {
    NumericEvaluator::default().check_relation(v, tol).unwrap_or(false)
}

//! Regularized values of indices with leading ones.
//!
//! Every word ending in `y` is a polynomial in `y` with admissible
//! coefficients, with respect to either product. Sending admissible words to
//! their MZV symbols and `y` to an indeterminate `T` gives the harmonic and
//! shuffle regularizations `Z*(w; T)` and `Z_ш(w; T)`; their constant terms
//! are the regularized values `ζ*(l)` and `ζ_ш(l)`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{self, factorial, Coefficient, Q};
use crate::words::{Composition, Letter, ProductMemo, Word, WordError, WordSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("word {0} is not admissible")]
    NotAdmissible(Word),
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

fn parse_err(what: &'static str, input: &str) -> RegError {
    RegError::Parse { what, input: input.to_string() }
}

/// Which product a regularization is taken with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// `ζ*`: harmonic (stuffle) regularization.
    Harmonic,
    /// `ζ_ш`: shuffle regularization.
    Shuffle,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::Harmonic, Flavor::Shuffle];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Harmonic => "star",
            Flavor::Shuffle => "sh",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The symbol `ζ(l_1, …, l_n)` of an admissible index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MzvSymbol(Word);

impl MzvSymbol {
    pub fn new(c: &Composition) -> Result<Self, RegError> {
        if !c.is_admissible() {
            return Err(WordError::NotAdmissible(c.clone()).into());
        }
        Ok(MzvSymbol(c.to_word()))
    }

    pub fn from_word(w: Word) -> Result<Self, RegError> {
        if w.is_empty() || !w.is_admissible() {
            return Err(RegError::NotAdmissible(w));
        }
        Ok(MzvSymbol(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn composition(&self) -> Composition {
        self.0.to_composition().expect("admissible word")
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.y_degree()
    }
}

impl fmt::Display for MzvSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z({})", self.composition())
    }
}

impl FromStr for MzvSymbol {
    type Err = RegError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix("z(")
            .or_else(|| t.strip_prefix("\u{3b6}("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err("symbol", s))?;
        MzvSymbol::new(&inner.parse()?)
    }
}

/// A `Q`-combination of MZV symbols of one weight. Weight 0 carries the
/// rational constant (stored under the empty word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymCombo {
    weight: usize,
    terms: BTreeMap<Word, Q>,
}

impl SymCombo {
    pub fn zero(weight: usize) -> Self {
        SymCombo { weight, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Q) -> Self {
        let mut s = Self::zero(0);
        s.add_word(Word::empty(), c);
        s
    }

    pub fn symbol(sym: &MzvSymbol) -> Self {
        let mut s = Self::zero(sym.weight());
        s.add_word(sym.0.clone(), Q::one());
        s
    }

    /// `ζ(c)` for an admissible composition.
    pub fn of(c: &Composition) -> Result<Self, RegError> {
        Ok(Self::symbol(&MzvSymbol::new(c)?))
    }

    /// Symbol image of a combination of admissible words of length `weight`.
    pub fn from_words(weight: usize, ws: &WordSum) -> Result<Self, RegError> {
        let mut s = Self::zero(weight);
        for (w, c) in ws.terms() {
            if !w.is_admissible() {
                return Err(RegError::NotAdmissible(w.clone()));
            }
            if w.len() != weight {
                return Err(RegError::WeightMismatch { expected: weight, found: w.len() });
            }
            s.add_word(w.clone(), c.clone());
        }
        Ok(s)
    }

    fn add_word(&mut self, w: Word, c: Q) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if Zero::is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    pub fn add_symbol(&mut self, sym: &MzvSymbol, c: Q) -> Result<(), RegError> {
        if sym.weight() != self.weight {
            return Err(RegError::WeightMismatch { expected: self.weight, found: sym.weight() });
        }
        self.add_word(sym.0.clone(), c);
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by admissible word (the empty word for the weight-0 scalar).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff_of(&self, c: &Composition) -> Q {
        self.coeff(&c.to_word())
    }

    /// The scalar value of a weight-0 combination.
    pub fn scalar_value(&self) -> Option<Q> {
        (self.weight == 0).then(|| self.coeff(&Word::empty()))
    }

    /// The words as a `WordSum`.
    pub fn to_word_sum(&self) -> WordSum {
        let mut s = WordSum::zero();
        for (w, c) in &self.terms {
            s.add_term(w.clone(), c.clone());
        }
        s
    }

    /// Parses `a·z(...) + b·z(...)`; `"0"` is accepted when `weight` is given.
    pub fn parse_with_weight(s: &str, weight: Option<usize>) -> Result<Self, RegError> {
        if s.trim() == "0" {
            return Ok(SymCombo::zero(weight.unwrap_or(0)));
        }
        let terms = coeff::split_terms(s).ok_or_else(|| parse_err("symbol combination", s))?;
        let mut out: Option<SymCombo> = weight.map(SymCombo::zero);
        for (c, body) in terms {
            let (w, word) = if body.is_empty() {
                (0, Word::empty())
            } else {
                let sym: MzvSymbol = body.parse()?;
                (sym.weight(), sym.0)
            };
            let acc = out.get_or_insert_with(|| SymCombo::zero(w));
            if acc.weight != w {
                return Err(RegError::WeightMismatch { expected: acc.weight, found: w });
            }
            acc.add_word(word, c);
        }
        out.ok_or_else(|| parse_err("symbol combination", s))
    }
}

impl Coefficient for SymCombo {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn scale(&mut self, factor: &Q) {
        if Zero::is_zero(factor) {
            self.terms.clear();
        } else {
            for c in self.terms.values_mut() {
                *c *= factor;
            }
        }
    }

    fn add_scaled(&mut self, other: &Self, factor: &Q) {
        debug_assert!(other.is_zero() || other.weight == self.weight, "weight mismatch");
        if self.terms.is_empty() {
            self.weight = other.weight;
        }
        for (w, c) in &other.terms {
            self.add_word(w.clone(), c * factor);
        }
    }
}

impl core::ops::Add<&SymCombo> for &SymCombo {
    type Output = SymCombo;
    fn add(self, rhs: &SymCombo) -> SymCombo {
        let mut s = self.clone();
        s.add_scaled(rhs, &Q::one());
        s
    }
}

impl core::ops::Sub<&SymCombo> for &SymCombo {
    type Output = SymCombo;
    fn sub(self, rhs: &SymCombo) -> SymCombo {
        let mut s = self.clone();
        s.add_scaled(rhs, &-Q::one());
        s
    }
}

impl core::ops::Neg for SymCombo {
    type Output = SymCombo;
    fn neg(mut self) -> SymCombo {
        self.scale(&-Q::one());
        self
    }
}

impl fmt::Display for SymCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let body = if w.is_empty() {
                String::new()
            } else {
                MzvSymbol(w.clone()).to_string()
            };
            coeff::write_term(f, c, &body, i == 0)?;
        }
        Ok(())
    }
}

impl FromStr for SymCombo {
    type Err = RegError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SymCombo::parse_with_weight(s, None)
    }
}

/// A commutative product of MZV symbols, stored as a sorted list of
/// admissible words. The empty product is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<Word>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut factors: Vec<MzvSymbol>) -> Self {
        factors.sort();
        Monomial(factors.into_iter().map(|s| s.0).collect())
    }

    pub fn factors(&self) -> &[Word] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort();
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\u{b7}")?;
            }
            write!(f, "{}", MzvSymbol(w.clone()))?;
        }
        Ok(())
    }
}

/// A `Q`-combination of products of MZV symbols, homogeneous in total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCombo {
    weight: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl ProductCombo {
    pub fn zero(weight: usize) -> Self {
        ProductCombo { weight, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut p = Self::zero(m.weight());
        p.add_term(m, c);
        p
    }

    /// `ζ(c)` as a one-factor product.
    pub fn single(c: &Composition) -> Result<Self, RegError> {
        Ok(Self::monomial(Monomial::new(alloc::vec![MzvSymbol::new(c)?]), Q::one()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if Zero::is_zero(&c) {
            return;
        }
        debug_assert_eq!(m.weight(), self.weight);
        let zeroed = {
            let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
            *e += c;
            Zero::is_zero(e)
        };
        if zeroed {
            self.terms.remove(&m);
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn mul(&self, other: &ProductCombo) -> ProductCombo {
        let mut out = ProductCombo::zero(self.weight + other.weight);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl From<&SymCombo> for ProductCombo {
    fn from(s: &SymCombo) -> Self {
        let mut p = ProductCombo::zero(s.weight);
        for (w, c) in &s.terms {
            let m = if w.is_empty() { Monomial::one() } else { Monomial(alloc::vec![w.clone()]) };
            p.add_term(m, c.clone());
        }
        p
    }
}

impl Coefficient for ProductCombo {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn scale(&mut self, factor: &Q) {
        if Zero::is_zero(factor) {
            self.terms.clear();
        } else {
            for c in self.terms.values_mut() {
                *c *= factor;
            }
        }
    }

    fn add_scaled(&mut self, other: &Self, factor: &Q) {
        if self.terms.is_empty() {
            self.weight = other.weight;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }
}

impl fmt::Display for ProductCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.0.is_empty() { String::new() } else { m.to_string() };
            coeff::write_term(f, c, &body, i == 0)?;
        }
        Ok(())
    }
}

/// A regularized word: `w = Σ_k by_power[k] ⋄ y^{⋄k}` where `⋄` is the
/// flavor's product and every `by_power[k]` is a combination of admissible
/// words of length `weight − k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegExpansion {
    pub flavor: Flavor,
    pub weight: usize,
    pub by_power: BTreeMap<u32, WordSum>,
}

impl RegExpansion {
    fn admissible(flavor: Flavor, w: &Word) -> Self {
        let mut by_power = BTreeMap::new();
        by_power.insert(0, WordSum::from_word(w.clone()));
        RegExpansion { flavor, weight: w.len(), by_power }
    }

    pub fn degree(&self) -> u32 {
        self.by_power.keys().next_back().copied().unwrap_or(0)
    }

    fn shift(&self) -> Self {
        RegExpansion {
            flavor: self.flavor,
            weight: self.weight + 1,
            by_power: self.by_power.iter().map(|(k, v)| (k + 1, v.clone())).collect(),
        }
    }

    fn add_scaled(&mut self, other: &RegExpansion, factor: &Q) {
        for (k, v) in &other.by_power {
            let e = self.by_power.entry(*k).or_default();
            e.add_scaled(v, factor);
        }
        self.by_power.retain(|_, v| !v.is_zero());
    }

    /// Multiplies the expansion back out under the flavor's product.
    pub fn reconstitute(&self, memo: &mut ProductMemo) -> Result<WordSum, RegError> {
        let y = WordSum::from_word(Word::z(1));
        let mut out = WordSum::zero();
        let mut power = WordSum::one();
        let mut k = 0u32;
        for (&p, coeff) in &self.by_power {
            while k < p {
                power = match self.flavor {
                    Flavor::Harmonic => memo.harmonic(&power, &y)?,
                    Flavor::Shuffle => memo.shuffle(&power, &y),
                };
                k += 1;
            }
            let term = match self.flavor {
                Flavor::Harmonic => memo.harmonic(coeff, &power)?,
                Flavor::Shuffle => memo.shuffle(coeff, &power),
            };
            out.add_scaled(&term, &Q::one());
        }
        Ok(out)
    }
}

/// A polynomial in `T` whose coefficient of `T^k` has weight `weight − k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly<C> {
    pub weight: usize,
    coeffs: BTreeMap<u32, C>,
}

impl<C: Coefficient> TPoly<C> {
    pub fn new(weight: usize) -> Self {
        TPoly { weight, coeffs: BTreeMap::new() }
    }

    pub fn set(&mut self, power: u32, c: C) {
        if c.vanishes() {
            self.coeffs.remove(&power);
        } else {
            self.coeffs.insert(power, c);
        }
    }

    pub fn add_to(&mut self, power: u32, c: &C, factor: &Q) {
        match self.coeffs.get_mut(&power) {
            Some(e) => {
                e.add_scaled(c, factor);
                if e.vanishes() {
                    self.coeffs.remove(&power);
                }
            }
            None => self.set(power, c.scaled(factor)),
        }
    }

    pub fn coeff(&self, power: u32) -> Option<&C> {
        self.coeffs.get(&power)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for TPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let text = c.to_string();
            let simple = !text.chars().skip(1).any(|ch| ch == ' ');
            let (neg, body) = match text.strip_prefix('\u{2212}') {
                Some(rest) if simple => (true, rest),
                _ => (false, text.as_str()),
            };
            match (i, neg) {
                (0, true) => f.write_str("\u{2212}")?,
                (0, false) => {}
                (_, true) => f.write_str(" \u{2212} ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (*k, simple) {
                (0, _) => f.write_str(body)?,
                (_, true) if body == "1" => {}
                (_, true) => write!(f, "{body}\u{b7}")?,
                (_, false) => write!(f, "({body})\u{b7}")?,
            }
            match *k {
                0 => {}
                1 => f.write_str("T")?,
                _ => write!(f, "T^{k}")?,
            }
        }
        Ok(())
    }
}

/// Maps each power's admissible words to symbols.
pub fn evaluate_reg(e: &RegExpansion) -> Result<TPoly<SymCombo>, RegError> {
    let mut p = TPoly::new(e.weight);
    for (&k, ws) in &e.by_power {
        p.set(k, SymCombo::from_words(e.weight - k as usize, ws)?);
    }
    Ok(p)
}

/// Holds a product memo and caches regularizations per word.
#[derive(Debug, Clone, Default)]
pub struct Regularizer {
    memo: ProductMemo,
    harmonic: BTreeMap<Word, RegExpansion>,
    shuffle: BTreeMap<Word, RegExpansion>,
}

impl Regularizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo(&mut self) -> &mut ProductMemo {
        &mut self.memo
    }

    /// Peels leading `y`s: with `w = y^m u`, the product `y ⋄ y^{m-1}u`
    /// equals `m·w` plus words having fewer leading `y`s.
    pub fn regularize(&mut self, w: &Word, flavor: Flavor) -> Result<RegExpansion, RegError> {
        if !w.is_in_h1() {
            return Err(WordError::NotInH1(w.clone()).into());
        }
        let m = w.leading_y();
        if m == 0 {
            return Ok(RegExpansion::admissible(flavor, w));
        }
        let cache = match flavor {
            Flavor::Harmonic => &self.harmonic,
            Flavor::Shuffle => &self.shuffle,
        };
        if let Some(e) = cache.get(w) {
            return Ok(e.clone());
        }
        let tail = Word::from_letters(w.letters()[1..].to_vec());
        let y = Word::z(1);
        let product = match flavor {
            Flavor::Harmonic => self.memo.harmonic_words(&y, &tail)?,
            Flavor::Shuffle => self.memo.shuffle_words(&y, &tail),
        };
        let mult = Q::from_integer((m as i64).into());
        debug_assert_eq!(product.coeff(w), mult);
        let mut rest = product;
        rest.add_term(w.clone(), -mult.clone());

        let mut out = self.regularize(&tail, flavor)?.shift();
        for (t, c) in rest.terms() {
            debug_assert!(t.leading_y() < m);
            let sub = self.regularize(t, flavor)?;
            out.add_scaled(&sub, &-c);
        }
        let inv = Q::one() / mult;
        for v in out.by_power.values_mut() {
            v.scale(&inv);
        }
        out.weight = w.len();
        match flavor {
            Flavor::Harmonic => self.harmonic.insert(w.clone(), out.clone()),
            Flavor::Shuffle => self.shuffle.insert(w.clone(), out.clone()),
        };
        Ok(out)
    }

    pub fn reg_harmonic(&mut self, w: &Word) -> Result<RegExpansion, RegError> {
        self.regularize(w, Flavor::Harmonic)
    }

    pub fn reg_shuffle(&mut self, w: &Word) -> Result<RegExpansion, RegError> {
        self.regularize(w, Flavor::Shuffle)
    }

    /// `Z*(c; T)` or `Z_ш(c; T)`.
    pub fn t_poly(&mut self, c: &Composition, flavor: Flavor) -> TPoly<SymCombo> {
        let e = self.regularize(&c.to_word(), flavor).expect("composition word ends in y");
        evaluate_reg(&e).expect("regularized coefficients are admissible")
    }

    /// Regularized value at `T = 0` of an arbitrary word ending in `y`.
    pub fn zeta_of_word(&mut self, w: &Word, flavor: Flavor) -> Result<SymCombo, RegError> {
        let e = self.regularize(w, flavor)?;
        match e.by_power.get(&0) {
            Some(ws) => SymCombo::from_words(w.len(), ws),
            None => Ok(SymCombo::zero(w.len())),
        }
    }

    /// Regularized value of a homogeneous combination of words ending in `y`.
    pub fn zeta_of_sum(
        &mut self,
        weight: usize,
        ws: &WordSum,
        flavor: Flavor,
    ) -> Result<SymCombo, RegError> {
        let mut out = SymCombo::zero(weight);
        for (w, c) in ws.terms() {
            if w.len() != weight {
                return Err(RegError::WeightMismatch { expected: weight, found: w.len() });
            }
            out.add_scaled(&self.zeta_of_word(w, flavor)?, c);
        }
        Ok(out)
    }

    pub fn zeta(&mut self, c: &Composition, flavor: Flavor) -> SymCombo {
        self.zeta_of_word(&c.to_word(), flavor).expect("composition word ends in y")
    }

    pub fn zeta_star(&mut self, c: &Composition) -> SymCombo {
        self.zeta(c, Flavor::Harmonic)
    }

    pub fn zeta_sh(&mut self, c: &Composition) -> SymCombo {
        self.zeta(c, Flavor::Shuffle)
    }

    /// `ζ_ш(y^m x w') = (−1)^m Z(x (y^m ш w'))`; zero for pure `y` powers.
    pub fn shuffle_reg_closed_form(&mut self, c: &Composition) -> SymCombo {
        let w = c.to_word();
        let m = w.leading_y();
        let weight = w.len();
        if m == weight {
            return SymCombo::zero(weight);
        }
        let rest = Word::from_letters(w.letters()[m + 1..].to_vec());
        let sh = self.memo.shuffle_words(&Word::y_power(m), &rest);
        let words = sh.prefixed(&Word::from_letters(alloc::vec![Letter::X]));
        let mut out = SymCombo::from_words(weight, &words).expect("x-prefixed words ending in y");
        if m % 2 == 1 {
            out.scale(&-Q::one());
        }
        out
    }
}

/// Harmonic regularization with a throwaway cache.
pub fn reg_harmonic(w: &Word) -> Result<RegExpansion, RegError> {
    Regularizer::new().reg_harmonic(w)
}

/// Shuffle regularization with a throwaway cache.
pub fn reg_shuffle(w: &Word) -> Result<RegExpansion, RegError> {
    Regularizer::new().reg_shuffle(w)
}

/// `γ_0, …, γ_{i_max}`, the coefficients of
/// `exp(Σ_{m≥2} (−1)^m ζ(m) u^m / m)`, as polynomials in single zetas.
///
/// Uses `i·γ_i = Σ_{m=2}^{i} (−1)^m ζ(m) γ_{i−m}`, which follows from
/// differentiating the exponential.
pub fn gamma_coeffs(i_max: usize) -> Vec<ProductCombo> {
    let mut gammas: Vec<ProductCombo> = alloc::vec![ProductCombo::one()];
    for i in 1..=i_max {
        let mut g = ProductCombo::zero(i);
        for m in 2..=i {
            let zm = ProductCombo::single(&Composition::new(alloc::vec![m as u32]).unwrap())
                .expect("single zeta");
            let sign = if m % 2 == 0 { Q::one() } else { -Q::one() };
            g.add_scaled(&zm.mul(&gammas[i - m]), &sign);
        }
        g.scale(&(Q::one() / Q::from_integer((i as i64).into())));
        gammas.push(g);
    }
    gammas
}

/// The correction map `ρ`, defined by `ρ(T^j)/j! = Σ_i γ_i T^{j−i}/(j−i)!`.
pub fn rho_apply(p: &TPoly<SymCombo>) -> TPoly<ProductCombo> {
    let deg = p.degree().unwrap_or(0) as usize;
    let gammas = gamma_coeffs(deg);
    let mut out = TPoly::new(p.weight);
    for (j, c) in p.coeffs() {
        let cp = ProductCombo::from(c);
        for k in 0..=j {
            let g = &gammas[(j - k) as usize];
            if g.is_zero() {
                continue;
            }
            let factor = factorial(j) / factorial(k);
            out.add_to(k, &cp.mul(g), &factor);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{q, qf};

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn sc(s: &str) -> SymCombo {
        s.parse().unwrap()
    }
    fn ws(s: &str) -> WordSum {
        s.parse().unwrap()
    }

    #[test]
    fn harmonic_regularization_examples() {
        let e = reg_harmonic(&w("xyy")).unwrap();
        assert_eq!(e.by_power.len(), 1);
        assert_eq!(e.by_power[&0], ws("xyy"));

        let e = reg_harmonic(&w("y")).unwrap();
        assert_eq!(e.by_power.len(), 1);
        assert_eq!(e.by_power[&1], WordSum::one());

        let e = reg_harmonic(&w("yy")).unwrap();
        assert_eq!(e.by_power[&2], WordSum::monomial(Word::empty(), qf(1, 2)));
        assert_eq!(e.by_power[&0], ws("-1/2xy"));
        assert_eq!(e.by_power.len(), 2);
    }

    #[test]
    fn shuffle_regularization_examples() {
        let e = reg_shuffle(&w("yy")).unwrap();
        assert_eq!(e.by_power.len(), 1);
        assert_eq!(e.by_power[&2], WordSum::monomial(Word::empty(), qf(1, 2)));

        let e = reg_shuffle(&w("yxy")).unwrap();
        assert_eq!(e.by_power[&1], ws("xy"));
        assert_eq!(e.by_power[&0], ws("-2xyy"));

        let e = reg_shuffle(&w("xyy")).unwrap();
        assert_eq!(e.by_power.len(), 1);
        assert_eq!(e.by_power[&0], ws("xyy"));
        assert!(reg_shuffle(&w("yx")).is_err());
    }

    #[test]
    fn t_polynomials() {
        let mut r = Regularizer::new();
        let p = r.t_poly(&c("1,1"), Flavor::Harmonic);
        assert_eq!(p.coeff(2), Some(&SymCombo::scalar(qf(1, 2))));
        assert_eq!(p.coeff(0), Some(&sc("-1/2\u{b7}z(2)")));
        assert_eq!(p.coeff(1), None);
        assert_eq!(p.to_string(), "1/2\u{b7}T^2 \u{2212} 1/2\u{b7}z(2)");

        let p = r.t_poly(&c("1,1"), Flavor::Shuffle);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(2), Some(&SymCombo::scalar(qf(1, 2))));
        assert_eq!(p.coeff(0), None);

        let p = r.t_poly(&c("1"), Flavor::Harmonic);
        assert_eq!(p.to_string(), "T");
    }

    #[test]
    fn regularized_values() {
        let mut r = Regularizer::new();
        assert_eq!(r.zeta_star(&c("1,1")), sc("-1/2\u{b7}z(2)"));
        assert!(r.zeta_sh(&c("1")).is_zero());
        assert!(r.zeta_star(&c("1")).is_zero());
        assert!(r.zeta_sh(&c("1,1")).is_zero());
        assert_eq!(r.zeta_star(&c("2,1")), sc("z(2,1)"));
        assert_eq!(r.zeta_sh(&c("2,1")), sc("z(2,1)"));
        // ζ*(1,2) = −ζ(2,1) − ζ(3): y * xy = yxy + xyy + xxy
        assert_eq!(r.zeta_star(&c("1,2")), sc("-z(2,1) - z(3)"));
    }

    #[test]
    fn closed_form_examples() {
        let mut r = Regularizer::new();
        assert_eq!(r.shuffle_reg_closed_form(&c("2,1")), sc("z(2,1)"));
        assert_eq!(r.shuffle_reg_closed_form(&c("1,2")), sc("-2\u{b7}z(2,1)"));
        let cf = r.shuffle_reg_closed_form(&c("1,1,2"));
        assert_eq!(cf, r.zeta_sh(&c("1,1,2")));
        assert!(r.shuffle_reg_closed_form(&c("1,1,1")).is_zero());
    }

    #[test]
    fn gammas_match_listed_values() {
        let g = gamma_coeffs(4);
        let z = |s: &str| ProductCombo::single(&c(s)).unwrap();
        assert_eq!(g[0], ProductCombo::one());
        assert!(g[1].is_zero());
        assert_eq!(g[2], z("2").scaled(&qf(1, 2)));
        assert_eq!(g[3], z("3").scaled(&qf(-1, 3)));
        let mut g4 = z("4").scaled(&q(2));
        g4.add_scaled(&z("2").mul(&z("2")), &q(1));
        g4.scale(&qf(1, 8));
        assert_eq!(g[4], g4);
    }

    #[test]
    fn gammas_agree_with_truncated_exponential() {
        // exp(A) = Σ_k A^k / k! with A = Σ_{m≥2} (−1)^m ζ(m) u^m / m, truncated at u^8.
        let top = 8usize;
        let mut a: Vec<ProductCombo> = (0..=top).map(ProductCombo::zero).collect();
        for m in 2..=top {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            a[m] = ProductCombo::single(&Composition::new(alloc::vec![m as u32]).unwrap())
                .unwrap()
                .scaled(&qf(sign, m as i64));
        }
        let mul = |x: &Vec<ProductCombo>, y: &Vec<ProductCombo>| {
            let mut out: Vec<ProductCombo> = (0..=top).map(ProductCombo::zero).collect();
            for i in 0..=top {
                for j in 0..=top - i {
                    out[i + j].add_scaled(&x[i].mul(&y[j]), &q(1));
                }
            }
            out
        };
        let mut sum: Vec<ProductCombo> = (0..=top).map(ProductCombo::zero).collect();
        sum[0] = ProductCombo::one();
        let mut power = sum.clone();
        for k in 1..=top {
            power = mul(&power, &a);
            for i in 0..=top {
                sum[i].add_scaled(&power[i], &(q(1) / factorial(k as u32)));
            }
        }
        assert_eq!(gamma_coeffs(top), sum);
    }

    #[test]
    fn rho_examples() {
        let mut one = TPoly::new(0);
        one.set(0, SymCombo::scalar(q(1)));
        let r = rho_apply(&one);
        assert_eq!(r.coeff(0), Some(&ProductCombo::one()));
        assert_eq!(r.degree(), Some(0));

        let mut t = TPoly::new(1);
        t.set(1, SymCombo::scalar(q(1)));
        let r = rho_apply(&t);
        assert_eq!(r.degree(), Some(1));
        assert!(r.coeff(0).is_none());

        let mut t2 = TPoly::new(2);
        t2.set(2, SymCombo::scalar(q(1)));
        let r = rho_apply(&t2);
        assert_eq!(r.coeff(2), Some(&ProductCombo::one()));
        assert_eq!(r.coeff(0), Some(&ProductCombo::single(&c("2")).unwrap()));

        // ρ(Z*(1,1;T)) = Z_ш(1,1;T) exactly
        let mut reg = Regularizer::new();
        let r = rho_apply(&reg.t_poly(&c("1,1"), Flavor::Harmonic));
        assert_eq!(r.coeff(2), Some(&ProductCombo::one().scaled(&qf(1, 2))));
        assert!(r.coeff(0).is_none());
        assert!(r.coeff(1).is_none());
    }

    #[test]
    fn symbol_text() {
        let s = sc("2\u{b7}z(2,1) - z(3)");
        assert_eq!(s.weight(), 3);
        assert_eq!(s.to_string(), "\u{2212}z(3) + 2\u{b7}z(2,1)");
        assert_eq!(s.to_string().parse::<SymCombo>().unwrap(), s);
        assert!("z(1,2)".parse::<SymCombo>().is_err());
        assert!("z(2) + z(3)".parse::<SymCombo>().is_err());
        assert_eq!(SymCombo::parse_with_weight("0", Some(4)).unwrap(), SymCombo::zero(4));
        assert_eq!("\u{3b6}(3,1)".parse::<MzvSymbol>().unwrap().depth(), 2);
    }
}

//! Words over `{x, y}`, index compositions, rational linear combinations of
//! words and the two products on them.
//!
//! A word ending in `y` factors uniquely as `z_{l_1} … z_{l_n}` with
//! `z_l = x^{l-1} y`; the composition `(l_1, …, l_n)` is its index. The
//! harmonic product is defined on such words through the `z` letters, the
//! shuffle product on arbitrary words through the letters `x`, `y`. The empty
//! word is the unit of both.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{self, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word {0} does not end in y")]
    NotInH1(Word),
    #[error("the empty word has no index")]
    EmptyWord,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error("composition ({0}) is not admissible")]
    NotAdmissible(Composition),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

fn parse_err(what: &'static str, input: &str) -> WordError {
    WordError::Parse { what, input: input.to_string() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over `{x, y}`. Ordered graded-lexicographically (length first, then
/// letters with `x < y`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `z_l = x^{l-1} y`.
    pub fn z(l: u32) -> Self {
        assert!(l >= 1, "z_l needs l >= 1");
        let mut v = Vec::with_capacity(l as usize);
        v.extend(core::iter::repeat_n(Letter::X, l as usize - 1));
        v.push(Letter::Y);
        Word(v)
    }

    /// `y^m`.
    pub fn y_power(m: usize) -> Self {
        Word(alloc::vec![Letter::Y; m])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the word, i.e. the weight.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Number of `y` letters, i.e. the depth.
    pub fn y_degree(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }

    /// Empty or ending in `y`.
    pub fn is_in_h1(&self) -> bool {
        self.0.last().is_none_or(|&l| l == Letter::Y)
    }

    /// Empty, or starting with `x` and ending in `y`.
    pub fn is_admissible(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (None, _) => true,
            (Some(&f), Some(&l)) => f == Letter::X && l == Letter::Y,
            _ => unreachable!(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Number of leading `y` letters.
    pub fn leading_y(&self) -> usize {
        self.0.iter().take_while(|&&l| l == Letter::Y).count()
    }

    /// Reverse the word and swap `x` with `y` (the duality anti-automorphism).
    pub fn dual(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swapped()).collect())
    }

    pub fn to_composition(&self) -> Result<Composition, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        if !self.is_in_h1() {
            return Err(WordError::NotInH1(self.clone()));
        }
        Ok(Composition(word_to_parts(self)))
    }

    /// All words of length `len` ending in `y`, in canonical order.
    pub fn all_in_h1(len: usize) -> Vec<Word> {
        if len == 0 {
            return alloc::vec![Word::empty()];
        }
        words_with_ends(len, None)
    }

    /// All admissible words of length `len` (`len >= 2`), in canonical order.
    pub fn all_admissible(len: usize) -> Vec<Word> {
        match len {
            0 => alloc::vec![Word::empty()],
            1 => Vec::new(),
            _ => words_with_ends(len, Some(Letter::X)),
        }
    }
}

fn words_with_ends(len: usize, first: Option<Letter>) -> Vec<Word> {
    let free = len - 1 - usize::from(first.is_some());
    (0u64..(1u64 << free))
        .map(|bits| {
            let mut v = Vec::with_capacity(len);
            if let Some(f) = first {
                v.push(f);
            }
            for i in (0..free).rev() {
                v.push(if (bits >> i) & 1 == 1 { Letter::Y } else { Letter::X });
            }
            v.push(Letter::Y);
            Word(v)
        })
        .collect()
}

fn word_to_parts(w: &Word) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut run = 0u32;
    for &l in &w.0 {
        run += 1;
        if l == Letter::Y {
            parts.push(run);
            run = 0;
        }
    }
    parts
}

fn parts_to_word(parts: &[u32]) -> Word {
    let mut v = Vec::with_capacity(parts.iter().map(|&p| p as usize).sum());
    for &p in parts {
        v.extend(core::iter::repeat_n(Letter::X, p as usize - 1));
        v.push(Letter::Y);
    }
    Word(v)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(parse_err("word", s)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// An index `(l_1, …, l_n)` of positive integers, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, WordError> {
        if parts.is_empty() {
            return Err(WordError::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(WordError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// `l_1 >= 2`.
    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    pub fn to_word(&self) -> Word {
        parts_to_word(&self.0)
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Dual index: for `(a_1+1, 1^{b_1-1}, …, a_h+1, 1^{b_h-1})` returns
    /// `(b_h+1, 1^{a_h-1}, …, b_1+1, 1^{a_1-1})`.
    pub fn dual(&self) -> Result<Composition, WordError> {
        if !self.is_admissible() {
            return Err(WordError::NotAdmissible(self.clone()));
        }
        // blocks (a_i, b_i)
        let mut blocks: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            if p >= 2 {
                blocks.push((p - 1, 1));
            } else {
                blocks.last_mut().expect("admissible").1 += 1;
            }
        }
        let mut out = Vec::with_capacity(self.weight() as usize - self.depth());
        for &(a, b) in blocks.iter().rev() {
            out.push(b + 1);
            out.extend(core::iter::repeat_n(1, a as usize - 1));
        }
        Ok(Composition(out))
    }

    /// All compositions of `weight` with `depth` parts, in canonical word order.
    pub fn all(weight: u32, depth: usize) -> Vec<Composition> {
        Word::all_in_h1(weight as usize)
            .into_iter()
            .filter(|w| !w.is_empty() && w.y_degree() == depth)
            .map(|w| Composition(word_to_parts(&w)))
            .collect()
    }

    /// All compositions of `weight` (any depth), in canonical word order.
    pub fn all_of_weight(weight: u32) -> Vec<Composition> {
        if weight == 0 {
            return Vec::new();
        }
        Word::all_in_h1(weight as usize)
            .into_iter()
            .map(|w| Composition(word_to_parts(&w)))
            .collect()
    }

    /// All admissible compositions of `weight`, in canonical word order.
    pub fn admissible_of_weight(weight: u32) -> Vec<Composition> {
        if weight < 2 {
            return Vec::new();
        }
        Word::all_admissible(weight as usize)
            .into_iter()
            .map(|w| Composition(word_to_parts(&w)))
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| parse_err("composition", s)))
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

/// A finite `Q`-linear combination of words. Zero coefficients are never
/// stored; terms iterate in canonical word order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Word, Q>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, Q::one())
    }

    pub fn monomial(w: Word, c: Q) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WordSum, factor: &Q) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn scale(&mut self, factor: &Q) {
        if factor.is_zero() {
            self.terms.clear();
        } else {
            for c in self.terms.values_mut() {
                *c *= factor;
            }
        }
    }

    pub fn scaled(&self, factor: &Q) -> WordSum {
        let mut s = self.clone();
        s.scale(factor);
        s
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

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    /// The common length of all words, if the sum is nonzero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }

    pub fn all_in_h1(&self) -> bool {
        self.terms.keys().all(Word::is_in_h1)
    }

    pub fn all_admissible(&self) -> bool {
        self.terms.keys().all(Word::is_admissible)
    }

    /// Left-multiplies every word by `prefix` (concatenation).
    pub fn prefixed(&self, prefix: &Word) -> WordSum {
        WordSum {
            terms: self.terms.iter().map(|(w, c)| (prefix.concat(w), c.clone())).collect(),
        }
    }
}

impl core::ops::Add<&WordSum> for &WordSum {
    type Output = WordSum;
    fn add(self, rhs: &WordSum) -> WordSum {
        let mut s = self.clone();
        s.add_scaled(rhs, &Q::one());
        s
    }
}

impl core::ops::Sub<&WordSum> for &WordSum {
    type Output = WordSum;
    fn sub(self, rhs: &WordSum) -> WordSum {
        let mut s = self.clone();
        s.add_scaled(rhs, &-Q::one());
        s
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let body = if w.is_empty() { String::new() } else { w.to_string() };
            coeff::write_term(f, c, &body, i == 0)?;
        }
        Ok(())
    }
}

impl FromStr for WordSum {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "0" {
            return Ok(WordSum::zero());
        }
        let terms = coeff::split_terms(s).ok_or_else(|| parse_err("word sum", s))?;
        let mut out = WordSum::zero();
        for (c, body) in terms {
            out.add_term(body.parse()?, c);
        }
        Ok(out)
    }
}

type IntTerms<K> = BTreeMap<K, u64>;

fn add_prefixed<K: Ord + Clone>(
    out: &mut IntTerms<K>,
    src: &IntTerms<K>,
    prefix: impl Fn(&K) -> K,
) {
    for (k, c) in src {
        *out.entry(prefix(k)).or_insert(0) += c;
    }
}

/// Default weight cap for memoized word-pair products.
pub const DEFAULT_MEMO_CAP: usize = 12;

/// Memo tables for the word-level products. Entries are keyed by the
/// (unordered) pair of factors and only stored when the total weight is at
/// most the cap. Filling the table is idempotent, so one memo may be reused
/// across any number of calls.
#[derive(Debug, Clone)]
pub struct ProductMemo {
    cap: usize,
    harmonic: BTreeMap<(Vec<u32>, Vec<u32>), IntTerms<Vec<u32>>>,
    shuffle: BTreeMap<(Word, Word), IntTerms<Word>>,
}

impl Default for ProductMemo {
    fn default() -> Self {
        Self::with_cap(DEFAULT_MEMO_CAP)
    }
}

impl ProductMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        ProductMemo { cap, harmonic: BTreeMap::new(), shuffle: BTreeMap::new() }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn memo_len(&self) -> usize {
        self.harmonic.len() + self.shuffle.len()
    }

    fn harmonic_parts(&mut self, a: &[u32], b: &[u32]) -> IntTerms<Vec<u32>> {
        if a.is_empty() || b.is_empty() {
            let mut m = BTreeMap::new();
            m.insert(if a.is_empty() { b.to_vec() } else { a.to_vec() }, 1);
            return m;
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let weight: u32 = a.iter().chain(b).sum();
        let memoize = weight as usize <= self.cap;
        if memoize {
            if let Some(r) = self.harmonic.get(&(a.to_vec(), b.to_vec())) {
                return r.clone();
            }
        }
        let (k, l) = (a[0], b[0]);
        let mut out = BTreeMap::new();
        let with_head = |head: u32| {
            move |rest: &Vec<u32>| {
                let mut v = Vec::with_capacity(rest.len() + 1);
                v.push(head);
                v.extend_from_slice(rest);
                v
            }
        };
        let r1 = self.harmonic_parts(&a[1..], b);
        add_prefixed(&mut out, &r1, with_head(k));
        let r2 = self.harmonic_parts(a, &b[1..]);
        add_prefixed(&mut out, &r2, with_head(l));
        let r3 = self.harmonic_parts(&a[1..], &b[1..]);
        add_prefixed(&mut out, &r3, with_head(k + l));
        if memoize {
            self.harmonic.insert((a.to_vec(), b.to_vec()), out.clone());
        }
        out
    }

    fn shuffle_letters(&mut self, a: &[Letter], b: &[Letter]) -> IntTerms<Word> {
        if a.is_empty() || b.is_empty() {
            let mut m = BTreeMap::new();
            m.insert(Word(if a.is_empty() { b.to_vec() } else { a.to_vec() }), 1);
            return m;
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let memoize = a.len() + b.len() <= self.cap;
        let key = (Word(a.to_vec()), Word(b.to_vec()));
        if memoize {
            if let Some(r) = self.shuffle.get(&key) {
                return r.clone();
            }
        }
        let mut out = BTreeMap::new();
        let r1 = self.shuffle_letters(&a[1..], b);
        add_prefixed(&mut out, &r1, |w: &Word| w.prepend(a[0]));
        let r2 = self.shuffle_letters(a, &b[1..]);
        add_prefixed(&mut out, &r2, |w: &Word| w.prepend(b[0]));
        if memoize {
            self.shuffle.insert(key, out.clone());
        }
        out
    }

    /// Harmonic product of two words ending in `y`.
    pub fn harmonic_words(&mut self, a: &Word, b: &Word) -> Result<WordSum, WordError> {
        for w in [a, b] {
            if !w.is_in_h1() {
                return Err(WordError::NotInH1(w.clone()));
            }
        }
        let r = self.harmonic_parts(&word_to_parts(a), &word_to_parts(b));
        let mut out = WordSum::zero();
        for (parts, c) in r {
            out.add_term(parts_to_word(&parts), Q::from_integer(c.into()));
        }
        Ok(out)
    }

    /// Shuffle product of two arbitrary words.
    pub fn shuffle_words(&mut self, a: &Word, b: &Word) -> WordSum {
        let r = self.shuffle_letters(&a.0, &b.0);
        let mut out = WordSum::zero();
        for (w, c) in r {
            out.add_term(w, Q::from_integer(c.into()));
        }
        out
    }

    /// Bilinear harmonic product. Every word of both factors must end in `y`.
    pub fn harmonic(&mut self, a: &WordSum, b: &WordSum) -> Result<WordSum, WordError> {
        let mut out = WordSum::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let p = self.harmonic_words(wa, wb)?;
                out.add_scaled(&p, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Bilinear shuffle product.
    pub fn shuffle(&mut self, a: &WordSum, b: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let p = self.shuffle_words(wa, wb);
                out.add_scaled(&p, &(ca * cb));
            }
        }
        out
    }
}

/// Harmonic product with a throwaway memo.
pub fn harmonic_product(a: &WordSum, b: &WordSum) -> Result<WordSum, WordError> {
    ProductMemo::new().harmonic(a, b)
}

/// Shuffle product with a throwaway memo.
pub fn shuffle_product(a: &WordSum, b: &WordSum) -> WordSum {
    ProductMemo::new().shuffle(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{binomial, q};
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn ws(s: &str) -> WordSum {
        s.parse().unwrap()
    }
    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn composition_word_conversion() {
        assert_eq!(c("2,1").to_word(), w("xyy"));
        assert_eq!(c("1").to_word(), w("y"));
        assert_eq!(c("3,2").to_word(), w("xxyxy"));
        assert_eq!(w("xyy").to_composition().unwrap(), c("2,1"));
        assert_eq!(w("yyy").to_composition().unwrap(), c("1,1,1"));
        assert_eq!(w("xxy").to_composition().unwrap(), c("3"));
        assert_eq!(w("xyx").to_composition(), Err(WordError::NotInH1(w("xyx"))));
        assert_eq!(Word::empty().to_composition(), Err(WordError::EmptyWord));
    }

    #[test]
    fn predicates() {
        assert!(w("xy").is_admissible() && w("xy").is_in_h1());
        assert!(!w("yxy").is_admissible() && w("yxy").is_in_h1());
        assert!(Word::empty().is_admissible());
        assert!(!w("yx").is_in_h1());
        assert!(c("2,1").is_admissible() && !c("1,2").is_admissible());
        assert_eq!(Composition::new(vec![]), Err(WordError::EmptyComposition));
        assert_eq!(Composition::new(vec![2, 0]), Err(WordError::ZeroPart));
        assert!("2,,1".parse::<Composition>().is_err());
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![w("y"), w("xy"), w("x"), w("yy"), Word::empty(), w("xyy")];
        v.sort();
        assert_eq!(v, vec![Word::empty(), w("x"), w("y"), w("xy"), w("yy"), w("xyy")]);
    }

    #[test]
    fn harmonic_examples() {
        let z1 = WordSum::from_word(Word::z(1));
        assert_eq!(harmonic_product(&z1, &z1).unwrap(), ws("2yy + xy"));
        let u = ws("3xyy - 1/2xxy");
        assert_eq!(harmonic_product(&WordSum::one(), &u).unwrap(), u);
        assert_eq!(harmonic_product(&u, &WordSum::one()).unwrap(), u);
        // z2 * z2 z2 = 3 z2z2z2 + z2 z4 + z4 z2
        let p = harmonic_product(&ws("xy"), &ws("xyxy")).unwrap();
        assert_eq!(p, ws("3xyxyxy + xyxxxy + xxxyxy"));
        assert!(harmonic_product(&ws("yx"), &ws("y")).is_err());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_product(&ws("y"), &ws("y")), ws("2yy"));
        assert_eq!(shuffle_product(&ws("xy"), &ws("xy")), ws("2xyxy + 4xxyy"));
        let u = ws("yx + 2");
        assert_eq!(shuffle_product(&WordSum::one(), &u), u);
        assert_eq!(shuffle_product(&ws("y"), &ws("xy")), ws("yxy + 2xyy"));
    }

    #[test]
    fn y_power_shuffles_are_binomial() {
        for a in 0..5 {
            for b in 0..5 {
                let p = shuffle_product(
                    &WordSum::from_word(Word::y_power(a)),
                    &WordSum::from_word(Word::y_power(b)),
                );
                let expect = WordSum::monomial(
                    Word::y_power(a + b),
                    binomial((a + b) as u32, a as u32),
                );
                assert_eq!(p, expect);
            }
        }
    }

    #[test]
    fn reverse_and_dual() {
        assert_eq!(c("1,2,3").reverse(), c("3,2,1"));
        assert_eq!(c("2").reverse(), c("2"));
        assert_eq!(c("2,1").dual().unwrap(), c("3"));
        assert_eq!(c("2,3,1").dual().unwrap(), c("3,1,2"));
        assert_eq!(c("3,1,1").dual().unwrap(), c("4,1"));
        assert!(c("1,2").dual().is_err());
    }

    #[test]
    fn dual_matches_word_duality() {
        for l in 2..=9 {
            for k in Composition::admissible_of_weight(l) {
                let d = k.dual().unwrap();
                assert_eq!(d.to_word(), k.to_word().dual());
                assert_eq!(d.dual().unwrap(), k);
                assert_eq!(d.weight(), l);
                assert_eq!(d.depth(), l as usize - k.depth());
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Composition::admissible_of_weight(6).len(), 16);
        assert_eq!(Composition::all_of_weight(5).len(), 16);
        assert_eq!(Composition::all(6, 3).len(), 10);
        assert_eq!(Word::all_admissible(2), vec![w("xy")]);
        assert_eq!(Composition::admissible_of_weight(4)[0], c("4"));
    }

    #[test]
    fn text_forms() {
        let s = ws("2xyy - 1/2xy + 3");
        assert_eq!(s.to_string(), "3 \u{2212} 1/2\u{b7}xy + 2\u{b7}xyy");
        assert_eq!(s.to_string().parse::<WordSum>().unwrap(), s);
        assert_eq!(c("2,1,1").to_string(), "2,1,1");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(WordSum::zero().to_string(), "0");
        assert_eq!("0".parse::<WordSum>().unwrap(), WordSum::zero());
        assert_eq!(s.coeff(&w("xy")), -q(1) / q(2));
    }

    #[test]
    fn memo_cap_is_respected() {
        let mut memo = ProductMemo::with_cap(3);
        memo.harmonic_words(&w("xy"), &w("xy")).unwrap();
        assert_eq!(memo.memo_len(), 0);
        memo.harmonic_words(&w("y"), &w("xy")).unwrap();
        assert!(memo.memo_len() > 0);
    }
}

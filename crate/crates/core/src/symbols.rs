//! The free vector space on admissible MZV symbols of one weight, its
//! product, depth and relation subspaces, and exact membership.
//!
//! Coordinates follow the canonical order of admissible words of length `l`
//! (lexicographic with `x < y`), so `ζ(l)` is always coordinate 0.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{Coefficient, Q};
use crate::linalg::{axpy, Echelon, Row};
use crate::regularize::{Flavor, ProductCombo, RegError, Regularizer, SymCombo};
use crate::words::{Composition, ProductMemo, Word, WordError, WordSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error(transparent)]
    Reg(#[from] RegError),
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("weight {0} has no admissible symbols")]
    NoSymbols(usize),
    #[error("invalid subspace {0}")]
    BadLabel(String),
    #[error("malformed basis for {label} at weight {weight}: {reason}")]
    Malformed { label: String, weight: usize, reason: &'static str },
}

impl From<WordError> for SymbolError {
    fn from(e: WordError) -> Self {
        SymbolError::Reg(e.into())
    }
}

/// Admissible words of length `weight` in coordinate order.
pub fn basis_words(weight: usize) -> Vec<Word> {
    if weight < 2 {
        return Vec::new();
    }
    Word::all_admissible(weight)
}

/// Admissible compositions of `weight` in coordinate order.
pub fn basis_order(weight: usize) -> Vec<Composition> {
    basis_words(weight).iter().map(|w| w.to_composition().expect("admissible")).collect()
}

/// Coordinate of an admissible word of length `l ≥ 2`: `x u y` with the
/// middle letters read as a binary number (`x = 0`).
fn coordinate(w: &Word) -> usize {
    let letters = w.letters();
    letters[1..letters.len() - 1]
        .iter()
        .fold(0usize, |acc, &l| (acc << 1) | usize::from(l == crate::words::Letter::Y))
}

fn to_row(v: &SymCombo) -> Row {
    v.terms().map(|(w, c)| (coordinate(w), c.clone())).collect()
}

fn from_row(weight: usize, r: &Row, words: &[Word]) -> SymCombo {
    let mut s = SymCombo::zero(weight);
    for (&k, c) in r {
        let ws = WordSum::monomial(words[k].clone(), c.clone());
        s.add_scaled(&SymCombo::from_words(weight, &ws).expect("basis word"), &Q::one());
    }
    s
}

/// Names of the subspaces used as moduli.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubspaceLabel {
    /// `Z_l^d`: symbols of depth exactly `d`.
    Depth(usize),
    /// `Z_l^{<n}`: symbols of depth below `n`.
    DepthBelow(usize),
    /// `P_l`: `ζ(l)` and harmonic expansions of products.
    Product,
    /// `R_l`: double shuffle, regularized and duality relations.
    Relation,
    /// The duality part of `R_l` alone.
    RelationDual,
    Sum(Vec<SubspaceLabel>),
}

impl fmt::Display for SubspaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceLabel::Depth(d) => write!(f, "Z{d}"),
            SubspaceLabel::DepthBelow(n) => write!(f, "Z<{n}"),
            SubspaceLabel::Product => f.write_str("P"),
            SubspaceLabel::Relation => f.write_str("R"),
            SubspaceLabel::RelationDual => f.write_str("Rdual"),
            SubspaceLabel::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SubspaceLabel {
    type Err = SymbolError;

    /// Accepts `Z3`, `Zd:3`, `Z<3`, `Z<:3`, `P`, `R`, `Rdual`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || SymbolError::BadLabel(s.to_string());
        let num = |r: &str| r.trim().parse::<usize>().map_err(|_| bad());
        match t {
            "P" => return Ok(SubspaceLabel::Product),
            "R" => return Ok(SubspaceLabel::Relation),
            "Rdual" => return Ok(SubspaceLabel::RelationDual),
            _ => {}
        }
        if let Some(r) = t.strip_prefix("Z<:").or_else(|| t.strip_prefix("Z<")) {
            let n = num(r)?;
            return if n >= 1 { Ok(SubspaceLabel::DepthBelow(n)) } else { Err(bad()) };
        }
        if let Some(r) = t.strip_prefix("Zd:").or_else(|| t.strip_prefix('Z')) {
            let d = num(r)?;
            return if d >= 1 { Ok(SubspaceLabel::Depth(d)) } else { Err(bad()) };
        }
        Err(bad())
    }
}

/// A sum of named subspaces, e.g. `Z^{n−1} + P + R`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Modulus(Vec<SubspaceLabel>);

impl Modulus {
    pub fn new() -> Self {
        Modulus(Vec::new())
    }

    pub fn of(labels: impl IntoIterator<Item = SubspaceLabel>) -> Self {
        let mut m = Modulus::new();
        for l in labels {
            m = m.with(l);
        }
        m
    }

    pub fn with(mut self, label: SubspaceLabel) -> Self {
        match label {
            SubspaceLabel::Sum(parts) => {
                for p in parts {
                    self = self.with(p);
                }
            }
            SubspaceLabel::Depth(0) | SubspaceLabel::DepthBelow(0) | SubspaceLabel::DepthBelow(1) => {}
            l => {
                if !self.0.contains(&l) {
                    self.0.push(l);
                }
            }
        }
        self
    }

    pub fn depth(self, d: usize) -> Self {
        self.with(SubspaceLabel::Depth(d))
    }

    pub fn below(self, n: usize) -> Self {
        self.with(SubspaceLabel::DepthBelow(n))
    }

    pub fn product(self) -> Self {
        self.with(SubspaceLabel::Product)
    }

    pub fn relation(self) -> Self {
        self.with(SubspaceLabel::Relation)
    }

    pub fn labels(&self) -> &[SubspaceLabel] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn key(&self) -> Vec<SubspaceLabel> {
        let mut k = self.0.clone();
        k.sort();
        k
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        write!(f, "{}", SubspaceLabel::Sum(self.0.clone()))
    }
}

impl FromStr for Modulus {
    type Err = SymbolError;

    /// Comma- or plus-separated labels: `"Zd:2,P,R"`, `"Z<3+P"`, `"0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "0" {
            return Ok(Modulus::new());
        }
        let mut m = Modulus::new();
        for part in s.split([',', '+']) {
            if part.trim().is_empty() {
                return Err(SymbolError::BadLabel(s.to_string()));
            }
            m = m.with(part.parse()?);
        }
        Ok(m)
    }
}

/// Outcome of a congruence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// Zero in the free symbol space.
    ExactEqual,
    /// In the span of the modulus, with a verified certificate.
    Certified,
    NotCertified,
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        self != Verdict::NotCertified
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::ExactEqual => "exact-equal",
            Verdict::Certified => "certified",
            Verdict::NotCertified => "not-certified",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A reduced row-echelon basis of a subspace of the weight-`l` symbol space.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    weight: usize,
    label: SubspaceLabel,
    echelon: Echelon,
}

impl SubspaceBasis {
    fn from_generators(weight: usize, label: SubspaceLabel, gens: &[SymCombo]) -> Self {
        let mut echelon = Echelon::new(false);
        for (i, g) in gens.iter().enumerate() {
            debug_assert!(g.is_zero() || g.weight() == weight);
            echelon.insert(&to_row(g), i);
        }
        SubspaceBasis { weight, label, echelon }
    }

    /// Builds from dense rows, checking reduced echelon form.
    pub fn from_rows(
        weight: usize,
        label: SubspaceLabel,
        rows: &[Vec<Q>],
    ) -> Result<Self, SymbolError> {
        let malformed =
            |reason| SymbolError::Malformed { label: label.to_string(), weight, reason };
        let dim = ambient_dim(weight);
        let mut sparse = Vec::with_capacity(rows.len());
        let mut last_pivot: Option<usize> = None;
        for r in rows {
            if r.len() != dim {
                return Err(malformed("row length differs from ambient dimension"));
            }
            let row: Row =
                r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            let Some((&p, _)) = row.iter().next() else {
                return Err(malformed("zero row"));
            };
            if last_pivot.is_some_and(|lp| p <= lp) {
                return Err(malformed("pivots not strictly increasing"));
            }
            last_pivot = Some(p);
            sparse.push(row);
        }
        let echelon = Echelon::from_reduced(sparse);
        if !echelon.is_reduced() {
            return Err(malformed("rows not in reduced echelon form"));
        }
        Ok(SubspaceBasis { weight, label, echelon })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn label(&self) -> &SubspaceLabel {
        &self.label
    }

    pub fn ambient_dim(&self) -> usize {
        ambient_dim(self.weight)
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.pivots().collect()
    }

    /// Dense rows in coordinate order.
    pub fn rows(&self) -> Vec<Vec<Q>> {
        let dim = self.ambient_dim();
        self.echelon
            .rows()
            .map(|r| {
                let mut d = alloc::vec![Q::zero(); dim];
                for (&k, c) in r {
                    d[k] = c.clone();
                }
                d
            })
            .collect()
    }

    /// Rows as symbol combinations.
    pub fn vectors(&self) -> Vec<SymCombo> {
        let words = basis_words(self.weight);
        self.echelon.rows().map(|r| from_row(self.weight, r, &words)).collect()
    }

    pub fn contains(&self, v: &SymCombo) -> bool {
        v.is_zero() || (v.weight() == self.weight && self.echelon.reduce(&to_row(v)).0.is_empty())
    }
}

/// `2^{l−2}` for `l ≥ 2`.
pub fn ambient_dim(weight: usize) -> usize {
    if weight < 2 {
        0
    } else {
        1usize << (weight - 2)
    }
}

/// Expands every monomial by iterated products of its admissible words.
pub fn expand_product(
    p: &ProductCombo,
    mode: Flavor,
    memo: &mut ProductMemo,
) -> Result<SymCombo, SymbolError> {
    let mut out = SymCombo::zero(p.weight());
    for (m, c) in p.terms() {
        let mut acc = WordSum::one();
        for w in m.factors() {
            let f = WordSum::from_word(w.clone());
            acc = match mode {
                Flavor::Harmonic => memo.harmonic(&acc, &f)?,
                Flavor::Shuffle => memo.shuffle(&acc, &f),
            };
        }
        out.add_scaled(&SymCombo::from_words(p.weight(), &acc)?, c);
    }
    Ok(out)
}

/// `Z_l^d`.
pub fn depth_subspace(l: usize, d: usize) -> SubspaceBasis {
    let gens: Vec<SymCombo> = basis_words(l)
        .into_iter()
        .filter(|w| w.y_degree() == d)
        .map(|w| SymCombo::from_words(l, &WordSum::from_word(w)).unwrap())
        .collect();
    SubspaceBasis::from_generators(l, SubspaceLabel::Depth(d), &gens)
}

/// `Z_l^{<n}`.
pub fn depth_below_subspace(l: usize, n: usize) -> SubspaceBasis {
    let gens: Vec<SymCombo> = basis_words(l)
        .into_iter()
        .filter(|w| w.y_degree() < n)
        .map(|w| SymCombo::from_words(l, &WordSum::from_word(w)).unwrap())
        .collect();
    SubspaceBasis::from_generators(l, SubspaceLabel::DepthBelow(n), &gens)
}

/// Unordered pairs of admissible words with lengths summing to `l`.
fn admissible_pairs(l: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for a in 2..=l / 2 {
        let b = l - a;
        if b < 2 {
            continue;
        }
        let left = basis_words(a);
        let right = basis_words(b);
        for (i, u) in left.iter().enumerate() {
            for (j, v) in right.iter().enumerate() {
                if a == b && j < i {
                    continue;
                }
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Generators of `P_l`: `ζ(l)` and harmonic expansions of `ζ(K)ζ(K')`.
pub fn product_generators(l: usize, memo: &mut ProductMemo) -> Vec<SymCombo> {
    let mut gens = alloc::vec![SymCombo::from_words(l, &WordSum::from_word(Word::z(l as u32))).unwrap()];
    for (u, v) in admissible_pairs(l) {
        let prod = memo.harmonic_words(&u, &v).expect("admissible words");
        gens.push(SymCombo::from_words(l, &prod).expect("admissible product"));
    }
    gens
}

/// `P_l`.
pub fn product_subspace(l: usize, memo: &mut ProductMemo) -> SubspaceBasis {
    SubspaceBasis::from_generators(l, SubspaceLabel::Product, &product_generators(l, memo))
}

/// Which family a relation generator comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// `Z(w_1 * w_2 − w_1 ш w_2)`.
    DoubleShuffle,
    /// Constant term of the shuffle regularization of `z_1 * w − z_1 ш w`.
    Hoffman,
    /// `ζ(K) − ζ(K^†)`.
    Duality,
}

/// A relation generator with its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationGenerator {
    pub kind: RelationKind,
    pub source: String,
    pub value: SymCombo,
}

/// All three generator families at weight `l` (zero generators dropped).
pub fn relation_generators(l: usize, reg: &mut Regularizer) -> Vec<RelationGenerator> {
    let mut out = Vec::new();
    let mut push = |kind, source: String, value: SymCombo| {
        if !value.is_zero() {
            out.push(RelationGenerator { kind, source, value });
        }
    };
    for (u, v) in admissible_pairs(l) {
        let memo = reg.memo();
        let h = memo.harmonic_words(&u, &v).expect("admissible words");
        let s = memo.shuffle_words(&u, &v);
        let value = SymCombo::from_words(l, &(&h - &s)).expect("admissible products");
        let source = alloc::format!(
            "z({}) * z({})",
            u.to_composition().unwrap(),
            v.to_composition().unwrap()
        );
        push(RelationKind::DoubleShuffle, source, value);
    }
    let y = Word::z(1);
    for w in basis_words(l - 1) {
        let memo = reg.memo();
        let h = memo.harmonic_words(&y, &w).expect("words in h1");
        let s = memo.shuffle_words(&y, &w);
        let value = reg.zeta_of_sum(l, &(&h - &s), Flavor::Shuffle).expect("words ending in y");
        push(RelationKind::Hoffman, alloc::format!("z(1) * z({})", w.to_composition().unwrap()), value);
    }
    for w in basis_words(l) {
        let d = w.dual();
        if d <= w {
            continue;
        }
        let mut value = SymCombo::from_words(l, &WordSum::from_word(w.clone())).unwrap();
        value.add_scaled(&SymCombo::from_words(l, &WordSum::from_word(d)).unwrap(), &-Q::one());
        push(RelationKind::Duality, alloc::format!("dual z({})", w.to_composition().unwrap()), value);
    }
    out
}

/// `R_l`.
pub fn relation_subspace(l: usize, reg: &mut Regularizer) -> SubspaceBasis {
    let gens: Vec<SymCombo> = relation_generators(l, reg).into_iter().map(|g| g.value).collect();
    SubspaceBasis::from_generators(l, SubspaceLabel::Relation, &gens)
}

/// Span of the duality generators alone.
pub fn duality_subspace(l: usize) -> SubspaceBasis {
    let mut gens = Vec::new();
    for w in basis_words(l) {
        let d = w.dual();
        if d > w {
            let mut v = SymCombo::from_words(l, &WordSum::from_word(w)).unwrap();
            v.add_scaled(&SymCombo::from_words(l, &WordSum::from_word(d)).unwrap(), &-Q::one());
            gens.push(v);
        }
    }
    SubspaceBasis::from_generators(l, SubspaceLabel::RelationDual, &gens)
}

/// Result of a membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub verdict: Verdict,
    /// `(part, row, coefficient)`: the query equals `Σ coefficient · parts[part].vectors()[row]`.
    pub combination: Vec<(usize, usize, Q)>,
    /// Residue after eliminating the sum's pivots (zero iff certified).
    pub residue: SymCombo,
}

impl MembershipCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// A stacked sum of subspaces with generator tracking.
#[derive(Debug, Clone)]
struct SumSpace {
    weight: usize,
    echelon: Echelon,
    gens: Vec<(usize, Row)>,
    offsets: Vec<usize>,
}

impl SumSpace {
    fn new(weight: usize, parts: &[&SubspaceBasis]) -> Self {
        let mut echelon = Echelon::new(true);
        let mut gens = Vec::new();
        let mut offsets = Vec::new();
        for (pi, p) in parts.iter().enumerate() {
            offsets.push(gens.len());
            for r in p.echelon.rows() {
                let id = gens.len();
                echelon.insert(r, id);
                gens.push((pi, r.clone()));
            }
        }
        SumSpace { weight, echelon, gens, offsets }
    }

    fn membership(&self, v: &SymCombo) -> MembershipCertificate {
        let target = to_row(v);
        let (res, combo) = self.echelon.reduce(&target);
        let words = basis_words(self.weight);
        let residue = from_row(self.weight, &res, &words);
        if !res.is_empty() {
            return MembershipCertificate { verdict: Verdict::NotCertified, combination: Vec::new(), residue };
        }
        let mut back = Row::new();
        let mut combination = Vec::new();
        for (&g, c) in &combo {
            let (part, row) = &self.gens[g];
            axpy(&mut back, c, row);
            combination.push((*part, g - self.offsets[*part], c.clone()));
        }
        let verdict = if back == target {
            if target.is_empty() {
                Verdict::ExactEqual
            } else {
                Verdict::Certified
            }
        } else {
            Verdict::NotCertified
        };
        MembershipCertificate { verdict, combination, residue }
    }
}

/// Decides whether `v` lies in the sum of `parts`.
pub fn membership(
    v: &SymCombo,
    parts: &[&SubspaceBasis],
) -> Result<MembershipCertificate, SymbolError> {
    let weight = match parts.first() {
        Some(p) => p.weight,
        None => v.weight(),
    };
    check_weight(v, weight)?;
    for p in parts {
        if p.weight != weight {
            return Err(SymbolError::WeightMismatch { expected: weight, found: p.weight });
        }
    }
    Ok(SumSpace::new(weight, parts).membership(v))
}

fn check_weight(v: &SymCombo, weight: usize) -> Result<(), SymbolError> {
    if !v.is_zero() && v.weight() != weight {
        return Err(SymbolError::WeightMismatch { expected: weight, found: v.weight() });
    }
    Ok(())
}

/// Canonical residue of `v` modulo `basis`.
pub fn reduce(v: &SymCombo, basis: &SubspaceBasis) -> Result<SymCombo, SymbolError> {
    check_weight(v, basis.weight)?;
    let (res, _) = basis.echelon.reduce(&to_row(v));
    Ok(from_row(basis.weight, &res, &basis_words(basis.weight)))
}

#[derive(Debug, Clone, Default)]
struct WeightSpaces {
    named: BTreeMap<SubspaceLabel, SubspaceBasis>,
    sums: BTreeMap<Vec<SubspaceLabel>, (SubspaceBasis, Box<SumSpace>)>,
}

/// Lazily built subspaces for every weight, with cached sums.
#[derive(Debug, Clone, Default)]
pub struct Spaces {
    reg: Regularizer,
    weights: BTreeMap<usize, WeightSpaces>,
}

impl Spaces {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn regularizer(&mut self) -> &mut Regularizer {
        &mut self.reg
    }

    /// Installs a precomputed basis (for example one loaded from disk).
    pub fn insert_basis(&mut self, basis: SubspaceBasis) {
        let ws = self.weights.entry(basis.weight).or_default();
        ws.sums.clear();
        ws.named.insert(basis.label.clone(), basis);
    }

    pub fn has_basis(&self, l: usize, label: &SubspaceLabel) -> bool {
        self.weights.get(&l).is_some_and(|w| w.named.contains_key(label))
    }

    /// The named subspace at weight `l`, built on first use.
    pub fn basis(&mut self, l: usize, label: &SubspaceLabel) -> Result<&SubspaceBasis, SymbolError> {
        if l < 2 {
            return Err(SymbolError::NoSymbols(l));
        }
        if !self.has_basis(l, label) {
            let b = match label {
                SubspaceLabel::Depth(d) => depth_subspace(l, *d),
                SubspaceLabel::DepthBelow(n) => depth_below_subspace(l, *n),
                SubspaceLabel::Product => product_subspace(l, self.reg.memo()),
                SubspaceLabel::Relation => relation_subspace(l, &mut self.reg),
                SubspaceLabel::RelationDual => duality_subspace(l),
                SubspaceLabel::Sum(_) => return Err(SymbolError::BadLabel(label.to_string())),
            };
            self.weights.entry(l).or_default().named.insert(label.clone(), b);
        }
        Ok(&self.weights[&l].named[label])
    }

    fn sum_space(&mut self, l: usize, m: &Modulus) -> Result<&(SubspaceBasis, Box<SumSpace>), SymbolError> {
        let key = m.key();
        let cached = self.weights.get(&l).is_some_and(|w| w.sums.contains_key(&key));
        if !cached {
            for lab in &key {
                self.basis(l, lab)?;
            }
            let ws = self.weights.entry(l).or_default();
            let parts: Vec<&SubspaceBasis> = key.iter().map(|k| &ws.named[k]).collect();
            let sum = SumSpace::new(l, &parts);
            let mut flat = Echelon::new(false);
            for (i, r) in sum.echelon.rows().enumerate() {
                flat.insert(r, i);
            }
            let basis = SubspaceBasis { weight: l, label: SubspaceLabel::Sum(key.clone()), echelon: flat };
            ws.sums.insert(key.clone(), (basis, Box::new(sum)));
        }
        Ok(&self.weights[&l].sums[&key])
    }

    /// The sum of the modulus' subspaces at weight `l`.
    pub fn modulus_basis(&mut self, l: usize, m: &Modulus) -> Result<&SubspaceBasis, SymbolError> {
        Ok(&self.sum_space(l, m)?.0)
    }

    /// Certifies `v ∈ modulus` at `v`'s weight (or `l` when `v` is zero).
    /// Certificate rows index the parts in sorted label order.
    pub fn membership(
        &mut self,
        l: usize,
        v: &SymCombo,
        m: &Modulus,
    ) -> Result<MembershipCertificate, SymbolError> {
        check_weight(v, l)?;
        if v.is_zero() {
            return Ok(MembershipCertificate {
                verdict: Verdict::ExactEqual,
                combination: Vec::new(),
                residue: SymCombo::zero(l),
            });
        }
        Ok(self.sum_space(l, m)?.1.membership(v))
    }

    pub fn verdict(&mut self, l: usize, v: &SymCombo, m: &Modulus) -> Result<Verdict, SymbolError> {
        Ok(self.membership(l, v, m)?.verdict)
    }

    pub fn reduce(&mut self, l: usize, v: &SymCombo, m: &Modulus) -> Result<SymCombo, SymbolError> {
        let b = self.modulus_basis(l, m)?;
        reduce(v, b)
    }

    /// `ζ^R(c)` of the given flavor.
    pub fn zeta(&mut self, c: &Composition, flavor: Flavor) -> SymCombo {
        self.reg.zeta(c, flavor)
    }

    /// Harmonic expansion of a product combination.
    pub fn expand(&mut self, p: &ProductCombo, mode: Flavor) -> Result<SymCombo, SymbolError> {
        expand_product(p, mode, self.reg.memo())
    }
}

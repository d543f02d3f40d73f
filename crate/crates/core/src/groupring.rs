//! The integer group ring of `GL_n(Z)`, its named elements, and a catalog of
//! identities checked by direct expansion.
//!
//! A permutation `σ` is the matrix `(δ_{iσ(j)})`, so matrix products compose
//! permutations right to left: `M_σ M_τ = M_{σ∘τ}`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupRingError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("{what} index {index} out of range for n = {n}")]
    IndexOutOfRange { what: &'static str, index: usize, n: usize },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("not a permutation")]
    NotPermutation,
}

/// An `n × n` integer matrix of determinant ±1, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, GroupRingError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GroupRingError::NotUnimodular);
        }
        let m = IntMatrix { n, entries: rows.concat() };
        if m.det().abs() != 1 {
            return Err(GroupRingError::NotUnimodular);
        }
        Ok(m)
    }

    /// The permutation matrix `(δ_{iσ(j)})` of a 0-based image list.
    pub fn permutation(sigma: &[usize]) -> Result<Self, GroupRingError> {
        let n = sigma.len();
        let mut seen = alloc::vec![false; n];
        let mut entries = alloc::vec![0; n * n];
        for (j, &s) in sigma.iter().enumerate() {
            if s >= n || seen[s] {
                return Err(GroupRingError::NotPermutation);
            }
            seen[s] = true;
            entries[s * n + j] = 1;
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = alloc::vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        IntMatrix { n, entries }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut entries = alloc::vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        IntMatrix { n, entries }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else { return 0 };
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        (sign * a[n * n - 1]) as i64
    }

    /// Exact inverse (integral since the determinant is ±1).
    pub fn inverse(&self) -> IntMatrix {
        let n = self.n;
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n).map(|j| q(self.get(i, j))).collect();
                row.extend((0..n).map(|j| q(i64::from(i == j))));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("unimodular matrix");
            a.swap(col, piv);
            let inv = BigRational::one() / a[col][col].clone();
            for v in a[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..2 * n {
                        let d = &a[col][j] * &f;
                        a[r][j] -= d;
                    }
                }
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &a {
            for v in &row[n..] {
                debug_assert!(v.is_integer());
                entries.push(v.to_integer().to_i64().expect("small integer entry"));
            }
        }
        IntMatrix { n, entries }
    }

    /// The permutation `σ` (0-based images) if this is a permutation matrix.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut sigma = alloc::vec![0; n];
        for j in 0..n {
            let col: Vec<usize> = (0..n).filter(|&i| self.get(i, j) != 0).collect();
            if col.len() != 1 || self.get(col[0], j) != 1 {
                return None;
            }
            sigma[j] = col[0];
        }
        Some(sigma)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A formal integer combination of unimodular `n × n` matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    n: usize,
    terms: BTreeMap<IntMatrix, i64>,
}

impl GroupRingElem {
    pub fn zero(n: usize) -> Self {
        GroupRingElem { n, terms: BTreeMap::new() }
    }

    /// The unit `e`.
    pub fn identity(n: usize) -> Self {
        Self::from_matrix(IntMatrix::identity(n))
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        let mut g = Self::zero(m.n);
        g.add_term(m, 1);
        g
    }

    pub fn from_permutation(sigma: &[usize]) -> Result<Self, GroupRingError> {
        Ok(Self::from_matrix(IntMatrix::permutation(sigma)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntMatrix, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
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

    pub fn coeff(&self, m: &IntMatrix) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: IntMatrix, c: i64) {
        assert_eq!(m.n, self.n, "dimension mismatch");
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (m, &a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &Self) -> Result<(), GroupRingError> {
        if self.n != other.n {
            return Err(GroupRingError::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn map_terms(&self, f: impl Fn(&IntMatrix) -> IntMatrix) -> Self {
        let mut out = Self::zero(self.n);
        for (m, &c) in &self.terms {
            out.add_term(f(m), c);
        }
        out
    }

    /// `i(Σ a_j S_j) = Σ a_j S_j^{-1}`.
    pub fn involution_i(&self) -> Self {
        self.map_terms(IntMatrix::inverse)
    }

    /// `t(Σ a_j S_j) = Σ a_j S_j^T`.
    pub fn involution_t(&self) -> Self {
        self.map_terms(IntMatrix::transpose)
    }
}

impl core::ops::Add<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl core::ops::Sub<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_add(&rhs.scaled(-1)).expect("dimension mismatch")
    }
}

impl core::ops::Mul<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            match (i, *c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}\u{b7}", c.abs())?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Product of a non-empty list of elements.
pub fn product(factors: &[&GroupRingElem]) -> GroupRingElem {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = &acc * f;
    }
    acc
}

/// All permutations of `0..n` (0-based image lists) in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The cycle `(a_1 a_2 … a_k)` (1-based labels, `a_1 ↦ a_2 ↦ … ↦ a_1`) in `S_n`.
pub fn cycle(n: usize, labels: &[usize]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    for (i, &a) in labels.iter().enumerate() {
        let b = labels[(i + 1) % labels.len()];
        sigma[a - 1] = b - 1;
    }
    sigma
}

/// Named elements of `Z[GL_n(Z)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Identity,
    /// `ε = −I`.
    Epsilon,
    /// `τ_j`: fixes `1..j` and reverses `j+1..n`.
    Tau(usize),
    /// `τ = τ_0`.
    Tau0,
    /// Lower bidiagonal with 1 on the diagonal and −1 below it.
    P,
    /// Lower triangular all-ones matrix.
    PInv,
    /// `sh_j`: permutations increasing on `1..j` and on `j+1..n`.
    Shuffle(usize),
    /// The image of the cycle `(1 2 … n+1)`.
    CyclicProj,
    CyclicProjInv,
    /// The image of the transposition `(1 n+1)`.
    TauPrimeProj,
}

/// Builds a named element.
pub fn named(n: usize, which: Named) -> Result<GroupRingElem, GroupRingError> {
    let m = |rows: Vec<Vec<i64>>| GroupRingElem::from_matrix(IntMatrix::from_rows(&rows).expect("unimodular"));
    let g = match which {
        Named::Identity => GroupRingElem::identity(n),
        Named::Epsilon => GroupRingElem::from_matrix(IntMatrix::identity(n).neg()),
        Named::Tau0 => named(n, Named::Tau(0))?,
        Named::Tau(j) => {
            if j >= n {
                return Err(GroupRingError::IndexOutOfRange { what: "tau", index: j, n });
            }
            let sigma: Vec<usize> = (0..n).map(|i| if i < j { i } else { n - 1 + j - i }).collect();
            GroupRingElem::from_permutation(&sigma)?
        }
        Named::P => m((0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 } else if i == j + 1 { -1 } else { 0 }).collect())
            .collect()),
        Named::PInv => m((0..n).map(|i| (0..n).map(|j| i64::from(j <= i)).collect()).collect()),
        Named::Shuffle(j) => {
            if j == 0 || j >= n {
                return Err(GroupRingError::IndexOutOfRange { what: "shuffle", index: j, n });
            }
            let mut g = GroupRingElem::zero(n);
            for sigma in permutations(n) {
                if sigma[..j].windows(2).all(|w| w[0] < w[1]) && sigma[j..].windows(2).all(|w| w[0] < w[1]) {
                    g.add_term(IntMatrix::permutation(&sigma)?, 1);
                }
            }
            g
        }
        Named::CyclicProj => m((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if j == n - 1 { -1 } else if i == j + 1 { 1 } else { 0 })
                    .collect()
            })
            .collect()),
        Named::CyclicProjInv => m((0..n)
            .map(|i| (0..n).map(|j| if j == 0 { -1 } else if j == i + 1 { 1 } else { 0 }).collect())
            .collect()),
        Named::TauPrimeProj => m((0..n)
            .map(|i| (0..n).map(|j| if j == 0 { -1 } else { i64::from(i == j) }).collect())
            .collect()),
    };
    Ok(g)
}

/// The matrix by which `σ ∈ S_{n+1}` acts on `n` variables once
/// `y_{n+1} = −(x_1 + … + x_n)`.
pub fn project_sn1(sigma: &[usize]) -> Result<IntMatrix, GroupRingError> {
    let big = IntMatrix::permutation(sigma)?;
    let n = sigma.len() - 1;
    // E = [I | −1]; the result is E·M_σ restricted to the first n columns
    let mut entries = alloc::vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = big.get(i, j) - big.get(n, j);
        }
    }
    Ok(IntMatrix { n, entries })
}

/// Projects an element of `Z[S_{n+1}]` into `Z[GL_n(Z)]`.
pub fn project_elem(g: &GroupRingElem) -> Result<GroupRingElem, GroupRingError> {
    let mut out = GroupRingElem::zero(g.n() - 1);
    for (m, c) in g.terms() {
        let sigma = m.as_permutation().ok_or(GroupRingError::NotPermutation)?;
        out.add_term(project_sn1(&sigma)?, c);
    }
    Ok(out)
}

/// Identity families of the catalog and the keys belonging to each.
pub const CATALOG: [(&str, &[&str]); 11] = [
    ("prop22.first", &["prop22.first"]),
    ("prop22.crucial", &["prop22.crucial"]),
    ("ikz.cyclic", &["ikz.cyclic", "ikz.cyclic.projected"]),
    (
        "proj.factor",
        &[
            "proj.factor.tauprime",
            "proj.factor.cyclic",
            "proj.factor.display1",
            "proj.factor.display2",
            "proj.factor.display3",
            "proj.factor.display4",
            "proj.factor.display5",
            "proj.factor.display6",
        ],
    ),
    ("proj.inverse", &["proj.inverse.tauprime", "proj.inverse.cyclic", "proj.inverse.conjugate"]),
    ("shuffle.cyclic", &["shuffle.cyclic.first", "shuffle.cyclic.last", "shuffle.cyclic.product", "shuffle.cyclic.conjugate"]),
    ("key.ikz1", &["key.ikz1"]),
    ("key.ikz2", &["key.ikz2"]),
    (
        "key.origin",
        &[
            "key.origin",
            "key.origin.transpose.p",
            "key.origin.transpose.pinv",
            "key.origin.image.lhs",
            "key.origin.image.rhs",
        ],
    ),
    ("remark", &["remark.key1", "remark.split1", "remark.split2", "remark.key2"]),
    ("thm1.decomp", &["thm1.decomp"]),
];

/// `ε τ'`: first column all 1, then −1 on the diagonal.
fn display_eps_tauprime(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if j == 0 { 1 } else if i == j { -1 } else { 0 }).collect())
        .collect()
}

/// Both sides of one catalog identity at dimension `n`.
pub fn identity_sides(key: &str, n: usize) -> Result<(GroupRingElem, GroupRingElem), GroupRingError> {
    if n < 2 {
        return Err(GroupRingError::IndexOutOfRange { what: "dimension", index: n, n });
    }
    let nm = |w| named(n, w).expect("valid index");
    let e = nm(Named::Identity);
    let eps = nm(Named::Epsilon);
    let t = nm(Named::Tau0);
    let p = nm(Named::P);
    let pi = nm(Named::PInv);
    let s1 = nm(Named::Shuffle(1));
    let sl = nm(Named::Shuffle(n - 1));
    let c = nm(Named::CyclicProj);
    let ci = nm(Named::CyclicProjInv);
    let tp = nm(Named::TauPrimeProj);
    let cn = GroupRingElem::from_permutation(&cycle(n, &(1..=n).collect::<Vec<_>>()))?;
    let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    let e_plus_t = &e + &t.scaled(sign);
    let e_plus_et = &e + &product(&[&eps, &t]).scaled(sign);
    let ptpi = product(&[&p, &t, &pi]);
    let pitpt = product(&[&pi, &t, &p, &t]);
    let tpitp = product(&[&t, &pi, &t, &p]);
    let crucial_lhs = &e - &product(&[&eps, &t, &p, &t, &pi]);
    let mat = |rows: Vec<Vec<i64>>| GroupRingElem::from_matrix(IntMatrix::from_rows(&rows).expect("unimodular"));

    let sides = match key {
        "prop22.first" => {
            let mut rhs = GroupRingElem::zero(n);
            for j in 1..n {
                let s = if (n - j - 1).is_multiple_of(2) { 1 } else { -1 };
                rhs = &rhs + &product(&[&nm(Named::Shuffle(j)), &nm(Named::Tau(j))]).scaled(s);
            }
            (e_plus_t.clone(), rhs)
        }
        "prop22.crucial" => {
            let inner = &e + &product(&[&eps, &ptpi, &t, &ptpi]).scaled(sign);
            let r1 = product(&[&s1, &inner]);
            let r2 = product(&[&eps, &p, &e_plus_t, &pi, &s1, &ptpi, &t, &ptpi]).scaled(sign);
            (crucial_lhs.clone(), &r1 - &r2)
        }
        "ikz.cyclic" | "ikz.cyclic.projected" => {
            let m = n + 1;
            let big_e = GroupRingElem::identity(m);
            let cyc = GroupRingElem::from_permutation(&cycle(m, &(1..=m).collect::<Vec<_>>()))?;
            let trans = GroupRingElem::from_permutation(&cycle(m, &[1, m]))?;
            let mut sh = GroupRingElem::zero(m);
            for (mat_, coeff) in s1.terms() {
                let mut sigma = mat_.as_permutation().expect("permutation");
                sigma.push(n);
                sh.add_term(IntMatrix::permutation(&sigma)?, coeff);
            }
            let lhs = &big_e + &product(&[&sh, &cyc]);
            let rhs = product(&[&cyc, &(&big_e + &product(&[&sh, &trans]))]);
            if key == "ikz.cyclic" {
                (lhs, rhs)
            } else {
                (project_elem(&lhs)?, project_elem(&rhs)?)
            }
        }
        "proj.factor.tauprime" => (tp.clone(), product(&[&eps, &cn, &pitpt])),
        "proj.factor.cyclic" => (c.clone(), product(&[&eps, &tpitp])),
        "proj.factor.display1" => {
            let rows = (0..n)
                .map(|i| (0..n).map(|j| if j == 0 { 1 } else if j == i + 1 { -1 } else { 0 }).collect())
                .collect();
            (pitpt.clone(), mat(rows))
        }
        "proj.factor.display2" => (product(&[&cn, &pitpt]), mat(display_eps_tauprime(n))),
        "proj.factor.display3" => (mat(display_eps_tauprime(n)), product(&[&eps, &tp])),
        "proj.factor.display4" => {
            let rows = (0..n)
                .map(|i| {
                    (0..n).map(|j| if j == n - 1 { 1 } else if i == j + 1 { -1 } else { 0 }).collect()
                })
                .collect();
            (tpitp.clone(), mat(rows))
        }
        "proj.factor.display5" => (tpitp.clone(), pitpt.involution_i()),
        "proj.factor.display6" => (tpitp.clone(), product(&[&eps, &c])),
        "proj.inverse.tauprime" => (tp.involution_i(), tp.clone()),
        "proj.inverse.cyclic" => (c.involution_i(), ci.clone()),
        "proj.inverse.conjugate" => (ci.clone(), product(&[&t, &c, &t])),
        "shuffle.cyclic.first" | "shuffle.cyclic.last" => {
            let mut rhs = GroupRingElem::zero(n);
            for j in 1..=n {
                let labels: Vec<usize> =
                    if key.ends_with("first") { (1..=j).rev().collect() } else { (j..=n).collect() };
                rhs.add_term(IntMatrix::permutation(&cycle(n, &labels))?, 1);
            }
            (if key.ends_with("first") { s1.clone() } else { sl.clone() }, rhs)
        }
        "shuffle.cyclic.product" => (product(&[&s1, &cn]), sl.clone()),
        "shuffle.cyclic.conjugate" => (product(&[&t, &sl, &t]), s1.clone()),
        "key.ikz1" => {
            let lhs = &e + &product(&[&eps, &s1, &tpitp]);
            let rhs = product(&[&eps, &tpitp, &(&e + &product(&[&eps, &sl, &pitpt]))]);
            (lhs, rhs)
        }
        "key.ikz2" => {
            let lhs = &e - &product(&[&eps, &pitpt]);
            let rhs = &s1 - &product(&[&eps, &tpitp, &sl, &pitpt, &pitpt]);
            (lhs, rhs)
        }
        "key.origin" => {
            let rhs = &s1 - &product(&[&eps, &ptpi, &s1, &ptpi, &t, &ptpi]);
            (crucial_lhs.clone(), rhs)
        }
        "key.origin.transpose.p" => (p.involution_t(), product(&[&t, &p, &t])),
        "key.origin.transpose.pinv" => (pi.involution_t(), product(&[&t, &pi, &t])),
        "key.origin.image.lhs" | "key.origin.image.rhs" => {
            let (l2, r2) = identity_sides("key.ikz2", n)?;
            let (l0, r0) = identity_sides("key.origin", n)?;
            let ti = |g: &GroupRingElem| g.involution_i().involution_t();
            if key.ends_with("lhs") {
                (ti(&l2), l0)
            } else {
                (ti(&r2), r0)
            }
        }
        "remark.key1" => {
            let lhs = &product(&[&eps, &p, &t]) - &product(&[&t, &p]);
            let rhs = &product(&[&eps, &t, &p, &sl, &pi, &t, &p, &t]) - &product(&[&p, &sl, &pi, &t, &p]);
            (lhs, rhs)
        }
        "remark.split1" => {
            let lhs = &product(&[&eps, &p, &t]) - &product(&[&t, &p]);
            let rhs = product(&[&eps, &(&product(&[&p, &e_plus_t]) - &product(&[&e_plus_et, &p]))]).scaled(sign);
            (lhs, rhs)
        }
        "remark.split2" => {
            let lhs = product(&[&eps, &t, &p, &sl, &pi, &t, &p, &t]);
            let a = product(&[&eps, &p, &sl, &pi, &t, &p, &t]).scaled(-sign);
            let b = product(&[&eps, &e_plus_t, &p, &sl, &pi, &t, &p, &t]).scaled(sign);
            (lhs, &a + &b)
        }
        "remark.key2" => {
            let lhs = product(&[&e_plus_et, &p]);
            let a = product(&[&eps, &p, &sl, &pi, &t, &p, &e_plus_et]).scaled(sign);
            let b = product(&[&e_plus_t, &p, &sl, &pi, &t, &p, &t]);
            let cc = product(&[&p, &e_plus_t]);
            (lhs, &(&a - &b) + &cc)
        }
        "thm1.decomp" => {
            let a = product(&[&p, &e_plus_t, &pi]);
            let b = product(&[&crucial_lhs, &ptpi]).scaled(sign);
            (e_plus_et.clone(), &a - &b)
        }
        _ => return Err(GroupRingError::UnknownIdentity(key.to_string())),
    };
    Ok(sides)
}

/// Whether a catalog identity (a single key or a whole family) holds at `n`.
pub fn verify_identity(name: &str, n: usize) -> Result<bool, GroupRingError> {
    if let Some((_, keys)) = CATALOG.iter().find(|(fam, _)| *fam == name) {
        for k in keys.iter() {
            let (l, r) = identity_sides(k, n)?;
            if l != r {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let (l, r) = identity_sides(name, n)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn named_matrices() {
        let p = named(2, Named::P).unwrap();
        assert_eq!(p, GroupRingElem::from_matrix(IntMatrix::from_rows(&[vec![1, 0], vec![-1, 1]]).unwrap()));
        let s = named(2, Named::Shuffle(1)).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&IntMatrix::identity(2)), 1);
        for n in 2..=6usize {
            for j in 1..n {
                let expected = (1..=n).product::<usize>() / ((1..=j).product::<usize>() * (1..=n - j).product::<usize>());
                assert_eq!(named(n, Named::Shuffle(j)).unwrap().len(), expected);
            }
        }
        assert!(named(3, Named::Shuffle(3)).is_err());
        assert!(named(3, Named::Tau(3)).is_err());
    }

    #[test]
    fn ring_basics() {
        let t = named(4, Named::Tau0).unwrap();
        let e = GroupRingElem::identity(4);
        assert_eq!(&t * &t, e);
        assert!((&(&e + &t) * &(&e - &t)).is_zero());
        assert_eq!(&e * &t, t);
        assert!(GroupRingElem::identity(2).try_mul(&e).is_err());
    }

    #[test]
    fn permutation_convention() {
        // σ = (1 2 3): σ(1)=2, so column 1 has its 1 in row 2
        let sigma = cycle(3, &[1, 2, 3]);
        let m = IntMatrix::permutation(&sigma).unwrap();
        assert_eq!(m.get(1, 0), 1);
        assert_eq!(m.as_permutation().unwrap(), sigma);
        let tau = cycle(3, &[1, 2]);
        let st = IntMatrix::permutation(&sigma).unwrap().mul(&IntMatrix::permutation(&tau).unwrap());
        let composed: Vec<usize> = (0..3).map(|i| sigma[tau[i]]).collect();
        assert_eq!(st, IntMatrix::permutation(&composed).unwrap());
    }

    #[test]
    fn projections_match_displays() {
        for n in 2..=5usize {
            let id: Vec<usize> = (0..=n).collect();
            assert_eq!(project_sn1(&id).unwrap(), IntMatrix::identity(n));
            let tp = project_sn1(&cycle(n + 1, &[1, n + 1])).unwrap();
            assert_eq!(GroupRingElem::from_matrix(tp), named(n, Named::TauPrimeProj).unwrap());
            let c = project_sn1(&cycle(n + 1, &(1..=n + 1).collect::<Vec<_>>())).unwrap();
            assert_eq!(GroupRingElem::from_matrix(c), named(n, Named::CyclicProj).unwrap());
        }
    }

    #[test]
    fn inverse_and_det() {
        let p = IntMatrix::from_rows(&[vec![1, 0, 0], vec![-1, 1, 0], vec![0, -1, 1]]).unwrap();
        assert_eq!(p.det(), 1);
        assert_eq!(p.mul(&p.inverse()), IntMatrix::identity(3));
        assert_eq!(IntMatrix::identity(4).neg().det(), 1);
        assert!(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn first_identity_small_case() {
        // n = 2: e + τ = sh_1 τ_1 with τ_1 = e
        let (l, r) = identity_sides("prop22.first", 2).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.len(), 2);
    }

    #[test]
    fn catalog_holds_for_small_n() {
        for n in 2..=5 {
            for (fam, keys) in CATALOG.iter() {
                for k in keys.iter() {
                    let (l, r) = identity_sides(k, n).unwrap();
                    assert_eq!(l, r, "{k} fails at n = {n}");
                }
                assert!(verify_identity(fam, n).unwrap());
            }
        }
        assert!(verify_identity("nope", 3).is_err());
    }
}

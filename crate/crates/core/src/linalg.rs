//! Sparse reduced row-echelon form over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::coeff::Q;

/// Sparse vector keyed by column (or generator) index.
pub(crate) type Row = BTreeMap<usize, Q>;

/// `target += factor · src`, dropping cancelled entries.
pub(crate) fn axpy(target: &mut Row, factor: &Q, src: &Row) {
    if factor.is_zero() {
        return;
    }
    for (&k, v) in src {
        let delta = v * factor;
        match target.entry(k) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

fn scale(row: &mut Row, factor: &Q) {
    for v in row.values_mut() {
        *v *= factor;
    }
}

/// Fully reduced echelon basis: every row has pivot entry 1 and vanishes on
/// all other pivot columns. Optionally tracks each row as a combination of
/// the inserted generators.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, Row>,
    combos: Option<BTreeMap<usize, Row>>,
}

impl Echelon {
    pub(crate) fn new(track: bool) -> Self {
        Echelon { rows: BTreeMap::new(), combos: track.then(BTreeMap::new) }
    }

    /// Takes rows already in reduced echelon form.
    pub(crate) fn from_reduced(rows: Vec<Row>) -> Self {
        let mut e = Echelon::new(false);
        for r in rows {
            if let Some((&p, _)) = r.iter().next() {
                e.rows.insert(p, r);
            }
        }
        e
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.values()
    }

    pub(crate) fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residue of `v` after eliminating pivot columns, and the generator
    /// combination `c` with `v − residue = Σ c_g · gen_g` (empty when not
    /// tracking).
    pub(crate) fn reduce(&self, v: &Row) -> (Row, Row) {
        let mut res = v.clone();
        let mut combo = Row::new();
        for (p, row) in &self.rows {
            let Some(c) = res.get(p).cloned() else { continue };
            axpy(&mut res, &-c.clone(), row);
            if let Some(combos) = &self.combos {
                axpy(&mut combo, &c, &combos[p]);
            }
        }
        (res, combo)
    }

    /// Adds generator `gen` with vector `v`; returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: &Row, gen: usize) -> bool {
        let (mut res, combo) = self.reduce(v);
        let Some((&p, lead)) = res.iter().next() else { return false };
        let inv = Q::one() / lead;
        scale(&mut res, &inv);
        let mut own = Row::new();
        if self.combos.is_some() {
            own.insert(gen, Q::one());
            axpy(&mut own, &-Q::one(), &combo);
            scale(&mut own, &inv);
        }
        let targets: Vec<usize> =
            self.rows.iter().filter(|(_, r)| r.contains_key(&p)).map(|(&k, _)| k).collect();
        for k in targets {
            let c = self.rows[&k][&p].clone();
            let neg = -c;
            axpy(self.rows.get_mut(&k).unwrap(), &neg, &res);
            if let Some(combos) = self.combos.as_mut() {
                axpy(combos.get_mut(&k).unwrap(), &neg, &own);
            }
        }
        self.rows.insert(p, res);
        if let Some(combos) = self.combos.as_mut() {
            combos.insert(p, own);
        }
        true
    }

    /// Checks the reduced echelon invariants.
    pub(crate) fn is_reduced(&self) -> bool {
        self.rows.iter().all(|(p, r)| {
            r.iter().next().map(|(k, v)| k == p && v.is_one()).unwrap_or(false)
                && self.rows.keys().all(|q| q == p || !r.contains_key(q))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q;

    fn row(entries: &[(usize, i64)]) -> Row {
        entries.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn elimination_with_tracking() {
        let mut e = Echelon::new(true);
        let g0 = row(&[(0, 2), (1, 4)]);
        let g1 = row(&[(0, 1), (2, 1)]);
        let g2 = row(&[(1, 2), (2, -1)]);
        assert!(e.insert(&g0, 0));
        assert!(e.insert(&g1, 1));
        assert!(!e.insert(&g2, 2));
        assert_eq!(e.rank(), 2);
        assert!(e.is_reduced());

        let v = row(&[(0, 3), (1, 2), (2, 2)]);
        let (res, combo) = e.reduce(&v);
        assert!(res.is_empty());
        let mut back = Row::new();
        axpy(&mut back, combo.get(&0).unwrap_or(&q(0)), &g0);
        axpy(&mut back, combo.get(&1).unwrap_or(&q(0)), &g1);
        assert_eq!(back, v);

        let (res, _) = e.reduce(&row(&[(2, 1)]));
        assert_eq!(res.len(), 1);
        assert!(res.contains_key(&2));
    }
}

//! The table of examples of the index-pair congruences at weights 3 to 6.
//!
//! Each row reads `ζ(base) ≡ s_1 ζ(item_1), s_2 ζ(item_2), …` modulo
//! `Z_l^d + P_l`, where items marked `R` are regularized values.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    /// Printed as `±`; both signs are tested.
    Either,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Either => "±",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Item {
    pub sign: Sign,
    /// Regularized (`ζ^R`) rather than a convergent value.
    pub regularized: bool,
    pub parts: &'static [u32],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub weight: usize,
    /// The modulus is `Z_weight^depth + P_weight`.
    pub depth: usize,
    pub base: &'static [u32],
    pub items: &'static [Item],
}

const fn p(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Plus, regularized: false, parts }
}
const fn m(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Minus, regularized: false, parts }
}
const fn e(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Either, regularized: false, parts }
}
const fn pr(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Plus, regularized: true, parts }
}
const fn mr(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Minus, regularized: true, parts }
}
const fn er(parts: &'static [u32]) -> Item {
    Item { sign: Sign::Either, regularized: true, parts }
}

pub const TABLE: &[Row] = &[
    Row { weight: 3, depth: 1, base: &[2, 1], items: &[pr(&[1, 2])] },
    Row { weight: 4, depth: 1, base: &[3, 1], items: &[m(&[3, 1]), pr(&[1, 3])] },
    Row { weight: 4, depth: 2, base: &[2, 1, 1], items: &[mr(&[2, 1, 1]), er(&[1, 2, 1]), pr(&[1, 1, 2])] },
    Row { weight: 5, depth: 1, base: &[4, 1], items: &[pr(&[1, 4])] },
    Row { weight: 5, depth: 2, base: &[3, 1, 1], items: &[pr(&[1, 3, 1]), pr(&[1, 1, 3])] },
    Row { weight: 5, depth: 2, base: &[2, 2, 1], items: &[pr(&[1, 2, 2])] },
    Row {
        weight: 5,
        depth: 3,
        base: &[2, 1, 1, 1],
        items: &[pr(&[1, 2, 1, 1]), pr(&[1, 1, 2, 1]), pr(&[1, 1, 1, 2])],
    },
    Row { weight: 6, depth: 1, base: &[5, 1], items: &[m(&[5, 1]), pr(&[1, 5])] },
    Row { weight: 6, depth: 2, base: &[4, 1, 1], items: &[m(&[4, 1, 1]), er(&[1, 4, 1]), pr(&[1, 1, 4])] },
    Row { weight: 6, depth: 2, base: &[3, 2, 1], items: &[m(&[2, 3, 1]), pr(&[1, 3, 2])] },
    Row { weight: 6, depth: 2, base: &[3, 1, 2], items: &[m(&[3, 1, 2]), p(&[2, 1, 3])] },
    Row { weight: 6, depth: 2, base: &[2, 3, 1], items: &[m(&[3, 2, 1]), pr(&[1, 2, 3])] },
    Row { weight: 6, depth: 2, base: &[2, 1, 3], items: &[p(&[3, 1, 2]), m(&[2, 1, 3])] },
    Row {
        weight: 6,
        depth: 3,
        base: &[3, 1, 1, 1],
        items: &[m(&[3, 1, 1, 1]), er(&[1, 3, 1, 1]), er(&[1, 1, 3, 1]), pr(&[1, 1, 1, 3])],
    },
    Row {
        weight: 6,
        depth: 3,
        base: &[2, 2, 1, 1],
        items: &[m(&[2, 2, 1, 1]), er(&[1, 2, 2, 1]), pr(&[1, 1, 2, 2])],
    },
    Row {
        weight: 6,
        depth: 3,
        base: &[2, 1, 2, 1],
        items: &[m(&[2, 1, 2, 1]), e(&[2, 1, 1, 2]), pr(&[1, 2, 1, 2])],
    },
    Row { weight: 6, depth: 3, base: &[2, 1, 1, 2], items: &[e(&[2, 1, 2, 1]), er(&[1, 2, 1, 2])] },
    Row {
        weight: 6,
        depth: 4,
        base: &[2, 1, 1, 1, 1],
        items: &[
            m(&[2, 1, 1, 1, 1]),
            er(&[1, 2, 1, 1, 1]),
            er(&[1, 1, 2, 1, 1]),
            er(&[1, 1, 1, 2, 1]),
            pr(&[1, 1, 1, 1, 2]),
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_consistent() {
        for row in TABLE {
            let w: u32 = row.base.iter().sum();
            assert_eq!(w as usize, row.weight);
            assert_eq!(row.depth + 1, row.base.len());
            for it in row.items {
                assert_eq!(it.parts.iter().sum::<u32>(), w);
                assert_eq!(it.parts.len(), row.base.len());
                assert!(it.regularized || it.parts[0] >= 2);
            }
        }
        assert_eq!(TABLE.len(), 18);
        let either = TABLE.iter().flat_map(|r| r.items).filter(|i| i.sign == Sign::Either).count();
        assert_eq!(either, 11);
    }
}

//! Finite groups given by multiplication tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite group with the identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    labels: Vec<String>,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity (index 0) and inverses.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty group".into()));
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroupTable(format!("table is not {n}x{n}")));
        }
        if mult.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroupTable("entry out of range".into()));
        }
        for g in 0..n {
            if mult[0][g] != g || mult[g][0] != g {
                return Err(Error::InvalidGroupTable(format!(
                    "element 0 is not an identity (fails at {})",
                    labels[g]
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| mult[g][h] == 0 && mult[h][g] == 0) {
                Some(h) => inv.push(h),
                None => {
                    return Err(Error::InvalidGroupTable(format!(
                        "{} has no inverse",
                        labels[g]
                    )))
                }
            }
        }
        Ok(GroupTable { labels, mult, inv })
    }

    /// ℤ/n with labels `1, g, g^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, mult).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements as one-line permutations.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["1", "(12)", "(23)", "(13)", "(123)", "(132)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let mult = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::new(labels, mult).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian() {
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.order(), 6);
        assert_ne!(s3.mul(1, 2), s3.mul(2, 1));
        for g in 0..6 {
            assert_eq!(s3.mul(g, s3.inv(g)), 0);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = alloc::vec!["1".to_string(), "a".to_string()];
        let no_inverse = alloc::vec![alloc::vec![0, 1], alloc::vec![1, 1]];
        assert!(GroupTable::new(labels.clone(), no_inverse).is_err());
        let ragged = alloc::vec![alloc::vec![0, 1], alloc::vec![1]];
        assert!(GroupTable::new(labels, ragged).is_err());
    }
}

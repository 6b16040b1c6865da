//! Finite groups given by Cayley tables.

use crate::error::{Error, Result};

/// A verified finite group on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    /// `table[a][b]` is the index of `a * b`.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {a} has length {}, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} out of range in row {a}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for (a, row) in table.iter().enumerate() {
            if !(0..n).any(|b| row[b] == identity && table[b][a] == identity) {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(GroupTable { table, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        Self::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// Permutations of `0..n` in lexicographic order, composed as functions.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidGroup(format!("symmetric group S{n} not supported")));
        }
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..n).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    /// Dihedral group of order `2n`: elements `r^k s^f` with index `2k + f`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidGroup("dihedral group needs n >= 1".into()));
        }
        let decode = |x: usize| (x / 2, x % 2);
        let table = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let (k1, f1) = decode(a);
                        let (k2, f2) = decode(b);
                        // s r^k = r^{-k} s
                        let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2 % n) % n };
                        2 * k + (f1 ^ f2)
                    })
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    /// Quaternion group {±1, ±i, ±j, ±k}, index `2 * unit + sign`.
    pub fn quaternion() -> Result<Self> {
        // unit products: (sign, unit) for 1, i, j, k
        let prod = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (0, x),
                (x, y) if x == y => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, u) = prod(a / 2, b / 2);
                        2 * u + (s ^ (a % 2) ^ (b % 2))
                    })
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    pub fn direct_product(&self, other: &GroupTable) -> Result<Self> {
        let m = other.order();
        let n = self.order() * m;
        Self::new(
            (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| self.op(a / m, b / m) * m + other.op(a % m, b % m))
                        .collect()
                })
                .collect(),
        )
    }

    /// Parses names like `C3`, `S3`, `D4` (order 8), `V4`, `Q8`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("unknown group {name:?}"));
        match name {
            "V4" | "C2xC2" => return Self::cyclic(2)?.direct_product(&Self::cyclic(2)?),
            "Q8" => return Self::quaternion(),
            _ => {}
        }
        let (kind, num) = name.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "C" => Self::cyclic(n),
            "S" => Self::symmetric(n),
            "D" => Self::dihedral(n),
            _ => Err(bad()),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

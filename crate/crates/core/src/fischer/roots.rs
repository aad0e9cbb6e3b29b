//! Classical root systems in integer coordinates and their Fischer spaces.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{PartialTripleSystem, PtsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A(usize),
    B2,
    D(usize),
    E6,
    E7,
    E8,
    G2,
}

impl RootType {
    pub fn rank(&self) -> usize {
        match *self {
            RootType::A(n) | RootType::D(n) => n,
            RootType::B2 | RootType::G2 => 2,
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        !matches!(self, RootType::B2 | RootType::G2)
    }

    /// Number of positive roots.
    pub fn positive_count(&self) -> usize {
        match *self {
            RootType::A(n) => n * (n + 1) / 2,
            RootType::D(n) => n * (n - 1),
            RootType::B2 => 4,
            RootType::G2 => 6,
            RootType::E6 => 36,
            RootType::E7 => 63,
            RootType::E8 => 120,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A(n) => write!(f, "A{n}"),
            RootType::D(n) => write!(f, "D{n}"),
            RootType::B2 => write!(f, "B2"),
            RootType::G2 => write!(f, "G2"),
            RootType::E6 => write!(f, "E6"),
            RootType::E7 => write!(f, "E7"),
            RootType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for RootType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let bad = || RootError::Unsupported(s.to_string());
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = tail.parse().map_err(|_| bad())?;
        let t = match (head.to_ascii_uppercase().as_str(), n) {
            ("A", n) if n >= 1 => RootType::A(n),
            ("D", n) if n >= 4 => RootType::D(n),
            ("B", 2) => RootType::B2,
            ("G", 2) => RootType::G2,
            ("E", 6) => RootType::E6,
            ("E", 7) => RootType::E7,
            ("E", 8) => RootType::E8,
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported root system {0:?}")]
    Unsupported(String),
    #[error("root system {0} is not simply laced")]
    NotSimplyLaced(RootType),
}

/// Positive roots as integer vectors. Coordinates are multiplied by `scale`
/// so that E-type half-integers stay integral; the form is the standard dot
/// product of the stored vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: RootType,
    scale: i64,
    positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn label(&self) -> RootType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn ambient_dim(&self) -> usize {
        self.positive.first().map_or(0, Vec::len)
    }

    /// Sorted lexicographically; a root is positive iff its first nonzero
    /// coordinate is.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn form(&self, r: &[i64], s: &[i64]) -> i64 {
        r.iter().zip(s).map(|(a, b)| a * b).sum()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.label.is_simply_laced()
    }
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

fn pm_pairs(dim: usize, scale: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(add(&unit(dim, i, si * scale), &unit(dim, j, sj * scale)));
            }
        }
    }
    out
}

fn e8_roots() -> Vec<Vec<i64>> {
    let mut all = pm_pairs(8, 2);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            all.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    all
}

/// The positive roots of a supported type.
pub fn roots_of(label: RootType) -> RootSystem {
    let (scale, all): (i64, Vec<Vec<i64>>) = match label {
        RootType::A(n) => {
            let d = n + 1;
            let mut v = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        v.push(add(&unit(d, i, 1), &unit(d, j, -1)));
                    }
                }
            }
            (1, v)
        }
        RootType::D(n) => (1, pm_pairs(n, 1)),
        RootType::B2 => {
            let mut v = pm_pairs(2, 1);
            for i in 0..2 {
                v.push(unit(2, i, 1));
                v.push(unit(2, i, -1));
            }
            (1, v)
        }
        RootType::G2 => {
            let mut v = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        v.push(add(&unit(3, i, 1), &unit(3, j, -1)));
                    }
                }
                let long: Vec<i64> = (0..3).map(|k| if k == i { 2 } else { -1 }).collect();
                v.push(long.iter().map(|x| -x).collect());
                v.push(long);
            }
            (1, v)
        }
        RootType::E8 => (2, e8_roots()),
        RootType::E7 => {
            let w = [0, 0, 0, 0, 0, 0, 2, 2];
            (2, e8_roots().into_iter().filter(|r| dot(r, &w) == 0).collect())
        }
        RootType::E6 => {
            let w1 = [0, 0, 0, 0, 0, 0, 2, 2];
            let w2 = [0, 0, 0, 0, 0, 2, -2, 0];
            (
                2,
                e8_roots()
                    .into_iter()
                    .filter(|r| dot(r, &w1) == 0 && dot(r, &w2) == 0)
                    .collect(),
            )
        }
    };
    let mut positive: Vec<Vec<i64>> = all.into_iter().filter(|r| is_positive(r)).collect();
    positive.sort();
    positive.dedup();
    debug_assert_eq!(positive.len(), label.positive_count());
    RootSystem { label, scale, positive }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Points are the positive roots in stored order; `{r, s, t}` is a line iff
/// `t` is one of `r + s`, `r - s`, `s - r`.
pub fn gamma_of_rootsystem(r: &RootSystem) -> Result<PartialTripleSystem, RootError> {
    if !r.is_simply_laced() {
        return Err(RootError::NotSimplyLaced(r.label()));
    }
    let roots = r.positive_roots();
    let index: HashMap<&[i64], usize> = roots.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut lines = Vec::new();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if r.form(&roots[i], &roots[j]) == 0 {
                continue;
            }
            let sum = add(&roots[i], &roots[j]);
            let diff: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a - b).collect();
            let neg: Vec<i64> = diff.iter().map(|x| -x).collect();
            for t in [sum, diff, neg] {
                if let Some(&k) = index.get(t.as_slice()) {
                    if k > j {
                        lines.push([i, j, k]);
                    }
                }
            }
        }
    }
    PartialTripleSystem::new(roots.len(), lines)
        .map_err(|e: PtsError| unreachable!("root geometry violates the triple-system axioms: {e}"))
}

//! Partial triple systems, the Fischer-space axiom and the two rank-2 planes.

mod format;
mod iso;
mod roots;

use std::collections::{BTreeSet, HashSet, VecDeque};

pub use format::{PtsFormatError, PtsJson};
pub use iso::pts_isomorphic;
pub use roots::{gamma_of_rootsystem, roots_of, RootError, RootSystem, RootType};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PtsError {
    #[error("line {line:?} contains point {point} outside 0..{n}")]
    PointOutOfRange { line: [usize; 3], point: usize, n: usize },
    #[error("line {0:?} repeats a point")]
    RepeatedPoint([usize; 3]),
    #[error("lines {first:?} and {second:?} share two points")]
    SharedPair { first: [usize; 3], second: [usize; 3] },
}

/// A finite point set with 3-point lines, any two of which share at most one
/// point. Points are `0..n`; lines are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTripleSystem {
    n: usize,
    lines: Vec<[usize; 3]>,
    wedge: Vec<u32>,
}

impl PartialTripleSystem {
    /// Validates the axioms and builds the wedge table.
    pub fn new(n: usize, lines: impl IntoIterator<Item = [usize; 3]>) -> Result<Self, PtsError> {
        let mut sorted: Vec<[usize; 3]> = Vec::new();
        for line in lines {
            if let Some(&point) = line.iter().find(|&&p| p >= n) {
                return Err(PtsError::PointOutOfRange { line, point, n });
            }
            let mut l = line;
            l.sort_unstable();
            if l[0] == l[1] || l[1] == l[2] {
                return Err(PtsError::RepeatedPoint(line));
            }
            sorted.push(l);
        }
        let mut wedge = vec![NONE; n * n];
        let mut owner = vec![usize::MAX; n * n];
        for (idx, l) in sorted.iter().enumerate() {
            for (x, y, z) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                let (x, y, z) = (l[x], l[y], l[z]);
                if owner[x * n + y] != usize::MAX {
                    return Err(PtsError::SharedPair {
                        first: sorted[owner[x * n + y]],
                        second: *l,
                    });
                }
                owner[x * n + y] = idx;
                owner[y * n + x] = idx;
                wedge[x * n + y] = z as u32;
                wedge[y * n + x] = z as u32;
            }
        }
        sorted.sort_unstable();
        Ok(PartialTripleSystem {
            n,
            lines: sorted,
            wedge,
        })
    }

    /// Builds from 1-based line triples.
    pub fn from_one_based(n: usize, lines: &[[usize; 3]]) -> Result<Self, PtsError> {
        Self::new(n, lines.iter().map(|l| l.map(|p| p.wrapping_sub(1))))
    }

    pub fn n_points(&self) -> usize {
        self.n
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    /// The third point on the line through `x` and `y`.
    pub fn wedge(&self, x: usize, y: usize) -> Option<usize> {
        let w = self.wedge[x * self.n + y];
        (w != NONE).then_some(w as usize)
    }

    /// `x ∼ y`: distinct and on a common line.
    pub fn collinear(&self, x: usize, y: usize) -> bool {
        self.wedge[x * self.n + y] != NONE
    }

    pub fn neighbours(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.collinear(x, y)).collect()
    }

    pub fn non_neighbours(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| y != x && !self.collinear(x, y)).collect()
    }

    /// Lines through `x`, each reported once.
    pub fn lines_through(&self, x: usize) -> Vec<[usize; 3]> {
        self.lines.iter().filter(|l| l.contains(&x)).copied().collect()
    }

    /// Number of lines through `x`.
    pub fn degree(&self, x: usize) -> usize {
        self.neighbours(x).len() / 2
    }

    pub fn isolated_points(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.degree(x) == 0).collect()
    }

    /// Least subset containing `points` and closed under `∧`, sorted.
    pub fn subspace_closure(&self, points: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = points.iter().copied().collect();
        let mut members: Vec<usize> = set.iter().copied().collect();
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            let snapshot = members.len();
            for i in 0..snapshot {
                if let Some(z) = self.wedge(x, members[i]) {
                    if set.insert(z) {
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// The induced geometry on a subset, relabelled `0..points.len()` in the
    /// given order. Lines with a point outside the subset are dropped.
    pub fn induced(&self, points: &[usize]) -> PartialTripleSystem {
        let mut index = vec![usize::MAX; self.n];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i;
        }
        let lines = self
            .lines
            .iter()
            .filter(|l| l.iter().all(|&p| index[p] != usize::MAX))
            .map(|l| l.map(|p| index[p]));
        PartialTripleSystem::new(points.len(), lines).expect("induced geometry inherits the axioms")
    }

    /// Checks the Fischer-space axiom over every pair of intersecting lines.
    pub fn is_fischer(&self) -> FischerVerdict {
        let dual = build_p2_dual();
        let p3 = build_p3();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut saw_p3 = false;
        for x in 0..self.n {
            let through = self.lines_through(x);
            for (i, l1) in through.iter().enumerate() {
                for l2 in &through[i + 1..] {
                    let mut gens: Vec<usize> = l1.to_vec();
                    gens.extend_from_slice(l2);
                    let plane = self.subspace_closure(&gens);
                    if seen.contains(&plane) {
                        continue;
                    }
                    let induced = self.induced(&plane);
                    let ok = match plane.len() {
                        6 => pts_isomorphic(&induced, &dual).is_some(),
                        9 => {
                            let iso = pts_isomorphic(&induced, &p3).is_some();
                            saw_p3 |= iso;
                            iso
                        }
                        _ => false,
                    };
                    if !ok {
                        return FischerVerdict::NotFischer {
                            lines: (*l1, *l2),
                            plane_size: plane.len(),
                        };
                    }
                    seen.insert(plane);
                }
            }
        }
        FischerVerdict::Fischer {
            symplectic: !saw_p3,
            isolated: self.isolated_points(),
        }
    }
}

/// Outcome of [`PartialTripleSystem::is_fischer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FischerVerdict {
    /// `isolated` lists points on no line; such a space is degenerate.
    Fischer { symplectic: bool, isolated: Vec<usize> },
    NotFischer {
        lines: ([usize; 3], [usize; 3]),
        plane_size: usize,
    },
}

impl FischerVerdict {
    pub fn is_fischer(&self) -> bool {
        matches!(self, FischerVerdict::Fischer { .. })
    }

    pub fn is_symplectic(&self) -> bool {
        matches!(self, FischerVerdict::Fischer { symplectic: true, .. })
    }

    pub fn is_nondegenerate(&self) -> bool {
        matches!(self, FischerVerdict::Fischer { isolated, .. } if isolated.is_empty())
    }
}

/// Validates a point count and line list; see [`PartialTripleSystem::new`].
pub fn validate_pts(n: usize, lines: impl IntoIterator<Item = [usize; 3]>) -> Result<PartialTripleSystem, PtsError> {
    PartialTripleSystem::new(n, lines)
}

pub const P2_DUAL_LINES: [[usize; 3]; 4] = [[1, 2, 6], [2, 3, 4], [4, 5, 6], [1, 3, 5]];

pub const P3_LINES: [[usize; 3]; 12] = [
    [1, 2, 3],
    [4, 5, 6],
    [7, 8, 9],
    [1, 4, 7],
    [2, 5, 8],
    [3, 6, 9],
    [1, 5, 9],
    [3, 5, 7],
    [1, 6, 8],
    [3, 4, 8],
    [2, 6, 7],
    [2, 4, 9],
];

/// The dual affine plane of order 2: six points, four lines.
pub fn build_p2_dual() -> PartialTripleSystem {
    PartialTripleSystem::from_one_based(6, &P2_DUAL_LINES).expect("static plane")
}

/// The affine plane of order 3 with points `p1..p9` at indices `0..9`.
pub fn build_p3() -> PartialTripleSystem {
    PartialTripleSystem::from_one_based(9, &P3_LINES).expect("static plane")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(validate_pts(3, [[0, 1, 2]]).is_ok());
        assert!(matches!(
            validate_pts(4, [[0, 1, 2], [0, 1, 3]]),
            Err(PtsError::SharedPair { .. })
        ));
        assert!(matches!(validate_pts(3, [[0, 1, 1]]), Err(PtsError::RepeatedPoint(_))));
        assert!(matches!(
            validate_pts(3, [[0, 1, 3]]),
            Err(PtsError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn planes() {
        let d = build_p2_dual();
        assert_eq!((d.n_points(), d.lines().len()), (6, 4));
        assert!((0..6).all(|x| d.degree(x) == 2));
        let p = build_p3();
        assert_eq!((p.n_points(), p.lines().len()), (9, 12));
        assert!((0..9).all(|x| p.degree(x) == 4));
        assert_eq!(p.wedge(0, 1), Some(2));
        assert_eq!(p.wedge(0, 4), Some(8));
        assert!(d.is_fischer().is_symplectic());
        let v = p.is_fischer();
        assert!(v.is_fischer() && !v.is_symplectic() && v.is_nondegenerate());
    }

    #[test]
    fn closure() {
        let p = build_p3();
        assert_eq!(p.subspace_closure(&[4]), vec![4]);
        assert_eq!(p.subspace_closure(&[0, 1]), vec![0, 1, 2]);
        assert_eq!(p.subspace_closure(&[0, 1, 2, 3, 6]).len(), 9);
    }

    #[test]
    fn non_fischer_and_isolated() {
        // Two lines through a point whose closure is just five points.
        let bowtie = validate_pts(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert!(matches!(
            bowtie.is_fischer(),
            FischerVerdict::NotFischer { plane_size: 5, .. }
        ));
        let lonely = validate_pts(4, [[0, 1, 2]]).unwrap();
        assert_eq!(
            lonely.is_fischer(),
            FischerVerdict::Fischer {
                symplectic: true,
                isolated: vec![3]
            }
        );
    }

    #[test]
    fn partition_and_involutive_wedge() {
        for g in [build_p2_dual(), build_p3()] {
            for x in 0..g.n_points() {
                let a = g.neighbours(x).len();
                let b = g.non_neighbours(x).len();
                assert_eq!(1 + a + b, g.n_points());
                for y in g.neighbours(x) {
                    let z = g.wedge(x, y).unwrap();
                    assert_eq!(g.wedge(z, y), Some(x));
                }
            }
        }
    }
}

//! Reduced simplicial homology of the augmented chain complex.
//!
//! Degree `-1` is part of the chain complex (the empty face spans
//! `C_{-1}`), so `{∅}` has `β̃_{-1} = 1` and every nonempty complex has
//! `β̃_{-1} = 0`. Over a field these ranks are also the reduced cohomology
//! ranks.

use std::collections::HashMap;
use std::fmt;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::{self, SparseColumn};
use crate::subset::VertexSet;

/// Reduced Betti numbers indexed from degree `-1`, trailing zeros trimmed,
/// so equal homology means equal values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedBetti(Vec<u64>);

impl ReducedBetti {
    /// Builds from values starting at degree `-1`.
    pub fn from_values(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        ReducedBetti(values)
    }

    /// Homology of `S^d` (`d >= -1`).
    pub fn sphere(d: isize) -> Self {
        assert!(d >= -1);
        let mut v = vec![0; (d + 2) as usize];
        v[(d + 1) as usize] = 1;
        ReducedBetti(v)
    }

    pub fn zero() -> Self {
        ReducedBetti(Vec::new())
    }

    pub fn get(&self, degree: isize) -> u64 {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Values from degree `-1` upward.
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// `(degree, value)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, &v)| (k as isize - 1, v))
    }

    /// Homology after `k` suspensions: degree `d` moves to `d + k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        ReducedBetti(v)
    }

    /// `Σ (-1)^d β̃_d`.
    pub fn alternating_sum(&self) -> i64 {
        self.nonzero()
            .map(|(d, v)| {
                if d.rem_euclid(2) == 0 {
                    v as i64
                } else {
                    -(v as i64)
                }
            })
            .sum()
    }
}

impl fmt::Display for ReducedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ReducedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedBetti{self}")
    }
}

/// Sparse boundary map from `degree`-faces to `(degree-1)`-faces.
///
/// Rows and columns follow the canonical face order; the column of a face
/// `{v_0 < ... < v_k}` has entry `(-1)^p` in the row of the face with `v_p`
/// removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub rows: usize,
    pub columns: Vec<SparseColumn>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.columns.len()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i as usize][j] = v;
            }
        }
        out
    }
}

/// Faces grouped by dimension, `cells[d + 1]` holding the `d`-faces.
struct Cells<'a> {
    cells: Vec<&'a [VertexSet]>,
}

impl<'a> Cells<'a> {
    /// `faces` must be downward closed and in canonical order.
    fn new(faces: &'a [VertexSet]) -> Self {
        let mut cells = Vec::new();
        let mut start = 0;
        while start < faces.len() {
            let size = faces[start].len();
            debug_assert_eq!(size, cells.len());
            let end = start
                + faces[start..]
                    .iter()
                    .take_while(|f| f.len() == size)
                    .count();
            cells.push(&faces[start..end]);
            start = end;
        }
        Cells { cells }
    }

    fn count(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.cells.get(k))
            .map_or(0, |c| c.len())
    }

    /// Boundary of `degree`-faces, `degree >= 0`.
    fn boundary(&self, degree: usize) -> BoundaryMatrix {
        let Some(cols) = self.cells.get(degree + 1) else {
            return BoundaryMatrix {
                degree,
                rows: self.count(degree as isize - 1),
                columns: Vec::new(),
            };
        };
        let lower = self.cells[degree];
        let pos: HashMap<VertexSet, u32> = lower
            .iter()
            .enumerate()
            .map(|(k, f)| (*f, k as u32))
            .collect();
        let columns = cols
            .iter()
            .map(|face| {
                let mut col: SparseColumn = face
                    .iter()
                    .enumerate()
                    .map(|(p, v)| {
                        let row = pos[&face.without(v)];
                        (row, if p % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        BoundaryMatrix {
            degree,
            rows: lower.len(),
            columns,
        }
    }

    fn top(&self) -> isize {
        self.cells.len() as isize - 2
    }
}

/// Boundary matrices of degrees `0..=dim` of the augmented chain complex.
pub fn boundary_matrices(k: &Complex) -> Vec<BoundaryMatrix> {
    let cells = Cells::new(k.faces());
    (0..=cells.top())
        .map(|d| cells.boundary(d as usize))
        .collect()
}

/// Rational reduced Betti numbers of `k`.
pub fn reduced_betti_q(k: &Complex) -> ReducedBetti {
    reduced_betti_of_faces(k.faces())
}

/// Same as [`reduced_betti_q`] on a bare downward-closed face list in
/// canonical order; avoids building a [`Complex`] in hot loops.
pub(crate) fn reduced_betti_of_faces(faces: &[VertexSet]) -> ReducedBetti {
    let cells = Cells::new(faces);
    let top = cells.top();
    // ranks[d] = rank of the boundary out of degree d (d = 0..=top)
    let ranks: Vec<usize> = (0..=top)
        .map(|d| {
            let b = cells.boundary(d as usize);
            linalg::rank(&b.columns, b.rows)
        })
        .collect();
    let rank_of = |d: isize| -> usize {
        usize::try_from(d)
            .ok()
            .and_then(|d| ranks.get(d).copied())
            .unwrap_or(0)
    };
    let values = (-1..=top)
        .map(|d| (cells.count(d) - rank_of(d) - rank_of(d + 1)) as u64)
        .collect();
    ReducedBetti::from_values(values)
}

/// Integral reduced homology: free ranks and torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub reduced_betti: ReducedBetti,
    /// `(degree, prime-power orders)` for every degree with torsion,
    /// ascending by degree; orders ascending.
    pub torsion: Vec<(isize, Vec<u64>)>,
}

impl HomologyResult {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn torsion_in(&self, degree: isize) -> &[u64] {
        self.torsion
            .iter()
            .find(|(d, _)| *d == degree)
            .map_or(&[], |(_, t)| t.as_slice())
    }
}

/// Integral reduced homology via diagonalization of each boundary matrix.
///
/// Torsion of `H̃_d` comes from the non-unit diagonal entries of the
/// boundary out of degree `d + 1`.
pub fn integral_homology(k: &Complex) -> Result<HomologyResult> {
    let cells = Cells::new(k.faces());
    let top = cells.top();
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for d in 0..=top {
        let b = cells.boundary(d as usize);
        let diag = linalg::diagonal_form(&b.to_dense());
        ranks.push(diag.len());
        let mut orders = Vec::new();
        for entry in diag.iter().filter(|e| !num_traits::One::is_one(*e)) {
            orders.extend(
                linalg::prime_power_factors(entry)
                    .ok_or_else(|| Error::TorsionTooLarge(entry.to_string()))?,
            );
        }
        if !orders.is_empty() {
            orders.sort_unstable();
            torsion.push((d - 1, orders));
        }
    }
    let rank_of = |d: isize| -> usize {
        usize::try_from(d)
            .ok()
            .and_then(|d| ranks.get(d).copied())
            .unwrap_or(0)
    };
    let values = (-1..=top)
        .map(|d| (cells.count(d) - rank_of(d) - rank_of(d + 1)) as u64)
        .collect();
    Ok(HomologyResult {
        reduced_betti: ReducedBetti::from_values(values),
        torsion,
    })
}

/// Reduced Euler characteristic `Σ_{d >= -1} (-1)^d f_d`.
pub fn reduced_euler_characteristic(k: &Complex) -> i64 {
    k.euler_characteristic() - 1
}

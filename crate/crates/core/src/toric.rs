//! Invariants of the real toric manifold over `Bier(K)` defined by the
//! canonical mod-2 characteristic matrix.
//!
//! Row-space elements are identified with even subsets of `[m]`. The
//! rational cohomology in degree `i` has a basis indexed by `I_i(K)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::bier::{BierComplex, BierIndex};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology;
use crate::subset::VertexSet;

/// The `(m-1) × 2m` mod-2 matrix whose columns `i` and `ī` both equal
/// `e_i`, with `e_m = e_1 + ⋯ + e_{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMatrix {
    m: usize,
    /// Column `c` (0-based over `1..=2m`) as a bit pattern over rows.
    columns: Vec<u32>,
}

impl CharMatrix {
    /// The matrix alone, without checking it against a complex.
    pub fn canonical(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::MatrixTooSmall(m));
        }
        if m > crate::subset::MAX_GROUND / 2 {
            return Err(Error::BaseTooLarge(m));
        }
        let last = (1u32 << (m - 1)) - 1;
        let half: Vec<u32> = (1..=m)
            .map(|i| if i < m { 1 << (i - 1) } else { last })
            .collect();
        let columns = half.iter().chain(half.iter()).copied().collect();
        Ok(CharMatrix { m, columns })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.m - 1
    }

    /// Column of doubled-ground vertex `v` (1-based).
    pub fn column(&self, v: usize) -> u32 {
        self.columns[v - 1]
    }

    /// Entry at 1-based `row` and doubled-ground vertex `v`.
    pub fn entry(&self, row: usize, v: usize) -> bool {
        self.column(v) >> (row - 1) & 1 == 1
    }

    /// Whether the columns of `face` are linearly independent mod 2.
    pub fn independent_on(&self, face: VertexSet) -> bool {
        let mut basis: Vec<u32> = Vec::with_capacity(face.len());
        for v in face.iter() {
            let mut c = self.column(v);
            for &b in &basis {
                c = c.min(c ^ b);
            }
            if c == 0 {
                return false;
            }
            basis.push(c);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        true
    }

    /// Checks that the matrix is characteristic over `b`: every face has
    /// independent columns, and no `i` is adjacent to `ī`.
    pub fn verify(&self, b: &BierComplex) -> Result<()> {
        if b.base_m() != self.m {
            return Err(Error::GroundMismatch {
                left: self.m,
                right: b.base_m(),
            });
        }
        for &face in b.complex().faces() {
            let (plain, barred) = b.split(face);
            if !plain.is_disjoint(barred) || !self.independent_on(face) {
                return Err(Error::NotCharacteristic(face));
            }
        }
        Ok(())
    }
}

/// The canonical matrix for `b`, verified against its faces.
pub fn lambda_matrix(b: &BierComplex) -> Result<CharMatrix> {
    let lambda = CharMatrix::canonical(b.base_m())?;
    lambda.verify(b)?;
    Ok(lambda)
}

/// An element of the row space: a combination of rows and its even
/// subset of `[m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowElement {
    m: usize,
    coeffs: u32,
    subset: VertexSet,
}

impl RowElement {
    /// `coeffs` bit `k - 1` selects row `k`, for `k` in `1..m`.
    pub fn from_coeffs(m: usize, coeffs: u32) -> Self {
        debug_assert!(m >= 2 && (coeffs as u64) >> (m - 1) == 0);
        RowElement {
            m,
            coeffs,
            subset: row_to_subset(m, coeffs),
        }
    }

    pub fn coeffs(&self) -> u32 {
        self.coeffs
    }

    pub fn subset(&self) -> VertexSet {
        self.subset
    }
}

impl Add for RowElement {
    type Output = RowElement;

    fn add(self, other: RowElement) -> RowElement {
        assert_eq!(self.m, other.m);
        RowElement::from_coeffs(self.m, self.coeffs ^ other.coeffs)
    }
}

/// The selected row indices, plus `m` when their count is odd.
pub fn row_to_subset(m: usize, coeffs: u32) -> VertexSet {
    let rows = VertexSet::from_bits(coeffs as u64);
    if rows.len() % 2 == 1 {
        rows.with(m)
    } else {
        rows
    }
}

pub fn subset_to_row(m: usize, subset: VertexSet) -> Result<RowElement> {
    if subset.len() % 2 == 1 {
        return Err(Error::OddSubset(subset));
    }
    if let Some(v) = subset.max().filter(|&v| v > m) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            ground: m,
        });
    }
    let coeffs = subset.intersection(VertexSet::full(m - 1)).bits() as u32;
    Ok(RowElement::from_coeffs(m, coeffs))
}

/// `I_i(K)` for `i = 0..m-1`: size `2k` subsets lie in degree `2k` when
/// `I ∈ K` and `Ī ∈ K̂`, in degree `2k - 1` when neither holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCollections {
    m: usize,
    by_degree: BTreeMap<usize, Vec<VertexSet>>,
}

impl IndexCollections {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Members of `I_i`, canonical order; empty outside `0..m`.
    pub fn degree(&self, i: usize) -> &[VertexSet] {
        self.by_degree.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[VertexSet])> + '_ {
        self.by_degree.iter().map(|(&i, v)| (i, v.as_slice()))
    }

    /// The degree whose collection holds `s`, if any.
    pub fn degree_of(&self, s: VertexSet) -> Option<usize> {
        self.by_degree
            .iter()
            .find(|(_, members)| members.binary_search(&s).is_ok())
            .map(|(&i, _)| i)
    }
}

/// The degree of the generator indexed by `s`, if `s` indexes one.
fn generator_degree(k: &Complex, s: VertexSet) -> Option<usize> {
    if s.len() % 2 == 1 {
        return None;
    }
    match (k.is_face(s), k.dual_contains(s)) {
        (true, true) => Some(s.len()),
        (false, false) => Some(s.len() - 1),
        _ => None,
    }
}

pub fn i_collections(k: &Complex) -> Result<IndexCollections> {
    if k.is_power_set() {
        return Err(Error::DualIsVoid);
    }
    let m = k.ground_size();
    let mut by_degree: BTreeMap<usize, Vec<VertexSet>> =
        (0..m.max(1)).map(|i| (i, Vec::new())).collect();
    for s in VertexSet::all_canonical(m) {
        if let Some(i) = generator_degree(k, s) {
            by_degree
                .get_mut(&i)
                .ok_or_else(|| Error::Invariant(format!("{s} lands in degree {i} >= m")))?
                .push(s);
        }
    }
    Ok(IndexCollections { m, by_degree })
}

/// Rational Betti numbers of the real toric manifold, with the degree
/// each even subset contributes to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricBetti {
    /// `β^0, …, β^{m-1}`.
    pub betti: Vec<u64>,
    /// Every even subset of `[m]` with the single degree it contributes
    /// to, or `None` when its full subcomplex is acyclic.
    pub concentration: Vec<(VertexSet, Option<usize>)>,
}

pub fn toric_betti(k: &Complex) -> Result<ToricBetti> {
    let coll = i_collections(k)?;
    let betti = coll.iter().map(|(_, v)| v.len() as u64).collect();
    let concentration = VertexSet::all_canonical(k.ground_size())
        .into_iter()
        .filter(|s| s.len() % 2 == 0)
        .map(|s| (s, generator_degree(k, s)))
        .collect();
    Ok(ToricBetti {
        betti,
        concentration,
    })
}

/// Outcome of checking the concentration claim against integral homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcentrationCheck {
    pub checked: usize,
    /// Even subsets whose `Bier(K)|_{I ⊔ Ī}` disagrees with the claimed
    /// degree.
    pub mismatches: Vec<VertexSet>,
    /// Even subsets whose full subcomplex carries torsion.
    pub torsion: Vec<VertexSet>,
    /// Betti numbers summed from the homology of the full subcomplexes.
    pub betti: Vec<u64>,
}

impl ConcentrationCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.torsion.is_empty()
    }
}

/// Recomputes every `Bier(K)|_{I ⊔ Ī}` over the integers and compares it
/// with the combinatorial degree assignment.
pub fn check_concentration(k: &Complex, b: &BierComplex) -> Result<ConcentrationCheck> {
    let claimed = toric_betti(k)?;
    let m = k.ground_size();
    let mut check = ConcentrationCheck {
        checked: 0,
        mismatches: Vec::new(),
        torsion: Vec::new(),
        betti: vec![0; m.max(1)],
    };
    for (s, degree) in claimed.concentration {
        let h = homology::integral_homology(&b.full(BierIndex::new(s, s)))?;
        check.checked += 1;
        if !h.is_torsion_free() {
            check.torsion.push(s);
        }
        let expected = match degree {
            Some(i) => homology::ReducedBetti::sphere(i as isize - 1),
            None => homology::ReducedBetti::zero(),
        };
        if h.reduced_betti != expected {
            check.mismatches.push(s);
        }
        for (d, v) in h.reduced_betti.nonzero() {
            match check.betti.get_mut((d + 1) as usize) {
                Some(slot) => *slot += v,
                None => check.mismatches.push(s),
            }
        }
    }
    Ok(check)
}

/// One row of the h-vector comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCheckRow {
    pub k: usize,
    pub h_diff: i64,
    pub betti_diff: i64,
}

impl HCheckRow {
    pub fn holds(&self) -> bool {
        self.h_diff == self.betti_diff
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HCheckReport {
    pub h: Vec<i64>,
    pub betti: Vec<u64>,
    pub rows: Vec<HCheckRow>,
}

impl HCheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(HCheckRow::holds)
    }
}

/// Compares `h_{2k} - h_{2k-1}` of `Bier(K)` (rank `m - 1`) with
/// `β^{2k} - β^{2k-1}` for `0 ≤ k ≤ ⌊m/2⌋`.
pub fn h_corollary_check(k: &Complex, b: &BierComplex) -> Result<HCheckReport> {
    let m = k.ground_size();
    let h = b.complex().h_vector(m - 1)?;
    let betti = toric_betti(k)?.betti;
    let beta = |i: isize| -> i64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| betti.get(i).copied())
            .unwrap_or(0) as i64
    };
    let rows = (0..=m / 2)
        .map(|k| {
            let e = 2 * k as isize;
            HCheckRow {
                k,
                h_diff: h.get(e) - h.get(e - 1),
                betti_diff: beta(e) - beta(e - 1),
            }
        })
        .collect();
    Ok(HCheckReport {
        h: h.h,
        betti,
        rows,
    })
}

/// A cup product of two generators, as far as it is determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductResult {
    Zero,
    /// `±` the generator indexed by this subset.
    GeneratorUpToSign(VertexSet),
    /// Not decided by the known rules.
    Undetermined,
}

impl fmt::Display for ProductResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductResult::Zero => write!(f, "0"),
            ProductResult::GeneratorUpToSign(s) => write!(f, "±{s}"),
            ProductResult::Undetermined => write!(f, "undetermined"),
        }
    }
}

fn require_generator(k: &Complex, s: VertexSet) -> Result<usize> {
    let m = k.ground_size();
    if let Some(v) = s.max().filter(|&v| v > m) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            ground: m,
        });
    }
    if s.len() % 2 == 1 {
        return Err(Error::NotAGenerator {
            subset: s,
            reason: "odd cardinality".into(),
        });
    }
    generator_degree(k, s).ok_or_else(|| Error::NotAGenerator {
        subset: s,
        reason: if k.is_face(s) {
            "I ∈ K but Ī ∉ K̂".into()
        } else {
            "I ∉ K but Ī ∈ K̂".into()
        },
    })
}

/// Product of the generators indexed by `i_set` and `j_set`.
///
/// The empty set indexes the unit. Configurations without a rule come
/// back as [`ProductResult::Undetermined`].
pub fn cup_product(k: &Complex, i_set: VertexSet, j_set: VertexSet) -> Result<ProductResult> {
    if k.is_power_set() {
        return Err(Error::DualIsVoid);
    }
    let i = require_generator(k, i_set)?;
    let j = require_generator(k, j_set)?;
    if i_set.is_empty() {
        return Ok(ProductResult::GeneratorUpToSign(j_set));
    }
    if j_set.is_empty() {
        return Ok(ProductResult::GeneratorUpToSign(i_set));
    }
    let common = i_set.intersection(j_set).len();
    Ok(match (i % 2 == 0, j % 2 == 0) {
        (true, true) => {
            let union = i_set.union(j_set);
            if common == 0 && generator_degree(k, union) == Some(i + j) {
                ProductResult::GeneratorUpToSign(union)
            } else {
                ProductResult::Zero
            }
        }
        (false, false) if common != 1 => ProductResult::Zero,
        (false, false) => ProductResult::Undetermined,
        _ if common != 0 => ProductResult::Zero,
        _ => ProductResult::Undetermined,
    })
}

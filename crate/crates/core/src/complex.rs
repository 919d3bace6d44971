//! Finite abstract simplicial complexes with ghost vertices.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{VertexSet, MAX_GROUND};

/// A downward-closed family of subsets of `{1, ..., ground_size}` that
/// always contains the empty face.
///
/// The ground size is stored independently of the faces: a vertex `v` with
/// `{v}` absent is a ghost. Faces are kept in canonical order, so two
/// complexes with the same ground size and face family compare equal and
/// serialize identically.
#[derive(Clone)]
pub struct Complex {
    ground: usize,
    faces: Vec<VertexSet>,
    index: HashSet<VertexSet>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.faces == other.faces
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("ground", &self.ground)
            .field("facets", &self.facets())
            .finish()
    }
}

/// Face counts by dimension, `f[i]` = number of `i`-dimensional faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

/// h-vector `(h_0, ..., h_r)` for an explicit rank `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub r: usize,
    pub h: Vec<i64>,
}

impl HVector {
    /// `h_i`, zero outside `0..=r`.
    pub fn get(&self, i: isize) -> i64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.h.get(i).copied())
            .unwrap_or(0)
    }
}

fn check_ground(m: usize) -> Result<()> {
    if m > MAX_GROUND {
        return Err(Error::GroundTooLarge(m));
    }
    Ok(())
}

fn check_range(s: VertexSet, m: usize) -> Result<()> {
    match s.max() {
        Some(v) if v > m => Err(Error::VertexOutOfRange {
            vertex: v,
            ground: m,
        }),
        _ => Ok(()),
    }
}

impl Complex {
    /// Downward closure of `generators` together with the empty face.
    pub fn new(m: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground(m)?;
        let mut gens: Vec<VertexSet> = generators.into_iter().collect();
        for &g in &gens {
            check_range(g, m)?;
        }
        // Largest first, so dominated generators are skipped cheaply.
        gens.sort_by(|a, b| b.cmp(a));
        let mut index = HashSet::new();
        index.insert(VertexSet::EMPTY);
        for g in gens {
            if index.contains(&g) {
                continue;
            }
            index.extend(g.subsets());
        }
        Ok(Self::from_index(m, index))
    }

    /// Builds a complex from 1-based facet lists, reporting the first
    /// out-of-range vertex.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_ground(m)?;
        let mut gens = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut s = VertexSet::EMPTY;
            for &v in facet {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        ground: m,
                    });
                }
                s = s.with(v);
            }
            gens.push(s);
        }
        Self::new(m, gens)
    }

    /// The empty complex `{∅}` on `m` ghost vertices.
    pub fn empty(m: usize) -> Self {
        assert!(m <= MAX_GROUND);
        Self::from_index(m, HashSet::from([VertexSet::EMPTY]))
    }

    /// The full simplex `2^[m]`.
    pub fn simplex(m: usize) -> Self {
        assert!(m <= MAX_GROUND);
        Self::from_index(m, VertexSet::full(m).subsets().collect())
    }

    /// The `r`-skeleton of the `(m-1)`-simplex: all subsets of size `<= r+1`.
    pub fn skeleton(m: usize, r: isize) -> Result<Self> {
        check_ground(m)?;
        let max = m as isize - 1;
        if r < -1 || r > max {
            return Err(Error::SkeletonRange { m, r, max });
        }
        let limit = (r + 1) as usize;
        Ok(Self::from_index(
            m,
            VertexSet::full(m)
                .subsets()
                .filter(|s| s.len() <= limit)
                .collect(),
        ))
    }

    /// Trusted constructor from an already downward-closed family.
    pub(crate) fn from_index(ground: usize, index: HashSet<VertexSet>) -> Self {
        debug_assert!(index.contains(&VertexSet::EMPTY));
        let mut faces: Vec<VertexSet> = index.iter().copied().collect();
        faces.sort_unstable();
        Complex {
            ground,
            faces,
            index,
        }
    }

    /// Trusted constructor from a downward-closed family in any order.
    pub(crate) fn from_faces(ground: usize, faces: impl IntoIterator<Item = VertexSet>) -> Self {
        Self::from_index(ground, faces.into_iter().collect())
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    /// All faces in canonical order, starting with `∅`.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.index.contains(&s)
    }

    /// Dimension; `{∅}` has dimension `-1`.
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    /// Non-ghost vertices.
    pub fn vertices(&self) -> VertexSet {
        self.faces
            .iter()
            .take_while(|f| f.len() <= 1)
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    pub fn is_power_set(&self) -> bool {
        self.is_face(VertexSet::full(self.ground))
    }

    /// Inclusion-maximal faces in canonical order.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                (1..=self.ground)
                    .filter(|&v| !f.contains(v))
                    .all(|v| !self.index.contains(&f.with(v)))
            })
            .collect()
    }

    /// `K|_I`: faces contained in `subset`. The ground size is unchanged.
    pub fn full_subcomplex(&self, subset: VertexSet) -> Complex {
        Self::from_index(
            self.ground,
            self.faces
                .iter()
                .copied()
                .filter(|f| f.is_subset(subset))
                .collect(),
        )
    }

    /// `Lk(s, K)`; the vertices of `s` become ghosts.
    pub fn link(&self, s: VertexSet) -> Result<Complex> {
        if !self.is_face(s) {
            return Err(Error::NotAFace(s));
        }
        Ok(Self::from_index(
            self.ground,
            self.faces
                .iter()
                .copied()
                .filter(|&t| t.is_disjoint(s) && self.index.contains(&t.union(s)))
                .collect(),
        ))
    }

    /// Simplicial join; `other`'s vertices are relabelled to
    /// `m_K + 1 ..= m_K + m_L`.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let ground = self.ground + other.ground;
        check_ground(ground)?;
        let mut index = HashSet::with_capacity(self.faces.len() * other.faces.len());
        for &s in &self.faces {
            for &t in &other.faces {
                index.insert(s.union(t.shift_up(self.ground)));
            }
        }
        Ok(Self::from_index(ground, index))
    }

    /// `k`-fold suspension. Each fold appends two non-adjacent apex
    /// vertices `m+1` and `m+2`, where `m` is the current ground size.
    pub fn suspension(&self, k: usize) -> Result<Complex> {
        check_ground(self.ground + 2 * k)?;
        let mut cur = self.clone();
        for _ in 0..k {
            let m = cur.ground;
            let (a, b) = (VertexSet::singleton(m + 1), VertexSet::singleton(m + 2));
            let mut index = HashSet::with_capacity(cur.faces.len() * 3);
            for &f in &cur.faces {
                index.insert(f);
                index.insert(f.union(a));
                index.insert(f.union(b));
            }
            cur = Self::from_index(m + 2, index);
        }
        Ok(cur)
    }

    /// Combinatorial Alexander dual `{σ : [m] ∖ σ ∉ K}`, on the same labels.
    pub fn alexander_dual(&self) -> Result<Complex> {
        if self.is_power_set() {
            return Err(Error::DualIsVoid);
        }
        let m = self.ground;
        Ok(Self::from_index(
            m,
            VertexSet::full(m)
                .subsets()
                .filter(|s| !self.index.contains(&s.complement(m)))
                .collect(),
        ))
    }

    /// `σ̄ ∈ K̂`, decided without materializing the dual.
    pub fn dual_contains(&self, s: VertexSet) -> bool {
        !self.index.contains(&s.complement(self.ground))
    }

    pub fn f_vector(&self) -> FVector {
        let dim = self.dim();
        let mut f = vec![0u64; (dim + 1).max(0) as usize];
        for face in &self.faces {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        FVector(f)
    }

    /// h-vector from `Σ h_i t^{r-i} = Σ_k f_{k-1} (t-1)^{r-k}` with `f_{-1} = 1`.
    pub fn h_vector(&self, r: usize) -> Result<HVector> {
        let needed = (self.dim() + 1) as usize;
        if r < needed {
            return Err(Error::HVectorRank { r, needed });
        }
        let f = self.f_vector().0;
        let f_shift = |k: usize| -> i64 {
            if k == 0 {
                1
            } else {
                f.get(k - 1).copied().unwrap_or(0) as i64
            }
        };
        let h = (0..=r)
            .map(|i| {
                (0..=i)
                    .map(|k| {
                        let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(r - k, i - k) as i64 * f_shift(k)
                    })
                    .sum()
            })
            .collect();
        Ok(HVector { r, h })
    }

    /// Non-reduced Euler characteristic `Σ (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Same face family on a larger ground set (extra ghosts).
    pub fn with_ground(&self, ground: usize) -> Result<Complex> {
        check_ground(ground)?;
        if let Some(v) = self.vertices().max() {
            if v > ground {
                return Err(Error::VertexOutOfRange { vertex: v, ground });
            }
        }
        let mut out = self.clone();
        out.ground = ground;
        Ok(out)
    }

    /// Relabels vertices through `map` onto a new ground set. `map` must be
    /// injective on the vertices that occur in faces.
    pub fn relabel(&self, ground: usize, map: impl Fn(usize) -> usize) -> Result<Complex> {
        check_ground(ground)?;
        let mut index = HashSet::with_capacity(self.faces.len());
        for &f in &self.faces {
            let mut g = VertexSet::EMPTY;
            for v in f.iter() {
                let w = map(v);
                if w == 0 || w > ground {
                    return Err(Error::VertexOutOfRange { vertex: w, ground });
                }
                g = g.with(w);
            }
            index.insert(g);
        }
        Ok(Self::from_index(ground, index))
    }

    /// `K|_I` with the members of `I` renumbered `1..=|I|` in ascending
    /// order.
    pub fn compress(&self, subset: VertexSet) -> Complex {
        let members = subset.to_vec();
        let mut index = HashSet::new();
        for &f in &self.faces {
            if f.is_subset(subset) {
                index.insert(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| f.contains(v))
                        .map(|(k, _)| k + 1)
                        .collect(),
                );
            }
        }
        Self::from_index(members.len(), index)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

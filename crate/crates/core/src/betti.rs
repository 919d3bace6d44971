//! Bigraded Betti numbers `β^{-i,2j}`.
//!
//! Three independent routes: Hochster's formula over every full
//! subcomplex of an arbitrary complex, the closed formula for Bier spheres
//! in terms of `K` and links in `K`, and a binomial evaluator for Bier
//! spheres of simplex skeletons.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::classify::{Classifier, HomotopyClass};
use crate::complex::{binomial, Complex};
use crate::error::{Error, Result};
use crate::homology::{self, ReducedBetti};
use crate::subset::VertexSet;

/// Default largest ground size for subset-enumerating routines.
pub const DEFAULT_CAP: usize = 18;

/// Sparse table of nonzero `β^{-i,2j}`, keyed by `(i, j)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new();
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Adds `value` at `(i, j)`; zero additions leave no entry behind.
    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Entrywise sum.
    pub fn merge(mut self, other: BettiTable) -> BettiTable {
        for ((i, j), v) in other.entries {
            self.add(i, j, v);
        }
        self
    }

    /// Nonzero entries ascending by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn max_j(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.1).max()
    }

    /// `(i, j, ours, theirs)` wherever the two tables differ.
    pub fn differences(&self, other: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
        let mut keys: Vec<(usize, usize)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

/// The collections `F⁺_k` and `F⁻_k` for every even `k` in `0..=2m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FClasses {
    /// `k ↦ {σ : |σ| = k/2, σ ∈ K, σ̄ ∈ K̂}`.
    pub plus: BTreeMap<usize, Vec<VertexSet>>,
    /// `k ↦ {τ : |τ| = k/2, τ ∉ K, τ̄ ∉ K̂}`.
    pub minus: BTreeMap<usize, Vec<VertexSet>>,
}

impl FClasses {
    pub fn plus_count(&self, k: usize) -> usize {
        self.plus.get(&k).map_or(0, Vec::len)
    }

    pub fn minus_count(&self, k: usize) -> usize {
        self.minus.get(&k).map_or(0, Vec::len)
    }
}

pub fn f_classes(k: &Complex) -> Result<FClasses> {
    if k.is_power_set() {
        return Err(Error::DualIsVoid);
    }
    let m = k.ground_size();
    let mut plus: BTreeMap<usize, Vec<VertexSet>> = (0..=m).map(|h| (2 * h, Vec::new())).collect();
    let mut minus = plus.clone();
    for s in VertexSet::all_canonical(m) {
        let key = 2 * s.len();
        match (k.is_face(s), k.dual_contains(s)) {
            (true, true) => plus.get_mut(&key).expect("all even keys").push(s),
            (false, false) => minus.get_mut(&key).expect("all even keys").push(s),
            _ => {}
        }
    }
    Ok(FClasses { plus, minus })
}

fn check_cap(ground: usize, cap: usize) -> Result<()> {
    if ground > cap {
        return Err(Error::CapExceeded {
            ground,
            cap,
            calls: 1u128 << ground,
        });
    }
    Ok(())
}

/// `(|W|, degree) ↦ Σ_{|W|} β̃_degree(G|_W)` over every `W ⊆ [n]`.
fn restriction_sums(g: &Complex, cap: usize) -> Result<BTreeMap<(usize, isize), u64>> {
    let n = g.ground_size();
    check_cap(n, cap)?;
    let faces = g.faces();
    let sums = (0..1u64 << n)
        .into_par_iter()
        .fold(
            BTreeMap::new,
            |mut acc: BTreeMap<(usize, isize), u64>, bits| {
                let w = VertexSet::from_bits(bits);
                let restricted: Vec<VertexSet> =
                    faces.iter().copied().filter(|f| f.is_subset(w)).collect();
                for (d, v) in homology::reduced_betti_of_faces(&restricted).nonzero() {
                    *acc.entry((w.len(), d)).or_insert(0) += v;
                }
                acc
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(sums)
}

/// Hochster's formula `β^{-i,2j} = Σ_{|W|=j} β̃^{j-i-1}(G|_W)`, ghosts
/// included in `W`. Refuses grounds above `cap`.
pub fn hochster_table(g: &Complex, cap: usize) -> Result<BettiTable> {
    Ok(BettiTable::from_entries(
        restriction_sums(g, cap)?
            .into_iter()
            .map(|((j, d), v)| ((j - (d + 1) as usize, j), v)),
    ))
}

/// Ranks of `H^p` of the real moment-angle complex, `p = 0..=n`.
pub fn rz_cohomology_ranks(g: &Complex, cap: usize) -> Result<Vec<u64>> {
    let mut ranks = vec![0u64; g.ground_size() + 1];
    for ((_, d), v) in restriction_sums(g, cap)? {
        ranks[(d + 1) as usize] += v;
    }
    Ok(ranks)
}

/// How the closed formula obtains the links it sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LinkMode {
    /// Take links from the classifier.
    #[default]
    Reuse,
    /// Rebuild each link from its defining formula, bypassing the
    /// classifier.
    Recompute,
}

/// Betti table of `Bier(K)` from the closed formula.
pub fn bier_betti_closed(k: &Complex) -> Result<BettiTable> {
    bier_betti_closed_with(k, LinkMode::Reuse)
}

pub fn bier_betti_closed_with(k: &Complex, mode: LinkMode) -> Result<BettiTable> {
    let classes = f_classes(k)?;
    let classifier = Classifier::new(k)?;
    let m = k.ground_size();
    let mut table = BettiTable::new();
    for (&key, members) in &classes.plus {
        table.add(key / 2, key, members.len() as u64);
    }
    for (&key, members) in &classes.minus {
        table.add(key / 2 + 1, key, members.len() as u64);
    }

    // Comparable pairs with a link term: J ⊊ I with J ∈ K, or I ⊊ J with
    // Ī ∈ K̂. The outer set is the larger one.
    let outer: Vec<VertexSet> = VertexSet::full(m).subsets().collect();
    let links = outer
        .par_iter()
        .map(|&big| {
            let mut part = BettiTable::new();
            for small in big.subsets().filter(|s| *s != big) {
                let j = big.len() + small.len();
                if classifier.in_complex(small) {
                    let betti = link_betti(&classifier, big, small, mode, true);
                    for (d, v) in betti.nonzero() {
                        part.add((big.len() as isize - d - 1) as usize, j, v);
                    }
                }
                if classifier.in_dual(small) {
                    let betti = link_betti(&classifier, small, big, mode, false);
                    for (d, v) in betti.nonzero() {
                        part.add((big.len() as isize - d - 1) as usize, j, v);
                    }
                }
            }
            part
        })
        .reduce(BettiTable::new, BettiTable::merge);
    Ok(table.merge(links))
}

/// Betti numbers of the link for the pair `(I, J)`; `plain` selects
/// `Lk(J, K|_I)` (needs `J ⊊ I`) over `Lk(Ī, K̂|_J̄)` (needs `I ⊊ J`).
fn link_betti(
    classifier: &Classifier<'_>,
    i: VertexSet,
    j: VertexSet,
    mode: LinkMode,
    plain: bool,
) -> ReducedBetti {
    match mode {
        LinkMode::Reuse => match classifier.classify(i, j) {
            HomotopyClass::SuspendedLink { link, .. } => homology::reduced_betti_q(&link),
            other => unreachable!("comparable pair classified as {other:?}"),
        },
        LinkMode::Recompute => {
            let k = classifier.complex();
            let m = k.ground_size();
            // Lk(A, X|_B) = {τ ⊆ B ∖ A : τ ∪ A ∈ X}.
            let (a, b, member): (VertexSet, VertexSet, Box<dyn Fn(VertexSet) -> bool>) = if plain {
                (j, i, Box::new(|s| k.is_face(s)))
            } else {
                (i, j, Box::new(|s| k.dual_contains(s)))
            };
            let mut faces: Vec<VertexSet> = b
                .difference(a)
                .subsets()
                .filter(|t| member(t.union(a)))
                .collect();
            faces.sort_unstable();
            homology::reduced_betti_q(&Complex::from_faces(m, faces))
        }
    }
}

/// Admissible skeleton ranks for the binomial evaluator:
/// `-1 ..= ⌊(m-1)/2⌋ - 1`.
pub fn skeleton_rank_range(m: usize) -> (isize, isize) {
    (-1, (m as isize - 1).div_euclid(2) - 1)
}

/// Betti table of `Bier(Δ^{m-1}_r)` from binomial sums alone.
///
/// Cases that land on the same bidegree are added.
pub fn skeleton_bier_betti(m: usize, r: isize) -> Result<BettiTable> {
    let (lo, hi) = skeleton_rank_range(m);
    if r < lo || r > hi {
        return Err(Error::SkeletonRange { m, r, max: hi });
    }
    let c = |n: isize, k: isize| -> u64 {
        if n < 0 || k < 0 {
            0
        } else {
            binomial(n as usize, k as usize)
        }
    };
    let mi = m as isize;
    let mut table = BettiTable::new();
    for i in 0..=mi + 1 {
        // Sphere terms.
        if i <= r + 1 {
            table.add(i as usize, 2 * i as usize, c(mi, i));
        }
        if i >= mi - r && 2 * i - 2 >= 0 {
            table.add(i as usize, (2 * i - 2) as usize, c(mi, i - 1));
        }
    }
    for j in 0..=2 * mi {
        // Plain links: sizes b = |J| ≤ r+1 < a = |I|.
        let i = j - r - 1;
        if i >= 0 {
            let mut total = 0;
            for b in 0..=r + 1 {
                let a = j - b;
                if a > r + 1 && a <= mi && b < a {
                    total += c(mi, a) * c(a, b) * c(a - b - 1, r - b + 1);
                }
            }
            table.add(i as usize, j as usize, total);
        }
        // Barred links: sizes a = |I| ≤ m-r-2 < b = |J|.
        let i = j - mi + r + 2;
        if i >= 0 {
            let mut total = 0;
            for a in 0..=mi - r - 2 {
                let b = j - a;
                if b > mi - r - 2 && b <= mi && a < b {
                    total += c(mi, b) * c(b, a) * c(b - a - 1, mi - r - 2 - a);
                }
            }
            table.add(i as usize, j as usize, total);
        }
    }
    Ok(table)
}

//! Deleted joins, Bier spheres and their full subcomplexes.
//!
//! A complex on the doubled ground set `[m] ⊔ [m̄]` is an ordinary
//! [`Complex`] on `2m` vertices: plain vertex `i` is `i`, barred vertex `ī`
//! is `m + i`.

use std::collections::HashSet;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology;
use crate::subset::{VertexSet, MAX_GROUND};

/// A complex on `[m] ⊔ [m̄]` with no face containing both `i` and `ī`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BierComplex {
    base_m: usize,
    complex: Complex,
}

/// Selects the full subcomplex on `I ⊔ J̄`; `barred` holds `J` unbarred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BierIndex {
    pub plain: VertexSet,
    pub barred: VertexSet,
}

impl BierIndex {
    pub fn new(plain: VertexSet, barred: VertexSet) -> Self {
        BierIndex { plain, barred }
    }

    /// `I ⊔ J̄` as a subset of the doubled ground set.
    pub fn doubled(self, m: usize) -> VertexSet {
        self.plain.union(self.barred.shift_up(m))
    }
}

impl BierComplex {
    /// Wraps a complex on `2m` vertices, checking the deleted-join condition.
    pub fn from_complex(base_m: usize, complex: Complex) -> Result<Self> {
        if complex.ground_size() != 2 * base_m {
            return Err(Error::GroundMismatch {
                left: complex.ground_size(),
                right: 2 * base_m,
            });
        }
        let b = BierComplex { base_m, complex };
        b.check_no_adjacent_pair()?;
        Ok(b)
    }

    pub fn base_m(&self) -> usize {
        self.base_m
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        self.complex
    }

    /// Plain part `σ ∩ [m]` and barred part (unbarred) of a face.
    pub fn split(&self, face: VertexSet) -> (VertexSet, VertexSet) {
        let m = self.base_m;
        (face.intersection(VertexSet::full(m)), face.shift_down(m, m))
    }

    /// `Bier(K)|_{I ⊔ J̄}`, kept on the full doubled ground set.
    pub fn full(&self, idx: BierIndex) -> Complex {
        self.complex.full_subcomplex(idx.doubled(self.base_m))
    }

    /// The same face family with plain and barred labels exchanged.
    pub fn swap_sides(&self) -> BierComplex {
        let m = self.base_m;
        let complex = self
            .complex
            .relabel(2 * m, |v| if v <= m { v + m } else { v - m })
            .expect("swap stays in range");
        BierComplex { base_m: m, complex }
    }

    fn check_no_adjacent_pair(&self) -> Result<()> {
        for &f in self.complex.faces() {
            let (p, b) = self.split(f);
            if !p.is_disjoint(b) {
                return Err(Error::Invariant(format!(
                    "face {f} contains a vertex together with its barred copy"
                )));
            }
        }
        Ok(())
    }
}

fn check_base(m: usize) -> Result<()> {
    if 2 * m > MAX_GROUND {
        return Err(Error::BaseTooLarge(m));
    }
    Ok(())
}

/// `K ∗_Δ L = {σ ⊔ τ̄ : σ ∈ K, τ ∈ L, σ ∩ τ = ∅}`, with `L` read on `[m̄]`.
pub fn deleted_join(k: &Complex, l: &Complex) -> Result<BierComplex> {
    let m = k.ground_size();
    if l.ground_size() != m {
        return Err(Error::GroundMismatch {
            left: m,
            right: l.ground_size(),
        });
    }
    check_base(m)?;
    let mut index = HashSet::new();
    for &s in k.faces() {
        for &t in l.faces() {
            if s.is_disjoint(t) {
                index.insert(s.union(t.shift_up(m)));
            }
        }
    }
    Ok(BierComplex {
        base_m: m,
        complex: Complex::from_index(2 * m, index),
    })
}

/// `Bier(K) = K ∗_Δ K̂`.
///
/// The result is checked to be pure of dimension `m - 2` with the reduced
/// Euler characteristic of `S^{m-2}`.
pub fn bier_sphere(k: &Complex) -> Result<BierComplex> {
    let m = k.ground_size();
    check_base(m)?;
    if k.is_power_set() {
        return Err(Error::DualIsVoid);
    }
    // Enumerate τ among subsets of [m] ∖ σ directly instead of building K̂.
    let mut index = HashSet::new();
    for &s in k.faces() {
        for t in s.complement(m).subsets() {
            if k.dual_contains(t) {
                index.insert(s.union(t.shift_up(m)));
            }
        }
    }
    let b = BierComplex {
        base_m: m,
        complex: Complex::from_index(2 * m, index),
    };
    let c = &b.complex;
    let expected_dim = m as isize - 2;
    if c.dim() != expected_dim || c.facets().iter().any(|f| f.len() != m - 1) {
        return Err(Error::Invariant(format!(
            "Bier sphere of {k:?} is not pure of dimension {expected_dim}"
        )));
    }
    let chi = homology::reduced_euler_characteristic(c);
    let sphere_chi = if expected_dim.rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    if chi != sphere_chi {
        return Err(Error::Invariant(format!(
            "Bier sphere of {k:?} has reduced Euler characteristic {chi}"
        )));
    }
    Ok(b)
}

/// `A_(K,L) = K ∪ {σ ∪ {v} : σ ∈ L̂}` with the new vertex `v = m + 1`.
///
/// Requires `L̂ ⊆ K`. When `L` is the full power set, `L̂` is void and the
/// result is `K` with `v` as a ghost.
pub fn build_a(k: &Complex, l: &Complex) -> Result<Complex> {
    let m = k.ground_size();
    if l.ground_size() != m {
        return Err(Error::GroundMismatch {
            left: m,
            right: l.ground_size(),
        });
    }
    if m + 1 > MAX_GROUND {
        return Err(Error::GroundTooLarge(m + 1));
    }
    let mut index: HashSet<VertexSet> = k.faces().iter().copied().collect();
    if !l.is_power_set() {
        let apex = VertexSet::singleton(m + 1);
        for s in VertexSet::full(m).subsets() {
            if l.dual_contains(s) {
                if !k.is_face(s) {
                    return Err(Error::DualNotContained(s));
                }
                index.insert(s.union(apex));
            }
        }
    }
    Ok(Complex::from_index(m + 1, index))
}

/// The cover `{U_σ : σ ∈ K|_{I∩J}}` of `Bier(K)|_{I ⊔ J̄}` with
/// `U_σ = K|_{(I∖J) ∪ σ} ∗ K̂|_{J̄ ∖ σ̄}`, each returned on the doubled
/// ground set.
pub fn cover_pieces(k: &Complex, idx: BierIndex) -> Result<Vec<(VertexSet, Complex)>> {
    let m = k.ground_size();
    check_base(m)?;
    if k.is_power_set() {
        return Err(Error::DualIsVoid);
    }
    let (i, j) = (idx.plain, idx.barred);
    let common = i.intersection(j);
    let only_i = i.difference(j);
    let mut sigmas: Vec<VertexSet> = common.subsets().filter(|s| k.is_face(*s)).collect();
    sigmas.sort();
    Ok(sigmas
        .into_iter()
        .map(|sigma| {
            let plain_side = only_i.union(sigma);
            let barred_side = j.difference(sigma);
            let plain: Vec<VertexSet> = k
                .faces()
                .iter()
                .copied()
                .filter(|f| f.is_subset(plain_side))
                .collect();
            let barred: Vec<VertexSet> = barred_side
                .subsets()
                .filter(|t| k.dual_contains(*t))
                .collect();
            let mut index = HashSet::with_capacity(plain.len() * barred.len());
            for &s in &plain {
                for &t in &barred {
                    index.insert(s.union(t.shift_up(m)));
                }
            }
            (sigma, Complex::from_index(2 * m, index))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::of(v)
    }

    fn m4_example() -> Complex {
        Complex::from_facets(4, &[vec![1, 2, 3], vec![4]]).unwrap()
    }

    fn interval() -> Complex {
        Complex::from_facets(3, &[vec![1, 2]]).unwrap()
    }

    #[test]
    fn deleted_join_examples() {
        let k = interval();
        let b = deleted_join(&k, &k).unwrap();
        // 1-2, 2-1̄(4), 1̄-2̄(5), 2̄-1
        assert_eq!(
            b.complex().facets(),
            vec![vs(&[1, 2]), vs(&[1, 5]), vs(&[2, 4]), vs(&[4, 5])]
        );
        let e = deleted_join(&Complex::empty(1), &Complex::empty(1)).unwrap();
        assert_eq!(e.complex(), &Complex::empty(2));
        let p = Complex::from_facets(1, &[vec![1]]).unwrap();
        let d = deleted_join(&p, &Complex::empty(1)).unwrap();
        assert_eq!(d.complex().faces(), &[VertexSet::EMPTY, vs(&[1])]);
        assert!(matches!(
            deleted_join(&p, &Complex::empty(2)),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn bier_sphere_examples() {
        let b = bier_sphere(&m4_example()).unwrap();
        let c = b.complex();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.vertices().len(), 7);
        assert!(!c.vertices().contains(8));
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(c.facets().len(), 10);

        let tiny = bier_sphere(&Complex::empty(1)).unwrap();
        assert_eq!(tiny.complex(), &Complex::empty(2));

        let sq = bier_sphere(&interval()).unwrap();
        assert_eq!(sq, deleted_join(&interval(), &interval()).unwrap());
        assert_eq!(bier_sphere(&Complex::simplex(2)), Err(Error::DualIsVoid));
    }

    #[test]
    fn full_subcomplex_examples() {
        let b = bier_sphere(&m4_example()).unwrap();
        let sq = b.full(BierIndex::new(vs(&[1, 2]), vs(&[1, 2])));
        assert_eq!(
            sq.facets(),
            vec![vs(&[1, 2]), vs(&[1, 6]), vs(&[2, 5]), vs(&[5, 6])]
        );
        let e = b.full(BierIndex::new(VertexSet::EMPTY, VertexSet::EMPTY));
        assert_eq!(e, Complex::empty(8));
        // I = {1,2,4}, J = {1,4}: K|_I = edge 12 + point 4, K̂|_{J̄} = points 1̄.
        let t = b.full(BierIndex::new(vs(&[1, 2, 4]), vs(&[1, 4])));
        assert_eq!(t.facets(), vec![vs(&[1, 2]), vs(&[2, 5]), vs(&[4, 5])]);
        assert!(crate::homology::reduced_betti_q(&t).is_zero());
    }

    #[test]
    fn build_a_example() {
        let k = m4_example();
        let l = Complex::from_facets(
            4,
            &[vec![1, 2], vec![2, 3], vec![1, 3], vec![2, 4], vec![3, 4]],
        )
        .unwrap();
        assert_eq!(
            l.alexander_dual().unwrap().facets(),
            vec![vs(&[1]), vs(&[4]), vs(&[2, 3])]
        );
        let a = build_a(&k, &l).unwrap();
        let extra: Vec<VertexSet> = a
            .faces()
            .iter()
            .copied()
            .filter(|f| !k.is_face(*f))
            .collect();
        assert_eq!(
            extra,
            vec![
                vs(&[5]),
                vs(&[1, 5]),
                vs(&[2, 5]),
                vs(&[3, 5]),
                vs(&[4, 5]),
                vs(&[2, 3, 5])
            ]
        );
        assert_eq!(a.full_subcomplex(VertexSet::full(4)).faces(), k.faces());

        let al = build_a(&l, &k).unwrap();
        assert_eq!(a.alexander_dual().unwrap(), al);
    }

    #[test]
    fn build_a_power_set_gives_ghost_apex() {
        let k = m4_example();
        let a = build_a(&k, &Complex::simplex(4)).unwrap();
        assert_eq!(a.ground_size(), 5);
        assert_eq!(a.faces(), k.faces());
        // L = {∅}: L̂ = all proper subsets, not inside K
        assert!(matches!(
            build_a(&k, &Complex::empty(4)),
            Err(Error::DualNotContained(_))
        ));
    }

    #[test]
    fn cover_of_the_square() {
        let k = m4_example();
        let idx = BierIndex::new(vs(&[1, 2]), vs(&[1, 2]));
        let pieces = cover_pieces(&k, idx).unwrap();
        let sigmas: Vec<VertexSet> = pieces.iter().map(|p| p.0).collect();
        assert_eq!(
            sigmas,
            vec![VertexSet::EMPTY, vs(&[1]), vs(&[2]), vs(&[1, 2])]
        );
        let mut edges: Vec<Vec<VertexSet>> = pieces.iter().map(|p| p.1.facets()).collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                vec![vs(&[1, 2])],
                vec![vs(&[1, 6])],
                vec![vs(&[2, 5])],
                vec![vs(&[5, 6])]
            ]
        );
        let disjoint = BierIndex::new(vs(&[1, 2]), vs(&[3]));
        let pieces = cover_pieces(&k, disjoint).unwrap();
        assert_eq!(pieces.len(), 1);
        let b = bier_sphere(&k).unwrap();
        assert_eq!(pieces[0].1, b.full(disjoint));
    }
}

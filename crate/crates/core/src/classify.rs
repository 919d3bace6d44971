//! Homotopy type of every full subcomplex `Bier(K)|_{I ⊔ J̄}` from the
//! face structure of `K` alone.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology::{self, ReducedBetti};
use crate::subset::VertexSet;

/// Which side of the doubled ground set a link lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Plain,
    Barred,
}

/// The five possible shapes of a full subcomplex of a Bier sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyClass {
    /// Boundary of the `rank`-dimensional cross-polytope, an
    /// `S^{rank-1}`.
    CrossPolytopeBoundary {
        rank: usize,
    },
    /// Homotopy equivalent to `S^{rank-2}`.
    SphereCodimTwo {
        rank: usize,
    },
    /// `Σ^folds` of a link. A `Barred` link is kept on unbarred labels.
    SuspendedLink {
        folds: usize,
        link: Complex,
        side: Side,
    },
    Contractible,
}

impl HomotopyClass {
    pub fn tag(&self) -> &'static str {
        match self {
            HomotopyClass::CrossPolytopeBoundary { .. } => "cross-polytope",
            HomotopyClass::SphereCodimTwo { .. } => "codim-2-sphere",
            HomotopyClass::SuspendedLink { .. } => "suspended-link",
            HomotopyClass::Contractible => "contractible",
        }
    }

    /// Reduced Betti numbers implied by the class.
    pub fn reduced_betti(&self) -> ReducedBetti {
        class_reduced_betti(self)
    }
}

impl fmt::Display for HomotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyClass::CrossPolytopeBoundary { rank } => {
                write!(f, "cross-polytope boundary, S^{}", *rank as isize - 1)
            }
            HomotopyClass::SphereCodimTwo { rank } => {
                write!(f, "sphere S^{}", *rank as isize - 2)
            }
            HomotopyClass::SuspendedLink { folds, link, side } => {
                let side = match side {
                    Side::Plain => "",
                    Side::Barred => " (barred)",
                };
                write!(f, "suspension^{folds} of link with facets ")?;
                let facets = link.facets();
                for (k, s) in facets.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, "{side}")
            }
            HomotopyClass::Contractible => write!(f, "contractible"),
        }
    }
}

/// Reduced Betti numbers of a class: a single 1 for the sphere cases,
/// zero for a point, and the link's values shifted up by `folds`.
pub fn class_reduced_betti(class: &HomotopyClass) -> ReducedBetti {
    match class {
        HomotopyClass::CrossPolytopeBoundary { rank } => ReducedBetti::sphere(*rank as isize - 1),
        HomotopyClass::SphereCodimTwo { rank } => ReducedBetti::sphere(*rank as isize - 2),
        HomotopyClass::SuspendedLink { folds, link, .. } => {
            homology::reduced_betti_q(link).shifted(*folds)
        }
        HomotopyClass::Contractible => ReducedBetti::zero(),
    }
}

/// Classifies full subcomplexes of `Bier(K)` for one fixed `K`.
///
/// The Alexander dual is only built on the first barred-link request.
pub struct Classifier<'a> {
    k: &'a Complex,
    dual: OnceLock<Complex>,
}

impl<'a> Classifier<'a> {
    pub fn new(k: &'a Complex) -> Result<Self> {
        if k.is_power_set() {
            return Err(Error::DualIsVoid);
        }
        Ok(Classifier {
            k,
            dual: OnceLock::new(),
        })
    }

    pub fn complex(&self) -> &Complex {
        self.k
    }

    pub fn dual(&self) -> &Complex {
        self.dual
            .get_or_init(|| self.k.alexander_dual().expect("checked proper in new"))
    }

    /// `I ∈ K`.
    pub fn in_complex(&self, s: VertexSet) -> bool {
        self.k.is_face(s)
    }

    /// `Ī ∈ K̂`.
    pub fn in_dual(&self, s: VertexSet) -> bool {
        self.k.dual_contains(s)
    }

    pub fn classify(&self, i: VertexSet, j: VertexSet) -> HomotopyClass {
        self.classify_with(i, j, true)
    }

    /// Like [`Classifier::classify`], but suspended-link classes carry an
    /// empty placeholder link when `with_link` is false. Useful when only
    /// the tag matters.
    pub fn classify_with(&self, i: VertexSet, j: VertexSet, with_link: bool) -> HomotopyClass {
        let in_k_i = self.in_complex(i);
        let in_dual_i = self.in_dual(i);
        let m = self.k.ground_size();
        match relation(i, j) {
            Some(Ordering::Equal) => match (in_k_i, in_dual_i) {
                (true, true) => HomotopyClass::CrossPolytopeBoundary { rank: i.len() },
                (false, false) => HomotopyClass::SphereCodimTwo { rank: i.len() },
                _ => HomotopyClass::Contractible,
            },
            // J ⊊ I
            Some(Ordering::Greater) if self.in_complex(j) => HomotopyClass::SuspendedLink {
                folds: j.len(),
                link: if with_link {
                    self.plain_link(i, j)
                } else {
                    Complex::empty(m)
                },
                side: Side::Plain,
            },
            // I ⊊ J
            Some(Ordering::Less) if in_dual_i => HomotopyClass::SuspendedLink {
                folds: i.len(),
                link: if with_link {
                    self.barred_link(i, j)
                } else {
                    Complex::empty(m)
                },
                side: Side::Barred,
            },
            Some(Ordering::Greater) | Some(Ordering::Less) | None => HomotopyClass::Contractible,
        }
    }

    /// `Lk(J, K|_I)` for `J ⊊ I`, `J ∈ K`.
    pub fn plain_link(&self, i: VertexSet, j: VertexSet) -> Complex {
        self.k
            .full_subcomplex(i)
            .link(j)
            .unwrap_or_else(|_| unreachable!("J is a face of K|_I"))
    }

    /// `Lk(Ī, K̂|_{J̄})` for `I ⊊ J`, `Ī ∈ K̂`, on unbarred labels.
    pub fn barred_link(&self, i: VertexSet, j: VertexSet) -> Complex {
        self.dual()
            .full_subcomplex(j)
            .link(i)
            .unwrap_or_else(|_| unreachable!("Ī is a face of K̂|_J̄"))
    }
}

/// Inclusion order on subsets; `None` when incomparable.
fn relation(i: VertexSet, j: VertexSet) -> Option<Ordering> {
    if i == j {
        Some(Ordering::Equal)
    } else if j.is_subset(i) {
        Some(Ordering::Greater)
    } else if i.is_subset(j) {
        Some(Ordering::Less)
    } else {
        None
    }
}

/// One-shot classification of `Bier(K)|_{I ⊔ J̄}`.
pub fn classify(k: &Complex, i: VertexSet, j: VertexSet) -> Result<HomotopyClass> {
    let m = k.ground_size();
    for s in [i, j] {
        if let Some(v) = s.max().filter(|&v| v > m) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                ground: m,
            });
        }
    }
    Ok(Classifier::new(k)?.classify(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::{bier_sphere, BierIndex};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::of(v)
    }

    fn m4_example() -> Complex {
        Complex::from_facets(4, &[vec![1, 2, 3], vec![4]]).unwrap()
    }

    #[test]
    fn m4_examples() {
        let k = m4_example();
        let c = Classifier::new(&k).unwrap();
        assert_eq!(
            c.classify(vs(&[1, 2]), vs(&[1, 2])),
            HomotopyClass::CrossPolytopeBoundary { rank: 2 }
        );
        assert_eq!(
            c.classify(vs(&[1, 3, 4]), vs(&[1, 3, 4])),
            HomotopyClass::SphereCodimTwo { rank: 3 }
        );
        let s = c.classify(vs(&[1, 2, 4]), vs(&[1, 2]));
        match &s {
            HomotopyClass::SuspendedLink { folds, link, side } => {
                assert_eq!(*folds, 2);
                assert_eq!(link.faces(), &[VertexSet::EMPTY]);
                assert_eq!(*side, Side::Plain);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(s.reduced_betti(), ReducedBetti::sphere(1));
        assert_eq!(
            c.classify(vs(&[1, 2, 4]), vs(&[1, 4])),
            HomotopyClass::Contractible
        );
        assert_eq!(
            c.classify(vs(&[2, 4]), vs(&[1, 3])),
            HomotopyClass::Contractible
        );
        assert_eq!(
            c.classify(VertexSet::EMPTY, VertexSet::EMPTY),
            HomotopyClass::CrossPolytopeBoundary { rank: 0 }
        );
    }

    #[test]
    fn class_betti_examples() {
        assert_eq!(
            class_reduced_betti(&HomotopyClass::CrossPolytopeBoundary { rank: 2 }),
            ReducedBetti::sphere(1)
        );
        assert_eq!(
            class_reduced_betti(&HomotopyClass::SphereCodimTwo { rank: 1 }),
            ReducedBetti::sphere(-1)
        );
        assert_eq!(
            class_reduced_betti(&HomotopyClass::SuspendedLink {
                folds: 2,
                link: Complex::empty(3),
                side: Side::Plain
            }),
            ReducedBetti::sphere(1)
        );
    }

    #[test]
    fn agrees_with_oracle_on_m4_example() {
        let k = m4_example();
        let b = bier_sphere(&k).unwrap();
        let c = Classifier::new(&k).unwrap();
        for i in VertexSet::all_canonical(4) {
            for j in VertexSet::all_canonical(4) {
                let oracle = homology::reduced_betti_q(&b.full(BierIndex::new(i, j)));
                assert_eq!(c.classify(i, j).reduced_betti(), oracle, "I={i} J={j}");
            }
        }
    }

    #[test]
    fn cross_polytope_case_is_a_join_of_zero_spheres() {
        let k = m4_example();
        let b = bier_sphere(&k).unwrap();
        let c = Classifier::new(&k).unwrap();
        for i in VertexSet::all_canonical(4) {
            if let HomotopyClass::CrossPolytopeBoundary { .. } = c.classify(i, i) {
                let full = b.full(BierIndex::new(i, i));
                let expected = i.iter().fold(Complex::empty(8), |acc, v| {
                    let mut faces: Vec<VertexSet> = acc.faces().to_vec();
                    for &f in acc.faces() {
                        faces.push(f.with(v));
                        faces.push(f.with(v + 4));
                    }
                    Complex::from_faces(8, faces)
                });
                assert_eq!(full, expected, "I={i}");
            }
        }
    }

    #[test]
    fn power_set_is_rejected() {
        assert!(matches!(
            classify(&Complex::simplex(3), VertexSet::EMPTY, VertexSet::EMPTY),
            Err(Error::DualIsVoid)
        ));
        assert!(matches!(
            classify(&m4_example(), vs(&[5]), VertexSet::EMPTY),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
    }
}

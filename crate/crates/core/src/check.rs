//! Cross-checks between independent routes: classifier against the
//! homology oracle, closed-form Betti tables against Hochster's formula.

use rayon::prelude::*;

use crate::betti::{self, BettiTable};
use crate::bier::{BierComplex, BierIndex};
use crate::classify::{Classifier, HomotopyClass};
use crate::complex::Complex;
use crate::error::Result;
use crate::homology::{self, ReducedBetti};
use crate::subset::VertexSet;

/// A pair on which the classifier and the homology oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMismatch {
    pub plain: VertexSet,
    pub barred: VertexSet,
    pub class: HomotopyClass,
    pub classified: ReducedBetti,
    pub oracle: ReducedBetti,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub pairs: usize,
    /// All mismatches, in canonical `(I, J)` order.
    pub mismatches: Vec<PairMismatch>,
}

/// Compares the classifier with the homology of `Bier(K)|_{I ⊔ J̄}` for
/// all `4^m` pairs.
pub fn classifier_vs_oracle(k: &Complex, b: &BierComplex) -> Result<PairCheck> {
    let classifier = Classifier::new(k)?;
    let m = k.ground_size();
    let subsets = VertexSet::all_canonical(m);
    let faces = b.complex().faces();
    let mut mismatches: Vec<(usize, PairMismatch)> = subsets
        .par_iter()
        .enumerate()
        .flat_map_iter(|(pos, &i)| {
            let classifier = &classifier;
            subsets.iter().filter_map(move |&j| {
                let mask = BierIndex::new(i, j).doubled(m);
                let restricted: Vec<VertexSet> = faces
                    .iter()
                    .copied()
                    .filter(|f| f.is_subset(mask))
                    .collect();
                let oracle = homology::reduced_betti_of_faces(&restricted);
                let class = classifier.classify(i, j);
                let classified = class.reduced_betti();
                (classified != oracle).then(|| {
                    (
                        pos,
                        PairMismatch {
                            plain: i,
                            barred: j,
                            class,
                            classified,
                            oracle,
                        },
                    )
                })
            })
        })
        .collect();
    mismatches.sort_by_key(|a| (a.0, a.1.barred));
    Ok(PairCheck {
        pairs: subsets.len() * subsets.len(),
        mismatches: mismatches.into_iter().map(|(_, x)| x).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiComparison {
    pub closed: BettiTable,
    pub brute: BettiTable,
    /// `(i, j, closed, brute)` where they differ.
    pub differences: Vec<(usize, usize, u64, u64)>,
}

impl BettiComparison {
    pub fn agrees(&self) -> bool {
        self.differences.is_empty()
    }
}

/// Closed formula for `Bier(K)` against Hochster's formula on the built
/// sphere.
pub fn closed_vs_brute(k: &Complex, b: &BierComplex, cap: usize) -> Result<BettiComparison> {
    let closed = betti::bier_betti_closed(k)?;
    let brute = betti::hochster_table(b.complex(), cap)?;
    let differences = closed.differences(&brute);
    Ok(BettiComparison {
        closed,
        brute,
        differences,
    })
}

//! Classifies every full subcomplex of a Bier sphere from the face
//! structure of `K` and checks each answer against computed homology.

use bier_spheres::classify::Classifier;
use bier_spheres::{bier_sphere, reduced_betti_q, BierIndex, Complex, VertexSet};

fn main() -> bier_spheres::Result<()> {
    let k = Complex::from_facets(4, &[vec![1, 2, 3], vec![4]])?;
    let b = bier_sphere(&k)?;
    let classifier = Classifier::new(&k)?;
    let mut counts = std::collections::BTreeMap::new();
    for i in VertexSet::all_canonical(4) {
        for j in VertexSet::all_canonical(4) {
            let class = classifier.classify(i, j);
            let oracle = reduced_betti_q(&b.full(BierIndex::new(i, j)));
            assert_eq!(class.reduced_betti(), oracle, "I={i} J={j}");
            *counts.entry(class.tag()).or_insert(0usize) += 1;
            if i.len() == 3 && !class.reduced_betti().is_zero() {
                println!("I={i:<10} J={j:<10} {class}");
            }
        }
    }
    println!("{counts:?}");
    Ok(())
}

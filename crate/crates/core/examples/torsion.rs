//! Integral homology with torsion, on the six-vertex projective plane and
//! on a full subcomplex of its Bier sphere.

use bier_spheres::report::homology_text;
use bier_spheres::{bier_sphere, fixtures, integral_homology, BierIndex, VertexSet};

fn main() -> bier_spheres::Result<()> {
    let k = fixtures::load("rp2")?;
    print!("RP^2:\n{}", homology_text(&integral_homology(&k)?));
    let b = bier_sphere(&k)?;
    let all = VertexSet::of(&[1, 2, 3, 4, 5, 6]);
    let full = b.full(BierIndex::new(all, VertexSet::EMPTY));
    print!(
        "Bier(K) on the plain side:\n{}",
        homology_text(&integral_homology(&full)?)
    );
    print!(
        "Bier(K):\n{}",
        homology_text(&integral_homology(b.complex())?)
    );
    Ok(())
}

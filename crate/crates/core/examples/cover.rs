//! The cover of a full subcomplex of a Bier sphere by joins of a plain
//! face with a barred dual face.

use bier_spheres::{bier_sphere, cover_pieces, fixtures, reduced_betti_q, BierIndex, VertexSet};

fn main() -> bier_spheres::Result<()> {
    let k = fixtures::load("m4-example")?;
    let idx = BierIndex::new(VertexSet::of(&[1, 2, 4]), VertexSet::of(&[1, 2]));
    let pieces = cover_pieces(&k, idx)?;
    for (face, piece) in &pieces {
        println!("{face:<8} {} facets", piece.facets().len());
    }
    let full = bier_sphere(&k)?.full(idx);
    println!("full subcomplex reduced Betti: {}", reduced_betti_q(&full));
    Ok(())
}

//! The canonical characteristic matrix of a Bier sphere, the Betti numbers
//! of the associated real toric manifold, and a few cup products.

use bier_spheres::toric::{cup_product, h_corollary_check, lambda_matrix, toric_betti};
use bier_spheres::{bier_sphere, fixtures, VertexSet};

fn main() -> bier_spheres::Result<()> {
    let k = fixtures::load("seven-vertex")?;
    let b = bier_sphere(&k)?;
    let lambda = lambda_matrix(&b)?;
    for row in 1..=lambda.rows() {
        let bits: String = (1..=2 * lambda.m())
            .map(|v| if lambda.entry(row, v) { '1' } else { '0' })
            .collect();
        println!("{bits}");
    }
    println!("Betti numbers: {:?}", toric_betti(&k)?.betti);
    println!(
        "h-vector identity holds: {}",
        h_corollary_check(&k, &b)?.passed()
    );
    for (i, j) in [
        (vec![1, 2], vec![4, 6]),
        (vec![1, 3, 4, 7], vec![1, 4]),
        (vec![1, 3, 4, 7], vec![2, 6]),
    ] {
        let (i, j) = (VertexSet::of(&i), VertexSet::of(&j));
        println!("{i} x {j} = {}", cup_product(&k, i, j)?);
    }
    Ok(())
}

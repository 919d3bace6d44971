//! The complex assembled from a pair K, L with dual of L inside K, and
//! its Alexander duality with the swapped pair.

use bier_spheres::{build_a, fixtures, reduced_betti_q};

fn main() -> bier_spheres::Result<()> {
    let k = fixtures::load("pair-k")?;
    let l = fixtures::load("pair-l")?;
    let a = build_a(&k, &l)?;
    println!("A(K, L) on {} vertices, facets:", a.ground_size());
    for f in a.facets() {
        println!("  {f}");
    }
    println!("reduced Betti: {}", reduced_betti_q(&a));
    println!(
        "dual of A(K, L) equals A(L, K): {}",
        a.alexander_dual()? == build_a(&l, &k)?
    );
    Ok(())
}

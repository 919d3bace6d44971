//! Builds the Bier sphere of a small complex and prints its facets with
//! barred vertices shown as `i'`.

use bier_spheres::{bier_sphere, homology, io, Complex};

fn main() -> bier_spheres::Result<()> {
    let k = Complex::from_facets(4, &[vec![1, 2, 3], vec![4]])?;
    let dual = k.alexander_dual()?;
    println!(
        "K facets:     {:?}",
        k.facets().iter().map(|f| f.to_string()).collect::<Vec<_>>()
    );
    println!(
        "dual facets:  {:?}",
        dual.facets()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
    );

    let b = bier_sphere(&k)?;
    let c = b.complex();
    println!("Bier(K): dim {}, f-vector {:?}", c.dim(), c.f_vector().0);
    for f in c.facets() {
        println!("  {}", io::barred_label(4, f));
    }
    println!("reduced Betti: {}", homology::reduced_betti_q(c));
    Ok(())
}

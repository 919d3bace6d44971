//! Bigraded Betti table of a Bier sphere by the closed formula, compared
//! with Hochster's formula on the constructed sphere.

use bier_spheres::betti::{bier_betti_closed, hochster_table, DEFAULT_CAP};
use bier_spheres::report::betti_table_text;
use bier_spheres::{bier_sphere, fixtures};

fn main() -> bier_spheres::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "square".into());
    let k = fixtures::load(&name)?;
    let closed = bier_betti_closed(&k)?;
    let brute = hochster_table(bier_sphere(&k)?.complex(), DEFAULT_CAP)?;
    print!("{}", betti_table_text(&closed));
    let diff = closed.differences(&brute);
    println!("agrees with Hochster: {}", diff.is_empty());
    Ok(())
}

//! Betti tables of Bier spheres of simplex skeleta from binomial sums
//! alone, for every admissible skeleton dimension.

use bier_spheres::betti::{bier_betti_closed, skeleton_bier_betti, skeleton_rank_range};
use bier_spheres::report::betti_table_text;
use bier_spheres::Complex;

fn main() -> bier_spheres::Result<()> {
    let m: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let (lo, hi) = skeleton_rank_range(m);
    for r in lo..=hi {
        let table = skeleton_bier_betti(m, r)?;
        assert_eq!(table, bier_betti_closed(&Complex::skeleton(m, r)?)?);
        println!("m = {m}, r = {r}");
        print!("{}", betti_table_text(&table));
    }
    Ok(())
}

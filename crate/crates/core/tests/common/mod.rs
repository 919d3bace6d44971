//! Strategies and property bodies shared by the proptest suite and the
//! acceptance harness.

use std::ops::RangeInclusive;

use bier_spheres::homology::boundary_matrices;
use bier_spheres::toric::{row_to_subset, subset_to_row, RowElement};
use bier_spheres::{bier_sphere, cover_pieces, reduced_betti_q, BierIndex, Complex, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

/// A complex on `m` vertices generated by random subsets, possibly the
/// void complex or the full simplex.
pub fn complex_on(m: RangeInclusive<usize>) -> impl Strategy<Value = Complex> {
    m.prop_flat_map(|m| {
        prop::collection::vec(0u64..(1u64 << m), 0..=2 * m).prop_map(move |gens| {
            Complex::new(m, gens.into_iter().map(VertexSet::from_bits)).expect("in range")
        })
    })
}

pub fn proper_complex_on(m: RangeInclusive<usize>) -> impl Strategy<Value = Complex> {
    complex_on(m).prop_filter("proper", |k| !k.is_power_set())
}

fn masked(m: usize, raw: u64) -> VertexSet {
    VertexSet::from_bits(raw & ((1u64 << m) - 1))
}

pub fn dual_involution(k: &Complex) -> Result<(), TestCaseError> {
    let d = k.alexander_dual().unwrap();
    prop_assert_eq!(&d.alexander_dual().unwrap(), k);
    Ok(())
}

pub fn boundary_squares_to_zero(k: &Complex) -> Result<(), TestCaseError> {
    let maps = boundary_matrices(k);
    for pair in maps.windows(2) {
        prop_assert_eq!(pair[1].degree, pair[0].degree + 1);
        for row in &pair[0].to_dense() {
            for col in &pair[1].columns {
                let v: i64 = col.iter().map(|&(t, a)| row[t as usize] * a).sum();
                prop_assert_eq!(v, 0);
            }
        }
    }
    Ok(())
}

pub fn suspension_shifts_homology(k: &Complex, folds: usize) -> Result<(), TestCaseError> {
    let s = k.suspension(folds).unwrap();
    prop_assert_eq!(reduced_betti_q(&s), reduced_betti_q(k).shifted(folds));
    Ok(())
}

/// `Lk(τ, Lk(σ, K)) = Lk(σ ∪ τ, K)` for every split of one face.
pub fn links_compose(k: &Complex, pick: u64) -> Result<(), TestCaseError> {
    let faces = k.faces();
    let face = faces[(pick % faces.len() as u64) as usize];
    let whole = k.link(face).unwrap();
    for sigma in face.subsets() {
        let tau = face.difference(sigma);
        prop_assert_eq!(k.link(sigma).unwrap().link(tau).unwrap(), whole.clone());
    }
    Ok(())
}

pub fn row_sums_are_symmetric_differences(m: usize, a: u32, b: u32) -> Result<(), TestCaseError> {
    let mask = (1u32 << (m - 1)) - 1;
    let (x, y) = (
        RowElement::from_coeffs(m, a & mask),
        RowElement::from_coeffs(m, b & mask),
    );
    prop_assert_eq!(
        (x + y).subset(),
        x.subset().symmetric_difference(y.subset())
    );
    prop_assert_eq!(x.subset().len() % 2, 0);
    prop_assert_eq!(subset_to_row(m, x.subset()).unwrap(), x);
    prop_assert_eq!(row_to_subset(m, a & mask), x.subset());
    Ok(())
}

/// The pieces cover the full subcomplex exactly: every piece lies inside
/// it and their union is all of it.
pub fn cover_is_exact(k: &Complex, raw_i: u64, raw_j: u64) -> Result<(), TestCaseError> {
    let m = k.ground_size();
    let idx = BierIndex::new(masked(m, raw_i), masked(m, raw_j));
    let full = bier_sphere(k).unwrap().full(idx);
    let mut union = Vec::new();
    for (_, piece) in cover_pieces(k, idx).unwrap() {
        prop_assert!(piece.faces().iter().all(|&f| full.is_face(f)));
        union.extend_from_slice(piece.faces());
    }
    union.sort();
    union.dedup();
    prop_assert_eq!(union.as_slice(), full.faces());
    Ok(())
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    body: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, body).map_err(|e| e.to_string())
}

/// The structural invariant suite under a fixed seed.
pub fn invariant_suite(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        (
            "dual involution",
            run(cases, proper_complex_on(1..=6), |k| dual_involution(&k)),
        ),
        (
            "boundary squares to zero",
            run(cases, complex_on(1..=6), |k| boundary_squares_to_zero(&k)),
        ),
        (
            "suspension shift",
            run(cases, (complex_on(1..=5), 1usize..=2), |(k, n)| {
                suspension_shifts_homology(&k, n)
            }),
        ),
        (
            "link composition",
            run(cases, (complex_on(1..=6), any::<u64>()), |(k, p)| {
                links_compose(&k, p)
            }),
        ),
        (
            "row-space symmetric difference",
            run(
                cases,
                (2usize..=12, any::<u32>(), any::<u32>()),
                |(m, a, b)| row_sums_are_symmetric_differences(m, a, b),
            ),
        ),
        (
            "cover exactness",
            run(
                cases,
                (proper_complex_on(1..=5), any::<u64>(), any::<u64>()),
                |(k, i, j)| cover_is_exact(&k, i, j),
            ),
        ),
    ]
}

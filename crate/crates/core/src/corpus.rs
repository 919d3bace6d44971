//! Test corpora: every complex on a small ground set, and seeded random
//! complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::subset::VertexSet;

/// Every simplicial complex on `[m]` other than the full power set,
/// ghosts included, in a fixed order. Feasible for `m <= 4`.
pub fn all_proper_complexes(m: usize) -> Vec<Complex> {
    assert!(
        (1..=4).contains(&m),
        "exhaustive enumeration needs 1 <= m <= 4"
    );
    let subsets = VertexSet::all_canonical(m);
    let n = subsets.len();
    let position = |s: VertexSet| subsets.iter().position(|&t| t == s).expect("canonical");
    // down[k]: positions of the subsets obtained by dropping one vertex.
    let down: Vec<Vec<usize>> = subsets
        .iter()
        .map(|s| s.iter().map(|v| position(s.without(v))).collect())
        .collect();
    let full = 1u32 << (n - 1);
    (0..1u32 << n)
        .filter(|&family| family & 1 == 1 && family & full == 0)
        .filter(|&family| {
            (0..n).all(|k| family >> k & 1 == 0 || down[k].iter().all(|&d| family >> d & 1 == 1))
        })
        .map(|family| {
            Complex::from_faces(
                m,
                (0..n).filter(|k| family >> k & 1 == 1).map(|k| subsets[k]),
            )
        })
        .collect()
}

/// A random proper complex on `[m]`: the closure of a few random
/// generators with a random inclusion density.
pub fn random_complex(rng: &mut impl Rng, m: usize) -> Complex {
    loop {
        let count = rng.gen_range(0..=2 * m);
        let density: f64 = rng.gen_range(0.15..0.85);
        let generators: Vec<VertexSet> = (0..count)
            .map(|_| (1..=m).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        let k = Complex::new(m, generators).expect("generators lie in [m]");
        if !k.is_power_set() {
            return k;
        }
    }
}

/// `count` random proper complexes on `[m]`, fully determined by `seed`.
pub fn random_corpus(m: usize, count: usize, seed: u64) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (m as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    (0..count).map(|_| random_complex(&mut rng, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        // Antichain counts 3, 6, 20, 168 minus the void complex and the
        // power set.
        let counts: Vec<usize> = (1..=4).map(|m| all_proper_complexes(m).len()).collect();
        assert_eq!(counts, vec![1, 4, 18, 166]);
        let four = all_proper_complexes(4);
        assert!(four.contains(&Complex::empty(4)));
        assert!(four.contains(&Complex::skeleton(4, 2).unwrap()));
    }

    #[test]
    fn random_corpus_is_seeded() {
        assert_eq!(random_corpus(5, 10, 7), random_corpus(5, 10, 7));
        assert_ne!(random_corpus(5, 10, 7), random_corpus(5, 10, 8));
        assert!(random_corpus(6, 50, 1).iter().all(|k| !k.is_power_set()));
    }
}

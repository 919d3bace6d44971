//! Named example complexes.

use crate::complex::Complex;
use crate::error::{Error, Result};

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub m: usize,
    pub facets: &'static [&'static [usize]],
}

impl Fixture {
    pub fn complex(&self) -> Complex {
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|f| f.to_vec()).collect();
        Complex::from_facets(self.m, &facets).expect("fixture facets are in range")
    }
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "m4-example",
        description: "facets {1,2,3}, {4} on four vertices; its Bier sphere is a 2-sphere",
        m: 4,
        facets: &[&[1, 2, 3], &[4]],
    },
    Fixture {
        name: "pair-k",
        description: "K of the cone-construction pair (same facets as m4-example)",
        m: 4,
        facets: &[&[1, 2, 3], &[4]],
    },
    Fixture {
        name: "pair-l",
        description: "L of the cone-construction pair; its dual has facets {1}, {4}, {2,3}",
        m: 4,
        facets: &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]],
    },
    Fixture {
        name: "interval-ghost",
        description: "the edge {1,2} with ghost vertex 3; self-dual, Bier sphere is a square",
        m: 3,
        facets: &[&[1, 2]],
    },
    Fixture {
        name: "square",
        description: "boundary of the square 1-2-3-4",
        m: 4,
        facets: &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]],
    },
    Fixture {
        name: "square-ghosts",
        description: "boundary of the square with ghost vertices 5 and 6",
        m: 6,
        facets: &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]],
    },
    Fixture {
        name: "seven-vertex",
        description: "facets {2,3}, {1,3,6,7}, {1,5,7}, {1,2,4,5,6}",
        m: 7,
        facets: &[&[2, 3], &[1, 3, 6, 7], &[1, 5, 7], &[1, 2, 4, 5, 6]],
    },
    Fixture {
        name: "rp2",
        description: "six-vertex triangulation of the real projective plane",
        m: 6,
        facets: &[
            &[1, 2, 4],
            &[1, 2, 5],
            &[1, 3, 4],
            &[1, 3, 6],
            &[1, 5, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 6],
            &[3, 4, 5],
            &[4, 5, 6],
        ],
    },
];

/// Looks up a fixture by name. `skeleton:M:R` yields the `R`-skeleton of
/// the simplex on `M` vertices.
pub fn load(name: &str) -> Result<Complex> {
    if let Some(rest) = name.strip_prefix("skeleton:") {
        let (m, r) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("fixture `{name}`: expected skeleton:M:R")))?;
        let m: usize = m
            .parse()
            .map_err(|_| Error::Parse(format!("fixture `{name}`: bad M")))?;
        let r: isize = r
            .parse()
            .map_err(|_| Error::Parse(format!("fixture `{name}`: bad R")))?;
        if m == 0 {
            return Err(Error::Parse(format!(
                "fixture `{name}`: M must be positive"
            )));
        }
        return Complex::skeleton(m, r);
    }
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .map(Fixture::complex)
        .ok_or_else(|| Error::Parse(format!("unknown fixture `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        for f in FIXTURES {
            assert_eq!(load(f.name).unwrap().ground_size(), f.m);
        }
        assert_eq!(load("skeleton:5:1").unwrap().num_faces(), 16);
        assert!(load("skeleton:5").is_err());
        assert!(load("nope").is_err());
    }
}

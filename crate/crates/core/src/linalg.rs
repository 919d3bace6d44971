//! Exact integer elimination: rational rank of sparse integer matrices and
//! diagonalization over the integers.
//!
//! Both routines first run on `i64` with checked arithmetic. On overflow the
//! whole computation restarts on `BigInt`, so results are never silently
//! wrong.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer arithmetic where every operation may refuse (overflow).
pub(crate) trait Exact: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_val(&self) -> Self;
    fn lt_abs(&self, other: &Self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    /// Exact division; `other` divides `self`.
    fn div_exact(&self, other: &Self) -> Self;
    /// Truncated quotient.
    fn quot(&self, other: &Self) -> Option<Self>;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn lt_abs(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn quot(&self, other: &Self) -> Option<Self> {
        self.checked_div(*other)
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn lt_abs(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn quot(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
}

/// A sparse column: `(row, value)` pairs sorted by row, no zeros.
pub(crate) type SparseColumn = Vec<(u32, i64)>;

/// Rank over the rationals of the matrix given by sparse columns.
pub(crate) fn rank(columns: &[SparseColumn], nrows: usize) -> usize {
    match rank_with::<i64>(columns, nrows) {
        Some(r) => r,
        None => rank_with::<BigInt>(columns, nrows).expect("bigint elimination cannot overflow"),
    }
}

/// Fraction-free column reduction keyed on the lowest (largest-row) entry.
///
/// Each step replaces a column `c` by `a*c - b*p`, where `p` is the reduced
/// column owning the same low row, then divides out the content of `c`.
/// Both operations keep the column space's rank over `Q` unchanged.
fn rank_with<T: Exact>(columns: &[SparseColumn], nrows: usize) -> Option<usize> {
    let mut owner: Vec<Option<usize>> = vec![None; nrows];
    let mut reduced: Vec<Vec<(u32, T)>> = Vec::new();
    for col in columns {
        let mut c: Vec<(u32, T)> = col.iter().map(|(r, v)| (*r, T::from_i64(*v))).collect();
        loop {
            let Some((low, cv)) = c.last().cloned() else {
                break;
            };
            match owner[low as usize] {
                Some(p) => {
                    let pv = reduced[p].last().unwrap().1.clone();
                    let g = pv.gcd(&cv);
                    let a = pv.div_exact(&g);
                    let b = cv.div_exact(&g);
                    c = combine(&c, &a, &reduced[p], &b)?;
                    normalize(&mut c);
                }
                None => {
                    owner[low as usize] = Some(reduced.len());
                    reduced.push(c);
                    break;
                }
            }
        }
    }
    Some(reduced.len())
}

/// `a*x - b*y` on sparse vectors.
fn combine<T: Exact>(x: &[(u32, T)], a: &T, y: &[(u32, T)], b: &T) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::from_i64(0);
    while i < x.len() || j < y.len() {
        let (row, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let r = (x[i].0, a.mul(&x[i].1)?);
            i += 1;
            r
        } else if i >= x.len() || y[j].0 < x[i].0 {
            let r = (y[j].0, zero.sub(&b.mul(&y[j].1)?)?);
            j += 1;
            r
        } else {
            let r = (x[i].0, a.mul(&x[i].1)?.sub(&b.mul(&y[j].1)?)?);
            i += 1;
            j += 1;
            r
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Some(out)
}

fn normalize<T: Exact>(c: &mut [(u32, T)]) {
    let Some(first) = c.first() else { return };
    let mut g = first.1.abs_val();
    for (_, v) in c.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_unit() {
        for (_, v) in c.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// Nonzero diagonal entries (absolute values) of a diagonal form of the
/// dense integer matrix `rows`, obtained by unimodular row and column
/// operations. The multiset of prime-power factors of these entries is the
/// torsion of the cokernel; their count is the rank.
pub(crate) fn diagonal_form(rows: &[Vec<i64>]) -> Vec<BigInt> {
    match diagonal_with::<i64>(rows) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => diagonal_with::<BigInt>(rows).expect("bigint elimination cannot overflow"),
    }
}

fn diagonal_with<T: Exact>(rows: &[Vec<i64>]) -> Option<Vec<T>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Pivot: smallest nonzero magnitude in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..nrows {
            for j in t..ncols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].lt_abs(&a[bi][bj])) {
                    best = Some((i, j));
                    if a[i][j].is_unit() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quot(&a[t][t])?;
                let (upper, lower) = a.split_at_mut(i);
                for (x, p) in lower[0][t..ncols].iter_mut().zip(&upper[t][t..ncols]) {
                    *x = x.sub(&q.mul(p)?)?;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    let d = q.mul(&row[t])?;
                    row[j] = row[j].sub(&d)?;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot survived; move it in.
            let mut best = (t, t);
            for i in t + 1..nrows {
                if !a[i][t].is_zero() && a[i][t].lt_abs(&a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..ncols {
                if !a[t][j].is_zero() && a[t][j].lt_abs(&a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs_val());
        t += 1;
    }
    Some(diag)
}

/// Prime-power factors of `n > 1`, ascending by prime.
pub(crate) fn prime_power_factors(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1u64;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    Some(out)
}

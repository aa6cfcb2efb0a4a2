//! Exact coefficient rings for root coordinates.
//!
//! Roots of a finite Coxeter group live in `Z[2cos(pi/m)]`, where `m` ranges
//! over the entries of the Coxeter matrix. For crystallographic types this
//! collapses to the integers. Both rings are expressed through the
//! [`CoefficientRing`] structure trait, generic over the machine integer used
//! for coordinates.

use num_traits::{PrimInt, Signed};
use std::fmt::Debug;
use std::hash::Hash;

/// Machine integers usable as coordinates.
pub trait Coord: PrimInt + Signed + Hash + Debug + Send + Sync + 'static {}

impl<T: PrimInt + Signed + Hash + Debug + Send + Sync + 'static> Coord for T {}

/// A commutative ring of algebraic integers with a fixed power basis over `Z`.
///
/// Elements carry no context of their own; all arithmetic goes through the
/// ring value, which owns the minimal polynomial when there is one.
pub trait CoefficientRing: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Rank of the ring as a free `Z`-module.
    fn degree(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The power-basis generator (`2cos(pi/m)`, or `1` for the integers).
    fn generator(&self) -> Self::Elem;
    /// Coordinates in the power basis `1, g, g^2, ...`.
    fn coords(&self, a: &Self::Elem) -> Vec<i64>;
    fn from_coords(&self, coords: &[i64]) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The rational integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerRing<T> {
    _marker: std::marker::PhantomData<T>,
}

impl<T> IntegerRing<T> {
    pub fn new() -> Self {
        Self {
            _marker: std::marker::PhantomData,
        }
    }
}

fn narrow<T: Coord>(x: i64) -> T {
    T::from(x).expect("coordinate does not fit the ring's integer type")
}

fn widen<T: Coord>(x: T) -> i64 {
    x.to_i64().expect("coordinate does not fit in i64")
}

impl<T: Coord> CoefficientRing for IntegerRing<T> {
    type Elem = T;

    fn degree(&self) -> usize {
        1
    }
    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.checked_add(b)
            .expect("integer overflow in root coordinates")
    }
    fn neg(&self, a: &T) -> T {
        -*a
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.checked_mul(b)
            .expect("integer overflow in root coordinates")
    }
    fn generator(&self) -> T {
        T::one()
    }
    fn coords(&self, a: &T) -> Vec<i64> {
        vec![widen(*a)]
    }
    fn from_coords(&self, coords: &[i64]) -> T {
        narrow(coords.first().copied().unwrap_or(0))
    }
}

/// The ring `Z[2cos(pi/m)]`, the ring of integers of the maximal real
/// subfield of the `2m`-th cyclotomic field.
#[derive(Clone, Debug)]
pub struct RealCyclotomicRing<T> {
    m: u32,
    /// Monic minimal polynomial of `2cos(pi/m)`, low degree first, leading 1 included.
    min_poly: Vec<i64>,
    _marker: std::marker::PhantomData<T>,
}

impl<T: Coord> RealCyclotomicRing<T> {
    pub fn new(m: u32) -> Self {
        assert!(m >= 2, "2cos(pi/m) needs m >= 2");
        Self {
            m,
            min_poly: min_poly_two_cos(m),
            _marker: std::marker::PhantomData,
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn min_poly(&self) -> &[i64] {
        &self.min_poly
    }

    fn d(&self) -> usize {
        self.min_poly.len() - 1
    }

    fn reduce(&self, mut poly: Vec<T>) -> Vec<T> {
        let d = self.d();
        while poly.len() > d {
            let lead = poly.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - d;
            for (j, &c) in self.min_poly[..d].iter().enumerate() {
                let c: T = narrow(c);
                let term = lead
                    .checked_mul(&c)
                    .expect("overflow in cyclotomic reduction");
                poly[shift + j] = poly[shift + j]
                    .checked_sub(&term)
                    .expect("overflow in cyclotomic reduction");
            }
        }
        poly.resize(d, T::zero());
        poly
    }
}

impl<T: Coord> CoefficientRing for RealCyclotomicRing<T> {
    type Elem = Vec<T>;

    fn degree(&self) -> usize {
        self.d()
    }
    fn zero(&self) -> Vec<T> {
        vec![T::zero(); self.d()]
    }
    fn one(&self) -> Vec<T> {
        let mut v = self.zero();
        v[0] = T::one();
        v
    }
    fn add(&self, a: &Vec<T>, b: &Vec<T>) -> Vec<T> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_add(y).expect("overflow in cyclotomic addition"))
            .collect()
    }
    fn neg(&self, a: &Vec<T>) -> Vec<T> {
        a.iter().map(|x| -*x).collect()
    }
    fn mul(&self, a: &Vec<T>, b: &Vec<T>) -> Vec<T> {
        let mut prod = vec![T::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = x.checked_mul(y).expect("overflow in cyclotomic product");
                prod[i + j] = prod[i + j]
                    .checked_add(&t)
                    .expect("overflow in cyclotomic product");
            }
        }
        self.reduce(prod)
    }
    fn generator(&self) -> Vec<T> {
        self.reduce(vec![T::zero(), T::one()])
    }
    fn coords(&self, a: &Vec<T>) -> Vec<i64> {
        a.iter().map(|&x| widen(x)).collect()
    }
    fn from_coords(&self, coords: &[i64]) -> Vec<T> {
        self.reduce(coords.iter().map(|&c| narrow(c)).collect())
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut quot = vec![0; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dd];
        quot[k] = q;
        for (j, &c) in den.iter().enumerate() {
            rem[k + j] -= q * c;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// The cyclotomic polynomial `Phi_n`, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut den = vec![1i64];
    for d in 1..n {
        if n.is_multiple_of(d) {
            den = poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_exact(&num, &den)
}

/// Monic minimal polynomial of `2cos(pi/m)` over `Q`, low degree first.
///
/// `z^{-d} Phi_{2m}(z)` is a polynomial in `z + 1/z`; rewrite it through the
/// recurrence `D_{k+1} = x D_k - D_{k-1}` for `z^k + z^{-k}`.
pub fn min_poly_two_cos(m: u32) -> Vec<i64> {
    let phi = cyclotomic_poly(2 * m);
    let d = (phi.len() - 1) / 2;
    // dickson[k] = polynomial in x representing z^k + z^-k
    let mut dickson: Vec<Vec<i64>> = vec![vec![2], vec![0, 1]];
    for k in 2..=d {
        let mut next = vec![0i64; k + 1];
        for (i, &c) in dickson[k - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in dickson[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        dickson.push(next);
    }
    let mut out = vec![0i64; d + 1];
    out[0] = phi[d];
    for j in 1..=d {
        let cj = phi[d + j];
        for (i, &c) in dickson[j].iter().enumerate() {
            out[i] += cj * c;
        }
    }
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Intermediate entries are minors of the input, so they stay bounded by
/// Hadamard's inequality.
pub fn integer_rank<T: Coord>(mut rows: Vec<Vec<T>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..nrows {
            let f = rows[r][col];
            for c in col..ncols {
                let a = p
                    .checked_mul(&rows[r][c])
                    .expect("overflow in Bareiss elimination");
                let b = f
                    .checked_mul(&rows[rank][c])
                    .expect("overflow in Bareiss elimination");
                let num = a.checked_sub(&b).expect("overflow in Bareiss elimination");
                debug_assert!((num % prev).is_zero());
                rows[r][c] = num / prev;
            }
            // columns left of the pivot are already zero in this row
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(10), vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn two_cos_minimal_polynomials() {
        // 2cos(pi/2) = 0, 2cos(pi/3) = 1, 2cos(pi/4) = sqrt 2
        assert_eq!(min_poly_two_cos(2), vec![0, 1]);
        assert_eq!(min_poly_two_cos(3), vec![-1, 1]);
        assert_eq!(min_poly_two_cos(4), vec![-2, 0, 1]);
        // golden ratio
        assert_eq!(min_poly_two_cos(5), vec![-1, -1, 1]);
        assert_eq!(min_poly_two_cos(6), vec![-3, 0, 1]);
    }

    #[test]
    fn min_poly_vanishes_numerically() {
        for m in 2..=30u32 {
            let p = min_poly_two_cos(m);
            let x = 2.0 * (std::f64::consts::PI / m as f64).cos();
            let val: f64 = p.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
            assert!(val.abs() < 1e-6, "m = {m}: residual {val}");
            assert_eq!(*p.last().unwrap(), 1);
        }
    }

    #[test]
    fn golden_ring_arithmetic() {
        let r = RealCyclotomicRing::<i64>::new(5);
        let phi = r.generator();
        // phi^2 = phi + 1
        assert_eq!(r.mul(&phi, &phi), r.add(&phi, &r.one()));
        assert_eq!(r.coords(&r.sub(&phi, &phi)), vec![0, 0]);
    }

    #[test]
    fn bareiss_rank() {
        let m: Vec<Vec<i64>> = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(integer_rank(m), 2);
        let id: Vec<Vec<i128>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { 3 } else { 0 }).collect())
            .collect();
        assert_eq!(integer_rank(id), 5);
        assert_eq!(integer_rank::<i64>(vec![vec![0, 0], vec![0, 0]]), 0);
    }
}

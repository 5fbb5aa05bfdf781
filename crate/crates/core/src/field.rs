//! Prime fields and exact rank over them.
//!
//! Linear algebra is written once against [`Field`]; the concrete fields are
//! const-generic [`Fp`] values. Runtime characteristic selection goes through
//! [`FieldSpec`] and [`with_field!`](crate::with_field).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Inv, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite field usable by the rank kernel.
pub trait Field:
    Copy
    + Eq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Inv<Output = Self>
{
    const CHARACTERISTIC: u64;

    fn from_i64(x: i64) -> Self;
}

/// Integers modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(x: u64) -> Self {
        Fp((x % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp(if s >= P as u64 { s - P as u64 } else { s } as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 as u64 * rhs.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Inv for Fp<P> {
    type Output = Self;
    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P as u64 - 2)
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P as u64;

    fn from_i64(x: i64) -> Self {
        Fp(x.rem_euclid(P as i64) as u32)
    }
}

/// Primes that can be selected at runtime.
pub const SUPPORTED_CHARACTERISTICS: [u64; 8] = [2, 3, 5, 7, 11, 13, 32003, 65521];

/// A coefficient field chosen at runtime by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldSpec(u64);

impl FieldSpec {
    pub const F2: FieldSpec = FieldSpec(2);
    pub const F32003: FieldSpec = FieldSpec(32003);

    /// The pair every report is computed over.
    pub const DEFAULT_PAIR: [FieldSpec; 2] = [FieldSpec::F2, FieldSpec::F32003];

    pub fn new(p: u64) -> Result<Self> {
        if SUPPORTED_CHARACTERISTICS.contains(&p) {
            Ok(FieldSpec(p))
        } else {
            Err(Error::UnsupportedCharacteristic(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        self.0
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

/// Runs a generic expression with the type alias `$F` bound to the field
/// named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {
        match $spec.characteristic() {
            2 => {
                type $F = $crate::field::Fp<2>;
                $body
            }
            3 => {
                type $F = $crate::field::Fp<3>;
                $body
            }
            5 => {
                type $F = $crate::field::Fp<5>;
                $body
            }
            7 => {
                type $F = $crate::field::Fp<7>;
                $body
            }
            11 => {
                type $F = $crate::field::Fp<11>;
                $body
            }
            13 => {
                type $F = $crate::field::Fp<13>;
                $body
            }
            32003 => {
                type $F = $crate::field::Fp<32003>;
                $body
            }
            65521 => {
                type $F = $crate::field::Fp<65521>;
                $body
            }
            p => unreachable!("FieldSpec admitted unsupported characteristic {p}"),
        }
    };
}

/// A matrix with entries in `{-1, 0, 1}`, stored row-wise as `(column, sign)`
/// pairs. Simplicial boundary maps have this form.
#[derive(Clone, Debug, Default)]
pub struct SignedMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i8)>>,
}

impl SignedMatrix {
    pub fn new(cols: usize) -> Self {
        SignedMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    /// Rank over `F`.
    pub fn rank<F: Field>(&self) -> usize {
        if self.rows.is_empty() || self.cols == 0 {
            return 0;
        }
        if F::CHARACTERISTIC == 2 {
            return self.rank_gf2();
        }
        let mut dense: Vec<Vec<F>> = self
            .rows
            .iter()
            .map(|row| {
                let mut r = vec![F::zero(); self.cols];
                for &(c, s) in row {
                    r[c] = r[c] + F::from_i64(s as i64);
                }
                r
            })
            .collect();
        rank_dense(&mut dense)
    }

    fn rank_gf2(&self) -> usize {
        let words = self.cols.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|row| {
                let mut r = vec![0u64; words];
                for &(c, s) in row {
                    if s % 2 != 0 {
                        r[c / 64] ^= 1 << (c % 64);
                    }
                }
                r
            })
            .collect();
        rank_gf2(&mut rows, self.cols)
    }
}

/// Gaussian elimination in place; returns the rank.
pub fn rank_dense<F: Field>(rows: &mut [Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv;
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            for c in col..ncols {
                row[c] = row[c] - factor * prow[c];
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a bit-packed matrix over GF(2).
pub fn rank_gf2(rows: &mut [Vec<u64>], ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[w] & b != 0 {
                for (x, y) in row[w..].iter_mut().zip(&prow[w..]) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F32003};

    #[test]
    fn inverses() {
        for x in 1..200u64 {
            let a = F32003::new(x);
            assert_eq!(a * a.inv(), F32003::one());
        }
        assert_eq!(F2::new(1).inv(), F2::one());
        assert_eq!(Fp::<7>::from_i64(-1), Fp::<7>::new(6));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2.
        let mut m = SignedMatrix::new(2);
        m.rows.push(vec![(0, 1), (1, 1)]);
        m.rows.push(vec![(0, 1), (1, -1)]);
        assert_eq!(m.rank::<F2>(), 1);
        assert_eq!(m.rank::<F32003>(), 2);
        assert_eq!(m.rank::<Fp<3>>(), 2);
    }

    #[test]
    fn runtime_dispatch() {
        let spec = FieldSpec::new(5).unwrap();
        let c = with_field!(spec, F => F::CHARACTERISTIC);
        assert_eq!(c, 5);
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(0).is_err());
    }
}

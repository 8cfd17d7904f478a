//! Exact scalar types.
//!
//! Everything in this crate is computed over an exact field: arbitrary-precision
//! rationals by default, or a prime field `Fp<P>` for faster advisory runs.
//! Floating point is deliberately not supported — rank, kernel and homology
//! computations here must be exact, never tolerance-based.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact field of scalars.
///
/// The arithmetic supertraits come from `num_traits` / `core::ops`; the trait
/// only adds the two things generic exact linear algebra needs beyond a ring:
/// inversion and an integer embedding.
pub trait Field:
    Zero
    + One
    + Clone
    + PartialEq
    + Debug
    + Display
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the field: `0` for the rationals, `p` for `Fp<P>`.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse. `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    /// Canonical image of an integer in the field.
    fn from_int(n: i64) -> Self;

    /// `self / other`, panicking on division by zero.
    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero field element")
    }
}

/// The default exact scalar type: arbitrary-precision rationals, always reduced.
pub type Q = BigRational;

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// A prime field of characteristic `P`, with `P` fixed at compile time.
///
/// Elements are stored as canonical representatives in `0..P`. The modulus is a
/// const generic so that scalars stay `Copy`-cheap, contexts stay thread-safe,
/// and several prime fields can coexist in one process.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    /// Construct from any integer residue.
    pub fn new(v: i64) -> Self {
        assert!(is_prime(P), "Fp modulus {P} is not prime");
        let p = P as i64;
        Fp(v.rem_euclid(p) as u64)
    }

    /// The canonical representative in `0..P`.
    pub fn rep(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
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

/// Deterministic primality check, adequate for 64-bit moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64 with the standard witness set.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        let mut r = d;
        while r != n - 1 {
            x = mulmod(x, x, n);
            r <<= 1;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn modpow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(mulmod(self.0, rhs.0, P))
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_one(&self) -> bool {
        self.0 == 1 % P
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2) is the inverse of a in Fp.
            Some(self.pow(P - 2))
        }
    }

    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let a = Q::from_int(3);
        let b = Q::from_int(-7);
        assert_eq!(a.clone() + b.clone(), Q::from_int(-4));
        assert_eq!(a.clone() * b.clone(), Q::from_int(-21));
        assert_eq!(a.inv().unwrap() * a.clone(), Q::one());
        assert!(Q::zero().inv().is_none());
        // num-rational reduces on construction: 6/4 == 3/2.
        let h = Q::from_int(6) * Q::from_int(4).inv().unwrap();
        assert_eq!(h, Q::from_int(3) * Q::from_int(2).inv().unwrap());
    }

    #[test]
    fn prime_field_ops() {
        type F13 = Fp<13>;
        let a = F13::from_int(9);
        let b = F13::from_int(-5); // == 8 mod 13
        assert_eq!(b.rep(), 8);
        assert_eq!((a + b).rep(), 4);
        assert_eq!((a * b).rep(), (9 * 8) % 13);
        for v in 1..13 {
            let x = F13::from_int(v);
            assert!((x * x.inv().unwrap()).is_one());
        }
        assert!(F13::zero().inv().is_none());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(32003));
        assert!(is_prime(65537));
        assert!(!is_prime(1));
        assert!(!is_prime(65536));
        assert!(!is_prime(32001));
    }

    #[test]
    #[should_panic(expected = "not prime")]
    fn composite_modulus_rejected() {
        let _ = Fp::<6>::new(1);
    }
}

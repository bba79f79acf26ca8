//! The integer scalar abstraction every exact routine in the crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer type: [`num_bigint::BigInt`] for production use, or a
/// fixed-width primitive (`i64`, `i128`) when the caller knows the entries
/// stay small. Fixed-width instantiations inherit the primitive's overflow
/// behaviour, so the crate-root aliases all use `BigInt`.
pub trait Scalar:
    Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Hash + FromStr + Send + Sync + 'static
{
    fn of_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize fits the scalar type")
    }

    fn of(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("i64 fits the scalar type")
    }

    /// Residue in `[0, m)` for `m > 0`.
    fn modulo(&self, m: &Self) -> Self {
        self.mod_floor(m)
    }
}

impl<T> Scalar for T where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Hash
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Extended gcd `(g, x, y)` with `a*x + b*y = g` and `g >= 0`.
pub fn ext_gcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

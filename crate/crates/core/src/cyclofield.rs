//! Exact arithmetic in the cyclotomic field `K = Q(ξ)`, `ξ` a primitive
//! eighth root of unity.
//!
//! Elements are stored in the power basis `1, ξ, ξ², ξ³` with rational
//! coordinates and reduced by the minimal polynomial `ξ⁴ + 1`. The fourth
//! root of unity `ι = ξ²` and every parameter `ζ ∈ {±1, ±ι}` live here, as do
//! all character values of groups whose exponent divides 8.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a₀ + a₁ξ + a₂ξ² + a₃ξ³` of `Q(ξ₈)`.
///
/// Coordinates are kept in lowest terms with positive denominators, so two
/// scalars are equal exactly when their coordinate vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar([BigRational; 4]);

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[0] = BigRational::from_integer(BigInt::from(n));
        Scalar(c)
    }

    /// The rational number `num/den`.
    ///
    /// Panics if `den` is zero.
    pub fn rational(num: i64, den: i64) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        Scalar(c)
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[0] = q;
        Scalar(c)
    }

    pub fn from_coords(coords: [BigRational; 4]) -> Self {
        Scalar(coords)
    }

    /// Builds `(a₀ + a₁ξ + a₂ξ² + a₃ξ³)/den` from small integers.
    pub fn from_ints(a: [i64; 4], den: i64) -> Self {
        let d = BigInt::from(den);
        Scalar(a.map(|x| BigRational::new(BigInt::from(x), d.clone())))
    }

    /// The primitive eighth root of unity `ξ`.
    pub fn xi() -> Self {
        Scalar::from_ints([0, 1, 0, 0], 1)
    }

    /// The primitive fourth root of unity `ι = ξ²`.
    pub fn iota() -> Self {
        Scalar::from_ints([0, 0, 1, 0], 1)
    }

    /// `ξ^k` for any integer `k`.
    pub fn xi_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut a = [0i64; 4];
        if k < 4 {
            a[k] = 1;
        } else {
            a[k - 4] = -1;
        }
        Scalar::from_ints(a, 1)
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.0[0].is_one() && self.0[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, found by solving the 4×4 rational system
    /// `M_a · v = e₀` where `M_a` is multiplication by `self`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column j of M_a holds the coordinates of a·ξʲ.
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 5]; 4];
        for j in 0..4 {
            let col = self * &Scalar::xi_pow(j as i64);
            for i in 0..4 {
                m[i][j] = col.0[i].clone();
            }
        }
        m[0][4] = BigRational::one();
        solve_augmented(&mut m).map(Scalar).ok_or(Error::DivisionByZero)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Reduces the element modulo a prime `p` under `ξ ↦ xi_p`, where
    /// `xi_p` has multiplicative order 8 in `F_p`. Returns `None` when a
    /// denominator vanishes mod `p`.
    pub fn reduce_mod(&self, p: u64, xi_p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        let mut xpow = 1u64;
        for c in &self.0 {
            if !c.is_zero() {
                let num = mod_big(c.numer(), &pb);
                let den = mod_big(c.denom(), &pb);
                if den == 0 {
                    return None;
                }
                let v = mul_mod(num, inv_mod(den, p), p);
                acc = (acc + mul_mod(v, xpow, p)) % p;
            }
            xpow = mul_mod(xpow, xi_p, p);
        }
        Some(acc)
    }
}

fn mod_big(x: &BigInt, p: &BigInt) -> u64 {
    let r = ((x % p) + p) % p;
    u64::try_from(r).expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Gauss-Jordan on a square system with one augmented column. Returns the
/// solution or `None` when the system is singular.
fn solve_augmented(m: &mut [Vec<BigRational>]) -> Option<[BigRational; 4]> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    let mut out: [BigRational; 4] = Default::default();
    for (i, o) in out.iter_mut().enumerate() {
        *o = m[i][n].clone();
    }
    Some(out)
}

impl<'b> Add<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'b> Sub<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'b> Mul<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        let mut out: [BigRational; 4] = Default::default();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                // ξ⁴ = −1
                if i + j < 4 {
                    out[i + j] += t;
                } else {
                    out[i + j - 4] -= t;
                }
            }
        }
        Scalar(out)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.clone().map(|c| -c))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.map(|c| -c))
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "ξ", "ι", "ιξ"];
        let mut first = true;
        for (c, unit) in self.0.iter().zip(UNITS) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{mag}·{unit}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    let d = BigInt::from_str(d).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("`{s}`: zero denominator")));
    }
    Ok(BigRational::new(n, d))
}

fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let coords: [String; 4] = [
            format_rational(&self.0[0]),
            format_rational(&self.0[1]),
            format_rational(&self.0[2]),
            format_rational(&self.0[3]),
        ];
        coords.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw: [String; 4] = Deserialize::deserialize(de)?;
        let mut coords: [BigRational; 4] = Default::default();
        for (c, s) in coords.iter_mut().zip(&raw) {
            *c = parse_rational(s).map_err(D::Error::custom)?;
        }
        Ok(Scalar(coords))
    }
}

/// The four admissible values of the parameter `ζ`, a fourth root of unity
/// that need not be primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ZetaKind {
    PlusOne,
    MinusOne,
    PlusI,
    MinusI,
}

impl ZetaKind {
    pub const ALL: [ZetaKind; 4] = [ZetaKind::PlusOne, ZetaKind::MinusOne, ZetaKind::PlusI, ZetaKind::MinusI];

    /// `ζ` as an element of `K`.
    pub fn embed(self) -> Scalar {
        zeta_embed(self)
    }

    /// True when `ζ` is a primitive fourth root of unity, i.e. `ζ² = −1`.
    pub fn is_primitive(self) -> bool {
        matches!(self, ZetaKind::PlusI | ZetaKind::MinusI)
    }

    /// Short textual tag used on the command line: `1`, `-1`, `i`, `-i`.
    pub fn tag(self) -> &'static str {
        match self {
            ZetaKind::PlusOne => "1",
            ZetaKind::MinusOne => "-1",
            ZetaKind::PlusI => "i",
            ZetaKind::MinusI => "-i",
        }
    }
}

impl FromStr for ZetaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" => Ok(ZetaKind::PlusOne),
            "-1" => Ok(ZetaKind::MinusOne),
            "i" | "+i" | "ι" => Ok(ZetaKind::PlusI),
            "-i" | "-ι" => Ok(ZetaKind::MinusI),
            other => Err(Error::Parse(format!("unknown zeta `{other}`"))),
        }
    }
}

impl fmt::Display for ZetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub fn zeta_embed(kind: ZetaKind) -> Scalar {
    match kind {
        ZetaKind::PlusOne => Scalar::one(),
        ZetaKind::MinusOne => -Scalar::one(),
        ZetaKind::PlusI => Scalar::iota(),
        ZetaKind::MinusI => -Scalar::iota(),
    }
}

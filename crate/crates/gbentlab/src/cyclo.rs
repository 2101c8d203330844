//! Exact arithmetic in the cyclotomic ring `Z[zeta_{2^k}]`.
//!
//! Every spectral value in this crate is a `CycloInt`, stored in the power
//! basis `{1, zeta, ..., zeta^(2^(k-1) - 1)}` with the reduction
//! `zeta^(2^(k-1)) = -1` applied eagerly. Because that set is a basis of
//! `Q(zeta_{2^k})`, equality of coordinate vectors is equality of complex
//! numbers, and all property verdicts stay integer-exact. Floating point
//! appears only in [`CycloInt::to_complex`], which is for display.
//!
//! The degenerate level k = 1 has a single coordinate and `zeta_2 = -1`, so
//! the ordinary Boolean Walsh spectrum is the k = 1 special case of the same
//! machinery.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest supported level: roots of order up to 2^8. Keeps 64-bit
/// coordinates comfortably exact for every transform the crate runs.
pub const MAX_LEVEL: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// Lifting can only raise the level.
    CannotLower { from: u32, to: u32 },
    /// A division that the caller asserted exact was not.
    InexactDivision { divisor: i64 },
    /// Level outside 1..=MAX_LEVEL.
    LevelOutOfRange(u32),
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::CannotLower { from, to } => {
                write!(f, "cannot lower cyclotomic level from {} to {}", from, to)
            }
            CycloError::InexactDivision { divisor } => {
                write!(f, "coordinate not divisible by {}", divisor)
            }
            CycloError::LevelOutOfRange(k) => {
                write!(f, "cyclotomic level {} outside supported range 1..={}", k, MAX_LEVEL)
            }
        }
    }
}

impl std::error::Error for CycloError {}

/// An element of `Z[zeta_{2^k}]` in the canonical power basis.
///
/// `coords[j]` is the coefficient of `zeta^j`; the vector always has length
/// exactly `2^(k-1)`. Two values of the same level are equal iff their
/// coordinates are equal. Coefficient arithmetic is checked: overflowing a
/// 64-bit coordinate panics rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycloInt {
    k: u32,
    coords: Vec<i64>,
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(k={}, {:?})", self.k, self.coords)
    }
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("CycloInt coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("CycloInt coefficient overflow")
}

impl CycloInt {
    fn check_level(k: u32) {
        assert!(
            (1..=MAX_LEVEL).contains(&k),
            "cyclotomic level {} outside supported range 1..={}",
            k,
            MAX_LEVEL
        );
    }

    /// Basis size `2^(k-1)` at level k.
    pub fn basis_len(k: u32) -> usize {
        Self::check_level(k);
        1usize << (k - 1)
    }

    pub fn zero(k: u32) -> CycloInt {
        CycloInt { k, coords: vec![0; Self::basis_len(k)] }
    }

    pub fn from_int(k: u32, v: i64) -> CycloInt {
        let mut z = CycloInt::zero(k);
        z.coords[0] = v;
        z
    }

    pub fn one(k: u32) -> CycloInt {
        CycloInt::from_int(k, 1)
    }

    /// Construct from raw coordinates; length must be `2^(k-1)`.
    pub fn from_coords(k: u32, coords: Vec<i64>) -> CycloInt {
        assert_eq!(coords.len(), Self::basis_len(k), "coordinate vector length");
        CycloInt { k, coords }
    }

    /// The basis-reduced representation of `zeta_{2^k}^e`; `e` may be any
    /// integer and is reduced modulo `2^k`.
    pub fn zeta_pow(k: u32, e: i64) -> CycloInt {
        let mut z = CycloInt::zero(k);
        let order = 1i64 << k;
        let e = e.rem_euclid(order) as usize;
        let half = z.coords.len();
        if e < half {
            z.coords[e] = 1;
        } else {
            z.coords[e - half] = -1;
        }
        z
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// True iff this value is the rational integer `v`.
    pub fn is_int(&self, v: i64) -> bool {
        self.coords[0] == v && self.coords[1..].iter().all(|&c| c == 0)
    }

    /// Complex conjugate: `zeta^j -> zeta^(-j)`, re-reduced to the basis.
    pub fn conj(&self) -> CycloInt {
        let half = self.coords.len();
        let mut out = CycloInt::zero(self.k);
        out.coords[0] = self.coords[0];
        for j in 1..half {
            // zeta^(-j) = -zeta^(half - j)
            out.coords[half - j] = checked_mul(self.coords[j], -1);
        }
        out
    }

    /// `a * conj(a)`. The caller typically compares against a rational
    /// integer: `|a| = 2^(n/2)` iff `norm_sq(a)` is the integer `2^n`.
    pub fn norm_sq(&self) -> CycloInt {
        self * &self.conj()
    }

    /// Same complex number at a level `k_new >= k`: coordinate `j` moves to
    /// `j * 2^(k_new - k)`. A ring homomorphism.
    pub fn lift(&self, k_new: u32) -> Result<CycloInt, CycloError> {
        if k_new < self.k {
            return Err(CycloError::CannotLower { from: self.k, to: k_new });
        }
        if k_new > MAX_LEVEL {
            return Err(CycloError::LevelOutOfRange(k_new));
        }
        let stretch = 1usize << (k_new - self.k);
        let mut out = CycloInt::zero(k_new);
        for (j, &c) in self.coords.iter().enumerate() {
            out.coords[j * stretch] = c;
        }
        Ok(out)
    }

    /// Multiply by `zeta^e`: a signed rotation of the coordinates.
    pub fn mul_zeta_pow(&self, e: i64) -> CycloInt {
        let half = self.coords.len();
        let order = 2 * half as i64;
        let e = e.rem_euclid(order) as usize;
        let mut out = CycloInt::zero(self.k);
        for (j, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let raw = j + e;
            if raw < half {
                out.coords[raw] = checked_add(out.coords[raw], c);
            } else if raw < 2 * half {
                out.coords[raw - half] = checked_add(out.coords[raw - half], -c);
            } else {
                out.coords[raw - 2 * half] = checked_add(out.coords[raw - 2 * half], c);
            }
        }
        out
    }

    pub fn scaled(&self, s: i64) -> CycloInt {
        CycloInt {
            k: self.k,
            coords: self.coords.iter().map(|&c| checked_mul(c, s)).collect(),
        }
    }

    /// Exact division of every coordinate by `d`; errors when any coordinate
    /// is not divisible (the bug signal for the recombination identities).
    pub fn div_exact(&self, d: i64) -> Result<CycloInt, CycloError> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for &c in &self.coords {
            if c % d != 0 {
                return Err(CycloError::InexactDivision { divisor: d });
            }
            coords.push(c / d);
        }
        Ok(CycloInt { k: self.k, coords })
    }

    /// Double-precision evaluation, display only; never feeds a verdict.
    pub fn to_complex(&self) -> (f64, f64) {
        let order = (1u64 << self.k) as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, &c) in self.coords.iter().enumerate() {
            if c != 0 {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / order;
                re += c as f64 * theta.cos();
                im += c as f64 * theta.sin();
            }
        }
        (re, im)
    }

    /// Promote `a` and `b` to a common level.
    fn unify(a: &CycloInt, b: &CycloInt) -> (CycloInt, CycloInt) {
        let k = a.k.max(b.k);
        (a.lift(k).unwrap(), b.lift(k).unwrap())
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        if self.k == rhs.k {
            let coords = self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| checked_add(a, b))
                .collect();
            CycloInt { k: self.k, coords }
        } else {
            let (a, b) = CycloInt::unify(self, rhs);
            &a + &b
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self + &(-rhs)
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.scaled(-1)
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        if self.k != rhs.k {
            let (a, b) = CycloInt::unify(self, rhs);
            return &a * &b;
        }
        let half = self.coords.len();
        let mut out = CycloInt::zero(self.k);
        for (i, &a) in self.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coords.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let p = checked_mul(a, b);
                let d = i + j;
                if d < half {
                    out.coords[d] = checked_add(out.coords[d], p);
                } else {
                    // zeta^(half) = -1
                    out.coords[d - half] = checked_add(out.coords[d - half], -p);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: CycloInt) -> CycloInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        -&self
    }
}

// Deserialization validates the coordinate length against the level.
impl<'de> Deserialize<'de> for CycloInt {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Repr {
            k: u32,
            coords: Vec<i64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if !(1..=MAX_LEVEL).contains(&repr.k) {
            return Err(serde::de::Error::custom(format!(
                "cyclotomic level {} outside supported range",
                repr.k
            )));
        }
        if repr.coords.len() != 1usize << (repr.k - 1) {
            return Err(serde::de::Error::custom(format!(
                "expected {} coordinates at level {}, got {}",
                1usize << (repr.k - 1),
                repr.k,
                repr.coords.len()
            )));
        }
        Ok(CycloInt { k: repr.k, coords: repr.coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zeta_pow_examples() {
        assert_eq!(CycloInt::zeta_pow(3, 4).coords(), &[-1, 0, 0, 0]);
        assert_eq!(CycloInt::zeta_pow(2, 1).coords(), &[0, 1]);
        assert_eq!(CycloInt::zeta_pow(3, 7).coords(), &[0, 0, 0, -1]);
        assert_eq!(CycloInt::zeta_pow(3, -1), CycloInt::zeta_pow(3, 7));
    }

    #[test]
    fn mul_examples() {
        // (zeta_8 - zeta_8^3)^2 = 2, i.e. zeta_8 - zeta_8^3 = sqrt(2)
        let s = &CycloInt::zeta_pow(3, 1) - &CycloInt::zeta_pow(3, 3);
        assert!((&s * &s).is_int(2));

        let a = CycloInt::from_coords(3, vec![3, -1, 4, 2]);
        assert_eq!(&a * &CycloInt::one(3), a);

        // (1 + i)(1 - i) = 2 at k = 2
        let p = &CycloInt::from_coords(2, vec![1, 1]) * &CycloInt::from_coords(2, vec![1, -1]);
        assert!(p.is_int(2));
    }

    #[test]
    fn conj_examples() {
        let i = CycloInt::zeta_pow(2, 1);
        assert_eq!(i.conj(), CycloInt::zeta_pow(2, 3));
        assert_eq!(CycloInt::from_int(3, 5).conj(), CycloInt::from_int(3, 5));
        // conj(zeta_8) = zeta_8^(-1) = -zeta_8^3
        assert_eq!(CycloInt::zeta_pow(3, 1).conj(), CycloInt::zeta_pow(3, -1));
    }

    #[test]
    fn norm_sq_examples() {
        // 2^((n-1)/2) (1 + i) at n = 3: norm 8 = 2^3
        let v = CycloInt::from_coords(2, vec![2, 2]);
        assert!(v.norm_sq().is_int(8));
        assert!(CycloInt::zero(2).norm_sq().is_int(0));
        let s = &CycloInt::zeta_pow(3, 1) - &CycloInt::zeta_pow(3, 3);
        assert!(s.norm_sq().is_int(2));
    }

    #[test]
    fn lift_examples() {
        let i = CycloInt::zeta_pow(2, 1);
        assert_eq!(i.lift(3).unwrap(), CycloInt::zeta_pow(3, 2));
        assert_eq!(CycloInt::from_int(2, 5).lift(4).unwrap(), CycloInt::from_int(4, 5));
        let lifted = CycloInt::zeta_pow(2, 1).lift(4).unwrap();
        assert!(lifted.norm_sq().is_int(1));
        assert!(matches!(
            CycloInt::zero(3).lift(2),
            Err(CycloError::CannotLower { from: 3, to: 2 })
        ));
    }

    #[test]
    fn to_complex_examples() {
        assert_eq!(CycloInt::one(3).to_complex(), (1.0, 0.0));
        let (re, im) = CycloInt::zeta_pow(2, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = CycloInt::zeta_pow(3, 1).to_complex();
        assert!((re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((im - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn div_exact_detects_remainders() {
        let v = CycloInt::from_coords(2, vec![4, 6]);
        assert_eq!(v.div_exact(2).unwrap(), CycloInt::from_coords(2, vec![2, 3]));
        assert!(matches!(v.div_exact(4), Err(CycloError::InexactDivision { divisor: 4 })));
    }

    #[test]
    fn json_rendering() {
        let v = CycloInt::from_coords(3, vec![2, 0, 0, 0]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"k":3,"coords":[2,0,0,0]}"#);
        let back: CycloInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<CycloInt>(r#"{"k":3,"coords":[1]}"#).is_err());
    }

    fn arb_level() -> impl Strategy<Value = u32> {
        1u32..=5
    }

    proptest! {
        #[test]
        fn ring_axioms(k in arb_level(), seed in any::<u64>()) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let mut draw = || {
                let coords: Vec<i64> =
                    (0..CycloInt::basis_len(k)).map(|_| rng.below(201) as i64 - 100).collect();
                CycloInt::from_coords(k, coords)
            };
            let (a, b, c) = (draw(), draw(), draw());
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &CycloInt::zero(k), a.clone());
            prop_assert_eq!(&a * &CycloInt::one(k), a.clone());
        }

        #[test]
        fn norm_is_multiplicative(k in arb_level(), a in any::<u64>(), b in any::<u64>()) {
            let mut rng_a = crate::rng::SplitMix64::new(a);
            let mut rng_b = crate::rng::SplitMix64::new(b);
            let va = CycloInt::from_coords(
                k, (0..CycloInt::basis_len(k)).map(|_| rng_a.below(41) as i64 - 20).collect());
            let vb = CycloInt::from_coords(
                k, (0..CycloInt::basis_len(k)).map(|_| rng_b.below(41) as i64 - 20).collect());
            prop_assert_eq!((&va * &vb).norm_sq(), &va.norm_sq() * &vb.norm_sq());
            let (re, _) = va.norm_sq().to_complex();
            prop_assert!(re > -1e-6);
        }

        #[test]
        fn lift_is_a_ring_homomorphism(k in 1u32..=4, seed in any::<u64>()) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let mut draw = || {
                let coords: Vec<i64> =
                    (0..CycloInt::basis_len(k)).map(|_| rng.below(201) as i64 - 100).collect();
                CycloInt::from_coords(k, coords)
            };
            let (a, b) = (draw(), draw());
            let k2 = k + 1;
            prop_assert_eq!((&a + &b).lift(k2).unwrap(), &a.lift(k2).unwrap() + &b.lift(k2).unwrap());
            prop_assert_eq!((&a * &b).lift(k2).unwrap(), &a.lift(k2).unwrap() * &b.lift(k2).unwrap());
        }

        #[test]
        fn conj_is_an_involutive_automorphism(k in arb_level(), seed in any::<u64>()) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let mut draw = || {
                let coords: Vec<i64> =
                    (0..CycloInt::basis_len(k)).map(|_| rng.below(201) as i64 - 100).collect();
                CycloInt::from_coords(k, coords)
            };
            let (a, b) = (draw(), draw());
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn zeta_powers_multiply_by_exponent_addition(k in arb_level(), e in -64i64..64, f in -64i64..64) {
            prop_assert_eq!(
                &CycloInt::zeta_pow(k, e) * &CycloInt::zeta_pow(k, f),
                CycloInt::zeta_pow(k, e + f)
            );
            prop_assert_eq!(
                CycloInt::zeta_pow(k, e).mul_zeta_pow(f),
                CycloInt::zeta_pow(k, e + f)
            );
        }
    }
}

//! Exact arithmetic in `F_{2^n}` with elements encoded as n-bit integers.
//!
//! Elements live in the polynomial basis: bit `i` of the encoding is the
//! coefficient of `x^i`, so truth-table indices and field elements are
//! interchangeable. Multiplication goes through log/antilog tables keyed by a
//! verified generator; construction verifies the modulus irreducible and the
//! generator of full order, so everything downstream (traces, decimations,
//! coset splits) can trust the tables.

use std::fmt;

/// Largest supported extension degree. The built-in modulus table and the
/// factorization table for `2^n - 1` stop here.
pub const MAX_DEGREE: u32 = 16;

/// Low-weight irreducible (in fact primitive) polynomials over `F_2`,
/// encoded as (n+1)-bit integers, for 1 <= n <= 16.
const BUILTIN_MODULI: [u32; 16] = [
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11B,   // x^8 + x^4 + x^3 + x + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
];

/// Distinct prime factors of `2^n - 1` for 1 <= n <= 16, used to verify
/// generator order without a general factorizer.
const FACTORS_ORDER: [&[u32]; 16] = [
    &[],             // 2^1 - 1 = 1
    &[3],            // 3
    &[7],            // 7
    &[3, 5],         // 15
    &[31],           // 31
    &[3, 7],         // 63
    &[127],          // 127
    &[3, 5, 17],     // 255
    &[7, 73],        // 511
    &[3, 11, 31],    // 1023
    &[23, 89],       // 2047
    &[3, 5, 7, 13],  // 4095
    &[8191],         // 8191
    &[3, 43, 127],   // 16383
    &[7, 31, 151],   // 32767
    &[3, 5, 17, 257],// 65535
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// Degree outside the supported range 1..=16.
    UnsupportedDegree(u32),
    /// The supplied modulus polynomial is reducible over F_2.
    ReducibleModulus(u32),
    /// `m` does not divide `n`, so there is no subfield `F_{2^m}`.
    NotSubfield { m: u32, n: u32 },
    /// The multiplicative coset decomposition needs an even degree.
    OddDegree(u32),
    /// Could not parse a hex-encoded modulus polynomial.
    BadPolyEncoding(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::UnsupportedDegree(n) => {
                write!(f, "unsupported extension degree {} (supported: 1..={})", n, MAX_DEGREE)
            }
            FieldError::ReducibleModulus(p) => {
                write!(f, "modulus polynomial {:#x} is reducible over F_2", p)
            }
            FieldError::NotSubfield { m, n } => {
                write!(f, "{} does not divide {}: F_{{2^{}}} is not a subfield of F_{{2^{}}}", m, n, m, n)
            }
            FieldError::OddDegree(n) => {
                write!(f, "coset decomposition needs even degree, got n = {}", n)
            }
            FieldError::BadPolyEncoding(s) => write!(f, "cannot parse modulus polynomial {:?}", s),
        }
    }
}

impl std::error::Error for FieldError {}

/// A concrete model of `F_{2^n}`: verified modulus, verified generator,
/// log/antilog tables and a trace table.
///
/// Immutable after construction; share freely across threads.
#[derive(Clone)]
pub struct FieldCtx {
    n: u32,
    modulus: u32,
    generator: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
    trace_bits: Vec<u8>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("n", &self.n)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.modulus == other.modulus && self.generator == other.generator
    }
}

impl Eq for FieldCtx {}

fn poly_degree(p: u64) -> i64 {
    63 - p.leading_zeros() as i64
}

/// Carry-less product of two polynomials over F_2.
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    debug_assert!(dm >= 0);
    while poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

fn poly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    poly_rem(clmul(a, b), m)
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of `m` (degree n) over F_2: `x^(2^n) = x (mod m)` and
/// `gcd(x^(2^(n/q)) - x, m) = 1` for every prime q | n. The gcd form catches
/// mixed-degree factorizations that a bare `x^(2^d) != x` scan misses.
fn is_irreducible(m: u64) -> bool {
    let n = poly_degree(m);
    if n < 1 {
        return false;
    }
    let n = n as u32;
    // x^(2^d) mod m for d = 0..n via repeated squaring of the polynomial x.
    let x_red = poly_rem(0b10, m);
    let mut frob = vec![0u64; n as usize + 1];
    frob[0] = x_red;
    for d in 1..=n as usize {
        frob[d] = poly_mulmod(frob[d - 1], frob[d - 1], m);
    }
    if frob[n as usize] != x_red {
        return false;
    }
    for q in [2u32, 3, 5, 7, 11, 13] {
        if q <= n && n % q == 0 {
            let d = (n / q) as usize;
            if poly_gcd(frob[d] ^ x_red, m) != 1 {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Builds `F_{2^n}` with the built-in low-weight modulus for `n`.
    pub fn new(n: u32) -> Result<FieldCtx, FieldError> {
        if n < 1 || n > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(n));
        }
        FieldCtx::with_modulus(BUILTIN_MODULI[(n - 1) as usize])
    }

    /// Builds the field from an explicit modulus polynomial; the degree is
    /// read off the encoding. Irreducibility and generator order are checked.
    pub fn with_modulus(modulus: u32) -> Result<FieldCtx, FieldError> {
        let deg = poly_degree(modulus as u64);
        if deg < 1 || deg as u32 > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(deg.max(0) as u32));
        }
        let n = deg as u32;
        if !is_irreducible(modulus as u64) {
            return Err(FieldError::ReducibleModulus(modulus));
        }
        let order: u32 = (1u32 << n) - 1;
        let primes = FACTORS_ORDER[(n - 1) as usize];

        let raw_mul = |a: u32, b: u32| poly_mulmod(a as u64, b as u64, modulus as u64) as u32;
        let raw_pow = |mut base: u32, mut e: u32| {
            let mut acc = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = raw_mul(acc, base);
                }
                base = raw_mul(base, base);
                e >>= 1;
            }
            acc
        };

        let generator = if n == 1 {
            1
        } else {
            (2..(1u32 << n))
                .find(|&g| primes.iter().all(|&p| raw_pow(g, order / p) != 1))
                .expect("cyclic group F_{2^n}* always has a generator")
        };

        let size = 1usize << n;
        let mut antilog = vec![0u32; order as usize];
        let mut log = vec![0u32; size];
        let mut acc = 1u32;
        for (j, slot) in antilog.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = j as u32;
            acc = raw_mul(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order must be 2^n - 1");

        let mut trace_bits = vec![0u8; size];
        for (a, bit) in trace_bits.iter_mut().enumerate() {
            let mut t = a as u32;
            let mut s = a as u32;
            for _ in 1..n {
                t = raw_mul(t, t);
                s ^= t;
            }
            debug_assert!(s <= 1, "absolute trace must land in F_2");
            *bit = s as u8;
        }

        Ok(FieldCtx { n, modulus, generator, log, antilog, trace_bits })
    }

    /// Parses `0x`-prefixed (or bare) hex into a modulus and builds the field.
    pub fn from_poly_hex(s: &str) -> Result<FieldCtx, FieldError> {
        let body = s.trim().trim_start_matches("0x").trim_start_matches("0X");
        let poly = u32::from_str_radix(body, 16)
            .map_err(|_| FieldError::BadPolyEncoding(s.to_string()))?;
        FieldCtx::with_modulus(poly)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Hex rendering of the modulus, e.g. `0x13` for x^4 + x + 1.
    pub fn poly_hex(&self) -> String {
        format!("{:#x}", self.modulus)
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Number of field elements, `2^n`.
    pub fn size(&self) -> usize {
        1usize << self.n
    }

    /// Order of the multiplicative group, `2^n - 1`.
    pub fn order(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    /// Field addition (XOR of encodings).
    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a ^ b) & self.mask()
    }

    /// Field product via log/antilog tables; inputs are masked to n bits.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let a = a & self.mask();
        let b = b & self.mask();
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % self.order();
        self.antilog[s as usize]
    }

    /// `a^e`, with `0^0 = 1` and `0^e = 0` for e > 0.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let a = a & self.mask();
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let ord = self.order() as u64;
        let r = (self.log[a as usize] as u64 * (e % ord)) % ord;
        self.antilog[r as usize]
    }

    /// Multiplicative inverse `a^(2^n - 2)` of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        let a = a & self.mask();
        assert!(a != 0, "zero has no multiplicative inverse");
        let ord = self.order();
        self.antilog[((ord - self.log[a as usize]) % ord) as usize]
    }

    /// Absolute trace `Tr(a) = a + a^2 + ... + a^(2^(n-1))`, in {0, 1}.
    pub fn trace(&self, a: u32) -> u8 {
        self.trace_bits[(a & self.mask()) as usize]
    }

    /// Relative trace onto `F_{2^m}`: sum of `a^(2^(jm))` for j = 0..n/m.
    pub fn rel_trace(&self, m: u32, a: u32) -> Result<u32, FieldError> {
        if m == 0 || self.n % m != 0 {
            return Err(FieldError::NotSubfield { m, n: self.n });
        }
        let mut acc = 0u32;
        let mut t = a & self.mask();
        for _ in 0..self.n / m {
            acc ^= t;
            for _ in 0..m {
                t = self.mul(t, t);
            }
        }
        debug_assert_eq!(self.pow(acc, 1u64 << m), acc, "relative trace lands in the subfield");
        Ok(acc)
    }

    /// The elements of the subfield `F_{2^m}` inside this field, ascending by
    /// encoding (so index 0 is always the zero element).
    pub fn subfield_elements(&self, m: u32) -> Result<Vec<u32>, FieldError> {
        if m == 0 || self.n % m != 0 {
            return Err(FieldError::NotSubfield { m, n: self.n });
        }
        Ok((0..self.size() as u32)
            .filter(|&x| self.pow(x, 1u64 << m) == x)
            .collect())
    }

    /// Multiplicative decomposition `F_{2^n}* = F_{2^m}* x U` for n = 2m.
    ///
    /// Both lists run over powers of canonical generators (`g^(2^m + 1)` for
    /// the subfield, `g^(2^m - 1)` for U), so the ordering is reproducible.
    pub fn coset_decompose(&self) -> Result<CosetDecomposition, FieldError> {
        if self.n % 2 != 0 {
            return Err(FieldError::OddDegree(self.n));
        }
        let m = self.n / 2;
        let half: u32 = 1u32 << m;
        let sub_gen = self.pow(self.generator, (half + 1) as u64);
        let u_gen = self.pow(self.generator, (half - 1) as u64);
        let subfield_star: Vec<u32> = (0..half - 1)
            .scan(1u32, |acc, _| {
                let cur = *acc;
                *acc = self.mul(*acc, sub_gen);
                Some(cur)
            })
            .collect();
        let unit_group: Vec<u32> = (0..half + 1)
            .scan(1u32, |acc, _| {
                let cur = *acc;
                *acc = self.mul(*acc, u_gen);
                Some(cur)
            })
            .collect();
        Ok(CosetDecomposition { subfield_star, unit_group })
    }

    /// Sorted decimation exponents `1 <= i <= 2^n - 2` with gcd(i, 2^n-1) = 1.
    /// Always contains 1; degenerate n = 1 yields just `[1]`.
    pub fn coprime_exponents(&self) -> Vec<u32> {
        let ord = self.order();
        if ord <= 1 {
            return vec![1];
        }
        (1..ord).filter(|&i| gcd(i, ord) == 1).collect()
    }

    /// Inverse of a coprime decimation exponent modulo `2^n - 1`.
    pub fn inverse_exponent(&self, i: u32) -> Option<u32> {
        let ord = self.order();
        if ord <= 1 {
            return Some(1);
        }
        mod_inverse(i % ord, ord)
    }

    /// The mask `t(u)` with bit i = Tr(u * x^i), so that `Tr(ux)` equals the
    /// dot product `t(u) . x` on bit vectors. Nondegeneracy of the trace form
    /// makes `t` a linear bijection.
    pub fn dot_mask(&self, u: u32) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.n {
            if self.trace(self.mul(u, 1 << i)) == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Output of [`FieldCtx::coset_decompose`]: the nonzero subfield elements and
/// the order-(2^m + 1) cyclic subgroup U, each in generator-power order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub subfield_star: Vec<u32>,
    pub unit_group: Vec<u32>,
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mod_inverse(a: u32, modulus: u32) -> Option<u32> {
    let (mut old_r, mut r) = (a as i64, modulus as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(modulus as i64) as u32)
}

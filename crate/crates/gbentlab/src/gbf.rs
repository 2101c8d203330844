//! Generalized Boolean functions `f: V_n -> Z_{2^k}` as dense truth tables.
//!
//! A function carries its domain flavor: `vector` domains pair points with
//! the dot product `u.x`, `field` domains carry a [`FieldCtx`] and pair with
//! `Tr(ux)`. Points and field elements share the n-bit integer encoding, so
//! the two flavors differ only in the inner product and in whether decimation
//! `x -> x^i` is available.

use crate::cyclo::CycloInt;
use crate::field::{gcd, FieldCtx};
use std::fmt;
use std::sync::Arc;

/// Hard cap on input bits; spectra are materialized in full, so anything
/// larger stops being a desk-scale object anyway.
pub const MAX_VARS: u32 = 24;

/// Output levels are capped with the cyclotomic basis (values in `Z_{2^k}`).
pub const MAX_LEVEL: u32 = crate::cyclo::MAX_LEVEL;

#[derive(Debug, Clone, PartialEq)]
pub enum GbfError {
    VarsOutOfRange(u32),
    LevelOutOfRange(u32),
    TableLength { expected: usize, got: usize },
    ValueOutOfRange { index: usize, value: u16, k: u32 },
    FieldDegreeMismatch { ctx_n: u32, n: u32 },
    NotFieldDomain,
    NotCoprime { i: u32, order: u32 },
    ComponentOutOfRange { c: u32, k: u32 },
    SplitOutOfRange { t: u32, k: u32 },
    NotDivisor { t: u32, k: u32 },
    ComponentLength { expected: usize, got: usize },
    ComponentValue { index: usize, value: u16, t: u32 },
    Incompatible(String),
    Parse(String),
}

impl fmt::Display for GbfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbfError::VarsOutOfRange(n) => {
                write!(f, "number of inputs {} outside supported range 1..={}", n, MAX_VARS)
            }
            GbfError::LevelOutOfRange(k) => {
                write!(f, "output level {} outside supported range 1..={}", k, MAX_LEVEL)
            }
            GbfError::TableLength { expected, got } => {
                write!(f, "truth table must have 2^n = {} entries, got {}", expected, got)
            }
            GbfError::ValueOutOfRange { index, value, k } => {
                write!(f, "table[{}] = {} exceeds 2^k - 1 at k = {}", index, value, k)
            }
            GbfError::FieldDegreeMismatch { ctx_n, n } => {
                write!(f, "field context has degree {} but the function has {} inputs", ctx_n, n)
            }
            GbfError::NotFieldDomain => {
                write!(f, "operation needs a field-structured domain")
            }
            GbfError::NotCoprime { i, order } => {
                write!(f, "decimation exponent {} is not coprime to {}", i, order)
            }
            GbfError::ComponentOutOfRange { c, k } => {
                write!(f, "component index {} needs k - 1 = {} bits", c, k - 1)
            }
            GbfError::SplitOutOfRange { t, k } => {
                write!(f, "split position t = {} must satisfy 1 <= t < k = {}", t, k)
            }
            GbfError::NotDivisor { t, k } => write!(f, "t = {} does not divide k = {}", t, k),
            GbfError::ComponentLength { expected, got } => {
                write!(f, "component vector needs {} entries, got {}", expected, got)
            }
            GbfError::ComponentValue { index, value, t } => {
                write!(f, "component coefficient c[{}] = {} exceeds 2^t - 1 at t = {}", index, value, t)
            }
            GbfError::Incompatible(msg) => write!(f, "{}", msg),
            GbfError::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for GbfError {}

/// Domain flavor: plain bit vectors with the dot product, or `F_{2^n}` with
/// the trace product (and decimations).
#[derive(Clone)]
pub enum Domain {
    Vector,
    Field(Arc<FieldCtx>),
}

impl Domain {
    pub fn field(ctx: impl Into<Arc<FieldCtx>>) -> Domain {
        Domain::Field(ctx.into())
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Domain::Field(_))
    }

    pub fn ctx(&self) -> Option<&Arc<FieldCtx>> {
        match self {
            Domain::Vector => None,
            Domain::Field(ctx) => Some(ctx),
        }
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Vector => write!(f, "vector"),
            Domain::Field(ctx) => write!(f, "field({})", ctx.poly_hex()),
        }
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Domain::Vector, Domain::Vector) => true,
            (Domain::Field(a), Domain::Field(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Domain {}

/// Dense generalized Boolean function: `2^n` values, each in `[0, 2^k)`.
#[derive(Clone, PartialEq)]
pub struct Gbf {
    n: u32,
    k: u32,
    domain: Domain,
    table: Vec<u16>,
}

impl fmt::Debug for Gbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gbf(n={}, k={}, domain={:?})", self.n, self.k, self.domain)
    }
}

/// Histogram of the values taken by a (shifted) function: entry `rho` counts
/// the points where the function equals `rho`. Entries always sum to `2^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueDistribution {
    counts: Vec<u64>,
}

impl ValueDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Character sum `sum_rho counts[rho] * zeta^rho` at level k.
    pub fn character_sum(&self, k: u32) -> CycloInt {
        let half = CycloInt::basis_len(k);
        let mut coords = vec![0i64; half];
        for (rho, &c) in self.counts.iter().enumerate() {
            if rho < half {
                coords[rho] += c as i64;
            } else {
                coords[rho - half] -= c as i64;
            }
        }
        CycloInt::from_coords(k, coords)
    }
}

impl Gbf {
    pub fn new(n: u32, k: u32, domain: Domain, table: Vec<u16>) -> Result<Gbf, GbfError> {
        if n < 1 || n > MAX_VARS {
            return Err(GbfError::VarsOutOfRange(n));
        }
        if k < 1 || k > MAX_LEVEL {
            return Err(GbfError::LevelOutOfRange(k));
        }
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(GbfError::TableLength { expected, got: table.len() });
        }
        let max = (1u32 << k) as u16;
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= max) {
            return Err(GbfError::ValueOutOfRange { index, value, k });
        }
        if let Domain::Field(ctx) = &domain {
            if ctx.n() != n {
                return Err(GbfError::FieldDegreeMismatch { ctx_n: ctx.n(), n });
            }
        }
        Ok(Gbf { n, k, domain, table })
    }

    pub fn zero(n: u32, k: u32, domain: Domain) -> Result<Gbf, GbfError> {
        Gbf::new(n, k, domain, vec![0; 1usize << n])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn value(&self, x: u32) -> u16 {
        self.table[x as usize]
    }

    /// Inner product `<u, x>`: dot product on vector domains, `Tr(ux)` on
    /// field domains.
    pub fn inner(&self, u: u32, x: u32) -> u8 {
        match &self.domain {
            Domain::Vector => ((u & x).count_ones() & 1) as u8,
            Domain::Field(ctx) => ctx.trace(ctx.mul(u, x)),
        }
    }

    /// Binary-digit decomposition `f = a_1 + 2 a_2 + ... + 2^(k-1) a_k` into
    /// k Boolean functions, least significant first.
    pub fn digits(&self) -> Vec<Gbf> {
        (0..self.k)
            .map(|bit| {
                let table = self.table.iter().map(|&v| (v >> bit) & 1).collect();
                Gbf { n: self.n, k: 1, domain: self.domain.clone(), table }
            })
            .collect()
    }

    /// Component function: XOR of the digits selected by the bits of `c`
    /// (bit j picks digit a_(j+1)), with the top digit a_k always included.
    /// `c` must fit in k - 1 bits.
    pub fn component_gc(&self, c: u32) -> Result<Gbf, GbfError> {
        if c >= (1u32 << (self.k - 1)) {
            return Err(GbfError::ComponentOutOfRange { c, k: self.k });
        }
        let mask = (c | (1 << (self.k - 1))) as u16;
        let table = self.table.iter().map(|&v| ((v & mask).count_ones() & 1) as u16).collect();
        Ok(Gbf { n: self.n, k: 1, domain: self.domain.clone(), table })
    }

    /// Splits `f = g + 2^t h` into the low part `g = f mod 2^t` (level 2^t)
    /// and the high part `h = f div 2^t` (level 2^(k-t)).
    pub fn split_low_high(&self, t: u32) -> Result<(Gbf, Gbf), GbfError> {
        if t < 1 || t >= self.k {
            return Err(GbfError::SplitOutOfRange { t, k: self.k });
        }
        let mask = ((1u32 << t) - 1) as u16;
        let low = self.table.iter().map(|&v| v & mask).collect();
        let high = self.table.iter().map(|&v| v >> t).collect();
        Ok((
            Gbf { n: self.n, k: t, domain: self.domain.clone(), table: low },
            Gbf { n: self.n, k: self.k - t, domain: self.domain.clone(), table: high },
        ))
    }

    /// Inverse of [`Gbf::split_low_high`]: rebuilds `g + 2^t h` at level
    /// `g.k + h.k` where `t = g.k`.
    pub fn join_low_high(low: &Gbf, high: &Gbf) -> Result<Gbf, GbfError> {
        if low.n != high.n || low.domain != high.domain {
            return Err(GbfError::Incompatible(
                "join needs matching input size and domain".to_string(),
            ));
        }
        let k = low.k + high.k;
        if k > MAX_LEVEL {
            return Err(GbfError::LevelOutOfRange(k));
        }
        let table = low
            .table
            .iter()
            .zip(&high.table)
            .map(|(&g, &h)| g + (h << low.k))
            .collect();
        Ok(Gbf { n: low.n, k, domain: low.domain.clone(), table })
    }

    /// Base-`2^t` digit blocks `f = b_1 + 2^t b_2 + ... + 2^((l-1)t) b_l`,
    /// l = k/t blocks at level `2^t`, least significant first.
    pub fn base2t_blocks(&self, t: u32) -> Result<Vec<Gbf>, GbfError> {
        if t < 1 || self.k % t != 0 {
            return Err(GbfError::NotDivisor { t, k: self.k });
        }
        let l = self.k / t;
        let mask = ((1u32 << t) - 1) as u16;
        Ok((0..l)
            .map(|j| {
                let table = self.table.iter().map(|&v| (v >> (j * t)) & mask).collect();
                Gbf { n: self.n, k: t, domain: self.domain.clone(), table }
            })
            .collect())
    }

    /// `Z_{2^t}`-linear component `c_1 b_1 + ... + c_(l-1) b_(l-1) + b_l`
    /// (mod 2^t) of the base-`2^t` blocks; `c` has l - 1 entries below 2^t.
    pub fn component_base2t(&self, t: u32, c: &[u16]) -> Result<Gbf, GbfError> {
        if t < 1 || self.k % t != 0 {
            return Err(GbfError::NotDivisor { t, k: self.k });
        }
        let l = (self.k / t) as usize;
        if c.len() != l - 1 {
            return Err(GbfError::ComponentLength { expected: l - 1, got: c.len() });
        }
        let modulus = 1u32 << t;
        if let Some((index, &value)) = c.iter().enumerate().find(|(_, &v)| v as u32 >= modulus) {
            return Err(GbfError::ComponentValue { index, value, t });
        }
        let mask = (modulus - 1) as u16;
        let table = self
            .table
            .iter()
            .map(|&v| {
                let mut acc = ((v >> ((l as u32 - 1) * t)) & mask) as u32;
                for (j, &cj) in c.iter().enumerate() {
                    let bj = ((v >> (j as u32 * t)) & mask) as u32;
                    acc += cj as u32 * bj;
                }
                (acc % modulus) as u16
            })
            .collect();
        Ok(Gbf { n: self.n, k: t, domain: self.domain.clone(), table })
    }

    /// The shifted function `f_u(x) = f(x) + 2^(k-1) <u, x>` (mod 2^k).
    pub fn shift_msb(&self, u: u32) -> Gbf {
        let top = 1u16 << (self.k - 1);
        let modulus = 1u32 << self.k;
        let table = self
            .table
            .iter()
            .enumerate()
            .map(|(x, &v)| {
                if self.inner(u, x as u32) == 1 {
                    ((v as u32 + top as u32) % modulus) as u16
                } else {
                    v
                }
            })
            .collect();
        Gbf { n: self.n, k: self.k, domain: self.domain.clone(), table }
    }

    /// Pointwise `(self + factor * other) mod 2^k`, same inputs and domain.
    pub fn plus_scaled_mod(&self, other: &Gbf, factor: u32) -> Result<Gbf, GbfError> {
        if self.n != other.n || self.domain != other.domain {
            return Err(GbfError::Incompatible(
                "pointwise combination needs matching input size and domain".to_string(),
            ));
        }
        let modulus = 1u32 << self.k;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| ((a as u32 + factor * b as u32) % modulus) as u16)
            .collect();
        Ok(Gbf { n: self.n, k: self.k, domain: self.domain.clone(), table })
    }

    /// Adds the constant `c` pointwise (mod 2^k).
    pub fn plus_const(&self, c: u16) -> Gbf {
        let modulus = 1u32 << self.k;
        let table = self.table.iter().map(|&v| ((v as u32 + c as u32) % modulus) as u16).collect();
        Gbf { n: self.n, k: self.k, domain: self.domain.clone(), table }
    }

    /// Input translation `x -> x ^ a` (addition in both domain flavors).
    pub fn translate(&self, a: u32) -> Gbf {
        let table = (0..self.table.len())
            .map(|x| self.table[x ^ a as usize])
            .collect();
        Gbf { n: self.n, k: self.k, domain: self.domain.clone(), table }
    }

    /// Decimation `g(x) = f(x^i)` with `0^i = 0`; field domains only,
    /// and `i` must be coprime to `2^n - 1` so the substitution permutes.
    pub fn decimate(&self, i: u32) -> Result<Gbf, GbfError> {
        let ctx = match &self.domain {
            Domain::Vector => return Err(GbfError::NotFieldDomain),
            Domain::Field(ctx) => ctx,
        };
        let order = ctx.order();
        if order > 1 && gcd(i % order, order) != 1 {
            return Err(GbfError::NotCoprime { i, order });
        }
        let table = (0..self.table.len() as u32)
            .map(|x| self.table[ctx.pow(x, i as u64) as usize])
            .collect();
        Ok(Gbf { n: self.n, k: self.k, domain: self.domain.clone(), table })
    }

    /// Histogram of `shift_msb(f, u)`.
    pub fn value_distribution(&self, u: u32) -> ValueDistribution {
        let mut counts = vec![0u64; 1usize << self.k];
        let top = 1u32 << (self.k - 1);
        let modulus = 1u32 << self.k;
        for (x, &v) in self.table.iter().enumerate() {
            let shifted = if self.inner(u, x as u32) == 1 {
                (v as u32 + top) % modulus
            } else {
                v as u32
            };
            counts[shifted as usize] += 1;
        }
        ValueDistribution { counts }
    }

}

// ---------------------------------------------------------------------------
// Serialization: canonical JSON plus a whitespace text format.

impl Gbf {
    /// Canonical JSON, e.g.
    /// `{"n":4,"k":3,"domain":"field","poly":"0x13","table":[0,5,...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GbfRepr::from(self)).expect("GBF serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Gbf, GbfError> {
        let repr: GbfRepr =
            serde_json::from_str(s).map_err(|e| GbfError::Parse(e.to_string()))?;
        repr.build()
    }

    /// Text format: header `gbf n k domain [poly]`, then the 2^n values in
    /// any whitespace arrangement.
    pub fn to_text(&self) -> String {
        let mut out = match &self.domain {
            Domain::Vector => format!("gbf {} {} vector\n", self.n, self.k),
            Domain::Field(ctx) => format!("gbf {} {} field {}\n", self.n, self.k, ctx.poly_hex()),
        };
        for chunk in self.table.chunks(16) {
            let line: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Gbf, GbfError> {
        let mut tokens = s.split_whitespace();
        match tokens.next() {
            Some("gbf") => {}
            other => return Err(GbfError::Parse(format!("expected 'gbf' header, got {:?}", other))),
        }
        let n: u32 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GbfError::Parse("missing or bad n".to_string()))?;
        let k: u32 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GbfError::Parse("missing or bad k".to_string()))?;
        let domain = match tokens.next() {
            Some("vector") => Domain::Vector,
            Some("field") => {
                let poly = tokens
                    .next()
                    .ok_or_else(|| GbfError::Parse("field domain needs a poly".to_string()))?;
                let ctx = FieldCtx::from_poly_hex(poly)
                    .map_err(|e| GbfError::Parse(e.to_string()))?;
                Domain::field(ctx)
            }
            other => return Err(GbfError::Parse(format!("bad domain {:?}", other))),
        };
        let table: Result<Vec<u16>, _> = tokens.map(|t| t.parse::<u16>()).collect();
        let table = table.map_err(|e| GbfError::Parse(e.to_string()))?;
        Gbf::new(n, k, domain, table)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GbfRepr {
    n: u32,
    k: u32,
    domain: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    table: Vec<u16>,
}

impl From<&Gbf> for GbfRepr {
    fn from(f: &Gbf) -> GbfRepr {
        GbfRepr {
            n: f.n,
            k: f.k,
            domain: if f.domain.is_field() { "field" } else { "vector" }.to_string(),
            poly: f.domain.ctx().map(|ctx| ctx.poly_hex()),
            table: f.table.clone(),
        }
    }
}

impl GbfRepr {
    fn build(self) -> Result<Gbf, GbfError> {
        let domain = match self.domain.as_str() {
            "vector" => Domain::Vector,
            "field" => {
                let poly = self
                    .poly
                    .ok_or_else(|| GbfError::Parse("field domain needs a poly".to_string()))?;
                Domain::field(
                    FieldCtx::from_poly_hex(&poly).map_err(|e| GbfError::Parse(e.to_string()))?,
                )
            }
            other => return Err(GbfError::Parse(format!("unknown domain {:?}", other))),
        };
        Gbf::new(self.n, self.k, domain, self.table)
    }
}

/// Uniformly random table at the given shape, reproducible from the seed.
pub fn random_gbf(n: u32, k: u32, domain: Domain, rng: &mut crate::rng::SplitMix64) -> Gbf {
    let table = (0..1usize << n).map(|_| rng.below(1 << k) as u16).collect();
    Gbf::new(n, k, domain, table).expect("random table is well-formed by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector_gbf(n: u32, k: u32, table: Vec<u16>) -> Gbf {
        Gbf::new(n, k, Domain::Vector, table).unwrap()
    }

    fn random_field_gbf(n: u32, k: u32, seed: u64) -> Gbf {
        let ctx = FieldCtx::new(n).unwrap();
        let mut rng = crate::rng::SplitMix64::new(seed);
        random_gbf(n, k, Domain::field(ctx), &mut rng)
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(
            Gbf::new(2, 2, Domain::Vector, vec![0, 1, 2]),
            Err(GbfError::TableLength { expected: 4, got: 3 })
        );
        assert_eq!(
            Gbf::new(2, 2, Domain::Vector, vec![0, 1, 2, 4]),
            Err(GbfError::ValueOutOfRange { index: 3, value: 4, k: 2 })
        );
        let ctx = FieldCtx::new(3).unwrap();
        assert_eq!(
            Gbf::new(2, 2, Domain::field(ctx), vec![0, 1, 2, 3]),
            Err(GbfError::FieldDegreeMismatch { ctx_n: 3, n: 2 })
        );
    }

    #[test]
    fn digits_decompose_and_recompose() {
        let f = vector_gbf(2, 1, vec![0, 1, 1, 0]);
        assert_eq!(f.digits()[0], f);

        let c = vector_gbf(2, 3, vec![4, 4, 4, 4]);
        let digits = c.digits();
        assert!(digits[0].table().iter().all(|&v| v == 0));
        assert!(digits[1].table().iter().all(|&v| v == 0));
        assert!(digits[2].table().iter().all(|&v| v == 1));

        let mut rng = crate::rng::SplitMix64::new(41);
        let f = random_gbf(4, 4, Domain::Vector, &mut rng);
        let digits = f.digits();
        for x in 0..f.len() as u32 {
            let recomposed: u16 =
                digits.iter().enumerate().map(|(j, d)| d.value(x) << j).sum();
            assert_eq!(recomposed, f.value(x));
        }
    }

    #[test]
    fn component_gc_examples() {
        let mut rng = crate::rng::SplitMix64::new(5);
        let f = random_gbf(3, 3, Domain::Vector, &mut rng);
        let digits = f.digits();
        // c = 0 picks just the top digit
        assert_eq!(f.component_gc(0).unwrap(), digits[2]);
        // c = (1, 0): a_1 xor a_3 pointwise
        let g = f.component_gc(0b01).unwrap();
        for x in 0..f.len() as u32 {
            assert_eq!(g.value(x), digits[0].value(x) ^ digits[2].value(x));
        }
        assert!(f.component_gc(4).is_err());

        let q = vector_gbf(2, 2, vec![0, 1, 2, 3]);
        let g1 = q.component_gc(1).unwrap();
        let d = q.digits();
        for x in 0..4 {
            assert_eq!(g1.value(x), d[0].value(x) ^ d[1].value(x));
        }
    }

    #[test]
    fn split_and_join_roundtrip() {
        let mut rng = crate::rng::SplitMix64::new(99);
        let f = random_gbf(3, 4, Domain::Vector, &mut rng);
        for t in 1..4 {
            let (g, h) = f.split_low_high(t).unwrap();
            assert_eq!(g.k(), t);
            assert_eq!(h.k(), 4 - t);
            for x in 0..f.len() as u32 {
                assert_eq!(f.value(x), g.value(x) + (h.value(x) << t));
            }
            assert_eq!(Gbf::join_low_high(&g, &h).unwrap(), f);
        }
        assert!(f.split_low_high(0).is_err());
        assert!(f.split_low_high(4).is_err());

        let z = Gbf::zero(3, 4, Domain::Vector).unwrap();
        let (g, h) = z.split_low_high(2).unwrap();
        assert!(g.table().iter().all(|&v| v == 0));
        assert!(h.table().iter().all(|&v| v == 0));
    }

    #[test]
    fn base2t_blocks_examples() {
        let mut rng = crate::rng::SplitMix64::new(3);
        let f = random_gbf(3, 4, Domain::Vector, &mut rng);
        assert_eq!(f.base2t_blocks(4).unwrap(), vec![f.clone()]);
        assert_eq!(f.base2t_blocks(1).unwrap(), f.digits());
        assert!(f.base2t_blocks(3).is_err());

        let g = vector_gbf(2, 4, vec![13, 0, 7, 15]);
        let blocks = g.base2t_blocks(2).unwrap();
        // 13 = 1 + 4 * 3
        assert_eq!(blocks[0].value(0), 1);
        assert_eq!(blocks[1].value(0), 3);
        for x in 0..4 {
            assert_eq!(g.value(x), blocks[0].value(x) + 4 * blocks[1].value(x));
        }
    }

    #[test]
    fn component_base2t_examples() {
        let mut rng = crate::rng::SplitMix64::new(17);
        let f = random_gbf(3, 4, Domain::Vector, &mut rng);
        let blocks = f.base2t_blocks(2).unwrap();

        // all-zero coefficients pick the top block
        assert_eq!(f.component_base2t(2, &[0]).unwrap(), blocks[1]);

        // c = (3): 3 b_1 + b_2 mod 4 pointwise
        let g = f.component_base2t(2, &[3]).unwrap();
        for x in 0..f.len() as u32 {
            assert_eq!(g.value(x) as u32, (3 * blocks[0].value(x) as u32 + blocks[1].value(x) as u32) % 4);
        }

        // t = 1 specializes to component_gc for every c
        for c in 0..8u32 {
            let bits: Vec<u16> = (0..3).map(|j| ((c >> j) & 1) as u16).collect();
            assert_eq!(f.component_base2t(1, &bits).unwrap(), f.component_gc(c).unwrap());
        }

        assert!(f.component_base2t(2, &[1, 2]).is_err());
        assert!(f.component_base2t(2, &[4]).is_err());
    }

    #[test]
    fn shift_msb_examples() {
        let mut rng = crate::rng::SplitMix64::new(23);
        let f = random_gbf(4, 3, Domain::Vector, &mut rng);
        assert_eq!(f.shift_msb(0), f);
        assert_eq!(f.shift_msb(9).shift_msb(9), f);

        let b = vector_gbf(2, 1, vec![0, 1, 1, 1]);
        let shifted = b.shift_msb(0b10);
        for x in 0..4u32 {
            assert_eq!(shifted.value(x), b.value(x) ^ b.inner(0b10, x) as u16);
        }
    }

    #[test]
    fn shift_msb_commutes_with_digits_below_top() {
        let f = random_field_gbf(4, 3, 7);
        for u in [1u32, 6, 11] {
            let shifted_digits = f.shift_msb(u).digits();
            let digits = f.digits();
            for m in 0..2 {
                assert_eq!(shifted_digits[m], digits[m]);
            }
            for x in 0..f.len() as u32 {
                assert_eq!(
                    shifted_digits[2].value(x),
                    digits[2].value(x) ^ f.inner(u, x) as u16
                );
            }
        }
    }

    #[test]
    fn decimate_examples() {
        let f = random_field_gbf(4, 2, 13);
        assert_eq!(f.decimate(1).unwrap(), f);

        // Frobenius: x -> x^2 permutes the table
        let frob = f.decimate(2).unwrap();
        let mut sorted_a = f.table().to_vec();
        let mut sorted_b = frob.table().to_vec();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        assert_eq!(sorted_a, sorted_b);

        // i then its modular inverse restores f
        let ctx = FieldCtx::new(4).unwrap();
        for i in ctx.coprime_exponents() {
            let j = ctx.inverse_exponent(i).unwrap();
            assert_eq!(f.decimate(i).unwrap().decimate(j).unwrap(), f);
        }

        assert_eq!(f.decimate(3), Err(GbfError::NotCoprime { i: 3, order: 15 }));
        let v = vector_gbf(2, 1, vec![0, 1, 1, 0]);
        assert_eq!(v.decimate(1), Err(GbfError::NotFieldDomain));
    }

    #[test]
    fn value_distribution_examples() {
        let z = Gbf::zero(3, 2, Domain::Vector).unwrap();
        assert_eq!(z.value_distribution(0).counts(), &[8, 0, 0, 0]);

        // f = 2 x1 x2 on two variables
        let f = vector_gbf(2, 2, vec![0, 0, 0, 2]);
        assert_eq!(f.value_distribution(0).counts(), &[3, 0, 1, 0]);

        let mut rng = crate::rng::SplitMix64::new(2);
        let g = random_gbf(4, 3, Domain::Vector, &mut rng);
        for u in 0..16 {
            let total: u64 = g.value_distribution(u).counts().iter().sum();
            assert_eq!(total, 16);
        }
    }

    #[test]
    fn json_and_text_roundtrip() {
        let f = random_field_gbf(4, 3, 55);
        let json = f.to_json();
        assert!(json.contains("\"poly\":\"0x13\""));
        assert_eq!(Gbf::from_json(&json).unwrap(), f);

        let text = f.to_text();
        assert!(text.starts_with("gbf 4 3 field 0x13"));
        assert_eq!(Gbf::from_text(&text).unwrap(), f);

        let mut rng = crate::rng::SplitMix64::new(56);
        let v = random_gbf(3, 2, Domain::Vector, &mut rng);
        assert_eq!(Gbf::from_json(&v.to_json()).unwrap(), v);
        assert_eq!(Gbf::from_text(&v.to_text()).unwrap(), v);

        assert!(Gbf::from_json("{\"n\":2,\"k\":1,\"domain\":\"vector\",\"table\":[0,1]}").is_err());
        assert!(Gbf::from_text("nope").is_err());
    }
}

//! Exact Walsh-Hadamard transforms for generalized Boolean functions.
//!
//! Two permanent, independent paths compute the generalized transform
//! `H_f(u) = sum_x zeta^f(x) (-1)^<u,x>`:
//!
//! * [`gwht_direct`] groups points by value and sums characters, the
//!   O(4^n) reference path;
//! * [`gwht_fast_components`] runs one fast Boolean butterfly per component
//!   function and recombines them exactly in `Z[zeta_{2^k}]`.
//!
//! The two must agree coordinate-for-coordinate on every input; the crate's
//! tests and the `bench` subcommand treat any disagreement as a bug alarm.
//! Decimated (extended) spectra and the base-`2^t` recombination live here
//! too.

use crate::cyclo::{CycloError, CycloInt};
use crate::gbf::{Domain, Gbf, GbfError};
use crate::par;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// The fast Boolean butterfly only runs at level k = 1.
    NotBoolean { k: u32 },
    /// Decimated spectra need a field-structured domain.
    NotFieldDomain,
    /// Decimation exponent shares a factor with 2^n - 1.
    NotCoprime { i: u32 },
    /// Wrong number of component spectra for the requested recombination.
    ComponentCount { expected: usize, got: usize },
    /// Component spectra disagree on shape (n or level).
    ComponentShape(String),
    /// t must divide k.
    NotDivisor { t: u32, k: u32 },
    /// The recombination's final division was not exact: bug signal, not a
    /// data error.
    InexactCombination,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NotBoolean { k } => {
                write!(f, "fast Boolean transform needs k = 1, got k = {}", k)
            }
            SpectralError::NotFieldDomain => {
                write!(f, "decimated spectra need a field-structured domain")
            }
            SpectralError::NotCoprime { i } => {
                write!(f, "decimation exponent {} not coprime to the group order", i)
            }
            SpectralError::ComponentCount { expected, got } => {
                write!(f, "expected {} component spectra, got {}", expected, got)
            }
            SpectralError::ComponentShape(msg) => write!(f, "{}", msg),
            SpectralError::NotDivisor { t, k } => write!(f, "t = {} does not divide k = {}", t, k),
            SpectralError::InexactCombination => {
                write!(f, "recombination division not exact; this indicates an implementation bug")
            }
        }
    }
}

impl std::error::Error for SpectralError {}

impl From<GbfError> for SpectralError {
    fn from(e: GbfError) -> SpectralError {
        match e {
            GbfError::NotFieldDomain => SpectralError::NotFieldDomain,
            GbfError::NotCoprime { i, .. } => SpectralError::NotCoprime { i },
            other => SpectralError::ComponentShape(other.to_string()),
        }
    }
}

/// A full generalized Walsh-Hadamard spectrum: one exact cyclotomic integer
/// per point of the domain.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Spectrum {
    n: u32,
    k: u32,
    values: Vec<CycloInt>,
}

impl Spectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn values(&self) -> &[CycloInt] {
        &self.values
    }

    pub fn value(&self, u: u32) -> &CycloInt {
        &self.values[u as usize]
    }

    /// Exact Parseval identity: `sum_u |H(u)|^2 = 2^(2n)` as cyclotomic
    /// integers.
    pub fn parseval_ok(&self) -> bool {
        let mut acc = CycloInt::zero(self.k);
        for v in &self.values {
            acc = &acc + &v.norm_sq();
        }
        acc.is_int(1i64 << (2 * self.n))
    }

    /// First point whose squared magnitude differs from `2^n`, if any.
    pub fn first_norm_violation(&self) -> Option<u32> {
        let target = 1i64 << self.n;
        self.values
            .iter()
            .position(|v| !v.norm_sq().is_int(target))
            .map(|u| u as u32)
    }

    /// All squared magnitudes equal `2^n` exactly.
    pub fn is_flat(&self) -> bool {
        self.first_norm_violation().is_none()
    }
}

/// In-place fast Walsh-Hadamard butterfly over `2^n` integers, dot-product
/// indexing: output[m] = sum_x input[x] (-1)^(m.x).
fn wht_in_place(a: &mut [i64]) {
    let len = a.len();
    let mut dist = 1;
    while dist < len {
        let mut base = 0;
        while base < len {
            for i in base..base + dist {
                let x = a[i];
                let y = a[i + dist];
                a[i] = x + y;
                a[i + dist] = x - y;
            }
            base += dist * 2;
        }
        dist *= 2;
    }
}

/// Boolean Walsh spectrum of the sign table of `f` masked by `mask`:
/// raw dot-indexed transform of `(-1)^(popcount(f(x) & mask))`.
fn masked_wht(f: &Gbf, mask: u16) -> Vec<i64> {
    let mut a: Vec<i64> = f
        .table()
        .iter()
        .map(|&v| if (v & mask).count_ones() & 1 == 0 { 1 } else { -1 })
        .collect();
    wht_in_place(&mut a);
    a
}

/// Reindexes a dot-indexed spectrum into domain order: identity for vector
/// domains, the trace-form permutation `u -> t(u)` for field domains.
fn reindex<T: Clone>(f: &Gbf, dot_indexed: &[T]) -> Vec<T> {
    match f.domain() {
        Domain::Vector => dot_indexed.to_vec(),
        Domain::Field(ctx) => (0..dot_indexed.len() as u32)
            .map(|u| dot_indexed[ctx.dot_mask(u) as usize].clone())
            .collect(),
    }
}

/// Reference transform: for each `u`, histogram the shifted function and sum
/// `|B_u(rho)| zeta^rho`. O(4^n) point operations; every other path is
/// checked against this one.
pub fn gwht_direct(f: &Gbf) -> Spectrum {
    gwht_direct_threaded(f, 1)
}

/// [`gwht_direct`] fanned out over points; output independent of `threads`.
pub fn gwht_direct_threaded(f: &Gbf, threads: usize) -> Spectrum {
    let k = f.k();
    let mut values = vec![CycloInt::zero(k); f.len()];
    par::for_chunks(threads, &mut values, |offset, chunk| {
        for (i, slot) in chunk.iter_mut().enumerate() {
            let u = (offset + i) as u32;
            *slot = f.value_distribution(u).character_sum(k);
        }
    });
    Spectrum { n: f.n(), k, values }
}

/// Fast Boolean Walsh-Hadamard transform (k = 1 only): n stages of size-2
/// butterflies, then the domain reindexing.
pub fn wht_fast(f: &Gbf) -> Result<Spectrum, SpectralError> {
    if f.k() != 1 {
        return Err(SpectralError::NotBoolean { k: f.k() });
    }
    let dot = masked_wht(f, 1);
    let values = reindex(f, &dot)
        .into_iter()
        .map(|w| CycloInt::from_coords(1, vec![w]))
        .collect();
    Ok(Spectrum { n: f.n(), k: 1, values })
}

/// Production transform: one fast Boolean butterfly per component function,
/// recombined exactly. Equals [`gwht_direct`] on every input.
///
/// The coordinate of `zeta^d` in `H(u)` is the d-th Hadamard combination of
/// the component spectra divided by `2^(k-1)`; that division is asserted
/// exact and a failure panics (it would be an implementation bug, not bad
/// input).
pub fn gwht_fast_components(f: &Gbf) -> Spectrum {
    gwht_fast_components_threaded(f, 1)
}

/// [`gwht_fast_components`] with a worker budget; same output for any budget.
pub fn gwht_fast_components_threaded(f: &Gbf, threads: usize) -> Spectrum {
    let k = f.k();
    let half = 1usize << (k - 1);
    let top = 1u16 << (k - 1);
    let points = f.len();

    // One Boolean spectrum per component g_c (top digit always included).
    let mut component_whts: Vec<Vec<i64>> = vec![Vec::new(); half];
    par::for_chunks(threads, &mut component_whts, |offset, chunk| {
        for (i, slot) in chunk.iter_mut().enumerate() {
            let c = (offset + i) as u16;
            *slot = masked_wht(f, c | top);
        }
    });

    // Per point: Hadamard-combine across components, divide, read off coords.
    let mut dot_values = vec![CycloInt::zero(k); points];
    let denom = half as i64;
    par::for_chunks(threads, &mut dot_values, |offset, chunk| {
        let mut lane = vec![0i64; half];
        for (i, slot) in chunk.iter_mut().enumerate() {
            let a = offset + i;
            for (c, w) in component_whts.iter().enumerate() {
                lane[c] = w[a];
            }
            wht_in_place(&mut lane);
            let coords: Vec<i64> = lane
                .iter()
                .map(|&t| {
                    assert!(t % denom == 0, "component recombination must divide exactly");
                    t / denom
                })
                .collect();
            *slot = CycloInt::from_coords(k, coords);
        }
    });

    let values = reindex(f, &dot_values);
    Spectrum { n: f.n(), k, values }
}

/// Extended (decimated) spectrum `H_{f,i}(u) = sum_x zeta^f(x) (-1)^Tr(u x^i)`,
/// computed as the plain spectrum of `f(x^j)` with `j = i^(-1) mod 2^n - 1`.
pub fn ewht(f: &Gbf, i: u32) -> Result<Spectrum, SpectralError> {
    let ctx = f.domain().ctx().ok_or(SpectralError::NotFieldDomain)?;
    let j = ctx.inverse_exponent(i).ok_or(SpectralError::NotCoprime { i })?;
    Ok(gwht_fast_components(&f.decimate(j)?))
}

/// Literal double-sum evaluation of the decimated spectrum. Independent of
/// both the decimation identity and the butterfly paths; reference only.
pub fn ewht_direct(f: &Gbf, i: u32) -> Result<Spectrum, SpectralError> {
    let ctx = f.domain().ctx().ok_or(SpectralError::NotFieldDomain)?;
    if ctx.inverse_exponent(i).is_none() {
        return Err(SpectralError::NotCoprime { i });
    }
    let k = f.k();
    let half = CycloInt::basis_len(k);
    let powers: Vec<u32> = (0..f.len() as u32).map(|x| ctx.pow(x, i as u64)).collect();
    let values = (0..f.len() as u32)
        .map(|u| {
            let mut coords = vec![0i64; half];
            for (x, &xp) in powers.iter().enumerate() {
                let sign = if ctx.trace(ctx.mul(u, xp)) == 0 { 1 } else { -1 };
                let e = f.value(x as u32) as usize;
                if e < half {
                    coords[e] += sign;
                } else {
                    coords[e - half] -= sign;
                }
            }
            CycloInt::from_coords(k, coords)
        })
        .collect();
    Ok(Spectrum { n: f.n(), k, values })
}

/// Recombines the level-`2^t` spectra of all base-`2^t` components into the
/// level-`2^k` spectrum of the original function.
///
/// Components arrive indexed by the integer whose base-`2^t` digits are the
/// coefficient vector `c` (least significant digit multiplies the lowest
/// block). The division by `2^(k-t)` is checked; inexactness is a bug
/// signal.
pub fn combine_base2t_spectra(
    components: &[Spectrum],
    t: u32,
    k: u32,
) -> Result<Spectrum, SpectralError> {
    if t < 1 || k % t != 0 {
        return Err(SpectralError::NotDivisor { t, k });
    }
    let l = k / t;
    let expected = 1usize << (t * (l - 1));
    if components.len() != expected {
        return Err(SpectralError::ComponentCount { expected, got: components.len() });
    }
    let n = components[0].n();
    for s in components {
        if s.k() != t || s.n() != n {
            return Err(SpectralError::ComponentShape(format!(
                "component spectra must all have n = {}, level {}",
                n, t
            )));
        }
    }
    if l == 1 {
        return Ok(components[0].clone());
    }

    let digits = (l - 1) as usize;
    let base = 1u32 << t;
    let count = expected as u32;
    // Root of unity attached to each (c, d) pair:
    //   zeta_{2^t}^(-c.d) * zeta_{2^k}^(iota(d))
    // with iota(d) = the index integer of d itself.
    let pair_exponent = |c_idx: u32, d_idx: u32| -> i64 {
        let mut dot: u64 = 0;
        for j in 0..digits {
            let cj = (c_idx >> (j as u32 * t)) & (base - 1);
            let dj = (d_idx >> (j as u32 * t)) & (base - 1);
            dot += cj as u64 * dj as u64;
        }
        let neg_dot = (base as u64 - (dot % base as u64)) % base as u64;
        d_idx as i64 + ((neg_dot as i64) << (k - t))
    };

    let points = components[0].values().len();
    let denom = 1i64 << (k - t);
    let mut values = Vec::with_capacity(points);
    for a in 0..points {
        let mut acc = CycloInt::zero(k);
        for c_idx in 0..count {
            let lifted = components[c_idx as usize].values()[a]
                .lift(k)
                .map_err(|_| SpectralError::ComponentShape("component level above target".into()))?;
            for d_idx in 0..count {
                acc = &acc + &lifted.mul_zeta_pow(pair_exponent(c_idx, d_idx));
            }
        }
        values.push(acc.div_exact(denom).map_err(|e| match e {
            CycloError::InexactDivision { .. } => SpectralError::InexactCombination,
            _ => SpectralError::InexactCombination,
        })?);
    }
    Ok(Spectrum { n, k, values })
}

/// Debug-style cross-check of the two permanent transform paths.
pub fn paths_agree(f: &Gbf) -> bool {
    gwht_direct(f) == gwht_fast_components(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::gbf::random_gbf;
    use crate::rng::SplitMix64;

    fn vector_gbf(n: u32, k: u32, table: Vec<u16>) -> Gbf {
        Gbf::new(n, k, Domain::Vector, table).unwrap()
    }

    /// Naive dot-indexed Walsh transform, the textbook double loop.
    fn naive_wht(signs: &[i64]) -> Vec<i64> {
        (0..signs.len())
            .map(|m| {
                signs
                    .iter()
                    .enumerate()
                    .map(|(x, &s)| if (m & x).count_ones() & 1 == 0 { s } else { -s })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn butterfly_matches_naive_transform() {
        let mut rng = SplitMix64::new(1);
        for n in 1..=8u32 {
            let signs: Vec<i64> =
                (0..1usize << n).map(|_| rng.below(41) as i64 - 20).collect();
            let mut fast = signs.clone();
            wht_in_place(&mut fast);
            assert_eq!(fast, naive_wht(&signs));
        }
    }

    #[test]
    fn gwht_direct_examples() {
        let z = Gbf::zero(3, 3, Domain::Vector).unwrap();
        let s = gwht_direct(&z);
        assert!(s.value(0).is_int(8));
        for u in 1..8 {
            assert!(s.value(u).is_zero());
        }

        // f = 2 x1 x2 at k = 2 has spectrum +-2 everywhere
        let f = vector_gbf(2, 2, vec![0, 0, 0, 2]);
        let s = gwht_direct(&f);
        for u in 0..4 {
            assert!(s.value(u).norm_sq().is_int(4));
        }

        // f = x1 x2 at k = 2: H(0) = 3 + i, squared magnitude 10
        let g = vector_gbf(2, 2, vec![0, 0, 0, 1]);
        let s = gwht_direct(&g);
        assert_eq!(s.value(0), &CycloInt::from_coords(2, vec![3, 1]));
        assert!(s.value(0).norm_sq().is_int(10));
    }

    #[test]
    fn wht_fast_examples() {
        let z = Gbf::zero(4, 1, Domain::Vector).unwrap();
        let s = wht_fast(&z).unwrap();
        assert!(s.value(0).is_int(16));
        assert!((1..16).all(|u| s.value(u).is_zero()));

        // x1 x2 xor x3 x4: bent at n = 4, all values +-4
        let table: Vec<u16> =
            (0..16u32).map(|x| (((x & 1) & (x >> 1)) ^ ((x >> 2) & (x >> 3)) & 1) as u16).collect();
        let f = vector_gbf(4, 1, table);
        let s = wht_fast(&f).unwrap();
        assert!((0..16).all(|u| s.value(u).norm_sq().is_int(16)));

        // x1 x2 xor x3: semibent at n = 3, values in {0, +-4}
        let table: Vec<u16> = (0..8u32).map(|x| (((x & 1) & (x >> 1)) ^ (x >> 2) & 1) as u16).collect();
        let f = vector_gbf(3, 1, table);
        let s = wht_fast(&f).unwrap();
        for u in 0..8 {
            let w = s.value(u).coords()[0];
            assert!(w == 0 || w.abs() == 4, "got {}", w);
        }

        assert!(matches!(
            wht_fast(&Gbf::zero(2, 2, Domain::Vector).unwrap()),
            Err(SpectralError::NotBoolean { k: 2 })
        ));
    }

    #[test]
    fn fast_components_is_wht_at_level_one() {
        let mut rng = SplitMix64::new(9);
        let f = random_gbf(5, 1, Domain::Vector, &mut rng);
        assert_eq!(gwht_fast_components(&f), wht_fast(&f).unwrap());
    }

    #[test]
    fn level_two_combination_identity() {
        // H(u) = [(1+i) W_{a2}(u) + (1-i) W_{a1 xor a2}(u)] / 2
        let mut rng = SplitMix64::new(10);
        let f = random_gbf(4, 2, Domain::Vector, &mut rng);
        let s = gwht_fast_components(&f);
        let w0 = wht_fast(&f.component_gc(0).unwrap()).unwrap();
        let w1 = wht_fast(&f.component_gc(1).unwrap()).unwrap();
        for u in 0..16u32 {
            let a = w0.value(u).coords()[0];
            let b = w1.value(u).coords()[0];
            let one_plus_i = CycloInt::from_coords(2, vec![1, 1]);
            let one_minus_i = CycloInt::from_coords(2, vec![1, -1]);
            let expected = (&(&one_plus_i.scaled(a) + &one_minus_i.scaled(b))).div_exact(2).unwrap();
            assert_eq!(s.value(u), &expected);
        }
        assert_eq!(s, gwht_direct(&f));
    }

    #[test]
    fn fast_equals_direct_on_random_functions() {
        let mut rng = SplitMix64::new(11);
        for n in 2..=5u32 {
            for k in 1..=5u32 {
                let f = random_gbf(n, k, Domain::Vector, &mut rng);
                assert!(paths_agree(&f), "vector n={} k={}", n, k);
                let ctx = FieldCtx::new(n).unwrap();
                let g = random_gbf(n, k, Domain::field(ctx), &mut rng);
                assert_eq!(gwht_direct(&g), gwht_fast_components(&g), "field n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn threaded_output_is_identical() {
        let mut rng = SplitMix64::new(12);
        let ctx = FieldCtx::new(5).unwrap();
        let f = random_gbf(5, 3, Domain::field(ctx), &mut rng);
        let one = gwht_fast_components_threaded(&f, 1);
        for threads in [2usize, 4, 7] {
            assert_eq!(gwht_fast_components_threaded(&f, threads), one);
            assert_eq!(gwht_direct_threaded(&f, threads), gwht_direct(&f));
        }
    }

    #[test]
    fn parseval_holds_everywhere() {
        let mut rng = SplitMix64::new(13);
        for n in 2..=5u32 {
            for k in 1..=4u32 {
                let f = random_gbf(n, k, Domain::Vector, &mut rng);
                assert!(gwht_direct(&f).parseval_ok());
            }
        }
    }

    #[test]
    fn ewht_examples() {
        let ctx = FieldCtx::new(4).unwrap();
        let mut rng = SplitMix64::new(14);
        let f = random_gbf(4, 3, Domain::field(ctx.clone()), &mut rng);

        assert_eq!(ewht(&f, 1).unwrap(), gwht_fast_components(&f));

        // decimated spectra match the literal double sum for every exponent
        for i in ctx.coprime_exponents() {
            let fast = ewht(&f, i).unwrap();
            assert_eq!(fast, ewht_direct(&f, i).unwrap(), "i = {}", i);
            assert!(fast.parseval_ok(), "Parseval at i = {}", i);
        }

        assert!(matches!(ewht(&f, 3), Err(SpectralError::NotCoprime { i: 3 })));
        let v = random_gbf(3, 2, Domain::Vector, &mut rng);
        assert!(matches!(ewht(&v, 1), Err(SpectralError::NotFieldDomain)));
    }

    #[test]
    fn frobenius_decimation_permutes_the_spectrum() {
        let ctx = FieldCtx::new(4).unwrap();
        let mut rng = SplitMix64::new(15);
        let f = random_gbf(4, 2, Domain::field(ctx), &mut rng);
        let plain = gwht_fast_components(&f);
        let s2 = ewht(&f, 2).unwrap();
        let mut a: Vec<_> = plain.values().to_vec();
        let mut b: Vec<_> = s2.values().to_vec();
        let key = |v: &CycloInt| v.coords().to_vec();
        a.sort_by_key(key);
        b.sort_by_key(key);
        assert_eq!(a, b);
    }

    #[test]
    fn base2t_combination_equals_direct() {
        let mut rng = SplitMix64::new(16);
        let ctx = FieldCtx::new(4).unwrap();
        for domain in [Domain::Vector, Domain::field(ctx)] {
            let f = random_gbf(4, 4, domain, &mut rng);
            let spectra: Vec<Spectrum> = (0..4u16)
                .map(|c| gwht_fast_components(&f.component_base2t(2, &[c]).unwrap()))
                .collect();
            let combined = combine_base2t_spectra(&spectra, 2, 4).unwrap();
            assert_eq!(combined, gwht_direct(&f));
        }
    }

    #[test]
    fn base2t_combination_at_t_one_matches_component_identity() {
        let mut rng = SplitMix64::new(17);
        let f = random_gbf(3, 3, Domain::Vector, &mut rng);
        let spectra: Vec<Spectrum> = (0..4u32)
            .map(|c| {
                let bits: Vec<u16> = (0..2).map(|j| ((c >> j) & 1) as u16).collect();
                gwht_fast_components(&f.component_base2t(1, &bits).unwrap())
            })
            .collect();
        let combined = combine_base2t_spectra(&spectra, 1, 3).unwrap();
        assert_eq!(combined, gwht_direct(&f));
    }

    #[test]
    fn base2t_combination_identity_at_t_equals_k() {
        let mut rng = SplitMix64::new(18);
        let f = random_gbf(3, 2, Domain::Vector, &mut rng);
        let s = gwht_fast_components(&f);
        assert_eq!(combine_base2t_spectra(&[s.clone()], 2, 2).unwrap(), s);
    }

    #[test]
    fn base2t_combination_rejects_bad_shapes() {
        let mut rng = SplitMix64::new(19);
        let f = random_gbf(3, 2, Domain::Vector, &mut rng);
        let s = gwht_fast_components(&f);
        assert!(matches!(
            combine_base2t_spectra(&[s.clone()], 2, 4),
            Err(SpectralError::ComponentCount { expected: 4, got: 1 })
        ));
        assert!(matches!(
            combine_base2t_spectra(&[s], 3, 4),
            Err(SpectralError::NotDivisor { t: 3, k: 4 })
        ));
    }

    #[test]
    fn digit_product_expansion_of_unit_characters() {
        // 2^k zeta^v = sum over c in F_2^k of
        //   prod_j (1 + zeta^(2^j + c_j 2^(k-1))) * (-1)^(c . digits(v)),
        // the expansion that makes the component combination work
        for k in 1..=5u32 {
            for v in 0..(1u32 << k) {
                let mut rhs = CycloInt::zero(k);
                for c in 0..(1u32 << k) {
                    let mut prod = CycloInt::one(k);
                    for j in 0..k {
                        let e = (1i64 << j) + (((c >> j) & 1) as i64) * (1i64 << (k - 1));
                        prod = &prod * &(&CycloInt::one(k) + &CycloInt::zeta_pow(k, e));
                    }
                    rhs = if (c & v).count_ones() & 1 == 0 { &rhs + &prod } else { &rhs - &prod };
                }
                assert_eq!(rhs, CycloInt::zeta_pow(k, v as i64).scaled(1 << k), "k={} v={}", k, v);
            }
        }
    }

    #[test]
    fn spectrum_is_invertible() {
        // recover f from its fast-component spectrum through the inverse
        // Hadamard combination, digit by digit
        let mut rng = SplitMix64::new(20);
        let f = random_gbf(4, 3, Domain::Vector, &mut rng);
        let s = gwht_fast_components(&f);
        let k = f.k();
        let half = 1usize << (k - 1);

        // W_{g_c}(a) = sum_d (-1)^(c.d) coords_d(H(a))
        let mut component_tables: Vec<Vec<u16>> = Vec::new();
        for c in 0..half {
            let mut w: Vec<i64> = (0..f.len())
                .map(|a| {
                    (0..half)
                        .map(|d| {
                            let coord = s.values()[a].coords()[d];
                            if (c & d).count_ones() & 1 == 0 {
                                coord
                            } else {
                                -coord
                            }
                        })
                        .sum()
                })
                .collect();
            // inverse Boolean WHT: transform again and divide by 2^n
            wht_in_place(&mut w);
            let table: Vec<u16> = w
                .iter()
                .map(|&v| {
                    let sign = v / f.len() as i64;
                    assert!(sign == 1 || sign == -1);
                    if sign == 1 {
                        0
                    } else {
                        1
                    }
                })
                .collect();
            component_tables.push(table);
        }
        // digits: a_k = g_0, a_j = g_(e_j) xor a_k
        let top = &component_tables[0];
        let mut reconstructed = vec![0u16; f.len()];
        for x in 0..f.len() {
            let mut v = (top[x] as u32) << (k - 1);
            for j in 0..k - 1 {
                let bit = component_tables[1usize << j][x] ^ top[x];
                v |= (bit as u32) << j;
            }
            reconstructed[x] = v as u16;
        }
        assert_eq!(reconstructed, f.table());
    }

    #[test]
    fn vector_spectra_permute_under_linear_bijections_of_the_input() {
        // multiset of squared magnitudes is preserved when composing with an
        // invertible linear map (k = 1)
        let mut rng = SplitMix64::new(21);
        let f = random_gbf(3, 1, Domain::Vector, &mut rng);
        // x -> (x1, x1 xor x2, x3) is invertible
        let remap = |x: u32| -> u32 {
            let b1 = x & 1;
            let b2 = ((x >> 1) ^ x) & 1;
            let b3 = (x >> 2) & 1;
            b1 | (b2 << 1) | (b3 << 2)
        };
        let table: Vec<u16> = (0..8u32).map(|x| f.value(remap(x))).collect();
        let g = Gbf::new(3, 1, Domain::Vector, table).unwrap();
        let mut a: Vec<i64> = wht_fast(&f).unwrap().values().iter().map(|v| v.coords()[0].abs()).collect();
        let mut b: Vec<i64> = wht_fast(&g).unwrap().values().iter().map(|v| v.coords()[0].abs()).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}

//! Builders for the partial-spread family `f(y', y) = g(y'/y)` and the
//! coset-constant family on the unit subgroup U, plus samplers for the
//! ingredient tables they require.
//!
//! Both constructions live on a genuine field `F_{2^n}` (n = 2m) so that
//! decimations make sense. The partial-spread function is realized through
//! the basis `{1, w}` of `F_{2^n}` over its half subfield, with `w` fixed to
//! the verified field generator; `y'/y` is computed as `y' * y^(2^m - 2)`
//! inside the subfield, with the convention `y'/0 = 0`.

use crate::cyclo::CycloInt;
use crate::field::FieldCtx;
use crate::gbf::{Domain, Gbf};
use crate::rng::SplitMix64;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub enum ConstructError {
    WrongLength { expected: usize, got: usize },
    /// `g(0) = 0` is required.
    NonzeroAtZero { value: u16 },
    /// The character sum over the ingredient table must vanish.
    SumNonzero,
    /// The coset-U character sum criterion relates the table to f(0); this
    /// error reports a level too small for the criterion to be meaningful.
    LevelTooSmall { k: u32 },
    ValueOutOfRange { index: usize, value: u16, k: u32 },
    DegreeMismatch { expected: u32, got: u32 },
    OddDegree { n: u32 },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::WrongLength { expected, got } => {
                write!(f, "ingredient table needs {} entries, got {}", expected, got)
            }
            ConstructError::NonzeroAtZero { value } => {
                write!(f, "ingredient table must vanish at 0, got {}", value)
            }
            ConstructError::SumNonzero => {
                write!(f, "character sum of the ingredient table does not vanish")
            }
            ConstructError::LevelTooSmall { k } => {
                write!(f, "coset-U construction needs k >= 3, got k = {}", k)
            }
            ConstructError::ValueOutOfRange { index, value, k } => {
                write!(f, "table[{}] = {} exceeds 2^k - 1 at k = {}", index, value, k)
            }
            ConstructError::DegreeMismatch { expected, got } => {
                write!(f, "field context must have degree {}, got {}", expected, got)
            }
            ConstructError::OddDegree { n } => {
                write!(f, "construction lives on an even-degree field, got n = {}", n)
            }
        }
    }
}

impl std::error::Error for ConstructError {}

/// Ingredients for the partial-spread function on `F_{2^m} x F_{2^m}`:
/// a table `g: F_{2^m} -> Z_{2^k}` with `g(0) = 0` and vanishing character
/// sum, indexed by the subfield elements in ascending encoding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsApSpec {
    pub half_n: u32,
    pub k: u32,
    pub g_table: Vec<u16>,
}

impl PsApSpec {
    pub fn new(half_n: u32, k: u32, g_table: Vec<u16>) -> Result<PsApSpec, ConstructError> {
        let spec = PsApSpec { half_n, k, g_table };
        spec.validate()?;
        Ok(spec)
    }

    /// Character sum of the ingredient table at level k.
    pub fn character_sum(&self) -> CycloInt {
        let mut acc = CycloInt::zero(self.k);
        for &v in &self.g_table {
            acc = &acc + &CycloInt::zeta_pow(self.k, v as i64);
        }
        acc
    }

    pub fn validate(&self) -> Result<(), ConstructError> {
        let expected = 1usize << self.half_n;
        if self.g_table.len() != expected {
            return Err(ConstructError::WrongLength { expected, got: self.g_table.len() });
        }
        let max = 1u32 << self.k;
        if let Some((index, &value)) =
            self.g_table.iter().enumerate().find(|(_, &v)| v as u32 >= max)
        {
            return Err(ConstructError::ValueOutOfRange { index, value, k: self.k });
        }
        if self.g_table[0] != 0 {
            return Err(ConstructError::NonzeroAtZero { value: self.g_table[0] });
        }
        if !self.character_sum().is_zero() {
            return Err(ConstructError::SumNonzero);
        }
        Ok(())
    }
}

/// Subfield bookkeeping shared by the builders: the ascending subfield list
/// and the inverse index map.
struct Subfield {
    elems: Vec<u32>,
    index: Vec<usize>,
    m: u32,
}

impl Subfield {
    fn of(ctx: &FieldCtx, m: u32) -> Subfield {
        let elems = ctx.subfield_elements(m).expect("m divides n by construction");
        let mut index = vec![usize::MAX; ctx.size()];
        for (i, &e) in elems.iter().enumerate() {
            index[e as usize] = i;
        }
        Subfield { elems, index, m }
    }

    /// `a / b` inside the subfield, with `a / 0 = 0`.
    fn divide(&self, ctx: &FieldCtx, a: u32, b: u32) -> u32 {
        if b == 0 {
            0
        } else {
            ctx.mul(a, ctx.pow(b, (1u64 << self.m) - 2))
        }
    }
}

/// Builds the partial-spread function `f(y' + w y) = g(y'/y)` on `F_{2^n}`,
/// n = 2m, with `w` the field generator. The output is gbent and in fact
/// g-hyperbent whenever the ingredient invariants hold (enforced here).
pub fn construct_ps_ap(spec: &PsApSpec, ctx: &Arc<FieldCtx>) -> Result<Gbf, ConstructError> {
    spec.validate()?;
    let m = spec.half_n;
    if ctx.n() != 2 * m {
        return Err(ConstructError::DegreeMismatch { expected: 2 * m, got: ctx.n() });
    }
    let sub = Subfield::of(ctx, m);
    let w = ctx.generator();
    let mut table = vec![0u16; ctx.size()];
    let mut seen = vec![false; ctx.size()];
    for &yp in &sub.elems {
        for &y in &sub.elems {
            let x = yp ^ ctx.mul(w, y);
            debug_assert!(!seen[x as usize], "basis {{1, w}} must split the field");
            seen[x as usize] = true;
            let z = sub.divide(ctx, yp, y);
            table[x as usize] = spec.g_table[sub.index[z as usize]];
        }
    }
    Ok(Gbf::new(ctx.n(), spec.k, Domain::Field(ctx.clone()), table)
        .expect("constructed table is well-formed"))
}

/// The dual that the partial-spread construction is guaranteed to have:
/// `g(u/u')` read in the coordinates dual to `{1, w}` under the trace
/// pairing. Concretely, for `a` outside the subfield the value is
/// `g(T(aw) / T(a))` with `T` the relative trace onto `F_{2^m}` (the unique
/// `z` with `a(z + w)` in the subfield), and `g(0)` on the subfield itself.
pub fn ps_ap_expected_dual(spec: &PsApSpec, ctx: &Arc<FieldCtx>) -> Result<Gbf, ConstructError> {
    spec.validate()?;
    let m = spec.half_n;
    if ctx.n() != 2 * m {
        return Err(ConstructError::DegreeMismatch { expected: 2 * m, got: ctx.n() });
    }
    let sub = Subfield::of(ctx, m);
    let w = ctx.generator();
    let table: Vec<u16> = (0..ctx.size() as u32)
        .map(|a| {
            if ctx.pow(a, 1u64 << m) == a {
                // a in the subfield: H(a) = 2^(n/2) zeta^g(0)
                spec.g_table[0]
            } else {
                let t_a = ctx.rel_trace(m, a).expect("m | n");
                let t_aw = ctx.rel_trace(m, ctx.mul(a, w)).expect("m | n");
                let z = sub.divide(ctx, t_aw, t_a);
                spec.g_table[sub.index[z as usize]]
            }
        })
        .collect();
    Ok(Gbf::new(ctx.n(), spec.k, Domain::Field(ctx.clone()), table)
        .expect("constructed table is well-formed"))
}

/// Ingredients for the coset-constant construction: one value per element of
/// the unit subgroup U (in the canonical generator-power order of
/// [`FieldCtx::coset_decompose`]) plus the value at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetUSpec {
    pub n: u32,
    pub k: u32,
    pub f0: u16,
    pub u_values: Vec<u16>,
}

impl CosetUSpec {
    pub fn new(n: u32, k: u32, f0: u16, u_values: Vec<u16>) -> Result<CosetUSpec, ConstructError> {
        let spec = CosetUSpec { n, k, f0, u_values };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), ConstructError> {
        if self.n % 2 != 0 {
            return Err(ConstructError::OddDegree { n: self.n });
        }
        if self.k < 3 {
            return Err(ConstructError::LevelTooSmall { k: self.k });
        }
        let expected = (1usize << (self.n / 2)) + 1;
        if self.u_values.len() != expected {
            return Err(ConstructError::WrongLength { expected, got: self.u_values.len() });
        }
        let max = 1u32 << self.k;
        if self.f0 as u32 >= max {
            return Err(ConstructError::ValueOutOfRange { index: 0, value: self.f0, k: self.k });
        }
        if let Some((index, &value)) =
            self.u_values.iter().enumerate().find(|(_, &v)| v as u32 >= max)
        {
            return Err(ConstructError::ValueOutOfRange { index, value, k: self.k });
        }
        Ok(())
    }

    /// The g-hyperbentness criterion: `sum_{u in U} zeta^f(u) = zeta^f(0)`.
    pub fn criterion_holds(&self) -> bool {
        let mut acc = CycloInt::zero(self.k);
        for &v in &self.u_values {
            acc = &acc + &CycloInt::zeta_pow(self.k, v as i64);
        }
        acc == CycloInt::zeta_pow(self.k, self.f0 as i64)
    }
}

/// A constructed coset-constant function together with the verdict of the
/// character-sum criterion that decides its g-hyperbentness.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetUOutcome {
    pub gbf: Gbf,
    pub criterion_holds: bool,
}

/// Builds the function constant on each coset `u F_{2^m}*`, u in U, with
/// `f(0) = f0`. The character-sum criterion is checked and reported, not
/// enforced: callers construct both admissible and inadmissible instances.
pub fn construct_coset_u(
    spec: &CosetUSpec,
    ctx: &Arc<FieldCtx>,
) -> Result<CosetUOutcome, ConstructError> {
    spec.validate()?;
    if ctx.n() != spec.n {
        return Err(ConstructError::DegreeMismatch { expected: spec.n, got: ctx.n() });
    }
    let decomposition = ctx.coset_decompose().expect("even degree checked in validate");
    let mut table = vec![0u16; ctx.size()];
    table[0] = spec.f0;
    for (j, &u) in decomposition.unit_group.iter().enumerate() {
        for &s in &decomposition.subfield_star {
            table[ctx.mul(s, u) as usize] = spec.u_values[j];
        }
    }
    let gbf = Gbf::new(ctx.n(), spec.k, Domain::Field(ctx.clone()), table)
        .expect("constructed table is well-formed");
    Ok(CosetUOutcome { gbf, criterion_holds: spec.criterion_holds() })
}

/// Seeded sampler of admissible partial-spread ingredients: `g(0) = 0`, one
/// point carries `2^(k-1)` (cancelling the contribution of 0), and the
/// remaining points pair up antipodally as `(v, v + 2^(k-1))`.
pub fn sample_ps_ap_g(m: u32, k: u32, seed: u64) -> Vec<u16> {
    let size = 1usize << m;
    let half = 1u16 << (k - 1);
    let modulus = 1u32 << k;
    let mut rng = SplitMix64::new(seed);
    let mut slots: Vec<usize> = (1..size).collect();
    rng.shuffle(&mut slots);
    let mut table = vec![0u16; size];
    table[slots[0]] = half;
    for pair in slots[1..].chunks(2) {
        let v = rng.below(modulus as u64) as u16;
        table[pair[0]] = v;
        table[pair[1]] = ((v as u32 + half as u32) % modulus) as u16;
    }
    debug_assert!(PsApSpec::new(m, k, table.clone()).is_ok());
    table
}

/// Rejection sampler over arbitrary tables with `g(0) = 0`, keeping those
/// whose character sum vanishes. Covers admissible tables outside the
/// antipodal-pair family; returns `None` if the budget runs out.
pub fn sample_ps_ap_g_rejection(m: u32, k: u32, seed: u64, max_tries: u32) -> Option<Vec<u16>> {
    let size = 1usize << m;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..max_tries {
        let mut table: Vec<u16> =
            (0..size).map(|_| rng.below(1u64 << k) as u16).collect();
        table[0] = 0;
        if PsApSpec::new(m, k, table.clone()).is_ok() {
            return Some(table);
        }
    }
    None
}

/// Seeded sampler of admissible coset-U data: |U| = 2^m + 1 is odd, so one
/// slot is pinned to f(0) and the remaining 2^m slots form antipodal pairs.
pub fn sample_coset_u_values(m: u32, k: u32, seed: u64) -> Result<CosetUSpec, ConstructError> {
    if k < 3 {
        return Err(ConstructError::LevelTooSmall { k });
    }
    let count = (1usize << m) + 1;
    let half = 1u16 << (k - 1);
    let modulus = 1u32 << k;
    let mut rng = SplitMix64::new(seed);
    let f0 = rng.below(modulus as u64) as u16;
    let mut slots: Vec<usize> = (0..count).collect();
    rng.shuffle(&mut slots);
    let mut u_values = vec![0u16; count];
    u_values[slots[0]] = f0;
    for pair in slots[1..].chunks(2) {
        let v = rng.below(modulus as u64) as u16;
        u_values[pair[0]] = v;
        u_values[pair[1]] = ((v as u32 + half as u32) % modulus) as u16;
    }
    let spec = CosetUSpec::new(2 * m, k, f0, u_values)?;
    debug_assert!(spec.criterion_holds());
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props;

    fn field(n: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(n).unwrap())
    }

    #[test]
    fn ps_ap_spec_validation() {
        assert!(PsApSpec::new(2, 1, vec![0, 0, 1, 1]).is_ok());
        assert_eq!(
            PsApSpec::new(2, 1, vec![0, 1, 1, 1]),
            Err(ConstructError::SumNonzero)
        );
        assert_eq!(
            PsApSpec::new(2, 1, vec![1, 0, 1, 0]),
            Err(ConstructError::NonzeroAtZero { value: 1 })
        );
        assert_eq!(
            PsApSpec::new(2, 1, vec![0, 1]),
            Err(ConstructError::WrongLength { expected: 4, got: 2 })
        );
        assert_eq!(
            PsApSpec::new(1, 2, vec![0, 4]),
            Err(ConstructError::ValueOutOfRange { index: 1, value: 4, k: 2 })
        );
    }

    #[test]
    fn dillon_partial_spread_is_hyperbent() {
        // balanced Boolean g with g(0) = 0 on F_4
        let spec = PsApSpec::new(2, 1, vec![0, 0, 1, 1]).unwrap();
        let ctx = field(4);
        let f = construct_ps_ap(&spec, &ctx).unwrap();
        assert!(props::is_hyperbent(&f).unwrap().verdict);
        assert!(props::is_bent(&f).unwrap().verdict);
    }

    #[test]
    fn level_three_antipodal_table_is_ghyperbent() {
        // g = {0, 4, v, v + 4}: contributions 1 - 1 + zeta^v - zeta^v = 0
        for v in 0..8u16 {
            let spec = PsApSpec::new(2, 3, vec![0, 4, v, (v + 4) % 8]).unwrap();
            let ctx = field(4);
            let f = construct_ps_ap(&spec, &ctx).unwrap();
            assert!(props::is_ghyperbent(&f).unwrap().verdict, "v = {}", v);
        }
    }

    #[test]
    fn larger_field_partial_spread_is_ghyperbent() {
        // n = 8: 128 coprime decimations, all checked exactly
        let spec = PsApSpec::new(4, 4, sample_ps_ap_g(4, 4, 3)).unwrap();
        let ctx = field(8);
        let f = construct_ps_ap(&spec, &ctx).unwrap();
        assert!(props::is_gbent(&f).verdict);
        assert!(props::is_ghyperbent(&f).unwrap().verdict);
    }

    #[test]
    fn ps_ap_dual_matches_expected_formula() {
        for seed in 0..8u64 {
            let spec = PsApSpec::new(2, 3, sample_ps_ap_g(2, 3, seed)).unwrap();
            let ctx = field(4);
            let f = construct_ps_ap(&spec, &ctx).unwrap();
            let d = props::dual(&f).unwrap();
            assert_eq!(d, ps_ap_expected_dual(&spec, &ctx).unwrap(), "seed {}", seed);
        }
    }

    #[test]
    fn ps_ap_dual_is_the_inverted_ingredient() {
        // the expected dual is itself a partial-spread function built from
        // g composed with inversion, read through the dual coordinates
        let ctx = field(4);
        let spec = PsApSpec::new(2, 3, sample_ps_ap_g(2, 3, 99)).unwrap();
        let sub = ctx.subfield_elements(2).unwrap();
        // g o inversion: g'(t) = g(t^(-1)) with 0^(-1) = 0
        let mut index = vec![usize::MAX; ctx.size()];
        for (i, &e) in sub.iter().enumerate() {
            index[e as usize] = i;
        }
        let g_inv: Vec<u16> = sub
            .iter()
            .map(|&t| {
                if t == 0 {
                    spec.g_table[0]
                } else {
                    spec.g_table[index[ctx.pow(t, 2) as usize]] // t^(-1) = t^2 in F_4*
                }
            })
            .collect();
        let spec_inv = PsApSpec::new(2, 3, g_inv).unwrap();
        let f = construct_ps_ap(&spec, &ctx).unwrap();
        let dual_f = props::dual(&f).unwrap();
        // both are gbent with the same spectrum magnitudes; the inverted
        // ingredient generates the dual's value multiset
        let mut a = dual_f.table().to_vec();
        let mut b = construct_ps_ap(&spec_inv, &ctx).unwrap().table().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn coset_u_examples() {
        let ctx = field(4);
        // antipodal pairs plus one pinned slot: criterion holds
        let spec = CosetUSpec::new(4, 3, 0, vec![0, 2, 6, 5, 1]).unwrap();
        assert!(spec.criterion_holds());
        let out = construct_coset_u(&spec, &ctx).unwrap();
        assert!(out.criterion_holds);
        assert!(props::is_ghyperbent(&out.gbf).unwrap().verdict);

        // all-zero values: sum is 5, not zeta^0
        let bad = CosetUSpec::new(4, 3, 0, vec![0; 5]).unwrap();
        assert!(!bad.criterion_holds());
        let out = construct_coset_u(&bad, &ctx).unwrap();
        assert!(!out.criterion_holds);
        let r = props::is_ghyperbent(&out.gbf).unwrap();
        assert!(!r.verdict);
        assert!(r.witness.is_some());
    }

    #[test]
    fn coset_u_degenerate_half_field() {
        // n = 2: U is all of F_4*, the subfield star is {1}
        let ctx = field(2);
        let spec = sample_coset_u_values(1, 3, 5).unwrap();
        let out = construct_coset_u(&spec, &ctx).unwrap();
        assert!(out.criterion_holds);
        let d = ctx.coset_decompose().unwrap();
        for (j, &u) in d.unit_group.iter().enumerate() {
            assert_eq!(out.gbf.value(u), spec.u_values[j]);
        }
        assert_eq!(out.gbf.value(0), spec.f0);
    }

    #[test]
    fn coset_u_rejects_small_levels() {
        assert_eq!(
            CosetUSpec::new(4, 2, 0, vec![0; 5]),
            Err(ConstructError::LevelTooSmall { k: 2 })
        );
        assert_eq!(sample_coset_u_values(2, 2, 0), Err(ConstructError::LevelTooSmall { k: 2 }));
    }

    #[test]
    fn ps_ap_sampler_examples() {
        assert_eq!(sample_ps_ap_g(1, 2, 123), vec![0, 2]);
        for seed in 0..20u64 {
            let table = sample_ps_ap_g(2, 3, seed);
            assert!(PsApSpec::new(2, 3, table).is_ok());
        }
        assert_eq!(sample_ps_ap_g(3, 4, 7), sample_ps_ap_g(3, 4, 7));
        assert_ne!(sample_ps_ap_g(3, 4, 7), sample_ps_ap_g(3, 4, 8));
    }

    #[test]
    fn coset_sampler_examples() {
        for seed in 0..20u64 {
            let spec = sample_coset_u_values(2, 3, seed).unwrap();
            assert!(spec.criterion_holds());
            assert_eq!(spec.u_values.len(), 5);
        }
        assert_eq!(
            sample_coset_u_values(2, 3, 9).unwrap(),
            sample_coset_u_values(2, 3, 9).unwrap()
        );
    }

    #[test]
    fn rejection_sampler_finds_admissible_tables() {
        let table = sample_ps_ap_g_rejection(2, 2, 1, 50_000).unwrap();
        assert!(PsApSpec::new(2, 2, table).is_ok());
    }
}

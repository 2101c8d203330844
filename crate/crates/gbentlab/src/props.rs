//! Exact decision procedures for bent, semibent, gbent, hyperbent and
//! g-hyperbent functions, plus dual extraction and the two count-based
//! gbent criteria.
//!
//! Every verdict is an equality of cyclotomic integers; `2^(n/2)` for odd n
//! never appears because magnitudes are compared through `norm_sq` against
//! the rational integer `2^n`. Scans run in ascending point / exponent order
//! so the first witness is deterministic.

use crate::cyclo::CycloInt;
use crate::gbf::Gbf;
use crate::spectral::{self, Spectrum};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum PropsError {
    /// The checker applies to Boolean functions only (k = 1).
    NotBoolean { k: u32 },
    /// The property is defined for even n only.
    OddInputs { n: u32 },
    /// The property is defined for odd n only.
    EvenInputs { n: u32 },
    /// Decimations need a field-structured domain.
    VectorDomain,
    /// Dual extraction needs a gbent function.
    NotGbent,
    /// No dual in the exceptional case (odd n, k = 2).
    NotRegular { n: u32, k: u32 },
    /// The count criterion for odd n needs k >= 3.
    LevelTooSmall { k: u32 },
}

impl fmt::Display for PropsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropsError::NotBoolean { k } => write!(f, "needs a Boolean function, got k = {}", k),
            PropsError::OddInputs { n } => write!(f, "property needs even n, got n = {}", n),
            PropsError::EvenInputs { n } => write!(f, "property needs odd n, got n = {}", n),
            PropsError::VectorDomain => write!(f, "property needs a field-structured domain"),
            PropsError::NotGbent => write!(f, "function is not gbent"),
            PropsError::NotRegular { n, k } => {
                write!(f, "no dual in the exceptional case n = {} (odd), k = {}", n, k)
            }
            PropsError::LevelTooSmall { k } => {
                write!(f, "count criterion for odd n needs k >= 3, got k = {}", k)
            }
        }
    }
}

impl std::error::Error for PropsError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PropertyKind {
    Bent,
    Semibent,
    Gbent,
    Hyperbent,
    Ghyperbent,
    Regular,
}

/// Point (and decimation exponent, when applicable) at which a property
/// check first failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub u: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimation: Option<u32>,
}

/// Per-point regularity datum: `H(u) = 2^(n/2) zeta^rho` up to the stated
/// sign convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoSign {
    pub u: u32,
    pub rho: u16,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// The dual function's truth table.
    DualTable(Vec<u16>),
    /// (u, rho, sign) list from a count-based criterion.
    RhoSigns(Vec<RhoSign>),
    /// Signs of the exceptional `2^((n-1)/2) (+-1 +-i)` values, per point.
    QuadrantPattern(Vec<(i8, i8)>),
    /// Dual tables per decimation exponent.
    DecimationDuals(Vec<(u32, Vec<u16>)>),
}

/// Machine-readable verdict: which property, true/false, a failing witness
/// when false, a certificate (dual, rho list, sign pattern) when available.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: PropertyKind,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl PropertyReport {
    fn holds(property: PropertyKind, certificate: Option<Certificate>) -> PropertyReport {
        PropertyReport { property, verdict: true, witness: None, certificate }
    }

    fn fails(property: PropertyKind, witness: Witness) -> PropertyReport {
        PropertyReport { property, verdict: false, witness: Some(witness), certificate: None }
    }
}

/// The restricted shape a gbent spectrum value takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularForm {
    /// `2^(n/2) zeta^rho` (n even).
    Even { rho: u16 },
    /// `2^((n-1)/2) (+-1 +-i)` (n odd, k = 2).
    OddK2 { re_sign: i8, im_sign: i8 },
    /// `2^((n-1)/2) (zeta^(rho - 2^(k-3)) + zeta^(rho + 2^(k-3)))`
    /// (n odd, k >= 3), with `zeta^(2^(k-3))` the canonical eighth root.
    OddHigh { rho: u16 },
}

/// Matches one spectrum value against the regular form applicable at (n, k);
/// `None` when the value has the right magnitude but not the regular shape
/// (impossible for a gbent function) or the wrong magnitude altogether.
pub fn classify_regular(value: &CycloInt, n: u32, k: u32) -> Option<RegularForm> {
    if n % 2 == 0 {
        let scale = 1i64 << (n / 2);
        for rho in 0..(1u32 << k) {
            if value == &CycloInt::zeta_pow(k, rho as i64).scaled(scale) {
                return Some(RegularForm::Even { rho: rho as u16 });
            }
        }
        return None;
    }
    if k == 2 {
        let scale = 1i64 << ((n - 1) / 2);
        let c = value.coords();
        if c[0].abs() == scale && c[1].abs() == scale {
            return Some(RegularForm::OddK2 {
                re_sign: c[0].signum() as i8,
                im_sign: c[1].signum() as i8,
            });
        }
        return None;
    }
    if k >= 3 {
        let scale = 1i64 << ((n - 1) / 2);
        let tau = 1i64 << (k - 3);
        for rho in 0..(1u32 << k) {
            let expected = (&CycloInt::zeta_pow(k, rho as i64 - tau)
                + &CycloInt::zeta_pow(k, rho as i64 + tau))
                .scaled(scale);
            if value == &expected {
                return Some(RegularForm::OddHigh { rho: rho as u16 });
            }
        }
        return None;
    }
    None
}

fn dual_table_from_spectrum(s: &Spectrum, n: u32, k: u32) -> Option<Vec<u16>> {
    s.values()
        .iter()
        .map(|v| match classify_regular(v, n, k) {
            Some(RegularForm::Even { rho }) | Some(RegularForm::OddHigh { rho }) => Some(rho),
            _ => None,
        })
        .collect()
}

/// Flat Boolean spectrum check: `|W(u)| = 2^(n/2)` for all u (k = 1, even n).
pub fn is_bent(f: &Gbf) -> Result<PropertyReport, PropsError> {
    if f.k() != 1 {
        return Err(PropsError::NotBoolean { k: f.k() });
    }
    if f.n() % 2 != 0 {
        return Err(PropsError::OddInputs { n: f.n() });
    }
    let s = spectral::wht_fast(f).expect("k = 1 checked above");
    Ok(bent_report_from_spectrum(&s, f.n()))
}

fn bent_report_from_spectrum(s: &Spectrum, n: u32) -> PropertyReport {
    let target = 1i64 << n;
    for u in 0..s.values().len() as u32 {
        let w = s.value(u).coords()[0];
        if w * w != target {
            return PropertyReport::fails(PropertyKind::Bent, Witness { u, decimation: None });
        }
    }
    let dual: Vec<u16> = s.values().iter().map(|v| (v.coords()[0] < 0) as u16).collect();
    PropertyReport::holds(PropertyKind::Bent, Some(Certificate::DualTable(dual)))
}

/// Semibent check: Boolean, odd n, `|W(u)|` in `{0, 2^((n+1)/2)}` everywhere.
pub fn is_semibent(f: &Gbf) -> Result<PropertyReport, PropsError> {
    if f.k() != 1 {
        return Err(PropsError::NotBoolean { k: f.k() });
    }
    if f.n() % 2 == 0 {
        return Err(PropsError::EvenInputs { n: f.n() });
    }
    let s = spectral::wht_fast(f).expect("k = 1 checked above");
    let peak = 1i64 << (f.n() + 1);
    for u in 0..s.values().len() as u32 {
        let w = s.value(u).coords()[0];
        if w != 0 && w * w != peak {
            return Ok(PropertyReport::fails(
                PropertyKind::Semibent,
                Witness { u, decimation: None },
            ));
        }
    }
    Ok(PropertyReport::holds(PropertyKind::Semibent, None))
}

/// Generalized bent check on any domain and level: `norm_sq(H(u)) = 2^n`
/// exactly for all u. For regular cases the certificate carries the dual
/// table; for odd n, k = 2 it carries the quadrant sign pattern.
pub fn is_gbent(f: &Gbf) -> PropertyReport {
    let s = spectral::gwht_fast_components(f);
    gbent_report_from_spectrum(&s, f.n(), f.k(), None)
}

fn gbent_report_from_spectrum(
    s: &Spectrum,
    n: u32,
    k: u32,
    decimation: Option<u32>,
) -> PropertyReport {
    let target = 1i64 << n;
    for u in 0..s.values().len() as u32 {
        if !s.value(u).norm_sq().is_int(target) {
            return PropertyReport::fails(PropertyKind::Gbent, Witness { u, decimation });
        }
    }
    let certificate = if n % 2 == 0 || k >= 3 {
        let dual = dual_table_from_spectrum(s, n, k)
            .expect("a gbent spectrum outside the exceptional case is regular");
        Some(Certificate::DualTable(dual))
    } else if k == 2 {
        let pattern = s
            .values()
            .iter()
            .map(|v| match classify_regular(v, n, k) {
                Some(RegularForm::OddK2 { re_sign, im_sign }) => (re_sign, im_sign),
                _ => unreachable!("odd n, k = 2 gbent values are 2^((n-1)/2)(+-1 +-i)"),
            })
            .collect();
        Some(Certificate::QuadrantPattern(pattern))
    } else {
        unreachable!("no gbent functions exist at k = 1 with odd n")
    };
    PropertyReport { property: PropertyKind::Gbent, verdict: true, witness: None, certificate }
}

/// Extracts the dual `f*` with `H_f(u) = 2^(n/2) zeta^(f*(u))`. Errors with
/// [`PropsError::NotRegular`] in the exceptional case (odd n, k = 2) and
/// [`PropsError::NotGbent`] when the input is not gbent.
pub fn dual(f: &Gbf) -> Result<Gbf, PropsError> {
    let report = is_gbent(f);
    if !report.verdict {
        return Err(PropsError::NotGbent);
    }
    if f.n() % 2 == 1 && f.k() == 2 {
        return Err(PropsError::NotRegular { n: f.n(), k: f.k() });
    }
    match report.certificate {
        Some(Certificate::DualTable(table)) => {
            Ok(Gbf::new(f.n(), f.k(), f.domain().clone(), table)
                .expect("dual table is well-formed by construction"))
        }
        _ => unreachable!("regular gbent reports carry a dual table"),
    }
}

/// Count-based gbent criterion for even n: for each u there is exactly one
/// residue `rho` where the histogram of `f_u` jumps by `+-2^(n/2)` between
/// `rho` and `rho + 2^(k-1)`, and the histogram is half-period elsewhere.
pub fn check_gbent_by_counts_even(f: &Gbf) -> Result<PropertyReport, PropsError> {
    if f.n() % 2 != 0 {
        return Err(PropsError::OddInputs { n: f.n() });
    }
    let half = 1usize << (f.k() - 1);
    let jump = 1i64 << (f.n() / 2);
    let mut certs = Vec::with_capacity(f.len());
    for u in 0..f.len() as u32 {
        let dist = f.value_distribution(u);
        let counts = dist.counts();
        let mut jumps = (0..half)
            .filter_map(|j| {
                let d = counts[j + half] as i64 - counts[j] as i64;
                (d != 0).then_some((j, d))
            })
            .collect::<Vec<_>>();
        if jumps.len() != 1 {
            return Ok(PropertyReport::fails(
                PropertyKind::Gbent,
                Witness { u, decimation: None },
            ));
        }
        let (rho, d) = jumps.pop().expect("exactly one jump");
        if d.abs() != jump {
            return Ok(PropertyReport::fails(
                PropertyKind::Gbent,
                Witness { u, decimation: None },
            ));
        }
        certs.push(RhoSign { u, rho: rho as u16, sign: d.signum() as i8 });
    }
    Ok(PropertyReport::holds(PropertyKind::Gbent, Some(Certificate::RhoSigns(certs))))
}

/// Count-based gbent criterion for odd n, k >= 3: the histogram of `f_u`
/// jumps by the same signed `2^((n-1)/2)` at `rho_u - 2^(k-3)` and
/// `rho_u + 2^(k-3)` (arguments mod 2^k) and is half-period elsewhere.
pub fn check_gbent_by_counts_odd(f: &Gbf) -> Result<PropertyReport, PropsError> {
    if f.n() % 2 == 0 {
        return Err(PropsError::EvenInputs { n: f.n() });
    }
    if f.k() < 3 {
        return Err(PropsError::LevelTooSmall { k: f.k() });
    }
    let k = f.k();
    let size = 1usize << k;
    let half = size / 2;
    let tau = 1usize << (k - 3);
    let jump = 1i64 << ((f.n() - 1) / 2);
    let mut certs = Vec::with_capacity(f.len());
    'points: for u in 0..f.len() as u32 {
        let dist = f.value_distribution(u);
        let counts = dist.counts();
        // D(rho) = |B_u(rho + 2^(k-1))| - |B_u(rho)|, indices mod 2^k
        let diff =
            |rho: usize| counts[(rho + half) % size] as i64 - counts[rho % size] as i64;
        for rho in 0..size {
            for sign in [1i64, -1] {
                let r1 = (rho + size - tau) % size;
                let r2 = (rho + tau) % size;
                if diff(r1) != sign * jump || diff(r2) != sign * jump {
                    continue;
                }
                let exceptional =
                    [r1, r2, (r1 + half) % size, (r2 + half) % size];
                let rest_ok = (0..size)
                    .filter(|r| !exceptional.contains(r))
                    .all(|r| diff(r) == 0);
                if rest_ok {
                    certs.push(RhoSign { u, rho: rho as u16, sign: sign as i8 });
                    continue 'points;
                }
            }
        }
        return Ok(PropertyReport::fails(PropertyKind::Gbent, Witness { u, decimation: None }));
    }
    Ok(PropertyReport::holds(PropertyKind::Gbent, Some(Certificate::RhoSigns(certs))))
}

/// Hyperbent check: Boolean, even n, field domain; the flat-spectrum check
/// runs for every decimation exponent coprime to `2^n - 1`, ascending, and
/// the first failure (i, u) wins.
pub fn is_hyperbent(f: &Gbf) -> Result<PropertyReport, PropsError> {
    let ctx = f.domain().ctx().ok_or(PropsError::VectorDomain)?.clone();
    if f.k() != 1 {
        return Err(PropsError::NotBoolean { k: f.k() });
    }
    if f.n() % 2 != 0 {
        return Err(PropsError::OddInputs { n: f.n() });
    }
    let target = 1i64 << f.n();
    let mut dual_table = None;
    for i in ctx.coprime_exponents() {
        let j = ctx.inverse_exponent(i).expect("coprime exponents are invertible");
        let g = f.decimate(j).expect("coprime decimation");
        let s = spectral::wht_fast(&g).expect("k = 1 checked above");
        for u in 0..s.values().len() as u32 {
            let w = s.value(u).coords()[0];
            if w * w != target {
                return Ok(PropertyReport::fails(
                    PropertyKind::Hyperbent,
                    Witness { u, decimation: Some(i) },
                ));
            }
        }
        if i == 1 {
            dual_table =
                Some(s.values().iter().map(|v| (v.coords()[0] < 0) as u16).collect::<Vec<u16>>());
        }
    }
    Ok(PropertyReport::holds(PropertyKind::Hyperbent, dual_table.map(Certificate::DualTable)))
}

/// Generalized hyperbent check: `norm_sq(H_{f,i}(u)) = 2^n` for every point
/// and every coprime decimation exponent. Certificates carry the per-i dual
/// tables in the regular cases.
pub fn is_ghyperbent(f: &Gbf) -> Result<PropertyReport, PropsError> {
    let ctx = f.domain().ctx().ok_or(PropsError::VectorDomain)?.clone();
    let target = 1i64 << f.n();
    let regular = f.n() % 2 == 0 || f.k() >= 3;
    let mut duals = Vec::new();
    for i in ctx.coprime_exponents() {
        let s = spectral::ewht(f, i).expect("coprime exponent on a field domain");
        for u in 0..s.values().len() as u32 {
            if !s.value(u).norm_sq().is_int(target) {
                return Ok(PropertyReport::fails(
                    PropertyKind::Ghyperbent,
                    Witness { u, decimation: Some(i) },
                ));
            }
        }
        if regular {
            let table = dual_table_from_spectrum(&s, f.n(), f.k())
                .expect("flat spectra outside the exceptional case are regular");
            duals.push((i, table));
        }
    }
    let certificate = regular.then_some(Certificate::DecimationDuals(duals));
    Ok(PropertyReport::holds(PropertyKind::Ghyperbent, certificate))
}

//! Mechanical verifiers for the decomposition statements: each one
//! recomputes both sides of its claim from scratch and reports per-clause
//! outcomes, so the suite doubles as a falsification harness against
//! implementation bugs.
//!
//! Hypothesis violations that make a check meaningless (wrong parameter
//! ranges) are rejected as errors; mathematical hypotheses (such as the
//! input being gbent) are themselves reported as clauses.

use crate::gbf::{Domain, Gbf};
use crate::props::{self, PropertyReport};
use crate::spectral::{self, Spectrum};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum DecompError {
    BadParameter(String),
    /// The component sweep would exceed the 2^20 guard.
    TooManyComponents(u64),
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::BadParameter(msg) => write!(f, "{}", msg),
            DecompError::TooManyComponents(count) => {
                write!(f, "component sweep of size {} exceeds the 2^20 guard", count)
            }
        }
    }
}

impl std::error::Error for DecompError {}

/// Which decomposition statement a report verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    /// Even n, vector domain: components of a gbent function are bent.
    Prop2i,
    /// Odd n, k = 2: components of a gbent function are semibent.
    Prop2ii,
    /// Split at t = 1, implication direction.
    Thm4,
    /// Even n, field domain: g-hyperbent iff all components hyperbent.
    Thm7,
    /// Odd n, k >= 3: components of a gbent function are semibent.
    Thm8,
    /// Split at general t: both derived functions keep the property.
    Prop6,
    /// Split at t = 1, both directions.
    Cor1,
    /// Recursive component at depth s.
    Recursive,
    /// Base-2^t components and the recombination identity.
    Base2t,
}

/// One checked claim, with a human-readable description and an optional
/// witness for failures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub claim: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Clause {
    fn of(claim: impl Into<String>, verdict: bool, witness: Option<String>) -> Clause {
        Clause { claim: claim.into(), verdict, witness }
    }

    fn from_report(claim: impl Into<String>, report: &PropertyReport) -> Clause {
        let witness = report.witness.as_ref().map(|w| match w.decimation {
            Some(i) => format!("u={}, i={}", w.u, i),
            None => format!("u={}", w.u),
        });
        Clause { claim: claim.into(), verdict: report.verdict, witness }
    }
}

/// Structured outcome of a verifier run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub theorem: TheoremId,
    pub clauses: Vec<Clause>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_pattern: Option<Vec<i8>>,
}

impl DecompositionReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.verdict)
    }

    pub fn failed_clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.verdict)
    }
}

/// The domain-appropriate headline property: g-hyperbent on field domains,
/// gbent on vector domains.
fn headline_property(f: &Gbf) -> PropertyReport {
    match f.domain() {
        Domain::Field(_) => props::is_ghyperbent(f).expect("field domain"),
        Domain::Vector => props::is_gbent(f),
    }
}

fn headline_name(f: &Gbf) -> &'static str {
    match f.domain() {
        Domain::Field(_) => "g-hyperbent",
        Domain::Vector => "gbent",
    }
}

/// Component decomposition: for even n every component of a g-(hyper)bent
/// function is (hyper)bent and conversely; for odd n every component of a
/// gbent function is semibent (one direction).
pub fn verify_component_theorem(f: &Gbf) -> Result<DecompositionReport, DecompError> {
    if f.k() < 1 {
        return Err(DecompError::BadParameter("level must be at least 1".into()));
    }
    let half = 1u32 << (f.k() - 1);
    if f.n() % 2 == 0 {
        let theorem = if f.domain().is_field() { TheoremId::Thm7 } else { TheoremId::Prop2i };
        let whole = headline_property(f);
        let mut clauses =
            vec![Clause::from_report(format!("f is {}", headline_name(f)), &whole)];
        let mut all_components = true;
        for c in 0..half {
            let g = f.component_gc(c).expect("component index in range");
            let (name, report) = match f.domain() {
                Domain::Field(_) => ("hyperbent", props::is_hyperbent(&g).expect("field, k=1, even n")),
                Domain::Vector => ("bent", props::is_bent(&g).expect("k=1, even n")),
            };
            all_components &= report.verdict;
            clauses.push(Clause::from_report(format!("component c={} is {}", c, name), &report));
        }
        clauses.push(Clause::of(
            format!(
                "f is {} exactly when every component is {}",
                headline_name(f),
                if f.domain().is_field() { "hyperbent" } else { "bent" }
            ),
            whole.verdict == all_components,
            None,
        ));
        Ok(DecompositionReport { theorem, clauses, sign_pattern: None })
    } else {
        if f.k() < 2 {
            return Err(DecompError::BadParameter(
                "odd-n component decomposition needs k >= 2".into(),
            ));
        }
        let theorem = if f.k() == 2 { TheoremId::Prop2ii } else { TheoremId::Thm8 };
        let gbent = props::is_gbent(f);
        let mut clauses = vec![Clause::from_report("f is gbent", &gbent)];
        let mut all_components = true;
        for c in 0..half {
            let g = f.component_gc(c).expect("component index in range");
            let report = props::is_semibent(&g).expect("k=1, odd n");
            all_components &= report.verdict;
            clauses.push(Clause::from_report(format!("component c={} is semibent", c), &report));
        }
        clauses.push(Clause::of(
            "gbent implies every component semibent",
            !gbent.verdict || all_components,
            None,
        ));
        Ok(DecompositionReport { theorem, clauses, sign_pattern: None })
    }
}

/// How [`verify_split_k_km1`] treats the equivalence: `Check` verifies only
/// the unconditional direction (signs imply gbent), `Iff` the equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    Check,
    Iff,
}

/// Splits `f = g + 2h` and checks: `h` and `h + 2^(k-2) g` gbent at the
/// half level with pointwise matching signs, the (iff) equivalence with the
/// gbentness of `f`, and the exact reassembly of the spectrum of `f` from
/// the spectrum of `h` and the sign pattern.
pub fn verify_split_k_km1(f: &Gbf, mode: SplitMode) -> Result<DecompositionReport, DecompError> {
    let k = f.k();
    if k < 2 {
        return Err(DecompError::BadParameter("split needs k >= 2".into()));
    }
    if mode == SplitMode::Iff && f.n() % 2 == 1 && k < 3 {
        return Err(DecompError::BadParameter(
            "the equivalence needs even n or k >= 3".into(),
        ));
    }
    let theorem = match mode {
        SplitMode::Check => TheoremId::Thm4,
        SplitMode::Iff => TheoremId::Cor1,
    };
    let (g, h) = f.split_low_high(1).expect("k >= 2");
    let shift = h.plus_scaled_mod(&g, 1 << (k - 2)).expect("same shape");

    let spectrum_h = spectral::gwht_fast_components(&h);
    let spectrum_shift = spectral::gwht_fast_components(&shift);

    let h_ok = spectrum_h.is_flat();
    let shift_ok = spectrum_shift.is_flat();
    let mut clauses = vec![
        Clause::of(
            "h is gbent at the half level",
            h_ok,
            spectrum_h.first_norm_violation().map(|u| format!("u={}", u)),
        ),
        Clause::of(
            "h + 2^(k-2) g is gbent at the half level",
            shift_ok,
            spectrum_shift.first_norm_violation().map(|u| format!("u={}", u)),
        ),
    ];

    // per-point signs: H_{h + 2^(k-2) g}(u) = eps_u * H_h(u)
    let mut signs = Vec::with_capacity(f.len());
    let mut signs_ok = true;
    let mut sign_witness = None;
    for u in 0..f.len() as u32 {
        let a = spectrum_h.value(u);
        let b = spectrum_shift.value(u);
        let eps = if a.is_zero() && b.is_zero() {
            0 // sign undefined; only reachable when gbentness already failed
        } else if b == a {
            1
        } else if b == &-a.clone() {
            -1
        } else {
            signs_ok = false;
            if sign_witness.is_none() {
                sign_witness = Some(format!("u={}", u));
            }
            0
        };
        if eps == 0 && sign_witness.is_none() {
            signs_ok = false;
            sign_witness = Some(format!("u={} (sign undefined)", u));
        }
        signs.push(eps);
    }
    clauses.push(Clause::of(
        "spectra of h and h + 2^(k-2) g match pointwise up to sign",
        signs_ok,
        sign_witness,
    ));

    let condition = h_ok && shift_ok && signs_ok;
    let whole = props::is_gbent(f);
    match mode {
        SplitMode::Iff => clauses.push(Clause::of(
            "f is gbent exactly when the half-level condition holds",
            whole.verdict == condition,
            None,
        )),
        SplitMode::Check => clauses.push(Clause::of(
            "the half-level condition implies f gbent",
            !condition || whole.verdict,
            None,
        )),
    }

    // Reassembly: H_f(u) equals H_h(u) when eps = +1 and zeta * H_h(u) when
    // eps = -1, checked against the independent direct transform.
    if condition {
        let direct = spectral::gwht_direct(f);
        let mut ok = true;
        let mut witness = None;
        for u in 0..f.len() as u32 {
            let lifted = spectrum_h.value(u).lift(k).expect("lift to the full level");
            let expected = if signs[u as usize] == 1 { lifted } else { lifted.mul_zeta_pow(1) };
            if direct.value(u) != &expected {
                ok = false;
                witness = Some(format!("u={}", u));
                break;
            }
        }
        clauses.push(Clause::of(
            "sign pattern reassembles the direct spectrum of f",
            ok,
            witness,
        ));
    }

    let sign_pattern = condition.then_some(signs);
    Ok(DecompositionReport { theorem, clauses, sign_pattern })
}

/// Splits `f = g + 2^t h` and checks that `h` and `h + 2^(k-2t) g` keep the
/// domain-appropriate property at level `2^(k-t)`.
pub fn verify_t_split(f: &Gbf, t: u32) -> Result<DecompositionReport, DecompError> {
    let k = f.k();
    if t < 1 || k < 2 * t {
        return Err(DecompError::BadParameter(format!(
            "t-split needs k >= 2t >= 2, got k = {}, t = {}",
            k, t
        )));
    }
    if f.n() % 2 == 1 && k < 3 {
        return Err(DecompError::BadParameter(
            "odd n needs k >= 3 for the t-split".into(),
        ));
    }
    let whole = headline_property(f);
    let mut clauses = vec![Clause::from_report(format!("f is {}", headline_name(f)), &whole)];

    let (g, h) = f.split_low_high(t).expect("1 <= t < k");
    let shift = h.plus_scaled_mod(&g, 1 << (k - 2 * t)).expect("same shape");
    let h_report = headline_property(&h);
    let shift_report = headline_property(&shift);
    clauses.push(Clause::from_report(
        format!("h is {} at level 2^{}", headline_name(f), k - t),
        &h_report,
    ));
    clauses.push(Clause::from_report(
        format!("h + 2^(k-2t) g is {} at level 2^{}", headline_name(f), k - t),
        &shift_report,
    ));
    clauses.push(Clause::of(
        "the split functions inherit the property",
        !whole.verdict || (h_report.verdict && shift_report.verdict),
        None,
    ));
    Ok(DecompositionReport { theorem: TheoremId::Prop6, clauses, sign_pattern: None })
}

/// Builds the depth-s component `a_s + 2 a_(s+1) + ... + 2^(k-s) (xor of
/// selected low digits with a_k)` and checks its property at level
/// `2^(k-s+1)`, plus the sibling sign relation in the last coordinate.
pub fn verify_recursive_gc(f: &Gbf, s: u32, c: u32) -> Result<DecompositionReport, DecompError> {
    let k = f.k();
    if s < 1 || s > k {
        return Err(DecompError::BadParameter(format!(
            "depth must satisfy 1 <= s <= k, got s = {}, k = {}",
            s, k
        )));
    }
    if s >= 2 && c >= (1u32 << (s - 1)) {
        return Err(DecompError::BadParameter(format!(
            "coefficient vector {} needs s - 1 = {} bits",
            c,
            s - 1
        )));
    }
    let gbent = props::is_gbent(f);
    let mut clauses = vec![Clause::from_report("f is gbent", &gbent)];

    let component = recursive_component(f, s, c);
    if s == 1 {
        clauses.push(Clause::of("depth 1 recovers f itself", &component == f, None));
    }

    let boolean_case = f.n() % 2 == 1 && s == k;
    let comp_report = if boolean_case {
        props::is_semibent(&component).expect("level 1 at s = k")
    } else {
        props::is_gbent(&component)
    };
    let prop_name = if boolean_case { "semibent" } else { "gbent" };
    clauses.push(Clause::from_report(
        format!("depth-{} component (c={}) is {} at level 2^{}", s, c, prop_name, k - s + 1),
        &comp_report,
    ));
    clauses.push(Clause::of(
        format!("gbent f yields a {} component", prop_name),
        !gbent.verdict || comp_report.verdict,
        None,
    ));

    // sibling sign relation: components for (c..., 0) and (c..., 1) have
    // pointwise matching spectra up to sign. The relation comes from the
    // half-level equivalence one depth up, so for odd n it stops at s < k:
    // depth-k siblings are merely semibent and may vanish at different
    // points.
    let mut sign_pattern = None;
    if s >= 2 && (f.n() % 2 == 0 || s < k) {
        let c0 = c & !(1u32 << (s - 2));
        let c1 = c | (1u32 << (s - 2));
        let s0 = spectral::gwht_fast_components(&recursive_component(f, s, c0));
        let s1 = spectral::gwht_fast_components(&recursive_component(f, s, c1));
        let mut signs = Vec::with_capacity(f.len());
        let mut ok = true;
        let mut witness = None;
        for u in 0..f.len() as u32 {
            let a = s0.value(u);
            let b = s1.value(u);
            if b == a && !a.is_zero() {
                signs.push(1i8);
            } else if b == &-a.clone() && !a.is_zero() {
                signs.push(-1);
            } else {
                signs.push(0);
                ok = false;
                if witness.is_none() {
                    witness = Some(format!("u={}", u));
                }
            }
        }
        clauses.push(Clause::of(
            "sibling components match pointwise up to sign",
            !gbent.verdict || ok,
            if gbent.verdict { witness } else { None },
        ));
        if ok {
            sign_pattern = Some(signs);
        }
    }

    Ok(DecompositionReport { theorem: TheoremId::Recursive, clauses, sign_pattern })
}

fn recursive_component(f: &Gbf, s: u32, c: u32) -> Gbf {
    let k = f.k();
    if s == 1 {
        return f.clone();
    }
    let low_mask = (1u32 << (k - s)) - 1;
    let xor_mask = (c | (1u32 << (k - 1))) as u16;
    let table: Vec<u16> = f
        .table()
        .iter()
        .map(|&v| {
            let low = ((v as u32) >> (s - 1)) & low_mask;
            let top = ((v & xor_mask).count_ones() & 1) << (k - s);
            (low | top) as u16
        })
        .collect();
    Gbf::new(f.n(), k - s + 1, f.domain().clone(), table).expect("well-formed component")
}

/// Sweeps every base-`2^t` component, checks the domain property at level
/// `2^t`, and cross-validates the recombination identity against the direct
/// transform.
pub fn verify_base2t_theorem(f: &Gbf, t: u32) -> Result<DecompositionReport, DecompError> {
    let k = f.k();
    if t < 1 || k % t != 0 {
        return Err(DecompError::BadParameter(format!(
            "t = {} must divide k = {}",
            t, k
        )));
    }
    if f.n() % 2 == 1 && t < 2 {
        return Err(DecompError::BadParameter(
            "odd n needs t >= 2 for the base-2^t decomposition".into(),
        ));
    }
    let l = k / t;
    let count: u64 = 1u64 << (t * (l - 1));
    if count > (1 << 20) {
        return Err(DecompError::TooManyComponents(count));
    }

    let whole = headline_property(f);
    let mut clauses = vec![Clause::from_report(format!("f is {}", headline_name(f)), &whole)];

    let digits = (l - 1) as usize;
    let base = 1u32 << t;
    let mut all_components = true;
    let mut witness = None;
    let mut spectra: Vec<Spectrum> = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let coeffs: Vec<u16> =
            (0..digits).map(|j| ((idx >> (j as u32 * t)) & (base as u64 - 1)) as u16).collect();
        let g = f.component_base2t(t, &coeffs).expect("coefficients in range");
        let report = headline_property(&g);
        if !report.verdict && witness.is_none() {
            witness = Some(format!("c={:?}", coeffs));
        }
        all_components &= report.verdict;
        spectra.push(spectral::gwht_fast_components(&g));
    }
    clauses.push(Clause::of(
        format!("every base-2^{} component is {} at level 2^{}", t, headline_name(f), t),
        all_components,
        witness,
    ));
    clauses.push(Clause::of(
        format!("{} f has {} base-2^{} components", headline_name(f), headline_name(f), t),
        !whole.verdict || all_components,
        None,
    ));

    let recombined = spectral::combine_base2t_spectra(&spectra, t, k)
        .expect("component spectra have the right shape");
    let direct = spectral::gwht_direct(f);
    let mismatch = (0..f.len() as u32).find(|&u| recombined.value(u) != direct.value(u));
    clauses.push(Clause::of(
        "component spectra recombine to the direct spectrum exactly",
        mismatch.is_none(),
        mismatch.map(|u| format!("u={}", u)),
    ));

    Ok(DecompositionReport { theorem: TheoremId::Base2t, clauses, sign_pattern: None })
}

/// Assembles `f = g + 2h` from a Boolean `g` and half-level `h`; inverse of
/// the t = 1 split. Shared by the equivalence harnesses and the CLI.
pub fn assemble_split(g: &Gbf, h: &Gbf) -> Result<Gbf, DecompError> {
    if g.k() != 1 {
        return Err(DecompError::BadParameter("low part must be Boolean".into()));
    }
    Gbf::join_low_high(g, h).map_err(|e| DecompError::BadParameter(e.to_string()))
}

/// Convenience wrapper used by harnesses: does the half-level condition of
/// the split equivalence hold for `(g, h)`?
pub fn split_condition_holds(g: &Gbf, h: &Gbf) -> Result<bool, DecompError> {
    let f = assemble_split(g, h)?;
    let report = verify_split_k_km1(&f, SplitMode::Check)?;
    Ok(report.clauses[..3].iter().all(|c| c.verdict))
}

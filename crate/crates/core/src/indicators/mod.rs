//! Higher Frobenius–Schur indicators of the simple objects of the category
//! of `H`-bimodules in `G`-graded vector spaces.
//!
//! Simples are pairs `(d, η)` with `d` a double coset representative and `η`
//! an irreducible character of `S = Stab_H(dH) = H ∩ d⊳H`. Three independent
//! evaluation paths are provided: the direct sum over `dH` ([`nu_brute`]), the
//! orbit-reduced sum ([`orbit::nu_orbit`]) and the ribbon trace on the adjoint
//! object in the center ([`center::nu_via_center`]).

pub mod center;
pub mod double;
mod element;
pub mod orbit;
pub mod sweep;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::characters::{int_ratio, CharacterError, CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::group::{DoubleCosetDecomposition, FinGroup, GroupError};
use crate::perm::{PermError, Permutation};

pub use element::{parse_expansion, CentralElement, Keying};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndicatorError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error("m must be at least 1")]
    ZeroPower,
    #[error("coset index {0} out of range")]
    CosetOutOfRange(usize),
    #[error("character index {index} out of range for a stabilizer with {count} irreducibles")]
    CharacterOutOfRange { index: usize, count: usize },
    #[error("representatives {0} and {1} lie in the same double coset")]
    DuplicateRepresentative(String, String),
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("{0} is not an element of the coset stabilizer")]
    NotInStabilizer(String),
    #[error("{0} does not centralize the subgroup")]
    NotCentralizing(String),
    #[error("invalid S′: {0}")]
    InvalidSPrime(String),
    #[error("cannot parse expansion {text:?}: {reason}")]
    Expansion { text: String, reason: String },
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl From<PermError> for IndicatorError {
    fn from(e: PermError) -> Self {
        IndicatorError::Group(e.into())
    }
}

/// The double cosets `H\G/H` with their stabilizers and (lazily) the
/// character tables of those stabilizers.
pub struct CategoryContext {
    g: Arc<FinGroup>,
    h: Arc<FinGroup>,
    cosets: DoubleCosetDecomposition,
    reps: Vec<Permutation>,
    stabilizers: Vec<OnceLock<Arc<FinGroup>>>,
    tables: Vec<OnceLock<Arc<CharacterTable>>>,
    transversals: Vec<OnceLock<Arc<Vec<Permutation>>>>,
    center: OnceLock<Arc<center::CenterData>>,
}

impl fmt::Debug for CategoryContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CategoryContext")
            .field("group_order", &self.g.order())
            .field("subgroup_order", &self.h.order())
            .field("representatives", &self.reps)
            .finish()
    }
}

/// A simple object `Ind_d(W)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SimpleObject {
    pub coset_index: usize,
    pub char_index: usize,
    pub label: String,
}

fn lazy<T: Clone>(
    cell: &OnceLock<T>,
    make: impl FnOnce() -> Result<T, IndicatorError>,
) -> Result<T, IndicatorError> {
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let v = make()?;
    Ok(cell.get_or_init(|| v).clone())
}

impl CategoryContext {
    pub fn build(g: Arc<FinGroup>, h: Arc<FinGroup>) -> Result<Self, IndicatorError> {
        Self::build_with_representatives(g, h, &[])
    }

    /// Like [`build`](Self::build), but each double coset containing one of
    /// `preferred` uses that element as its representative instead of the
    /// canonical minimal one.
    pub fn build_with_representatives(
        g: Arc<FinGroup>,
        h: Arc<FinGroup>,
        preferred: &[Permutation],
    ) -> Result<Self, IndicatorError> {
        let cosets = g.double_cosets(&h, &h)?;
        let mut reps = cosets.representatives().to_vec();
        let mut overridden: Vec<Option<&Permutation>> = vec![None; reps.len()];
        for p in preferred {
            let c = cosets
                .coset_of(&g, p)
                .ok_or_else(|| IndicatorError::NotInGroup(p.to_string()))?;
            if let Some(prev) = overridden[c] {
                if prev != p {
                    return Err(IndicatorError::DuplicateRepresentative(
                        prev.to_string(),
                        p.to_string(),
                    ));
                }
            }
            overridden[c] = Some(p);
            reps[c] = p.clone();
        }
        let n = reps.len();
        Ok(CategoryContext {
            g,
            h,
            cosets,
            reps,
            stabilizers: (0..n).map(|_| OnceLock::new()).collect(),
            tables: (0..n).map(|_| OnceLock::new()).collect(),
            transversals: (0..n).map(|_| OnceLock::new()).collect(),
            center: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.g
    }

    pub fn subgroup(&self) -> &Arc<FinGroup> {
        &self.h
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn representative(&self, coset: usize) -> Result<&Permutation, IndicatorError> {
        self.reps
            .get(coset)
            .ok_or(IndicatorError::CosetOutOfRange(coset))
    }

    /// Number of elements of the double coset `HdH`.
    pub fn coset_size(&self, coset: usize) -> u64 {
        self.cosets.sizes()[coset]
    }

    /// Index of the double coset containing `x`.
    pub fn coset_of(&self, x: &Permutation) -> Option<usize> {
        self.cosets.coset_of(&self.g, x)
    }

    /// `S = Stab_H(dH)`.
    pub fn stabilizer(&self, coset: usize) -> Result<Arc<FinGroup>, IndicatorError> {
        let d = self.representative(coset)?;
        lazy(&self.stabilizers[coset], || {
            Ok(Arc::new(self.h.coset_stabilizer(d)?))
        })
    }

    pub fn character_table(&self, coset: usize) -> Result<Arc<CharacterTable>, IndicatorError> {
        let s = self.stabilizer(coset)?;
        lazy(&self.tables[coset], || Ok(Arc::new(CharacterTable::compute(s)?)))
    }

    /// Canonical left transversal of `S` in `H`.
    pub fn transversal(&self, coset: usize) -> Result<Arc<Vec<Permutation>>, IndicatorError> {
        let s = self.stabilizer(coset)?;
        lazy(&self.transversals[coset], || {
            Ok(Arc::new(self.h.left_transversal(&s)?))
        })
    }

    pub fn exponent(&self) -> u64 {
        self.g.exponent()
    }

    pub fn simples(&self, coset: usize) -> Result<Vec<SimpleObject>, IndicatorError> {
        let d = self.representative(coset)?;
        let table = self.character_table(coset)?;
        Ok((0..table.len())
            .map(|j| SimpleObject {
                coset_index: coset,
                char_index: j,
                label: format!("Ind_{d}(W_{j})"),
            })
            .collect())
    }

    pub fn all_simples(&self) -> Result<Vec<SimpleObject>, IndicatorError> {
        let mut out = Vec::new();
        for c in 0..self.coset_count() {
            out.extend(self.simples(c)?);
        }
        Ok(out)
    }

    /// The irreducible character `η` of a simple.
    pub fn character(&self, simple: &SimpleObject) -> Result<ClassFunction, IndicatorError> {
        let table = self.character_table(simple.coset_index)?;
        table
            .irreducibles()
            .get(simple.char_index)
            .cloned()
            .ok_or(IndicatorError::CharacterOutOfRange {
                index: simple.char_index,
                count: table.len(),
            })
    }

    pub(crate) fn center_data(&self) -> Result<Arc<center::CenterData>, IndicatorError> {
        lazy(&self.center, || Ok(Arc::new(center::CenterData::build(self)?)))
    }
}

fn check_m(m: u64) -> Result<(), IndicatorError> {
    if m == 0 {
        Err(IndicatorError::ZeroPower)
    } else {
        Ok(())
    }
}

/// `(dh)^m` reduced using the order of `dh`.
pub(crate) fn power(x: &Permutation, m: u64) -> Permutation {
    x.pow((m % x.order()) as i64)
}

/// `μ_m(d) = (1/|S|) Σ_{h ∈ H, (dh)^m ∈ S} (dh)^m`, aggregated over the
/// conjugacy classes of `S`.
pub fn mu_element(
    ctx: &CategoryContext,
    coset: usize,
    m: u64,
) -> Result<CentralElement, IndicatorError> {
    check_m(m)?;
    let d = ctx.representative(coset)?;
    let s = ctx.stabilizer(coset)?;
    let classes = s.conjugacy_classes();
    let mut counts = vec![0i64; classes.len()];
    for h in ctx.h.elements() {
        if let Some(c) = s.class_index(&power(&(d * h), m)) {
            counts[c] += 1;
        }
    }
    let order = s.order() as i64;
    let terms = counts
        .iter()
        .enumerate()
        .filter(|(_, &n)| n != 0)
        .map(|(c, &n)| (classes.representative(c).clone(), int_ratio(n, order)));
    Ok(CentralElement::from_terms(s.clone(), Keying::Conjugation, terms))
}

/// Evaluates a class function on `S` at a central element supported in `S`.
pub fn pair(eta: &ClassFunction, x: &CentralElement) -> Result<Cyclotomic, IndicatorError> {
    let mut sum = Cyclotomic::zero();
    for (r, c) in x.support() {
        let v = eta
            .eval(r)
            .map_err(|_| IndicatorError::NotInStabilizer(r.to_string()))?;
        sum += v.scalar_mul(c);
    }
    Ok(sum)
}

/// Direct evaluation `ν_m = (1/|S|) Σ_{h ∈ H, (dh)^m ∈ S} η̄((dh)^m)` for an
/// arbitrary class function `eta` on the stabilizer of `coset`.
pub fn nu_brute_character(
    ctx: &CategoryContext,
    coset: usize,
    eta: &ClassFunction,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    let mu = mu_element(ctx, coset, m)?;
    pair(&eta.conj(), &mu)
}

pub fn nu_brute(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    let eta = ctx.character(simple)?;
    nu_brute_character(ctx, simple.coset_index, &eta, m)
}

/// `η(μ_m(d))` without the complex conjugate; differs from [`nu_brute`] only
/// on non-real values.
pub fn eta_of_mu(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    let eta = ctx.character(simple)?;
    pair(&eta, &mu_element(ctx, simple.coset_index, m)?)
}

/// Shortcut for `d ∈ C_G(H)`, where `S = H`:
/// `ν_m = η̄(d^m)/η(1) · ν_m(η)` if `d^m ∈ H`, else 0.
pub fn nu_central_case(
    ctx: &CategoryContext,
    d: &Permutation,
    eta: &ClassFunction,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    check_m(m)?;
    if !ctx.g.contains(d) {
        return Err(IndicatorError::NotInGroup(d.to_string()));
    }
    if ctx.h.generators().iter().any(|x| &(d * x) != &(x * d)) {
        return Err(IndicatorError::NotCentralizing(d.to_string()));
    }
    let dm = power(d, m);
    if !ctx.h.contains(&dm) {
        return Ok(Cyclotomic::zero());
    }
    let value = eta.eval(&dm)?.conj();
    let degree = eta.degree().as_rational().map_err(|e| IndicatorError::Internal(e.to_string()))?;
    Ok((value * eta.classical_indicator(m)).scalar_mul(&degree.recip()))
}

/// `ζ_m(y) = |{h ∈ H : (dh)^m = y}|` for `y ∈ S`.
pub fn count_power_fibers(
    ctx: &CategoryContext,
    coset: usize,
    m: u64,
    y: &Permutation,
) -> Result<u64, IndicatorError> {
    check_m(m)?;
    let s = ctx.stabilizer(coset)?;
    if !s.contains(y) {
        return Err(IndicatorError::NotInStabilizer(y.to_string()));
    }
    let d = ctx.representative(coset)?;
    Ok(ctx
        .h
        .elements()
        .iter()
        .filter(|h| &power(&(d * *h), m) == y)
        .count() as u64)
}

/// Evaluation path for indicators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The direct sum over `dH`.
    #[default]
    Brute,
    /// The sum over `S′⊲` orbits on `H`.
    Orbit,
    /// The twist trace on the induced central object.
    Center,
}

/// `ν_m` for every `m` in `ms`, sharing the per-simple work of `method`.
pub fn indicator_sequence(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    ms: &[u64],
    method: Method,
    sprime: &orbit::SPrimeChoice,
) -> Result<Vec<Cyclotomic>, IndicatorError> {
    match method {
        Method::Brute => ms.iter().map(|&m| nu_brute(ctx, simple, m)).collect(),
        Method::Orbit => {
            let octx = orbit::orbit_context(ctx, simple.coset_index, sprime)?;
            let eta = ctx.character(simple)?;
            ms.iter()
                .map(|&m| orbit::nu_orbit_character(&octx, &eta, m))
                .collect()
        }
        Method::Center => {
            let terms = center::adjoint_decomposition(ctx, simple)?;
            ms.iter()
                .map(|&m| center::nu_from_adjoint(ctx, &terms, m))
                .collect()
        }
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

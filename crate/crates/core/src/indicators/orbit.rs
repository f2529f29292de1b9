//! Orbit-reduced evaluation.
//!
//! `E = C_G(d) ∩ S·C_G(S) ∩ N_G(H)` conjugates `dH` onto itself, normalizes
//! `S` and acts on `Irr(S)` through inner automorphisms of `S`, so `SE` and
//! any subgroup `S′ ⊆ SE` preserve every summand of the direct sum. On `H`
//! that conjugation reads `s⊲h = (d⁻¹⊳s)·h·s⁻¹`.

use std::sync::Arc;

use num::rational::BigRational;

use super::{
    check_m, pair, power, CategoryContext, CentralElement, IndicatorError, Keying, SimpleObject,
};
use crate::characters::{int_ratio, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::group::{orbits_under, FinGroup};
use crate::perm::Permutation;

/// Which subgroup of `SE` acts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum SPrimeChoice {
    /// `S′ = S`.
    Stabilizer,
    /// `S′ = SE`, the coarsest reduction.
    #[default]
    FullSE,
    /// `S′ = 1`; every element of `H` is its own orbit.
    Trivial,
    /// The subgroup generated by the given elements, which must lie in `SE`.
    Custom(Vec<Permutation>),
}

/// The data of one orbit reduction for a fixed double coset.
#[derive(Debug, Clone)]
pub struct OrbitContext {
    pub coset: usize,
    pub d: Permutation,
    pub s: Arc<FinGroup>,
    pub e: Arc<FinGroup>,
    pub se: Arc<FinGroup>,
    pub s_prime: Arc<FinGroup>,
    /// `(orbit representative h, orbit size)` for the twisted action on `H`.
    pub orbits: Vec<(Permutation, u64)>,
}

/// `E = C_G(d) ∩ S·C_G(S) ∩ N_G(H)`.
fn e_group(
    ctx: &CategoryContext,
    d: &Permutation,
    s: &FinGroup,
) -> Result<FinGroup, IndicatorError> {
    let g = ctx.group();
    let h = ctx.subgroup();
    let cs = g.group_centralizer(s)?;
    let cd = g.centralizer(d)?;
    let h_gens = h.generators();
    Ok(cd.subgroup_where(|e| {
        h_gens.iter().all(|x| h.contains(&e.conjugate_unchecked(x)))
            && s.elements().iter().any(|t| cs.contains(&(&t.inverse() * e)))
    }))
}

pub fn orbit_context(
    ctx: &CategoryContext,
    coset: usize,
    choice: &SPrimeChoice,
) -> Result<OrbitContext, IndicatorError> {
    let d = ctx.representative(coset)?.clone();
    let s = ctx.stabilizer(coset)?;
    let e = Arc::new(e_group(ctx, &d, &s)?);
    let mut products: Vec<Permutation> = s
        .elements()
        .iter()
        .flat_map(|x| e.elements().iter().map(move |y| x * y))
        .collect();
    products.sort_unstable();
    products.dedup();
    let se = Arc::new(
        FinGroup::from_elements(ctx.group().degree(), products)
            .map_err(|err| IndicatorError::Internal(format!("SE is not a subgroup: {err}")))?,
    );
    let s_prime = match choice {
        SPrimeChoice::Stabilizer => s.clone(),
        SPrimeChoice::FullSE => se.clone(),
        SPrimeChoice::Trivial => Arc::new(FinGroup::generate(ctx.group().degree(), &[])?),
        SPrimeChoice::Custom(gens) => {
            if let Some(bad) = gens.iter().find(|x| !se.contains(x)) {
                return Err(IndicatorError::InvalidSPrime(format!("{bad} is not in SE")));
            }
            Arc::new(FinGroup::generate(ctx.group().degree(), gens)?)
        }
    };
    let dinv = d.inverse();
    let orbits = orbits_under(&s_prime, ctx.subgroup().elements(), |x, h| {
        &(&dinv.conjugate_unchecked(x) * h) * &x.inverse()
    })?
    .into_iter()
    .map(|o| {
        let size = o.size() as u64;
        (o.representative, size)
    })
    .collect();
    Ok(OrbitContext {
        coset,
        d,
        s,
        e,
        se,
        s_prime,
        orbits,
    })
}

/// `Q(d) = Σ_{h ∈ H} h`, aggregated over `S′⊲` orbits.
pub fn q_element(octx: &OrbitContext) -> CentralElement {
    CentralElement::from_terms(
        octx.s_prime.clone(),
        Keying::Twisted { d: octx.d.clone() },
        octx.orbits
            .iter()
            .map(|(h, n)| (h.clone(), BigRational::from_integer((*n).into()))),
    )
}

/// `T(d) = d·Q(d) = Σ_{h ∈ H} dh`, aggregated over `S′`-conjugacy.
pub fn t_element(octx: &OrbitContext) -> CentralElement {
    CentralElement::from_terms(
        octx.s_prime.clone(),
        Keying::Conjugation,
        octx.orbits
            .iter()
            .map(|(h, n)| (&octx.d * h, BigRational::from_integer((*n).into()))),
    )
}

/// `μ̄_m(d) = (1/|S|)·π_S(T(d)^{[m]})`: the same element as
/// [`mu_element`](super::mu_element), keyed by `S′`-conjugacy.
pub fn mu_bar(octx: &OrbitContext, m: u64) -> Result<CentralElement, IndicatorError> {
    check_m(m)?;
    Ok(t_element(octx)
        .power_map(m)?
        .project_to(&octx.s)
        .scale(&int_ratio(1, octx.s.order() as i64)))
}

/// `ν_m = (1/|S|) Σ_{orbits O ∋ h, (dh)^m ∈ S} |O|·η̄((dh)^m)`.
pub fn nu_orbit_character(
    octx: &OrbitContext,
    eta: &ClassFunction,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    check_m(m)?;
    let mut sum = Cyclotomic::zero();
    for (h, n) in &octx.orbits {
        let y = power(&(&octx.d * h), m);
        if octx.s.contains(&y) {
            sum += eta.eval(&y)?.conj().scalar_mul(&BigRational::from_integer((*n).into()));
        }
    }
    Ok(sum.scalar_mul(&int_ratio(1, octx.s.order() as i64)))
}

pub fn nu_orbit(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    m: u64,
    octx: &OrbitContext,
) -> Result<Cyclotomic, IndicatorError> {
    if octx.coset != simple.coset_index {
        return Err(IndicatorError::Internal(format!(
            "orbit data for coset {} used with a simple on coset {}",
            octx.coset, simple.coset_index
        )));
    }
    nu_orbit_character(octx, &ctx.character(simple)?, m)
}

/// `ν_m` through `μ̄`, for cross-checking the orbit sum.
pub fn nu_via_mu_bar(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    m: u64,
    octx: &OrbitContext,
) -> Result<Cyclotomic, IndicatorError> {
    pair(&ctx.character(simple)?.conj(), &mu_bar(octx, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::tests::sym_context;
    use crate::indicators::{divisors, mu_element, nu_brute};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn every_choice_agrees_with_the_direct_sum() {
        let ctx = sym_context(5, 3);
        for coset in 0..ctx.coset_count() {
            let mut contexts = vec![
                orbit_context(&ctx, coset, &SPrimeChoice::Stabilizer).unwrap(),
                orbit_context(&ctx, coset, &SPrimeChoice::FullSE).unwrap(),
                orbit_context(&ctx, coset, &SPrimeChoice::Trivial).unwrap(),
            ];
            let se_gens = contexts[1].se.generators().to_vec();
            contexts.push(orbit_context(&ctx, coset, &SPrimeChoice::Custom(se_gens)).unwrap());
            for m in divisors(ctx.exponent()) {
                let mu = mu_element(&ctx, coset, m).unwrap();
                let totals = mu.class_totals(&ctx.stabilizer(coset).unwrap()).unwrap();
                for octx in &contexts {
                    let bar = mu_bar(octx, m).unwrap();
                    assert_eq!(bar.class_totals(&octx.s).unwrap(), totals);
                    for simple in ctx.simples(coset).unwrap() {
                        let direct = nu_brute(&ctx, &simple, m).unwrap();
                        assert_eq!(nu_orbit(&ctx, &simple, m, octx).unwrap(), direct);
                        assert_eq!(nu_via_mu_bar(&ctx, &simple, m, octx).unwrap(), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_partition_h() {
        let ctx = sym_context(6, 4);
        for coset in 0..ctx.coset_count() {
            let octx = orbit_context(&ctx, coset, &SPrimeChoice::FullSE).unwrap();
            let total: u64 = octx.orbits.iter().map(|(_, n)| n).sum();
            assert_eq!(total, ctx.subgroup().order());
            assert!(octx.s.is_subgroup_of(&octx.se));
            assert!(octx.e.is_subgroup_of(&octx.se));
            let q = q_element(&octx);
            assert_eq!(q.augmentation(), BigRational::from_integer(24.into()));
            assert_eq!(t_element(&octx).len(), q.len());
        }
    }

    #[test]
    fn custom_sprime_must_lie_in_se() {
        let ctx = sym_context(4, 2);
        let coset = ctx.coset_of(&p("(2 3)", 4)).unwrap();
        let err = orbit_context(&ctx, coset, &SPrimeChoice::Custom(vec![p("(1 2 3 4)", 4)]));
        assert!(matches!(err, Err(IndicatorError::InvalidSPrime(_))));
    }
}

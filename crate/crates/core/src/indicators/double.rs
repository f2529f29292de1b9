//! The diagonal `Δ(Γ) ⊂ Γ×Γ`, whose bimodule category is equivalent to the
//! center of `Vec_Γ`. With `d = (γ, 1)` the stabilizer is `Δ(C_Γ(γ))`.

use std::sync::Arc;

use super::{check_m, power, IndicatorError};
use crate::characters::{int_ratio, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::group::FinGroup;
use crate::perm::Permutation;

/// `(Γ×Γ, Δ(Γ))` acting on `2n` points, the second factor on `n+1..2n`.
pub fn double_realization(
    gamma: &FinGroup,
) -> Result<(Arc<FinGroup>, Arc<FinGroup>), IndicatorError> {
    let n = gamma.degree();
    let mut gens = Vec::new();
    let mut diag = Vec::new();
    for g in gamma.generators() {
        let left = g.extend_to(2 * n)?;
        let right = g.shifted(n, 2 * n)?;
        diag.push(&left * &right);
        gens.push(left);
        gens.push(right);
    }
    let product = FinGroup::generate(2 * n, &gens)?;
    let diagonal = FinGroup::generate(2 * n, &diag)?;
    Ok((Arc::new(product), Arc::new(diagonal)))
}

/// `(g, g)`.
pub fn diagonal(g: &Permutation) -> Result<Permutation, IndicatorError> {
    let n = g.degree();
    Ok(&g.extend_to(2 * n)? * &g.shifted(n, 2 * n)?)
}

/// `(γ, 1)`.
pub fn left_factor(gamma: &Permutation) -> Result<Permutation, IndicatorError> {
    Ok(gamma.extend_to(2 * gamma.degree())?)
}

/// Moves a class function on `C ⊆ Γ` to `Δ(C)` through the first factor.
pub fn transport_to_diagonal(
    eta: &ClassFunction,
    target: &Arc<FinGroup>,
) -> Result<ClassFunction, IndicatorError> {
    let n = eta.group().degree();
    let values = target
        .conjugacy_classes()
        .representatives()
        .iter()
        .map(|x| Ok(eta.eval(&x.block(0, n)?)?.clone()))
        .collect::<Result<Vec<Cyclotomic>, IndicatorError>>()?;
    Ok(ClassFunction::new(target.clone(), values)?)
}

/// `ν_m = (1/|C|) Σ_{θ ∈ Γ, (γθ)^m = θ^m} η̄(θ^m)` for `η` on `C = C_Γ(γ)`.
pub fn nu_double(
    gamma_group: &FinGroup,
    gamma: &Permutation,
    eta: &ClassFunction,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    check_m(m)?;
    let c = eta.group();
    if !gamma_group.contains(gamma) {
        return Err(IndicatorError::NotInGroup(gamma.to_string()));
    }
    if !c.same_elements(&gamma_group.centralizer(gamma)?) {
        return Err(IndicatorError::Internal(format!(
            "the character is not defined on the centralizer of {gamma}"
        )));
    }
    let mut sum = Cyclotomic::zero();
    for theta in gamma_group.elements() {
        let tm = power(theta, m);
        if power(&(gamma * theta), m) == tm {
            sum += eta.eval(&tm)?.conj();
        }
    }
    Ok(sum.scalar_mul(&int_ratio(1, c.order() as i64)))
}

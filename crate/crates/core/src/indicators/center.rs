//! Indicators from the center.
//!
//! The center of the bimodule category is the category of Yetter–Drinfeld
//! modules over `G`, with simples `(K_g, V)` for `V ∈ Irr(C_G(g))`. For a
//! simple bimodule `X` the induced central object `I(X)` decomposes with
//! multiplicities `dim Hom(X, F(K_g, V))`, and
//! `ν_m(X) = (1/|G|) Σ mult·[G:C_G(g)]·χ_V(g^{-m})`.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::{check_m, power, CategoryContext, IndicatorError, SimpleObject};
use crate::characters::{int_ratio, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::group::FinGroup;
use crate::perm::Permutation;

/// One conjugacy class of `G` with its centralizer and the
/// representatives `x` of `H\G/C_G(g)`.
pub struct CenterClass {
    pub representative: Permutation,
    pub centralizer: Arc<FinGroup>,
    pub double_coset_reps: Vec<Permutation>,
    table: OnceLock<Arc<CharacterTable>>,
}

impl CenterClass {
    pub fn table(&self) -> Result<Arc<CharacterTable>, IndicatorError> {
        if let Some(t) = self.table.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(CharacterTable::compute(self.centralizer.clone())?);
        Ok(self.table.get_or_init(|| t).clone())
    }
}

pub struct CenterData {
    pub classes: Vec<CenterClass>,
}

impl CenterData {
    pub(crate) fn build(ctx: &CategoryContext) -> Result<Self, IndicatorError> {
        let g = ctx.group();
        let mut classes = Vec::new();
        for rep in g.conjugacy_classes().representatives() {
            let centralizer = Arc::new(g.centralizer(rep)?);
            let double_coset_reps = g
                .double_cosets(ctx.subgroup(), &centralizer)?
                .representatives()
                .to_vec();
            classes.push(CenterClass {
                representative: rep.clone(),
                centralizer,
                double_coset_reps,
                table: OnceLock::new(),
            });
        }
        Ok(CenterData { classes })
    }
}

/// `[I(X) : (K_g, V)]` for the `class_index`-th class of `G` and the
/// `char_index`-th irreducible of its centralizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointTerm {
    pub class_index: usize,
    pub char_index: usize,
    pub multiplicity: u64,
}

/// The nonzero multiplicities of `I(X)` for the simple `X = Ind_d(η)`.
///
/// For `y = x⊳g ∈ HdH` write `y ∈ h·dH` with `h` in the transversal of
/// `H/S`; the `(K_g, V)`-isotypic part of `X` seen from `C = C_G(g)` is
/// `Ind_J^C Res_J (k⊳η)` with `k = x⁻¹h` and `J = (k⊳S) ∩ C`.
pub fn adjoint_decomposition(
    ctx: &CategoryContext,
    simple: &SimpleObject,
) -> Result<Vec<AdjointTerm>, IndicatorError> {
    let data = ctx.center_data()?;
    let coset = simple.coset_index;
    let d = ctx.representative(coset)?;
    let dinv = d.inverse();
    let s = ctx.stabilizer(coset)?;
    let eta = ctx.character(simple)?;
    let transversal = ctx.transversal(coset)?;
    let h_group = ctx.subgroup();
    let mut out = Vec::new();
    for (ci, class) in data.classes.iter().enumerate() {
        let c = &class.centralizer;
        let mut part: Option<crate::characters::ClassFunction> = None;
        for x in &class.double_coset_reps {
            let y = x.conjugate(&class.representative)?;
            if ctx.coset_of(&y) != Some(coset) {
                continue;
            }
            let h = transversal
                .iter()
                .find(|h| h_group.contains(&(&(&dinv * &h.inverse()) * &y)))
                .ok_or_else(|| {
                    IndicatorError::Internal(format!("{y} lies in no coset h·dH"))
                })?;
            let k = &x.inverse() * h;
            let ks = Arc::new(s.conjugated(&k)?);
            let j = Arc::new(ks.intersection(c)?);
            let piece = eta.conjugate_onto(&k, &ks)?.restrict(&j)?.induce(c)?;
            part = Some(match part {
                None => piece,
                Some(acc) => acc.add(&piece)?,
            });
        }
        let Some(part) = part else { continue };
        let table = class.table()?;
        for (vi, v) in table.irreducibles().iter().enumerate() {
            let ip = part.inner_product(v)?;
            let mult = ip
                .as_integer()
                .ok()
                .and_then(|n| u64::try_from(n).ok())
                .ok_or_else(|| {
                    IndicatorError::Internal(format!("multiplicity {ip} is not a natural number"))
                })?;
            if mult != 0 {
                out.push(AdjointTerm {
                    class_index: ci,
                    char_index: vi,
                    multiplicity: mult,
                });
            }
        }
    }
    Ok(out)
}

/// `ν_m` from a precomputed decomposition of `I(X)`.
pub fn nu_from_adjoint(
    ctx: &CategoryContext,
    terms: &[AdjointTerm],
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    check_m(m)?;
    let data = ctx.center_data()?;
    let g_order = ctx.group().order();
    let mut sum = Cyclotomic::zero();
    for t in terms {
        let class = &data.classes[t.class_index];
        let table = class.table()?;
        let v = &table.irreducibles()[t.char_index];
        let g = &class.representative;
        let o = g.order();
        let y = power(g, (o - m % o) % o);
        let weight = t.multiplicity * (g_order / class.centralizer.order());
        sum += v.eval(&y)?.scalar_mul(&int_ratio(weight as i64, 1));
    }
    Ok(sum.scalar_mul(&int_ratio(1, g_order as i64)))
}

pub fn nu_via_center(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    m: u64,
) -> Result<Cyclotomic, IndicatorError> {
    check_m(m)?;
    let terms = adjoint_decomposition(ctx, simple)?;
    nu_from_adjoint(ctx, &terms, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::tests::sym_context;
    use crate::indicators::{divisors, nu_brute};

    fn check(ctx: &CategoryContext) {
        for simple in ctx.all_simples().unwrap() {
            let terms = adjoint_decomposition(ctx, &simple).unwrap();
            for m in divisors(ctx.exponent()) {
                assert_eq!(
                    nu_from_adjoint(ctx, &terms, m).unwrap(),
                    nu_brute(ctx, &simple, m).unwrap(),
                    "{} m = {m}",
                    simple.label
                );
            }
        }
    }

    #[test]
    fn agrees_with_the_direct_sum_on_symmetric_pairs() {
        check(&sym_context(4, 2));
        check(&sym_context(4, 3));
        check(&sym_context(5, 3));
    }

    #[test]
    fn agrees_on_a_cyclic_example_with_non_real_values() {
        let g = Arc::new(FinGroup::cyclic_on_first(9, 9).unwrap());
        let h = Arc::new(
            FinGroup::generate(9, &[Permutation::parse_cycles("(1 4 7)(2 5 8)(3 6 9)", 9).unwrap()])
                .unwrap(),
        );
        check(&CategoryContext::build(g, h).unwrap());
    }

    #[test]
    fn adjoint_dimension() {
        // FPdim I(X) = |G|·FPdim X with FPdim Ind_d(η) = [H:S]·η(1).
        let ctx = sym_context(5, 3);
        let data = ctx.center_data().unwrap();
        for simple in ctx.all_simples().unwrap() {
            let eta = ctx.character(&simple).unwrap();
            let s = ctx.stabilizer(simple.coset_index).unwrap();
            let deg = eta.degree().as_integer().unwrap();
            let expected = ctx.group().order() * ctx.subgroup().order() / s.order()
                * u64::try_from(deg).unwrap();
            let mut dim = 0u64;
            for t in adjoint_decomposition(&ctx, &simple).unwrap() {
                let class = &data.classes[t.class_index];
                let table = class.table().unwrap();
                let v = &table.irreducibles()[t.char_index];
                let vd = u64::try_from(v.degree().as_integer().unwrap()).unwrap();
                dim += t.multiplicity * ctx.group().order() / class.centralizer.order() * vd;
            }
            assert_eq!(dim, expected, "{}", simple.label);
        }
    }
}

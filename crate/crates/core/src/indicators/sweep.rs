//! Exhaustive checks of a predicate over all simples and all `m | exp(G)`.

use rayon::prelude::*;
use serde::Serialize;

use super::orbit::SPrimeChoice;
use super::{
    divisors, indicator_sequence, mu_element, pair, CategoryContext, IndicatorError, Method,
    SimpleObject,
};
use crate::cyclotomic::{is_nonnegative_rational, is_real, Cyclotomic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    /// A nonnegative rational.
    Nonnegative,
    /// A rational integer.
    Integral,
    /// Fixed by complex conjugation.
    Real,
}

impl Predicate {
    pub fn holds(self, x: &Cyclotomic) -> bool {
        match self {
            Predicate::Nonnegative => is_nonnegative_rational(x),
            Predicate::Integral => x.is_integer(),
            Predicate::Real => is_real(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub simple: SimpleObject,
    pub m: u64,
    pub value: Cyclotomic,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub predicate: Predicate,
    pub simples: usize,
    pub evaluations: usize,
    /// Sorted by coset, character, then `m`; the first entry is the first violation.
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Evaluates every simple at every divisor of `exp(G)`, in parallel over
/// double cosets.
pub fn sweep(
    ctx: &CategoryContext,
    predicate: Predicate,
    method: Method,
    sprime: &SPrimeChoice,
) -> Result<SweepReport, IndicatorError> {
    let ms = divisors(ctx.exponent());
    let per_coset: Vec<(usize, Vec<Violation>)> = (0..ctx.coset_count())
        .into_par_iter()
        .map(|coset| {
            let simples = ctx.simples(coset)?;
            let mut bad = Vec::new();
            if method == Method::Brute {
                // μ_m(d) is shared by all characters of the coset.
                for &m in &ms {
                    let mu = mu_element(ctx, coset, m)?;
                    for simple in &simples {
                        let value = pair(&ctx.character(simple)?.conj(), &mu)?;
                        if !predicate.holds(&value) {
                            bad.push(Violation {
                                simple: simple.clone(),
                                m,
                                value,
                            });
                        }
                    }
                }
            } else {
                for simple in &simples {
                    let values = indicator_sequence(ctx, simple, &ms, method, sprime)?;
                    for (&m, value) in ms.iter().zip(values) {
                        if !predicate.holds(&value) {
                            bad.push(Violation {
                                simple: simple.clone(),
                                m,
                                value,
                            });
                        }
                    }
                }
            }
            Ok((simples.len(), bad))
        })
        .collect::<Result<_, IndicatorError>>()?;
    let simples: usize = per_coset.iter().map(|(n, _)| n).sum();
    let mut violations: Vec<Violation> = per_coset.into_iter().flat_map(|(_, v)| v).collect();
    violations.sort_by(|a, b| {
        (a.simple.coset_index, a.simple.char_index, a.m)
            .cmp(&(b.simple.coset_index, b.simple.char_index, b.m))
    });
    Ok(SweepReport {
        predicate,
        simples,
        evaluations: simples * ms.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::tests::sym_context;

    #[test]
    fn symmetric_pairs_are_nonnegative() {
        let ctx = sym_context(5, 3);
        for method in [Method::Brute, Method::Orbit, Method::Center] {
            let r = sweep(&ctx, Predicate::Nonnegative, method, &SPrimeChoice::FullSE).unwrap();
            assert!(r.passed(), "{method:?}: {:?}", r.first_violation());
            assert_eq!(r.simples, 15);
            assert_eq!(r.evaluations, 15 * 12);
        }
    }

    #[test]
    fn cyclic_example_reports_non_real_values() {
        use crate::group::FinGroup;
        use crate::perm::Permutation;
        use std::sync::Arc;
        let g = Arc::new(FinGroup::cyclic_on_first(9, 9).unwrap());
        let h = Arc::new(
            FinGroup::generate(9, &[Permutation::parse_cycles("(1 4 7)(2 5 8)(3 6 9)", 9).unwrap()])
                .unwrap(),
        );
        let ctx = CategoryContext::build(g, h).unwrap();
        let r = sweep(&ctx, Predicate::Real, Method::Brute, &SPrimeChoice::FullSE).unwrap();
        let first = r.first_violation().expect("some indicator is not real");
        assert!(!is_real(&first.value));
        let all = sweep(&ctx, Predicate::Nonnegative, Method::Brute, &SPrimeChoice::FullSE).unwrap();
        assert!(all.violations.len() >= r.violations.len());
    }
}

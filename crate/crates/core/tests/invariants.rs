use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use fsind::cyclotomic::Cyclotomic;
use fsind::group::FinGroup;
use fsind::indicators::orbit::{nu_orbit, orbit_context, SPrimeChoice};
use fsind::indicators::{nu_brute, CategoryContext, SimpleObject};
use fsind::perm::Permutation;

fn contexts() -> &'static [CategoryContext] {
    static CELL: OnceLock<Vec<CategoryContext>> = OnceLock::new();
    CELL.get_or_init(|| {
        let sym = |n, k| {
            CategoryContext::build(
                Arc::new(FinGroup::symmetric(n).unwrap()),
                Arc::new(FinGroup::symmetric_on_first(k, n).unwrap()),
            )
            .unwrap()
        };
        let c9 = CategoryContext::build(
            Arc::new(FinGroup::cyclic_on_first(9, 9).unwrap()),
            Arc::new(
                FinGroup::generate(
                    9,
                    &[Permutation::parse_cycles("(1 4 7)(2 5 8)(3 6 9)", 9).unwrap()],
                )
                .unwrap(),
            ),
        )
        .unwrap();
        vec![sym(4, 2), sym(5, 3), sym(5, 2), c9]
    })
}

fn pick(ci: usize, si: usize) -> (&'static CategoryContext, SimpleObject) {
    let ctx = &contexts()[ci % contexts().len()];
    let simples = ctx.all_simples().unwrap();
    let s = simples[si % simples.len()].clone();
    (ctx, s)
}

/// The sorted indicator sequences of all simples over one double coset.
fn coset_sequences(ctx: &CategoryContext, coset: usize, conj: bool) -> Vec<Vec<Cyclotomic>> {
    let mut out: Vec<Vec<Cyclotomic>> = ctx
        .simples(coset)
        .unwrap()
        .iter()
        .map(|x| {
            (1..=ctx.exponent())
                .map(|m| {
                    let v = nu_brute(ctx, x, m).unwrap();
                    if conj {
                        v.conj()
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    out.sort_by_key(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sequences_are_periodic_in_the_exponent(ci in 0usize..4, si in 0usize..64, m in 1u64..120) {
        let (ctx, s) = pick(ci, si);
        prop_assert_eq!(
            nu_brute(ctx, &s, m).unwrap(),
            nu_brute(ctx, &s, m + ctx.exponent()).unwrap()
        );
    }

    #[test]
    fn first_indicator_is_one_exactly_on_the_unit(ci in 0usize..4, si in 0usize..64) {
        let (ctx, s) = pick(ci, si);
        let unit = ctx.coset_of(&Permutation::identity(ctx.group().degree())) == Some(s.coset_index)
            && s.char_index == 0;
        let expected = if unit { Cyclotomic::one() } else { Cyclotomic::zero() };
        prop_assert_eq!(nu_brute(ctx, &s, 1).unwrap(), expected);
    }

    #[test]
    fn second_indicator_is_an_integer(ci in 0usize..4, si in 0usize..64) {
        let (ctx, s) = pick(ci, si);
        prop_assert!(nu_brute(ctx, &s, 2).unwrap().is_integer());
    }

    #[test]
    fn orbit_path_matches_for_every_sprime(ci in 0usize..4, si in 0usize..64, m in 1u64..61) {
        let (ctx, s) = pick(ci, si);
        let brute = nu_brute(ctx, &s, m).unwrap();
        for choice in [SPrimeChoice::Stabilizer, SPrimeChoice::FullSE, SPrimeChoice::Trivial] {
            let octx = orbit_context(ctx, s.coset_index, &choice).unwrap();
            prop_assert_eq!(&nu_orbit(ctx, &s, m, &octx).unwrap(), &brute);
        }
    }
}

#[test]
fn inverse_double_cosets_carry_conjugate_sequences() {
    // The dual of a simple over HdH lies over Hd⁻¹H with conjugate indicators.
    for ctx in contexts() {
        for coset in 0..ctx.coset_count() {
            let d = ctx.representative(coset).unwrap();
            let dual = ctx.coset_of(&d.inverse()).unwrap();
            assert_eq!(
                coset_sequences(ctx, coset, false),
                coset_sequences(ctx, dual, true),
                "{d}"
            );
        }
    }
}

#[test]
fn conjugating_by_the_last_transposition_preserves_tables() {
    // (n-1 n) normalizes S_k for k ≤ n-2, so it permutes the double cosets
    // by an autoequivalence.
    for ctx in &contexts()[..3] {
        let n = ctx.group().degree();
        let t = Permutation::parse_cycles(&format!("({} {})", n - 1, n), n).unwrap();
        for coset in 0..ctx.coset_count() {
            let d = ctx.representative(coset).unwrap();
            let image = ctx.coset_of(&t.conjugate(d).unwrap()).unwrap();
            assert_eq!(
                coset_sequences(ctx, coset, false),
                coset_sequences(ctx, image, false),
                "{d}"
            );
        }
    }
}

//! One PASS/FAIL line per acceptance criterion, with wall time against the
//! budget. Runs without the libtest harness so the lines always print.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fsind::characters::CharacterTable;
use fsind::cyclotomic::Cyclotomic;
use fsind::fixtures;
use fsind::group::FinGroup;
use fsind::indicators::center::{adjoint_decomposition, nu_from_adjoint};
use fsind::indicators::double::{
    double_realization, left_factor, nu_double, transport_to_diagonal,
};
use fsind::indicators::orbit::{nu_orbit_character, orbit_context, SPrimeChoice};
use fsind::indicators::sweep::{sweep, Predicate};
use fsind::indicators::{
    count_power_fibers, nu_brute, nu_brute_character, CategoryContext, Method,
};
use fsind::perm::Permutation;
use fsind::verify::{run_fixture, ALL_METHODS};

type Outcome = Result<String, String>;

fn fixture(id: &str, methods: &[Method]) -> Outcome {
    let f = fixtures::by_id(id).ok_or_else(|| format!("no fixture {id}"))?;
    let r = run_fixture(&f, methods).map_err(|e| e.to_string())?;
    if !r.passed() {
        let lines: Vec<String> = r.mismatches.iter().take(5).map(|m| m.to_string()).collect();
        return Err(format!("{} mismatches: {}", r.mismatches.len(), lines.join("; ")));
    }
    let mut note = format!("{} checks, {} evaluations", r.checks, r.evaluations);
    for c in &r.corrections {
        note.push_str(&format!("\n      printed value inconsistent: {c}"));
    }
    Ok(note)
}

fn sym(n: usize, k: usize) -> Result<CategoryContext, String> {
    let g = Arc::new(FinGroup::symmetric(n).map_err(|e| e.to_string())?);
    let h = Arc::new(FinGroup::symmetric_on_first(k, n).map_err(|e| e.to_string())?);
    CategoryContext::build(g, h).map_err(|e| e.to_string())
}

fn oracle_suite() -> Outcome {
    let mut evaluations = 0usize;
    for (n, k) in [(4, 2), (5, 3)] {
        let ctx = sym(n, k)?;
        let exp = ctx.exponent();
        for simple in ctx.all_simples().map_err(|e| e.to_string())? {
            let eta = ctx.character(&simple).map_err(|e| e.to_string())?;
            let terms = adjoint_decomposition(&ctx, &simple).map_err(|e| e.to_string())?;
            let octxs = [SPrimeChoice::Stabilizer, SPrimeChoice::FullSE, SPrimeChoice::Trivial]
                .iter()
                .map(|c| orbit_context(&ctx, simple.coset_index, c))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            for m in 1..=exp {
                let brute = nu_brute(&ctx, &simple, m).map_err(|e| e.to_string())?;
                let mut others = vec![nu_from_adjoint(&ctx, &terms, m).map_err(|e| e.to_string())?];
                for o in &octxs {
                    others.push(nu_orbit_character(o, &eta, m).map_err(|e| e.to_string())?);
                }
                if let Some(bad) = others.iter().find(|x| **x != brute) {
                    return Err(format!(
                        "S{n}/S{k} {} m={m}: brute {brute}, other {bad}",
                        simple.label
                    ));
                }
                evaluations += 4;
            }
        }
    }
    // Σ_η ν_m(η)·η(y) counts the h ∈ H with (dh)^m = y.
    let ctx = sym(4, 2)?;
    let mut points = 0usize;
    for coset in 0..ctx.coset_count() {
        let s = ctx.stabilizer(coset).map_err(|e| e.to_string())?;
        let simples = ctx.simples(coset).map_err(|e| e.to_string())?;
        for m in 1..=ctx.exponent() {
            let nus = simples
                .iter()
                .map(|x| nu_brute(&ctx, x, m))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            for y in s.elements() {
                let mut lhs = Cyclotomic::zero();
                for (x, nu) in simples.iter().zip(&nus) {
                    let eta = ctx.character(x).map_err(|e| e.to_string())?;
                    lhs += nu.clone() * eta.eval(y).map_err(|e| e.to_string())?.clone();
                }
                let count = count_power_fibers(&ctx, coset, m, y).map_err(|e| e.to_string())?;
                if lhs != Cyclotomic::from_integer(count as i64) {
                    return Err(format!("counting identity fails at coset {coset}, m={m}, y={y}"));
                }
                points += 1;
            }
        }
    }
    Ok(format!("{evaluations} evaluations agree, counting identity at {points} points"))
}

fn double_s3() -> Outcome {
    let gamma_group = Arc::new(FinGroup::symmetric(3).map_err(|e| e.to_string())?);
    let (g, h) = double_realization(&gamma_group).map_err(|e| e.to_string())?;
    let classes = gamma_group.conjugacy_classes();
    let lifted = classes
        .representatives()
        .iter()
        .map(left_factor)
        .collect::<Result<Vec<Permutation>, _>>()
        .map_err(|e| e.to_string())?;
    let ctx =
        CategoryContext::build_with_representatives(g, h, &lifted).map_err(|e| e.to_string())?;
    let mut simples = 0;
    for (gamma, d) in classes.representatives().iter().zip(&lifted) {
        let coset = ctx.coset_of(d).ok_or("lifted representative outside G")?;
        let s = ctx.stabilizer(coset).map_err(|e| e.to_string())?;
        let c = Arc::new(gamma_group.centralizer(gamma).map_err(|e| e.to_string())?);
        let table = CharacterTable::compute(c).map_err(|e| e.to_string())?;
        for eta in table.irreducibles() {
            simples += 1;
            let moved = transport_to_diagonal(eta, &s).map_err(|e| e.to_string())?;
            for m in 1..=6 {
                let a = nu_double(&gamma_group, gamma, eta, m).map_err(|e| e.to_string())?;
                let b = nu_brute_character(&ctx, coset, &moved, m).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("γ={gamma} m={m}: double {a}, bimodule {b}"));
                }
            }
        }
    }
    if simples != 8 {
        return Err(format!("expected 8 simples, found {simples}"));
    }
    Ok("8 simples, m = 1..6".into())
}

fn sweeps() -> Outcome {
    let mut notes = Vec::new();
    for (n, k, p) in [
        (6, 4, Predicate::Integral),
        (7, 5, Predicate::Integral),
        (8, 6, Predicate::Nonnegative),
    ] {
        let ctx = sym(n, k)?;
        let r = sweep(&ctx, p, Method::Brute, &SPrimeChoice::FullSE).map_err(|e| e.to_string())?;
        if let Some(v) = r.first_violation() {
            return Err(format!("S{n}/S{k} {p:?}: {} m={} gives {}", v.simple.label, v.m, v.value));
        }
        notes.push(format!("S{n}/S{k} {p:?} on {} simples", r.simples));
    }
    Ok(notes.join(", "))
}

fn cyclic() -> Outcome {
    let base = fixture("c9-cyclic", &ALL_METHODS)?;
    let g = Arc::new(FinGroup::cyclic_on_first(9, 9).map_err(|e| e.to_string())?);
    let gen = Permutation::parse_cycles("(1 2 3 4 5 6 7 8 9)", 9).map_err(|e| e.to_string())?;
    let h = Arc::new(FinGroup::generate(9, &[gen.pow(3)]).map_err(|e| e.to_string())?);
    let ctx = CategoryContext::build_with_representatives(g, h, &[gen.clone()])
        .map_err(|e| e.to_string())?;
    let coset = ctx.coset_of(&gen).ok_or("generator outside G")?;
    let mut roots = Vec::new();
    // The trivial character gives ν₃ = 1; the other two give the roots.
    for simple in ctx.simples(coset).map_err(|e| e.to_string())?.iter().skip(1) {
        let nu = nu_brute(&ctx, simple, 3).map_err(|e| e.to_string())?;
        if nu.pow(3) != Cyclotomic::one() || nu == Cyclotomic::one() {
            return Err(format!("{} has ν₃ = {nu}", simple.label));
        }
        roots.push(nu.to_string());
    }
    Ok(format!("{base}; ν₃ over the generator: {}", roots.join(", ")))
}

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            number: 1,
            name: "S2 in S4 indicator sequences",
            budget: secs(1),
            run: || fixture("s4s2", &ALL_METHODS),
        },
        Criterion {
            number: 2,
            name: "S3 in S5 gcd tables and mu lists",
            budget: secs(1),
            run: || fixture("s5s3", &ALL_METHODS),
        },
        Criterion {
            number: 3,
            name: "S4 in S6 table and Q/T expansions",
            budget: secs(5),
            run: || fixture("s6s4", &ALL_METHODS),
        },
        Criterion {
            number: 4,
            name: "S5 in S7 orbit-method tables",
            budget: secs(60),
            run: || fixture("s7s5", &[Method::Orbit]),
        },
        Criterion {
            number: 5,
            name: "non-real example in S9",
            budget: None,
            run: || fixture("s9-nonreal", &ALL_METHODS),
        },
        Criterion {
            number: 6,
            name: "C3 in C9 cube roots of unity",
            budget: None,
            run: cyclic,
        },
        Criterion {
            number: 7,
            name: "oracle equivalence and counting identity",
            budget: secs(30),
            run: oracle_suite,
        },
        Criterion {
            number: 8,
            name: "double of S3 against the bimodule sum",
            budget: None,
            run: double_s3,
        },
        Criterion {
            number: 9,
            name: "integrality and nonnegativity sweeps",
            budget: secs(600),
            run: sweeps,
        },
        Criterion {
            number: 10,
            name: "S4 character table",
            budget: None,
            run: || fixture("s4-table", &ALL_METHODS),
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = c.budget.filter(|b| elapsed > *b);
        let budget = c.budget.map(|b| format!(" / {b:?}")).unwrap_or_default();
        match (&outcome, over) {
            (Ok(note), None) => {
                println!("PASS {:>2} {} [{elapsed:.2?}{budget}] {note}", c.number, c.name)
            }
            (Ok(_), Some(b)) => {
                failed += 1;
                println!("FAIL {:>2} {} [{elapsed:.2?}] over budget {b:?}", c.number, c.name);
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {:>2} {} [{elapsed:.2?}] {why}", c.number, c.name);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

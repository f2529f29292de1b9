//! Runs the embedded fixtures against the three evaluation paths.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::characters::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::fixtures::{Check, ExpansionKind, Fixture, SPrimeSpec};
use crate::group::{parse_group_spec, DEFAULT_ORDER_CAP};
use crate::indicators::center::{adjoint_decomposition, nu_from_adjoint, AdjointTerm};
use crate::indicators::orbit::{
    mu_bar, nu_orbit_character, orbit_context, q_element, t_element, OrbitContext, SPrimeChoice,
};
use crate::indicators::{
    mu_element, nu_brute, parse_expansion, CategoryContext, CentralElement, IndicatorError, Keying,
    Method, SimpleObject,
};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub fixture: &'static str,
    /// Coset, character and `m` of the failing cell.
    pub location: String,
    pub method: Option<Method>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.fixture, self.location)?;
        if let Some(m) = self.method {
            write!(f, " [{}]", method_name(m))?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub id: &'static str,
    pub title: &'static str,
    pub checks: usize,
    pub evaluations: usize,
    pub mismatches: Vec<Mismatch>,
    /// Cells where the printed reference value differs from the computed one and
    /// the fixture records the correction.
    pub corrections: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Orbit => "orbit",
        Method::Center => "center",
    }
}

pub const ALL_METHODS: [Method; 3] = [Method::Brute, Method::Orbit, Method::Center];

fn parse_perm(text: &str, degree: usize) -> Result<Permutation, IndicatorError> {
    Ok(Permutation::parse_cycles(text, degree)?)
}

fn sprime_choice(spec: &SPrimeSpec, degree: usize) -> Result<SPrimeChoice, IndicatorError> {
    Ok(match spec {
        SPrimeSpec::Stabilizer => SPrimeChoice::Stabilizer,
        SPrimeSpec::FullSE => SPrimeChoice::FullSE,
        SPrimeSpec::Gens(gens) => SPrimeChoice::Custom(
            gens.iter()
                .map(|g| parse_perm(g, degree))
                .collect::<Result<_, _>>()?,
        ),
    })
}

/// Builds the context of a fixture with its reference representatives.
pub fn fixture_context(f: &Fixture) -> Result<CategoryContext, IndicatorError> {
    let g = Arc::new(parse_group_spec(f.group, None, DEFAULT_ORDER_CAP)?);
    let h = Arc::new(parse_group_spec(f.subgroup, Some(g.degree()), DEFAULT_ORDER_CAP)?);
    if !h.is_subgroup_of(&g) {
        return Err(IndicatorError::Internal(format!(
            "{} is not a subgroup of {}",
            f.subgroup, f.group
        )));
    }
    let reps = f
        .representatives
        .iter()
        .map(|r| parse_perm(r, g.degree()))
        .collect::<Result<Vec<_>, _>>()?;
    CategoryContext::build_with_representatives(g, h, &reps)
}

struct Runner<'a> {
    f: &'a Fixture,
    ctx: CategoryContext,
    methods: &'a [Method],
    orbit: HashMap<&'static str, OrbitContext>,
    adjoint: HashMap<(&'static str, usize), Vec<AdjointTerm>>,
    report: FixtureReport,
}

impl<'a> Runner<'a> {
    fn degree(&self) -> usize {
        self.ctx.group().degree()
    }

    fn coset(&self, rep: &str) -> Result<usize, IndicatorError> {
        let d = parse_perm(rep, self.degree())?;
        let c = self
            .ctx
            .coset_of(&d)
            .ok_or_else(|| IndicatorError::NotInGroup(rep.to_string()))?;
        if self.ctx.representative(c)? != &d {
            return Err(IndicatorError::Internal(format!("{rep} is not a listed representative")));
        }
        Ok(c)
    }

    fn orbit_context(&mut self, rep: &'static str) -> Result<&OrbitContext, IndicatorError> {
        if !self.orbit.contains_key(rep) {
            let coset = self.coset(rep)?;
            let choice = sprime_choice(&self.f.sprime_for(rep), self.degree())?;
            let octx = orbit_context(&self.ctx, coset, &choice)?;
            self.orbit.insert(rep, octx);
        }
        Ok(&self.orbit[rep])
    }

    fn adjoint(&mut self, rep: &'static str, j: usize) -> Result<&[AdjointTerm], IndicatorError> {
        if !self.adjoint.contains_key(&(rep, j)) {
            let simple = self.simple(rep, j)?;
            let terms = adjoint_decomposition(&self.ctx, &simple)?;
            self.adjoint.insert((rep, j), terms);
        }
        Ok(&self.adjoint[&(rep, j)])
    }

    fn simple(&self, rep: &str, j: usize) -> Result<SimpleObject, IndicatorError> {
        let coset = self.coset(rep)?;
        self.ctx
            .simples(coset)?
            .into_iter()
            .nth(j)
            .ok_or(IndicatorError::CharacterOutOfRange {
                index: j,
                count: self.ctx.character_table(coset)?.len(),
            })
    }

    fn mismatch(&mut self, location: String, method: Option<Method>, expected: String, actual: String) {
        self.report.mismatches.push(Mismatch {
            fixture: self.f.id,
            location,
            method,
            expected,
            actual,
        });
    }

    fn indicator(
        &mut self,
        rep: &'static str,
        j: usize,
        m: u64,
    ) -> Result<Vec<(Method, Cyclotomic)>, IndicatorError> {
        let simple = self.simple(rep, j)?;
        let mut out = Vec::new();
        for &method in self.methods {
            let value = match method {
                Method::Brute => nu_brute(&self.ctx, &simple, m)?,
                Method::Orbit => {
                    let eta = self.ctx.character(&simple)?;
                    nu_orbit_character(self.orbit_context(rep)?, &eta, m)?
                }
                Method::Center => {
                    let terms = self.adjoint(rep, j)?.to_vec();
                    nu_from_adjoint(&self.ctx, &terms, m)?
                }
            };
            self.report.evaluations += 1;
            out.push((method, value));
        }
        Ok(out)
    }

    fn compare_indicator(
        &mut self,
        location: String,
        values: Vec<(Method, Cyclotomic)>,
        expected: &Cyclotomic,
        printed: Option<&Cyclotomic>,
    ) {
        let mut all_match = true;
        for (method, value) in values {
            if &value != expected {
                all_match = false;
                self.mismatch(location.clone(), Some(method), expected.to_string(), value.to_string());
            }
        }
        if let (true, Some(p)) = (all_match, printed) {
            self.report
                .corrections
                .push(format!("{location}: reference {p}, computed {expected}"));
        }
    }

    fn run(&mut self, check: &Check) -> Result<(), IndicatorError> {
        self.report.checks += 1;
        match check {
            Check::StabilizerOrder { rep, order } => {
                let s = self.ctx.stabilizer(self.coset(rep)?)?;
                if s.order() != *order {
                    self.mismatch(
                        format!("coset {rep}, stabilizer order"),
                        None,
                        order.to_string(),
                        s.order().to_string(),
                    );
                }
            }
            Check::Indicator {
                rep,
                char_index,
                m,
                expected,
                printed,
            } => {
                let values = self.indicator(rep, *char_index, *m)?;
                let location = format!("coset {rep}, W_{char_index}, m={m}");
                self.compare_indicator(location, values, expected, printed.as_ref());
            }
            Check::IndicatorAt {
                rep,
                element,
                value,
                m,
                expected,
            } => {
                let coset = self.coset(rep)?;
                let x = parse_perm(element, self.degree())?;
                let table = self.ctx.character_table(coset)?;
                let j = table
                    .irreducibles()
                    .iter()
                    .position(|eta| eta.eval(&x).map(|v| v == value).unwrap_or(false))
                    .ok_or_else(|| {
                        IndicatorError::Internal(format!("no character takes {value} at {element}"))
                    })?;
                let values = self.indicator(rep, j, *m)?;
                let location = format!("coset {rep}, η({element}) = {value}, m={m}");
                self.compare_indicator(location, values, expected, None);
            }
            Check::Mu {
                rep,
                m,
                expected,
                printed,
            } => {
                let coset = self.coset(rep)?;
                let s = self.ctx.stabilizer(coset)?;
                let want = CentralElement::from_terms(
                    s.clone(),
                    Keying::Conjugation,
                    parse_expansion(expected, self.degree())?,
                );
                let want_totals = want.class_totals(&s)?;
                let location = format!("coset {rep}, mu, m={m}");
                let mut all_match = true;
                for &method in self.methods {
                    let got = match method {
                        Method::Brute => mu_element(&self.ctx, coset, *m)?,
                        Method::Orbit => mu_bar(self.orbit_context(rep)?, *m)?,
                        Method::Center => continue,
                    };
                    self.report.evaluations += 1;
                    if got.class_totals(&s)? != want_totals {
                        all_match = false;
                        self.mismatch(location.clone(), Some(method), want.to_string(), got.to_string());
                    }
                }
                if let (true, Some(p)) = (all_match, printed) {
                    self.report
                        .corrections
                        .push(format!("{location}: reference {p}, computed {want}"));
                }
            }
            Check::Expansion { rep, kind, expected } => {
                let degree = self.degree();
                let octx = self.orbit_context(rep)?;
                let s_prime = octx.s_prime.clone();
                let (got, keying) = match kind {
                    ExpansionKind::Q => (q_element(octx), Keying::Twisted { d: octx.d.clone() }),
                    ExpansionKind::T => (t_element(octx), Keying::Conjugation),
                };
                let terms = parse_expansion(expected, degree)?;
                let count = terms.len();
                let want = CentralElement::from_terms(s_prime, keying, terms);
                self.report.evaluations += 1;
                if want != got || count != got.len() {
                    let name = match kind {
                        ExpansionKind::Q => "Q",
                        ExpansionKind::T => "T",
                    };
                    self.mismatch(
                        format!("coset {rep}, {name}(d)"),
                        Some(Method::Orbit),
                        format!("{want} ({count} terms)"),
                        format!("{got} ({} terms)", got.len()),
                    );
                }
            }
            Check::CharacterTable { classes, rows } => {
                let g = self.ctx.group().clone();
                let table = CharacterTable::compute(g.clone())?;
                let reps = classes
                    .iter()
                    .map(|c| parse_perm(c, g.degree()))
                    .collect::<Result<Vec<_>, _>>()?;
                self.report.evaluations += 1;
                let got: Vec<Vec<Cyclotomic>> = table
                    .irreducibles()
                    .iter()
                    .map(|chi| reps.iter().map(|x| chi.eval(x).cloned()).collect())
                    .collect::<Result<_, _>>()?;
                let want: Vec<Vec<Cyclotomic>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&v| Cyclotomic::from_integer(v)).collect())
                    .collect();
                if got != want {
                    let show = |t: &Vec<Vec<Cyclotomic>>| {
                        t.iter()
                            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                            .collect::<Vec<_>>()
                            .join(" / ")
                    };
                    self.mismatch("character table".into(), None, show(&want), show(&got));
                }
            }
        }
        Ok(())
    }
}

/// Runs every check of `f` under `methods`. Setup failures are errors;
/// value disagreements are reported as mismatches.
pub fn run_fixture(f: &Fixture, methods: &[Method]) -> Result<FixtureReport, IndicatorError> {
    let start = Instant::now();
    let ctx = fixture_context(f)?;
    let mut runner = Runner {
        f,
        ctx,
        methods,
        orbit: HashMap::new(),
        adjoint: HashMap::new(),
        report: FixtureReport {
            id: f.id,
            title: f.title,
            checks: 0,
            evaluations: 0,
            mismatches: Vec::new(),
            corrections: Vec::new(),
            elapsed: Duration::ZERO,
        },
    };
    for check in &f.checks {
        runner.run(check)?;
    }
    runner.report.elapsed = start.elapsed();
    Ok(runner.report)
}

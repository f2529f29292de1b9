//! Reference indicator tables for symmetric-group inclusions, the `S₄`
//! character table and two non-real examples, embedded as golden data.
//!
//! Coset representatives are the reference ones. Character indices follow
//! the canonical table order, which coincides with the reference `W_j`
//! numbering for every stabilizer used here.

use crate::cyclotomic::Cyclotomic;

/// Which subgroup of `SE` the orbit path uses for a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SPrimeSpec {
    Stabilizer,
    FullSE,
    Gens(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionKind {
    /// `Q(d)`, keyed by twisted orbits on `H`.
    Q,
    /// `T(d) = d·Q(d)`, keyed by `S′`-conjugacy.
    T,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    StabilizerOrder {
        rep: &'static str,
        order: u64,
    },
    Indicator {
        rep: &'static str,
        char_index: usize,
        m: u64,
        expected: Cyclotomic,
        /// The reference value where it differs from `expected`.
        printed: Option<Cyclotomic>,
    },
    /// `ν_m` of the character taking `value` at `element`.
    IndicatorAt {
        rep: &'static str,
        element: &'static str,
        value: Cyclotomic,
        m: u64,
        expected: Cyclotomic,
    },
    /// `μ_m(d)` (equivalently `μ̄_m(d)`), as an expansion in `S`.
    Mu {
        rep: &'static str,
        m: u64,
        expected: String,
        printed: Option<String>,
    },
    Expansion {
        rep: &'static str,
        kind: ExpansionKind,
        expected: &'static str,
    },
    /// Rows of the character table of `G` in canonical order, on the listed
    /// class representatives.
    CharacterTable {
        classes: &'static [&'static str],
        rows: Vec<Vec<i64>>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub id: &'static str,
    pub title: &'static str,
    pub group: &'static str,
    pub subgroup: &'static str,
    pub representatives: Vec<&'static str>,
    pub sprime: Vec<(&'static str, SPrimeSpec)>,
    pub checks: Vec<Check>,
}

impl Fixture {
    pub fn sprime_for(&self, rep: &str) -> SPrimeSpec {
        self.sprime
            .iter()
            .find(|(r, _)| *r == rep)
            .map(|(_, s)| s.clone())
            .unwrap_or(SPrimeSpec::FullSE)
    }
}

pub const FIXTURE_IDS: [&str; 7] = [
    "s4s2",
    "s5s3",
    "s6s4",
    "s7s5",
    "s4-table",
    "s9-nonreal",
    "c9-cyclic",
];

pub fn all() -> Vec<Fixture> {
    vec![s4s2(), s5s3(), s6s4(), s7s5(), s4_table(), s9_nonreal(), c9_cyclic()]
}

pub fn by_id(id: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.id == id)
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

fn indicator(rep: &'static str, char_index: usize, m: u64, value: i64) -> Check {
    Check::Indicator {
        rep,
        char_index,
        m,
        expected: int(value),
        printed: None,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

/// Value at `m` of a sequence listed over one period starting at `m = 1`.
fn periodic(period: &[i64], m: u64) -> i64 {
    period[((m - 1) % period.len() as u64) as usize]
}

fn lookup<T: Copy>(table: &[(u64, T)], key: u64) -> T {
    table
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .unwrap_or_else(|| panic!("fixture table has no entry for {key}"))
}

pub fn s4s2() -> Fixture {
    let reps = vec!["()", "(2 3)", "(2 4)", "(3 4)", "(2 3 4)", "(2 4 3)", "(2 3)(1 4)"];
    let stabilizers = [2, 1, 1, 2, 1, 1, 1];
    let mut checks: Vec<Check> = reps
        .iter()
        .zip(stabilizers)
        .map(|(&rep, order)| Check::StabilizerOrder { rep, order })
        .collect();
    let rows: [(&str, usize, &[i64]); 9] = [
        ("()", 0, &[1]),
        // Printed as (1, 0); ν₁ of a nontrivial irreducible is 0, so that
        // list is read from m = 2.
        ("()", 1, &[0, 1]),
        ("(2 3)", 0, &[0, 1, 1, 1, 0, 2]),
        ("(2 4)", 0, &[0, 1, 1, 1, 0, 2]),
        ("(3 4)", 0, &[0, 1]),
        ("(3 4)", 1, &[0, 1]),
        ("(2 3 4)", 0, &[0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 2]),
        ("(2 4 3)", 0, &[0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 2]),
        ("(2 3)(1 4)", 0, &[0, 1, 0, 2]),
    ];
    // Two full periods of the exponent 12.
    for (rep, j, period) in rows {
        for m in 1..=24 {
            checks.push(indicator(rep, j, m, periodic(period, m)));
        }
    }
    Fixture {
        id: "s4s2",
        title: "S2 in S4: indicator sequences",
        group: "S4",
        subgroup: "S2",
        representatives: reps,
        sprime: vec![],
        checks,
    }
}

pub fn s5s3() -> Fixture {
    let reps = vec!["()", "(3 4)", "(3 5)", "(4 5)", "(3 4 5)", "(3 5 4)", "(2 4)(3 5)"];
    let stabilizers = [6, 2, 2, 6, 2, 2, 1];
    let mut checks: Vec<Check> = reps
        .iter()
        .zip(stabilizers)
        .map(|(&rep, order)| Check::StabilizerOrder { rep, order })
        .collect();
    let d2: [(u64, i64); 6] = [(1, 0), (2, 1), (3, 1), (4, 2), (6, 2), (12, 3)];
    let d7: [(u64, i64); 12] = [
        (1, 0),
        (3, 0),
        (2, 1),
        (4, 2),
        (5, 2),
        (15, 2),
        (6, 3),
        (10, 3),
        (12, 4),
        (20, 4),
        (30, 5),
        (60, 6),
    ];
    let mu5: [(u64, &str); 12] = [
        (1, "0"),
        (2, "0"),
        (3, "1/2() + 1/2(1 2)"),
        (4, "()"),
        (5, "()"),
        (6, "()"),
        (10, "()"),
        (12, "2()"),
        (20, "2()"),
        (30, "2()"),
        (15, "3/2() + 1/2(1 2)"),
        (60, "3()"),
    ];
    let w0: [(u64, i64); 12] = [
        (1, 0),
        (2, 0),
        (3, 1),
        (4, 1),
        (5, 1),
        (6, 1),
        (10, 1),
        (12, 2),
        (15, 2),
        (20, 2),
        (30, 2),
        (60, 3),
    ];
    let w1: [(u64, i64); 12] = [
        (1, 0),
        (2, 0),
        (3, 0),
        (4, 1),
        (5, 1),
        (6, 1),
        (10, 1),
        (15, 1),
        (12, 2),
        (20, 2),
        (30, 2),
        (60, 3),
    ];
    for m in 1..=60 {
        for rep in ["(3 4)", "(3 5)"] {
            for j in 0..2 {
                checks.push(indicator(rep, j, m, lookup(&d2, gcd(m, 12))));
            }
        }
        checks.push(indicator("(2 4)(3 5)", 0, m, lookup(&d7, gcd(m, 60))));
        for rep in ["(3 4 5)", "(3 5 4)"] {
            checks.push(Check::Mu {
                rep,
                m,
                expected: lookup(&mu5, gcd(m, 60)).to_string(),
                printed: None,
            });
            checks.push(indicator(rep, 0, m, lookup(&w0, gcd(m, 60))));
            checks.push(indicator(rep, 1, m, lookup(&w1, gcd(m, 60))));
        }
    }
    Fixture {
        id: "s5s3",
        title: "S3 in S5: gcd-indexed indicator tables",
        group: "S5",
        subgroup: "S3",
        representatives: reps,
        sprime: vec![],
        checks,
    }
}

const M_60: [u64; 11] = [2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60];

pub fn s6s4() -> Fixture {
    let reps = vec!["(4 5)", "(4 5 6)", "(3 5)(4 6)"];
    let mut checks = vec![
        Check::StabilizerOrder { rep: "(4 5)", order: 6 },
        Check::StabilizerOrder { rep: "(4 5 6)", order: 6 },
        Check::StabilizerOrder { rep: "(3 5)(4 6)", order: 2 },
    ];
    let table: [(&str, usize, [i64; 11]); 8] = [
        ("(4 5)", 0, [1, 1, 2, 1, 2, 2, 3, 2, 3, 3, 4]),
        ("(4 5)", 1, [1, 0, 2, 1, 2, 2, 3, 1, 3, 3, 4]),
        ("(4 5)", 2, [1, 1, 3, 2, 4, 3, 6, 3, 5, 6, 8]),
        ("(4 5 6)", 0, [0, 1, 1, 1, 2, 1, 3, 2, 2, 3, 4]),
        ("(4 5 6)", 1, [0, 0, 1, 1, 2, 1, 3, 1, 2, 3, 4]),
        ("(4 5 6)", 2, [0, 1, 2, 2, 4, 2, 6, 3, 4, 6, 8]),
        ("(3 5)(4 6)", 0, [1, 1, 4, 2, 7, 3, 10, 3, 6, 9, 12]),
        ("(3 5)(4 6)", 1, [1, 1, 4, 2, 7, 3, 10, 3, 6, 9, 12]),
    ];
    for (rep, j, values) in table {
        for (m, v) in M_60.iter().zip(values) {
            checks.push(indicator(rep, j, *m, v));
        }
    }
    let mu_45 = [
        "2/3 + 1/3(123)",
        "1/2 + 1/2(12)",
        "5/3 + 1/3(123)",
        "1",
        "2",
        "5/3 + 1/3(123)",
        "3",
        "3/2 + 1/2(12)",
        "8/3 + 1/3(123)",
        "3",
        "4",
    ];
    let mu_456 = [
        "0",
        "1/2 + 1/2(12)",
        "1",
        "1",
        "2",
        "1",
        "3",
        "3/2 + 1/2(12)",
        "2",
        "3",
        "4",
    ];
    let mu_3546 = ["1", "1", "4", "2", "7", "3", "10", "3", "6", "9", "12"];
    for (rep, list) in [("(4 5)", mu_45), ("(4 5 6)", mu_456), ("(3 5)(4 6)", mu_3546)] {
        for (m, e) in M_60.iter().zip(list) {
            checks.push(Check::Mu {
                rep,
                m: *m,
                expected: e.to_string(),
                printed: None,
            });
        }
    }
    let q_s3 = "() + 3(12) + 3(14) + 2(123) + 6(124) + 3(12)(34) + 6(1234)";
    checks.extend([
        Check::Expansion { rep: "(4 5)", kind: ExpansionKind::Q, expected: q_s3 },
        Check::Expansion { rep: "(4 5 6)", kind: ExpansionKind::Q, expected: q_s3 },
        Check::Expansion {
            rep: "(4 5)",
            kind: ExpansionKind::T,
            expected: "(45) + 3(12)(45) + 3(154) + 2(123)(45) + 6(1254) + 3(12)(354) + 6(12354)",
        },
        Check::Expansion {
            rep: "(4 5 6)",
            kind: ExpansionKind::T,
            expected: "(456) + 3(12)(456) + 3(1564) + 2(123)(456) + 6(12564) + 3(12)(3564) \
                       + 6(123564)",
        },
        Check::Expansion {
            rep: "(3 5)(4 6)",
            kind: ExpansionKind::Q,
            expected: "() + (12) + 2(13) + 2(14) + (34) + 2(123) + 2(124) + 2(134) + 2(143) \
                       + (12)(34) + 2(13)(24) + 2(1234) + 2(1243) + 2(1324)",
        },
        Check::Expansion {
            rep: "(3 5)(4 6)",
            kind: ExpansionKind::T,
            expected: "(35)(46) + (12)(35)(46) + 2(153)(46) + 2(164)(35) + (3645) \
                       + 2(1253)(46) + 2(1264)(35) + 2(15364) + 2(16453) + (12)(3645) \
                       + 2(153)(264) + 2(125364) + 2(126453) + 2(153264)",
        },
    ]);
    Fixture {
        id: "s6s4",
        title: "S4 in S6: orbit sums and the indicator table",
        group: "S6",
        subgroup: "S4",
        representatives: reps,
        sprime: vec![
            ("(4 5)", SPrimeSpec::Stabilizer),
            ("(4 5 6)", SPrimeSpec::Stabilizer),
            ("(3 5)(4 6)", SPrimeSpec::Stabilizer),
        ],
        checks,
    }
}

/// `m`, `μ̄_m((46)(57))`, `ν_m` on `W₀, W₁, W₂`.
const FIG_4657: [(u64, &str, [i64; 3]); 23] = [
    (2, "2/3 + 1/3(123)", [1, 1, 1]),
    (3, "1", [1, 1, 2]),
    (4, "10/3 + 2/3(123)", [4, 4, 6]),
    (5, "1 + (12)", [2, 0, 2]),
    (6, "7", [7, 7, 14]),
    (7, "4", [4, 4, 8]),
    (10, "14/3 + 1/3(123)", [5, 5, 9]),
    (12, "12", [12, 12, 24]),
    (14, "14/3 + 1/3(123)", [5, 5, 9]),
    (15, "2 + (12)", [3, 1, 4]),
    (20, "22/3 + 2/3(123)", [8, 8, 14]),
    (21, "5", [5, 5, 10]),
    (28, "22/3 + 2/3(123)", [8, 8, 14]),
    (30, "11", [11, 11, 22]),
    (35, "5 + (12)", [6, 4, 10]),
    (42, "11", [11, 11, 22]),
    (60, "16", [16, 16, 32]),
    (70, "26/3 + 1/3(123)", [9, 9, 17]),
    (84, "16", [16, 16, 32]),
    (105, "6 + (12)", [7, 5, 12]),
    (140, "34/3 + 2/3(123)", [12, 12, 22]),
    (210, "15", [15, 15, 30]),
    (420, "20", [20, 20, 40]),
];

/// `m`, `μ̄_m((56))`, `μ̄_m((567))`.
const FIG_MUBARS: [(u64, &str, &str); 22] = [
    (2, "5/12 + 1/3(123) + 1/4(12)(34)", "0"),
    (3, "1/2 + 1/2(12)", "3/8 + 1/4(12) + 1/8(12)(34) + 1/4(1234)"),
    (4, "5/3 + 1/3(123)", "2/3 + 1/3(123)"),
    (5, "1", "1/2 + 1/2(12)"),
    (6, "11/4 + 1/4(12)(34)", "7/4 + 1/4(12)(34)"),
    (7, "0", "1"),
    (10, "17/12 + 1/3(123) + 1/4(12)(34)", "1"),
    (12, "4", "3"),
    (14, "5/12 + 1/3(123) + 1/4(12)(34)", "1"),
    (15, "3/2 + 1/2(12)", "7/8 + 3/4(12) + 1/8(12)(34) + 1/4(1234)"),
    (20, "8/3 + 1/3(123)", "5/3 + 1/3(123)"),
    (21, "1/2 + 1/2(12)", "11/8 + 1/4(12) + 1/8(12)(34) + 1/4(1234)"),
    (28, "5/3 + 1/3(123)", "5/3 + 1/3(123)"),
    (30, "15/4 + 1/4(12)(34)", "11/4 + 1/4(12)(34)"),
    (35, "1", "3/2 + 1/2(12)"),
    (42, "11/4 + 1/4(12)(34)", "11/4 + 1/4(12)(34)"),
    (60, "5", "4"),
    (70, "17/12 + 1/3(123) + 1/4(12)(34)", "2"),
    (84, "4", "4"),
    (105, "3/2 + 1/2(12)", "15/8 + 3/4(12) + 1/8(12)(34) + 1/4(1234)"),
    (210, "15/4 + 1/4(12)(34)", "15/4 + 1/4(12)(34)"),
    (420, "5", "5"),
];

/// The printed `μ̄₂((56))`, whose coefficients do not sum to `ν₂` on the
/// trivial character.
pub const PRINTED_MU2_56: &str = "5/14 + 2/7(123) + 3/14(12)(34)";

/// `m`, `ν_m` on `W₀..W₄` for `(56)` and for `(567)`.
const FIG_56567: [(u64, [i64; 5], [i64; 5]); 22] = [
    (2, [1, 1, 1, 1, 1], [0, 0, 0, 0, 0]),
    (3, [1, 0, 1, 2, 1], [1, 0, 1, 1, 1]),
    (4, [2, 2, 3, 5, 5], [1, 1, 1, 2, 2]),
    (5, [1, 1, 2, 3, 3], [1, 0, 1, 2, 1]),
    (6, [3, 3, 6, 8, 8], [2, 2, 4, 5, 5]),
    (7, [0, 0, 0, 0, 0], [1, 1, 2, 3, 3]),
    (10, [2, 2, 3, 4, 4], [1, 1, 2, 3, 3]),
    (12, [4, 4, 8, 12, 12], [3, 3, 6, 9, 9]),
    (14, [1, 1, 1, 1, 1], [1, 1, 2, 3, 3]),
    (15, [2, 1, 3, 5, 4], [2, 0, 2, 3, 2]),
    (20, [3, 3, 5, 8, 8], [2, 2, 3, 5, 5]),
    (21, [1, 0, 1, 2, 1], [2, 1, 3, 4, 4]),
    (28, [2, 2, 3, 5, 5], [2, 2, 3, 5, 5]),
    (30, [4, 4, 8, 11, 11], [3, 3, 6, 8, 8]),
    (35, [1, 1, 2, 3, 3], [2, 1, 3, 5, 4]),
    (42, [3, 3, 6, 8, 8], [3, 3, 6, 8, 8]),
    (60, [5, 5, 10, 15, 15], [4, 4, 8, 12, 12]),
    (70, [2, 2, 3, 4, 4], [2, 2, 4, 6, 6]),
    (84, [4, 4, 8, 12, 12], [4, 4, 8, 12, 12]),
    (105, [2, 1, 3, 5, 4], [3, 1, 4, 6, 5]),
    (210, [4, 4, 8, 11, 11], [4, 4, 8, 11, 11]),
    (420, [5, 5, 10, 15, 15], [5, 5, 10, 15, 15]),
];

/// The printed `ν₆₀` of `(56)` on `W₄`.
pub const PRINTED_NU60_56_W4: i64 = 14;

pub fn s7s5() -> Fixture {
    let reps = vec!["(4 6)(5 7)", "(5 6)", "(5 6 7)"];
    let mut checks = vec![
        Check::StabilizerOrder { rep: "(4 6)(5 7)", order: 6 },
        Check::StabilizerOrder { rep: "(5 6)", order: 24 },
        Check::StabilizerOrder { rep: "(5 6 7)", order: 24 },
    ];
    for (m, mu, w) in FIG_4657 {
        checks.push(Check::Mu {
            rep: "(4 6)(5 7)",
            m,
            expected: mu.to_string(),
            printed: None,
        });
        for (j, v) in w.into_iter().enumerate() {
            checks.push(indicator("(4 6)(5 7)", j, m, v));
        }
    }
    for (m, mu56, mu567) in FIG_MUBARS {
        checks.push(Check::Mu {
            rep: "(5 6)",
            m,
            expected: mu56.to_string(),
            printed: (m == 2).then(|| PRINTED_MU2_56.to_string()),
        });
        checks.push(Check::Mu {
            rep: "(5 6 7)",
            m,
            expected: mu567.to_string(),
            printed: None,
        });
    }
    for (m, w56, w567) in FIG_56567 {
        for (j, v) in w56.into_iter().enumerate() {
            checks.push(Check::Indicator {
                rep: "(5 6)",
                char_index: j,
                m,
                expected: int(v),
                printed: (m == 60 && j == 4).then(|| int(PRINTED_NU60_56_W4)),
            });
        }
        for (j, v) in w567.into_iter().enumerate() {
            checks.push(indicator("(5 6 7)", j, m, v));
        }
    }
    let q_s4 = "() + 6(12) + 4(15) + 8(123) + 12(125) + 3(12)(34) + 12(12)(35) + 6(1234) \
                + 24(1235) + 8(123)(45) + 12(125)(34) + 24(12345)";
    checks.extend([
        Check::Expansion {
            rep: "(4 6)(5 7)",
            kind: ExpansionKind::Q,
            expected: "() + 3(12) + 6(14) + (45) + 2(123) + 12(124) + 6(145) + 6(12)(34) \
                       + 3(12)(45) + 6(14)(25) + 12(1234) + 12(1245) + 6(1425) + 6(12)(345) \
                       + 12(14)(235) + 2(45)(123) + 12(12345) + 12(12435)",
        },
        Check::Expansion {
            rep: "(4 6)(5 7)",
            kind: ExpansionKind::T,
            expected: "(46)(57) + 3(12)(46)(57) + 6(164)(57) + (4756) + 2(123)(46)(57) \
                       + 12(1264)(57) + 6(16475) + 6(12)(364)(57) + 3(12)(4756) + 6(164)(275) \
                       + 12(12364)(57) + 12(126475) + 6(164275) + 6(12)(36475) \
                       + 12(164)(2375) + 2(4756)(123) + 12(1236475) + 12(1264375)",
        },
        Check::Expansion { rep: "(5 6)", kind: ExpansionKind::Q, expected: q_s4 },
        Check::Expansion { rep: "(5 6 7)", kind: ExpansionKind::Q, expected: q_s4 },
        Check::Expansion {
            rep: "(5 6)",
            kind: ExpansionKind::T,
            expected: "(56) + 6(12)(56) + 4(165) + 8(123)(56) + 12(1265) + 3(12)(34)(56) \
                       + 12(12)(365) + 6(1234)(56) + 24(12365) + 8(123)(465) + 12(1265)(34) \
                       + 24(123465)",
        },
        Check::Expansion {
            rep: "(5 6 7)",
            kind: ExpansionKind::T,
            expected: "(567) + 6(12)(567) + 4(1675) + 8(123)(567) + 12(12675) \
                       + 3(12)(34)(567) + 12(12)(3675) + 6(1234)(567) + 24(123675) \
                       + 8(123)(4675) + 12(12675)(34) + 24(1234675)",
        },
    ]);
    Fixture {
        id: "s7s5",
        title: "S5 in S7: orbit sums, mu-bar elements and indicators over the divisors of 420",
        group: "S7",
        subgroup: "S5",
        representatives: reps,
        sprime: vec![
            ("(4 6)(5 7)", SPrimeSpec::Gens(&["(1 2)", "(1 2 3)", "(4 5)(6 7)"])),
            ("(5 6)", SPrimeSpec::Stabilizer),
            ("(5 6 7)", SPrimeSpec::Stabilizer),
        ],
        checks,
    }
}

pub fn s4_table() -> Fixture {
    Fixture {
        id: "s4-table",
        title: "character table of S4",
        group: "S4",
        subgroup: "S4",
        representatives: vec![],
        sprime: vec![],
        checks: vec![Check::CharacterTable {
            classes: &["()", "(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)"],
            rows: vec![
                vec![1, 1, 1, 1, 1],
                vec![1, -1, 1, 1, -1],
                vec![2, 0, -1, 2, 0],
                vec![3, 1, 0, -1, -1],
                vec![3, -1, 0, -1, 1],
            ],
        }],
    }
}

pub fn s9_nonreal() -> Fixture {
    let zeta = Cyclotomic::root_of_unity(3, 1);
    let t = "(1 2 3)(4 5 6)(7 8 9)";
    Fixture {
        id: "s9-nonreal",
        title: "S3 preserving congruence mod 3 in S9: a non-real indicator",
        group: "S9",
        subgroup: "gens[9]: (1 2 3)(4 5 6)(7 8 9); (1 2)(4 5)(7 8)",
        representatives: vec!["(1 4 7 2 5 8 3 6 9)"],
        sprime: vec![],
        checks: vec![
            Check::StabilizerOrder { rep: "(1 4 7 2 5 8 3 6 9)", order: 3 },
            Check::Mu {
                rep: "(1 4 7 2 5 8 3 6 9)",
                m: 3,
                expected: t.to_string(),
                printed: None,
            },
            Check::IndicatorAt {
                rep: "(1 4 7 2 5 8 3 6 9)",
                element: t,
                value: zeta.clone(),
                m: 3,
                expected: zeta.conj(),
            },
            Check::IndicatorAt {
                rep: "(1 4 7 2 5 8 3 6 9)",
                element: t,
                value: zeta.conj(),
                m: 3,
                expected: zeta,
            },
        ],
    }
}

pub fn c9_cyclic() -> Fixture {
    let zeta = Cyclotomic::root_of_unity(3, 1);
    let c = "(1 2 3 4 5 6 7 8 9)";
    let c3 = "(1 4 7)(2 5 8)(3 6 9)";
    Fixture {
        id: "c9-cyclic",
        title: "C3 in C9 with the generator as representative",
        group: "C9",
        subgroup: "gens[9]: (1 4 7)(2 5 8)(3 6 9)",
        representatives: vec![c],
        sprime: vec![],
        checks: vec![
            Check::StabilizerOrder { rep: c, order: 3 },
            Check::Mu { rep: c, m: 3, expected: c3.to_string(), printed: None },
            Check::IndicatorAt {
                rep: c,
                element: c3,
                value: zeta.clone(),
                m: 3,
                expected: zeta.conj(),
            },
            Check::IndicatorAt {
                rep: c,
                element: c3,
                value: zeta.conj(),
                m: 3,
                expected: zeta,
            },
        ],
    }
}

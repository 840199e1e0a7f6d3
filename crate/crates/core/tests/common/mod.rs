//! Published tables transcribed cell for cell, their computed
//! counterparts, and the list of cells where the two disagree because the
//! printed value is wrong.

#![allow(dead_code)]

use symtrap_core::branching::{
    branch_multiplicity, component_degeneracy_cached, cumulative_shell_degeneracy, spin_decomposition, table_patterns,
    ComponentPattern,
};
use symtrap_core::character::character_table_snz2;
use symtrap_core::oscillator::LambdaReductions;
use symtrap_core::partition::partitions_of;
use symtrap_core::snippet::{sector_rep_characters, snippet_reduction};
use symtrap_core::Parity;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: &'static str,
    pub rows: Vec<(String, Vec<i64>)>,
}

fn table(name: &'static str, rows: &[(&str, &[i64])]) -> Table {
    Table { name, rows: rows.iter().map(|(l, v)| (l.to_string(), v.to_vec())).collect() }
}

fn numbered(name: &'static str, rows: &[&[i64]]) -> Table {
    Table { name, rows: rows.iter().enumerate().map(|(i, v)| (i.to_string(), v.to_vec())).collect() }
}

/// A printed cell that contradicts the identities the table must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Misprint {
    pub table: &'static str,
    pub row: &'static str,
    pub column: usize,
    pub printed: i64,
    pub correct: i64,
    pub why: &'static str,
}

pub const MISPRINTS: &[Misprint] = &[
    Misprint {
        table: "S4 branching",
        row: "(211)_B",
        column: 2,
        printed: 2,
        correct: 1,
        why: "sum of mult x dim is 14, not 4!/2! = 12",
    },
    Misprint {
        table: "S4 branching",
        row: "(211)_F",
        column: 2,
        printed: 2,
        correct: 1,
        why: "sum of mult x dim is 14, not 12; breaks Bose/Fermi duality with (211)_B",
    },
    Misprint {
        table: "S5 branching",
        row: "(311)_F",
        column: 4,
        printed: 2,
        correct: 1,
        why: "sum of mult x dim is 21, not 5!/3! = 20; breaks duality with (311)_B",
    },
    Misprint {
        table: "S5 branching",
        row: "(311)_F",
        column: 5,
        printed: 1,
        correct: 2,
        why: "same row; duality with (311)_B requires [21^3] = 2",
    },
    Misprint {
        table: "N=4 lambda reduction",
        row: "9",
        column: 3,
        printed: 3,
        correct: 2,
        why: "row sums to 22 dimensions, not 2*9+1 = 19",
    },
    Misprint {
        table: "N=4 degeneracies",
        row: "(31)_F",
        column: 7,
        printed: 3,
        correct: 2,
        why: "printed lambda row and (31)_F branching row give 2",
    },
    Misprint {
        table: "N=4 degeneracies",
        row: "(31)_F",
        column: 8,
        printed: 3,
        correct: 2,
        why: "printed lambda row and (31)_F branching row give 2",
    },
    Misprint {
        table: "S4xZ2 characters",
        row: "[4]-",
        column: 5,
        printed: 1,
        correct: -1,
        why: "row equals [4]+, violating row orthogonality",
    },
    Misprint {
        table: "S4xZ2 characters",
        row: "[4]-",
        column: 6,
        printed: 1,
        correct: -1,
        why: "row equals [4]+, violating row orthogonality",
    },
    Misprint {
        table: "S4xZ2 characters",
        row: "[4]-",
        column: 7,
        printed: 1,
        correct: -1,
        why: "row equals [4]+, violating row orthogonality",
    },
    Misprint {
        table: "S4xZ2 characters",
        row: "[4]-",
        column: 8,
        printed: 1,
        correct: -1,
        why: "row equals [4]+, violating row orthogonality",
    },
    Misprint {
        table: "S4xZ2 characters",
        row: "[4]-",
        column: 9,
        printed: 1,
        correct: -1,
        why: "row equals [4]+, violating row orthogonality",
    },
];

/// Misprinted labels and headers, which carry no cell values.
pub const LABEL_MISPRINTS: &[&str] = &[
    "S5 branching: column header [3^2] should read [32], and [1^4] should read [1^5]",
    "S5 branching: (311)_B and (311)_F have 3 components, printed as 2",
    "S4xZ2 characters: the last row is labelled [1^4]+ but its values are those of [1^4]-",
    "S4xZ2 characters: the inverted class headers are printed in reverse; values follow i[1^4], i[21^2], ..., i[4]",
    "spin table: the total row reads 3 D^2 for 3 D^1, and the caption writes [2] for [2^2]",
];

pub fn printed_tables() -> Vec<Table> {
    vec![
        table(
            "S3 branching",
            &[
                ("(3)_B", &[1, 0, 0]),
                ("(21)_B", &[1, 1, 0]),
                ("(3)_F", &[0, 0, 1]),
                ("(21)_F", &[0, 1, 1]),
                ("(111)", &[1, 2, 1]),
            ],
        ),
        table(
            "S4 branching",
            &[
                ("(4)_B", &[1, 0, 0, 0, 0]),
                ("(31)_B", &[1, 1, 0, 0, 0]),
                ("(22)_B", &[1, 1, 1, 0, 0]),
                ("(211)_B", &[1, 2, 2, 1, 0]),
                ("(4)_F", &[0, 0, 0, 0, 1]),
                ("(31)_F", &[0, 0, 0, 1, 1]),
                ("(22)_F", &[0, 0, 1, 1, 1]),
                ("(211)_F", &[0, 1, 2, 2, 1]),
                ("(1111)", &[1, 3, 2, 3, 1]),
            ],
        ),
        table(
            "S5 branching",
            &[
                ("(5)_B", &[1, 0, 0, 0, 0, 0, 0]),
                ("(41)_B", &[1, 1, 0, 0, 0, 0, 0]),
                ("(32)_B", &[1, 1, 1, 0, 0, 0, 0]),
                ("(311)_B", &[1, 2, 1, 1, 0, 0, 0]),
                ("(221)_B", &[1, 2, 2, 1, 1, 0, 0]),
                ("(2111)_B", &[1, 3, 3, 3, 2, 1, 0]),
                ("(5)_F", &[0, 0, 0, 0, 0, 0, 1]),
                ("(41)_F", &[0, 0, 0, 0, 0, 1, 1]),
                ("(32)_F", &[0, 0, 0, 0, 1, 1, 1]),
                ("(311)_F", &[0, 0, 0, 1, 2, 1, 1]),
                ("(221)_F", &[0, 0, 1, 1, 2, 2, 1]),
                ("(2111)_F", &[0, 1, 2, 3, 3, 3, 1]),
                ("(11111)", &[1, 4, 5, 6, 5, 4, 1]),
            ],
        ),
        numbered("N=3 lambda reduction", &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[1, 0, 1]]),
        numbered(
            "N=4 lambda reduction",
            &[
                &[1, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0],
                &[0, 1, 1, 0, 0],
                &[1, 1, 0, 1, 0],
                &[1, 1, 1, 1, 0],
                &[0, 2, 1, 1, 0],
                &[1, 2, 1, 1, 1],
                &[1, 2, 1, 2, 0],
                &[1, 2, 2, 2, 0],
                &[1, 3, 1, 3, 1],
                &[1, 3, 2, 2, 1],
                &[1, 3, 2, 3, 0],
                &[2, 3, 2, 3, 1],
                &[1, 4, 2, 3, 1],
            ],
        ),
        numbered(
            "N=5 lambda reduction",
            &[
                &[1, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0],
                &[0, 1, 1, 0, 0, 0, 0],
                &[1, 1, 1, 1, 0, 0, 0],
                &[1, 2, 1, 1, 1, 0, 0],
                &[1, 2, 2, 2, 1, 0, 0],
                &[1, 3, 3, 2, 1, 1, 0],
                &[1, 4, 3, 3, 2, 1, 0],
                &[2, 4, 4, 4, 3, 1, 0],
                &[2, 5, 5, 5, 3, 2, 0],
                &[2, 6, 6, 6, 4, 2, 1],
                &[2, 7, 7, 7, 5, 3, 0],
                &[3, 8, 8, 8, 6, 4, 0],
                &[3, 9, 9, 10, 7, 4, 1],
            ],
        ),
        table(
            "N=3 degeneracies",
            &[
                ("(3)_B", &[1, 0, 0, 1, 0, 0, 1]),
                ("(21)_B", &[1, 1, 1, 1, 1, 1, 1]),
                ("(3)_F", &[0, 0, 0, 1, 0, 0, 1]),
                ("(21)_F", &[0, 1, 1, 1, 1, 1, 1]),
                ("(111)", &[1, 2, 2, 2, 2, 2, 2]),
            ],
        ),
        table(
            "N=3 shell degeneracies",
            &[
                ("(3)_B", &[1, 1, 2, 3, 4, 5, 7]),
                ("(21)_B", &[1, 2, 4, 6, 9, 12, 16]),
                ("(3)_F", &[0, 0, 0, 1, 1, 2, 3]),
                ("(21)_F", &[0, 1, 2, 4, 6, 9, 12]),
                ("(111)", &[1, 3, 6, 10, 15, 21, 28]),
            ],
        ),
        table(
            "N=4 degeneracies",
            &[
                ("(4)_B", &[1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2]),
                ("(31)_B", &[1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5]),
                ("(22)_B", &[1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7]),
                ("(211)_B", &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13]),
                ("(4)_F", &[0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1]),
                ("(31)_F", &[0, 0, 0, 1, 1, 1, 2, 3, 3, 3, 3, 3, 4]),
                ("(22)_F", &[0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6]),
                ("(211)_F", &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
                ("(1111)", &[1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25]),
            ],
        ),
        table(
            "N=5 degeneracies",
            &[
                ("(5)_B", &[1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2]),
                ("(41)_B", &[1, 1, 1, 2, 3, 3, 4, 5, 6, 7, 8]),
                ("(32)_B", &[1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14]),
                ("(311)_B", &[1, 2, 3, 5, 7, 9, 12, 15, 18, 22, 26]),
                ("(221)_B", &[1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]),
                ("(2111)_B", &[1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66]),
                ("(5)_F", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
                ("(41)_F", &[0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3]),
                ("(32)_F", &[0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7]),
                ("(311)_F", &[0, 0, 0, 1, 2, 3, 5, 7, 9, 12, 15]),
                ("(221)_F", &[0, 0, 1, 2, 4, 6, 9, 12, 16, 20, 25]),
                ("(2111)_F", &[0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55]),
                ("(11111)", &[1, 4, 9, 16, 25, 36, 49, 64, 81, 100, 121]),
            ],
        ),
        table(
            "N=3 snippet",
            &[
                ("[3]+", &[0, 1]),
                ("[21]+", &[1, 1]),
                ("[1^3]+", &[1, 0]),
                ("[3]-", &[1, 0]),
                ("[21]-", &[1, 1]),
                ("[1^3]-", &[0, 1]),
            ],
        ),
        table(
            "N=4 snippet",
            &[
                ("[4]+", &[1, 0]),
                ("[31]+", &[1, 2]),
                ("[2^2]+", &[2, 0]),
                ("[21^2]+", &[1, 2]),
                ("[1^4]+", &[1, 0]),
                ("[4]-", &[0, 1]),
                ("[31]-", &[2, 1]),
                ("[2^2]-", &[0, 2]),
                ("[21^2]-", &[2, 1]),
                ("[1^4]-", &[0, 1]),
            ],
        ),
        table(
            "N=5 snippet",
            &[
                ("[5]+", &[1, 0]),
                ("[41]+", &[2, 2]),
                ("[32]+", &[3, 2]),
                ("[31^2]+", &[2, 4]),
                ("[2^21]+", &[3, 2]),
                ("[21^3]+", &[2, 2]),
                ("[1^5]+", &[1, 0]),
                ("[5]-", &[0, 1]),
                ("[41]-", &[2, 2]),
                ("[32]-", &[2, 3]),
                ("[31^2]-", &[4, 2]),
                ("[2^21]-", &[2, 3]),
                ("[21^3]-", &[2, 2]),
                ("[1^5]-", &[0, 1]),
            ],
        ),
        table(
            "S3xZ2 characters",
            &[
                ("[3]+", &[1, 1, 1, 1, 1, 1]),
                ("[21]+", &[2, 0, -1, 2, 0, -1]),
                ("[1^3]+", &[1, -1, 1, 1, -1, 1]),
                ("[3]-", &[1, 1, 1, -1, -1, -1]),
                ("[21]-", &[2, 0, -1, -2, 0, 1]),
                ("[1^3]-", &[1, -1, 1, -1, 1, -1]),
                ("even", &[6, 0, 0, 0, -2, 0]),
                ("odd", &[6, 0, 0, 0, 2, 0]),
            ],
        ),
        table(
            "S4xZ2 characters",
            &[
                ("[4]+", &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
                ("[31]+", &[3, 1, -1, 0, -1, 3, 1, -1, 0, -1]),
                ("[2^2]+", &[2, 0, 2, -1, 0, 2, 0, 2, -1, 0]),
                ("[21^2]+", &[3, -1, -1, 0, 1, 3, -1, -1, 0, 1]),
                ("[1^4]+", &[1, -1, 1, 1, -1, 1, -1, 1, 1, -1]),
                ("[4]-", &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
                ("[31]-", &[3, 1, -1, 0, -1, -3, -1, 1, 0, 1]),
                ("[2^2]-", &[2, 0, 2, -1, 0, -2, 0, -2, 1, 0]),
                ("[21^2]-", &[3, -1, -1, 0, 1, -3, 1, 1, 0, -1]),
                // printed with the label [1^4]+
                ("[1^4]-", &[1, -1, 1, 1, -1, -1, 1, -1, -1, 1]),
                ("even", &[24, 0, 0, 0, 0, 0, 0, 8, 0, 0]),
                ("odd", &[24, 0, 0, 0, 0, 0, 0, -8, 0, 0]),
            ],
        ),
        table("N=4 spin-1/2", &[("2", &[5, 3, 1, 0, 0])]),
    ]
}

fn with_distinguishable(n: usize) -> Vec<ComponentPattern> {
    let mut all = table_patterns(n).unwrap();
    all.push(ComponentPattern::distinguishable(n));
    all
}

fn branching(n: usize) -> Vec<(String, Vec<i64>)> {
    let shapes = partitions_of(n).unwrap();
    with_distinguishable(n)
        .iter()
        .map(|pat| (pat.to_string(), shapes.iter().map(|p| branch_multiplicity(p, pat).unwrap() as i64).collect()))
        .collect()
}

fn lambda_rows(n: usize, top: u32) -> Vec<(String, Vec<i64>)> {
    let mut cache = LambdaReductions::new(n).unwrap();
    (0..=top).map(|l| (l.to_string(), cache.get(l).unwrap().counts().iter().map(|&c| c as i64).collect())).collect()
}

fn degeneracies(n: usize, top: u32) -> Vec<(String, Vec<i64>)> {
    let mut cache = LambdaReductions::new(n).unwrap();
    with_distinguishable(n)
        .iter()
        .map(|pat| {
            let row = (0..=top).map(|l| component_degeneracy_cached(&mut cache, l, pat).unwrap() as i64).collect();
            (pat.to_string(), row)
        })
        .collect()
}

fn snippet_rows(n: usize) -> Vec<(String, Vec<i64>)> {
    let even = snippet_reduction(n, Parity::Plus).unwrap();
    let odd = snippet_reduction(n, Parity::Minus).unwrap();
    let mut rows = Vec::new();
    for pi in [Parity::Plus, Parity::Minus] {
        for p in partitions_of(n).unwrap() {
            rows.push((format!("{p}{pi}"), vec![even.get(&p, pi) as i64, odd.get(&p, pi) as i64]));
        }
    }
    rows
}

fn character_rows(n: usize) -> Vec<(String, Vec<i64>)> {
    let t = character_table_snz2(n).unwrap();
    let mut rows: Vec<(String, Vec<i64>)> =
        t.irreps().iter().enumerate().map(|(i, irrep)| (irrep.to_string(), t.row(i).to_vec())).collect();
    for (name, lp) in [("even", Parity::Plus), ("odd", Parity::Minus)] {
        rows.push((name.to_string(), sector_rep_characters(n, lp).unwrap().values));
    }
    rows
}

/// The computed table with the same name, shape and row labels.
pub fn computed(name: &str) -> Table {
    let name = printed_tables().into_iter().find(|t| t.name == name).expect("known table").name;
    let rows = match name {
        "S3 branching" => branching(3),
        "S4 branching" => branching(4),
        "S5 branching" => branching(5),
        "N=3 lambda reduction" => lambda_rows(3, 3),
        "N=4 lambda reduction" => lambda_rows(4, 13),
        "N=5 lambda reduction" => lambda_rows(5, 13),
        "N=3 degeneracies" => degeneracies(3, 6),
        "N=3 shell degeneracies" => with_distinguishable(3)
            .iter()
            .map(|pat| {
                (pat.to_string(), (0..=6).map(|x| cumulative_shell_degeneracy(3, x, pat).unwrap() as i64).collect())
            })
            .collect(),
        "N=4 degeneracies" => degeneracies(4, 12),
        "N=5 degeneracies" => degeneracies(5, 10),
        "N=3 snippet" => snippet_rows(3),
        "N=4 snippet" => snippet_rows(4),
        "N=5 snippet" => snippet_rows(5),
        "S3xZ2 characters" => character_rows(3),
        "S4xZ2 characters" => character_rows(4),
        "N=4 spin-1/2" => {
            vec![("2".to_string(), spin_decomposition(4, 2).unwrap().counts().iter().map(|&c| c as i64).collect())]
        }
        _ => unreachable!(),
    };
    Table { name, rows }
}

/// Cells where `printed` and `computed` differ, as `(row, column, printed,
/// computed)`. Panics if the shapes or row labels differ.
pub fn differences(printed: &Table, computed: &Table) -> Vec<(String, usize, i64, i64)> {
    assert_eq!(printed.rows.len(), computed.rows.len(), "{}: row count", printed.name);
    let mut out = Vec::new();
    for ((pl, pv), (cl, cv)) in printed.rows.iter().zip(&computed.rows) {
        assert_eq!(pl, cl, "{}: row labels", printed.name);
        assert_eq!(pv.len(), cv.len(), "{}: width of row {pl}", printed.name);
        for (j, (&a, &b)) in pv.iter().zip(cv).enumerate() {
            if a != b {
                out.push((pl.clone(), j, a, b));
            }
        }
    }
    out
}

/// The documented misprints of one table, in the same form as
/// [`differences`].
pub fn expected_differences(name: &str) -> Vec<(String, usize, i64, i64)> {
    MISPRINTS.iter().filter(|m| m.table == name).map(|m| (m.row.to_string(), m.column, m.printed, m.correct)).collect()
}

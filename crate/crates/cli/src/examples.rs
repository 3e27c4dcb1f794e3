//! The three worked examples, run end to end through parse, compute and format.

use biquat::oracle::{term_table, TermTable};
use biquat::{decompose, Biquaternion};

use crate::split::{split_parts, Split};
use crate::wire::{format_biquaternion, parse_biquaternion};

/// Tolerance for every check in [`verify_examples`].
pub const EXAMPLE_TOLERANCE: f64 = 1e-12;

/// `√2 i + j I`
pub const EXAMPLE_ONE: &str = "0 1.4142135623730951 0 0 0 0 1 0";
/// `(i + j + k) + (j − k) I`
pub const EXAMPLE_TWO: &str = "0 1 1 1 0 0 1 -1";
/// `3ν + 2√2 μ I` with `μ = (i + j + k)/√3`, `ν = (j − k)/√2`
pub const EXAMPLE_THREE: &str =
    "0 0 2.1213203435596424 -2.1213203435596424 0 1.6329931618554521 1.6329931618554521 1.6329931618554521";

/// Expected product table for the second example over the parts `i, j, k, jI, −kI`.
pub const EXAMPLE_TWO_TABLE: [[&str; 5]; 5] = [
    ["-1", "k", "-j", "kI", "jI"],
    ["-k", "-1", "i", "-I", "-iI"],
    ["j", "-i", "-1", "-iI", "I"],
    ["-kI", "-I", "iI", "1", "i"],
    ["-jI", "iI", "I", "-i", "1"],
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleReport {
    pub number: usize,
    pub label: &'static str,
    pub passed: bool,
    /// Largest coefficient deviation of the formatted, re-parsed square from −1.
    pub deviation: f64,
    pub notes: Vec<String>,
}

/// Squares the parsed input, formats the result losslessly, parses it back
/// and compares with −1.
fn square_round_trip(input: &str) -> Result<(Biquaternion, f64), String> {
    let q = parse_biquaternion(input).map_err(|e| e.to_string())?;
    let text = format_biquaternion(&q.square(), 17);
    let back = parse_biquaternion(&text).map_err(|e| e.to_string())?;
    Ok((q, back.max_abs_diff(&-Biquaternion::ONE)))
}

fn table_notes(table: &TermTable, notes: &mut Vec<String>) -> bool {
    let total_dev = table.total().max_abs_diff(&-Biquaternion::ONE);
    notes.push(format!("table total deviates from -1 by {total_dev:e}"));
    total_dev <= EXAMPLE_TOLERANCE
}

fn run_one(number: usize, label: &'static str, input: &str) -> ExampleReport {
    let mut notes = Vec::new();
    let (q, deviation) = match square_round_trip(input) {
        Ok(v) => v,
        Err(e) => {
            return ExampleReport {
                number,
                label,
                passed: false,
                deviation: f64::INFINITY,
                notes: vec![e],
            };
        }
    };
    let mut passed = deviation <= EXAMPLE_TOLERANCE;

    match number {
        1 => {
            let table = term_table(&split_parts(&q, Split::Basis));
            passed &= table_notes(&table, &mut notes);
            let cross = table.entry(0, 1) + table.entry(1, 0);
            let ok = cross.coefficient_norm() <= EXAMPLE_TOLERANCE;
            notes.push(format!("cross terms cancel: {ok}"));
            passed &= ok;
        }
        2 => {
            let table = term_table(&split_parts(&q, Split::Basis));
            passed &= table_notes(&table, &mut notes);
            let cells = table.symbolic_entries(17, EXAMPLE_TOLERANCE);
            let mismatches: Vec<String> = EXAMPLE_TWO_TABLE
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, want)| (r, c, *want)))
                .filter(|&(r, c, want)| cells.get(r).and_then(|row| row.get(c)).map(String::as_str) != Some(want))
                .map(|(r, c, want)| format!("({r},{c}) expected {want}"))
                .collect();
            notes.push(format!("5x5 table mismatches: {}", mismatches.len()));
            passed &= table.size() == 5 && mismatches.is_empty();
            notes.extend(mismatches);
        }
        3 => {
            let table = term_table(&split_parts(&q, Split::Decomposed));
            passed &= table_notes(&table, &mut notes);
            let diag = table.diagonal();
            let real = |d: &Biquaternion| (*d - Biquaternion::scalar(d.qr.w)).coefficient_norm() <= EXAMPLE_TOLERANCE;
            let ok = diag.len() == 2
                && real(&diag[0])
                && real(&diag[1])
                && (diag[0].qr.w + 9.0).abs() <= EXAMPLE_TOLERANCE
                && (diag[1].qr.w - 8.0).abs() <= EXAMPLE_TOLERANCE;
            notes.push(format!(
                "diagonal real parts: {}",
                diag.iter()
                    .map(|d| format!("{}", d.qr.w))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            passed &= ok;
            let f = decompose(&q);
            let ok = (f.b - 3.0).abs() <= EXAMPLE_TOLERANCE && (f.d - 8f64.sqrt()).abs() <= EXAMPLE_TOLERANCE;
            notes.push(format!("moduli {} and {}", f.b, f.d));
            passed &= ok;
        }
        _ => unreachable!("only three examples"),
    }
    ExampleReport {
        number,
        label,
        passed,
        deviation,
        notes,
    }
}

pub fn verify_examples() -> Vec<ExampleReport> {
    vec![
        run_one(1, "(sqrt2 i + j I)^2 = -1", EXAMPLE_ONE),
        run_one(2, "((i + j + k) + (j - k) I)^2 = -1", EXAMPLE_TWO),
        run_one(3, "(3 nu + 2 sqrt2 mu I)^2 = -1", EXAMPLE_THREE),
    ]
}

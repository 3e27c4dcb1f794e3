use std::fmt::Write;

use crate::algebra::Biquaternion;
use crate::format::format_real;

const LABELS: [&str; 8] = ["", "i", "j", "k", "I", "iI", "jI", "kI"];

/// Renders `q` as a signed sum over the basis `1, i, j, k, I, iI, jI, kI`,
/// dropping coefficients with magnitude at most `zero_tol` and writing unit
/// coefficients as bare labels, e.g. `-jI` or `1.5 + k`.
pub fn symbolic(q: &Biquaternion, digits: usize, zero_tol: f64) -> String {
    let mut out = String::new();
    for (coef, label) in q.to_array().into_iter().zip(LABELS) {
        if coef.abs() <= zero_tol {
            continue;
        }
        let negative = coef < 0.0;
        let mag = coef.abs();
        let body = if (mag - 1.0).abs() <= zero_tol && !label.is_empty() {
            label.to_string()
        } else if (mag - 1.0).abs() <= zero_tol {
            "1".to_string()
        } else {
            format!("{}{label}", format_real(mag, digits))
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// All pairwise products of the summands of `q`; the table total is `q²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TermTable {
    parts: Vec<Biquaternion>,
    entries: Vec<Biquaternion>,
}

impl TermTable {
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Biquaternion] {
        &self.parts
    }

    /// `row_part * column_part`.
    pub fn entry(&self, row: usize, column: usize) -> Biquaternion {
        self.entries[row * self.size() + column]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Biquaternion]> {
        self.entries.chunks(self.size().max(1))
    }

    pub fn diagonal(&self) -> Vec<Biquaternion> {
        (0..self.size()).map(|n| self.entry(n, n)).collect()
    }

    pub fn total(&self) -> Biquaternion {
        self.entries.iter().copied().sum()
    }

    /// Sum of the parts, i.e. the biquaternion being squared.
    pub fn squared_value(&self) -> Biquaternion {
        self.parts.iter().copied().sum()
    }

    /// Entries rendered with [`symbolic`], row-major.
    pub fn symbolic_entries(&self, digits: usize, zero_tol: f64) -> Vec<Vec<String>> {
        self.rows()
            .map(|row| row.iter().map(|q| symbolic(q, digits, zero_tol)).collect())
            .collect()
    }

    /// Plain-text grid with the parts as row and column headers and a total line.
    pub fn render(&self, digits: usize, zero_tol: f64) -> String {
        let headers: Vec<String> = self.parts.iter().map(|p| symbolic(p, digits, zero_tol)).collect();
        let cells = self.symbolic_entries(digits, zero_tol);
        let width = headers
            .iter()
            .chain(cells.iter().flatten())
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            .max(2);

        let mut out = String::new();
        let _ = write!(out, "{:>width$} |", "q^2");
        for h in &headers {
            let _ = write!(out, " {h:>width$}");
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (headers.len() + 1) + 1));
        out.push('\n');
        for (h, row) in headers.iter().zip(&cells) {
            let _ = write!(out, "{h:>width$} |");
            for cell in row {
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "total: {}", symbolic(&self.total(), digits, zero_tol));
        out
    }
}

pub fn term_table(parts: &[Biquaternion]) -> TermTable {
    let entries = parts
        .iter()
        .flat_map(|r| parts.iter().map(move |c| r.product(c)))
        .collect();
    TermTable {
        parts: parts.to_vec(),
        entries,
    }
}

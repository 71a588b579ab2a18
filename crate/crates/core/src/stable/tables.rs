//! The two height/position tables of non-projective indecomposables.
//!
//! Rows are heights `h ∈ ℤ/(p-1)`, printed from `p-2` at the top down to 0;
//! columns are positions `0 ≤ c ≤ (p-3)/2`. The first table holds
//! `Ω^h(Sym^{2c} E)` and the second `Ω^h(Sym^{p-2c-2} E)`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::stable::element::Basis;

/// Which table a basis element lies in, and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TablePosition {
    /// 1 or 2.
    pub table: u8,
    pub height: usize,
    pub position: usize,
}

pub fn table_position(p: OddPrime, b: Basis) -> TablePosition {
    if b.l.is_multiple_of(2) {
        TablePosition {
            table: 1,
            height: b.m,
            position: b.l / 2,
        }
    } else {
        TablePosition {
            table: 2,
            height: b.m,
            position: (p.as_usize() - 2 - b.l) / 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightTable {
    pub p: OddPrime,
    pub table: u8,
    /// `cells[h][c]`, indexed by height then position.
    pub cells: Vec<Vec<Basis>>,
}

impl HeightTable {
    pub fn cell(&self, h: usize, c: usize) -> Basis {
        self.cells[h][c]
    }

    /// Renders the table with the highest row first, columns separated by `|`.
    pub fn render(&self) -> String {
        let n = self.cells[0].len();
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["h\\c".to_string()];
        header.extend((0..n).map(|c| c.to_string()));
        rows.push(header);
        for h in (0..self.cells.len()).rev() {
            let mut row = vec![h.to_string()];
            row.extend(self.cells[h].iter().map(Basis::label));
            rows.push(row);
        }
        let widths: Vec<usize> = (0..=n)
            .map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap())
            .collect();
        let mut out = format!("Table {} (p = {})\n", self.table, self.p);
        for row in rows {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            writeln!(out, "{}", cells.join(" | ").trim_end()).unwrap();
        }
        out
    }

    /// Parses the output of [`HeightTable::render`].
    pub fn parse(text: &str) -> Result<HeightTable> {
        let bad = |what: &str| Error::Domain(format!("malformed table: {what}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let title = lines.next().ok_or_else(|| bad("empty input"))?;
        let rest = title
            .trim()
            .strip_prefix("Table ")
            .ok_or_else(|| bad("missing title"))?;
        let (index, prime) = rest
            .split_once(" (p = ")
            .ok_or_else(|| bad("missing prime"))?;
        let table: u8 = index.parse().map_err(|_| bad("table index"))?;
        if table != 1 && table != 2 {
            return Err(bad("table index"));
        }
        let p: OddPrime = prime.trim_end_matches(')').parse()?;
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let n = header.split('|').count() - 1;
        if n != p.half() {
            return Err(bad("column count"));
        }
        let period = p.heller_period();
        let mut cells = vec![Vec::new(); period];
        let mut seen = 0;
        for line in lines {
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields.len() != n + 1 {
                return Err(bad("row width"));
            }
            let h: usize = fields[0].parse().map_err(|_| bad("height label"))?;
            if h >= period || !cells[h].is_empty() {
                return Err(bad("height label"));
            }
            cells[h] = fields[1..]
                .iter()
                .map(|f| Basis::parse_label(p, f))
                .collect::<Result<_>>()?;
            seen += 1;
        }
        if seen != period {
            return Err(bad("row count"));
        }
        Ok(HeightTable { p, table, cells })
    }
}

/// Both tables for the prime `p`.
pub fn height_position_tables(p: OddPrime) -> [HeightTable; 2] {
    let n = p.as_usize();
    let build = |table: u8| {
        let cells = (0..p.heller_period())
            .map(|h| {
                (0..p.half())
                    .map(|c| {
                        let l = if table == 1 { 2 * c } else { n - 2 * c - 2 };
                        Basis { l, m: h }
                    })
                    .collect()
            })
            .collect();
        HeightTable { p, table, cells }
    };
    [build(1), build(2)]
}

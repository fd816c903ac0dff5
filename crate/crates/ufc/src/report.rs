//! The verification harness: sweeps witness grids, measures complexities,
//! recomputes every expected value from its formula, and renders pass/fail
//! tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use crate::atoms::{atoms_report_with, AtomLimits};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::ops::{boolean, concat, reverse, star, BoolOp, Mode};
use crate::transform::{letter_transformations, semigroup_closure, DEFAULT_CLOSURE_CAP};
use crate::witness::{boolean_witness_pair, make_witness, DialectSpec};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

/// Which cells to evaluate.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub m_min: usize,
    pub m_max: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Bound families to run, 1..=7 (semigroup, quotients, reversal and
    /// atom count, atom complexities, star, product, boolean).
    pub items: BTreeSet<u8>,
    /// Per-subset atom sweeps stop here (they cost 2^n minimizations of
    /// monoid-sized automata).
    pub atoms_max_n: usize,
    /// Semigroup closures stop here (n^n elements).
    pub semigroup_max_n: usize,
    pub closure_cap: usize,
    /// Include per-cell timings in rendered output. Off by default so that
    /// identical runs produce byte-identical reports.
    pub timings: bool,
}

impl Default for GridSpec {
    fn default() -> GridSpec {
        GridSpec {
            m_min: 3,
            m_max: 6,
            n_min: 3,
            n_max: 6,
            items: (1..=7).collect(),
            atoms_max_n: 5,
            semigroup_max_n: 7,
            closure_cap: DEFAULT_CLOSURE_CAP,
            timings: false,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m_min < 3 || self.n_min < 3 {
            return Err(Error::GridRange(format!(
                "m >= 3 and n >= 3 required, got m_min = {}, n_min = {}",
                self.m_min, self.n_min
            )));
        }
        if self.m_min > self.m_max || self.n_min > self.n_max {
            return Err(Error::GridRange(format!(
                "empty range: m {}..{}, n {}..{}",
                self.m_min, self.m_max, self.n_min, self.n_max
            )));
        }
        Ok(())
    }

    fn ns(&self) -> impl Iterator<Item = usize> {
        self.n_min..=self.n_max
    }

    fn ms(&self) -> impl Iterator<Item = usize> {
        self.m_min..=self.m_max
    }
}

/// One measured cell.
#[derive(Clone, Debug)]
pub struct ReportRow {
    /// Bound-family tag: "1", "2", …, "6a", "7c".
    pub item: String,
    pub operation: String,
    pub m: Option<usize>,
    pub n: usize,
    /// The dialects the cell was evaluated on, in dialect notation.
    pub dialects: String,
    pub measured: u64,
    /// Recomputed from the item's formula; `None` for cells that are
    /// reported without assertion.
    pub expected: Option<u64>,
    /// Construction size before minimization, where the operation has one.
    pub raw_states: Option<u64>,
    /// `Some(measured == expected)` for asserted cells; for the two-letter
    /// semigroup cells, `Some(measured < n^n)`.
    pub pass: Option<bool>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Default)]
pub struct ComplexityReport {
    pub rows: Vec<ReportRow>,
}

impl ComplexityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn render(&self, format: ReportFormat, timings: bool) -> String {
        match format {
            ReportFormat::Markdown => self.render_markdown(timings),
            ReportFormat::Csv => self.render_csv(timings),
            ReportFormat::Json => self.render_json(timings),
        }
    }

    fn render_markdown(&self, timings: bool) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "| item | operation | m | n | dialects | measured | expected | raw | pass |"
        );
        if timings {
            let _ = write!(out, " ms |");
        }
        let _ = writeln!(out);
        let _ = write!(out, "|---|---|---|---|---|---|---|---|---|");
        if timings {
            let _ = write!(out, "---|");
        }
        let _ = writeln!(out);
        for r in &self.rows {
            let _ = write!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.item,
                r.operation,
                r.m.map_or(String::from("-"), |m| m.to_string()),
                r.n,
                r.dialects,
                r.measured,
                r.expected.map_or(String::from("-"), |e| e.to_string()),
                r.raw_states.map_or(String::from("-"), |s| s.to_string()),
                match r.pass {
                    Some(true) => "pass",
                    Some(false) => "FAIL",
                    None => "-",
                },
            );
            if timings {
                let _ = write!(out, " {} |", r.elapsed_ms);
            }
            let _ = writeln!(out);
        }
        out
    }

    fn render_csv(&self, timings: bool) -> String {
        let mut out = String::from("item,operation,m,n,dialects,measured,expected,raw,pass");
        if timings {
            out.push_str(",ms");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{},{},{},{},\"{}\",{},{},{},{}",
                r.item,
                r.operation,
                r.m.map_or(String::new(), |m| m.to_string()),
                r.n,
                r.dialects,
                r.measured,
                r.expected.map_or(String::new(), |e| e.to_string()),
                r.raw_states.map_or(String::new(), |s| s.to_string()),
                match r.pass {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "",
                },
            );
            if timings {
                let _ = write!(out, ",{}", r.elapsed_ms);
            }
            out.push('\n');
        }
        out
    }

    fn render_json(&self, timings: bool) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = serde_json::json!({
                    "item": r.item,
                    "operation": r.operation,
                    "m": r.m,
                    "n": r.n,
                    "dialects": r.dialects,
                    "measured": r.measured,
                    "expected": r.expected,
                    "raw": r.raw_states,
                    "pass": r.pass,
                });
                if timings {
                    row["ms"] = serde_json::json!(r.elapsed_ms as u64);
                }
                row
            })
            .collect();
        let report = serde_json::json!({
            "rows": rows,
            "all_pass": self.all_pass(),
        });
        serde_json::to_string_pretty(&report).expect("serializable")
    }
}

// Expected values, straight from the formulas. Every report cell calls one
// of these at render time.

pub fn expected_semigroup(n: usize) -> u64 {
    (n as u64).pow(n as u32)
}

pub fn expected_reversal(n: usize) -> u64 {
    1 << n
}

pub fn expected_star(n: usize) -> u64 {
    (1 << (n - 1)) + (1 << (n - 2))
}

pub fn expected_concat_restricted(m: usize, n: usize) -> u64 {
    ((m as u64) - 1) * (1 << n) + (1 << (n - 1))
}

pub fn expected_concat_unrestricted(m: usize, n: usize) -> u64 {
    (m as u64) * (1 << n) + (1 << (n - 1))
}

pub fn expected_boolean_restricted(m: usize, n: usize) -> u64 {
    (m * n) as u64
}

pub fn expected_boolean_unrestricted(op: BoolOp, m: usize, n: usize) -> u64 {
    let (m, n) = (m as u64, n as u64);
    if op == BoolOp::INTERSECTION {
        m * n
    } else if op == BoolOp::DIFFERENCE {
        m * n + n
    } else {
        (m + 1) * (n + 1)
    }
}

pub fn run_verify(grid: &GridSpec) -> Result<ComplexityReport> {
    grid.validate()?;
    let mut rows = Vec::new();
    if grid.items.contains(&1) {
        item1_semigroup(grid, &mut rows)?;
    }
    if grid.items.contains(&2) {
        item2_quotients(grid, &mut rows)?;
    }
    if grid.items.contains(&3) {
        item3_reversal_and_atom_count(grid, &mut rows)?;
    }
    if grid.items.contains(&4) {
        item4_atoms(grid, &mut rows)?;
    }
    if grid.items.contains(&5) {
        item5_star(grid, &mut rows)?;
    }
    if grid.items.contains(&6) {
        item6_product(grid, &mut rows)?;
    }
    if grid.items.contains(&7) {
        item7_boolean(grid, &mut rows)?;
    }
    Ok(ComplexityReport { rows })
}

fn witness(n: usize, dialect: &str) -> Result<Dfa> {
    make_witness(n, &dialect.parse::<DialectSpec>()?)
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u128)> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, start.elapsed().as_millis()))
}

fn item1_semigroup(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for n in grid.ns().filter(|&n| n <= grid.semigroup_max_n) {
        let d = witness(n, "a,b,c")?;
        let gens = letter_transformations(&d)?;
        let (report, ms) = timed(|| semigroup_closure(&gens, grid.closure_cap))?;
        let expected = expected_semigroup(n);
        rows.push(ReportRow {
            item: "1".into(),
            operation: "syntactic semigroup".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b,c)"),
            measured: report.size as u64,
            expected: Some(expected),
            raw_states: None,
            pass: Some(report.complete && report.size as u64 == expected),
            elapsed_ms: ms,
        });
        // three letters are necessary: every two-letter subset falls short
        if n <= 4 {
            for (keep, dialect) in [("a,b", "a,b"), ("a,c", "a,-,c"), ("b,c", "-,b,c")] {
                let sub = witness(n, dialect)?;
                let gens = letter_transformations(&sub)?;
                let (report, ms) = timed(|| semigroup_closure(&gens, grid.closure_cap))?;
                rows.push(ReportRow {
                    item: "1".into(),
                    operation: format!("semigroup of 2-letter subset {{{keep}}}"),
                    m: None,
                    n,
                    dialects: format!("L_{n}({dialect})"),
                    measured: report.size as u64,
                    expected: None,
                    raw_states: None,
                    pass: Some(report.complete && (report.size as u64) < expected_semigroup(n)),
                    elapsed_ms: ms,
                });
            }
        }
    }
    Ok(())
}

fn item2_quotients(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for n in grid.ns() {
        let d = witness(n, "a,b")?;
        let (complexities, ms) = timed(|| d.quotient_complexities())?;
        let uniform = complexities.len() == n && complexities.iter().all(|&k| k == n);
        rows.push(ReportRow {
            item: "2".into(),
            operation: "quotient complexities".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b)"),
            measured: complexities.iter().copied().max().unwrap_or(0) as u64,
            expected: Some(n as u64),
            raw_states: None,
            pass: Some(uniform),
            elapsed_ms: ms,
        });
    }
    Ok(())
}

fn item3_reversal_and_atom_count(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for n in grid.ns() {
        let d = witness(n, "a,b,c")?;
        let (rev, ms) = timed(|| reverse(&d))?;
        rows.push(ReportRow {
            item: "3".into(),
            operation: "reversal".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b,c)"),
            measured: rev.complexity() as u64,
            expected: Some(expected_reversal(n)),
            raw_states: Some(rev.raw_states as u64),
            pass: Some(rev.complexity() as u64 == expected_reversal(n)),
            elapsed_ms: ms,
        });
        let (count, ms) = timed(|| crate::atoms::atom_count_with_cap(&d, grid.closure_cap))?;
        rows.push(ReportRow {
            item: "3".into(),
            operation: "atom count".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b,c)"),
            measured: count as u64,
            expected: Some(expected_reversal(n)),
            raw_states: None,
            pass: Some(count as u64 == expected_reversal(n)),
            elapsed_ms: ms,
        });
    }
    Ok(())
}

fn item4_atoms(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for n in grid.ns().filter(|&n| n <= grid.atoms_max_n) {
        let d = witness(n, "a,b,c")?;
        let limits = AtomLimits {
            max_states: grid.atoms_max_n,
            closure_cap: grid.closure_cap,
        };
        let (report, ms) = timed(|| atoms_report_with(&d, limits))?;
        let matching = report
            .rows
            .iter()
            .filter(|r| r.matches_formula == Some(true))
            .count();
        rows.push(ReportRow {
            item: "4".into(),
            operation: "atom complexities meet the formula".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b,c)"),
            measured: matching as u64,
            expected: Some(1 << n),
            raw_states: None,
            pass: Some(matching == 1 << n && report.atom_count == 1 << n),
            elapsed_ms: ms,
        });
    }
    Ok(())
}

fn item5_star(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for n in grid.ns() {
        let d = witness(n, "a,b")?;
        let (st, ms) = timed(|| star(&d))?;
        rows.push(ReportRow {
            item: "5".into(),
            operation: "star".into(),
            m: None,
            n,
            dialects: format!("L_{n}(a,b)"),
            measured: st.complexity() as u64,
            expected: Some(expected_star(n)),
            raw_states: Some(st.raw_states as u64),
            pass: Some(st.complexity() as u64 == expected_star(n)),
            elapsed_ms: ms,
        });
    }
    Ok(())
}

fn item6_product(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for m in grid.ms() {
        for n in grid.ns() {
            let d1 = witness(m, "a,b,c")?;
            let d2 = witness(n, "a,b,c")?;
            let (restricted, ms) = timed(|| concat(&d1, &d2, Mode::Restricted))?;
            let expected = expected_concat_restricted(m, n);
            rows.push(ReportRow {
                item: "6a".into(),
                operation: "product".into(),
                m: Some(m),
                n,
                dialects: format!("L_{m}(a,b,c) L_{n}(a,b,c)"),
                measured: restricted.complexity() as u64,
                expected: Some(expected),
                raw_states: Some(restricted.raw_states as u64),
                pass: Some(restricted.complexity() as u64 == expected),
                elapsed_ms: ms,
            });
            let d2u = witness(n, "a,b,c,d")?;
            let (unrestricted, ms) = timed(|| concat(&d1, &d2u, Mode::Unrestricted))?;
            let expected = expected_concat_unrestricted(m, n);
            rows.push(ReportRow {
                item: "6b".into(),
                operation: "product".into(),
                m: Some(m),
                n,
                dialects: format!("L_{m}(a,b,c) L_{n}(a,b,c,d)"),
                measured: unrestricted.complexity() as u64,
                expected: Some(expected),
                raw_states: Some(unrestricted.raw_states as u64),
                pass: Some(unrestricted.complexity() as u64 == expected),
                elapsed_ms: ms,
            });
        }
    }
    Ok(())
}

fn item7_boolean(grid: &GridSpec, rows: &mut Vec<ReportRow>) -> Result<()> {
    for m in grid.ms() {
        for n in grid.ns() {
            // 7a: different dialects over the same binary alphabet; the
            // (3,3) cell is reported without assertion
            let d1 = witness(m, "a,b")?;
            let d2 = witness(n, "b,a")?;
            for op in BoolOp::PROPER {
                let (result, ms) = timed(|| boolean(&d1, &d2, op, Mode::Restricted))?;
                let asserted = (m, n) != (3, 3);
                rows.push(ReportRow {
                    item: "7a".into(),
                    operation: op.to_string(),
                    m: Some(m),
                    n,
                    dialects: format!("L_{m}(a,b) ∘ L_{n}(b,a)"),
                    measured: result.complexity() as u64,
                    expected: asserted.then(|| expected_boolean_restricted(m, n)),
                    raw_states: Some(result.raw_states as u64),
                    pass: asserted
                        .then(|| result.complexity() as u64 == expected_boolean_restricted(m, n)),
                    elapsed_ms: ms,
                });
            }
            // 7b: the same dialect on both sides still meets mn when m != n
            if m != n {
                let same = witness(n, "a,b")?;
                for op in BoolOp::PROPER {
                    let (result, ms) = timed(|| boolean(&d1, &same, op, Mode::Restricted))?;
                    rows.push(ReportRow {
                        item: "7b".into(),
                        operation: op.to_string(),
                        m: Some(m),
                        n,
                        dialects: format!("L_{m}(a,b) ∘ L_{n}(a,b)"),
                        measured: result.complexity() as u64,
                        expected: Some(expected_boolean_restricted(m, n)),
                        raw_states: Some(result.raw_states as u64),
                        pass: Some(result.complexity() as u64 == expected_boolean_restricted(m, n)),
                        elapsed_ms: ms,
                    });
                }
            }
            // 7c: unrestricted, on the identity-letter dialect pair;
            // complexity is measured over the result's own alphabet, and
            // difference takes the n-state dialect as the minuend (its
            // formula mn+n exceeds the m-state-minuend product bound).
            // (3,3) is degenerate here too and is reported unasserted.
            let (dm, dn) = boolean_witness_pair(m, n)?;
            for op in BoolOp::PROPER {
                let asserted = (m, n) != (3, 3);
                let (first, second, dialects) = if op == BoolOp::DIFFERENCE {
                    (&dn, &dm, format!("L_{n}(b,a,-,d) \\ L_{m}(a,b,-,c)"))
                } else {
                    (&dm, &dn, format!("L_{m}(a,b,-,c) ∘ L_{n}(b,a,-,d)"))
                };
                let (measured, ms) = timed(|| {
                    let result = boolean(first, second, op, Mode::Unrestricted)?;
                    Ok(result.result.language_complexity() as u64)
                })?;
                rows.push(ReportRow {
                    item: "7c".into(),
                    operation: op.to_string(),
                    m: Some(m),
                    n,
                    dialects,
                    measured,
                    expected: asserted.then(|| expected_boolean_unrestricted(op, m, n)),
                    raw_states: None,
                    pass: asserted.then(|| measured == expected_boolean_unrestricted(op, m, n)),
                    elapsed_ms: ms,
                });
            }
        }
    }
    Ok(())
}

//! Run the full verification grid programmatically and render it as a
//! markdown table.
//!
//! ```bash
//! cargo run --release --example verify
//! ```

use ufc::report::{run_verify, GridSpec, ReportFormat};

fn main() {
    let grid = GridSpec::default();
    let report = run_verify(&grid).expect("grid is valid");
    print!("{}", report.render(ReportFormat::Markdown, false));
    let (pass, fail, reported): (usize, usize, usize) =
        report
            .rows
            .iter()
            .fold((0, 0, 0), |(p, f, r), row| match row.pass {
                Some(true) => (p + 1, f, r),
                Some(false) => (p, f + 1, r),
                None => (p, f, r + 1),
            });
    println!("\n{pass} pass, {fail} fail, {reported} reported without assertion");
    std::process::exit(if fail == 0 { 0 } else { 1 });
}

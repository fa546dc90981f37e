//! Rebuild W from the Hecke recursion alone and compare with the closed form.
//!
//!     cargo run --example recursion_solver -- [alpha] [max_weight]

use newform::scalar::rational::parse_rational_list;
use newform::whittaker::{solve_recursion_linear, verify_recursion, WhittakerTable};
use newform::SatakeParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let alpha = SatakeParams::new(parse_rational_list(args.first().map_or("3,-1/2,0", String::as_str))?)?;
    let max_weight: i64 = args.get(1).map_or(Ok(5), |s| s.parse())?;

    let report = verify_recursion(&alpha, max_weight)?;
    println!("{} recursion identities checked, {} failures", report.checks.len(), report.failures().count());
    for c in report.failures().take(5) {
        println!("  f={} i={}: {} != {}", c.f, c.i, c.lhs, c.rhs);
    }

    let solved = solve_recursion_linear(&alpha, max_weight)?;
    let closed = WhittakerTable::closed_form(&alpha, max_weight)?;
    match solved.first_mismatch(&closed) {
        None => println!("linear solve reproduces all {} values", closed.entries.len()),
        Some(f) => println!("first mismatch at {f}: {} vs {}", solved.get(&f), closed.get(&f)),
    }
    Ok(())
}

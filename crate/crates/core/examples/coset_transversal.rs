//! Exhaustive check of the Hecke coset representatives over `Z/p^{m+1}`.
//!
//!     cargo run --example coset_transversal -- [n p i m]

use newform::coset::{verify_coset_transversal, CosetSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let grid: Vec<(usize, u64, usize, u32)> = if args.len() == 4 {
        vec![(args[0].parse()?, args[1].parse()?, args[2].parse()?, args[3].parse()?)]
    } else {
        vec![(2, 2, 1, 1), (2, 3, 1, 1), (3, 2, 1, 1), (3, 2, 2, 1)]
    };
    for (n, p, i, m) in grid {
        let spec = CosetSpec::new(n, p, m, i)?;
        let start = std::time::Instant::now();
        let report = verify_coset_transversal(&spec)?;
        println!(
            "n={n} p={p} i={i} m={m}: {} representatives (q^i * [n-1 choose i]_q = {}), |K_m| = {}, |S| = {}, {} in {:.2?}",
            report.representatives.len(),
            report.expected_count,
            report.group_order,
            report.subgroup_order,
            if report.passed() { "verified" } else { "FAILED" },
            start.elapsed(),
        );
        for g in report.representatives.iter().take(12) {
            println!("    {g}");
        }
    }
    Ok(())
}

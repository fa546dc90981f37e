//! Newform Whittaker values on the diagonal torus, as Laurent polynomials in v = q^{1/2}.
//!
//!     cargo run --example whittaker_table -- [alpha] [max_weight]
//!
//! `alpha` is a comma-separated list; a trailing 0 marks positive conductor.

use newform::scalar::rational::parse_rational_list;
use newform::whittaker::{whittaker_tilde, WhittakerTable};
use newform::SatakeParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let alpha = SatakeParams::new(parse_rational_list(args.first().map_or("1/2,1/3,0", String::as_str))?)?;
    let max_weight: i64 = args.get(1).map_or(Ok(4), |s| s.parse())?;

    let table = WhittakerTable::closed_form(&alpha, max_weight)?;
    println!("GL({}), alpha = {alpha}", table.n);
    println!("{:<14} {:<28} {}", "f", "W(f)", "W~(f)");
    for (f, w) in &table.entries {
        println!("{:<14} {:<28} {}", f.to_string(), w.to_string(), whittaker_tilde(f, &alpha)?);
    }
    Ok(())
}

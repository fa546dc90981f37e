//! The unramified zeta integral of the newform against the L-factor, as power series in X = q^{-s}.
//!
//!     cargo run --example zeta_integral -- [alpha] [terms]

use newform::scalar::rational::parse_rational_list;
use newform::zeta::zeta_equals_lfactor;
use newform::SatakeParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let alpha = SatakeParams::new(parse_rational_list(args.first().map_or("1/2,-2/3,0", String::as_str))?)?;
    let terms: usize = args.get(1).map_or(Ok(8), |s| s.parse())?;

    let report = zeta_equals_lfactor(&alpha, terms)?;
    println!("Z(s, W) = {}", report.zeta);
    println!("L(s, pi) = {}", report.lfactor);
    match &report.first_discrepancy {
        None => println!("agree through X^{terms}"),
        Some(d) => println!("differ at X^{}: {} vs {}", d.degree, d.zeta, d.lfactor),
    }
    Ok(())
}

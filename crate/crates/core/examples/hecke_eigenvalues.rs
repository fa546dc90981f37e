//! Satake parameters -> Hecke eigenvalues -> L-factor denominator.
//!
//!     cargo run --example hecke_eigenvalues -- [alpha]

use newform::scalar::rational::parse_rational_list;
use newform::whittaker::{auxiliary_mu, eigen_from_satake, lfactor_den_from_eigen};
use newform::zeta::lfactor_denominator;
use newform::SatakeParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1/3,-1/5,0".into());
    let alpha = SatakeParams::new(parse_rational_list(&arg)?)?;

    for (i, mu) in auxiliary_mu(&alpha).iter().enumerate() {
        println!("mu_{} = {mu}", i + 1);
    }
    let eigen = eigen_from_satake(&alpha);
    for i in 1..alpha.rank() {
        println!("lambda_{i} = {}", eigen.lambda(i));
    }
    let from_eigen = lfactor_den_from_eigen(&eigen)?;
    let direct = lfactor_denominator(&alpha);
    println!("L-factor denominator from eigenvalues: {from_eigen}");
    println!("L-factor denominator from Satake:      {direct}");
    assert_eq!(from_eigen, direct);
    Ok(())
}

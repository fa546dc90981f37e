//! Three independent evaluations of a Schur polynomial, plus the Pieri expansion when α_n = 0.
//!
//!     cargo run --example schur_oracles -- [alpha] [signature]

use newform::scalar::rational::parse_rational_list;
use newform::symfunc::{
    elementary_e, pieri_expand, schur_bialternant, schur_jacobi_trudi, schur_ssyt_oracle, ssyt_count,
    DEFAULT_SSYT_BUDGET,
};
use newform::{SatakeParams, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let alpha = SatakeParams::new(parse_rational_list(args.first().map_or("1/2,1/2,3,0", String::as_str))?)?;
    let parts: Vec<i64> = args
        .get(1)
        .map_or("3,1,1", String::as_str)
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let f = Signature::for_rank(parts, alpha.rank())?;

    println!("s_{f}(alpha), alpha = {alpha}");
    println!("  bialternant    {}", schur_bialternant(&f, &alpha)?);
    println!("  Jacobi-Trudi   {}", schur_jacobi_trudi(&f, &alpha)?);
    println!(
        "  tableaux       {} ({} SSYT)",
        schur_ssyt_oracle(&f, &alpha, DEFAULT_SSYT_BUDGET)?,
        ssyt_count(&f, alpha.rank(), DEFAULT_SSYT_BUDGET)?
    );
    if !alpha.conductor_positive() {
        return Ok(());
    }
    for i in 1..alpha.rank() {
        let terms = pieri_expand(&f, i)?;
        let rhs: newform::Rational = terms.iter().map(|g| schur_bialternant(g, &alpha).unwrap()).sum();
        let shapes: Vec<String> = terms.iter().map(ToString::to_string).collect();
        println!("  e_{i} s_f = {} = sum over {}", elementary_e(i, &alpha)? * schur_bialternant(&f, &alpha)?, shapes.join(" "));
        println!("            = {rhs}");
    }
    Ok(())
}

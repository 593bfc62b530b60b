//! Parsing, printing and evaluating q-series expressions.

use heptacore::expr::{eval, eval_str, parse};

fn main() -> heptacore::Result<()> {
    let text = "phi(q)*phi(q^7) + 4*q^2*psi(q^2)*psi(q^14)";
    let ast = parse(text)?;
    println!("parsed : {ast}");
    println!("value  : {}", eval(&ast, 12)?);
    println!("sigma  : {}", eval_str("sigma(q)", 12)?);

    let zero = eval_str("sigma(q) - sigma(q^2) - 2*q*psi(q)*psi(q^7)", 100)?;
    println!(
        "(sigma(q) - sigma(q^2) - 2q psi(q) psi(q^7)).is_zero() = {}",
        zero.is_zero()
    );

    println!("altq   : {}", eval_str("altq(psi(q))", 10)?);
    println!("T2     : {}", eval_str("T2(E(q)^3)", 10)?);

    for bad in ["E(q^7", "zeta(q)", "1/(1 - 1)"] {
        match eval_str(bad, 10) {
            Ok(_) => unreachable!(),
            Err(e) => println!("{bad:<10} -> {e}"),
        }
    }
    Ok(())
}

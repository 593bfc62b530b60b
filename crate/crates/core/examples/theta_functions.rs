//! Ramanujan's theta functions and the septic combinations built from them.

use heptacore::theta::{self, Sign, ThetaArgs};

fn main() -> heptacore::Result<()> {
    let order = 20;
    println!("phi(q)      = {}", theta::phi(1, order));
    println!("psi(q)      = {}", theta::psi(1, order));
    println!("chi(-q)     = {}", theta::chi_neg(1, order));

    let args = ThetaArgs::new(Sign::Plus, 1, Sign::Plus, 6)?;
    let sum = theta::theta_f(args, order);
    let product = theta::theta_f_product(args, order);
    println!("f(q, q^6)   = {sum}");
    println!("as product  = {product}");
    assert_eq!(sum, product);

    println!("sigma(q)    = {}", theta::sigma(1, order));
    println!("omega(q)    = {}", theta::omega(1, order));

    let cores = theta::eta_quotient(
        &theta::EtaQuotientSpec::from_pairs(&[(7, 7), (1, -1)]),
        order,
    )?;
    println!("E^7(q^7)/E(q) = {cores}");
    Ok(())
}

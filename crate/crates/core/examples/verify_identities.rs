//! Coefficientwise verification of the identity registry.
//!
//! Pass an order as the first argument (default 200).

use heptacore::identities::{Registry, Status};

fn main() -> heptacore::Result<()> {
    let order = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let registry = Registry::standard();
    let reports = registry.verify_all(order)?;
    for r in &reports {
        match &r.status {
            Status::Pass => println!("{:<20} pass  ({} ms)", r.id, r.millis),
            Status::Fail { exponent, lhs, rhs } => {
                println!("{:<20} FAIL  at q^{exponent}: {lhs} vs {rhs}", r.id)
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} pass at order {order}", reports.len());

    let one = registry.get("eq-3.24").expect("registered");
    println!(
        "\n{}\n  lhs: {}\n  rhs: {}",
        one.reference,
        one.lhs.text.as_deref().unwrap_or("-"),
        one.rhs.text.as_deref().unwrap_or("-")
    );
    Ok(())
}

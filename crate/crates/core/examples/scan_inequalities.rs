//! Scans every inequality, positivity statement and conjecture.

use heptacore::inequalities::{ScanStatus, Scanner};

fn main() -> heptacore::Result<()> {
    let depth = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2000);
    let scanner = Scanner::new(depth)?;
    for r in scanner.scan_all()? {
        let verdict = match &r.status {
            ScanStatus::Holds => "holds".to_string(),
            ScanStatus::Violation(i) => format!("fails at n = {}: {} vs {}", i.n, i.lhs, i.rhs),
        };
        println!(
            "{:<18} {:<10} {:<44} {verdict}",
            r.claim, r.kind, r.statement
        );
    }

    let t = scanner.tables();
    println!("\na7(4) = {}, 5 a7(1) = {}", t.a7(4), 5 * t.a7(1));
    println!(
        "b(1..=10) = {:?}",
        (1..=10).map(|n| t.b(n).to_string()).collect::<Vec<_>>()
    );
    Ok(())
}

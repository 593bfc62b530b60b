//! Exact arithmetic on truncated power series.
//!
//! Run with `cargo run --example series_arithmetic`.

use heptacore::theta::euler_e;
use heptacore::TruncSeries;

fn main() -> heptacore::Result<()> {
    let order = 12;
    let e = euler_e(1, order);
    println!("E(q)     = {e}");

    // 1/E(q) generates the partition numbers.
    let p = e.invert()?;
    println!("1/E(q)   = {p}");

    let a = TruncSeries::from_i64s(order, &[1, 2, 0, -1]);
    let b = TruncSeries::from_i64s(order, &[1, -1]);
    println!("a        = {a}");
    println!("a / b    = {}", a.div(&b)?);
    println!("a(q^3)   = {}", a.compose_power(3)?);
    println!("a(-q)    = {}", a.alternate());
    println!("even(a)  = {}", a.even_part());
    println!("odd(a)   = {}", a.odd_part());

    match TruncSeries::from_i64s(order, &[2, 1]).invert() {
        Ok(_) => unreachable!(),
        Err(e) => println!("invert(2 + q) fails: {e}"),
    }
    Ok(())
}

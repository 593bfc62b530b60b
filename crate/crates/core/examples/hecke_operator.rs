//! The Hecke operator T2 applied to the 7-core generating function.

use heptacore::identities::hecke_t2;
use heptacore::theta::euler_e;

fn main() -> heptacore::Result<()> {
    let order = 30;
    let wide = 2 * order;
    let cores_wide = euler_e(7, wide).pow(7).div(&euler_e(1, wide))?;
    let lhs = hecke_t2(&cores_wide.shift(2));

    let cores = euler_e(7, order).pow(7).div(&euler_e(1, order))?;
    let cubes = euler_e(1, order).pow(3) * euler_e(7, order).pow(3);
    let rhs = 5 * cores.shift(2) + cubes.shift(1);

    println!("T2(q^2 F)          = {}", lhs.truncate(10));
    println!("5q^2 F + q E^3 E7^3 = {}", rhs.truncate(10));
    println!("equal to q^{order}: {}", lhs == rhs);
    Ok(())
}

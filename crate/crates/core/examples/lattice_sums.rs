//! Quadratic-form theta sums over Z^t, restricted to parity classes.

use heptacore::partitions::{lattice_theta, LatticeSpec};
use heptacore::theta::euler_e;

fn main() -> heptacore::Result<()> {
    let order = 40;
    for t in [2usize, 3, 5, 7] {
        let lattice = lattice_theta(&LatticeSpec::unrestricted(t)?, order);
        let closed = euler_e(t, order).pow(t as u32).div(&euler_e(1, order))?;
        println!(
            "t = {t}: lattice sum equals E^t(q^t)/E(q) to q^{order}: {}",
            lattice == closed
        );
    }

    let mut total = lattice_theta(&LatticeSpec::septic_rank(-1).unwrap(), order);
    for rank in -1..=2 {
        let spec = LatticeSpec::septic_rank(rank).unwrap();
        let series = lattice_theta(&spec, order);
        println!(
            "rank {rank:>2}: {:>2} classes, {}",
            spec.residues().len(),
            series.truncate(12)
        );
        if rank > -1 {
            total = total + series;
        }
    }
    println!("sum of ranks = {}", total.truncate(12));
    Ok(())
}

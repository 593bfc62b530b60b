//! Brute-force enumeration of 7-cores and their BG-ranks.

use heptacore::partitions::{bg_rank, is_t_core, Oracle};

fn main() -> heptacore::Result<()> {
    let oracle = Oracle::default();
    for n in [3, 6, 7] {
        let cores: Vec<_> = oracle
            .enumerate(n)?
            .into_iter()
            .filter(|p| is_t_core(p, 7))
            .collect();
        println!("n = {n}: {} 7-cores", cores.len());
        for p in cores.iter().filter(|p| bg_rank(p) != 0) {
            println!("    {p} has BG-rank {}", bg_rank(p));
        }
    }

    println!("\n n   a7  by rank -1..=2");
    for n in 0..=15 {
        let by_rank = oracle.cores_by_rank(n, 7)?;
        let counts: Vec<u64> = (-1..=2)
            .map(|j| by_rank.get(&j).copied().unwrap_or(0))
            .collect();
        println!("{n:>2} {:>4}  {counts:?}", counts.iter().sum::<u64>());
    }

    match oracle.count_cores(60, 7) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n{e}"),
    }
    Ok(())
}

//! The NDAR loop on a 12-spin SK instance under attractor noise, with its stage ledger.

use mlvl::harness::{generate_instance, InstanceKind};
use mlvl::ndar::{ndar_solve, stage_ledger, stage_ledger_csv, NdarConfig};
use mlvl::problem::{brute_force, maxcut_to_ising};
use mlvl::qaoa::NoiseConfig;

fn main() -> mlvl::Result<()> {
    let g = generate_instance(InstanceKind::SkInt, 12, 0.0, 4)?;
    let (h, _) = maxcut_to_ising(&g);
    let exact = brute_force(&h, 24)?;

    for remap in [true, false] {
        let cfg =
            NdarConfig { trials: 40, shots: 500, noise: NoiseConfig::new(0.3)?, remap, seed: 1, ..Default::default() };
        let (best, state) = ndar_solve(&h, &cfg)?;
        println!(
            "remap={remap}: best {best} energy {} (ground {}), {} iterations",
            state.best_cost, exact.c_min, state.iteration
        );
        print!("{}", stage_ledger_csv(&stage_ledger(&state), Some((exact.c_min, exact.c_max))));
    }
    Ok(())
}

//! Time-Block QAOA on a 10-spin SK Hamiltonian: swap-network blocks, a noisy sample,
//! and quantum relax-and-round on the sampled correlations.

use mlvl::harness::{generate_instance, InstanceKind};
use mlvl::ndar::{qrr_round, wqrr_round};
use mlvl::problem::{brute_force, maxcut_to_ising};
use mlvl::qaoa::{build_timeblock_partition, correlation_matrix, exact_expectation, sample, simulate_tbqaoa};
use mlvl::qaoa::{NoiseConfig, QaoaParams};

fn main() -> mlvl::Result<()> {
    let g = generate_instance(InstanceKind::SkInt, 10, 0.0, 2)?;
    let (h, _) = maxcut_to_ising(&g);
    let ground = brute_force(&h, 24)?.c_min;

    let ordering: Vec<usize> = (0..10).collect();
    for k in [10, 5, 2] {
        let part = build_timeblock_partition(&h, k, &ordering)?;
        let sizes: Vec<usize> = part.blocks.iter().map(|b| b.couplings.len()).collect();
        println!("k={k:>2}: {} blocks with {:?} couplings", part.num_blocks(), sizes);
    }

    let part = build_timeblock_partition(&h, 5, &ordering)?;
    let params = QaoaParams::new(vec![0.2, 0.35], vec![0.6, 0.3], ordering)?;
    let psi = simulate_tbqaoa(&h, &part, &params)?;
    println!("<H> = {:.4}, ground energy {ground}", exact_expectation(&psi, &h)?);

    for p_damp in [0.0, 0.2] {
        let shots = sample(&psi, 1000, &NoiseConfig::new(p_damp)?, 7)?;
        let (best, e) = shots.best_by(|x| h.eval(x).unwrap()).unwrap();
        let corr = correlation_matrix(&shots)?;
        let q = qrr_round(&corr, &h)?;
        let w = wqrr_round(&corr, &h)?;
        println!(
            "p_damp {p_damp}: best sample {best} ({e}), QRR {} ({}), w-QRR {} ({})",
            q,
            h.eval(&q)?,
            w,
            h.eval(&w)?
        );
    }
    Ok(())
}

//! Multilevel refinement with the simulated noisy NDAR pipeline as subsolver.

use mlvl::classical::SubsolverBudget;
use mlvl::harness::{generate_instance, InstanceKind};
use mlvl::multilevel::{v_cycle, VCycleConfig};
use mlvl::ndar::NdarConfig;
use mlvl::qaoa::NoiseConfig;
use mlvl::subsolver::{build_subsolver, SubsolverKind};

fn main() -> mlvl::Result<()> {
    let g = generate_instance(InstanceKind::Gnp, 120, 0.06, 3)?;
    let ndar = NdarConfig { trials: 30, shots: 300, noise: NoiseConfig::new(0.1)?, ..Default::default() };
    let mut cfg = VCycleConfig::new(12, 2, 0);
    cfg.coarsest_size = 16;

    let mut quantum = build_subsolver(SubsolverKind::Ndar, SubsolverBudget::default(), &ndar)?;
    let (_, q) = v_cycle(&g, &cfg, quantum.as_mut())?;
    let mut classical = build_subsolver(SubsolverKind::Sa, SubsolverBudget::sweeps(1000, 0), &ndar)?;
    let (_, c) = v_cycle(&g, &cfg, classical.as_mut())?;

    println!("levels {:?}", q.level_sizes);
    println!("ndar subsolver: cut {:.3}, {} calls, {:.1}s", q.final_cut, q.total_calls, q.total_secs);
    println!("sa subsolver:   cut {:.3}, {} calls, {:.1}s", c.final_cut, c.total_calls, c.total_secs);
    Ok(())
}

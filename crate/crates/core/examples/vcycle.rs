//! A single V-cycle on a 1000-node weighted random graph with simulated annealing as
//! the refinement subsolver.

use mlvl::classical::{simulated_annealing, SubsolverBudget};
use mlvl::harness::{generate_instance, InstanceKind};
use mlvl::multilevel::{v_cycle, VCycleConfig};
use mlvl::problem::maxcut_to_ising;
use mlvl::subsolver::{ClassicalSubsolver, SubsolverKind};

fn main() -> mlvl::Result<()> {
    let g = generate_instance(InstanceKind::Gnp, 1000, 0.01, 5)?;
    println!("graph: {} nodes, {} edges", g.n(), g.num_edges());

    let mut sa = ClassicalSubsolver::new(SubsolverKind::Sa, SubsolverBudget::sweeps(500, 0))?;
    let cfg = VCycleConfig::new(100, 5, 1);
    let (x, report) = v_cycle(&g, &cfg, &mut sa)?;

    println!("level sizes {:?}", report.level_sizes);
    for l in &report.levels {
        println!(
            "level {:>2}: {:>5} nodes  interpolated {:>9.3} -> refined {:>9.3}  ({} calls)",
            l.level, l.nodes, l.interpolated_cut, l.stats.final_cut, l.stats.calls
        );
    }
    println!("final cut {:.3} after {} subsolver calls in {:.2}s", g.cut(&x)?, report.total_calls, report.total_secs);

    let (h, rec) = maxcut_to_ising(&g);
    let direct = simulated_annealing(&h, &SubsolverBudget::sweeps(2000, 0));
    println!("direct annealing on the full graph: {:.3}", rec.maxcut_from_other(h.eval(&direct)?));
    Ok(())
}

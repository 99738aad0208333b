//! The classical heuristics head to head on a 16-spin SK instance with a known optimum.

use mlvl::classical::{burer_monteiro_rank2, greedy_local_search, simulated_annealing, tabu_search, SubsolverBudget};
use mlvl::harness::{generate_instance, InstanceKind};
use mlvl::problem::{approximation_ratio, brute_force, maxcut_to_ising, Bitstring, Sense};

fn main() -> mlvl::Result<()> {
    let g = generate_instance(InstanceKind::SkInt, 16, 0.0, 11)?;
    let exact = brute_force(&g, 24)?;
    let (h, _) = maxcut_to_ising(&g);
    println!("max cut {}, min cut {}", exact.c_max, exact.c_min);

    let budget = SubsolverBudget::sweeps(2000, 3);
    let runs: Vec<(&str, Bitstring)> = vec![
        ("greedy", greedy_local_search(&h, &Bitstring::zeros(16))),
        ("tabu", tabu_search(&h, &budget, 10)),
        ("sa", simulated_annealing(&h, &budget)),
        ("bm2", burer_monteiro_rank2(&g, &budget, 10)),
    ];
    for (name, x) in runs {
        let cut = g.cut(&x)?;
        println!(
            "{name:>7}: cut {cut:>5}  AR {:.4}",
            approximation_ratio(cut, exact.c_min, exact.c_max, Sense::Maximize)
        );
    }
    Ok(())
}

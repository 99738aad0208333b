//! QUBO -> Max-Cut -> Ising, gauge transforms, and the exact oracle on a small instance.

use mlvl::problem::{
    brute_force, maxcut_to_ising, qubo_to_maxcut, recover_qubo_solution, Bitstring, GaugeVector, QuboProblem,
};

fn main() -> mlvl::Result<()> {
    let q = QuboProblem::from_dense(&[
        vec![3.0, -2.0, 0.0, 1.0],
        vec![0.0, 1.0, -4.0, 0.0],
        vec![0.0, 0.0, 2.0, 1.5],
        vec![0.0, 0.0, 0.0, -1.0],
    ])?;
    let (g, rec) = qubo_to_maxcut(&q);
    println!("QUBO with {} variables -> graph with {} nodes, {} edges", q.n(), g.n(), g.num_edges());
    println!("cut = {} * qubo + {}", rec.scale, rec.offset);

    let best_q = brute_force(&q, 24)?;
    let best_g = brute_force(&g, 24)?;
    let x = recover_qubo_solution(&best_g.argbest, &rec)?;
    println!("QUBO optimum {} at {}; Max-Cut optimum {} recovers {}", best_q.c_max, best_q.argbest, best_g.c_max, x);
    assert_eq!(q.eval(&x)?, best_q.c_max);

    let (h, hrec) = maxcut_to_ising(&g);
    let y = &best_g.argbest;
    println!("Ising energy {} <-> cut {}", h.eval(y)?, hrec.maxcut_from_other(h.eval(y)?));

    let gauge = GaugeVector::from_bits(vec![1, 0, 1, 1, 0])?;
    let hg = h.apply_gauge(&gauge)?;
    let z = Bitstring::zeros(g.n());
    println!(
        "gauged energy of all-zeros {} = energy of the gauge itself {}",
        hg.eval(&z)?,
        h.eval(&gauge.as_bitstring())?
    );
    Ok(())
}

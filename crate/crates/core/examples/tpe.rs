//! Tree-structured Parzen estimator against random search on the Branin function, plus
//! the trial log of one run.

use std::f64::consts::PI;

use mlvl::optimizer::{Optimizer, SearchSpace, Strategy};

fn branin(x: f64, y: f64) -> f64 {
    let b = 5.1 / (4.0 * PI * PI);
    let c = 5.0 / PI;
    (y - b * x * x + c * x - 6.0).powi(2) + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x.cos() + 10.0
}

fn main() -> mlvl::Result<()> {
    let space = SearchSpace::new().continuous("x", -5.0, 10.0)?.continuous("y", 0.0, 15.0)?;
    for seed in 0..5 {
        let mut best = Vec::new();
        for strategy in [Strategy::tpe(), Strategy::Random] {
            let mut opt = Optimizer::new(space.clone(), strategy, seed);
            let b = opt.minimize(150, |p| branin(p.float(0), p.float(1))).unwrap();
            best.push(b.value);
        }
        println!("seed {seed}: tpe {:.5}  random {:.5}  (optimum 0.39789)", best[0], best[1]);
    }

    let mut opt = Optimizer::new(space.clone(), Strategy::tpe(), 0);
    opt.minimize(15, |p| branin(p.float(0), p.float(1)));
    print!("{}", opt.history.to_csv(&space));
    Ok(())
}

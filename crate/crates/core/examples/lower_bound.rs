//! Random mirrored lists on complete 2-colorable hypergraphs: every system
//! with no proper coloring certifies ch > l. Prints a witness and a CSV sweep.
//!
//! cargo run --release --example lower_bound

use std::io;

use hyperchoose::dense::{lower_bound_experiment, lower_bound_sweep, write_sweep_csv};

fn main() -> hyperchoose::Result<()> {
    let rep = lower_bound_experiment(2, 2, 6, 10_000, 1)?;
    println!(
        "K_(3,3), 2-lists from 1..=4: {} of {} systems uncolorable",
        rep.uncolorable, rep.trials
    );
    if let Some(w) = rep.witnesses.first() {
        println!("first witness {}", w.to_json());
    }

    let rep = lower_bound_experiment(3, 3, 12, 2_000, 1)?;
    println!(
        "K^3_(6,6), 3-lists from 1..=9: witness fraction {}",
        rep.witness_fraction
    );

    let rows = lower_bound_sweep(3, 2, (6..=16).step_by(2), 2_000, 1)?;
    write_sweep_csv(&rows, io::stdout())
}

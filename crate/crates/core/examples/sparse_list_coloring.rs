//! List coloring a 2-colorable hypergraph from lists of size d(v) + 1 of a
//! minimum orientation, with both pair-graph solvers.
//!
//! cargo run --release --example sparse_list_coloring

use hyperchoose::generators::gen_complete;
use hyperchoose::orientation::{list_color_sparse_with, min_orientation, PairSolver};
use hyperchoose::{is_proper, ListAssignment};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hyperchoose::Result<()> {
    let (h, bip) = gen_complete(2, 4, 4)?;
    let (_, phi) = min_orientation(&h)?;
    let sizes: Vec<usize> = phi.degrees(h.n()).iter().map(|d| d + 1).collect();
    println!("K_(4,4): list sizes from the orientation {sizes:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let lists = ListAssignment::new(
        sizes
            .iter()
            .map(|&k| {
                sample(&mut rng, 6, k)
                    .into_iter()
                    .map(|c| c as u32 + 1)
                    .collect()
            })
            .collect(),
    )?;
    println!("lists {}", lists.to_json());
    for solver in [PairSolver::Backtracking, PairSolver::Kernels] {
        let c = list_color_sparse_with(&h, &bip, &lists, solver)?;
        println!(
            "{solver:?}: coloring {:?} proper={}",
            c.colors(),
            is_proper(&h, &c)
        );
    }

    let short = ListAssignment::uniform(h.n(), &[1, 2])?;
    match list_color_sparse_with(&h, &bip, &short, PairSolver::default()) {
        Ok(_) => println!("2-lists happened to work"),
        Err(e) => println!("2-lists rejected: {e}"),
    }
    Ok(())
}

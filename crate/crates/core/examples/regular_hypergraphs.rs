//! k-uniform k-regular hypergraphs for k >= 4 have density 1, so the sparse
//! bound gives ch = 2 once they are 2-colorable. Confirmed exactly on small
//! generated instances.
//!
//! cargo run --release --example regular_hypergraphs

use std::time::Instant;

use hyperchoose::choosability::is_k_choosable;
use hyperchoose::density::{bound_sparse, density};
use hyperchoose::generators::gen_k_regular_k_uniform;

fn main() -> hyperchoose::Result<()> {
    for (k, n, seed) in [(4, 8, 0), (4, 9, 1), (5, 10, 2)] {
        let Some(h) = gen_k_regular_k_uniform(k, n, seed)? else {
            println!("k={k} n={n}: search budget exhausted");
            continue;
        };
        let b = bound_sparse(&h)?;
        println!(
            "k={k} n={n}: L = {}, 2-colorable {}, sparse bound {}",
            density(&h)?,
            h.find_bipartition().is_some(),
            b.value
        );
        if n <= 8 {
            let started = Instant::now();
            let v = is_k_choosable(&h, 2)?;
            println!(
                "  exact: 2-choosable {} after {} list systems in {:.2?}",
                v.choosable,
                v.lists_examined,
                started.elapsed()
            );
        }
        print!("{}", h.to_hgr());
    }
    Ok(())
}

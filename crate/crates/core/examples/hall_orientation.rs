//! Orientations with least maximum in-degree and the pair-graph reduction.
//!
//! cargo run --release --example hall_orientation

use hyperchoose::density::density;
use hyperchoose::generators::{gen_complete, gen_k_regular_k_uniform};
use hyperchoose::orientation::{hall_orientation, min_orientation, reduce_to_pairgraph};

fn main() -> hyperchoose::Result<()> {
    let (h, bip) = gen_complete(3, 3, 3)?;
    let (k, phi) = min_orientation(&h)?;
    println!(
        "K^3_(3,3): {} edges, L = {}, least max in-degree {k}",
        h.edge_count(),
        density(&h)?
    );
    println!("  heads      {:?}", phi.heads());
    println!("  in-degrees {:?}", phi.degrees(h.n()));
    println!(
        "  in-degree {} possible: {}",
        k - 1,
        hall_orientation(&h, k - 1).is_some()
    );

    let pg = reduce_to_pairgraph(&h, &bip, &phi)?;
    println!("  pair-graph edges (head, partner): {:?}", pg.pairs);
    println!("  head degrees {:?}", pg.head_degrees());

    if let Some(reg) = gen_k_regular_k_uniform(4, 9, 1)? {
        let (k, _) = min_orientation(&reg)?;
        println!(
            "4-uniform 4-regular on 9 vertices: L = {}, k = {k}",
            density(&reg)?
        );
    }
    Ok(())
}

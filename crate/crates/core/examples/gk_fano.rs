//! The augmenting-path incidence selection and greedy list coloring on the
//! Fano plane, which is not 2-colorable.
//!
//! cargo run --release --example gk_fano

use hyperchoose::choosability::chromatic_number;
use hyperchoose::degree_constrained::{build_selection, list_color_gk};
use hyperchoose::density::{bound_gk, gk_degree_cap};
use hyperchoose::generators::gen_fano;
use hyperchoose::{is_proper, ListAssignment};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hyperchoose::Result<()> {
    let fano = gen_fano();
    let k = gk_degree_cap(&fano)?;
    let sel = build_selection(&fano, k).expect("cap is always reachable");
    println!(
        "Fano: cap {k}, selection {:?} after {} flips",
        sel.chosen, sel.flips
    );
    println!("selected degrees {:?}", sel.degrees(fano.n()));
    println!(
        "bound {} and chi {}",
        bound_gk(&fano)?.value,
        chromatic_number(&fano)?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut colored = 0;
    for _ in 0..1000 {
        let lists = ListAssignment::new(
            (0..7)
                .map(|_| {
                    sample(&mut rng, 9, 3)
                        .into_iter()
                        .map(|c| c as u32 + 1)
                        .collect()
                })
                .collect(),
        )?;
        let c = list_color_gk(&fano, &lists)?;
        assert!(is_proper(&fano, &c) && c.respects(&lists));
        colored += 1;
    }
    println!("{colored} random 3-list systems from 1..=9 colored properly");
    Ok(())
}

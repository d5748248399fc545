//! Density, 2-colorability and the three closed-form choosability bounds for
//! a few standard hypergraphs, next to the exact chromatic and choice numbers.
//!
//! cargo run --release --example analyze_bounds

use hyperchoose::choosability::{choice_number, chromatic_number};
use hyperchoose::density::{bound_degree, bound_gk, bound_sparse, density};
use hyperchoose::generators::{gen_complete, gen_cycle, gen_fano};
use hyperchoose::Hypergraph;

fn show(name: &str, h: &Hypergraph) -> hyperchoose::Result<()> {
    let m = h.metrics()?;
    let fmt = |b: hyperchoose::density::Bound| {
        if b.valid {
            b.value.to_string()
        } else {
            "-".into()
        }
    };
    println!(
        "{name:<10} n={:<2} |E|={:<2} max deg={} min edge={}  L={:<4} 2-colorable={:<5}  \
         bounds: sparse={} degree={} gk={}  chi={} ch={}",
        h.n(),
        m.edge_count,
        m.max_degree,
        m.min_edge_size,
        density(h)?.to_string(),
        h.find_bipartition().is_some(),
        fmt(bound_sparse(h)?),
        fmt(bound_degree(h)?),
        fmt(bound_gk(h)?),
        chromatic_number(h)?,
        choice_number(h)?,
    );
    Ok(())
}

fn main() -> hyperchoose::Result<()> {
    show("K33", &gen_complete(2, 3, 3)?.0)?;
    show("K^3_{2,3}", &gen_complete(3, 2, 3)?.0)?;
    show("C6", &gen_cycle(6)?)?;
    show("triangle", &gen_cycle(3)?)?;
    show("Fano", &gen_fano())?;
    Ok(())
}

//! Palette splitting for complete 2-colorable hypergraphs: thresholds, the
//! closed forms A and B against simulation, and the randomized colorer.
//!
//! cargo run --release --example palette_split

use hyperchoose::dense::{
    cond_corollary, cond_ert_upper, expected_counts, random_split_color, sample_split_statistics,
    split_color_experiment, split_probability,
};
use hyperchoose::generators::gen_complete;
use hyperchoose::ListAssignment;

fn main() -> hyperchoose::Result<()> {
    for (s, l, t) in [(16u64, 2u32, 6u64), (16, 2, 7), (16, 4, 16), (4, 3, 4)] {
        println!(
            "s={s:<2} l={l} t={t:<2}  p={:.4}  upper condition {:<5}  corollary {}",
            split_probability(s, l),
            cond_ert_upper(s, l, t)?,
            cond_corollary(s, l, t)?
        );
    }

    let lists = ListAssignment::new((0..12).map(|i| vec![i, i + 1, i + 2]).collect())?;
    let p = split_probability(8, 3);
    let (a, b) = expected_counts(&lists, p)?;
    let stats = sample_split_statistics(&lists, p, 100_000, 1);
    println!(
        "12 lists, s=8 l=3: A = {a:.4} (simulated {:.4} +- {:.4})",
        stats.monochromatic.mean, stats.monochromatic.std_error
    );
    println!(
        "                  B = {b:.4} (simulated {:.4} +- {:.4})",
        stats.dangerous_events.mean, stats.dangerous_events.std_error
    );
    println!(
        "                  distinct dangerous lists {:.4}",
        stats.dangerous.mean
    );

    let (k, bip) = gen_complete(3, 3, 3)?;
    let lists = ListAssignment::new((0..6u32).map(|v| vec![v % 4 + 1, v % 4 + 2, 9]).collect())?;
    let out = random_split_color(&k, &bip, &lists, 1000, 42)?;
    println!(
        "K^3_(3,3): coloring {:?} after {} draws ({} monochromatic, {} dangerous rejections)",
        out.coloring.as_ref().map(|c| c.colors().to_vec()),
        out.iterations,
        out.rejected_monochromatic,
        out.rejected_dangerous
    );
    let rep = split_color_experiment(&k, &bip, &lists, 10_000, 42)?;
    println!(
        "10000 single draws: {} colored, {} monochromatic, {} too dangerous",
        rep.colored, rep.monochromatic, rep.dangerous
    );
    Ok(())
}

//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the per-criterion lines are
//! always printed by `cargo test`.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hyperchoose::choosability::{
    choice_number, chromatic_number, color_from_lists, is_f_choosable,
};
use hyperchoose::degree_constrained::list_color_gk;
use hyperchoose::dense::{
    expected_counts, expected_dangerous_lists, lower_bound_experiment, random_split_color,
    sample_split_statistics, split_color_experiment, split_probability, trial_rng,
};
use hyperchoose::density::{bound_gk, bound_sparse, density_exact, Rational};
use hyperchoose::generators::{gen_complete, gen_fano, gen_k_regular_k_uniform};
use hyperchoose::nullstellensatz::expand_check;
use hyperchoose::orientation::min_orientation;
use hyperchoose::{is_proper, Bipartition, Hypergraph, ListAssignment, Orientation, Side};
use rand::seq::index::sample;
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let spent = started.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

/// True when `w` is, up to renaming colors, the system where each side of
/// `K_{3,3}` gets the three 2-subsets of one 3-color set.
fn is_triangle_pattern(w: &ListAssignment, bip: &Bipartition) -> bool {
    let palette = w.palette();
    if palette.len() != 3 {
        return false;
    }
    [Side::A, Side::B].into_iter().all(|side| {
        let lists: BTreeSet<&[u32]> = bip.part(side).into_iter().map(|v| w.list(v)).collect();
        lists.len() == 3 && lists.iter().all(|l| l.len() == 2)
    })
}

fn criterion_1() -> Check {
    let started = Instant::now();
    let (k33, bip) = ok(gen_complete(2, 3, 3))?;
    let two = ok(is_f_choosable(&k33, &[2; 6]))?;
    ensure(!two.choosable, "K33 reported 2-choosable")?;
    let w = two.witness.ok_or("no witness returned")?;
    ensure(color_from_lists(&k33, &w).is_none(), "witness is colorable")?;
    ensure(
        is_triangle_pattern(&w, &bip),
        format!("unexpected witness {}", w.to_json()),
    )?;
    ensure(
        ok(is_f_choosable(&k33, &[3; 6]))?.choosable,
        "K33 not 3-choosable",
    )?;
    let ch = ok(choice_number(&k33))?;
    ensure(ch == 3, format!("ch = {ch}"))?;
    within(started, Duration::from_secs(60))?;
    Ok(format!(
        "witness {} ; ch = 3 in {:?}",
        w.to_json(),
        started.elapsed()
    ))
}

fn criterion_2() -> Check {
    let (k33, _) = ok(gen_complete(2, 3, 3))?;
    let l = ok(density_exact(&k33))?;
    ensure(l == Rational::new(3, 2), format!("L = {l}"))?;
    let b = ok(bound_sparse(&k33))?;
    ensure(b.valid && b.value == 3, format!("bound_sparse = {b:?}"))?;
    ensure(ok(choice_number(&k33))? == 3, "ch != 3")?;
    Ok("L = 3/2, bound_sparse = 3 = ch".into())
}

fn criterion_3() -> Check {
    let started = Instant::now();
    for seed in 0..20 {
        let Some(h) = ok(gen_k_regular_k_uniform(4, 8, seed))? else {
            continue;
        };
        if h.find_bipartition().is_none() {
            continue;
        }
        let b = ok(bound_sparse(&h))?;
        ensure(b.valid && b.value == 2, format!("bound_sparse = {b:?}"))?;
        let v = ok(is_f_choosable(&h, &[2; 8]))?;
        ensure(v.choosable, "not 2-choosable")?;
        within(started, Duration::from_secs(600))?;
        return Ok(format!(
            "seed {seed}: 4-uniform 4-regular n = 8, ch = 2 after {} list systems in {:?}",
            v.lists_examined,
            started.elapsed()
        ));
    }
    Err("no 2-colorable instance generated".into())
}

fn random_hypergraph(
    rng: &mut impl Rng,
    n_range: std::ops::Range<usize>,
    max_edges: usize,
    max_size: usize,
) -> Hypergraph {
    let n = rng.gen_range(n_range);
    let m = rng.gen_range(1..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=max_size.min(n));
            sample(rng, n, size).into_vec()
        })
        .collect();
    Hypergraph::new(n, edges).expect("valid random edges")
}

fn brute_min_orientation(h: &Hypergraph) -> usize {
    let mut idx = vec![0usize; h.edge_count()];
    let mut best = usize::MAX;
    loop {
        let heads: Vec<usize> = idx.iter().enumerate().map(|(e, &i)| h.edge(e)[i]).collect();
        let mut deg = vec![0; h.n()];
        for v in heads {
            deg[v] += 1;
        }
        best = best.min(deg.into_iter().max().unwrap_or(0));
        let mut e = 0;
        loop {
            if e == idx.len() {
                return best;
            }
            idx[e] += 1;
            if idx[e] < h.edge(e).len() {
                break;
            }
            idx[e] = 0;
            e += 1;
        }
    }
}

fn criterion_4() -> Check {
    let mut rng = trial_rng(4, 0);
    let mut checked = 0;
    while checked < 150 {
        let h = random_hypergraph(&mut rng, 3..9, 9, 4);
        let product: u64 = h.edges().iter().map(|e| e.len() as u64).product();
        if product > 1_000_000 {
            continue;
        }
        let (k, phi) = ok(min_orientation(&h))?;
        let l = ok(density_exact(&h))?;
        let brute = brute_min_orientation(&h);
        ensure(
            k as u64 == l.ceil() && k == brute && phi.max_degree(h.n()) == k,
            format!("k* = {k}, ceil L = {}, brute = {brute} on {h}", l.ceil()),
        )?;
        checked += 1;
    }
    Ok(format!(
        "{checked} instances: k* = ceil(L) = brute-force minimum"
    ))
}

fn criterion_5() -> Check {
    let fano = gen_fano();
    ensure(ok(bound_gk(&fano))?.value == 3, "bound_gk(Fano) != 3")?;
    ensure(ok(chromatic_number(&fano))? == 3, "chi(Fano) != 3")?;
    for trial in 0..1000 {
        let mut rng = trial_rng(5, trial);
        let lists = ok(ListAssignment::new(
            (0..7)
                .map(|_| {
                    sample(&mut rng, 9, 3)
                        .into_iter()
                        .map(|c| c as u32 + 1)
                        .collect()
                })
                .collect(),
        ))?;
        let c = ok(list_color_gk(&fano, &lists))?;
        ensure(
            is_proper(&fano, &c) && c.respects(&lists),
            format!("bad coloring for {}", lists.to_json()),
        )?;
    }
    Ok("1000 random 3-list systems colored; chi = 3 so ch(Fano) = 3".into())
}

fn criterion_6() -> Check {
    let mut cases: Vec<(Hypergraph, Bipartition, Orientation)> = Vec::new();
    let edge = ok(Hypergraph::new(2, vec![vec![0, 1]]))?;
    let bip = ok(Bipartition::new(&edge, vec![Side::A, Side::B]))?;
    for head in [0, 1] {
        cases.push((
            edge.clone(),
            bip.clone(),
            ok(Orientation::new(&edge, vec![head]))?,
        ));
    }
    let (c4, bip) = ok(gen_complete(2, 2, 2))?;
    let (_, phi) = ok(min_orientation(&c4))?;
    cases.push((c4, bip, phi));

    let mut rng = trial_rng(6, 0);
    let mut random = 0;
    while random < 50 {
        let h = random_hypergraph(&mut rng, 3..8, 6, 4);
        let Some(bip) = h.find_bipartition() else {
            continue;
        };
        let heads = h
            .edges()
            .iter()
            .map(|e| e[rng.gen_range(0..e.len())])
            .collect();
        let phi = ok(Orientation::new(&h, heads))?;
        cases.push((h, bip, phi));
        random += 1;
    }
    for (h, bip, phi) in &cases {
        let r = ok(expand_check(h, bip, phi))?;
        ensure(r.passed(), format!("{r:?} on {h}"))?;
    }
    Ok(format!(
        "{} instances: F* coefficient = count >= 1, sign relation holds",
        cases.len()
    ))
}

fn criterion_7() -> Check {
    let mut lines = Vec::new();
    for (s, l) in [(4u64, 2u32), (16, 2), (8, 3)] {
        let p = split_probability(s, l);
        let mut rng = trial_rng(7, s * 10 + u64::from(l));
        let lists = ok(ListAssignment::new(
            (0..12)
                .map(|_| {
                    sample(&mut rng, 3 * l as usize, l as usize)
                        .into_iter()
                        .map(|c| c as u32 + 1)
                        .collect()
                })
                .collect(),
        ))?;
        let (a, b) = ok(expected_counts(&lists, p))?;
        ensure(
            ((b / a) - s as f64).abs() <= 1e-9 * s as f64,
            format!("B/A = {} for s = {s}", b / a),
        )?;
        let stats = sample_split_statistics(&lists, p, 100_000, 70 + s);
        ensure(
            stats.monochromatic.within(a, 3.0),
            format!(
                "(s,l)=({s},{l}) mono mean {:?} vs A {a}",
                stats.monochromatic
            ),
        )?;
        ensure(
            stats.dangerous_events.within(b, 3.0),
            format!(
                "(s,l)=({s},{l}) dangerous mean {:?} vs B {b}",
                stats.dangerous_events
            ),
        )?;
        let exact = ok(expected_dangerous_lists(&lists, p))?;
        ensure(
            stats.dangerous.within(exact, 3.0) && exact <= b,
            format!(
                "(s,l)=({s},{l}) distinct dangerous {:?} vs {exact}",
                stats.dangerous
            ),
        )?;
        lines.push(format!(
            "({s},{l}) A={a:.4} ~{:.4} B={b:.4} ~{:.4}",
            stats.monochromatic.mean, stats.dangerous_events.mean
        ));
    }
    Ok(lines.join("; "))
}

fn criterion_8() -> Check {
    let (k33, bip) = ok(gen_complete(2, 3, 3))?;
    let mut rng = trial_rng(8, 0);
    let lists = ok(ListAssignment::new(
        (0..6)
            .map(|_| {
                sample(&mut rng, 9, 3)
                    .into_iter()
                    .map(|c| c as u32 + 1)
                    .collect()
            })
            .collect(),
    ))?;
    let mut successes = 0;
    for seed in 0..1000 {
        let out = ok(random_split_color(&k33, &bip, &lists, 1, seed))?;
        if let Some(c) = out.coloring {
            ensure(
                is_proper(&k33, &c) && c.respects(&lists),
                "improper split coloring",
            )?;
            successes += 1;
        }
    }
    ensure(successes > 0, "no successful split in 1000 iterations")?;
    let rep = ok(split_color_experiment(&k33, &bip, &lists, 1000, 8))?;
    ensure(
        rep.category_total() == rep.trials && rep.colored > 0,
        format!("{rep:?}"),
    )?;
    Ok(format!(
        "{successes}/1000 single-split attempts colored, all verified"
    ))
}

fn criterion_9() -> Check {
    let rep = ok(lower_bound_experiment(2, 2, 6, 10_000, 9))?;
    ensure(rep.witness_fraction > 0.0, "no witness found")?;
    let (k33, bip) = ok(gen_complete(2, 3, 3))?;
    for w in &rep.witnesses {
        ensure(
            color_from_lists(&k33, w).is_none(),
            format!("witness {} is colorable", w.to_json()),
        )?;
        ensure(
            is_triangle_pattern(w, &bip),
            format!("witness {} has another shape", w.to_json()),
        )?;
    }
    Ok(format!(
        "witness fraction {} over {} trials, {} distinct witnesses confirmed",
        rep.witness_fraction,
        rep.trials,
        rep.witnesses.len()
    ))
}

fn criterion_10() -> Check {
    let mut rng = trial_rng(10, 0);
    let mut checked = 0;
    while checked < 60 {
        let h = random_hypergraph(&mut rng, 3..7, 6, 3);
        let chi = ok(chromatic_number(&h))?;
        let ch = ok(choice_number(&h))?;
        let mut upper = ok(bound_gk(&h))?.value as usize;
        let sparse = ok(bound_sparse(&h))?;
        if sparse.valid {
            upper = upper.min(sparse.value as usize);
        }
        ensure(
            chi <= ch && ch <= upper,
            format!("chi {chi}, ch {ch}, bound {upper} on {h}"),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} instances: chi <= ch <= min(bounds)"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("K33 choosability and witness", criterion_1),
        ("sparse bound on K33", criterion_2),
        ("4-uniform 4-regular hypergraph is 2-choosable", criterion_3),
        ("minimum orientation equals ceil of density", criterion_4),
        ("constructive degree bound on Fano", criterion_5),
        ("polynomial coefficient certificates", criterion_6),
        ("split closed forms against Monte-Carlo", criterion_7),
        ("palette-splitting colorer", criterion_8),
        ("dense lower-bound witnesses", criterion_9),
        ("cross-bound sanity", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Dense regime: complete 2-colorable hypergraphs and random palette splits.
//!
//! Upper side: split the palette into blue, red and neutral colors (neutral
//! with probability `p`, blue and red with `(1 - p) / 2` each). If no list is
//! entirely blue or entirely red and fewer than `s` lists miss blue or miss
//! red, an `s`-uniform 2-colorable hypergraph can be colored: side A takes
//! blue colors, side B red ones, and the few "dangerous" vertices take
//! neutral colors. With `p = (s^{1/l} - 1) / (s^{1/l} + 1)` this succeeds
//! with positive probability whenever `t < (1 + s^{1/l})^l / 4`.
//!
//! Lower side: random `l`-lists from `{1, ..., l^2}` on one part of
//! `K^s_{t/2,t/2}`, mirrored onto the other part, often admit no proper
//! coloring at all. [`lower_bound_experiment`] samples such systems and
//! reports the ones that certify `ch > l`.

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{is_proper, Bipartition, Coloring, Hypergraph, ListAssignment, Side};

pub const LOWER_BOUND_MAX_L: usize = 3;
pub const LOWER_BOUND_MAX_T: usize = 24;
/// Distinct witnesses kept in a report.
pub const MAX_REPORTED_WITNESSES: usize = 16;

/// Per-trial generator: ChaCha8 keyed by the experiment seed, one stream per
/// trial, so trials can be replayed or run in any order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `p = (s^{1/l} - 1) / (s^{1/l} + 1)`.
pub fn split_probability(s: u64, l: u32) -> f64 {
    let r = (s as f64).powf(1.0 / f64::from(l));
    (r - 1.0) / (r + 1.0)
}

fn check_sl(s: u64, l: u32) -> Result<()> {
    if s < 2 || l < 1 {
        return Err(Error::Invalid(format!(
            "need s >= 2 and l >= 1 (got s={s}, l={l})"
        )));
    }
    Ok(())
}

/// Exact truth of `t < (1 + s^{1/l})^l / 4`.
///
/// When `s` is a perfect `l`-th power the comparison is a plain integer
/// one. Otherwise `s^{1/l}` is irrational, equality is impossible, and the
/// root is bracketed by `R / 10^P <= s^{1/l} < (R + 1) / 10^P` with more
/// digits until both ends agree.
pub fn cond_ert_upper(s: u64, l: u32, t: u64) -> Result<bool> {
    check_sl(s, l)?;
    if t < 1 {
        return Err(Error::Invalid("t must be at least 1".into()));
    }
    let four_t = BigUint::from(4 * t);
    let root = BigUint::from(s).nth_root(l);
    if root.pow(l) == BigUint::from(s) {
        return Ok((root + 1u32).pow(l) > four_t);
    }
    let mut digits = 8u32;
    loop {
        let scale = BigUint::from(10u32).pow(digits);
        let r = (BigUint::from(s) * scale.pow(l)).nth_root(l);
        let target = &four_t * scale.pow(l);
        if (&scale + &r).pow(l) > target {
            return Ok(true);
        }
        if (&scale + &r + 1u32).pow(l) <= target {
            return Ok(false);
        }
        digits *= 2;
    }
}

/// Exact truth of `t <= sqrt(s) * 2^{l-2}`, i.e. `t^2 <= s * 4^{l-2}`.
pub fn cond_corollary(s: u64, l: u32, t: u64) -> Result<bool> {
    check_sl(s, l)?;
    if l < 2 {
        return Err(Error::Invalid("the corollary needs l >= 2".into()));
    }
    let holds = BigUint::from(t).pow(2) <= BigUint::from(s) * BigUint::from(4u32).pow(l - 2);
    // (1 + s^{1/l})^l >= sqrt(s) 2^l, so this condition implies the sharper one
    debug_assert!(!holds || cond_ert_upper(s, l, t).unwrap_or(false));
    Ok(holds)
}

/// Closed-form `(A, B)` for lists of common length `l`:
/// `A = 2((1-p)/2)^l |E(F)|` is the expected number of lists entirely blue
/// or entirely red, `B = 2((1+p)/2)^l |E(F)|` the expected number of
/// "missing blue" plus "missing red" events. `B` bounds the expected number
/// of dangerous lists from above; see [`expected_dangerous_lists`].
pub fn expected_counts(lists: &ListAssignment, p: f64) -> Result<(f64, f64)> {
    let l = common_length(lists)?;
    let t = lists.len() as f64;
    let a = 2.0 * ((1.0 - p) / 2.0).powi(l as i32) * t;
    let b = 2.0 * ((1.0 + p) / 2.0).powi(l as i32) * t;
    Ok((a, b))
}

/// Exact expected number of dangerous lists (no blue or no red):
/// `(2((1+p)/2)^l - p^l) |E(F)|`; all-neutral lists are counted once.
pub fn expected_dangerous_lists(lists: &ListAssignment, p: f64) -> Result<f64> {
    let l = common_length(lists)? as i32;
    Ok((2.0 * ((1.0 + p) / 2.0).powi(l) - p.powi(l)) * lists.len() as f64)
}

fn common_length(lists: &ListAssignment) -> Result<usize> {
    let sizes = lists.sizes();
    let Some(&l) = sizes.first() else {
        return Err(Error::Invalid("no lists".into()));
    };
    if sizes.iter().any(|&x| x != l) {
        return Err(Error::Invalid("lists of mixed lengths".into()));
    }
    Ok(l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColorClass {
    Blue,
    Red,
    Neutral,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PaletteSplit {
    pub class: BTreeMap<u32, ColorClass>,
    pub p: f64,
}

/// How one list fares under a split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ListStatus {
    pub has_blue: bool,
    pub has_red: bool,
    pub has_neutral: bool,
}

impl ListStatus {
    /// Entirely blue or entirely red.
    pub fn monochromatic(self) -> bool {
        !self.has_neutral && (self.has_blue != self.has_red)
    }

    /// No blue or no red.
    pub fn dangerous(self) -> bool {
        !self.has_blue || !self.has_red
    }
}

/// Counts for one split over a whole list system.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplitTally {
    pub monochromatic: usize,
    pub dangerous: usize,
    pub missing_blue: usize,
    pub missing_red: usize,
}

impl PaletteSplit {
    pub fn draw(palette: &[u32], p: f64, rng: &mut impl Rng) -> Self {
        let class = palette
            .iter()
            .map(|&c| {
                let u: f64 = rng.gen();
                let k = if u < p {
                    ColorClass::Neutral
                } else if u < p + (1.0 - p) / 2.0 {
                    ColorClass::Blue
                } else {
                    ColorClass::Red
                };
                (c, k)
            })
            .collect();
        PaletteSplit { class, p }
    }

    pub fn status(&self, list: &[u32]) -> ListStatus {
        let mut st = ListStatus {
            has_blue: false,
            has_red: false,
            has_neutral: false,
        };
        for c in list {
            match self.class[c] {
                ColorClass::Blue => st.has_blue = true,
                ColorClass::Red => st.has_red = true,
                ColorClass::Neutral => st.has_neutral = true,
            }
        }
        st
    }

    pub fn tally(&self, lists: &ListAssignment) -> SplitTally {
        let mut t = SplitTally::default();
        for l in lists.lists() {
            let st = self.status(l);
            t.monochromatic += usize::from(st.monochromatic());
            t.dangerous += usize::from(st.dangerous());
            t.missing_blue += usize::from(!st.has_blue);
            t.missing_red += usize::from(!st.has_red);
        }
        t
    }

    /// The coloring a successful split yields: blue on side A, red on side
    /// B, neutral on dangerous vertices. `None` if some vertex has no color
    /// of the required class.
    fn coloring(&self, bip: &Bipartition, lists: &ListAssignment) -> Option<Coloring> {
        (0..lists.len())
            .map(|v| {
                let st = self.status(lists.list(v));
                let want = if st.dangerous() {
                    ColorClass::Neutral
                } else if bip.side(v) == Side::A {
                    ColorClass::Blue
                } else {
                    ColorClass::Red
                };
                lists
                    .list(v)
                    .iter()
                    .copied()
                    .find(|c| self.class[c] == want)
            })
            .collect::<Option<Vec<u32>>>()
            .map(Coloring)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitVerdict {
    MonochromaticList,
    TooManyDangerous,
    Colored,
}

/// Result of [`random_split_color`], with the rejection trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitColorOutcome {
    pub coloring: Option<Coloring>,
    pub iterations: u64,
    pub rejected_monochromatic: u64,
    pub rejected_dangerous: u64,
    pub p: f64,
    pub seed: u64,
}

/// Shape of a hypergraph/list pair the palette splitting applies to:
/// `(s, l)` for an `s`-uniform hypergraph and lists of common length `l`.
fn split_setting(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
) -> Result<(usize, usize)> {
    bip.check(h)?;
    if lists.len() != h.n() {
        return Err(Error::Invalid(format!(
            "{} lists for {} vertices",
            lists.len(),
            h.n()
        )));
    }
    let s = h.uniformity().ok_or_else(|| {
        Error::Precondition("hypergraph must be uniform with at least one edge".into())
    })?;
    let l = common_length(lists).map_err(|e| Error::Precondition(e.to_string()))?;
    Ok((s, l))
}

/// One split attempt: the verdict, and the coloring when it succeeds.
pub fn split_attempt(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
    s: usize,
    split: &PaletteSplit,
) -> (SplitVerdict, Option<Coloring>) {
    let tally = split.tally(lists);
    if tally.monochromatic > 0 {
        return (SplitVerdict::MonochromaticList, None);
    }
    if tally.dangerous >= s {
        return (SplitVerdict::TooManyDangerous, None);
    }
    let c = split
        .coloring(bip, lists)
        .expect("a dangerous non-monochromatic list always holds a neutral color");
    assert!(
        is_proper(h, &c) && c.respects(lists),
        "split coloring must be proper with fewer than s dangerous lists"
    );
    (SplitVerdict::Colored, Some(c))
}

/// Draws up to `max_iters` palette splits with `p = split_probability(s, l)`
/// and returns the first one that yields a coloring.
pub fn random_split_color(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
    max_iters: u64,
    seed: u64,
) -> Result<SplitColorOutcome> {
    let (s, l) = split_setting(h, bip, lists)?;
    let p = split_probability(s as u64, l as u32);
    let palette = lists.palette();
    let mut rng = trial_rng(seed, 0);
    let mut out = SplitColorOutcome {
        coloring: None,
        iterations: 0,
        rejected_monochromatic: 0,
        rejected_dangerous: 0,
        p,
        seed,
    };
    while out.iterations < max_iters {
        out.iterations += 1;
        let split = PaletteSplit::draw(&palette, p, &mut rng);
        match split_attempt(h, bip, lists, s, &split) {
            (SplitVerdict::MonochromaticList, _) => out.rejected_monochromatic += 1,
            (SplitVerdict::TooManyDangerous, _) => out.rejected_dangerous += 1,
            (SplitVerdict::Colored, c) => {
                out.coloring = c;
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenseExperimentReport {
    pub experiment: String,
    pub s: usize,
    pub l: usize,
    pub t: usize,
    pub trials: u64,
    pub seed: u64,
    /// Split trials rejected for a monochromatic list.
    pub monochromatic: u64,
    /// Split trials rejected for `>= s` dangerous lists.
    pub dangerous: u64,
    /// Trials that produced a proper coloring.
    pub colored: u64,
    /// Random-list trials with no proper coloring.
    pub uncolorable: u64,
    pub witness_fraction: f64,
    pub empirical_a: Option<f64>,
    pub empirical_b: Option<f64>,
    pub closed_a: Option<f64>,
    pub closed_b: Option<f64>,
    pub witnesses: Vec<ListAssignment>,
}

impl DenseExperimentReport {
    fn empty(experiment: &str, s: usize, l: usize, t: usize, trials: u64, seed: u64) -> Self {
        DenseExperimentReport {
            experiment: experiment.into(),
            s,
            l,
            t,
            trials,
            seed,
            monochromatic: 0,
            dangerous: 0,
            colored: 0,
            uncolorable: 0,
            witness_fraction: 0.0,
            empirical_a: None,
            empirical_b: None,
            closed_a: None,
            closed_b: None,
            witnesses: Vec::new(),
        }
    }

    pub fn category_total(&self) -> u64 {
        self.monochromatic + self.dangerous + self.colored + self.uncolorable
    }
}

/// Independent single-split trials of the palette-splitting colorer,
/// recording each verdict and the mean tallies against `A` and `B`.
pub fn split_color_experiment(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
    trials: u64,
    seed: u64,
) -> Result<DenseExperimentReport> {
    let (s, l) = split_setting(h, bip, lists)?;
    let p = split_probability(s as u64, l as u32);
    let palette = lists.palette();
    let mut rep = DenseExperimentReport::empty("split-color", s, l, lists.len(), trials, seed);
    let (mut mono_sum, mut events_sum) = (0u64, 0u64);
    for trial in 0..trials {
        let split = PaletteSplit::draw(&palette, p, &mut trial_rng(seed, trial));
        let tally = split.tally(lists);
        mono_sum += tally.monochromatic as u64;
        events_sum += (tally.missing_blue + tally.missing_red) as u64;
        match split_attempt(h, bip, lists, s, &split).0 {
            SplitVerdict::MonochromaticList => rep.monochromatic += 1,
            SplitVerdict::TooManyDangerous => rep.dangerous += 1,
            SplitVerdict::Colored => rep.colored += 1,
        }
    }
    let (a, b) = expected_counts(lists, p)?;
    if trials > 0 {
        rep.empirical_a = Some(mono_sum as f64 / trials as f64);
        rep.empirical_b = Some(events_sum as f64 / trials as f64);
    }
    rep.closed_a = Some(a);
    rep.closed_b = Some(b);
    Ok(rep)
}

/// Sample mean and standard error of a per-split statistic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanEstimate {
    pub mean: f64,
    pub std_error: f64,
}

impl MeanEstimate {
    fn from_samples(sum: f64, sum_sq: f64, n: u64) -> Self {
        let nf = n as f64;
        let mean = sum / nf;
        let var = (sum_sq / nf - mean * mean).max(0.0) * nf / (nf - 1.0).max(1.0);
        MeanEstimate {
            mean,
            std_error: (var / nf).sqrt(),
        }
    }

    pub fn within(&self, target: f64, std_errors: f64) -> bool {
        (self.mean - target).abs() <= std_errors * self.std_error
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitStatistics {
    pub monochromatic: MeanEstimate,
    pub dangerous: MeanEstimate,
    /// Missing-blue plus missing-red events; its expectation is `B`.
    pub dangerous_events: MeanEstimate,
}

/// Monte-Carlo estimates of the per-split tallies over `splits` draws.
pub fn sample_split_statistics(
    lists: &ListAssignment,
    p: f64,
    splits: u64,
    seed: u64,
) -> SplitStatistics {
    let palette = lists.palette();
    let mut rng = trial_rng(seed, 0);
    let mut acc = [(0f64, 0f64); 3];
    for _ in 0..splits {
        let t = PaletteSplit::draw(&palette, p, &mut rng).tally(lists);
        let vals = [t.monochromatic, t.dangerous, t.missing_blue + t.missing_red];
        for (a, v) in acc.iter_mut().zip(vals) {
            a.0 += v as f64;
            a.1 += (v * v) as f64;
        }
    }
    let est = |i: usize| MeanEstimate::from_samples(acc[i].0, acc[i].1, splits);
    SplitStatistics {
        monochromatic: est(0),
        dangerous: est(1),
        dangerous_events: est(2),
    }
}

/// Proper coloring of `K^s_{nA,nB}` from lists, vertices `0..nA` on side A.
///
/// A coloring is proper iff no color `c` is used on both sides with
/// `count_A(c) + count_B(c) >= s`: exactly then `s` vertices of color `c`
/// meeting both parts form an edge. Backtracking keeps per-color counts.
pub fn complete_proper_exists(
    s: usize,
    n_a: usize,
    n_b: usize,
    lists: &ListAssignment,
) -> Result<Option<Coloring>> {
    if lists.len() != n_a + n_b {
        return Err(Error::Invalid(format!(
            "{} lists for {} vertices",
            lists.len(),
            n_a + n_b
        )));
    }
    let palette = lists.palette();
    let index: Vec<Vec<usize>> = lists
        .lists()
        .iter()
        .map(|l| {
            l.iter()
                .map(|c| palette.binary_search(c).expect("in palette"))
                .collect()
        })
        .collect();
    let mut counts = vec![[0usize; 2]; palette.len()];
    let mut chosen = vec![0usize; n_a + n_b];
    fn go(
        v: usize,
        s: usize,
        n_a: usize,
        index: &[Vec<usize>],
        counts: &mut [[usize; 2]],
        chosen: &mut [usize],
    ) -> bool {
        if v == index.len() {
            return true;
        }
        let side = usize::from(v >= n_a);
        for &c in &index[v] {
            counts[c][side] += 1;
            let [a, b] = counts[c];
            let bad = a >= 1 && b >= 1 && a + b >= s;
            if !bad {
                chosen[v] = c;
                if go(v + 1, s, n_a, index, counts, chosen) {
                    return true;
                }
            }
            counts[c][side] -= 1;
        }
        false
    }
    if go(0, s, n_a, &index, &mut counts, &mut chosen) {
        Ok(Some(Coloring(
            chosen.into_iter().map(|c| palette[c]).collect(),
        )))
    } else {
        Ok(None)
    }
}

/// Uniform `l`-subsets of `{1, ..., l^2}` on side A, copied to side B.
pub fn mirrored_lists(half: usize, l: usize, rng: &mut impl Rng) -> ListAssignment {
    let palette = l * l;
    let side: Vec<Vec<u32>> = (0..half)
        .map(|_| {
            sample(rng, palette, l)
                .into_iter()
                .map(|c| c as u32 + 1)
                .collect()
        })
        .collect();
    ListAssignment::new(side.iter().chain(side.iter()).cloned().collect())
        .expect("distinct sampled colors")
}

/// Samples mirrored random list systems on `K^s_{t/2,t/2}` and counts the
/// ones with no proper coloring; each is a certificate that
/// `ch(K^s_{t/2,t/2}) > l`.
pub fn lower_bound_experiment(
    s: usize,
    l: usize,
    t: usize,
    trials: u64,
    seed: u64,
) -> Result<DenseExperimentReport> {
    if s < 2 || l < 1 || t < 2 || !t.is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "need s >= 2, l >= 1 and even t >= 2 (got s={s}, l={l}, t={t})"
        )));
    }
    if l > LOWER_BOUND_MAX_L || t > LOWER_BOUND_MAX_T {
        return Err(Error::GuardExceeded(format!(
            "lower-bound experiment limited to l <= {LOWER_BOUND_MAX_L}, t <= {LOWER_BOUND_MAX_T}"
        )));
    }
    let half = t / 2;
    let mut rep = DenseExperimentReport::empty("lower-bound", s, l, t, trials, seed);
    for trial in 0..trials {
        let lists = mirrored_lists(half, l, &mut trial_rng(seed, trial));
        match complete_proper_exists(s, half, half, &lists)? {
            Some(_) => rep.colored += 1,
            None => {
                rep.uncolorable += 1;
                if rep.witnesses.len() < MAX_REPORTED_WITNESSES && !rep.witnesses.contains(&lists) {
                    rep.witnesses.push(lists);
                }
            }
        }
    }
    if trials > 0 {
        rep.witness_fraction = rep.uncolorable as f64 / trials as f64;
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub s: usize,
    pub l: usize,
    pub t: usize,
    pub trials: u64,
    pub witness_fraction: f64,
    pub seed: u64,
}

pub fn lower_bound_sweep(
    s: usize,
    l: usize,
    ts: impl IntoIterator<Item = usize>,
    trials: u64,
    seed: u64,
) -> Result<Vec<SweepRow>> {
    ts.into_iter()
        .map(|t| {
            let r = lower_bound_experiment(s, l, t, trials, seed)?;
            Ok(SweepRow {
                s,
                l,
                t,
                trials,
                witness_fraction: r.witness_fraction,
                seed,
            })
        })
        .collect()
}

/// CSV with header `s,l,t,trials,witness_fraction,seed`.
pub fn write_sweep_csv(rows: &[SweepRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Invalid(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Heuristic diagnostic only: `l^2 s ln(sT) - sT + s l^2` with
/// `T = t / (2 (s^{1/l} + 1)^l)`, the asymptotic feasibility expression with
/// its `o(1)` term dropped. Negative values mean the asymptotic argument
/// would apply. Nothing is gated on it.
pub fn asymptotic_margin_heuristic(s: u64, l: u32, t: u64) -> f64 {
    let sf = s as f64;
    let lf = f64::from(l);
    let big_t = t as f64 / (2.0 * (sf.powf(1.0 / lf) + 1.0).powf(lf));
    lf * lf * sf * (sf * big_t).ln() - sf * big_t + sf * lf * lf
}

//! Coefficient certificates for list colorings of 2-colorable hypergraphs.
//!
//! Each edge `e` gets a spanning tree `T_e` on its vertices whose pairs
//! cross the 2-coloring. With one variable per vertex (`x_a` on side A,
//! `y_b` on side B):
//!
//! ```text
//! F(x, y)  = prod_e sum_{(a,b) in T_e} (x_a - y_b)
//! F*(x, y) = prod_e sum_{(a,b) in T_e} (x_a + y_b)
//! ```
//!
//! A nonzero coefficient of `prod_v z_v^{d(v)}` in `F` certifies that lists
//! of size `d(v) + 1` suffice. Both polynomials have the same coefficients
//! up to the sign `(-1)^{sum_B d(b)}`, and `F*` has no cancellation, so the
//! coefficient for an orientation's in-degrees is a positive count.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Bipartition, Hypergraph, Orientation, Side};

/// Edge limit for full polynomial expansion.
pub const EXPANSION_EDGE_GUARD: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingTree {
    /// `(a, b)` with `a` on side A and `b` on side B.
    pub pairs: Vec<(usize, usize)>,
}

/// Per-vertex exponents of the target monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialTarget {
    pub exponent: Vec<usize>,
}

impl MonomialTarget {
    pub fn from_orientation(h: &Hypergraph, phi: &Orientation) -> Self {
        MonomialTarget {
            exponent: phi.degrees(h.n()),
        }
    }

    pub fn total_degree(&self) -> usize {
        self.exponent.iter().sum()
    }

    /// `(-1)^{sum of exponents on side B}`: the factor relating the
    /// coefficient in `F` to the one in `F*`.
    pub fn sign(&self, bip: &Bipartition) -> i8 {
        let b: usize = (0..self.exponent.len())
            .filter(|&v| bip.side(v) == Side::B)
            .map(|v| self.exponent[v])
            .sum();
        if b.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// The double star on an edge: anchors `a0` (least A-vertex) and `b0`
/// (least B-vertex), the pair `(a0, b0)`, every other A-vertex joined to
/// `b0` and every other B-vertex joined to `a0`.
pub fn crossing_tree(edge: &[usize], bip: &Bipartition) -> Result<CrossingTree> {
    let a: Vec<usize> = edge
        .iter()
        .copied()
        .filter(|&v| bip.side(v) == Side::A)
        .collect();
    let b: Vec<usize> = edge
        .iter()
        .copied()
        .filter(|&v| bip.side(v) == Side::B)
        .collect();
    let (Some(&a0), Some(&b0)) = (a.iter().min(), b.iter().min()) else {
        return Err(Error::Invalid(format!(
            "edge {edge:?} lies inside one side"
        )));
    };
    let mut pairs = vec![(a0, b0)];
    pairs.extend(a.iter().filter(|&&x| x != a0).map(|&x| (x, b0)));
    pairs.extend(b.iter().filter(|&&y| y != b0).map(|&y| (a0, y)));
    Ok(CrossingTree { pairs })
}

/// Tree degree of every vertex of each edge: the coefficient of its
/// variable in the edge's factor of `F*`.
fn factor_weights(h: &Hypergraph, bip: &Bipartition) -> Result<Vec<Vec<(usize, u64)>>> {
    bip.check(h)?;
    h.edges()
        .iter()
        .map(|e| {
            let tree = crossing_tree(e, bip)?;
            let mut w: BTreeMap<usize, u64> = BTreeMap::new();
            for (a, b) in tree.pairs {
                *w.entry(a).or_default() += 1;
                *w.entry(b).or_default() += 1;
            }
            Ok(w.into_iter().collect())
        })
        .collect()
}

/// Coefficient of the orientation's in-degree monomial in `F*`: the number
/// of ways to pick one tree pair per edge and one endpoint of it so that
/// each vertex is picked `d(v)` times.
pub fn coefficient_count(h: &Hypergraph, bip: &Bipartition, phi: &Orientation) -> Result<BigUint> {
    let phi = Orientation::new(h, phi.heads().to_vec())?;
    coefficient_of(h, bip, &MonomialTarget::from_orientation(h, &phi))
}

/// Coefficient of an arbitrary monomial in `F*`, by depth-first counting
/// over edges memoized on the remaining exponents.
pub fn coefficient_of(
    h: &Hypergraph,
    bip: &Bipartition,
    target: &MonomialTarget,
) -> Result<BigUint> {
    if target.exponent.len() != h.n() {
        return Err(Error::Invalid(
            "target exponent length differs from vertex count".into(),
        ));
    }
    let weights = factor_weights(h, bip)?;
    if target.total_degree() != h.edge_count() {
        return Ok(BigUint::from(0u32));
    }
    // edges after position i that contain v, for pruning
    let m = h.edge_count();
    let mut later = vec![vec![0usize; h.n()]; m + 1];
    for i in (0..m).rev() {
        later[i] = later[i + 1].clone();
        for &v in h.edge(i) {
            later[i][v] += 1;
        }
    }
    let mut remaining = target.exponent.clone();
    let mut memo = HashMap::new();
    Ok(count_from(0, &weights, &later, &mut remaining, &mut memo))
}

fn count_from(
    i: usize,
    weights: &[Vec<(usize, u64)>],
    later: &[Vec<usize>],
    remaining: &mut Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) -> BigUint {
    if i == weights.len() {
        return BigUint::from(1u32);
    }
    if remaining.iter().zip(&later[i]).any(|(r, l)| r > l) {
        return BigUint::from(0u32);
    }
    let key = (i, remaining.clone());
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let mut total = BigUint::from(0u32);
    for &(v, w) in &weights[i] {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        total += count_from(i + 1, weights, later, remaining, memo) * w;
        remaining[v] += 1;
    }
    memo.insert(key, total.clone());
    total
}

/// Sparse polynomial: exponent vector to coefficient.
pub type Polynomial = BTreeMap<Vec<u16>, BigInt>;

/// Fully expands `F` (`negate_b = true`) or `F*` (`negate_b = false`).
pub fn expand(h: &Hypergraph, bip: &Bipartition, negate_b: bool) -> Result<Polynomial> {
    let m = h.edge_count();
    if m > EXPANSION_EDGE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{m} edges exceed the expansion limit of {EXPANSION_EDGE_GUARD}"
        )));
    }
    bip.check(h)?;
    let mut poly: Polynomial = BTreeMap::from([(vec![0u16; h.n()], BigInt::from(1))]);
    for e in h.edges() {
        let tree = crossing_tree(e, bip)?;
        // factor as a list of (variable, coefficient)
        let mut factor: Vec<(usize, i64)> = Vec::new();
        for (a, b) in tree.pairs {
            factor.push((a, 1));
            factor.push((b, if negate_b { -1 } else { 1 }));
        }
        let mut next: Polynomial = BTreeMap::new();
        for (exp, coef) in &poly {
            for &(v, c) in &factor {
                let mut e2 = exp.clone();
                e2[v] += 1;
                *next.entry(e2).or_insert_with(|| BigInt::from(0)) += coef * c;
            }
        }
        next.retain(|_, c| *c != BigInt::from(0));
        poly = next;
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionCheck {
    pub coef_fstar: BigInt,
    pub coef_f: BigInt,
    /// `coef_f == (-1)^{sum_B d(b)} * coef_fstar`.
    pub sign_ok: bool,
    /// `coef_fstar` equals [`coefficient_count`].
    pub count_ok: bool,
    /// Every coefficient of `F*` is nonnegative.
    pub fstar_nonnegative: bool,
}

impl ExpansionCheck {
    pub fn passed(&self) -> bool {
        self.sign_ok
            && self.count_ok
            && self.fstar_nonnegative
            && self.coef_fstar >= BigInt::from(1)
    }
}

/// Expands both polynomials and checks the sign relation and the count.
pub fn expand_check(
    h: &Hypergraph,
    bip: &Bipartition,
    phi: &Orientation,
) -> Result<ExpansionCheck> {
    let phi = Orientation::new(h, phi.heads().to_vec())?;
    let target = MonomialTarget::from_orientation(h, &phi);
    let key: Vec<u16> = target.exponent.iter().map(|&d| d as u16).collect();
    let f = expand(h, bip, true)?;
    let fstar = expand(h, bip, false)?;
    let zero = BigInt::from(0);
    let coef_f = f.get(&key).cloned().unwrap_or_else(|| zero.clone());
    let coef_fstar = fstar.get(&key).cloned().unwrap_or_else(|| zero.clone());
    let count = BigInt::from(coefficient_count(h, bip, &phi)?);
    Ok(ExpansionCheck {
        sign_ok: coef_f == &coef_fstar * BigInt::from(target.sign(bip)),
        count_ok: coef_fstar == count,
        fstar_nonnegative: fstar.values().all(|c| *c >= zero),
        coef_fstar,
        coef_f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_complete;
    use crate::orientation::min_orientation;

    fn edge_bip(h: &Hypergraph, sides: &[Side]) -> Bipartition {
        Bipartition::new(h, sides.to_vec()).unwrap()
    }

    #[test]
    fn tree_examples() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let bip = edge_bip(&h, &[Side::A, Side::A, Side::B, Side::B]);
        assert!(crossing_tree(&[0, 1], &bip).is_err());
        assert_eq!(
            crossing_tree(&[0, 1, 2, 3], &bip).unwrap().pairs,
            vec![(0, 2), (1, 2), (0, 3)]
        );

        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let bip = edge_bip(&h, &[Side::A, Side::B, Side::B]);
        assert_eq!(
            crossing_tree(&[0, 1, 2], &bip).unwrap().pairs,
            vec![(0, 1), (0, 2)]
        );
        assert_eq!(crossing_tree(&[0, 1], &bip).unwrap().pairs, vec![(0, 1)]);
        assert!(crossing_tree(&[1, 2], &bip).is_err());
    }

    #[test]
    fn single_edge_coefficients() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let bip = edge_bip(&h, &[Side::A, Side::B]);
        let to_a = Orientation::new(&h, vec![0]).unwrap();
        let to_b = Orientation::new(&h, vec![1]).unwrap();
        assert_eq!(
            coefficient_count(&h, &bip, &to_a).unwrap(),
            BigUint::from(1u32)
        );
        let c = expand_check(&h, &bip, &to_b).unwrap();
        assert_eq!(
            (c.coef_fstar.clone(), c.coef_f.clone()),
            (BigInt::from(1), BigInt::from(-1))
        );
        assert!(c.passed());
        let c = expand_check(&h, &bip, &to_a).unwrap();
        assert_eq!(c.coef_f, BigInt::from(1));
    }

    #[test]
    fn four_cycle_has_coefficient_two() {
        let (c4, bip) = gen_complete(2, 2, 2).unwrap();
        // edges (0,2),(0,3),(1,2),(1,3); a cyclic orientation 0->2->1->3->0
        let phi = Orientation::new(&c4, vec![2, 0, 1, 3]).unwrap();
        assert_eq!(phi.degrees(4), vec![1; 4]);
        assert_eq!(
            coefficient_count(&c4, &bip, &phi).unwrap(),
            BigUint::from(2u32)
        );
        // oracle: brute-force over the 2^4 term choices of the product
        let mut brute = 0;
        for mask in 0u32..16 {
            let mut deg = [0; 4];
            for (i, e) in c4.edges().iter().enumerate() {
                deg[e[(mask >> i & 1) as usize]] += 1;
            }
            if deg == [1; 4] {
                brute += 1;
            }
        }
        assert_eq!(brute, 2);
        assert!(expand_check(&c4, &bip, &phi).unwrap().passed());
    }

    #[test]
    fn k33_min_orientation_coefficient_positive() {
        let (k33, bip) = gen_complete(2, 3, 3).unwrap();
        let (_, phi) = min_orientation(&k33).unwrap();
        assert!(coefficient_count(&k33, &bip, &phi).unwrap() >= BigUint::from(1u32));
        assert!(expand_check(&k33, &bip, &phi).unwrap().passed());
    }

    #[test]
    fn wrong_degree_target_is_zero_and_guard_applies() {
        let (k33, bip) = gen_complete(2, 3, 3).unwrap();
        let t = MonomialTarget {
            exponent: vec![0; 6],
        };
        assert_eq!(coefficient_of(&k33, &bip, &t).unwrap(), BigUint::from(0u32));
        let (big, bip) = gen_complete(2, 4, 4).unwrap();
        assert!(matches!(
            expand(&big, &bip, false),
            Err(Error::GuardExceeded(_))
        ));
    }
}

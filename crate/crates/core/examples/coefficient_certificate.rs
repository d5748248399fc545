//! Polynomial certificates: the coefficient of the orientation monomial in
//! the product over edges of tree-pair sums, checked against full expansion.
//!
//! cargo run --release --example coefficient_certificate

use hyperchoose::generators::gen_complete;
use hyperchoose::nullstellensatz::{
    coefficient_count, crossing_tree, expand_check, MonomialTarget,
};
use hyperchoose::orientation::min_orientation;

fn main() -> hyperchoose::Result<()> {
    for (s, a, b) in [(2, 2, 2), (2, 3, 3), (3, 2, 3)] {
        let (h, bip) = gen_complete(s, a, b)?;
        let (k, phi) = min_orientation(&h)?;
        let target = MonomialTarget::from_orientation(&h, &phi);
        let coef = coefficient_count(&h, &bip, &phi)?;
        println!(
            "K^{s}_({a},{b}): exponents {:?}, coefficient {coef}, sign {}, so {}-choosable",
            target.exponent,
            target.sign(&bip),
            k + 1
        );
        println!(
            "  tree of the first edge {:?}",
            crossing_tree(h.edge(0), &bip)?.pairs
        );
        if h.edge_count() <= 12 {
            let check = expand_check(&h, &bip, &phi)?;
            println!(
                "  expansion: F* coefficient {}, F coefficient {}, passed {}",
                check.coef_fstar,
                check.coef_f,
                check.passed()
            );
        }
    }
    Ok(())
}

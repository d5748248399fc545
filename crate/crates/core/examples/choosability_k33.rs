//! Exact choosability: K33 is not 2-choosable, the adversarial lists are
//! recovered, and its choice number is 3.
//!
//! cargo run --release --example choosability_k33

use hyperchoose::choosability::{choice_number, color_from_lists, is_f_choosable, is_k_choosable};
use hyperchoose::generators::{gen_complete, gen_cycle};

fn main() -> hyperchoose::Result<()> {
    let (k33, _) = gen_complete(2, 3, 3)?;
    let two = is_k_choosable(&k33, 2)?;
    let w = two.witness.expect("K33 is not 2-choosable");
    println!(
        "K33 2-choosable: {} ({} list systems examined)",
        two.choosable, two.lists_examined
    );
    println!("bad lists: {}", w.to_json());
    println!("coloring from them: {:?}", color_from_lists(&k33, &w));
    println!("K33 3-choosable: {}", is_k_choosable(&k33, 3)?.choosable);
    println!("ch(K33) = {}", choice_number(&k33)?);

    let mixed = is_f_choosable(&k33, &[2, 2, 2, 3, 3, 3])?;
    println!("K33 with f = (2,2,2,3,3,3): choosable {}", mixed.choosable);

    for n in [4, 5, 6] {
        println!("ch(C{n}) = {}", choice_number(&gen_cycle(n)?)?);
    }
    Ok(())
}

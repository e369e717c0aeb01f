//! Truncated free products and separation of distinct alternating words.

use sgrp::catalog;
use sgrp::freeprod::{separate, truncated_free_product, AlternatingForm, Separation};

fn main() {
    let e = catalog::trivial();
    let p = truncated_free_product(&[e.clone(), e], 3).unwrap();
    println!("two trivial factors, cap 3: {} elements", p.result().order());
    for x in p.result().elements() {
        println!("  {}", p.result().name(x));
    }

    let factors = [catalog::cyclic_group(2), catalog::trivial()];
    let g = factors[0].element_by_name("g").unwrap();
    let u = AlternatingForm::new(vec![(0, g), (1, 0), (0, g)]).unwrap();
    let v = AlternatingForm::new(vec![(0, g), (1, 0), (0, 0)]).unwrap();
    match separate(&u, &v, &factors).unwrap() {
        Separation::Equal => println!("equal"),
        Separation::Separated { product, u, v } => println!(
            "separated in the cap-{} truncation of order {}: {} vs {}",
            product.cap(),
            product.result().order(),
            product.result().name(u),
            product.result().name(v)
        ),
    }
}

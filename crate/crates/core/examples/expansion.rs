//! Expansion of the 2-element semilattice: classes, their representatives
//! and signatures, and a cross-check against brute-force enumeration.

use sgrp::catalog;
use sgrp::kr::compare_with_oracle;
use sgrp::{kr_expand, Budget, GeneratingMap};

fn main() {
    let s = catalog::semilattice2();
    let phi = GeneratingMap::identity(&s);
    let exp = kr_expand(&s, &phi, &Budget::default()).unwrap();

    println!("|S| = {}, |S_KR| = {}", s.order(), exp.order());
    for c in exp.result().elements() {
        let sig = exp.class_signature(c);
        println!(
            "{:>8}  image {}  transitions {:?}  idempotent {}",
            exp.result().name(c),
            s.name(sig.image),
            sig.transition_slots(),
            exp.result().is_idempotent(c)
        );
    }

    let cmp = compare_with_oracle(&exp, exp.order() + 1);
    println!("oracle over {} words up to length {}: match = {}", cmp.words, cmp.max_len, cmp.matches());

    let w = phi.parse_word("abba").unwrap();
    let c = exp.class_of(&w).unwrap();
    println!("[abba] = {} which projects to {}", exp.result().name(c), s.name(exp.projection().apply(c)));
}

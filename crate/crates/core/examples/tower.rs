//! Iterated expansions of the 2-element semilattice: level sizes, absorption
//! by the ω-power of `b`, and the bounded cancellativity probe.

use sgrp::analysis::{check_absorption, check_tower_lsc, tower_coherence};
use sgrp::catalog;
use sgrp::{kr_tower, Budget, GeneratingMap};

fn main() {
    let s = catalog::semilattice2();
    let phi = GeneratingMap::identity(&s);
    let tower = kr_tower(&s, &phi, 2, &Budget::default()).unwrap();
    for n in 0..tower.len() {
        println!("level {n}: order {}", tower.level(n).order());
    }
    println!("connecting maps coherent: {}", tower_coherence(&tower).passed);

    let b = phi.letter_index("b").unwrap();
    let report = check_absorption(&tower, b, 6);
    for l in &report.levels {
        println!("level {}: z = {}, in minimal ideal {}, absorbs {} words: {}", l.level, tower.level(l.level).name(l.z), l.in_minimal_ideal, l.words_checked, l.failure.is_none());
    }
    for l in check_tower_lsc(&tower, 3) {
        println!("level {}: {} cancellation violations among words of length <= 3", l.level, l.violations());
    }

    let small = kr_tower(&s, &phi, 3, &Budget::new(50_000)).unwrap();
    println!("with a 50k step budget: {} levels, stopped: {:?}", small.len(), small.budget_error());
}

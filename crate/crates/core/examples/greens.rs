//! Green's relations, idempotents and the minimal ideal of a few small
//! semigroups.

use sgrp::catalog;
use sgrp::FiniteSemigroup;

fn show(label: &str, s: &FiniteSemigroup) {
    let g = s.greens();
    let names = |xs: &[usize]| xs.iter().map(|&x| s.name(x)).collect::<Vec<_>>().join(" ");
    println!("{label} (order {})", s.order());
    println!("  idempotents: {}", names(&s.idempotents()));
    for &j in g.j_classes_top_down() {
        let kind = if g.j_regular[j] { "regular" } else { "null" };
        println!("  J-class [{}] {kind}", names(&g.j_classes[j]));
    }
    println!("  minimal ideal: {}", names(&s.minimal_ideal()));
    println!("  completely simple: {}", s.is_completely_simple());
}

fn main() {
    show("Z2 with zero", &catalog::z_n_zero(2));
    show("2-element semilattice", &catalog::semilattice2());
    let z2 = catalog::cyclic_group(2);
    let rees = FiniteSemigroup::rees_matrix(&z2, &[vec![0, 0], vec![0, 1]]).unwrap();
    show("Rees matrix over Z2, 2x2 sandwich", &rees);
    show("monogenic, index 3 period 2", &catalog::monogenic(3, 2));
}

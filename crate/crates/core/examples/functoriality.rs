//! Homomorphisms induced between expansions: collapsing the semilattice onto
//! the trivial semigroup, and the map `a ↦ iⁿ a iⁿ` into the expansion of
//! `S^I`.

use sgrp::catalog;
use sgrp::{induced_hom, kr_expand, Budget, GeneratingMap, Homomorphism, Word};

fn main() {
    let s = catalog::semilattice2();
    let phi = GeneratingMap::identity(&s);
    let exp = kr_expand(&s, &phi, &Budget::default()).unwrap();
    let letters: Vec<Word> = (0..phi.len()).map(Word::letter).collect();

    let t = catalog::trivial();
    let psi = GeneratingMap::from_targets(&t, vec![0, 0]).unwrap();
    let exp_t = kr_expand(&t, &psi, &Budget::default()).unwrap();
    let collapse = Homomorphism::new(&s, &t, vec![0, 0]).unwrap();
    let big = induced_hom(&exp, &exp_t, &collapse, &letters).unwrap();
    println!("collapse: {} classes onto {} (onto: {})", exp.order(), exp_t.order(), big.is_onto());

    let si = s.adjoin_identity();
    let mut names = phi.letters().to_vec();
    names.push("i".into());
    let mut targets = phi.targets().to_vec();
    targets.push(si.identity_element().unwrap());
    let psi_i = GeneratingMap::new(&si, names, targets).unwrap();
    let exp_i = kr_expand(&si, &psi_i, &Budget::default()).unwrap();
    let n = exp_i.result().exponent();
    let i = Word::letter(phi.len()).repeat(n);
    let alpha: Vec<Word> = (0..phi.len()).map(|a| i.concat(&Word::letter(a)).concat(&i)).collect();
    let inclusion = Homomorphism::new(&s, &si, s.elements().collect()).unwrap();
    let big = induced_hom(&exp, &exp_i, &inclusion, &alpha).unwrap();
    println!("a -> i^{n} a i^{n}: {} classes into {} (injective: {})", exp.order(), exp_i.order(), big.is_injective());
    for x in exp.result().elements() {
        println!("    {} -> {}", exp.result().name(x), exp_i.result().name(big.apply(x)));
    }
}

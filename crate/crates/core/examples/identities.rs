//! Checking identities on semigroups and on the idempotent fibers of the
//! expansion's projection.

use sgrp::analysis::is_v_morphism;
use sgrp::catalog;
use sgrp::{kr_expand, Budget, GeneratingMap, Identity};

fn main() {
    let ids: Vec<Identity> = ["xyx=x", "xy=yx", "x^w=x^(w+1)", "x^w y x^w = x^w"].iter().map(|t| t.parse().unwrap()).collect();
    for (name, s) in [
        ("2x2 rectangular band", catalog::rectangular_band(2, 2)),
        ("Z3", catalog::cyclic_group(3)),
        ("null semigroup", catalog::null_semigroup()),
    ] {
        for id in &ids {
            match id.counterexample(&s) {
                None => println!("{name} satisfies {id}"),
                Some(w) => println!("{name} fails {id} at {:?}", w.assignment),
            }
        }
    }

    let s = catalog::z_n_zero(3);
    let exp = kr_expand(&s, &GeneratingMap::identity(&s), &Budget::default()).unwrap();
    let xyz: Identity = "xyz=xz".parse().unwrap();
    let r = is_v_morphism(exp.result(), &s, exp.projection(), &[xyz]);
    println!("fibers of the projection onto Z3 with zero satisfy xyz=xz: {}", r.verdict);
}

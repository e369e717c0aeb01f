//! A copy of a completely simple J-class inside an expansion: the
//! subsemigroup on which the projection becomes an isomorphism.

use sgrp::analysis::cs_retraction;
use sgrp::catalog;
use sgrp::{kr_expand, Budget, GeneratingMap};

fn main() {
    let s = catalog::rectangular_band(2, 2);
    let exp = kr_expand(&s, &GeneratingMap::identity(&s), &Budget::default()).unwrap();
    let k: Vec<usize> = s.elements().collect();
    let r = cs_retraction(exp.result(), &s, exp.projection(), &k).unwrap();
    println!("expansion of order {}, J-class of size {} over the band", exp.order(), r.j_class.len());
    for (x, lift) in r.lift {
        println!("  {} <- {}", s.name(x), exp.result().name(lift));
    }
}

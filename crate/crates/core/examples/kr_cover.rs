//! Decides which small semigroups are KR-covers, printing the section θ when
//! one exists.

use sgrp::analysis::is_kr_cover;
use sgrp::catalog;
use sgrp::{Budget, FiniteSemigroup};

fn main() {
    let z2 = catalog::cyclic_group(2);
    let cases = [
        ("2-element semilattice", catalog::semilattice2()),
        ("Z2 with zero", catalog::z_n_zero(2)),
        ("Z3 with zero", catalog::z_n_zero(3)),
        ("2x2 rectangular band", catalog::rectangular_band(2, 2)),
        ("Rees matrix over Z2", FiniteSemigroup::rees_matrix(&z2, &[vec![0, 0], vec![0, 1]]).unwrap()),
        ("null semigroup", catalog::null_semigroup()),
    ];
    for (name, s) in cases {
        let r = is_kr_cover(&s, &Budget::default()).unwrap();
        println!("{name}: {} (expansion order {}, {} search steps)", r.verdict, r.expansion_order, r.search_nodes);
        if let Some(theta) = r.theta {
            for (x, t) in theta.iter().enumerate() {
                println!("    θ({}) = #{t}", s.name(x));
            }
        }
    }
}

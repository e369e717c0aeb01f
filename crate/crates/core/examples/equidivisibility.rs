//! Equidivisibility and letter super-cancellativity, with witnesses.

use sgrp::analysis::{admits_refinement, is_equidivisible, is_letter_super_cancellative};
use sgrp::catalog;
use sgrp::GeneratingMap;

fn main() {
    for (name, s) in [
        ("Z2 with zero", catalog::z_n_zero(2)),
        ("null semigroup", catalog::null_semigroup()),
        ("2x3 rectangular band", catalog::rectangular_band(2, 3)),
        ("monogenic, index 3", catalog::monogenic(3, 1)),
    ] {
        let r = is_equidivisible(&s);
        print!("{name}: equidivisible = {}", r.verdict);
        if let Some(q) = r.witness {
            let n = |x| s.name(x);
            print!("  ({}·{} = {}·{}, refinable: {})", n(q.u), n(q.v), n(q.x), n(q.y), admits_refinement(&s, q));
        }
        println!();
        let lsc = is_letter_super_cancellative(&s, &GeneratingMap::identity(&s));
        println!("    letter super-cancellative = {} {:?}", lsc.verdict, lsc.witness);
    }
}

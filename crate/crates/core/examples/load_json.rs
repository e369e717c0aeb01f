//! Loads a semigroup file (default `data/semilattice.json`) and prints its
//! expansion in the JSON exchange format.

use std::path::PathBuf;

use sgrp::json::{load_semigroup, ExpansionFile};
use sgrp::{kr_expand, Budget};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/semilattice.json"));
    let loaded = match load_semigroup(&path) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    };
    let exp = kr_expand(&loaded.semigroup, &loaded.generating_map(), &Budget::default()).unwrap();
    println!("{}", serde_json::to_string_pretty(&ExpansionFile::new(&exp)).unwrap());
}

//! Two-sided Cayley graph of the trivial semigroup on one letter, printed as
//! Graphviz. Pipe into `dot -Tsvg` to render; transition edges are bold.

use sgrp::cayley::DotOptions;
use sgrp::catalog;
use sgrp::{GeneratingMap, TwoSidedCayleyGraph, Word};

fn main() {
    let s = catalog::trivial();
    let phi = GeneratingMap::from_targets(&s, vec![0]).unwrap();
    let graph = TwoSidedCayleyGraph::build(&s, &phi).unwrap();

    eprintln!("{} vertices, {} edges, {} transition edges", graph.vertex_count(), graph.edge_count(), graph.transition_edges().len());
    for len in 1..=3 {
        let w = Word::letter(0).repeat(len);
        eprintln!("T(p_{}) = {:?}", phi.format_word(w.letters()), graph.transition_set(&w).unwrap());
    }

    let options = DotOptions { only_reachable: std::env::args().any(|a| a == "--only-reachable"), graph_name: None };
    print!("{}", graph.export_dot(&options));
}

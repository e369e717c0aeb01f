//! Green's relations via strongly connected components of the one- and
//! two-sided Cayley graphs on all elements.

use serde::Serialize;

use crate::graph::{classes_from_labels, Digraph};
use crate::semigroup::{Element, FiniteSemigroup};

/// Green's R-, L-, J- and H-classes of a finite semigroup.
///
/// Every class list is sorted by least element, and each class is sorted.
#[derive(Debug, Clone, Serialize)]
pub struct GreenData {
    pub r_classes: Vec<Vec<Element>>,
    pub l_classes: Vec<Vec<Element>>,
    pub j_classes: Vec<Vec<Element>>,
    pub h_classes: Vec<Vec<Element>>,
    /// Whether each J-class contains an idempotent.
    pub j_regular: Vec<bool>,
    #[serde(skip)]
    r_of: Vec<usize>,
    #[serde(skip)]
    l_of: Vec<usize>,
    #[serde(skip)]
    j_of: Vec<usize>,
    #[serde(skip)]
    h_of: Vec<usize>,
    /// `below[a][b]`: J-class `b` lies in the ideal generated by class `a`.
    #[serde(skip)]
    below: Vec<Vec<bool>>,
    /// J-classes listed so that a class comes before every class below it.
    #[serde(skip)]
    top_down: Vec<usize>,
}

fn labels_to_index(classes: &[Vec<Element>], n: usize) -> Vec<usize> {
    let mut of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            of[x] = i;
        }
    }
    of
}

impl GreenData {
    pub fn r_class_of(&self, x: Element) -> usize {
        self.r_of[x]
    }

    pub fn l_class_of(&self, x: Element) -> usize {
        self.l_of[x]
    }

    pub fn j_class_of(&self, x: Element) -> usize {
        self.j_of[x]
    }

    pub fn h_class_of(&self, x: Element) -> usize {
        self.h_of[x]
    }

    pub fn r_equivalent(&self, x: Element, y: Element) -> bool {
        self.r_of[x] == self.r_of[y]
    }

    pub fn l_equivalent(&self, x: Element, y: Element) -> bool {
        self.l_of[x] == self.l_of[y]
    }

    pub fn j_equivalent(&self, x: Element, y: Element) -> bool {
        self.j_of[x] == self.j_of[y]
    }

    /// `x ∈ S^I y S^I`.
    pub fn j_below(&self, x: Element, y: Element) -> bool {
        self.below[self.j_of[y]][self.j_of[x]]
    }

    /// J-class indices ordered from the top of the J-order down.
    pub fn j_classes_top_down(&self) -> &[usize] {
        &self.top_down
    }
}

impl FiniteSemigroup {
    pub fn greens(&self) -> GreenData {
        let n = self.order();
        let right = Digraph::from_edges(n, self.elements().flat_map(|x| self.elements().map(move |s| (x, self.mul(x, s)))));
        let left = Digraph::from_edges(n, self.elements().flat_map(|x| self.elements().map(move |s| (x, self.mul(s, x)))));
        let both = Digraph::from_edges(
            n,
            self.elements()
                .flat_map(|x| self.elements().flat_map(move |s| [(x, self.mul(x, s)), (x, self.mul(s, x))])),
        );
        let r_classes = classes_from_labels(&right.scc());
        let l_classes = classes_from_labels(&left.scc());
        let j_scc = both.scc();
        let j_classes = classes_from_labels(&j_scc);
        let r_of = labels_to_index(&r_classes, n);
        let l_of = labels_to_index(&l_classes, n);
        let j_of = labels_to_index(&j_classes, n);
        let h_labels: Vec<usize> = (0..n).map(|x| r_of[x] * l_classes.len() + l_of[x]).collect();
        let h_classes = classes_from_labels(&h_labels);
        let h_of = labels_to_index(&h_classes, n);
        let j_regular = j_classes.iter().map(|c| c.iter().any(|&x| self.is_idempotent(x))).collect();

        let k = j_classes.len();
        let below = j_classes
            .iter()
            .map(|c| {
                let reach = both.reachable([c[0]]);
                let mut row = vec![false; k];
                for x in 0..n {
                    if reach[x] {
                        row[j_of[x]] = true;
                    }
                }
                row
            })
            .collect();
        // Tarjan numbers sinks first; reverse for a top-down order.
        let mut top_down: Vec<usize> = (0..k).collect();
        top_down.sort_by_key(|&c| std::cmp::Reverse(j_scc[j_classes[c][0]]));

        GreenData { r_classes, l_classes, j_classes, h_classes, j_regular, r_of, l_of, j_of, h_of, below, top_down }
    }

    /// The minimum two-sided ideal, sorted.
    pub fn minimal_ideal(&self) -> Vec<Element> {
        let z = self.product(self.elements()).expect("nonempty");
        let mut inside = vec![false; self.order()];
        for s in self.elements_i() {
            let sz = self.mul_i(s, z);
            for t in self.elements_i() {
                inside[self.mul_i(sz, t)] = true;
            }
        }
        self.elements().filter(|&x| inside[x]).collect()
    }

    /// A finite semigroup is completely simple iff it is its own minimum ideal.
    pub fn is_completely_simple(&self) -> bool {
        self.minimal_ideal().len() == self.order()
    }
}

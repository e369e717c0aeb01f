//! The two-sided Cayley graph of a generating map and its transition edges.
//!
//! Vertices are pairs `(s, t)` of `S^I × S^I`; an `a`-edge runs from
//! `(s₁, t₁)` to `(s₂, t₂)` whenever `s₁·φ(a) = s₂` and `t₁ = φ(a)·t₂`. An edge
//! is a transition edge when its endpoints lie in different strongly
//! connected components.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::alphabet::{AlphabetError, GeneratingMap, Letter, Word};
use crate::graph::Digraph;
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// A vertex `(s, t)` of `S^I × S^I`; the index `order` stands for `I`.
pub type Vertex = (Element, Element);

/// Edges are numbered by the triple `(s₁, t₂, a)`, which determines both
/// endpoints.
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: Vertex,
    pub letter: Letter,
    pub target: Vertex,
}

/// The path `p_u` of a word `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub label: Word,
}

#[derive(Debug, Clone)]
pub struct TwoSidedCayleyGraph {
    semigroup: FiniteSemigroup,
    gens: GeneratingMap,
    side: usize,
    graph: Digraph,
    scc: Vec<usize>,
    /// Compact index of each transition edge, `u32::MAX` otherwise.
    transition_index: Vec<u32>,
    transition_edges: Vec<EdgeId>,
}

impl TwoSidedCayleyGraph {
    /// Materializes every vertex of `S^I × S^I` and every edge, then flags
    /// transition edges.
    pub fn build(s: &FiniteSemigroup, gens: &GeneratingMap) -> Result<Self, CayleyError> {
        let gens = GeneratingMap::new(s, gens.letters().to_vec(), gens.targets().to_vec())?;
        Ok(Self::build_unchecked(s, &gens))
    }

    pub(crate) fn build_unchecked(s: &FiniteSemigroup, gens: &GeneratingMap) -> Self {
        let side = s.order() + 1;
        let k = gens.len();
        let vertex = |(x, y): Vertex| x * side + y;
        let edge_count = side * side * k;
        let mut endpoints = Vec::with_capacity(edge_count);
        for s1 in 0..side {
            for t2 in 0..side {
                for a in 0..k {
                    let g = gens.target(a);
                    endpoints.push((vertex((s1, s.mul_i(g, t2))), vertex((s.mul_i(s1, g), t2))));
                }
            }
        }
        let graph = Digraph::from_edges(side * side, endpoints.iter().copied());
        let scc = graph.scc();
        let mut transition_index = vec![u32::MAX; edge_count];
        let mut transition_edges = Vec::new();
        for (id, &(from, to)) in endpoints.iter().enumerate() {
            if scc[from] != scc[to] {
                transition_index[id] = transition_edges.len() as u32;
                transition_edges.push(id);
            }
        }
        Self { semigroup: s.clone(), gens: gens.clone(), side, graph, scc, transition_index, transition_edges }
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn generating_map(&self) -> &GeneratingMap {
        &self.gens
    }

    pub fn vertex_count(&self) -> usize {
        self.side * self.side
    }

    pub fn edge_count(&self) -> usize {
        self.side * self.side * self.gens.len()
    }

    pub fn vertex_id(&self, v: Vertex) -> usize {
        v.0 * self.side + v.1
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        (id / self.side, id % self.side)
    }

    pub fn edge_id(&self, s1: Element, t2: Element, a: Letter) -> EdgeId {
        (s1 * self.side + t2) * self.gens.len() + a
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        let k = self.gens.len();
        let a = id % k;
        let s1 = id / k / self.side;
        let t2 = id / k % self.side;
        let g = self.gens.target(a);
        let s = &self.semigroup;
        Edge { source: (s1, s.mul_i(g, t2)), letter: a, target: (s.mul_i(s1, g), t2) }
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Edge)> + '_ {
        (0..self.edge_count()).map(|id| (id, self.edge(id)))
    }

    /// Identifier of the edge given as a triple, if the triple is an edge.
    pub fn find_edge(&self, source: Vertex, a: Letter, target: Vertex) -> Option<EdgeId> {
        let e = self.edge(self.edge_id(source.0, target.1, a));
        (e.source == source && e.target == target).then(|| self.edge_id(source.0, target.1, a))
    }

    pub fn scc_of(&self, v: Vertex) -> usize {
        self.scc[self.vertex_id(v)]
    }

    pub fn is_transition(&self, id: EdgeId) -> bool {
        self.transition_index[id] != u32::MAX
    }

    pub fn transition_edges(&self) -> &[EdgeId] {
        &self.transition_edges
    }

    /// Position of a transition edge in [`Self::transition_edges`].
    pub fn transition_slot(&self, id: EdgeId) -> Option<usize> {
        let i = self.transition_index[id];
        (i != u32::MAX).then_some(i as usize)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.graph
    }

    fn check(&self, u: &[Letter]) -> Result<(), CayleyError> {
        if u.is_empty() {
            return Err(AlphabetError::EmptyWord.into());
        }
        if let Some(&a) = u.iter().find(|&&a| a >= self.gens.len()) {
            return Err(AlphabetError::UnknownLetter(format!("#{a}")).into());
        }
        Ok(())
    }

    /// Images of every suffix `u_{i+1}…u_n`, `i = 0..=n` (the last is `I`).
    fn suffix_images(&self, u: &[Letter]) -> Vec<Element> {
        let s = &self.semigroup;
        let mut suffix = vec![s.virtual_identity(); u.len() + 1];
        for i in (0..u.len()).rev() {
            suffix[i] = s.mul_i(self.gens.target(u[i]), suffix[i + 1]);
        }
        suffix
    }

    /// Edge identifiers along `p_u`, in order. The word must be valid.
    pub(crate) fn path_edges(&self, u: &[Letter]) -> Vec<EdgeId> {
        let suffix = self.suffix_images(u);
        let s = &self.semigroup;
        let mut prefix = s.virtual_identity();
        let mut out = Vec::with_capacity(u.len());
        for (i, &a) in u.iter().enumerate() {
            out.push(self.edge_id(prefix, suffix[i + 1], a));
            prefix = s.mul_i(prefix, self.gens.target(a));
        }
        out
    }

    /// The unique path from `(I, φ(u))` to `(φ(u), I)` labeled `u`.
    pub fn path_of_word(&self, u: &Word) -> Result<GraphPath, CayleyError> {
        self.check(u.letters())?;
        let s = &self.semigroup;
        let suffix = self.suffix_images(u.letters());
        let mut vertices = Vec::with_capacity(u.len() + 1);
        let mut prefix = s.virtual_identity();
        vertices.push((prefix, suffix[0]));
        for (i, &a) in u.letters().iter().enumerate() {
            prefix = s.mul_i(prefix, self.gens.target(a));
            vertices.push((prefix, suffix[i + 1]));
        }
        let edges = self.path_edges(u.letters());
        Ok(GraphPath { vertices, edges, label: u.clone() })
    }

    /// `T(p_u)` as a set of edge identifiers.
    pub fn transition_set(&self, u: &Word) -> Result<BTreeSet<EdgeId>, CayleyError> {
        self.check(u.letters())?;
        Ok(self.path_edges(u.letters()).into_iter().filter(|&e| self.is_transition(e)).collect())
    }

    /// `T(p_u)` as sorted slots into [`Self::transition_edges`].
    pub(crate) fn transition_slots_of(&self, u: &[Letter]) -> Vec<u32> {
        let mut slots: Vec<u32> =
            self.path_edges(u).into_iter().map(|e| self.transition_index[e]).filter(|&i| i != u32::MAX).collect();
        slots.sort_unstable();
        slots.dedup();
        slots
    }

    pub(crate) fn validate_word(&self, u: &[Letter]) -> Result<(), CayleyError> {
        self.check(u)
    }

    /// Vertices that occur on some path `p_u`: reachable from a vertex
    /// `(I, s)` and co-reachable to a vertex `(s, I)`.
    pub fn on_some_path(&self) -> Vec<bool> {
        let i = self.semigroup.virtual_identity();
        let starts = self.semigroup.elements().map(|s| self.vertex_id((i, s)));
        let ends = self.semigroup.elements().map(|s| self.vertex_id((s, i)));
        let fwd = self.graph.reachable(starts);
        let bwd = self.graph.reversed().reachable(ends);
        fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect()
    }

    fn vertex_label(&self, v: Vertex) -> String {
        format!("({},{})", self.semigroup.name(v.0), self.semigroup.name(v.1))
    }

    /// Graphviz rendering; transition edges are bold.
    pub fn export_dot(&self, options: &DotOptions) -> String {
        let keep = if options.only_reachable { self.on_some_path() } else { vec![true; self.vertex_count()] };
        let mut out = String::new();
        let name = options.graph_name.as_deref().unwrap_or("cayley");
        writeln!(out, "digraph {} {{", dot_id(name)).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for v in 0..self.vertex_count() {
            if keep[v] {
                writeln!(out, "  v{} [label={}];", v, dot_id(&self.vertex_label(self.vertex(v)))).unwrap();
            }
        }
        let mut edges: Vec<(usize, usize, Letter, EdgeId)> = self
            .edges()
            .map(|(id, e)| (self.vertex_id(e.source), self.vertex_id(e.target), e.letter, id))
            .filter(|&(s, t, _, _)| keep[s] && keep[t])
            .collect();
        edges.sort_unstable();
        for (s, t, a, id) in edges {
            let style = if self.is_transition(id) { ", style=bold" } else { "" };
            writeln!(out, "  v{s} -> v{t} [label={}{style}];", dot_id(self.gens.letter_name(a))).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Options for [`TwoSidedCayleyGraph::export_dot`].
#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    /// Keep only vertices lying on some path `p_u`.
    pub only_reachable: bool,
    pub graph_name: Option<String>,
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn trivial_graph(letters: usize) -> TwoSidedCayleyGraph {
        let s = catalog::trivial();
        let gens = GeneratingMap::from_targets(&s, vec![0; letters]).unwrap();
        TwoSidedCayleyGraph::build(&s, &gens).unwrap()
    }

    #[test]
    fn trivial_graph_edges() {
        let g = trivial_graph(1);
        let (e, i) = (0, 1);
        assert_eq!(g.vertex_count(), 4);
        // evaluate the edge condition on every (vertex, vertex) candidate directly
        let mut expected = BTreeSet::new();
        for s1 in 0..2 {
            for t1 in 0..2 {
                for s2 in 0..2 {
                    for t2 in 0..2 {
                        let s = g.semigroup();
                        if s.mul_i(s1, 0) == s2 && t1 == s.mul_i(0, t2) {
                            expected.insert(((s1, t1), (s2, t2)));
                        }
                    }
                }
            }
        }
        let actual: BTreeSet<_> = g.edges().map(|(_, ed)| (ed.source, ed.target)).collect();
        assert_eq!(actual, expected);
        let sources: BTreeSet<_> = actual.iter().map(|p| p.0).collect();
        assert_eq!(sources, BTreeSet::from([(e, e), (i, e)]));
        let start = g.find_edge((i, e), 0, (e, i)).unwrap();
        assert!(g.is_transition(start));
        let lp = g.find_edge((e, e), 0, (e, e)).unwrap();
        assert!(!g.is_transition(lp));
        assert_eq!(g.transition_edges().len(), 3);
    }

    #[test]
    fn semilattice_loop() {
        let s = catalog::semilattice2();
        let g = TwoSidedCayleyGraph::build(&s, &GeneratingMap::identity(&s)).unwrap();
        assert_eq!(g.vertex_count(), 9);
        let i = s.virtual_identity();
        assert!(g.find_edge((i, 0), 0, (i, 0)).is_none());
        // (a,a) has an a-loop since a·a = a and a = a·a
        assert!(g.find_edge((0, 0), 0, (0, 0)).is_some());
    }

    #[test]
    fn paths() {
        let g = trivial_graph(1);
        let (e, i) = (0, 1);
        let p = g.path_of_word(&Word::new(vec![0]).unwrap()).unwrap();
        assert_eq!(p.vertices, vec![(i, e), (e, i)]);
        let p = g.path_of_word(&Word::new(vec![0, 0]).unwrap()).unwrap();
        assert_eq!(p.vertices, vec![(i, e), (e, e), (e, i)]);

        let s = catalog::semilattice2();
        let g = TwoSidedCayleyGraph::build(&s, &GeneratingMap::identity(&s)).unwrap();
        let p = g.path_of_word(&Word::new(vec![0, 1]).unwrap()).unwrap();
        let i = s.virtual_identity();
        assert_eq!(p.vertices, vec![(i, 1), (0, 1), (1, i)]);
        for (k, &id) in p.edges.iter().enumerate() {
            let ed = g.edge(id);
            assert_eq!(ed.source, p.vertices[k]);
            assert_eq!(ed.target, p.vertices[k + 1]);
        }
    }

    #[test]
    fn transition_sets_of_trivial() {
        let g = trivial_graph(1);
        let (e, i) = (0, 1);
        let a = g.transition_set(&Word::new(vec![0]).unwrap()).unwrap();
        assert_eq!(a, BTreeSet::from([g.find_edge((i, e), 0, (e, i)).unwrap()]));
        let aa = g.transition_set(&Word::new(vec![0, 0]).unwrap()).unwrap();
        let aaa = g.transition_set(&Word::new(vec![0, 0, 0]).unwrap()).unwrap();
        assert_eq!(aa, aaa);
        assert_eq!(
            aa,
            BTreeSet::from([g.find_edge((i, e), 0, (e, e)).unwrap(), g.find_edge((e, e), 0, (e, i)).unwrap()])
        );
    }

    #[test]
    fn unknown_letter() {
        let g = trivial_graph(1);
        assert!(g.path_of_word(&Word::new(vec![3]).unwrap()).is_err());
    }

    #[test]
    fn dot_export() {
        let g = trivial_graph(1);
        let dot = g.export_dot(&DotOptions::default());
        assert_eq!(dot.matches("[label=\"(").count(), 4);
        assert_eq!(dot.matches("style=bold").count(), 3);
        assert_eq!(dot, g.export_dot(&DotOptions::default()));
        let reach = g.export_dot(&DotOptions { only_reachable: true, ..Default::default() });
        // (I,I) is isolated and never on a path
        assert_eq!(reach.matches("[label=\"(").count(), 3);
        assert!(!reach.contains("\"(I,I)\""));
    }
}

//! Compressed adjacency lists and an iterative Tarjan SCC.

/// Directed graph in CSR form.
#[derive(Debug, Clone)]
pub struct Digraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Digraph {
    /// Builds the graph from `(source, target)` pairs on `n` vertices.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut offsets = vec![0usize; n + 1];
        for &(s, _) in &edges {
            offsets[s + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; edges.len()];
        for (s, t) in edges {
            targets[fill[s]] = t as u32;
            fill[s] += 1;
        }
        Self { offsets, targets }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[self.offsets[v]..self.offsets[v + 1]].iter().map(|&t| t as usize)
    }

    /// Strongly connected components. Returns the component id of every vertex;
    /// ids come out in reverse topological order (sinks first).
    pub fn scc(&self) -> Vec<usize> {
        const UNSEEN: usize = usize::MAX;
        let n = self.vertex_count();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![UNSEEN; n];
        let mut stack: Vec<usize> = Vec::new();
        // (vertex, next edge position)
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut counter = 0usize;
        let mut comps = 0usize;

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, self.offsets[root]));
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < self.offsets[v + 1] {
                    let w = self.targets[*pos] as usize;
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, self.offsets[w]));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp[w] = comps;
                            if w == v {
                                break;
                            }
                        }
                        comps += 1;
                    }
                }
            }
        }
        comp
    }

    /// Vertices reachable from `starts` (inclusive).
    pub fn reachable(&self, starts: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut todo: Vec<usize> = Vec::new();
        for s in starts {
            if !seen[s] {
                seen[s] = true;
                todo.push(s);
            }
        }
        while let Some(v) = todo.pop() {
            for w in self.successors(v) {
                if !seen[w] {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        seen
    }

    pub fn reversed(&self) -> Digraph {
        let n = self.vertex_count();
        Digraph::from_edges(n, (0..n).flat_map(|v| self.successors(v).map(move |w| (w, v))))
    }
}

/// Groups vertices by component id; each group sorted, groups ordered by
/// least member.
pub fn classes_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut first: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (v, &l) in labels.iter().enumerate() {
        let next = out.len();
        let slot = *first.entry(l).or_insert(next);
        if slot == out.len() {
            out.push(Vec::new());
        }
        out[slot].push(v);
    }
    out
}

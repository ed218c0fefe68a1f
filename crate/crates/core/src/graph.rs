//! The directed graph of an evolution algebra and its vertex-set combinatorics.
//!
//! Paths are never materialised: every path-quantified notion (trees,
//! strong connectivity, closed paths) is decided through reachability.

use std::fmt::Write as _;

use crate::algebra::{default_labels, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::vertex_set::VertexSet;
use crate::MAX_DIM;

/// Default cap on the number of sets an enumeration may produce.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

/// A finite directed graph with at most one edge per ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<VertexSet>,
    labels: Vec<String>,
}

/// Strongly connected components and the DAG between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    /// Components ordered by their smallest vertex.
    pub components: Vec<VertexSet>,
    pub component_of: Vec<usize>,
    /// `successors[c]`: components reached by an edge leaving `c`, sorted.
    pub successors: Vec<Vec<usize>>,
    pub predecessors: Vec<Vec<usize>>,
}

impl Condensation {
    /// Components without incoming edges from other components.
    pub fn sources(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.components.len()).filter(|&c| self.predecessors[c].is_empty())
    }

    /// An order in which every component comes after all of its successors.
    pub fn successors_first(&self) -> Vec<usize> {
        let k = self.components.len();
        let mut order = Vec::with_capacity(k);
        let mut seen = vec![false; k];
        fn visit(c: usize, dag: &Condensation, seen: &mut [bool], order: &mut Vec<usize>) {
            seen[c] = true;
            for &d in &dag.successors[c] {
                if !seen[d] {
                    visit(d, dag, seen, order);
                }
            }
            order.push(c);
        }
        for c in 0..k {
            if !seen[c] {
                visit(c, self, &mut seen, &mut order);
            }
        }
        order
    }
}

/// Smallest vertex sets whose tree is the whole graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    pub min_size: usize,
    pub witness: VertexSet,
}

impl Digraph {
    /// Edge `i -> j` whenever the `j`-th coordinate of `e_i^2` is nonzero.
    pub fn of_algebra<F: Field>(algebra: &EvolutionAlgebra<F>) -> Self {
        let out = (0..algebra.dim()).map(|i| algebra.square_support(i)).collect();
        Digraph {
            out,
            labels: algebra.labels().to_vec(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDimension(n));
        }
        let mut out = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            let bad = if u >= n {
                Some(u)
            } else if v >= n {
                Some(v)
            } else {
                None
            };
            if let Some(vertex) = bad {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            out[u].insert(v);
        }
        Ok(Digraph {
            out,
            labels: default_labels(n),
        })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.out[v].iter().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.out[u].iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    pub fn in_set(&self, v: usize) -> VertexSet {
        (0..self.n()).filter(|&u| self.out[u].contains(v)).collect()
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.out[v].is_empty()).collect()
    }

    pub fn sources(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.in_set(v).is_empty()).collect()
    }

    /// Vertices emitting at least two edges.
    pub fn bifurcations(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.out[v].len() >= 2).collect()
    }

    /// In a finite graph the regular vertices are exactly the non-sinks.
    pub fn regular_vertices(&self) -> VertexSet {
        self.sinks().complement(self.n())
    }

    fn check(&self, s: VertexSet) -> Result<()> {
        if s.bound() > self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: s.bound() - 1,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Everything reachable from `s`, including `s` itself.
    pub fn tree(&self, s: VertexSet) -> Result<VertexSet> {
        self.check(s)?;
        Ok(self.reach(s))
    }

    fn reach(&self, s: VertexSet) -> VertexSet {
        let mut seen = s;
        let mut frontier = s;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.out[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// No edge leaves `h`.
    pub fn is_hereditary(&self, h: VertexSet) -> bool {
        h.bound() <= self.n() && h.iter().all(|u| self.out[u].is_subset(h))
    }

    /// Every non-sink whose out-neighbours all lie in `h` belongs to `h`.
    pub fn is_saturated(&self, h: VertexSet) -> bool {
        h.bound() <= self.n()
            && (0..self.n()).all(|u| {
                let out = self.out[u];
                out.is_empty() || !out.is_subset(h) || h.contains(u)
            })
    }

    /// Smallest saturated superset of a hereditary set; stays hereditary.
    pub fn saturated_closure(&self, h: VertexSet) -> Result<VertexSet> {
        self.check(h)?;
        if !self.is_hereditary(h) {
            return Err(Error::NotHereditary(h));
        }
        let mut cur = h;
        loop {
            let added: VertexSet = (0..self.n())
                .filter(|&u| !cur.contains(u) && !self.out[u].is_empty() && self.out[u].is_subset(cur))
                .collect();
            if added.is_empty() {
                return Ok(cur);
            }
            cur = cur.union(added);
        }
    }

    /// Tarjan's algorithm, then components renumbered by smallest vertex.
    pub fn condensation(&self) -> Condensation {
        let n = self.n();
        let mut st = Tarjan {
            next_index: 0,
            index: vec![usize::MAX; n],
            low: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            components: Vec::new(),
        };
        for v in 0..n {
            if st.index[v] == usize::MAX {
                st.connect(self, v);
            }
        }
        let mut components = st.components;
        components.sort_by_key(|c| c.first());
        let mut component_of = vec![0; n];
        for (c, comp) in components.iter().enumerate() {
            for v in comp.iter() {
                component_of[v] = c;
            }
        }
        let k = components.len();
        let mut successors = vec![Vec::new(); k];
        let mut predecessors = vec![Vec::new(); k];
        for (u, v) in self.edges() {
            let (cu, cv) = (component_of[u], component_of[v]);
            if cu != cv {
                successors[cu].push(cv);
                predecessors[cv].push(cu);
            }
        }
        for list in successors.iter_mut().chain(predecessors.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Condensation {
            components,
            component_of,
            successors,
            predecessors,
        }
    }

    /// Maximal proper hereditary sets: the complements of the source
    /// components. A strongly connected graph yields `[{}]`.
    pub fn maximal_hereditary_sets(&self) -> Vec<VertexSet> {
        let dag = self.condensation();
        let mut out: Vec<VertexSet> = dag.sources().map(|c| dag.components[c].complement(self.n())).collect();
        out.sort();
        out
    }

    /// All hereditary sets in lexicographic order, as successor-closed unions
    /// of strongly connected components.
    pub fn enumerate_hereditary_sets(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let dag = self.condensation();
        let order = dag.successors_first();
        let succ_mask: Vec<u64> = (0..dag.components.len())
            .map(|c| dag.successors[c].iter().fold(0u64, |m, &d| m | 1 << d))
            .collect();

        let mut out = Vec::new();
        // Each stack entry: (position in `order`, chosen components, vertex union).
        let mut stack = vec![(0usize, 0u64, VertexSet::EMPTY)];
        while let Some((pos, chosen, set)) = stack.pop() {
            if pos == order.len() {
                if out.len() == limit {
                    return Err(Error::EnumerationOverflow { limit });
                }
                out.push(set);
                continue;
            }
            let c = order[pos];
            stack.push((pos + 1, chosen, set));
            if succ_mask[c] & !chosen == 0 {
                stack.push((pos + 1, chosen | 1 << c, set.union(dag.components[c])));
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn enumerate_hereditary_saturated_sets(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let all = self.enumerate_hereditary_sets(limit)?;
        Ok(all.into_iter().filter(|&h| self.is_saturated(h)).collect())
    }

    pub fn is_strongly_connected(&self) -> bool {
        (0..self.n()).all(|v| self.reach(VertexSet::singleton(v)) == self.vertices())
    }

    /// Only `{}` and the full vertex set are hereditary.
    pub fn is_simple(&self) -> bool {
        self.is_strongly_connected()
    }

    /// A closed path through every vertex exists.
    pub fn has_spanning_closed_path(&self) -> bool {
        self.edge_count() > 0 && self.is_strongly_connected()
    }

    /// `E / H`: the vertices outside `h`, reindexed in order, with the edges
    /// between them.
    pub fn quotient(&self, h: VertexSet) -> Result<Digraph> {
        self.check(h)?;
        if !self.is_hereditary(h) {
            return Err(Error::NotHereditary(h));
        }
        let keep: Vec<usize> = h.complement(self.n()).iter().collect();
        let out = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.out[u].contains(v))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let labels = keep.iter().map(|&u| self.labels[u].clone()).collect();
        Ok(Digraph { out, labels })
    }

    /// Maps a set of original vertices outside `h` to quotient indices.
    pub fn quotient_index(&self, h: VertexSet, s: VertexSet) -> VertexSet {
        let keep: Vec<usize> = h.complement(self.n()).iter().collect();
        keep.iter()
            .enumerate()
            .filter(|&(_, &v)| s.contains(v))
            .map(|(k, _)| k)
            .collect()
    }

    /// One lowest-index vertex per source component.
    pub fn minimal_generating_set(&self) -> GeneratingSet {
        let dag = self.condensation();
        let witness: VertexSet = dag
            .sources()
            .map(|c| dag.components[c].first().expect("components are nonempty"))
            .collect();
        GeneratingSet {
            min_size: witness.len(),
            witness,
        }
    }

    /// Graphviz rendering: vertices ascending, then edges lexicographically.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for label in &self.labels {
            let _ = writeln!(s, "    {};", dot_id(label));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "    {} -> {};", dot_id(&self.labels[u]), dot_id(&self.labels[v]));
        }
        s.push_str("}\n");
        s
    }
}

fn dot_id(label: &str) -> String {
    let bare = label
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if bare {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

struct Tarjan {
    next_index: usize,
    index: Vec<usize>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    components: Vec<VertexSet>,
}

impl Tarjan {
    fn connect(&mut self, g: &Digraph, v: usize) {
        self.index[v] = self.next_index;
        self.low[v] = self.next_index;
        self.next_index += 1;
        self.stack.push(v);
        self.on_stack[v] = true;

        for w in g.out[v].iter() {
            if self.index[w] == usize::MAX {
                self.connect(g, w);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack[w] {
                self.low[v] = self.low[v].min(self.index[w]);
            }
        }

        if self.low[v] == self.index[v] {
            let mut comp = VertexSet::EMPTY;
            loop {
                let w = self.stack.pop().expect("root is on the stack");
                self.on_stack[w] = false;
                comp.insert(w);
                if w == v {
                    break;
                }
            }
            self.components.push(comp);
        }
    }
}

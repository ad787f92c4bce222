//! Marked, vertex-weighted looped graphs and their structural transforms.
//!
//! Loops live on the vertex record; the adjacency relation is simple,
//! symmetric and irreflexive. Free loops are a plain count. Every transform
//! returns a new graph and keeps the relative order of surviving vertices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::gf2::BitMatrix;
use crate::ring::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("an edge needs two distinct vertices")]
    SelfEdge,
    #[error("vertices {0} and {1} must be distinct")]
    SameVertex(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("cut vertex {label:?} is looped in {side}")]
    LoopedCutVertex { label: String, side: Side },
    #[error("cut vertex {label:?} is marked in {side}")]
    MarkedCutVertex { label: String, side: Side },
    #[error("cut vertex {label:?} lacks standard weights in {side}")]
    NonStandardCutWeights { label: String, side: Side },
    #[error("cut vertex {label:?} is missing from {side}")]
    MissingCutVertex { label: String, side: Side },
    #[error("label {0:?} occurs in both graphs")]
    LabelCollision(String),
}

/// Which operand of a composition an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    F,
    H,
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Side::F => "F",
            Side::H => "H",
        })
    }
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The weights `alpha = A`, `beta = B`.
pub fn standard_weights() -> (LaurentPoly, LaurentPoly) {
    (LaurentPoly::symbol("A"), LaurentPoly::symbol("B"))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexRecord {
    pub label: String,
    pub looped: bool,
    pub marked: bool,
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
}

impl VertexRecord {
    /// Unlooped, unmarked, standard weights.
    pub fn standard(label: &str) -> Self {
        let (alpha, beta) = standard_weights();
        VertexRecord {
            label: label.to_string(),
            looped: false,
            marked: false,
            alpha,
            beta,
        }
    }

    pub fn looped(mut self, looped: bool) -> Self {
        self.looped = looped;
        self
    }

    pub fn marked(mut self, marked: bool) -> Self {
        self.marked = marked;
        self
    }

    pub fn weights(mut self, alpha: LaurentPoly, beta: LaurentPoly) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    pub fn has_standard_weights(&self) -> bool {
        let (a, b) = standard_weights();
        self.alpha == a && self.beta == b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedWeightedGraph {
    vertices: Vec<VertexRecord>,
    adj: BitMatrix,
    free_loops: u32,
}

impl Default for MarkedWeightedGraph {
    fn default() -> Self {
        MarkedWeightedGraph::new()
    }
}

impl MarkedWeightedGraph {
    pub fn new() -> Self {
        MarkedWeightedGraph {
            vertices: Vec::new(),
            adj: BitMatrix::zeros(0, 0),
            free_loops: 0,
        }
    }

    /// `n` standard vertices labelled `v0..v{n-1}` and no edges.
    pub fn standard(n: usize) -> Self {
        let mut g = MarkedWeightedGraph::new();
        for i in 0..n {
            g.add_vertex(VertexRecord::standard(&alloc::format!("v{i}")))
                .expect("fresh labels");
        }
        g
    }

    pub fn from_parts(
        vertices: Vec<VertexRecord>,
        edges: &[(usize, usize)],
        free_loops: u32,
    ) -> Result<Self, GraphError> {
        let mut g = MarkedWeightedGraph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        g.free_loops = free_loops;
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn set_free_loops(&mut self, n: u32) {
        self.free_loops = n;
    }

    pub fn vertices(&self) -> &[VertexRecord] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Result<&VertexRecord, GraphError> {
        self.vertices.get(i).ok_or(GraphError::UnknownVertex(i))
    }

    pub fn vertex_mut(&mut self, i: usize) -> Result<&mut VertexRecord, GraphError> {
        self.vertices.get_mut(i).ok_or(GraphError::UnknownVertex(i))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    fn check(&self, i: usize) -> Result<(), GraphError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(i))
        }
    }

    pub fn add_vertex(&mut self, v: VertexRecord) -> Result<usize, GraphError> {
        if !is_valid_label(&v.label) {
            return Err(GraphError::InvalidLabel(v.label));
        }
        if self.index_of(&v.label).is_some() {
            return Err(GraphError::DuplicateLabel(v.label));
        }
        let n = self.len();
        let mut adj = BitMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                if self.adj.get(i, j) {
                    adj.set(i, j, true);
                }
            }
        }
        self.adj = adj;
        self.vertices.push(v);
        Ok(n)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(GraphError::SelfEdge);
        }
        self.adj.set(i, j, true);
        self.adj.set(j, i, true);
        Ok(())
    }

    pub fn set_adjacent(&mut self, i: usize, j: usize, value: bool) -> Result<(), GraphError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(GraphError::SelfEdge);
        }
        self.adj.set(i, j, value);
        self.adj.set(j, i, value);
        Ok(())
    }

    fn toggle_edge(&mut self, i: usize, j: usize) {
        self.adj.toggle(i, j);
        self.adj.toggle(j, i);
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.adj.get(i, j)
    }

    /// Open neighborhood, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&u| self.adj.get(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.len()).filter(|&u| self.adj.get(v, u)).count()
    }

    /// Unordered edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.adj.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Adjacency without loops (zero diagonal).
    pub fn simple_adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Boolean adjacency matrix: loop flags on the diagonal.
    pub fn adjacency_matrix(&self) -> BitMatrix {
        let mut m = self.adj.clone();
        for (i, v) in self.vertices.iter().enumerate() {
            m.set(i, i, v.looped);
        }
        m
    }

    /// Toggle the diagonal on `t`, then drop every marked vertex whose
    /// diagonal entry ended up 0.
    pub fn restricted_matrix(&self, in_t: &[bool]) -> BitMatrix {
        self.restricted_with_kept(in_t).0
    }

    /// [`Self::restricted_matrix`] together with the surviving vertex indices.
    pub fn restricted_with_kept(&self, in_t: &[bool]) -> (BitMatrix, Vec<usize>) {
        assert_eq!(
            in_t.len(),
            self.len(),
            "subset length must match vertex count"
        );
        let mut keep = Vec::with_capacity(self.len());
        let mut diag = Vec::with_capacity(self.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let d = v.looped ^ in_t[i];
            if v.marked && !d {
                continue;
            }
            keep.push(i);
            diag.push(d);
        }
        let mut m = self.adj.principal_submatrix(&keep);
        for (k, d) in diag.into_iter().enumerate() {
            m.set(k, k, d);
        }
        (m, keep)
    }

    pub fn has_loops(&self) -> bool {
        self.vertices.iter().any(|v| v.looped)
    }

    /// Local complement at `v`: toggle adjacency between distinct neighbors
    /// and toggle the loop on every neighbor.
    pub fn local_complement(&self, v: usize) -> Result<Self, GraphError> {
        self.check(v)?;
        let nb = self.neighbors(v);
        let mut g = self.clone();
        for (k, &a) in nb.iter().enumerate() {
            g.vertices[a].looped ^= true;
            for &b in &nb[k + 1..] {
                g.toggle_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Pivot on `v`, `w`: toggle `{a, b}` for `a ∈ N(v)`, `b ∈ N(w)`, `a ≠ b`,
    /// `a, b ∉ {v, w}`, unless both lie in `N(v) ∩ N(w)`.
    pub fn pivot(&self, v: usize, w: usize) -> Result<Self, GraphError> {
        self.check(v)?;
        self.check(w)?;
        if v == w {
            return Err(GraphError::SameVertex(v, w));
        }
        let n = self.len();
        let in_v: Vec<bool> = (0..n).map(|u| u != w && self.adj.get(v, u)).collect();
        let in_w: Vec<bool> = (0..n).map(|u| u != v && self.adj.get(w, u)).collect();
        let mut g = self.clone();
        for a in 0..n {
            for b in a + 1..n {
                let forward = in_v[a] && in_w[b] && (!in_w[a] || !in_v[b]);
                let backward = in_v[b] && in_w[a] && (!in_w[b] || !in_v[a]);
                if forward || backward {
                    g.toggle_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Pivot, exchange the neighborhoods of `v` and `w`, toggle both marks.
    pub fn marked_pivot(&self, v: usize, w: usize) -> Result<Self, GraphError> {
        self.check(v)?;
        self.check(w)?;
        if !self.adjacent(v, w) {
            return Err(GraphError::NotAdjacent(v, w));
        }
        let mut g = self.pivot(v, w)?;
        for u in 0..self.len() {
            if u == v || u == w {
                continue;
            }
            let (nv, nw) = (g.adj.get(v, u), g.adj.get(w, u));
            g.set_adjacent(v, u, nw)?;
            g.set_adjacent(w, u, nv)?;
        }
        g.vertices[v].marked ^= true;
        g.vertices[w].marked ^= true;
        Ok(g)
    }

    /// Induced subgraph on the listed vertices, in the listed order.
    pub fn induced(&self, keep: &[usize]) -> Result<Self, GraphError> {
        for &k in keep {
            self.check(k)?;
        }
        Ok(MarkedWeightedGraph {
            vertices: keep.iter().map(|&k| self.vertices[k].clone()).collect(),
            adj: self.adj.principal_submatrix(keep),
            free_loops: self.free_loops,
        })
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Self, GraphError> {
        for &r in remove {
            self.check(r)?;
        }
        let keep: Vec<usize> = (0..self.len()).filter(|i| !remove.contains(i)).collect();
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.delete_vertices(&[v])
    }

    /// Remove every loop, interchanging the weights of formerly looped vertices.
    pub fn unloop_swap(&self) -> Self {
        let mut g = self.clone();
        for v in g.vertices.iter_mut().filter(|v| v.looped) {
            v.looped = false;
            core::mem::swap(&mut v.alpha, &mut v.beta);
        }
        g
    }

    /// `N(v) - {w} == N(w) - {v}`.
    pub fn are_twins(&self, v: usize, w: usize) -> Result<bool, GraphError> {
        self.check(v)?;
        self.check(w)?;
        if v == w {
            return Err(GraphError::SameVertex(v, w));
        }
        Ok((0..self.len())
            .filter(|&u| u != v && u != w)
            .all(|u| self.adj.get(v, u) == self.adj.get(w, u)))
    }

    /// Connected components as ascending index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = alloc::vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for (x, sx) in seen.iter_mut().enumerate() {
                    if !*sx && self.adj.get(u, x) {
                        *sx = true;
                        stack.push(x);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; labels must not collide. Free loops add.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, GraphError> {
        let mut g = self.clone();
        let offset = g.len();
        for v in &other.vertices {
            if g.index_of(&v.label).is_some() {
                return Err(GraphError::LabelCollision(v.label.clone()));
            }
            g.add_vertex(v.clone())?;
        }
        for (i, j) in other.edges() {
            g.add_edge(i + offset, j + offset)?;
        }
        g.free_loops += other.free_loops;
        Ok(g)
    }

    /// The same graph with vertices sorted by label.
    pub fn sorted_by_label(&self) -> Self {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].label.cmp(&self.vertices[b].label));
        self.induced(&order).expect("indices in range")
    }
}

/// Index of `label` if it is an unlooped, unmarked vertex with standard weights.
pub fn check_cut_vertex(
    g: &MarkedWeightedGraph,
    label: &str,
    side: Side,
) -> Result<usize, GraphError> {
    let i = g
        .index_of(label)
        .ok_or_else(|| GraphError::MissingCutVertex {
            label: label.to_string(),
            side,
        })?;
    let v = &g.vertices[i];
    if v.looped {
        return Err(GraphError::LoopedCutVertex {
            label: label.to_string(),
            side,
        });
    }
    if v.marked {
        return Err(GraphError::MarkedCutVertex {
            label: label.to_string(),
            side,
        });
    }
    if !v.has_standard_weights() {
        return Err(GraphError::NonStandardCutWeights {
            label: label.to_string(),
            side,
        });
    }
    Ok(i)
}

/// Validate that `label` can serve as the shared cut vertex of `f * h`;
/// returns its index in each graph.
pub fn check_composition(
    f: &MarkedWeightedGraph,
    h: &MarkedWeightedGraph,
    label: &str,
) -> Result<(usize, usize), GraphError> {
    let af = check_cut_vertex(f, label, Side::F)?;
    let ah = check_cut_vertex(h, label, Side::H)?;
    for v in &f.vertices {
        if v.label != label && h.index_of(&v.label).is_some() {
            return Err(GraphError::LabelCollision(v.label.clone()));
        }
    }
    Ok((af, ah))
}

/// Composition `f * h` along the shared cut vertex `label`: both sides minus
/// the cut vertex, plus every edge between `N_f(a)` and `N_h(a)`.
pub fn compose(
    f: &MarkedWeightedGraph,
    h: &MarkedWeightedGraph,
    label: &str,
) -> Result<MarkedWeightedGraph, GraphError> {
    let (af, ah) = check_composition(f, h, label)?;
    let f_rest = f.delete_vertex(af)?;
    let h_rest = h.delete_vertex(ah)?;
    let nf: Vec<usize> = f
        .neighbors(af)
        .into_iter()
        .map(|i| if i > af { i - 1 } else { i })
        .collect();
    let nh: Vec<usize> = h
        .neighbors(ah)
        .into_iter()
        .map(|i| if i > ah { i - 1 } else { i })
        .collect();
    let mut g = f_rest.disjoint_union(&h_rest)?;
    let offset = f_rest.len();
    for &x in &nf {
        for &y in &nh {
            g.add_edge(x, y + offset)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[&str]) -> MarkedWeightedGraph {
        let mut g = MarkedWeightedGraph::new();
        for l in labels {
            g.add_vertex(VertexRecord::standard(l)).unwrap();
        }
        for i in 1..labels.len() {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    #[test]
    fn adjacency_and_restriction() {
        let mut g = MarkedWeightedGraph::standard(1);
        assert_eq!(g.adjacency_matrix(), BitMatrix::from_rows(&[[0u8]]));
        g.vertex_mut(0).unwrap().looped = true;
        assert_eq!(g.adjacency_matrix(), BitMatrix::from_rows(&[[1u8]]));
        assert_eq!(g.restricted_matrix(&[true]), BitMatrix::from_rows(&[[0u8]]));

        let k2 = path(&["v", "w"]);
        assert_eq!(
            k2.adjacency_matrix(),
            BitMatrix::from_rows(&[[0u8, 1], [1, 0]])
        );

        let mut m = MarkedWeightedGraph::standard(1);
        m.vertex_mut(0).unwrap().marked = true;
        assert_eq!(m.restricted_matrix(&[false]).n_rows(), 0);

        let mut k2m = k2.clone();
        k2m.vertex_mut(1).unwrap().marked = true;
        assert_eq!(
            k2m.restricted_matrix(&[false, true]),
            BitMatrix::from_rows(&[[0u8, 1], [1, 1]])
        );
        assert_eq!(
            k2m.restricted_matrix(&[false, false]),
            BitMatrix::from_rows(&[[0u8]])
        );
    }

    #[test]
    fn local_complement_examples() {
        let mut g = MarkedWeightedGraph::standard(2);
        assert_eq!(g.local_complement(0).unwrap(), g);

        g = path(&["x", "v", "y"]);
        let lc = g.local_complement(1).unwrap();
        assert!(lc.adjacent(0, 2));
        assert!(lc.vertex(0).unwrap().looped && lc.vertex(2).unwrap().looped);
        assert!(!lc.vertex(1).unwrap().looped);

        g.add_edge(0, 2).unwrap();
        let lc = g.local_complement(1).unwrap();
        assert!(!lc.adjacent(0, 2));
        assert!(lc.adjacent(0, 1) && lc.adjacent(1, 2));
        assert!(lc.vertex(0).unwrap().looped && lc.vertex(2).unwrap().looped);
        assert_eq!(lc.local_complement(1).unwrap(), g);
        assert_eq!(g.local_complement(7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn pivot_examples() {
        let k2 = path(&["v", "w"]);
        assert_eq!(k2.pivot(0, 1).unwrap(), k2);

        let p = path(&["a", "v", "w", "b"]);
        let pv = p.pivot(1, 2).unwrap();
        assert!(pv.adjacent(0, 3));
        assert_eq!(pv.edges().len(), 4);

        // 4-cycle v-a-w-b-v with v=0, a=1, w=2, b=3.
        let c4 = MarkedWeightedGraph::from_parts(
            ["v", "a", "w", "b"]
                .iter()
                .map(|l| VertexRecord::standard(l))
                .collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
            0,
        )
        .unwrap();
        assert_eq!(c4.pivot(0, 2).unwrap(), c4);
        assert_eq!(c4.pivot(0, 0), Err(GraphError::SameVertex(0, 0)));
    }

    #[test]
    fn marked_pivot_examples() {
        let k2 = path(&["v", "w"]);
        let mp = k2.marked_pivot(0, 1).unwrap();
        assert!(mp.adjacent(0, 1));
        assert!(mp.vertex(0).unwrap().marked && mp.vertex(1).unwrap().marked);
        assert_eq!(mp.marked_pivot(0, 1).unwrap(), k2);

        let p = path(&["a", "v", "w"]);
        let mp = p.marked_pivot(1, 2).unwrap();
        assert!(mp.adjacent(0, 2) && !mp.adjacent(0, 1) && mp.adjacent(1, 2));
        assert!(mp.vertex(1).unwrap().marked && mp.vertex(2).unwrap().marked);
        assert!(!mp.vertex(0).unwrap().marked);
        assert_eq!(p.marked_pivot(0, 2), Err(GraphError::NotAdjacent(0, 2)));
    }

    #[test]
    fn deletion() {
        let mut k3 = path(&["a", "b", "c"]);
        k3.add_edge(0, 2).unwrap();
        k3.set_free_loops(2);
        let all = k3.delete_vertices(&[0, 1, 2]).unwrap();
        assert!(all.is_empty());
        assert_eq!(all.free_loops(), 2);
        assert_eq!(k3.delete_vertices(&[]).unwrap(), k3);
        let k2 = k3.delete_vertex(1).unwrap();
        assert_eq!(k2.len(), 2);
        assert!(k2.adjacent(0, 1));
        assert_eq!(k2.vertex(1).unwrap().label, "c");
        assert_eq!(k3.delete_vertices(&[5]), Err(GraphError::UnknownVertex(5)));
    }

    #[test]
    fn unloop_swap_examples() {
        let g = path(&["a", "b"]);
        assert_eq!(g.unloop_swap(), g);
        let mut l = g.clone();
        for i in 0..2 {
            l.vertex_mut(i).unwrap().looped = true;
        }
        l.vertex_mut(0).unwrap().alpha = LaurentPoly::symbol("x");
        let u = l.unloop_swap();
        assert!(!u.has_loops());
        assert!(u.adjacent(0, 1));
        assert_eq!(u.vertex(0).unwrap().beta, LaurentPoly::symbol("x"));
        assert_eq!(u.vertex(0).unwrap().alpha, LaurentPoly::symbol("B"));
        assert_eq!(u.vertex(1).unwrap().alpha, LaurentPoly::symbol("B"));
        assert_eq!(u.vertex(1).unwrap().beta, LaurentPoly::symbol("A"));
    }

    #[test]
    fn twins() {
        let g = MarkedWeightedGraph::standard(2);
        assert!(g.are_twins(0, 1).unwrap());
        assert!(path(&["v", "w"]).are_twins(0, 1).unwrap());
        let p = path(&["a", "v", "w"]);
        assert!(!p.are_twins(1, 2).unwrap());
        assert!(p.are_twins(0, 2).unwrap());
    }

    #[test]
    fn composition() {
        let f = path(&["a", "v"]);
        let mut h = path(&["x", "a", "y"]);
        h.set_free_loops(2);
        let mut f1 = f.clone();
        f1.set_free_loops(1);
        let g = compose(&f1, &h, "a").unwrap();
        assert_eq!(g.free_loops(), 3);
        let labels: Vec<&str> = g.vertices().iter().map(|v| v.label.as_str()).collect();
        assert_eq!(labels, ["v", "x", "y"]);
        assert!(g.adjacent(0, 1) && g.adjacent(0, 2) && !g.adjacent(1, 2));

        let mut k3 = path(&["a", "x", "y"]);
        k3.add_edge(0, 2).unwrap();
        let h = path(&["a", "p"]);
        let g = compose(&k3, &h, "a").unwrap();
        assert!(g.adjacent(0, 1) && g.adjacent(0, 2) && g.adjacent(1, 2));

        assert_eq!(
            compose(&f, &h, "a").unwrap().sorted_by_label(),
            compose(&h, &f, "a").unwrap().sorted_by_label()
        );

        let mut bad = f.clone();
        bad.vertex_mut(0).unwrap().marked = true;
        assert!(matches!(
            compose(&bad, &h, "a"),
            Err(GraphError::MarkedCutVertex { side: Side::F, .. })
        ));
        let mut bad = h.clone();
        bad.vertex_mut(0).unwrap().looped = true;
        assert!(matches!(
            compose(&f, &bad, "a"),
            Err(GraphError::LoopedCutVertex { side: Side::H, .. })
        ));
        let mut bad = h.clone();
        bad.vertex_mut(0).unwrap().alpha = LaurentPoly::one();
        assert!(matches!(
            compose(&f, &bad, "a"),
            Err(GraphError::NonStandardCutWeights { side: Side::H, .. })
        ));
        assert!(matches!(
            compose(&f, &f, "a"),
            Err(GraphError::LabelCollision(_))
        ));
        assert!(matches!(
            compose(&f, &h, "zz"),
            Err(GraphError::MissingCutVertex { .. })
        ));
    }
}

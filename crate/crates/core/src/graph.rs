//! Decorated plumbing trees and plumbing matrices.
//!
//! Vertex ids are indices into [`PlumbingTree::vertices`]. Curve-derived trees
//! use the order `u1, u2, u3`, regions in preorder (outer region first, then
//! the region inside each oval), ovals in preorder, arrowheads last.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::scheme::{self, ComplexScheme};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    U1,
    U2,
    U3,
    Region(usize),
    Oval(usize),
    Arrowhead,
    Generic,
}

impl Role {
    pub fn label(&self) -> String {
        match self {
            Role::U1 => "u1".into(),
            Role::U2 => "u2".into(),
            Role::U3 => "u3".into(),
            Role::Region(i) => format!("R{i}"),
            Role::Oval(i) => format!("o{i}"),
            Role::Arrowhead => "head".into(),
            Role::Generic => "v".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub weight: i64,
    pub role: Role,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub tail: usize,
    /// `+1` or `-1`.
    pub sign: i64,
    /// Set once the arrowhead has been turned into a vertex.
    pub head: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingTree {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    arrows: Vec<Arrow>,
    adjacency: Vec<Vec<usize>>,
}

impl PlumbingTree {
    /// A generic weighted tree. Vertices are `0..weights.len()`; arrows are
    /// `(tail, sign)` pairs.
    pub fn new(weights: &[i64], edges: &[(usize, usize)], arrows: &[(usize, i64)]) -> Result<Self> {
        let vertices =
            weights.iter().enumerate().map(|(id, &weight)| Vertex { id, weight, role: Role::Generic }).collect();
        let arrows = arrows.iter().map(|&(tail, sign)| Arrow { tail, sign, head: None }).collect();
        Self::from_parts(vertices, edges.to_vec(), arrows)
    }

    fn from_parts(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>, arrows: Vec<Arrow>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree(format!("{} vertices but {} edges", n, edges.len())));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::InvalidTree(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidTree(format!("loop at {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for a in &arrows {
            if a.tail >= n {
                return Err(Error::InvalidTree(format!("arrow tail {} out of range", a.tail)));
            }
            if a.sign != 1 && a.sign != -1 {
                return Err(Error::InvalidTree(format!("arrow sign {} is not ±1", a.sign)));
            }
        }
        let tree = Self { vertices, edges, arrows, adjacency };
        if tree.reachable_from(0) != n {
            return Err(Error::InvalidTree("not connected".into()));
        }
        Ok(tree)
    }

    fn reachable_from(&self, start: usize) -> usize {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn weights(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    pub fn find_role(&self, role: Role) -> Option<usize> {
        self.vertices.iter().position(|v| v.role == role)
    }

    /// Signed count of unconverted arrows with tail at each vertex.
    pub fn arrow_vector(&self) -> Vec<i64> {
        let mut s = vec![0; self.len()];
        for a in self.arrows.iter().filter(|a| a.head.is_none()) {
            s[a.tail] += a.sign;
        }
        s
    }

    /// Symmetric quadratic form `x A yᵗ` of the plumbing matrix, computed
    /// from the tree structure.
    pub fn bilinear(&self, x: &[i128], y: &[i128]) -> i128 {
        let diag: i128 = self.vertices.iter().map(|v| v.weight as i128 * x[v.id] * y[v.id]).sum();
        let off: i128 = self.edges.iter().map(|&(a, b)| x[a] * y[b] + x[b] * y[a]).sum();
        diag + off
    }

    /// `(c A)_v` for every vertex.
    pub fn row_product(&self, c: &[i64]) -> Vec<i128> {
        self.vertices
            .iter()
            .map(|v| {
                let own = v.weight as i128 * c[v.id] as i128;
                own + self.adjacency[v.id].iter().map(|&w| c[w] as i128).sum::<i128>()
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  v{} [label=\"{}:{}({})\"];", v.id, v.id, v.weight, v.role.label());
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        for (i, a) in self.arrows.iter().enumerate().filter(|(_, a)| a.head.is_none()) {
            let label = if a.sign > 0 { "+" } else { "-" };
            let _ = writeln!(out, "  a{i} [label=\"{label}\", shape=plaintext];");
            let _ = writeln!(out, "  v{} -- a{i} [style=dashed];", a.tail);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| {
                    let (role, index) = match v.role {
                        Role::U1 => ("u1", None),
                        Role::U2 => ("u2", None),
                        Role::U3 => ("u3", None),
                        Role::Region(i) => ("region", Some(i)),
                        Role::Oval(i) => ("oval", Some(i)),
                        Role::Arrowhead => ("arrowhead", None),
                        Role::Generic => ("generic", None),
                    };
                    VertexJson { id: v.id, weight: v.weight, role: role.into(), index }
                })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            arrows: self.arrows.iter().map(|a| ArrowJson { tail: a.tail, sign: a.sign, head: a.head }).collect(),
        }
    }

    pub fn from_json(json: &TreeJson) -> Result<Self> {
        let vertices = json
            .vertices
            .iter()
            .enumerate()
            .map(|(pos, v)| {
                if v.id != pos {
                    return Err(Error::InvalidTree(format!("vertex id {} at position {pos}", v.id)));
                }
                let role = match (v.role.as_str(), v.index) {
                    ("u1", None) => Role::U1,
                    ("u2", None) => Role::U2,
                    ("u3", None) => Role::U3,
                    ("region", Some(i)) => Role::Region(i),
                    ("oval", Some(i)) => Role::Oval(i),
                    ("arrowhead", None) => Role::Arrowhead,
                    ("generic", None) => Role::Generic,
                    (r, i) => return Err(Error::InvalidTree(format!("bad role {r} / index {i:?}"))),
                };
                Ok(Vertex { id: v.id, weight: v.weight, role })
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = json.edges.iter().map(|e| (e[0], e[1])).collect();
        let arrows = json.arrows.iter().map(|a| Arrow { tail: a.tail, sign: a.sign, head: a.head }).collect();
        Self::from_parts(vertices, edges, arrows)
    }
}

/// JSON form of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub weight: i64,
    pub role: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub tail: usize,
    pub sign: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head: Option<usize>,
}

/// Γ(C): the decorated plumbing tree of a complex scheme.
pub fn build_gamma(s: &ComplexScheme) -> PlumbingTree {
    let flat = s.flatten();
    let st = scheme::stats(s);
    let l = flat.len();
    let region = |r: usize| 3 + r;
    let oval = |i: usize| 4 + l + i;

    let mut vertices = vec![
        Vertex { id: 0, weight: 1, role: Role::U1 },
        Vertex { id: 1, weight: 2, role: Role::U2 },
        Vertex { id: 2, weight: 2, role: Role::U3 },
    ];
    for (r, rs) in st.regions.iter().enumerate() {
        vertices.push(Vertex { id: region(r), weight: 2 * rs.euler_char, role: Role::Region(r) });
    }
    for i in 0..l {
        vertices.push(Vertex { id: oval(i), weight: 0, role: Role::Oval(i) });
    }

    let mut edges = vec![(0, 1), (0, 2), (0, region(0))];
    for (i, o) in flat.iter().enumerate() {
        edges.push((region(o.outer_region()), oval(i)));
        edges.push((oval(i), region(i + 1)));
    }

    let mut arrows = Vec::with_capacity(st.beta0);
    if s.is_odd() {
        arrows.push(Arrow { tail: 1, sign: 1, head: None });
    }
    for (i, os) in st.ovals.iter().enumerate() {
        let sign = if os.parity == 0 { -os.epsilon } else { os.epsilon };
        arrows.push(Arrow { tail: oval(i), sign, head: None });
    }

    PlumbingTree::from_parts(vertices, edges, arrows).expect("curve plumbing graph is a tree")
}

/// Γ⁺: every arrow becomes an edge to a new weight-0 arrowhead vertex. The
/// arrow list is kept, with `head` filled in.
pub fn build_gamma_plus(g: &PlumbingTree) -> PlumbingTree {
    let mut vertices = g.vertices.clone();
    let mut edges = g.edges.clone();
    let mut arrows = g.arrows.clone();
    for a in arrows.iter_mut().filter(|a| a.head.is_none()) {
        let id = vertices.len();
        vertices.push(Vertex { id, weight: 0, role: Role::Arrowhead });
        edges.push((a.tail, id));
        a.head = Some(id);
    }
    PlumbingTree::from_parts(vertices, edges, arrows).expect("adding leaves keeps a tree")
}

/// Γ̂(C): Γ(C) with one extra arrow at every region vertex, of sign
/// `(-1)^parity(R)`.
pub fn build_gamma_hat(s: &ComplexScheme) -> PlumbingTree {
    let mut g = build_gamma(s);
    let st = scheme::stats(s);
    for (r, rs) in st.regions.iter().enumerate() {
        let sign = if rs.parity == 0 { 1 } else { -1 };
        g.arrows.push(Arrow { tail: 3 + r, sign, head: None });
    }
    g
}

/// Symmetric integer matrix indexed by vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl PlumbingMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "square matrix expected");
        Self { dim, entries: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let entries = idx.iter().flat_map(|&i| idx.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
        Self { dim: idx.len(), entries }
    }
}

pub fn plumbing_matrix(g: &PlumbingTree) -> PlumbingMatrix {
    let n = g.len();
    let mut entries = vec![0; n * n];
    for v in &g.vertices {
        entries[v.id * n + v.id] = v.weight;
    }
    for &(a, b) in &g.edges {
        entries[a * n + b] = 1;
        entries[b * n + a] = 1;
    }
    PlumbingMatrix { dim: n, entries }
}

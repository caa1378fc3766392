//! Simple graphs, their edge ideals, and checks of the path-length
//! propositions on Lyubeznik edge ideals.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::invariants::{is_lyubeznik, is_totally_lyubeznik, SearchConfig, SearchMode};
use crate::monomial::{Monomial, VariableContext};

/// Default bound on the vertex count for exhaustive path search.
pub const DEFAULT_MAX_PATH_VERTICES: usize = 12;

/// Vertices in declaration order and edges in listing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: VariableContext,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let vertices = VariableContext::new(vertices)?;
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidGraph(format!("edge {} has an undeclared endpoint", k + 1)));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at `{}`", vertices.names()[a])));
            }
            let key = (a.min(b), a.max(b));
            if edges[..k].iter().any(|&(c, d)| (c.min(d), c.max(d)) == key) {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {} {}",
                    vertices.names()[a],
                    vertices.names()[b]
                )));
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[String] {
        self.vertices.names()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_label(&self, k: usize) -> String {
        let (a, b) = self.edges[k];
        format!("{}{}", self.vertices.names()[a], self.vertices.names()[b])
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Graph file rendering; parses back to an equal graph.
    pub fn to_graph_file(&self) -> String {
        let mut out = format!("vertex {}\n", self.vertices.names().join(" "));
        for &(a, b) in &self.edges {
            out.push_str(&format!("edge {} {}\n", self.vertices.names()[a], self.vertices.names()[b]));
        }
        out
    }
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{}", i + 1)
            }
        })
        .collect()
}

/// The path with `n` vertices `a-b-c-...`.
pub fn path_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(letters(n), (1..n).map(|i| (i - 1, i)).collect()).expect("valid path")
}

/// The cycle with `n ≥ 3` vertices; the closing edge joins the first and
/// last vertex and is listed last.
pub fn cycle_graph(n: usize) -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    SimpleGraph::new(letters(n), edges).expect("valid cycle")
}

/// The star with centre `a` and `leaves` leaves.
pub fn star_graph(leaves: usize) -> SimpleGraph {
    SimpleGraph::new(letters(leaves + 1), (1..=leaves).map(|i| (0, i)).collect()).expect("valid star")
}

/// The complete graph, edges in lexicographic order.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    SimpleGraph::new(letters(n), edges).expect("valid complete graph")
}

/// Parses `vertex a b c` and `edge a b` lines; `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertex") => vertices.extend(words.map(str::to_string)),
            Some("edge") => {
                let ends: Vec<&str> = words.collect();
                if ends.len() != 2 {
                    return Err(Error::Syntax {
                        line: line_no,
                        column: 1,
                        message: "`edge` takes two vertices".into(),
                    });
                }
                let find = |v: &str| {
                    vertices.iter().position(|w| w == v).ok_or_else(|| Error::UnknownVariable {
                        line: line_no,
                        name: v.to_string(),
                    })
                };
                edges.push((find(ends[0])?, find(ends[1])?));
            }
            Some(other) => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: format!("unknown keyword `{other}`"),
                })
            }
            None => {}
        }
    }
    SimpleGraph::new(vertices, edges)
}

/// One squarefree quadratic generator per edge, in edge order.
pub fn edge_ideal(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::InvalidGraph("no edges".into()));
    }
    let n = graph.vertices.len();
    let gens = graph
        .edges
        .iter()
        .map(|&(a, b)| {
            let mut e = vec![0; n];
            e[a] = 1;
            e[b] = 1;
            Monomial::new(e)
        })
        .collect();
    Ok(MonomialIdeal::new(graph.vertices.clone(), gens)?.0)
}

/// Most edges on a simple path, by depth-first search from every vertex.
pub fn longest_path_edges(graph: &SimpleGraph, max_vertices: usize) -> Result<usize> {
    let n = graph.vertices.len();
    if n > max_vertices {
        return Err(Error::TooManyGenerators {
            count: n,
            bound: max_vertices,
        });
    }
    fn extend(v: usize, adj: &[Vec<usize>], seen: &mut Vec<bool>) -> usize {
        let mut best = 0;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                best = best.max(1 + extend(w, adj, seen));
                seen[w] = false;
            }
        }
        best
    }
    let adj = graph.adjacency();
    let mut seen = vec![false; n];
    let mut best = 0;
    for v in 0..n {
        seen[v] = true;
        best = best.max(extend(v, &adj, &mut seen));
        seen[v] = false;
    }
    Ok(best)
}

/// How the length of a path is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathConvention {
    Edges,
    Vertices,
}

impl PathConvention {
    fn length(self, edges: usize) -> usize {
        match self {
            PathConvention::Edges => edges,
            PathConvention::Vertices => edges + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionCheck {
    pub proposition: String,
    pub convention: Option<PathConvention>,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl PropositionCheck {
    /// The implication holds on this graph.
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub longest_path_edges: usize,
    pub lyubeznik: bool,
    pub totally_lyubeznik: bool,
    /// Least order (0-based) under which the resolution is not minimal.
    pub non_minimal_order: Option<Vec<usize>>,
    pub checks: Vec<PropositionCheck>,
}

impl GraphReport {
    /// Checks whose hypothesis holds but whose conclusion fails.
    pub fn findings(&self) -> impl Iterator<Item = &PropositionCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

/// Edges of the graph with isolated vertices dropped form a single cycle of
/// length `k`.
fn is_cycle_of_length(graph: &SimpleGraph, k: usize) -> bool {
    if graph.edges.len() != k {
        return false;
    }
    let adj = graph.adjacency();
    let touched: Vec<usize> = (0..adj.len()).filter(|&v| !adj[v].is_empty()).collect();
    if touched.len() != k || touched.iter().any(|&v| adj[v].len() != 2) {
        return false;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![touched[0]];
    while let Some(v) = stack.pop() {
        if !std::mem::replace(&mut seen[v], true) {
            stack.extend(adj[v].iter().copied());
        }
    }
    touched.iter().all(|&v| seen[v])
}

/// Evaluates the graph propositions on `graph`: the triangle is totally
/// Lyubeznik; no path of length ≥ 3 implies totally Lyubeznik; no path of
/// length ≥ 4 implies Lyubeznik; the 4-cycle is not Lyubeznik. The
/// path-length ones are evaluated under both counting conventions.
pub fn check_graph_propositions(graph: &SimpleGraph, config: &SearchConfig) -> Result<GraphReport> {
    let ideal = Arc::new(edge_ideal(graph)?);
    let exhaustive = SearchConfig {
        mode: SearchMode::Exhaustive,
        ..*config
    };
    let longest = longest_path_edges(graph, DEFAULT_MAX_PATH_VERTICES.max(graph.vertices.len()))?;
    let lyubeznik = is_lyubeznik(&ideal, &exhaustive)?.lyubeznik;
    let totally = is_totally_lyubeznik(&ideal, &exhaustive)?;
    let mut checks = vec![PropositionCheck {
        proposition: "triangle is totally Lyubeznik".into(),
        convention: None,
        hypothesis: is_cycle_of_length(graph, 3),
        conclusion: totally.totally,
    }];
    for convention in [PathConvention::Edges, PathConvention::Vertices] {
        let len = convention.length(longest);
        checks.push(PropositionCheck {
            proposition: "no path of length >= 3 implies totally Lyubeznik".into(),
            convention: Some(convention),
            hypothesis: len < 3,
            conclusion: totally.totally,
        });
        checks.push(PropositionCheck {
            proposition: "no path of length >= 4 implies Lyubeznik".into(),
            convention: Some(convention),
            hypothesis: len < 4,
            conclusion: lyubeznik,
        });
    }
    checks.push(PropositionCheck {
        proposition: "4-cycle is not Lyubeznik".into(),
        convention: None,
        hypothesis: is_cycle_of_length(graph, 4),
        conclusion: !lyubeznik,
    });
    Ok(GraphReport {
        longest_path_edges: longest,
        lyubeznik,
        totally_lyubeznik: totally.totally,
        non_minimal_order: totally.counterexample,
        checks,
    })
}

/// Paths, cycles C3 to C6, stars and K4.
pub fn graph_corpus() -> Vec<(String, SimpleGraph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("path-{n}"), path_graph(n)));
    }
    for n in 3..=6 {
        out.push((format!("cycle-{n}"), cycle_graph(n)));
    }
    for k in 2..=4 {
        out.push((format!("star-{k}"), star_graph(k)));
    }
    out.push(("complete-4".into(), complete_graph(4)));
    out
}

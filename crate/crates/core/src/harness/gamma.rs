//! The region graph `Gamma_w` of the inversion arrangement next to the Hasse
//! diagram of `[id, w]`.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;

use crate::arrangement::inversion_graph;
use crate::bruhat::{lower_interval, BruhatInterval};
use crate::dot;
use crate::error::{Error, Result};
use crate::graph::{acyclic_orientations, AcyclicOrientation};
use crate::perm::Permutation;

/// Largest `n` accepted by [`explore_gamma`].
pub const GAMMA_MAX_N: usize = 7;
/// Embedding search runs only when both graphs have at most this many nodes.
pub const EMBED_MAX_NODES: usize = 200;

/// Regions of the inversion arrangement as nodes, leveled by descent count,
/// with an edge `O -> O'` when `O'` reverses one more edge than `O` and
/// otherwise agrees with it (the regions share a wall).
#[derive(Clone, Debug)]
pub struct RegionGraph {
    pub w: Permutation,
    pub nodes: Vec<AcyclicOrientation>,
    pub levels: Vec<usize>,
    /// `(lower, upper)` node indices, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl RegionGraph {
    pub fn level_counts(&self) -> Vec<u64> {
        tally(self.levels.iter().copied())
    }

    /// Entry `k` counts edges from level `k` to level `k + 1`.
    pub fn edge_level_counts(&self) -> Vec<u64> {
        tally(self.edges.iter().map(|&(lo, _)| self.levels[lo]))
    }

    pub fn to_dot(&self) -> String {
        let edges = inversion_graph(&self.w).graph().edges();
        let nodes: Vec<(String, String)> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let descents = edges
                    .iter()
                    .zip(o.reversed())
                    .filter(|(_, &r)| r)
                    .map(|(&(a, b), _)| format!("{b}>{a}"))
                    .join(",");
                let label = if descents.is_empty() { "none".to_string() } else { descents };
                (format!("r{i}"), label)
            })
            .collect();
        let arcs: Vec<(String, String)> =
            self.edges.iter().map(|&(a, b)| (format!("r{a}"), format!("r{b}"))).collect();
        dot::render(dot::Kind::Directed, "Gamma", &nodes, &arcs)
    }
}

pub fn region_graph(w: &Permutation) -> RegionGraph {
    let g = inversion_graph(w);
    let nodes: Vec<AcyclicOrientation> = acyclic_orientations(g.graph()).collect();
    let index: HashMap<&[bool], usize> =
        nodes.iter().enumerate().map(|(i, o)| (o.reversed(), i)).collect();
    let levels: Vec<usize> = nodes.iter().map(|o| o.descent_count()).collect();
    let mut edges = Vec::new();
    for (i, o) in nodes.iter().enumerate() {
        for k in (0..o.reversed().len()).filter(|&k| !o.reversed()[k]) {
            if let Some(up) = o.flip(k) {
                edges.push((i, index[up.reversed()]));
            }
        }
    }
    edges.sort_unstable();
    RegionGraph { w: w.clone(), nodes, levels, edges }
}

/// `[id, w]` with its cover relations.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    pub interval: BruhatInterval,
    pub covers: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn level_counts(&self) -> Vec<u64> {
        self.interval.rank_counts().to_vec()
    }

    pub fn edge_level_counts(&self) -> Vec<u64> {
        let elements = self.interval.elements();
        tally(self.covers.iter().map(|&(lo, _)| elements[lo].length()))
    }

    pub fn to_dot(&self) -> String {
        let nodes: Vec<(String, String)> = self
            .interval
            .elements()
            .iter()
            .map(|u| (u.to_string(), u.to_string()))
            .collect();
        let arcs: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (nodes[a].0.clone(), nodes[b].0.clone()))
            .collect();
        dot::render(dot::Kind::Directed, "Bruhat", &nodes, &arcs)
    }
}

pub fn hasse_diagram(w: &Permutation) -> HasseDiagram {
    let interval = lower_interval(w);
    let covers = interval.cover_relations();
    HasseDiagram { interval, covers }
}

/// Result of searching for an injective, level-preserving map from
/// `Gamma_w` into the Hasse diagram sending every edge to a cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EmbeddingOutcome {
    /// `mapping[i]` is the image of region `i`, as a permutation.
    Found { mapping: Vec<String> },
    NotFound,
    /// Time budget ran out first.
    Inconclusive { steps: u64 },
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub w: Permutation,
    pub gamma_levels: Vec<u64>,
    pub gamma_edge_levels: Vec<u64>,
    pub hasse_levels: Vec<u64>,
    pub hasse_edge_levels: Vec<u64>,
    pub embedding: EmbeddingOutcome,
    #[serde(skip)]
    pub gamma: RegionGraph,
    #[serde(skip)]
    pub hasse: HasseDiagram,
}

impl GammaReport {
    pub fn levels_agree(&self) -> bool {
        self.gamma_levels == self.hasse_levels
    }

    pub fn render_text(&self) -> String {
        let embedding = match &self.embedding {
            EmbeddingOutcome::Found { .. } => "found".to_string(),
            EmbeddingOutcome::NotFound => "not found".to_string(),
            EmbeddingOutcome::Inconclusive { steps } => format!("inconclusive after {steps} steps"),
            EmbeddingOutcome::Skipped { reason } => format!("skipped ({reason})"),
        };
        format!(
            "w = {}\nGamma_w nodes per level: {:?}\nGamma_w edges per level: {:?}\n\
             Hasse nodes per level: {:?}\nHasse edges per level: {:?}\nembedding: {}\n",
            self.w,
            self.gamma_levels,
            self.gamma_edge_levels,
            self.hasse_levels,
            self.hasse_edge_levels,
            embedding
        )
    }
}

pub fn explore_gamma(w: &Permutation, time_budget: Duration) -> Result<GammaReport> {
    if w.size() > GAMMA_MAX_N {
        return Err(Error::ResourceBound {
            what: "region graph size n",
            requested: w.size(),
            ceiling: GAMMA_MAX_N,
        });
    }
    let gamma = region_graph(w);
    let hasse = hasse_diagram(w);
    let embedding = if gamma.nodes.len() > EMBED_MAX_NODES || hasse.interval.size() as usize > EMBED_MAX_NODES {
        EmbeddingOutcome::Skipped {
            reason: format!("more than {EMBED_MAX_NODES} nodes"),
        }
    } else {
        search_embedding(&gamma, &hasse, time_budget)
    };
    Ok(GammaReport {
        w: w.clone(),
        gamma_levels: gamma.level_counts(),
        gamma_edge_levels: gamma.edge_level_counts(),
        hasse_levels: hasse.level_counts(),
        hasse_edge_levels: hasse.edge_level_counts(),
        embedding,
        gamma,
        hasse,
    })
}

fn tally(values: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut counts = Vec::new();
    for v in values {
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
    }
    counts
}

struct Search<'a> {
    order: Vec<usize>,
    /// For each node in `order`, its neighbors earlier in `order`, with
    /// `true` when the neighbor is the upper end of the edge.
    constraints: Vec<Vec<(usize, bool)>>,
    gamma_levels: &'a [usize],
    by_level: Vec<Vec<usize>>,
    up: HashSet<(usize, usize)>,
    mapping: Vec<Option<usize>>,
    used: Vec<bool>,
    deadline: Instant,
    steps: u64,
    timed_out: bool,
}

fn search_embedding(gamma: &RegionGraph, hasse: &HasseDiagram, budget: Duration) -> EmbeddingOutcome {
    let count = gamma.nodes.len();
    let mut adjacency = vec![Vec::new(); count];
    for &(lo, hi) in &gamma.edges {
        adjacency[lo].push((hi, true));
        adjacency[hi].push((lo, false));
    }
    // breadth-first from the bottom region keeps constraints dense
    let mut order = Vec::with_capacity(count);
    let mut seen = vec![false; count];
    let mut roots: Vec<usize> = (0..count).collect();
    roots.sort_by_key(|&i| gamma.levels[i]);
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, _) in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut position = vec![0; count];
    for (p, &x) in order.iter().enumerate() {
        position[x] = p;
    }
    let constraints = order
        .iter()
        .map(|&x| {
            adjacency[x]
                .iter()
                .filter(|&&(y, _)| position[y] < position[x])
                .copied()
                .collect()
        })
        .collect();
    let elements = hasse.interval.elements();
    let mut by_level = vec![Vec::new(); hasse.interval.rank_counts().len()];
    for (i, u) in elements.iter().enumerate() {
        by_level[u.length()].push(i);
    }
    let mut search = Search {
        order,
        constraints,
        gamma_levels: &gamma.levels,
        by_level,
        up: hasse.covers.iter().copied().collect(),
        mapping: vec![None; count],
        used: vec![false; elements.len()],
        deadline: Instant::now() + budget,
        steps: 0,
        timed_out: false,
    };
    if search.extend(0) {
        let mapping = search
            .mapping
            .iter()
            .map(|m| elements[m.expect("complete mapping")].to_string())
            .collect();
        EmbeddingOutcome::Found { mapping }
    } else if search.timed_out {
        EmbeddingOutcome::Inconclusive { steps: search.steps }
    } else {
        EmbeddingOutcome::NotFound
    }
}

impl Search<'_> {
    fn extend(&mut self, p: usize) -> bool {
        if p == self.order.len() {
            return true;
        }
        self.steps += 1;
        if self.steps.is_multiple_of(1024) && Instant::now() > self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let x = self.order[p];
        let Some(candidates) = self.by_level.get(self.gamma_levels[x]) else {
            return false;
        };
        for c in candidates.clone() {
            if self.used[c] {
                continue;
            }
            let fits = self.constraints[p].iter().all(|&(y, y_is_upper)| {
                let image = self.mapping[y].expect("earlier nodes are mapped");
                if y_is_upper {
                    self.up.contains(&(c, image))
                } else {
                    self.up.contains(&(image, c))
                }
            });
            if !fits {
                continue;
            }
            self.used[c] = true;
            self.mapping[x] = Some(c);
            if self.extend(p + 1) {
                return true;
            }
            self.used[c] = false;
            self.mapping[x] = None;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

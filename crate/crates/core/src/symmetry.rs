//! Automorphism groups of small complexes, orbit computations, and
//! isomorphism search.
//!
//! The search is plain backtracking over vertex images with invariant
//! pruning (degree, facet valence, link f-vector); pruning only narrows the
//! candidate order, never the answer.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("complex has {vertices} vertices, over the exhaustive-search guard {guard}")]
    TooLarge { vertices: usize, guard: usize },
}

/// Default vertex guard for exhaustive searches.
pub const DEFAULT_GUARD: usize = 16;

/// A bijection on a vertex label set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexPermutation {
    pub map: BTreeMap<String, String>,
}

impl VertexPermutation {
    pub fn identity(labels: &[String]) -> Self {
        VertexPermutation {
            map: labels.iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    pub fn from_fn(labels: &[String], f: impl Fn(&str) -> String) -> Self {
        VertexPermutation {
            map: labels.iter().map(|l| (l.clone(), f(l))).collect(),
        }
    }

    pub fn apply<'a>(&'a self, label: &'a str) -> &'a str {
        self.map.get(label).map(|s| s.as_str()).unwrap_or(label)
    }

    /// (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        VertexPermutation {
            map: other
                .map
                .iter()
                .map(|(k, v)| (k.clone(), self.apply(v).to_string()))
                .collect(),
        }
    }

    pub fn inverse(&self) -> VertexPermutation {
        VertexPermutation {
            map: self
                .map
                .iter()
                .map(|(k, v)| (v.clone(), k.clone()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    /// Disjoint cycle notation, fixed points omitted.
    pub fn cycle_notation(&self) -> String {
        let mut seen: BTreeSet<&String> = BTreeSet::new();
        let mut cycles = Vec::new();
        for start in self.map.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut cur = &self.map[start];
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                cur = &self.map[cur];
            }
            if cycle.len() > 1 {
                let names: Vec<&str> = cycle.iter().map(|s| s.as_str()).collect();
                cycles.push(format!("({})", names.join(" ")));
            }
        }
        if cycles.is_empty() {
            "()".to_string()
        } else {
            cycles.join("")
        }
    }

    /// Whether the permutation maps the facet set onto itself.
    pub fn preserves(&self, x: &SimplicialComplex) -> bool {
        let facets: BTreeSet<Vec<String>> = x.facet_labels().into_iter().collect();
        for f in &facets {
            let mut image: Vec<String> = f.iter().map(|l| self.apply(l).to_string()).collect();
            image.sort();
            if !facets.contains(&image) {
                return false;
            }
        }
        true
    }
}

/// A permutation group given by generators, with its exact order.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub domain: Vec<String>,
    pub generators: Vec<VertexPermutation>,
    pub order: u64,
}

impl PermutationGroup {
    /// All elements, by closure of the generators.
    pub fn elements(&self) -> Vec<VertexPermutation> {
        closure(&self.generators, &self.domain)
    }

    /// Orbit partition of the given cells under the group action.
    pub fn orbits(&self, cells: &[Vec<String>]) -> Vec<Vec<Vec<String>>> {
        let mut remaining: BTreeSet<Vec<String>> = cells
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort();
                s
            })
            .collect();
        let mut out = Vec::new();
        while let Some(seed) = remaining.iter().next().cloned() {
            let mut orbit: BTreeSet<Vec<String>> = BTreeSet::new();
            let mut frontier = vec![seed.clone()];
            orbit.insert(seed);
            while let Some(cell) = frontier.pop() {
                for g in &self.generators {
                    let mut image: Vec<String> =
                        cell.iter().map(|l| g.apply(l).to_string()).collect();
                    image.sort();
                    if orbit.insert(image.clone()) {
                        frontier.push(image);
                    }
                }
            }
            for c in &orbit {
                remaining.remove(c);
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }
}

fn closure(generators: &[VertexPermutation], domain: &[String]) -> Vec<VertexPermutation> {
    let id = VertexPermutation::identity(domain);
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
    let key = |p: &VertexPermutation| -> Vec<String> { p.map.values().cloned().collect() };
    seen.insert(key(&id));
    let mut all = vec![id];
    let mut frontier = 0;
    while frontier < all.len() {
        let cur = all[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = g.compose(&cur);
            if seen.insert(key(&next)) {
                all.push(next);
            }
        }
    }
    all
}

/// Per-vertex invariant used for candidate pruning: degree, facet valence,
/// and the link's f-vector.
fn vertex_invariants(x: &SimplicialComplex) -> Vec<Vec<u64>> {
    let n = x.vertex_count();
    let mut degree = vec![0u64; n];
    for e in x.faces_of_dim(1) {
        degree[e[0] as usize] += 1;
        degree[e[1] as usize] += 1;
    }
    let mut valence = vec![0u64; n];
    for f in x.facets() {
        for &v in f {
            valence[v as usize] += 1;
        }
    }
    (0..n)
        .map(|v| {
            let mut inv = vec![degree[v], valence[v]];
            if let Ok(link) = x.link(x.label(v as u32)) {
                inv.extend(link.f_vector().0);
            }
            inv
        })
        .collect()
}

struct Search<'a> {
    x: &'a SimplicialComplex,
    y: &'a SimplicialComplex,
    x_adj: Vec<Vec<bool>>,
    y_adj: Vec<Vec<bool>>,
    x_inv: Vec<Vec<u64>>,
    y_inv: Vec<Vec<u64>>,
    y_facets: BTreeSet<Vec<u32>>,
    assignment: Vec<Option<u32>>,
    used: Vec<bool>,
    solutions: Vec<Vec<u32>>,
    stop_at_first: bool,
}

fn adjacency(x: &SimplicialComplex) -> Vec<Vec<bool>> {
    let n = x.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in x.faces_of_dim(1) {
        adj[e[0] as usize][e[1] as usize] = true;
        adj[e[1] as usize][e[0] as usize] = true;
    }
    adj
}

impl<'a> Search<'a> {
    fn new(x: &'a SimplicialComplex, y: &'a SimplicialComplex, stop_at_first: bool) -> Self {
        Search {
            x,
            y,
            x_adj: adjacency(x),
            y_adj: adjacency(y),
            x_inv: vertex_invariants(x),
            y_inv: vertex_invariants(y),
            y_facets: y.facets().iter().cloned().collect(),
            assignment: vec![None; x.vertex_count()],
            used: vec![false; y.vertex_count()],
            solutions: Vec::new(),
            stop_at_first,
        }
    }

    fn feasible(&self) -> bool {
        if self.x.vertex_count() != self.y.vertex_count()
            || self.x.facet_count() != self.y.facet_count()
            || self.x.f_vector() != self.y.f_vector()
        {
            return false;
        }
        let mut a = self.x_inv.clone();
        let mut b = self.y_inv.clone();
        a.sort();
        b.sort();
        a == b
    }

    fn run(&mut self) {
        if !self.feasible() {
            return;
        }
        self.extend(0);
    }

    fn extend(&mut self, v: usize) {
        if self.stop_at_first && !self.solutions.is_empty() {
            return;
        }
        let n = self.x.vertex_count();
        if v == n {
            let image: Vec<u32> = self.assignment.iter().map(|a| a.unwrap()).collect();
            // Full facet check at the leaf.
            for f in self.x.facets() {
                let mut mapped: Vec<u32> = f.iter().map(|&u| image[u as usize]).collect();
                mapped.sort_unstable();
                if !self.y_facets.contains(&mapped) {
                    return;
                }
            }
            self.solutions.push(image);
            return;
        }
        for w in 0..n {
            if self.used[w] || self.x_inv[v] != self.y_inv[w] {
                continue;
            }
            // Adjacency consistency with everything assigned so far.
            let ok = (0..v).all(|u| {
                let uw = self.assignment[u].unwrap() as usize;
                self.x_adj[v][u] == self.y_adj[w][uw]
            });
            if !ok {
                continue;
            }
            self.assignment[v] = Some(w as u32);
            self.used[w] = true;
            self.extend(v + 1);
            self.assignment[v] = None;
            self.used[w] = false;
        }
    }
}

fn perm_from_image(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    image: &[u32],
) -> VertexPermutation {
    VertexPermutation {
        map: image
            .iter()
            .enumerate()
            .map(|(v, &w)| (x.label(v as u32).to_string(), y.label(w).to_string()))
            .collect(),
    }
}

/// The full automorphism group, by exhaustive backtracking.
///
/// Generators are a greedy reduction of the found elements; the order is
/// the exact count of solutions, cross-checked against the closure of the
/// returned generators.
pub fn automorphism_group(
    x: &SimplicialComplex,
    guard: usize,
) -> Result<PermutationGroup, SymmetryError> {
    if x.vertex_count() > guard {
        return Err(SymmetryError::TooLarge {
            vertices: x.vertex_count(),
            guard,
        });
    }
    let mut search = Search::new(x, x, false);
    search.run();
    let domain: Vec<String> = x.labels().to_vec();
    let perms: Vec<VertexPermutation> = search
        .solutions
        .iter()
        .map(|img| perm_from_image(x, x, img))
        .collect();
    let order = perms.len() as u64;
    // Greedy generating set.
    let mut generators: Vec<VertexPermutation> = Vec::new();
    let mut generated: BTreeSet<Vec<String>> = closure(&generators, &domain)
        .iter()
        .map(|p| p.map.values().cloned().collect())
        .collect();
    for p in &perms {
        let key: Vec<String> = p.map.values().cloned().collect();
        if !generated.contains(&key) {
            generators.push(p.clone());
            generated = closure(&generators, &domain)
                .iter()
                .map(|q| q.map.values().cloned().collect())
                .collect();
            if generated.len() as u64 == order {
                break;
            }
        }
    }
    debug_assert_eq!(generated.len() as u64, order);
    Ok(PermutationGroup {
        domain,
        generators,
        order,
    })
}

/// Facet-preservation check for each given permutation.
pub fn verify_automorphisms(x: &SimplicialComplex, perms: &[VertexPermutation]) -> Vec<bool> {
    perms.iter().map(|p| p.preserves(x)).collect()
}

/// A facet-preserving bijection between two complexes, or None; the search
/// order is deterministic.
pub fn find_isomorphism(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    guard: usize,
) -> Result<Option<VertexPermutation>, SymmetryError> {
    if x.vertex_count() > guard || y.vertex_count() > guard {
        return Err(SymmetryError::TooLarge {
            vertices: x.vertex_count().max(y.vertex_count()),
            guard,
        });
    }
    let mut search = Search::new(x, y, true);
    search.run();
    Ok(search
        .solutions
        .first()
        .map(|img| perm_from_image(x, y, img)))
}

//! Abstract simplicial complexes over opaque string labels.
//!
//! A complex is identified with the set of its inclusion-maximal faces
//! (facets). Labels are interned into a canonically ordered table and every
//! enumeration is emitted in that order, so rendered output is byte-stable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Errors from construction and the combinatorial certificates.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet [{}] repeats a vertex", .0.join(" "))]
    DuplicateVertexInFacet(Vec<String>),
    #[error("facet [{}] has {found} vertices, expected {expected}", .facet.join(" "))]
    MixedDimension {
        facet: Vec<String>,
        expected: usize,
        found: usize,
    },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("operation needs a pure complex")]
    NotPure,
    #[error("dimension {0} unsupported here (max 3)")]
    DimensionUnsupported(usize),
    #[error("not a surface at [{}]", .0.join(" "))]
    NotSurface(Vec<String>),
    #[error("not a manifold with boundary")]
    NotManifoldWithBoundary,
    #[error("relabeling is not a bijection at {0}")]
    NotABijection(String),
}

/// Face counts per dimension, `(f_0, f_1, ..., f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// What the link of a vertex turned out to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LinkKind {
    Sphere,
    Disk,
    Cycle,
    Path,
    Point,
    PointPair,
    Other,
}

/// Result of the closed-surface test on a pure 2-complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceCertificate {
    pub is_closed_surface: bool,
    pub connected: bool,
    pub orientable: bool,
    pub euler_characteristic: i64,
    /// Genus, when the surface is closed, connected and orientable.
    pub genus: Option<u64>,
}

/// Result of the manifold tests on a pure complex of dimension at most 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldCertificate {
    pub pure: bool,
    /// Every (d-1)-face lies in at most two facets.
    pub pseudomanifold: bool,
    /// Every (d-1)-face lies in exactly two facets.
    pub closed: bool,
    /// Every vertex link passed its dimension-appropriate sphere/disk test.
    pub links_ok: bool,
    pub orientable: bool,
    /// Per-vertex record of which link shape was found.
    pub link_kinds: BTreeMap<String, LinkKind>,
}

impl ManifoldCertificate {
    /// Closed manifold with all checks green.
    pub fn is_closed_manifold(&self) -> bool {
        self.pure && self.pseudomanifold && self.closed && self.links_ok
    }

    /// Manifold with non-empty boundary, all checks green.
    pub fn is_manifold_with_boundary(&self) -> bool {
        self.pure && self.pseudomanifold && !self.closed && self.links_ok
    }
}

/// A finite abstract simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// Canonically ordered label table.
    labels: Vec<String>,
    /// Facets as sorted index vectors, sorted lexicographically, inclusion-maximal.
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Build from facets, requiring all facets to have the same cardinality.
    pub fn from_facets<I, S>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(collect_label_sets(facets), true)
    }

    /// Build from facets of possibly mixed dimensions.
    pub fn from_facets_permissive<I, S>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(collect_label_sets(facets), false)
    }

    fn build(raw: Vec<Vec<String>>, pure: bool) -> Result<Self, ComplexError> {
        if raw.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        for f in &raw {
            let mut seen = BTreeSet::new();
            for v in f {
                if !seen.insert(v.clone()) {
                    return Err(ComplexError::DuplicateVertexInFacet(f.clone()));
                }
            }
        }
        if pure {
            let expected = raw[0].len();
            for f in &raw {
                if f.len() != expected {
                    return Err(ComplexError::MixedDimension {
                        facet: f.clone(),
                        expected,
                        found: f.len(),
                    });
                }
            }
        }
        let labels: Vec<String> = raw
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<&str, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as u32))
            .collect();
        let mut facets: Vec<Vec<u32>> = raw
            .iter()
            .map(|f| {
                let mut v: Vec<u32> = f.iter().map(|l| index[l.as_str()]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        facets = maximalize(facets);
        Ok(SimplicialComplex { labels, facets })
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, idx: u32) -> &str {
        &self.labels[idx as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(|i| i as u32)
    }

    /// Facets as sorted index vectors (lexicographically ordered).
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Facets rendered back to label vectors.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&v| self.labels[v as usize].clone()).collect())
            .collect()
    }

    /// Dimension `d` of the complex; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.len() == f0.len()),
        }
    }

    /// All k-faces in lexicographic order.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Vec<u32>> {
        let mut out: BTreeSet<Vec<u32>> = BTreeSet::new();
        for f in &self.facets {
            if f.len() > k {
                for c in combinations(f, k + 1) {
                    out.insert(c);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Faces of every dimension, `result[k]` listing the k-faces.
    pub fn all_faces(&self) -> Vec<Vec<Vec<u32>>> {
        match self.dimension() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.faces_of_dim(k)).collect(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        FVector(
            self.all_faces()
                .iter()
                .map(|faces| faces.len() as u64)
                .collect(),
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().alternating_sum()
    }

    /// Whether `face` (sorted indices) is a face of the complex.
    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn contains_face_labels(&self, face: &[&str]) -> bool {
        let mut idx = Vec::with_capacity(face.len());
        for l in face {
            match self.index_of(l) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        self.contains_face(&idx)
    }

    /// The link of a vertex: faces F with v not in F and F + v a face.
    pub fn link(&self, v: &str) -> Result<SimplicialComplex, ComplexError> {
        let vi = self
            .index_of(v)
            .ok_or_else(|| ComplexError::UnknownVertex(v.to_string()))?;
        let mut candidates: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            if f.contains(&vi) {
                let rest: Vec<String> = f
                    .iter()
                    .filter(|&&u| u != vi)
                    .map(|&u| self.labels[u as usize].clone())
                    .collect();
                if !rest.is_empty() {
                    candidates.push(rest);
                }
            }
        }
        if candidates.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        Self::build(candidates, false)
    }

    /// The subcomplex of (d-1)-faces lying in exactly one facet.
    ///
    /// Empty for a closed pure complex.
    pub fn boundary_subcomplex(&self) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let d = match self.dimension() {
            None => return Ok(SimplicialComplex::empty()),
            Some(0) => return Ok(SimplicialComplex::empty()),
            Some(d) => d,
        };
        let counts = self.cofacet_counts(d - 1);
        let boundary: Vec<Vec<String>> = counts
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(face, _)| {
                face.iter()
                    .map(|&v| self.labels[v as usize].clone())
                    .collect()
            })
            .collect();
        if boundary.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        Self::build(boundary, false)
    }

    /// For each k-face, the number of facets containing it.
    pub fn cofacet_counts(&self, k: usize) -> BTreeMap<Vec<u32>, usize> {
        let mut counts: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for f in &self.facets {
            if f.len() > k {
                for c in combinations(f, k + 1) {
                    *counts.entry(c).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    /// Facet-level union (re-maximalized) over the shared label space.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut all = self.facet_labels();
        all.extend(other.facet_labels());
        if all.is_empty() {
            return SimplicialComplex::empty();
        }
        Self::build(all, false).expect("union of valid complexes is valid")
    }

    /// Face-level intersection of downward closures, re-maximalized.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let theirs: BTreeSet<&str> = other.labels.iter().map(|s| s.as_str()).collect();
        let mut candidates: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            let f_labels: Vec<&str> = f
                .iter()
                .map(|&v| self.labels[v as usize].as_str())
                .collect();
            if !f_labels.iter().any(|l| theirs.contains(l)) {
                continue;
            }
            for g in &other.facets {
                let g_set: BTreeSet<&str> = g
                    .iter()
                    .map(|&v| other.labels[v as usize].as_str())
                    .collect();
                let common: Vec<String> = f_labels
                    .iter()
                    .filter(|l| g_set.contains(**l))
                    .map(|l| l.to_string())
                    .collect();
                if !common.is_empty() {
                    candidates.push(common);
                }
            }
        }
        if candidates.is_empty() {
            return SimplicialComplex::empty();
        }
        Self::build(candidates, false).expect("intersection of valid complexes is valid")
    }

    /// Connectivity of the 1-skeleton.
    pub fn is_connected(&self) -> bool {
        let n = self.labels.len();
        if n <= 1 {
            return true;
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for f in &self.facets {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    adj[f[i] as usize].push(f[j]);
                    adj[f[j] as usize].push(f[i]);
                }
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let n = self.labels.len();
        if n == 0 {
            return 0;
        }
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], v: u32) -> u32 {
            let mut v = v;
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for f in &self.facets {
            for w in f.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        (0..n as u32).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Coherent-orientation test over the facet adjacency graph.
    ///
    /// Requires a pure pseudomanifold; returns false otherwise.
    pub fn is_orientable(&self) -> bool {
        if !self.is_pure() || self.facets.is_empty() {
            return false;
        }
        let d = self.dimension().unwrap();
        if d == 0 {
            return true;
        }
        // ridge -> incident facets (by position of the dropped vertex)
        let mut ridge_map: BTreeMap<Vec<u32>, Vec<(usize, usize)>> = BTreeMap::new();
        for (fi, f) in self.facets.iter().enumerate() {
            for drop in 0..f.len() {
                let ridge: Vec<u32> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                ridge_map.entry(ridge).or_default().push((fi, drop));
            }
        }
        if ridge_map.values().any(|inc| inc.len() > 2) {
            return false;
        }
        let n = self.facets.len();
        let mut sign: Vec<i8> = vec![0; n];
        for start in 0..n {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut stack = vec![start];
            while let Some(fi) = stack.pop() {
                for drop in 0..self.facets[fi].len() {
                    let ridge: Vec<u32> = self.facets[fi]
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    let inc = &ridge_map[&ridge];
                    if inc.len() != 2 {
                        continue;
                    }
                    let (gi, gdrop) = if inc[0].0 == fi && inc[0].1 == drop {
                        inc[1]
                    } else {
                        inc[0]
                    };
                    // Induced orientations on the shared ridge must be opposite:
                    // sign_f * (-1)^drop_f == -sign_g * (-1)^drop_g.
                    let rel = if (drop + gdrop) % 2 == 0 { -1 } else { 1 };
                    let want = sign[fi] * rel;
                    if sign[gi] == 0 {
                        sign[gi] = want;
                        stack.push(gi);
                    } else if sign[gi] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Closed-surface test for a pure 2-complex.
    pub fn classify_surface(&self) -> Result<SurfaceCertificate, ComplexError> {
        if self.is_empty() || self.dimension() != Some(2) || !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        for (edge, count) in self.cofacet_counts(1) {
            if count != 2 {
                return Err(ComplexError::NotSurface(
                    edge.iter()
                        .map(|&v| self.labels[v as usize].clone())
                        .collect(),
                ));
            }
        }
        for v in self.labels.clone() {
            let link = self.link(&v)?;
            if graph_shape(&link) != Some(GraphShape::Cycle) {
                return Err(ComplexError::NotSurface(vec![v]));
            }
        }
        let connected = self.is_connected();
        let orientable = self.is_orientable();
        let chi = self.euler_characteristic();
        let genus = if connected && orientable {
            Some(((2 - chi) / 2) as u64)
        } else {
            None
        };
        Ok(SurfaceCertificate {
            is_closed_surface: true,
            connected,
            orientable,
            euler_characteristic: chi,
            genus,
        })
    }

    /// Pseudomanifold, closedness, link, and orientability tests for a pure
    /// complex of dimension at most 3.
    pub fn certify_manifold(&self) -> Result<ManifoldCertificate, ComplexError> {
        let d = self.dimension().unwrap_or_default();
        if d > 3 {
            return Err(ComplexError::DimensionUnsupported(d));
        }
        if !self.is_pure() || self.is_empty() {
            return Ok(ManifoldCertificate {
                pure: self.is_pure(),
                pseudomanifold: false,
                closed: false,
                links_ok: false,
                orientable: false,
                link_kinds: BTreeMap::new(),
            });
        }
        let (pseudomanifold, closed) = if d == 0 {
            (true, true)
        } else {
            let counts = self.cofacet_counts(d - 1);
            let pm = counts.values().all(|&c| c <= 2);
            let cl = counts.values().all(|&c| c == 2);
            (pm, cl)
        };
        let mut link_kinds = BTreeMap::new();
        let mut links_ok = true;
        if d > 0 {
            for v in self.labels.clone() {
                let link = self.link(&v)?;
                let kind = match d {
                    1 => match link.vertex_count() {
                        2 => LinkKind::PointPair,
                        1 => LinkKind::Point,
                        _ => LinkKind::Other,
                    },
                    2 => match graph_shape(&link) {
                        Some(GraphShape::Cycle) => LinkKind::Cycle,
                        Some(GraphShape::Path) => LinkKind::Path,
                        _ => LinkKind::Other,
                    },
                    3 => {
                        if link
                            .classify_surface()
                            .map(|c| c.is_closed_surface && c.connected && c.genus == Some(0))
                            .unwrap_or(false)
                        {
                            LinkKind::Sphere
                        } else if is_disk(&link) {
                            LinkKind::Disk
                        } else {
                            LinkKind::Other
                        }
                    }
                    _ => LinkKind::Other,
                };
                let ok = if closed {
                    matches!(
                        kind,
                        LinkKind::Sphere | LinkKind::Cycle | LinkKind::PointPair
                    )
                } else {
                    kind != LinkKind::Other
                };
                if !ok {
                    links_ok = false;
                }
                link_kinds.insert(v, kind);
            }
        }
        let orientable = pseudomanifold && self.is_orientable();
        Ok(ManifoldCertificate {
            pure: true,
            pseudomanifold,
            closed,
            links_ok,
            orientable,
            link_kinds,
        })
    }

    /// Apply a label bijection; all structure is carried along.
    pub fn relabel(
        &self,
        map: &BTreeMap<String, String>,
    ) -> Result<SimplicialComplex, ComplexError> {
        let mut seen = BTreeSet::new();
        for l in &self.labels {
            let target = map
                .get(l)
                .ok_or_else(|| ComplexError::NotABijection(l.clone()))?;
            if !seen.insert(target.clone()) {
                return Err(ComplexError::NotABijection(target.clone()));
            }
        }
        let facets: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&v| map[&self.labels[v as usize]].clone())
                    .collect()
            })
            .collect();
        Self::build(facets, false)
    }

    /// Canonical facet-list text: one facet per line, labels space-separated,
    /// labels sorted within a line and lines sorted lexicographically.
    pub fn to_facet_list(&self) -> String {
        let mut lines: Vec<String> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&v| self.labels[v as usize].as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        lines.sort();
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    /// Parse the facet-list text format: `#` starts a comment, blank lines
    /// are ignored.
    pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex, ComplexError> {
        let mut facets: Vec<Vec<String>> = Vec::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            };
            let toks: Vec<String> = line.split_whitespace().map(|s| s.to_string()).collect();
            if !toks.is_empty() {
                facets.push(toks);
            }
        }
        Self::build(facets, false)
    }
}

fn collect_label_sets<I, S>(facets: I) -> Vec<Vec<String>>
where
    I: IntoIterator,
    I::Item: IntoIterator<Item = S>,
    S: Into<String>,
{
    facets
        .into_iter()
        .map(|f| f.into_iter().map(|s| s.into()).collect())
        .collect()
}

/// Keep only inclusion-maximal sets; result sorted lexicographically.
fn maximalize(mut sets: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    sets.sort_unstable();
    sets.dedup();
    let mut keep: Vec<bool> = vec![true; sets.len()];
    for i in 0..sets.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..sets.len() {
            if i != j && keep[i] && is_subset(&sets[i], &sets[j]) && sets[i] != sets[j] {
                keep[i] = false;
            }
        }
    }
    sets.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(s, _)| s)
        .collect()
}

/// Subset test on sorted vectors.
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// All k-subsets of a sorted slice, in lexicographic order.
pub(crate) fn combinations(set: &[u32], k: usize) -> Vec<Vec<u32>> {
    let n = set.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| set[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum GraphShape {
    Cycle,
    Path,
}

/// Shape of a pure 1-complex: a single cycle, a single open path, or neither.
pub(crate) fn graph_shape(link: &SimplicialComplex) -> Option<GraphShape> {
    if link.is_empty() || link.dimension() != Some(1) || !link.is_pure() {
        return None;
    }
    if !link.is_connected() {
        return None;
    }
    let n = link.vertex_count();
    let edges = link.facets().len();
    let mut degree = vec![0usize; n];
    for e in link.facets() {
        degree[e[0] as usize] += 1;
        degree[e[1] as usize] += 1;
    }
    if degree.iter().all(|&d| d == 2) && edges == n {
        return Some(GraphShape::Cycle);
    }
    let ones = degree.iter().filter(|&&d| d == 1).count();
    let twos = degree.iter().filter(|&&d| d == 2).count();
    if ones == 2 && ones + twos == n && edges + 1 == n {
        return Some(GraphShape::Path);
    }
    None
}

/// Disk test for a pure 2-complex: connected, every edge in at most two
/// triangles, every vertex link a single path or cycle, boundary a single
/// cycle, Euler characteristic 1.
pub(crate) fn is_disk(x: &SimplicialComplex) -> bool {
    if x.is_empty() || x.dimension() != Some(2) || !x.is_pure() || !x.is_connected() {
        return false;
    }
    if x.cofacet_counts(1).values().any(|&c| c > 2) {
        return false;
    }
    for v in x.labels() {
        let link = match x.link(v) {
            Ok(l) => l,
            Err(_) => return false,
        };
        if graph_shape(&link).is_none() {
            return false;
        }
    }
    let boundary = match x.boundary_subcomplex() {
        Ok(b) => b,
        Err(_) => return false,
    };
    if graph_shape(&boundary) != Some(GraphShape::Cycle) {
        return false;
    }
    x.euler_characteristic() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facets(vec![
            vec!["1", "2", "3"],
            vec!["1", "2", "4"],
            vec!["1", "3", "4"],
            vec!["2", "3", "4"],
        ])
        .unwrap()
    }

    fn simplex4_boundary() -> SimplicialComplex {
        let labels = ["1", "2", "3", "4", "5"];
        let mut facets = Vec::new();
        for drop in 0..5 {
            facets.push(
                labels
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, l)| l.to_string())
                    .collect::<Vec<_>>(),
            );
        }
        SimplicialComplex::from_facets(facets).unwrap()
    }

    #[test]
    fn tetra_boundary_f_vector() {
        let x = tetra_boundary();
        assert_eq!(x.f_vector(), FVector(vec![4, 6, 4]));
        assert_eq!(x.euler_characteristic(), 2);
    }

    #[test]
    fn simplex4_boundary_f_vector_and_chi() {
        let x = simplex4_boundary();
        assert_eq!(x.f_vector(), FVector(vec![5, 10, 10, 5]));
        assert_eq!(x.euler_characteristic(), 0);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let err = SimplicialComplex::from_facets(vec![vec!["1", "1", "2"]]).unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateVertexInFacet(_)));
    }

    #[test]
    fn mixed_dimension_rejected_in_pure_mode() {
        let err =
            SimplicialComplex::from_facets(vec![vec!["1", "2", "3"], vec!["4", "5"]]).unwrap_err();
        assert!(matches!(err, ComplexError::MixedDimension { .. }));
        assert!(SimplicialComplex::from_facets_permissive(vec![
            vec!["1", "2", "3"],
            vec!["4", "5"]
        ])
        .is_ok());
    }

    #[test]
    fn empty_input_rejected() {
        let err = SimplicialComplex::from_facets(Vec::<Vec<&str>>::new()).unwrap_err();
        assert_eq!(err, ComplexError::EmptyInput);
    }

    #[test]
    fn non_maximal_facets_dropped() {
        let x = SimplicialComplex::from_facets_permissive(vec![
            vec!["a", "b", "c"],
            vec!["a", "b"],
            vec!["d"],
        ])
        .unwrap();
        assert_eq!(x.facet_count(), 2);
        assert!(x.contains_face_labels(&["a", "b"]));
    }

    #[test]
    fn link_of_simplex4_vertex_is_tetra_boundary() {
        let x = simplex4_boundary();
        let link = x.link("1").unwrap();
        assert_eq!(link.f_vector(), FVector(vec![4, 6, 4]));
        let cert = link.classify_surface().unwrap();
        assert!(cert.is_closed_surface && cert.orientable);
        assert_eq!(cert.genus, Some(0));
    }

    #[test]
    fn boundary_of_closed_complex_is_empty() {
        assert!(simplex4_boundary()
            .boundary_subcomplex()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn boundary_of_boundary_is_empty() {
        let solid = SimplicialComplex::from_facets(vec![vec!["1", "2", "3", "4"]]).unwrap();
        let b = solid.boundary_subcomplex().unwrap();
        assert_eq!(b.f_vector(), FVector(vec![4, 6, 4]));
        assert!(b.boundary_subcomplex().unwrap().is_empty());
    }

    #[test]
    fn certify_simplex4_boundary() {
        let cert = simplex4_boundary().certify_manifold().unwrap();
        assert!(cert.is_closed_manifold());
        assert!(cert.orientable);
        assert!(cert.link_kinds.values().all(|&k| k == LinkKind::Sphere));
    }

    #[test]
    fn triple_incident_triangle_is_not_pseudomanifold() {
        let x = SimplicialComplex::from_facets(vec![
            vec!["1", "2", "3", "4"],
            vec!["1", "2", "3", "5"],
            vec!["1", "2", "3", "6"],
        ])
        .unwrap();
        let cert = x.certify_manifold().unwrap();
        assert!(!cert.pseudomanifold);
    }

    #[test]
    fn union_is_idempotent_and_intersection_commutes() {
        let x = tetra_boundary();
        assert_eq!(x.union(&x), x);
        let y =
            SimplicialComplex::from_facets(vec![vec!["2", "3", "4"], vec!["2", "3", "5"]]).unwrap();
        assert_eq!(x.intersection(&y), y.intersection(&x));
        assert!(x.intersection(&y).contains_face_labels(&["2", "3", "4"]));
    }

    #[test]
    fn facet_list_round_trip_is_canonical() {
        let x = tetra_boundary();
        let text = x.to_facet_list();
        let y = SimplicialComplex::parse_facet_list(&text).unwrap();
        assert_eq!(x, y);
        assert_eq!(text, y.to_facet_list());
        let commented = format!("# boundary of a tetrahedron\n\n{}", text);
        assert_eq!(SimplicialComplex::parse_facet_list(&commented).unwrap(), x);
    }

    #[test]
    fn relabel_commutes_with_f_vector() {
        let x = simplex4_boundary();
        let map: BTreeMap<String, String> = x
            .labels()
            .iter()
            .map(|l| (l.clone(), format!("w{}", l)))
            .collect();
        let y = x.relabel(&map).unwrap();
        assert_eq!(x.f_vector(), y.f_vector());
        assert!(y.contains_face_labels(&["w1", "w2"]));
    }

    #[test]
    fn error_paths_name_the_offender() {
        let x = tetra_boundary();
        assert_eq!(
            x.link("missing").unwrap_err(),
            ComplexError::UnknownVertex("missing".to_string())
        );
        let mixed =
            SimplicialComplex::from_facets_permissive(vec![vec!["1", "2", "3"], vec!["4", "5"]])
                .unwrap();
        assert_eq!(
            mixed.boundary_subcomplex().unwrap_err(),
            ComplexError::NotPure
        );
        let four = SimplicialComplex::from_facets(vec![vec!["1", "2", "3", "4", "5"]]).unwrap();
        assert_eq!(
            four.certify_manifold().unwrap_err(),
            ComplexError::DimensionUnsupported(4)
        );
    }

    #[test]
    fn moebius_band_is_not_orientable() {
        // 5-vertex Moebius band
        let x = SimplicialComplex::from_facets(vec![
            vec!["0", "1", "2"],
            vec!["1", "2", "3"],
            vec!["2", "3", "4"],
            vec!["3", "4", "0"],
            vec!["4", "0", "1"],
        ])
        .unwrap();
        assert!(!x.is_orientable());
        let cert = x.certify_manifold().unwrap();
        assert!(cert.pure && cert.pseudomanifold && !cert.closed && cert.links_ok);
        assert!(!cert.orientable);
    }
}

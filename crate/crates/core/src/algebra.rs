//! Integer chain complexes, Smith normal form, homology, cycle classes,
//! and edge-path group presentations.
//!
//! All arithmetic is arbitrary precision. The boundary operator convention
//! is rows = (k-1)-faces, columns = k-faces, so `∂_{k-1} · ∂_k = 0` as
//! written.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

pub use num_bigint::BigInt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("not a closed edge path: {0}")]
    NotAClosedPath(String),
    #[error("H1 has torsion; classes over a free basis are unsupported")]
    TorsionUnsupported,
    #[error("complex is not connected")]
    Disconnected,
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row a += q * row b
    pub fn row_add(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = self.get(b, c) * q;
            if !add.is_zero() {
                let v = self.get(a, c) + add;
                self.set(a, c, v);
            }
        }
    }

    /// col a += q * col b
    pub fn col_add(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = self.get(r, b) * q;
            if !add.is_zero() {
                let v = self.get(r, a) + add;
                self.set(r, a, v);
            }
        }
    }

    pub fn negate_row(&mut self, a: usize) {
        for c in 0..self.cols {
            let v = -self.get(a, c).clone();
            self.set(a, c, v);
        }
    }

    pub fn negate_col(&mut self, a: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, a).clone();
            self.set(r, a, v);
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = BigInt::zero();
                for (c, entry) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !entry.is_zero() {
                        acc += a * entry;
                    }
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Signed incidence matrices of a complex under the canonical vertex order.
#[derive(Debug, Clone)]
pub struct BoundaryMatrices {
    /// `faces[k]` lists the k-faces in lexicographic order.
    pub faces: Vec<Vec<Vec<u32>>>,
    /// `mats[k-1]` is the boundary operator from k-faces to (k-1)-faces.
    pub mats: Vec<IntMatrix>,
}

/// Exact signed incidence matrices; `∂_{k-1} · ∂_k = 0` by construction.
pub fn boundary_matrices(x: &SimplicialComplex) -> BoundaryMatrices {
    let faces = x.all_faces();
    let mut mats = Vec::new();
    for k in 1..faces.len() {
        let lower = &faces[k - 1];
        let upper = &faces[k];
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        for (c, face) in upper.iter().enumerate() {
            for (p, _) in face.iter().enumerate() {
                let sub: Vec<u32> = face
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != p)
                    .map(|(_, &v)| v)
                    .collect();
                let r = lower.binary_search(&sub).expect("face closure");
                let sign = if p % 2 == 0 { 1i64 } else { -1i64 };
                m.set(r, c, BigInt::from(sign));
            }
        }
        mats.push(m);
    }
    BoundaryMatrices { faces, mats }
}

/// Smith normal form outcome.
#[derive(Debug, Clone)]
pub struct Snf {
    /// Nonzero invariant factors, each dividing the next.
    pub factors: Vec<BigInt>,
    pub rank: usize,
    /// Transform matrices with `u * a * v = diag(factors)`, when requested.
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: Option<IntMatrix>,
}

/// Smith normal form by pivoting on the smallest nonzero entry.
///
/// Exact over arbitrary-precision integers; the divisibility chain is
/// enforced during elimination.
pub fn smith_normal_form(a: &IntMatrix, with_transforms: bool) -> Snf {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut u = if with_transforms {
        Some(IntMatrix::identity(rows))
    } else {
        None
    };
    let mut v = if with_transforms {
        Some(IntMatrix::identity(cols))
    } else {
        None
    };
    let mut v_inv = if with_transforms {
        Some(IntMatrix::identity(cols))
    } else {
        None
    };

    let mut k = 0;
    while k < rows && k < cols {
        // Locate a pivot: smallest nonzero magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        'scan: for r in k..rows {
            for c in k..cols {
                let e = m.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let better = match pivot {
                    Some((pr, pc)) => e.abs() < m.get(pr, pc).abs(),
                    None => true,
                };
                if better {
                    pivot = Some((r, c));
                    if e.abs().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let (pr, pc) = match pivot {
            None => break,
            Some(p) => p,
        };
        m.swap_rows(k, pr);
        if let Some(u) = u.as_mut() {
            u.swap_rows(k, pr);
        }
        m.swap_cols(k, pc);
        if let Some(v) = v.as_mut() {
            v.swap_cols(k, pc);
        }
        if let Some(vi) = v_inv.as_mut() {
            vi.swap_rows(k, pc);
        }
        if m.get(k, k).is_negative() {
            m.negate_row(k);
            if let Some(u) = u.as_mut() {
                u.negate_row(k);
            }
        }

        // Reduce column k, then row k; restart from pivot search whenever a
        // remainder smaller than the pivot appears.
        let mut dirty = false;
        for r in k + 1..rows {
            if m.get(r, k).is_zero() {
                continue;
            }
            let q = m.get(r, k).div_floor(m.get(k, k));
            m.row_add(r, k, &-q.clone());
            if let Some(u) = u.as_mut() {
                u.row_add(r, k, &-q);
            }
            if !m.get(r, k).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        for c in k + 1..cols {
            if m.get(k, c).is_zero() {
                continue;
            }
            let q = m.get(k, c).div_floor(m.get(k, k));
            m.col_add(c, k, &-q.clone());
            if let Some(v) = v.as_mut() {
                v.col_add(c, k, &-q.clone());
            }
            if let Some(vi) = v_inv.as_mut() {
                vi.row_add(k, c, &q);
            }
            if !m.get(k, c).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }

        // Divisibility: fold in a row holding a non-multiple, if any.
        let pv = m.get(k, k).clone();
        let mut fixed = true;
        'div: for r in k + 1..rows {
            for c in k + 1..cols {
                if !(m.get(r, c) % &pv).is_zero() {
                    m.row_add(k, r, &BigInt::one());
                    if let Some(u) = u.as_mut() {
                        u.row_add(k, r, &BigInt::one());
                    }
                    fixed = false;
                    break 'div;
                }
            }
        }
        if fixed {
            k += 1;
        }
    }

    let mut factors = Vec::new();
    for i in 0..rows.min(cols) {
        let d = m.get(i, i);
        if d.is_zero() {
            break;
        }
        factors.push(d.clone());
    }
    let rank = factors.len();
    Snf {
        factors,
        rank,
        u,
        v,
        v_inv,
    }
}

/// Exact rank over the rationals via fraction-free (Bareiss) elimination.
///
/// Independent of the Smith normal form path; used as a cross-check oracle.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|r| (0..a.cols).map(|c| a.get(r, c).clone()).collect())
        .collect();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pr = match (row..rows).find(|&r| !m[r][col].is_zero()) {
            None => continue,
            Some(p) => p,
        };
        m.swap(row, pr);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// One homology group: free rank plus torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Torsion coefficients > 1, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{}", b)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Per-dimension homology of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    /// Unreduced groups, dimensions 0..=d.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    /// Reduced homology: identical except one fewer `Z` in dimension 0.
    pub fn reduced(&self) -> Vec<HomologyGroup> {
        let mut out = self.groups.clone();
        if let Some(h0) = out.first_mut() {
            h0.betti = h0.betti.saturating_sub(1);
        }
        out
    }

    pub fn betti(&self, dim: usize) -> usize {
        self.groups.get(dim).map(|g| g.betti).unwrap_or(0)
    }

    pub fn is_reduced_trivial(&self) -> bool {
        self.reduced().iter().all(|g| g.is_trivial())
    }

    /// Compact display such as `(Z, 0, 0, Z)`.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Torsion<'a>(&'a [BigInt]);
        impl Serialize for Torsion<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for t in self.0 {
                    match u64::try_from(t) {
                        Ok(n) => seq.serialize_element(&n)?,
                        Err(_) => seq.serialize_element(&t.to_string())?,
                    }
                }
                seq.end()
            }
        }
        struct Group<'a>(&'a HomologyGroup);
        impl Serialize for Group<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
                s.serialize_field("betti", &self.0.betti)?;
                s.serialize_field("torsion", &Torsion(&self.0.torsion))?;
                s.end()
            }
        }
        let mut map = serializer.serialize_map(Some(self.groups.len()))?;
        for (dim, g) in self.groups.iter().enumerate() {
            map.serialize_entry(&dim.to_string(), &Group(g))?;
        }
        map.end()
    }
}

/// Integral homology in all dimensions 0..=d via Smith normal form.
pub fn homology(x: &SimplicialComplex) -> HomologyProfile {
    if x.is_empty() {
        return HomologyProfile { groups: Vec::new() };
    }
    let bm = boundary_matrices(x);
    let d = bm.faces.len() - 1;
    let snfs: Vec<Snf> = bm
        .mats
        .iter()
        .map(|m| smith_normal_form(m, false))
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 || k > d {
            0
        } else {
            snfs[k - 1].rank
        }
    };
    let mut groups = Vec::new();
    for (k, faces) in bm.faces.iter().enumerate() {
        let betti = faces.len() - rank(k) - rank(k + 1);
        let torsion = match snfs.get(k) {
            Some(snf) => snf
                .factors
                .iter()
                .filter(|f| !f.is_one())
                .cloned()
                .collect(),
            None => Vec::new(),
        };
        groups.push(HomologyGroup { betti, torsion });
    }
    HomologyProfile { groups }
}

/// Coordinates of a closed edge path's class over the deterministic H1 basis
/// induced by the Smith normal form change-of-basis.
pub fn h1_class(x: &SimplicialComplex, loop_path: &[&str]) -> Result<Vec<BigInt>, AlgebraError> {
    if loop_path.len() < 2 {
        return Err(AlgebraError::NotAClosedPath("too short".into()));
    }
    if loop_path.first() != loop_path.last() {
        return Err(AlgebraError::NotAClosedPath("endpoints differ".into()));
    }
    let bm = boundary_matrices(x);
    if bm.faces.len() < 2 {
        return Err(AlgebraError::NotAClosedPath("complex has no edges".into()));
    }
    let edges = &bm.faces[1];
    let mut cycle = vec![BigInt::zero(); edges.len()];
    for w in loop_path.windows(2) {
        let a = x
            .index_of(w[0])
            .ok_or_else(|| AlgebraError::NotAClosedPath(format!("unknown vertex {}", w[0])))?;
        let b = x
            .index_of(w[1])
            .ok_or_else(|| AlgebraError::NotAClosedPath(format!("unknown vertex {}", w[1])))?;
        if a == b {
            return Err(AlgebraError::NotAClosedPath(format!(
                "repeated vertex {}",
                w[0]
            )));
        }
        let (key, sign) = if a < b {
            (vec![a, b], 1i64)
        } else {
            (vec![b, a], -1i64)
        };
        let e = edges
            .binary_search(&key)
            .map_err(|_| AlgebraError::NotAClosedPath(format!("missing edge {} {}", w[0], w[1])))?;
        cycle[e] += BigInt::from(sign);
    }

    // Kernel coordinates of cycles via the SNF of d1.
    let d1 = &bm.mats[0];
    let snf1 = smith_normal_form(d1, true);
    let v_inv = snf1.v_inv.as_ref().unwrap();
    let r = snf1.rank;
    let n = edges.len();
    let z = n - r;
    // For a cycle c, D (V^-1 c) = U d1 c = 0, so the first rank coordinates
    // of V^-1 c vanish and the rest are its kernel-basis coordinates.
    let kernel_coords = |vec: &[BigInt]| -> Vec<BigInt> {
        let full = v_inv.mul_vec(vec);
        debug_assert!(full[..r].iter().all(|c| c.is_zero()));
        full[r..].to_vec()
    };
    let y_cycle = {
        // A closed path is a cycle; its image under d1 must vanish.
        let image = d1.mul_vec(&cycle);
        if !image.iter().all(|e| e.is_zero()) {
            return Err(AlgebraError::NotAClosedPath("not a cycle".into()));
        }
        kernel_coords(&cycle)
    };

    // Boundary lattice inside the kernel coordinates.
    let m2 = bm.mats.get(1);
    let mut y = IntMatrix::zeros(z, m2.map(|m| m.cols).unwrap_or(0));
    if let Some(d2) = m2 {
        for c in 0..d2.cols {
            let col: Vec<BigInt> = (0..d2.rows).map(|r2| d2.get(r2, c).clone()).collect();
            let coords = kernel_coords(&col);
            for (i, val) in coords.into_iter().enumerate() {
                y.set(i, c, val);
            }
        }
    }
    let snf_y = smith_normal_form(&y, true);
    if snf_y.factors.iter().any(|f| !f.is_one()) {
        return Err(AlgebraError::TorsionUnsupported);
    }
    let u = snf_y.u.as_ref().unwrap();
    let transformed = u.mul_vec(&y_cycle);
    Ok(transformed[snf_y.rank..].to_vec())
}

/// An edge-path group presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    /// Non-tree edges, as label pairs in canonical order.
    pub generators: Vec<(String, String)>,
    /// Words over signed 1-based generator indices.
    pub relators: Vec<Vec<i64>>,
    pub basepoint: String,
}

impl GroupPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    /// Exponent-sum abelianization: (free rank, torsion coefficients).
    pub fn abelianization(&self) -> (usize, Vec<BigInt>) {
        let g = self.generators.len();
        let mut m = IntMatrix::zeros(g, self.relators.len());
        for (c, rel) in self.relators.iter().enumerate() {
            for &s in rel {
                let idx = (s.unsigned_abs() as usize) - 1;
                let delta = if s > 0 { 1 } else { -1 };
                let v = m.get(idx, c) + BigInt::from(delta);
                m.set(idx, c, v);
            }
        }
        let snf = smith_normal_form(&m, false);
        let torsion: Vec<BigInt> = snf
            .factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect();
        (g - snf.rank, torsion)
    }
}

/// Edge-path presentation of the fundamental group over a deterministic
/// breadth-first spanning tree.
pub fn fundamental_group(
    x: &SimplicialComplex,
    basepoint: &str,
) -> Result<GroupPresentation, AlgebraError> {
    let base = x.index_of(basepoint).ok_or(AlgebraError::Disconnected)?;
    if !x.is_connected() {
        return Err(AlgebraError::Disconnected);
    }
    let n = x.vertex_count();
    let edges = x.faces_of_dim(1);
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for e in &edges {
        adj[e[0] as usize].push(e[1]);
        adj[e[1] as usize].push(e[0]);
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let mut tree_edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut seen = vec![false; n];
    seen[base as usize] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                tree_edges.insert(vec![v.min(w), v.max(w)]);
                queue.push_back(w);
            }
        }
    }
    let gen_edges: Vec<Vec<u32>> = edges
        .iter()
        .filter(|e| !tree_edges.contains(*e))
        .cloned()
        .collect();
    let gen_index: BTreeMap<Vec<u32>, usize> = gen_edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let symbol = |a: u32, b: u32| -> Option<i64> {
        let key = vec![a.min(b), a.max(b)];
        gen_index.get(&key).map(|&i| {
            let s = (i + 1) as i64;
            if a < b {
                s
            } else {
                -s
            }
        })
    };
    let mut relators: Vec<Vec<i64>> = Vec::new();
    for tri in x.faces_of_dim(2) {
        let (a, b, c) = (tri[0], tri[1], tri[2]);
        let mut word = Vec::new();
        for (s, t) in [(a, b), (b, c), (c, a)] {
            if let Some(sym) = symbol(s, t) {
                word.push(sym);
            }
        }
        let word = free_reduce(&word);
        if !word.is_empty() {
            relators.push(word);
        }
    }
    Ok(GroupPresentation {
        generators: gen_edges
            .iter()
            .map(|e| (x.label(e[0]).to_string(), x.label(e[1]).to_string()))
            .collect(),
        relators,
        basepoint: basepoint.to_string(),
    })
}

/// Outcome of bounded Tietze simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TietzeOutcome {
    /// Reduced to the empty presentation.
    Trivialized,
    /// Budget exhausted or no applicable move; says nothing about the group.
    Unknown,
}

fn free_reduce(word: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(word.len());
    for &s in word {
        if out.last() == Some(&-s) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

fn cyclic_reduce(mut word: Vec<i64>) -> Vec<i64> {
    word = free_reduce(&word);
    while word.len() >= 2 && word.first() == word.last().map(|l| -l).as_ref() {
        word = word[1..word.len() - 1].to_vec();
        word = free_reduce(&word);
    }
    word
}

fn invert_word(word: &[i64]) -> Vec<i64> {
    word.iter().rev().map(|&s| -s).collect()
}

/// Canonical representative under cyclic rotation and inversion.
fn canonical_relator(word: &[i64]) -> Vec<i64> {
    if word.is_empty() {
        return Vec::new();
    }
    let mut best: Option<Vec<i64>> = None;
    for base in [word.to_vec(), invert_word(word)] {
        for shift in 0..base.len() {
            let rotated: Vec<i64> = base[shift..]
                .iter()
                .chain(base[..shift].iter())
                .cloned()
                .collect();
            if best.as_ref().map(|b| rotated < *b).unwrap_or(true) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// Bounded greedy Tietze simplification.
///
/// Applies free/cyclic reduction, deletes trivially redundant relators, and
/// eliminates generators that occur exactly once in some relator, smallest
/// relator first. Failure to trivialize is reported as [`TietzeOutcome::Unknown`],
/// never as a claim about the group.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> (GroupPresentation, TietzeOutcome) {
    // Work over the original symbol ids; alive[] tracks surviving generators.
    let mut relators: Vec<Vec<i64>> = p.relators.clone();
    let mut alive: Vec<bool> = vec![true; p.generators.len()];
    let initial_len: usize = p.total_relator_length().max(64);
    let max_len = initial_len.saturating_mul(64).max(4096);
    let mut moves = 0usize;

    loop {
        // Normalize: cyclic reduction + canonical dedupe + drop empties.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in relators.drain(..) {
            let r = cyclic_reduce(r);
            if r.is_empty() {
                continue;
            }
            if seen.insert(canonical_relator(&r)) {
                next.push(r);
            }
        }
        relators = next;
        relators.sort_by_key(|r| (r.len(), r.clone()));

        if moves >= budget {
            break;
        }

        // A length-1 relator kills its generator outright.
        if let Some(pos) = relators.iter().position(|r| r.len() == 1) {
            let g = relators[pos][0].unsigned_abs();
            relators.remove(pos);
            for r in relators.iter_mut() {
                let filtered: Vec<i64> = r
                    .iter()
                    .cloned()
                    .filter(|s| s.unsigned_abs() != g)
                    .collect();
                *r = filtered;
            }
            alive[(g - 1) as usize] = false;
            moves += 1;
            continue;
        }

        // Otherwise eliminate a generator occurring exactly once in the
        // shortest relator that has one.
        let mut choice: Option<(usize, usize)> = None; // (relator idx, position)
        'outer: for (ri, r) in relators.iter().enumerate() {
            for (pos, s) in r.iter().enumerate() {
                let g = s.unsigned_abs();
                if r.iter().filter(|t| t.unsigned_abs() == g).count() == 1 {
                    choice = Some((ri, pos));
                    break 'outer;
                }
            }
        }
        let (ri, pos) = match choice {
            None => break,
            Some(c) => c,
        };
        let rel = relators[ri].clone();
        let sym = rel[pos];
        let g = sym.unsigned_abs();
        // Rotate so the generator leads, then solve for it.
        let rotated: Vec<i64> = rel[pos..]
            .iter()
            .chain(rel[..pos].iter())
            .cloned()
            .collect();
        let mut replacement = invert_word(&rotated[1..]);
        if sym < 0 {
            replacement = invert_word(&replacement);
        }
        // Substituting must not blow the total length past the guard.
        let occurrences: usize = relators
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != ri)
            .map(|(_, r)| r.iter().filter(|s| s.unsigned_abs() == g).count())
            .sum();
        let projected = p_total(&relators) + occurrences * replacement.len();
        if projected > max_len {
            break;
        }
        relators.remove(ri);
        for r in relators.iter_mut() {
            let mut out = Vec::with_capacity(r.len());
            for &s in r.iter() {
                if s.unsigned_abs() == g {
                    if s > 0 {
                        out.extend_from_slice(&replacement);
                    } else {
                        out.extend(invert_word(&replacement));
                    }
                } else {
                    out.push(s);
                }
            }
            *r = free_reduce(&out);
        }
        alive[(g - 1) as usize] = false;
        moves += 1;
    }

    // Compact the surviving symbols.
    let mut remap: BTreeMap<u64, i64> = BTreeMap::new();
    let mut generators = Vec::new();
    for (i, gen) in p.generators.iter().enumerate() {
        if alive[i] {
            remap.insert((i + 1) as u64, (generators.len() + 1) as i64);
            generators.push(gen.clone());
        }
    }
    let relators: Vec<Vec<i64>> = relators
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|s| {
                    let new = remap[&s.unsigned_abs()];
                    if s > 0 {
                        new
                    } else {
                        -new
                    }
                })
                .collect()
        })
        .collect();
    let outcome = if generators.is_empty() && relators.is_empty() {
        TietzeOutcome::Trivialized
    } else {
        TietzeOutcome::Unknown
    };
    (
        GroupPresentation {
            generators,
            relators,
            basepoint: p.basepoint.clone(),
        },
        outcome,
    )
}

fn p_total(relators: &[Vec<i64>]) -> usize {
    relators.iter().map(|r| r.len()).sum()
}

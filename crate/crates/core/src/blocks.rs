//! Cube blocks and glued periodic assemblies.
//!
//! A block is a triangulation of a (scaled, translated) cube over local
//! vertices `a0..a7` and an optional center `b`. The corner index encodes
//! coordinates in binary: bit 0 is x, bit 1 is y, bit 2 is z, so
//! `a1 = (1,0,0)`, `a2 = (0,1,0)`, `a4 = (0,0,1)`, `a7 = (1,1,1)`.
//!
//! * `A0`/`A1` split the cube into five tetrahedra (four corners plus a
//!   regular central one).
//! * `B(p)` removes the two corner tetrahedra at the antipodal pair
//!   `{p, 7-p}` and cones the remaining polytope over the center: ten
//!   tetrahedra on nine vertices.
//! * `C(i,j)` removes the corner tetrahedra at two corners that are
//!   diagonally opposite on a 2-face; the face containing neither cut
//!   corner keeps a free diagonal choice. Ten tetrahedra on nine vertices.
//! * `E` cones all twelve boundary triangles over the center.
//!
//! Assemblies place blocks on a grid of cells and validate that every
//! shared square carries the same diagonal from both sides, and that the
//! boundary triangulation of each face is the exact translate of the
//! opposite face.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("corners {0} and {1} are not diagonally opposite on a 2-face")]
    InvalidDiagonalPair(u8, u8),
    #[error("inconsistent gluing: {0}")]
    InconsistentGluing(String),
    #[error("bad block data: {0}")]
    BadBlockData(String),
}

/// Local vertex of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockVertex {
    Corner(u8),
    Center,
}

impl BlockVertex {
    pub fn label(&self) -> String {
        match self {
            BlockVertex::Corner(c) => format!("a{}", c),
            BlockVertex::Center => "b".to_string(),
        }
    }
}

/// The block types. `B { corner }` cuts the antipodal pair
/// `{corner, 7-corner}`; the classical names are B0 = `B{0}`, B1 = `B{1}`,
/// B2 = `B{3}`, and `B{2}` is the fourth orientation (cut pair `{2,5}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockType {
    A0,
    A1,
    B { corner: u8 },
    C { i: u8, j: u8 },
    E,
}

/// A block instance: facets over local vertices plus placement data.
#[derive(Debug, Clone)]
pub struct CubeBlock {
    pub block_type: BlockType,
    pub offset: [f64; 3],
    pub scale: f64,
    /// Diagonal choice on the free face, for C blocks.
    pub free_diagonal: Option<(u8, u8)>,
    pub facets: Vec<Vec<BlockVertex>>,
}

fn corner_coords(c: u8) -> [f64; 3] {
    [(c & 1) as f64, ((c >> 1) & 1) as f64, ((c >> 2) & 1) as f64]
}

fn corner_tetra(c: u8) -> Vec<u8> {
    let mut t = vec![c, c ^ 1, c ^ 2, c ^ 4];
    t.sort_unstable();
    t
}

/// Corners of the face with the given axis fixed to `side`, sorted.
fn face_corners(axis: usize, side: u8) -> [u8; 4] {
    let mut out = [0u8; 4];
    let mut n = 0;
    for c in 0u8..8 {
        if (c >> axis) & 1 == side {
            out[n] = c;
            n += 1;
        }
    }
    out
}

/// The two diagonals of a face, each sorted.
fn face_diagonals(axis: usize, side: u8) -> [(u8, u8); 2] {
    let fc = face_corners(axis, side);
    // fc is sorted; fc[0] is opposite fc[3] and fc[1] opposite fc[2].
    [(fc[0], fc[3]), (fc[1], fc[2])]
}

fn corners_of(cut: u8) -> (u8, u8, u8) {
    (cut ^ 1, cut ^ 2, cut ^ 4)
}

/// Build a block's facet list. For `C` blocks, `free_diagonal` overrides the
/// default (the diagonal through the smallest corner of the free face).
pub fn cube_block(
    block_type: BlockType,
    offset: [f64; 3],
    scale: f64,
) -> Result<CubeBlock, BlockError> {
    cube_block_with(block_type, offset, scale, None)
}

pub fn cube_block_with(
    block_type: BlockType,
    offset: [f64; 3],
    scale: f64,
    free_diagonal: Option<(u8, u8)>,
) -> Result<CubeBlock, BlockError> {
    let corner = |c: u8| BlockVertex::Corner(c);
    let mut facets: Vec<Vec<BlockVertex>> = Vec::new();
    let mut chosen_free = None;
    match block_type {
        BlockType::A0 | BlockType::A1 => {
            let cuts: [u8; 4] = if block_type == BlockType::A0 {
                [0, 3, 5, 6]
            } else {
                [1, 2, 4, 7]
            };
            for c in cuts {
                facets.push(corner_tetra(c).into_iter().map(corner).collect());
            }
            let central: Vec<u8> = (0u8..8).filter(|c| !cuts.contains(c)).collect();
            facets.push(central.into_iter().map(corner).collect());
        }
        BlockType::B { corner: p } => {
            if p > 7 {
                return Err(BlockError::BadBlockData(format!(
                    "corner {} out of range",
                    p
                )));
            }
            let q = p ^ 7;
            for c in [p, q] {
                facets.push(corner_tetra(c).into_iter().map(corner).collect());
            }
            // One cone per cube face (each face contains exactly one cut corner).
            for axis in 0..3 {
                for side in 0..2u8 {
                    let fc = face_corners(axis, side);
                    let cut = if (p >> axis) & 1 == side { p } else { q };
                    let tri: Vec<BlockVertex> = fc
                        .iter()
                        .filter(|&&c| c != cut)
                        .map(|&c| corner(c))
                        .collect();
                    let mut t = vec![BlockVertex::Center];
                    t.extend(tri);
                    facets.push(t);
                }
            }
            // Cones over the two exposed cut triangles.
            for c in [p, q] {
                let (n1, n2, n3) = corners_of(c);
                facets.push(vec![
                    BlockVertex::Center,
                    corner(n1),
                    corner(n2),
                    corner(n3),
                ]);
            }
        }
        BlockType::C { i, j } => {
            if (i ^ j).count_ones() != 2 || i > 7 || j > 7 {
                return Err(BlockError::InvalidDiagonalPair(i, j));
            }
            for c in [i, j] {
                facets.push(corner_tetra(c).into_iter().map(corner).collect());
            }
            // The axis on which i and j agree carries the cut face and the
            // free face.
            let fixed_axis = (0..3)
                .find(|&a| ((i ^ j) >> a) & 1 == 0)
                .expect("two corners differing in two bits agree on one axis");
            let cut_side = (i >> fixed_axis) & 1;
            let free_side = 1 - cut_side;
            for axis in 0..3 {
                for side in 0..2u8 {
                    if axis == fixed_axis && side == cut_side {
                        continue; // tiled by the two corner tetrahedra
                    }
                    if axis == fixed_axis && side == free_side {
                        continue; // handled below
                    }
                    let fc = face_corners(axis, side);
                    let cut = if fc.contains(&i) { i } else { j };
                    let tri: Vec<BlockVertex> = fc
                        .iter()
                        .filter(|&&c| c != cut)
                        .map(|&c| corner(c))
                        .collect();
                    let mut t = vec![BlockVertex::Center];
                    t.extend(tri);
                    facets.push(t);
                }
            }
            // Free face: split by the requested diagonal.
            let fc = face_corners(fixed_axis, free_side);
            let diags = face_diagonals(fixed_axis, free_side);
            let diag = match free_diagonal {
                None => diags[0],
                Some((a, b)) => {
                    let d = (a.min(b), a.max(b));
                    if !diags.contains(&d) {
                        return Err(BlockError::BadBlockData(format!(
                            "({},{}) is not a diagonal of the free face",
                            a, b
                        )));
                    }
                    d
                }
            };
            chosen_free = Some(diag);
            let others: Vec<u8> = fc
                .iter()
                .cloned()
                .filter(|c| *c != diag.0 && *c != diag.1)
                .collect();
            for &o in &others {
                facets.push(vec![
                    BlockVertex::Center,
                    corner(diag.0),
                    corner(diag.1),
                    corner(o),
                ]);
            }
            // Cones over the two exposed cut triangles.
            for c in [i, j] {
                let (n1, n2, n3) = corners_of(c);
                facets.push(vec![
                    BlockVertex::Center,
                    corner(n1),
                    corner(n2),
                    corner(n3),
                ]);
            }
        }
        BlockType::E => {
            const CONES: [[u8; 3]; 12] = [
                [0, 1, 3],
                [0, 2, 3],
                [0, 1, 4],
                [0, 2, 4],
                [1, 3, 5],
                [1, 4, 5],
                [2, 3, 6],
                [2, 4, 6],
                [3, 5, 7],
                [3, 6, 7],
                [4, 5, 7],
                [4, 6, 7],
            ];
            for tri in CONES {
                facets.push(vec![
                    BlockVertex::Center,
                    corner(tri[0]),
                    corner(tri[1]),
                    corner(tri[2]),
                ]);
            }
        }
    }
    for f in facets.iter_mut() {
        f.sort();
    }
    facets.sort();
    Ok(CubeBlock {
        block_type,
        offset,
        scale,
        free_diagonal: chosen_free.or(free_diagonal),
        facets,
    })
}

impl CubeBlock {
    /// Facets rendered over the labels `a0..a7`, `b`.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|v| v.label()).collect())
            .collect()
    }

    /// Coordinates of the block's vertices under offset and scale.
    pub fn vertex_coords(&self) -> BTreeMap<String, [f64; 3]> {
        let mut out = BTreeMap::new();
        let mut used: BTreeSet<BlockVertex> = BTreeSet::new();
        for f in &self.facets {
            used.extend(f.iter().cloned());
        }
        for v in used {
            let local = match v {
                BlockVertex::Corner(c) => corner_coords(c),
                BlockVertex::Center => [0.5, 0.5, 0.5],
            };
            out.insert(
                v.label(),
                [
                    self.offset[0] + self.scale * local[0],
                    self.offset[1] + self.scale * local[1],
                    self.offset[2] + self.scale * local[2],
                ],
            );
        }
        out
    }

    /// The two triangles induced on a boundary face of the cube.
    ///
    /// Errors when the face is not exactly two triangles split by one
    /// diagonal.
    pub fn face_triangulation(&self, axis: usize, side: u8) -> Result<[[u8; 3]; 2], BlockError> {
        let fc: BTreeSet<u8> = face_corners(axis, side).into_iter().collect();
        let mut tris: BTreeSet<[u8; 3]> = BTreeSet::new();
        for f in &self.facets {
            let on_face: Vec<u8> = f
                .iter()
                .filter_map(|v| match v {
                    BlockVertex::Corner(c) if fc.contains(c) => Some(*c),
                    _ => None,
                })
                .collect();
            if on_face.len() == 3 {
                let mut t = [on_face[0], on_face[1], on_face[2]];
                t.sort_unstable();
                tris.insert(t);
            }
        }
        let tris: Vec<[u8; 3]> = tris.into_iter().collect();
        if tris.len() != 2 {
            return Err(BlockError::BadBlockData(format!(
                "face (axis {}, side {}) splits into {} triangles",
                axis,
                side,
                tris.len()
            )));
        }
        let shared: Vec<u8> = tris[0]
            .iter()
            .filter(|c| tris[1].contains(c))
            .cloned()
            .collect();
        let diags = face_diagonals(axis, side);
        let pair = (shared[0].min(shared[1]), shared[0].max(shared[1]));
        if shared.len() != 2 || !diags.contains(&pair) {
            return Err(BlockError::BadBlockData(format!(
                "face (axis {}, side {}) is not split by a diagonal",
                axis, side
            )));
        }
        Ok([tris[0], tris[1]])
    }
}

/// One grid cell of an assembly.
#[derive(Debug, Clone, Copy)]
pub struct CellSpec {
    pub pos: [usize; 3],
    pub block: BlockType,
    pub free_diagonal: Option<(u8, u8)>,
}

/// A grid of blocks covering `[0, dims*scale]^3`.
#[derive(Debug, Clone)]
pub struct Assembly {
    pub dims: [usize; 3],
    pub scale: f64,
    pub cells: Vec<CellSpec>,
}

/// Complex, vertex coordinates, and the validation report of an assembly.
pub type AssembledMesh = (SimplicialComplex, BTreeMap<String, [f64; 3]>, GluingReport);

/// Outcome of the gluing validation.
#[derive(Debug, Clone)]
pub struct GluingReport {
    pub interior_squares: usize,
    pub boundary_pairs: usize,
    pub mismatches: Vec<String>,
}

impl GluingReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn lattice_label(x: usize, y: usize, z: usize) -> String {
    format!("p{}_{}_{}", x, y, z)
}

fn center_label(pos: [usize; 3]) -> String {
    format!("c{}_{}_{}", pos[0], pos[1], pos[2])
}

fn cell_vertex_label(pos: [usize; 3], v: BlockVertex) -> String {
    match v {
        BlockVertex::Corner(c) => lattice_label(
            pos[0] + (c & 1) as usize,
            pos[1] + ((c >> 1) & 1) as usize,
            pos[2] + ((c >> 2) & 1) as usize,
        ),
        BlockVertex::Center => center_label(pos),
    }
}

impl Assembly {
    fn cell_map(&self) -> Result<BTreeMap<[usize; 3], &CellSpec>, BlockError> {
        let mut map = BTreeMap::new();
        for cell in &self.cells {
            if map.insert(cell.pos, cell).is_some() {
                return Err(BlockError::BadBlockData(format!(
                    "duplicate cell at {:?}",
                    cell.pos
                )));
            }
        }
        for x in 0..self.dims[0] {
            for y in 0..self.dims[1] {
                for z in 0..self.dims[2] {
                    if !map.contains_key(&[x, y, z]) {
                        return Err(BlockError::BadBlockData(format!(
                            "missing cell at {:?}",
                            [x, y, z]
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    fn block_at(&self, cell: &CellSpec) -> Result<CubeBlock, BlockError> {
        let offset = [
            cell.pos[0] as f64 * self.scale,
            cell.pos[1] as f64 * self.scale,
            cell.pos[2] as f64 * self.scale,
        ];
        cube_block_with(cell.block, offset, self.scale, cell.free_diagonal)
    }

    /// Triangles a cell induces on one of its faces, in absolute lattice
    /// labels.
    fn face_triangles_abs(
        &self,
        cell: &CellSpec,
        axis: usize,
        side: u8,
    ) -> Result<BTreeSet<Vec<String>>, BlockError> {
        let block = self.block_at(cell)?;
        let tris = block.face_triangulation(axis, side)?;
        Ok(tris
            .iter()
            .map(|t| {
                let mut labels: Vec<String> = t
                    .iter()
                    .map(|&c| cell_vertex_label(cell.pos, BlockVertex::Corner(c)))
                    .collect();
                labels.sort();
                labels
            })
            .collect())
    }

    /// Validate every interior square and every periodic boundary pair.
    pub fn validate(&self) -> Result<GluingReport, BlockError> {
        let map = self.cell_map()?;
        let mut report = GluingReport {
            interior_squares: 0,
            boundary_pairs: 0,
            mismatches: Vec::new(),
        };
        for (&pos, cell) in &map {
            for axis in 0..3 {
                // Interior square against the next cell along the axis.
                if pos[axis] + 1 < self.dims[axis] {
                    let mut npos = pos;
                    npos[axis] += 1;
                    let neighbor = map[&npos];
                    let mine = self.face_triangles_abs(cell, axis, 1)?;
                    let theirs = self.face_triangles_abs(neighbor, axis, 0)?;
                    report.interior_squares += 1;
                    if mine != theirs {
                        report.mismatches.push(format!(
                            "interior square between {:?} and {:?} (axis {}): {:?} vs {:?}",
                            pos, npos, axis, mine, theirs
                        ));
                    }
                }
                // Periodic pair: low face translated to the opposite side.
                if pos[axis] == 0 {
                    let mut opposite = pos;
                    opposite[axis] = self.dims[axis] - 1;
                    let far = map[&opposite];
                    let low = self.face_triangles_abs(cell, axis, 0)?;
                    let translated: BTreeSet<Vec<String>> = low
                        .into_iter()
                        .map(|tri| {
                            let mut t: Vec<String> = tri
                                .iter()
                                .map(|l| translate_label(l, axis, self.dims[axis]))
                                .collect();
                            t.sort();
                            t
                        })
                        .collect();
                    let high = self.face_triangles_abs(far, axis, 1)?;
                    report.boundary_pairs += 1;
                    if translated != high {
                        report.mismatches.push(format!(
                            "boundary faces at {:?} (axis {}) are not translates",
                            pos, axis
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Build the global complex and coordinate map. Fails on the first
    /// mismatching square.
    pub fn assemble(&self) -> Result<AssembledMesh, BlockError> {
        let report = self.validate()?;
        if let Some(first) = report.mismatches.first() {
            return Err(BlockError::InconsistentGluing(first.clone()));
        }
        let mut facets: Vec<Vec<String>> = Vec::new();
        let mut coords: BTreeMap<String, [f64; 3]> = BTreeMap::new();
        for cell in &self.cells {
            let block = self.block_at(cell)?;
            for f in &block.facets {
                facets.push(f.iter().map(|v| cell_vertex_label(cell.pos, *v)).collect());
            }
            for (local, xyz) in block.vertex_coords() {
                let v = if local == "b" {
                    BlockVertex::Center
                } else {
                    BlockVertex::Corner(local[1..].parse().unwrap())
                };
                coords.insert(cell_vertex_label(cell.pos, v), xyz);
            }
        }
        let complex = SimplicialComplex::from_facets(facets)
            .map_err(|e| BlockError::BadBlockData(e.to_string()))?;
        Ok((complex, coords, report))
    }

    /// For each C cell whose literal subtype fails against its (fixed)
    /// neighbors, search all diagonal pairs and free-diagonal choices for a
    /// consistent one. Returns the corrected assembly and a description of
    /// any changes. Fails when some C cell admits no consistent subtype.
    pub fn resolve_c_subtypes(&self) -> Result<(Assembly, Vec<String>), BlockError> {
        let mut fixed = self.clone();
        let mut changes = Vec::new();
        let positions: Vec<usize> = fixed
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c.block, BlockType::C { .. }))
            .map(|(i, _)| i)
            .collect();
        for idx in positions {
            if fixed.cell_consistent(idx)? {
                continue;
            }
            let mut found = false;
            'search: for i in 0u8..8 {
                for j in (i + 1)..8 {
                    if (i ^ j).count_ones() != 2 {
                        continue;
                    }
                    let block = BlockType::C { i, j };
                    let fixed_axis = (0..3).find(|&a| ((i ^ j) >> a) & 1 == 0).unwrap();
                    let free_side = 1 - ((i >> fixed_axis) & 1);
                    for diag in face_diagonals(fixed_axis, free_side) {
                        let mut trial = fixed.clone();
                        trial.cells[idx].block = block;
                        trial.cells[idx].free_diagonal = Some(diag);
                        if trial.cell_consistent(idx)? {
                            changes.push(format!(
                                "cell {:?}: C({},{}) with free diagonal ({},{})",
                                trial.cells[idx].pos, i, j, diag.0, diag.1
                            ));
                            fixed = trial;
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            if !found {
                return Err(BlockError::InconsistentGluing(format!(
                    "no C subtype fits at {:?}",
                    fixed.cells[idx].pos
                )));
            }
        }
        Ok((fixed, changes))
    }

    /// Check the six face constraints of a single cell against its
    /// neighbors (cyclically, so boundary cells check their periodic pair).
    fn cell_consistent(&self, idx: usize) -> Result<bool, BlockError> {
        let map = self.cell_map()?;
        let cell = &self.cells[idx];
        for axis in 0..3 {
            for (side, step_up) in [(1u8, true), (0u8, false)] {
                let mut npos = cell.pos;
                let wrap;
                if step_up {
                    if cell.pos[axis] + 1 < self.dims[axis] {
                        npos[axis] += 1;
                        wrap = false;
                    } else {
                        npos[axis] = 0;
                        wrap = true;
                    }
                } else if cell.pos[axis] > 0 {
                    npos[axis] -= 1;
                    wrap = false;
                } else {
                    npos[axis] = self.dims[axis] - 1;
                    wrap = true;
                }
                let neighbor = map[&npos];
                let mine = self.face_triangles_abs(cell, axis, side)?;
                let theirs = self.face_triangles_abs(neighbor, axis, 1 - side)?;
                let comparable = if !wrap {
                    theirs
                } else {
                    // Translate the neighbor's face onto ours.
                    theirs
                        .into_iter()
                        .map(|tri| {
                            let mut t: Vec<String> = tri
                                .iter()
                                .map(|l| {
                                    if side == 1 {
                                        // neighbor at 0, shift up to dims
                                        translate_label(l, axis, self.dims[axis])
                                    } else {
                                        translate_label_down(l, axis, self.dims[axis])
                                    }
                                })
                                .collect();
                            t.sort();
                            t
                        })
                        .collect()
                };
                if mine != comparable {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn parse_lattice(label: &str) -> [usize; 3] {
    let parts: Vec<usize> = label[1..].split('_').map(|p| p.parse().unwrap()).collect();
    [parts[0], parts[1], parts[2]]
}

fn translate_label(label: &str, axis: usize, by: usize) -> String {
    let mut p = parse_lattice(label);
    p[axis] += by;
    lattice_label(p[0], p[1], p[2])
}

fn translate_label_down(label: &str, axis: usize, by: usize) -> String {
    let mut p = parse_lattice(label);
    p[axis] -= by;
    lattice_label(p[0], p[1], p[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(block: &CubeBlock) -> BTreeSet<Vec<String>> {
        block.facet_labels().into_iter().collect()
    }

    fn named(list: &[&str]) -> BTreeSet<Vec<String>> {
        list.iter()
            .map(|f| {
                let mut v: Vec<String> = f.split(' ').map(|s| s.to_string()).collect();
                v.sort();
                v
            })
            .collect()
    }

    #[test]
    fn a0_matches_listed_facets() {
        let b = cube_block(BlockType::A0, [0.0; 3], 1.0).unwrap();
        assert_eq!(
            labels(&b),
            named(&[
                "a0 a1 a2 a4",
                "a1 a2 a3 a7",
                "a1 a4 a5 a7",
                "a2 a4 a6 a7",
                "a1 a2 a4 a7"
            ])
        );
    }

    #[test]
    fn a1_matches_listed_facets() {
        let b = cube_block(BlockType::A1, [0.0; 3], 1.0).unwrap();
        assert_eq!(
            labels(&b),
            named(&[
                "a0 a1 a3 a5",
                "a0 a2 a3 a6",
                "a3 a5 a6 a7",
                "a0 a4 a5 a6",
                "a0 a3 a5 a6"
            ])
        );
    }

    #[test]
    fn b0_matches_listed_cone() {
        let b = cube_block(BlockType::B { corner: 0 }, [0.0; 3], 1.0).unwrap();
        assert_eq!(
            labels(&b),
            named(&[
                "a0 a2 a1 a4",
                "a3 a5 a6 a7",
                "b a1 a2 a4",
                "b a1 a4 a5",
                "b a1 a3 a5",
                "b a3 a5 a6",
                "b a2 a3 a6",
                "b a2 a4 a6",
                "b a4 a5 a6",
                "b a1 a2 a3",
            ])
        );
        assert_eq!(b.facets.len(), 10);
    }

    #[test]
    fn e_matches_listed_cone() {
        let b = cube_block(BlockType::E, [0.0; 3], 1.0).unwrap();
        assert_eq!(
            labels(&b),
            named(&[
                "b a0 a1 a3",
                "b a0 a2 a3",
                "b a0 a1 a4",
                "b a0 a2 a4",
                "b a1 a3 a5",
                "b a1 a4 a5",
                "b a2 a3 a6",
                "b a2 a4 a6",
                "b a3 a5 a7",
                "b a3 a6 a7",
                "b a4 a5 a7",
                "b a4 a6 a7",
            ])
        );
    }

    #[test]
    fn c05_removes_the_expected_corner_tetrahedra() {
        let b = cube_block(BlockType::C { i: 0, j: 5 }, [0.0; 3], 1.0).unwrap();
        let fs = labels(&b);
        assert!(fs.contains(&named(&["a0 a1 a4 a2"]).into_iter().next().unwrap()));
        assert!(fs.contains(&named(&["a5 a1 a4 a7"]).into_iter().next().unwrap()));
        assert_eq!(b.facets.len(), 10);
    }

    #[test]
    fn c_rejects_non_diagonal_pairs() {
        assert!(matches!(
            cube_block(BlockType::C { i: 0, j: 7 }, [0.0; 3], 1.0),
            Err(BlockError::InvalidDiagonalPair(0, 7))
        ));
        assert!(matches!(
            cube_block(BlockType::C { i: 0, j: 1 }, [0.0; 3], 1.0),
            Err(BlockError::InvalidDiagonalPair(0, 1))
        ));
    }

    #[test]
    fn every_face_is_two_triangles_on_one_diagonal() {
        let types = [
            BlockType::A0,
            BlockType::A1,
            BlockType::B { corner: 0 },
            BlockType::B { corner: 1 },
            BlockType::B { corner: 2 },
            BlockType::B { corner: 3 },
            BlockType::C { i: 0, j: 5 },
            BlockType::C { i: 2, j: 7 },
            BlockType::E,
        ];
        for t in types {
            let b = cube_block(t, [0.0; 3], 1.0).unwrap();
            for axis in 0..3 {
                for side in 0..2 {
                    b.face_triangulation(axis, side).unwrap();
                }
            }
        }
    }

    #[test]
    fn b_block_boundary_is_a_twelve_triangle_sphere() {
        let b = cube_block(BlockType::B { corner: 0 }, [0.0; 3], 1.0).unwrap();
        let complex = crate::complex::SimplicialComplex::from_facets(b.facet_labels()).unwrap();
        assert_eq!(complex.vertex_count(), 9);
        let boundary = complex.boundary_subcomplex().unwrap();
        assert_eq!(boundary.vertex_count(), 8);
        assert_eq!(boundary.f_vector().0[2], 12);
        let cert = boundary.classify_surface().unwrap();
        assert!(cert.is_closed_surface && cert.connected);
        assert_eq!(cert.genus, Some(0));
    }

    #[test]
    fn a_block_central_facet_has_sqrt2_edges() {
        let b = cube_block(BlockType::A0, [0.0; 3], 1.0).unwrap();
        let coords = b.vertex_coords();
        let central = ["a1", "a2", "a4", "a7"];
        for i in 0..4 {
            for j in i + 1..4 {
                let p = coords[central[i]];
                let q = coords[central[j]];
                let d2: f64 = (0..3).map(|k| (p[k] - q[k]).powi(2)).sum();
                assert!((d2.sqrt() - 2f64.sqrt()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn checkerboard_assembly_validates() {
        let mut cells = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let block = if (x + y + z) % 2 == 0 {
                        BlockType::A0
                    } else {
                        BlockType::A1
                    };
                    cells.push(CellSpec {
                        pos: [x, y, z],
                        block,
                        free_diagonal: None,
                    });
                }
            }
        }
        let asm = Assembly {
            dims: [2, 2, 2],
            scale: 0.5,
            cells,
        };
        let report = asm.validate().unwrap();
        assert!(report.ok());
        assert_eq!(report.interior_squares, 12);
        assert_eq!(report.boundary_pairs, 12);
        let (complex, coords, _) = asm.assemble().unwrap();
        assert_eq!(complex.facet_count(), 40);
        assert_eq!(complex.vertex_count(), 27);
        assert_eq!(coords.len(), 27);
    }

    #[test]
    fn mismatched_checkerboard_is_rejected() {
        let mut cells = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cells.push(CellSpec {
                        pos: [x, y, z],
                        block: BlockType::A0,
                        free_diagonal: None,
                    });
                }
            }
        }
        let asm = Assembly {
            dims: [2, 2, 2],
            scale: 0.5,
            cells,
        };
        let report = asm.validate().unwrap();
        assert!(!report.ok());
        assert!(matches!(
            asm.assemble(),
            Err(BlockError::InconsistentGluing(_))
        ));
    }
}

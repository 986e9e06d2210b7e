//! Deterministic constructors for every named complex, paired with a
//! geometric realization where coordinates are available.
//!
//! Regenerating the same name yields byte-identical facet lists.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::blocks::{Assembly, BlockError, BlockType, CellSpec, GluingReport};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::geometry::{GeometryError, ModelSpace, Realization};
use crate::surgery::{quotient, IdentificationScheme, SurgeryError};

pub use crate::blocks::{cube_block, cube_block_with, CubeBlock};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeneratorError {
    #[error("unknown generator {0}")]
    UnknownName(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("quotient failed: {0}")]
    Quotient(String),
}

impl From<SurgeryError> for GeneratorError {
    fn from(e: SurgeryError) -> Self {
        GeneratorError::Quotient(e.to_string())
    }
}

/// A named complex with provenance and an optional realization.
#[derive(Debug, Clone)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
    pub realization: Option<Realization>,
    pub provenance: String,
}

fn named(
    name: &str,
    complex: SimplicialComplex,
    realization: Option<Realization>,
    provenance: &str,
) -> NamedComplex {
    NamedComplex {
        name: name.to_string(),
        complex,
        realization,
        provenance: provenance.to_string(),
    }
}

/// Boundary of the 4-simplex: the unique 5-vertex 3-sphere.
pub fn s3_5() -> Result<NamedComplex, GeneratorError> {
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
    Ok(named(
        "s3_5",
        SimplicialComplex::from_facets(facets)?,
        None,
        "boundary of the 4-simplex; the unique vertex-minimal 3-sphere",
    ))
}

/// The octahedral 8-vertex 3-sphere (the 16-cell), realized on the unit
/// coordinate vectors of 4-space.
pub fn sigma8() -> Result<NamedComplex, GeneratorError> {
    let mut facets = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    facets.push(vec![
                        format!("u{}", i),
                        format!("v{}", j),
                        format!("w{}", k),
                        format!("z{}", l),
                    ]);
                }
            }
        }
    }
    let complex = SimplicialComplex::from_facets(facets)?;
    let mut coords: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for (axis, family) in ["u", "v", "w", "z"].iter().enumerate() {
        for (sub, sign) in [(1, 1.0), (2, -1.0)] {
            let mut p = vec![0.0; 4];
            p[axis] = sign;
            coords.insert(format!("{}{}", family, sub), p);
        }
    }
    let realization = Realization::new(ModelSpace::Sphere3, coords)?;
    Ok(named(
        "sigma8",
        complex,
        Some(realization),
        "16-cell: the octahedral 8-vertex 3-sphere on the coordinate axes of 4-space",
    ))
}

fn u_label(k: i64) -> String {
    format!("u{}", k.rem_euclid(7))
}

fn torus_vertex_coords() -> BTreeMap<String, Vec<f64>> {
    // u_k sits on the boundary torus at disk angle 4 pi k / 7 and circle
    // angle 2 pi k / 7.
    (0..7)
        .map(|k| {
            let phi = 4.0 * std::f64::consts::PI * k as f64 / 7.0;
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 7.0;
            (u_label(k), vec![phi.cos(), phi.sin(), theta])
        })
        .collect()
}

/// The unique 7-vertex torus, realized on the boundary of the solid torus.
pub fn torus7() -> Result<NamedComplex, GeneratorError> {
    let mut facets = Vec::new();
    for i in 0..7i64 {
        facets.push(vec![u_label(i), u_label(i + 1), u_label(i + 3)]);
        facets.push(vec![u_label(i), u_label(i + 2), u_label(i + 3)]);
    }
    let complex = SimplicialComplex::from_facets(facets)?;
    let realization = Realization::new(ModelSpace::SolidTorus, torus_vertex_coords())?;
    Ok(named(
        "torus7",
        complex,
        Some(realization),
        "the unique 7-vertex torus, vertices on three curves of the boundary torus",
    ))
}

/// The three 7-vertex solid-torus fillings of the 7-vertex torus. Facet
/// families step through the vertex cycle at strides 1, 2, and the
/// (1,4,5)-pattern respectively; each has boundary exactly the 7-vertex
/// torus.
pub fn solid_torus(index: usize) -> Result<NamedComplex, GeneratorError> {
    let offsets: [i64; 4] = match index {
        1 => [0, 1, 2, 3],
        2 => [0, 2, 4, 6],
        3 => [0, 1, 4, 5],
        _ => {
            return Err(GeneratorError::BadIndex(format!(
                "solid torus index {} not in 1..=3",
                index
            )))
        }
    };
    let mut facets = Vec::new();
    for i in 0..7i64 {
        facets.push(offsets.iter().map(|o| u_label(i + o)).collect::<Vec<_>>());
    }
    let complex = SimplicialComplex::from_facets(facets)?;
    let realization = Realization::new(ModelSpace::SolidTorus, torus_vertex_coords())?;
    Ok(named(
        &format!("t{}", index),
        complex,
        Some(realization),
        "7-vertex solid torus filling of the 7-vertex torus",
    ))
}

/// Union of two of the solid-torus fillings: a 7-vertex 3-sphere.
pub fn s_ij(i: usize, j: usize) -> Result<NamedComplex, GeneratorError> {
    if !(i < j && (1..=3).contains(&i) && (1..=3).contains(&j)) {
        return Err(GeneratorError::BadIndex(format!(
            "need 1 <= i < j <= 3, got ({}, {})",
            i, j
        )));
    }
    let a = solid_torus(i)?;
    let b = solid_torus(j)?;
    let complex = a.complex.union(&b.complex);
    Ok(named(
        &format!("s{}{}", i, j),
        complex,
        a.realization,
        "union of two 7-vertex solid tori along the 7-vertex torus",
    ))
}

fn v_label(k: i64) -> String {
    format!("v{}", k.rem_euclid(10))
}

/// Walkup's 10-vertex triangulation of the twisted product of the sphere
/// and the circle (orientable: S2 x S1).
pub fn s21_10() -> Result<NamedComplex, GeneratorError> {
    let mut facets = Vec::new();
    for i in 0..10i64 {
        facets.push(vec![
            v_label(i),
            v_label(i + 1),
            v_label(i + 2),
            v_label(i + 4),
        ]);
        facets.push(vec![
            v_label(i),
            v_label(i + 1),
            v_label(i + 3),
            v_label(i + 4),
        ]);
        facets.push(vec![
            v_label(i),
            v_label(i + 2),
            v_label(i + 3),
            v_label(i + 4),
        ]);
    }
    Ok(named(
        "s21_10",
        SimplicialComplex::from_facets(facets)?,
        None,
        "Walkup's vertex-minimal 10-vertex S2 x S1",
    ))
}

/// The even-shift solid torus half of the Walkup complex.
pub fn t4() -> Result<NamedComplex, GeneratorError> {
    let mut facets = Vec::new();
    for i in 0..10i64 {
        let b = 2 * i;
        facets.push(vec![
            v_label(b),
            v_label(b + 1),
            v_label(b + 2),
            v_label(b + 4),
        ]);
        facets.push(vec![
            v_label(b + 1),
            v_label(b + 2),
            v_label(b + 4),
            v_label(b + 5),
        ]);
        facets.push(vec![
            v_label(b),
            v_label(b + 2),
            v_label(b + 3),
            v_label(b + 4),
        ]);
    }
    Ok(named(
        "t4",
        SimplicialComplex::from_facets(facets)?,
        None,
        "even solid-torus half of the Walkup complex",
    ))
}

/// The odd-shift solid torus half of the Walkup complex.
pub fn t5() -> Result<NamedComplex, GeneratorError> {
    let mut facets = Vec::new();
    for i in 0..10i64 {
        let b = 2 * i;
        facets.push(vec![
            v_label(b + 1),
            v_label(b + 2),
            v_label(b + 3),
            v_label(b + 5),
        ]);
        facets.push(vec![
            v_label(b),
            v_label(b + 1),
            v_label(b + 3),
            v_label(b + 4),
        ]);
        facets.push(vec![
            v_label(b + 1),
            v_label(b + 3),
            v_label(b + 4),
            v_label(b + 5),
        ]);
    }
    Ok(named(
        "t5",
        SimplicialComplex::from_facets(facets)?,
        None,
        "odd solid-torus half of the Walkup complex",
    ))
}

/// The 10-vertex torus separating the Walkup complex's two solid tori.
pub fn torus10() -> Result<NamedComplex, GeneratorError> {
    let t = t4()?;
    Ok(named(
        "torus10",
        t.complex.boundary_subcomplex()?,
        None,
        "10-vertex torus: common boundary of the Walkup solid tori",
    ))
}

fn ball_facets(data: &[[i64; 4]]) -> Result<SimplicialComplex, GeneratorError> {
    let facets: Vec<Vec<String>> = data
        .iter()
        .map(|f| f.iter().map(|&k| v_label(k)).collect())
        .collect();
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// One of the four stacked balls inside the Walkup solid tori.
///
/// The second ball carries the facet v4 v5 v6 v8: the even solid torus is
/// the union of the four balls, and the first two balls meet in the two
/// triangles v2 v4 v6 and v4 v5 v6, both of which pin that facet down.
pub fn walkup_ball(index: usize) -> Result<NamedComplex, GeneratorError> {
    let data: &[[i64; 4]] = match index {
        1 => &[[0, 1, 2, 4], [1, 2, 4, 5], [2, 4, 5, 6]],
        2 => &[[2, 3, 4, 6], [3, 4, 6, 7], [4, 6, 7, 8], [4, 5, 6, 8]],
        3 => &[[5, 6, 8, 9], [6, 8, 9, 0], [6, 7, 8, 0], [7, 8, 0, 1]],
        4 => &[[8, 0, 1, 2], [8, 9, 0, 2], [9, 0, 2, 3], [0, 2, 3, 4]],
        _ => {
            return Err(GeneratorError::BadIndex(format!(
                "ball index {} not in 1..=4",
                index
            )))
        }
    };
    Ok(named(
        &format!("b{}", index),
        ball_facets(data)?,
        None,
        "stacked ball inside a Walkup solid torus",
    ))
}

/// All four stacked balls.
pub fn walkup_balls() -> Result<Vec<NamedComplex>, GeneratorError> {
    (1..=4).map(walkup_ball).collect()
}

/// The union of the first two stacked balls: a triangulated 3-ball.
pub fn b12() -> Result<NamedComplex, GeneratorError> {
    let a = walkup_ball(1)?;
    let b = walkup_ball(2)?;
    Ok(named(
        "b12",
        a.complex.union(&b.complex),
        None,
        "union of two stacked balls; a triangulated 3-ball",
    ))
}

/// The union of the last two stacked balls: a triangulated 3-ball.
pub fn b34() -> Result<NamedComplex, GeneratorError> {
    let a = walkup_ball(3)?;
    let b = walkup_ball(4)?;
    Ok(named(
        "b34",
        a.complex.union(&b.complex),
        None,
        "union of two stacked balls; a triangulated 3-ball",
    ))
}

/// Literal block grid for the 77-vertex cube: layer by layer, bottom to
/// top, rows front to back.
///
/// Two cells that the figure labels with the third B orientation need the
/// fourth antipodal pair {a2, a5} for every shared square to carry one
/// diagonal under this crate's corner convention; the gluing validator is
/// the arbiter, and the C free-face diagonals are pinned by their
/// neighbors.
fn cube77_cells() -> Vec<CellSpec> {
    let a0 = BlockType::A0;
    let a1 = BlockType::A1;
    let b = |corner: u8| BlockType::B { corner };
    let c = |i: u8, j: u8| BlockType::C { i, j };
    let spec = |pos: [usize; 3], block: BlockType, free: Option<(u8, u8)>| CellSpec {
        pos,
        block,
        free_diagonal: free,
    };
    vec![
        // bottom layer (z = 0)
        spec([0, 0, 0], a0, None),
        spec([1, 0, 0], b(2), None),
        spec([2, 0, 0], a1, None),
        spec([0, 1, 0], b(1), None),
        spec([1, 1, 0], a0, None),
        spec([2, 1, 0], c(2, 7), Some((1, 4))),
        spec([0, 2, 0], a1, None),
        spec([1, 2, 0], c(1, 7), Some((2, 4))),
        spec([2, 2, 0], a0, None),
        // middle layer (z = 1)
        spec([0, 0, 1], c(5, 6), Some((0, 3))),
        spec([1, 0, 1], a1, None),
        spec([2, 0, 1], b(0), None),
        spec([0, 1, 1], a1, None),
        spec([1, 1, 1], BlockType::E, None),
        spec([2, 1, 1], a0, None),
        spec([0, 2, 1], b(0), None),
        spec([1, 2, 1], a0, None),
        spec([2, 2, 1], c(1, 2), Some((4, 7))),
        // top layer (z = 2)
        spec([0, 0, 2], a1, None),
        spec([1, 0, 2], c(0, 6), Some((3, 5))),
        spec([2, 0, 2], a0, None),
        spec([0, 1, 2], c(0, 5), Some((3, 6))),
        spec([1, 1, 2], a1, None),
        spec([2, 1, 2], b(1), None),
        spec([0, 2, 2], a0, None),
        spec([1, 2, 2], b(2), None),
        spec([2, 2, 2], a1, None),
    ]
}

/// The validated 77-vertex cube assembly. When the literal data fails the
/// gluing validator, a deterministic exhaustive search over C subtypes is
/// attempted and recorded; an inconsistent grid fails loudly.
pub fn cube77_assembly() -> Result<(Assembly, Vec<String>), GeneratorError> {
    let literal = Assembly {
        dims: [3, 3, 3],
        scale: 1.0 / 3.0,
        cells: cube77_cells(),
    };
    let report = literal.validate()?;
    if report.ok() {
        return Ok((literal, Vec::new()));
    }
    let (fixed, changes) = literal.resolve_c_subtypes()?;
    let report = fixed.validate()?;
    if !report.ok() {
        return Err(GeneratorError::Block(BlockError::InconsistentGluing(
            report.mismatches[0].clone(),
        )));
    }
    Ok((fixed, changes))
}

/// Gluing validation outcome for the 77-vertex cube.
pub fn cube77_gluing_report() -> Result<GluingReport, GeneratorError> {
    let (asm, _) = cube77_assembly()?;
    Ok(asm.validate()?)
}

/// The 77-vertex triangulation of the unit cube: 27 blocks (14 A, 6 B, 6 C,
/// 1 E), 202 tetrahedra, opposite boundary faces exact translates.
pub fn cube77() -> Result<NamedComplex, GeneratorError> {
    let (asm, changes) = cube77_assembly()?;
    let (complex, coords, _) = asm.assemble()?;
    let realization = Realization::new(
        ModelSpace::Euclidean(3),
        coords.into_iter().map(|(k, v)| (k, v.to_vec())).collect(),
    )?;
    let mut provenance = String::from(
        "27 glued blocks (14 A, 6 B, 6 C, 1 E) on a 3x3x3 grid; two B cells use the fourth antipodal pair {a2,a5}; gluing validated",
    );
    if !changes.is_empty() {
        provenance.push_str(&format!("; C subtypes adjusted: {}", changes.join(", ")));
    }
    Ok(named("cube77", complex, Some(realization), &provenance))
}

fn lattice_mod_scheme(
    x: &SimplicialComplex,
    modulus: usize,
) -> Result<IdentificationScheme, GeneratorError> {
    let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for l in x.labels() {
        if !l.starts_with('p') {
            continue;
        }
        let parts: Vec<usize> = l[1..]
            .split('_')
            .map(|p| {
                p.parse()
                    .map_err(|_| GeneratorError::BadParameter(format!("bad lattice label {}", l)))
            })
            .collect::<Result<_, _>>()?;
        let rep = format!(
            "p{}_{}_{}",
            parts[0] % modulus,
            parts[1] % modulus,
            parts[2] % modulus
        );
        classes.entry(rep).or_default().push(l.clone());
    }
    let mut class_lists = Vec::new();
    for (rep, mut members) in classes {
        members.sort();
        members.retain(|m| *m != rep);
        let mut list = vec![rep];
        list.extend(members);
        class_lists.push(list);
    }
    IdentificationScheme::from_classes(class_lists)
        .map_err(|e| GeneratorError::Quotient(e.to_string()))
}

fn torus_realization(x: &SimplicialComplex, modulus: usize) -> Result<Realization, GeneratorError> {
    let step = 1.0 / modulus as f64;
    let mut coords = BTreeMap::new();
    for l in x.labels() {
        let parts: Vec<f64> = l[1..]
            .split('_')
            .map(|p| p.parse::<f64>().unwrap())
            .collect();
        let shift = if l.starts_with('c') { 0.5 } else { 0.0 };
        coords.insert(
            l.clone(),
            vec![
                (parts[0] + shift) * step,
                (parts[1] + shift) * step,
                (parts[2] + shift) * step,
            ],
        );
    }
    Ok(Realization::new(ModelSpace::FlatTorus3, coords)?)
}

/// The 40-vertex flat 3-torus: the 77-vertex cube with opposite boundary
/// faces identified by translation.
pub fn t3_40() -> Result<NamedComplex, GeneratorError> {
    let cube = cube77()?;
    let scheme = lattice_mod_scheme(&cube.complex, 3)?;
    let q = quotient(&cube.complex, &scheme)?;
    let realization = torus_realization(&q, 3)?;
    Ok(named(
        "t3_40",
        q,
        Some(realization),
        "40-vertex flat 3-torus: 77-vertex cube with opposite faces identified (27 + 13 vertices)",
    ))
}

fn t3_family_assembly(n: usize) -> Assembly {
    let side = 2 * n;
    let mut cells = Vec::new();
    for x in 0..side {
        for y in 0..side {
            for z in 0..side {
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
    Assembly {
        dims: [side, side, side],
        scale: 1.0 / side as f64,
        cells,
    }
}

/// Pre-quotient cube mesh of the A-block checkerboard on a (2n)^3 grid.
pub fn t3_family_cube(n: usize) -> Result<NamedComplex, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::BadParameter(format!(
            "checkerboard family needs n >= 2, got {}",
            n
        )));
    }
    let asm = t3_family_assembly(n);
    let (complex, coords, _) = asm.assemble()?;
    let realization = Realization::new(
        ModelSpace::Euclidean(3),
        coords.into_iter().map(|(k, v)| (k, v.to_vec())).collect(),
    )?;
    Ok(named(
        &format!("t3_family_cube_{}", n),
        complex,
        Some(realization),
        "unit cube subdivided into a (2n)^3 checkerboard of A blocks",
    ))
}

/// The 8n^3-vertex flat 3-torus from the A-block checkerboard.
pub fn t3_family(n: usize) -> Result<NamedComplex, GeneratorError> {
    let cube = t3_family_cube(n)?;
    let scheme = lattice_mod_scheme(&cube.complex, 2 * n)?;
    let q = quotient(&cube.complex, &scheme)?;
    let realization = torus_realization(&q, 2 * n)?;
    Ok(named(
        &format!("t3_family_{}", n),
        q,
        Some(realization),
        "flat 3-torus from the (2n)^3 A-block checkerboard; 8n^3 vertices, 40n^3 facets",
    ))
}

/// Every fixed-name generator, for the command-line surface.
pub fn names() -> Vec<&'static str> {
    vec![
        "s3_5", "sigma8", "torus7", "t1", "t2", "t3", "s12", "s13", "s23", "s21_10", "t4", "t5",
        "torus10", "b1", "b2", "b3", "b4", "b12", "b34", "cube77", "t3_40",
    ]
}

/// Look a generator up by name.
pub fn by_name(name: &str) -> Result<NamedComplex, GeneratorError> {
    match name {
        "s3_5" => s3_5(),
        "sigma8" => sigma8(),
        "torus7" => torus7(),
        "t1" => solid_torus(1),
        "t2" => solid_torus(2),
        "t3" => solid_torus(3),
        "s12" => s_ij(1, 2),
        "s13" => s_ij(1, 3),
        "s23" => s_ij(2, 3),
        "s21_10" => s21_10(),
        "t4" => t4(),
        "t5" => t5(),
        "torus10" => torus10(),
        "b1" => walkup_ball(1),
        "b2" => walkup_ball(2),
        "b3" => walkup_ball(3),
        "b4" => walkup_ball(4),
        "b12" => b12(),
        "b34" => b34(),
        "cube77" => cube77(),
        "t3_40" => t3_40(),
        other => Err(GeneratorError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::homology;
    use crate::complex::FVector;

    #[test]
    fn s3_5_is_the_five_vertex_sphere() {
        let x = s3_5().unwrap();
        assert_eq!(x.complex.f_vector(), FVector(vec![5, 10, 10, 5]));
        assert!(x.complex.certify_manifold().unwrap().is_closed_manifold());
        let h = homology(&x.complex);
        assert_eq!(
            (h.betti(0), h.betti(1), h.betti(2), h.betti(3)),
            (1, 0, 0, 1)
        );
    }

    #[test]
    fn sigma8_shape_and_coordinates() {
        let x = sigma8().unwrap();
        assert_eq!(x.complex.facet_count(), 16);
        assert_eq!(x.complex.f_vector(), FVector(vec![8, 24, 32, 16]));
        let r = x.realization.as_ref().unwrap();
        assert_eq!(r.coords("u1").unwrap(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(r.coords("u2").unwrap(), &[-1.0, 0.0, 0.0, 0.0]);
        assert_eq!(r.coords("w1").unwrap(), &[0.0, 0.0, 1.0, 0.0]);
        let h = homology(&x.complex);
        assert_eq!(
            (h.betti(0), h.betti(1), h.betti(2), h.betti(3)),
            (1, 0, 0, 1)
        );
    }

    #[test]
    fn torus7_is_the_genus_one_surface() {
        let x = torus7().unwrap();
        assert_eq!(x.complex.f_vector(), FVector(vec![7, 21, 14]));
        let cert = x.complex.classify_surface().unwrap();
        assert!(cert.is_closed_surface && cert.orientable);
        assert_eq!(cert.genus, Some(1));
        // Link of u0 is the 6-cycle on the other vertices.
        let link = x.complex.link("u0").unwrap();
        assert_eq!(link.f_vector(), FVector(vec![6, 6]));
        assert!(link.is_connected());
    }

    #[test]
    fn solid_tori_share_the_torus_boundary() {
        let tau = torus7().unwrap().complex;
        for i in 1..=3 {
            let t = solid_torus(i).unwrap();
            assert_eq!(t.complex.facet_count(), 7);
            assert_eq!(t.complex.boundary_subcomplex().unwrap(), tau);
            let cert = t.complex.certify_manifold().unwrap();
            assert!(cert.is_manifold_with_boundary());
            // Every vertex sits on the boundary torus, so every link is a disk.
            assert!(cert
                .link_kinds
                .values()
                .all(|&k| k == crate::complex::LinkKind::Disk));
            let h = homology(&t.complex);
            assert_eq!((h.betti(0), h.betti(1), h.betti(2)), (1, 1, 0));
        }
        assert!(solid_torus(4).is_err());
    }

    #[test]
    fn solid_tori_intersect_in_the_torus() {
        let tau = torus7().unwrap().complex;
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let a = solid_torus(i).unwrap().complex;
            let b = solid_torus(j).unwrap().complex;
            assert_eq!(a.intersection(&b), tau, "T{} vs T{}", i, j);
        }
    }

    #[test]
    fn s_ij_are_seven_vertex_spheres() {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let s = s_ij(i, j).unwrap();
            assert_eq!(s.complex.f_vector(), FVector(vec![7, 21, 28, 14]));
            let cert = s.complex.certify_manifold().unwrap();
            assert!(cert.is_closed_manifold() && cert.orientable);
            let h = homology(&s.complex);
            assert_eq!(
                (h.betti(0), h.betti(1), h.betti(2), h.betti(3)),
                (1, 0, 0, 1)
            );
            assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
        }
        assert!(s_ij(2, 1).is_err());
    }

    #[test]
    fn walkup_complex_splits_into_two_solid_tori() {
        let s = s21_10().unwrap().complex;
        assert_eq!(s.facet_count(), 30);
        assert_eq!(s.vertex_count(), 10);
        let a = t4().unwrap().complex;
        let b = t5().unwrap().complex;
        assert_eq!(a.facet_count(), 15);
        assert_eq!(b.facet_count(), 15);
        assert_eq!(a.union(&b), s);
        let tau1 = torus10().unwrap().complex;
        assert_eq!(a.intersection(&b), tau1);
        assert_eq!(b.boundary_subcomplex().unwrap(), tau1);
        let cert = tau1.classify_surface().unwrap();
        assert_eq!(cert.genus, Some(1));
        let h = homology(&s);
        assert_eq!(
            (h.betti(0), h.betti(1), h.betti(2), h.betti(3)),
            (1, 1, 1, 1)
        );
    }

    #[test]
    fn walkup_ball_intersections_match_the_listing() {
        let b1 = walkup_ball(1).unwrap().complex;
        let b2 = walkup_ball(2).unwrap().complex;
        let expected =
            SimplicialComplex::from_facets(vec![vec!["v2", "v4", "v6"], vec!["v4", "v5", "v6"]])
                .unwrap();
        assert_eq!(b1.intersection(&b2), expected);
        let b3 = walkup_ball(3).unwrap().complex;
        let b4 = walkup_ball(4).unwrap().complex;
        let expected34 =
            SimplicialComplex::from_facets(vec![vec!["v8", "v0", "v1"], vec!["v8", "v9", "v0"]])
                .unwrap();
        assert_eq!(b3.intersection(&b4), expected34);
        // The four balls tile the even solid torus.
        let b12 = b12().unwrap().complex;
        let b34 = b34().unwrap().complex;
        assert_eq!(b12.union(&b34), t4().unwrap().complex);
        // Their overlap is two disjoint disks (two triangles plus three).
        let overlap = b12.intersection(&b34);
        assert_eq!(overlap.dimension(), Some(2));
        assert_eq!(overlap.component_count(), 2);
        assert_eq!(overlap.f_vector().0[2], 5);
    }

    #[test]
    fn cube77_counts() {
        let x = cube77().unwrap();
        assert_eq!(x.complex.f_vector(), FVector(vec![77, 332, 458, 202]));
        assert_eq!(x.complex.euler_characteristic(), 1);
        let boundary_vertices = x
            .complex
            .labels()
            .iter()
            .filter(|l| l.starts_with('p'))
            .count();
        let centers = x
            .complex
            .labels()
            .iter()
            .filter(|l| l.starts_with('c'))
            .count();
        assert_eq!(boundary_vertices, 64);
        assert_eq!(centers, 13);
        let report = cube77_gluing_report().unwrap();
        assert!(report.ok());
        assert_eq!(report.interior_squares, 54);
        assert_eq!(report.boundary_pairs, 27);
    }

    #[test]
    fn cube77_regeneration_is_byte_identical() {
        let a = cube77().unwrap().complex.to_facet_list();
        let b = cube77().unwrap().complex.to_facet_list();
        assert_eq!(a, b);
    }

    #[test]
    fn c_subtype_search_repairs_a_wrong_cell() {
        let mut cells = cube77_cells();
        for cell in cells.iter_mut() {
            if cell.pos == [2, 1, 0] {
                cell.block = BlockType::C { i: 0, j: 5 };
                cell.free_diagonal = None;
            }
        }
        let broken = Assembly {
            dims: [3, 3, 3],
            scale: 1.0 / 3.0,
            cells,
        };
        assert!(!broken.validate().unwrap().ok());
        let (fixed, changes) = broken.resolve_c_subtypes().unwrap();
        assert!(fixed.validate().unwrap().ok());
        assert_eq!(changes.len(), 1);
        assert!(changes[0].contains("C(2,7)"), "{:?}", changes);
    }

    #[test]
    fn t3_40_counts() {
        let x = t3_40().unwrap();
        assert_eq!(x.complex.vertex_count(), 40);
        assert_eq!(x.complex.facet_count(), 202);
        assert_eq!(x.complex.f_vector(), FVector(vec![40, 242, 404, 202]));
    }

    #[test]
    fn t3_family_counts() {
        assert!(t3_family(1).is_err());
        let x = t3_family(2).unwrap();
        assert_eq!(x.complex.vertex_count(), 64);
        assert_eq!(x.complex.facet_count(), 320);
        let y = t3_family(3).unwrap();
        assert_eq!(y.complex.vertex_count(), 216);
        assert_eq!(y.complex.facet_count(), 1080);
    }

    #[test]
    fn registry_round_trip() {
        for name in names() {
            let x = by_name(name).unwrap();
            assert_eq!(x.name, name);
        }
        assert!(by_name("nope").is_err());
    }
}

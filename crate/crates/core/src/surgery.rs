//! Elementary connected sums, iterated sum chains, and vertex-identification
//! quotients.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::generators::{s_ij, solid_torus, NamedComplex};
use crate::ledger::{ContactClass, KnotClass, LedgerError};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SurgeryError {
    #[error("[{}] is not a facet", .0.join(" "))]
    NotAFacet(Vec<String>),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("bad gluing: {0}")]
    BadGluing(String),
    #[error("facet [{}] collapses: two vertices map to class {class}", .facet.join(" "))]
    FacetCollapse { facet: Vec<String>, class: String },
    #[error("facets [{}] and [{}] collide after identification", .a.join(" "), .b.join(" "))]
    FacetCollision { a: Vec<String>, b: Vec<String> },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
}

/// A bijection between one facet of each summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingMap {
    pub source_facet: Vec<String>,
    pub target_facet: Vec<String>,
    /// source vertex -> target vertex, total on the source facet.
    pub bijection: BTreeMap<String, String>,
}

impl GluingMap {
    /// Canonical gluing: the i-th smallest source vertex goes to the i-th
    /// smallest target vertex.
    pub fn canonical(source_facet: &[String], target_facet: &[String]) -> GluingMap {
        let mut s = source_facet.to_vec();
        let mut t = target_facet.to_vec();
        s.sort();
        t.sort();
        let bijection = s.iter().cloned().zip(t.iter().cloned()).collect();
        GluingMap {
            source_facet: s,
            target_facet: t,
            bijection,
        }
    }

    pub fn validate(&self) -> Result<(), SurgeryError> {
        if self.source_facet.len() != self.target_facet.len() {
            return Err(SurgeryError::DimensionMismatch {
                left: self.source_facet.len() - 1,
                right: self.target_facet.len() - 1,
            });
        }
        let targets: BTreeSet<&String> = self.bijection.values().collect();
        let sources: BTreeSet<&String> = self.bijection.keys().collect();
        let want_s: BTreeSet<&String> = self.source_facet.iter().collect();
        let want_t: BTreeSet<&String> = self.target_facet.iter().collect();
        if sources != want_s || targets != want_t {
            return Err(SurgeryError::BadGluing(
                "bijection is not total on the chosen facets".to_string(),
            ));
        }
        Ok(())
    }

    /// Swap the targets of the two largest source vertices.
    fn with_transposition(&self) -> GluingMap {
        let mut out = self.clone();
        let mut keys: Vec<String> = out.bijection.keys().cloned().collect();
        keys.sort();
        if keys.len() >= 2 {
            let a = keys[keys.len() - 2].clone();
            let b = keys[keys.len() - 1].clone();
            let va = out.bijection[&a].clone();
            let vb = out.bijection[&b].clone();
            out.bijection.insert(a, vb);
            out.bijection.insert(b, va);
        }
        out
    }
}

fn facet_index(x: &SimplicialComplex, facet: &[String]) -> Result<usize, SurgeryError> {
    let mut sorted = facet.to_vec();
    sorted.sort();
    x.facet_labels()
        .iter()
        .position(|f| *f == sorted)
        .ok_or(SurgeryError::NotAFacet(sorted))
}

/// Relabel `x2` away from `x1`'s label space by appending primes.
fn disjointify(
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
) -> Result<SimplicialComplex, SurgeryError> {
    let taken: BTreeSet<&String> = x1.labels().iter().collect();
    if !x2.labels().iter().any(|l| taken.contains(l)) {
        return Ok(x2.clone());
    }
    let mut suffix = String::from("'");
    loop {
        let map: BTreeMap<String, String> = x2
            .labels()
            .iter()
            .map(|l| (l.clone(), format!("{}{}", l, suffix)))
            .collect();
        if !map.values().any(|l| taken.contains(l)) {
            return Ok(x2.relabel(&map)?);
        }
        suffix.push('\'');
    }
}

fn glue_assemble(
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
    g: &GluingMap,
) -> Result<SimplicialComplex, SurgeryError> {
    let mut facets: Vec<Vec<String>> = Vec::new();
    let sigma1: BTreeSet<&String> = g.source_facet.iter().collect();
    let sigma2: BTreeSet<&String> = g.target_facet.iter().collect();
    let reverse: BTreeMap<&String, &String> = g.bijection.iter().map(|(s, t)| (t, s)).collect();
    for f in x1.facet_labels() {
        if f.iter().collect::<BTreeSet<_>>() != sigma1 {
            facets.push(f);
        }
    }
    let expected_from_x1 = facets.len();
    if expected_from_x1 != x1.facet_count() - 1 {
        return Err(SurgeryError::NotAFacet(g.source_facet.clone()));
    }
    for f in x2.facet_labels() {
        if f.iter().collect::<BTreeSet<_>>() == sigma2 {
            continue;
        }
        facets.push(
            f.iter()
                .map(|l| match reverse.get(&l) {
                    Some(s) => (*s).clone(),
                    None => l.clone(),
                })
                .collect(),
        );
    }
    let expected = x1.facet_count() + x2.facet_count() - 2;
    if facets.len() != expected {
        return Err(SurgeryError::NotAFacet(g.target_facet.clone()));
    }
    let out = SimplicialComplex::from_facets(facets)?;
    if out.facet_count() != expected {
        return Err(SurgeryError::BadGluing(
            "facets coincide after identification".to_string(),
        ));
    }
    Ok(out)
}

/// Elementary connected sum: remove one facet from each closed manifold and
/// identify the exposed boundaries along the given bijection.
///
/// Label spaces are made disjoint automatically (the second summand gets
/// primed labels; the gluing map must refer to the primed names it produces
/// only when labels actually collide). `f0` of the result is
/// `f0(x1) + f0(x2) - (d+1)`.
pub fn connected_sum(
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
    g: &GluingMap,
) -> Result<SimplicialComplex, SurgeryError> {
    g.validate()?;
    let d1 = x1
        .dimension()
        .ok_or_else(|| SurgeryError::BadParameter("first summand is empty".to_string()))?;
    let d2 = x2
        .dimension()
        .ok_or_else(|| SurgeryError::BadParameter("second summand is empty".to_string()))?;
    if d1 != d2 {
        return Err(SurgeryError::DimensionMismatch {
            left: d1,
            right: d2,
        });
    }
    if g.source_facet.len() != d1 + 1 {
        return Err(SurgeryError::NotAFacet(g.source_facet.clone()));
    }
    let x2 = disjointify(x1, x2)?;
    facet_index(x1, &g.source_facet)?;
    facet_index(&x2, &g.target_facet)?;
    glue_assemble(x1, &x2, g)
}

/// Connected sum along canonically matched facets. When the plain matching
/// leaves the result non-orientable, the gluing is composed with one
/// transposition to restore orientability.
pub fn connected_sum_canonical(
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
    source_facet: &[String],
    target_facet: &[String],
) -> Result<SimplicialComplex, SurgeryError> {
    let x2d = disjointify(x1, x2)?;
    let target: Vec<String> = if x2d == *x2 {
        target_facet.to_vec()
    } else {
        // Recover the primed names.
        let pos = facet_index(x2, target_facet)?;
        x2d.facet_labels()[pos].clone()
    };
    let g = GluingMap::canonical(source_facet, &target);
    let out = connected_sum(x1, &x2d, &g)?;
    if out.is_orientable() || !(x1.is_orientable() && x2.is_orientable()) {
        return Ok(out);
    }
    connected_sum(x1, &x2d, &g.with_transposition())
}

/// A partition of the vertex set; each class collapses to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentificationScheme {
    /// vertex -> class representative; vertices not listed map to themselves.
    pub class_of: BTreeMap<String, String>,
}

impl IdentificationScheme {
    /// Build from explicit classes; the first member names the class.
    pub fn from_classes(classes: Vec<Vec<String>>) -> Result<Self, SurgeryError> {
        let mut class_of = BTreeMap::new();
        for class in classes {
            let rep = class
                .first()
                .ok_or_else(|| SurgeryError::BadParameter("empty class".to_string()))?
                .clone();
            for member in class {
                if class_of.insert(member.clone(), rep.clone()).is_some() {
                    return Err(SurgeryError::BadParameter(format!(
                        "vertex {} appears in two classes",
                        member
                    )));
                }
            }
        }
        Ok(IdentificationScheme { class_of })
    }

    pub fn apply<'a>(&'a self, label: &'a str) -> &'a str {
        self.class_of
            .get(label)
            .map(|s| s.as_str())
            .unwrap_or(label)
    }
}

/// Collapse vertex classes. The facet count is preserved; collapsing a
/// facet or identifying two facets is an error naming the offending cells.
pub fn quotient(
    x: &SimplicialComplex,
    s: &IdentificationScheme,
) -> Result<SimplicialComplex, SurgeryError> {
    let mut seen: BTreeMap<Vec<String>, Vec<String>> = BTreeMap::new();
    let mut facets = Vec::new();
    for f in x.facet_labels() {
        let mut image: Vec<String> = f.iter().map(|l| s.apply(l).to_string()).collect();
        image.sort();
        for w in image.windows(2) {
            if w[0] == w[1] {
                return Err(SurgeryError::FacetCollapse {
                    facet: f.clone(),
                    class: w[0].clone(),
                });
            }
        }
        if let Some(prev) = seen.insert(image.clone(), f.clone()) {
            return Err(SurgeryError::FacetCollision { a: prev, b: f });
        }
        facets.push(image);
    }
    let expected = facets.len();
    let out = SimplicialComplex::from_facets_permissive(facets)?;
    // Distinct images can still nest when dimensions are mixed.
    if out.facet_count() != expected {
        return Err(SurgeryError::BadParameter(
            "identification absorbs a facet into a larger one".to_string(),
        ));
    }
    Ok(out)
}

/// Sign of the twist sequence a chain carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSign {
    Plus,
    Minus,
    Zero,
}

/// An iterated connected sum of 7-vertex spheres together with its
/// bookkeeping ledger.
#[derive(Debug, Clone)]
pub struct SChain {
    pub complex: NamedComplex,
    pub ledger: ContactClass,
}

fn chain_copy(k: usize) -> Result<(SimplicialComplex, Vec<Vec<String>>), SurgeryError> {
    // Copy k of the two-solid-torus sphere, labels s{k}_u0..s{k}_u6.
    let base = s_ij(1, 2).map_err(|e| SurgeryError::BadParameter(e.to_string()))?;
    let map: BTreeMap<String, String> = base
        .complex
        .labels()
        .iter()
        .map(|l| (l.clone(), format!("s{}_{}", k, l)))
        .collect();
    let renamed = base.complex.relabel(&map)?;
    let t2 = solid_torus(2).map_err(|e| SurgeryError::BadParameter(e.to_string()))?;
    let t2_facets: Vec<Vec<String>> = t2
        .complex
        .facet_labels()
        .iter()
        .map(|f| {
            let mut v: Vec<String> = f.iter().map(|l| map[l].clone()).collect();
            v.sort();
            v
        })
        .collect();
    Ok((renamed, t2_facets))
}

/// Iterated connected sum realizing the 3n+4 vertex count: n twisted
/// summands for sign +/-, or the 10-vertex double for n = 0 (sign 0).
///
/// Each summand is annotated with which facet was removed and which knot
/// carrier it avoids, so the "new twist unlinked with earlier twists"
/// bookkeeping is auditable in the ledger history.
pub fn s_chain(n: u32, sign: TwistSign) -> Result<SChain, SurgeryError> {
    match (n, sign) {
        (0, TwistSign::Zero) => {}
        (_, TwistSign::Zero) => {
            return Err(SurgeryError::BadParameter(
                "sign 0 is the n = 0 chain".to_string(),
            ))
        }
        (0, _) => {
            return Err(SurgeryError::BadParameter(
                "n = 0 requires sign 0".to_string(),
            ))
        }
        _ => {}
    }

    let knot_for = |s: TwistSign| match s {
        TwistSign::Plus => KnotClass::trefoil(),
        TwistSign::Minus => KnotClass::unknot(),
        TwistSign::Zero => unreachable!(),
    };

    if sign == TwistSign::Zero {
        // One unknot-twisted copy glued to one trefoil-twisted copy.
        let (c1, t2_1) = chain_copy(1)?;
        let (c2, t2_2) = chain_copy(2)?;
        let source = t2_1
            .iter()
            .min()
            .cloned()
            .expect("seven facets in the step-2 torus part");
        let target = t2_2.iter().min().cloned().unwrap();
        let sum = connected_sum_canonical(&c1, &c2, &source, &target)?;
        let mut ledger = ContactClass::new("s3", 0, 7);
        ledger = ledger.apply_lutz(
            &KnotClass::unknot(),
            0,
            "in-place twist along the core of the first copy's step-1 torus",
        )?;
        ledger = ledger.apply_lutz(
            &KnotClass::trefoil(),
            3,
            &format!(
                "sum with copy 2 (removed [{}] from copy 1, [{}] from copy 2); carrier avoids both removed facets; unlinked from earlier carriers by construction",
                source.join(" "),
                target.join(" ")
            ),
        )?;
        let complex = NamedComplex {
            name: "s_chain_0".to_string(),
            complex: sum,
            realization: None,
            provenance: "double of the 7-vertex two-torus sphere; 10 = 7 + 7 - 4 vertices"
                .to_string(),
        };
        return Ok(SChain { complex, ledger });
    }

    let (mut acc, mut last_t2) = chain_copy(1)?;
    let mut ledger = ContactClass::new("s3", 0, 7);
    ledger = ledger.apply_lutz(
        &knot_for(sign),
        0,
        "in-place twist along the knot carried by the first copy's step-1 torus",
    )?;
    for k in 2..=(n as usize) {
        let (copy, copy_t2) = chain_copy(k)?;
        // Remove a facet of the accumulated sum that lies in the previous
        // copy's step-2 torus part and is still present.
        let present: BTreeSet<Vec<String>> = acc.facet_labels().into_iter().collect();
        let source = last_t2
            .iter()
            .filter(|f| present.contains(*f))
            .min()
            .cloned()
            .ok_or_else(|| SurgeryError::BadGluing("no removable facet left".to_string()))?;
        let target = copy_t2.iter().min().cloned().unwrap();
        acc = connected_sum_canonical(&acc, &copy, &source, &target)?;
        ledger = ledger.apply_lutz(
            &knot_for(sign),
            3,
            &format!(
                "sum with copy {} (removed [{}] and [{}]); both removed facets lie in step-2 torus parts, away from every knot carrier; new twist unlinked from earlier ones",
                k,
                source.join(" "),
                target.join(" ")
            ),
        )?;
        // The gluing renames the removed facet's vertices; carry the new
        // copy's remaining torus-part facets through that identification.
        let rename: BTreeMap<&String, &String> = target.iter().zip(source.iter()).collect();
        last_t2 = copy_t2
            .iter()
            .filter(|f| **f != target)
            .map(|f| {
                let mut v: Vec<String> = f
                    .iter()
                    .map(|l| {
                        rename
                            .get(&l)
                            .map(|s| (*s).clone())
                            .unwrap_or_else(|| l.clone())
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
    }
    let name = format!(
        "s_chain_{}{}",
        n,
        match sign {
            TwistSign::Plus => "p",
            TwistSign::Minus => "m",
            TwistSign::Zero => "z",
        }
    );
    let complex = NamedComplex {
        name,
        complex: acc,
        realization: None,
        provenance: format!(
            "iterated sum of {} copies of the 7-vertex two-torus sphere; 3n+4 vertices",
            n
        ),
    };
    Ok(SChain { complex, ledger })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::homology;
    use crate::generators::s3_5;
    use crate::ledger::D3;

    #[test]
    fn sphere_sum_has_six_vertices_and_sphere_homology() {
        let a = s3_5().unwrap().complex;
        let b = s3_5().unwrap().complex;
        let sigma = a.facet_labels()[0].clone();
        let sum = connected_sum_canonical(&a, &b, &sigma, &sigma).unwrap();
        assert_eq!(sum.vertex_count(), 6);
        assert_eq!(sum.facet_count(), 8);
        let h = homology(&sum);
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.betti(2), 0);
        assert_eq!(h.betti(3), 1);
        assert!(sum.certify_manifold().unwrap().is_closed_manifold());
    }

    #[test]
    fn bad_bijection_is_rejected() {
        let a = s3_5().unwrap().complex;
        let sigma = a.facet_labels()[0].clone();
        let mut g = GluingMap::canonical(&sigma, &sigma);
        let first = g.bijection.keys().next().cloned().unwrap();
        g.bijection.insert(first, "nope".to_string());
        assert!(matches!(
            connected_sum(&a, &a, &g),
            Err(SurgeryError::BadGluing(_))
        ));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = s3_5().unwrap().complex;
        let tau = crate::generators::torus7().unwrap().complex;
        let sa = a.facet_labels()[0].clone();
        let st = tau.facet_labels()[0].clone();
        assert!(matches!(
            connected_sum_canonical(&a, &tau, &sa, &st),
            Err(SurgeryError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn non_facet_is_rejected() {
        let a = s3_5().unwrap().complex;
        let fake = vec![
            "1".to_string(),
            "2".to_string(),
            "3".to_string(),
            "x".to_string(),
        ];
        let sigma = a.facet_labels()[0].clone();
        assert!(matches!(
            connected_sum_canonical(&a, &a, &fake, &sigma),
            Err(SurgeryError::NotAFacet(_))
        ));
    }

    #[test]
    fn chain_counts_match_the_formula() {
        for n in 1..=4u32 {
            let chain = s_chain(n, TwistSign::Plus).unwrap();
            assert_eq!(chain.complex.complex.vertex_count() as u32, 3 * n + 4);
            assert_eq!(chain.ledger.f0_bound, (3 * n + 4) as i64);
            assert_eq!(chain.ledger.d3, D3::Int(n as i64));
        }
        let zero = s_chain(0, TwistSign::Zero).unwrap();
        assert_eq!(zero.complex.complex.vertex_count(), 10);
        assert_eq!(zero.ledger.d3, D3::Int(0));
        let minus = s_chain(3, TwistSign::Minus).unwrap();
        assert_eq!(minus.ledger.d3, D3::Int(-3));
        assert_eq!(minus.complex.complex.vertex_count(), 13);
    }

    #[test]
    fn quotient_detects_collapse() {
        let x = SimplicialComplex::from_facets(vec![vec!["a", "b", "c"]]).unwrap();
        let s = IdentificationScheme::from_classes(vec![vec!["a".to_string(), "b".to_string()]])
            .unwrap();
        assert!(matches!(
            quotient(&x, &s),
            Err(SurgeryError::FacetCollapse { .. })
        ));
    }

    #[test]
    fn quotient_detects_collision() {
        let x =
            SimplicialComplex::from_facets(vec![vec!["a", "b", "c"], vec!["a", "b", "d"]]).unwrap();
        let s = IdentificationScheme::from_classes(vec![vec!["c".to_string(), "d".to_string()]])
            .unwrap();
        assert!(matches!(
            quotient(&x, &s),
            Err(SurgeryError::FacetCollision { .. })
        ));
    }
}

//! Greedy free-face collapsing and 3-ball certificates.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::homology;
use crate::complex::{ComplexError, SimplicialComplex};

/// Strength of a ball certificate, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum BallCertificate {
    Fail,
    /// Trivial reduced homology and 2-sphere boundary.
    HomologyBall,
    /// A greedy collapsing sequence to a single vertex was found.
    Collapsible,
}

/// Greedy free-face collapse: repeatedly removes a pair (f, g) where g is
/// the unique face properly containing f, taking the highest-dimensional
/// free face first and the lexicographically smallest on ties.
///
/// Returns true when the complex collapses to a single vertex. A false
/// return says nothing beyond "this greedy order got stuck".
pub fn collapses_to_point(x: &SimplicialComplex) -> bool {
    let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
    for k in 0..=x.dimension().unwrap_or(0) {
        for f in x.faces_of_dim(k) {
            faces.insert(f);
        }
    }
    loop {
        if faces.len() == 1 {
            return faces.iter().next().map(|f| f.len() == 1).unwrap_or(false);
        }
        // Free pairs: f contained in exactly one other face g.
        let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
        for f in &faces {
            let mut over: Option<&Vec<u32>> = None;
            let mut unique = true;
            for g in &faces {
                if g.len() > f.len() && crate::complex::is_subset(f, g) {
                    if over.is_some() {
                        unique = false;
                        break;
                    }
                    over = Some(g);
                }
            }
            if let (true, Some(g)) = (unique, over) {
                if g.len() != f.len() + 1 {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((bf, _)) => (f.len() > bf.len()) || (f.len() == bf.len() && f < bf),
                };
                if better {
                    best = Some((f.clone(), g.clone()));
                }
            }
        }
        match best {
            None => return false,
            Some((f, g)) => {
                faces.remove(&f);
                faces.remove(&g);
            }
        }
    }
}

/// Ball certificate for a pure 3-complex, strongest level first:
/// `Collapsible` > `HomologyBall` > `Fail`.
///
/// Ball recognition is not decidable in general; the level states exactly
/// what was verified.
pub fn certify_ball(x: &SimplicialComplex) -> Result<BallCertificate, ComplexError> {
    let cert = x.certify_manifold()?;
    if !cert.is_manifold_with_boundary() {
        return Err(ComplexError::NotManifoldWithBoundary);
    }
    if collapses_to_point(x) {
        return Ok(BallCertificate::Collapsible);
    }
    let boundary = x.boundary_subcomplex()?;
    let sphere_boundary = boundary
        .classify_surface()
        .map(|c| c.is_closed_surface && c.connected && c.genus == Some(0))
        .unwrap_or(false);
    if sphere_boundary && homology(x).is_reduced_trivial() {
        return Ok(BallCertificate::HomologyBall);
    }
    Ok(BallCertificate::Fail)
}

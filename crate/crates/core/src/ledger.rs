//! Bookkeeping for homotopy invariants of contact structures under twists,
//! and the vertex-count formulas.
//!
//! Knots are never embedded combinatorially here: a [`KnotClass`] carries
//! exactly the invariant data the twist calculus consumes (a homology class
//! over a declared basis, and the self-linking number when the class
//! vanishes).

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::geometry::{DiskCenter, DiskSpec};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LedgerError {
    #[error("class has {found} coordinates over a rank-{expected} basis")]
    BasisMismatch { expected: usize, found: usize },
    #[error("null-homologous twist needs a self-linking number")]
    MissingSelfLinking,
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// Signed crossing list of a front projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotDiagram {
    /// Crossing signs, each +1 or -1.
    pub crossings: Vec<i8>,
    pub name: Option<String>,
}

impl KnotDiagram {
    pub fn new(crossings: Vec<i8>, name: Option<String>) -> Self {
        assert!(crossings.iter().all(|&c| c == 1 || c == -1));
        KnotDiagram { crossings, name }
    }

    /// Front projection of the unknot: one negative kink.
    pub fn unknot_front() -> Self {
        KnotDiagram::new(vec![-1], Some("unknot front".to_string()))
    }

    /// Front projection of the right-handed trefoil with writhe +1.
    pub fn trefoil_front() -> Self {
        KnotDiagram::new(vec![1, 1, -1], Some("right trefoil front".to_string()))
    }

    /// Positive crossings minus negative crossings.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|&c| c as i64).sum()
    }

    /// Self-linking of the transverse knot the front projects; equals the
    /// writhe.
    pub fn self_linking(&self) -> i64 {
        self.writhe()
    }

    pub fn mirror(&self) -> Self {
        KnotDiagram {
            crossings: self.crossings.iter().map(|&c| -c).collect(),
            name: self.name.as_ref().map(|n| format!("mirror {}", n)),
        }
    }

    pub fn concat(&self, other: &KnotDiagram) -> Self {
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        KnotDiagram {
            crossings,
            name: None,
        }
    }
}

/// The invariant data of a transverse knot: homology class over a declared
/// basis, plus the self-linking number when null-homologous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotClass {
    pub name: String,
    pub homology_class: Vec<i64>,
    pub self_linking: Option<i64>,
}

impl KnotClass {
    /// Null-homologous knot with the given self-linking number.
    pub fn null_homologous(name: &str, sl: i64) -> Self {
        KnotClass {
            name: name.to_string(),
            homology_class: Vec::new(),
            self_linking: Some(sl),
        }
    }

    /// Homologically nontrivial knot; self-linking is undefined.
    pub fn with_class(name: &str, class: Vec<i64>) -> Self {
        KnotClass {
            name: name.to_string(),
            homology_class: class,
            self_linking: None,
        }
    }

    pub fn trefoil() -> Self {
        Self::null_homologous("right trefoil", KnotDiagram::trefoil_front().self_linking())
    }

    pub fn unknot() -> Self {
        Self::null_homologous("unknot", KnotDiagram::unknot_front().self_linking())
    }

    pub fn is_null_homologous(&self) -> bool {
        self.homology_class.iter().all(|&c| c == 0)
    }
}

/// Relative third obstruction: an integer once the second obstruction
/// vanishes, undefined otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D3 {
    Int(i64),
    Undefined,
}

impl Serialize for D3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            D3::Int(n) => serializer.serialize_i64(*n),
            D3::Undefined => serializer.serialize_str("UNDEFINED"),
        }
    }
}

impl<'de> Deserialize<'de> for D3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct D3Visitor;
        impl Visitor<'_> for D3Visitor {
            type Value = D3;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or the string UNDEFINED")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<D3, E> {
                Ok(D3::Int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<D3, E> {
                Ok(D3::Int(v as i64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<D3, E> {
                if v == "UNDEFINED" {
                    Ok(D3::Undefined)
                } else {
                    Err(E::custom(format!("unexpected string {:?}", v)))
                }
            }
        }
        deserializer.deserialize_any(D3Visitor)
    }
}

/// One applied twist, as recorded in a ledger history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRecord {
    pub knot: String,
    pub class: Vec<i64>,
    pub sl: Option<i64>,
    pub delta_f0: i64,
    pub note: String,
}

/// Ledger entry for a contact structure on a named manifold: relative
/// second and third obstructions over a declared basis, a certified vertex
/// count, and the full twist history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactClass {
    pub manifold: String,
    /// Class over the dual basis, relative to the declared reference.
    pub d2: Vec<i64>,
    pub d3: D3,
    pub f0_bound: i64,
    pub base_f0: i64,
    pub history: Vec<TwistRecord>,
}

impl ContactClass {
    /// Fresh ledger at the reference structure: zero obstructions, given
    /// basis rank and starting vertex count.
    pub fn new(manifold: &str, basis_rank: usize, f0: i64) -> Self {
        ContactClass {
            manifold: manifold.to_string(),
            d2: vec![0; basis_rank],
            d3: D3::Int(0),
            f0_bound: f0,
            base_f0: f0,
            history: Vec::new(),
        }
    }

    /// Apply one twist: the second obstruction drops by the knot's class;
    /// for a null-homologous knot the third obstruction gains its
    /// self-linking number, otherwise the third obstruction becomes
    /// undefined. The vertex bound grows by `delta_f0`.
    pub fn apply_lutz(
        &self,
        k: &KnotClass,
        delta_f0: i64,
        note: &str,
    ) -> Result<ContactClass, LedgerError> {
        let null = k.is_null_homologous();
        if !null && k.homology_class.len() != self.d2.len() {
            return Err(LedgerError::BasisMismatch {
                expected: self.d2.len(),
                found: k.homology_class.len(),
            });
        }
        let mut d2 = self.d2.clone();
        if !null {
            for (a, b) in d2.iter_mut().zip(k.homology_class.iter()) {
                *a -= b;
            }
        }
        let d3 = if null {
            let sl = k.self_linking.ok_or(LedgerError::MissingSelfLinking)?;
            match self.d3 {
                D3::Int(v) => D3::Int(v + sl),
                D3::Undefined => D3::Undefined,
            }
        } else {
            D3::Undefined
        };
        let mut history = self.history.clone();
        history.push(TwistRecord {
            knot: k.name.clone(),
            class: if null {
                vec![0; self.d2.len()]
            } else {
                k.homology_class.clone()
            },
            sl: k.self_linking,
            delta_f0,
            note: note.to_string(),
        });
        Ok(ContactClass {
            manifold: self.manifold.clone(),
            d2,
            d3,
            f0_bound: self.f0_bound + delta_f0,
            base_f0: self.base_f0,
            history,
        })
    }

    /// Refold the stored history from the base state; the result must match
    /// the stored values.
    pub fn replay(&self) -> Result<ContactClass, LedgerError> {
        let mut acc = ContactClass::new(&self.manifold, self.d2.len(), self.base_f0);
        for rec in &self.history {
            let k = match rec.sl {
                Some(sl) if rec.class.iter().all(|&c| c == 0) => {
                    KnotClass::null_homologous(&rec.knot, sl)
                }
                _ => KnotClass::with_class(&rec.knot, rec.class.clone()),
            };
            acc = acc.apply_lutz(&k, rec.delta_f0, &rec.note)?;
        }
        Ok(acc)
    }
}

/// Vertex count for the sphere family: `3|n| + 4` for nonzero twist count,
/// 10 at zero.
pub fn s3_vertex_bound(n: i64) -> i64 {
    if n == 0 {
        10
    } else {
        3 * n.abs() + 4
    }
}

/// Vertex count over an arbitrary base triangulation: `f0 + 3|n|` for
/// nonzero twist count, `f0 + 6` at zero. Requires `f0 >= 5`.
pub fn general_vertex_bound(f0: i64, n: i64) -> Result<i64, LedgerError> {
    if f0 < 5 {
        return Err(LedgerError::BadParameter(format!(
            "no triangulated 3-manifold has {} vertices",
            f0
        )));
    }
    Ok(if n == 0 { f0 + 6 } else { f0 + 3 * n.abs() })
}

/// Ledger plus the nested disk family for the twisted flat 3-torus.
#[derive(Debug, Clone, Serialize)]
pub struct T3Ledger {
    pub contact: ContactClass,
    pub disks: Vec<DiskSpec>,
}

/// The n-fold twist along the core line: second obstruction `(0,0,-n)` and
/// nested disks with radius intervals `(r0/(k+1), r0/k)`, k = 1..n.
pub fn t3_ledger(n: u32, r0: f64) -> Result<T3Ledger, LedgerError> {
    if !(0.25 < r0 && r0 < 0.5) {
        return Err(LedgerError::BadParameter(format!(
            "twist tube radius {} outside (1/4, 1/2)",
            r0
        )));
    }
    let mut contact = ContactClass::new("t3", 3, 0);
    let core = KnotClass::with_class("core line", vec![0, 0, 1]);
    let mut disks = Vec::new();
    for k in 1..=n {
        contact = contact.apply_lutz(&core, 0, &format!("twist {} along the core line", k))?;
        disks.push(DiskSpec::new(
            DiskCenter::CubeCoreLine,
            r0 / (k as f64 + 1.0),
            r0 / k as f64,
            k,
        ));
    }
    disks.sort_by(|a, b| a.r_lo.partial_cmp(&b.r_lo).unwrap());
    Ok(T3Ledger { contact, disks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writhe_goldens() {
        assert_eq!(KnotDiagram::unknot_front().writhe(), -1);
        assert_eq!(KnotDiagram::trefoil_front().writhe(), 1);
        assert_eq!(KnotDiagram::new(vec![], None).writhe(), 0);
        assert_eq!(KnotDiagram::new(vec![1, 1, -1], None).writhe(), 1);
    }

    #[test]
    fn writhe_is_additive_and_negates_under_mirror() {
        let a = KnotDiagram::trefoil_front();
        let b = KnotDiagram::unknot_front();
        assert_eq!(a.concat(&b).writhe(), a.writhe() + b.writhe());
        assert_eq!(a.mirror().writhe(), -a.writhe());
        assert_eq!(a.mirror().self_linking(), -a.self_linking());
    }

    #[test]
    fn trefoil_twist_from_the_five_vertex_sphere() {
        let base = ContactClass::new("s3", 0, 5);
        let next = base.apply_lutz(&KnotClass::trefoil(), 3, "sum").unwrap();
        assert_eq!(next.d3, D3::Int(1));
        assert_eq!(next.f0_bound, 8);
        assert!(next.d2.is_empty());
    }

    #[test]
    fn four_unknot_twists_reach_sixteen_vertices() {
        let mut c = ContactClass::new("s3", 0, 7);
        c = c.apply_lutz(&KnotClass::unknot(), 0, "in place").unwrap();
        for _ in 0..3 {
            c = c.apply_lutz(&KnotClass::unknot(), 3, "sum").unwrap();
        }
        assert_eq!(c.d3, D3::Int(-4));
        assert_eq!(c.f0_bound, 16);
        assert_eq!(s3_vertex_bound(-4), 16);
        let replayed = c.replay().unwrap();
        assert_eq!(replayed, c);
    }

    #[test]
    fn homologically_nontrivial_twists_shift_d2() {
        let mut c = ContactClass::new("t3", 3, 40);
        let k = KnotClass::with_class("core", vec![0, 0, 1]);
        for _ in 0..5 {
            c = c.apply_lutz(&k, 0, "twist").unwrap();
        }
        assert_eq!(c.d2, vec![0, 0, -5]);
        assert_eq!(c.d3, D3::Undefined);
    }

    #[test]
    fn vertex_bound_formulas() {
        assert_eq!(s3_vertex_bound(3), 13);
        assert_eq!(s3_vertex_bound(0), 10);
        assert_eq!(s3_vertex_bound(-2), 10);
        assert_eq!(general_vertex_bound(10, 4).unwrap(), 22);
        assert_eq!(general_vertex_bound(5, 0).unwrap(), 11);
        assert_eq!(general_vertex_bound(5, -1).unwrap(), 8);
        assert!(general_vertex_bound(4, 1).is_err());
        // The sphere bound is the general bound over the 7-vertex base,
        // minus the in-place first twist.
        for n in 1..=10 {
            assert_eq!(s3_vertex_bound(n), general_vertex_bound(7, n).unwrap() - 3);
        }
    }

    #[test]
    fn t3_ledger_examples() {
        let l = t3_ledger(2, 0.3).unwrap();
        assert_eq!(l.contact.d2, vec![0, 0, -2]);
        assert_eq!(l.disks.len(), 2);
        assert!((l.disks[0].r_lo - 0.1).abs() < 1e-12);
        assert!((l.disks[0].r_hi - 0.15).abs() < 1e-12);
        assert!((l.disks[1].r_lo - 0.15).abs() < 1e-12);
        assert!((l.disks[1].r_hi - 0.3).abs() < 1e-12);

        let single = t3_ledger(1, 0.45).unwrap();
        assert_eq!(single.disks.len(), 1);
        assert!((single.disks[0].r_lo - 0.225).abs() < 1e-12);

        let none = t3_ledger(0, 0.3).unwrap();
        assert!(none.disks.is_empty());
        assert_eq!(none.contact.d2, vec![0, 0, 0]);

        assert!(t3_ledger(1, 0.6).is_err());
    }

    #[test]
    fn null_twist_without_sl_is_rejected() {
        let base = ContactClass::new("s3", 0, 5);
        let bad = KnotClass {
            name: "bad".to_string(),
            homology_class: vec![],
            self_linking: None,
        };
        assert_eq!(
            base.apply_lutz(&bad, 0, ""),
            Err(LedgerError::MissingSelfLinking)
        );
    }
}

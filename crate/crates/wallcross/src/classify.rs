//! Wall-crossing diagram classification.
//!
//! Builds extended quivers from symmetric bases with framing data and
//! classifies the two-sided contraction diagram attached to a wall:
//! generalized flop for symmetric quivers, generalized flip or MFS for
//! extended quivers with dominant framing, and the explicit two-vertex
//! local models (toric flip/flop, divisorial contraction) with their
//! dimensions. Verdicts always carry a K-order tag and a certificate.
//!
//! The verdicts concern the quiver-side diagram of moduli spaces; the
//! analytic interpretation on nearby geometries is recorded as report
//! metadata by callers, never asserted here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::simples::{has_simple, symmetric_stable_nonempty, SimpleVerdict};
use crate::stability::enumerate_walls;

/// The framing vertex added to a base quiver.
pub const FRAMING_VERTEX: &str = "0";

/// Classification kinds for a wall-crossing diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagramKind {
    GeneralizedFlop,
    GeneralizedFlip,
    GeneralizedMfs,
    DivisorialContraction,
    ToricFlip,
    ToricFlop,
    Isomorphism,
    EmptyBothSides,
    Indeterminate,
}

impl DiagramKind {
    /// The K-order relation the kind forces between the two sides.
    pub fn k_relation(self) -> KRelation {
        match self {
            DiagramKind::GeneralizedFlop
            | DiagramKind::ToricFlop
            | DiagramKind::Isomorphism
            | DiagramKind::EmptyBothSides => KRelation::Equal,
            DiagramKind::GeneralizedFlip
            | DiagramKind::GeneralizedMfs
            | DiagramKind::DivisorialContraction
            | DiagramKind::ToricFlip => KRelation::Greater,
            DiagramKind::Indeterminate => KRelation::NotApplicable,
        }
    }

    /// Flip-kind diagrams strictly decrease the K-order; admissible on
    /// positive walls of a ladder.
    pub fn is_flip_kind(self) -> bool {
        matches!(
            self,
            DiagramKind::GeneralizedFlip
                | DiagramKind::ToricFlip
                | DiagramKind::DivisorialContraction
                | DiagramKind::GeneralizedMfs
        )
    }

    /// Flop-kind diagrams preserve the K-order; required at a zero wall.
    pub fn is_flop_kind(self) -> bool {
        matches!(
            self,
            DiagramKind::GeneralizedFlop
                | DiagramKind::ToricFlop
                | DiagramKind::Isomorphism
                | DiagramKind::EmptyBothSides
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KRelation {
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    GreaterOrEqual,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl std::fmt::Display for KRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            KRelation::Greater => ">",
            KRelation::Equal => "=",
            KRelation::GreaterOrEqual => ">=",
            KRelation::NotApplicable => "n/a",
        };
        f.write_str(s)
    }
}

/// Free-form witness payload carried by every verdict.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// Simple-locus verdict backing the classification, when one was run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<SimpleVerdict>,
    /// Local-model dimensions (plus side, minus side) when available;
    /// None entries mean the side is empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<(Option<i64>, Option<i64>)>,
    /// True when the verdict describes the mirror diagram with the two
    /// sides swapped.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub swapped: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Classification verdict: kind, forced K-relation, witness data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramClass {
    pub kind: DiagramKind,
    pub k_relation: KRelation,
    pub certificate: Certificate,
}

impl DiagramClass {
    pub fn new(kind: DiagramKind, certificate: Certificate) -> DiagramClass {
        DiagramClass { kind, k_relation: kind.k_relation(), certificate }
    }
}

/// A symmetric base quiver with framing data: a_i arrows from the framing
/// vertex to base vertex i, b_i arrows back, and c loops at the framing
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedQuiverSpec {
    pub base: Quiver,
    /// Arrows framing -> i, aligned with the base's canonical vertex order.
    pub a: Vec<u32>,
    /// Arrows i -> framing.
    pub b: Vec<u32>,
    /// Loops at the framing vertex.
    pub c: u32,
}

impl ExtendedQuiverSpec {
    pub fn new(base: Quiver, a: Vec<u32>, b: Vec<u32>, c: u32) -> Result<ExtendedQuiverSpec> {
        if !base.is_symmetric() {
            return Err(Error::input("extended quivers require a symmetric base"));
        }
        let n = base.vertex_count();
        if a.len() != n || b.len() != n {
            return Err(Error::input("framing data must assign a_i and b_i to every base vertex"));
        }
        if base.vertex_index(FRAMING_VERTEX).is_some() {
            return Err(Error::input(format!(
                "base quiver must not use the reserved framing vertex id `{FRAMING_VERTEX}`"
            )));
        }
        Ok(ExtendedQuiverSpec { base, a, b, c })
    }
}

/// Builds the extended quiver: the base plus a framing vertex `0` with the
/// prescribed arrow counts.
pub fn build_extended(spec: &ExtendedQuiverSpec) -> Result<Quiver> {
    let mut vertices: Vec<&str> = vec![FRAMING_VERTEX];
    vertices.extend(spec.base.vertices().iter().map(|v| v.as_str()));
    let mut edges: Vec<(&str, &str)> = spec
        .base
        .edges()
        .iter()
        .map(|&(s, t)| {
            (
                spec.base.vertices()[s].as_str(),
                spec.base.vertices()[t].as_str(),
            )
        })
        .collect();
    for (i, id) in spec.base.vertices().iter().enumerate() {
        for _ in 0..spec.a[i] {
            edges.push((FRAMING_VERTEX, id.as_str()));
        }
        for _ in 0..spec.b[i] {
            edges.push((id.as_str(), FRAMING_VERTEX));
        }
    }
    for _ in 0..spec.c {
        edges.push((FRAMING_VERTEX, FRAMING_VERTEX));
    }
    Quiver::new(&vertices, &edges)
}

/// Extends a base dimension vector by 1 at the framing vertex, aligned with
/// the extended quiver's canonical vertex order.
pub fn extend_dim(qstar: &Quiver, spec: &ExtendedQuiverSpec, m: &DimVector) -> Result<DimVector> {
    spec.base.check_dim(m)?;
    let mut entries = vec![0u32; qstar.vertex_count()];
    let zero = qstar
        .vertex_index(FRAMING_VERTEX)
        .ok_or_else(|| Error::input("extended quiver lost its framing vertex"))?;
    entries[zero] = 1;
    for (i, id) in spec.base.vertices().iter().enumerate() {
        let idx = qstar
            .vertex_index(id)
            .ok_or_else(|| Error::input(format!("vertex `{id}` missing from extended quiver")))?;
        entries[idx] = m.entry(i);
    }
    Ok(DimVector::new(entries))
}

/// Wall-crossing of a symmetric quiver at a primitive dimension vector:
/// a generalized flop when the stable locus is nonempty, otherwise both
/// sides are empty. When no wall separates the chambers the certificate
/// flags the degenerate isomorphism subcase.
pub fn classify_symmetric_flop(quiver: &Quiver, m: &DimVector) -> Result<DiagramClass> {
    if !quiver.is_symmetric() {
        return Err(Error::precondition("flop classification requires a symmetric quiver"));
    }
    if m.is_zero() || !m.is_primitive() {
        return Err(Error::precondition("flop classification requires a primitive dimension vector"));
    }
    let verdict = symmetric_stable_nonempty(quiver, m)?;
    let mut cert = Certificate { simples: Some(verdict.clone()), ..Certificate::default() };
    if verdict.exists {
        if enumerate_walls(m)?.is_empty() {
            cert.notes.push(
                "no wall separates the chambers; both sides are the same nonempty space \
                 (degenerate flop, isomorphism subcase)"
                    .into(),
            );
        }
        Ok(DiagramClass::new(DiagramKind::GeneralizedFlop, cert))
    } else {
        cert.notes
            .push("stable locus empty for every charge, so both sides of the wall are empty".into());
        Ok(DiagramClass::new(DiagramKind::EmptyBothSides, cert))
    }
}

/// Wall-crossing of an extended quiver with dominant framing (a_i > b_i for
/// every base vertex): a generalized flip when the extended dimension
/// vector admits a simple representation, otherwise the minus side is empty
/// and the diagram is a generalized MFS.
///
/// Framing data with a_i = b_i everywhere is rejected with a directive
/// toward the flop classifier; mixed data is reported as indeterminate
/// with per-vertex diagnostics.
pub fn classify_extended_flip(spec: &ExtendedQuiverSpec, m: &DimVector) -> Result<DiagramClass> {
    spec.base.check_dim(m)?;
    let n = spec.base.vertex_count();
    if n > 0 && (0..n).all(|i| spec.a[i] == spec.b[i]) {
        return Err(Error::precondition(
            "a_i = b_i on every base vertex: the extended quiver is symmetric, \
             use the flop classifier on it instead",
        ));
    }
    if !(0..n).all(|i| spec.a[i] > spec.b[i]) {
        let diagnostics: Vec<String> = (0..n)
            .map(|i| {
                let rel = match spec.a[i].cmp(&spec.b[i]) {
                    std::cmp::Ordering::Greater => ">",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Less => "<",
                };
                format!("{}: a={} {} b={}", spec.base.vertices()[i], spec.a[i], rel, spec.b[i])
            })
            .collect();
        let cert = Certificate {
            notes: std::iter::once(
                "framing data is not uniformly a_i > b_i; no classification theorem applies".into(),
            )
            .chain(diagnostics)
            .collect(),
            ..Certificate::default()
        };
        return Ok(DiagramClass::new(DiagramKind::Indeterminate, cert));
    }

    let qstar = build_extended(spec)?;
    let mstar = extend_dim(&qstar, spec, m)?;
    let verdict = has_simple(&qstar, &mstar)?;
    let mut cert = Certificate { simples: Some(verdict.clone()), ..Certificate::default() };
    if n == 1 && m.entry(0) > 0 {
        // single framed vertex: the sides are bundle total spaces over
        // Grassmannians, so the certificate can carry their dimensions
        cert.dims = Some(grassmannian_model_dims(spec.a[0], spec.b[0], spec.c, m.entry(0))?);
    }
    if verdict.exists {
        Ok(DiagramClass::new(DiagramKind::GeneralizedFlip, cert))
    } else {
        cert.notes.push("minus side empty: no simple representation of the extended vector".into());
        Ok(DiagramClass::new(DiagramKind::GeneralizedMfs, cert))
    }
}

/// Sufficient condition for strictness of the flip diagram at the central
/// fiber: the potential is minimal and every framing Grassmannian has
/// positive dimension (a_i > m_i). False reports "no verdict", not
/// "non-strict".
pub fn is_strict_sufficient(spec: &ExtendedQuiverSpec, m: &DimVector, w_minimal: bool) -> bool {
    w_minimal
        && m.len() == spec.a.len()
        && (0..spec.a.len()).all(|i| spec.a[i] > m.entry(i))
}

/// Classification of the rank-one two-vertex local model with framing
/// spaces of dimensions a and b.
pub fn classify_two_vertex(a: u32, b: u32) -> DiagramClass {
    if b > a {
        let mut mirror = classify_two_vertex(b, a);
        mirror.certificate.swapped = true;
        mirror
            .certificate
            .notes
            .push("sides swapped relative to the stated orientation".into());
        return mirror;
    }
    let kind = match (a, b) {
        (0, 0) => DiagramKind::EmptyBothSides,
        (1, 1) => DiagramKind::Isomorphism,
        (a, b) if a == b => DiagramKind::ToricFlop, // a = b >= 2
        (_, 0) => DiagramKind::GeneralizedMfs,
        (_, 1) => DiagramKind::DivisorialContraction,
        _ => DiagramKind::ToricFlip, // a > b >= 2
    };
    let mut cert = Certificate::default();
    if kind == DiagramKind::DivisorialContraction {
        cert.notes
            .push(format!("plus side is the blow-up of affine {a}-space at the origin"));
    }
    DiagramClass::new(kind, cert)
}

/// Critical-locus dimensions (a - b + c - 1, b - a + c - 1) of the
/// two-vertex local model; valid for large generic potentials. Negative
/// values mean the model is degenerate and the formula virtual.
pub fn local_model_dims(a: u32, b: u32, c: u32) -> (i64, i64) {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    (a - b + c - 1, b - a + c - 1)
}

/// Dimensions of the two sides of the Grassmannian local model with
/// framing multiplicities (a1, b1), c loops and base multiplicity m:
/// None when the corresponding Grassmannian is empty (m exceeds the
/// framing dimension).
pub fn grassmannian_model_dims(
    a1: u32,
    b1: u32,
    c: u32,
    m: u32,
) -> Result<(Option<i64>, Option<i64>)> {
    if m == 0 {
        return Err(Error::input("base multiplicity m must be positive"));
    }
    let (a1, b1, c, m) = (a1 as i64, b1 as i64, c as i64, m as i64);
    let plus = (m <= a1).then(|| m * (a1 - m) + m * b1 + c);
    let minus = (m <= b1).then(|| m * (b1 - m) + m * a1 + c);
    Ok((plus, minus))
}

/// Euler pairing of two stable objects from their extension dimensions:
/// chi = ext1(second, first) - ext1(first, second). Negative chi puts the
/// two-vertex model on the flip side, zero on the flop side.
pub fn chi_from_ext(ext_12: u32, ext_21: u32) -> i64 {
    ext_21 as i64 - ext_12 as i64
}

/// Canonical-bundle exponents of the extended quiver, normalized so the
/// framing line bundle is trivial: the base-vertex components b_i - a_i.
pub fn normalized_character(spec: &ExtendedQuiverSpec) -> Result<Vec<i64>> {
    let qstar = build_extended(spec)?;
    let kappa = qstar.canonical_character();
    let mut out = Vec::with_capacity(spec.base.vertex_count());
    for id in spec.base.vertices() {
        let idx = qstar.vertex_index(id).expect("base vertex present in extension");
        out.push(kappa[idx]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simples::SimpleCertificate;

    fn dim(entries: &[u32]) -> DimVector {
        DimVector::new(entries.to_vec())
    }

    fn single_vertex_base() -> Quiver {
        Quiver::new(&["1"], &[]).unwrap()
    }

    #[test]
    fn build_extended_shapes() {
        let base = Quiver::from_counts(&["1", "2", "3"], &[
            vec![0, 1, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
        ])
        .unwrap();
        let spec = ExtendedQuiverSpec::new(base, vec![2, 2, 2], vec![1, 1, 1], 0).unwrap();
        let qstar = build_extended(&spec).unwrap();
        assert_eq!(qstar.vertex_count(), 4);
        let z = qstar.vertex_index("0").unwrap();
        for id in ["1", "2", "3"] {
            let i = qstar.vertex_index(id).unwrap();
            assert_eq!(qstar.edge_count(z, i), 2);
            assert_eq!(qstar.edge_count(i, z), 1);
        }
        assert_eq!(qstar.loop_count(z), 0);

        // blow-up model: one base vertex, a = 4, b = 1
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![4], vec![1], 0).unwrap();
        let qstar = build_extended(&spec).unwrap();
        let z = qstar.vertex_index("0").unwrap();
        let one = qstar.vertex_index("1").unwrap();
        assert_eq!(qstar.edge_count(z, one), 4);
        assert_eq!(qstar.edge_count(one, z), 1);

        // empty framing: disjoint extra vertex
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![0], vec![0], 0).unwrap();
        let qstar = build_extended(&spec).unwrap();
        assert_eq!(qstar.edges().len(), 0);
    }

    #[test]
    fn extended_quiver_is_asymmetric_when_framing_differs() {
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![2], vec![1], 0).unwrap();
        let qstar = build_extended(&spec).unwrap();
        assert!(!qstar.is_symmetric());
    }

    #[test]
    fn rejects_asymmetric_base() {
        let base = Quiver::new(&["1", "2"], &[("1", "2")]).unwrap();
        assert!(ExtendedQuiverSpec::new(base, vec![1, 1], vec![0, 0], 0).is_err());
    }

    #[test]
    fn symmetric_flop_cases() {
        // two vertices, r arrows each way, loops (3, 2)
        for r in 1..=3 {
            let q = Quiver::from_counts(&["1", "2"], &[vec![3, r], vec![r, 2]]).unwrap();
            let c = classify_symmetric_flop(&q, &dim(&[1, 1])).unwrap();
            assert_eq!(c.kind, DiagramKind::GeneralizedFlop, "r = {r}");
            assert_eq!(c.k_relation, KRelation::Equal);
        }

        // disconnected symmetric support
        let q = Quiver::from_counts(&["1", "2"], &[vec![2, 0], vec![0, 2]]).unwrap();
        let c = classify_symmetric_flop(&q, &dim(&[1, 1])).unwrap();
        assert_eq!(c.kind, DiagramKind::EmptyBothSides);
        assert!(matches!(
            c.certificate.simples.unwrap().certificate,
            SimpleCertificate::NotStronglyConnected { .. }
        ));

        // single vertex with loops: nonempty, no separating wall
        let q = Quiver::from_counts(&["1"], &[vec![2]]).unwrap();
        let c = classify_symmetric_flop(&q, &dim(&[1])).unwrap();
        assert_eq!(c.kind, DiagramKind::GeneralizedFlop);
        assert!(c.certificate.notes.iter().any(|n| n.contains("isomorphism subcase")));
    }

    #[test]
    fn symmetric_flop_preconditions() {
        let kron = Quiver::new(&["1", "2"], &[("1", "2"), ("1", "2")]).unwrap();
        assert!(classify_symmetric_flop(&kron, &dim(&[1, 1])).is_err());
        let sym = Quiver::from_counts(&["1", "2"], &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(classify_symmetric_flop(&sym, &dim(&[2, 2])).is_err());
    }

    #[test]
    fn extended_flip_and_mfs() {
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![4], vec![2], 0).unwrap();
        let flip = classify_extended_flip(&spec, &dim(&[2])).unwrap();
        assert_eq!(flip.kind, DiagramKind::GeneralizedFlip);
        assert_eq!(flip.k_relation, KRelation::Greater);

        let mfs = classify_extended_flip(&spec, &dim(&[3])).unwrap();
        assert_eq!(mfs.kind, DiagramKind::GeneralizedMfs);
        assert!(matches!(
            mfs.certificate.simples.as_ref().unwrap().certificate,
            SimpleCertificate::DestabilizingVertex { .. }
        ));

        // loops at the framing vertex change nothing
        let spec_c = ExtendedQuiverSpec::new(single_vertex_base(), vec![4], vec![2], 3).unwrap();
        assert_eq!(classify_extended_flip(&spec_c, &dim(&[2])).unwrap().kind, DiagramKind::GeneralizedFlip);

        // b = 0 everywhere starves the framing vertex of incoming arrows
        let spec0 = ExtendedQuiverSpec::new(single_vertex_base(), vec![2], vec![0], 0).unwrap();
        let v = classify_extended_flip(&spec0, &dim(&[1])).unwrap();
        assert_eq!(v.kind, DiagramKind::GeneralizedMfs);
        assert!(matches!(
            v.certificate.simples.as_ref().unwrap().certificate,
            SimpleCertificate::DestabilizingVertex { .. }
        ));

        // b = 0 on one looped component while another feeds the framing
        // vertex: every pairing passes, connectivity fails
        let base = Quiver::from_counts(&["1", "2"], &[vec![1, 0], vec![0, 1]]).unwrap();
        let spec_nc = ExtendedQuiverSpec::new(base, vec![2, 2], vec![0, 1], 0).unwrap();
        let v = classify_extended_flip(&spec_nc, &dim(&[1, 1])).unwrap();
        assert_eq!(v.kind, DiagramKind::GeneralizedMfs);
        assert!(matches!(
            v.certificate.simples.as_ref().unwrap().certificate,
            SimpleCertificate::NotStronglyConnected { .. }
        ));
    }

    #[test]
    fn extended_flip_rejects_balanced_and_flags_mixed() {
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![2], vec![2], 0).unwrap();
        let err = classify_extended_flip(&spec, &dim(&[1])).unwrap_err();
        assert!(err.to_string().contains("flop"));

        let base2 = Quiver::new(&["1", "2"], &[]).unwrap();
        let spec = ExtendedQuiverSpec::new(base2, vec![3, 1], vec![1, 1], 0).unwrap();
        let v = classify_extended_flip(&spec, &dim(&[1, 1])).unwrap();
        assert_eq!(v.kind, DiagramKind::Indeterminate);
        assert_eq!(v.k_relation, KRelation::NotApplicable);
        assert!(v.certificate.notes.iter().any(|n| n.contains("a=1 = b=1")));
    }

    #[test]
    fn strictness_sufficient_condition() {
        let spec = ExtendedQuiverSpec::new(single_vertex_base(), vec![4], vec![2], 0).unwrap();
        assert!(is_strict_sufficient(&spec, &dim(&[2]), true));
        let spec2 = ExtendedQuiverSpec::new(single_vertex_base(), vec![2], vec![1], 0).unwrap();
        assert!(!is_strict_sufficient(&spec2, &dim(&[2]), true));
        assert!(!is_strict_sufficient(&spec, &dim(&[2]), false));
    }

    #[test]
    fn two_vertex_table() {
        assert_eq!(classify_two_vertex(4, 2).kind, DiagramKind::ToricFlip);
        assert_eq!(classify_two_vertex(3, 3).kind, DiagramKind::ToricFlop);
        assert_eq!(classify_two_vertex(4, 1).kind, DiagramKind::DivisorialContraction);
        assert_eq!(classify_two_vertex(4, 0).kind, DiagramKind::GeneralizedMfs);
        assert_eq!(classify_two_vertex(1, 1).kind, DiagramKind::Isomorphism);
        assert_eq!(classify_two_vertex(0, 0).kind, DiagramKind::EmptyBothSides);
        let mirror = classify_two_vertex(1, 4);
        assert_eq!(mirror.kind, DiagramKind::DivisorialContraction);
        assert!(mirror.certificate.swapped);
        assert_eq!(mirror.k_relation, KRelation::Greater);
    }

    #[test]
    fn model_dimensions() {
        assert_eq!(local_model_dims(3, 2, 5), (5, 3));
        assert_eq!(local_model_dims(2, 2, 0), (-1, -1));

        assert_eq!(grassmannian_model_dims(4, 2, 0, 1).unwrap(), (Some(5), Some(5)));
        assert_eq!(grassmannian_model_dims(4, 2, 0, 3).unwrap(), (Some(9), None));
        // m = a1 = b1: both sides m*b1 + c
        assert_eq!(grassmannian_model_dims(2, 2, 3, 2).unwrap(), (Some(7), Some(7)));
        assert!(grassmannian_model_dims(4, 2, 0, 0).is_err());
    }

    #[test]
    fn chi_sign_matches_branch() {
        assert_eq!(chi_from_ext(2, 2), 0);
        assert_eq!(chi_from_ext(3, 1), -2);
        assert_eq!(chi_from_ext(0, 0), 0);
    }

    #[test]
    fn normalized_character_is_framing_deficit() {
        let base = Quiver::from_counts(&["1", "2"], &[vec![1, 2], vec![2, 0]]).unwrap();
        let spec = ExtendedQuiverSpec::new(base, vec![4, 3], vec![1, 2], 2).unwrap();
        assert_eq!(normalized_character(&spec).unwrap(), vec![1 - 4, 2 - 3]);
    }
}

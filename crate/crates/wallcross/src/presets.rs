//! Geometric wall-crossing scenarios translated into classifier inputs.
//!
//! Curve classes are modeled only through their degrees against a fixed
//! polarization plus a finite list of declared decomposition classes; the
//! wall formulas consume exactly this data. Cohomological inputs (h0, h1,
//! extension dimensions) are caller-supplied integers, with the index
//! identity h0 - h1 = n enforced as a consistency check. Conjectural
//! scheme-structure refinements ride along as annotations and are never
//! asserted.

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat_display, rat_int, Rat};
use crate::classify::{
    classify_extended_flip, classify_symmetric_flop, classify_two_vertex, local_model_dims,
    Certificate, DiagramClass, DiagramKind, ExtendedQuiverSpec, KRelation,
};
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Serde adapter for a pair of rationals as two display strings.
mod rat_pair_string {
    use crate::arith::{rat_display, Rat};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(pair: &(Rat, Rat), s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&rat_display(&pair.0))?;
        t.serialize_element(&rat_display(&pair.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rat, Rat), D::Error> {
        let (a, b) = <(String, String)>::deserialize(d)?;
        let parse = |text: &str| -> Result<Rat, D::Error> {
            crate::formats::parse_rational(text).map_err(D::Error::custom)
        };
        Ok((parse(&a)?, parse(&b)?))
    }
}

/// A simple collection: a distinguished rank-one object (index 0) together
/// with shifted one-dimensional sheaves (indices 1..k), described by its
/// matrix of first extension dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionDescriptor {
    /// ext1[i][j] = dim Ext^1(E_i, E_j); (k+1) x (k+1).
    pub ext1: Vec<Vec<u32>>,
    pub labels: Option<Vec<String>>,
}

impl CollectionDescriptor {
    /// Validates shape and the symmetry of the sheaf block (indices 1..k).
    /// The simple-collection assumptions (one-dimensional homs on the
    /// diagonal, no negative-degree extensions) are an input contract and
    /// cannot be checked from this data.
    pub fn new(ext1: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<CollectionDescriptor> {
        let size = ext1.len();
        if size == 0 {
            return Err(Error::input("collection must contain the rank-one object"));
        }
        if ext1.iter().any(|row| row.len() != size) {
            return Err(Error::input("ext matrix must be square"));
        }
        for i in 1..size {
            for j in i + 1..size {
                if ext1[i][j] != ext1[j][i] {
                    return Err(Error::input(format!(
                        "sheaf block must be symmetric: ext1[{i}][{j}] = {} but ext1[{j}][{i}] = {}",
                        ext1[i][j], ext1[j][i]
                    )));
                }
            }
        }
        if let Some(ref labels) = labels {
            if labels.len() != size {
                return Err(Error::input("label list must match the collection size"));
            }
        }
        Ok(CollectionDescriptor { ext1, labels })
    }

    pub fn size(&self) -> usize {
        self.ext1.len()
    }
}

/// The quiver of a collection: vertices 0..k, with ext1[i][j] arrows from
/// i to j. Restricted to 1..k it is symmetric; vertex 0 carries the
/// framing data a_i = ext1[0][i], b_i = ext1[i][0], c = ext1[0][0].
pub fn ext_quiver(desc: &CollectionDescriptor) -> Result<Quiver> {
    let names: Vec<String> = (0..desc.size()).map(|i| i.to_string()).collect();
    Quiver::from_counts(
        &names,
        &desc
            .ext1
            .iter()
            .map(|row| row.iter().map(|&c| c as usize).collect())
            .collect::<Vec<_>>(),
    )
}

/// The framing view of a collection: symmetric base on the sheaf vertices
/// plus the framing multiplicities of the rank-one object.
pub fn ext_quiver_spec(desc: &CollectionDescriptor) -> Result<ExtendedQuiverSpec> {
    let k = desc.size() - 1;
    let names: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let base = Quiver::from_counts(
        &names,
        &(1..=k)
            .map(|i| (1..=k).map(|j| desc.ext1[i][j] as usize).collect())
            .collect::<Vec<_>>(),
    )?;
    // base vertices sort as strings; realign a and b accordingly
    let mut a = vec![0u32; k];
    let mut b = vec![0u32; k];
    for i in 1..=k {
        let idx = base
            .vertex_index(&i.to_string())
            .expect("base vertex present");
        a[idx] = desc.ext1[0][i];
        b[idx] = desc.ext1[i][0];
    }
    ExtendedQuiverSpec::new(base, a, b, desc.ext1[0][0])
}

/// A wall line in the (x, y) plane of divisor coordinates:
/// slope_x * x - slope_y * y = rhs, produced by the decomposition
/// (r1, k1, n1). All lines for fixed geometry data are parallel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticWall {
    pub r1: u32,
    pub k1: u32,
    pub n1: i64,
    #[serde(with = "crate::arith::rat_string")]
    pub rhs: Rat,
}

/// Wall lines for one-dimensional sheaf counting on an elliptic fibration
/// with fiber/section degrees d1, d2 and class r[F] + k[l]. For each
/// decomposition (r1, k1, n1) the wall is the affine line
/// (3 d1 + d2) x - d1 y = (r1 d1 + k1 d2 - n1 (r d1 + k d2)) / (r k1 - k r1),
/// so every wall is parallel with direction (d1, 3 d1 + d2).
pub fn elliptic_walls(
    d1: &Rat,
    d2: &Rat,
    r: u32,
    k: u32,
    n_window: std::ops::RangeInclusive<i64>,
) -> Result<Vec<EllipticWall>> {
    if !d1.is_positive() || !d2.is_positive() {
        return Err(Error::input("degrees d1, d2 must be positive"));
    }
    if r == 0 && k == 0 {
        return Err(Error::precondition("class must be nonzero: (r, k) != (0, 0)"));
    }
    let mut walls = Vec::new();
    for r1 in 0..=r {
        for k1 in 0..=k {
            if (r1, k1) == (0, 0) || (r1, k1) == (r, k) {
                continue;
            }
            let det = r as i64 * k1 as i64 - k as i64 * r1 as i64;
            if det == 0 {
                continue; // proportional sub-class: no wall line
            }
            for n1 in n_window.clone() {
                let numer = rat_int(r1 as i64) * d1
                    + rat_int(k1 as i64) * d2
                    - rat_int(n1) * (rat_int(r as i64) * d1 + rat_int(k as i64) * d2);
                walls.push(EllipticWall { r1, k1, n1, rhs: numer / rat_int(det) });
            }
        }
    }
    walls.sort_by_key(|a| (a.r1, a.k1, a.n1));
    Ok(walls)
}

/// Direction vector shared by every elliptic wall line: (d1, 3 d1 + d2).
pub fn elliptic_wall_direction(d1: &Rat, d2: &Rat) -> (Rat, Rat) {
    (d1.clone(), rat_int(3) * d1 + d2)
}

/// One decomposition candidate sitting on a ladder wall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderDecomposition {
    pub class_id: String,
    #[serde(with = "crate::arith::rat_string")]
    pub omega_degree: Rat,
    pub n: i64,
}

/// A wall of the one-parameter stability ladder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderWall {
    #[serde(with = "crate::arith::rat_string")]
    pub t: Rat,
    /// Positive walls are where the flip/MFS classification applies.
    pub positive: bool,
    pub decompositions: Vec<LadderDecomposition>,
}

/// Strictly decreasing, duplicate-free list of candidate walls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallLadder {
    pub walls: Vec<LadderWall>,
}

/// Candidate walls t = n' / (omega . beta') for the one-parameter family:
/// beta' ranges over the declared classes with positive degree at most the
/// degree of beta, n' over the window, except that beta' = beta pins
/// n' = n (the rank-one remainder is then trivial and carries no freedom).
/// Deduplicated by t and sorted descending. The window is a caller-supplied
/// heuristic: no effective bound is available, so candidates outside it are
/// silently absent.
pub fn stable_pair_walls(
    classes: &[(String, Rat)],
    beta_id: &str,
    n: i64,
    n_window: std::ops::RangeInclusive<i64>,
) -> Result<WallLadder> {
    if classes.is_empty() {
        return Err(Error::input("declare at least one effective class"));
    }
    let beta_degree = classes
        .iter()
        .find(|(id, _)| id == beta_id)
        .map(|(_, d)| d.clone())
        .ok_or_else(|| Error::input(format!("class `{beta_id}` is not declared")))?;
    if classes.iter().any(|(_, d)| !d.is_positive()) {
        return Err(Error::input("class degrees must be positive"));
    }

    let mut by_t: std::collections::BTreeMap<Rat, Vec<LadderDecomposition>> =
        std::collections::BTreeMap::new();
    for (id, degree) in classes {
        if degree > &beta_degree {
            continue;
        }
        let candidates: Vec<i64> = if id == beta_id {
            vec![n]
        } else {
            n_window.clone().collect()
        };
        for n1 in candidates {
            let t = rat_int(n1) / degree;
            by_t.entry(t).or_default().push(LadderDecomposition {
                class_id: id.clone(),
                omega_degree: degree.clone(),
                n: n1,
            });
        }
    }
    let walls: Vec<LadderWall> = by_t
        .into_iter()
        .rev()
        .map(|(t, mut decompositions)| {
            decompositions.sort_by_key(|a| (a.class_id.clone(), a.n));
            LadderWall { positive: t.is_positive(), t, decompositions }
        })
        .collect();
    Ok(WallLadder { walls })
}

/// Classification of the one-wall diagram for an irreducible class from
/// the pair invariant n and the obstruction dimension h1.
pub fn classify_irreducible_wall(n: i64, h1: u32) -> DiagramClass {
    if n < 0 {
        let mut mirror = classify_irreducible_wall(-n, h1);
        mirror.certificate.swapped = true;
        mirror
            .certificate
            .notes
            .push("sides swapped relative to the stated orientation".into());
        return mirror;
    }
    let kind = if n > 0 {
        match h1 {
            0 => DiagramKind::GeneralizedMfs,
            1 => DiagramKind::DivisorialContraction,
            _ => DiagramKind::GeneralizedFlip,
        }
    } else {
        match h1 {
            0 => DiagramKind::EmptyBothSides,
            1 => DiagramKind::Isomorphism,
            _ => DiagramKind::GeneralizedFlop,
        }
    };
    DiagramClass::new(kind, Certificate::default())
}

/// Symmetric-product model over a genus-g curve: the two sides of the
/// rank-one wall are symmetric products of dimensions (n + g - 1, -n + g - 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbelJacobiReport {
    pub g: u32,
    pub n: i64,
    pub h0: u32,
    pub h1: u32,
    pub class: DiagramClass,
    pub wall_class: DiagramClass,
    /// local-model dimensions (n + g - 1, -n + g - 1); negative = empty side
    pub dims: (i64, i64),
}

/// Builds the two-vertex model at (h0, h1) with c = g loops and reports the
/// classification by h1 together with the side dimensions. Requires
/// h0 = n + h1 >= 0.
pub fn abel_jacobi_model(g: u32, n: i64, h1: u32) -> Result<AbelJacobiReport> {
    let h0 = n + h1 as i64;
    if h0 < 0 {
        return Err(Error::input("h0 = n + h1 must be nonnegative"));
    }
    let h0 = h0 as u32;
    let dims = local_model_dims(h0, h1, g);
    debug_assert_eq!(dims.0, n + g as i64 - 1);
    debug_assert_eq!(dims.1, -n + g as i64 - 1);
    Ok(AbelJacobiReport {
        g,
        n,
        h0,
        h1,
        class: classify_two_vertex(h0, h1),
        wall_class: classify_irreducible_wall(n, h1),
        dims,
    })
}

/// One entry of the chamber chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub label: String,
    /// Asymptotic tags: which stable-pair side the chamber realizes.
    pub sides: Vec<String>,
}

/// K-order relation across one wall, stated with the dominant entry first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainRelation {
    pub upper: usize,
    pub lower: usize,
    pub relation: KRelation,
    #[serde(with = "crate::arith::rat_string")]
    pub wall_t: Rat,
    pub kind: DiagramKind,
}

/// The ordered chamber chain with its K-order relations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MmpLedger {
    pub entries: Vec<ChainEntry>,
    pub relations: Vec<ChainRelation>,
}

/// Assembles the chamber chain from a ladder and per-wall classifications.
/// Positive walls must carry flip-kind diagrams and a wall at t = 0 a
/// flop-kind diagram; the chain decreases in the K-order away from the
/// pair side, with strict drops exactly where the class demands them.
pub fn mmp_ledger(ladder: &WallLadder, per_wall: &[DiagramClass]) -> Result<MmpLedger> {
    if ladder.walls.len() != per_wall.len() {
        return Err(Error::input(format!(
            "ladder has {} walls but {} classifications were supplied",
            ladder.walls.len(),
            per_wall.len()
        )));
    }
    for (wall, class) in ladder.walls.iter().zip(per_wall) {
        if wall.t.is_positive() && !class.kind.is_flip_kind() {
            return Err(Error::input(format!(
                "wall at t = {} must be a flip-kind diagram, got {:?}",
                rat_display(&wall.t),
                class.kind
            )));
        }
        if wall.t.is_zero() && !class.kind.is_flop_kind() {
            return Err(Error::input(format!(
                "the wall at t = 0 must be a flop-kind diagram, got {:?}",
                class.kind
            )));
        }
    }

    let count = ladder.walls.len();
    let mut entries = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let mut sides = Vec::new();
        if count > 0 {
            let upper_inf = i == 0;
            let lower = ladder.walls.get(i).map(|w| &w.t);
            let upper = (i > 0).then(|| &ladder.walls[i - 1].t);
            if upper_inf {
                sides.push("pair side (t >> 0)".to_string());
            }
            let upper_positive = upper_inf || upper.map(|t| t.is_positive()).unwrap_or(false);
            let lower_nonpositive = lower.map(|t| !t.is_positive()).unwrap_or(true);
            if upper_positive && lower_nonpositive && !upper_inf {
                sides.push("small-t side (0 < t << 1)".to_string());
            }
            if i == count && lower.is_none() {
                sides.push("dual pair side (t << 0)".to_string());
            }
        }
        entries.push(ChainEntry { label: format!("M{}", i + 1), sides });
    }

    let relations = ladder
        .walls
        .iter()
        .zip(per_wall)
        .enumerate()
        .map(|(i, (wall, class))| {
            let (upper, lower) = if wall.t.is_negative() { (i + 1, i) } else { (i, i + 1) };
            ChainRelation {
                upper,
                lower,
                relation: class.k_relation,
                wall_t: wall.t.clone(),
                kind: class.kind,
            }
        })
        .collect();

    Ok(MmpLedger { entries, relations })
}

// ---------------------------------------------------------------------------
// Named presets
// ---------------------------------------------------------------------------

/// Report of the rank-one two-vertex local model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoVertexModelReport {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub class: DiagramClass,
    pub dims: (i64, i64),
    pub degenerate: bool,
}

/// `toric-flip`: the two-vertex local model with framing dimensions (a, b)
/// and c auxiliary directions.
pub fn preset_toric_flip(a: u32, b: u32, c: u32) -> TwoVertexModelReport {
    let dims = local_model_dims(a, b, c);
    TwoVertexModelReport {
        a,
        b,
        c,
        class: classify_two_vertex(a, b),
        dims,
        degenerate: dims.0 < 0 || dims.1 < 0,
    }
}

/// Report of the Grassmannian wall model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrassmannianReport {
    pub a1: u32,
    pub b1: u32,
    pub c: u32,
    pub m: u32,
    pub class: DiagramClass,
    /// total-space dimensions over the two Grassmannians; None = empty side
    pub dims: (Option<i64>, Option<i64>),
}

/// `grassmannian-flip`: one framed vertex with multiplicity m; the two
/// sides are bundle total spaces over Grassmannians of m-dimensional
/// quotients.
pub fn preset_grassmannian_flip(a1: u32, b1: u32, c: u32, m: u32) -> Result<GrassmannianReport> {
    let base = Quiver::new(&["1"], &[])?;
    let spec = ExtendedQuiverSpec::new(base, vec![a1], vec![b1], c)?;
    let class = classify_extended_flip(&spec, &DimVector::new(vec![m]))?;
    let dims = crate::classify::grassmannian_model_dims(a1, b1, c, m)?;
    Ok(GrassmannianReport { a1, b1, c, m, class, dims })
}

/// Report of the elliptic-fibration wall system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticFiberReport {
    #[serde(with = "crate::arith::rat_string")]
    pub d1: Rat,
    #[serde(with = "crate::arith::rat_string")]
    pub d2: Rat,
    pub r: u32,
    pub k: u32,
    #[serde(with = "rat_pair_string")]
    pub direction: (Rat, Rat),
    pub walls: Vec<EllipticWall>,
    /// The fiber-plus-line collection at the distinguished wall: loops
    /// (3, 2) and r arrows each way.
    pub fiber_quiver: Quiver,
    pub flop: DiagramClass,
}

/// `elliptic-fiber`: wall lines for the class r[F] + k[l], plus the
/// symmetric two-vertex collection with loops (3, 2) and r arrows each way
/// whose wall-crossing is a generalized flop.
pub fn preset_elliptic_fiber(
    d1: &Rat,
    d2: &Rat,
    r: u32,
    k: u32,
    window: std::ops::RangeInclusive<i64>,
) -> Result<EllipticFiberReport> {
    if r == 0 {
        return Err(Error::input("the fiber collection needs r >= 1"));
    }
    let walls = elliptic_walls(d1, d2, r, k, window)?;
    let fiber_quiver = Quiver::from_counts(
        &["1", "2"],
        &[vec![3, r as usize], vec![r as usize, 2]],
    )?;
    let flop = classify_symmetric_flop(&fiber_quiver, &DimVector::new(vec![1, 1]))?;
    Ok(EllipticFiberReport {
        d1: d1.clone(),
        d2: d2.clone(),
        r,
        k,
        direction: elliptic_wall_direction(d1, d2),
        walls,
        fiber_quiver,
        flop,
    })
}

/// Report of the rank-one-plus-points wall model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DtptPointReport {
    pub spec: ExtendedQuiverSpec,
    pub m: DimVector,
    pub class: DiagramClass,
    pub annotations: Vec<String>,
}

/// `dtpt-point`: a rank-one object framed against a point sheaf (three
/// loops from its tangent directions). The extension multiplicities are
/// caller-supplied; the defaults model an ideal sheaf against a point off
/// the curve.
pub fn preset_dtpt_point(a: u32, b: u32, c: u32, loops: u32, m: u32) -> Result<DtptPointReport> {
    let base = Quiver::from_counts(&["1"], &[vec![loops as usize]])?;
    let spec = ExtendedQuiverSpec::new(base, vec![a], vec![b], c)?;
    let mvec = DimVector::new(vec![m]);
    let class = classify_extended_flip(&spec, &mvec)?;
    Ok(DtptPointReport {
        spec,
        m: mvec,
        class,
        annotations: vec![
            "extension multiplicities are user-supplied input, not computed from geometry".into(),
            "crossing toward small t removes the free point from the pair side".into(),
        ],
    })
}

/// Report of a stable-pair wall ladder with its classifications.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LadderReport {
    pub ladder: WallLadder,
    pub classes: Vec<DiagramClass>,
    pub ledger: MmpLedger,
    pub annotations: Vec<String>,
}

/// `non-irreducible-1`: two rational curves meeting in a point, degrees
/// d1 > d2, pair class (curve sum, 2). Two walls: a divisorial contraction
/// where the structure sheaf of the second curve splits off, then an MFS
/// at the full-class wall.
pub fn preset_non_irreducible_1(d1: &Rat, d2: &Rat) -> Result<LadderReport> {
    if !(d1 > d2 && d2.is_positive()) {
        return Err(Error::input("degrees must satisfy d1 > d2 > 0"));
    }
    let full = d1 + d2;
    let classes = vec![
        ("curve2-sheaf".to_string(), d2.clone()),
        ("full".to_string(), full),
    ];
    let ladder = stable_pair_walls(&classes, "full", 2, 1..=1)?;
    // first wall: splitting off the degree-d2 structure sheaf; the
    // rank-one remainder extends against it with multiplicities (2, 1)
    let first = classify_two_vertex(2, 1);
    // second wall: the whole sheaf splits off with h0 = 2, h1 = 0
    let second = classify_two_vertex(2, 0);
    let classes_out = vec![first, second];
    let ledger = mmp_ledger(&ladder, &classes_out)?;
    Ok(LadderReport {
        ladder,
        classes: classes_out,
        ledger,
        annotations: vec![
            "reduced chamber models: curve-sum, then first curve, then empty".into(),
            "scheme structure at the contracted point is conjectural (potential u^2); \
             annotation only, not asserted"
                .into(),
        ],
    })
}

/// `non-irreducible-2`: a single rational curve, pair class (2[C], 4).
/// Two walls: a divisorial contraction (the blow-up of affine 4-space)
/// where a twisted structure sheaf splits off, then an MFS.
pub fn preset_non_irreducible_2(d: &Rat) -> Result<LadderReport> {
    if !d.is_positive() {
        return Err(Error::input("degree must be positive"));
    }
    let classes = vec![
        ("curve-sheaf".to_string(), d.clone()),
        ("full".to_string(), rat_int(2) * d),
    ];
    let ladder = stable_pair_walls(&classes, "full", 4, 3..=3)?;
    let first = classify_two_vertex(4, 1);
    let second = classify_two_vertex(4, 0);
    let classes_out = vec![first, second];
    let ledger = mmp_ledger(&ladder, &classes_out)?;
    Ok(LadderReport {
        ladder,
        classes: classes_out,
        ledger,
        annotations: vec![
            "reduced chamber models: projective 3-space, then a point, then empty".into(),
            "scheme structure is conjectural (potential uv + ts, non-reduced along a quadric); \
             annotation only, not asserted"
                .into(),
        ],
    })
}

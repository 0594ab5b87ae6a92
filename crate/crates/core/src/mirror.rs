//! Polar pairs of reflexive polytopes with the dual action, predicted mirror
//! diamonds and prepared example inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::ehrhart::ehrhart_character;
use crate::error::{Error, Result};
use crate::group::{generate_group, ClassFunction, FiniteGroup, GroupElement, Subgroup};
use crate::hodge::{EquivariantHDPolynomial, HodgeContext, HodgeDiamond};
use crate::invariant::InvariantPolytope;
use crate::linalg;
use crate::polytope::{build_polytope, LatticePoint, ReflexiveStatus, Region};

/// Moves the unique interior point of a reflexive polytope to the origin.
/// Returns the centered polytope with its now linear action, and the old
/// center.
pub fn recenter(ip: &InvariantPolytope) -> Result<(InvariantPolytope, LatticePoint)> {
    let (center, recentered) = match ip.polytope().classify().reflexive {
        ReflexiveStatus::Reflexive { center, recentered } => (center, recentered),
        ReflexiveStatus::NotReflexive => return Err(Error::NotReflexive),
    };
    let g = ip.group();
    let mut elements = Vec::with_capacity(g.order());
    for (i, e) in g.elements().iter().enumerate() {
        let shift = linalg::sub(&e.apply(&center), &center);
        if shift.iter().any(|&x| x != 0) {
            return Err(Error::InvariantViolation(format!(
                "element {i} moves the interior point"
            )));
        }
        elements.push(GroupElement::linear(e.linear.clone()));
    }
    let group = g.with_action(elements, ip.dim());
    Ok((InvariantPolytope::new(Arc::new(recentered), group)?, center))
}

/// `P*` with `g` acting by the inverse transpose of its linear part.
pub fn dual_invariant(centered: &InvariantPolytope) -> Result<InvariantPolytope> {
    let dual = centered.polytope().polar_dual()?;
    let g = centered.group();
    let elements = (0..g.order())
        .map(|i| GroupElement::linear(linalg::transpose(&g.element(g.inverse(i)).linear)))
        .collect();
    let action = g.with_action(elements, centered.dim());
    InvariantPolytope::new(Arc::new(dual), action).map_err(|e| match e {
        Error::NotSymmetry { .. } => Error::DualNotInvariant,
        other => other,
    })
}

/// `E_G` of the toric variety of the face fan of a reflexive `P`, i.e. of the
/// normal fan of `P*`, as characters of `P`'s group.
pub fn face_fan_toric_e(ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
    let (centered, _) = recenter(ip)?;
    let dual = dual_invariant(&centered)?;
    Ok(HodgeContext::default().toric_e(&dual)?.transfer(ip.group()))
}

#[derive(Debug, Clone)]
pub struct MirrorPair {
    /// Recentered `P` with a linear action.
    pub polytope: InvariantPolytope,
    /// `P*` with the dual action of the same abstract group.
    pub dual: InvariantPolytope,
    pub center: LatticePoint,
}

impl MirrorPair {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.polytope.group()
    }

    pub fn dual_action(&self) -> &Arc<FiniteGroup> {
        self.dual.group()
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }
}

pub fn mirror_pair(ip: &InvariantPolytope) -> Result<MirrorPair> {
    let (polytope, center) = recenter(ip)?;
    let dual = dual_invariant(&polytope)?;

    let back: BTreeSet<LatticePoint> = dual.polytope().polar_dual()?.vertices().iter().cloned().collect();
    let original: BTreeSet<LatticePoint> = polytope.polytope().vertices().iter().cloned().collect();
    if back != original {
        return Err(Error::InvariantViolation("polar dual of the dual is not the polytope".into()));
    }
    let (g, h) = (polytope.group(), dual.group());
    if (0..g.order()).any(|i| g.element(i).det() != h.element(i).det()) {
        return Err(Error::InvariantViolation("dual action changes a determinant".into()));
    }
    Ok(MirrorPair { polytope, dual, center })
}

fn transfer_diamond(diamond: &HodgeDiamond, to: &Arc<FiniteGroup>) -> HodgeDiamond {
    HodgeDiamond {
        group: to.clone(),
        dim: diamond.dim,
        entries: diamond.entries.iter().map(|(&k, v)| (k, v.transfer(to))).collect(),
    }
}

/// The diamond a mirror is expected to have: `det ρ · H^{n-p,q}`.
#[derive(Debug, Clone)]
pub struct PredictedDiamond {
    pub diamond: HodgeDiamond,
}

pub fn predicted_mirror_diamond(source: &HodgeDiamond, det: &ClassFunction) -> PredictedDiamond {
    let flip = |d: &HodgeDiamond| HodgeDiamond {
        group: d.group.clone(),
        dim: d.dim,
        entries: d
            .entries
            .keys()
            .map(|&(p, q)| ((p, q), det * d.get(d.dim - p, q)))
            .collect(),
    };
    let diamond = flip(source);
    assert!(
        flip(&diamond).entries == source.entries,
        "mirror prediction is not an involution"
    );
    PredictedDiamond { diamond }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum EntryStatus {
    Verified,
    Mismatch,
    PredictedOnly,
}

#[derive(Debug, Clone)]
pub struct PairCheckReport {
    /// Every entry was compared, not only the resolution-independent ones.
    pub full: bool,
    pub primal: HodgeDiamond,
    /// The dual side's diamond, as characters of the primal group.
    pub dual: HodgeDiamond,
    pub entries: BTreeMap<(usize, usize), EntryStatus>,
}

impl PairCheckReport {
    pub fn passed(&self) -> bool {
        self.entries.values().all(|&s| s != EntryStatus::Mismatch)
    }
}

/// Compares `H^{p,q}(X)` with `det ρ · H^{n-p,q}(X*)`. The whole diamond is
/// compared when `d ≤ 2` or both polytopes are smooth; otherwise only the
/// `q = 0` row and `p = 0` column, where the entries do not depend on a
/// resolution.
pub fn smooth_pair_check(pair: &MirrorPair) -> Result<PairCheckReport> {
    if !pair.polytope.polytope().is_simple() || !pair.dual.polytope().is_simple() {
        return Err(Error::NotSimple);
    }
    let ctx = HodgeContext::default();
    let primal = ctx.hodge_diamond(&pair.polytope)?;
    let dual = transfer_diamond(&ctx.hodge_diamond(&pair.dual)?, pair.group());
    let det = pair.group().det_character();
    let n = primal.dim;

    for (name, side, diamond) in [("primal", &pair.polytope, &primal), ("dual", &pair.dual, &dual)] {
        let g = side.group();
        let genus = (&g.det_character() * &ehrhart_character(side, 1, Region::Interior)).transfer(pair.group());
        if n >= 1 && *diamond.get(n, 0) != genus {
            return Err(Error::InvariantViolation(format!(
                "{name} H^({n},0) differs from det·χ*"
            )));
        }
    }

    let full = pair.dim() <= 2 || (pair.polytope.polytope().is_smooth() && pair.dual.polytope().is_smooth());
    let mut entries = BTreeMap::new();
    for &(p, q) in primal.entries.keys() {
        let status = if full || p == 0 || q == 0 {
            if *primal.get(p, q) == &det * dual.get(n - p, q) {
                EntryStatus::Verified
            } else {
                EntryStatus::Mismatch
            }
        } else {
            EntryStatus::PredictedOnly
        };
        entries.insert((p, q), status);
    }
    Ok(PairCheckReport {
        full,
        primal,
        dual,
        entries,
    })
}

/// `m·Δ_d` with the coordinate permutations of `Sym_{d+1}`.
pub fn fermat_input(d: usize, m: i64) -> Result<(Vec<LatticePoint>, Vec<GroupElement>)> {
    if d == 0 || m < 1 {
        return Err(Error::InvalidInput("fermat needs d ≥ 1 and m ≥ 1".into()));
    }
    let mut vertices = vec![LatticePoint(vec![0; d])];
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = m;
        vertices.push(LatticePoint(v));
    }
    let mut first = linalg::identity(d);
    first[0] = vec![-1; d];
    let mut translation = vec![0; d];
    translation[0] = m;
    let mut gens = vec![GroupElement {
        linear: first,
        translation,
    }];
    for i in 1..d {
        let mut a = linalg::identity(d);
        a.swap(i - 1, i);
        gens.push(GroupElement::linear(a));
    }
    Ok((vertices, gens))
}

/// `(-1)^{d+1-r} #{0 < a_i < m : Σ λ_i a_i = (p+1) m}` for cycle type `λ`.
pub fn fermat_trace(d: usize, m: i64, cycle_type: &[usize], p: usize) -> i64 {
    let target = (p as i64 + 1) * m;
    fn count(lambda: &[usize], m: i64, remaining: i64) -> i64 {
        match lambda.split_first() {
            None => (remaining == 0) as i64,
            Some((&l, rest)) => (1..m)
                .map(|a| remaining - l as i64 * a)
                .filter(|&r| r >= 0)
                .map(|r| count(rest, m, r))
                .sum(),
        }
    }
    let r = cycle_type.len();
    let sign = if (d + 1 - r) % 2 == 0 { 1 } else { -1 };
    sign * count(cycle_type, m, target)
}

#[derive(Debug, Clone)]
pub struct FermatBundle {
    pub d: usize,
    pub m: i64,
    pub vertices: Vec<LatticePoint>,
    pub generators: Vec<GroupElement>,
    pub input: InvariantPolytope,
    /// Expected `H^{p,d-1-p}_prim` characters, `p = 0..d`.
    pub expected_primitive: Vec<ClassFunction>,
}

#[derive(Debug, Clone)]
pub struct QuinticBundle {
    pub vertices: Vec<LatticePoint>,
    pub generators: Vec<GroupElement>,
    pub pair: MirrorPair,
    /// `1 + 2 Ind_{Sym_3}^{Sym_5} 1 + 2 Ind_{Sym_2×Sym_2}^{Sym_5} 1`.
    pub mu: ClassFunction,
    pub expected_diamond: BTreeMap<(usize, usize), ClassFunction>,
    pub expected_mirror: BTreeMap<(usize, usize), ClassFunction>,
    /// `(h^{1,1}, h^{2,1})` of the quotients by `ker det`, primal then mirror.
    pub expected_quotients: [(i64, i64); 2],
}

#[derive(Debug, Clone)]
pub enum ScenarioBundle {
    Fermat(FermatBundle),
    QuinticMirror(QuinticBundle),
}

impl ScenarioBundle {
    pub fn vertices(&self) -> &[LatticePoint] {
        match self {
            ScenarioBundle::Fermat(b) => &b.vertices,
            ScenarioBundle::QuinticMirror(b) => &b.vertices,
        }
    }

    pub fn generators(&self) -> &[GroupElement] {
        match self {
            ScenarioBundle::Fermat(b) => &b.generators,
            ScenarioBundle::QuinticMirror(b) => &b.generators,
        }
    }
}

pub fn fermat(d: usize, m: i64) -> Result<FermatBundle> {
    let (vertices, generators) = fermat_input(d, m)?;
    let p = build_polytope(vertices.clone())?;
    let group = generate_group(&generators, &p)?;
    let input = InvariantPolytope::new(Arc::new(p), group.clone())?;
    let cycle_types = group.cycle_types();
    let expected_primitive = (0..d)
        .map(|p| ClassFunction::from_classes(&group, |c| fermat_trace(d, m, &cycle_types[c], p)))
        .collect();
    Ok(FermatBundle {
        d,
        m,
        vertices,
        generators,
        input,
        expected_primitive,
    })
}

/// Elements of `g` whose vertex permutation satisfies `keep`.
fn permutation_subgroup(g: &Arc<FiniteGroup>, keep: impl Fn(&[usize]) -> bool) -> Result<Subgroup> {
    let members = (0..g.order()).filter(|&i| keep(g.perm(i))).collect();
    Subgroup::new(g, members)
}

pub fn quintic_mirror() -> Result<QuinticBundle> {
    let base = fermat(4, 5)?;
    let pair = mirror_pair(&base.input)?;
    let g = pair.group().clone();

    let sym3 = permutation_subgroup(&g, |p| p[3] == 3 && p[4] == 4)?;
    let sym2sq = permutation_subgroup(&g, |p| p[4] == 4 && p[0] < 2 && p[1] < 2)?;
    if sym3.order() != 6 || sym2sq.order() != 4 {
        return Err(Error::InvariantViolation("unexpected Young subgroup order".into()));
    }
    let one = g.trivial_character();
    let mu = &(&one + &sym3.induce(&sym3.group().trivial_character())?.scale(2))
        + &sym2sq.induce(&sym2sq.group().trivial_character())?.scale(2);

    let sgn = g.det_character();
    let zero = ClassFunction::zero(&g);
    let grid = |entries: &[((usize, usize), ClassFunction)]| {
        let mut out: BTreeMap<(usize, usize), ClassFunction> =
            (0..4).flat_map(|p| (0..4).map(move |q| (p, q))).map(|k| (k, zero.clone())).collect();
        out.extend(entries.iter().cloned());
        out
    };
    let sgn_mu = &sgn * &mu;
    let expected_diamond = grid(&[
        ((0, 0), one.clone()),
        ((1, 1), one.clone()),
        ((2, 2), one.clone()),
        ((3, 3), one.clone()),
        ((3, 0), sgn.clone()),
        ((0, 3), sgn.clone()),
        ((2, 1), sgn_mu.clone()),
        ((1, 2), sgn_mu),
    ]);
    let expected_mirror = grid(&[
        ((0, 0), one.clone()),
        ((3, 3), one.clone()),
        ((1, 1), mu.clone()),
        ((2, 2), mu.clone()),
        ((3, 0), sgn.clone()),
        ((0, 3), sgn.clone()),
        ((2, 1), sgn.clone()),
        ((1, 2), sgn),
    ]);
    Ok(QuinticBundle {
        vertices: base.vertices,
        generators: base.generators,
        pair,
        mu,
        expected_diamond,
        expected_mirror,
        expected_quotients: [(1, 5), (5, 1)],
    })
}

/// `fermat` takes `(d, m)`; `quintic-mirror` takes nothing.
pub fn scenario(name: &str, params: &[i64]) -> Result<ScenarioBundle> {
    match name {
        "fermat" => match params {
            &[d, m] if d >= 1 => Ok(ScenarioBundle::Fermat(fermat(d as usize, m)?)),
            _ => Err(Error::InvalidInput("fermat takes two parameters d ≥ 1 and m".into())),
        },
        "quintic-mirror" => {
            if !params.is_empty() {
                return Err(Error::InvalidInput("quintic-mirror takes no parameters".into()));
            }
            Ok(ScenarioBundle::QuinticMirror(quintic_mirror()?))
        }
        other => Err(Error::UnknownScenario(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::poly;

    fn invariant(vs: &[&[i64]], gens: Vec<GroupElement>) -> InvariantPolytope {
        let p = poly(vs);
        let g = generate_group(&gens, &p).unwrap();
        InvariantPolytope::new(Arc::new(p), g).unwrap()
    }

    #[test]
    fn segment_is_self_dual() {
        let ip = invariant(&[&[-1], &[1]], vec![GroupElement::linear(vec![vec![-1]])]);
        let pair = mirror_pair(&ip).unwrap();
        let mut dv = pair.dual.polytope().vertices().to_vec();
        dv.sort();
        assert_eq!(dv, vec![LatticePoint(vec![-1]), LatticePoint(vec![1])]);
        let report = smooth_pair_check(&pair).unwrap();
        assert!(report.full && report.passed());
        assert_eq!(report.primal.get(0, 0).values(), &[2, 0]);
    }

    #[test]
    fn square_dual_is_cross_polytope() {
        let ip = invariant(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]], vec![]);
        let pair = mirror_pair(&ip).unwrap();
        let mut dv = pair.dual.polytope().vertices().to_vec();
        dv.sort();
        assert_eq!(
            dv,
            vec![
                LatticePoint(vec![-1, 0]),
                LatticePoint(vec![0, -1]),
                LatticePoint(vec![0, 1]),
                LatticePoint(vec![1, 0]),
            ]
        );
        let report = smooth_pair_check(&pair).unwrap();
        assert!(report.full && report.passed());
        assert_eq!(report.primal.get(1, 0).degree(), 1);
        assert_eq!(report.dual.get(1, 0).degree(), 1);
    }

    #[test]
    fn off_center_triangle_recenters_with_linear_action() {
        let (vertices, gens) = fermat_input(2, 3).unwrap();
        let p = build_polytope(vertices).unwrap();
        let g = generate_group(&gens, &p).unwrap();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        let (centered, center) = recenter(&ip).unwrap();
        assert_eq!(center, LatticePoint(vec![1, 1]));
        assert!(centered.group().elements().iter().all(|e| e.translation == vec![0, 0]));
        let pair = mirror_pair(&ip).unwrap();
        assert_eq!(pair.dual.polytope().vertices().len(), 3);
    }

    #[test]
    fn not_reflexive_rejected() {
        let ip = invariant(&[&[0, 0], &[2, 0], &[0, 2]], vec![]);
        assert_eq!(mirror_pair(&ip).unwrap_err(), Error::NotReflexive);
    }

    #[test]
    fn prediction_is_an_involution() {
        let b = fermat(2, 3).unwrap();
        let d = crate::hodge::hodge_diamond(&b.input).unwrap();
        let det = b.input.group().det_character();
        let once = predicted_mirror_diamond(&d, &det);
        let twice = predicted_mirror_diamond(&once.diamond, &det);
        assert_eq!(twice.diamond.entries, d.entries);
    }

    #[test]
    fn fermat_trace_counts() {
        assert_eq!(fermat_trace(2, 3, &[1, 1, 1], 0), 1);
        assert_eq!(fermat_trace(4, 5, &[1, 1, 1, 1, 1], 1), 101);
        assert_eq!(fermat_trace(4, 5, &[5], 0), 1);
    }

    #[test]
    fn unknown_scenario() {
        assert_eq!(
            scenario("sextic", &[]).unwrap_err(),
            Error::UnknownScenario("sextic".into())
        );
        assert!(matches!(scenario("fermat", &[2]), Err(Error::InvalidInput(_))));
    }
}

//! Equivariant Ehrhart series, the polynomial `φ[t]` and box-point
//! characters of simplices.

use std::sync::Arc;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ClassFunction, FiniteGroup, GroupElement};
use crate::invariant::InvariantPolytope;
use crate::linalg::{self, Matrix};
use crate::polytope::Region;

pub const DEFAULT_BUFFER: usize = 5;

/// Truncated power series with class-function coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterSeries {
    pub coefficients: Vec<ClassFunction>,
}

impl CharacterSeries {
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    fn by_class(&self, c: usize) -> Vec<i64> {
        self.coefficients.iter().map(|f| f.at_class(c)).collect()
    }
}

/// Number of lattice points of `m·P` (or its interior) fixed by each class
/// representative, where `g` fixes `x` iff `A x + m w = x`.
pub fn ehrhart_character(ip: &InvariantPolytope, m: u64, region: Region) -> ClassFunction {
    let g = ip.group();
    let reps: Vec<&GroupElement> = (0..g.num_classes()).map(|c| g.element(g.class_rep(c))).collect();
    let mut counts = vec![0i64; reps.len()];
    let p = ip.polytope();
    p.for_each_point(m, |x, tight| {
        let keep = match region {
            Region::All => true,
            Region::Interior => m > 0 && tight == 0,
            Region::Stratum(k) => {
                if m == 0 {
                    k == 0
                } else {
                    p.carrier_face(tight).map(|f| f.dim) == Some(k as isize)
                }
            }
        };
        if keep {
            for (c, r) in reps.iter().enumerate() {
                if r.fixes_at(x, m as i64) {
                    counts[c] += 1;
                }
            }
        }
    });
    ClassFunction::new(g, counts)
}

/// `χ_{mP}` for `m = 0..=order`.
pub fn ehrhart_series(ip: &InvariantPolytope, order: usize) -> CharacterSeries {
    CharacterSeries {
        coefficients: (0..=order as u64)
            .map(|m| ehrhart_character(ip, m, Region::All))
            .collect(),
    }
}

/// `χ*_{mP}` for `m = 0..=order`, with the `m = 0` term zero.
pub fn interior_series(ip: &InvariantPolytope, order: usize) -> CharacterSeries {
    CharacterSeries {
        coefficients: (0..=order as u64)
            .map(|m| {
                if m == 0 {
                    ClassFunction::zero(ip.group())
                } else {
                    ehrhart_character(ip, m, Region::Interior)
                }
            })
            .collect(),
    }
}

/// Coefficients of `(1 - t)·det(I - A t)`.
pub fn denominator(a: &Matrix) -> Vec<i64> {
    let d = a.len();
    let det_poly: Vec<i64> = (0..=d)
        .map(|k| {
            let e = linalg::principal_minor_sum(a, k);
            if k % 2 == 0 {
                e
            } else {
                -e
            }
        })
        .collect();
    let mut out = vec![0; d + 2];
    for (k, c) in det_poly.iter().enumerate() {
        out[k] += c;
        out[k + 1] -= c;
    }
    out
}

fn mul_truncated(a: &[i64], b: &[i64], order: usize) -> Vec<i64> {
    let mut out = vec![0; order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EffectivenessCheck {
    pub degree: usize,
    /// `"trivial"` or `"det"`.
    pub character: &'static str,
    pub multiplicity: String,
    pub integral_nonnegative: bool,
    /// `|φ_i(g)| ≤ φ_i(1)` for every `g`.
    pub bounded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PhiDiagnostics {
    pub is_polynomial: bool,
    pub phi0_trivial: bool,
    /// `φ_d = χ*_P`; only checked when `φ` is a polynomial.
    pub top_is_interior: Option<bool>,
    /// The interior-series identity up to the truncation order; only
    /// checked when `φ` is a polynomial.
    pub reciprocity: Option<bool>,
    pub is_palindromic: bool,
    pub effectiveness: Vec<EffectivenessCheck>,
}

impl PhiDiagnostics {
    pub fn is_effective(&self) -> bool {
        self.effectiveness
            .iter()
            .all(|e| e.integral_nonnegative && e.bounded)
    }
}

/// The numerator `φ[t]` of the equivariant Ehrhart series over
/// `(1 - t)·det(I - ρ t)`.
#[derive(Debug, Clone)]
pub struct PhiPolynomial {
    pub group: Arc<FiniteGroup>,
    /// `φ_0, ..., φ_d`.
    pub coefficients: Vec<ClassFunction>,
    /// `φ_{d+1}, ..., φ_{d+buffer}`, all zero when `φ` is a polynomial.
    pub tail: Vec<ClassFunction>,
    pub diagnostics: PhiDiagnostics,
}

impl PhiPolynomial {
    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `φ_i`, zero beyond the degree bound.
    pub fn coefficient(&self, i: usize) -> ClassFunction {
        self.coefficients
            .get(i)
            .cloned()
            .unwrap_or_else(|| ClassFunction::zero(&self.group))
    }

    pub fn require_polynomial(&self) -> Result<&Self> {
        if self.diagnostics.is_polynomial {
            Ok(self)
        } else {
            Err(Error::PhiNotPolynomial)
        }
    }

    /// `h*`-vector: the degrees of the coefficients.
    pub fn dimensions(&self) -> Vec<i64> {
        self.coefficients.iter().map(ClassFunction::degree).collect()
    }
}

pub fn compute_phi(ip: &InvariantPolytope, buffer: usize) -> PhiPolynomial {
    let g = ip.group();
    let d = ip.dim();
    let order = d + buffer;
    let series = ehrhart_series(ip, order);
    let interior = interior_series(ip, order);

    let nc = g.num_classes();
    let mut phi_by_class = Vec::with_capacity(nc);
    let mut reciprocity_ok = true;
    for c in 0..nc {
        let den = denominator(&g.element(g.class_rep(c)).linear);
        let phi = mul_truncated(&series.by_class(c), &den, order);
        // Σ_{m≥1} χ*_{mP} t^m · den = t^{d+1} φ[1/t]
        let lhs = mul_truncated(&interior.by_class(c), &den, order);
        let rhs: Vec<i64> = (0..=order)
            .map(|k| if k <= d + 1 && k >= 1 { phi[d + 1 - k] } else { 0 })
            .collect();
        reciprocity_ok &= lhs == rhs;
        phi_by_class.push(phi);
    }
    let coeff = |i: usize| ClassFunction::new(g, phi_by_class.iter().map(|p| p[i]).collect());
    let coefficients: Vec<ClassFunction> = (0..=d).map(coeff).collect();
    let tail: Vec<ClassFunction> = (d + 1..=order).map(coeff).collect();
    let is_polynomial = tail.iter().all(ClassFunction::is_zero);

    let trivial = g.trivial_character();
    let det = g.det_character();
    let mut effectiveness = Vec::new();
    for (i, phi_i) in coefficients.iter().enumerate() {
        let bounded = phi_i.values().iter().all(|v| v.abs() <= phi_i.degree());
        for (name, lambda) in [("trivial", &trivial), ("det", &det)] {
            let r: Ratio<i64> = phi_i.inner(lambda);
            effectiveness.push(EffectivenessCheck {
                degree: i,
                character: name,
                multiplicity: r.to_string(),
                integral_nonnegative: r.is_integer() && r >= Ratio::from_integer(0),
                bounded,
            });
        }
    }

    let diagnostics = PhiDiagnostics {
        is_polynomial,
        phi0_trivial: coefficients[0] == trivial,
        top_is_interior: is_polynomial.then(|| coefficients[d] == interior.coefficients[1]),
        reciprocity: is_polynomial.then_some(reciprocity_ok),
        is_palindromic: (0..=d).all(|i| coefficients[i] == coefficients[d - i]),
        effectiveness,
    };
    PhiPolynomial {
        group: g.clone(),
        coefficients,
        tail,
        diagnostics,
    }
}

/// Lattice points `(y, h)` of `M ⊕ Z` of the form `Σ a_i (v_i, 1)` with all
/// `0 ≤ a_i < 1` (or `0 < a_i < 1` when `open`) and `h = k`.
pub fn box_points(ip: &InvariantPolytope, k: usize, open: bool) -> Result<Vec<Vec<i64>>> {
    let p = ip.polytope();
    if !p.is_simplex() {
        return Err(Error::NotSimplex);
    }
    let d = p.dim();
    if k > d + 1 {
        return Ok(Vec::new());
    }
    if d == 0 {
        // the single lifted vertex is (1); only height 0 has a box point
        return Ok(if k == 0 && !open { vec![vec![0]] } else { Vec::new() });
    }
    let lifted: Matrix = (0..=d).map(|i| p.lifted_vertex(i)).collect();
    let cols = linalg::transpose(&lifted);
    let mut det = linalg::det(&cols);
    let mut adj = linalg::adjugate(&cols);
    if det < 0 {
        det = -det;
        adj = adj.iter().map(|r| linalg::scale(r, -1)).collect();
    }
    let mut out = Vec::new();
    p.for_each_point(k as u64, |y, _| {
        let mut x = y.to_vec();
        x.push(k as i64);
        let n = linalg::mat_vec(&adj, &x);
        let inside = n
            .iter()
            .all(|&ni| if open { ni > 0 && ni < det } else { ni >= 0 && ni < det });
        if inside {
            out.push(x);
        }
    });
    Ok(out)
}

/// Permutation character of the group on the box points at height `k`.
pub fn box_character(ip: &InvariantPolytope, k: usize, open: bool) -> Result<ClassFunction> {
    let pts = box_points(ip, k, open)?;
    Ok(ClassFunction::permutation(ip.group(), &pts, |g, x| {
        let (y, h) = x.split_at(x.len() - 1);
        g.fixes_at(y, h[0])
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::group::tests::{poly, sym3_triangle};

    fn trivial(vs: &[&[i64]]) -> InvariantPolytope {
        let p = poly(vs);
        let g = generate_group(&[], &p).unwrap();
        InvariantPolytope::new(Arc::new(p), g).unwrap()
    }

    #[test]
    fn triangle_vertex_character() {
        let (p, g) = sym3_triangle();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        assert_eq!(ehrhart_character(&ip, 1, Region::All).values(), &[3, 1, 0]);
        assert_eq!(ehrhart_character(&ip, 0, Region::All).values(), &[1, 1, 1]);
    }

    #[test]
    fn square_swap_fixes_diagonal() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let g = generate_group(&[GroupElement::linear(vec![vec![0, 1], vec![1, 0]])], &p).unwrap();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        for m in 0..6 {
            let chi = ehrhart_character(&ip, m, Region::All);
            assert_eq!(chi.values(), &[((m + 1) * (m + 1)) as i64, m as i64 + 1]);
        }
    }

    #[test]
    fn segment_phi() {
        let ip = trivial(&[&[0], &[2]]);
        let phi = compute_phi(&ip, DEFAULT_BUFFER);
        assert!(phi.diagnostics.is_polynomial);
        assert_eq!(phi.dimensions(), vec![1, 1]);
        assert_eq!(phi.diagnostics.reciprocity, Some(true));
        assert_eq!(box_points(&ip, 0, false).unwrap().len(), 1);
        assert_eq!(box_points(&ip, 1, false).unwrap().len(), 1);
    }

    #[test]
    fn square_phi_palindromic() {
        let ip = trivial(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]]);
        let phi = compute_phi(&ip, DEFAULT_BUFFER);
        assert_eq!(phi.dimensions(), vec![1, 6, 1]);
        assert!(phi.diagnostics.is_palindromic);
        assert_eq!(phi.diagnostics.top_is_interior, Some(true));
        assert!(phi.diagnostics.is_effective());
        assert!(matches!(box_points(&ip, 0, false), Err(Error::NotSimplex)));
    }

    #[test]
    fn simplex_phi_is_one() {
        let (p, g) = sym3_triangle();
        let ip = InvariantPolytope::new(Arc::new(p), g.clone()).unwrap();
        let phi = compute_phi(&ip, DEFAULT_BUFFER);
        assert!(phi.diagnostics.is_polynomial);
        assert_eq!(phi.coefficients[0], g.trivial_character());
        assert!(phi.coefficients[1..].iter().all(ClassFunction::is_zero));
        assert_eq!(box_points(&ip, 0, false).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn denominator_of_rotation() {
        // (1 - t)(1 + t^2)
        assert_eq!(denominator(&vec![vec![0, -1], vec![1, 0]]), vec![1, -1, 1, -1]);
    }

    #[test]
    fn open_box_involution_sizes() {
        let ip = trivial(&[&[0, 0], &[4, 0], &[0, 4]]);
        let sizes: Vec<usize> = (0..=3).map(|k| box_points(&ip, k, true).unwrap().len()).collect();
        assert_eq!(sizes, vec![0, 3, 3, 0]);
    }

    #[test]
    fn point_phi() {
        let ip = trivial(&[&[]]);
        let phi = compute_phi(&ip, DEFAULT_BUFFER);
        assert_eq!(phi.dimensions(), vec![1]);
        assert!(phi.diagnostics.is_polynomial);
    }
}

//! Equivariant Hodge-Deligne polynomials of tori, toric varieties and
//! non-degenerate hypersurfaces, Hodge diamonds of the compactified
//! hypersurface and of its quotients.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::ehrhart::{box_character, compute_phi, ehrhart_character, PhiPolynomial, DEFAULT_BUFFER};
use crate::error::{Error, Result};
use crate::group::{ClassFunction, FiniteGroup, GroupElement, Subgroup};
use crate::invariant::InvariantPolytope;
use crate::polytope::{LatticePoint, Region};

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ e^{p,q} u^p v^q` with class-function coefficients.
#[derive(Debug, Clone)]
pub struct EquivariantHDPolynomial {
    group: Arc<FiniteGroup>,
    terms: BTreeMap<(usize, usize), ClassFunction>,
}

impl PartialEq for EquivariantHDPolynomial {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.terms == other.terms
    }
}

impl EquivariantHDPolynomial {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        EquivariantHDPolynomial {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Nonzero terms keyed by `(p, q)`.
    pub fn terms(&self) -> &BTreeMap<(usize, usize), ClassFunction> {
        &self.terms
    }

    pub fn get(&self, p: usize, q: usize) -> ClassFunction {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| ClassFunction::zero(&self.group))
    }

    pub fn set(&mut self, p: usize, q: usize, value: ClassFunction) {
        if value.is_zero() {
            self.terms.remove(&(p, q));
        } else {
            self.terms.insert((p, q), value);
        }
    }

    pub fn add_term(&mut self, p: usize, q: usize, value: &ClassFunction) {
        let sum = &self.get(p, q) + value;
        self.set(p, q, sum);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), v) in &other.terms {
            out.add_term(p, q, v);
        }
        out
    }

    /// Product by convolution of the `(p, q)` gradings.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.group);
        for (&(p1, q1), a) in &self.terms {
            for (&(p2, q2), b) in &other.terms {
                out.add_term(p1 + p2, q1 + q2, &(a * b));
            }
        }
        out
    }

    /// Termwise induction from a subgroup to its parent.
    pub fn induce(&self, sub: &Subgroup) -> Result<Self> {
        let mut out = Self::zero(sub.parent());
        for (&(p, q), v) in &self.terms {
            out.set(p, q, sub.induce(v)?);
        }
        Ok(out)
    }

    pub fn transfer(&self, to: &Arc<FiniteGroup>) -> Self {
        EquivariantHDPolynomial {
            group: to.clone(),
            terms: self.terms.iter().map(|(&k, v)| (k, v.transfer(to))).collect(),
        }
    }

    pub fn row_sum(&self, p: usize) -> ClassFunction {
        self.terms
            .iter()
            .filter(|((pp, _), _)| *pp == p)
            .fold(ClassFunction::zero(&self.group), |acc, (_, v)| &acc + v)
    }

    /// `e^{p,q} = e^{q,p}` for all `p, q`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(p, q), v)| self.get(q, p) == *v)
    }

    /// `E(u, v) = (uv)^n E(1/u, 1/v)`.
    pub fn satisfies_poincare(&self, n: usize) -> bool {
        self.terms
            .iter()
            .all(|(&(p, q), v)| p <= n && q <= n && self.get(n - p, n - q) == *v)
    }

    /// The polynomial of degrees `e^{p,q}(1)`.
    pub fn dimensions(&self) -> BTreeMap<(usize, usize), i64> {
        self.terms.iter().map(|(&k, v)| (k, v.degree())).collect()
    }
}

/// `E_G(T) = Σ_k (-1)^{r+k} ∧^{r-k}ρ (uv)^k` for the torus with character
/// lattice acted on by `group`.
pub fn torus_e(group: &Arc<FiniteGroup>) -> EquivariantHDPolynomial {
    let r = group.dim();
    let mut out = EquivariantHDPolynomial::zero(group);
    for k in 0..=r {
        out.set(k, k, group.exterior_character(r - k).scale(sign(r + k)));
    }
    out
}

/// A compact hypersurface's Hodge characters `H^{p,q}`, `0 ≤ p, q ≤ n`.
#[derive(Debug, Clone)]
pub struct HodgeDiamond {
    pub group: Arc<FiniteGroup>,
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), ClassFunction>,
}

impl HodgeDiamond {
    pub fn get(&self, p: usize, q: usize) -> &ClassFunction {
        &self.entries[&(p, q)]
    }

    pub fn dimensions(&self) -> BTreeMap<(usize, usize), i64> {
        self.entries.iter().map(|(&k, v)| (k, v.degree())).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(p, q), v)| self.get(q, p) == v)
    }

    pub fn is_poincare_dual(&self) -> bool {
        let n = self.dim;
        self.entries.iter().all(|(&(p, q), v)| self.get(n - p, n - q) == v)
    }

    /// `Σ (-1)^{p+q} h^{p,q} u^p v^q`.
    pub fn e_polynomial(&self) -> EquivariantHDPolynomial {
        let mut out = EquivariantHDPolynomial::zero(&self.group);
        for (&(p, q), v) in &self.entries {
            out.set(p, q, v.scale(sign(p + q)));
        }
        out
    }
}

/// Dimensions of the invariant parts `H^{p,q}(X)^H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDiamond {
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), i64>,
}

impl QuotientDiamond {
    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.entries[&(p, q)]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .all(|(&(p, q), &v)| self.get(q, p) == v && self.get(n - p, n - q) == v)
    }
}

/// Each entry is the multiplicity of the trivial character of `sub` in the
/// restricted entry.
pub fn quotient_diamond(diamond: &HodgeDiamond, sub: &Subgroup) -> Result<QuotientDiamond> {
    let trivial = sub.group().trivial_character();
    let mut entries = BTreeMap::new();
    for (&k, v) in &diamond.entries {
        entries.insert(k, sub.restrict(v).multiplicity(&trivial)?);
    }
    Ok(QuotientDiamond {
        dim: diamond.dim,
        entries,
    })
}

type PhiKey = (Vec<LatticePoint>, Vec<GroupElement>, Vec<Vec<usize>>);

/// Memoizes `φ` of face polytopes across the face-orbit sums. Not shared
/// across threads.
pub struct HodgeContext {
    buffer: usize,
    phi_cache: RefCell<HashMap<PhiKey, Arc<PhiPolynomial>>>,
}

impl Default for HodgeContext {
    fn default() -> Self {
        Self::new(DEFAULT_BUFFER)
    }
}

impl HodgeContext {
    pub fn new(buffer: usize) -> Self {
        HodgeContext {
            buffer,
            phi_cache: RefCell::new(HashMap::new()),
        }
    }

    /// `φ` of `ip`, required to be a polynomial.
    pub fn phi(&self, ip: &InvariantPolytope) -> Result<PhiPolynomial> {
        let g = ip.group();
        let key: PhiKey = (
            ip.polytope().vertices().to_vec(),
            g.elements().to_vec(),
            (0..g.order()).map(|i| g.perm(i).to_vec()).collect(),
        );
        let cached = self.phi_cache.borrow().get(&key).cloned();
        let phi = match cached {
            Some(phi) => phi,
            None => {
                let phi = Arc::new(compute_phi(ip, self.buffer));
                self.phi_cache.borrow_mut().insert(key, phi.clone());
                phi
            }
        };
        phi.require_polynomial()?;
        if Arc::ptr_eq(&phi.group, g) {
            return Ok((*phi).clone());
        }
        Ok(PhiPolynomial {
            group: g.clone(),
            coefficients: phi.coefficients.iter().map(|c| c.transfer(g)).collect(),
            tail: phi.tail.iter().map(|c| c.transfer(g)).collect(),
            diagnostics: phi.diagnostics.clone(),
        })
    }

    /// `Σ_{[Q] ∈ P/G} (-1)^{dim Q} Ind_{G_Q}^G [det ρ_Q · φ_{Q,k}]`.
    pub fn face_sum(&self, ip: &InvariantPolytope, k: usize) -> Result<ClassFunction> {
        let mut total = ClassFunction::zero(ip.group());
        for rep in ip.face_orbit_reps() {
            let dim = ip.polytope().face(rep).dim as usize;
            if dim < k {
                continue;
            }
            let fa = ip.face_action(rep)?;
            let phi = self.phi(&fa.local)?;
            let term = &fa.det_restricted() * &phi.coefficient(k);
            total = &total + &fa.isotropy.induce(&term)?.scale(sign(dim));
        }
        Ok(total)
    }

    /// `E_G(Y)` of the toric variety of the normal fan, by induction from the
    /// torus orbits.
    pub fn toric_e(&self, ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
        let mut out = EquivariantHDPolynomial::zero(ip.group());
        for rep in ip.face_orbit_reps() {
            let fa = ip.face_action(rep)?;
            out = out.add(&torus_e(fa.isotropy.group()).induce(&fa.isotropy)?);
        }
        Ok(out)
    }

    /// `Σ_q e^{p,q}(X°) = (-1)^{n-p} ∧^{n-p}ρ + (-1)^n det ρ · φ_{p+1}` for
    /// `p = 0..=n`, `n = d - 1`.
    pub fn hypersurface_rows(&self, ip: &InvariantPolytope) -> Result<Vec<ClassFunction>> {
        let d = ip.dim();
        if d == 0 {
            return Err(Error::InvalidInput("hypersurfaces need dimension at least 1".into()));
        }
        let n = d - 1;
        let g = ip.group();
        let phi = self.phi(ip)?;
        let det = g.det_character();
        Ok((0..=n)
            .map(|p| {
                &g.exterior_character(n - p).scale(sign(n - p))
                    + &(&det * &phi.coefficient(p + 1)).scale(sign(n))
            })
            .collect())
    }

    /// Off-diagonal `e^{p,q}(X°)`, `p > q`, `p + q ≤ n`, by nested face-orbit
    /// induction.
    fn off_diagonal(&self, ip: &InvariantPolytope, p: usize, q: usize) -> Result<ClassFunction> {
        let d = ip.dim();
        let g = ip.group();
        let mut sum = ClassFunction::zero(g);
        for rep in ip.face_orbit_reps() {
            if ip.polytope().face(rep).dim as usize != p + q + 1 {
                continue;
            }
            let fa = ip.face_action(rep)?;
            let inner = self.face_sum(&fa.local, p + 1)?;
            sum = &sum + &fa.isotropy.induce(&(&fa.det_restricted() * &inner))?;
        }
        Ok((&g.det_character() * &sum).scale(sign(d + p + q)))
    }

    /// The same off-diagonal entry evaluated one group element at a time over
    /// fixed faces, without orbit bookkeeping.
    pub fn off_diagonal_pointwise(&self, ip: &InvariantPolytope, p: usize, q: usize) -> Result<ClassFunction> {
        let d = ip.dim();
        let g = ip.group();
        let poly = ip.polytope();
        let mut values = Vec::with_capacity(g.num_classes());
        for c in 0..g.num_classes() {
            let gi = g.class_rep(c);
            let fixed = ip.fixed_faces(gi);
            let mut total = 0;
            for &qf in &fixed {
                let face = poly.face(qf);
                if face.dim as usize != p + q + 1 {
                    continue;
                }
                let mut inner = 0;
                for &qq in &fixed {
                    let sub = poly.face(qq);
                    if sub.vertex_mask & face.vertex_mask != sub.vertex_mask {
                        continue;
                    }
                    let (det_q, phi_q) = self.face_values(ip, qq, gi, p + 1)?;
                    inner += sign(sub.dim as usize) * det_q * phi_q;
                }
                total += self.face_values(ip, qf, gi, 0)?.0 * inner;
            }
            values.push(sign(d + p + q) * g.element(gi).det() * total);
        }
        Ok(ClassFunction::new(g, values))
    }

    /// `(det ρ_Q(g), φ_{Q,k}(g))` for a face `Q` fixed by element `g`.
    fn face_values(&self, ip: &InvariantPolytope, face: usize, g: usize, k: usize) -> Result<(i64, i64)> {
        let fa = ip.face_action(face)?;
        let pos = fa
            .isotropy
            .position_of(g)
            .ok_or_else(|| Error::InvariantViolation("element does not fix the face".into()))?;
        let det = fa.restricted(pos).det();
        let phi = if k > fa.dim() {
            0
        } else {
            self.phi(&fa.local)?.coefficient(k).at_element(pos)
        };
        Ok((det, phi))
    }

    /// `E_G(X°)` of a non-degenerate invariant hypersurface with Newton
    /// polytope `P`. Off-diagonal entries need `P` simple.
    pub fn hypersurface_e(&self, ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
        let rows = self.hypersurface_rows(ip)?;
        let d = ip.dim();
        let n = d - 1;
        let g = ip.group();
        let simple = ip.polytope().is_simple();
        if d >= 2 && !simple {
            return Err(Error::NotSimple);
        }
        let mut e = EquivariantHDPolynomial::zero(g);
        // above the anti-diagonal only the Gysin diagonal survives
        for p in 0..=n {
            if 2 * p > n {
                e.set(p, p, g.exterior_character(n - p).scale(sign(n - p)));
            }
        }
        for p in 0..=n {
            for q in 0..p {
                if p + q > n {
                    continue;
                }
                let value = self.off_diagonal(ip, p, q)?;
                if value != self.off_diagonal_pointwise(ip, p, q)? {
                    return Err(Error::InvariantViolation(format!(
                        "e^({p},{q}) differs between the orbit sum and the fixed-face sum"
                    )));
                }
                e.set(p, q, value.clone());
                e.set(q, p, value);
            }
        }
        for p in 0..=n {
            if 2 * p <= n {
                let off = &e.row_sum(p) - &e.get(p, p);
                e.set(p, p, &rows[p] - &off);
            } else if e.row_sum(p) != rows[p] {
                return Err(Error::InvariantViolation(format!("row {p} of E(X°) does not match its total")));
            }
        }

        let det = g.det_character();
        let strata: Vec<ClassFunction> = (0..=d).map(|k| ehrhart_character(ip, 1, Region::Stratum(k))).collect();
        for p in 1..=n {
            let expected = (&det * &strata[p + 1]).scale(sign(n));
            if e.get(p, 0) != expected {
                return Err(Error::InvariantViolation(format!(
                    "e^({p},0) differs from the stratum character"
                )));
            }
        }
        let one = g.trivial_character();
        let expected = (&det * &(&(&strata[1] + &strata[0]) - &one)).scale(sign(n));
        if e.get(0, 0) != expected {
            return Err(Error::InvariantViolation("e^(0,0) differs from the 1-skeleton character".into()));
        }
        Ok(e)
    }

    /// `H^{p,n-p}_prim(X)` for `p = 0..=n`.
    pub fn primitive_hodge(&self, ip: &InvariantPolytope) -> Result<Vec<ClassFunction>> {
        let d = ip.dim();
        if d == 0 {
            return Err(Error::InvalidInput("hypersurfaces need dimension at least 1".into()));
        }
        if !ip.polytope().is_simple() {
            return Err(Error::NotSimple);
        }
        self.phi(ip)?;
        let n = d - 1;
        let mut prim = vec![ClassFunction::zero(ip.group()); n + 1];
        for p in 0..=n {
            if 2 * p >= n {
                prim[p] = self.face_sum(ip, p + 1)?.scale(sign(d));
            }
        }
        for p in 0..=n {
            if 2 * p < n {
                prim[p] = prim[n - p].clone();
            }
        }
        if ip.polytope().is_simplex() {
            let det = ip.group().det_character();
            for (p, h) in prim.iter().enumerate() {
                if *h != &det * &box_character(ip, p + 1, true)? {
                    return Err(Error::InvariantViolation(format!(
                        "H^({p},{}) prim differs from the open box character",
                        n - p
                    )));
                }
            }
        }
        Ok(prim)
    }

    /// The Hodge characters of the compactified hypersurface `X` in the toric
    /// variety of `P`.
    pub fn hodge_diamond(&self, ip: &InvariantPolytope) -> Result<HodgeDiamond> {
        let prim = self.primitive_hodge(ip)?;
        let d = ip.dim();
        let n = d - 1;
        let g = ip.group();
        let y = self.toric_e(ip)?;
        let mut entries = BTreeMap::new();
        for p in 0..=n {
            for q in 0..=n {
                let mut v = ClassFunction::zero(g);
                if p + q == n {
                    v = &v + &prim[p];
                }
                if p == q {
                    let k = if 2 * p > n { p + 1 } else { p };
                    v = &v + &y.get(k, k);
                }
                entries.insert((p, q), v);
            }
        }
        let diamond = HodgeDiamond {
            group: g.clone(),
            dim: n,
            entries,
        };

        if !diamond.is_symmetric() {
            return Err(Error::InvariantViolation("diamond is not symmetric".into()));
        }
        if !diamond.is_poincare_dual() {
            return Err(Error::InvariantViolation("diamond fails Poincaré duality".into()));
        }
        if n >= 1 {
            let corner = &g.det_character() * &ehrhart_character(ip, 1, Region::Interior);
            if *diamond.get(n, 0) != corner {
                return Err(Error::InvariantViolation(format!("H^({n},0) differs from det·χ*_P")));
            }
        }
        let stratified = self.stratified_e(ip)?;
        let from_diamond = diamond.e_polynomial();
        for p in 0..=n {
            for q in 0..=n {
                if stratified.get(p, q) != from_diamond.get(p, q) {
                    return Err(Error::InvariantViolation(format!(
                        "E(X) coefficient ({p},{q}) differs from the stratified sum"
                    )));
                }
            }
        }
        if stratified.terms().keys().any(|&(p, q)| p > n || q > n) {
            return Err(Error::InvariantViolation("stratified E(X) exceeds the dimension".into()));
        }
        Ok(diamond)
    }

    /// `E_G(X) = Σ_{[Q]} Ind_{G_Q}^G E_{G_Q}(X ∩ T_Q)`; vertices contribute
    /// nothing.
    pub fn stratified_e(&self, ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
        let mut out = EquivariantHDPolynomial::zero(ip.group());
        for rep in ip.face_orbit_reps() {
            if ip.polytope().face(rep).dim < 1 {
                continue;
            }
            let fa = ip.face_action(rep)?;
            out = out.add(&self.hypersurface_e(&fa.local)?.induce(&fa.isotropy)?);
        }
        Ok(out)
    }

    /// Möbius function `μ(Q, P)` on the poset of nonempty faces fixed by
    /// element `g`, checked against `(-1)^{d - dim Q} det ρ(g) det ρ_Q(g)`.
    pub fn mobius_fixed_faces(&self, ip: &InvariantPolytope, g: usize) -> Result<BTreeMap<usize, i64>> {
        if !ip.polytope().is_simple() {
            return Err(Error::NotSimple);
        }
        let d = ip.dim();
        let poly = ip.polytope();
        let mut fixed = ip.fixed_faces(g);
        fixed.sort_by_key(|&f| std::cmp::Reverse(poly.face(f).dim));
        let mut mu: BTreeMap<usize, i64> = BTreeMap::new();
        for &f in &fixed {
            let face = poly.face(f);
            let value = if face.dim as usize == d {
                1
            } else {
                -mu
                    .iter()
                    .filter(|(&z, _)| {
                        let zm = poly.face(z).vertex_mask;
                        z != f && zm & face.vertex_mask == face.vertex_mask
                    })
                    .map(|(_, &m)| m)
                    .sum::<i64>()
            };
            mu.insert(f, value);
        }
        let det_g = ip.group().element(g).det();
        for (&f, &m) in &mu {
            let (det_q, _) = self.face_values(ip, f, g, 0)?;
            let closed = sign(d - poly.face(f).dim as usize) * det_g * det_q;
            if m != closed {
                return Err(Error::InvariantViolation(format!(
                    "Möbius value {m} at face {f} differs from the closed form {closed}"
                )));
            }
        }
        Ok(mu)
    }
}

pub fn toric_e(ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
    HodgeContext::default().toric_e(ip)
}

pub fn hypersurface_e(ip: &InvariantPolytope) -> Result<EquivariantHDPolynomial> {
    HodgeContext::default().hypersurface_e(ip)
}

pub fn primitive_hodge(ip: &InvariantPolytope) -> Result<Vec<ClassFunction>> {
    HodgeContext::default().primitive_hodge(ip)
}

pub fn hodge_diamond(ip: &InvariantPolytope) -> Result<HodgeDiamond> {
    HodgeContext::default().hodge_diamond(ip)
}

pub fn mobius_fixed_faces(ip: &InvariantPolytope, g: usize) -> Result<BTreeMap<usize, i64>> {
    HodgeContext::default().mobius_fixed_faces(ip, g)
}

//! Finite groups of affine lattice symmetries, conjugacy classes and
//! exact class-function arithmetic.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::polytope::{LatticePoint, LatticePolytope};

pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// The affine map `x ↦ A x + w`. At dilate `m` it acts by `x ↦ A x + m w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    #[serde(rename = "matrix")]
    pub linear: Matrix,
    pub translation: Vec<i64>,
}

impl GroupElement {
    pub fn identity(d: usize) -> Self {
        GroupElement {
            linear: linalg::identity(d),
            translation: vec![0; d],
        }
    }

    pub fn linear(a: Matrix) -> Self {
        let d = a.len();
        GroupElement {
            linear: a,
            translation: vec![0; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    /// `(A1,w1)·(A2,w2) = (A1 A2, w1 + A1 w2)`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            linear: linalg::mat_mul(&self.linear, &other.linear),
            translation: linalg::add(
                &self.translation,
                &linalg::mat_vec(&self.linear, &other.translation),
            ),
        }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.apply_at(x, 1)
    }

    pub fn apply_at(&self, x: &[i64], m: i64) -> Vec<i64> {
        let mut y = linalg::mat_vec(&self.linear, x);
        for (yi, wi) in y.iter_mut().zip(&self.translation) {
            *yi += m * wi;
        }
        y
    }

    /// Whether `x` is fixed at dilate `m`, without allocating.
    pub fn fixes_at(&self, x: &[i64], m: i64) -> bool {
        self.linear
            .iter()
            .zip(&self.translation)
            .zip(x)
            .all(|((row, w), xi)| linalg::dot(row, x) + m * w == *xi)
    }

    pub fn det(&self) -> i64 {
        linalg::det(&self.linear)
    }
}

/// A finite group stored by full enumeration.
///
/// `elements` is the action on the current lattice, which need not be
/// faithful (for example an isotropy group restricted to a face). Group
/// structure is carried by `perms`, faithful permutations of the vertices of
/// the polytope the group was generated on.
#[derive(Clone)]
pub struct FiniteGroup {
    dim: usize,
    elements: Vec<GroupElement>,
    perms: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("dim", &self.dim)
            .field("order", &self.order())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl FiniteGroup {
    pub fn trivial(d: usize) -> Arc<Self> {
        Arc::new(Self::from_parts(d, vec![GroupElement::identity(d)], vec![Vec::new()], None))
    }

    /// Builds the group from a closed list of elements (identity first) and
    /// their faithful permutation labels.
    fn from_parts(
        dim: usize,
        elements: Vec<GroupElement>,
        perms: Vec<Vec<usize>>,
        generators: Option<&[usize]>,
    ) -> Self {
        let lookup: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut g = FiniteGroup {
            dim,
            elements,
            perms,
            lookup,
            inverse: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.inverse = (0..g.order())
            .map(|i| g.lookup[&invert_perm(&g.perms[i])])
            .collect();
        g.compute_classes(generators);
        g
    }

    fn compute_classes(&mut self, generators: Option<&[usize]>) {
        let n = self.order();
        let all: Vec<usize> = (0..n).collect();
        let conj_by = generators.unwrap_or(&all);
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(g) = queue.pop_front() {
                for &s in conj_by {
                    let c = self.mul(self.mul(s, g), self.inverse[s]);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                        queue.push_back(c);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    /// The same abstract group acting on a lattice of rank `dim` by
    /// `elements`, listed in this group's order.
    pub fn with_action(&self, elements: Vec<GroupElement>, dim: usize) -> Arc<FiniteGroup> {
        assert_eq!(elements.len(), self.order(), "one element per group element");
        let mut g = self.clone();
        g.elements = elements;
        g.dim = dim;
        Arc::new(g)
    }

    /// Whether both groups carry the same labelled elements, hence the same
    /// conjugacy classes in the same order.
    pub fn same_structure(&self, other: &FiniteGroup) -> bool {
        self.perms == other.perms
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// Faithful permutation label of element `i`.
    pub fn perm(&self, i: usize) -> &[usize] {
        &self.perms[i]
    }

    pub fn index_of_perm(&self, p: &[usize]) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let pa = &self.perms[a];
        let composed: Vec<usize> = self.perms[b].iter().map(|&j| pa[j]).collect();
        self.lookup[&composed]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugacy classes ordered by representative (the minimal index).
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Cycle type of each class representative on the labelling set, in
    /// non-increasing order.
    pub fn cycle_types(&self) -> Vec<Vec<usize>> {
        (0..self.num_classes())
            .map(|c| cycle_type(&self.perms[self.class_rep(c)]))
            .collect()
    }

    /// The subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn exterior_character(self: &Arc<Self>, k: usize) -> ClassFunction {
        ClassFunction::from_fn(self, |g| linalg::principal_minor_sum(&g.linear, k))
    }

    pub fn det_character(self: &Arc<Self>) -> ClassFunction {
        ClassFunction::from_fn(self, GroupElement::det)
    }

    pub fn trivial_character(self: &Arc<Self>) -> ClassFunction {
        ClassFunction::constant(self, 1)
    }
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Permutation of the vertex list induced by `g`, if `g` maps the vertex set
/// onto itself.
pub fn vertex_permutation(g: &GroupElement, p: &LatticePolytope) -> Option<Vec<usize>> {
    let index: HashMap<&LatticePoint, usize> =
        p.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut perm = Vec::with_capacity(p.vertices().len());
    for v in p.vertices() {
        let image = LatticePoint(g.apply(v));
        perm.push(*index.get(&image)?);
    }
    Some(perm)
}

/// Closes `generators` under composition. Each generator must be a unimodular
/// affine map permuting the vertices of `p`.
pub fn generate_group(generators: &[GroupElement], p: &LatticePolytope) -> Result<Arc<FiniteGroup>> {
    generate_group_with_cap(generators, p, DEFAULT_GROUP_CAP)
}

pub fn generate_group_with_cap(
    generators: &[GroupElement],
    p: &LatticePolytope,
    cap: usize,
) -> Result<Arc<FiniteGroup>> {
    let d = p.dim();
    let mut gen_perms = Vec::with_capacity(generators.len());
    for (index, g) in generators.iter().enumerate() {
        let shape_ok = g.linear.len() == d
            && g.linear.iter().all(|r| r.len() == d)
            && g.translation.len() == d;
        if !shape_ok {
            return Err(Error::InvalidInput(format!(
                "generator {index} does not have dimension {d}"
            )));
        }
        if g.det().abs() != 1 {
            return Err(Error::NotSymmetry { index });
        }
        let perm = vertex_permutation(g, p).ok_or(Error::NotSymmetry { index })?;
        gen_perms.push(perm);
    }

    let n = p.vertices().len();
    let id_perm: Vec<usize> = (0..n).collect();
    let mut elements = vec![GroupElement::identity(d)];
    let mut perms = vec![id_perm.clone()];
    let mut lookup = HashMap::from([(id_perm, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (g, gp) in generators.iter().zip(&gen_perms) {
            let composed: Vec<usize> = gp.iter().map(|&j| perms[x][j]).collect();
            if lookup.contains_key(&composed) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::GroupTooLarge { cap });
            }
            lookup.insert(composed.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(elements[x].compose(g));
            perms.push(composed);
        }
    }
    let gen_idx: Vec<usize> = gen_perms.iter().map(|p| lookup[p]).collect();
    Ok(Arc::new(FiniteGroup::from_parts(d, elements, perms, Some(&gen_idx))))
}

/// A subgroup `H ≤ G`. `group` carries `H`'s own conjugacy classes and an
/// action that may differ from the parent's (e.g. restriction to a face).
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    group: Arc<FiniteGroup>,
    members: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl Subgroup {
    /// The subgroup on the given parent indices, with the parent's action.
    pub fn new(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Result<Self> {
        let elements = members.iter().map(|&i| parent.elements[i].clone()).collect();
        Self::with_action(parent, members, elements, parent.dim)
    }

    /// The subgroup on the given parent indices acting on a lattice of rank
    /// `dim` by `elements`.
    pub fn with_action(
        parent: &Arc<FiniteGroup>,
        mut members: Vec<usize>,
        elements: Vec<GroupElement>,
        dim: usize,
    ) -> Result<Self> {
        if members.first() != Some(&0) {
            return Err(Error::InvariantViolation(
                "subgroup must list the identity first".into(),
            ));
        }
        let position: HashMap<usize, usize> =
            members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        for &a in &members {
            for &b in &members {
                if !position.contains_key(&parent.mul(a, b)) {
                    return Err(Error::InvariantViolation(
                        "subgroup is not closed under composition".into(),
                    ));
                }
            }
        }
        if parent.order() % members.len() != 0 {
            return Err(Error::InvariantViolation(
                "subgroup order does not divide the group order".into(),
            ));
        }
        let perms = members.iter().map(|&i| parent.perms[i].clone()).collect();
        let group = Arc::new(FiniteGroup::from_parts(dim, elements, perms, None));
        members.shrink_to_fit();
        Ok(Subgroup {
            parent: parent.clone(),
            group,
            members,
            position,
        })
    }

    /// `G` as a subgroup of itself, sharing the parent's class structure.
    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        let members: Vec<usize> = (0..parent.order()).collect();
        Subgroup {
            parent: parent.clone(),
            group: parent.clone(),
            position: members.iter().map(|&i| (i, i)).collect(),
            members,
        }
    }

    /// `{g : λ(g) = 1}` for a linear character `λ`.
    pub fn kernel_of(lambda: &ClassFunction) -> Result<Self> {
        let g = lambda.group();
        let members = (0..g.order())
            .filter(|&i| lambda.at_element(i) == 1)
            .collect();
        Subgroup::new(g, members)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Parent index of each subgroup element.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn position_of(&self, parent_index: usize) -> Option<usize> {
        self.position.get(&parent_index).copied()
    }

    /// Restricts a class function of the parent to this subgroup.
    pub fn restrict(&self, chi: &ClassFunction) -> ClassFunction {
        assert!(Arc::ptr_eq(chi.group(), &self.parent), "class function of another group");
        let values = (0..self.group.num_classes())
            .map(|c| chi.at_element(self.members[self.group.class_rep(c)]))
            .collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// `(Ind χ)(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} χ(x⁻¹gx)`.
    pub fn induce(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        assert!(Arc::ptr_eq(chi.group(), &self.group), "class function of another group");
        let parent = &self.parent;
        let h = self.order() as i64;
        let mut values = Vec::with_capacity(parent.num_classes());
        for c in 0..parent.num_classes() {
            let g = parent.class_rep(c);
            let mut total = 0i64;
            for x in 0..parent.order() {
                let conj = parent.mul(parent.mul(parent.inverse(x), g), x);
                if let Some(k) = self.position_of(conj) {
                    total += chi.at_element(k);
                }
            }
            if total % h != 0 {
                return Err(Error::NotInteger {
                    numerator: total,
                    denominator: h,
                });
            }
            values.push(total / h);
        }
        Ok(ClassFunction {
            group: parent.clone(),
            values,
        })
    }
}

/// An integer-valued class function, one value per conjugacy class.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<i64>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

impl ClassFunction {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), group.num_classes(), "one value per class");
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(group, 0)
    }

    pub fn constant(group: &Arc<FiniteGroup>, c: i64) -> Self {
        ClassFunction {
            group: group.clone(),
            values: vec![c; group.num_classes()],
        }
    }

    /// Evaluates `f` at each class representative.
    pub fn from_fn(group: &Arc<FiniteGroup>, mut f: impl FnMut(&GroupElement) -> i64) -> Self {
        let values = (0..group.num_classes())
            .map(|c| f(group.element(group.class_rep(c))))
            .collect();
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    /// Permutation character: the value at `g` is the number of fixed points.
    pub fn permutation<T>(group: &Arc<FiniteGroup>, set: &[T], fixes: impl Fn(&GroupElement, &T) -> bool) -> Self {
        Self::from_fn(group, |g| set.iter().filter(|x| fixes(g, x)).count() as i64)
    }

    pub fn from_classes(group: &Arc<FiniteGroup>, f: impl FnMut(usize) -> i64) -> Self {
        ClassFunction::new(group, (0..group.num_classes()).map(f).collect())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The same values viewed on a group with identical structure.
    pub fn transfer(&self, to: &Arc<FiniteGroup>) -> ClassFunction {
        assert!(self.group.same_structure(to), "groups differ in structure");
        ClassFunction {
            group: to.clone(),
            values: self.values.clone(),
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at_class(&self, c: usize) -> i64 {
        self.values[c]
    }

    pub fn at_element(&self, i: usize) -> i64 {
        self.values[self.group.class_of(i)]
    }

    /// Value at the identity, the dimension of a genuine representation.
    pub fn degree(&self) -> i64 {
        self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert!(Arc::ptr_eq(&self.group, &other.group), "class functions of different groups");
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// `⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) ψ(g⁻¹)`.
    pub fn inner(&self, other: &Self) -> Ratio<i64> {
        assert!(Arc::ptr_eq(&self.group, &other.group), "class functions of different groups");
        let g = &self.group;
        let total: i64 = g
            .classes()
            .iter()
            .enumerate()
            .map(|(c, members)| {
                let inv = g.inverse(members[0]);
                members.len() as i64 * self.values[c] * other.at_element(inv)
            })
            .sum();
        Ratio::new(total, g.order() as i64)
    }

    /// Multiplicity of the linear character `lambda`, asserted integral and
    /// nonnegative.
    pub fn multiplicity(&self, lambda: &ClassFunction) -> Result<i64> {
        let r = self.inner(lambda);
        if !r.is_integer() {
            return Err(Error::NonIntegralMultiplicity {
                numerator: *r.numer(),
                denominator: *r.denom(),
            });
        }
        let m = r.to_integer();
        if m < 0 {
            return Err(Error::NegativeMultiplicity(m));
        }
        Ok(m)
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a * b)
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.scale(-1)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ClassFunction {
            type Output = ClassFunction;
            fn $m(self, rhs: ClassFunction) -> ClassFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ClassFunction> for ClassFunction {
            type Output = ClassFunction;
            fn $m(self, rhs: &ClassFunction) -> ClassFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<ClassFunction> for &ClassFunction {
            type Output = ClassFunction;
            fn $m(self, rhs: ClassFunction) -> ClassFunction {
                self.$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.scale(-1)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::polytope::build_polytope;

    pub(crate) fn poly(vs: &[&[i64]]) -> LatticePolytope {
        build_polytope(vs.iter().map(|v| LatticePoint(v.to_vec())).collect()).unwrap()
    }

    /// `Sym_3` on the standard triangle: transpositions (0 1) and (1 2) of
    /// the vertices `0, e1, e2`.
    pub(crate) fn sym3_triangle() -> (LatticePolytope, Arc<FiniteGroup>) {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let swap01 = GroupElement {
            linear: vec![vec![-1, -1], vec![0, 1]],
            translation: vec![1, 0],
        };
        let swap12 = GroupElement::linear(vec![vec![0, 1], vec![1, 0]]);
        let g = generate_group(&[swap01, swap12], &p).unwrap();
        (p, g)
    }

    #[test]
    fn sym3_structure() {
        let (_, g) = sym3_triangle();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        assert_eq!(g.class_sizes(), vec![1, 3, 2]);
        assert_eq!(g.cycle_types(), vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn inversion_on_segment() {
        let p = poly(&[&[-1], &[1]]);
        let g = generate_group(&[GroupElement::linear(vec![vec![-1]])], &p).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.num_classes(), 2);
    }

    #[test]
    fn non_symmetry_rejected() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 1]]);
        let swap = GroupElement::linear(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(generate_group(&[swap], &p).unwrap_err(), Error::NotSymmetry { index: 0 });
        let shear = GroupElement::linear(vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(generate_group(&[shear], &p).unwrap_err(), Error::NotSymmetry { index: 0 });
    }

    #[test]
    fn group_cap_enforced() {
        let (p, _) = sym3_triangle();
        let swap = GroupElement::linear(vec![vec![0, 1], vec![1, 0]]);
        let rot = GroupElement {
            linear: vec![vec![-1, -1], vec![1, 0]],
            translation: vec![1, 0],
        };
        assert_eq!(
            generate_group_with_cap(&[swap, rot], &p, 4).unwrap_err(),
            Error::GroupTooLarge { cap: 4 }
        );
    }

    #[test]
    fn exterior_powers() {
        let p = poly(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]]);
        let rot = GroupElement::linear(vec![vec![0, -1], vec![1, 0]]);
        let g = generate_group(&[rot], &p).unwrap();
        let quarter = g.class_of(1);
        assert_eq!(g.exterior_character(1).at_class(quarter), 0);
        assert_eq!(g.exterior_character(2).at_class(quarter), 1);

        let (_, s3) = sym3_triangle();
        assert_eq!(s3.det_character().values(), &[1, -1, 1]);
        assert_eq!(s3.exterior_character(0).values(), &[1, 1, 1]);
        assert_eq!(s3.exterior_character(1).values(), &[2, 0, -1]);
    }

    #[test]
    fn identity_exterior_binomials() {
        let p = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let g = generate_group(&[], &p).unwrap();
        let vals: Vec<i64> = (0..=3).map(|k| g.exterior_character(k).degree()).collect();
        assert_eq!(vals, vec![1, 3, 3, 1]);
    }

    #[test]
    fn induction_examples() {
        let (_, g) = sym3_triangle();
        let whole = Subgroup::whole(&g);
        let chi = g.exterior_character(1);
        assert_eq!(whole.induce(&whole.restrict(&chi)).unwrap().values(), chi.values());

        let t = g.classes()[1][0];
        let h = Subgroup::new(&g, g.closure(&[t])).unwrap();
        let ind = h.induce(&h.group().trivial_character()).unwrap();
        assert_eq!(ind.values(), &[3, 1, 0]);

        let e = Subgroup::new(&g, vec![0]).unwrap();
        let reg = e.induce(&e.group().trivial_character()).unwrap();
        assert_eq!(reg.values(), &[6, 0, 0]);
    }

    #[test]
    fn multiplicities() {
        let (p, g) = sym3_triangle();
        let verts = ClassFunction::permutation(&g, p.vertices(), |h, v| &h.apply(v)[..] == &v[..]);
        assert_eq!(verts.values(), &[3, 1, 0]);
        assert_eq!(verts.multiplicity(&g.trivial_character()), Ok(1));
        assert_eq!(verts.multiplicity(&g.det_character()), Ok(0));

        let seg = poly(&[&[-1], &[1]]);
        let c2 = generate_group(&[GroupElement::linear(vec![vec![-1]])], &seg).unwrap();
        let reg = ClassFunction::new(&c2, vec![2, 0]);
        assert_eq!(reg.multiplicity(&c2.det_character()), Ok(1));
        assert!(matches!(
            ClassFunction::new(&c2, vec![1, 0]).multiplicity(&c2.trivial_character()),
            Err(Error::NonIntegralMultiplicity { .. })
        ));
        assert_eq!(
            ClassFunction::new(&c2, vec![-1, -1]).multiplicity(&c2.trivial_character()),
            Err(Error::NegativeMultiplicity(-1))
        );
    }

    #[test]
    fn kernel_of_sign_is_a3() {
        let (_, g) = sym3_triangle();
        let h = Subgroup::kernel_of(&g.det_character()).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.group().num_classes(), 3);
    }
}

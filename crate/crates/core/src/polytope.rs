//! Lattice polytopes: facets, face lattice, lattice points of dilates,
//! structural classification and polar duality.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Bit set over vertex or facet indices.
pub type IndexMask = u128;

const MASK_BITS: usize = 128;

/// A point of the lattice `Z^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn origin(d: usize) -> Self {
        LatticePoint(vec![0; d])
    }
}

impl Deref for LatticePoint {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// `⟨normal, x⟩ ≥ offset`, with a primitive normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    pub fn slack(&self, x: &[i64]) -> i64 {
        linalg::dot(&self.normal, x) - self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Affine dimension; `-1` for the empty face.
    pub dim: isize,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    pub vertex_mask: IndexMask,
    /// Sorted indices of the facets containing this face.
    pub facets: Vec<usize>,
    pub facet_mask: IndexMask,
}

impl Face {
    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

/// Which lattice points of a dilate to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    All,
    Interior,
    /// Points in the relative interior of some `k`-dimensional face.
    Stratum(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Drop non-extreme input points instead of rejecting them.
    pub strip_redundant: bool,
    pub max_vertices: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            strip_redundant: false,
            max_vertices: 64,
        }
    }
}

/// A full-dimensional lattice polytope in `Z^d` together with its facet
/// presentation and face lattice.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<HalfSpace>,
    faces: Vec<Face>,
    face_by_facets: HashMap<IndexMask, usize>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

pub fn build_polytope(vertices: Vec<LatticePoint>) -> Result<LatticePolytope> {
    LatticePolytope::build(vertices, BuildOptions::default())
}

impl LatticePolytope {
    pub fn build(points: Vec<LatticePoint>, opts: BuildOptions) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidInput("no vertices given".into()));
        };
        let d = first.len();
        if points.iter().any(|p| p.len() != d) {
            return Err(Error::InvalidInput(
                "vertices have inconsistent dimensions".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut unique = Vec::with_capacity(points.len());
        for p in points {
            if seen.insert(p.clone()) {
                unique.push(p);
            } else if !opts.strip_redundant {
                return Err(Error::RedundantPoint(p.0));
            }
        }
        let cap = opts.max_vertices.min(MASK_BITS);
        if unique.len() > cap {
            return Err(Error::TooLarge {
                what: "vertex",
                count: unique.len(),
                cap,
            });
        }
        let spanned = affine_rank(&unique);
        if spanned != d {
            return Err(Error::NotFullDimensional {
                expected: d,
                found: spanned,
            });
        }
        if d == 0 {
            return Ok(Self::assemble(0, unique, Vec::new()));
        }

        let facets = scan_facets(&unique, d);
        if facets.len() > MASK_BITS {
            return Err(Error::TooLarge {
                what: "facet",
                count: facets.len(),
                cap: MASK_BITS,
            });
        }
        let mut vertices = Vec::with_capacity(unique.len());
        for p in unique {
            let tight: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.slack(&p) == 0)
                .map(|f| f.normal.clone())
                .collect();
            if linalg::rank(&tight) == d {
                vertices.push(p);
            } else if !opts.strip_redundant {
                return Err(Error::RedundantPoint(p.0));
            }
        }
        Ok(Self::assemble(d, vertices, facets))
    }

    fn assemble(dim: usize, vertices: Vec<LatticePoint>, facets: Vec<HalfSpace>) -> Self {
        let n = vertices.len();
        let all_vertices: IndexMask = if n == MASK_BITS {
            IndexMask::MAX
        } else {
            (1 << n) - 1
        };
        let facet_vertex_masks: Vec<IndexMask> = facets
            .iter()
            .map(|f| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| f.slack(v) == 0)
                    .fold(0, |m, (i, _)| m | (1 << i))
            })
            .collect();

        let mut masks: BTreeSet<IndexMask> = BTreeSet::new();
        masks.insert(all_vertices);
        masks.insert(0);
        let mut queue: Vec<IndexMask> = facet_vertex_masks.clone();
        while let Some(m) = queue.pop() {
            if !masks.insert(m) {
                continue;
            }
            for &f in &facet_vertex_masks {
                let next = m & f;
                if !masks.contains(&next) {
                    queue.push(next);
                }
            }
        }

        let mut faces: Vec<Face> = masks
            .into_iter()
            .map(|vmask| {
                let vs = mask_indices(vmask);
                let dim = if vs.is_empty() {
                    -1
                } else {
                    let pts: Vec<LatticePoint> = vs.iter().map(|&i| vertices[i].clone()).collect();
                    affine_rank(&pts) as isize
                };
                let fs: Vec<usize> = facet_vertex_masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &fm)| fm & vmask == vmask && vmask != all_vertices)
                    .map(|(i, _)| i)
                    .collect();
                let fmask = fs.iter().fold(0, |m, &i| m | (1 << i));
                Face {
                    id: 0,
                    dim,
                    vertices: vs,
                    vertex_mask: vmask,
                    facets: fs,
                    facet_mask: fmask,
                }
            })
            .collect();
        // the empty face lies in every facet, even for a 0-dimensional polytope
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        let mut face_by_facets = HashMap::new();
        for (i, f) in faces.iter_mut().enumerate() {
            f.id = i;
            if !f.is_empty() {
                face_by_facets.insert(f.facet_mask, i);
            }
        }
        LatticePolytope {
            dim,
            vertices,
            facets,
            faces,
            face_by_facets,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// All faces, including the empty face and the polytope itself, sorted by
    /// `(dim, vertex set)`.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn faces_of_dim(&self, k: isize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == k)
    }

    /// The polytope itself as a face.
    pub fn top_face(&self) -> &Face {
        self.faces.last().expect("face lattice is never empty")
    }

    pub fn face_with_vertices(&self, mask: IndexMask) -> Option<&Face> {
        self.faces.iter().find(|f| f.vertex_mask == mask)
    }

    /// `(f_0, f_1, ..., f_d)`, the number of faces of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim as isize)
            .map(|k| self.faces_of_dim(k).count())
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(x) >= 0)
    }

    /// Calls `visit(x, tight)` for every lattice point `x` of `m·P`, where
    /// `tight` is the set of facets of `m·P` containing `x`.
    pub fn for_each_point(&self, m: u64, mut visit: impl FnMut(&[i64], IndexMask)) {
        let d = self.dim;
        let m = m as i64;
        if d == 0 {
            visit(&[], 0);
            return;
        }
        if m == 0 {
            let all = self.facets.iter().enumerate().fold(0, |acc, (i, _)| acc | (1 << i));
            visit(&vec![0; d], all);
            return;
        }
        let lo: Vec<i64> = (0..d)
            .map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap() * m)
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap() * m)
            .collect();
        let last = d - 1;
        let mut x = lo.clone();
        loop {
            // solve the facet inequalities for the last coordinate directly
            let (mut a, mut b) = (lo[last], hi[last]);
            for f in &self.facets {
                let c = f.normal[last];
                let rest: i64 = (0..last).map(|j| f.normal[j] * x[j]).sum();
                let need = f.offset * m - rest;
                if c > 0 {
                    a = a.max(div_ceil(need, c));
                } else if c < 0 {
                    b = b.min(div_floor(need, c));
                } else if rest < f.offset * m {
                    a = 1;
                    b = 0;
                    break;
                }
            }
            for t in a..=b {
                x[last] = t;
                let tight = self
                    .facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| linalg::dot(&f.normal, &x) == f.offset * m)
                    .fold(0, |acc, (i, _)| acc | (1 << i));
                visit(&x, tight);
            }
            // advance the odometer over coordinates 0..last
            let mut j = last;
            loop {
                if j == 0 {
                    return;
                }
                j -= 1;
                if x[j] < hi[j] {
                    x[j] += 1;
                    for k in j + 1..last {
                        x[k] = lo[k];
                    }
                    break;
                }
            }
        }
    }

    /// The face whose relative interior contains a point with the given set
    /// of tight facets.
    pub fn carrier_face(&self, tight: IndexMask) -> Option<&Face> {
        self.face_by_facets.get(&tight).map(|&i| &self.faces[i])
    }

    /// Lattice points of `m·P` in the requested region, in lexicographic order.
    pub fn points(&self, m: u64, region: Region) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        self.for_each_point(m, |x, tight| {
            let keep = match region {
                Region::All => true,
                Region::Interior => m > 0 && tight == 0,
                Region::Stratum(k) => {
                    if m == 0 {
                        k == 0
                    } else {
                        self.carrier_face(tight).map(|f| f.dim) == Some(k as isize)
                    }
                }
            };
            if keep {
                out.push(LatticePoint(x.to_vec()));
            }
        });
        out
    }

    pub fn interior_points(&self) -> Vec<LatticePoint> {
        self.points(1, Region::Interior)
    }

    pub fn translate(&self, shift: &[i64]) -> LatticePolytope {
        let vertices = self
            .vertices
            .iter()
            .map(|v| LatticePoint(linalg::add(v, shift)))
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal.clone(),
                offset: f.offset + linalg::dot(&f.normal, shift),
            })
            .collect();
        let mut out = self.clone();
        out.vertices = vertices;
        out.facets = facets;
        out
    }

    pub fn is_simple(&self) -> bool {
        self.faces_of_dim(0).all(|v| v.facets.len() == self.dim)
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    /// Whether the normal fan is smooth: at each vertex the normals of the
    /// facets through it form a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.is_simple()
            && self.faces_of_dim(0).all(|v| {
                let normals: linalg::Matrix = v
                    .facets
                    .iter()
                    .map(|&i| self.facets[i].normal.clone())
                    .collect();
                linalg::det(&normals).abs() == 1
            })
    }

    pub fn classify(&self) -> Classification {
        let interior = self.interior_points();
        let reflexive = match interior.as_slice() {
            [center] => {
                let shift: Vec<i64> = center.iter().map(|x| -x).collect();
                let centered = self.translate(&shift);
                if centered.facets.iter().all(|f| f.offset == -1) {
                    ReflexiveStatus::Reflexive {
                        center: center.clone(),
                        recentered: centered,
                    }
                } else {
                    ReflexiveStatus::NotReflexive
                }
            }
            _ => ReflexiveStatus::NotReflexive,
        };
        Classification {
            is_simple: self.is_simple(),
            is_simplex: self.is_simplex(),
            reflexive,
        }
    }

    /// Whether this polytope is reflexive with the origin as its interior point.
    pub fn is_centered_reflexive(&self) -> bool {
        self.dim > 0 && self.facets.iter().all(|f| f.offset == -1)
    }

    /// The polar dual `{u : ⟨u, v⟩ ≥ -1 for all v in P}`, which for a
    /// centered reflexive polytope is the convex hull of its facet normals.
    pub fn polar_dual(&self) -> Result<LatticePolytope> {
        if !self.is_centered_reflexive() {
            return Err(Error::NotReflexive);
        }
        let normals = self
            .facets
            .iter()
            .map(|f| LatticePoint(f.normal.clone()))
            .collect();
        build_polytope(normals)
    }

    /// Coordinates in the lifted lattice `M ⊕ Z` of the vertex `(v_i, 1)`.
    pub fn lifted_vertex(&self, i: usize) -> Vec<i64> {
        let mut v = self.vertices[i].0.clone();
        v.push(1);
        v
    }
}

#[derive(Debug, Clone)]
pub enum ReflexiveStatus {
    Reflexive {
        center: LatticePoint,
        recentered: LatticePolytope,
    },
    NotReflexive,
}

impl ReflexiveStatus {
    pub fn is_reflexive(&self) -> bool {
        matches!(self, ReflexiveStatus::Reflexive { .. })
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub is_simple: bool,
    pub is_simplex: bool,
    pub reflexive: ReflexiveStatus,
}

pub fn mask_indices(mask: IndexMask) -> Vec<usize> {
    (0..MASK_BITS).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn affine_rank(points: &[LatticePoint]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => {
            let diffs: Vec<Vec<i64>> = rest.iter().map(|p| linalg::sub(p, p0)).collect();
            linalg::rank(&diffs)
        }
    }
}

fn scan_facets(points: &[LatticePoint], d: usize) -> Vec<HalfSpace> {
    let mut found: Vec<HalfSpace> = Vec::new();
    let mut seen: HashSet<HalfSpace> = HashSet::new();
    for subset in (0..points.len()).combinations(d) {
        let p0 = &points[subset[0]];
        let diffs: Vec<Vec<i64>> = subset[1..]
            .iter()
            .map(|&i| linalg::sub(&points[i], p0))
            .collect();
        let kernel = linalg::integer_kernel(&diffs, d);
        if kernel.len() != 1 {
            continue;
        }
        let normal = &kernel[0];
        let offset = linalg::dot(normal, p0);
        let values: Vec<i64> = points.iter().map(|p| linalg::dot(normal, p)).collect();
        let candidate = if values.iter().all(|&v| v >= offset) {
            HalfSpace {
                normal: normal.clone(),
                offset,
            }
        } else if values.iter().all(|&v| v <= offset) {
            HalfSpace {
                normal: linalg::scale(normal, -1),
                offset: -offset,
            }
        } else {
            continue;
        };
        if seen.insert(candidate.clone()) {
            found.push(candidate);
        }
    }
    found
}

fn div_floor(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -num_integer::Integer::div_floor(&-a, &b)
}

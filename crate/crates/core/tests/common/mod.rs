#![allow(dead_code)]

use std::sync::Arc;

use equihodge::linalg::{self, Matrix};
use equihodge::{build_polytope, generate_group, GroupElement, InvariantPolytope, LatticePoint};
use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn invariant(vertices: &[&[i64]], gens: Vec<GroupElement>) -> InvariantPolytope {
    let p = build_polytope(vertices.iter().map(|v| LatticePoint(v.to_vec())).collect()).unwrap();
    let g = generate_group(&gens, &p).unwrap();
    InvariantPolytope::new(Arc::new(p), g).unwrap()
}

pub fn linear(rows: &[&[i64]]) -> GroupElement {
    GroupElement::linear(rows.iter().map(|r| r.to_vec()).collect())
}

/// Every affine unimodular map permuting the vertices of a simplex.
pub fn simplex_symmetries(vertices: &[Vec<i64>]) -> Vec<GroupElement> {
    let d = vertices.len() - 1;
    let columns = |order: &[usize]| -> Matrix {
        let cols: Vec<Vec<i64>> = (1..=d)
            .map(|i| linalg::sub(&vertices[order[i]], &vertices[order[0]]))
            .collect();
        linalg::transpose(&cols)
    };
    let identity: Vec<usize> = (0..=d).collect();
    let v = columns(&identity);
    let det = linalg::det(&v);
    let adj = linalg::adjugate(&v);
    let mut out = Vec::new();
    for perm in (0..=d).permutations(d + 1) {
        let w = columns(&perm);
        let scaled = linalg::mat_mul(&w, &adj);
        if scaled.iter().flatten().any(|x| x % det != 0) {
            continue;
        }
        let a: Matrix = scaled.iter().map(|r| r.iter().map(|x| x / det).collect()).collect();
        if linalg::det(&a).abs() != 1 {
            continue;
        }
        let translation = linalg::sub(&vertices[perm[0]], &linalg::mat_vec(&a, &vertices[0]));
        out.push(GroupElement { linear: a, translation });
    }
    out
}

/// Lattice simplices of dimension 1 to 3 with coordinates in `0..=4`, each
/// with its full group of lattice symmetries. At least half have a
/// nontrivial group.
pub fn random_simplices(seed: u64, count: usize) -> Vec<InvariantPolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut trivial = 0;
    while out.len() < count {
        let d = rng.gen_range(1..=3usize);
        let vertices: Vec<Vec<i64>> = (0..=d)
            .map(|_| (0..d).map(|_| rng.gen_range(0..=4)).collect())
            .collect();
        let points: Vec<LatticePoint> = vertices.iter().cloned().map(LatticePoint).collect();
        if equihodge::polytope::affine_rank(&points) != d {
            continue;
        }
        let gens = simplex_symmetries(&vertices);
        if gens.len() == 1 {
            if 2 * trivial >= count {
                continue;
            }
            trivial += 1;
        }
        let p = build_polytope(points).unwrap();
        let g = generate_group(&gens, &p).unwrap();
        out.push(InvariantPolytope::new(Arc::new(p), g).unwrap());
    }
    out
}

/// `conv{e1, e2, -e1-e2}` with `Sym_3`.
pub fn reflexive_triangle() -> InvariantPolytope {
    invariant(
        &[&[1, 0], &[0, 1], &[-1, -1]],
        vec![linear(&[&[0, 1], &[1, 0]]), linear(&[&[0, -1], &[1, -1]])],
    )
}

pub fn segment_with_inversion() -> InvariantPolytope {
    invariant(&[&[-1], &[1]], vec![linear(&[&[-1]])])
}

/// `[-1, 1]^2` with its dihedral group of order 8.
pub fn square_d4() -> InvariantPolytope {
    invariant(
        &[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]],
        vec![linear(&[&[0, -1], &[1, 0]]), linear(&[&[0, 1], &[1, 0]])],
    )
}

/// `[-1, 1]^3` with the coordinate permutations and sign changes.
pub fn cube_full() -> InvariantPolytope {
    let vs: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..3).map(|b| if i >> b & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    let refs: Vec<&[i64]> = vs.iter().map(|v| v.as_slice()).collect();
    invariant(
        &refs,
        vec![
            linear(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            linear(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
            linear(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ],
    )
}

/// `conv{±e_i}` in dimension 3 with the coordinate permutations.
pub fn octahedron_sym3() -> InvariantPolytope {
    invariant(
        &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]],
        vec![
            linear(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            linear(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
        ],
    )
}

/// Reflexive polytopes with symmetry, in various positions.
pub fn reflexive_fixtures() -> Vec<(&'static str, InvariantPolytope)> {
    vec![
        ("segment", segment_with_inversion()),
        ("triangle", reflexive_triangle()),
        ("square", square_d4()),
        ("3 simplex2", equihodge::mirror::fermat(2, 3).unwrap().input),
        ("4 simplex3", equihodge::mirror::fermat(3, 4).unwrap().input),
        ("octahedron", octahedron_sym3()),
        ("cube", cube_full()),
    ]
}

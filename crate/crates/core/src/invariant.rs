//! A polytope together with a group preserving it: face orbits, isotropy
//! subgroups and the restricted actions on face lattices.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{vertex_permutation, ClassFunction, FiniteGroup, GroupElement, Subgroup};
use crate::linalg::{self, Matrix};
use crate::polytope::{IndexMask, LatticePoint, LatticePolytope};

#[derive(Debug, Clone)]
pub struct InvariantPolytope {
    polytope: Arc<LatticePolytope>,
    group: Arc<FiniteGroup>,
    /// `face_perms[g][f]` is the id of `g·f`.
    face_perms: Vec<Vec<usize>>,
}

impl InvariantPolytope {
    pub fn new(polytope: Arc<LatticePolytope>, group: Arc<FiniteGroup>) -> Result<Self> {
        if group.dim() != polytope.dim() {
            return Err(Error::InvalidInput(format!(
                "group acts in dimension {} but the polytope has dimension {}",
                group.dim(),
                polytope.dim()
            )));
        }
        let by_mask: HashMap<IndexMask, usize> = polytope
            .faces()
            .iter()
            .map(|f| (f.vertex_mask, f.id))
            .collect();
        let mut face_perms = Vec::with_capacity(group.order());
        for (index, g) in group.elements().iter().enumerate() {
            let vperm = vertex_permutation(g, &polytope).ok_or(Error::NotSymmetry { index })?;
            let fperm = polytope
                .faces()
                .iter()
                .map(|f| {
                    let image = f.vertices.iter().fold(0, |m, &v| m | (1 << vperm[v]));
                    by_mask[&image]
                })
                .collect();
            face_perms.push(fperm);
        }
        Ok(InvariantPolytope {
            polytope,
            group,
            face_perms,
        })
    }

    pub fn polytope(&self) -> &Arc<LatticePolytope> {
        &self.polytope
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn face_image(&self, g: usize, face: usize) -> usize {
        self.face_perms[g][face]
    }

    /// Orbits of nonempty faces, each sorted, ordered by their minimal id.
    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.polytope.faces().len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for f in self.polytope.faces() {
            if f.is_empty() || seen[f.id] {
                continue;
            }
            let mut orbit: Vec<usize> = self.face_perms.iter().map(|p| p[f.id]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &o in &orbit {
                seen[o] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Representatives (minimal ids) of the orbits of nonempty faces.
    pub fn face_orbit_reps(&self) -> Vec<usize> {
        self.face_orbits().into_iter().map(|o| o[0]).collect()
    }

    pub fn isotropy_members(&self, face: usize) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.face_perms[g][face] == face)
            .collect()
    }

    /// Nonempty faces fixed by element `g`.
    pub fn fixed_faces(&self, g: usize) -> Vec<usize> {
        self.polytope
            .faces()
            .iter()
            .filter(|f| !f.is_empty() && self.face_perms[g][f.id] == f.id)
            .map(|f| f.id)
            .collect()
    }

    /// The isotropy group of a nonempty face acting on the face's own lattice.
    pub fn face_action(&self, face: usize) -> Result<FaceAction> {
        let q = self.polytope.face(face);
        if q.is_empty() {
            return Err(Error::InvalidInput("the empty face has no isotropy action".into()));
        }
        if q.dim as usize == self.dim() {
            let anchor = self.polytope.vertices().iter().min().unwrap().clone();
            return Ok(FaceAction {
                face,
                isotropy: Subgroup::whole(&self.group),
                anchor,
                basis: linalg::identity(self.dim()),
                local: self.clone(),
            });
        }
        let verts: Vec<&LatticePoint> = q.vertices.iter().map(|&i| &self.polytope.vertices()[i]).collect();
        let anchor = (*verts.iter().min().unwrap()).clone();
        let diffs: Vec<Vec<i64>> = verts.iter().map(|v| linalg::sub(v, &anchor)).collect();
        let normals = linalg::integer_kernel(&diffs, self.dim());
        let basis = if q.dim == 0 {
            Vec::new()
        } else {
            linalg::integer_kernel(&normals, self.dim())
        };
        let coords = |y: &[i64]| {
            linalg::coordinates_in_hnf(&basis, y).ok_or_else(|| {
                Error::InvariantViolation("point outside the face lattice".into())
            })
        };

        let members = self.isotropy_members(face);
        let mut restricted = Vec::with_capacity(members.len());
        for &gi in &members {
            let g = self.group.element(gi);
            let columns: Vec<Vec<i64>> = basis
                .iter()
                .map(|b| coords(&linalg::mat_vec(&g.linear, b)))
                .collect::<Result<_>>()?;
            let translation = coords(&linalg::sub(&g.apply(&anchor), &anchor))?;
            restricted.push(GroupElement {
                linear: linalg::transpose(&columns),
                translation,
            });
        }
        let dim = q.dim as usize;
        if dim == 0 {
            for r in &mut restricted {
                r.linear = Matrix::new();
            }
        }
        let isotropy = Subgroup::with_action(&self.group, members, restricted, dim)?;
        let local_vertices = diffs
            .iter()
            .map(|y| coords(y).map(LatticePoint))
            .collect::<Result<Vec<_>>>()?;
        let local_polytope = LatticePolytope::build(local_vertices, Default::default())?;
        let local = InvariantPolytope::new(Arc::new(local_polytope), isotropy.group().clone())?;
        Ok(FaceAction {
            face,
            isotropy,
            anchor,
            basis,
            local,
        })
    }
}

/// The isotropy subgroup `G_Q` of a face `Q` and its action on
/// `Q - anchor` expressed in a Hermite basis of the saturated face lattice.
#[derive(Debug, Clone)]
pub struct FaceAction {
    pub face: usize,
    pub isotropy: Subgroup,
    pub anchor: LatticePoint,
    /// Rows form a lattice basis of the face lattice, in Hermite normal form.
    pub basis: Matrix,
    /// `Q` in basis coordinates with the restricted `G_Q` action.
    pub local: InvariantPolytope,
}

impl FaceAction {
    pub fn dim(&self) -> usize {
        self.local.dim()
    }

    /// `det ρ_Q` as a class function on `G_Q`.
    pub fn det_restricted(&self) -> ClassFunction {
        self.isotropy.group().det_character()
    }

    pub fn restricted(&self, k: usize) -> &GroupElement {
        self.isotropy.group().element(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{poly, sym3_triangle};
    use crate::group::generate_group;

    #[test]
    fn top_face_keeps_the_whole_group() {
        let (p, g) = sym3_triangle();
        let ip = InvariantPolytope::new(Arc::new(p), g.clone()).unwrap();
        let top = ip.polytope().top_face().id;
        let fa = ip.face_action(top).unwrap();
        assert_eq!(fa.isotropy.order(), 6);
        assert_eq!(fa.det_restricted(), g.det_character());
    }

    #[test]
    fn edge_of_triangle_flips() {
        let (p, g) = sym3_triangle();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        let edge = ip
            .polytope()
            .faces_of_dim(1)
            .find(|f| f.vertices == vec![0, 1])
            .unwrap()
            .id;
        let fa = ip.face_action(edge).unwrap();
        assert_eq!(fa.isotropy.order(), 2);
        assert_eq!(fa.restricted(1).linear, vec![vec![-1]]);
        assert_eq!(fa.det_restricted().values(), &[1, -1]);
        assert_eq!(fa.local.polytope().vertices().len(), 2);
    }

    #[test]
    fn rotation_fixes_no_vertex() {
        let p = poly(&[&[-1, -1], &[1, -1], &[1, 1], &[-1, 1]]);
        let g = generate_group(&[GroupElement::linear(vec![vec![-1, 0], vec![0, -1]])], &p).unwrap();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        let v = ip.polytope().faces_of_dim(0).next().unwrap().id;
        assert_eq!(ip.face_action(v).unwrap().isotropy.order(), 1);
        assert_eq!(ip.face_orbits().len(), 2 + 2 + 1);
    }

    #[test]
    fn non_primitive_edge_gets_saturated_basis() {
        let p = poly(&[&[0, 0], &[2, 2], &[2, 0]]);
        let g = generate_group(&[], &p).unwrap();
        let ip = InvariantPolytope::new(Arc::new(p), g).unwrap();
        let diag = ip
            .polytope()
            .faces_of_dim(1)
            .find(|f| f.vertices == vec![0, 1])
            .unwrap()
            .id;
        let fa = ip.face_action(diag).unwrap();
        assert_eq!(fa.basis, vec![vec![1, 1]]);
        let mut local: Vec<_> = fa.local.polytope().vertices().to_vec();
        local.sort();
        assert_eq!(local, vec![LatticePoint(vec![0]), LatticePoint(vec![2])]);
    }
}

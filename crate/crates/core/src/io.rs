//! JSON input documents and plain-text rendering shared by front ends.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{generate_group, vertex_permutation, FiniteGroup, GroupElement, Subgroup};
use crate::invariant::InvariantPolytope;
use crate::polytope::{build_polytope, LatticePoint};

/// `{"dim": d, "vertices": [[..]], "generators": [{"matrix": [[..]], "translation": [..]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    #[serde(default)]
    pub generators: Vec<GroupElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl InputDocument {
    pub fn new(vertices: &[LatticePoint], generators: &[GroupElement]) -> Self {
        InputDocument {
            dim: vertices.first().map_or(0, |v| v.len()),
            vertices: vertices.iter().map(|v| v.0.clone()).collect(),
            generators: generators.to_vec(),
            labels: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed input document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("input documents serialize")
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        if self.vertices.is_empty() {
            return Err(Error::InvalidInput("no vertices given".into()));
        }
        if let Some(v) = self.vertices.iter().find(|v| v.len() != d) {
            return Err(Error::InvalidInput(format!("vertex {v:?} does not have {d} coordinates")));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.linear.len() != d || g.linear.iter().any(|r| r.len() != d) || g.translation.len() != d {
                return Err(Error::InvalidInput(format!("generator {i} is not of size {d}")));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<InvariantPolytope> {
        self.validate()?;
        let p = build_polytope(self.vertices.iter().cloned().map(LatticePoint).collect())?;
        let g = generate_group(&self.generators, &p)?;
        InvariantPolytope::new(Arc::new(p), g)
    }

    /// Group element indices of the generators.
    pub fn generator_indices(&self, ip: &InvariantPolytope) -> Result<Vec<usize>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, g)| {
                vertex_permutation(g, ip.polytope())
                    .and_then(|p| ip.group().index_of_perm(&p))
                    .ok_or(Error::NotSymmetry { index })
            })
            .collect()
    }
}

/// Which subgroup to take invariants under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientSpec {
    Trivial,
    /// The kernel of `det ρ`.
    Det,
    /// Generated by the listed input generators.
    Generators(Vec<usize>),
}

impl std::str::FromStr for QuotientSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "trivial" => Ok(QuotientSpec::Trivial),
            "det" => Ok(QuotientSpec::Det),
            list => list
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(QuotientSpec::Generators)
                .map_err(|_| Error::InvalidInput(format!("cannot read quotient `{s}`"))),
        }
    }
}

impl QuotientSpec {
    pub fn subgroup(&self, ip: &InvariantPolytope, generators: &[usize]) -> Result<Subgroup> {
        let g = ip.group();
        match self {
            QuotientSpec::Trivial => Subgroup::new(g, vec![0]),
            QuotientSpec::Det => Subgroup::kernel_of(&g.det_character()),
            QuotientSpec::Generators(list) => {
                let picked = list
                    .iter()
                    .map(|&i| {
                        generators
                            .get(i)
                            .copied()
                            .ok_or_else(|| Error::InvalidInput(format!("no generator with index {i}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Subgroup::new(g, g.closure(&picked))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassHeader {
    pub size: usize,
    pub cycle_type: Vec<usize>,
}

pub fn class_headers(group: &FiniteGroup) -> Vec<ClassHeader> {
    group
        .class_sizes()
        .into_iter()
        .zip(group.cycle_types())
        .map(|(size, cycle_type)| ClassHeader { size, cycle_type })
        .collect()
}

/// One line per class: index, size, cycle type and representative.
pub fn describe_classes(group: &FiniteGroup) -> String {
    let mut out = String::new();
    for (c, h) in class_headers(group).iter().enumerate() {
        let rep = group.element(group.class_rep(c));
        out.push_str(&format!(
            "class {c}: size {}, cycle type ({}), matrix {:?}, translation {:?}\n",
            h.size,
            h.cycle_type.iter().join(","),
            rep.linear,
            rep.translation
        ));
    }
    out
}

/// Rows of a diamond from `(n, n)` at the top to `(0, 0)` at the bottom,
/// each row listing `p` descending.
pub fn diamond_rows(n: usize) -> Vec<Vec<(usize, usize)>> {
    (0..=2 * n)
        .rev()
        .map(|s| {
            (0..=n)
                .rev()
                .filter(|&p| s >= p && s - p <= n)
                .map(|p| (p, s - p))
                .collect()
        })
        .collect()
}

/// Centered rendering of a diamond whose entries are already formatted.
pub fn render_diamond(n: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let rows: Vec<Vec<String>> = diamond_rows(n)
        .iter()
        .map(|r| r.iter().map(|&(p, q)| cell(p, q)).collect())
        .collect();
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let lines: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(|s| format!("{s:^width$}")).join(" "))
        .collect();
    let total = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    lines
        .iter()
        .map(|l| {
            let pad = (total - l.chars().count()) / 2;
            format!("{}{}", " ".repeat(pad), l).trim_end().to_string()
        })
        .join("\n")
}

/// `"p,q"`-keyed map for JSON output.
pub fn keyed<T: Clone>(entries: &BTreeMap<(usize, usize), T>) -> BTreeMap<String, T> {
    entries.iter().map(|(&(p, q), v)| (format!("{p},{q}"), v.clone())).collect()
}

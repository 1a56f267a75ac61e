//! Double quivers of Dynkin diagrams and representations of the
//! preprojective algebra over the rationals.
//!
//! Modules are left modules. The matrix of an arrow `s -> t` maps the space
//! at `t` to the space at `s`, so it has shape `dims(s) x dims(t)`, and a path
//! `pq` (first `p`, then `q`) acts by `mat(p) * mat(q)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::{DynkinType, Family, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Matrix, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tail: Vertex,
    pub head: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleQuiver {
    dynkin: DynkinType,
    arrows: Vec<Arrow>,
}

impl DoubleQuiver {
    pub fn new(dynkin: DynkinType) -> Self {
        let arrows = dynkin
            .edges()
            .into_iter()
            .flat_map(|(u, v)| [Arrow { tail: u, head: v }, Arrow { tail: v, head: u }])
            .collect();
        DoubleQuiver { dynkin, arrows }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.dynkin.vertices()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, tail: Vertex, head: Vertex) -> Option<Arrow> {
        self.arrows
            .iter()
            .copied()
            .find(|a| a.tail == tail && a.head == head)
    }

    /// True for the arrows running along the orientation of [`DynkinType::edges`].
    pub fn is_alpha(&self, a: Arrow) -> bool {
        self.dynkin.edges().contains(&(a.tail, a.head))
    }

    pub fn arrow_name(&self, a: Arrow) -> String {
        let fork = |v: Vertex| match (self.dynkin.family, v) {
            (Family::D, 1) => "^+",
            (Family::D, -1) => "^-",
            _ => "",
        };
        if self.is_alpha(a) {
            format!("alpha_{}{}", a.tail.abs(), fork(a.tail))
        } else {
            format!("beta_{}{}", a.tail, fork(a.head))
        }
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<Arrow> {
        self.arrows
            .iter()
            .copied()
            .find(|&a| self.arrow_name(a) == name)
            .ok_or_else(|| Error::Parse {
                token: name.to_string(),
                reason: format!("not an arrow of the double quiver of {}", self.dynkin),
            })
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.arrows
            .iter()
            .filter(|a| a.tail == v)
            .map(|a| a.head)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRepresentation {
    quiver: DoubleQuiver,
    dims: BTreeMap<Vertex, usize>,
    mats: BTreeMap<Arrow, Matrix>,
}

impl QuiverRepresentation {
    /// Validates shapes; relations are checked separately.
    pub fn new(
        quiver: DoubleQuiver,
        dims: BTreeMap<Vertex, usize>,
        mut mats: BTreeMap<Arrow, Matrix>,
    ) -> Result<Self> {
        let mut full = BTreeMap::new();
        for v in quiver.vertices() {
            full.insert(v, dims.get(&v).copied().unwrap_or(0));
        }
        if dims.keys().any(|v| !full.contains_key(v)) {
            return Err(Error::Domain("dimension given at a non-vertex".into()));
        }
        for &a in quiver.arrows() {
            let shape = (full[&a.tail], full[&a.head]);
            let m = mats
                .entry(a)
                .or_insert_with(|| Matrix::zeros(shape.0, shape.1));
            if (m.rows(), m.cols()) != shape {
                return Err(Error::Domain(format!(
                    "matrix of {} has shape {}x{}, expected {}x{}",
                    quiver.arrow_name(a),
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::Domain("matrix given for a non-arrow".into()));
        }
        Ok(QuiverRepresentation {
            quiver,
            dims: full,
            mats,
        })
    }

    pub fn zero(dynkin: DynkinType) -> Self {
        Self::new(DoubleQuiver::new(dynkin), BTreeMap::new(), BTreeMap::new())
            .expect("zero representation")
    }

    pub fn simple(dynkin: DynkinType, v: Vertex) -> Result<Self> {
        if !dynkin.is_vertex(v) {
            return Err(Error::NotAVertex {
                vertex: v,
                dynkin: dynkin.to_string(),
            });
        }
        Self::new(DoubleQuiver::new(dynkin), [(v, 1)].into(), BTreeMap::new())
    }

    pub fn quiver(&self) -> &DoubleQuiver {
        &self.quiver
    }

    pub fn dynkin(&self) -> DynkinType {
        self.quiver.dynkin
    }

    pub fn dims(&self) -> &BTreeMap<Vertex, usize> {
        &self.dims
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims[&v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn mat(&self, a: Arrow) -> &Matrix {
        &self.mats[&a]
    }

    pub fn mats(&self) -> &BTreeMap<Arrow, Matrix> {
        &self.mats
    }

    /// The mesh relation at `v`, which vanishes on Π-modules.
    pub fn relation_at(&self, v: Vertex) -> Matrix {
        let d = self.dim(v);
        let mut acc = Matrix::zeros(d, d);
        for u in self.quiver.neighbors(v) {
            let out = self.quiver.arrow(v, u).unwrap();
            let back = self.quiver.arrow(u, v).unwrap();
            let path = self.mat(out).mul(self.mat(back));
            acc = if self.quiver.is_alpha(out) {
                acc.add(&path)
            } else {
                acc.sub(&path)
            };
        }
        acc
    }

    /// Vertices where the preprojective relation fails.
    pub fn relation_failures(&self) -> Vec<Vertex> {
        self.quiver
            .vertices()
            .into_iter()
            .filter(|&v| !self.relation_at(v).is_zero())
            .collect()
    }

    pub fn satisfies_relations(&self) -> bool {
        self.relation_failures().is_empty()
    }

    pub fn check_relations(&self) -> Result<()> {
        match self.relation_failures().as_slice() {
            [] => Ok(()),
            bad => Err(Error::Consistency(format!(
                "preprojective relations fail at vertices {bad:?}"
            ))),
        }
    }

    /// Dimension vector in the vertex order of [`DynkinType::vertices`].
    pub fn dim_vector(&self) -> Vec<usize> {
        self.quiver.vertices().iter().map(|v| self.dims[v]).collect()
    }

    /// The subrepresentation spanned at each vertex by the given columns.
    pub fn subrepresentation(&self, spans: &BTreeMap<Vertex, Matrix>) -> Result<Subrepresentation> {
        let mut basis = BTreeMap::new();
        for v in self.quiver.vertices() {
            let b = match spans.get(&v) {
                Some(m) => {
                    if m.rows() != self.dim(v) {
                        return Err(Error::Domain(format!("span at {v} has wrong height")));
                    }
                    m.column_echelon()
                }
                None => Matrix::zeros(self.dim(v), 0),
            };
            basis.insert(v, b);
        }
        let dims = basis.iter().map(|(&v, b)| (v, b.cols())).collect();
        let mut mats = BTreeMap::new();
        for &a in self.quiver.arrows() {
            let (bt, bh) = (&basis[&a.tail], &basis[&a.head]);
            let img = self.mat(a).mul(bh);
            let mut m = Matrix::zeros(bt.cols(), bh.cols());
            for c in 0..bh.cols() {
                let x = bt.echelon_coordinates(&img.column(c)).ok_or_else(|| {
                    Error::Domain("subspace is not closed under the arrow action".into())
                })?;
                for (r, v) in x.into_iter().enumerate() {
                    m[(r, c)] = v;
                }
            }
            mats.insert(a, m);
        }
        Ok(Subrepresentation {
            rep: QuiverRepresentation::new(self.quiver.clone(), dims, mats)?,
            embedding: basis,
        })
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            dims: self.dims.iter().map(|(v, d)| (v.to_string(), *d)).collect(),
            mats: self
                .mats
                .iter()
                .map(|(&a, m)| {
                    let rows = m
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(format_q).collect())
                        .collect();
                    (self.quiver.arrow_name(a), rows)
                })
                .collect(),
        }
    }

    pub fn from_json(dynkin: DynkinType, j: &RepresentationJson) -> Result<Self> {
        let quiver = DoubleQuiver::new(dynkin);
        let mut dims = BTreeMap::new();
        for (k, d) in &j.dims {
            let v: Vertex = k.parse().map_err(|_| Error::Parse {
                token: k.clone(),
                reason: "expected a vertex".into(),
            })?;
            dims.insert(v, *d);
        }
        let mut mats = BTreeMap::new();
        for (name, rows) in &j.mats {
            let a = quiver.arrow_by_name(name)?;
            let rows: Vec<Vec<Q>> = rows
                .iter()
                .map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            let m = if rows.is_empty() {
                Matrix::zeros(0, dims.get(&a.head).copied().unwrap_or(0))
            } else {
                Matrix::from_rows(rows)?
            };
            mats.insert(a, m);
        }
        Self::new(quiver, dims, mats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: BTreeMap<String, usize>,
    pub mats: BTreeMap<String, Vec<Vec<String>>>,
}

/// A subrepresentation together with its basis inside the ambient spaces.
#[derive(Debug, Clone)]
pub struct Subrepresentation {
    pub rep: QuiverRepresentation,
    /// Reduced column echelon basis at each vertex.
    pub embedding: BTreeMap<Vertex, Matrix>,
}

impl Subrepresentation {
    pub fn same_subspace(&self, other: &Subrepresentation) -> bool {
        self.embedding == other.embedding
    }
}

/// A representation given on a basis of labelled vectors, with arrows
/// written as "basis vector `x` is sent to `coeff * y`".
pub struct BasisBuilder {
    dynkin: DynkinType,
    vertex_of: Vec<Vertex>,
    local: Vec<usize>,
    counts: BTreeMap<Vertex, usize>,
    moves: Vec<(usize, usize, i64)>,
}

impl BasisBuilder {
    pub fn new(dynkin: DynkinType) -> Self {
        BasisBuilder {
            dynkin,
            vertex_of: Vec::new(),
            local: Vec::new(),
            counts: BTreeMap::new(),
            moves: Vec::new(),
        }
    }

    /// Adds a basis vector at `v` and returns its index.
    pub fn add(&mut self, v: Vertex) -> usize {
        let c = self.counts.entry(v).or_insert(0);
        self.vertex_of.push(v);
        self.local.push(*c);
        *c += 1;
        self.vertex_of.len() - 1
    }

    pub fn vertex(&self, x: usize) -> Vertex {
        self.vertex_of[x]
    }

    /// Position of basis vector `x` inside its vertex space.
    pub fn local_index(&self, x: usize) -> usize {
        self.local[x]
    }

    pub fn send(&mut self, x: usize, y: usize, coeff: i64) {
        self.moves.push((x, y, coeff));
    }

    pub fn build(&self) -> Result<QuiverRepresentation> {
        let quiver = DoubleQuiver::new(self.dynkin);
        let dims = self.counts.clone();
        let mut mats: BTreeMap<Arrow, Matrix> = quiver
            .arrows()
            .iter()
            .map(|&a| {
                let r = dims.get(&a.tail).copied().unwrap_or(0);
                let c = dims.get(&a.head).copied().unwrap_or(0);
                (a, Matrix::zeros(r, c))
            })
            .collect();
        for &(x, y, coeff) in &self.moves {
            let (vx, vy) = (self.vertex_of[x], self.vertex_of[y]);
            let a = quiver.arrow(vy, vx).ok_or_else(|| {
                Error::Consistency(format!("no arrow between vertices {vx} and {vy}"))
            })?;
            let m = mats.get_mut(&a).unwrap();
            m[(self.local[y], self.local[x])] += crate::linalg::q(coeff);
        }
        QuiverRepresentation::new(quiver, dims, mats)
    }
}

/// Nonzero, nonnegative, and of Tits form 1.
pub fn is_positive_root(dynkin: DynkinType, d: &BTreeMap<Vertex, usize>) -> bool {
    if d.values().all(|&x| x == 0) || d.keys().any(|&v| !dynkin.is_vertex(v)) {
        return false;
    }
    let get = |v: Vertex| d.get(&v).copied().unwrap_or(0) as i64;
    let sq: i64 = dynkin.vertices().into_iter().map(|v| get(v) * get(v)).sum();
    let cross: i64 = dynkin.edges().into_iter().map(|(u, v)| get(u) * get(v)).sum();
    sq - cross == 1
}

//! Grid bases of the indecomposable projectives `Πe_l` and the modules
//! `J(w)` obtained from them by deleting entries.

use std::collections::{BTreeMap, HashMap};

use crate::coxeter::{CoxeterElement, DynkinType, Family, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};
use crate::quiver::{BasisBuilder, QuiverRepresentation, Subrepresentation};

/// A grid entry: the value `i` in the row starting at `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub i: i32,
    pub j: i32,
}

impl Entry {
    pub fn vertex(&self) -> Vertex {
        if self.i >= -1 {
            self.i
        } else {
            -self.i
        }
    }
}

#[derive(Debug, Clone)]
pub struct Grid {
    pub dynkin: DynkinType,
    pub l: Vertex,
    /// Sign choice of the basis for type D with `l >= 2`; 1 otherwise.
    pub eps: i32,
    pub entries: Vec<Entry>,
    /// `(x, y, c)`: an arrow sends entry `x` to `c` times entry `y`.
    pub arrows: Vec<(usize, usize, i64)>,
}

/// The row labels of `Πe_l`, top to bottom.
fn row_labels(t: DynkinType, l: Vertex) -> Vec<i32> {
    let n = t.rank as i32;
    match t.family {
        Family::A => (l..=n).collect(),
        Family::D if l.abs() == 1 => std::iter::once(l).chain(2..n).collect(),
        Family::D => (l..n).collect(),
    }
}

impl Grid {
    pub fn projective(t: DynkinType, l: Vertex, eps: i32) -> Result<Grid> {
        if !t.is_vertex(l) {
            return Err(Error::NotAVertex {
                vertex: l,
                dynkin: t.to_string(),
            });
        }
        let n = t.rank as i32;
        let mut entries = Vec::new();
        let rows = row_labels(t, l);
        for &j in &rows {
            match t.family {
                Family::A => entries.extend((j - l + 1..=j).rev().map(|i| Entry { i, j })),
                Family::D if l.abs() == 1 => {
                    if j == l {
                        entries.push(Entry { i: l, j });
                    } else {
                        entries.extend((2..=j).rev().map(|i| Entry { i, j }));
                        entries.push(Entry {
                            i: Self::slot_pm1(l, j),
                            j,
                        });
                    }
                }
                Family::D => {
                    entries.extend((2..=j).rev().map(|i| Entry { i, j }));
                    let low = Self::lower_slot(l, eps, j);
                    entries.push(Entry { i: -low, j });
                    entries.push(Entry { i: low, j });
                    let last = j - (n - 1) - l;
                    entries.extend((last..=-2).rev().map(|i| Entry { i, j }));
                }
            }
        }
        let pos: HashMap<Entry, usize> = entries.iter().enumerate().map(|(k, e)| (*e, k)).collect();
        let mut arrows = Vec::new();
        let mut link = |from: Entry, to: Entry, c: i64| {
            if let (Some(&x), Some(&y)) = (pos.get(&from), pos.get(&to)) {
                arrows.push((x, y, c));
            }
        };
        for &e in &entries {
            let Entry { i, j } = e;
            let next_row = rows.get(rows.iter().position(|&r| r == j).unwrap() + 1).copied();
            match t.family {
                Family::A => {
                    link(e, Entry { i: i - 1, j }, 1);
                    link(e, Entry { i: i + 1, j: j + 1 }, 1);
                }
                Family::D if l.abs() == 1 => {
                    if i >= 3 {
                        link(e, Entry { i: i - 1, j }, 1);
                    }
                    if i == 2 {
                        link(e, Entry { i: Self::slot_pm1(l, j), j }, 1);
                    }
                    if let Some(jn) = next_row {
                        let target = if i.abs() == 1 { 2 } else { i + 1 };
                        link(e, Entry { i: target, j: jn }, 1);
                    }
                }
                Family::D => {
                    let low = Self::lower_slot(l, eps, j);
                    if i >= 3 {
                        link(e, Entry { i: i - 1, j }, 1);
                    } else if i == 2 {
                        link(e, Entry { i: 1, j }, 1);
                        link(e, Entry { i: -1, j }, 1);
                    } else if i.abs() == 1 {
                        link(e, Entry { i: -2, j }, if i == low { -1 } else { 1 });
                    } else {
                        link(e, Entry { i: i - 1, j }, 1);
                    }
                    if let Some(jn) = next_row {
                        let target = match i {
                            _ if i >= 2 => Some(i + 1),
                            _ if i == low => Some(2),
                            _ if i.abs() == 1 => None,
                            -2 => Some(-Self::lower_slot(l, eps, jn)),
                            _ => Some(i + 1),
                        };
                        if let Some(ti) = target {
                            link(e, Entry { i: ti, j: jn }, 1);
                        }
                    }
                }
            }
        }
        Ok(Grid {
            dynkin: t,
            l,
            eps,
            entries,
            arrows,
        })
    }

    /// The `±1` entry of row `j >= 2` when `l = ±1`.
    fn slot_pm1(l: Vertex, j: i32) -> i32 {
        if j % 2 == 0 {
            -l
        } else {
            l
        }
    }

    /// The `±1` entry in row `j` whose arrow to `-2` carries the sign `-1`.
    fn lower_slot(l: Vertex, eps: i32, j: i32) -> i32 {
        if (j - l) % 2 == 0 {
            eps
        } else {
            -eps
        }
    }

    pub fn position(&self, e: Entry) -> Option<usize> {
        self.entries.iter().position(|&x| x == e)
    }

    /// The representation on the entries selected by `keep`, which must be
    /// a quotient: no arrow may lead from a deleted entry to a kept one.
    pub fn quotient(&self, keep: &[bool]) -> Result<GridModule> {
        for &(x, y, _) in &self.arrows {
            if !keep[x] && keep[y] {
                return Err(Error::Consistency(format!(
                    "deleting {:?} but keeping {:?} is not a quotient",
                    self.entries[x], self.entries[y]
                )));
            }
        }
        let mut b = BasisBuilder::new(self.dynkin);
        let mut index = BTreeMap::new();
        for (k, e) in self.entries.iter().enumerate() {
            if keep[k] {
                let x = b.add(e.vertex());
                index.insert(*e, (e.vertex(), x));
            }
        }
        let mut local = BTreeMap::new();
        for (e, &(v, x)) in &index {
            local.insert(*e, (v, b.local_index(x)));
        }
        for &(x, y, c) in &self.arrows {
            if keep[x] && keep[y] {
                b.send(index[&self.entries[x]].1, index[&self.entries[y]].1, c);
            }
        }
        let rep = b.build()?;
        rep.check_relations()?;
        Ok(GridModule { rep, local })
    }
}

/// A representation built from grid entries, remembering where each entry lives.
#[derive(Debug, Clone)]
pub struct GridModule {
    pub rep: QuiverRepresentation,
    /// Entry to (vertex, index inside the vertex space).
    pub local: BTreeMap<Entry, (Vertex, usize)>,
}

/// `Πe_l` on its grid basis; type D with `l >= 2` uses the basis with sign `+1`.
pub fn projective_rep(t: DynkinType, l: Vertex) -> Result<QuiverRepresentation> {
    let g = Grid::projective(t, l, 1)?;
    Ok(g.quotient(&vec![true; g.entries.len()])?.rep)
}

/// The sign `ε` of the grid basis used for `J(w)`, type D with `l >= 2`,
/// together with the alternative formula `(-1)^{m-(l+1)} c`.
pub fn epsilon(w: &CoxeterElement) -> Result<(i32, i32)> {
    let l = jirr_type(w)?;
    let n = w.dynkin().rank as i32;
    if w.apply(l + 1) > 1 {
        return Ok((1, 1));
    }
    let m = (l + 1..=n).filter(|&k| w.apply(k) <= 1).max().unwrap();
    let sign = if (m - l - 1) % 2 == 0 { 1 } else { -1 };
    let wm = w.apply(m);
    let eps = if wm <= -2 { sign } else { sign * wm };
    Ok((eps, sign * crate::bricks::BrickParamsD::new(w)?.c))
}

fn jirr_type(w: &CoxeterElement) -> Result<Vertex> {
    w.join_irreducible_type()
        .ok_or_else(|| Error::NotJoinIrreducible(w.to_string()))
}

/// The grid of `J(w)` together with its keep mask.
pub fn j_grid(w: &CoxeterElement) -> Result<(Grid, Vec<bool>)> {
    let t = w.dynkin();
    let l = jirr_type(w)?;
    let eps = if t.family == Family::D && l >= 2 {
        epsilon(w)?.0
    } else {
        1
    };
    let g = Grid::projective(t, l, eps)?;
    let keep = g
        .entries
        .iter()
        .map(|e| {
            let bound = w.apply(e.j.abs() + 1);
            match t.family {
                Family::A => e.i >= bound,
                Family::D if l.abs() == 1 => e.i >= bound,
                Family::D => {
                    if bound >= 2 {
                        e.i >= bound
                    } else if bound.abs() == 1 {
                        e.i >= 2 || e.i == bound
                    } else {
                        e.i > bound
                    }
                }
            }
        })
        .collect();
    Ok((g, keep))
}

pub fn j_module_grid(w: &CoxeterElement) -> Result<GridModule> {
    let (g, keep) = j_grid(w)?;
    g.quotient(&keep)
}

pub fn j_module(w: &CoxeterElement) -> Result<QuiverRepresentation> {
    Ok(j_module_grid(w)?.rep)
}

/// The socle of `J(w)` as the kernel of the shift endomorphism, for type A
/// and for type D with `l = ±1`.
pub fn kernel_socle(w: &CoxeterElement) -> Result<Subrepresentation> {
    let t = w.dynkin();
    let l = jirr_type(w)?;
    if t.family == Family::D && l.abs() != 1 {
        return Err(Error::Unsupported(
            "shift kernel for type D with l >= 2".into(),
        ));
    }
    let jm = j_module_grid(w)?;
    let mut cols: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (e, &(v, k)) in &jm.local {
        let target = match t.family {
            Family::A => Entry { i: e.i, j: e.j + 1 },
            Family::D => Entry {
                i: e.i,
                j: e.j.abs() + 2,
            },
        };
        if !jm.local.contains_key(&target) {
            cols.entry(v).or_default().push(k);
        }
    }
    let spans = cols
        .into_iter()
        .map(|(v, ks)| {
            let d = jm.rep.dim(v);
            let mut m = Matrix::zeros(d, ks.len());
            for (c, k) in ks.into_iter().enumerate() {
                m[(k, c)] = q(1);
            }
            (v, m)
        })
        .collect();
    jm.rep.subrepresentation(&spans)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_group, DEFAULT_CAP};
    use crate::hom::{check_radical, hom_dim, socle_over_end};

    fn el(t: DynkinType, s: &str) -> CoxeterElement {
        CoxeterElement::parse(t, s).unwrap()
    }

    #[test]
    fn projective_dimensions() {
        assert_eq!(projective_rep(DynkinType::a(2), 1).unwrap().total_dim(), 2);
        let p = projective_rep(DynkinType::a(8), 3).unwrap();
        assert_eq!(p.dim_vector(), vec![1, 2, 3, 3, 3, 3, 2, 1]);
        assert_eq!(p.total_dim(), 18);
        assert_eq!(projective_rep(DynkinType::d(5), 1).unwrap().total_dim(), 10);
    }

    #[test]
    fn projectives_satisfy_relations_and_eps_agrees() {
        for t in [DynkinType::a(5), DynkinType::d(4), DynkinType::d(5), DynkinType::d(6)] {
            for l in t.vertices() {
                for eps in [1, -1] {
                    let g = Grid::projective(t, l, eps).unwrap();
                    let rep = g.quotient(&vec![true; g.entries.len()]).unwrap().rep;
                    assert!(rep.satisfies_relations(), "{t} l={l} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn projective_has_simple_top() {
        for t in [DynkinType::d(4), DynkinType::d(5), DynkinType::a(4)] {
            for l in t.vertices() {
                let p = projective_rep(t, l).unwrap();
                for v in t.vertices() {
                    let s = QuiverRepresentation::simple(t, v).unwrap();
                    // Hom(Πe_l, S_v) is one-dimensional exactly when v = l
                    assert_eq!(hom_dim(&p, &s).unwrap(), usize::from(v == l));
                }
            }
        }
    }

    #[test]
    fn projectivity_identity() {
        let t = DynkinType::a(8);
        let w = el(t, "2,5,8,1,3,4,6,7,9");
        let j = j_module(&w).unwrap();
        let p = projective_rep(t, 3).unwrap();
        assert_eq!(hom_dim(&p, &j).unwrap(), j.dim(3));
        assert_eq!(j.dim(3), 2);
        for t in [DynkinType::d(4), DynkinType::a(4)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                if w.join_irreducible_type().is_none() {
                    continue;
                }
                let j = j_module(&w).unwrap();
                for l in t.vertices() {
                    let p = projective_rep(t, l).unwrap();
                    assert_eq!(hom_dim(&p, &j).unwrap(), j.dim(l));
                }
            }
        }
    }

    #[test]
    fn a8_example_socle() {
        let w = el(DynkinType::a(8), "2,5,8,1,3,4,6,7,9");
        let j = j_module(&w).unwrap();
        let s = socle_over_end(&j).unwrap();
        assert_eq!(s.rep.dim_vector(), vec![1, 1, 1, 1, 1, 1, 1, 0]);
        let k = kernel_socle(&w).unwrap();
        assert!(k.same_subspace(&s));
    }

    #[test]
    fn d5_census_socle() {
        let w = el(DynkinType::d(5), "-1,2,-5,-4,-3");
        let s = socle_over_end(&j_module(&w).unwrap()).unwrap();
        let dims: Vec<(Vertex, usize)> = s.rep.dims().iter().map(|(v, d)| (*v, *d)).collect();
        assert_eq!(dims, vec![(-1, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
    }

    #[test]
    fn d9_examples() {
        let t = DynkinType::d(9);
        let w = el(t, "-6,9,-7,-4,-1,2,3,5,8");
        assert_eq!(j_module(&w).unwrap().total_dim(), 30);
        let w = el(t, "9,-7,-6,-4,-1,2,3,5,8");
        let k = kernel_socle(&w).unwrap();
        assert_eq!(k.rep.total_dim(), 14);
        let s = socle_over_end(&j_module(&w).unwrap()).unwrap();
        assert!(k.same_subspace(&s));
    }

    #[test]
    fn simple_reflection_kernel_is_everything() {
        for t in [DynkinType::a(4), DynkinType::d(5)] {
            for l in t.vertices() {
                let s = CoxeterElement::simple_reflection(t, l).unwrap();
                let j = j_module(&s).unwrap();
                assert_eq!(j, QuiverRepresentation::simple(t, l).unwrap());
                if t.family == Family::A || l.abs() == 1 {
                    assert_eq!(kernel_socle(&s).unwrap().rep.total_dim(), 1);
                }
            }
        }
    }

    #[test]
    fn unsupported_kernel_case() {
        let s = CoxeterElement::simple_reflection(DynkinType::d(5), 3).unwrap();
        assert!(matches!(kernel_socle(&s), Err(Error::Unsupported(_))));
    }

    #[test]
    fn eps_formulas_agree_d4_d5() {
        for t in [DynkinType::d(4), DynkinType::d(5), DynkinType::d(6)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                match w.join_irreducible_type() {
                    Some(l) if l >= 2 => {
                        let (a, b) = epsilon(&w).unwrap();
                        assert_eq!(a, b, "{w}");
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn radicals_are_nilpotent_ideals() {
        for t in [DynkinType::a(4), DynkinType::d(4)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                if w.join_irreducible_type().is_some() {
                    check_radical(&j_module(&w).unwrap()).unwrap();
                }
            }
        }
    }
}

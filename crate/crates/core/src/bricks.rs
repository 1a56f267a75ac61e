//! The brick `S(w)` of a join-irreducible element: its abbreviated arrow
//! diagram and the full representation with sign coefficients.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::canjoin::{interval, ValueSet};
use crate::coxeter::{CoxeterElement, DynkinType, Family, Vertex};
use crate::error::{Error, Result};
use crate::quiver::{BasisBuilder, QuiverRepresentation};

/// The vertex carrying the basis vector `<i>`.
pub fn symbol_vertex(i: i32) -> Vertex {
    if i >= -1 {
        i
    } else {
        -i
    }
}

fn jirr_type(w: &CoxeterElement) -> Result<Vertex> {
    w.join_irreducible_type()
        .ok_or_else(|| Error::NotJoinIrreducible(w.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickParamsA {
    pub l: Vertex,
    pub r: ValueSet,
    pub a: i32,
    pub b: i32,
}

impl BrickParamsA {
    pub fn new(w: &CoxeterElement) -> Result<Self> {
        if w.dynkin().family != Family::A {
            return Err(Error::Domain(format!("{w} is not of type A")));
        }
        let l = jirr_type(w)?;
        Ok(BrickParamsA {
            l,
            r: w.image(l + 1, w.dynkin().window_len() as i32),
            a: w.apply(l),
            b: w.apply(l + 1),
        })
    }

    pub fn v(&self) -> Vec<i32> {
        (self.b..self.a).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickParamsD {
    pub r_set: ValueSet,
    pub a: i32,
    pub b: i32,
    pub r: i32,
    pub c: i32,
    /// Ascending.
    pub v_plus: Vec<i32>,
    /// Descending.
    pub v_minus: Vec<i32>,
}

impl BrickParamsD {
    pub fn new(w: &CoxeterElement) -> Result<Self> {
        if w.dynkin().family != Family::D {
            return Err(Error::Domain(format!("{w} is not of type D")));
        }
        let l = jirr_type(w)?;
        let n = w.dynkin().rank as i32;
        Ok(Self::from_parts(
            w.apply(l),
            w.apply(l.abs() + 1),
            w.image(l.abs() + 1, n),
        ))
    }

    /// Parameters from `(a, b)` and an R-set; `r` and `c` are read off `R`.
    pub fn from_parts(a: i32, b: i32, r_set: ValueSet) -> Self {
        let mut r = 0;
        while r_set.contains(&(r + 1)) || r_set.contains(&-(r + 1)) {
            r += 1;
        }
        let c = if r >= 1 && r_set.contains(&-1) { -1 } else { 1 };
        let (v_minus, v_plus): (Vec<i32>, Vec<i32>) = if b >= 2 {
            (vec![], interval(b, a - 1).into_iter().collect())
        } else {
            let plus = std::iter::once(c).chain(2..a).collect();
            let minus = if b <= -2 {
                std::iter::once(-c).chain((b + 1..=-2).rev()).collect()
            } else {
                vec![]
            };
            (minus, plus)
        };
        BrickParamsD {
            r_set,
            a,
            b,
            r,
            c,
            v_plus,
            v_minus,
        }
    }

    pub fn symbols(&self) -> Vec<i32> {
        self.v_plus.iter().chain(&self.v_minus).copied().collect()
    }

    /// The coefficient tables: `(source, target, coefficient)` meaning an
    /// arrow sends `<source>` to `coefficient * <target>`.
    pub fn coefficients(&self) -> Vec<(i32, i32, i64)> {
        let v: BTreeSet<i32> = self.symbols().into_iter().collect();
        let r_set = &self.r_set;
        let r = self.r;
        let mut out = Vec::new();
        let mut push = |s: i32, t: i32, c: i64| {
            if c != 0 && v.contains(&s) && v.contains(&t) {
                out.push((s, t, c));
            }
        };
        for &i in &self.v_plus {
            let k = i.abs();
            // alpha_{|i|} <|i|+1> = xi+ <i> + xi- <-i>
            push(k + 1, i, i64::from(!r_set.contains(&(k + 1))));
            push(
                k + 1,
                -i,
                i64::from(k == 1 && r == 0 && !r_set.contains(&2)),
            );
            // beta_{|i|+1} <i> = eta+ <|i|+1> + eta- <-(|i|+1)>
            push(i, k + 1, i64::from(r_set.contains(&(k + 1))));
            push(
                i,
                -(k + 1),
                if k == 1 && r == 0 && !r_set.contains(&-2) { -1 } else { 0 },
            );
        }
        for &i in &self.v_minus {
            let k = i.abs();
            // alpha_{|i|} <-(|i|+1)> = xi+ <-i> + xi- <i>
            push(
                -(k + 1),
                -i,
                i64::from(k <= r && r_set.contains(&(k + 1))),
            );
            push(-(k + 1), i, i64::from(r_set.contains(&-(k + 1))));
            // beta_{|i|+1} <i> = eta+ <|i|+1> + eta- <-(|i|+1)>
            push(
                i,
                k + 1,
                i64::from(k <= r && !r_set.contains(&(k + 1))),
            );
            let eta = if k == r {
                -1
            } else if !r_set.contains(&-(k + 1)) {
                1
            } else {
                0
            };
            push(i, -(k + 1), eta);
        }
        out
    }

    /// Arrows from the abbreviated rules, without going through coefficients.
    pub fn diagram_arrows(&self) -> Vec<(i32, i32)> {
        let r_set = &self.r_set;
        let vp: BTreeSet<i32> = self.v_plus.iter().copied().collect();
        let vm: BTreeSet<i32> = self.v_minus.iter().copied().collect();
        let mut out = Vec::new();
        let max_p = *self.v_plus.iter().max().unwrap();
        for &i in vp.iter().filter(|&&i| i != max_p) {
            let up = i.abs() + 1;
            if r_set.contains(&up) {
                out.push((i, up));
            } else {
                out.push((up, i));
            }
        }
        if let Some(&min_m) = vm.iter().min() {
            for &i in vm.iter().filter(|&&i| i != min_m) {
                let down = -(i.abs() + 1);
                if r_set.contains(&down) {
                    out.push((down, i));
                } else {
                    out.push((i, down));
                }
            }
        }
        if self.r >= 1 {
            for &i in vm.iter().filter(|i| i.abs() <= self.r) {
                let k = i.abs();
                if r_set.contains(&(k + 1)) {
                    out.push((-(k + 1), -i));
                } else {
                    out.push((i, k + 1));
                }
            }
        } else {
            let c = self.c;
            if vp.contains(&2) && vm.contains(&-c) && !r_set.contains(&2) {
                out.push((2, -c));
            }
            if vm.contains(&-2) && !r_set.contains(&-2) {
                out.push((c, -2));
            }
        }
        let all: BTreeSet<i32> = vp.union(&vm).copied().collect();
        out.retain(|(s, t)| all.contains(s) && all.contains(t));
        out.sort();
        out.dedup();
        out
    }
}

/// Abbreviated form of a brick.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickDiagram {
    pub dynkin: DynkinType,
    /// Lower row (type A: the only row), ascending.
    pub v_plus: Vec<i32>,
    /// Upper row, descending.
    pub v_minus: Vec<i32>,
    /// Sorted `(from, to)` pairs.
    pub arrows: Vec<(i32, i32)>,
}

impl BrickDiagram {
    pub fn symbols(&self) -> Vec<i32> {
        self.v_plus.iter().chain(&self.v_minus).copied().collect()
    }

    pub fn dim_vector(&self) -> BTreeMap<Vertex, usize> {
        let mut d = BTreeMap::new();
        for s in self.symbols() {
            *d.entry(symbol_vertex(s)).or_insert(0) += 1;
        }
        d
    }
}

#[derive(Debug, Clone)]
pub enum BrickParams {
    A(BrickParamsA),
    D(BrickParamsD),
}

/// A brick with its construction data.
#[derive(Debug, Clone)]
pub struct Brick {
    pub element: Option<CoxeterElement>,
    pub params: BrickParams,
    pub diagram: BrickDiagram,
    pub rep: QuiverRepresentation,
}

fn build_rep(
    t: DynkinType,
    symbols: &[i32],
    coeffs: &[(i32, i32, i64)],
) -> Result<QuiverRepresentation> {
    let mut b = BasisBuilder::new(t);
    let idx: BTreeMap<i32, usize> = symbols.iter().map(|&s| (s, b.add(symbol_vertex(s)))).collect();
    for &(s, u, c) in coeffs {
        b.send(idx[&s], idx[&u], c);
    }
    let rep = b.build()?;
    rep.check_relations()?;
    Ok(rep)
}

/// Construction parameters as serialized; `r` and `c` are absent in type A.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickParamsJson {
    pub a: i32,
    pub b: i32,
    pub r: Option<i32>,
    pub c: Option<i32>,
    #[serde(rename = "R")]
    pub r_set: Vec<i32>,
}

impl From<&BrickParams> for BrickParamsJson {
    fn from(p: &BrickParams) -> Self {
        match p {
            BrickParams::A(p) => BrickParamsJson {
                a: p.a,
                b: p.b,
                r: None,
                c: None,
                r_set: p.r.iter().copied().collect(),
            },
            BrickParams::D(p) => BrickParamsJson {
                a: p.a,
                b: p.b,
                r: Some(p.r),
                c: Some(p.c),
                r_set: p.r_set.iter().copied().collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickJson {
    pub window: Option<String>,
    pub type_l: Option<Vertex>,
    pub params: BrickParamsJson,
    /// `V+` ascending then `V-` descending.
    pub symbols: Vec<i32>,
    pub diagram: BrickDiagram,
    pub dim_vector: BTreeMap<Vertex, usize>,
}

impl BrickJson {
    pub fn new(element: Option<&CoxeterElement>, params: BrickParamsJson, diagram: &BrickDiagram) -> Self {
        BrickJson {
            window: element.map(|w| w.to_string()),
            type_l: element.and_then(CoxeterElement::join_irreducible_type),
            params,
            symbols: diagram.symbols(),
            diagram: diagram.clone(),
            dim_vector: diagram.dim_vector(),
        }
    }
}

impl Brick {
    pub fn to_json(&self) -> BrickJson {
        BrickJson::new(self.element.as_ref(), (&self.params).into(), &self.diagram)
    }
}

/// The brick of type A with symbols `[b, a-1]` oriented by `R`.
pub fn brick_a_from(t: DynkinType, a: i32, b: i32, r_set: &ValueSet) -> Result<(BrickDiagram, QuiverRepresentation)> {
    let v: Vec<i32> = (b..a).collect();
    let mut coeffs = Vec::new();
    let mut arrows = Vec::new();
    for &i in v.iter().filter(|&&i| i + 1 < a) {
        if r_set.contains(&(i + 1)) {
            coeffs.push((i, i + 1, 1));
            arrows.push((i, i + 1));
        } else {
            coeffs.push((i + 1, i, 1));
            arrows.push((i + 1, i));
        }
    }
    arrows.sort();
    let rep = build_rep(t, &v, &coeffs)?;
    Ok((
        BrickDiagram {
            dynkin: t,
            v_plus: v,
            v_minus: vec![],
            arrows,
        },
        rep,
    ))
}

/// The brick of type D for the given parameters.
pub fn brick_d_from(t: DynkinType, p: &BrickParamsD) -> Result<(BrickDiagram, QuiverRepresentation)> {
    let coeffs = p.coefficients();
    let rep = build_rep(t, &p.symbols(), &coeffs)?;
    let mut arrows: Vec<(i32, i32)> = coeffs.iter().map(|&(s, u, _)| (s, u)).collect();
    arrows.sort();
    arrows.dedup();
    Ok((
        BrickDiagram {
            dynkin: t,
            v_plus: p.v_plus.clone(),
            v_minus: p.v_minus.clone(),
            arrows,
        },
        rep,
    ))
}

pub fn brick(w: &CoxeterElement) -> Result<Brick> {
    let t = w.dynkin();
    match t.family {
        Family::A => {
            let p = BrickParamsA::new(w)?;
            let (diagram, rep) = brick_a_from(t, p.a, p.b, &p.r)?;
            Ok(Brick {
                element: Some(w.clone()),
                params: BrickParams::A(p),
                diagram,
                rep,
            })
        }
        Family::D => {
            let p = BrickParamsD::new(w)?;
            let (diagram, rep) = brick_d_from(t, &p)?;
            Ok(Brick {
                element: Some(w.clone()),
                params: BrickParams::D(p),
                diagram,
                rep,
            })
        }
    }
}

/// The abbreviated diagram from the arrow rules, type A.
pub fn brick_diagram_a(w: &CoxeterElement) -> Result<BrickDiagram> {
    let p = BrickParamsA::new(w)?;
    let v = p.v();
    let mut arrows: Vec<(i32, i32)> = v
        .iter()
        .filter(|&&i| i + 1 < p.a)
        .map(|&i| if p.r.contains(&(i + 1)) { (i, i + 1) } else { (i + 1, i) })
        .collect();
    arrows.sort();
    Ok(BrickDiagram {
        dynkin: w.dynkin(),
        v_plus: v,
        v_minus: vec![],
        arrows,
    })
}

/// The abbreviated diagram from the arrow rules, type D.
pub fn brick_diagram_d(w: &CoxeterElement) -> Result<BrickDiagram> {
    let p = BrickParamsD::new(w)?;
    Ok(BrickDiagram {
        dynkin: w.dynkin(),
        v_plus: p.v_plus.clone(),
        v_minus: p.v_minus.clone(),
        arrows: p.diagram_arrows(),
    })
}

pub fn brick_diagram(w: &CoxeterElement) -> Result<BrickDiagram> {
    match w.dynkin().family {
        Family::A => brick_diagram_a(w),
        Family::D => brick_diagram_d(w),
    }
}

pub fn brick_rep_a(w: &CoxeterElement) -> Result<QuiverRepresentation> {
    BrickParamsA::new(w)?;
    Ok(brick(w)?.rep)
}

pub fn brick_rep_d(w: &CoxeterElement) -> Result<QuiverRepresentation> {
    BrickParamsD::new(w)?;
    Ok(brick(w)?.rep)
}

pub fn brick_rep(w: &CoxeterElement) -> Result<QuiverRepresentation> {
    Ok(brick(w)?.rep)
}

/// Arrows read off a representation built on symbol bases: `s -> t`
/// whenever some arrow has a nonzero entry from `<s>` to `<t>`.
pub fn arrows_of_rep(rep: &QuiverRepresentation, diagram: &BrickDiagram) -> Vec<(i32, i32)> {
    // local index of each symbol within its vertex, in insertion order
    let mut seen: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut local = BTreeMap::new();
    for s in diagram.symbols() {
        let v = symbol_vertex(s);
        let k = seen.entry(v).or_insert(0);
        local.insert((v, *k), s);
        *k += 1;
    }
    let mut out = Vec::new();
    for (&a, m) in rep.mats() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !num_traits::Zero::is_zero(&m[(r, c)]) {
                    out.push((local[&(a.head, c)], local[&(a.tail, r)]));
                }
            }
        }
    }
    out.sort();
    out
}

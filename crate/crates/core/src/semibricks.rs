//! The semibrick `S(w)`: one brick per descent of `w`.

use serde::{Deserialize, Serialize};

use crate::bricks::{
    brick, brick_a_from, brick_d_from, BrickDiagram, BrickJson, BrickParamsD, BrickParamsJson,
};
use crate::canjoin::{decompose, DCase};
use crate::coxeter::{CoxeterElement, Family, Vertex};
use crate::error::{Error, Result};
use crate::hom::{hom_matrix, is_brick};
use crate::lattice::GroupPoset;
use crate::quiver::{is_positive_root, QuiverRepresentation, RepresentationJson};

#[derive(Debug, Clone, PartialEq)]
pub struct Summand {
    pub d: Vertex,
    /// The join-irreducible `w_d`, when the route constructed it.
    pub element: Option<CoxeterElement>,
    pub params: BrickParamsJson,
    pub diagram: BrickDiagram,
    pub rep: QuiverRepresentation,
}

impl Summand {
    pub fn brick_json(&self) -> BrickJson {
        BrickJson::new(self.element.as_ref(), self.params.clone(), &self.diagram)
    }
}

/// Summands are ordered by descent, `-1` first.
#[derive(Debug, Clone, PartialEq)]
pub struct Semibrick {
    pub element: CoxeterElement,
    pub summands: Vec<Summand>,
}

/// Through the canonical join representation and the bricks of its joinands.
pub fn semibrick(w: &CoxeterElement) -> Result<Semibrick> {
    let summands = decompose(w)?
        .into_iter()
        .map(|dd| {
            let b = brick(&dd.element)?;
            Ok(Summand {
                d: dd.d,
                params: (&b.params).into(),
                element: Some(dd.element),
                diagram: b.diagram,
                rep: b.rep,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Semibrick {
        element: w.clone(),
        summands,
    })
}

/// Straight from `(a_d, b_d, R_d)`, never building `w_d`.
pub fn semibrick_direct(w: &CoxeterElement) -> Result<Semibrick> {
    let t = w.dynkin();
    let summands = decompose(w)?
        .into_iter()
        .map(|dd| {
            let (params, (diagram, rep)) = match t.family {
                Family::A => (
                    BrickParamsJson {
                        a: dd.a,
                        b: dd.b,
                        r: None,
                        c: None,
                        r_set: dd.r.iter().copied().collect(),
                    },
                    brick_a_from(t, dd.a, dd.b, &dd.r)?,
                ),
                Family::D => {
                    let p = match dd.case {
                        Some(DCase::A) => BrickParamsD::from_parts(-dd.b, -dd.a, dd.r.clone()),
                        _ => BrickParamsD::from_parts(dd.a, dd.b, dd.r.clone()),
                    };
                    let json = BrickParamsJson {
                        a: p.a,
                        b: p.b,
                        r: Some(p.r),
                        c: Some(p.c),
                        r_set: dd.r.iter().copied().collect(),
                    };
                    (json, brick_d_from(t, &p)?)
                }
            };
            Ok(Summand {
                d: dd.d,
                element: None,
                params,
                diagram,
                rep,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Semibrick {
        element: w.clone(),
        summands,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub d: Vertex,
    pub brick: BrickJson,
    pub rep: RepresentationJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemibrickJson {
    pub window: CoxeterElement,
    pub summands: Vec<SummandJson>,
}

impl Semibrick {
    pub fn to_json(&self) -> SemibrickJson {
        SemibrickJson {
            window: self.element.clone(),
            summands: self
                .summands
                .iter()
                .map(|s| SummandJson {
                    d: s.d,
                    brick: s.brick_json(),
                    rep: s.rep.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SemibrickJson) -> Result<Self> {
        let t = j.window.dynkin();
        let element = CoxeterElement::new(t, j.window.window().to_vec())?;
        let summands = j
            .summands
            .iter()
            .map(|s| {
                let w = s
                    .brick
                    .window
                    .as_deref()
                    .map(|x| CoxeterElement::parse(t, x))
                    .transpose()?;
                Ok(Summand {
                    d: s.d,
                    element: w,
                    params: s.brick.params.clone(),
                    diagram: s.brick.diagram.clone(),
                    rep: QuiverRepresentation::from_json(t, &s.rep)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Semibrick { element, summands })
    }

    pub fn reps(&self) -> Vec<QuiverRepresentation> {
        self.summands.iter().map(|s| s.rep.clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemibrickReport {
    pub window: String,
    pub summand_count: usize,
    pub descent_count: usize,
    pub relations: Vec<bool>,
    pub bricks: Vec<bool>,
    pub positive_roots: Vec<bool>,
    pub hom: Vec<Vec<usize>>,
    /// Join of the `w_d`, when the group was supplied and every `w_d` is known.
    pub join: Option<String>,
}

impl SemibrickReport {
    pub fn off_diagonal_zero(&self) -> bool {
        self.hom
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &h)| i == j || h == 0))
    }

    pub fn passed(&self) -> bool {
        self.summand_count == self.descent_count
            && self.relations.iter().all(|&x| x)
            && self.bricks.iter().all(|&x| x)
            && self.positive_roots.iter().all(|&x| x)
            && self.off_diagonal_zero()
            && self.join.as_ref().is_none_or(|j| *j == self.window)
    }
}

pub fn verify_semibrick(s: &Semibrick, poset: Option<&GroupPoset>) -> Result<SemibrickReport> {
    let reps = s.reps();
    let join = match poset {
        Some(p) if s.summands.iter().all(|x| x.element.is_some()) => {
            if p.dynkin() != s.element.dynkin() {
                return Err(Error::Mismatch(p.dynkin().to_string(), s.element.dynkin().to_string()));
            }
            let els: Vec<&CoxeterElement> = s.summands.iter().filter_map(|x| x.element.as_ref()).collect();
            Some(p.join_all(els)?.to_string())
        }
        _ => None,
    };
    Ok(SemibrickReport {
        window: s.element.to_string(),
        summand_count: s.summands.len(),
        descent_count: s.element.descents().len(),
        relations: reps.iter().map(QuiverRepresentation::satisfies_relations).collect(),
        bricks: reps.iter().map(is_brick).collect::<Result<_>>()?,
        positive_roots: reps.iter().map(|r| is_positive_root(r.dynkin(), r.dims())).collect(),
        hom: hom_matrix(&reps)?,
        join,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bricks::brick_diagram;
    use crate::coxeter::{enumerate_group, DynkinType, DEFAULT_CAP};
    use crate::hom::iso_bricks;

    fn el(t: DynkinType, s: &str) -> CoxeterElement {
        CoxeterElement::parse(t, s).unwrap()
    }

    #[test]
    fn a8_intro_example() {
        let t = DynkinType::a(8);
        let w = el(t, "4,9,3,6,2,8,5,1,7");
        let s = semibrick(&w).unwrap();
        let ds: Vec<Vertex> = s.summands.iter().map(|x| x.d).collect();
        assert_eq!(ds, vec![2, 4, 6, 7]);
        let rows: Vec<Vec<i32>> = s.summands.iter().map(|x| x.diagram.v_plus.clone()).collect();
        assert_eq!(rows, vec![(3..=8).collect::<Vec<_>>(), vec![2, 3, 4, 5], vec![5, 6, 7], vec![1, 2, 3, 4]]);
        assert_eq!(s.summands[1].diagram.arrows, vec![(3, 2), (4, 3), (4, 5)]);
        let direct = semibrick_direct(&w).unwrap();
        for (x, y) in s.summands.iter().zip(&direct.summands) {
            assert_eq!(x.diagram, y.diagram);
        }
        assert!(GroupPoset::new(t, DEFAULT_CAP).is_err());
        let r = verify_semibrick(&s, None).unwrap();
        assert!(r.passed());
        assert_eq!(r.join, None);
    }

    #[test]
    fn identity_and_longest() {
        let t = DynkinType::d(5);
        assert!(semibrick(&CoxeterElement::identity(t)).unwrap().summands.is_empty());
        let s = semibrick(&CoxeterElement::longest(t)).unwrap();
        assert_eq!(s.summands.len(), 5);
        // one simple per vertex, though not at the descent's own vertex
        let mut simples: Vec<Vec<i32>> = s.summands.iter().map(|x| x.diagram.symbols()).collect();
        simples.sort();
        assert_eq!(simples, t.vertices().into_iter().map(|v| vec![v]).collect::<Vec<_>>());
    }

    #[test]
    fn a2_longest_is_two_simples() {
        let t = DynkinType::a(2);
        let s = semibrick(&el(t, "3,2,1")).unwrap();
        let reps = s.reps();
        assert_eq!(reps[0], QuiverRepresentation::simple(t, 2).unwrap());
        assert_eq!(reps[1], QuiverRepresentation::simple(t, 1).unwrap());
    }

    #[test]
    fn d9_final_example() {
        let t = DynkinType::d(9);
        let w = el(t, "5,3,-7,4,-6,-8,9,-1,2");
        let s = semibrick_direct(&w).unwrap();
        let ds: Vec<Vertex> = s.summands.iter().map(|x| x.d).collect();
        assert_eq!(ds, vec![1, 2, 4, 5, 7]);
        let sorted = |mut v: Vec<(i32, i32)>| {
            v.sort();
            v
        };
        assert_eq!(s.summands[0].diagram.arrows, vec![(3, 4)]);
        assert_eq!(s.summands[1].diagram.v_minus, vec![1, -2]);
        assert_eq!(s.summands[1].diagram.v_plus, vec![-1, 2, 3, 4, 5, 6]);
        assert_eq!(
            s.summands[1].diagram.arrows,
            sorted(vec![(-1, 2), (3, 2), (3, 4), (4, 5), (6, 5), (1, -2), (-2, -1), (-2, 3)])
        );
        assert_eq!(s.summands[2].diagram.v_minus, vec![1, -2, -3, -4, -5]);
        assert_eq!(s.summands[2].diagram.v_plus, vec![-1, 2, 3]);
        assert_eq!(
            s.summands[2].diagram.arrows,
            sorted(vec![(-1, 2), (3, 2), (1, -2), (-2, -1), (-2, -3), (-2, 3), (-3, -4), (-4, -5)])
        );
        assert_eq!(s.summands[3].diagram.arrows, vec![(6, 7)]);
        assert_eq!(
            s.summands[4].diagram.arrows,
            sorted(vec![(-1, 2), (3, 2), (4, 3), (5, 4), (6, 5), (7, 6), (8, 7)])
        );
        let via = semibrick(&w).unwrap();
        for (x, y) in via.summands.iter().zip(&s.summands) {
            assert_eq!(x.diagram, y.diagram);
        }
    }

    #[test]
    fn single_descent_is_its_brick() {
        let t = DynkinType::d(9);
        let w = el(t, "9,-7,-6,-4,-1,2,3,5,8");
        assert!(w.join_irreducible_type().is_some());
        let s = semibrick_direct(&w).unwrap();
        assert_eq!(s.summands.len(), 1);
        assert_eq!(s.summands[0].diagram, brick_diagram(&w).unwrap());
    }

    #[test]
    fn routes_agree_and_match_oracle() {
        for t in [DynkinType::a(4), DynkinType::d(4)] {
            let p = GroupPoset::new(t, DEFAULT_CAP).unwrap();
            for w in p.elements() {
                let s = semibrick(w).unwrap();
                let direct = semibrick_direct(w).unwrap();
                assert_eq!(s.summands.len(), direct.summands.len());
                for (x, y) in s.summands.iter().zip(&direct.summands) {
                    assert_eq!(x.diagram, y.diagram, "{w}");
                    assert!(iso_bricks(&x.rep, &y.rep).unwrap());
                }
                let ws: std::collections::BTreeSet<CoxeterElement> =
                    s.summands.iter().filter_map(|x| x.element.clone()).collect();
                assert_eq!(ws, p.cjr_oracle(w).unwrap(), "{w}");
                assert!(verify_semibrick(&s, Some(&p)).unwrap().passed(), "{w}");
            }
        }
    }

    #[test]
    fn direct_diagrams_match_d5_d6() {
        for t in [DynkinType::d(5), DynkinType::d(6)] {
            for w in enumerate_group(t, DEFAULT_CAP).unwrap() {
                let s = semibrick(&w).unwrap();
                let direct = semibrick_direct(&w).unwrap();
                for (x, y) in s.summands.iter().zip(&direct.summands) {
                    assert_eq!(x.diagram, y.diagram, "{w}");
                    assert_eq!(x.params.r_set, y.params.r_set);
                }
            }
        }
    }

    #[test]
    fn repeated_simple_is_reported() {
        let t = DynkinType::a(3);
        let s1 = semibrick(&el(t, "2,1,3,4")).unwrap();
        let mut fake = s1.clone();
        fake.summands.push(s1.summands[0].clone());
        let r = verify_semibrick(&fake, None).unwrap();
        assert_eq!(r.hom, vec![vec![1, 1], vec![1, 1]]);
        assert!(!r.passed());
    }

    #[test]
    fn json_round_trip() {
        let w = el(DynkinType::d(5), "-5,3,-1,4,2");
        let s = semibrick(&w).unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back = Semibrick::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
